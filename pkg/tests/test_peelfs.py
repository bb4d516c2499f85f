import itertools

import pytest

from quiverpoly import tableaux as tab
from quiverpoly.errors import BijectionFailure, NotPeelable
from quiverpoly.peelfs import (
    characterize,
    constants_from_sequences,
    delete_hom,
    enumerate_factor_sequences,
    enumerate_peelables,
    is_peelable,
    quiver_constants,
    verify_bijection,
)
from quiverpoly.permcomb import Permutation, code
from quiverpoly.polyring import Variable
from quiverpoly.quivercore import RankArray, zelevinsky
from quiverpoly.symfun import schur_diff, stanley_by_stabilization, stanley_coefficients

INTRO_PEEL = {
    ((1, 1, 1, 1, 7), (2, 4), (3,), (4,)): (((7,),), ((4,),), ()),
    ((1, 1, 1, 1), (2, 4, 7), (3,), (4,)): ((), ((4, 7),), ()),
    ((1, 1, 1, 1), (2, 4), (3, 7), (4,)): ((), ((4,), (7,)), ()),
    ((1, 1, 1, 1), (2, 4), (3,), (4,), (7,)): ((), ((4,),), ((7,),)),
}
FIGURE_PEELABLE = ((1,) * 7 + (5,), (2,) * 7, (3, 3, 3, 5, 5), (4, 4, 4), (5, 5, 5), (8, 9, 9), (9,))
FIGURE_SEQUENCE = (((5,),), ((5, 5),), ((8, 9, 9), (9,)))


def test_empty():
    assert is_peelable((), ())
    assert enumerate_peelables(()) == [()]


def test_partitionlike_diagram_has_only_its_key():
    # dominant permutations have Young diagrams as their diagrams
    for w in ["321", "312", "231", "4312", "3421", "4321"]:
        D = Permutation.parse(w).diagram()
        assert enumerate_peelables(D) == [tab.key_tableau(code(D))]


def test_intro_peelables_and_images(intro):
    z = zelevinsky(intro)
    peel = enumerate_peelables(z.D_r)
    assert {Q: delete_hom(Q, z) for Q in peel} == INTRO_PEEL


def test_intro_constants(intro):
    assert quiver_constants(intro) == {
        ((), (1,), (1,)): 1,
        ((), (1, 1), ()): 1,
        ((), (2,), ()): 1,
        ((1,), (1,), ()): 1,
    }


def test_maximal_ranks(maximal):
    assert quiver_constants(maximal) == {((), ()): 1}
    assert enumerate_factor_sequences(maximal) == [((), ())]
    assert verify_bijection(maximal).ok


def test_figure_peelable(exrank):
    z = zelevinsky(exrank)
    assert is_peelable(FIGURE_PEELABLE, z.D_r)
    assert FIGURE_PEELABLE in enumerate_peelables(z.D_r)
    assert delete_hom(FIGURE_PEELABLE, z) == FIGURE_SEQUENCE


def test_figure_factor_sequence(exrank):
    seqs = enumerate_factor_sequences(exrank)
    assert FIGURE_SEQUENCE in seqs
    assert len(seqs) == 10
    assert characterize(FIGURE_SEQUENCE, exrank)


def test_characterize_rejects_wrong_sequence(exrank):
    assert not characterize((((5,),), ((5, 5),), ((8, 9),)), exrank)
    assert not characterize((((5,),), ((5, 5),)), exrank)


def test_delete_hom_rejects_tableau_without_key(intro):
    with pytest.raises(NotPeelable):
        delete_hom(((1, 2),), zelevinsky(intro))


def test_single_arrow_sequence_is_unique():
    r = RankArray.from_rows([[2], [1, 3]])
    seqs = enumerate_factor_sequences(r)
    assert len(seqs) == 1 and len(seqs[0]) == 1


def test_bijection_both_examples(intro, exrank):
    for r, n in ((intro, 4), (exrank, 10)):
        rep = verify_bijection(r)
        assert rep.ok and rep.peelables == rep.sequences == n


def test_peel_and_fs_constants_agree(exrank):
    assert quiver_constants(exrank) == constants_from_sequences(enumerate_factor_sequences(exrank))
    assert set(quiver_constants(exrank).values()) == {1}


def test_bijection_failure_carries_witness(intro, monkeypatch):
    import quiverpoly.peelfs as pf

    monkeypatch.setattr(pf, "enumerate_factor_sequences", lambda r: [])
    with pytest.raises(BijectionFailure) as err:
        pf.verify_bijection(intro)
    assert err.value.counterexample is not None


@pytest.mark.parametrize("one", list(itertools.permutations(range(1, 4))))
def test_stanley_coefficients_reproduce_stanley_function(one):
    w = Permutation(one)
    X = [Variable("x", 0, i) for i in (1, 2, 3)]
    Y = [Variable("y", 0, i) for i in (1, 2, 3)]
    expansion = sum((c * schur_diff(lam, X, Y) for lam, c in stanley_coefficients(w).items()), 0 * schur_diff((), X, Y))
    assert expansion == stanley_by_stabilization(w, 3, 3, 3)
