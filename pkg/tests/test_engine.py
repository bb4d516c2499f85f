import json
import random

from oracles import random_rank_array
from quiverpoly.engine import (
    Formula,
    component_formula,
    compute,
    is_block_symmetric,
    pipe_formula,
    ratio_formula,
    tableau_formula,
    verify_all,
)
from quiverpoly.peelfs import quiver_constants
from quiverpoly.permcomb import PartialPermutation
from quiverpoly.polyring import ONE, ZERO, Polynomial, Variable, ordinary
from quiverpoly.quivercore import RankArray, hom_ranks
from quiverpoly.symfun import ProductKind, product_over_list


def block(k, size):
    return sum((Polynomial.var(Variable("x", k, i)) for i in range(1, size + 1)), ZERO)


def intro_answer():
    a1, d1 = block(0, 1), block(3, 1)
    return (block(1, 3) - block(2, 3)) * (a1 - d1)


def test_intro_every_formula(intro):
    for f in Formula:
        assert compute(intro, f).value == intro_answer(), f


def test_maximal_ranks_give_one(maximal):
    for f in Formula:
        assert compute(maximal, f).value == ONE


def test_hom_pipe_formula_is_one():
    res = pipe_formula(hom_ranks((1, 3, 3, 1)), double=True)
    assert res.value == ONE and len(res.witnesses) == 1


def test_intro_double_forms_agree(intro):
    ratio = ratio_formula(intro, double=True).value
    assert pipe_formula(intro, double=True).value == ratio
    assert component_formula(intro, "stanley", double=True).value == ratio
    assert tableau_formula(intro, "peel", double=True).value == ratio
    assert ordinary(ratio) == intro_answer()


def test_intro_component_terms(intro):
    def pp(*rows):
        return PartialPermutation.from_matrix([list(r) for r in rows])

    W = [
        (pp((1, 0, 0)), pp((1, 0, 0), (0, 1, 0), (0, 0, 0)), pp((0,), (1,), (0,))),
        (pp((1, 0, 0)), pp((0, 1, 0), (1, 0, 0), (0, 0, 0)), pp((1,), (0,), (0,))),
        (pp((0, 1, 0)), pp((1, 0, 0), (0, 1, 0), (0, 0, 0)), pp((1,), (0,), (0,))),
    ]
    total = sum((product_over_list(ProductKind.SCHUBERT, w, intro.dims, double=False) for w in W), ZERO)
    assert total == intro_answer()
    res = component_formula(intro, "schubert")
    assert len(res.witnesses) == 3 and res.value == total


def test_intro_four_schur_terms(intro):
    terms = [((1,), (1,), ()), ((), (2,), ()), ((), (1, 1), ()), ((), (1,), (1,))]
    total = sum((product_over_list(ProductKind.SCHUR, t, intro.dims, double=False) for t in terms), ZERO)
    assert total == intro_answer()
    assert tableau_formula(intro, "fs").value == total


def test_single_lacing_gives_one_term():
    r = RankArray.from_rows([[2], [1, 2]])
    res = component_formula(r, "schubert")
    assert len(res.witnesses) == 1
    assert res.value == ratio_formula(r).value


def test_symmetry_within_blocks(intro):
    assert is_block_symmetric(ratio_formula(intro, double=True).value, intro.dims, double=True)
    lopsided = Polynomial.var(Variable("x", 1, 1))
    assert not is_block_symmetric(lopsided, intro.dims)


def test_report_json_is_deterministic(intro):
    a = json.dumps(verify_all(intro).to_json(), sort_keys=True)
    b = json.dumps(verify_all(intro).to_json(), sort_keys=True)
    assert a == b
    data = json.loads(a)
    assert data["ok"] and data["codim"] == 2 and data["counts"]["W(r)"] == 3
    assert len({f["hash"] for f in data["formulas"].values()}) == 1


def test_double_report_includes_negative_check(intro):
    rep = verify_all(intro, double=True)
    assert rep.ok
    assert rep.checks["double Schubert component sum differs"]


def test_buch_shift_flag_is_informational(intro):
    rep = verify_all(intro, buch_shift=1)
    assert rep.counts["buch_shift_constants_match"] is True
    assert quiver_constants(intro)


def test_random_small_arrays():
    rng = random.Random(101)
    for _ in range(10):
        r = random_rank_array(rng)
        rep = verify_all(r)
        assert rep.ok, (r.entries, rep.checks)


def test_thread_env(intro, monkeypatch):
    monkeypatch.setenv("QUIVERPOLY_THREADS", "3")
    assert verify_all(intro).ok
    monkeypatch.setenv("QUIVERPOLY_THREADS", "many")
    assert verify_all(intro).ok
