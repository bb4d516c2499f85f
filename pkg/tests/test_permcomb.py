import itertools
import random

from hypothesis import given, settings
from hypothesis import strategies as st

from quiverpoly.permcomb import PartialPermutation, Permutation, bruhat_leq, code, diagram, is_northwest
from quiverpoly.quivercore import hom_ranks, zelevinsky


def brute_inversions(w):
    one = w.oneline
    return sum(1 for i, j in itertools.combinations(range(len(one)), 2) if one[i] > one[j])


def test_lengths():
    assert Permutation.identity(4).length() == 0
    assert Permutation.longest(4).length() == 6
    v = Permutation((8, 9, 4, 5, 11, 1, 2, 6, 12, 3, 7, 10))
    assert v.length() == brute_inversions(v) == 30


def test_diagram_and_code():
    assert diagram(Permutation.identity(3)) == frozenset()
    w = Permutation.parse("2143")
    assert diagram(w) == {(1, 1), (3, 3)}
    assert code(diagram(w)) == (1, 0, 1)
    assert code(()) == ()


def test_hom_diagram_code():
    z = zelevinsky(hom_ranks((1, 3, 3, 1)))
    assert code(z.D_hom) == (4, 1, 1, 1)
    assert is_northwest(z.D_hom)


def test_completion():
    assert PartialPermutation.from_matrix([[0]]).complete().oneline == (2, 1)
    full = Permutation.parse("3142")
    assert full.to_partial().complete() == full
    # [1 0 0] completes to 1 2 3 4 up to trailing fixed points
    got = PartialPermutation.from_matrix([[1, 0, 0]]).complete().extend(4)
    assert got.oneline == (1, 2, 3, 4)


def test_shift():
    w = Permutation.parse("21")
    assert w.shift(0) == w
    assert w.shift(1).oneline == (1, 3, 2)


@settings(max_examples=50, deadline=None)
@given(st.permutations(range(1, 6)), st.integers(0, 3))
def test_shift_preserves_length(one, m):
    w = Permutation(tuple(one))
    assert w.shift(m).length() == w.length() == brute_inversions(w)


@settings(max_examples=50, deadline=None)
@given(st.permutations(range(1, 6)))
def test_code_round_trip(one):
    w = Permutation(tuple(one))
    assert Permutation.from_code(w.code(), 5) == w
    assert len(w.diagram()) == w.length()


def test_bruhat():
    assert bruhat_leq(Permutation.identity(4), Permutation.parse("2143"))
    assert not bruhat_leq(Permutation.parse("2143"), Permutation.parse("1324"))


def test_bruhat_matches_subword_oracle_in_s4():
    # u <= w iff u is reachable from w by length-decreasing transposition steps
    perms = [Permutation(p) for p in itertools.permutations(range(1, 5))]

    def below(w):
        one = list(w.oneline)
        out = set()
        for i, j in itertools.combinations(range(4), 2):
            if one[i] > one[j]:
                u = one[:]
                u[i], u[j] = u[j], u[i]
                out.add(Permutation(tuple(u)))
        return out

    down = {}
    for w in sorted(perms, key=lambda p: p.length()):
        s = {w}
        for u in below(w):
            s |= down[u]
        down[w] = s
    rng = random.Random(3)
    for u, w in rng.sample(list(itertools.product(perms, perms)), 150):
        assert bruhat_leq(u, w) == (u in down[w])
