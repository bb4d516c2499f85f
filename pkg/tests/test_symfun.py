import itertools
import random

import pytest

from quiverpoly.errors import ShapeMismatch
from quiverpoly.permcomb import PartialPermutation, Permutation
from quiverpoly.pipedreams import monomial
from quiverpoly.polyring import ONE, ZERO, Polynomial, Variable, prod, xvar, yvar
from quiverpoly.quivercore import codim, minimal_lacings, zelevinsky
from quiverpoly.symfun import (
    ProductKind,
    block_alphabet,
    demazure,
    demazure_by_keys,
    demazure_expand,
    h_diff,
    product_over_list,
    schubert_dd,
    schubert_factored,
    schubert_pd,
    schur_diff,
    stanley_by_stabilization,
    stanley_coefficients,
    stanley_finite,
)


def X(k, block=0):
    return [Variable("x", block, i) for i in range(1, k + 1)]


def Y(k, block=0):
    return [Variable("y", block, i) for i in range(1, k + 1)]


def total(alphabet):
    return sum((Polynomial.var(v) for v in alphabet), ZERO)


def test_base_cases():
    assert schubert_dd(Permutation.identity(3)) == ONE
    assert schubert_dd(Permutation.parse("21")) == Polynomial.linear(xvar(1), yvar(1))


def test_2143_single():
    x1, x2, x3 = (Polynomial.var(xvar(i)) for i in (1, 2, 3))
    assert schubert_dd(Permutation.parse("2143"), double=False) == x1**2 + x1 * x2 + x1 * x3


def test_hom_schubert_is_product_of_linear_forms(intro):
    z = zelevinsky(intro)
    S = schubert_dd(z.v_hom, z.row_variables(), z.col_variables())
    a1, d1 = Variable("x", 0, 1), Variable("x", 3, 1)
    want = prod(
        [Polynomial.linear(a1, Variable("y", 2, k)) for k in (1, 2, 3)]
        + [Polynomial.linear(a1, Variable("y", 3, 1))]
        + [Polynomial.linear(Variable("x", 1, k), Variable("y", 3, 1)) for k in (1, 2, 3)]
    )
    assert S == want
    assert monomial(z.D_hom, z.row_variables(), z.col_variables()) == want


def test_intro_schubert_degree(intro):
    S = schubert_dd(zelevinsky(intro).v)
    assert S.degree() == 9 and S.is_homogeneous()


@pytest.mark.parametrize("one", list(itertools.permutations(range(1, 4))))
def test_engines_agree_s3(one):
    for double in (True, False):
        assert schubert_dd(one, double=double) == schubert_pd(one, double=double)


def test_factored_form_expands_to_full(intro):
    v = zelevinsky(intro).v
    F, G = schubert_factored(v.oneline, True)
    lin = prod(Polynomial.linear(xvar(r), yvar(c)) for r, c in sorted(F))
    assert lin * G == schubert_dd(v)


def test_too_short_alphabet():
    with pytest.raises(ShapeMismatch):
        schubert_dd(Permutation.parse("321"), X(1), Y(3))


def test_demazure_dominant_and_antidominant():
    x = [Polynomial.var(xvar(i)) for i in (1, 2, 3)]
    assert demazure((2, 1, 0)) == x[0] ** 2 * x[1]
    assert demazure((0, 1)) == x[0] + x[1]
    # reversed partition gives the Schur polynomial in all the variables
    assert demazure((0, 1, 2)) == schur_diff((2, 1), X(3), [])
    assert demazure((0, 0, 2)) == schur_diff((2,), X(3), [])


def test_demazure_key_formula_agrees():
    for beta in itertools.product(range(3), repeat=3):
        assert demazure(beta) == demazure_by_keys(beta)


def test_demazure_expand_round_trip():
    p = demazure((1, 0, 2)) + 2 * demazure((0, 2, 1))
    assert demazure_expand(p) == {(0, 2, 1): 2, (1, 0, 2): 1}


def test_schur_differences():
    a, b = X(3), Y(2)
    assert schur_diff((1,), a, b) == total(a) - total(b)
    for lam in [(1,), (2,), (1, 1), (2, 1)]:
        assert schur_diff(lam, a, a) == ZERO
    assert h_diff(0, a, b) == ONE


def test_s11_of_c_minus_d():
    c, d = X(3, 2), X(1, 3)
    got = schur_diff((1, 1), c, d)
    c1, c2, c3 = (Polynomial.var(v) for v in c)
    d1 = Polynomial.var(d[0])
    e2 = c1 * c2 + c1 * c3 + c2 * c3
    assert got == e2 - (c1 + c2 + c3) * d1 + d1 * d1


def test_grassmannian_stanley():
    assert stanley_coefficients(Permutation.parse("21")) == {(1,): 1}
    assert stanley_finite(Permutation.parse("21"), X(2), Y(2)) == schur_diff((1,), X(2), Y(2))


@pytest.mark.parametrize("one", list(itertools.permutations(range(1, 4))))
def test_stanley_matches_stabilized_schubert(one):
    w = Permutation(one)
    for m in (w.length() + 1, w.length() + 2):
        assert stanley_by_stabilization(w, 3, 3, m) == stanley_finite(w, X(3), Y(3))


def test_stanley_truncation_size(intro):
    # alphabets of size max(r_i) + d(r) hold every monomial of degree <= d(r)
    size = max(intro.dims) + codim(intro)
    for w in minimal_lacings(intro):
        for item in w:
            v = item.complete()
            # the shift has to be as large as the alphabets
            m = size
            assert stanley_by_stabilization(v, size, size, m) == stanley_finite(v, X(size), Y(size))


def test_products_over_lists():
    dims = (1, 3, 3, 1)
    assert product_over_list(ProductKind.SCHUR, (), dims) == ONE
    lam = ((1,), (1,), ())
    a, b, c = (block_alphabet("x", k, dims[k]) for k in range(3))
    yb, yc = block_alphabet("y", 1, 3), block_alphabet("y", 2, 3)
    assert product_over_list(ProductKind.SCHUR, lam, dims) == schur_diff((1,), a, yb) * schur_diff((1,), b, yc)
    mid = (
        PartialPermutation.from_matrix([[1, 0, 0]]),
        PartialPermutation.from_matrix([[0, 1, 0], [1, 0, 0], [0, 0, 0]]),
        PartialPermutation.from_matrix([[1], [0], [0]]),
    )
    got = product_over_list(ProductKind.SCHUBERT, mid, dims, double=False)
    assert got == schubert_dd(Permutation.parse("2143"), b, c)
    with pytest.raises(ShapeMismatch):
        product_over_list(ProductKind.SCHUR, ((1, 1), (), ()), dims)


def test_random_s5_engines():
    rng = random.Random(1)
    for one in rng.sample(list(itertools.permutations(range(1, 6))), 10):
        assert schubert_dd(one) == schubert_pd(one)
