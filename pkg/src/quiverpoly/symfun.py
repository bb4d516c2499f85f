"""Schubert polynomials, Demazure characters, Schur and Stanley functions.

Schubert polynomials are computed in a flat alphabet x_1, x_2, ... and
y_1, y_2, ... (block 0 of each family) and renamed afterwards.  The
divided-difference engine keeps a polynomial in factored form: a set F
of cells standing for linear factors (x_i - y_j) times a cofactor G.
Only the factors that are not symmetric in x_q, x_{q+1} are multiplied
into G before applying d_q, and the dominant part of the next diagram is
divided back out.  This keeps G small along the whole chain.
"""

from __future__ import annotations

from enum import Enum
from functools import lru_cache
from itertools import combinations_with_replacement, combinations
from typing import Sequence

from . import tableaux as tab
from .errors import ShapeMismatch
from .permcomb import PartialPermutation, Permutation
from .polyring import (
    ONE,
    ZERO,
    Polynomial,
    Variable,
    demazure_operator,
    divide_exact,
    divided_difference,
    prod,
    xvar,
    yvar,
)

# ---------------------------------------------------------------------------
# Schubert polynomials


def _as_permutation(w) -> Permutation:
    if isinstance(w, PartialPermutation):
        return w.complete()
    if isinstance(w, Permutation):
        return w
    return Permutation(tuple(w))


def _dominant_part(w: Permutation) -> set:
    """Cells (i, j) such that the whole rectangle [1..i] x [1..j] lies in D(w)."""
    D = w.diagram()
    return {(i, j) for i, j in D if all((a, b) in D for a in range(1, i + 1) for b in range(1, j + 1))}


def _lin(cell, double: bool) -> Polynomial:
    i, j = cell
    return Polynomial.linear(xvar(i), yvar(j) if double else None)


@lru_cache(maxsize=2048)
def _schubert_flat(w: tuple[int, ...], double: bool) -> Polynomial:
    F, G = schubert_factored(w, double)
    return prod(_lin(c, double) for c in sorted(F)) * G


@lru_cache(maxsize=256)
def schubert_factored(w: tuple[int, ...], double: bool = True) -> tuple[frozenset, Polynomial]:
    """(F, G) with S_w = prod_{(i,j) in F} (x_i - y_j) * G, in flat variables.

    F always contains the dominant part of D(w).
    """
    v = Permutation(tuple(w))
    d = v.size
    if d <= 1:
        return frozenset(), ONE
    pos = {a: k for k, a in enumerate(v.oneline)}
    u = list(range(d, 0, -1))
    F = {(i, j) for i in range(1, d + 1) for j in range(1, d + 1) if i + j <= d}
    G = ONE
    while tuple(u) != v.oneline:
        best = None
        for q in range(1, d):
            # step down from u to u s_q while staying above v in weak order
            if u[q - 1] > u[q] and pos[u[q]] < pos[u[q - 1]]:
                u2 = u[:]
                u2[q - 1], u2[q] = u2[q], u2[q - 1]
                sym = {c for c in F if c[0] not in (q, q + 1) or ((q, c[1]) in F and (q + 1, c[1]) in F)}
                dom = _dominant_part(Permutation(tuple(u2)))
                score = len(dom - sym) + len(F) - len(sym)
                if best is None or score < best[0]:
                    best = (score, q, u2, sym, dom)
        if best is None:
            raise AssertionError("no descent leads towards the target permutation")
        _, q, u2, sym, dom = best
        P = G
        for c in sorted(F - sym):
            P = P * _lin(c, double)
        P = divided_difference(q, P)
        for c in sorted(dom - sym):
            P = divide_exact(P, _lin(c, double))
        F, G, u = sym | dom, P, u2
    return frozenset(F), G


def schubert_dd(
    w,
    x: Sequence[Variable] | None = None,
    y: Sequence[Variable] | None = None,
    double: bool = True,
) -> Polynomial:
    """S_w(x - y) by descending divided differences from the longest element.

    ``x`` and ``y`` relabel x_k and y_k; with ``double=False`` the y
    variables are set to zero.
    """
    v = _as_permutation(w).trimmed()
    p = _schubert_flat(v.oneline, double)
    return _relabel(p, x, y)


def _relabel(p: Polynomial, x, y) -> Polynomial:
    mapping = {}
    for var in p.variables():
        labels = x if var.family == "x" else y
        if labels is None:
            continue
        if var.index > len(labels):
            raise ShapeMismatch(f"alphabet of size {len(labels)} has no variable {var.index}")
        mapping[var] = labels[var.index - 1]
    return p.rename(mapping)


def schubert_pd(w, x=None, y=None, double: bool = True) -> Polynomial:
    """S_w(x - y) as the sum over reduced pipe dreams."""
    from .pipedreams import enumerate_rp, monomial

    v = _as_permutation(w).trimmed()
    if v.size == 0:
        return ONE
    total = ZERO
    for D in enumerate_rp(v):
        if double:
            total = total + monomial(D)
        else:
            total = total + prod(Polynomial.var(xvar(r)) for r, _ in sorted(D))
    return _relabel(total, x, y)


# ---------------------------------------------------------------------------
# Demazure characters


def _x_alphabet(k: int) -> list[Variable]:
    return [xvar(i) for i in range(1, k + 1)]


@lru_cache(maxsize=4096)
def demazure(beta: tuple[int, ...]) -> Polynomial:
    """kappa_beta: x^beta for weakly decreasing beta, else pi_i kappa_{s_i beta}."""
    beta = tuple(beta)
    for i in range(len(beta) - 1):
        if beta[i] < beta[i + 1]:
            swapped = beta[:i] + (beta[i + 1], beta[i]) + beta[i + 2 :]
            return demazure_operator(i + 1, demazure(swapped), _x_alphabet(len(beta)))
    return prod(Polynomial.var(xvar(i + 1), b) for i, b in enumerate(beta) if b)


def demazure_by_keys(beta: Sequence[int]) -> Polynomial:
    """kappa_beta as a sum of x^wt(t) over tableaux t with K_+(t) <= key(beta)."""
    beta = tuple(beta)
    lam = tuple(sorted((b for b in beta if b), reverse=True))
    key = tab.key_tableau(beta)
    total = ZERO
    for t in _tableaux_of_shape(lam, len(beta)):
        if _entrywise_leq(tab.right_key(t), key):
            total = total + prod(Polynomial.var(xvar(i + 1), e) for i, e in enumerate(tab.weight(t)) if e)
    return total


def _entrywise_leq(s: tab.Tableau, t: tab.Tableau) -> bool:
    if tab.shape(s) != tab.shape(t):
        return False
    return all(a <= b for rs, rt in zip(s, t) for a, b in zip(rs, rt))


def _tableaux_of_shape(lam: tuple[int, ...], max_entry: int) -> list[tab.Tableau]:
    size = sum(lam)
    out = []
    for content in _compositions(size, max_entry):
        out.extend(t for t in tab.tableaux_of_content(content) if tab.shape(t) == lam)
    return out


def _compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for a in range(total + 1):
        for rest in _compositions(total - a, parts - 1):
            yield (a,) + rest


def _exponent(m, k: int) -> tuple[int, ...]:
    e = [0] * k
    for v, a in m:
        if v.family != "x" or v.block != 0 or v.index > k:
            raise ValueError(f"variable {v} outside x_1..x_{k}")
        e[v.index - 1] = a
    return tuple(e)


def demazure_expand(p: Polynomial, k: int | None = None) -> dict[tuple[int, ...], int]:
    """Coefficients of p in the basis {kappa_beta}.

    Greedy: the leading monomial of kappa_beta in reverse-lex order (last
    variable compared first) is x^beta, so subtracting the matching
    multiple of kappa_beta removes the reverse-lex leading term of p.
    """
    if k is None:
        k = max((v.index for v in p.variables()), default=0)
    out: dict[tuple[int, ...], int] = {}
    rest = p
    while not rest.is_zero():
        top = max(rest.terms, key=lambda m: tuple(reversed(_exponent(m, k))))
        beta = _exponent(top, k)
        c = rest.terms[top]
        out[beta] = out.get(beta, 0) + c
        rest = rest - demazure(beta) * c
    return dict(sorted(out.items()))


# ---------------------------------------------------------------------------
# complete, elementary and Schur functions in a difference of alphabets


def h(k: int, X: Sequence[Variable]) -> Polynomial:
    if k < 0:
        return ZERO
    total = ZERO
    for combo in combinations_with_replacement(X, k):
        total = total + prod(Polynomial.var(v) for v in combo)
    return total


def e(k: int, X: Sequence[Variable]) -> Polynomial:
    if k < 0:
        return ZERO
    total = ZERO
    for combo in combinations(X, k):
        total = total + prod(Polynomial.var(v) for v in combo)
    return total


def h_diff(k: int, X: Sequence[Variable], Y: Sequence[Variable]) -> Polynomial:
    """h_k(X - Y): coefficient of z^k in prod(1 - z y) / prod(1 - z x)."""
    if k < 0:
        return ZERO
    return sum((h(a, X) * e(k - a, Y) * (-1) ** (k - a) for a in range(k + 1)), ZERO)


def _det(matrix: list[list[Polynomial]]) -> Polynomial:
    """Laplace expansion along the first row; the matrices here are tiny."""
    size = len(matrix)
    if size == 0:
        return ONE
    if size == 1:
        return matrix[0][0]
    total = ZERO
    for c in range(size):
        if matrix[0][c].is_zero():
            continue
        minor = [row[:c] + row[c + 1 :] for row in matrix[1:]]
        term = matrix[0][c] * _det(minor)
        total = total + term if c % 2 == 0 else total - term
    return total


def schur_diff(lam: Sequence[int], X: Sequence[Variable], Y: Sequence[Variable]) -> Polynomial:
    """s_lambda(X - Y) = det h_{lambda_i - i + j}(X - Y), with one row per part."""
    lam = [a for a in lam if a]
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"{lam} is not a partition")
    ell = len(lam)
    cache: dict[int, Polynomial] = {}

    def hk(k):
        if k not in cache:
            cache[k] = h_diff(k, X, Y)
        return cache[k]

    return _det([[hk(lam[i] - i + j) for j in range(ell)] for i in range(ell)])


# ---------------------------------------------------------------------------
# Stanley symmetric functions


def stanley_coefficients(w) -> dict[tuple[int, ...], int]:
    """alpha^lambda_w = number of D(w)-peelable tableaux of shape lambda."""
    from .peelfs import enumerate_peelables

    v = _as_permutation(w)
    counts: dict[tuple[int, ...], int] = {}
    for Q in enumerate_peelables(v.diagram()):
        lam = tab.shape(Q)
        counts[lam] = counts.get(lam, 0) + 1
    return dict(sorted(counts.items()))


def stanley_finite(w, X: Sequence[Variable], Y: Sequence[Variable]) -> Polynomial:
    """F_w(X - Y) on finite alphabets through its Schur expansion."""
    return sum(
        (c * schur_diff(lam, X, Y) for lam, c in stanley_coefficients(w).items()),
        ZERO,
    )


def stanley_by_stabilization(w, p: int, q: int, m: int) -> Polynomial:
    """S_{1_m x w}(x - y) with x_k = 0 for k > p and y_k = 0 for k > q.

    Uses flat variables x_1..x_p and y_1..y_q.  For m large enough this
    equals F_w evaluated on those alphabets.
    """
    v = _as_permutation(w).shift(m)
    full = schubert_dd(v)
    kill = {var: None for var in full.variables() if var.index > (p if var.family == "x" else q)}
    return full.rename(kill)


# ---------------------------------------------------------------------------
# products over a list of consecutive alphabets


class ProductKind(Enum):
    SCHUBERT = "schubert"
    STANLEY = "stanley"
    SCHUR = "schur"


def block_alphabet(family: str, block: int, size: int) -> list[Variable]:
    return [Variable(family, block, k) for k in range(1, size + 1)]


def product_over_list(kind: ProductKind, index: Sequence, dims: Sequence[int], double: bool = True) -> Polynomial:
    """prod_j f_j(x^{j-1} - y^j) over the entries of ``index``.

    SCHUBERT and STANLEY take partial permutations of size
    dims[j-1] x dims[j]; SCHUR takes partitions fitting in that
    rectangle.  With ``double=False`` the y^j alphabet is replaced by x^j.
    """
    if index and len(index) != len(dims) - 1:
        raise ShapeMismatch(f"{len(index)} factors for {len(dims)} vertices")
    total = ONE
    for j, item in enumerate(index, start=1):
        X = block_alphabet("x", j - 1, dims[j - 1])
        Y = block_alphabet("y" if double else "x", j, dims[j])
        if kind is ProductKind.SCHUR:
            lam = tuple(a for a in item if a)
            if len(lam) > dims[j - 1] or (lam and lam[0] > dims[j]):
                raise ShapeMismatch(f"{lam} does not fit in a {dims[j - 1]} x {dims[j]} rectangle")
            factor = schur_diff(lam, X, Y)
        else:
            if not isinstance(item, PartialPermutation) or (item.rows, item.cols) != (dims[j - 1], dims[j]):
                raise ShapeMismatch(f"factor {j} must be a {dims[j - 1]} x {dims[j]} partial permutation")
            if kind is ProductKind.SCHUBERT:
                # a minimal completion has descents only in the first dims[j-1]
                # positions and inverse descents in the first dims[j] values
                factor = schubert_dd(item.complete(), X, Y, double=True)
            else:
                factor = stanley_finite(item, X, Y)
        total = total * factor
    return total

