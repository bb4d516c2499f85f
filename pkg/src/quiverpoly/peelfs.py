"""Peelable tableaux, quiver constants, and factor sequences.

A diagram is a set of 1-based (row, column) cells.  A column of a diagram
is identified with the sorted tuple of its row indices.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product as _cartesian
from typing import Iterable

from . import tableaux as tab
from .errors import BijectionFailure, NotPeelable
from .permcomb import Cell, code, is_northwest
from .quivercore import RankArray, TableauArray, ZelevinskyData, tableau_array, zelevinsky

FactorSequence = tuple  # tuple[Tableau, ...]


def diagram_columns(D: Iterable[Cell]) -> list[tuple[int, ...]]:
    """Nonempty columns of D, left to right, each as its sorted rows."""
    D = set(D)
    return [tuple(sorted(r for r, c in D if c == col)) for col in sorted({c for _, c in D})]


def _check_northwest(D) -> None:
    if not is_northwest(D):
        raise ValueError("diagram is not northwest")


def is_peelable(Q: tab.Tableau, D: Iterable[Cell]) -> bool:
    D = frozenset(D)
    _check_northwest(D)
    if not tab.is_semistandard(Q):
        return False
    current = tab.make(Q)
    for col in diagram_columns(D):
        current = tab.peel_column(current, col)
        if current is None:
            return False
    return current == ()


def enumerate_peelables(D: Iterable[Cell]) -> list[tab.Tableau]:
    """Peel(D), built by unpeeling one column at a time (last column first)."""
    D = frozenset(D)
    _check_northwest(D)
    found = _peelables(tuple(diagram_columns(D)))
    for Q in found:
        if not is_peelable(Q, D):
            raise AssertionError(f"unpeeling produced a non-peelable tableau {Q}")
    return list(found)


@lru_cache(maxsize=4096)
def _peelables(cols: tuple[tuple[int, ...], ...]) -> tuple[tab.Tableau, ...]:
    if not cols:
        return ((),)
    column, rest = cols[0], cols[1:]
    out = set()
    for T in _peelables(rest):
        for strip in tab.vertical_strips(tab.shape(T), len(column)):
            Q = tab.unpeel_step(T, strip, column)
            if Q is not None:
                out.add(Q)
    return tuple(sorted(out))


# ---------------------------------------------------------------------------
# deleting D_Hom


def delete_hom(Q: tab.Tableau, z: ZelevinskyData) -> FactorSequence:
    """Psi_r(Q): the parts of Q outside key(D_Hom), one per rectangle.

    W_i is cut from the rows of block row i-1, in the r_{i-1} x r_i
    rectangle to the right of the D_Hom cells of that block row.
    """
    hom_key = tab.key_tableau(code(z.D_hom)) if z.D_hom else ()
    cells = tab.to_cells(Q)
    for cell, a in tab.to_cells(hom_key).items():
        if cells.get(cell) != a:
            raise NotPeelable(f"tableau does not contain key(D_Hom) at {cell}")
    used = set(tab.to_cells(hom_key))
    W = []
    for i in range(1, z.n + 1):
        width = z.hom_width(i - 1)
        rows = []
        for q in z.rows_of_block(i - 1):
            row = [cells[(q, c)] for c in range(width + 1, width + z.dims[i] + 1) if (q, c) in cells]
            used.update((q, c) for c in range(width + 1, width + len(row) + 1))
            if row:
                rows.append(tuple(row))
        W.append(tuple(rows))
    if used != set(cells):
        stray = sorted(set(cells) - used)[0]
        raise NotPeelable(f"cell {stray} lies outside every rectangle")
    return tuple(W)


def sequence_shape(W: FactorSequence) -> tuple[tuple[int, ...], ...]:
    return tuple(tab.shape(w) for w in W)


def quiver_constants(r: RankArray) -> dict[tuple, int]:
    """c_lambda(r): Peel(D_r) counted by deleted shape."""
    z = zelevinsky(r)
    counts = Counter(sequence_shape(delete_hom(Q, z)) for Q in enumerate_peelables(z.D_r))
    return dict(sorted(counts.items()))


def constants_from_sequences(sequences: Iterable[FactorSequence]) -> dict[tuple, int]:
    return dict(sorted(Counter(sequence_shape(W) for W in sequences).items()))


# ---------------------------------------------------------------------------
# factor sequences


def enumerate_factor_sequences(r: RankArray) -> list[FactorSequence]:
    """All r-factor sequences, by the antidiagonal sweep of the tableau array.

    Antidiagonal k holds the positions (i, j) with j - i + 1 = k.  Starting
    from k = n-1, every tableau is factored as [P Q]; P travels west to
    (i+1, j), Q north to (i, j-1), and each entry T_ij of antidiagonal k-1
    becomes [Q_{i,j+1} T_ij P_{i-1,j}].  Distinct outcomes are kept once.
    """
    ta = tableau_array(r)
    n = r.n
    T = ta.T

    def diagonal(k: int) -> list[tuple[int, int]]:
        return [(i, i - 1 + k) for i in range(1, n + 1) if i - 1 + k <= n - 1]

    states = {tuple(T[pos] for pos in diagonal(n - 1))}
    for k in range(n - 1, 0, -1):
        here, below = diagonal(k), diagonal(k - 1)
        nxt = set()
        for state in states:
            options = [tab.factorizations(w) for w in state]
            for choice in _cartesian(*options):
                P = {pos: pq[0] for pos, pq in zip(here, choice)}
                Q = {pos: pq[1] for pos, pq in zip(here, choice)}
                new = []
                for i, j in below:
                    south = Q.get((i, j + 1), ())
                    east = P.get((i - 1, j), ())
                    new.append(tab.product(south, T[(i, j)], east))
                nxt.add(tuple(new))
        states = nxt
    return sorted(states)


def characterize(W: FactorSequence, r: RankArray, ta: TableauArray | None = None) -> bool:
    """Membership test for the image of Psi_r via the X/Z tableau conditions."""
    ta = ta or tableau_array(r)
    n = r.n
    if len(W) != n:
        return False
    z = zelevinsky(r)
    X = {n: W[n - 1]}
    for i in range(n - 1, 0, -1):
        rest = _minus(X[i + 1], ta.K[i + 1])
        if rest is None:
            return False
        X[i] = tab.rectify(rest + tab.column_word(W[i - 1]))
    if X[1] != ta.K[1]:
        return False
    for i in range(1, n + 1):
        if _minus(X[i], ta.K[i]) is None:
            return False
        low = z.row_start[i - 1] + 1
        Z = tab.restrict(tab.product(X[i], *[W[k - 1] for k in range(i - 1, 0, -1)]), range(low, z.d + 1))
        sh = tab.shape(Z)
        if len(sh) > r.dims[i - 1] or (sh and sh[0] > r.dims[i]):
            return False
        target = Counter()
        for (k, ell), t in ta.T.items():
            # blocks weakly east of column i and weakly south of row i-1
            if k <= i and ell >= i - 1:
                target.update(tab.letters(t))
        if tab.letters(Z) != target:
            return False
    return True


def _minus(X: tab.Tableau, K: tab.Tableau):
    """Column word of the skew tableau X - K, or None when X does not contain K."""
    cells = tab.to_cells(X)
    for cell, a in tab.to_cells(K).items():
        if cells.get(cell) != a:
            return None
        del cells[cell]
    return tab.skew_column_word(cells)


@dataclass
class BijectionReport:
    peelables: int
    sequences: int
    injective: bool
    image_matches: bool
    characterized: bool
    shapes_match: bool
    missing: list = field(default_factory=list)
    extra: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.injective and self.image_matches and self.characterized and self.shapes_match


def verify_bijection(r: RankArray, raise_on_failure: bool = True) -> BijectionReport:
    z = zelevinsky(r)
    ta = tableau_array(r)
    peel = enumerate_peelables(z.D_r)
    images = [delete_hom(Q, z) for Q in peel]
    fs = set(enumerate_factor_sequences(r))
    image_set = set(images)
    hom_shape = tab.shape(tab.key_tableau(code(z.D_hom))) if z.D_hom else ()
    shapes_ok = all(
        sum(tab.shape(Q)) == sum(hom_shape) + sum(sum(s) for s in sequence_shape(W)) for Q, W in zip(peel, images)
    )
    report = BijectionReport(
        peelables=len(peel),
        sequences=len(fs),
        injective=len(image_set) == len(images),
        image_matches=image_set == fs,
        characterized=all(characterize(W, r, ta) for W in fs),
        shapes_match=shapes_ok,
        missing=sorted(fs - image_set),
        extra=sorted(image_set - fs),
    )
    if raise_on_failure and not report.ok:
        witness = (report.missing or report.extra or [None])[0]
        raise BijectionFailure("Psi_r is not a bijection onto the factor sequences", witness)
    return report
