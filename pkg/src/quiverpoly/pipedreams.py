"""Reduced pipe dreams, chute moves, and the passage from pipes to laces.

A pipe dream of size d is a set of crosses (row, col), 1-based, inside the
staircase row + col <= d.  Every other tile is an elbow joining its north
and west edges, and its south and east edges.  The pipe entering row q
from the left travels east and north and leaves through the top of some
column w(q).
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

from .errors import NotAPipeDreamFor
from .permcomb import Cell, PartialPermutation, Permutation
from .polyring import ONE, Polynomial, Variable, xvar, yvar
from .quivercore import LacingDiagram, ZelevinskyData

PipeDream = frozenset  # frozenset[Cell]


def _trace_up(crosses: frozenset, d: int, q: int) -> int:
    """Follow the pipe entering row q from the left; return its exit column."""
    r, c = q, 1
    heading = "E"
    while r >= 1:
        if (r, c) in crosses:
            if heading == "E":
                c += 1
            else:
                r -= 1
        else:
            # elbow: west <-> north, south <-> east
            if heading == "E":
                heading = "N"
                r -= 1
            else:
                heading = "E"
                c += 1
        if c > d + 1:
            raise ValueError("pipe left the grid")
    return c


def permutation_of(D: Iterable[Cell], d: int | None = None) -> Permutation:
    crosses = frozenset(D)
    if d is None:
        d = max((r + c for r, c in crosses), default=1)
        d = max(d, 1)
    return Permutation(tuple(_trace_up(crosses, d, q) for q in range(1, d + 1)))


def is_reduced_for(D: Iterable[Cell], v: Permutation) -> bool:
    crosses = frozenset(D)
    if any(r + c > v.size for r, c in crosses):
        return False
    return len(crosses) == v.length() and permutation_of(crosses, v.size) == v


def top_dream(v: Permutation) -> PipeDream:
    """Top reduced pipe dream: column p holds crosses in rows 1..c_p(v^-1)."""
    code = v.inverse().code()
    return frozenset((r, p) for p, c in enumerate(code, start=1) for r in range(1, c + 1))


def bottom_dream(v: Permutation) -> PipeDream:
    code = v.code()
    return frozenset((q, c) for q, k in enumerate(code, start=1) for c in range(1, k + 1))


def chute_moves(D: PipeDream, d: int) -> list[PipeDream]:
    """All dreams reachable by one chute move.

    A chutable rectangle occupies rows r, r+1 and columns c..c+k (k >= 1);
    every cell is a cross except the NW, SW and SE corners.  The move puts
    a cross on the SW corner and removes the one on the NE corner.
    """
    out = []
    for r, c in D:
        # (r, c + k) is the NE corner; search k >= 1 to the left of it
        for k in range(1, c):
            west = c - k
            ok = True
            if (r, west) in D or (r + 1, west) in D or (r + 1, c) in D:
                ok = False
            if ok:
                for col in range(west + 1, c):
                    if (r, col) not in D or (r + 1, col) not in D:
                        ok = False
                        break
            if ok and r + 1 + west <= d:
                out.append(frozenset(D - {(r, c)} | {(r + 1, west)}))
            # the rectangle cannot be widened past a non-cross in the interior
            if (r, west) not in D or (r + 1, west) not in D:
                break
    return out


def enumerate_rp(v: Permutation) -> list[PipeDream]:
    """RP(v): close the top dream under chute moves."""
    start = top_dream(v)
    if not is_reduced_for(start, v):
        raise AssertionError(f"top dream construction failed for {v}")
    d = v.size
    seen = {start}
    queue = deque([start])
    while queue:
        D = queue.popleft()
        for E in chute_moves(D, d):
            if E not in seen:
                seen.add(E)
                queue.append(E)
    for D in seen:
        if not is_reduced_for(D, v):
            raise AssertionError("chute move produced a non-reduced dream")
    return sorted(seen, key=lambda D: sorted(D))


def monomial(
    D: Iterable[Cell],
    row_labels: Sequence[Variable] | None = None,
    col_labels: Sequence[Variable] | None = None,
    reversed_: bool = False,
    block_sizes: dict | None = None,
) -> Polynomial:
    """Product over crosses of (x_row - y_col).

    With ``reversed_`` each variable index is flipped inside its block;
    ``block_sizes`` maps (family, block) to the block size.
    """
    result = ONE
    for r, c in sorted(D):
        xv = row_labels[r - 1] if row_labels else xvar(r)
        yv = col_labels[c - 1] if col_labels else yvar(c)
        if reversed_:
            xv = _flip(xv, block_sizes)
            yv = _flip(yv, block_sizes)
        result = result * Polynomial.linear(xv, yv)
    return result


def _flip(v: Variable, sizes: dict | None) -> Variable:
    if sizes is None:
        raise ValueError("reversal needs block sizes")
    return Variable(v.family, v.block, sizes[(v.family, v.block)] + 1 - v.index)


def zel_monomial(D: Iterable[Cell], z: ZelevinskyData, skip_hom: bool = True, reversed_: bool = False) -> Polynomial:
    """(x - y)^(D minus D_Hom) in the block alphabets of z."""
    cells = set(D) - (z.D_hom if skip_hom else set())
    sizes = {}
    for j, size in enumerate(z.dims):
        sizes[("x", j)] = size
        sizes[("y", j)] = size
    return monomial(cells, z.row_variables(), z.col_variables(), reversed_, sizes)


def strip_lacing(D: Iterable[Cell], z: ZelevinskyData) -> LacingDiagram:
    """The lacing diagram of a reduced pipe dream for v(r).

    In block row j-1 a pipe enters the top of the (j-1)st antidiagonal
    block through its p-th column from the right; if it leaves the bottom
    of that block row through the q-th column from the right of block
    column j, then w_j sends p to q.
    """
    crosses = frozenset(D)
    if not is_reduced_for(crosses, z.v):
        raise NotAPipeDreamFor(f"dream is not a reduced pipe dream for {z.v}")
    ws = []
    for j in range(1, z.n + 1):
        rows = z.rows_of_block(j - 1)
        top, bottom = rows.start, rows.stop - 1
        src_cols = z.cols_of_block(j - 1)
        dst_cols = z.cols_of_block(j)
        mapping = {}
        for col in src_cols:
            p = src_cols.stop - col
            exit_col = _trace_down(crosses, top, bottom, col)
            if exit_col is not None and exit_col in dst_cols:
                mapping[p] = dst_cols.stop - exit_col
        ws.append(PartialPermutation.from_map(z.dims[j - 1], z.dims[j], mapping))
    return tuple(ws)


def _trace_down(crosses: frozenset, top: int, bottom: int, col: int):
    """Follow a pipe entering (top, col) from above, heading south and west.

    Returns the column through which it leaves the bottom of row ``bottom``,
    or None when it leaves through the left edge.
    """
    r, c = top, col
    heading = "S"
    while True:
        if c < 1:
            return None
        if r > bottom:
            return c
        if (r, c) in crosses:
            if heading == "S":
                r += 1
            else:
                c -= 1
        else:
            # elbow: north <-> west, east <-> south
            if heading == "S":
                heading = "W"
                c -= 1
            else:
                heading = "S"
                r += 1


def render(D: Iterable[Cell], d: int, hom: Iterable[Cell] = ()) -> str:
    """ASCII picture: '*' for crosses in D_Hom, '+' for other crosses, '.' elsewhere."""
    crosses, hom = set(D), set(hom)
    lines = []
    for r in range(1, d + 1):
        row = []
        for c in range(1, d + 1):
            if (r, c) in crosses:
                row.append("*" if (r, c) in hom else "+")
            else:
                row.append(".")
        lines.append(" ".join(row))
    return "\n".join(lines)
