"""Rank arrays, lace arrays, Zelevinsky permutations and lacing diagrams.

Conventions.  A rank array for the quiver 0 -> 1 -> ... -> n stores r_ij
for 0 <= i <= j <= n, with r_ii the dimension of vertex i.  The Zelevinsky
permutation lives in a d x d grid (d = sum of dims) with block rows 0..n
from top to bottom and block columns n..0 from left to right.  Row q of
block row j carries the variable x^j_k and column p of block column i
carries y^i_k, with k counted from the top (rows) or the left (columns)
of the block.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, permutations
from typing import Iterable, Mapping, Sequence

from . import tableaux as tab
from .errors import NotOccurring, ShapeMismatch
from .permcomb import Cell, PartialPermutation, Permutation, diagram
from .polyring import Variable, X, Y

LacingDiagram = tuple  # tuple[PartialPermutation, ...]


class RankArray:
    """Ranks r_ij, 0 <= i <= j <= n, keyed by (i, j).  Treated as immutable."""

    def __init__(self, n: int, ranks: Mapping[tuple[int, int], int]):
        if n < 1:
            raise ValueError("a quiver needs at least one arrow (n >= 1)")
        table = {}
        for i in range(n + 1):
            for j in range(i, n + 1):
                if (i, j) not in ranks:
                    raise ValueError(f"missing rank r_{i}{j}")
                value = int(ranks[(i, j)])
                if value < 0:
                    raise NotOccurring(f"negative rank r_{i},{j} = {value}", (i, j))
                table[(i, j)] = value
        self.n = n
        self._table = table
        self.entries = tuple(sorted(table.items()))
        lace_from_rank(self)  # validates the occurs condition

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if i < 0 or j > self.n or i > j:
            return 0
        return self._table[(i, j)]

    def __hash__(self):
        return hash((self.n, self.entries))

    def __eq__(self, other):
        return isinstance(other, RankArray) and (self.n, self.entries) == (other.n, other.entries)

    def __repr__(self):
        return f"RankArray(n={self.n}, dims={self.dims})"

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(self[i, i] for i in range(self.n + 1))

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.entries)

    def table(self) -> str:
        """Triangular table with rows indexed by j and columns by i."""
        lines = []
        for j in range(self.n + 1):
            lines.append(" ".join(str(self[i, j]) for i in range(j + 1)))
        return "\n".join(lines)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "RankArray":
        """Build from a triangular table: rows[j][i] = r_ij."""
        n = len(rows) - 1
        return cls(n, {(i, j): rows[j][i] for j in range(n + 1) for i in range(j + 1)})


def hom_ranks(dims: Sequence[int]) -> RankArray:
    """The maximal rank array r_ij = min(r_i, ..., r_j)."""
    n = len(dims) - 1
    return RankArray(n, {(i, j): min(dims[i : j + 1]) for i in range(n + 1) for j in range(i, n + 1)})


def lace_from_rank(r: RankArray) -> dict[tuple[int, int], int]:
    s = {}
    for i in range(r.n + 1):
        for j in range(i, r.n + 1):
            value = r[i, j] - r[i - 1, j] - r[i, j + 1] + r[i - 1, j + 1]
            if value < 0:
                raise NotOccurring(f"rank array does not occur: s_{i},{j} = {value} < 0", (i, j))
            s[(i, j)] = value
    return s


def rank_from_lace(s: Mapping[tuple[int, int], int], n: int | None = None) -> RankArray:
    if n is None:
        n = max(j for _, j in s)
    for ij, v in s.items():
        if v < 0:
            raise NotOccurring(f"negative lace count s_{ij[0]},{ij[1]} = {v}", ij)
    ranks = {}
    for i in range(n + 1):
        for j in range(i, n + 1):
            ranks[(i, j)] = sum(s.get((k, m), 0) for k in range(i + 1) for m in range(j, n + 1))
    return RankArray(n, ranks)


def rectangles(r: RankArray) -> dict[tuple[int, int], tuple[int, int]]:
    """(height, width) of R_ij for i < j."""
    out = {}
    for i in range(r.n + 1):
        for j in range(i + 1, r.n + 1):
            out[(i, j)] = (r[i, j - 1] - r[i, j], r[i + 1, j] - r[i, j])
    return out


def shift_ranks(m: int, r: RankArray) -> RankArray:
    if m < 0:
        raise ValueError("shift must be nonnegative")
    return RankArray(r.n, {ij: v + m for ij, v in r.entries})


def hat(r: RankArray) -> RankArray:
    """Drop the dimensions: the array r'_ij = r_{i,j+1} for a quiver with n-1 arrows."""
    return RankArray(r.n - 1, {(i, j): r[i, j + 1] for i in range(r.n) for j in range(i, r.n)})


# ---------------------------------------------------------------------------
# Zelevinsky permutation


@dataclass(frozen=True)
class ZelevinskyData:
    ranks: RankArray
    v: Permutation
    v_hom: Permutation
    row_start: tuple[int, ...]  # rows of block row j are row_start[j]+1 .. +dims[j]
    col_start: tuple[int, ...]  # columns of block column i are col_start[i]+1 .. +dims[i]

    @property
    def n(self) -> int:
        return self.ranks.n

    @property
    def dims(self) -> tuple[int, ...]:
        return self.ranks.dims

    @property
    def d(self) -> int:
        return sum(self.dims)

    def block_of_row(self, q: int) -> int:
        for j in range(self.n + 1):
            if self.row_start[j] < q <= self.row_start[j] + self.dims[j]:
                return j
        raise IndexError(q)

    def block_of_col(self, p: int) -> int:
        for i in range(self.n + 1):
            if self.col_start[i] < p <= self.col_start[i] + self.dims[i]:
                return i
        raise IndexError(p)

    def rows_of_block(self, j: int) -> range:
        return range(self.row_start[j] + 1, self.row_start[j] + self.dims[j] + 1)

    def cols_of_block(self, i: int) -> range:
        return range(self.col_start[i] + 1, self.col_start[i] + self.dims[i] + 1)

    def row_variable(self, q: int) -> Variable:
        j = self.block_of_row(q)
        return Variable(X, j, q - self.row_start[j])

    def col_variable(self, p: int) -> Variable:
        i = self.block_of_col(p)
        return Variable(Y, i, p - self.col_start[i])

    def row_variables(self) -> list[Variable]:
        return [self.row_variable(q) for q in range(1, self.d + 1)]

    def col_variables(self) -> list[Variable]:
        return [self.col_variable(p) for p in range(1, self.d + 1)]

    @cached_property
    def D_r(self) -> frozenset[Cell]:
        return diagram(self.v)

    @cached_property
    def D_hom(self) -> frozenset[Cell]:
        """Cells strictly above the block superantidiagonal."""
        cells = set()
        for j in range(self.n + 1):
            width = self.col_start[j + 1] if j + 1 <= self.n else 0
            for q in self.rows_of_block(j):
                cells.update((q, p) for p in range(1, width + 1))
        return frozenset(cells)

    @cached_property
    def D_omega0(self) -> frozenset[Cell]:
        """Cells strictly above the block antidiagonal."""
        cells = set()
        for j in range(self.n + 1):
            width = self.col_start[j]
            for q in self.rows_of_block(j):
                cells.update((q, p) for p in range(1, width + 1))
        return frozenset(cells)

    def hom_width(self, j: int) -> int:
        """Number of D_Hom cells in each row of block row j."""
        return self.col_start[j + 1] if j + 1 <= self.n else 0

    def block_count(self, i: int, j: int) -> int:
        """Number of 1s that v has in block column i, block row j."""
        rows = set(self.rows_of_block(j))
        cols = set(self.cols_of_block(i))
        return sum(1 for q in rows if self.v(q) in cols)


def _block_layout(dims: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    n = len(dims) - 1
    row_start = tuple(sum(dims[:j]) for j in range(n + 1))
    col_start = tuple(sum(dims[i + 1 :]) for i in range(n + 1))
    return row_start, col_start


def _zelevinsky_permutation(r: RankArray) -> Permutation:
    s = lace_from_rank(r)
    n, dims = r.n, r.dims
    row_start, col_start = _block_layout(dims)

    def count(i: int, j: int) -> int:
        if i <= j:
            return s[(i, j)]
        if i == j + 1:
            return r[j, j + 1]
        return 0

    # rows of block row j go to block columns j+1, j, ..., 0 (left to right)
    row_slots: dict[tuple[int, int], list[int]] = {}
    for j in range(n + 1):
        q = row_start[j]
        for i in range(min(j + 1, n), -1, -1):
            c = count(i, j)
            row_slots[(i, j)] = list(range(q + 1, q + c + 1))
            q += c
        if q != row_start[j] + dims[j]:
            raise AssertionError("block row counts do not add up")
    # columns of block column i go to block rows i-1, i, ..., n (top to bottom)
    col_slots: dict[tuple[int, int], list[int]] = {}
    for i in range(n + 1):
        p = col_start[i]
        for j in range(max(i - 1, 0), n + 1):
            c = count(i, j)
            col_slots[(i, j)] = list(range(p + 1, p + c + 1))
            p += c
        if p != col_start[i] + dims[i]:
            raise AssertionError("block column counts do not add up")
    w = {}
    for key, rows in row_slots.items():
        for q, p in zip(rows, col_slots.get(key, [])):
            w[q] = p
    d = sum(dims)
    return Permutation(tuple(w[q] for q in range(1, d + 1)))


def zelevinsky(r: RankArray) -> ZelevinskyData:
    row_start, col_start = _block_layout(r.dims)
    v = _zelevinsky_permutation(r)
    v_hom = _zelevinsky_permutation(hom_ranks(r.dims))
    return ZelevinskyData(r, v, v_hom, row_start, col_start)


def codim(r: RankArray) -> int:
    """d(r), computed from rectangle areas and checked against lengths."""
    area = sum(h * w for h, w in rectangles(r).values())
    z = zelevinsky(r)
    by_length = z.v.length() - z.v_hom.length()
    if area != by_length:
        raise AssertionError(f"codimension mismatch: areas {area} vs lengths {by_length}")
    return area


# ---------------------------------------------------------------------------
# lacing diagrams


def dims_of_lacing(w: Sequence[PartialPermutation]) -> tuple[int, ...]:
    if not w:
        raise ShapeMismatch("empty lacing diagram")
    dims = [w[0].rows]
    for k, wk in enumerate(w):
        if wk.rows != dims[-1]:
            raise ShapeMismatch(f"w_{k + 1} has {wk.rows} rows, expected {dims[-1]}")
        dims.append(wk.cols)
    return tuple(dims)


def rank_of_lacing(w: Sequence[PartialPermutation]) -> RankArray:
    dims = dims_of_lacing(w)
    n = len(w)
    ranks = {}
    for i in range(n + 1):
        ranks[(i, i)] = dims[i]
        comp = None
        for j in range(i + 1, n + 1):
            comp = w[j - 1] if comp is None else comp.compose(w[j - 1])
            ranks[(i, j)] = comp.rank
    return RankArray(n, ranks)


def lacing_length(w: Sequence[PartialPermutation]) -> int:
    return sum(wk.length() for wk in w)


def laces(w: Sequence[PartialPermutation]) -> list[tuple[int, list[int]]]:
    """Each lace as (starting column, list of heights)."""
    dims = dims_of_lacing(w)
    out = []
    incoming = [set(wk.as_map().values()) for wk in w]
    for k in range(len(dims)):
        for h in range(1, dims[k] + 1):
            if k > 0 and h in incoming[k - 1]:
                continue
            heights = [h]
            col = k
            while col < len(w):
                nxt = w[col].as_map().get(heights[-1])
                if nxt is None:
                    break
                heights.append(nxt)
                col += 1
            out.append((k, heights))
    return out


_INF = float("inf")


def _slot_edges(w: Sequence[PartialPermutation], k: int) -> list[tuple[float, float, int]]:
    """Edges between columns k-1 and k, invisible ones included.

    Each edge is (height at k-1, height at k, lace id); invisible
    endpoints sit at height infinity.
    """
    dims = dims_of_lacing(w)
    lace_id = {}
    for ident, (start, heights) in enumerate(laces(w)):
        for off, h in enumerate(heights):
            lace_id[(start + off, h)] = ident
    wk = w[k - 1]
    mapping = wk.as_map()
    edges = [(a, b, lace_id[(k - 1, a)]) for a, b in mapping.items()]
    hit = set(mapping.values())
    edges += [(_INF, b, lace_id[(k, b)]) for b in range(1, dims[k] + 1) if b not in hit]
    edges += [(a, _INF, lace_id[(k - 1, a)]) for a in range(1, dims[k - 1] + 1) if a not in mapping]
    return edges


def crossing_list(w: Sequence[PartialPermutation]) -> list[tuple[int, int, int]]:
    """All crossings as (k, lace id, lace id), ordinary and virtual alike."""
    out = []
    for k in range(1, len(w) + 1):
        edges = _slot_edges(w, k)
        for a, b, l1 in edges:
            for a2, b2, l2 in edges:
                if a > a2 and b < b2:
                    out.append((k, l1, l2))
    return out


def crossings(w: Sequence[PartialPermutation]) -> int:
    return len(crossing_list(w))


def satisfies_minimality(w: Sequence[PartialPermutation]) -> bool:
    """No pair of laces crosses twice, and laces sharing a start or an end never cross."""
    info = laces(w)
    seen: dict[frozenset, int] = {}
    for _, l1, l2 in crossing_list(w):
        pair = frozenset((l1, l2))
        seen[pair] = seen.get(pair, 0) + 1
        if seen[pair] > 1:
            return False
        s1, h1 = info[l1]
        s2, h2 = info[l2]
        if s1 == s2 or s1 + len(h1) == s2 + len(h2):
            return False
    return True


def _multiset_permutations(items: list) -> list[tuple]:
    return sorted(set(permutations(items)))


def lacing_key(w: Sequence[PartialPermutation]):
    return tuple(tuple(sorted(wk.ones)) for wk in w)


def minimal_lacings(r: RankArray) -> list[LacingDiagram]:
    """W(r): lacing diagrams with rank array r and length d(r)."""
    s = lace_from_rank(r)
    n, dims = r.n, r.dims
    target = codim(r)
    per_column = []
    for k in range(n + 1):
        types = []
        for (a, b), mult in sorted(s.items()):
            if a <= k <= b:
                types.extend([(a, b)] * mult)
        per_column.append(_multiset_permutations(types))
    found = {}

    def slot(k: int, left: tuple, right: tuple) -> frozenset:
        ones = set()
        for t in set(left) & set(right):
            if t[0] <= k - 1 and t[1] >= k:
                hl = [h + 1 for h, x in enumerate(left) if x == t]
                hr = [h + 1 for h, x in enumerate(right) if x == t]
                ones.update(zip(hl, hr))
        return frozenset(ones)

    def slot_crossings(k: int, ones: frozenset) -> int:
        # same count as crossing_list restricted to slot k
        mapping = dict(ones)
        hit = set(mapping.values())
        edges = list(mapping.items())
        edges += [(_INF, b) for b in range(1, dims[k] + 1) if b not in hit]
        edges += [(a, _INF) for a in range(1, dims[k - 1] + 1) if a not in mapping]
        return sum(1 for a, b in edges for a2, b2 in edges if a > a2 and b < b2)

    def rec(k: int, assign: list[tuple], ws: list, used: int):
        if k > n:
            w = tuple(ws)
            if used == target and satisfies_minimality(w):
                found[lacing_key(w)] = w
            return
        for column in per_column[k]:
            if k == 0:
                rec(1, [column], [], 0)
                continue
            ones = slot(k, assign[-1], column)
            # crossings only accumulate, so overshooting d(r) is final
            extra = slot_crossings(k, ones)
            if used + extra > target:
                continue
            rec(k + 1, assign + [column], ws + [PartialPermutation(dims[k - 1], dims[k], ones)], used + extra)

    rec(0, [], [], 0)
    result = [found[key] for key in sorted(found)]
    for w in result:
        if lacing_length(w) != target or rank_of_lacing(w) != r:
            raise AssertionError("minimal lacing diagram with the wrong length or ranks")
    return result


def all_partial_permutations(rows: int, cols: int) -> list[PartialPermutation]:
    out = []
    for rank in range(min(rows, cols) + 1):
        for rs in combinations(range(1, rows + 1), rank):
            for cs in permutations(range(1, cols + 1), rank):
                out.append(PartialPermutation(rows, cols, frozenset(zip(rs, cs))))
    return out


def all_lacing_diagrams(dims: Sequence[int]) -> Iterable[LacingDiagram]:
    """Every list of partial permutations with the given dimension vector."""
    choices = [all_partial_permutations(dims[k - 1], dims[k]) for k in range(1, len(dims))]

    def rec(k: int, acc: list):
        if k == len(choices):
            yield tuple(acc)
            return
        for wk in choices[k]:
            yield from rec(k + 1, acc + [wk])

    return rec(0, [])


def shift_lacing(m: int, w: Sequence[PartialPermutation]) -> LacingDiagram:
    return tuple(wk.shift(m) for wk in w)


# ---------------------------------------------------------------------------
# tableau array


@dataclass(frozen=True)
class TableauArray:
    ranks: RankArray
    T: dict  # (i, j) -> tableau, 1 <= i <= n, i-1 <= j <= n-1
    Y: dict  # i -> tableau
    K: dict  # i -> tableau
    A: dict  # j -> set of row indices of block row j
    filled: dict  # cell -> row index, for every cell of D_r

    def superantidiagonal(self, i: int):
        return self.T[(i, i - 1)]


def tableau_array(r: RankArray) -> TableauArray:
    z = zelevinsky(r)
    n = r.n
    rects = rectangles(r)
    T = {}
    for i in range(1, n + 1):
        for j in range(i - 1, n):
            rows = [q for q in z.rows_of_block(j)]
            cols = set(z.cols_of_block(i))
            filling = []
            for q in rows:
                count = sum(1 for p in cols if (q, p) in z.D_r)
                if count:
                    filling.append((q,) * count)
            t = tuple(filling)
            h, w = rects[(i - 1, j + 1)]
            if tab.shape(t) != ((w,) * h if h and w else ()):
                raise AssertionError(f"block ({i},{j}) is not the rectangle R_{i - 1},{j + 1}")
            T[(i, j)] = t
    Y = {}
    for i in range(1, n + 1):
        top = sum(r.dims[: max(i - 1, 0)])
        Y[i] = tuple((q,) * r.dims[i] for q in range(1, top + 1)) if r.dims[i] else ()
    K = {}
    for i in range(1, n + 1):
        K[i] = tab.product(*[T[(i, j)] for j in range(n - 1, i - 2, -1)])
    A = {j: set(z.rows_of_block(j)) for j in range(n + 1)}
    filled = {cell: cell[0] for cell in z.D_r}
    return TableauArray(r, T, Y, K, A, filled)
