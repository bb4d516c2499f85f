"""Permutations, partial permutations, diagrams and codes."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ShapeMismatch

Cell = tuple[int, int]


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..d} in one-line notation."""

    oneline: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "oneline", tuple(int(a) for a in self.oneline))
        if sorted(self.oneline) != list(range(1, len(self.oneline) + 1)):
            raise ValueError(f"not a permutation: {self.oneline}")

    @classmethod
    def identity(cls, d: int) -> "Permutation":
        return cls(tuple(range(1, d + 1)))

    @classmethod
    def longest(cls, d: int) -> "Permutation":
        return cls(tuple(range(d, 0, -1)))

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        parts = text.replace(",", " ").split()
        if len(parts) == 1 and len(text.strip()) > 1:
            parts = list(text.strip())  # compact form such as 2143
        return cls(tuple(int(a) for a in parts))

    @classmethod
    def from_code(cls, code: Sequence[int], size: int | None = None) -> "Permutation":
        d = max([len(code)] + [i + 1 + c for i, c in enumerate(code)])
        if size is not None:
            d = max(d, size)
        free = list(range(1, d + 1))
        out = []
        for i in range(d):
            c = code[i] if i < len(code) else 0
            out.append(free.pop(c))
        return cls(tuple(out))

    def __len__(self):
        return len(self.oneline)

    @property
    def size(self) -> int:
        return len(self.oneline)

    def __call__(self, i: int) -> int:
        return self.oneline[i - 1]

    def __str__(self):
        return " ".join(map(str, self.oneline))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.oneline)
        for i, a in enumerate(self.oneline, start=1):
            inv[a - 1] = i
        return Permutation(tuple(inv))

    def length(self) -> int:
        w = self.oneline
        return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])

    def code(self) -> tuple[int, ...]:
        """Lehmer code c_i = #{j > i : w(j) < w(i)}."""
        w = self.oneline
        return tuple(sum(1 for j in range(i + 1, len(w)) if w[j] < w[i]) for i in range(len(w)))

    def descents(self) -> list[int]:
        w = self.oneline
        return [i for i in range(1, len(w)) if w[i - 1] > w[i]]

    def swap_positions(self, q: int) -> "Permutation":
        """w * s_q: exchange the values in positions q and q+1."""
        w = list(self.oneline)
        w[q - 1], w[q] = w[q], w[q - 1]
        return Permutation(tuple(w))

    def extend(self, d: int) -> "Permutation":
        if d < len(self.oneline):
            raise ValueError("cannot shrink a permutation")
        return Permutation(self.oneline + tuple(range(len(self.oneline) + 1, d + 1)))

    def trimmed(self) -> "Permutation":
        """Drop trailing fixed points."""
        w = list(self.oneline)
        while w and w[-1] == len(w):
            w.pop()
        return Permutation(tuple(w))

    def shift(self, m: int) -> "Permutation":
        return Permutation(tuple(range(1, m + 1)) + tuple(a + m for a in self.oneline))

    def diagram(self) -> frozenset[Cell]:
        return diagram(self)

    def to_partial(self) -> "PartialPermutation":
        d = len(self.oneline)
        return PartialPermutation(d, d, frozenset((i, a) for i, a in enumerate(self.oneline, 1)))


@dataclass(frozen=True)
class PartialPermutation:
    """A k x l 0/1 matrix with at most one 1 in every row and column.

    ``ones`` holds 1-based (row, column) positions.
    """

    rows: int
    cols: int
    ones: frozenset[Cell]

    def __post_init__(self):
        object.__setattr__(self, "ones", frozenset(self.ones))
        rs = [r for r, _ in self.ones]
        cs = [c for _, c in self.ones]
        if len(set(rs)) != len(rs) or len(set(cs)) != len(cs):
            raise ValueError("two 1s share a row or a column")
        for r, c in self.ones:
            if not (1 <= r <= self.rows and 1 <= c <= self.cols):
                raise ValueError(f"entry {(r, c)} outside a {self.rows}x{self.cols} matrix")

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[int]], cols: int | None = None) -> "PartialPermutation":
        k = len(matrix)
        ell = len(matrix[0]) if k else (cols or 0)
        ones = frozenset((i + 1, j + 1) for i, row in enumerate(matrix) for j, a in enumerate(row) if a)
        return cls(k, ell, ones)

    @classmethod
    def from_map(cls, rows: int, cols: int, mapping: dict[int, int]) -> "PartialPermutation":
        return cls(rows, cols, frozenset(mapping.items()))

    def to_matrix(self) -> list[list[int]]:
        return [[1 if (i, j) in self.ones else 0 for j in range(1, self.cols + 1)] for i in range(1, self.rows + 1)]

    def as_map(self) -> dict[int, int]:
        return dict(sorted(self.ones))

    @property
    def rank(self) -> int:
        return len(self.ones)

    def length(self) -> int:
        """Number of cells with no 1 due north or due west."""
        row_of_col = {c: r for r, c in self.ones}
        col_of_row = {r: c for r, c in self.ones}
        count = 0
        for i in range(1, self.rows + 1):
            for j in range(1, self.cols + 1):
                if col_of_row.get(i, self.cols + 1) > j and row_of_col.get(j, self.rows + 1) > i:
                    count += 1
        return count

    def inversions(self) -> list[Cell]:
        row_of_col = {c: r for r, c in self.ones}
        col_of_row = {r: c for r, c in self.ones}
        return [
            (i, j)
            for i in range(1, self.rows + 1)
            for j in range(1, self.cols + 1)
            if col_of_row.get(i, self.cols + 1) > j and row_of_col.get(j, self.rows + 1) > i
        ]

    def complete(self) -> Permutation:
        """Minimal-length completion: new 1s placed from northwest to southeast.

        Empty rows receive the new columns cols+1, cols+2, ... in order, then
        empty columns receive the new rows rows+1, rows+2, ... in order.
        """
        w = dict(self.ones)
        nxt = self.cols + 1
        for i in range(1, self.rows + 1):
            if i not in w:
                w[i] = nxt
                nxt += 1
        used = set(w.values())
        row = self.rows + 1
        for j in range(1, self.cols + 1):
            if j not in used:
                w[row] = j
                row += 1
        d = len(w)
        return Permutation(tuple(w[i] for i in range(1, d + 1)))

    def compose(self, other: "PartialPermutation") -> "PartialPermutation":
        """Matrix product self * other (follow self, then other)."""
        if self.cols != other.rows:
            raise ShapeMismatch(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        nxt = dict(other.ones)
        ones = frozenset((r, nxt[c]) for r, c in self.ones if c in nxt)
        return PartialPermutation(self.rows, other.cols, ones)

    def shift(self, m: int) -> "PartialPermutation":
        ones = {(t, t) for t in range(1, m + 1)} | {(r + m, c + m) for r, c in self.ones}
        return PartialPermutation(self.rows + m, self.cols + m, frozenset(ones))

    def diagram(self) -> frozenset[Cell]:
        return diagram(self.complete())

    def __str__(self):
        return "[" + "; ".join(" ".join(map(str, row)) for row in self.to_matrix()) + "]"


def length(w: Permutation | PartialPermutation) -> int:
    return w.length()


def diagram(w: Permutation | PartialPermutation) -> frozenset[Cell]:
    """Cells (q, p) with w(q) > p and w^{-1}(p) > q."""
    if isinstance(w, PartialPermutation):
        w = w.complete()
    inv = w.inverse().oneline
    one = w.oneline
    d = len(one)
    return frozenset((q, p) for q in range(1, d + 1) for p in range(1, d + 1) if one[q - 1] > p and inv[p - 1] > q)


def code(D: Iterable[Cell]) -> tuple[int, ...]:
    """Number of cells in each row 1, 2, ..., (last nonempty row)."""
    D = list(D)
    if not D:
        return ()
    top = max(r for r, _ in D)
    counts = [0] * top
    for r, _ in D:
        counts[r - 1] += 1
    return tuple(counts)


def is_northwest(D: Iterable[Cell]) -> bool:
    cells = set(D)
    for i1, j2 in cells:
        for i2, j1 in cells:
            if i1 < i2 and j1 < j2 and (i1, j1) not in cells:
                return False
    return True


def shift(m: int, w):
    return w.shift(m)


def _rank_function(w: Permutation, d: int) -> list[list[int]]:
    one = w.extend(d).oneline
    table = [[0] * (d + 1) for _ in range(d + 1)]
    for q in range(1, d + 1):
        for p in range(1, d + 1):
            table[q][p] = table[q - 1][p] + (1 if one[q - 1] <= p else 0)
    return table


def bruhat_leq(u, w) -> bool:
    """u <= w in Bruhat order, comparing rank functions of the completions."""
    if isinstance(u, PartialPermutation) or isinstance(w, PartialPermutation):
        if not (isinstance(u, PartialPermutation) and isinstance(w, PartialPermutation)):
            raise ShapeMismatch("compare partial permutations with partial permutations")
        if (u.rows, u.cols) != (w.rows, w.cols):
            raise ShapeMismatch("partial permutations of different shapes")
        u, w = u.complete(), w.complete()
    elif len(u) != len(w):
        raise ShapeMismatch("permutations of different sizes")
    d = max(len(u), len(w))
    ru, rw = _rank_function(u, d), _rank_function(w, d)
    return all(ru[q][p] >= rw[q][p] for q in range(1, d + 1) for p in range(1, d + 1))
