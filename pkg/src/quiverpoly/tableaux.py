"""Semistandard tableaux: words, insertion, jeu de taquin and keys.

A tableau is a tuple of rows, each a tuple of positive integers, rows
weakly increasing and columns strictly increasing.  Skew tableaux are
dicts mapping 1-based (row, column) cells to entries.

Column reading words read every column from bottom to top, columns
taken left to right.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import product as _cartesian
from typing import Iterable, Iterator, Sequence

from .errors import IncompatibleStrip

Tableau = tuple  # tuple[tuple[int, ...], ...]
EMPTY: Tableau = ()


def make(rows: Iterable[Iterable[int]]) -> Tableau:
    return tuple(tuple(r) for r in rows if len(tuple(r)))


def shape(t: Tableau) -> tuple[int, ...]:
    return tuple(len(r) for r in t)


def size(t: Tableau) -> int:
    return sum(len(r) for r in t)


def conjugate(lam: Sequence[int]) -> tuple[int, ...]:
    if not lam or lam[0] == 0:
        return ()
    return tuple(sum(1 for a in lam if a > c) for c in range(lam[0]))


def is_partition(lam: Sequence[int]) -> bool:
    return all(lam[i] >= lam[i + 1] for i in range(len(lam) - 1)) and all(a > 0 for a in lam)


def is_semistandard(t: Tableau) -> bool:
    if not is_partition(shape(t)):
        return False
    for r, row in enumerate(t):
        if any(a < 1 for a in row):
            return False
        if any(row[c] > row[c + 1] for c in range(len(row) - 1)):
            return False
        if r and any(t[r - 1][c] >= row[c] for c in range(len(row))):
            return False
    return True


def columns(t: Tableau) -> list[tuple[int, ...]]:
    """Columns of t, each listed top to bottom."""
    if not t:
        return []
    return [tuple(row[c] for row in t if len(row) > c) for c in range(len(t[0]))]


def from_columns(cols: Sequence[Sequence[int]]) -> Tableau:
    cols = [tuple(c) for c in cols if len(c)]
    if not cols:
        return EMPTY
    height = max(len(c) for c in cols)
    return tuple(tuple(c[r] for c in cols if len(c) > r) for r in range(height))


def column_word(t: Tableau) -> tuple[int, ...]:
    word: list[int] = []
    for col in columns(t):
        word.extend(reversed(col))
    return tuple(word)


def row_word(t: Tableau) -> tuple[int, ...]:
    """Rows read left to right, from the bottom row up."""
    word: list[int] = []
    for row in reversed(t):
        word.extend(row)
    return tuple(word)


def weight(t_or_word) -> tuple[int, ...]:
    letters = [a for row in t_or_word for a in row] if _is_tableau(t_or_word) else list(t_or_word)
    if not letters:
        return ()
    counts = Counter(letters)
    return tuple(counts.get(k, 0) for k in range(1, max(letters) + 1))


def _is_tableau(obj) -> bool:
    return bool(obj) and isinstance(obj[0], tuple)


def letters(t: Tableau) -> Counter:
    return Counter(a for row in t for a in row)


# ---------------------------------------------------------------------------
# insertion


def row_insert(t: Tableau, x: int) -> Tableau:
    rows = [list(r) for r in t]
    for row in rows:
        # leftmost entry strictly greater than x gets bumped
        lo, hi = 0, len(row)
        while lo < hi:
            mid = (lo + hi) // 2
            if row[mid] > x:
                hi = mid
            else:
                lo = mid + 1
        if lo == len(row):
            row.append(x)
            return tuple(tuple(r) for r in rows)
        row[lo], x = x, row[lo]
    rows.append([x])
    return tuple(tuple(r) for r in rows)


@lru_cache(maxsize=200_000)
def rectify(word: tuple[int, ...]) -> Tableau:
    """[u]: the unique tableau Knuth-equivalent to the word u."""
    rows: list[list[int]] = []
    for x in word:
        for row in rows:
            lo, hi = 0, len(row)
            while lo < hi:
                mid = (lo + hi) // 2
                if row[mid] > x:
                    hi = mid
                else:
                    lo = mid + 1
            if lo == len(row):
                row.append(x)
                break
            row[lo], x = x, row[lo]
        else:
            rows.append([x])
    return tuple(tuple(r) for r in rows)


def product(*tabs: Tableau) -> Tableau:
    """The tableau product [t1 t2 ...]."""
    word: list[int] = []
    for t in tabs:
        word.extend(column_word(t))
    return rectify(tuple(word))


def restrict(u, interval: Iterable[int]) -> Tableau:
    """[u]_I: erase letters outside I and rectify."""
    keep = set(interval)
    word = column_word(u) if _is_tableau(u) or u == () else tuple(u)
    return rectify(tuple(a for a in word if a in keep))


def knuth_moves(word: Sequence[int]) -> list[tuple[int, ...]]:
    """All words one elementary Knuth relation away from ``word``."""
    w = tuple(word)
    out = []
    for k in range(len(w) - 2):
        x, y, z = w[k : k + 3]
        # acb ~ cab  (a <= b < c)
        if x <= z < y:
            out.append(w[:k] + (y, x, z) + w[k + 3 :])
        if y <= z < x:
            out.append(w[:k] + (y, x, z) + w[k + 3 :])
        # bac ~ bca  (a < b <= c)
        if y < x <= z:
            out.append(w[:k] + (x, z, y) + w[k + 3 :])
        if z < x <= y:
            out.append(w[:k] + (x, z, y) + w[k + 3 :])
    return out


# ---------------------------------------------------------------------------
# skew tableaux and jeu de taquin


def to_cells(t: Tableau) -> dict[tuple[int, int], int]:
    return {(r + 1, c + 1): a for r, row in enumerate(t) for c, a in enumerate(row)}


def skew_column_word(cells: dict[tuple[int, int], int]) -> tuple[int, ...]:
    word: list[int] = []
    for c in sorted({c for _, c in cells}):
        rows = sorted((r for r, cc in cells if cc == c), reverse=True)
        word.extend(cells[(r, c)] for r in rows)
    return tuple(word)


def reverse_slide(cells: dict[tuple[int, int], int], hole: tuple[int, int]) -> tuple[int, int]:
    """Slide the entries of a skew tableau into the outer cell ``hole``.

    Mutates ``cells`` and returns the inner cell that ends up vacated.
    """
    r, c = hole
    if hole in cells:
        raise IncompatibleStrip(f"cell {hole} is occupied")
    while True:
        up = cells.get((r - 1, c))
        left = cells.get((r, c - 1))
        if up is None and left is None:
            return (r, c)
        if left is None or (up is not None and up >= left):
            cells[(r, c)] = up
            del cells[(r - 1, c)]
            r -= 1
        else:
            cells[(r, c)] = left
            del cells[(r, c - 1)]
            c -= 1


def vertical_strips(lam: Sequence[int], p: int) -> Iterator[list[tuple[int, int]]]:
    """Vertical strips V of size p such that lam + V is a partition.

    Each strip is listed top to bottom.
    """
    lam = list(lam)
    rows = len(lam) + p

    def rec(r: int, left: int, prev_added: bool):
        # r: current 0-based row; prev_added: whether row r-1 received a cell
        if left == 0:
            yield []
            return
        if r >= rows:
            return
        cur = lam[r] if r < len(lam) else 0
        prev = lam[r - 1] if 0 < r <= len(lam) else 0
        above = prev + (1 if prev_added else 0) if r > 0 else None
        # option: add a cell at (r, cur)
        if above is None or cur + 1 <= above:
            for rest in rec(r + 1, left - 1, True):
                yield [(r + 1, cur + 1)] + rest
        # option: skip this row (only useful while rows remain nonempty or later)
        if r < len(lam):
            yield from rec(r + 1, left, False)

    yield from rec(0, p, False)


def unpeel_step(t: Tableau, strip: Sequence[tuple[int, int]], column: Sequence[int]) -> Tableau | None:
    """Undo one peeling step.

    Slide t into the cells of ``strip`` (topmost first); the vacated cells
    must be the top len(strip) cells of column 1, where ``column`` is then
    placed.  Returns None when the outcome is not semistandard.
    """
    p = len(strip)
    if p != len(column):
        raise IncompatibleStrip("strip and column differ in length")
    lam = shape(t)
    new = list(lam)
    for r, c in strip:
        while len(new) < r:
            new.append(0)
        if new[r - 1] + 1 != c:
            raise IncompatibleStrip(f"{strip} is not a vertical strip on {lam}")
        new[r - 1] = c
    if any(new[i] < new[i + 1] for i in range(len(new) - 1)):
        raise IncompatibleStrip(f"{strip} does not extend {lam} to a partition")
    cells = to_cells(t)
    vacated = set()
    for cell in sorted(strip):
        vacated.add(reverse_slide(cells, cell))
    if vacated != {(k, 1) for k in range(1, p + 1)}:
        return None
    for k, a in enumerate(sorted(column), start=1):
        cells[(k, 1)] = a
    height = max(r for r, _ in cells)
    rows = tuple(tuple(cells[(r, c)] for c in range(1, 1 + sum(1 for rr, _ in cells if rr == r))) for r in range(1, height + 1))
    return rows if is_semistandard(rows) else None


def jdt_slide(t: Tableau, strip: Sequence[tuple[int, int]], column: Sequence[int] = ()) -> Tableau | None:
    """Alias kept for the public API: see :func:`unpeel_step`."""
    if not strip:
        return t
    return unpeel_step(t, strip, column)


def peel_column(q: Tableau, column: Sequence[int]) -> Tableau | None:
    """[Q - C] when the first column of Q starts with ``column``; else None."""
    column = sorted(column)
    p = len(column)
    first = [row[0] for row in q]
    if first[:p] != column:
        return None
    cells = to_cells(q)
    for k in range(1, p + 1):
        del cells[(k, 1)]
    return rectify(skew_column_word(cells))


# ---------------------------------------------------------------------------
# keys


def key_tableau(beta: Sequence[int]) -> Tableau:
    """key(beta): shape beta sorted decreasingly, weight beta."""
    beta = list(beta)
    if not any(beta):
        return EMPTY
    top = max(beta)
    cols = [tuple(i + 1 for i, b in enumerate(beta) if b > c) for c in range(top)]
    return from_columns(cols)


def is_key(t: Tableau) -> bool:
    cols = [set(c) for c in columns(t)]
    return all(cols[k + 1] <= cols[k] for k in range(len(cols) - 1))


def _antinormal_columns(word: Sequence[int]) -> list[tuple[int, ...]]:
    """Columns (left to right, top to bottom) of the antinormal tableau
    Knuth-equivalent to ``word``; their lengths increase to the right."""
    if not word:
        return []
    big = max(word) + 1
    flipped = tuple(big - a for a in reversed(word))
    cols = columns(rectify(flipped))
    return [tuple(sorted(big - a for a in col)) for col in reversed(cols)]


def _word_of_columns(cols: Sequence[Sequence[int]]) -> tuple[int, ...]:
    word: list[int] = []
    for col in cols:
        word.extend(sorted(col, reverse=True))
    return tuple(word)


def left_key(t: Tableau) -> Tableau:
    """K_-(t): column j is the first factor of a frank word whose first
    factor has the length of column j of t."""
    cols = columns(t)
    out = []
    for j in range(1, len(cols) + 1):
        anti = _antinormal_columns(_word_of_columns(cols[:j]))
        out.append(anti[0])
    return from_columns(out)


def right_key(t: Tableau) -> Tableau:
    """K_+(t): column j is the last factor of a frank word whose last
    factor has the length of column j of t."""
    cols = columns(t)
    out = []
    for j in range(len(cols)):
        anti = _antinormal_columns(_word_of_columns(cols[j:]))
        out.append(anti[-1])
    return from_columns(out)


# ---------------------------------------------------------------------------
# enumeration


def _horizontal_strips(lam: list[int], k: int) -> Iterator[list[int]]:
    """Shapes mu containing lam with mu/lam a horizontal strip of size k."""
    rows = len(lam) + 1
    ext = lam + [0]

    def rec(r: int, left: int, acc: list[int]):
        if r == rows:
            if left == 0:
                yield [a for a in acc if a]
            return
        cap = left if r == 0 else min(left, ext[r - 1] - ext[r])
        for a in range(cap, -1, -1):
            yield from rec(r + 1, left - a, acc + [ext[r] + a])

    yield from rec(0, k, [])


def tableaux_of_content(content: Sequence[int]) -> list[Tableau]:
    """All semistandard tableaux with the given weight."""
    return list(_tableaux_of_content(tuple(content)))


@lru_cache(maxsize=50_000)
def _tableaux_of_content(content: tuple[int, ...]) -> tuple[Tableau, ...]:
    results: list[Tableau] = [EMPTY]
    for letter, k in enumerate(content, start=1):
        if not k:
            continue
        nxt = []
        for t in results:
            lam = list(shape(t))
            for mu in _horizontal_strips(lam, k):
                rows = [list(r) for r in t]
                for r, m in enumerate(mu):
                    if r >= len(rows):
                        rows.append([])
                    rows[r].extend([letter] * (m - len(rows[r])))
                nxt.append(tuple(tuple(r) for r in rows))
        results = nxt
    return tuple(results)


def all_tableaux(max_cells: int, max_entry: int) -> list[Tableau]:
    """Every semistandard tableau with at most max_cells cells and entries <= max_entry."""
    out = []
    for total in range(max_cells + 1):
        for content in _compositions(total, max_entry):
            out.extend(tableaux_of_content(content))
    return out


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    for a in range(total + 1):
        for rest in _compositions(total - a, parts - 1):
            yield (a,) + rest


def factorizations(u: Tableau) -> list[tuple[Tableau, Tableau]]:
    """All pairs (P, Q) of tableaux with [P Q] = u."""
    return list(_factorizations(u))


@lru_cache(maxsize=20_000)
def _factorizations(u: Tableau) -> tuple[tuple[Tableau, Tableau], ...]:
    content = weight(u) if u else ()
    out = []
    for split in _cartesian(*[range(c + 1) for c in content]):
        rest = tuple(c - s for c, s in zip(content, split))
        for p in _tableaux_of_content(tuple(split)):
            wp = column_word(p)
            for q in _tableaux_of_content(rest):
                if rectify(wp + column_word(q)) == u:
                    out.append((p, q))
    return tuple(sorted(out))


def render(t: Tableau) -> str:
    if not t:
        return "(empty)"
    width = max(len(str(a)) for row in t for a in row)
    return "\n".join(" ".join(str(a).rjust(width) for a in row) for row in t)
