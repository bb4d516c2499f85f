"""Sparse multivariate polynomials with exact integer coefficients.

Variables come in two families, ``x`` and ``y``, each split into blocks
(one block per vertex of the quiver).  A monomial is a sorted tuple of
``(Variable, exponent)`` pairs; a polynomial maps monomials to nonzero
integers.  Terms are ordered graded-lexicographically with respect to the
order of the variables, which is lexicographic on (family, block, index).
"""

from __future__ import annotations

import heapq
from enum import Enum
from types import MappingProxyType
from typing import Iterable, Mapping, NamedTuple, Sequence

from .errors import NotDivisible

X = "x"
Y = "y"
_FAMILY_RANK = {X: 0, Y: 1}


class Variable(NamedTuple):
    family: str
    block: int
    index: int

    def __str__(self):
        return f"{self.family}{self.block}_{self.index}"

    def alias(self):
        # a, b, c, ... for the x alphabets; A, B, C, ... for the y alphabets
        letter = chr(ord("a") + self.block)
        if self.family == Y:
            letter = letter.upper()
        return f"{letter}{self.index}"


def xvar(index: int, block: int = 0) -> Variable:
    return Variable(X, block, index)


def yvar(index: int, block: int = 0) -> Variable:
    return Variable(Y, block, index)


def parse_variable(text: str) -> Variable:
    """Inverse of ``str(Variable)``: ``"x2_3"`` -> Variable("x", 2, 3)."""
    family, rest = text[0], text[1:]
    if family not in _FAMILY_RANK:
        raise ValueError(f"bad variable name {text!r}")
    block, index = rest.split("_")
    return Variable(family, int(block), int(index))


Monomial = tuple  # tuple[tuple[Variable, int], ...]

ONE_MONOMIAL: Monomial = ()


def monomial(exponents: Mapping[Variable, int] | Iterable[tuple[Variable, int]]) -> Monomial:
    items = exponents.items() if isinstance(exponents, Mapping) else exponents
    acc: dict[Variable, int] = {}
    for v, e in items:
        if e < 0:
            raise ValueError("negative exponent")
        if e:
            acc[v] = acc.get(v, 0) + e
    return tuple(sorted(acc.items()))


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    acc = dict(a)
    for v, e in b:
        acc[v] = acc.get(v, 0) + e
    return tuple(sorted(acc.items()))


def _mono_div(a: Monomial, b: Monomial):
    """a / b as a monomial, or None when b does not divide a."""
    acc = dict(a)
    for v, e in b:
        have = acc.get(v, 0)
        if have < e:
            return None
        if have == e:
            del acc[v]
        else:
            acc[v] = have - e
    return tuple(sorted(acc.items()))


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


_SENTINEL = (9, 0, 0, 0)


def order_key(m: Monomial):
    """Sort key: ascending key order is descending graded-lex order."""
    parts = tuple((_FAMILY_RANK[v.family], v.block, v.index, -e) for v, e in m)
    return (-mono_degree(m), parts + (_SENTINEL,))


class Polynomial:
    """Immutable polynomial with integer coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        clean: dict[Monomial, int] = {}
        if terms:
            for m, c in terms.items():
                if c:
                    clean[m] = clean.get(m, 0) + c
            clean = {m: c for m, c in clean.items() if c}
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "Polynomial":
        # trusted constructor: terms already canonical
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, c: int) -> "Polynomial":
        return cls._raw({ONE_MONOMIAL: c} if c else {})

    @classmethod
    def var(cls, v: Variable, power: int = 1) -> "Polynomial":
        return cls._raw({((v, power),) if power else (): 1})

    @classmethod
    def linear(cls, xv: Variable | None, yv: Variable | None) -> "Polynomial":
        """The weight x - y; either side may be None (meaning zero)."""
        terms = {}
        if xv is not None:
            terms[((xv, 1),)] = 1
        if yv is not None:
            m = ((yv, 1),)
            terms[m] = terms.get(m, 0) - 1
        return cls(terms)

    # -- basic protocol ---------------------------------------------------

    @property
    def terms(self) -> Mapping[Monomial, int]:
        return MappingProxyType(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        return f"Polynomial({self.render()!r})"

    def __str__(self):
        return self.render()

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, int):
            return Polynomial.constant(other)
        if isinstance(other, Variable):
            return Polynomial.var(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(other._terms) > len(self._terms):
            a, b = other._terms, self._terms
        else:
            a, b = self._terms, other._terms
        out: dict[Monomial, int] = {}
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = _mono_mul(ma, mb)
                s = out.get(m, 0) + ca * cb
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Polynomial._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- inspection -------------------------------------------------------

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((mono_degree(m) for m in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({mono_degree(m) for m in self._terms}) <= 1

    def variables(self) -> set[Variable]:
        return {v for m in self._terms for v, _ in m}

    def coefficient(self, m: Monomial) -> int:
        return self._terms.get(m, 0)

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(self._terms.items(), key=lambda t: order_key(t[0]))

    def leading_term(self) -> tuple[Monomial, int]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        m = min(self._terms, key=order_key)
        return m, self._terms[m]

    def evaluate(self, values: Mapping[Variable, int]) -> int:
        total = 0
        for m, c in self._terms.items():
            t = c
            for v, e in m:
                t *= values[v] ** e
            total += t
        return total

    # -- substitution -----------------------------------------------------

    def substitute(self, mapping: Mapping[Variable, "Polynomial | int | Variable"]) -> "Polynomial":
        """Replace variables by polynomials (variables not listed are kept)."""
        images = {v: Polynomial._coerce(p) for v, p in mapping.items()}
        # fast path: every image is a single monomial with coefficient +-1 or 0
        out = Polynomial.constant(0)
        cache: dict = {}
        for m, c in self._terms.items():
            term = Polynomial._raw({(): c})
            kept = []
            for v, e in m:
                if v in images:
                    key = (v, e)
                    if key not in cache:
                        cache[key] = images[v] ** e
                    term = term * cache[key]
                    if term.is_zero():
                        break
                else:
                    kept.append((v, e))
            if term.is_zero():
                continue
            if kept:
                term = term * Polynomial._raw({tuple(kept): 1})
            out = out + term
        return out

    def rename(self, mapping: Mapping[Variable, Variable | None]) -> "Polynomial":
        """Substitute variables by variables (or by 0 when mapped to None)."""
        out: dict[Monomial, int] = {}
        for m, c in self._terms.items():
            acc: dict[Variable, int] = {}
            dead = False
            for v, e in m:
                w = mapping.get(v, v)
                if w is None:
                    dead = True
                    break
                acc[w] = acc.get(w, 0) + e
            if dead:
                continue
            nm = tuple(sorted(acc.items()))
            s = out.get(nm, 0) + c
            if s:
                out[nm] = s
            else:
                out.pop(nm, None)
        return Polynomial._raw(out)

    # -- rendering --------------------------------------------------------

    def render(self, aliases: bool = False) -> str:
        if not self._terms:
            return "0"
        name = Variable.alias if aliases else Variable.__str__
        pieces = []
        for m, c in self.sorted_terms():
            factors = [name(v) if e == 1 else f"{name(v)}^{e}" for v, e in m]
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = f"{mag}*" + "*".join(factors)
            pieces.append(("-" if c < 0 else "+", body))
        sign, body = pieces[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def to_json(self) -> list:
        """Deterministic JSON form: [[[["x0_1", 2], ...], coeff], ...]."""
        return [[[[str(v), e] for v, e in m], c] for m, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data) -> "Polynomial":
        return cls({monomial((parse_variable(v), e) for v, e in m): c for m, c in data})

    # -- dense conversion used by the heavier engines -----------------------

    def to_dense(self, variables: Sequence[Variable]) -> dict[tuple[int, ...], int]:
        pos = {v: k for k, v in enumerate(variables)}
        n = len(variables)
        out = {}
        for m, c in self._terms.items():
            e = [0] * n
            for v, k in m:
                e[pos[v]] = k
            out[tuple(e)] = c
        return out

    @classmethod
    def from_dense(cls, dense: Mapping[tuple[int, ...], int], variables: Sequence[Variable]) -> "Polynomial":
        # distinct variables may still collide after sorting only if repeated
        out = {}
        for e, c in dense.items():
            if c:
                m = tuple(sorted((variables[k], a) for k, a in enumerate(e) if a))
                out[m] = out.get(m, 0) + c
        return cls(out)


ZERO = Polynomial.constant(0)
ONE = Polynomial.constant(1)


def prod(factors: Iterable[Polynomial]) -> Polynomial:
    result = ONE
    for f in factors:
        result = result * f
    return result


# ---------------------------------------------------------------------------
# division


def divide_exact(p: Polynomial, q: Polynomial) -> Polynomial:
    """Return h with h*q == p, or raise NotDivisible.

    Multivariate reduction by the leading term of q.  When q divides p the
    leading term of the running remainder is always divisible by lt(q), so
    the first failure proves that no exact quotient exists.
    """
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    lt_m, lt_c = q.leading_term()
    qterms = list(q._terms.items())
    rem = dict(p._terms)
    quo: dict[Monomial, int] = {}
    heap = [(order_key(m), m) for m in rem]
    heapq.heapify(heap)
    while heap:
        _, m = heapq.heappop(heap)
        c = rem.get(m)
        if not c:
            continue
        t = _mono_div(m, lt_m)
        if t is None or c % lt_c:
            raise NotDivisible(f"{q.render()} does not divide the dividend")
        k = c // lt_c
        quo[t] = quo.get(t, 0) + k
        for qm, qc in qterms:
            mm = _mono_mul(t, qm)
            new = rem.get(mm, 0) - k * qc
            if new:
                if mm not in rem:
                    heapq.heappush(heap, (order_key(mm), mm))
                rem[mm] = new
            else:
                rem.pop(mm, None)
    return Polynomial(quo)


def divide_by_product(p: Polynomial, factors: Iterable[Polynomial]) -> Polynomial:
    """Divide by a product one factor at a time."""
    for f in factors:
        p = divide_exact(p, f)
    return p


# ---------------------------------------------------------------------------
# divided differences


def flat_x_alphabet(size: int, block: int = 0) -> list[Variable]:
    return [xvar(k, block) for k in range(1, size + 1)]


def _adjacent(i: int, alphabet: Sequence[Variable] | None) -> tuple[Variable, Variable]:
    if i < 1:
        raise ValueError("divided differences are indexed from 1")
    if alphabet is None:
        return xvar(i), xvar(i + 1)
    if i >= len(alphabet):
        raise ValueError(f"position {i} has no right neighbour in the alphabet")
    return alphabet[i - 1], alphabet[i]


def divided_difference(i: int, p: Polynomial, alphabet: Sequence[Variable] | None = None) -> Polynomial:
    """(p - s_i p) / (x_i - x_{i+1}), computed monomial by monomial."""
    u, v = _adjacent(i, alphabet)
    out: dict[Monomial, int] = {}
    for m, c in p._terms.items():
        rest = []
        a = b = 0
        for w, e in m:
            if w == u:
                a = e
            elif w == v:
                b = e
            else:
                rest.append((w, e))
        if a == b:
            continue
        sign = 1
        if a < b:
            a, b, sign = b, a, -1
        # (u^a v^b - u^b v^a)/(u - v) = sum_k u^(a-1-k) v^(b+k)
        for k in range(a - b):
            extra = []
            if a - 1 - k:
                extra.append((u, a - 1 - k))
            if b + k:
                extra.append((v, b + k))
            nm = tuple(sorted(rest + extra))
            s = out.get(nm, 0) + sign * c
            if s:
                out[nm] = s
            else:
                out.pop(nm, None)
    return Polynomial._raw(out)


def demazure_operator(i: int, p: Polynomial, alphabet: Sequence[Variable] | None = None) -> Polynomial:
    """Isobaric divided difference pi_i f = d_i(x_i f)."""
    u, _ = _adjacent(i, alphabet)
    return divided_difference(i, Polynomial.var(u) * p, alphabet)


def swap_adjacent(i: int, p: Polynomial, alphabet: Sequence[Variable] | None = None) -> Polynomial:
    """The transposition s_i acting on the x variables."""
    u, v = _adjacent(i, alphabet)
    return p.rename({u: v, v: u})


# ---------------------------------------------------------------------------
# specialization


class Specialization(Enum):
    Y_TO_X_SAME_BLOCK = "y_to_x"
    Y_TO_ZERO = "y_to_zero"
    TRUNCATE = "truncate"


def specialize(p: Polynomial, rule: Specialization, sizes: Sequence[int] | Mapping | None = None) -> Polynomial:
    """Apply one of the standard substitutions.

    For TRUNCATE, ``sizes`` is either a sequence of block sizes (used for
    both families) or a mapping ``(family, block) -> size``; every variable
    whose index exceeds its block size is set to zero.
    """
    mapping: dict[Variable, Variable | None] = {}
    for v in p.variables():
        if rule is Specialization.Y_TO_X_SAME_BLOCK:
            if v.family == Y:
                mapping[v] = Variable(X, v.block, v.index)
        elif rule is Specialization.Y_TO_ZERO:
            if v.family == Y:
                mapping[v] = None
        elif rule is Specialization.TRUNCATE:
            if sizes is None:
                raise ValueError("TRUNCATE needs block sizes")
            if isinstance(sizes, Mapping):
                limit = sizes.get((v.family, v.block), 0)
            else:
                limit = sizes[v.block] if v.block < len(sizes) else 0
            if limit < 0:
                raise ValueError("negative truncation size")
            if v.index > limit:
                mapping[v] = None
        else:  # pragma: no cover
            raise ValueError(rule)
    return p.rename(mapping)


def ordinary(p: Polynomial) -> Polynomial:
    """Shorthand for the y = x specialization within each block."""
    return specialize(p, Specialization.Y_TO_X_SAME_BLOCK)
