"""The four quiver polynomial formulas and a harness that compares them."""

from __future__ import annotations

import hashlib
import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from .pipedreams import enumerate_rp, strip_lacing, zel_monomial
from .polyring import ZERO, Polynomial, Variable, divide_exact, ordinary, prod
from .peelfs import (
    constants_from_sequences,
    delete_hom,
    enumerate_factor_sequences,
    enumerate_peelables,
    sequence_shape,
    verify_bijection,
)
from .quivercore import RankArray, codim, crossings, lacing_key, minimal_lacings, rank_of_lacing, zelevinsky
from .symfun import ProductKind, product_over_list, schubert_factored

THREADS_ENV = "QUIVERPOLY_THREADS"


class Formula(Enum):
    RATIO = "ratio"
    PIPE = "pipe"
    COMPONENT_SCHUBERT = "component_schubert"
    COMPONENT_STANLEY = "component_stanley"
    TABLEAU_PEEL = "tableau_peel"
    TABLEAU_FS = "tableau_fs"


@dataclass
class QuiverResult:
    ranks: RankArray
    formula: Formula
    value: Polynomial
    witnesses: list = field(default_factory=list)
    double: bool = False


def _finish(value: Polynomial, double: bool) -> Polynomial:
    return value if double else ordinary(value)


def ratio_formula(r: RankArray, double: bool = False) -> QuiverResult:
    """S_{v(r)} / S_{v(Hom)} in the Zelevinsky labels.

    S_{v(r)} is produced in factored form prod(F) * G; S_{v(Hom)} is the
    product over D_Hom, so the quotient is G * prod(F - D_Hom) divided by
    prod(D_Hom - F).  The division is exact or the call fails.
    """
    z = zelevinsky(r)
    F, G = schubert_factored(z.v.oneline, True)
    rows, cols = z.row_variables(), z.col_variables()
    rename = {}
    for v in G.variables():
        rename[v] = rows[v.index - 1] if v.family == "x" else cols[v.index - 1]
    G = G.rename(rename)

    def lin(cell):
        return Polynomial.linear(rows[cell[0] - 1], cols[cell[1] - 1])

    numerator = G * prod(lin(c) for c in sorted(F - z.D_hom))
    value = divide_exact(numerator, prod(lin(c) for c in sorted(z.D_hom - F)))
    return QuiverResult(r, Formula.RATIO, _finish(value, double), [], double)


def pipe_formula(r: RankArray, double: bool = False) -> QuiverResult:
    z = zelevinsky(r)
    dreams = enumerate_rp(z.v)
    total = ZERO
    for D in dreams:
        total = total + zel_monomial(D, z)
    return QuiverResult(r, Formula.PIPE, _finish(total, double), dreams, double)


def component_formula(r: RankArray, variant: str = "schubert", double: bool = False) -> QuiverResult:
    """Sum over W(r) of Schubert or Stanley products in consecutive alphabets."""
    kind = ProductKind.SCHUBERT if variant == "schubert" else ProductKind.STANLEY
    laces = minimal_lacings(r)
    total = ZERO
    for w in laces:
        total = total + product_over_list(kind, w, r.dims, double=double)
    formula = Formula.COMPONENT_SCHUBERT if kind is ProductKind.SCHUBERT else Formula.COMPONENT_STANLEY
    return QuiverResult(r, formula, total, laces, double)


def schur_sum(constants: dict, dims, double: bool = False) -> Polynomial:
    total = ZERO
    for lams, c in constants.items():
        total = total + product_over_list(ProductKind.SCHUR, lams, dims, double=double) * c
    return total


def tableau_formula(r: RankArray, variant: str = "peel", double: bool = False) -> QuiverResult:
    if variant == "peel":
        z = zelevinsky(r)
        witnesses = enumerate_peelables(z.D_r)
        shapes = [sequence_shape(delete_hom(Q, z)) for Q in witnesses]
        constants: dict = {}
        for s in shapes:
            constants[s] = constants.get(s, 0) + 1
        formula = Formula.TABLEAU_PEEL
    else:
        witnesses = enumerate_factor_sequences(r)
        constants = constants_from_sequences(witnesses)
        formula = Formula.TABLEAU_FS
    return QuiverResult(r, formula, schur_sum(constants, r.dims, double), witnesses, double)


def compute(r: RankArray, formula: Formula, double: bool = False) -> QuiverResult:
    if formula is Formula.RATIO:
        return ratio_formula(r, double)
    if formula is Formula.PIPE:
        return pipe_formula(r, double)
    if formula is Formula.COMPONENT_SCHUBERT:
        return component_formula(r, "schubert", double)
    if formula is Formula.COMPONENT_STANLEY:
        return component_formula(r, "stanley", double)
    if formula is Formula.TABLEAU_PEEL:
        return tableau_formula(r, "peel", double)
    return tableau_formula(r, "fs", double)


# ---------------------------------------------------------------------------
# verification


def is_block_symmetric(p: Polynomial, dims, double: bool = True) -> bool:
    """Invariance under adjacent swaps inside every x block (and y block)."""
    families = ("x", "y") if double else ("x",)
    for family in families:
        for block, size in enumerate(dims):
            for k in range(1, size):
                u, v = Variable(family, block, k), Variable(family, block, k + 1)
                if p.rename({u: v, v: u}) != p:
                    return False
    return True


def polynomial_hash(p: Polynomial) -> str:
    text = json.dumps(p.to_json(), separators=(",", ":"))
    return hashlib.sha256(text.encode()).hexdigest()[:16]


def _threads() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


@dataclass
class Report:
    ranks: RankArray
    degree: int
    codim: int
    results: dict
    checks: dict
    counts: dict

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict[str, Any]:
        return {
            "dims": list(self.ranks.dims),
            "codim": self.codim,
            "degree": self.degree,
            "formulas": {
                f.value: {"hash": polynomial_hash(res.value), "degree": res.value.degree(), "witnesses": len(res.witnesses)}
                for f, res in self.results.items()
            },
            "counts": self.counts,
            "checks": self.checks,
            "ok": self.ok,
        }


def verify_all(r: RankArray, double: bool = False, buch_shift: int = 0) -> Report:
    """Run every formula and the witness-level identities.

    With ``double`` the comparisons use the double forms (the Schubert
    component sum is then excluded, since it differs from the double
    quiver polynomial in general).  ``buch_shift`` > 0 additionally records
    whether the tableau constants for m + r agree with those for r; that
    entry is informational and never fails the report.
    """
    d = codim(r)
    formulas = list(Formula)
    with ThreadPoolExecutor(max_workers=_threads()) as pool:
        futures = {f: pool.submit(compute, r, f, double) for f in formulas}
        results = {f: fut.result() for f, fut in futures.items()}
    reference = results[Formula.RATIO].value
    checks: dict[str, bool] = {}
    for f, res in results.items():
        if f is Formula.RATIO:
            continue
        if double and f is Formula.COMPONENT_SCHUBERT:
            continue
        checks[f"{f.value} == ratio"] = res.value == reference
    checks["degree == d(r)"] = reference.is_zero() is False and reference.is_homogeneous() and reference.degree() == d
    z = zelevinsky(r)
    laces = results[Formula.COMPONENT_SCHUBERT].witnesses
    strip = {lacing_key(strip_lacing(D, z)) for D in results[Formula.PIPE].witnesses}
    checks["strip lacings == W(r)"] = strip == {lacing_key(w) for w in laces}
    checks["every lacing has d(r) crossings and ranks r"] = all(
        crossings(w) == d and rank_of_lacing(w) == r for w in laces
    )
    checks["every dream contains D_Hom"] = all(z.D_hom <= D for D in results[Formula.PIPE].witnesses)
    checks["symmetric within each block alphabet"] = is_block_symmetric(reference, r.dims, double)
    dreams = results[Formula.PIPE].witnesses
    reversed_sum = _finish(sum((zel_monomial(D, z, reversed_=True) for D in dreams), ZERO), double)
    checks["reverse monomials sum to the same polynomial"] = reversed_sum == reference
    if double and len(laces) > 1:
        # the Schubert product sum is right only after y = x
        schub = results[Formula.COMPONENT_SCHUBERT].value
        checks["double Schubert component sum differs"] = schub != reference
        checks["Schubert component sum agrees after y = x"] = ordinary(schub) == ordinary(reference)
    bij = verify_bijection(r, raise_on_failure=False)
    checks["Psi_r bijection"] = bij.ok
    counts = {
        "W(r)": len(laces),
        "RP(v(r))": len(results[Formula.PIPE].witnesses),
        "Peel(D_r)": len(results[Formula.TABLEAU_PEEL].witnesses),
        "factor sequences": len(results[Formula.TABLEAU_FS].witnesses),
    }
    checks["|Peel| == |factor sequences|"] = counts["Peel(D_r)"] == counts["factor sequences"]
    if buch_shift:
        from .peelfs import quiver_constants
        from .quivercore import shift_ranks

        counts["buch_shift_constants_match"] = quiver_constants(shift_ranks(buch_shift, r)) == quiver_constants(r)
    return Report(r, reference.degree() if not reference.is_zero() else 0, d, results, checks, counts)
