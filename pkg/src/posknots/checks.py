"""Invariant suites shared by the ``verify`` command and the test-suite."""

from __future__ import annotations

from dataclasses import dataclass

from .braid import closure_info, euler_defect
from .errors import InvariantError
from .factoring import Factorization, cyclic_decomposition
from .invariants import alexander, alexander_unit_normal, knot_determinant
from .laurent import LaurentPoly
from .orbits import OrbitRecord, check_trace_formula
from .template import Template, template_stats

__all__ = ["check_factorization", "check_alexander", "verify_census", "CensusSummary"]


def check_factorization(f: Factorization) -> None:
    """Euler defect conservation per split, and primality of every emitted factor."""
    for rec in f.splits:
        if not rec.defect_conserved():
            raise InvariantError(f"c - n + 1 not conserved across {rec.kind} split of {rec.parent}")
    total = sum(euler_defect(p) for p in f.prime_factors)
    # each unknot discarded along the way is a 1-strand empty word (defect 0)
    if total != euler_defect(f.source):
        raise InvariantError(f"factor defects sum to {total}, source has {euler_defect(f.source)}")
    for p in f.prime_factors:
        counts = p.generator_counts()
        if min(counts, default=0) < 2:
            raise InvariantError(f"factor {p} is reducible")
        if cyclic_decomposition(p) is not None:
            raise InvariantError(f"factor {p} still decomposes")


def check_alexander(f: Factorization) -> LaurentPoly:
    """Alexander multiplicativity over the factorization; returns the source polynomial."""
    src = f.source
    if closure_info(src).is_knot:
        delta = alexander(src)
        if knot_determinant(delta) % 2 == 0:
            raise InvariantError(f"even knot determinant for {src}")
        product = LaurentPoly.one()
        for p in f.prime_factors:
            product = product * alexander(p)
        if product != delta:
            raise InvariantError(f"Alexander of {src} is {delta}, product of factors is {product}")
        return delta
    delta = alexander_unit_normal(src)
    product = LaurentPoly.one()
    for p in f.prime_factors:
        product = product * alexander_unit_normal(p)
    if product.unit_normal() != delta:
        raise InvariantError(f"Alexander of {src} differs from the product over its factors")
    return delta


@dataclass(frozen=True)
class CensusSummary:
    orbits: int
    max_f: int
    N: int

    @property
    def passed(self) -> bool:
        return self.max_f <= self.N

    def __str__(self) -> str:
        return f"orbits={self.orbits} maxF={self.max_f} N={self.N} {'PASS' if self.passed else 'FAIL'}"


def summarize(t: Template, records: list[OrbitRecord]) -> CensusSummary:
    return CensusSummary(
        len(records), max((r.factor_count for r in records), default=0), template_stats(t).N
    )


def verify_census(t: Template, records: list[OrbitRecord], max_period: int) -> CensusSummary:
    """Run every invariant suite over a census; raises ``InvariantError`` on failure."""
    check_trace_formula(t, [r.orbit for r in records], max_period)
    for r in records:
        try:
            check_factorization(r.factorization)
            delta = check_alexander(r.factorization)
        except InvariantError as exc:
            raise InvariantError(f"orbit {r.label}: {exc}") from exc
        if delta != r.alexander:
            raise InvariantError(f"orbit {r.label}: stored Alexander polynomial is stale")
        if 2 * r.genus != euler_defect(r.braid):
            raise InvariantError(f"orbit {r.label}: genus disagrees with braid")
    return summarize(t, records)
