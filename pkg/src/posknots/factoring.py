"""Prime factorization of positive braid closures.

A positive braid whose diagram has no cut points is prime exactly when no
cyclic rotation of its word splits into a block of low generators followed by
a block of high generators.  Cut points (generators occurring once) are
removed first; each split is a connected sum.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

from .braid import BraidWord, canonical_rotation, closure_info, euler_defect
from .errors import ContractError, InvariantError, NotAKnotError

__all__ = [
    "SplitPoint",
    "SplitRecord",
    "Factorization",
    "cyclic_decomposition",
    "split_threshold",
    "split_single_occurrence",
    "factorize",
    "is_prime_word",
]


@dataclass(frozen=True, order=True)
class SplitPoint:
    """``rotation``: left rotation applied first; high block starts at 1-based ``q``."""

    rotation: int
    r: int
    q: int


@dataclass(frozen=True)
class SplitRecord:
    kind: Literal["threshold", "single"]
    parent: BraidWord
    children: tuple[BraidWord, BraidWord]

    def defect_conserved(self) -> bool:
        lo, hi = self.children
        return euler_defect(self.parent) == euler_defect(lo) + euler_defect(hi)


@dataclass(frozen=True)
class Factorization:
    source: BraidWord
    prime_factors: tuple[BraidWord, ...]
    splits: tuple[SplitRecord, ...] = field(default=(), repr=False, compare=False)

    @property
    def factor_count(self) -> int:
        return len(self.prime_factors)

    @property
    def is_unknot(self) -> bool:
        return not self.prime_factors

    @property
    def is_prime(self) -> bool:
        return len(self.prime_factors) == 1


def _require_all_generators(b: BraidWord, minimum: int) -> list[int]:
    counts = b.generator_counts()
    for g, c in enumerate(counts, start=1):
        if c < minimum:
            raise ContractError(
                f"generator {g} occurs {c} times in {b}; need at least {minimum}"
            )
    return counts


def cyclic_decomposition(b: BraidWord) -> SplitPoint | None:
    """Least ``(rotation, r, q)`` splitting a rotation of ``b`` into low then high blocks.

    Requires every generator to occur at least twice.  ``None`` means no
    rotation decomposes, i.e. the closure is prime.
    """
    _require_all_generators(b, 2)
    word = b.letters
    p = len(word)
    for rot in range(p):
        w = word[rot:] + word[:rot]
        for r in range(2, b.strands):
            q = next((i for i, x in enumerate(w) if x >= r), p)
            if q == 0 or q == p:
                continue
            if all(x >= r for x in w[q:]):
                return SplitPoint(rot, r, q + 1)
    return None


def split_threshold(b: BraidWord, s: SplitPoint) -> tuple[BraidWord, BraidWord]:
    w = b.rotate(s.rotation).letters
    cut = s.q - 1
    low, high = w[:cut], w[cut:]
    if not low or not high or max(low) >= s.r or min(high) < s.r:
        raise ContractError(f"{s} is not a valid split of {b}")
    shift = s.r - 1
    return (
        BraidWord(s.r, low),
        BraidWord(b.strands - shift, tuple(x - shift for x in high)),
    )


def split_single_occurrence(b: BraidWord, g: int) -> tuple[BraidWord, BraidWord]:
    """Cut the diagram at the lone crossing of generator ``g``.

    When ``g`` is the top generator the high part is the empty word on one
    strand, which is Markov destabilization.
    """
    n = b.letters.count(g)
    if n != 1:
        raise ContractError(f"generator {g} occurs {n} times in {b}, expected exactly 1")
    low = tuple(x for x in b.letters if x < g)
    high = tuple(x - g for x in b.letters if x > g)
    return BraidWord(g, low), BraidWord(b.strands - g, high)


def _check_split(rec: SplitRecord, knot_mode: bool) -> None:
    lo, hi = rec.children
    parent = euler_defect(rec.parent)
    total = euler_defect(lo) + euler_defect(hi)
    if rec.kind == "threshold":
        ok = len(rec.parent) == len(lo) + len(hi) and rec.parent.strands == lo.strands + hi.strands - 1
    else:
        ok = len(rec.parent) == len(lo) + len(hi) + 1 and rec.parent.strands == lo.strands + hi.strands
    if not ok or parent != total:
        raise InvariantError(f"Euler defect not conserved across {rec.kind} split of {rec.parent}")
    if knot_mode:
        for child in rec.children:
            if not closure_info(child).is_knot:
                raise InvariantError(f"split of {rec.parent} produced non-knot factor {child}")


def _sort_key(b: BraidWord) -> tuple:
    return (b.strands, len(b.letters), b.letters)


def factorize(b: BraidWord, *, require_knot: bool = True) -> Factorization:
    """Factor the closure of a positive braid into prime positive braids.

    With ``require_knot=False`` non-split links (every generator present) are
    accepted as well; factors may then be links.
    """
    info = closure_info(b)
    if require_knot and not info.is_knot:
        raise NotAKnotError(f"closure has {info.components} components", info.components)
    if 0 in b.generator_counts():
        raise NotAKnotError(
            f"closure is split: generator {b.generator_counts().index(0) + 1} never occurs "
            f"(closure has {info.components} components)",
            info.components,
        )

    primes: list[BraidWord] = []
    splits: list[SplitRecord] = []
    stack = [b]
    while stack:
        w = stack.pop()
        if w.strands == 1:
            continue
        counts = w.generator_counts()
        if 0 in counts:
            raise InvariantError(f"intermediate word {w} lost generator {counts.index(0) + 1}")
        if 1 in counts:
            g = counts.index(1) + 1
            rec = SplitRecord("single", w, split_single_occurrence(w, g))
        else:
            sp = cyclic_decomposition(w)
            if sp is None:
                primes.append(canonical_rotation(w))
                continue
            rec = SplitRecord("threshold", w, split_threshold(w, sp))
        _check_split(rec, require_knot)
        splits.append(rec)
        stack.extend(reversed(rec.children))

    primes.sort(key=_sort_key)
    return Factorization(b, tuple(primes), tuple(splits))


def is_prime_word(b: BraidWord) -> bool:
    """True when ``b`` is irreducible and admits no cyclic decomposition."""
    if any(c < 2 for c in b.generator_counts()):
        return False
    return b.strands > 1 and cyclic_decomposition(b) is None
