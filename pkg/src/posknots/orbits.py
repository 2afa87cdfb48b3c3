"""Periodic orbits of a template's semi-flow and their positive braids.

An orbit is a primitive cyclic word of bands.  Each rotation of the word is
one strand; strands are ordered across a cross-section by comparing their
futures (band slots, flipped after an odd number of half twists).  One trip
around the template then reads off a positive braid in three stages: band
crossings, band twists, and merges at the branch lines.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .braid import (
    BraidWord,
    Permutation,
    closure_info,
    genus_positive,
    half_twist_word,
    least_rotation,
    positive_sort_braid,
)
from .errors import InvariantError
from .factoring import Factorization, factorize
from .invariants import alexander
from .laurent import LaurentPoly
from .template import Template, successors, template_stats, transition_matrix

__all__ = [
    "OrbitWord",
    "OrbitBraid",
    "OrbitRecord",
    "enumerate_orbits",
    "orbit_braid",
    "build_orbit_braid",
    "check_orbit_braid",
    "census",
    "orbit_record",
    "trace_counts",
    "check_trace_formula",
]

log = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class OrbitWord:
    """Band indices (declaration order) of a primitive orbit, least rotation first."""

    period: int
    indices: tuple[int, ...]

    @classmethod
    def from_bands(cls, t: Template, bands) -> OrbitWord:
        idx = tuple(t.band_index[b] for b in bands)
        _check_cycle(t, idx)
        if not _is_lyndon_rotation_class(idx):
            raise ValueError(f"orbit word {list(bands)} is a proper power")
        return cls(len(idx), least_rotation(idx))

    def labels(self, t: Template) -> tuple[str, ...]:
        return tuple(t.bands[i].id for i in self.indices)

    def label(self, t: Template) -> str:
        return ".".join(self.labels(t))


def _check_cycle(t: Template, idx: tuple[int, ...]) -> None:
    succ = _successor_table(t)
    for i, a in enumerate(idx):
        nxt = idx[(i + 1) % len(idx)]
        if nxt not in succ[a]:
            raise ValueError(f"band {t.bands[nxt].id} cannot follow {t.bands[a].id}")


def _is_lyndon_rotation_class(idx: tuple[int, ...]) -> bool:
    p = len(idx)
    return all(idx[i:] + idx[:i] != idx for i in range(1, p))


def _successor_table(t: Template) -> list[list[int]]:
    return [[t.band_index[s.id] for s in successors(t, b)] for b in t.bands]


def enumerate_orbits(t: Template, max_period: int) -> list[OrbitWord]:
    """All primitive orbits of period ``<= max_period``, sorted by (period, word)."""
    if max_period < 1:
        raise ValueError("max_period must be >= 1")
    succ = _successor_table(t)
    out: list[OrbitWord] = []
    for p in range(1, max_period + 1):
        for start in range(len(t.bands)):
            word = [start]

            def extend() -> None:
                if len(word) == p:
                    if start in succ[word[-1]]:
                        w = tuple(word)
                        # Lyndon: strictly below every proper rotation
                        if all(w < w[i:] + w[:i] for i in range(1, p)):
                            out.append(OrbitWord(p, w))
                    return
                for nxt in succ[word[-1]]:
                    if nxt >= start:
                        word.append(nxt)
                        extend()
                        word.pop()

            extend()
    out.sort()
    return out


def trace_counts(t: Template, max_period: int) -> list[int]:
    """``tr(A^p)`` for ``p = 1..max_period`` in exact integers."""
    A = transition_matrix(t)
    P = A.copy()
    out = []
    for _ in range(max_period):
        out.append(int(sum(P[i, i] for i in range(P.shape[0]))))
        P = P.dot(A)
    return out


def check_trace_formula(t: Template, orbits: list[OrbitWord], max_period: int) -> None:
    by_period = [0] * (max_period + 1)
    for o in orbits:
        by_period[o.period] += 1
    for p, tr in enumerate(trace_counts(t, max_period), start=1):
        total = sum(d * by_period[d] for d in range(1, p + 1) if p % d == 0)
        if total != tr:
            raise InvariantError(f"trace formula fails at period {p}: {total} != tr(A^{p}) = {tr}")


@dataclass(frozen=True)
class OrbitBraid:
    """A braided orbit together with the bookkeeping of each construction stage."""

    braid: BraidWord
    top_order: tuple[int, ...]
    crossing_letters: int
    twist_letters: int
    merge_letters: int
    merges: tuple[tuple[tuple[int, ...], Permutation], ...]


def _itinerary_keys(t: Template, w: tuple[int, ...]) -> list[tuple]:
    p = len(w)
    slot = [b.source[1] for b in t.bands]
    line = [t.line_index[b.source[0]] for b in t.bands]
    twists = [b.twists for b in t.bands]
    keys = []
    for i in range(p):
        parity = 0
        key = [line[w[i]]]
        for e in range(p):
            band = w[(i + e) % p]
            key.append(-slot[band] if parity else slot[band])
            parity ^= twists[band] & 1
        keys.append(tuple(key))
    return keys


def build_orbit_braid(t: Template, orbit: OrbitWord) -> OrbitBraid:
    w = orbit.indices
    p = len(w)
    keys = _itinerary_keys(t, w)
    top = sorted(range(p), key=keys.__getitem__)
    if len({keys[i] for i in range(p)}) != p:
        raise InvariantError(f"itinerary tie in non-primitive word {w}")

    letters: list[int] = []

    def emit(sub: BraidWord, offset: int) -> None:
        letters.extend(x + offset for x in sub.letters)

    strands = list(top)
    strips = [t.band_index[b] for b in t.top_order()]
    load = [sum(1 for r in range(p) if w[r] == band) for band in range(len(t.bands))]

    for x in t.crossing_word:
        i = x - 1
        a, b = load[strips[i]], load[strips[i + 1]]
        off = sum(load[s] for s in strips[:i])
        if a and b:
            block = Permutation(tuple(range(b + 1, a + b + 1)) + tuple(range(1, b + 1)))
            emit(positive_sort_braid(block), off)
            strands[off : off + a + b] = strands[off + a : off + a + b] + strands[off : off + a]
        strips[i], strips[i + 1] = strips[i + 1], strips[i]
    n_cross = len(letters)

    offsets = {}
    off = 0
    for s in strips:
        offsets[s] = off
        off += load[s]
    for band, bd in enumerate(t.bands):
        q = load[band]
        if bd.twists and q > 1:
            o = offsets[band]
            for _ in range(bd.twists):
                emit(half_twist_word(q), o)
            if bd.twists % 2:
                strands[o : o + q] = strands[o : o + q][::-1]
    n_twist = len(letters) - n_cross

    merges = []
    off = 0
    for bl in t.branch_lines:
        size = sum(load[t.band_index[b]] for b in bl.inputs)
        group = strands[off : off + size]
        nxt = [(r + 1) % p for r in group]
        order = sorted(range(size), key=lambda k: keys[nxt[k]])
        rank = [0] * size
        for pos, k in enumerate(order):
            rank[k] = pos + 1
        perm = Permutation(tuple(rank)) if size else Permutation(())
        if size > 1:
            emit(positive_sort_braid(perm), off)
        merges.append((tuple(group), perm))
        strands[off : off + size] = [nxt[k] for k in order]
        off += size
    n_merge = len(letters) - n_cross - n_twist

    if strands != top:
        raise InvariantError(f"bottom cross-section {strands} differs from top {top}")
    return OrbitBraid(
        BraidWord(max(p, 1), tuple(letters)),
        tuple(top),
        n_cross,
        n_twist,
        n_merge,
        tuple(merges),
    )


def orbit_braid(t: Template, orbit: OrbitWord) -> BraidWord:
    return build_orbit_braid(t, orbit).braid


def check_orbit_braid(t: Template, orbit: OrbitWord, ob: OrbitBraid) -> None:
    """Raise ``InvariantError`` unless the construction ledger is consistent."""
    w = orbit.indices
    p = len(w)
    b = ob.braid
    if b.strands != p:
        raise InvariantError(f"braid has {b.strands} strands for period {p}")

    info = closure_info(b)
    pos = {r: k + 1 for k, r in enumerate(ob.top_order)}
    for r in range(p):
        if info.permutation(pos[r]) != pos[(r + 1) % p]:
            raise InvariantError(f"closure does not carry rotation {r} to {(r + 1) % p}")

    load = [sum(1 for r in range(p) if w[r] == band) for band in range(len(t.bands))]
    strips = [t.band_index[x] for x in t.top_order()]
    expected_cross = 0
    for x in t.crossing_word:
        expected_cross += load[strips[x - 1]] * load[strips[x]]
        strips[x - 1], strips[x] = strips[x], strips[x - 1]
    expected_twist = sum(
        bd.twists * load[i] * (load[i] - 1) // 2 for i, bd in enumerate(t.bands)
    )
    expected_merge = sum(perm.inversions() for _, perm in ob.merges)
    if (ob.crossing_letters, ob.twist_letters, ob.merge_letters) != (
        expected_cross,
        expected_twist,
        expected_merge,
    ) or len(b) != expected_cross + expected_twist + expected_merge:
        raise InvariantError(f"crossing ledger mismatch for orbit {orbit.label(t)}")

    for group, perm in ob.merges:
        for i in range(len(group)):
            for j in range(i + 1, len(group)):
                if w[group[i]] == w[group[j]] and perm(i + 1) > perm(j + 1):
                    raise InvariantError(
                        f"merge of orbit {orbit.label(t)} reorders strands within band "
                        f"{t.bands[w[group[i]]].id}"
                    )


@dataclass(frozen=True)
class OrbitRecord:
    orbit: OrbitWord
    label: str
    braid: BraidWord
    genus: int
    factorization: Factorization
    alexander: LaurentPoly
    construction: OrbitBraid

    @property
    def period(self) -> int:
        return self.orbit.period

    @property
    def crossings(self) -> int:
        return len(self.braid)

    @property
    def factor_count(self) -> int:
        return self.factorization.factor_count

    @property
    def factors(self) -> tuple[BraidWord, ...]:
        return self.factorization.prime_factors


def orbit_record(t: Template, orbit: OrbitWord) -> OrbitRecord:
    label = orbit.label(t)
    try:
        ob = build_orbit_braid(t, orbit)
        check_orbit_braid(t, orbit, ob)
        b = ob.braid
        return OrbitRecord(orbit, label, b, genus_positive(b), factorize(b), alexander(b), ob)
    except InvariantError as exc:
        raise InvariantError(f"orbit {label}: {exc}") from exc


def _record_job(args: tuple[Template, OrbitWord]) -> OrbitRecord:
    return orbit_record(*args)


def census(t: Template, max_period: int, jobs: int = 1) -> list[OrbitRecord]:
    """One record per primitive orbit, in (period, word) order for any ``jobs``."""
    orbits = enumerate_orbits(t, max_period)
    log.info("census %s: %d orbits up to period %d", t.name, len(orbits), max_period)
    if jobs > 1 and len(orbits) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunk = max(1, len(orbits) // (4 * jobs))
            records = list(pool.map(_record_job, [(t, o) for o in orbits], chunksize=chunk))
    else:
        records = [orbit_record(t, o) for o in orbits]
    bound = template_stats(t).N
    worst = max((r.factor_count for r in records), default=0)
    if worst > bound:
        log.error("factor count %d exceeds N(T) = %d", worst, bound)
    return records
