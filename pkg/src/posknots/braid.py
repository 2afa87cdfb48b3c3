"""Positive braid words, closure bookkeeping and permutation braids.

Letters are 1-based generator indices: letter ``i`` crosses the strands at
positions ``i`` and ``i + 1``.  Only positive crossings are representable.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import BraidParseError, InvariantError, NotAKnotError

__all__ = [
    "BraidWord",
    "Permutation",
    "ClosureInfo",
    "parse_braid",
    "closure_info",
    "canonical_rotation",
    "least_rotation",
    "positive_sort_braid",
    "half_twist_word",
    "genus_positive",
    "seifert_genus",
    "euler_defect",
]

_SEPARATOR = re.compile(r"[\s,]+")


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        if self.strands < 1:
            raise BraidParseError(f"strand count must be >= 1, got {self.strands}")
        top = self.strands - 1
        for x in self.letters:
            if not 1 <= x <= top:
                raise BraidParseError(
                    f"letter {x} out of range [1, {top}] for {self.strands} strands"
                )

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        if len(self.letters) == 1 and self.letters[0] > 9:
            # a bare "12" would read back as compact digits
            return f"{self.letters[0]},"
        return " ".join(map(str, self.letters))

    @property
    def crossings(self) -> int:
        return len(self.letters)

    def generator_counts(self) -> list[int]:
        """Occurrences of generators ``1 .. strands-1`` (index 0 is generator 1)."""
        counts = Counter(self.letters)
        return [counts.get(i, 0) for i in range(1, self.strands)]

    def rotate(self, k: int) -> BraidWord:
        """Cyclic rotation to the left by ``k`` letters (a conjugation)."""
        if not self.letters:
            return self
        k %= len(self.letters)
        return BraidWord(self.strands, self.letters[k:] + self.letters[:k])

    def stabilize(self) -> BraidWord:
        """Markov stabilization: append the new top generator in B_{n+1}."""
        return BraidWord(self.strands + 1, self.letters + (self.strands,))


@dataclass(frozen=True)
class Permutation:
    """Bijection on ``{1..n}``; ``images[i-1]`` is the image of ``i``."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "images", tuple(int(x) for x in self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a bijection on 1..{len(self.images)}: {self.images}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    def __len__(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def then(self, other: Permutation) -> Permutation:
        """Apply ``self`` first, then ``other``."""
        return Permutation(tuple(other(self(i)) for i in range(1, len(self) + 1)))

    def inverse(self) -> Permutation:
        inv = [0] * len(self)
        for i, v in enumerate(self.images, start=1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, len(self) + 1):
            if start in seen:
                continue
            cyc = []
            i = start
            while i not in seen:
                seen.add(i)
                cyc.append(i)
                i = self(i)
            out.append(tuple(cyc))
        return out

    def inversions(self) -> int:
        im = self.images
        return sum(1 for a in range(len(im)) for b in range(a + 1, len(im)) if im[a] > im[b])


@dataclass(frozen=True)
class ClosureInfo:
    permutation: Permutation
    components: int
    is_knot: bool


def parse_braid(text: str, strands: int | None = None) -> BraidWord:
    """Parse a compact digit string (``"1221"``) or separated integers (``"1 12 3"``).

    When ``strands`` is omitted it is inferred as one more than the largest letter.
    """
    # any separator, even a trailing comma, selects integer tokens ("12," is one letter)
    separated = _SEPARATOR.search(text.strip()) is not None
    body = text.strip().strip(",").strip()
    if strands is not None and strands < 1:
        raise BraidParseError(f"strand count must be >= 1, got {strands}")
    if not body:
        letters: list[int] = []
    elif separated:
        letters = []
        for tok in _SEPARATOR.split(body):
            try:
                letters.append(int(tok))
            except ValueError:
                raise BraidParseError(f"non-numeric token {tok!r}") from None
    elif body.isdigit():
        letters = [int(ch) for ch in body]
    else:
        raise BraidParseError(f"non-numeric token {body!r}")
    if strands is None:
        strands = 1 + max(letters, default=0)
    return BraidWord(strands, tuple(letters))


def closure_info(b: BraidWord) -> ClosureInfo:
    # order[pos] = strand currently at pos (0-based)
    order = list(range(b.strands))
    for x in b.letters:
        order[x - 1], order[x] = order[x], order[x - 1]
    images = [0] * b.strands
    for pos, strand in enumerate(order):
        images[strand] = pos + 1
    perm = Permutation(tuple(images))
    k = len(perm.cycles())
    return ClosureInfo(perm, k, k == 1)


def least_rotation(seq: Sequence) -> tuple:
    """Lexicographically least cyclic rotation of a sequence."""
    seq = tuple(seq)
    if not seq:
        return seq
    return min(seq[i:] + seq[:i] for i in range(len(seq)))


def canonical_rotation(b: BraidWord) -> BraidWord:
    return BraidWord(b.strands, least_rotation(b.letters))


def positive_sort_braid(target: Permutation) -> BraidWord:
    """Positive permutation braid whose closure permutation is ``target``.

    Insertion sort on the destination positions; each inverted pair of strands
    crosses exactly once.
    """
    keys = list(target.images)
    letters: list[int] = []
    for k in range(1, len(keys)):
        j = k
        while j > 0 and keys[j - 1] > keys[j]:
            keys[j - 1], keys[j] = keys[j], keys[j - 1]
            letters.append(j)
            j -= 1
    return BraidWord(max(len(keys), 1), tuple(letters))


def half_twist_word(q: int) -> BraidWord:
    """Positive half twist on ``q`` strands: (1)(2 1)(3 2 1)...(q-1 ... 1)."""
    if q < 1:
        raise ValueError(f"half twist needs q >= 1, got {q}")
    letters = [i for k in range(1, q) for i in range(k, 0, -1)]
    return BraidWord(q, tuple(letters))


def euler_defect(b: BraidWord) -> int:
    """``c - n + 1``: one minus the Euler characteristic of the Bennequin surface."""
    return len(b.letters) - b.strands + 1


def seifert_genus(b: BraidWord) -> int:
    """Genus of the Bennequin surface of a non-split positive braid closure.

    For positive braids this surface has minimal genus; for a link with ``mu``
    components the genus is ``(c - n + 2 - mu) / 2``.
    """
    mu = closure_info(b).components
    twice = len(b.letters) - b.strands + 2 - mu
    if twice % 2:
        raise ValueError(f"odd Euler count for braid {b}; closure is split or malformed")
    return twice // 2


def genus_positive(b: BraidWord) -> int:
    info = closure_info(b)
    if not info.is_knot:
        raise NotAKnotError(f"closure has {info.components} components", info.components)
    d = euler_defect(b)
    if d % 2:
        raise InvariantError(f"knot closure with odd c - n + 1 = {d}: {b}")
    return d // 2

