"""Combinatorial model of a positive braided template.

A template is a set of branch lines laid out left to right, bands running from
an output slot of one branch line to an input slot of another, positive half
twists on bands, and a word of positive crossings between band strips that
carries the top strip order (outputs) to the bottom strip order (inputs).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path

import numpy as np

from .errors import TemplateError

__all__ = [
    "BranchLine",
    "Band",
    "Template",
    "TemplateStats",
    "parse_template",
    "load_template",
    "template_stats",
    "successors",
    "transition_matrix",
    "bound_N",
    "PRESETS",
]

_BAND = re.compile(
    r"^band\s+(?P<id>\S+)\s+from\s+(?P<src>[^\s\[]+)\[(?P<oslot>-?\d+)\]\s+"
    r"to\s+(?P<dst>[^\s\[]+)\[(?P<islot>-?\d+)\](?:\s+twists\s+(?P<tw>-?\d+))?$"
)


@dataclass(frozen=True)
class BranchLine:
    id: str
    inputs: tuple[str, ...]
    outputs: tuple[str, ...]

    @property
    def joining_charts(self) -> int:
        return len(self.inputs) - 1

    @property
    def splitting_charts(self) -> int:
        return len(self.outputs) - 1


@dataclass(frozen=True)
class Band:
    id: str
    source: tuple[str, int]
    target: tuple[str, int]
    twists: int = 0


@dataclass(frozen=True)
class Template:
    name: str
    branch_lines: tuple[BranchLine, ...]
    bands: tuple[Band, ...]
    crossing_word: tuple[int, ...] = ()

    @cached_property
    def band_index(self) -> dict[str, int]:
        return {b.id: i for i, b in enumerate(self.bands)}

    @cached_property
    def line_index(self) -> dict[str, int]:
        return {bl.id: i for i, bl in enumerate(self.branch_lines)}

    def band(self, band_id: str) -> Band:
        return self.bands[self.band_index[band_id]]

    def line(self, line_id: str) -> BranchLine:
        return self.branch_lines[self.line_index[line_id]]

    def top_order(self) -> list[str]:
        """Band strips left to right just below the branch lines."""
        return [b for bl in self.branch_lines for b in bl.outputs]

    def bottom_order(self) -> list[str]:
        """Band strips left to right just above the branch lines."""
        return [b for bl in self.branch_lines for b in bl.inputs]

    def to_text(self) -> str:
        lines = [f"template {self.name}"]
        lines += [f"branchline {bl.id}" for bl in self.branch_lines]
        for b in self.bands:
            lines.append(
                f"band {b.id} from {b.source[0]}[{b.source[1]}] "
                f"to {b.target[0]}[{b.target[1]}] twists {b.twists}"
            )
        lines += [f"cross {x}" for x in self.crossing_word]
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class TemplateStats:
    J: int
    S: int
    B: int
    V: int
    betti1: int
    N: int

    def __str__(self) -> str:
        return f"J={self.J} S={self.S} B={self.B} b1={self.betti1} N={self.N}"


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_template(text: str) -> Template:
    name = None
    line_ids: list[str] = []
    line_decl: dict[str, int] = {}
    bands: list[Band] = []
    band_decl: dict[str, int] = {}
    crossings: list[int] = []
    outs: dict[str, dict[int, str]] = {}
    ins: dict[str, dict[int, str]] = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        head = line.split()[0]
        if head == "template":
            parts = line.split()
            if len(parts) != 2:
                raise TemplateError("expected 'template <name>'", lineno)
            if name is not None:
                raise TemplateError("duplicate template header", lineno)
            name = parts[1]
        elif head == "branchline":
            parts = line.split()
            if len(parts) != 2:
                raise TemplateError("expected 'branchline <id>'", lineno)
            bid = parts[1]
            if bid in line_decl:
                raise TemplateError(f"duplicate branch line {bid!r}", lineno)
            line_decl[bid] = lineno
            line_ids.append(bid)
            outs[bid], ins[bid] = {}, {}
        elif head == "band":
            m = _BAND.match(line)
            if not m:
                raise TemplateError(
                    "expected 'band <id> from <bl>[<slot>] to <bl>[<slot>] twists <t>'", lineno
                )
            band_id, src, dst = m["id"], m["src"], m["dst"]
            oslot, islot = int(m["oslot"]), int(m["islot"])
            tw = int(m["tw"]) if m["tw"] is not None else 0
            if band_id in band_decl:
                raise TemplateError(f"duplicate band {band_id!r}", lineno)
            for bl in (src, dst):
                if bl not in line_decl:
                    raise TemplateError(f"unknown branch line {bl!r}", lineno)
            if tw < 0:
                raise TemplateError(f"negative twist count {tw} on band {band_id!r}", lineno)
            if oslot < 0 or islot < 0:
                raise TemplateError("slot indices are 0-based and non-negative", lineno)
            if oslot in outs[src]:
                raise TemplateError(
                    f"output slot {src}[{oslot}] already assigned to band {outs[src][oslot]!r}", lineno
                )
            if islot in ins[dst]:
                raise TemplateError(
                    f"input slot {dst}[{islot}] already assigned to band {ins[dst][islot]!r}", lineno
                )
            outs[src][oslot] = band_id
            ins[dst][islot] = band_id
            band_decl[band_id] = lineno
            bands.append(Band(band_id, (src, oslot), (dst, islot), tw))
        elif head == "cross":
            parts = line.split()
            if len(parts) != 2 or not parts[1].lstrip("-").isdigit():
                raise TemplateError("expected 'cross <pos>'", lineno)
            crossings.append(int(parts[1]))
        else:
            raise TemplateError(f"unknown directive {head!r}", lineno)

    if name is None:
        raise TemplateError("missing 'template <name>' header")
    if not line_ids:
        raise TemplateError("template declares no branch lines")

    branch_lines = []
    for bid in line_ids:
        for kind, slots in (("input", ins[bid]), ("output", outs[bid])):
            if not slots:
                raise TemplateError(f"branch line {bid!r} has no {kind} slots", line_decl[bid])
            missing = sorted(set(range(len(slots))) - set(slots))
            if missing:
                raise TemplateError(
                    f"{kind} slot {bid}[{missing[0]}] is unassigned", line_decl[bid]
                )
        branch_lines.append(
            BranchLine(
                bid,
                tuple(ins[bid][i] for i in range(len(ins[bid]))),
                tuple(outs[bid][i] for i in range(len(outs[bid]))),
            )
        )

    t = Template(name, tuple(branch_lines), tuple(bands), tuple(crossings))
    _validate_crossings(t)
    _validate_connected(t)
    return t


def _validate_crossings(t: Template) -> None:
    strips = t.top_order()
    for x in t.crossing_word:
        if not 1 <= x < len(strips):
            raise TemplateError(f"crossing position {x} out of range [1, {len(strips) - 1}]")
        strips[x - 1], strips[x] = strips[x], strips[x - 1]
    if strips != t.bottom_order():
        raise TemplateError(
            "crossing word does not carry the top strip order "
            f"{t.top_order()} to the bottom strip order {t.bottom_order()} (got {strips})"
        )


def _validate_connected(t: Template) -> None:
    parent = {bl.id: bl.id for bl in t.branch_lines}

    def find(x: str) -> str:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for b in t.bands:
        parent[find(b.source[0])] = find(b.target[0])
    roots = {find(x) for x in parent}
    if len(roots) > 1:
        raise TemplateError(f"template is disconnected ({len(roots)} pieces)")


def load_template(source: str | Path) -> Template:
    """Load a template from a file path or a ``preset:<name>`` reference."""
    s = str(source)
    if s.startswith("preset:"):
        key = s.split(":", 1)[1]
        if key not in PRESETS:
            raise TemplateError(f"unknown preset {key!r}; choose from {sorted(PRESETS)}")
        return parse_template(PRESETS[key])
    try:
        text = Path(s).read_text()
    except OSError as exc:
        raise TemplateError(f"cannot read {s}: {exc.strerror}") from None
    return parse_template(text)


def bound_N(J: int, betti1: int) -> int:
    """``1 + b1 + J (1 + (2J)!) (2J (1 + (2J)!) - 1)`` in exact integers."""
    f = 1 + math.factorial(2 * J)
    return 1 + betti1 + J * f * (2 * J * f - 1)


def template_stats(t: Template) -> TemplateStats:
    V = len(t.branch_lines)
    B = len(t.bands)
    J = sum(bl.joining_charts for bl in t.branch_lines)
    S = sum(bl.splitting_charts for bl in t.branch_lines)
    if J != S or J != B - V:
        raise TemplateError(f"chart counts disagree: J={J} S={S} B-V={B - V}")
    betti1 = B - V + 1
    return TemplateStats(J, S, B, V, betti1, bound_N(J, betti1))


def successors(t: Template, band: Band | str) -> list[Band]:
    if isinstance(band, str):
        band = t.band(band)
    return [t.band(b) for b in t.line(band.target[0]).outputs]


def transition_matrix(t: Template) -> np.ndarray:
    """0/1 band transition matrix, rows and columns in band declaration order."""
    A = np.zeros((len(t.bands), len(t.bands)), dtype=object)
    for i, b in enumerate(t.bands):
        for s in successors(t, b):
            A[i, t.band_index[s.id]] = 1
    return A


PRESETS: dict[str, str] = {
    "lorenz": """\
template lorenz
branchline b
band x from b[0] to b[0] twists 0
band y from b[1] to b[1] twists 0
""",
    "annulus": """\
template annulus
branchline a
band e from a[0] to a[0] twists 0
""",
    "twisted-lorenz": """\
template twisted-lorenz
branchline b
band x from b[0] to b[0] twists 0
band y from b[1] to b[1] twists 2
""",
    "three-band": """\
template three-band
branchline b
band x from b[0] to b[0] twists 0
band y from b[1] to b[1] twists 0
band z from b[2] to b[2] twists 0
""",
    "two-branch": """\
template two-branch
branchline a
branchline b
band p from a[0] to a[0] twists 0
band q from a[1] to b[0] twists 0
band r from b[0] to a[1] twists 0
band s from b[1] to b[1] twists 0
cross 2
""",
}
