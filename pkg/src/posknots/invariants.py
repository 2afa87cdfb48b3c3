"""Independent oracles: the Alexander polynomial and diagram reducibility."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import networkx as nx

from .braid import BraidWord, closure_info
from .errors import ContractError, InexactDivisionError, InvariantError, NotAKnotError
from .kernels import closure_determinant
from .laurent import LaurentPoly

__all__ = [
    "alexander",
    "alexander_unit_normal",
    "knot_determinant",
    "DiagramGraph",
    "diagram_graph",
    "is_reducible_diagram",
    "cut_crossings",
]


def _divide_by_geometric(coeffs: list[int], n: int) -> list[int]:
    """Exact division of an integer polynomial by ``1 + t + ... + t^(n-1)``."""
    if n == 1:
        return list(coeffs)
    rem = list(coeffs)
    qlen = len(rem) - n + 1
    if qlen <= 0:
        raise InexactDivisionError(f"degree {len(rem) - 1} too small to divide by [n={n}]")
    quot = [0] * qlen
    # divisor is monic with all-ones coefficients
    for d in range(len(rem) - 1, n - 2, -1):
        c = rem[d]
        if c:
            quot[d - n + 1] = c
            for e in range(d - n + 1, d + 1):
                rem[e] -= c
    if any(rem):
        raise InexactDivisionError(f"det(I - rho) not divisible by [n={n}]")
    return quot


@lru_cache(maxsize=65536)
def _reduced_poly(strands: int, letters: tuple[int, ...], backend: str | None) -> LaurentPoly:
    det = closure_determinant(letters, strands, backend)
    return LaurentPoly.from_coefficients(_divide_by_geometric(det, strands))


def alexander(b: BraidWord, backend: str | None = None) -> LaurentPoly:
    """Alexander polynomial of a knot closure, symmetric with value 1 at ``t = 1``."""
    info = closure_info(b)
    if not info.is_knot:
        raise NotAKnotError(f"closure has {info.components} components", info.components)
    p = _reduced_poly(b.strands, b.letters, backend)
    if p.is_zero():
        raise InvariantError(f"vanishing Alexander polynomial for knot {b}")
    if p.span % 2:
        raise InvariantError(f"odd Alexander span {p.span} for knot {b}")
    p = p.shift(-p.min_exponent - p.span // 2)
    if p(1) == -1:
        p = -p
    if p(1) != 1 or not p.is_palindromic():
        raise InvariantError(f"Alexander normalisation failed for {b}: {p}")
    return p


def alexander_unit_normal(b: BraidWord, backend: str | None = None) -> LaurentPoly:
    """Single-variable Alexander polynomial of any closure, up to ``±t^k``.

    Knots and links alike; the representative has lowest exponent 0 and a
    positive lowest coefficient.
    """
    return _reduced_poly(b.strands, b.letters, backend).unit_normal()


def knot_determinant(delta: LaurentPoly) -> int:
    return abs(delta(-1))


@dataclass(frozen=True)
class DiagramGraph:
    """4-valent projection graph of a closed braid: one vertex per crossing."""

    vertices: int
    edges: tuple[tuple[int, int], ...]

    def to_networkx(self) -> nx.Graph:
        """Simple graph with every edge subdivided, so loops and parallel arcs survive."""
        g = nx.Graph()
        g.add_nodes_from(range(self.vertices))
        for k, (u, v) in enumerate(self.edges):
            mid = ("arc", k)
            g.add_edge(u, mid)
            g.add_edge(mid, v)
        return g


def diagram_graph(b: BraidWord) -> DiagramGraph:
    if b.strands == 1 and not b.letters:
        return DiagramGraph(0, ())
    touching: list[list[int]] = [[] for _ in range(b.strands)]
    for idx, x in enumerate(b.letters):
        touching[x - 1].append(idx)
        touching[x].append(idx)
    edges = []
    for pos, seq in enumerate(touching, start=1):
        if not seq:
            raise ContractError(f"strand position {pos} meets no crossing; diagram is disconnected")
        edges.extend((seq[i], seq[(i + 1) % len(seq)]) for i in range(len(seq)))
    return DiagramGraph(len(b.letters), tuple(edges))


def cut_crossings(b: BraidWord) -> list[int]:
    """Indices of crossings that are cut points of the closed-braid projection."""
    g = diagram_graph(b).to_networkx()
    return sorted(v for v in nx.articulation_points(g) if isinstance(v, int))


def is_reducible_diagram(b: BraidWord) -> bool:
    if b.strands == 1:
        return False
    if not nx.is_connected(diagram_graph(b).to_networkx()):
        raise ContractError(f"diagram of {b} is disconnected")
    return bool(cut_crossings(b))
