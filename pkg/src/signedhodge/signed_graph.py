"""Signed graphs: parsing, switching, deletion/contraction, chromatic polynomials."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple

from .ratmat import LAMBDA, IntPolynomial, interpolate

__all__ = [
    "ConsistencyError",
    "Edge",
    "GraphParseError",
    "SignedGraph",
    "chromatic_by_interpolation",
    "chromatic_coefficients",
    "chromatic_polynomial",
    "contract_edge",
    "count_proper_colorings",
    "delete_edge",
    "parse_graph",
    "switch_at",
]


class GraphParseError(ValueError):
    def __init__(self, lineno: int, line: str, reason: str):
        super().__init__(f"line {lineno}: {reason}: {line.strip()!r}")
        self.lineno = lineno
        self.reason = reason


class ConsistencyError(RuntimeError):
    """Two computations that must agree did not; indicates a bug."""


class Edge(NamedTuple):
    """A signed edge ``('+', i, j)`` / ``('-', i, j)`` or a half-edge ``('h', i, 0)``."""

    kind: str
    i: int
    j: int = 0

    @classmethod
    def pos(cls, i, j):
        return cls("+", min(i, j), max(i, j))

    @classmethod
    def neg(cls, i, j):
        return cls("-", min(i, j), max(i, j))

    @classmethod
    def half(cls, i):
        return cls("h", i, 0)

    def __str__(self):
        return f"halfedge {self.i}" if self.kind == "h" else f"edge {self.kind} {self.i} {self.j}"


def _pairs(edges: Iterable[tuple[int, int]], n: int, what: str) -> tuple[tuple[int, int], ...]:
    out = set()
    for e in edges:
        a, b = e
        if a == b:
            raise ValueError(f"{what} edge {{{a},{b}}} is a loop")
        if not (1 <= a <= n and 1 <= b <= n):
            raise ValueError(f"{what} edge {{{a},{b}}} has a vertex outside 1..{n}")
        out.add((min(a, b), max(a, b)))
    return tuple(sorted(out))


@dataclass(frozen=True)
class SignedGraph:
    """Signed graph on vertices ``1..n``.

    Each sign class is a simple graph; a pair may carry both signs. Half-edges
    form a set, so repeated half-edges at one vertex collapse.
    """

    n: int
    pos: tuple[tuple[int, int], ...] = ()
    neg: tuple[tuple[int, int], ...] = ()
    half: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        object.__setattr__(self, "pos", _pairs(self.pos, self.n, "positive"))
        object.__setattr__(self, "neg", _pairs(self.neg, self.n, "negative"))
        hs = set(self.half)
        for h in hs:
            if not 1 <= h <= self.n:
                raise ValueError(f"half-edge at {h} outside 1..{self.n}")
        object.__setattr__(self, "half", tuple(sorted(hs)))

    @property
    def edges(self) -> tuple[Edge, ...]:
        return (
            tuple(Edge("+", a, b) for a, b in self.pos)
            + tuple(Edge("-", a, b) for a, b in self.neg)
            + tuple(Edge.half(h) for h in self.half)
        )

    def is_empty(self) -> bool:
        return not (self.pos or self.neg or self.half)

    def has(self, e: Edge) -> bool:
        if e.kind == "h":
            return e.i in self.half
        pair = (min(e.i, e.j), max(e.i, e.j))
        return pair in (self.pos if e.kind == "+" else self.neg)

    def add(self, e: Edge) -> "SignedGraph":
        if e.kind == "h":
            return SignedGraph(self.n, self.pos, self.neg, self.half + (e.i,))
        if e.kind == "+":
            return SignedGraph(self.n, self.pos + ((e.i, e.j),), self.neg, self.half)
        return SignedGraph(self.n, self.pos, self.neg + ((e.i, e.j),), self.half)

    def relabel(self, perm: dict[int, int]) -> "SignedGraph":
        return SignedGraph(
            self.n,
            [(perm[a], perm[b]) for a, b in self.pos],
            [(perm[a], perm[b]) for a, b in self.neg],
            [perm[h] for h in self.half],
        )

    def to_text(self) -> str:
        lines = [f"vertices {self.n}"]
        lines += [str(e) for e in self.edges]
        return "\n".join(lines) + "\n"

    def __str__(self) -> str:
        parts = [f"+{{{a},{b}}}" for a, b in self.pos]
        parts += [f"-{{{a},{b}}}" for a, b in self.neg]
        parts += [f"h{{{h}}}" for h in self.half]
        return f"G[{self.n}]({' '.join(parts)})"


def parse_graph(text: str) -> SignedGraph:
    """Parse the line-oriented graph format.

    ``vertices <n>`` must precede every edge line; ``edge + i j``,
    ``edge - i j`` and ``halfedge i`` may follow in any order and ``#``
    starts a comment.
    """
    n = None
    pos: list[tuple[int, int]] = []
    neg: list[tuple[int, int]] = []
    half: list[int] = []
    seen: set[tuple] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        try:
            if tok[0] == "vertices":
                if n is not None:
                    raise GraphParseError(lineno, raw, "duplicate vertices line")
                if len(tok) != 2:
                    raise GraphParseError(lineno, raw, "expected 'vertices <n>'")
                n = int(tok[1])
                if n < 0:
                    raise GraphParseError(lineno, raw, "negative vertex count")
                continue
            if n is None:
                raise GraphParseError(lineno, raw, "edge before 'vertices' line")
            if tok[0] == "edge":
                if len(tok) != 4 or tok[1] not in "+-" or len(tok[1]) != 1:
                    raise GraphParseError(lineno, raw, "expected 'edge +|- <i> <j>'")
                a, b = int(tok[2]), int(tok[3])
                if not (1 <= a <= n and 1 <= b <= n):
                    raise GraphParseError(lineno, raw, f"vertex out of range 1..{n}")
                if a == b:
                    raise GraphParseError(lineno, raw, "loop edge")
                key = (tok[1], min(a, b), max(a, b))
                if key in seen:
                    raise GraphParseError(lineno, raw, "duplicate edge of the same sign")
                seen.add(key)
                (pos if tok[1] == "+" else neg).append((a, b))
            elif tok[0] == "halfedge":
                if len(tok) != 2:
                    raise GraphParseError(lineno, raw, "expected 'halfedge <i>'")
                h = int(tok[1])
                if not 1 <= h <= n:
                    raise GraphParseError(lineno, raw, f"vertex out of range 1..{n}")
                half.append(h)
            else:
                raise GraphParseError(lineno, raw, f"unknown directive {tok[0]!r}")
        except ValueError as exc:
            if isinstance(exc, GraphParseError):
                raise
            raise GraphParseError(lineno, raw, "malformed integer") from None
    if n is None:
        raise GraphParseError(0, "", "missing 'vertices' line")
    return SignedGraph(n, pos, neg, half)


# ---------------------------------------------------------------------------
# minors


def switch_at(g: SignedGraph, v: int) -> SignedGraph:
    if not 1 <= v <= g.n:
        raise ValueError(f"vertex {v} outside 1..{g.n}")
    pos = [e for e in g.pos if v not in e] + [e for e in g.neg if v in e]
    neg = [e for e in g.neg if v not in e] + [e for e in g.pos if v in e]
    return SignedGraph(g.n, pos, neg, g.half)


def delete_edge(g: SignedGraph, e: Edge) -> SignedGraph:
    if not g.has(e):
        raise ValueError(f"{e} is not in {g}")
    if e.kind == "h":
        return SignedGraph(g.n, g.pos, g.neg, [h for h in g.half if h != e.i])
    pair = (min(e.i, e.j), max(e.i, e.j))
    if e.kind == "+":
        return SignedGraph(g.n, [p for p in g.pos if p != pair], g.neg, g.half)
    return SignedGraph(g.n, g.pos, [p for p in g.neg if p != pair], g.half)


def _drop_vertex(v: int):
    return lambda x: x - 1 if x > v else x


def contract_edge(g: SignedGraph, e: Edge) -> SignedGraph:
    """Contract a positive edge or a half-edge.

    A positive pair ``{i, j}`` (i < j) merges ``j`` into ``i`` and shifts the
    labels above ``j`` down by one; a parallel negative copy becomes a
    half-edge at the merged vertex. A half-edge ``{i}`` removes vertex ``i``
    and turns every edge at ``i`` into a half-edge at its other end.
    Negative pairs must be switched to positive by the caller.
    """
    if not g.has(e):
        raise ValueError(f"{e} is not in {g}")
    if e.kind == "-":
        raise ValueError(f"cannot contract negative {e}; switch at an endpoint first")
    if e.kind == "h":
        v = e.i
        lab = _drop_vertex(v)
        half = {lab(h) for h in g.half if h != v}
        for a, b in g.pos + g.neg:
            if v in (a, b):
                half.add(lab(b if a == v else a))
        pos = [(lab(a), lab(b)) for a, b in g.pos if v not in (a, b)]
        neg = [(lab(a), lab(b)) for a, b in g.neg if v not in (a, b)]
        return SignedGraph(g.n - 1, pos, neg, half)

    i, j = min(e.i, e.j), max(e.i, e.j)
    lab = _drop_vertex(j)

    def m(x):
        return lab(i if x == j else x)

    pos = {(m(a), m(b)) for a, b in g.pos if (a, b) != (i, j)}
    neg = {(m(a), m(b)) for a, b in g.neg if (a, b) != (i, j)}
    half = {m(h) for h in g.half}
    if (i, j) in g.neg:
        half.add(m(i))
    # after removing the pair itself no loops can arise
    return SignedGraph(g.n - 1, pos, neg, half)


# ---------------------------------------------------------------------------
# chromatic polynomial


def count_proper_colorings(g: SignedGraph, c: int) -> int:
    """Brute-force count of proper colorings ``[n] -> {-c..c}``."""
    if c < 0:
        raise ValueError("color bound must be non-negative")
    colors = range(-c, c + 1)
    pos = [(a - 1, b - 1) for a, b in g.pos]
    neg = [(a - 1, b - 1) for a, b in g.neg]
    half = [h - 1 for h in g.half]
    count = 0
    for phi in itertools.product(colors, repeat=g.n):
        if any(phi[h] == 0 for h in half):
            continue
        if any(phi[a] == phi[b] for a, b in pos):
            continue
        if any(phi[a] == -phi[b] for a, b in neg):
            continue
        count += 1
    return count


@lru_cache(maxsize=None)
def chromatic_polynomial(g: SignedGraph) -> IntPolynomial:
    """Chromatic polynomial by deletion-contraction on positive edges.

    With no positive pair left, a negative pair is made positive by switching
    at its smaller endpoint, which leaves the polynomial unchanged. When only
    half-edges remain the polynomial is ``λ^(n-h) (λ-1)^h``.
    """
    if g.pos:
        e = Edge("+", *g.pos[0])
        return chromatic_polynomial(delete_edge(g, e)) - chromatic_polynomial(contract_edge(g, e))
    if g.neg:
        return chromatic_polynomial(switch_at(g, g.neg[0][0]))
    h = len(g.half)
    return LAMBDA ** (g.n - h) * (LAMBDA - IntPolynomial((1,))) ** h


def chromatic_by_interpolation(g: SignedGraph) -> IntPolynomial:
    points = [(2 * c + 1, count_proper_colorings(g, c)) for c in range(g.n + 1)]
    try:
        return interpolate(points)
    except ValueError as exc:
        raise ConsistencyError(f"coloring counts of {g} do not lie on an integer polynomial") from exc


def chromatic_coefficients(g: SignedGraph, poly: IntPolynomial | None = None) -> tuple[int, ...]:
    """``(c_0, ..., c_{n-1})`` with ``χ = λ^n + Σ (-1)^(n-j) c_j λ^j``."""
    p = chromatic_polynomial(g) if poly is None else poly
    if p.degree != g.n or p.coefficient(g.n) != 1:
        raise ConsistencyError(f"chromatic polynomial {p} of {g} is not monic of degree {g.n}")
    cs = tuple((-1) ** (g.n - j) * p.coefficient(j) for j in range(g.n))
    if any(c < 0 for c in cs):
        raise ConsistencyError(f"negative coefficient in {cs} for {g}")
    return cs
