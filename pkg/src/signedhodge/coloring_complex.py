"""Signed-graph coloring complexes as ordered set partitions of ``[n] ∪ -[n]``.

An ``r``-face is an ordered partition ``(P_1 | ... | P_{r+1} | P_{r+2})`` whose
last block is distinguished; it encodes the chain of vertices
``P_1 ⊂ P_1 ∪ P_2 ⊂ ...`` of the type B triangulation of the cube boundary.
``B_{r+1}`` acts on ``r``-faces by permuting and negating the first ``r+1``
blocks, with the last block absorbing the induced sign changes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Iterator

from .group_algebra import AlgebraElement, eulerian_idempotent
from .hyperoctahedral import SignedPermutation, inverse, signed_permutations
from .ratmat import QMatrix
from .signed_graph import ConsistencyError, SignedGraph

__all__ = [
    "ColoringComplex",
    "EmptyComplexError",
    "Face",
    "MAX_VERTICES",
    "action_matrix",
    "algebra_action_matrix",
    "apply_permutation",
    "boundary_matrix",
    "coloring_complex",
    "contains_edge",
    "f_vector",
    "faces",
    "facets",
    "geometric_faces",
    "parse_face",
    "switch_face",
]

MAX_VERTICES = 6


class EmptyComplexError(ValueError):
    """The graph has no edge or half-edge, so its coloring complex is undefined."""


def _elt_key(x: int) -> int:
    return 2 * abs(x) + (x > 0)


@dataclass(frozen=True)
class Face:
    blocks: tuple[frozenset[int], ...]

    @property
    def grade(self) -> int:
        return len(self.blocks) - 2

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks) // 2

    def sort_key(self) -> tuple:
        return tuple(tuple(sorted(map(_elt_key, b))) for b in self.blocks)

    def merge(self, i: int) -> "Face":
        """Merge blocks ``i`` and ``i+1`` (0-based)."""
        b = self.blocks
        return Face(b[:i] + (b[i] | b[i + 1],) + b[i + 2 :])

    def vertices(self) -> list[frozenset[int]]:
        """The chain ``P_1 ⊂ P_1 ∪ P_2 ⊂ ...`` of non-final prefix unions."""
        out = []
        acc: frozenset[int] = frozenset()
        for b in self.blocks[:-1]:
            acc = acc | b
            out.append(acc)
        return out

    def serialize(self) -> str:
        return "|".join(",".join(str(x) for x in sorted(b, key=_elt_key)) for b in self.blocks)

    def __str__(self) -> str:
        return self.serialize()


def parse_face(text: str) -> Face:
    blocks = []
    for part in text.strip().strip("()").split("|"):
        elems = [int(t) for t in part.replace(",", " ").split()]
        if not elems:
            raise ValueError(f"empty block in {text!r}")
        blocks.append(frozenset(elems))
    face = Face(tuple(blocks))
    n = face.n
    union = frozenset().union(*blocks)
    if sum(len(b) for b in blocks) != len(union) or union != _ground(n):
        raise ValueError(f"{text!r} is not an ordered set partition of [n] ∪ -[n]")
    return face


@lru_cache(maxsize=None)
def _ground(n: int) -> frozenset[int]:
    return frozenset(range(1, n + 1)) | frozenset(range(-n, 0))


def contains_edge(block: frozenset[int] | set[int], g: SignedGraph) -> bool:
    """Whether ``block`` carries an edge of ``g``, closed under global negation.

    Positive ``{a,b}``: ``{a,b}`` or ``{-a,-b}`` inside the block.
    Negative ``{a,b}``: ``{a,-b}`` or ``{-a,b}`` inside the block.
    """
    for a, b in g.pos:
        if (a in block and b in block) or (-a in block and -b in block):
            return True
    for a, b in g.neg:
        if (a in block and -b in block) or (-a in block and b in block):
            return True
    return False


def _set_partitions(elems: list[int], k: int) -> Iterator[list[list[int]]]:
    if k == 0:
        if not elems:
            yield []
        return
    if len(elems) < k:
        return
    first, rest = elems[0], elems[1:]
    for part in _set_partitions(rest, k - 1):
        yield [[first]] + part
    for part in _set_partitions(rest, k):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1 :]


def _ordered_partitions(elems: list[int], k: int) -> Iterator[tuple[frozenset[int], ...]]:
    for part in _set_partitions(elems, k):
        blocks = [frozenset(b) for b in part]
        yield from itertools.permutations(blocks)


def _signed_subsets(n: int, size: int) -> Iterator[list[int]]:
    for verts in itertools.combinations(range(1, n + 1), size):
        for signs in itertools.product((1, -1), repeat=size):
            yield [v * s for v, s in zip(verts, signs)]


def _check_graph(g: SignedGraph):
    if g.is_empty():
        raise EmptyComplexError(f"{g} has no edge or half-edge; its coloring complex is undefined")
    if g.n > MAX_VERTICES:
        raise ValueError(f"n={g.n} exceeds the size guard {MAX_VERTICES}")


def _facets(g: SignedGraph) -> set[Face]:
    n = g.n
    ground = _ground(n)
    out: set[Face] = set()
    # every ±j pair meets the last block, so the first n-1 blocks hold n-1 or n elements
    for size in (n - 1, n):
        for subset in _signed_subsets(n, size):
            for blocks in _ordered_partitions(subset, n - 1):
                last = ground - frozenset(subset)
                big = [b for b in blocks if len(b) > 1]
                by_edge = len(big) == 1 and contains_edge(big[0], g)
                by_half = any(h in last and -h in last for h in g.half)
                if by_edge or by_half:
                    out.add(Face(tuple(blocks) + (last,)))
    return out


def _in_hyperplane(chain: list[frozenset[int]], g: SignedGraph) -> bool:
    def coord(q, k):
        return 1 if k in q else (-1 if -k in q else 0)

    for a, b in g.pos:
        if all(coord(q, a) == coord(q, b) for q in chain):
            return True
    for a, b in g.neg:
        if all(coord(q, a) == -coord(q, b) for q in chain):
            return True
    for h in g.half:
        if all(coord(q, h) == 0 for q in chain):
            return True
    return False


def geometric_faces(g: SignedGraph) -> dict[int, set[Face]]:
    """Faces of the type B triangulation whose vertices share a hyperplane of ``g``.

    Independent of the facet description: walks every chain of the full
    triangulation of the cube boundary and tests 0/±1 vertex coordinates.
    """
    _check_graph(g)
    n = g.n
    ground = _ground(n)
    out: dict[int, set[Face]] = {r: set() for r in range(-1, n - 1)}
    out[-1].add(Face((ground,)))
    for size in range(1, n + 1):
        for subset in _signed_subsets(n, size):
            last = ground - frozenset(subset)
            for k in range(1, size + 1):
                for blocks in _ordered_partitions(subset, k):
                    face = Face(tuple(blocks) + (last,))
                    if _in_hyperplane(face.vertices(), g):
                        out.setdefault(face.grade, set()).add(face)
    return out


def apply_permutation(f: Face, p: SignedPermutation) -> Face:
    """``π(P_1|...|P_{r+1}|P_{r+2}) = (P_{π⁻¹(1)}|...|P_{π⁻¹(r+1)}|P'_{r+2})`` with ``P_{-i} = -P_i``."""
    r1 = len(f.blocks) - 1
    if p.n != r1:
        raise ValueError(f"B_{p.n} does not act on grade {f.grade} faces")
    return _apply_window(f, inverse(p).window)


def _apply_window(f: Face, inv: tuple[int, ...]) -> Face:
    new = []
    for t in inv:
        b = f.blocks[abs(t) - 1]
        new.append(b if t > 0 else frozenset(-x for x in b))
    moved = frozenset().union(*new) if new else frozenset()
    return Face(tuple(new) + (_ground(f.n) - moved,))


def switch_face(f: Face, v: int) -> Face:
    """Exchange ``v`` and ``-v`` in every block."""
    return Face(tuple(frozenset(-x if abs(x) == v else x for x in b) for b in f.blocks))


class ColoringComplex:
    """Graded face basis of the coloring complex of a signed graph, with caches."""

    def __init__(self, g: SignedGraph):
        _check_graph(g)
        self.graph = g
        self.n = g.n
        self.facets = frozenset(_facets(g))
        graded: dict[int, set[Face]] = {self.n - 2: set(self.facets)}
        for r in range(self.n - 2, -1, -1):
            graded[r - 1] = {f.merge(i) for f in graded[r] for i in range(r + 1)}
        self.faces: dict[int, tuple[Face, ...]] = {
            r: tuple(sorted(fs, key=Face.sort_key)) for r, fs in sorted(graded.items())
        }
        self.index: dict[int, dict[Face, int]] = {
            r: {f: i for i, f in enumerate(fs)} for r, fs in self.faces.items()
        }
        self._actions: dict[tuple[int, SignedPermutation], list[int]] = {}
        self._boundaries: dict[int, QMatrix] = {}
        self._algebra: dict[tuple[int, AlgebraElement], QMatrix] = {}

    @property
    def grades(self) -> range:
        return range(-1, self.n - 1)

    def dim(self, r: int) -> int:
        return len(self.faces.get(r, ()))

    def f_vector(self) -> tuple[int, ...]:
        return tuple(self.dim(r) for r in self.grades)

    def boundary_matrix(self, r: int) -> QMatrix:
        if not 0 <= r <= self.n - 2:
            raise ValueError(f"grade {r} outside 0..{self.n - 2}")
        if r not in self._boundaries:
            target = self.index[r - 1]
            rows: dict[int, dict[int, int]] = {}
            for c, f in enumerate(self.faces[r]):
                for i in range(r + 1):
                    row = rows.setdefault(target[f.merge(i)], {})
                    row[c] = row.get(c, 0) + (-1) ** i
            self._boundaries[r] = QMatrix.from_integer_rows(self.dim(r - 1), self.dim(r), rows)
        return self._boundaries[r]

    def action_indices(self, r: int, p: SignedPermutation) -> list[int]:
        """``out[c]`` is the index of ``π · faces[r][c]``."""
        key = (r, p)
        if key not in self._actions:
            if p.n != r + 1:
                raise ValueError(f"B_{p.n} does not act on grade {r}")
            idx = self.index[r]
            inv = inverse(p).window
            out = []
            for f in self.faces[r]:
                g = _apply_window(f, inv)
                try:
                    out.append(idx[g])
                except KeyError:
                    raise ConsistencyError(f"{p} maps face {f} to {g}, outside the complex") from None
            self._actions[key] = out
        return self._actions[key]

    def action_matrix(self, r: int, p: SignedPermutation) -> QMatrix:
        perm = self.action_indices(r, p)
        return QMatrix.from_integer_rows(self.dim(r), self.dim(r), {perm[c]: {c: 1} for c in range(len(perm))})

    def algebra_action_matrix(self, r: int, a: AlgebraElement) -> QMatrix:
        if a.n != r + 1:
            raise ValueError(f"an element of Q[B_{a.n}] does not act on grade {r}")
        key = (r, a)
        if key not in self._algebra:
            den = lcm(*(c.denominator for c in a.coeffs.values())) if a.coeffs else 1
            rows: dict[int, dict[int, int]] = {}
            for p, c in a.coeffs.items():
                num = c.numerator * (den // c.denominator)
                for col, target in enumerate(self.action_indices(r, p)):
                    row = rows.setdefault(target, {})
                    row[col] = row.get(col, 0) + num
            self._algebra[key] = QMatrix.from_integer_rows(self.dim(r), self.dim(r), rows, den)
        return self._algebra[key]

    def projector(self, r: int, j: int) -> QMatrix:
        """Matrix of ``ρ_{r+1}^(j)`` on grade ``r``; zero when ``j > r+1``."""
        if j < 0 or j > r + 1:
            return QMatrix.zeros(self.dim(r), self.dim(r))
        return self.algebra_action_matrix(r, eulerian_idempotent(r + 1, j))

    def vector(self, r: int, chain: dict[Face, Fraction]) -> list[Fraction]:
        out = [Fraction(0)] * self.dim(r)
        for f, c in chain.items():
            out[self.index[r][f]] += c
        return out

    def __repr__(self) -> str:
        return f"ColoringComplex({self.graph}, f={self.f_vector()})"


@lru_cache(maxsize=16)
def coloring_complex(g: SignedGraph) -> ColoringComplex:
    return ColoringComplex(g)


def facets(g: SignedGraph) -> frozenset[Face]:
    return coloring_complex(g).facets


def faces(g: SignedGraph) -> dict[int, tuple[Face, ...]]:
    return coloring_complex(g).faces


def boundary_matrix(g: SignedGraph, r: int) -> QMatrix:
    return coloring_complex(g).boundary_matrix(r)


def action_matrix(g: SignedGraph, r: int, p: SignedPermutation) -> QMatrix:
    return coloring_complex(g).action_matrix(r, p)


def algebra_action_matrix(g: SignedGraph, r: int, a: AlgebraElement) -> QMatrix:
    return coloring_complex(g).algebra_action_matrix(r, a)


def f_vector(g: SignedGraph) -> tuple[int, ...]:
    return coloring_complex(g).f_vector()


def group_orbit_count(cx: ColoringComplex, r: int) -> int:
    """Number of ``B_{r+1}``-orbits on grade ``r`` faces."""
    seen: set[int] = set()
    orbits = 0
    group = signed_permutations(r + 1)
    for c in range(cx.dim(r)):
        if c in seen:
            continue
        orbits += 1
        for p in group:
            seen.add(cx.action_indices(r, p)[c])
    return orbits
