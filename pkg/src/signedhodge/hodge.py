"""Homology and Hodge decompositions of signed-graph coloring complexes.

Both Hodge-dimension routes work with the projectors ``ρ_{r+1}^(j)`` acting on
grade ``r``. The Euler route sums signed projector traces over all grades,
which is valid because homology is concentrated in the top grade; the kernel
route measures ``ker ∂ ∩ im P`` directly at the top grade.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .coloring_complex import (
    ColoringComplex,
    EmptyComplexError,
    Face,
    coloring_complex,
    switch_face,
)
from .group_algebra import AlgebraElement, _lambda, _l
from .hyperoctahedral import SignedPermutation, sign, signed_permutations
from .ratmat import IntPolynomial, QMatrix, kernel_dim, matmul, rank, trace
from .signed_graph import (
    ConsistencyError,
    Edge,
    SignedGraph,
    chromatic_by_interpolation,
    chromatic_coefficients,
    chromatic_polynomial,
    contract_edge,
    delete_edge,
    switch_at,
)

__all__ = [
    "Check",
    "HodgeReport",
    "base_cycle_graph",
    "build_base_cycle",
    "chain_hodge_dims",
    "homology_dims",
    "hodge_dims_euler",
    "hodge_dims_kernel",
    "verify_block_diagonal",
    "verify_intertwining",
    "verify_main_theorem",
    "verify_proof_identity",
    "verify_switching_equivariance",
    "group_algebra_checks",
]


@dataclass
class Check:
    """Outcome of one named verification, with diagnostics."""

    name: str
    passed: bool = True
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)

    def record(self, ok: bool, label: str):
        self.cases += 1
        if not ok:
            self.passed = False
            self.failures.append(label)

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "cases": self.cases,
            "failures": list(self.failures),
            "skipped": list(self.skipped),
        }

    @classmethod
    def from_json(cls, name: str, data: dict) -> "Check":
        return cls(name, data["passed"], data["cases"], list(data["failures"]), list(data["skipped"]))


def _complex(g: SignedGraph | ColoringComplex) -> ColoringComplex:
    return g if isinstance(g, ColoringComplex) else coloring_complex(g)


def homology_dims(g: SignedGraph | ColoringComplex) -> tuple[int, ...]:
    """Reduced rational Betti numbers for grades ``-1 .. n-2``."""
    cx = _complex(g)
    top = cx.n - 2
    ranks = {r: rank(cx.boundary_matrix(r)) for r in range(0, top + 1)}
    out = []
    for r in cx.grades:
        z = cx.dim(r) - ranks.get(r, 0)
        out.append(z - ranks.get(r + 1, 0))
    return tuple(out)


def _natural(x: Fraction, what: str) -> int:
    if x.denominator != 1 or x < 0:
        raise ConsistencyError(f"{what} = {x} is not a natural number")
    return int(x)


def chain_hodge_dims(cx: ColoringComplex | None, r: int, j: int) -> int:
    """``dim ρ_{r+1}^(j) C_r`` as a projector trace; 0 for an absent complex or grade."""
    if cx is None or cx.dim(r) == 0:
        return 0
    return _natural(trace(cx.projector(r, j)), f"trace of ρ^({j}) at grade {r}")


def hodge_dims_euler(g: SignedGraph | ColoringComplex) -> tuple[int, ...]:
    """``Σ_r (-1)^(n-2-r) dim C_r^(j)`` for ``j = 0..n-1``, grade -1 included."""
    cx = _complex(g)
    n = cx.n
    out = []
    for j in range(n):
        s = sum((-1) ** ((n - 2 - r) % 2) * chain_hodge_dims(cx, r, j) for r in cx.grades)
        if s < 0:
            raise ConsistencyError(f"Euler sum for j={j} is negative ({s})")
        out.append(s)
    return tuple(out)


def hodge_dims_kernel(g: SignedGraph | ColoringComplex) -> tuple[int, ...]:
    """``trace(P) - rank(∂ P)`` at the top grade, one entry per ``j = 0..n-1``."""
    cx = _complex(g)
    top = cx.n - 2
    out = []
    for j in range(cx.n):
        p = cx.projector(top, j)
        t = _natural(trace(p), f"trace of ρ^({j}) at grade {top}")
        if top >= 0:
            t -= rank(matmul(cx.boundary_matrix(top), p))
        out.append(t)
    return tuple(out)


# ---------------------------------------------------------------------------
# intertwining


def _act(cx: ColoringComplex, r: int, a: AlgebraElement) -> QMatrix:
    # rank-0 elements act on the single empty face by their scalar
    return cx.algebra_action_matrix(r, a)


def _witness(left: QMatrix, right: QMatrix) -> int:
    diff = (left - right).integer_rows()
    return min(j for row in diff.values() for j in row)


def verify_intertwining(g: SignedGraph | ColoringComplex) -> dict[str, Check]:
    """Check ``∂ l_{r+1}^(j) = (l_r^(j) + l_r^(j-1)) ∂``, ``∂ λ_{r+1}^(j) = λ_r^(j) ∂``
    and ``∂ ρ_{r+1}^(j) = ρ_r^(j) ∂`` as exact matrix identities at every grade."""
    cx = _complex(g)
    checks = {name: Check(name) for name in ("intertwining_l", "intertwining_lambda", "intertwining_rho")}
    for r in range(0, cx.n - 1):
        d = cx.boundary_matrix(r)
        for j in range(0, cx.n):
            if j > r + 1:
                for c in checks.values():
                    c.skipped.append(f"r={r} j={j}: vacuous (j > r+1)")
                continue
            # l-family: the displayed identity is stated for 1 <= j <= r+1
            if j == 0:
                checks["intertwining_l"].skipped.append(f"r={r} j=0: outside 1..r+1")
            else:
                left = matmul(d, _act(cx, r, _l(r + 1, j)))
                right = matmul(_act(cx, r - 1, _l(r, j) + _l(r, j - 1)), d)
                ok = left == right
                checks["intertwining_l"].record(ok, "" if ok else f"r={r} j={j} column {_witness(left, right)}")
            left = matmul(d, _act(cx, r, _lambda(r + 1, j)))
            right = matmul(_act(cx, r - 1, _lambda(r, j)), d)
            ok = left == right
            checks["intertwining_lambda"].record(ok, "" if ok else f"r={r} j={j} column {_witness(left, right)}")
            left = matmul(d, cx.projector(r, j))
            right = matmul(cx.projector(r - 1, j), d)
            ok = left == right
            checks["intertwining_rho"].record(ok, "" if ok else f"r={r} j={j} column {_witness(left, right)}")
    return checks


def verify_block_diagonal(g: SignedGraph | ColoringComplex) -> Check:
    """``ρ_r^(j) ∂_r ρ_{r+1}^(k) = 0`` whenever ``j != k``."""
    cx = _complex(g)
    check = Check("block_diagonal")
    for r in range(0, cx.n - 1):
        d = cx.boundary_matrix(r)
        for k in range(0, r + 2):
            dp = matmul(d, cx.projector(r, k))
            for j in range(0, r + 1):
                if j == k:
                    continue
                ok = matmul(cx.projector(r - 1, j), dp).is_zero()
                check.record(ok, "" if ok else f"r={r} j={j} k={k}")
    return check


# ---------------------------------------------------------------------------
# base cases


def base_cycle_graph(n: int, kind: str) -> SignedGraph:
    if kind == "half-edge":
        return SignedGraph(n, half=[n])
    if kind == "edge":
        return SignedGraph(n, pos=[(n - 1, n)])
    raise ValueError(f"unknown base-cycle kind {kind!r}")


def base_cycle_face(n: int, kind: str) -> Face:
    neg = frozenset(range(-n, 0))
    if kind == "half-edge":
        return Face(tuple(frozenset([i]) for i in range(1, n)) + (neg | {n},))
    if kind == "edge":
        return Face(tuple(frozenset([i]) for i in range(1, n - 1)) + (frozenset([n - 1, n]), neg))
    raise ValueError(f"unknown base-cycle kind {kind!r}")


def build_base_cycle(n: int, kind: str) -> list[Fraction]:
    """``Γ = [1/(2^{n-1}(n-1)!) Σ_{σ ∈ B_{n-1}} sgn(σ) σ] γ`` over the top-grade basis of
    :func:`base_cycle_graph` ``(n, kind)``."""
    if n < 2:
        raise ValueError("base cycles need n >= 2")
    cx = coloring_complex(base_cycle_graph(n, kind))
    top = n - 2
    gamma = cx.index[top][base_cycle_face(n, kind)]
    norm = Fraction(1, 2 ** (n - 1) * factorial(n - 1))
    vec = [Fraction(0)] * cx.dim(top)
    for s in signed_permutations(n - 1):
        vec[cx.action_indices(top, s)[gamma]] += sign(s) * norm
    return vec


# ---------------------------------------------------------------------------
# chain-level deletion-contraction identity and switching


def _maybe_complex(g: SignedGraph) -> ColoringComplex | None:
    return None if g.is_empty() else coloring_complex(g)


def verify_proof_identity(g: SignedGraph) -> Check:
    """``dim C_r^(j)(G) = dim C_r^(j)(G∖e) - dim C_r^(j)(G/e) + dim C_r^(j)(E)`` for each positive ``e``.

    Empty coloring complexes contribute zero at every grade.
    """
    check = Check("proof_identity")
    cx = coloring_complex(g)
    for a, b in g.pos:
        e = Edge("+", a, b)
        dele = delete_edge(g, e)
        cont = contract_edge(g, e)
        single = SignedGraph(g.n, pos=[(a, b)])
        cdel, ccont, csingle = _maybe_complex(dele), _maybe_complex(cont), _maybe_complex(single)
        if cdel is None:
            check.skipped.append(f"e={e}: G∖e has no edges, its terms are 0")
        if ccont is None:
            check.skipped.append(f"e={e}: G/e has no edges, its terms are 0")
        for r in cx.grades:
            for j in range(0, r + 2):
                lhs = chain_hodge_dims(cx, r, j)
                rhs = (
                    chain_hodge_dims(cdel, r, j)
                    - (chain_hodge_dims(ccont, r, j) if ccont is not None and r <= ccont.n - 2 else 0)
                    + chain_hodge_dims(csingle, r, j)
                )
                check.record(lhs == rhs, f"e={e} r={r} j={j}: {lhs} != {rhs}")
    if not g.pos:
        check.skipped.append("no positive edges")
    return check


def _sample(group: tuple[SignedPermutation, ...], limit: int = 12) -> list[SignedPermutation]:
    if len(group) <= limit:
        return list(group)
    step = len(group) // limit
    return list(group[::step])[:limit]


def verify_switching_equivariance(g: SignedGraph, v: int) -> Check:
    """Exchanging ``v`` and ``-v`` maps the complex of ``g`` onto that of ``switch_at(g, v)``
    as a ``B``-equivariant chain isomorphism; Hodge dimensions agree."""
    check = Check(f"switching_v{v}")
    h = switch_at(g, v)
    cg, ch = coloring_complex(g), coloring_complex(h)
    maps: dict[int, list[int]] = {}
    for r in cg.grades:
        imgs = [switch_face(f, v) for f in cg.faces[r]]
        ok = set(imgs) == set(ch.faces[r]) and len(imgs) == ch.dim(r)
        check.record(ok, f"r={r}: face sets do not correspond")
        if not ok:
            return check
        maps[r] = [ch.index[r][f] for f in imgs]
    for r in range(0, cg.n - 1):
        dg, dh = cg.boundary_matrix(r), ch.boundary_matrix(r)
        # F_{r-1} ∂^G = ∂^H F_r, compared entry by entry through the index maps
        moved = {(maps[r - 1][i], maps[r][j]): q for (i, j), q in dg.entries.items()}
        check.record(moved == dh.entries, f"r={r}: face map does not commute with ∂")
        for p in _sample(signed_permutations(r + 1)):
            ag, ah = cg.action_indices(r, p), ch.action_indices(r, p)
            ok = all(maps[r][ag[c]] == ah[maps[r][c]] for c in range(cg.dim(r)))
            check.record(ok, f"r={r} π={p}: π∘f != f∘π")
    check.record(hodge_dims_euler(cg) == hodge_dims_euler(ch), "Hodge dimensions differ after switching")
    return check


# ---------------------------------------------------------------------------
# the report


@dataclass
class HodgeReport:
    graph: SignedGraph
    chromatic: IntPolynomial
    c: tuple[int, ...]
    homology: tuple[int, ...]
    hodge_euler: tuple[int, ...]
    hodge_kernel: tuple[int, ...]
    checks: dict[str, Check]
    verdict: bool

    @property
    def passed(self) -> bool:
        return self.verdict and all(c.passed for c in self.checks.values())

    def failed_checks(self) -> list[str]:
        return [name for name, c in self.checks.items() if not c.passed]

    def to_json(self) -> dict:
        return {
            "chromatic": list(self.chromatic.coeffs),
            "c": list(self.c),
            "homology": list(self.homology),
            "hodge_euler": list(self.hodge_euler),
            "hodge_kernel": list(self.hodge_kernel),
            "checks": {name: c.to_json() for name, c in self.checks.items()},
            "verdict": self.verdict,
        }

    @classmethod
    def from_json(cls, graph: SignedGraph, data: dict) -> "HodgeReport":
        return cls(
            graph,
            IntPolynomial(tuple(data["chromatic"])),
            tuple(data["c"]),
            tuple(data["homology"]),
            tuple(data["hodge_euler"]),
            tuple(data["hodge_kernel"]),
            {name: Check.from_json(name, c) for name, c in data["checks"].items()},
            data["verdict"],
        )


def verify_main_theorem(
    g: SignedGraph,
    *,
    block_diagonal: bool | None = None,
    switching: bool = False,
) -> HodgeReport:
    """Compute everything about ``g`` and compare ``c_j`` with the top Hodge pieces.

    ``block_diagonal`` defaults to on for ``n <= 4`` (it multiplies many
    projector pairs); ``switching`` adds the equivariance check at every vertex.
    """
    if g.is_empty():
        raise EmptyComplexError(f"{g} has no edge or half-edge; its coloring complex is undefined")
    cx = coloring_complex(g)
    checks: dict[str, Check] = {}

    poly = chromatic_polynomial(g)
    chk = Check("chromatic_paths")
    chk.record(poly == chromatic_by_interpolation(g), "deletion-contraction != interpolation")
    checks[chk.name] = chk
    c = chromatic_coefficients(g, poly)

    homology = homology_dims(cx)
    chk = Check("homology_concentration")
    for r, h in zip(cx.grades, homology):
        if r < cx.n - 2:
            chk.record(h == 0, f"H_{r} = {h}")
    checks[chk.name] = chk

    euler = hodge_dims_euler(cx)
    kernel = hodge_dims_kernel(cx)
    chk = Check("hodge_methods_agree")
    chk.record(euler == kernel, f"euler {euler} != kernel {kernel}")
    chk.record(sum(kernel) == homology[-1], f"Σ hodge {sum(kernel)} != top homology {homology[-1]}")
    checks[chk.name] = chk

    checks.update(verify_intertwining(cx))
    if block_diagonal is None:
        block_diagonal = cx.n <= 4
    if block_diagonal:
        checks["block_diagonal"] = verify_block_diagonal(cx)
    checks["proof_identity"] = verify_proof_identity(g)
    if switching:
        for v in range(1, g.n + 1):
            chk = verify_switching_equivariance(g, v)
            checks[chk.name] = chk

    verdict = tuple(c) == euler == kernel
    return HodgeReport(g, poly, tuple(c), homology, euler, kernel, checks, verdict)


def group_algebra_checks(max_rank: int) -> Check:
    """Orthogonal idempotency and partition of identity in ``Q[B_n]``, ``n <= max_rank``."""
    from .group_algebra import eulerian_idempotent, multiply

    check = Check("group_algebra")
    for n in range(1, max_rank + 1):
        rho = [eulerian_idempotent(n, j) for j in range(n + 1)]
        for r, s in itertools.product(range(n + 1), repeat=2):
            expect = rho[r] if r == s else AlgebraElement.zero(n)
            check.record(multiply(rho[r], rho[s]) == expect, f"n={n} r={r} s={s}")
        total = AlgebraElement.zero(n)
        for e in rho:
            total = total + e
        check.record(total == AlgebraElement.identity(n), f"n={n}: Σ ρ != id")
    return check
