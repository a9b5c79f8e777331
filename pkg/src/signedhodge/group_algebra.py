"""Rational group algebra of ``B_n`` and its type B Eulerian idempotents."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Mapping

from .hyperoctahedral import SignedPermutation, compose, descents, sign, signed_permutations
from .ratmat import IntPolynomial

__all__ = [
    "AlgebraElement",
    "LAMBDA_RHO_SIGN_EXPONENT",
    "eulerian_idempotent",
    "idempotent_generating_value",
    "l_element",
    "lambda_element",
    "lambda_rho_sign_exponent",
    "lambda_via_idempotents",
    "multiply",
    "vandermonde_matrix",
]


class AlgebraElement:
    """Finitely supported ``B_n -> Q`` map, read as ``Σ c_π π``."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Mapping[SignedPermutation, object] | None = None):
        self.n = n
        clean: dict[SignedPermutation, Fraction] = {}
        for p, c in (coeffs or {}).items():
            if p.n != n:
                raise ValueError(f"{p} is not in B_{n}")
            q = Fraction(c)
            if q:
                clean[p] = q
        self.coeffs = clean

    @classmethod
    def identity(cls, n: int) -> "AlgebraElement":
        return cls(n, {SignedPermutation.identity(n): 1})

    @classmethod
    def zero(cls, n: int) -> "AlgebraElement":
        return cls(n)

    @classmethod
    def basis(cls, p: SignedPermutation) -> "AlgebraElement":
        return cls(p.n, {p: 1})

    def __getitem__(self, p: SignedPermutation) -> Fraction:
        return self.coeffs.get(p, Fraction(0))

    def support(self) -> list[SignedPermutation]:
        return sorted(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check(self, other: "AlgebraElement"):
        if self.n != other.n:
            raise ValueError(f"rank mismatch: Q[B_{self.n}] vs Q[B_{other.n}]")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        out = dict(self.coeffs)
        for p, c in other.coeffs.items():
            out[p] = out.get(p, 0) + c
        return AlgebraElement(self.n, out)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.n, {p: -c for p, c in self.coeffs.items()})

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def __rmul__(self, scalar) -> "AlgebraElement":
        s = Fraction(scalar)
        return AlgebraElement(self.n, {p: s * c for p, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        return self.__rmul__(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, frozenset(self.coeffs.items())))

    def __repr__(self) -> str:
        if not self.coeffs:
            return f"AlgebraElement(B_{self.n}: 0)"
        terms = " + ".join(f"{c}*{p}" for p, c in sorted(self.coeffs.items()))
        return f"AlgebraElement(B_{self.n}: {terms})"


@lru_cache(maxsize=None)
def _cayley(n: int):
    elems = signed_permutations(n)
    index = {p: i for i, p in enumerate(elems)}
    table = [[index[compose(a, b)] for b in elems] for a in elems]
    return elems, index, table


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Convolution product ``Σ a(g) b(h) (g∘h)``."""
    a._check(b)
    acc: dict[int | SignedPermutation, Fraction] = {}
    if a.n <= 4:
        elems, index, table = _cayley(a.n)
        bi = [(index[h], c) for h, c in b.coeffs.items()]
        for g, cg in a.coeffs.items():
            row = table[index[g]]
            for j, ch in bi:
                k = row[j]
                acc[k] = acc.get(k, 0) + cg * ch
        return AlgebraElement(a.n, {elems[k]: c for k, c in acc.items()})
    for g, cg in a.coeffs.items():
        for h, ch in b.coeffs.items():
            k = compose(g, h)
            acc[k] = acc.get(k, 0) + cg * ch
    return AlgebraElement(a.n, acc)


def _check_index(n: int, j: int):
    if not 0 <= j <= n:
        raise ValueError(f"index j={j} outside 0..{n}")


@lru_cache(maxsize=None)
def _by_descent(n: int) -> dict[int, list[tuple[SignedPermutation, int]]]:
    groups: dict[int, list[tuple[SignedPermutation, int]]] = {}
    for p in signed_permutations(n):
        groups.setdefault(descents(p), []).append((p, sign(p)))
    return groups


def _l(n: int, j: int) -> AlgebraElement:
    # zero outside 0..n, as an empty descent class
    eps = -1 if (j - 1) % 2 else 1
    return AlgebraElement(n, {p: eps * s for p, s in _by_descent(n).get(j, [])})


@lru_cache(maxsize=None)
def l_element(n: int, j: int) -> AlgebraElement:
    """``(-1)^(j-1) Σ_{des π = j} sgn(π) π``."""
    _check_index(n, j)
    return _l(n, j)


def _lambda(n: int, j: int) -> AlgebraElement:
    out = AlgebraElement.zero(n)
    for i in range(j + 1):
        out = out + ((-1) ** i * comb(n + i, i)) * _l(n, j - i)
    return out


@lru_cache(maxsize=None)
def lambda_element(n: int, j: int) -> AlgebraElement:
    """``Σ_{i=0}^{j} (-1)^i C(n+i, i) l_n^(j-i)``."""
    _check_index(n, j)
    return _lambda(n, j)


@lru_cache(maxsize=None)
def _descent_polynomial(n: int, d: int) -> IntPolynomial:
    out = IntPolynomial((1,))
    for k in range(1, n + 1):
        out = out * IntPolynomial((2 * k - 1 - 2 * d, 1))
    return out


@lru_cache(maxsize=None)
def _idempotents(n: int) -> tuple[AlgebraElement, ...]:
    norm = 2**n * factorial(n)
    parts: list[dict[SignedPermutation, Fraction]] = [{} for _ in range(n + 1)]
    # the x-polynomial depends on π only through des(π)
    for d, members in _by_descent(n).items():
        poly = _descent_polynomial(n, d)
        for j in range(n + 1):
            c = Fraction(poly.coefficient(j), norm)
            if c:
                for p, s in members:
                    parts[j][p] = s * c
    return tuple(AlgebraElement(n, part) for part in parts)


def eulerian_idempotent(n: int, j: int) -> AlgebraElement:
    """Coefficient of ``x^j`` in ``Σ_π [Π_k (x - 2des(π) + 2k - 1) / (2^n n!)] sgn(π) π``."""
    _check_index(n, j)
    return _idempotents(n)[j]


def idempotent_generating_value(n: int, x) -> AlgebraElement:
    """The generating element ``Σ_j x^j ρ_n^(j)`` evaluated at a rational ``x``."""
    x = Fraction(x)
    out = AlgebraElement.zero(n)
    for j, e in enumerate(_idempotents(n)):
        out = out + x**j * e
    return out


# Exponent e(j) in ``λ_n^(j) = (-1)^e(j) ρ_n(2j+1)``. Two printed forms exist,
# ``j - 1`` and ``j``; exact computation at small rank selects ``j - 1``
# (see ``lambda_rho_sign_exponent``).
LAMBDA_RHO_SIGN_EXPONENT = "j-1"


def lambda_rho_sign_exponent(n: int) -> str | None:
    """Which exponent, ``"j-1"`` or ``"j"``, makes the λ/ρ relation hold for all j in 0..n."""
    for label, shift in (("j-1", -1), ("j", 0)):
        if all(
            _lambda(n, j) == (-1) ** ((j + shift) % 2) * idempotent_generating_value(n, 2 * j + 1)
            for j in range(n + 1)
        ):
            return label
    return None


def lambda_via_idempotents(n: int, j: int) -> AlgebraElement:
    return (-1) ** ((j - 1) % 2) * idempotent_generating_value(n, 2 * j + 1)


def vandermonde_matrix(n: int) -> list[list[int]]:
    """Rows express ``λ_n^(j)`` in the basis ``ρ_n^(0..n)``: entry ``(-1)^(j-1) (2j+1)^k``."""
    return [[(-1) ** ((j - 1) % 2) * (2 * j + 1) ** k for k in range(n + 1)] for j in range(n + 1)]
