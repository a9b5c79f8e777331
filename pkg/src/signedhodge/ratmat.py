"""Exact rational linear algebra and integer polynomials.

Matrices are stored sparsely as integer numerators over one shared positive
denominator, which keeps products and equality tests in machine-friendly
integer arithmetic while the public surface speaks :class:`fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence

__all__ = [
    "IntPolynomial",
    "QMatrix",
    "interpolate",
    "kernel_dim",
    "matmul",
    "rank",
    "rank_dense",
    "trace",
]


# ---------------------------------------------------------------------------
# polynomials


@dataclass(frozen=True)
class IntPolynomial:
    """Univariate polynomial with integer coefficients, ``coeffs[k]`` of ``x**k``."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = [int(a) for a in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def monomial(cls, k: int, a: int = 1) -> "IntPolynomial":
        return cls((0,) * k + (a,))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        m = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(tuple(self.coefficient(k) + other.coefficient(k) for k in range(m)))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-a for a in self.coeffs))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def __pow__(self, k: int) -> "IntPolynomial":
        out = IntPolynomial((1,))
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, x):
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def format(self, var: str = "λ") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            a = self.coeffs[k]
            if a == 0:
                continue
            mag = abs(a)
            if k == 0:
                body = str(mag)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if mag == 1 else f"{mag}{mono}"
            if not parts:
                parts.append(body if a > 0 else f"-{body}")
            else:
                parts.append(("+ " if a > 0 else "- ") + body)
        return " ".join(parts)

    def __str__(self) -> str:
        return self.format()


LAMBDA = IntPolynomial((0, 1))


def interpolate(points: Sequence[tuple[int, int]]) -> IntPolynomial:
    """Exact Lagrange interpolation through integer points.

    Raises ``ValueError`` when the interpolant has a non-integer coefficient.
    """
    xs = [Fraction(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    total = [Fraction(0)] * len(points)
    for i, (xi, yi) in enumerate(points):
        # basis polynomial prod_{m != i} (x - x_m) / (x_i - x_m)
        basis = [Fraction(1)]
        denom = Fraction(1)
        for m, xm in enumerate(xs):
            if m == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xm * basis[k + 1]
            denom *= xs[i] - xm
        scale = Fraction(yi) / denom
        for k, b in enumerate(basis):
            total[k] += scale * b
    if any(c.denominator != 1 for c in total):
        raise ValueError(f"interpolated coefficients are not integral: {total}")
    return IntPolynomial(tuple(int(c) for c in total))


# ---------------------------------------------------------------------------
# matrices


def _normalize(den: int, rows: dict[int, dict[int, int]]) -> tuple[int, dict[int, dict[int, int]]]:
    g = den
    for row in rows.values():
        for v in row.values():
            g = gcd(g, v)
            if g == 1:
                return den, rows
    if g > 1:
        rows = {i: {j: v // g for j, v in row.items()} for i, row in rows.items()}
        den //= g
    return den, rows


class QMatrix:
    """Immutable sparse matrix over the rationals.

    Only nonzero entries are stored. Internally the entries are
    ``num[i][j] / den`` with ``den`` positive and the whole array in lowest
    terms, so two equal matrices have identical internal state.
    """

    __slots__ = ("nrows", "ncols", "_den", "_rows")

    def __init__(self, nrows: int, ncols: int, entries: Mapping[tuple[int, int], object] | None = None):
        if nrows < 0 or ncols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        fr: dict[tuple[int, int], Fraction] = {}
        for (i, j), v in (entries or {}).items():
            if not (0 <= i < nrows and 0 <= j < ncols):
                raise IndexError(f"entry ({i}, {j}) outside {nrows}x{ncols}")
            q = Fraction(v)
            if q:
                fr[i, j] = q
        den = lcm(*(q.denominator for q in fr.values())) if fr else 1
        rows: dict[int, dict[int, int]] = {}
        for (i, j), q in fr.items():
            rows.setdefault(i, {})[j] = q.numerator * (den // q.denominator)
        self._init(nrows, ncols, den, rows)

    def _init(self, nrows, ncols, den, rows):
        self.nrows = nrows
        self.ncols = ncols
        self._den, self._rows = _normalize(den, rows)

    @classmethod
    def _raw(cls, nrows: int, ncols: int, den: int, rows: dict[int, dict[int, int]]) -> "QMatrix":
        # rows must hold nonzero ints only, no empty row dicts
        m = cls.__new__(cls)
        m._init(nrows, ncols, den, rows)
        return m

    @classmethod
    def from_integer_rows(cls, nrows: int, ncols: int, rows: Mapping[int, Mapping[int, int]], den: int = 1) -> "QMatrix":
        """Build from ``{row: {col: numerator}}`` over a common denominator."""
        if den <= 0:
            raise ValueError("denominator must be positive")
        clean = {}
        for i, row in rows.items():
            r = {j: int(v) for j, v in row.items() if v}
            if r:
                clean[i] = r
        return cls._raw(nrows, ncols, den, clean)

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls._raw(n, n, 1, {i: {i: 1} for i in range(n)})

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "QMatrix":
        return cls._raw(nrows, ncols, 1, {})

    @classmethod
    def from_dense(cls, data: Sequence[Sequence[object]]) -> "QMatrix":
        nrows = len(data)
        ncols = len(data[0]) if nrows else 0
        if any(len(r) != ncols for r in data):
            raise ValueError("ragged rows")
        return cls(nrows, ncols, {(i, j): v for i, r in enumerate(data) for j, v in enumerate(r)})

    # -- access ------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def denominator(self) -> int:
        return self._den

    def integer_rows(self) -> dict[int, dict[int, int]]:
        """Numerators by row; the caller must not mutate the result."""
        return self._rows

    @property
    def entries(self) -> dict[tuple[int, int], Fraction]:
        d = self._den
        return {(i, j): Fraction(v, d) for i, row in self._rows.items() for j, v in row.items()}

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        return Fraction(self._rows.get(i, {}).get(j, 0), self._den)

    def nnz(self) -> int:
        return sum(len(r) for r in self._rows.values())

    def to_dense(self) -> list[list[Fraction]]:
        out = [[Fraction(0)] * self.ncols for _ in range(self.nrows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def column(self, j: int) -> dict[int, Fraction]:
        return {i: Fraction(row[j], self._den) for i, row in self._rows.items() if j in row}

    def is_zero(self) -> bool:
        return not self._rows

    # -- arithmetic --------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, QMatrix):
            return NotImplemented
        return self.shape == other.shape and self._den == other._den and self._rows == other._rows

    def __hash__(self):
        return hash((self.shape, self._den, frozenset((i, frozenset(r.items())) for i, r in self._rows.items())))

    def __add__(self, other: "QMatrix") -> "QMatrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        den = lcm(self._den, other._den)
        a, b = den // self._den, den // other._den
        rows = {i: {j: v * a for j, v in r.items()} for i, r in self._rows.items()}
        for i, r in other._rows.items():
            tgt = rows.setdefault(i, {})
            for j, v in r.items():
                w = tgt.get(j, 0) + v * b
                if w:
                    tgt[j] = w
                else:
                    del tgt[j]
            if not tgt:
                del rows[i]
        return QMatrix._raw(self.nrows, self.ncols, den, rows)

    def __neg__(self) -> "QMatrix":
        return QMatrix._raw(self.nrows, self.ncols, self._den, {i: {j: -v for j, v in r.items()} for i, r in self._rows.items()})

    def __sub__(self, other: "QMatrix") -> "QMatrix":
        return self + (-other)

    def scale(self, c) -> "QMatrix":
        c = Fraction(c)
        if not c:
            return QMatrix.zeros(*self.shape)
        rows = {i: {j: v * c.numerator for j, v in r.items()} for i, r in self._rows.items()}
        return QMatrix._raw(self.nrows, self.ncols, self._den * c.denominator, rows)

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        return matmul(self, other)

    def transpose(self) -> "QMatrix":
        rows: dict[int, dict[int, int]] = {}
        for i, r in self._rows.items():
            for j, v in r.items():
                rows.setdefault(j, {})[i] = v
        return QMatrix._raw(self.ncols, self.nrows, self._den, rows)

    def apply(self, vec: Sequence[object]) -> list[Fraction]:
        """Matrix-vector product with an exact rational result."""
        if len(vec) != self.ncols:
            raise ValueError("vector length mismatch")
        v = [Fraction(x) for x in vec]
        out = []
        for i in range(self.nrows):
            row = self._rows.get(i)
            s = sum((c * v[j] for j, c in row.items()), Fraction(0)) if row else Fraction(0)
            out.append(s / self._den)
        return out

    def __repr__(self) -> str:
        return f"QMatrix({self.nrows}x{self.ncols}, nnz={self.nnz()})"


def matmul(a: QMatrix, b: QMatrix) -> QMatrix:
    """Exact product ``a @ b``."""
    if a.ncols != b.nrows:
        raise ValueError(f"cannot multiply {a.shape} by {b.shape}")
    brows = b._rows
    rows: dict[int, dict[int, int]] = {}
    for i, arow in a._rows.items():
        acc: dict[int, int] = {}
        for k, av in arow.items():
            brow = brows.get(k)
            if brow is None:
                continue
            for j, bv in brow.items():
                acc[j] = acc.get(j, 0) + av * bv
        acc = {j: v for j, v in acc.items() if v}
        if acc:
            rows[i] = acc
    return QMatrix._raw(a.nrows, b.ncols, a._den * b._den, rows)


def trace(m: QMatrix) -> Fraction:
    if m.nrows != m.ncols:
        raise ValueError(f"trace of non-square {m.shape} matrix")
    return Fraction(sum(r.get(i, 0) for i, r in m._rows.items()), m._den)


def _row_content(row: dict[int, int]) -> int:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    return g


def rank(m: QMatrix) -> int:
    """Rank over the rationals by sparse fraction-free elimination.

    The shared denominator does not affect rank, so elimination runs on the
    integer numerators. Each pivot step cross-multiplies by the reduced pair
    ``(p/g, a/g)`` and divides the new row by its content, which keeps
    entries small on the structured matrices this package produces.
    """
    # eliminate along the shorter dimension
    src = m._rows if m.nrows <= m.ncols else m.transpose()._rows
    rows = [dict(r) for r in src.values() if r]
    r = 0
    while rows:
        k = min(range(len(rows)), key=lambda t: len(rows[t]))
        prow = rows[k]
        rows[k] = rows[-1]
        rows.pop()
        c = min(prow, key=lambda t: abs(prow[t]))
        p = prow[c]
        r += 1
        survivors = []
        for row in rows:
            a = row.get(c)
            if a is None:
                survivors.append(row)
                continue
            g = gcd(p, a)
            pm, am = p // g, a // g
            if pm != 1:
                out = {j: v * pm for j, v in row.items()}
            else:
                out = dict(row)
            for j, v in prow.items():
                w = out.get(j, 0) - am * v
                if w:
                    out[j] = w
                else:
                    out.pop(j, None)
            if out:
                cg = _row_content(out)
                if cg > 1:
                    out = {j: v // cg for j, v in out.items()}
                survivors.append(out)
        rows = survivors
    return r


def rank_dense(data: Sequence[Sequence[object]]) -> int:
    """Textbook dense Gaussian elimination over Fractions; a reference oracle."""
    a = [[Fraction(x) for x in row] for row in data]
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(nrows):
            if i != r and a[i][c] != 0:
                f = a[i][c] / a[r][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
    return r


def kernel_dim(m: QMatrix) -> int:
    return m.ncols - rank(m)


def stack_columns(columns: Iterable[Mapping[int, object]], nrows: int) -> QMatrix:
    """Assemble a matrix from sparse column vectors."""
    entries = {}
    ncols = 0
    for j, col in enumerate(columns):
        ncols = j + 1
        for i, v in col.items():
            entries[i, j] = v
    return QMatrix(nrows, ncols, entries)
