"""The hyperoctahedral group ``B_n`` of signed permutations in window notation."""

from __future__ import annotations

import itertools
import re
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "MAX_RANK",
    "SignedPermutation",
    "compose",
    "coxeter_length",
    "descents",
    "inverse",
    "parse_window",
    "sign",
    "signed_permutations",
]

MAX_RANK = 6


@dataclass(frozen=True, order=True)
class SignedPermutation:
    """``window[i-1] = π(i)``; implicitly ``π(-i) = -π(i)`` and ``π(0) = 0``."""

    window: tuple[int, ...]

    def __post_init__(self):
        w = tuple(int(x) for x in self.window)
        if sorted(abs(x) for x in w) != list(range(1, len(w) + 1)):
            raise ValueError(f"{list(w)} is not a signed permutation")
        object.__setattr__(self, "window", w)

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.window)

    def __call__(self, i: int) -> int:
        if i == 0:
            return 0
        v = self.window[abs(i) - 1]
        return v if i > 0 else -v

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        return compose(self, other)

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.window, 1))

    def __str__(self) -> str:
        return "[" + " ".join(str(x) for x in self.window) + "]"


_WINDOW = re.compile(r"^\s*\[\s*(-?\d+(?:\s+-?\d+)*)?\s*\]\s*$")


def parse_window(text: str) -> SignedPermutation:
    m = _WINDOW.match(text)
    if not m:
        raise ValueError(f"not a window: {text!r}")
    body = m.group(1)
    return SignedPermutation(tuple(int(t) for t in body.split()) if body else ())


def compose(a: SignedPermutation, b: SignedPermutation) -> SignedPermutation:
    """``(a∘b)(i) = a(b(i))``."""
    if a.n != b.n:
        raise ValueError(f"rank mismatch: B_{a.n} vs B_{b.n}")
    aw = a.window
    return SignedPermutation(tuple(aw[x - 1] if x > 0 else -aw[-x - 1] for x in b.window))


def inverse(a: SignedPermutation) -> SignedPermutation:
    out = [0] * a.n
    for i, x in enumerate(a.window, 1):
        out[abs(x) - 1] = i if x > 0 else -i
    return SignedPermutation(tuple(out))


def descents(a: SignedPermutation) -> int:
    """Type B descents: positions ``0 <= i < n`` with ``π(i) > π(i+1)``, ``π(0) = 0``."""
    w = (0,) + a.window
    return sum(1 for i in range(a.n) if w[i] > w[i + 1])


def sign(a: SignedPermutation) -> int:
    """Determinant of the signed permutation matrix, i.e. ``(-1)^length``."""
    # parity of the underlying permutation via cycle count
    n = a.n
    seen = [False] * n
    parity = 0
    for start in range(n):
        if seen[start]:
            continue
        k = start
        length = 0
        while not seen[k]:
            seen[k] = True
            k = abs(a.window[k]) - 1
            length += 1
        parity += length - 1
    parity += sum(1 for x in a.window if x < 0)
    return -1 if parity % 2 else 1


def _generators(n: int) -> list[SignedPermutation]:
    gens = []
    if n >= 1:
        gens.append(SignedPermutation((-1,) + tuple(range(2, n + 1))))
    for i in range(1, n):
        w = list(range(1, n + 1))
        w[i - 1], w[i] = w[i], w[i - 1]
        gens.append(SignedPermutation(tuple(w)))
    return gens


@lru_cache(maxsize=None)
def _length_table(n: int) -> dict[SignedPermutation, int]:
    start = SignedPermutation.identity(n)
    dist = {start: 0}
    queue = deque([start])
    gens = _generators(n)
    while queue:
        w = queue.popleft()
        for s in gens:
            u = compose(w, s)
            if u not in dist:
                dist[u] = dist[w] + 1
                queue.append(u)
    return dist


def coxeter_length(a: SignedPermutation) -> int:
    """Reduced-word length by breadth-first search over ``s_0, s_1, ..., s_{n-1}``.

    Exponential in ``n``; intended as an independent check of :func:`sign`.
    """
    if a.n > 4:
        raise ValueError("breadth-first length search is limited to n <= 4")
    return _length_table(a.n)[a]


@lru_cache(maxsize=None)
def signed_permutations(n: int) -> tuple[SignedPermutation, ...]:
    """All ``2^n n!`` elements, ordered by (underlying permutation, sign vector)."""
    if n < 0 or n > MAX_RANK:
        raise ValueError(f"rank {n} outside 0..{MAX_RANK}")
    out = []
    for p in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            out.append(SignedPermutation(tuple(x * s for x, s in zip(p, signs))))
    return tuple(out)
