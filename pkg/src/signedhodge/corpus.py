"""Test corpora: exhaustive small signed graphs and reproducible random ones.

Random graphs come from a 64-bit linear congruential generator (Knuth's MMIX
constants) so that a seed names the same corpus in any language::

    state <- (6364136223846793005 * state + 1442695040888963407) mod 2^64
    below(k) = (state >> 33) mod k          # after advancing the state

The initial state is the seed itself. For each pair ``i < j`` in
lexicographic order one ``below(5)`` draw decides: 0,1 absent, 2 positive,
3 negative, 4 both. Then for each vertex ``1..n`` a ``below(4)`` draw of 0
adds a half-edge. A graph with no edges at all is discarded and drawing
continues from the current state.
"""

from __future__ import annotations

import itertools

from .signed_graph import SignedGraph

__all__ = ["Lcg64", "DEFAULT_SEED", "canonical_form", "graph_classes", "random_corpus", "random_graph", "standard_corpus"]

MULTIPLIER = 6364136223846793005
INCREMENT = 1442695040888963407
MASK = (1 << 64) - 1
DEFAULT_SEED = 20130727


class Lcg64:
    def __init__(self, seed: int):
        self.state = seed & MASK

    def next(self) -> int:
        self.state = (MULTIPLIER * self.state + INCREMENT) & MASK
        return self.state

    def below(self, k: int) -> int:
        return (self.next() >> 33) % k


def random_graph(rng: Lcg64, n: int) -> SignedGraph:
    while True:
        pos, neg, half = [], [], []
        for pair in itertools.combinations(range(1, n + 1), 2):
            draw = rng.below(5)
            if draw in (2, 4):
                pos.append(pair)
            if draw in (3, 4):
                neg.append(pair)
        for v in range(1, n + 1):
            if rng.below(4) == 0:
                half.append(v)
        g = SignedGraph(n, pos, neg, half)
        if not g.is_empty():
            return g


def random_corpus(n: int, count: int, seed: int = DEFAULT_SEED) -> list[SignedGraph]:
    rng = Lcg64(seed)
    return [random_graph(rng, n) for _ in range(count)]


def canonical_form(g: SignedGraph) -> SignedGraph:
    """Lexicographically least relabeling of ``g``."""
    best = None
    for perm in itertools.permutations(range(1, g.n + 1)):
        h = g.relabel(dict(zip(range(1, g.n + 1), perm)))
        key = (h.pos, h.neg, h.half)
        if best is None or key < best[0]:
            best = (key, h)
    return best[1]


def graph_classes(n: int) -> list[SignedGraph]:
    """One representative per isomorphism class of signed graphs on ``[n]`` with an edge."""
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    seen = {}
    for states in itertools.product(range(4), repeat=len(pairs)):
        pos = [p for p, s in zip(pairs, states) if s & 1]
        neg = [p for p, s in zip(pairs, states) if s & 2]
        for mask in range(1 << n):
            half = [v for v in range(1, n + 1) if mask >> (v - 1) & 1]
            g = SignedGraph(n, pos, neg, half)
            if g.is_empty():
                continue
            c = canonical_form(g)
            seen.setdefault((c.pos, c.neg, c.half), c)
    return [seen[k] for k in sorted(seen)]


def standard_corpus(max_exhaustive: int = 3, random_n: int = 4, random_count: int = 50, seed: int = DEFAULT_SEED) -> list[SignedGraph]:
    out = []
    for n in range(1, max_exhaustive + 1):
        out += graph_classes(n)
    if random_count:
        out += random_corpus(random_n, random_count, seed)
    return out
