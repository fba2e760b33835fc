"""Seeded generation of Hamiltonian chordal graphs.

Randomness comes from SplitMix64 so that a corpus is reproducible from its
seeds on any platform or language:

    state = (state + 0x9E3779B97F4A7C15) mod 2**64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2**64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) mod 2**64
    output z ^ (z >> 31)

Bounded integers use the multiply-shift map ``(x * m) >> 64``; uniform
floats use the top 53 bits, ``(x >> 11) * 2**-53``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, replace

from .graph import Graph, bits
from .recognition import FILTERS

log = logging.getLogger(__name__)

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + _GOLDEN) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, m: int) -> int:
        return (self.next_u64() * m) >> 64

    def uniform(self) -> float:
        return (self.next_u64() >> 11) * 2.0**-53

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


CLASS_FILTERS = frozenset({"strongly_chordal", "fan3_free", "fan4_free", "abar_free",
                           "k5e_twins_ok"})


@dataclass(frozen=True)
class GenSpec:
    n: int
    seed: int = 0
    fill_density: float = 0.0
    class_filters: frozenset = frozenset()

    def __post_init__(self):
        if self.n < 3:
            raise ValueError(f"n must be >= 3, got {self.n}")
        if not 0.0 <= self.fill_density <= 1.0:
            raise ValueError(f"fill_density must be in [0, 1], got {self.fill_density}")
        filters = frozenset(self.class_filters)
        unknown = filters - CLASS_FILTERS
        if unknown:
            raise ValueError(f"unknown class filters: {sorted(unknown)}")
        object.__setattr__(self, "class_filters", filters)
        object.__setattr__(self, "seed", self.seed & _MASK64)


def _fill_in(adj: list[int], order: list[int]) -> None:
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [u for u in bits(adj[v]) if pos[u] > pos[v]]
        clique = 0
        for u in later:
            clique |= 1 << u
        for u in later:
            adj[u] |= clique & ~(1 << u)


def random_hamiltonian_chordal(spec: GenSpec) -> Graph:
    """Chordal graph containing the Hamiltonian cycle v0 v1 ... v(n-1).

    Fill-in along a random elimination order chordalises the cycle; extra
    non-edges are then added with probability ``fill_density`` and the same
    order is used to chordalise again.
    """
    n = spec.n
    rng = SplitMix64(spec.seed)
    adj = [0] * n
    for i in range(n):
        j = (i + 1) % n
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    order = list(range(n))
    rng.shuffle(order)
    _fill_in(adj, order)
    for i in range(n):
        for j in range(i + 1, n):
            if not adj[i] >> j & 1 and rng.uniform() < spec.fill_density:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    _fill_in(adj, order)
    return Graph.from_adjacency([f"v{i}" for i in range(n)], adj)


def attempt_seed(seed: int, attempt: int) -> int:
    """Seed of the given rejection-sampling attempt; attempt 0 reuses ``seed``."""
    if attempt == 0:
        return seed
    return SplitMix64(seed ^ (attempt * _GOLDEN & _MASK64)).next_u64()


def passes_filters(g: Graph, filters) -> bool:
    return all(FILTERS[name](g) for name in sorted(filters))


def sample_in_class(spec: GenSpec, max_attempts: int = 100) -> Graph | None:
    """Rejection-sample until every class filter passes; None when out of attempts."""
    for attempt in range(max_attempts):
        g = random_hamiltonian_chordal(replace(spec, seed=attempt_seed(spec.seed, attempt)))
        if passes_filters(g, spec.class_filters):
            log.debug("accepted n=%d seed=%d after %d attempts", spec.n, spec.seed, attempt + 1)
            return g
    log.debug("no sample in class %s after %d attempts", sorted(spec.class_filters), max_attempts)
    return None
