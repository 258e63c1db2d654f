"""Ground-truth counts of (isolate) dominating sets by exhaustive enumeration.

Every subset of ``V(G)`` is visited once.  The range ``[0, 2**n)`` is cut into
fixed-size chunks of consecutive masks; each chunk is tested with vectorised
bit operations and reduced to a per-cardinality histogram, and histograms are
summed.  Chunk boundaries do not depend on the worker count, so the merged
table is identical for any degree of parallelism.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import comb

import numpy as np

from .graph import Graph, bits

DEFAULT_CAP = 26
# uint64 masks
_HARD_CAP = 62
CHUNK_BITS = 18


class CapExceeded(RuntimeError):
    """The graph is too large for exhaustive enumeration under the current cap."""


class NoIsolateDominatingSet(ValueError):
    """Raised by gamma0 when the graph admits no isolate dominating set."""


@dataclass(frozen=True)
class CountTable:
    """``counts[i]`` is the number of qualifying vertex sets of size ``i``."""

    n: int
    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.counts) != self.n + 1:
            raise ValueError(
                f"count table for order {self.n} needs {self.n + 1} entries, got {len(self.counts)}"
            )
        for i, c in enumerate(self.counts):
            if c < 0:
                raise ValueError(f"negative count at cardinality {i}")

    @classmethod
    def from_list(cls, counts) -> CountTable:
        counts = tuple(int(c) for c in counts)
        return cls(len(counts) - 1, counts)

    def __getitem__(self, i: int) -> int:
        if 0 <= i <= self.n:
            return self.counts[i]
        return 0

    def __len__(self) -> int:
        return len(self.counts)

    def __iter__(self):
        return iter(self.counts)

    def total(self) -> int:
        return sum(self.counts)

    def nonzero(self) -> list[tuple[int, int]]:
        return [(i, c) for i, c in enumerate(self.counts) if c]

    def within_binomial_bounds(self) -> bool:
        return all(c <= comb(self.n, i) for i, c in enumerate(self.counts))


def enumeration_cap() -> int:
    """The active cap: ``ISODOM_CAP`` if set, else ``DEFAULT_CAP``."""
    raw = os.environ.get("ISODOM_CAP")
    if raw is None:
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"ISODOM_CAP must be an integer, got {raw!r}") from None
    return min(cap, _HARD_CAP)


def _check_cap(g: Graph, cap: int | None) -> None:
    limit = enumeration_cap() if cap is None else min(cap, _HARD_CAP)
    if g.n > limit:
        raise CapExceeded(
            f"graph has {g.n} vertices; exhaustive enumeration is capped at {limit}"
        )


def is_dominating(g: Graph, s: int) -> bool:
    covered = s
    for v in bits(s):
        covered |= g.adjacency[v]
    return covered == g.full


def has_isolated_vertex_in_induced(g: Graph, s: int) -> bool:
    if s == 0:
        raise ValueError("the induced subgraph of the empty set has no vertices")
    return any(not g.adjacency[v] & s for v in bits(s))


def is_isolate_dominating(g: Graph, s: int) -> bool:
    return s != 0 and is_dominating(g, s) and has_isolated_vertex_in_induced(g, s)


def _chunk_histogram(g: Graph, start: int, stop: int, isolate: bool) -> np.ndarray:
    s = np.arange(start, stop, dtype=np.uint64)
    covered = s.copy()
    has_isolated = np.zeros(len(s), dtype=bool)
    one = np.uint64(1)
    for v, row in enumerate(g.adjacency):
        member = ((s >> np.uint64(v)) & one).astype(bool)
        nbrs = np.uint64(row)
        covered[member] |= nbrs
        if isolate:
            has_isolated |= member & ((s & nbrs) == 0)
    ok = covered == np.uint64(g.full)
    if isolate:
        ok &= has_isolated
    sizes = np.bitwise_count(s[ok])
    return np.bincount(sizes, minlength=g.n + 1)


def _sweep(g: Graph, isolate: bool, workers: int | None, cap: int | None) -> CountTable:
    _check_cap(g, cap)
    total = 1 << g.n
    step = 1 << CHUNK_BITS
    chunks = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
    if workers is None:
        workers = os.cpu_count() or 1
    counts = [0] * (g.n + 1)
    if workers <= 1 or len(chunks) == 1:
        parts = (_chunk_histogram(g, lo, hi, isolate) for lo, hi in chunks)
        for part in parts:
            for i, c in enumerate(part.tolist()):
                counts[i] += c
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(lambda c: _chunk_histogram(g, *c, isolate), chunks):
                for i, c in enumerate(part.tolist()):
                    counts[i] += c
    return CountTable(g.n, tuple(counts))


def count_dominating(g: Graph, *, workers: int | None = None, cap: int | None = None) -> CountTable:
    return _sweep(g, False, workers, cap)


def count_isolate_dominating(
    g: Graph, *, workers: int | None = None, cap: int | None = None
) -> CountTable:
    return _sweep(g, True, workers, cap)


def gamma(g: Graph, *, cap: int | None = None) -> int:
    if g.n < 1:
        raise ValueError("domination number is undefined for the empty graph")
    table = count_dominating(g, cap=cap)
    return next(i for i, c in enumerate(table) if c)


def gamma0(g: Graph, *, cap: int | None = None) -> int:
    if g.n < 1:
        raise NoIsolateDominatingSet("the empty graph has no isolate dominating set")
    table = count_isolate_dominating(g, cap=cap)
    for i, c in enumerate(table):
        if c:
            return i
    raise NoIsolateDominatingSet("graph admits no isolate dominating set")


def enumerate_isolate_dominating(g: Graph, i: int, *, cap: int | None = None) -> list[int]:
    """All isolate dominating sets of size ``i`` as bitsets, in increasing order."""
    _check_cap(g, cap)
    if not 0 <= i <= g.n:
        raise ValueError(f"cardinality {i} out of range 0..{g.n}")
    out = []
    total = 1 << g.n
    step = 1 << CHUNK_BITS
    for lo in range(0, total, step):
        s = np.arange(lo, min(lo + step, total), dtype=np.uint64)
        s = s[np.bitwise_count(s) == i]
        out.extend(m for m in s.tolist() if is_isolate_dominating(g, m))
    return out
