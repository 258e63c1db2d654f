"""Closed forms and recurrences for isolate domination counts of graph families.

Each function evaluates the published expression as written, including the
ones known to disagree with brute force in some range (the literal path
dominating-set recurrence, the cycle recurrence, the corona upper bound).
Agreement with the oracle is checked in :mod:`isodom.verify`, never assumed
here.

Out-of-range recurrence terms (a path with ``m <= 0`` vertices, or a
cardinality outside ``1..m``) are resolved by a :class:`BaseCaseConvention`.
"""

from __future__ import annotations

import enum
import threading
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from . import graph, oracle
from .oracle import CountTable


class Variant(str, enum.Enum):
    LITERAL = "literal"
    CORRECTED = "corrected"
    RECONCILED = "reconciled"


@dataclass(frozen=True)
class BaseCaseConvention:
    """How recurrences treat paths and cardinalities outside the defined range.

    empty_path_dominated
        Take ``d(P_0, 0) = 1`` (the empty set dominates the empty path).
        Every other ``d(P_m, j)`` with ``m <= 0`` is 0.
    seed_small_paths
        Use the initial values ``d0(P_1, .)`` and ``d0(P_2, .)`` directly
        instead of pushing the isolate path recurrence below ``n = 3``.
        ``P_1 = K_1`` and ``P_2 = K_2``, so these come from :func:`d0_complete`.
    """

    empty_path_dominated: bool = True
    seed_small_paths: bool = True

    @property
    def name(self) -> str:
        for name, conv in CONVENTIONS.items():
            if conv == self:
                return name
        return f"custom(empty_path_dominated={self.empty_path_dominated}, seed_small_paths={self.seed_small_paths})"


DEFAULT_CONVENTION = BaseCaseConvention(True, True)
# every out-of-range term is 0 and the recurrence runs all the way down
ZERO_CONVENTION = BaseCaseConvention(False, False)
CONVENTIONS = {"default": DEFAULT_CONVENTION, "zero": ZERO_CONVENTION}


def binom(a: int, b: int) -> int:
    """Binomial coefficient that is 0 outside ``0 <= b <= a``."""
    if a < 0 or b < 0 or b > a:
        return 0
    return comb(a, b)


# -- observations ------------------------------------------------------------


def d0_complete(n: int, i: int) -> int:
    if n < 1:
        raise ValueError(f"K_n requires n >= 1, got {n}")
    return n if i == 1 else 0


def d0_star(n: int, i: int) -> int:
    """Isolate dominating sets of K_{1,n} of size ``i`` (hub alone, or all leaves)."""
    if n < 1:
        raise ValueError(f"K_1,n requires n >= 1, got {n}")
    return 1 if i in (1, n) else 0


def d0_join(t1: CountTable, t2: CountTable) -> CountTable:
    if t1.n < 2 or t2.n < 2:
        raise ValueError("the join identity requires both graphs to have order at least two")
    n = t1.n + t2.n
    counts = [0] + [t1[i] + t2[i] for i in range(1, n + 1)]
    return CountTable(n, tuple(counts))


# -- dominating sets of paths -------------------------------------------------


def d_path_explicit(n: int, k: int) -> int:
    if n < 1 or k < 1 or k > n:
        return 0
    return sum(
        binom(k - 1, n - k - m) * binom(n - k - m + 2, m)
        for m in range((n - k) // 2 + 2)
    )


def _d_path(m: int, j: int, conv: BaseCaseConvention) -> int:
    if m == 0 and j == 0:
        return 1 if conv.empty_path_dominated else 0
    return d_path_explicit(m, j)


@lru_cache(maxsize=None)
def _oracle_path_dominating(m: int) -> CountTable:
    return oracle.count_dominating(graph.path(m), workers=1)


_rec_lock = threading.Lock()
_rec_rows: dict[tuple[Variant, BaseCaseConvention], list[list[int]]] = {}


def _d_path_rows(n: int, variant: Variant, conv: BaseCaseConvention) -> list[list[int]]:
    with _rec_lock:
        rows = _rec_rows.setdefault((variant, conv), [])
        if not rows:
            rows.append([1 if conv.empty_path_dominated else 0])
        while len(rows) <= n:
            m = len(rows)
            if m <= 3:
                rows.append(list(_oracle_path_dominating(m)))
                continue

            def d(p: int, j: int) -> int:
                if p < 0 or j < 0 or j > p:
                    return 0
                return rows[p][j]

            if variant is Variant.LITERAL:
                row = [d(m - 1, j - 1) + d(m - 1, j - 2) + d(m - 1, j - 3) for j in range(m + 1)]
            else:
                row = [d(m - 1, j - 1) + d(m - 2, j - 1) + d(m - 3, j - 1) for j in range(m + 1)]
            row[0] = 0
            rows.append(row)
        return rows


def d_path_recurrence(
    n: int,
    i: int,
    variant: Variant = Variant.CORRECTED,
    conv: BaseCaseConvention = DEFAULT_CONVENTION,
) -> int:
    """d(P_n, i) from the three-term path recurrence, seeded for n <= 3.

    ``LITERAL`` steps with d(P_{n-1}, i-1) + d(P_{n-1}, i-2) + d(P_{n-1}, i-3);
    ``CORRECTED`` with d(P_{n-1}, i-1) + d(P_{n-2}, i-1) + d(P_{n-3}, i-1).
    """
    variant = Variant(variant)
    if variant is Variant.RECONCILED:
        raise ValueError("the path recurrence has literal and corrected variants only")
    if n < 0 or i < 0 or i > n:
        return 0
    return _d_path_rows(n, variant, conv)[n][i]


# -- isolate dominating sets of paths and cycles ------------------------------

_d0_lock = threading.Lock()
_d0_rows: dict[BaseCaseConvention, list[list[int]]] = {}


def _d0_path_rows(n: int, conv: BaseCaseConvention) -> list[list[int]]:
    """Rows ``0..n`` of d0(P_m, j), built bottom-up so deep n needs no recursion."""
    with _d0_lock:
        rows = _d0_rows.setdefault(conv, [[0]])
        while len(rows) <= n:
            m = len(rows)
            if conv.seed_small_paths and m <= 2:
                rows.append([d0_complete(m, j) for j in range(m + 1)])
                continue

            def z(p: int, j: int) -> int:
                if p < 1 or j < 1 or j > p:
                    return 0
                return rows[p][j]

            row = [0]
            for i in range(1, m + 1):
                total = _d_path(m - 2, i - 1, conv) + _d_path(m - 3, i - 1, conv)
                total += sum(z(m - k, i - k + 1) for k in range(3, i + 1))
                total += sum(z(m - k, i - k + 2) for k in range(4, i + 2))
                row.append(total)
            rows.append(row)
        return rows


def d0_path(n: int, i: int, conv: BaseCaseConvention = DEFAULT_CONVENTION) -> int:
    if n < 1 or i < 1 or i > n:
        return 0
    return _d0_path_rows(n, conv)[n][i]


def d0_path_table(n: int, conv: BaseCaseConvention = DEFAULT_CONVENTION) -> CountTable:
    if n < 1:
        raise ValueError(f"path requires n >= 1, got {n}")
    return CountTable(n, tuple(_d0_path_rows(n, conv)[n]))


def d0_cycle(n: int, i: int, conv: BaseCaseConvention = DEFAULT_CONVENTION) -> int:
    if n < 3:
        raise ValueError(f"cycle requires n >= 3, got {n}")
    if i < 1 or i > n:
        return 0
    total = 2 * _d_path(n - 3, i - 1, conv) + _d_path(n - 6, i - 2, conv)
    total += 2 * _d_path(n - 6, i - 3, conv)
    total += sum(k * d0_path(n - k - 1, i - k + 1, conv) for k in range(3, i + 1))
    total += sum((k - 3) * d0_path(n - k - 4, i - k, conv) for k in range(4, i))
    return total


def gamma0_path_cycle(n: int) -> int:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return -(-n // 3)


# -- corona products ----------------------------------------------------------


def d0_corona_k1(n: int, c: int) -> int:
    """d0(G o K_1, c) for any G of order n; only n matters.

    Sizes ``n .. 2n-2`` use the binomial double sum, ``2n-1`` gives ``n``,
    everything else is 0.
    """
    if n < 1:
        raise ValueError(f"base graph order must be >= 1, got {n}")
    if n <= c <= 2 * n - 2:
        i = c - n
        return sum(binom(n, i + k) * binom(i + k, i) for k in range(1, n - i + 1))
    if c == 2 * n - 1:
        return n
    return 0


def d0_corona_k1_table(n: int) -> CountTable:
    return CountTable(2 * n, tuple(d0_corona_k1(n, c) for c in range(2 * n + 1)))


def d0_k1_corona(g_counts: CountTable) -> CountTable:
    """Isolate table of K_1 o G from that of G."""
    if g_counts.n < 1:
        raise ValueError("base graph must have at least one vertex")
    counts = [0, 1 + g_counts[1]] + [g_counts[i] for i in range(2, g_counts.n + 2)]
    return CountTable(g_counts.n + 1, tuple(counts))


def bound_cardinality(n: int, t: int, gamma0_h: int) -> int:
    return t * gamma0_h + n - t


def corona_upper_bound(
    n: int, t: int, gamma0_h: int, d0_h_at_gamma0: int, d_h_at_gamma0: int
) -> int:
    """Claimed upper bound on d0(G o H, t*gamma0(H) + n - t), with |V(G)| = n."""
    if not 1 <= t <= n:
        raise ValueError(f"t must lie in 1..{n}, got {t}")
    if gamma0_h < 1 or d0_h_at_gamma0 < 0 or d_h_at_gamma0 < 0:
        raise ValueError("gamma0(H) must be positive and counts non-negative")
    return t * comb(n, t) * d0_h_at_gamma0 * d_h_at_gamma0 ** (t - 1)
