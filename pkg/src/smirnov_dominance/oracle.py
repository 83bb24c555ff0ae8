"""Brute-force reference computations over the full set of paths.

Nothing here calls the closed forms it is meant to check: paths are built
from the positions of their north steps, statistics are read off the step
word, and profiles are recovered as componentwise minima of enumerated paths.
Everything refuses to run once the universe would exceed ``budget`` paths.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable

import numpy as np

from .errors import BudgetExceeded
from .lattice import LatticePath

DEFAULT_BUDGET = 10**7


def _guard(m: int, n: int, budget: int) -> None:
    size = comb(m + n, n)
    if size > budget:
        raise BudgetExceeded(f"{size} paths for m={m}, n={n} exceeds budget {budget}")


@dataclass(frozen=True)
class PathUniverse:
    m: int
    n: int
    paths: tuple[LatticePath, ...]
    # north-step positions in the length m+n step word, one row per path
    north: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.paths)

    def __iter__(self):
        return iter(self.paths)

    def array(self) -> np.ndarray:
        return np.array([p.t for p in self.paths], dtype=np.int64).reshape(len(self.paths), self.n)


def enumerate_all_paths(m: int, n: int, budget: int = DEFAULT_BUDGET) -> PathUniverse:
    return _universe(m, n, budget)


@lru_cache(maxsize=8)
def _cached_universe(m: int, n: int) -> PathUniverse:
    paths = []
    norths = []
    for north in combinations(range(m + n), n):
        # east steps taken before the j-th north step (1-based j) = north[j-1] - (j-1)
        east_before = [pos - j for j, pos in enumerate(north)]
        paths.append(LatticePath(m, tuple(m - east_before[n - i] for i in range(1, n + 1))))
        norths.append(north)
    return PathUniverse(m, n, tuple(paths), tuple(norths))


def _universe(m: int, n: int, budget: int) -> PathUniverse:
    _guard(m, n, budget)
    return _cached_universe(m, n)


def _walk_statistic(m: int, n: int, north: Iterable[int]) -> int:
    # n*x - m*y only grows along east runs, so the maximum sits at the origin,
    # at a vertex just before a north step, or at (m, n) where it is zero
    best = 0
    for j, pos in enumerate(north):
        best = max(best, n * (pos - j) - m * j)
    return best


def oracle_statistics(m: int, n: int, budget: int = DEFAULT_BUDGET) -> list[int]:
    """m*n*D+ of every path of the universe, aligned with ``universe.paths``."""
    u = _universe(m, n, budget)
    return [_walk_statistic(m, n, north) for north in u.north]


def oracle_statistic_distribution(m: int, n: int, budget: int = DEFAULT_BUDGET) -> dict[int, int]:
    return dict(sorted(Counter(oracle_statistics(m, n, budget)).items()))


def _below(s: LatticePath, t: LatticePath) -> bool:
    # s dominated by t
    for a, b in zip(s.t, t.t):
        if a > b:
            return False
    return True


def oracle_downset(p: LatticePath, budget: int = DEFAULT_BUDGET) -> int:
    u = _universe(p.m, p.n, budget)
    return sum(1 for q in u.paths if _below(q, p))


def oracle_upset(p: LatticePath, budget: int = DEFAULT_BUDGET) -> int:
    u = _universe(p.m, p.n, budget)
    return sum(1 for q in u.paths if _below(p, q))


def oracle_alpha(m: int, n: int, r: int) -> int:
    return sum(1 for x in range(m + 1) for y in range(n + 1) if n * x - m * y == r)


def oracle_chain_count(upper: LatticePath, lower: LatticePath, budget: int = DEFAULT_BUDGET) -> int:
    """Number of dominance chains running from ``upper`` down to ``lower``.

    A chain is any set of paths of the interval [lower, upper] that is
    totally ordered and contains both ends.
    """
    if not _below(lower, upper):
        raise ValueError(f"{upper} does not dominate {lower}")
    u = _universe(upper.m, upper.n, budget)
    interval = [q for q in u.paths if _below(lower, q) and _below(q, upper)]
    if len(interval) > 4096:
        raise BudgetExceeded(f"dominance interval of {len(interval)} paths is too large to walk")

    @lru_cache(maxsize=None)
    def chains_from(p: LatticePath) -> int:
        if p == lower:
            return 1
        return sum(chains_from(q) for q in interval if q != p and _below(q, p))

    return chains_from(upper)


def oracle_profiles(m: int, n: int, budget: int = DEFAULT_BUDGET) -> list[tuple[int, LatticePath]]:
    """(r, least path with statistic <= r) for each value r the statistic attains."""
    u = _universe(m, n, budget)
    stats = np.array(oracle_statistics(m, n, budget))
    arr = u.array()
    out = []
    for r in sorted(set(stats.tolist())):
        least = arr[stats <= r].min(axis=0)
        out.append((r, LatticePath(m, tuple(int(v) for v in least))))
    return out


def oracle_insertable(m: int, n: int, budget: int = DEFAULT_BUDGET) -> list[tuple[LatticePath, LatticePath, LatticePath]]:
    """Every path lying strictly between two consecutive profiles.

    Returns (upper profile, inserted path, lower profile) triples; an empty
    list means the test is saturated.
    """
    u = _universe(m, n, budget)
    arr = u.array()
    profs = [p for _, p in oracle_profiles(m, n, budget)]
    found = []
    for hi, lo in zip(profs, profs[1:]):
        hi_a = np.array(hi.t, dtype=np.int64)
        lo_a = np.array(lo.t, dtype=np.int64)
        inside = (arr <= hi_a).all(axis=1) & (arr >= lo_a).all(axis=1)
        inside &= ~(arr == hi_a).all(axis=1) & ~(arr == lo_a).all(axis=1)
        for idx in np.flatnonzero(inside):
            found.append((hi, u.paths[idx], lo))
    return found


def oracle_maximal_chain_count(upper: LatticePath, lower: LatticePath, budget: int = DEFAULT_BUDGET) -> int:
    """Number of maximal (unrefinable) chains from ``upper`` down to ``lower``."""
    if not _below(lower, upper):
        raise ValueError(f"{upper} does not dominate {lower}")
    u = _universe(upper.m, upper.n, budget)
    interval = [q for q in u.paths if _below(lower, q) and _below(q, upper)]
    if len(interval) > 4096:
        raise BudgetExceeded(f"dominance interval of {len(interval)} paths is too large to walk")

    def covers(p: LatticePath, q: LatticePath) -> bool:
        if p == q or not _below(q, p):
            return False
        return not any(s != p and s != q and _below(q, s) and _below(s, p) for s in interval)

    @lru_cache(maxsize=None)
    def chains_from(p: LatticePath) -> int:
        if p == lower:
            return 1
        return sum(chains_from(q) for q in interval if covers(p, q))

    return chains_from(upper)
