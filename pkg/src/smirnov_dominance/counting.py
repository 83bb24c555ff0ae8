"""Exact path counts, significance levels and the closed-form level/refinement counts.

Probabilities are :class:`fractions.Fraction` values (always reduced, with a
positive denominator); counts are plain Python integers.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, gcd
from typing import Sequence

from .diophantine import spectrum
from .errors import NegativeArgument, RangeError
from .lattice import LatticePath, distinct_profiles, profile

ExactRational = Fraction


def binomial(a: int, b: int) -> int:
    """C(a, b) for a >= b >= 0 and 0 otherwise."""
    if b < 0 or a < b:
        return 0
    return comb(a, b)


def total_paths(m: int, n: int) -> int:
    return binomial(m + n, n)


def count_dominated(p: LatticePath) -> int:
    """Number of paths q with q_i <= p_i for every i."""
    m = p.m
    # ways[v]: monotone prefixes of the current length ending in value v
    ways = [1] + [0] * m
    for bound in p.t:
        acc = 0
        nxt = [0] * (m + 1)
        for v in range(bound + 1):
            acc += ways[v]
            nxt[v] = acc
        ways = nxt
    return sum(ways)


def count_dominating(p: LatticePath) -> int:
    """Number of paths q with q_i >= p_i for every i."""
    m = p.m
    ways = [1] + [0] * m
    for bound in p.t:
        acc = 0
        nxt = [0] * (m + 1)
        for v in range(m + 1):
            acc += ways[v]
            if v >= bound:
                nxt[v] = acc
        ways = nxt
    return sum(ways)


def bareiss_det(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by fraction-free elimination."""
    a = [list(row) for row in matrix]
    size = len(a)
    if size == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(size - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, size) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                # exact division is guaranteed by Sylvester's identity
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[-1][-1]


def kreweras_matrix(p: LatticePath) -> list[list[int]]:
    """n x n matrix with entry (i, j) = C(t_{n-j+1} + 1, 1 + j - i), 1-based."""
    n, t = p.n, p.t
    return [[binomial(t[n - j] + 1, 1 + j - i) for j in range(1, n + 1)] for i in range(1, n + 1)]


def kreweras_count(p: LatticePath) -> int:
    """Count of paths dominated by ``p`` as a Kreweras determinant."""
    return bareiss_det(kreweras_matrix(p))


_bell_lock = threading.Lock()
_bell: list[int] = [1]


def ordered_bell(k: int) -> int:
    """Number of ordered partitions of a k-set (Fubini number)."""
    if k < 0:
        raise NegativeArgument(f"ordered_bell needs k >= 0, got {k}")
    with _bell_lock:
        while len(_bell) <= k:
            j = len(_bell)
            _bell.append(sum(comb(j, i) * _bell[j - i] for i in range(1, j + 1)))
        return _bell[k]


def natural_level_count(m: int, n: int) -> int:
    d = gcd(m, n)
    q, rem = divmod(d * d + n * m * (2 * d - 1) + d * (n + m), 2 * d * d)
    assert rem == 0
    return q


def saturated_level_count(m: int, n: int) -> int:
    d = gcd(m, n)
    return ((n + 1) * (m + 1) - (d + 1)) // 2 + 1


def refinement_count(m: int, n: int) -> int:
    """Dominance refinements of the test, the trivial one included."""
    counts = spectrum(m, n)
    d = counts.d
    out = ordered_bell(d) ** counts.s[d]
    for k in range(1, d):
        out *= ordered_bell(k) ** counts.s[k]
    return out


def saturated_refinement_count(m: int, n: int) -> int:
    counts = spectrum(m, n)
    d = counts.d
    out = factorial(d) ** counts.s[d]
    for k in range(1, d):
        out *= factorial(k) ** counts.s[k]
    return out


def dominance_level(p: LatticePath) -> Fraction:
    """Probability under H0 that a random path is dominated by ``p``."""
    return Fraction(count_dominated(p), total_paths(p.m, p.n))


def tail_probability(m: int, n: int, r: int) -> Fraction:
    """P(m*n*D+ >= r) under H0."""
    if r < 0 or r > n * m:
        raise RangeError(f"r = {r} outside [0, {n * m}]")
    if r == 0:
        return Fraction(1)
    below = count_dominating(profile(m, n, r - 1))
    return 1 - Fraction(below, total_paths(m, n))


@dataclass(frozen=True)
class LevelEntry:
    r: int
    profile: LatticePath
    level: Fraction


@dataclass(frozen=True)
class LevelTable:
    """Down-set levels of the distinct profiles, smallest level first."""

    m: int
    n: int
    entries: tuple[LevelEntry, ...]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def levels(self) -> list[Fraction]:
        return [e.level for e in self.entries]


def level_table(m: int, n: int) -> LevelTable:
    fam = distinct_profiles(m, n)
    entries = [LevelEntry(r, p, dominance_level(p)) for r, p in reversed(fam.entries)]
    return LevelTable(m, n, tuple(entries))


def tail_table(m: int, n: int) -> list[tuple[int, Fraction]]:
    """(r, P(m*n*D+ >= r)) for every value r the statistic can take."""
    return [(r, tail_probability(m, n, r)) for r in distinct_profiles(m, n).values]


def significant(q: Fraction, digits: int = 3) -> tuple[int, int]:
    """Round ``q > 0`` to ``digits`` significant digits (half to even).

    Returns (mantissa, exponent) with q ~ mantissa * 10**(exponent - digits + 1)
    and 10**(digits-1) <= mantissa < 10**digits.
    """
    if digits < 1:
        raise ValueError("digits must be >= 1")
    q = Fraction(q)
    if q <= 0:
        raise ValueError("significant() needs a positive value")
    # exact exponent: 10**e <= q < 10**(e+1)
    e = len(str(q.numerator)) - len(str(q.denominator))
    while Fraction(10) ** e > q:
        e -= 1
    while Fraction(10) ** (e + 1) <= q:
        e += 1
    mant = round(q / Fraction(10) ** (e - digits + 1))
    if mant == 10**digits:
        mant //= 10
        e += 1
    return mant, e


def render_decimal(q: Fraction, digits: int = 3) -> str:
    """Decimal string with ``digits`` significant digits, e.g. 0.318 or 5.41e-6."""
    q = Fraction(q)
    if q == 0:
        return "0"
    sign = "-" if q < 0 else ""
    mant, e = significant(abs(q), digits)
    s = str(mant)
    if -4 < e < digits:
        # plain positional notation
        if e >= 0:
            body = s[: e + 1] + ("." + s[e + 1 :] if s[e + 1 :] else "")
        else:
            body = "0." + "0" * (-e - 1) + s
        return sign + body
    body = s[0] + ("." + s[1:] if len(s) > 1 else "")
    return f"{sign}{body}e{e}"


def rational_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"
