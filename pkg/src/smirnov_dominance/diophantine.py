"""Lattice points on the lines n*x - m*y = r inside [0, m] x [0, n]."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional

from .errors import RangeError


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, u, v) with a*u + b*v = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_u, u = u, old_u - q * u
        old_v, v = v, old_v - q * v
    if old_r < 0:
        old_r, old_u, old_v = -old_r, -old_u, -old_v
    return old_r, old_u, old_v


def mod_inverse(a: int, modulus: int) -> int:
    """Inverse of ``a`` in Z_modulus; Z_1 = {0} so the inverse there is 0."""
    if modulus == 1:
        return 0
    return pow(a, -1, modulus)


@dataclass(frozen=True)
class LineSolutions:
    m: int
    n: int
    r: int
    d: int
    base: Optional[tuple[int, int]]
    step: tuple[int, int]
    alpha: int
    points: tuple[tuple[int, int], ...]


def solve_line(m: int, n: int, r: int) -> LineSolutions:
    """Integer solutions of n*x - m*y = r, and those inside the rectangle.

    ``base`` is the solution with the least nonnegative x, or None when
    gcd(m, n) does not divide r.  Every other solution is ``base`` plus an
    integer multiple of ``step``.
    """
    if m < 1 or n < 1:
        raise RangeError("m and n must be positive")
    d, u, v = ext_gcd(n, -m)
    step = (m // d, n // d)
    if r % d:
        return LineSolutions(m, n, r, d, None, step, 0, ())
    k = r // d
    x0, y0 = u * k, v * k
    # shift to the representative with 0 <= x < m/d
    t = x0 // step[0]
    x0, y0 = x0 - t * step[0], y0 - t * step[1]
    # walk to y >= 0, then collect while inside the box
    if y0 < 0:
        t = -(y0 // step[1])
        x, y = x0 + t * step[0], y0 + t * step[1]
    else:
        x, y = x0, y0
    pts = []
    while x <= m and y <= n:
        if x >= 0 and y >= 0:
            pts.append((x, y))
        x, y = x + step[0], y + step[1]
    return LineSolutions(m, n, r, d, (x0, y0), step, len(pts), tuple(pts))


def alpha(m: int, n: int, r: int) -> int:
    """Number of lattice points on n*x - m*y = r with 0 <= x <= m, 0 <= y <= n.

    Closed form: with d = gcd(m, n) and (after arranging m >= n)
    p = floor(r/n), a = ((r - n*p)/d) * (n/d)^-1 mod m/d, the count is
    d + 1 - ceil((p + a)/(m/d)), floored at zero.
    """
    if m < 1 or n < 1:
        raise RangeError("m and n must be positive")
    if r < 0 or r > n * m:
        raise RangeError(f"r = {r} outside [0, {n * m}]")
    if m < n:
        # (x, y) -> (n - y, m - x) maps one rectangle's solutions onto the other's
        m, n = n, m
    d = gcd(m, n)
    if r % d:
        return 0
    mp, np_ = m // d, n // d
    p = r // n
    a = ((r - n * p) // d) * mod_inverse(np_, mp) % mp
    count = d + 1 - (-(-(p + a) // mp))
    return max(count, 0)


@dataclass(frozen=True)
class Spectrum:
    """s[k] = number of multiples r of d in (0, nm] whose line holds k points."""

    m: int
    n: int
    d: int
    s: tuple[int, ...]

    def __getitem__(self, k: int) -> int:
        return self.s[k]


def spectrum(m: int, n: int) -> Spectrum:
    if m < 1 or n < 1:
        raise RangeError("m and n must be positive")
    d = gcd(m, n)
    dd = 2 * d * d
    s0, rem0 = divmod(n * m - (n + m) * d + d * d, dd)
    sd, remd = divmod(n * m + (n + m) * d - d * d, dd)
    assert rem0 == 0 and remd == 0, (m, n)
    if d == 1:
        return Spectrum(m, n, d, (s0, sd))
    middle = n * m // (d * d)
    return Spectrum(m, n, d, (s0,) + (middle,) * (d - 1) + (sd,))


def spectrum_by_tally(m: int, n: int) -> Spectrum:
    """Same counts as :func:`spectrum`, obtained by evaluating alpha for every r."""
    d = gcd(m, n)
    s = [0] * (d + 1)
    for r in range(d, n * m + 1, d):
        s[alpha(m, n, r)] += 1
    return Spectrum(m, n, d, tuple(s))
