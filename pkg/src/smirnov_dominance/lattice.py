"""Monotone lattice paths, Gnedenko paths, Smirnov statistics and profiles.

A path from (0, 0) to (m, n) with unit east/north steps is stored as the
tuple <t_1, ..., t_n>, where t_i is the horizontal distance from the point
(m, n - i) back to the path, i.e. ``m`` minus the largest x-coordinate the
path reaches at height ``n - i``.  Larger entries mean the path runs further
to the north-west.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator

from .errors import CrossSampleTie, DimensionMismatch, InvalidTuple, RangeError

EAST = "E"
NORTH = "N"
TAILS = ("upper", "lower", "twosided")


@dataclass(frozen=True)
class LatticePath:
    m: int
    t: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.m, int) or self.m < 0:
            raise InvalidTuple(f"grid width must be a nonnegative integer, got {self.m!r}")
        t = tuple(self.t)
        object.__setattr__(self, "t", t)
        prev = 0
        for i, ti in enumerate(t, start=1):
            if not isinstance(ti, int):
                raise InvalidTuple(f"t_{i} = {ti!r} is not an integer")
            if ti < 0 or ti > self.m:
                raise InvalidTuple(f"t_{i} = {ti} outside [0, {self.m}]")
            if ti < prev:
                raise InvalidTuple(f"tuple not monotone at position {i}: {t}")
            prev = ti

    @property
    def n(self) -> int:
        return len(self.t)

    def __iter__(self) -> Iterator[int]:
        return iter(self.t)

    def __len__(self) -> int:
        return len(self.t)

    def __getitem__(self, i):
        return self.t[i]

    def __str__(self) -> str:
        return "<" + ",".join(map(str, self.t)) + ">"

    def max_x(self, y: int) -> int:
        """Largest x-coordinate of the path at height ``y``."""
        if y == self.n:
            return self.m
        return self.m - self.t[self.n - y - 1]

    def vertices(self) -> Iterator[tuple[int, int]]:
        x = y = 0
        yield (0, 0)
        for step in tuple_to_steps(self).steps:
            if step == EAST:
                x += 1
            else:
                y += 1
            yield (x, y)


@dataclass(frozen=True)
class StepSequence:
    """East/north step word of a path; ``E`` steps come from the first sample."""

    steps: tuple[str, ...]

    def __post_init__(self):
        steps = tuple(self.steps)
        object.__setattr__(self, "steps", steps)
        bad = [s for s in steps if s not in (EAST, NORTH)]
        if bad:
            raise InvalidTuple(f"unknown step symbols {sorted(set(bad))}")

    @classmethod
    def parse(cls, word: str) -> "StepSequence":
        return cls(tuple(word.replace(",", "").replace(" ", "").upper()))

    @property
    def m(self) -> int:
        return self.steps.count(EAST)

    @property
    def n(self) -> int:
        return self.steps.count(NORTH)

    def __str__(self) -> str:
        return "".join(self.steps)


@dataclass(frozen=True)
class SampleData:
    xs: tuple[Decimal, ...]
    ys: tuple[Decimal, ...]

    def __post_init__(self):
        xs = tuple(sorted(_as_decimal(v) for v in self.xs))
        ys = tuple(sorted(_as_decimal(v) for v in self.ys))
        if not xs or not ys:
            raise ValueError("both samples must be nonempty")
        object.__setattr__(self, "xs", xs)
        object.__setattr__(self, "ys", ys)

    @property
    def m(self) -> int:
        return len(self.xs)

    @property
    def n(self) -> int:
        return len(self.ys)

    def ties(self) -> list[Decimal]:
        return sorted(set(self.xs) & set(self.ys))


def _as_decimal(value) -> Decimal:
    if isinstance(value, Decimal):
        return value
    if isinstance(value, str):
        return Decimal(value.strip())
    # floats convert exactly; no rounding through str()
    return Decimal(value)


def path_from_tuple(t: Iterable[int], m: int) -> LatticePath:
    return LatticePath(m, tuple(t))


def steps_to_tuple(s: StepSequence) -> LatticePath:
    m, n = s.m, s.n
    max_x = [0] * (n + 1)
    x = y = 0
    for step in s.steps:
        if step == EAST:
            x += 1
            max_x[y] = x
        else:
            y += 1
            max_x[y] = x
    return LatticePath(m, tuple(m - max_x[n - i] for i in range(1, n + 1)))


def tuple_to_steps(p: LatticePath) -> StepSequence:
    steps: list[str] = []
    x = 0
    for y in range(p.n):
        target = p.max_x(y)
        steps.extend(EAST * (target - x))
        steps.append(NORTH)
        x = target
    steps.extend(EAST * (p.m - x))
    return StepSequence(tuple(steps))


def gnedenko_path(d: SampleData) -> LatticePath:
    """Path of the merged sample: east for an x-observation, north for a y."""
    tied = d.ties()
    if tied:
        raise CrossSampleTie(f"values occur in both samples: {', '.join(map(str, tied[:5]))}")
    steps: list[str] = []
    i = j = 0
    xs, ys = d.xs, d.ys
    while i < len(xs) or j < len(ys):
        if j == len(ys) or (i < len(xs) and xs[i] < ys[j]):
            steps.append(EAST)
            i += 1
        else:
            steps.append(NORTH)
            j += 1
    return steps_to_tuple(StepSequence(tuple(steps)))


def statistic(p: LatticePath, tail: str = "upper") -> int:
    """Integer ``m*n*D`` for the chosen tail.

    ``upper`` is max(n*x - m*y) over the vertices of the path, ``lower`` is
    max(m*y - n*x) and ``twosided`` is max|n*x - m*y|.
    """
    if tail not in TAILS:
        raise ValueError(f"tail must be one of {TAILS}, got {tail!r}")
    m, n = p.m, p.n
    values = [n * x - m * y for x, y in p.vertices()]
    if tail == "upper":
        return max(values)
    if tail == "lower":
        return -min(values)
    return max(abs(v) for v in values)


def statistic_rational(p: LatticePath, tail: str = "upper") -> Fraction:
    return Fraction(statistic(p, tail), p.m * p.n)


def dominates(s: LatticePath, t: LatticePath) -> bool:
    if s.m != t.m or s.n != t.n:
        raise DimensionMismatch(f"paths live on different grids: {s.m}x{s.n} vs {t.m}x{t.n}")
    return all(a >= b for a, b in zip(s.t, t.t))


def profile(m: int, n: int, r: int) -> LatticePath:
    """Least path (in dominance) whose vertices all satisfy n*x - m*y <= r."""
    if r < 0 or r > n * m:
        raise RangeError(f"r = {r} outside [0, {n * m}]")
    # -((r - m*i) // n) is ceil((m*i - r) / n) in integer arithmetic
    return LatticePath(m, tuple(max(0, -((r - m * i) // n)) for i in range(1, n + 1)))


@dataclass(frozen=True)
class ProfileFamily:
    m: int
    n: int
    entries: tuple[tuple[int, LatticePath], ...]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def values(self) -> list[int]:
        return [r for r, _ in self.entries]

    @property
    def paths(self) -> list[LatticePath]:
        return [p for _, p in self.entries]


def distinct_profiles(m: int, n: int) -> ProfileFamily:
    """All distinct r-profiles, listed by increasing r (decreasing in dominance).

    Each entry is keyed by the smallest r producing that profile; only
    multiples of gcd(m, n) can start a new one.
    """
    if m < 1 or n < 1:
        raise RangeError("sample sizes must be positive")
    d = gcd(m, n)
    prev = profile(m, n, 0)
    entries = [(0, prev)]
    for r in range(d, n * m + 1, d):
        cur = profile(m, n, r)
        if cur != prev:
            entries.append((r, cur))
            prev = cur
    return ProfileFamily(m, n, tuple(entries))


def parse_tuple(text: str) -> tuple[int, ...]:
    """Read ``<2,2,4>``, ``2,2,4`` or ``2 2 4`` into an integer tuple."""
    body = text.strip().strip("<>()[]")
    parts = body.replace(",", " ").split()
    return tuple(int(p) for p in parts)
