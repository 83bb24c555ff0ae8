"""Dominance refinements: inserting paths between consecutive profiles.

Between the (r-d)-profile and the r-profile the two paths differ on a set of
unit squares, one per lattice point of n*x - m*y = r in the rectangle.  A
square is addressed by its south-east corner (x, y); passing the path across
it lowers entry t_i, i = n - y, from m - x + 1 to m - x.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations, product
from math import gcd
from typing import Iterable, Iterator, Optional, Sequence

from .diophantine import alpha, solve_line
from .errors import CellMismatch, InvalidTuple, NotAttainable, RowCollision
from .lattice import LatticePath, distinct_profiles, dominates, profile


@dataclass(frozen=True, order=True)
class GapCell:
    point: tuple[int, int]
    row: int
    high: int
    low: int

    @classmethod
    def at(cls, m: int, n: int, x: int, y: int) -> "GapCell":
        return cls((x, y), n - y, m - x + 1, m - x)


@dataclass(frozen=True)
class RefinementChain:
    m: int
    n: int
    paths: tuple[LatticePath, ...]

    def __len__(self) -> int:
        return len(self.paths)

    def __iter__(self):
        return iter(self.paths)


def _check_attainable(m: int, n: int, r: int) -> None:
    d = gcd(m, n)
    if r <= 0 or r > n * m or r % d:
        raise NotAttainable(f"r = {r} is not a positive multiple of {d} in (0, {n * m}]")
    if alpha(m, n, r) == 0:
        raise NotAttainable(f"no lattice point on {n}x - {m}y = {r} inside the rectangle")


def gap_cells(m: int, n: int, r: int) -> list[GapCell]:
    """Unit squares separating the (r-d)-profile from the r-profile."""
    _check_attainable(m, n, r)
    return [GapCell.at(m, n, x, y) for x, y in solve_line(m, n, r).points]


def flip_cells(p: LatticePath, cells: Iterable[GapCell]) -> LatticePath:
    cells = list(cells)
    rows = [c.row for c in cells]
    if len(set(rows)) != len(rows):
        raise RowCollision(f"two cells share a row: {sorted(rows)}")
    t = list(p.t)
    for c in cells:
        if not 1 <= c.row <= p.n or t[c.row - 1] != c.high:
            raise CellMismatch(f"path {p} does not run along the east side of cell {c.point}")
        t[c.row - 1] = c.low
    try:
        return LatticePath(p.m, tuple(t))
    except InvalidTuple as exc:
        raise CellMismatch(f"flipping {[c.point for c in cells]} on {p} breaks monotonicity") from exc


def ordered_partitions(k: int, unit_blocks: bool = False) -> Iterator[tuple[int, ...]]:
    """Ordered set partitions of {0..k-1} as block-index assignments.

    ``a[i]`` is the block holding element i.  Partitions come grouped by
    number of blocks, ascending; within a group, in lexicographic order of
    the assignment vector.  With ``unit_blocks`` only the k! partitions into
    singletons are produced.
    """
    if k == 0:
        yield ()
        return
    if unit_blocks:
        yield from permutations(range(k))
        return
    for blocks in range(1, k + 1):
        for assign in product(range(blocks), repeat=k):
            if len(set(assign)) == blocks:
                yield assign


def _gap_segments(
    upper: LatticePath, cells: Sequence[GapCell], unit_blocks: bool
) -> Iterator[tuple[LatticePath, ...]]:
    for assign in ordered_partitions(len(cells), unit_blocks):
        seg = [upper]
        cur = upper
        for b in range(max(assign) + 1):
            cur = flip_cells(cur, [c for c, a in zip(cells, assign) if a == b])
            seg.append(cur)
        yield tuple(seg)


def enumerate_gap_refinements(
    m: int, n: int, r: int, saturated_only: bool = False
) -> Iterator[tuple[LatticePath, ...]]:
    """Chains from the (r-d)-profile down to the r-profile, one per ordered partition.

    Each chain includes both endpoints.
    """
    cells = gap_cells(m, n, r)
    upper = profile(m, n, r - gcd(m, n))
    return _gap_segments(upper, cells, saturated_only)


def enumerate_refinements(m: int, n: int, saturated_only: bool = False) -> Iterator[RefinementChain]:
    """Lazily yield every (saturated) dominance refinement of the profile chain.

    The last gap varies fastest.  Nothing is materialized beyond the current
    chain, so this is usable even when the total count is astronomically large.
    """
    fam = distinct_profiles(m, n)
    gaps = [r for r in fam.values if r > 0]
    d = gcd(m, n)

    def rec(idx: int, acc: tuple[LatticePath, ...]) -> Iterator[tuple[LatticePath, ...]]:
        if idx == len(gaps):
            yield acc
            return
        r = gaps[idx]
        upper = profile(m, n, r - d)
        for seg in _gap_segments(upper, gap_cells(m, n, r), saturated_only):
            yield from rec(idx + 1, acc + seg[1:])

    for paths in rec(0, (fam.paths[0],)):
        yield RefinementChain(m, n, paths)


@dataclass
class ChainCheck:
    ok: bool
    problems: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def verify_chain(c: RefinementChain | Sequence[LatticePath]) -> ChainCheck:
    """Check that ``c`` is a dominance refinement of its test's profile chain."""
    paths = list(c.paths if isinstance(c, RefinementChain) else c)
    problems: list[str] = []
    if not paths:
        return ChainCheck(False, ["empty chain"])
    m, n = paths[0].m, paths[0].n
    if any(p.m != m or p.n != n for p in paths):
        return ChainCheck(False, ["paths live on different grids"])
    for i, (a, b) in enumerate(zip(paths, paths[1:])):
        if a == b or not dominates(a, b):
            problems.append(f"step {i}: {a} does not strictly dominate {b}")
            continue
        diff = [(row, a.t[row - 1], b.t[row - 1]) for row in range(1, n + 1) if a.t[row - 1] != b.t[row - 1]]
        if any(hi - lo != 1 for _, hi, lo in diff):
            problems.append(f"step {i}: {a} -> {b} moves some row by more than one cell")
            continue
        lines = {n * (m - hi + 1) - m * (n - row) for row, hi, _ in diff}
        if len(lines) != 1 or min(lines) <= 0:
            problems.append(f"step {i}: {a} -> {b} crosses cells on lines {sorted(lines)}")
    if m >= 1 and n >= 1:
        pos = 0
        for r, prof in distinct_profiles(m, n):
            while pos < len(paths) and paths[pos] != prof:
                pos += 1
            if pos == len(paths):
                problems.append(f"missing the {r}-profile {prof}")
                break
    return ChainCheck(not problems, problems)


@dataclass(frozen=True)
class SaturationVerdict:
    m: int
    n: int
    saturated: bool
    witness: Optional[LatticePath] = None
    upper: Optional[LatticePath] = None
    lower: Optional[LatticePath] = None
    r: Optional[int] = None

    def __bool__(self) -> bool:
        return self.saturated

    def witness_chain(self) -> Optional[RefinementChain]:
        """The profile chain with the witness inserted, or None when saturated."""
        if self.witness is None:
            return None
        paths = []
        for _, p in distinct_profiles(self.m, self.n):
            if p == self.lower:
                paths.append(self.witness)
            paths.append(p)
        return RefinementChain(self.m, self.n, tuple(paths))


def is_saturated(m: int, n: int) -> SaturationVerdict:
    """Decide saturation by looking for a gap holding two or more cells.

    When one exists, flipping a single cell of it gives a path strictly
    between two consecutive profiles.
    """
    d = gcd(m, n)
    for r in range(d, n * m + 1, d):
        if alpha(m, n, r) >= 2:
            cells = gap_cells(m, n, r)
            upper = profile(m, n, r - d)
            return SaturationVerdict(
                m, n, False, flip_cells(upper, cells[-1:]), upper, profile(m, n, r), r
            )
    return SaturationVerdict(m, n, True)
