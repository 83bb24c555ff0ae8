"""Cross-checks of closed forms against the brute-force oracle for one (m, n)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, gcd, prod
from typing import Callable

from . import counting, diophantine, lattice, oracle, refinement
from .errors import BudgetExceeded

# gaps with more cells than this are not walked by the chain-count oracle
MAX_ORACLE_CELLS = 5


@dataclass
class Check:
    name: str
    status: str  # "pass", "fail" or "skipped"
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def _run(name: str, fn: Callable[[], str | None]) -> Check:
    try:
        problem = fn()
    except BudgetExceeded as exc:
        return Check(name, "skipped", f"budget exceeded: {exc}")
    if problem:
        return Check(name, "fail", problem)
    return Check(name, "pass")


def _attainable(m: int, n: int) -> list[int]:
    d = gcd(m, n)
    return [r for r in range(d, n * m + 1, d)]


def formula_checks(m: int, n: int) -> list[Check]:
    d = gcd(m, n)
    alphas = {r: diophantine.alpha(m, n, r) for r in range(0, n * m + 1)}
    positive = [r for r in _attainable(m, n) if alphas[r] > 0]

    def alpha_vs_scan():
        bad = [r for r, a in alphas.items() if a != oracle.oracle_alpha(m, n, r)]
        return f"alpha differs from the lattice-point scan at r = {bad[:10]}" if bad else None

    def spectrum_identities():
        closed = diophantine.spectrum(m, n)
        tally = diophantine.spectrum_by_tally(m, n)
        if closed.s != tally.s:
            return f"closed form {closed.s} != tally {tally.s}"
        if sum(closed.s) != n * m // d:
            return f"sum s_k = {sum(closed.s)} != nm/d"
        weighted = sum(k * s for k, s in enumerate(closed.s))
        if weighted != ((n + 1) * (m + 1) - (d + 1)) // 2:
            return f"sum k*s_k = {weighted}"
        return None

    def natural_levels():
        closed = counting.natural_level_count(m, n)
        listed = len(lattice.distinct_profiles(m, n))
        if not closed == listed == 1 + len(positive):
            return f"closed form {closed}, profiles {listed}, 1 + #alpha>0 = {1 + len(positive)}"
        return None

    def saturated_levels():
        closed = counting.saturated_level_count(m, n)
        total = 1 + sum(alphas[r] for r in positive)
        return None if closed == total else f"closed form {closed} != 1 + sum alpha = {total}"

    def refinement_products():
        bell = prod(counting.ordered_bell(alphas[r]) for r in positive)
        fact = prod(factorial(alphas[r]) for r in positive)
        got = (counting.refinement_count(m, n), counting.saturated_refinement_count(m, n))
        return None if got == (bell, fact) else f"closed forms {got} != products {(bell, fact)}"

    def gap_flips():
        for r in positive:
            upper = lattice.profile(m, n, r - d)
            flipped = refinement.flip_cells(upper, refinement.gap_cells(m, n, r))
            if flipped != lattice.profile(m, n, r):
                return f"flipping the cells of r = {r} gives {flipped}"
        return None

    def kreweras_vs_dp():
        for r, p in lattice.distinct_profiles(m, n):
            k, dp = counting.kreweras_count(p), counting.count_dominated(p)
            if k != dp:
                return f"{r}-profile {p}: determinant {k} != DP {dp}"
        return None

    def saturation():
        verdict = refinement.is_saturated(m, n)
        if verdict.saturated != (d == 1):
            return f"verdict {verdict.saturated} but gcd = {d}"
        if verdict.witness is not None:
            check = refinement.verify_chain(verdict.witness_chain())
            if not check:
                return "witness chain rejected: " + "; ".join(check.problems)
        return None

    return [
        _run("alpha closed form = lattice-point scan", alpha_vs_scan),
        _run("spectrum closed forms and sum identities", spectrum_identities),
        _run("natural level count = distinct profiles = 1 + #{alpha > 0}", natural_levels),
        _run("saturated level count = 1 + sum alpha", saturated_levels),
        _run("refinement counts = products over gaps", refinement_products),
        _run("flipping gap cells maps consecutive profiles", gap_flips),
        _run("Kreweras determinant = DP count on profiles", kreweras_vs_dp),
        _run("saturated iff gcd = 1, witness chain valid", saturation),
    ]


def enumeration_checks(m: int, n: int, budget: int = oracle.DEFAULT_BUDGET) -> list[Check]:
    d = gcd(m, n)

    def universe_size():
        u = oracle.enumerate_all_paths(m, n, budget)
        if len(u) != comb(m + n, n) or len(set(u.paths)) != len(u):
            return f"{len(u)} paths enumerated"
        return None

    def statistics():
        u = oracle.enumerate_all_paths(m, n, budget)
        walked = oracle.oracle_statistics(m, n, budget)
        for p, s in zip(u.paths, walked):
            if lattice.statistic(p, "upper") != s:
                return f"statistic of {p}: {lattice.statistic(p)} != walked {s}"
        return None

    def profiles():
        got = [p for _, p in lattice.distinct_profiles(m, n)]
        want = [p for _, p in oracle.oracle_profiles(m, n, budget)]
        return None if got == want else "profile lists differ"

    def downsets():
        total = comb(m + n, n)
        for _, p in lattice.distinct_profiles(m, n):
            down = oracle.oracle_downset(p, budget)
            up = oracle.oracle_upset(p, budget)
            if (counting.count_dominated(p), counting.count_dominating(p)) != (down, up):
                return f"{p}: DP counts differ from filtered universe ({down}, {up})"
            if counting.dominance_level(p) != Fraction(down, total):
                return f"{p}: level mismatch"
        return None

    def tails():
        hist = oracle.oracle_statistic_distribution(m, n, budget)
        total = comb(m + n, n)
        if any(r % d for r in hist):
            return "statistic takes a value that is not a multiple of d"
        for r in range(0, n * m + 1):
            at_least = sum(c for v, c in hist.items() if v >= r)
            if counting.tail_probability(m, n, r) != Fraction(at_least, total):
                return f"P(stat >= {r}) mismatch"
        return None

    def insertion_search():
        found = oracle.oracle_insertable(m, n, budget)
        if (not found) != (d == 1):
            return f"{len(found)} insertable paths but gcd = {d}"
        return None

    def chain_counts():
        for r, p in lattice.distinct_profiles(m, n):
            if r == 0:
                continue
            a = diophantine.alpha(m, n, r)
            if a > MAX_ORACLE_CELLS:
                continue
            upper = lattice.profile(m, n, r - d)
            walked = oracle.oracle_chain_count(upper, p, budget)
            streamed = sum(1 for _ in refinement.enumerate_gap_refinements(m, n, r))
            if not walked == streamed == counting.ordered_bell(a):
                return f"gap r = {r}: oracle {walked}, stream {streamed}, B_{a}"
            walked = oracle.oracle_maximal_chain_count(upper, p, budget)
            streamed = sum(1 for _ in refinement.enumerate_gap_refinements(m, n, r, saturated_only=True))
            if not walked == streamed == factorial(a):
                return f"gap r = {r}: {walked} maximal chains, stream {streamed}, {a}!"
        return None

    no_insert = "no insertable path found" if d == 1 else "insertable paths exist"
    return [
        _run("universe has C(m+n, n) distinct paths", universe_size),
        _run("vertex statistic = step-walk statistic", statistics),
        _run("closed-form profiles = minima over the universe", profiles),
        _run("DP down/up-set counts = filtered universe", downsets),
        _run("tail probabilities = statistic histogram", tails),
        _run(f"exhaustive insertion search ({no_insert})", insertion_search),
        _run("per-gap chain counts = ordered Bell numbers and factorials", chain_counts),
    ]


def run_all(m: int, n: int, budget: int = oracle.DEFAULT_BUDGET) -> list[Check]:
    return formula_checks(m, n) + enumeration_checks(m, n, budget)
