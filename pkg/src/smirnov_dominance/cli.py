"""Command-line interface.

    smirnov-dominance test --x FILE --y FILE [--tail upper|lower|twosided]
    smirnov-dominance levels M N
    smirnov-dominance table natural|saturated --max-m K --max-n K
    smirnov-dominance refine M N [--saturated] [--limit L]
    smirnov-dominance verify M N [--budget B]

Global options ``--format human|json|csv`` and ``--digits D`` go before the
command.  Exact rationals are always written as "num/den" strings next to a
rounded decimal rendering.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from itertools import islice
from math import gcd
from pathlib import Path

from . import counting, lattice, refinement, verification
from .errors import SampleParseError, SmirnovError
from .oracle import DEFAULT_BUDGET

FORMATS = ("human", "json", "csv")


@dataclass
class OutputDocument:
    command: str
    payload: dict
    format: str = "human"
    exit_code: int = 0

    def render(self) -> str:
        if self.format == "json":
            return json.dumps(self.payload, indent=2) + "\n"
        if self.format == "csv":
            return _CSV[self.command](self.payload)
        return _HUMAN[self.command](self.payload)


def _rat(q: Fraction, digits: int) -> tuple[str, str]:
    return counting.rational_str(q), counting.render_decimal(q, digits)


def read_sample(path: str | Path) -> list[Decimal]:
    """One decimal literal per line; blank lines and ``#`` comments are skipped."""
    values = []
    text = Path(path).read_text(encoding="utf-8")
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            value = Decimal(line)
        except InvalidOperation:
            raise SampleParseError(f"{path}:{lineno}: not a decimal literal: {line!r}") from None
        if not value.is_finite():
            raise SampleParseError(f"{path}:{lineno}: non-finite value {line!r}")
        values.append(value)
    if not values:
        raise SampleParseError(f"{path}: no observations")
    return values


# -- commands -----------------------------------------------------------------


def cmd_test(xs, ys, tail: str = "upper", digits: int = 3) -> OutputDocument:
    """Test on two samples.  ``xs``/``ys`` are file paths or value sequences."""
    if isinstance(xs, (str, Path)):
        xs = read_sample(xs)
    if isinstance(ys, (str, Path)):
        ys = read_sample(ys)
    data = lattice.SampleData(tuple(xs), tuple(ys))
    path = lattice.gnedenko_path(data)
    m, n = data.m, data.n
    stat = lattice.statistic(path, tail)
    d_rat = Fraction(stat, m * n)
    payload = {
        "m": m,
        "n": n,
        "d": gcd(m, n),
        "tail": tail,
        "path": list(path.t),
        "statistic_int": stat,
    }
    payload["statistic"], payload["statistic_decimal"] = _rat(d_rat, digits)
    if tail == "upper":
        p_value = counting.tail_probability(m, n, stat)
        prof = lattice.profile(m, n, stat)
        payload["p_value"], payload["p_value_decimal"] = _rat(p_value, digits)
        payload["profile"] = list(prof.t)
        payload["level"], payload["level_decimal"] = _rat(counting.dominance_level(prof), digits)
    return OutputDocument("test", payload)


def cmd_levels(m: int, n: int, digits: int = 3) -> OutputDocument:
    table = counting.level_table(m, n)
    levels = []
    for e in table:
        num_den, dec = _rat(e.level, digits)
        levels.append({"r": e.r, "profile": list(e.profile.t), "level": num_den, "level_decimal": dec})
    tails = []
    for r, p in counting.tail_table(m, n):
        num_den, dec = _rat(p, digits)
        tails.append({"r": r, "p_value": num_den, "p_value_decimal": dec})
    payload = {
        "m": m,
        "n": n,
        "d": gcd(m, n),
        "total_paths": counting.total_paths(m, n),
        "levels_convention": "dominance level: P(path dominated by the r-profile)",
        "levels": levels,
        "tail_convention": "tail probability: P(mn*D+ >= r)",
        "tail_probabilities": tails,
    }
    return OutputDocument("levels", payload)


def cmd_table(kind: str, max_m: int = 10, max_n: int = 10, min_m: int = 3, min_n: int = 3) -> OutputDocument:
    if kind not in ("natural", "saturated"):
        raise ValueError(f"unknown table kind {kind!r}")
    fn = counting.natural_level_count if kind == "natural" else counting.saturated_level_count
    rows = list(range(min_m, max_m + 1))
    cols = list(range(min_n, max_n + 1))
    grid = [[fn(m, n) for n in cols] for m in rows]
    return OutputDocument("table", {"kind": kind, "rows": rows, "cols": cols, "grid": grid})


def cmd_refine(m: int, n: int, saturated_only: bool = False, limit: int = 10) -> OutputDocument:
    verdict = refinement.is_saturated(m, n)
    chains = refinement.enumerate_refinements(m, n, saturated_only)
    payload = {
        "m": m,
        "n": n,
        "d": gcd(m, n),
        "refinement_count": counting.refinement_count(m, n),
        "saturated_refinement_count": counting.saturated_refinement_count(m, n),
        "saturated_level_count": counting.saturated_level_count(m, n),
        "saturated": verdict.saturated,
        "witness": None,
        "saturated_only": saturated_only,
        "chains": [[list(p.t) for p in c] for c in islice(chains, max(limit, 0))],
    }
    if verdict.witness is not None:
        payload["witness"] = {
            "path": list(verdict.witness.t),
            "between": [list(verdict.upper.t), list(verdict.lower.t)],
            "r": verdict.r,
        }
    return OutputDocument("refine", payload)


def cmd_verify(m: int, n: int, budget: int = DEFAULT_BUDGET) -> OutputDocument:
    checks = verification.run_all(m, n, budget)
    failed = any(c.status == "fail" for c in checks)
    skipped = any(c.status == "skipped" for c in checks)
    payload = {
        "m": m,
        "n": n,
        "budget": budget,
        "checks": [{"name": c.name, "status": c.status, "detail": c.detail} for c in checks],
        "passed": not failed and not skipped,
    }
    return OutputDocument("verify", payload, exit_code=1 if failed else (2 if skipped else 0))


# -- renderers ----------------------------------------------------------------


def _tuple(t) -> str:
    return "<" + ",".join(map(str, t)) + ">"


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _human_test(p: dict) -> str:
    lines = [
        f"m = {p['m']}, n = {p['n']}, gcd = {p['d']}, tail = {p['tail']}",
        f"Gnedenko path   {_tuple(p['path'])}",
        f"mn*D            {p['statistic_int']}",
        f"D               {p['statistic']} ({p['statistic_decimal']})",
    ]
    if "p_value" in p:
        lines.append(f"P(mn*D+ >= obs) {p['p_value']} ({p['p_value_decimal']})")
        lines.append(f"profile         {_tuple(p['profile'])}  level {p['level']} ({p['level_decimal']})")
    return "\n".join(lines) + "\n"


def _csv_test(p: dict) -> str:
    rows = [["field", "value"]]
    for k, v in p.items():
        rows.append([k, _tuple(v) if isinstance(v, list) else v])
    return _csv(rows)


def _human_levels(p: dict) -> str:
    out = [f"m = {p['m']}, n = {p['n']}, gcd = {p['d']}, {p['total_paths']} paths", ""]
    out.append(f"{p['levels_convention']}")
    out.append(f"{'r':>6}  {'level':>12}  {'exact':<28}  profile")
    for e in p["levels"]:
        out.append(f"{e['r']:>6}  {e['level_decimal']:>12}  {e['level']:<28}  {_tuple(e['profile'])}")
    out.append("")
    out.append(f"{p['tail_convention']}")
    out.append(f"{'r':>6}  {'p-value':>12}  exact")
    for e in p["tail_probabilities"]:
        out.append(f"{e['r']:>6}  {e['p_value_decimal']:>12}  {e['p_value']}")
    return "\n".join(out) + "\n"


def _csv_levels(p: dict) -> str:
    tails = {e["r"]: e for e in p["tail_probabilities"]}
    rows = [["r", "profile", "level", "level_decimal", "p_value", "p_value_decimal"]]
    for e in p["levels"]:
        t = tails[e["r"]]
        rows.append([e["r"], _tuple(e["profile"]), e["level"], e["level_decimal"], t["p_value"], t["p_value_decimal"]])
    return _csv(rows)


def _human_table(p: dict) -> str:
    title = "natural significance levels" if p["kind"] == "natural" else "levels of saturated dominance refinements"
    out = [f"Number of {title} (rows m, columns n)", ""]
    out.append("m\\n " + "".join(f"{c:>5}" for c in p["cols"]))
    for m, row in zip(p["rows"], p["grid"]):
        out.append(f"{m:<4}" + "".join(f"{v:>5}" for v in row))
    return "\n".join(out) + "\n"


def _csv_table(p: dict) -> str:
    rows = [["m\\n"] + p["cols"]]
    rows += [[m] + row for m, row in zip(p["rows"], p["grid"])]
    return _csv(rows)


def _human_refine(p: dict) -> str:
    out = [
        f"m = {p['m']}, n = {p['n']}, gcd = {p['d']}",
        f"dominance refinements (trivial included): {p['refinement_count']}",
        f"saturated dominance refinements:          {p['saturated_refinement_count']}",
        f"levels of a saturated refinement:         {p['saturated_level_count']}",
        f"saturated: {'true' if p['saturated'] else 'false'}",
    ]
    if p["witness"]:
        w = p["witness"]
        out.append(
            f"witness: {_tuple(w['path'])} fits strictly between "
            f"{_tuple(w['between'][0])} and {_tuple(w['between'][1])} (r = {w['r']})"
        )
    label = "saturated refinements" if p["saturated_only"] else "refinements"
    out.append(f"first {len(p['chains'])} {label}:")
    for i, chain in enumerate(p["chains"], start=1):
        out.append(f"  {i:>3}: " + " > ".join(_tuple(t) for t in chain))
    return "\n".join(out) + "\n"


def _csv_refine(p: dict) -> str:
    rows = [["chain", "position", "path"]]
    for i, chain in enumerate(p["chains"], start=1):
        rows += [[i, j, _tuple(t)] for j, t in enumerate(chain)]
    return _csv(rows)


def _human_verify(p: dict) -> str:
    out = [f"verification for m = {p['m']}, n = {p['n']} (budget {p['budget']})"]
    for c in p["checks"]:
        tag = {"pass": "PASS", "fail": "FAIL", "skipped": "SKIP"}[c["status"]]
        out.append(f"[{tag}] {c['name']}" + (f": {c['detail']}" if c["detail"] else ""))
    out.append("all checks passed" if p["passed"] else "NOT all checks passed")
    return "\n".join(out) + "\n"


def _csv_verify(p: dict) -> str:
    return _csv([["check", "status", "detail"]] + [[c["name"], c["status"], c["detail"]] for c in p["checks"]])


_HUMAN = {
    "test": _human_test,
    "levels": _human_levels,
    "table": _human_table,
    "refine": _human_refine,
    "verify": _human_verify,
}
_CSV = {
    "test": _csv_test,
    "levels": _csv_levels,
    "table": _csv_table,
    "refine": _csv_refine,
    "verify": _csv_verify,
}


# -- entry point ----------------------------------------------------------------


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="smirnov-dominance",
        description="Exact upper-tailed Smirnov two-sample test and its dominance refinements.",
    )
    parser.add_argument("--format", choices=FORMATS, default="human")
    parser.add_argument("--digits", type=_positive, default=3, help="significant digits for decimals")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("test", help="run the test on two sample files")
    p.add_argument("--x", required=True, help="first sample (size m), one value per line")
    p.add_argument("--y", required=True, help="second sample (size n)")
    p.add_argument("--tail", choices=lattice.TAILS, default="upper")

    p = sub.add_parser("levels", help="significance levels of the distinct profiles")
    p.add_argument("m", type=_positive)
    p.add_argument("n", type=_positive)

    p = sub.add_parser("table", help="grid of level counts")
    p.add_argument("kind", choices=("natural", "saturated"))
    p.add_argument("--max-m", type=_positive, default=10)
    p.add_argument("--max-n", type=_positive, default=10)
    p.add_argument("--min-m", type=_positive, default=3)
    p.add_argument("--min-n", type=_positive, default=3)

    p = sub.add_parser("refine", help="count and list dominance refinements")
    p.add_argument("m", type=_positive)
    p.add_argument("n", type=_positive)
    p.add_argument("--saturated", action="store_true", help="only saturated refinements")
    p.add_argument("--limit", type=int, default=10, help="maximum number of chains to print")

    p = sub.add_parser("verify", help="cross-check closed forms against brute force")
    p.add_argument("m", type=_positive)
    p.add_argument("n", type=_positive)
    p.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET, help="maximum number of paths to enumerate")
    return parser


def run(argv: list[str] | None = None) -> OutputDocument:
    args = build_parser().parse_args(argv)
    if args.command == "test":
        doc = cmd_test(args.x, args.y, args.tail, args.digits)
    elif args.command == "levels":
        doc = cmd_levels(args.m, args.n, args.digits)
    elif args.command == "table":
        doc = cmd_table(args.kind, args.max_m, args.max_n, args.min_m, args.min_n)
    elif args.command == "refine":
        doc = cmd_refine(args.m, args.n, args.saturated, args.limit)
    else:
        doc = cmd_verify(args.m, args.n, args.budget)
    doc.format = args.format
    return doc


def main(argv: list[str] | None = None) -> int:
    try:
        doc = run(argv)
    except (SmirnovError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(doc.render())
    return doc.exit_code


if __name__ == "__main__":
    sys.exit(main())
