"""Command-line front end.

Grammar:
    umbral-lab <compute|verify|table|bench> <target>
               [--n N | --max-n N] [--format text|csv|json|markdown]
               [--jobs J] [--approx D]

Exit codes: 0 success, 1 verification failure, 2 usage error.  All values
are printed exactly: integers in decimal, rationals as "p/q" (bare "p"
when the denominator is 1), polynomials in ascending-power text form.  A
decimal approximation is printed only when --approx is given, and is
labeled as approximate.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import statistics
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Callable, Sequence

from . import lacasse
from .identities import VERIFIERS, Identity, VerifyReport, verify
from .sequences import derangement, factorial, self_power
from .umbra import derangement_poly

PROG = "umbral-lab"

FORMATS = ("text", "csv", "json", "markdown")

VERIFY_TARGETS: dict[str, Identity] = {
    "eq22": Identity.EQ22,
    "eq23": Identity.EQ23,
    "eq24": Identity.EQ24,
    "umbral": Identity.UMBRAL_PROPERTY,
    "conjecture": Identity.CONJECTURE,
    "rewrites": Identity.XI_REWRITES,
    "chain": Identity.PROOF_CHAIN,
}

COMPUTE_TARGETS = ("xi", "xi2", "derangement", "dpoly")

BENCH_ALGORITHMS: tuple[tuple[str, Callable[[int], int]], ...] = (
    ("double_sum", lacasse.xi2_scaled),
    ("derangement_form", lacasse.xi2_via_derangement_scaled),
    ("closed_form", lacasse.xi2_closed_scaled),
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=PROG,
        description="Exact derangement-polynomial computations and identity verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="print one exact value")
    p_compute.add_argument("target", choices=COMPUTE_TARGETS)
    p_compute.add_argument("--n", type=int, required=True, metavar="N")
    p_compute.add_argument("--format", choices=FORMATS, default="text")
    p_compute.add_argument(
        "--approx",
        type=int,
        metavar="D",
        help="also print a D-digit decimal approximation (labeled approximate)",
    )
    p_compute.set_defaults(func=_cmd_compute)

    p_verify = sub.add_parser("verify", help="sweep one or all identity verifiers")
    p_verify.add_argument("target", choices=tuple(VERIFY_TARGETS) + ("all",))
    p_verify.add_argument("--max-n", type=int, default=20, metavar="N")
    p_verify.add_argument("--format", choices=FORMATS, default="text")
    p_verify.add_argument("--jobs", type=int, default=1, metavar="J")
    p_verify.set_defaults(func=_cmd_verify)

    p_table = sub.add_parser("table", help="tabulate derangements and the xi sums")
    p_table.add_argument("target", nargs="?", choices=("all",), default="all")
    p_table.add_argument("--max-n", type=int, default=20, metavar="N")
    p_table.add_argument("--format", choices=FORMATS, default="text")
    p_table.set_defaults(func=_cmd_table)

    p_bench = sub.add_parser("bench", help="time the three xi2 algorithms")
    p_bench.add_argument("target", nargs="?", choices=("all", "xi2"), default="xi2")
    p_bench.add_argument("--max-n", type=int, default=20, metavar="N")
    p_bench.add_argument("--format", choices=FORMATS, default="text")
    p_bench.set_defaults(func=_cmd_bench)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    """Parse and execute one command line; returns the exit code."""
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return ns.func(ns)
    except ValueError as exc:
        print(f"{PROG}: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


# ---------------------------------------------------------------- rendering


def _render(headers: Sequence[str], rows: Sequence[Sequence[str]], fmt: str) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(headers)
        writer.writerows(rows)
        return buf.getvalue().rstrip("\n")
    if fmt == "markdown":
        lines = [
            "| " + " | ".join(headers) + " |",
            "| " + " | ".join("---" for _ in headers) + " |",
        ]
        lines += ["| " + " | ".join(row) + " |" for row in rows]
        return "\n".join(lines)
    # plain text: right-aligned columns
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    out = ["  ".join(h.rjust(w) for h, w in zip(headers, widths))]
    out += ["  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in rows]
    return "\n".join(out)


def _approx_str(value: Fraction, digits: int) -> str:
    """Decimal string with the given number of fractional digits, rounded
    half away from zero."""
    if digits < 1:
        raise ValueError(f"--approx requires at least 1 digit (got {digits})")
    scale = 10**digits
    sign = "-" if value < 0 else ""
    scaled = abs(value) * scale
    rounded = scaled.numerator // scaled.denominator
    if 2 * (scaled - rounded) >= 1:
        rounded += 1
    whole, frac = divmod(rounded, scale)
    return f"{sign}{whole}.{frac:0{digits}d}"


# ----------------------------------------------------------------- compute


def _cmd_compute(ns: argparse.Namespace) -> int:
    n = ns.n
    rational: Fraction | None
    if ns.target == "xi":
        rational = lacasse.xi(n)
        value = str(rational)
    elif ns.target == "xi2":
        rational = lacasse.xi2(n)
        value = str(rational)
    elif ns.target == "derangement":
        d = derangement(n)
        rational = Fraction(d)
        value = str(d)
    else:  # dpoly
        rational = None
        value = str(derangement_poly(n))

    approx = None
    if ns.approx is not None:
        if rational is None:
            raise ValueError("--approx applies to numeric targets, not dpoly")
        approx = _approx_str(rational, ns.approx)

    if ns.format == "json":
        payload: dict = {"target": ns.target, "n": n, "value": value}
        if approx is not None:
            payload["approx"] = approx
        print(json.dumps(payload))
        return 0

    if ns.format in ("csv", "markdown"):
        headers = ["target", "n", "value"] + (["approx"] if approx else [])
        row = [ns.target, str(n), value] + ([approx] if approx else [])
        print(_render(headers, [row], ns.format))
        return 0

    if approx is not None:
        print(f"{value} ~= {approx} (approximate, {ns.approx} digits)")
    else:
        print(value)
    return 0


# ------------------------------------------------------------------ verify


def _verify_task(task: tuple[str, int]) -> VerifyReport:
    # module-level so worker processes can unpickle it
    identity_value, n = task
    return verify(Identity(identity_value), n)


def _cmd_verify(ns: argparse.Namespace) -> int:
    if ns.max_n < 1:
        raise ValueError(f"--max-n must be >= 1 (got {ns.max_n})")
    if ns.jobs < 1:
        raise ValueError(f"--jobs must be >= 1 (got {ns.jobs})")

    if ns.target == "all":
        targets = list(VERIFY_TARGETS.items())
    else:
        targets = [(ns.target, VERIFY_TARGETS[ns.target])]

    tasks: list[tuple[str, int]] = []
    for _, identity in targets:
        min_n = VERIFIERS[identity][1]
        tasks.extend((identity.value, n) for n in range(min_n, ns.max_n + 1))

    if ns.jobs > 1:
        with ProcessPoolExecutor(max_workers=ns.jobs) as pool:
            reports = list(pool.map(_verify_task, tasks, chunksize=8))
    else:
        reports = [_verify_task(t) for t in tasks]

    by_identity: dict[Identity, list[VerifyReport]] = {}
    for report in reports:
        by_identity.setdefault(report.identity, []).append(report)

    failed = sum(1 for r in reports if not r.passed)

    if ns.format == "json":
        print(json.dumps([r.to_dict() for r in reports], indent=2))
    elif ns.format in ("csv", "markdown"):
        headers = ["identity", "n", "passed"]
        rows = [[r.identity.value, str(r.n), str(r.passed).lower()] for r in reports]
        print(_render(headers, rows, ns.format))
    else:
        for name, identity in targets:
            group = by_identity.get(identity, [])
            good = sum(1 for r in group if r.passed)
            print(f"{name}: {good}/{len(group)} pass")
            for r in group:
                for w in r.witnesses:
                    print(f"  FAIL n={r.n} at {w.point}: lhs={w.lhs} rhs={w.rhs}")
        if failed:
            print(f"{failed} verification(s) failed")

    return 1 if failed else 0


# ------------------------------------------------------------------- table


def _cmd_table(ns: argparse.Namespace) -> int:
    if ns.max_n < 1:
        raise ValueError(f"--max-n must be >= 1 (got {ns.max_n})")

    headers = ["n", "D_n", "xi_scaled", "xi2_scaled", "xi", "xi2", "xi2_minus_xi"]
    rows = []
    for n in range(1, ns.max_n + 1):
        xs = lacasse.xi_scaled(n)
        x2s = lacasse.xi2_scaled(n)
        xv = Fraction(xs, self_power(n))
        x2v = Fraction(x2s, self_power(n))
        rows.append(
            [str(n), str(derangement(n)), str(xs), str(x2s), str(xv), str(x2v), str(x2v - xv)]
        )

    if ns.format == "json":
        payload = [
            dict(zip(headers, [int(r[0])] + r[1:]))
            for r in rows
        ]
        print(json.dumps(payload, indent=2))
    else:
        print(_render(headers, rows, ns.format))
    return 0


# ------------------------------------------------------------------- bench


def _cmd_bench(ns: argparse.Namespace) -> int:
    if ns.max_n < 1:
        raise ValueError(f"--max-n must be >= 1 (got {ns.max_n})")

    # agreement gate: no timings are ever reported for disagreeing algorithms;
    # this pass also warms the memo caches so timings are representative
    factorial(ns.max_n + 1)
    derangement(ns.max_n)
    for n in range(1, ns.max_n + 1):
        values = [(name, fn(n)) for name, fn in BENCH_ALGORITHMS]
        if len({v for _, v in values}) != 1:
            detail = ", ".join(f"{name}={v}" for name, v in values)
            print(f"{PROG}: bench: algorithms disagree at n={n}: {detail}", file=sys.stderr)
            return 1

    headers = ["n"] + [f"{name}_s" for name, _ in BENCH_ALGORITHMS]
    rows = []
    timings = []
    for n in range(1, ns.max_n + 1):
        medians = []
        for _, fn in BENCH_ALGORITHMS:
            runs = []
            for _ in range(3):
                t0 = time.perf_counter()
                fn(n)
                runs.append(time.perf_counter() - t0)
            medians.append(statistics.median(runs))
        timings.append((n, medians))
        rows.append([str(n)] + [f"{m:.6f}" for m in medians])

    if ns.format == "json":
        payload = [
            {"n": n, **{name: m for (name, _), m in zip(BENCH_ALGORITHMS, medians)}}
            for n, medians in timings
        ]
        print(json.dumps(payload, indent=2))
    else:
        print(_render(headers, rows, ns.format))
    return 0


if __name__ == "__main__":
    main()
