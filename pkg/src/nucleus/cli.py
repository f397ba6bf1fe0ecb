"""Command-line front end.

Subcommands: ``table`` (render the count table), ``verify`` (identity
cross-check sweeps), ``congruence`` (family scans), ``decay`` (trace one
partition or emit the decay digraph), ``parity`` (parity listing),
``ratios`` (growth diagnostics) and ``cache`` (build or check the CSV
cache).  Machine output (csv or json) is byte-deterministic for
identical invocations; timings go to stderr.  Unbounded integers travel
as decimal strings in JSON.

Exit status: 0 all requested checks passed, 1 a check failed, 2 usage
error, 3 cache file invalid.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass

from . import __version__
from .asymptotics import estimate_rows, ratio_report
from .cache import CacheError, load_table, read_table, resolve_cache_path
from .congruence import (
    RAMANUJAN_PROGRESSIONS,
    CongruenceFamily,
    CongruenceReport,
    check_gamma_weighted,
    check_nu_k_progression,
    check_nu_window,
    check_progression,
    check_ramanujan,
    p_mod_m_table,
    parity_via_gamma,
)
from .counting import (
    CountTable,
    RestrictedCounts,
    nu_via_bounded_sum,
    nu_via_gamma_chain,
    p_via_gamma_weights,
    p_via_gap_sum,
    p_via_k_nuclear,
    p_via_n_nu_minus_gamma,
    p_via_nu_chain,
)
from .partitions import (
    EnumerationConstraint,
    Partition,
    decay_chain,
    is_nuclear,
    iter_parts,
    multiplicity,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_CACHE_ERROR = 3

FORMATS = ("text", "csv", "json")

_NUCLEAR = EnumerationConstraint(min_part=2)


# --------------------------------------------------------------------------
# verification sweeps
# --------------------------------------------------------------------------

@dataclass
class IdentityOutcome:
    identity: str
    checked: int
    failures: int
    first_failure: int | None
    expected_fail: bool = False

    @property
    def ok(self) -> bool:
        return self.failures == 0

    @property
    def status(self) -> str:
        if self.failures:
            return "fail"
        return "expected-fail" if self.expected_fail else "pass"


@dataclass
class VerificationSummary:
    exact_limit: int
    enum_limit: int
    outcomes: list[IdentityOutcome]

    @property
    def passed(self) -> bool:
        return all(outcome.ok for outcome in self.outcomes)


K_VALUES = (1, 2, 3, 5, 7, 11)


def _sweep(name, low, high, predicate, expected_fail=False):
    failures = 0
    first = None
    for n in range(low, high + 1):
        if not predicate(n):
            failures += 1
            if first is None:
                first = n
    return IdentityOutcome(name, max(high - low + 1, 0), failures, first, expected_fail)


def _run_nu_chain(table, exact, enum, counts):
    return _sweep("nu_chain", 0, exact, lambda n: p_via_nu_chain(n, table).value == table.p[n])


def _run_gamma_chain(table, exact, enum, counts):
    return _sweep("gamma_chain", 2, exact, lambda n: nu_via_gamma_chain(n, table) == table.nu[n])


def _run_gamma_weights(table, exact, enum, counts):
    return _sweep("gamma_weights", 2, exact, lambda n: p_via_gamma_weights(n, table).value == table.p[n])


def _run_n_nu_minus_gamma(table, exact, enum, counts):
    return _sweep("n_nu_minus_gamma", 2, exact,
                  lambda n: p_via_n_nu_minus_gamma(n, table).value == table.p[n])


def _run_bounded_sum(table, exact, enum, counts):
    return _sweep("bounded_sum", 4, exact,
                  lambda n: nu_via_bounded_sum(n, counts=counts)[1] == table.nu[n])


def _run_k_nuclear(table, exact, enum, counts):
    def all_k_agree(n):
        return all(p_via_k_nuclear(n, k, table)[1].value == table.p[n] for k in K_VALUES)
    return _sweep("k_nuclear", 0, exact, all_k_agree)


def _run_gap_sum(table, exact, enum, counts):
    return _sweep("gap_sum", 2, enum, lambda n: p_via_gap_sum(n).value == table.p[n])


def _run_nuclear_count(table, exact, enum, counts):
    def count_matches(n):
        return sum(1 for _ in iter_parts(n, _NUCLEAR)) == table.nu[n]
    return _sweep("nuclear_count", 0, enum, count_matches)


def _run_ground_state_count(table, exact, enum, counts):
    def count_matches(n):
        ground = sum(1 for parts in iter_parts(n, _NUCLEAR)
                     if len(parts) >= 2 and parts[0] == parts[1])
        return ground == table.gamma[n]
    return _sweep("ground_state_count", 0, enum, count_matches)


def _run_bounded_sum_truncated(table, exact, enum, counts):
    # The truncated variant must come out exactly one short, everywhere.
    return _sweep("bounded_sum_truncated", 4, exact,
                  lambda n: nu_via_bounded_sum(n, counts=counts)[0] == table.nu[n] - 1,
                  expected_fail=True)


def _run_k_nuclear_shifted(table, exact, enum, counts):
    def demonstrates(n):
        shifted, _ = p_via_k_nuclear(n, 2, table)
        return shifted != table.p[n]
    return _sweep("k_nuclear_shifted", 6, 6, demonstrates, expected_fail=True)


_IDENTITY_RUNNERS = {
    "nu_chain": _run_nu_chain,
    "gamma_chain": _run_gamma_chain,
    "gamma_weights": _run_gamma_weights,
    "n_nu_minus_gamma": _run_n_nu_minus_gamma,
    "bounded_sum": _run_bounded_sum,
    "k_nuclear": _run_k_nuclear,
    "gap_sum": _run_gap_sum,
    "nuclear_count": _run_nuclear_count,
    "ground_state_count": _run_ground_state_count,
    "bounded_sum_truncated": _run_bounded_sum_truncated,
    "k_nuclear_shifted": _run_k_nuclear_shifted,
}

IDENTITY_NAMES = tuple(_IDENTITY_RUNNERS)


def run_verification(table: CountTable, exact_limit: int, enum_limit: int,
                     names=IDENTITY_NAMES) -> tuple[VerificationSummary, dict[str, float]]:
    """Run the selected identity sweeps; returns the summary and timings."""
    counts = RestrictedCounts()
    if any(name.startswith("bounded_sum") for name in names):
        counts.ensure(max(exact_limit - 2, 0))
    outcomes = []
    timings = {}
    for name in names:
        start = time.perf_counter()
        outcomes.append(_IDENTITY_RUNNERS[name](table, exact_limit, enum_limit, counts))
        timings[name] = time.perf_counter() - start
    return VerificationSummary(exact_limit, enum_limit, outcomes), timings


# --------------------------------------------------------------------------
# serialization
# --------------------------------------------------------------------------

def _fmt_float(value) -> str:
    return "" if value is None else format(value, ".12g")


def _json_dumps(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


def render_table(table: CountTable, rows: list[int], fmt: str) -> str:
    if fmt == "csv":
        lines = ["n,gamma,nu,p"]
        lines += [f"{n},{table.gamma[n]},{table.nu[n]},{table.p[n]}" for n in rows]
        return "\n".join(lines) + "\n"
    if fmt == "json":
        payload = {"kind": "count_table", "rows": [
            {"n": n, "gamma": str(table.gamma[n]), "nu": str(table.nu[n]), "p": str(table.p[n])}
            for n in rows
        ]}
        return _json_dumps(payload)
    cells = [("n", "gamma", "nu", "p")]
    cells += [(str(n), str(table.gamma[n]), str(table.nu[n]), str(table.p[n])) for n in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(4)]
    return "\n".join("  ".join(cell.rjust(widths[i]) for i, cell in enumerate(row)).rstrip()
                     for row in cells) + "\n"


def table_rows_from_json(text: str) -> list[tuple[int, int, int, int]]:
    payload = json.loads(text)
    return [(row["n"], int(row["gamma"]), int(row["nu"]), int(row["p"]))
            for row in payload["rows"]]


def summary_to_json(summary: VerificationSummary, errata_demo=None) -> str:
    payload = {
        "kind": "verification_summary",
        "exact_limit": summary.exact_limit,
        "enum_limit": summary.enum_limit,
        "identities": [
            {"identity": o.identity, "checked": o.checked, "failures": o.failures,
             "first_failure": o.first_failure, "expected_fail": o.expected_fail,
             "status": o.status}
            for o in summary.outcomes
        ],
        "passed": summary.passed,
    }
    if errata_demo is not None:
        payload["errata_demo"] = errata_demo
    return _json_dumps(payload)


def summary_from_json(text: str) -> VerificationSummary:
    payload = json.loads(text)
    outcomes = [IdentityOutcome(o["identity"], o["checked"], o["failures"],
                                o["first_failure"], o["expected_fail"])
                for o in payload["identities"]]
    return VerificationSummary(payload["exact_limit"], payload["enum_limit"], outcomes)


def render_summary(summary: VerificationSummary, fmt: str, errata_demo=None) -> str:
    if fmt == "json":
        return summary_to_json(summary, errata_demo)
    if fmt == "csv":
        lines = ["identity,checked,failures,first_failure,status"]
        for o in summary.outcomes:
            first = "" if o.first_failure is None else str(o.first_failure)
            lines.append(f"{o.identity},{o.checked},{o.failures},{first},{o.status}")
        return "\n".join(lines) + "\n"
    width = max(len(o.identity) for o in summary.outcomes)
    lines = [f"identity sweeps: exact n <= {summary.exact_limit}, enumerated n <= {summary.enum_limit}"]
    for o in summary.outcomes:
        detail = f"checked {o.checked}"
        if o.failures:
            detail += f", {o.failures} failures, first at n={o.first_failure}"
        lines.append(f"  {o.identity.ljust(width)}  {o.status:<13}  {detail}")
    if errata_demo:
        lines.append("errata demonstrations (expected failures, excluded from exit status):")
        for item in errata_demo:
            lines.append(f"  {item}")
    lines.append(f"result: {'pass' if summary.passed else 'fail'}")
    return "\n".join(lines) + "\n"


def report_to_json(report: CongruenceReport) -> str:
    family = report.family
    payload = {
        "kind": "congruence_report",
        "family": {
            "family_id": family.family_id,
            "modulus": family.modulus,
            "progression": list(family.progression),
            "start_n": family.start_n,
        },
        "range_checked": list(report.range_checked),
        "violations": [[n, r] for n, r in report.violations],
    }
    return _json_dumps(payload)


def report_from_json(text: str) -> CongruenceReport:
    payload = json.loads(text)
    fam = payload["family"]
    family = CongruenceFamily(fam["family_id"], fam["modulus"],
                              tuple(fam["progression"]), fam["start_n"])
    return CongruenceReport(family, tuple(payload["range_checked"]),
                            [(n, r) for n, r in payload["violations"]])


def render_report(report: CongruenceReport, fmt: str) -> str:
    family = report.family
    a, b = family.progression
    if fmt == "json":
        return report_to_json(report)
    if fmt == "csv":
        first = "" if report.passed else str(report.violations[0][0])
        lines = ["family,modulus,a,b,start_n,end_n,violations,first_violation",
                 f"{family.family_id},{family.modulus},{a},{b},{report.range_checked[0]},"
                 f"{report.range_checked[1]},{len(report.violations)},{first}"]
        return "\n".join(lines) + "\n"
    lines = [f"family: {family.family_id} mod {family.modulus}, arguments {a}*n+{b},"
             f" n = {report.range_checked[0]}..{report.range_checked[1]}"]
    if report.passed:
        lines.append("violations: none")
    else:
        lines.append(f"violations: {len(report.violations)}")
        for n, r in report.violations[:10]:
            lines.append(f"  n={n}: residue {r}")
        if len(report.violations) > 10:
            lines.append(f"  ... {len(report.violations) - 10} more")
    return "\n".join(lines) + "\n"


def parity_rows_from_json(text: str) -> list[tuple[int, int, int, bool]]:
    payload = json.loads(text)
    return [(row["n"], int(row["gamma_sum"]), 1 if row["parity"] == "odd" else 0, row["agrees"])
            for row in payload["rows"]]


def render_parity(rows, fmt: str) -> str:
    # rows: (n, gamma_sum, parity_bit, agrees)
    if fmt == "json":
        payload = {"kind": "parity_report", "rows": [
            {"n": n, "gamma_sum": str(total), "parity": "odd" if bit else "even", "agrees": agrees}
            for n, total, bit, agrees in rows
        ]}
        return _json_dumps(payload)
    if fmt == "csv":
        lines = ["n,gamma_sum,parity,agrees"]
        lines += [f"{n},{total},{'odd' if bit else 'even'},{str(agrees).lower()}"
                  for n, total, bit, agrees in rows]
        return "\n".join(lines) + "\n"
    cells = [("n", "gamma_sum", "parity", "agrees")]
    cells += [(str(n), str(total), "odd" if bit else "even", "yes" if agrees else "NO")
              for n, total, bit, agrees in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(4)]
    return "\n".join("  ".join(cell.rjust(widths[i]) for i, cell in enumerate(row)).rstrip()
                     for row in cells) + "\n"


def render_ratios(rows, fmt: str) -> str:
    header = ("n", "nu_over_p", "gamma_over_nu", "gap_estimate",
              "sqrt_weighted_nu", "linear_weighted_gamma")
    if fmt == "json":
        payload = {"kind": "ratio_report", "rows": [
            {"n": r.n, "nu_over_p": r.nu_over_p, "gamma_over_nu": r.gamma_over_nu,
             "gap_estimate": r.gap_estimate, "sqrt_weighted_nu": r.sqrt_weighted_nu,
             "linear_weighted_gamma": r.linear_weighted_gamma}
            for r in rows
        ]}
        return _json_dumps(payload)
    table = [header] + [
        (str(r.n), _fmt_float(r.nu_over_p), _fmt_float(r.gamma_over_nu),
         _fmt_float(r.gap_estimate), _fmt_float(r.sqrt_weighted_nu),
         _fmt_float(r.linear_weighted_gamma))
        for r in rows
    ]
    if fmt == "csv":
        return "\n".join(",".join(row) for row in table) + "\n"
    widths = [max(len(row[i]) for row in table) for i in range(len(header))]
    return "\n".join("  ".join(cell.rjust(widths[i]) for i, cell in enumerate(row)).rstrip()
                     for row in table) + "\n"


def render_estimates(rows, fmt: str) -> str:
    if fmt == "json":
        payload = {"kind": "estimate_report", "rows": [
            {"n": r.n, "exact": str(r.exact), "estimate": r.estimate, "ratio": r.ratio}
            for r in rows
        ]}
        return _json_dumps(payload)
    table = [("n", "exact", "estimate", "ratio")] + [
        (str(r.n), str(r.exact), _fmt_float(r.estimate), _fmt_float(r.ratio)) for r in rows
    ]
    if fmt == "csv":
        return "\n".join(",".join(row) for row in table) + "\n"
    widths = [max(len(row[i]) for row in table) for i in range(4)]
    return "\n".join("  ".join(cell.rjust(widths[i]) for i, cell in enumerate(row)).rstrip()
                     for row in table) + "\n"


def decay_digraph(n: int) -> str:
    """DOT digraph of every nuclear partition of n and its decay products."""
    lines = [f"digraph decay_{n} {{"]
    for parts in iter_parts(n, _NUCLEAR):
        mu = Partition(parts)
        chain = decay_chain(mu) if parts else []
        if not chain:
            lines.append(f'  "{mu}";')
        for product in chain:
            lines.append(f'  "{mu}" -> "{product}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# argument plumbing
# --------------------------------------------------------------------------

def _row_spec(spec: str) -> list[int]:
    rows = set()
    try:
        for chunk in spec.split(","):
            chunk = chunk.strip()
            if "-" in chunk:
                lo_text, _, hi_text = chunk.partition("-")
                lo, hi = int(lo_text), int(hi_text)
                if lo > hi or lo < 0:
                    raise ValueError
                rows.update(range(lo, hi + 1))
            else:
                value = int(chunk)
                if value < 0:
                    raise ValueError
                rows.add(value)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"row spec must look like 1-20,100 (nonnegative, ascending ranges), got {spec!r}") from None
    if not rows:
        raise argparse.ArgumentTypeError("row spec selects no rows")
    return sorted(rows)


def _int_list(spec: str) -> list[int]:
    try:
        return [int(chunk) for chunk in spec.split(",") if chunk.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {spec!r}") from None


def _add_format(parser):
    parser.add_argument("--format", "-f", choices=FORMATS, default="text",
                        help="output format (default text)")


def _add_cache(parser):
    parser.add_argument("--cache", metavar="PATH", default=None,
                        help="CSV cache file; defaults to $NUCLEUS_CACHE, else in-memory only")


def _table_for(args, limit: int) -> CountTable:
    return load_table(limit, resolve_cache_path(args.cache))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nucleus",
        description="Exact partition counting: tables, identity cross-checks, "
                    "congruence scans, decay tracing and growth diagnostics.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("table", help="render the n, gamma, nu, p table")
    p_table.add_argument("--limit", "-N", type=int, default=None,
                         help="largest n (default 20, or the largest selected row)")
    p_table.add_argument("--rows", type=_row_spec, default=None,
                         help="row selection like 1-20,100 (default 1..limit)")
    _add_format(p_table)
    _add_cache(p_table)
    p_table.set_defaults(func=cmd_table)

    p_verify = sub.add_parser("verify", help="run identity cross-check sweeps")
    p_verify.add_argument("--limit", "-N", type=int, default=500,
                          help="exact-table sweep bound (default 500)")
    p_verify.add_argument("--enum-limit", type=int, default=40,
                          help="enumeration sweep bound (default 40)")
    p_verify.add_argument("--identities", type=str, default=None,
                          help="comma-separated subset of: " + ",".join(IDENTITY_NAMES))
    p_verify.add_argument("--show-errata", action="store_true",
                          help="include the truncated/shifted expected-failure demonstrations")
    _add_format(p_verify)
    _add_cache(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_cong = sub.add_parser("congruence", help="scan a congruence family")
    p_cong.add_argument("family",
                        choices=("ramanujan", "nu_window", "nu_k_progression",
                                 "gamma_weighted", "custom"))
    p_cong.add_argument("params", nargs="*", type=int,
                        help="modulus (5, 7 or 11), or A B M for custom p(A*n+B) mod M")
    p_cong.add_argument("--limit", "-N", type=int, default=200,
                        help="largest progression index n (default 200)")
    _add_format(p_cong)
    _add_cache(p_cong)
    p_cong.set_defaults(func=cmd_congruence)

    p_decay = sub.add_parser("decay", help="trace a decay chain, or emit a DOT digraph")
    p_decay.add_argument("target",
                         help="partition literal like 5,2 or [5,2]; with --dot, the size n")
    p_decay.add_argument("--dot", action="store_true",
                         help="emit the decay digraph of every nuclear partition of size n")
    p_decay.set_defaults(func=cmd_decay)

    p_parity = sub.add_parser("parity", help="parity of p(n) from the gamma sums, even n")
    p_parity.add_argument("--limit", "-N", type=int, default=1000,
                          help="largest even n (default 1000)")
    _add_format(p_parity)
    _add_cache(p_parity)
    p_parity.set_defaults(func=cmd_parity)

    p_ratios = sub.add_parser("ratios", help="growth-ratio diagnostics")
    p_ratios.add_argument("--limit", "-N", type=int, default=100,
                          help="largest n for the ratio rows (default 100)")
    p_ratios.add_argument("--estimator", choices=("p", "nu", "gamma"), default=None,
                          help="compare this estimator against exact values instead")
    p_ratios.add_argument("--form", choices=("exact_difference", "simplified"),
                          default="exact_difference", help="estimator form for nu/gamma")
    p_ratios.add_argument("--points", type=_int_list, default=None,
                          help="comma-separated n values for --estimator (default 25,100,400)")
    _add_format(p_ratios)
    _add_cache(p_ratios)
    p_ratios.set_defaults(func=cmd_ratios)

    p_cache = sub.add_parser("cache", help="build, extend or check the CSV cache")
    p_cache.add_argument("action", choices=("build", "check"))
    p_cache.add_argument("--limit", "-N", type=int, default=500,
                         help="table size for build (default 500)")
    _add_cache(p_cache)
    p_cache.set_defaults(func=cmd_cache)

    return parser


# --------------------------------------------------------------------------
# subcommands
# --------------------------------------------------------------------------

def cmd_table(args, parser) -> int:
    rows = args.rows
    limit = args.limit
    if limit is None:
        limit = max(rows) if rows else 20
    if limit < 1:
        parser.error(f"--limit must be >= 1, got {limit}")
    if rows is None:
        rows = list(range(1, limit + 1))
    if rows and rows[-1] > limit:
        parser.error(f"--rows selects n={rows[-1]} beyond --limit {limit}")
    table = _table_for(args, limit)
    sys.stdout.write(render_table(table, rows, args.format))
    return EXIT_OK


def cmd_verify(args, parser) -> int:
    if args.enum_limit > args.limit:
        parser.error("--enum-limit cannot exceed --limit")
    names = IDENTITY_NAMES
    if args.identities:
        names = tuple(name.strip() for name in args.identities.split(",") if name.strip())
        unknown = [name for name in names if name not in _IDENTITY_RUNNERS]
        if unknown:
            parser.error(f"unknown identities: {', '.join(unknown)}")
    table = _table_for(args, args.limit)
    summary, timings = run_verification(table, args.limit, args.enum_limit, names)
    errata_demo = None
    if args.show_errata:
        counts = RestrictedCounts()
        demo_n = [n for n in (4, 5, 6) if n <= args.limit]
        errata_demo = [
            f"bounded-sum truncated: n={n} -> {nu_via_bounded_sum(n, counts=counts)[0]}"
            f" vs nu({n})={table.nu[n]}" for n in demo_n
        ]
        if args.limit >= 6:
            shifted, _ = p_via_k_nuclear(6, 2, table)
            errata_demo.append(f"k-skip shifted: n=6,k=2 -> {shifted} vs p(6)={table.p[6]}")
    for name, seconds in timings.items():
        print(f"timing: {name} {seconds:.3f}s", file=sys.stderr)
    sys.stdout.write(render_summary(summary, args.format, errata_demo))
    return EXIT_OK if summary.passed else EXIT_CHECK_FAILED


def cmd_congruence(args, parser) -> int:
    family = args.family
    if args.limit < 0:
        parser.error("--limit must be >= 0")
    if family == "custom":
        if len(args.params) != 3:
            parser.error("custom family needs three integers: A B M")
        a, b, modulus = args.params
        report = check_progression(a, b, modulus, args.limit)
    else:
        if len(args.params) != 1:
            parser.error(f"family {family} needs exactly one integer: the modulus (5, 7 or 11)")
        modulus = args.params[0]
        if modulus not in RAMANUJAN_PROGRESSIONS:
            parser.error(f"modulus must be 5, 7 or 11, got {modulus}")
        if family == "ramanujan":
            report = check_ramanujan(modulus, args.limit)
        else:
            a, b = RAMANUJAN_PROGRESSIONS[modulus]
            table = _table_for(args, a * args.limit + b)
            checker = {"nu_window": check_nu_window,
                       "nu_k_progression": check_nu_k_progression,
                       "gamma_weighted": check_gamma_weighted}[family]
            report = checker(modulus, args.limit, table)
    sys.stdout.write(render_report(report, args.format))
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def cmd_decay(args, parser) -> int:
    if args.dot:
        try:
            n = int(args.target)
        except ValueError:
            parser.error(f"--dot expects the size n as an integer, got {args.target!r}")
        if n < 0:
            parser.error("--dot expects n >= 0")
        sys.stdout.write(decay_digraph(n))
        return EXIT_OK
    try:
        mu = Partition.parse(args.target)
    except ValueError as exc:
        parser.error(str(exc))
    if not is_nuclear(mu):
        ones = multiplicity(mu, 1)
        print(f"error: {mu} is not nuclear: {ones} part(s) equal 1", file=sys.stderr)
        return EXIT_USAGE
    if len(mu) == 0:
        print("() is the empty partition: nothing to decay")
        return EXIT_OK
    print(str(mu))
    chain = decay_chain(mu)
    if not chain:
        print(f"{mu} is a ground state (top two parts equal): no decay products")
        return EXIT_OK
    for product in chain:
        print(str(product))
    return EXIT_OK


def cmd_parity(args, parser) -> int:
    if args.limit < 4:
        parser.error("--limit must be >= 4")
    table = _table_for(args, args.limit)
    residues = p_mod_m_table(args.limit, 2)
    rows = []
    gamma_sum = 0
    for n in range(4, args.limit + 1, 2):
        gamma_sum += table.gamma[n]
        bit = parity_via_gamma(n, table)
        rows.append((n, gamma_sum, bit, bit == residues[n]))
    sys.stdout.write(render_parity(rows, args.format))
    return EXIT_OK if all(agrees for *_rest, agrees in rows) else EXIT_CHECK_FAILED


def cmd_ratios(args, parser) -> int:
    if args.estimator:
        points = args.points or [25, 100, 400]
        table = _table_for(args, max(points))
        rows = estimate_rows(points, table, args.estimator, args.form)
        sys.stdout.write(render_estimates(rows, args.format))
        return EXIT_OK
    if args.limit < 1:
        parser.error("--limit must be >= 1")
    table = _table_for(args, args.limit)
    sys.stdout.write(render_ratios(ratio_report(args.limit, table), args.format))
    return EXIT_OK


def cmd_cache(args, parser) -> int:
    path = resolve_cache_path(args.cache)
    if path is None:
        parser.error("no cache path: pass --cache or set NUCLEUS_CACHE")
    if args.action == "build":
        if args.limit < 0:
            parser.error("--limit must be >= 0")
        table = load_table(args.limit, path)
        print(f"cache {path}: rows 0..{table.limit}")
        return EXIT_OK
    table = read_table(path)
    print(f"cache {path}: ok, rows 0..{table.limit}")
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except CacheError as exc:
        print(f"cache error: {exc}", file=sys.stderr)
        return EXIT_CACHE_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
