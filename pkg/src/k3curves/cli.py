"""Command-line front end.

    k3curves table  [--er LIST|all] [--gmax N] [--format human|csv|json]
    k3curves verify [--suite NAME] [--er LIST|all] [--gmax N] [--exact] [--format human|json]
    k3curves asym   [--er INT|complex] [--points LIST] [--format human|csv|json]
    k3curves parity [--k K] [--format human|json]

Exit codes: 0 all checks pass, 1 at least one violation, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys

from .asymptotics import convergence_report
from .congruences import (
    CheckReport,
    check_3dissection,
    check_j_congruence,
    check_lehner,
    check_mod2_collapse,
    check_theta_ninth_power,
    parity_self_similarity,
    parity_sequence,
    sweep_clauses,
)
from .eta import (
    ER_MAX,
    ER_MIN,
    InvalidTopologyError,
    RealTopology,
    all_topologies,
    gauss_theta_series,
    welschinger_series,
    welschinger_via_eta_quotient,
)
from .invariants import DEFAULT_TOPOLOGIES, InvariantTable, compute_table, verify_sign_monotonicity
from .series import ts_factor_product, ts_mul

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2
DEFAULT_GMAX = 20
EXACT_GMAX_LIMIT = 200
SUITES = ("congruences", "monotonicity", "identities", "asymptotics")

_VALUE_FLAGS = {"--er", "--points"}
_NEG_VALUE = re.compile(r"^-\d")


class UsageError(Exception):
    pass


def _fmt(x: float | None) -> str:
    return "" if x is None else f"{x:.6g}"


# ---------------------------------------------------------------- parsing


def parse_er_list(text: str) -> list[RealTopology]:
    if text.strip() == "all":
        return all_topologies()
    out = []
    for part in text.split(","):
        part = part.strip()
        try:
            e = int(part)
        except ValueError:
            raise UsageError(f"bad e_R value {part!r}") from None
        try:
            out.append(RealTopology(e))
        except InvalidTopologyError as exc:
            raise UsageError(str(exc)) from None
    if len({t.e_r for t in out}) != len(out):
        raise UsageError("duplicate e_R values")
    return out


def parse_target(text: str):
    if text.strip() == "complex":
        return "complex"
    topologies = parse_er_list(text)
    if len(topologies) != 1:
        raise UsageError("--er takes a single value or 'complex' here")
    return topologies[0]


def parse_points(text: str) -> list[int]:
    try:
        points = [int(p) for p in text.split(",")]
    except ValueError:
        raise UsageError(f"bad --points {text!r}") from None
    if not points or min(points) < 1:
        raise UsageError("--points entries must be >= 1")
    return points


# ---------------------------------------------------------------- rendering


def render_table(table: InvariantTable, fmt: str) -> str:
    e_rs = table.e_r_values
    if fmt == "json":
        return json.dumps(table.to_dict(), indent=2)
    header = ["g"] + [f"w[e_R={e}]" for e in e_rs] + ["c"]
    body = [[r.g] + [r.w[e] for e in e_rs] + [r.c] for r in table.rows]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(body)
        return buf.getvalue().rstrip("\n")
    cells = [header] + [[str(x) for x in row] for row in body]
    widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
    lines = ["  ".join(s.rjust(w) for s, w in zip(row, widths)) for row in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def parse_table_json(text: str) -> InvariantTable:
    return InvariantTable.from_dict(json.loads(text))


def render_convergence(rows, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"rows": [r.to_dict() for r in rows]}, indent=2)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "log_count", "prediction", "ratio", "note"])
        for r in rows:
            writer.writerow([r.n] + ["" if x is None else repr(x) for x in (r.log_count, r.prediction, r.ratio)] + [r.note])
        return buf.getvalue().rstrip("\n")
    lines = [f"{'n':>8}  {'log_count':>12}  {'prediction':>12}  {'ratio':>10}"]
    for r in rows:
        if r.skipped:
            lines.append(f"{r.n:>8}  skipped: {r.note}")
        else:
            lines.append(f"{r.n:>8}  {_fmt(r.log_count):>12}  {_fmt(r.prediction):>12}  {_fmt(r.ratio):>10}")
    return "\n".join(lines)


# ---------------------------------------------------------------- suites


def _identities(topologies, gmax: int) -> list[CheckReport]:
    reports = []
    for t in topologies:
        direct = welschinger_series(t, gmax)
        via_eta = welschinger_via_eta_quotient(t, gmax)
        bad = [{"g": g, "product": a, "eta_quotient": b} for g, (a, b) in enumerate(zip(direct, via_eta)) if a != b]
        reports.append(CheckReport("cross-form", "fail" if bad else "pass", {"e_R": t.e_r, "order": gmax}, bad))
    quotient = ts_mul(ts_factor_product(1, -1, 2, gmax), ts_factor_product(2, -1, -1, gmax))
    theta = gauss_theta_series(gmax)
    bad = [{"exponent": k, "quotient": a, "theta": b} for k, (a, b) in enumerate(zip(quotient, theta)) if a != b]
    reports.append(CheckReport("gauss-identity", "fail" if bad else "pass", {"order": gmax}, bad))
    reports.extend(check_mod2_collapse(t, gmax) for t in topologies)
    return reports


def _congruence_extras(gmax: int) -> list[CheckReport]:
    k_parity = max(3, gmax // 8)
    bits = parity_sequence(k_parity)
    both = CheckReport(
        "parity-both-values",
        "pass" if 0 in bits and 1 in bits else "fail",
        {"K": k_parity},
        [] if 0 in bits and 1 in bits else [{"bits": bits}],
        {"zeros": bits.count(0), "ones": bits.count(1)},
    )
    return [
        check_j_congruence(gmax, 16),
        check_j_congruence(gmax, 9),
        check_lehner(max(1, gmax // 3)),
        *(check_3dissection(k, gmax) for k in (1, -4, -8)),
        check_theta_ninth_power(gmax),
        parity_self_similarity(k_parity),
        both,
    ]


def _asymptotics(topologies, gmax: int) -> list[CheckReport]:
    hi = gmax - gmax % 2
    lo = max(2, (gmax // 4) - (gmax // 4) % 2)
    if hi <= lo:
        raise UsageError("--suite asymptotics needs --gmax >= 8")
    reports = []
    for target in ["complex", *topologies]:
        rows = convergence_report(target, [lo, hi])
        label = "complex" if target == "complex" else target.e_r
        improved = rows[1].error < rows[0].error
        reports.append(
            CheckReport(
                "log-convergence",
                "pass" if improved else "fail",
                {"e_R": label, "points": [lo, hi]},
                [] if improved else [{"errors": [rows[0].error, rows[1].error]}],
                {"ratios": [r.ratio for r in rows]},
            )
        )
    return reports


def run_suite(suite: str, topologies, gmax: int, exact: bool = False) -> list[dict]:
    """Run one suite and return its reports as dicts (deterministic order)."""
    topologies = sorted(topologies)
    if suite == "congruences":
        if exact and gmax > EXACT_GMAX_LIMIT:
            raise UsageError(f"--exact is limited to --gmax <= {EXACT_GMAX_LIMIT}")
        out = [r.to_dict() for r in sweep_clauses(topologies, gmax, exact=exact)]
        out += [dict(r.to_dict(), suite="congruences") for r in _congruence_extras(gmax)]
        return out
    if suite == "monotonicity":
        return [verify_sign_monotonicity(t, gmax).to_dict() for t in topologies]
    if suite == "identities":
        return [dict(r.to_dict(), suite="identities") for r in _identities(topologies, gmax)]
    if suite == "asymptotics":
        return [dict(r.to_dict(), suite="asymptotics") for r in _asymptotics(topologies, gmax)]
    raise UsageError(f"unknown suite {suite!r}")


def _describe(report: dict) -> str:
    bits = [report["suite"]]
    name = report.get("clause") or report.get("check")
    if name:
        bits.append(name)
    if "e_R" in report:
        bits.append(f"e_R={report['e_R']}")
    for key, value in report.get("params", {}).items():
        bits.append(f"{key}={value}")
    if "modulus" in report:
        bits.append(f"mod {report['modulus']}")
    if "g_max" in report:
        bits.append(f"g<={report['g_max']}")
    return " ".join(str(b) for b in bits)


def render_verify(reports: list[dict], fmt: str) -> str:
    failed = any(r["status"] == "fail" for r in reports)
    if fmt == "json":
        return json.dumps({"status": "fail" if failed else "pass", "reports": reports}, indent=2)
    lines = []
    for r in reports:
        lines.append(f"[{r['status'].upper()}] {_describe(r)}")
        if r["status"] != "fail":
            continue
        if r.get("reason"):
            lines.append(f"    g={r['first_violation']}: {r['reason']}")
        for v in r.get("violations", [])[:20]:
            lines.append(f"    {v}")
    lines.append("FAILED" if failed else "all checks passed")
    return "\n".join(lines)


# ---------------------------------------------------------------- commands


def cmd_table(args) -> int:
    topologies = parse_er_list(args.er)
    if args.gmax < 0:
        raise UsageError("--gmax must be >= 0")
    print(render_table(compute_table(topologies, args.gmax), args.format))
    return EXIT_OK


def cmd_verify(args) -> int:
    topologies = parse_er_list(args.er)
    if args.gmax < 1:
        raise UsageError("--gmax must be >= 1")
    suites = SUITES if args.suite == "all" else (args.suite,)
    reports = []
    for suite in suites:
        reports.extend(run_suite(suite, topologies, args.gmax, exact=args.exact))
    print(render_verify(reports, args.format))
    return EXIT_VIOLATION if any(r["status"] == "fail" for r in reports) else EXIT_OK


def cmd_asym(args) -> int:
    target = parse_target(args.er)
    rows = convergence_report(target, parse_points(args.points))
    print(render_convergence(rows, args.format))
    return EXIT_OK


def cmd_parity(args) -> int:
    if args.k < 0:
        raise UsageError("--k must be >= 0")
    bits = parity_sequence(args.k)
    zeros = [n for n, b in enumerate(bits) if b == 0]
    if args.format == "json":
        print(json.dumps({"bits": bits, "zeros": bits.count(0), "ones": bits.count(1), "zero_positions": zeros}))
    else:
        print(" ".join(str(b) for b in bits))
        print(f"zeros: {bits.count(0)}  ones: {bits.count(1)}")
        print("zero positions: {" + ", ".join(str(z) for z in zeros) + "}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    er_help = f"comma-separated even e_R values in [{ER_MIN}, {ER_MAX}], or 'all'"
    default_er = ",".join(str(t.e_r) for t in DEFAULT_TOPOLOGIES)
    parser = argparse.ArgumentParser(prog="k3curves", description="Real and complex rational curve counts on K3 surfaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="invariant table w_g / c_g")
    p.add_argument("--er", default=default_er, help=er_help)
    p.add_argument("--gmax", type=int, default=DEFAULT_GMAX)
    p.add_argument("--format", choices=("human", "csv", "json"), default="human")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--er", default=default_er, help=er_help)
    p.add_argument("--gmax", type=int, default=DEFAULT_GMAX)
    p.add_argument("--exact", action="store_true", help=f"big-integer congruence checks (gmax <= {EXACT_GMAX_LIMIT})")
    p.add_argument("--format", choices=("human", "json"), default="human")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("asym", help="log-scale convergence report")
    p.add_argument("--er", default="complex", help="single even e_R or 'complex'")
    p.add_argument("--points", default="500,2000")
    p.add_argument("--format", choices=("human", "csv", "json"), default="human")
    p.set_defaults(func=cmd_asym)

    p = sub.add_parser("parity", help="parity sequence i_n = c_{8n} mod 2")
    p.add_argument("--k", type=int, default=16)
    p.add_argument("--format", choices=("human", "json"), default="human")
    p.set_defaults(func=cmd_parity)
    return parser


def _glue_negative_values(argv: list[str]) -> list[str]:
    # argparse reads "-18,20" as an option; rewrite to "--er=-18,20".
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv) and _NEG_VALUE.match(argv[i + 1]):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    argv = _glue_negative_values(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"k3curves: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
