"""Command-line interface.

Subcommands: ``verify`` (run the full check suite), ``epr`` (one angle
pair, full report), ``sweep`` (tabulate the report over a difference
grid), ``chsh`` (one setting or an exhaustive scan), ``picture-check``
(cross-engine agreement on a seeded random circuit).

Angles are radians unless ``--degrees`` is given; ``pi`` expressions
such as ``pi/4`` or ``3pi/4`` are accepted.  Exit codes: 0 success,
1 failed check, 2 usage error.  All output is plain ASCII; JSON floats
carry 12 significant digits, human tables 6.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import re
import sys

from .bell import ChshSetting, TSIRELSON, chsh, chsh_scan, scan_rows
from .experiment import (
    ExperimentConfig,
    descriptors_at_t2,
    pre_vs_post_report,
    state_at,
    sweep_reports,
)
from .states import dump_csv
from .verification import compare_pictures, run_all_checks
from .gates import random_circuit

import numpy as np

_PI_RE = re.compile(r"^([+-]?\d*\.?\d*)\*?pi(?:/(\d*\.?\d+))?$", re.IGNORECASE)


def parse_angle(text: str) -> float:
    """Parse a float or a pi expression like ``pi``, ``-pi/3``, ``3pi/4``."""
    text = text.strip()
    m = _PI_RE.match(text)
    if m:
        coeff_text = m.group(1)
        try:
            if coeff_text in ("", "+"):
                coeff = 1.0
            elif coeff_text == "-":
                coeff = -1.0
            else:
                coeff = float(coeff_text)
            value = coeff * math.pi
            if m.group(2):
                value /= float(m.group(2))
            return value
        except (ValueError, ZeroDivisionError):
            raise argparse.ArgumentTypeError(f"cannot parse angle {text!r}") from None
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot parse angle {text!r}") from None


def _json_floats(obj):
    """Round every float to 12 significant digits for stable JSON."""
    if isinstance(obj, float):
        if not math.isfinite(obj):
            return str(obj)
        return float(f"{obj:.12g}")
    if isinstance(obj, dict):
        return {k: _json_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_json_floats(v) for v in obj]
    return obj


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None or out_path == "-":
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(out_path, "w", encoding="ascii", newline="") as fh:
            fh.write(text)


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([f"{v:.12g}" if isinstance(v, float) else v for v in row])
    return buf.getvalue()


def _scale(value: float, degrees: bool) -> float:
    return math.radians(value) if degrees else value


def cmd_verify(args) -> int:
    results = run_all_checks()
    if args.json:
        payload = {
            "all_passed": all(r.passed for r in results),
            "checks": [
                {
                    "name": r.name,
                    "passed": r.passed,
                    "max_deviation": r.max_deviation,
                    "tolerance": r.tolerance,
                    "detail": r.detail,
                }
                for r in results
            ],
        }
        _emit(json.dumps(_json_floats(payload), indent=2), args.out)
    else:
        lines = [f"{'check':<24} {'status':<6} {'max deviation':>14} {'tolerance':>10}"]
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            lines.append(f"{r.name:<24} {status:<6} {r.max_deviation:>14.6g} {r.tolerance:>10.3g}")
        failed = [r.name for r in results if not r.passed]
        lines.append(
            "all checks passed" if not failed else "FAILED: " + ", ".join(failed)
        )
        _emit("\n".join(lines), args.out)
    return 0 if all(r.passed for r in results) else 1


def _report_rows(reports):
    from .experiment import ExperimentReport

    header = list(ExperimentReport.CSV_FIELDS)
    rows = [[report.to_dict()[key] for key in header] for report in reports]
    return header, rows


def cmd_epr(args) -> int:
    cfg = ExperimentConfig(_scale(args.theta, args.degrees), _scale(args.phi, args.degrees))
    report = pre_vs_post_report(cfg)
    data = report.to_dict()
    if args.format == "json":
        if args.show_descriptors:
            qz2, qz3 = descriptors_at_t2(cfg)
            data["descriptor_qz2_t2"] = qz2.render().split("\n")
            data["descriptor_qz3_t2"] = qz3.render().split("\n")
        _emit(json.dumps(_json_floats(data), indent=2), args.out)
    elif args.format == "csv":
        header, rows = _report_rows([report])
        _emit(_csv_text(header, rows), args.out)
    else:
        lines = [f"theta = {cfg.theta:.6g}  phi = {cfg.phi:.6g}  (radians)"]
        lines.append(f"t=2  P(Q2, Q3 both |1>)        = {data['p_joint_t2']:.6g}")
        lines.append(f"t=2  correlation <q_z2 q_z3>   = {data['corr_t2']:.6g}")
        lines.append(f"t=2  linear terms              = {data['lin_qz2_t2']:.3g}, {data['lin_qz3_t2']:.3g}")
        lines.append(f"t=3  record marginal P(Q1=|1>) = {data['p_record_t3']:.6g}")
        lines.append(f"t=4  P(records differ)         = {data['p_diff_t4']:.6g}")
        lines.append("     candidate deviations: "
                     f"sin2_half_diff {data['dev_sin2_half_diff']:.3g}, "
                     f"cos2_half_diff {data['dev_cos2_half_diff']:.3g}, "
                     f"sin2_half_sum {data['dev_sin2_half_sum']:.3g}")
        lines.append("     engine deltas: "
                     f"{data['delta_p_joint_t2']:.3g}, {data['delta_corr_t2']:.3g}, "
                     f"{data['delta_p_diff_t4']:.3g}")
        if args.show_descriptors:
            qz2, qz3 = descriptors_at_t2(cfg)
            lines.append("q_z2(t=2):")
            lines.extend("  " + line for line in qz2.render().split("\n"))
            lines.append("q_z3(t=2):")
            lines.extend("  " + line for line in qz3.render().split("\n"))
        _emit("\n".join(lines), args.out)
    if args.dump_state is not None:
        sys.stdout.write(dump_csv(state_at(cfg, args.dump_state)))
    return 0


def cmd_sweep(args) -> int:
    diffs = [k * 2.0 * math.pi / args.grid_points for k in range(args.grid_points)]
    reports = sweep_reports(ExperimentConfig(d, 0.0) for d in diffs)
    header, rows = _report_rows(reports)
    if args.format == "json":
        payload = {"rows": [dict(zip(header, row)) for row in rows]}
        _emit(json.dumps(_json_floats(payload), indent=2), args.out)
    else:
        _emit(_csv_text(header, rows), args.out)
    return 0


def cmd_chsh(args) -> int:
    if args.scan is not None:
        result = chsh_scan(_scale(args.scan, args.degrees))
        best = result.best
        if args.format == "csv":
            header = ["a", "a_prime", "b", "b_prime", "S", "violation"]
            rows = [
                [a, ap, b, bp, s, int(abs(s) > 2.0 + 1e-12)]
                for a, ap, b, bp, s in scan_rows(result.resolution)
            ]
            _emit(_csv_text(header, rows), args.out)
            return 0
        payload = {
            "resolution": result.resolution,
            "evaluated": result.evaluated,
            "max_abs_s": abs(best.s),
            "best": {
                "a": best.setting.a,
                "a_prime": best.setting.a_prime,
                "b": best.setting.b,
                "b_prime": best.setting.b_prime,
                "S": best.s,
                "violation": best.violates,
            },
        }
        if args.format == "json":
            _emit(json.dumps(_json_floats(payload), indent=2), args.out)
        else:
            _emit(
                "\n".join(
                    [
                        f"scan resolution {result.resolution:.6g} rad, {result.evaluated} settings",
                        f"max |S| = {abs(best.s):.6g} (local bound 2, quantum bound {TSIRELSON:.6g})",
                        f"best setting: a={best.setting.a:.6g} a'={best.setting.a_prime:.6g} "
                        f"b={best.setting.b:.6g} b'={best.setting.b_prime:.6g}",
                        f"violation: {'yes' if best.violates else 'no'}",
                    ]
                ),
                args.out,
            )
        return 0

    a, ap, b, bp = (_scale(v, args.degrees) for v in args.angles)
    result = chsh(ChshSetting(a, ap, b, bp))
    if args.format == "csv":
        header = ["a", "a_prime", "b", "b_prime", "S", "violation"]
        rows = [[a, ap, b, bp, result.s, int(result.violates)]]
        _emit(_csv_text(header, rows), args.out)
    elif args.format == "json":
        payload = {
            "a": a,
            "a_prime": ap,
            "b": b,
            "b_prime": bp,
            "correlations": list(result.correlations),
            "S": result.s,
            "violation": result.violates,
        }
        _emit(json.dumps(_json_floats(payload), indent=2), args.out)
    else:
        _emit(
            "\n".join(
                [
                    f"E(a,b)={result.e_ab:.6g}  E(a,b')={result.e_ab_prime:.6g}  "
                    f"E(a',b)={result.e_a_prime_b:.6g}  E(a',b')={result.e_a_prime_b_prime:.6g}",
                    f"S = {result.s:.6g}",
                    f"violation: {'yes' if result.violates else 'no'}",
                ]
            ),
            args.out,
        )
    return 0


def cmd_picture_check(args) -> int:
    rng = np.random.default_rng(args.seed)
    gates = random_circuit(args.qubits, args.depth, rng)
    deviation = compare_pictures(gates, args.qubits)
    passed = deviation <= 1e-10
    lines = [
        f"qubits={args.qubits} depth={args.depth} seed={args.seed}",
        "circuit: " + " ".join(repr(g) for g in gates),
        f"max cross-engine deviation = {deviation:.3e}",
        "PASS" if passed else "FAIL",
    ]
    _emit("\n".join(lines), args.out)
    return 0 if passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qpictures",
        description="Dual-picture qubit simulator: descriptor engine vs statevector oracle.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run every verification check")
    p_verify.add_argument("--json", action="store_true", help="machine-readable results")
    p_verify.add_argument("--out", default=None, help="output path (default stdout)")
    p_verify.set_defaults(func=cmd_verify)

    p_epr = sub.add_parser("epr", help="full report for one pair of analyzer angles")
    p_epr.add_argument("theta", type=parse_angle)
    p_epr.add_argument("phi", type=parse_angle)
    p_epr.add_argument("--degrees", action="store_true", help="interpret angles as degrees")
    p_epr.add_argument("--show-descriptors", action="store_true",
                       help="append canonical renderings of the t=2 descriptors")
    p_epr.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p_epr.add_argument("--out", default=None)
    p_epr.add_argument("--dump-state", type=int, choices=range(5), default=None,
                       metavar="STEP", help="debug: dump the statevector after step 0..4 as CSV")
    p_epr.set_defaults(func=cmd_epr)

    p_sweep = sub.add_parser("sweep", help="tabulate the report over a difference grid")
    p_sweep.add_argument("grid_points", type=int)
    p_sweep.add_argument("--format", choices=("csv", "json"), default="csv")
    p_sweep.add_argument("--out", default=None)
    p_sweep.set_defaults(func=cmd_sweep)

    p_chsh = sub.add_parser("chsh", help="CHSH value for one setting, or an exhaustive scan")
    p_chsh.add_argument("angles", type=parse_angle, nargs="*", metavar="ANGLE",
                        help="a a' b b' (exactly four)")
    p_chsh.add_argument("--scan", type=parse_angle, default=None, metavar="STEP",
                        help="scan all settings on a grid with this step (must divide pi)")
    p_chsh.add_argument("--degrees", action="store_true")
    p_chsh.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p_chsh.add_argument("--out", default=None)
    p_chsh.set_defaults(func=cmd_chsh)

    p_pc = sub.add_parser("picture-check", help="cross-engine agreement on a random circuit")
    p_pc.add_argument("--qubits", type=int, default=4)
    p_pc.add_argument("--depth", type=int, default=8)
    p_pc.add_argument("--seed", type=int, default=42)
    p_pc.add_argument("--out", default=None)
    p_pc.set_defaults(func=cmd_picture_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "sweep" and args.grid_points < 2:
        parser.error("grid_points must be at least 2")
    if args.command == "chsh":
        if args.scan is None and len(args.angles) != 4:
            parser.error("provide four angles (a a' b b') or --scan STEP")
        if args.scan is not None and args.angles:
            parser.error("--scan does not take positional angles")
    if args.command == "picture-check":
        if not 2 <= args.qubits <= 5:
            parser.error("qubits must be in 2..5")
        if not 1 <= args.depth <= 12:
            parser.error("depth must be in 1..12")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
