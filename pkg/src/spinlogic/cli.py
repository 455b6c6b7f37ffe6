"""Command-line surface: classification reports, grid simulations, parameter
searches, and complex-logic demos, with deterministic text/CSV/JSON output.

Exit codes: 0 success, 1 self-check failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import complexlogic, npn, pc, search as search_mod
from .ternary import NUM_FUNCTIONS, decode, encode, multiplication


def _fmt(x: float) -> str:
    """Decimal with 12 significant digits; fixes cross-platform diffability."""
    return format(float(x), ".12g")


def _emit(text: str, out: str | None) -> None:
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _parse_grid(spec: str) -> list[float]:
    """Comma-separated radians, or ``lin:<start>:<stop>:<n>`` for n evenly
    spaced samples including both endpoints."""
    spec = spec.strip()
    if not spec:
        raise ValueError("empty grid spec")
    if spec.startswith("lin:"):
        parts = spec.split(":")
        if len(parts) != 4:
            raise ValueError(f"linear grid spec must be lin:start:stop:n, got {spec!r}")
        start, stop, n = float(parts[1]), float(parts[2]), int(parts[3])
        if n < 2:
            raise ValueError(f"linear grid needs at least 2 points, got {n}")
        return [start + k * (stop - start) / (n - 1) for k in range(n)]
    return [float(piece) for piece in spec.split(",")]


def _resolve_template(args) -> search_mod.SequenceTemplate:
    name = args.sequence
    if name == "single-pulse":
        return search_mod.single_pulse_template()
    if name == "two-pulse":
        return search_mod.two_pulse_template(args.phi1, args.beta2)
    if name == "selective-delay":
        return search_mod.selective_delay_template(args.omega_a)
    return search_mod.SequenceTemplate.from_json(Path(name).read_text(encoding="utf-8"))


# --- classify ---------------------------------------------------------------


def _ternary_table(canonical: int) -> list[list[int]]:
    return [list(row) for row in decode(canonical).rows()]


def _binary_table(canonical: int) -> list[list[int]]:
    return [list(row) for row in pc.binary_grid(canonical)]


def _classify_report(radix: int) -> dict:
    if radix == 3:
        classes = npn.classify_all()
        pc_classes = [
            {
                "signature": [list(c.signature.first), list(c.signature.second)],
                "member_count": c.size,
                "npn_canonicals": list(c.npn_canonicals),
                "single_npn": c.single_npn,
            }
            for c in pc.pc_classify_all()
        ]
        table_of = _ternary_table
        functions = NUM_FUNCTIONS
        # every NPN class must land in exactly one PC class
        pc_matches = sum(len(c["npn_canonicals"]) for c in pc_classes) == len(classes)
        expected_classes = 84
    else:
        classes = npn.classify_binary()
        report = pc.pc_binary_check()
        canon = npn.canonical_map(2)
        pc_classes = [
            {
                "signature": [list(sig.first), list(sig.second)],
                "member_count": len(members),
                "members": list(members),
                "npn_canonicals": sorted({int(canon[i]) for i in members}),
                "single_npn": len({int(canon[i]) for i in members}) == 1,
            }
            for sig, members in report.pc_classes
        ]
        table_of = _binary_table
        functions = 16
        pc_matches = report.matches
        expected_classes = 4

    burnside = npn.burnside_count(radix)
    total = sum(c.size for c in classes)
    checks_pass = (
        len(classes) == expected_classes
        and total == functions
        and burnside == len(classes)
        and pc_matches
    )
    return {
        "radix": radix,
        "function_count": functions,
        "npn_class_count": len(classes),
        "burnside_count": burnside,
        "pc_class_count": len(pc_classes),
        "pc_consistent": pc_matches,
        "self_check": "pass" if checks_pass else "fail",
        "npn_classes": [
            {"canonical": c.canonical, "size": c.size, "table": table_of(c.canonical)}
            for c in classes
        ],
        "pc_classes": pc_classes,
    }


def _classify_text(report: dict) -> str:
    lines = [
        f"radix: {report['radix']}",
        f"functions: {report['function_count']}",
        f"npn classes: {report['npn_class_count']}",
        f"burnside count: {report['burnside_count']}",
        f"pc classes: {report['pc_class_count']}",
        f"self-check: {report['self_check'].upper()}",
        "",
        "canonical  size  table rows",
    ]
    for c in report["npn_classes"]:
        rows = " | ".join(" ".join(f"{v:>2d}" for v in row) for row in c["table"])
        lines.append(f"{c['canonical']:>9d}  {c['size']:>4d}  {rows}")
    lines.append("")
    lines.append("pc signature        members  kind     npn classes")
    for c in report["pc_classes"]:
        sig = ",".join(map(str, c["signature"][0])) + "|" + ",".join(map(str, c["signature"][1]))
        spanned = c.get("npn_canonicals", c.get("members", []))
        kind = "single" if len(spanned) == 1 else "overlap"
        lines.append(f"{sig:<18}  {c['member_count']:>7d}  {kind:<7}  {' '.join(map(str, spanned))}")
    return "\n".join(lines) + "\n"


def _classify_csv(report: dict) -> str:
    lines = ["key,value"]
    for key in (
        "radix",
        "function_count",
        "npn_class_count",
        "burnside_count",
        "pc_class_count",
        "self_check",
    ):
        lines.append(f"{key},{report[key]}")
    lines.append("")
    lines.append("canonical,size,cells")
    for c in report["npn_classes"]:
        cells = ";".join(str(v) for row in c["table"] for v in row)
        lines.append(f"{c['canonical']},{c['size']},{cells}")
    lines.append("")
    lines.append("signature_first,signature_second,member_count,kind,npn_canonicals")
    for c in report["pc_classes"]:
        first = ";".join(map(str, c["signature"][0]))
        second = ";".join(map(str, c["signature"][1]))
        spanned = c.get("npn_canonicals", c.get("members", []))
        kind = "single" if len(spanned) == 1 else "overlap"
        lines.append(f"{first},{second},{c['member_count']},{kind},{';'.join(map(str, spanned))}")
    return "\n".join(lines) + "\n"


def cmd_classify(args) -> int:
    report = _classify_report(args.radix)
    if args.format == "json":
        text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    elif args.format == "csv":
        text = _classify_csv(report)
    else:
        text = _classify_text(report)
    _emit(text, args.out)
    return 0 if report["self_check"] == "pass" else 1


# --- simulate ----------------------------------------------------------------


def _grid_csv(grid_a: list[float], grid_b: list[float], values: list[list[float]]) -> str:
    lines = ["a\\b," + ",".join(_fmt(b) for b in grid_b)]
    for a, row in zip(grid_a, values):
        lines.append(_fmt(a) + "," + ",".join(_fmt(x) for x in row))
    return "\n".join(lines) + "\n"


def cmd_simulate(args) -> int:
    template = _resolve_template(args)
    grid_a = _parse_grid(args.grid_a)
    grid_b = _parse_grid(args.grid_b)
    values = [[template.run(a, b) for b in grid_b] for a in grid_a]
    if args.format == "json":
        doc = {"grid_a": grid_a, "grid_b": grid_b, "values": values}
        text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    elif args.format == "table":
        rows = [" ".join(f"{x:>12.6f}" for x in row) for row in values]
        text = "\n".join(rows) + "\n"
    else:
        text = _grid_csv(grid_a, grid_b, values)
    _emit(text, args.out)
    return 0


# --- search ------------------------------------------------------------------


def _resolve_target(spec: str) -> int:
    if spec == "multiplication":
        return encode(multiplication())
    return int(spec)


def cmd_search(args) -> int:
    template = _resolve_template(args)
    grid_a = _parse_grid(args.grid_a)
    grid_b = _parse_grid(args.grid_b)
    quantizer = search_mod.Quantizer(epsilon=args.epsilon)

    if args.target == "all":
        counts = search_mod.achievable_classes(template, grid_a, grid_b, quantizer)
        rows = [
            {
                "canonical": c.canonical,
                "size": c.size,
                "achievable": c.canonical in counts,
                "tables": counts.get(c.canonical, 0),
            }
            for c in npn.classify_all()
        ]
        if args.format == "json":
            text = json.dumps(rows, sort_keys=True, indent=2) + "\n"
        else:
            lines = ["canonical,size,achievable,tables"]
            for r in rows:
                lines.append(f"{r['canonical']},{r['size']},{str(r['achievable']).lower()},{r['tables']}")
            text = "\n".join(lines) + "\n"
        _emit(text, args.out)
        return 0

    target = _resolve_target(args.target)
    hits = search_mod.search(template, grid_a, grid_b, quantizer, targets={target})
    if args.format == "json":
        doc = [
            {
                "a_values": list(h.a_values),
                "b_values": list(h.b_values),
                "table_index": h.index,
                "canonical": h.npn_class.canonical,
                "class_size": h.npn_class.size,
            }
            for h in hits
        ]
        text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    else:
        lines = ["a1,a2,a3,b1,b2,b3,table_index,canonical,class_size"]
        for h in hits:
            values = [_fmt(v) for v in (*h.a_values, *h.b_values)]
            lines.append(
                ",".join(values + [str(h.index), str(h.npn_class.canonical), str(h.npn_class.size)])
            )
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0


# --- complex -----------------------------------------------------------------


def _phase_distance(t1: float, t2: float) -> float:
    d = abs(t1 - t2) % (2 * math.pi)
    return min(d, 2 * math.pi - d)


def cmd_complex(args) -> int:
    params = complexlogic.EncodingParams(t1=args.t1, omega_off=args.omega_off, alpha=args.alpha)

    if args.action == "truth":
        value = complexlogic.ptruth(args.values[0])
        if args.format == "json":
            text = json.dumps({"theta": args.values[0], "ptruth": value}, sort_keys=True) + "\n"
        else:
            text = f"ptruth({_fmt(args.values[0])}) = {_fmt(value)}\n"
        _emit(text, args.out)
        return 0

    r1, t1, r2, t2 = args.values
    z1 = complexlogic.ComplexSample(r1, t1)
    z2 = complexlogic.ComplexSample(r2, t2)
    logic = complexlogic.complex_multiply_via_logic(z1, z2)
    cartesian = complexlogic.ComplexSample.from_complex(z1.to_complex() * z2.to_complex())

    rows = []
    for name, z in (("z1", z1), ("z2", z2), ("product", logic)):
        recovered = complexlogic.encode_decode_roundtrip(z, params)
        rows.append(
            {
                "operand": name,
                "r": z.r,
                "theta": z.theta,
                "recovered_r": recovered.r,
                "recovered_theta": recovered.theta,
                "err_r": abs(recovered.r - z.r),
                "err_theta": _phase_distance(recovered.theta, z.theta) if z.r > 0 else 0.0,
            }
        )

    if args.format == "json":
        doc = {
            "logic_product": {"r": logic.r, "theta": logic.theta},
            "cartesian_product": {"r": cartesian.r, "theta": cartesian.theta},
            "magnitude_deviation": abs(logic.r - cartesian.r),
            "phase_deviation": _phase_distance(logic.theta, cartesian.theta),
            "roundtrips": rows,
        }
        text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    else:
        lines = [
            f"logic product (mand/pxnor): r={_fmt(logic.r)} theta={_fmt(logic.theta)}",
            f"cartesian product:          r={_fmt(cartesian.r)} theta={_fmt(cartesian.theta)}",
            f"deviation: dr={_fmt(abs(logic.r - cartesian.r))}"
            f" dtheta={_fmt(_phase_distance(logic.theta, cartesian.theta))}",
            "",
            "operand,r,theta,recovered_r,recovered_theta,err_r,err_theta",
        ]
        for row in rows:
            lines.append(
                ",".join(
                    [row["operand"]]
                    + [
                        _fmt(row[k])
                        for k in ("r", "theta", "recovered_r", "recovered_theta", "err_r", "err_theta")
                    ]
                )
            )
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0


# --- wiring ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spinlogic")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="equivalence class and PC reports")
    p.add_argument("--radix", type=int, choices=(2, 3), default=3)
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.add_argument("--out", default=None, help="output path (default stdout)")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("simulate", help="readout grid for a sequence template")
    p.add_argument(
        "--sequence",
        required=True,
        help="single-pulse, two-pulse, selective-delay, or a JSON template path",
    )
    p.add_argument("--grid-a", required=True, help="comma-separated radians or lin:start:stop:n")
    p.add_argument("--grid-b", required=True)
    p.add_argument("--phi1", type=float, default=3 * math.pi / 2, help="two-pulse fixed phase")
    p.add_argument("--beta2", type=float, default=math.pi / 2, help="two-pulse fixed flip angle")
    p.add_argument("--omega-a", type=float, default=math.pi, help="selective-delay peak offset")
    p.add_argument("--format", choices=("csv", "json", "table"), default="csv")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("search", help="triple search for target logic classes")
    p.add_argument("--sequence", required=True)
    p.add_argument("--grid-a", required=True)
    p.add_argument("--grid-b", required=True)
    p.add_argument("--target", required=True, help="multiplication, a function index, or all")
    p.add_argument("--epsilon", type=float, default=0.25)
    p.add_argument("--phi1", type=float, default=3 * math.pi / 2)
    p.add_argument("--beta2", type=float, default=math.pi / 2)
    p.add_argument("--omega-a", type=float, default=math.pi)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("complex", help="complex-logic product and NMR roundtrip")
    p.add_argument("action", choices=("mul", "truth"))
    p.add_argument("values", type=float, nargs="+", help="mul: r1 theta1 r2 theta2; truth: theta")
    p.add_argument("--alpha", type=float, default=2.0)
    p.add_argument("--t1", type=float, default=1.0)
    p.add_argument("--omega-off", type=float, default=2 * math.pi)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_complex)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports its own usage errors
        return int(exc.code or 0)
    if args.command == "complex":
        expected = 4 if args.action == "mul" else 1
        if len(args.values) != expected:
            print(f"error: complex {args.action} takes {expected} value(s)", file=sys.stderr)
            return 2
    try:
        return args.func(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
