"""Command line interface.

Exit codes: 0 success, 1 a requested property has a counterexample (or a
corpus mismatch), 2 input error, 3 a size guard or unmet hypothesis stopped
the requested computation.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import corpus
from .errors import CapabilityError, InputError
from .homology import Field
from .monomial import colon_ideal, format_monomial
from .parsing import ParsedIdeal, format_ideal, parse_ideal_text
from .relation_graph import dot_export, linear_relation_graph
from .report import SCHEMA, AnalysisConfig, counterexamples, run_analysis, to_json

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_INPUT, EXIT_CAPABILITY = 0, 1, 2, 3
REQUIRABLE = ("polymatroidal", "linear-resolution", "ratliff", "strong-persistence", "persistence")


def read_input(spec: str) -> ParsedIdeal:
    """A path, ``-`` for standard input, or ``corpus:NAME``."""
    if spec.startswith("corpus:"):
        return corpus.load_ideal(spec[len("corpus:"):])
    if spec == "-":
        return parse_ideal_text(sys.stdin.read())
    path = Path(spec)
    if not path.is_file():
        raise InputError(f"cannot read {spec!r}: no such file")
    try:
        text = path.read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise InputError(f"{spec}: not UTF-8 text ({exc.reason})") from None
    return parse_ideal_text(text)


def _config(args) -> AnalysisConfig:
    return AnalysisConfig(max_power=args.max_power, field=Field.parse(args.field))


def _section_lines(name: str, sec: dict) -> list:
    out = []
    if name == "gamma":
        edges = ", ".join(f"{a}-{b}" for a, b in sec["edges"]) or "none"
        out.append(f"relation graph: r = {sec['r']}, s = {sec['s']}, edges {edges}")
        out.append("  components: " + "; ".join("{" + ", ".join(c) + "}" for c in sec["components"]))
        for b in sec["depth_upper_bounds"]:
            out.append(f"  depth S/I^{b['power']} <= {b['bound']} [{b['status']}]")
        w = sec["socle_witness"]
        if w["status"] == "exact":
            ok = "verified" if w["verified_by_membership"] else "NOT verified"
            out.append(f"  socle element of S/I^{w['power']}: {w['monomial']} ({ok})")
        else:
            out.append(f"  spanning-tree socle element: not applicable ({w['reason']})")
    elif name == "spread":
        out.append(f"analytic spread: {sec['value']} [{sec['status']}]; "
                   f"relation graph r - s + 1 = {sec['relation_graph_value']} [{sec['relation_graph_status']}]")
        if "graphic_formula_value" in sec:
            out.append(f"  biconnected-component formula: {sec['graphic_formula_value']}")
        if "transversal" in sec:
            t = sec["transversal"]
            out.append(f"  stripped principal factor: {t['stripped_factor']}; "
                       f"predicted relation graph matches: {t['predicted_gamma_matches']}")
        if "localization_bound" in sec:
            lb = sec["localization_bound"]
            out.append(f"  spread of every localization <= spread: {lb['holds']}")
    elif name == "ass":
        for e in sec["per_power"]:
            out.append(f"Ass(I^{e['power']}): " + " ".join(e["primes"]))
        out.append(f"astab = {_stab(sec['astab'])}")
        if "stable_primes" in sec:
            out.append("stable primes [certified]: " + " ".join(sec["stable_primes"]["primes"]))
    elif name == "depth":
        for e in sec["per_power"]:
            out.append(f"depth S/I^{e['power']} = {e['depth']} over {e['field']} ({e['method']})")
        for e in sec["other_field_values"]:
            out.append(f"  note: over {e['field']} depth S/I^{e['power']} = {e['depth']}")
        if "dstab" in sec:
            out.append(f"dstab = {_stab(sec['dstab'])} over {sec['dstab']['field']}")
        if "linear_resolution" in sec:
            out.append(f"linear resolution over {sec['linear_resolution']['field']}: "
                       f"{sec['linear_resolution']['value']}")
    elif name == "persistence":
        tag = sec["ratliff"]["status"]
        out.append("Ratliff I^(k+1):I = I^k: " + " ".join(
            f"k={e['power']}:{'yes' if e['holds'] else 'NO'}" for e in sec["ratliff"]["values"])
            + f" [{tag}]")
        for key, label in (("strong_persistence", "strong persistence"),
                           ("weak_witness_condition", "weak witness condition")):
            s = sec[key]
            line = f"{label}: {'holds' if s['holds'] else 'FAILS'} [{s['status']}]"
            if "witness" in s:
                w = s["witness"]
                line += f"; witness P = {w['prime']}, k = {w['power']}, u = {w['monomial']}"
            out.append(line)
        out.append("persistence Ass(I^k) in Ass(I^(k+1)): " + " ".join(
            f"k={e['power']}:{'yes' if e['holds'] else 'NO'}" for e in sec["persistence_chain"]["values"])
            + f" [{sec['persistence_chain']['status']}]")
        out.append("socle dimensions: " + " ".join(str(v) for v in sec["socle_dimensions"]["values"]))
    return out


def _stab(s: dict) -> str:
    if s["status"] == "certified":
        return f"{s['value']} [certified: {s['certificate']}]"
    return f"{s['value']} [{s['status']}]"


def render_text(report: dict) -> str:
    ideal = report["ideal"]
    lines = [f"ideal in {ideal['n']} variables with {ideal['generator_count']} generators; "
             f"degree {ideal['equigenerated_degree']}; polymatroidal: {ideal['polymatroidal']}",
             f"field {report['field']}, powers up to {report['horizon']}"]
    for name in ("gamma", "spread", "ass", "depth", "persistence"):
        if name in report and report[name] is not None:
            lines.extend(_section_lines(name, report[name]))
    for w in report["warnings"]:
        lines.append(f"warning ({w['section']}, {w['kind']}): {w['message']}")
    return "\n".join(lines) + "\n"


def _emit(args, report: dict):
    sys.stdout.write(to_json(report) if args.json else render_text(report))


def _write_dot(args, parsed: ParsedIdeal):
    if args.dot:
        G = linear_relation_graph(parsed.ideal)
        Path(args.dot).write_text(dot_export(G, parsed.names), encoding="utf-8")


def _failed_requirements(report: dict, required) -> list:
    failed = []
    for prop in required or ():
        if prop == "polymatroidal" and not report["ideal"]["polymatroidal"]:
            failed.append(prop)
        elif prop == "linear-resolution":
            lr = (report.get("depth") or {}).get("linear_resolution")
            if lr is not None and not lr["value"]:
                failed.append(prop)
        elif prop.replace("-", "_") in counterexamples(report):
            failed.append(prop)
    return failed


def cmd_analyze(args) -> int:
    parsed = read_input(args.input)
    report = run_analysis(parsed, _config(args))
    _write_dot(args, parsed)
    _emit(args, report)
    failed = _failed_requirements(report, args.require)
    if failed:
        print("counterexample to required properties: " + ", ".join(failed), file=sys.stderr)
        return EXIT_COUNTEREXAMPLE
    return EXIT_OK


def _single_section(section: str):
    def run(args) -> int:
        parsed = read_input(args.input)
        config = _config(args)
        config.checks = (section,)
        report = run_analysis(parsed, config)
        if section == "gamma":
            _write_dot(args, parsed)
        _emit(args, report)
        if report.get(section) is None:
            return EXIT_CAPABILITY if any(w["kind"] == "capability" for w in report["warnings"]) else EXIT_INPUT
        if section == "persistence" and counterexamples(report):
            return EXIT_COUNTEREXAMPLE
        return EXIT_OK
    return run


def cmd_colon(args) -> int:
    parsed = read_input(args.input)
    if args.by.startswith("corpus:") or Path(args.by).is_file() or args.by == "-":
        divisor = read_input(args.by)
    else:
        divisor = parse_ideal_text("vars " + " ".join(parsed.names) + "\n" + args.by)
    if divisor.ideal.n != parsed.ideal.n:
        raise InputError(f"divisor lives in {divisor.ideal.n} variables, ideal in {parsed.ideal.n}")
    result = colon_ideal(parsed.ideal, divisor.ideal)
    if args.json:
        payload = {"schema": SCHEMA, "colon": {
            "variables": list(parsed.names),
            "generators": [format_monomial(u, parsed.names) for u in result.generators],
            "generator_count": len(result), "status": "exact"}}
        sys.stdout.write(to_json(payload))
    else:
        sys.stdout.write(format_ideal(result, parsed.names))
    return EXIT_OK


def cmd_corpus(args) -> int:
    if args.list:
        print("\n".join(corpus.names()))
        return EXIT_OK
    results = corpus.corpus_run(args.names or None)
    if args.json:
        sys.stdout.write(json.dumps({"schema": SCHEMA, "corpus": [
            {"name": r.name, "passed": r.passed, "diffs": list(r.diffs)} for r in results]},
            sort_keys=True, indent=2) + "\n")
    else:
        for r in results:
            print(f"{'PASS' if r.passed else 'FAIL'} {r.name}")
            for d in r.diffs:
                print(f"  {d}")
    return EXIT_OK if all(r.passed for r in results) else EXIT_COUNTEREXAMPLE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ideal-persistence",
        description="Associated primes, depth and persistence checks for powers of monomial ideals.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, dot=False):
        p.add_argument("input", help="ideal file, '-' for stdin, or corpus:NAME")
        p.add_argument("--max-power", type=int, metavar="K",
                       help="horizon: analyse powers 1..K (default: analytic spread for "
                            "polymatroidal ideals, else 4)")
        p.add_argument("--field", default="q", metavar="q|fp:P",
                       help="coefficient field for depth and Betti numbers (default q)")
        p.add_argument("--json", action="store_true", help="write the JSON report")
        if dot:
            p.add_argument("--dot", metavar="PATH", help="write the relation graph in DOT format")

    p = sub.add_parser("analyze", help="full report")
    common(p, dot=True)
    p.add_argument("--require", action="append", choices=REQUIRABLE,
                   help="exit with status 1 if this property fails (repeatable)")
    p.set_defaults(func=cmd_analyze)

    for name, help_text, dot in (("ass", "associated primes of powers and astab", False),
                                 ("depth", "depth function and dstab", False),
                                 ("gamma", "linear relation graph, depth bounds, socle element", True),
                                 ("spread", "analytic spread by several routes", False),
                                 ("persistence", "Ratliff, strong persistence and persistence "
                                                 "(status 1 on a counterexample)", False)):
        p = sub.add_parser(name, help=help_text)
        common(p, dot=dot)
        p.set_defaults(func=_single_section(name))

    p = sub.add_parser("colon", help="colon ideal I : J")
    p.add_argument("input", help="ideal file, '-' for stdin, or corpus:NAME")
    p.add_argument("by", help="J as a file, corpus:NAME, or inline generators such as 'x1*x2'")
    p.add_argument("--json", action="store_true", help="write JSON")
    p.set_defaults(func=cmd_colon)

    p = sub.add_parser("corpus", help="check built-in examples against golden values")
    p.add_argument("names", nargs="*", help="examples to run (default: all)")
    p.add_argument("--list", action="store_true", help="list example names")
    p.add_argument("--json", action="store_true", help="write JSON")
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapabilityError as exc:
        print(f"capability limit: {exc}", file=sys.stderr)
        return EXIT_CAPABILITY


if __name__ == "__main__":
    sys.exit(main())
