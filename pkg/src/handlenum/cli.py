"""Command line front end.

Exit status is 0 on success, 1 when a computation is refused (a search
cap, a failed check) and 2 on bad input.
"""

import argparse
import json
import sys

from .diagram import Diagram, DiagramError
from .families import (FamilyError, RationalKnot, pretzel_classify, pretzel_diagram,
                       pretzel_normalize, rational_classify, rational_diagram, rational_spine,
                       pretzel_spine)
from .free_group import SearchCapExceeded
from .handle_search import decide, power_of_primitive_check
from .oracle import CapExceeded, euclid_check, minimize_agreement, roundtrip_check
from .torus import TorusError, build_diagram, euclid_slide, stage_diagram

USER_DIAGRAM = "diagram is not from a known family: arc classes are taken to be the face pairs of this diagram"


class InputError(Exception):
    pass


def _write(path, text):
    try:
        with open(path, "w") as fh:
            fh.write(text)
    except OSError as exc:
        raise InputError("cannot write %s: %s" % (path, exc))


def _emit_report(args, out, title, spine, report, diagram):
    if args.export_diagram:
        _write(args.export_diagram, diagram.to_text())
    if args.json:
        data = report.to_dict()
        data["knot"] = title
        data["spine"] = [str(w) for w in spine]
        out.write(json.dumps(data, indent=2, sort_keys=True) + "\n")
        return
    out.write("%s %s\n" % (title, report.summary()))
    for i, w in enumerate(spine, start=1):
        out.write("  a%d = %s\n" % (i, w))
    if report.witness and report.witness.get("arc"):
        arc = report.witness["arc"]
        out.write("  witness arc faces %s length %d\n" % (tuple(arc["faces"]), arc["length"]))
    elif report.witness:
        out.write("  witness basis: %s\n" % ", ".join(report.witness["basis"]))
    if report.arcs_tested:
        ok = sum(1 for a in report.per_arc if a["ok"])
        out.write("  arcs tested %d, succeeded %d\n" % (report.arcs_tested, ok))
    if args.per_arc:
        for a in report.per_arc:
            t = a["terminal"]
            out.write("  arc %d faces %s length %d %s %s degrees %s\n" % (
                a["arc"]["id"], tuple(a["arc"]["faces"]), a["arc"]["length"],
                "ok" if a["ok"] else "fail", a["reason"] or "-",
                ",".join(str(x) for x in t["simple_degrees"])))
    for a in report.assumptions:
        out.write("  assuming: %s\n" % a)


def cmd_rational(args, out):
    if not args.terms:
        raise InputError("give the continued fraction terms 2b1 2b2 ...")
    k = RationalKnot.from_fraction(args.terms)
    report = rational_classify(k)
    if args.per_arc or args.search:
        report = decide(rational_diagram(k), report.assumptions, 1 if k.connected else 2, search=True)
    _emit_report(args, out, str(k), rational_spine(k), report, rational_diagram(k))
    return 0


def cmd_pretzel(args, out):
    k = pretzel_normalize(args.p, args.q, args.r)
    report = pretzel_classify(k, search=True if args.per_arc else None)
    _emit_report(args, out, str(k), pretzel_spine(k), report, pretzel_diagram(k))
    return 0


def cmd_torus(args, out):
    t = build_diagram(args.p, args.q)
    if args.export_stage is not None:
        text = stage_diagram(t, args.export_stage).to_text()
        if args.output:
            _write(args.output, text)
        else:
            out.write(text)
            return 0
    trace = euclid_slide(t)
    shape = trace.terminal_shape()
    if args.json:
        data = {
            "schema": 1,
            "p": t.p,
            "q": t.q,
            "kappa": list(trace.kappas),
            "beta": list(t.cf.beta),
            "slides": trace.lines(),
            "stages": [{"stage": s.stage, "pair": list(s.pair), "match": s.match,
                        "lengths": list(s.lengths)} for s in trace.stages],
            "terminal": shape,
            "terminal_words": [str(w) for w in trace.terminal],
        }
        out.write(json.dumps(data, indent=2, sort_keys=True) + "\n")
        return 0
    out.write("torus (%d,%d) beta (%d,%d)\n" % ((t.p, t.q) + t.cf.beta))
    out.write("kappa %s\n" % " ".join(str(k) for k in trace.kappas))
    if args.trace:
        for line in trace.lines():
            out.write(line + "\n")
        for s in trace.stages:
            out.write("stage %d matches (%d,%d) diagram: %s\n" % (s.stage, s.pair[0], s.pair[1], s.match))
    out.write("terminal alpha:%d beta:%d\n" % (shape["alpha"], shape["beta"]))
    return 0


def cmd_analyze(args, out):
    try:
        with open(args.file) as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError("cannot read %s: %s" % (args.file, exc))
    d = Diagram.from_text(text)
    search = True if args.search else (False if args.no_search else None)
    report = decide(d, [USER_DIAGRAM], components=args.components, search=search)
    if args.export_graph:
        _write(args.export_graph, d.graph().export())
    args.export_diagram = None
    words = d.based_words()
    _emit_report(args, out, args.file, words, report, d)
    if not args.json and len(words) == 2:
        check = power_of_primitive_check(words)
        for row in check["curves"]:
            if row["flagged"]:
                out.write("  a%d is a proper power of a primitive element (disk condition unchecked)\n"
                          % (row["curve"] + 1))
    return 0


def _family_diagram(spec):
    if not spec:
        raise InputError("roundtrip needs a family: pretzel p q r or rational 2b1 ...")
    kind, nums = spec[0], spec[1:]
    try:
        vals = [int(x) for x in nums]
    except ValueError:
        raise InputError("family parameters must be integers")
    if kind == "pretzel" and len(vals) == 3:
        return pretzel_diagram(pretzel_normalize(*vals))
    if kind == "rational" and vals:
        return rational_diagram(RationalKnot.from_fraction(vals))
    raise InputError("unknown family %r" % " ".join(spec))


def cmd_oracle(args, out):
    ok = True
    ran = False
    if args.minimize:
        ran = True
        agree, fails = minimize_agreement(args.rank, args.len, args.seed, args.samples)
        out.write("minimize rank %d len %d seed %d: %d/%d agree\n"
                  % (args.rank, args.len, args.seed, agree, args.samples))
        for ws, g, e in fails:
            out.write("  disagree %s greedy %d exhaustive %d\n" % (" , ".join(ws), g, e))
        ok &= not fails
    if args.euclid:
        ran = True
        passed, fails = euclid_check(args.max_p)
        out.write("euclid p<=%d: %d/%d pass\n" % (args.max_p, passed, passed + len(fails)))
        for pq, msg in fails:
            out.write("  fail %s: %s\n" % (pq, msg))
        ok &= not fails
    if args.roundtrip:
        ran = True
        passed, fails = roundtrip_check(_family_diagram(args.roundtrip))
        out.write("roundtrip %s: %d/%d face pairs pass\n"
                  % (" ".join(args.roundtrip), passed, passed + len(fails)))
        ok &= not fails
    if not ran:
        raise InputError("choose --minimize, --euclid or --roundtrip")
    return 0 if ok else 1


def build_parser():
    ap = argparse.ArgumentParser(prog="handlenum", description="Handle numbers from Whitehead diagrams.")
    sub = ap.add_subparsers(dest="command", required=True)

    def report_flags(p):
        p.add_argument("--json", action="store_true", help="structured report")
        p.add_argument("--per-arc", action="store_true", help="run and list every arc verdict")
        p.add_argument("--export-diagram", metavar="FILE")

    p = sub.add_parser("rational", help="rational knot [2b1,...,2bg]")
    p.add_argument("terms", type=int, nargs="*")
    p.add_argument("--search", action="store_true", help="also run the arc search")
    report_flags(p)
    p.set_defaults(func=cmd_rational)

    p = sub.add_parser("pretzel", help="pretzel knot P(p,q,r)")
    for name in "pqr":
        p.add_argument(name, type=int)
    report_flags(p)
    p.set_defaults(func=cmd_pretzel)

    p = sub.add_parser("torus-slide", help="Euclidean slides on the (p,q) torus diagram")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--trace", action="store_true")
    p.add_argument("--json", action="store_true")
    p.add_argument("--export-stage", type=int, metavar="I")
    p.add_argument("--output", metavar="FILE")
    p.set_defaults(func=cmd_torus)

    p = sub.add_parser("analyze", help="decide a diagram file")
    p.add_argument("file")
    p.add_argument("--components", type=int, default=1)
    p.add_argument("--search", action="store_true")
    p.add_argument("--no-search", action="store_true")
    p.add_argument("--export-graph", metavar="FILE")
    p.add_argument("--json", action="store_true")
    p.add_argument("--per-arc", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("oracle", help="brute force cross-checks")
    p.add_argument("--minimize", action="store_true")
    p.add_argument("--rank", type=int, default=2)
    p.add_argument("--len", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--euclid", action="store_true")
    p.add_argument("--max-p", type=int, default=30)
    p.add_argument("--roundtrip", nargs="+", metavar="FAMILY")
    p.set_defaults(func=cmd_oracle)
    return ap


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    if getattr(args, "samples", 1) < 1:
        print("handlenum: samples must be positive", file=sys.stderr)
        return 2
    try:
        return args.func(args, out)
    except (InputError, FamilyError, TorusError, DiagramError, ValueError) as exc:
        print("handlenum: %s" % exc, file=sys.stderr)
        return 2
    except (CapExceeded, SearchCapExceeded, AssertionError, RuntimeError) as exc:
        print("handlenum: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
