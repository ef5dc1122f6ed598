"""Command-line frontend.

Exit codes: 0 when the command completes with nothing to flag, 1 when a sweep
or theorem check produced a counterexample/finding, 2 on invalid input.
Structured output (--format json) is byte-stable for identical inputs: fixed
key order, canonical subset order, and no timing fields.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import report as report_mod
from .classes import (
    RALPHA_ANALOGY,
    RALPHA_DEFNS,
    ClassLabel,
    classify,
    family_of,
    label_from_name,
)
from .core import FiniteSpace, PointSet, TopologyError
from .documents import parse_map, parse_space, subset_from_spec
from .maps import (
    NBHD_ALL,
    NEIGHBORHOOD_MODES,
    Verdict,
    check_closed_image_preservation,
    check_open_image_preservation,
    profile,
)
from .search import (
    CLAIMS,
    SweepOptions,
    enumerate_topologies,
    sweep_claim,
)
from .separation import (
    is_almost_normal,
    is_almost_sc_star_normal,
    is_normal,
    normality_characterizations,
    separating_witness,
)
from .classes import regular_closed_masks

_SWEEP_DEFAULT_POINTS = {"C9": 3, "C10": 3, "C11": 3}


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _space_obj(space: FiniteSpace, labels=None) -> dict:
    obj: dict[str, object] = {"points": space.size}
    if labels is not None:
        obj["labels"] = list(labels)
    obj["opens"] = [list(ps.members) for ps in space.open_sets()]
    return obj


def _set_obj(ps: PointSet) -> list[int]:
    return list(ps.members)


def _emit_json(obj: dict) -> None:
    print(json.dumps(obj, indent=2))


def _pair_obj(pair) -> list | None:
    if pair is None:
        return None
    return [_set_obj(pair[0]), _set_obj(pair[1])]


def _witness_obj(w) -> list | None:
    if w is None:
        return None
    return [_set_obj(w.left), _set_obj(w.right)]


def cmd_classify(args) -> int:
    doc = parse_space(_read(args.space))
    subset = subset_from_spec(doc, args.set)
    rep = classify(doc.space, subset, args.ralpha_defn)
    names = [lab.value for lab in rep.sorted_labels()]
    if args.format == "json":
        _emit_json({
            "command": "classify",
            "space": _space_obj(doc.space, doc.labels),
            "subset": _set_obj(subset),
            "labels": names,
        })
    else:
        print(f"space: {doc.space!r}")
        print(f"subset {doc.render_set(subset)}: {', '.join(names)}")
    return 0


def cmd_families(args) -> int:
    doc = parse_space(_read(args.space))
    labels = [label_from_name(args.label)] if args.label else list(ClassLabel)
    fams = {lab.value: family_of(doc.space, lab, args.ralpha_defn)
            for lab in labels}
    if args.format == "json":
        _emit_json({
            "command": "families",
            "space": _space_obj(doc.space, doc.labels),
            "families": {
                name: [_set_obj(ps) for ps in fam] for name, fam in fams.items()
            },
        })
    else:
        print(f"space: {doc.space!r}")
        for name, fam in fams.items():
            rendered = ", ".join(doc.render_set(ps) for ps in fam)
            print(f"{name} ({len(fam)}): {rendered}")
    return 0


def _nontrivial_pairs(space: FiniteSpace):
    rclosed = regular_closed_masks(space)
    for a in space.closed_masks:
        if not a:
            continue
        for b in rclosed:
            if not b or a & b:
                continue
            yield PointSet(a, space.size), PointSet(b, space.size)


def cmd_normality(args) -> int:
    doc = parse_space(_read(args.space))
    space = doc.space
    checks = {
        "normal": is_normal(space),
        "almost_normal": is_almost_normal(space),
        "almost_sc_star_normal": is_almost_sc_star_normal(space),
    }
    pairs = []
    for a, b in _nontrivial_pairs(space):
        pairs.append({
            "closed": a,
            "regular_closed": b,
            "open": separating_witness(space, a, b, ClassLabel.OPEN),
            "sc": separating_witness(space, a, b, ClassLabel.SC_STAR_OPEN),
        })
    requested = None
    if args.pair:
        left_spec, sep, right_spec = args.pair.partition("/")
        if not sep:
            raise TopologyError('pair must look like "j/i" (two specs with "/")')
        a = subset_from_spec(doc, left_spec)
        b = subset_from_spec(doc, right_spec)
        requested = {
            "pair": (a, b),
            "open": separating_witness(space, a, b, ClassLabel.OPEN),
            "sc": separating_witness(space, a, b, ClassLabel.SC_STAR_OPEN),
        }
    if args.format == "json":
        obj: dict[str, object] = {
            "command": "normality",
            "space": _space_obj(space, doc.labels),
        }
        for name, check in checks.items():
            obj[name] = check.holds
            obj[f"{name}_failing_pair"] = _pair_obj(check.failing_pair)
        obj["pairs"] = [
            {
                "closed": _set_obj(p["closed"]),
                "regular_closed": _set_obj(p["regular_closed"]),
                "open_witness": _witness_obj(p["open"]),
                "sc_star_open_witness": _witness_obj(p["sc"]),
            }
            for p in pairs
        ]
        if requested is not None:
            obj["requested_pair"] = {
                "pair": [_set_obj(requested["pair"][0]),
                         _set_obj(requested["pair"][1])],
                "open_witness": _witness_obj(requested["open"]),
                "sc_star_open_witness": _witness_obj(requested["sc"]),
            }
        _emit_json(obj)
    else:
        print(f"space: {space!r}")
        for name, check in checks.items():
            line = f"{name.replace('_', ' ')}: {'yes' if check.holds else 'no'}"
            if check.failing_pair:
                a, b = check.failing_pair
                line += (f"  (failing pair {doc.render_set(a)}, "
                         f"{doc.render_set(b)})")
            print(line)
        for p in pairs:
            rendered = (f"pair ({doc.render_set(p['closed'])}, "
                        f"{doc.render_set(p['regular_closed'])}):")
            for key, title in (("open", "open"), ("sc", "SC*-open")):
                w = p[key]
                if w is None:
                    rendered += f" {title} witness: none;"
                else:
                    rendered += (f" {title} witness U={doc.render_set(w.left)} "
                                 f"V={doc.render_set(w.right)};")
            print(rendered)
        if requested is not None:
            a, b = requested["pair"]
            print(f"requested pair ({doc.render_set(a)}, {doc.render_set(b)}):")
            for key, title in (("open", "open"), ("sc", "SC*-open")):
                w = requested[key]
                if w is None:
                    print(f"  {title} witness: none")
                else:
                    print(f"  {title} witness U={doc.render_set(w.left)} "
                          f"V={doc.render_set(w.right)}")
    return 0


def cmd_theorem24(args) -> int:
    doc = parse_space(_read(args.space))
    values = normality_characterizations(doc.space, args.strict_paper)
    agree = len(set(values)) == 1
    if args.format == "json":
        _emit_json({
            "command": "theorem24",
            "space": _space_obj(doc.space, doc.labels),
            "strict_paper": args.strict_paper,
            "conditions": list(values),
            "agree": agree,
        })
    else:
        print(f"space: {doc.space!r}")
        for i, v in enumerate(values, start=1):
            print(f"condition {i}: {'holds' if v else 'fails'}")
        print(f"agreement: {'yes' if agree else 'NO - finding'}")
    return 0 if agree else 1


def cmd_mapcheck(args) -> int:
    f, dom_doc, cod_doc = parse_map(_read(args.map))
    prof = profile(f, args.neighborhoods)
    open_side = check_open_image_preservation(f, args.neighborhoods)
    closed_side = check_closed_image_preservation(f)
    dom_ok = is_almost_sc_star_normal(f.domain).holds
    cod_ok = is_almost_sc_star_normal(f.codomain).holds
    if args.format == "json":
        _emit_json({
            "command": "mapcheck",
            "domain": _space_obj(f.domain, dom_doc.labels),
            "codomain": _space_obj(f.codomain, cod_doc.labels),
            "assignment": list(f.assignment),
            "profile": {
                "surjective": prof.surjective,
                "continuous": prof.continuous,
                "rc_continuous": prof.rc_continuous,
                "t_sc_star_open": prof.t_sc_star_open,
                "t_sc_star_closed": prof.t_sc_star_closed,
                "almost_sc_star_irresolute": prof.almost_sc_star_irresolute,
            },
            "domain_almost_sc_star_normal": dom_ok,
            "codomain_almost_sc_star_normal": cod_ok,
            "open_image_preservation": open_side.value,
            "closed_image_preservation": closed_side.value,
        })
    else:
        print(f"domain: {f.domain!r}")
        print(f"codomain: {f.codomain!r}")
        print("assignment: " + ",".join(
            f"{dom_doc.labels[p] if dom_doc.labels else p}->"
            f"{cod_doc.labels[q] if cod_doc.labels else q}"
            for p, q in enumerate(f.assignment)))
        for name, val in (
            ("surjective", prof.surjective),
            ("continuous", prof.continuous),
            ("rc-continuous", prof.rc_continuous),
            ("T-SC*-open", prof.t_sc_star_open),
            ("T-SC*-closed", prof.t_sc_star_closed),
            ("almost SC*-irresolute", prof.almost_sc_star_irresolute),
        ):
            print(f"{name}: {'yes' if val else 'no'}")
        print(f"domain almost SC*-normal: {'yes' if dom_ok else 'no'}")
        print(f"codomain almost SC*-normal: {'yes' if cod_ok else 'no'}")
        print(f"open-image preservation: {open_side.value}")
        print(f"closed-image preservation: {closed_side.value}")
    bad = Verdict.COUNTEREXAMPLE
    return 1 if open_side is bad or closed_side is bad else 0


def _counterexample_obj(report) -> dict:
    obj: dict[str, object] = {
        "claim": report.claim_id,
        "space": _space_obj(report.space),
        "subsets": [_set_obj(ps) for ps in report.subsets],
    }
    if report.codomain is not None:
        obj["codomain"] = _space_obj(report.codomain)
        obj["assignment"] = list(report.assignment)
    obj["detail"] = report.detail
    return obj


def cmd_sweep(args) -> int:
    claim = CLAIMS.get(args.claim)
    max_points = args.max_points
    if max_points is None:
        max_points = _SWEEP_DEFAULT_POINTS.get(args.claim, 4)
    options = SweepOptions(
        ralpha_defn=args.ralpha_defn,
        strict_paper=args.strict_paper,
        neighborhoods=args.neighborhoods,
    )
    result = sweep_claim(args.claim, max_points=max_points, cap=args.cap,
                         method=args.method, options=options)
    if args.format == "json":
        _emit_json({
            "command": "sweep",
            "claim": result.claim_id,
            "kind": claim.kind,
            "statement": claim.statement,
            "expectation": claim.expectation,
            "max_points": result.max_points,
            "method": args.method,
            "options": {
                "ralpha_defn": options.ralpha_defn,
                "strict_paper": options.strict_paper,
                "neighborhoods": options.neighborhoods,
            },
            "spaces_examined": result.spaces_examined,
            "instances_examined": result.instances_examined,
            "total_counterexamples": result.total_counterexamples,
            "notes": result.notes_dict(),
            "counterexamples": [
                _counterexample_obj(r) for r in result.counterexamples
            ],
        })
    else:
        print(f"claim {result.claim_id}: {claim.statement}")
        print(f"expectation: {claim.expectation}")
        print(f"spaces examined: {result.spaces_examined} "
              f"(sizes 1..{result.max_points}, method {args.method})")
        print(f"instances examined: {result.instances_examined}")
        print(f"counterexamples: {result.total_counterexamples}")
        for key, val in result.notes:
            print(f"note {key}: {val}")
        for r in result.counterexamples:
            print(r.render())
        print(f"elapsed: {result.elapsed:.2f}s")
    return 1 if result.total_counterexamples else 0


def cmd_enumerate(args) -> int:
    spaces = enumerate_topologies(args.points, args.method)
    if args.format == "json":
        obj: dict[str, object] = {
            "command": "enumerate",
            "points": args.points,
            "method": args.method,
            "count": len(spaces),
        }
        if not args.count_only:
            obj["spaces"] = [
                [list(ps.members) for ps in s.open_sets()] for s in spaces
            ]
        _emit_json(obj)
    else:
        print(f"{len(spaces)} topologies on {args.points} points "
              f"({args.method} method)")
        if not args.count_only:
            for s in spaces:
                print(f"  {s!r}")
    return 0


def cmd_report(args) -> int:
    options = SweepOptions(
        ralpha_defn=args.ralpha_defn,
        strict_paper=args.strict_paper,
        neighborhoods=args.neighborhoods,
    )
    outcome = report_mod.run_report(
        args.out,
        max_points=args.max_points,
        theorem_points=args.theorem_points,
        map_points=args.map_points,
        method=args.method,
        options=options,
    )
    if args.format == "json":
        _emit_json({
            "command": "report",
            "out": args.out,
            "claims_csv": outcome.claims_csv,
            "separation_csv": outcome.separation_csv,
            "figures": list(outcome.figures),
            "gate_ok": outcome.gate_ok,
            "findings": [
                {"claim": r.claim_id, "verdict": v}
                for r, v in zip(outcome.results, outcome.verdicts)
                if v not in ("ok", "found")
            ],
        })
    else:
        print(f"wrote {outcome.claims_csv}")
        print(f"wrote {outcome.separation_csv}")
        for fig in outcome.figures:
            print(f"wrote {fig}")
        for r, v in zip(outcome.results, outcome.verdicts):
            print(f"claim {r.claim_id}: {v} "
                  f"({r.total_counterexamples} counterexamples, "
                  f"{r.instances_examined} instances)")
        print(f"gate: {'ok' if outcome.gate_ok else 'FINDINGS PRESENT'}")
    return 0 if outcome.gate_ok else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fintopo",
        description=(
            "Verify generalized open/closed set classes, separation "
            "properties, and preservation statements on finite topological "
            "spaces."
        ),
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text",
                     help="output format (default text)")

    defs = argparse.ArgumentParser(add_help=False)
    defs.add_argument("--ralpha-defn", choices=RALPHA_DEFNS,
                      default=RALPHA_ANALOGY,
                      help="which reading of regularly-alpha-open to use")
    defs.add_argument("--strict-paper", action="store_true",
                      help="evaluate the printed sandwich/neighborhood "
                           "variants instead of the proof-shaped ones")
    defs.add_argument("--neighborhoods", choices=NEIGHBORHOOD_MODES,
                      default=NBHD_ALL,
                      help="quantifier range for SC*-neighborhoods")

    p = sub.add_parser("classify", parents=[fmt, defs],
                       help="list every class label a subset satisfies")
    p.add_argument("space", help="space document file")
    p.add_argument("--set", required=True,
                   help='subset spec, e.g. "j,l" or "1,3" (blank = empty set)')
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("families", parents=[fmt, defs],
                       help="list the subsets satisfying each class label")
    p.add_argument("space", help="space document file")
    p.add_argument("--label", choices=[lab.value for lab in ClassLabel],
                   help="restrict to a single class label")
    p.set_defaults(func=cmd_families)

    p = sub.add_parser("normality", parents=[fmt],
                       help="decide normal / almost normal / almost SC*-normal")
    p.add_argument("space", help="space document file")
    p.add_argument("--pair",
                   help='separation pair to probe, e.g. "j/i" or "1/0"')
    p.set_defaults(func=cmd_normality)

    p = sub.add_parser("theorem24", parents=[fmt],
                       help="evaluate the six almost-SC*-normality "
                            "characterizations independently")
    p.add_argument("space", help="space document file")
    p.add_argument("--strict-paper", action="store_true",
                   help="use the printed sandwich chain in conditions 4 and 5")
    p.set_defaults(func=cmd_theorem24)

    p = sub.add_parser("mapcheck", parents=[fmt],
                       help="profile a map and check both preservation "
                            "statements")
    p.add_argument("map", help="map document file")
    p.add_argument("--neighborhoods", choices=NEIGHBORHOOD_MODES,
                   default=NBHD_ALL,
                   help="quantifier range for SC*-neighborhoods")
    p.set_defaults(func=cmd_mapcheck)

    p = sub.add_parser("sweep", parents=[fmt, defs],
                       help="quantify a registered claim over all small spaces")
    p.add_argument("claim", choices=sorted(CLAIMS),
                   help="claim id from the registry")
    p.add_argument("--max-points", type=int, default=None,
                   help="largest ground size (default 4; 3 for C9/C10/C11)")
    p.add_argument("--cap", type=int, default=10,
                   help="max counterexample reports to retain (default 10)")
    p.add_argument("--method", choices=("brute", "preorder"),
                   default="preorder", help="enumeration method")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("enumerate", parents=[fmt],
                       help="enumerate all labeled topologies on n points")
    p.add_argument("--points", type=int, required=True)
    p.add_argument("--method", choices=("brute", "preorder"),
                   default="preorder")
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("report", parents=[fmt, defs],
                       help="run every claim, write CSV tables and figures")
    p.add_argument("--out", default="report", help="output directory")
    p.add_argument("--max-points", type=int, default=4,
                   help="ground-size bound for subset/space claims")
    p.add_argument("--theorem-points", type=int, default=3,
                   help="ground-size bound for the six-way agreement claim")
    p.add_argument("--map-points", type=int, default=3,
                   help="ground-size bound for map-preservation claims")
    p.add_argument("--method", choices=("brute", "preorder"),
                   default="preorder")
    p.set_defaults(func=cmd_report)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (TopologyError, OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
