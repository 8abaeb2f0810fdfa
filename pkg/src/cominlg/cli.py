"""Command-line surface: emit models, verify identities, dump posets, diff goldens.

Exit codes: 0 success, 1 failed check or internal assertion, 2 invalid usage
or datum.  All output orderings are canonical, so runs are byte-identical.
"""
from __future__ import annotations

import argparse
import concurrent.futures
import json
import os
import sys
from pathlib import Path

from . import golden, moves, poset as poset_mod, potential, root_data, shapes, toric
from .potential import PluckerPolynomial
from .root_data import CominusculeDatum


def _datum_from_args(args) -> CominusculeDatum:
    if args.family is None or args.rank is None or args.node is None:
        raise ValueError("--family, --rank and --node are all required")
    return CominusculeDatum(args.family, args.rank, args.node)


def _poly_json(poly: PluckerPolynomial) -> list[dict]:
    poset = poly.poset
    out = []
    for q, coeff, factors in poly.sorted_terms():
        entry = {
            "coeff": coeff,
            "factors": [list(poset.elements(m)) for m in factors],
        }
        if q:
            entry["q"] = q
        out.append(entry)
    return out


def _poly_pretty(poly: PluckerPolynomial, layout: shapes.Layout, latex: bool) -> str:
    if poly.is_zero():
        return "0"
    bits = []
    for q, coeff, factors in poly.sorted_terms():
        render = shapes.shape_latex if latex else shapes.shape_text
        mono = " ".join(render(layout, m) for m in factors)
        if q:
            mono = ("q^{%d} " % q if latex else f"q^{q} ") + mono
        mag = "" if abs(coeff) == 1 else str(abs(coeff)) + " "
        bits.append(("- " if coeff < 0 else ("+ " if bits else "")) + mag + mono)
    return " ".join(bits)


def model_document(datum: CominusculeDatum, with_checks: bool = True) -> dict:
    poset = poset_mod.build_minuscule_poset(datum)
    pot = potential.assemble_superpotential(datum)
    doc = {
        "datum": {"family": datum.family, "rank": datum.rank, "node": datum.node},
        "poset": [
            {"id": e, "label": poset.labels[e], "covers": list(poset.covers_down[e])}
            for e in range(poset.size)
        ],
        "terms": [
            {
                "index": term.index,
                "quantum": term.quantum,
                "numerator": _poly_json(term.numerator),
                "denominator": _poly_json(term.denominator),
            }
            for term in pot.terms
        ],
    }
    if with_checks:
        report = toric.verify_model(datum)
        doc["checks"] = [
            {"name": c.name, "istar": c.istar, "passed": c.passed, "detail": c.detail}
            for c in report.checks
        ]
    return doc


def _render_model_text(datum: CominusculeDatum, latex: bool) -> str:
    layout = shapes.default_layout(datum)
    pot = potential.assemble_superpotential(datum)
    lines = [f"# superpotential for {datum}  (poset of {poset_mod.build_minuscule_poset(datum).size} boxes)"]
    for r, off in zip(layout.rows, layout.offsets):
        lines.append("  " + " " * (2 * off) + " ".join(r))
    lines.append("")
    for term in pot.terms:
        num = _poly_pretty(term.numerator, layout, latex)
        den = _poly_pretty(term.denominator, layout, latex)
        head = f"W_{term.index}"
        if term.quantum:
            num = ("q \\cdot " if latex else "q * ") + num
        if latex:
            lines.append(f"{head} = \\frac{{{num}}}{{{den}}}")
        else:
            lines.append(f"{head} = ({num}) / ({den})")
    return "\n".join(lines) + "\n"


def cmd_model(args) -> int:
    datum = _datum_from_args(args)
    if args.format == "json":
        text = json.dumps(model_document(datum), indent=2) + "\n"
    else:
        text = _render_model_text(datum, latex=args.format == "latex")
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def _verify_one(payload) -> tuple[str, bool, list[str]]:
    family, rank, node, with_oracle, with_qd = payload
    datum = CominusculeDatum(family, rank, node)
    report = toric.verify_model(datum, with_oracle=with_oracle)
    lines = [c.line(datum) for c in report.checks]
    ok = report.passed
    if with_qd:
        qd_ok, qd_lines = _quantum_derivation_check(datum)
        lines.extend(qd_lines)
        ok = ok and qd_ok
    return str(datum), ok, lines


def _quantum_derivation_check(datum: CominusculeDatum) -> tuple[bool, list[str]]:
    lines = []
    ok = True
    for istar in range(datum.rank + 1):
        how = potential.quantum_derivation_matches(datum, istar)
        good = bool(how)
        ok = ok and good
        status = "ok" if good else "FAIL"
        suffix = f" ({how})" if how else ""
        lines.append(f"{status:4} {datum} quantum_derivation i*={istar}{suffix}")
    return ok, lines


def cmd_verify(args) -> int:
    if args.all:
        data = root_data.all_data(args.max_rank)
        payloads = [
            (d.family, d.rank, d.node, args.with_oracle, args.with_quantum_derivation)
            for d in data
        ]
        jobs = args.jobs or os.cpu_count() or 1
        if jobs > 1 and len(payloads) > 1:
            with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(_verify_one, payloads))
        else:
            results = [_verify_one(p) for p in payloads]
        results.sort(key=lambda r: r[0])
        all_ok = True
        for _, ok, lines in results:
            all_ok = all_ok and ok
            for line in lines:
                print(line)
        print("PASS" if all_ok else "FAIL")
        return 0 if all_ok else 1
    datum = _datum_from_args(args)
    _, ok, lines = _verify_one(
        (datum.family, datum.rank, datum.node, args.with_oracle, args.with_quantum_derivation)
    )
    for line in lines:
        print(line)
    print("PASS" if ok else "FAIL")
    return 0 if ok else 1


def cmd_poset(args) -> int:
    datum = _datum_from_args(args)
    poset = poset_mod.build_minuscule_poset(datum)
    if args.move_poset is not None:
        mp = moves.generate_move_poset(datum, args.move_poset)
        layout = shapes.default_layout(datum)
        if args.format == "json":
            doc = {
                "datum": {"family": datum.family, "rank": datum.rank, "node": datum.node},
                "istar": args.move_poset,
                "states": [
                    {
                        "depth": mp.depth[s],
                        "components": [list(poset.elements(m)) for m in s],
                    }
                    for s in mp.states
                ],
            }
            text = json.dumps(doc, indent=2) + "\n"
        elif args.format == "dot":
            lines = ["digraph moves {"]
            index = {s: i for i, s in enumerate(mp.states)}
            for s in mp.states:
                label = " | ".join(shapes.shape_text(layout, m) for m in s)
                lines.append(f'  n{index[s]} [label="{label} (d={mp.depth[s]})"];')
            for a, _, b in mp.edges:
                lines.append(f"  n{index[a]} -> n{index[b]};")
            lines.append("}")
            text = "\n".join(lines) + "\n"
        else:
            rows = []
            for s in mp.states:
                label = "  ".join(shapes.shape_text(layout, m) for m in s)
                rows.append(f"d={mp.depth[s]}  {label}")
            text = "\n".join(rows) + "\n"
    else:
        if args.format == "json":
            doc = {
                "datum": {"family": datum.family, "rank": datum.rank, "node": datum.node},
                "poset": [
                    {"id": e, "label": poset.labels[e], "covers": list(poset.covers_down[e])}
                    for e in range(poset.size)
                ],
            }
            text = json.dumps(doc, indent=2) + "\n"
        elif args.format == "dot":
            lines = ["digraph poset {"]
            for e in range(poset.size):
                lines.append(f'  n{e} [label="{e}:s{poset.labels[e]}"];')
            for e in range(poset.size):
                for c in poset.covers_down[e]:
                    lines.append(f"  n{e} -> n{c};")
            lines.append("}")
            text = "\n".join(lines) + "\n"
        else:
            layout = shapes.default_layout(datum)
            lines = [f"# {datum}: {poset.size} boxes"]
            for r, off in zip(layout.rows, layout.offsets):
                lines.append("  " + " " * (2 * off) + " ".join(r))
            text = "\n".join(lines) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_golden(args) -> int:
    directory = Path(args.dir) if args.dir else None
    cases = golden.load_corpus(directory)
    if args.case:
        wanted = set(args.case)
        cases = [c for c in cases if c.name in wanted]
        missing = wanted - {c.name for c in cases}
        if missing:
            print(f"unknown golden case(s): {sorted(missing)}", file=sys.stderr)
            return 2
    ok = True
    for case in cases:
        for res in golden.run_case(case):
            print(res.line())
            ok = ok and res.passed
    print("PASS" if ok else "FAIL")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cominlg",
        description="Combinatorial Landau-Ginzburg superpotentials from Dynkin data, verified exactly on the torus.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_datum_flags(p):
        p.add_argument("--family", choices=root_data.FAMILIES)
        p.add_argument("--rank", type=int)
        p.add_argument("--node", type=int)

    p_model = sub.add_parser("model", help="compute and emit a superpotential")
    add_datum_flags(p_model)
    p_model.add_argument("--format", choices=("json", "latex", "text"), default="text")
    p_model.add_argument("--out")
    p_model.set_defaults(func=cmd_model)

    p_verify = sub.add_parser("verify", help="run the identity suite")
    add_datum_flags(p_verify)
    p_verify.add_argument("--all", action="store_true")
    p_verify.add_argument("--max-rank", type=int, default=7)
    p_verify.add_argument("--with-oracle", action="store_true")
    p_verify.add_argument("--with-quantum-derivation", action="store_true")
    p_verify.add_argument("--jobs", type=int, default=0, help="worker processes for --all (0 = all cores)")
    p_verify.set_defaults(func=cmd_verify)

    p_poset = sub.add_parser("poset", help="dump the minuscule poset or a move poset")
    add_datum_flags(p_poset)
    p_poset.add_argument("--move-poset", type=int, default=None, metavar="ISTAR")
    p_poset.add_argument("--format", choices=("text", "json", "dot"), default="text")
    p_poset.add_argument("--out")
    p_poset.set_defaults(func=cmd_poset)

    p_golden = sub.add_parser("golden", help="diff computed models against the golden corpus")
    p_golden.add_argument("--case", action="append")
    p_golden.add_argument("--dir")
    p_golden.set_defaults(func=cmd_golden)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"internal assertion failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
