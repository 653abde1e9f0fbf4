"""Command-line front end: ``linsyll {prove,verify,enumerate,net,tables}``.

Exit codes: 0 established or provable, 1 unprovable or mismatch, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from pathlib import Path
from typing import Any, Optional, Sequence

from . import nets, rll, syll, syllogistics as sg
from .errors import ParseError

OK, FAIL, USAGE = 0, 1, 2
SYSTEM_CHOICES = (*syll.SYSTEM_NAMES, "rll")
TABLE_SECTIONS = ("table1", "table2", "square", "catalog")


class UsageError(Exception):
    pass


def _dump(doc: Any) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False)


def _budget(args: argparse.Namespace, default: syll.AxiomBudget) -> syll.AxiomBudget:
    if args.budget is None:
        return default
    if args.budget < 0:
        raise UsageError("--budget must be non-negative")
    return syll.AxiomBudget(args.budget)


def parse_syll_input(text: str) -> syll.SyllSequent:
    """Syllogism shorthand (``P1; P2 / C``) or a diagram sequent (``d1, d2 |= g``)."""
    if "|=" in text:
        return syll.parse_syll_sequent(text)
    if "/" in text:
        return sg.parse_syllogism(text).syll_sequent()
    raise ParseError("expected a syllogism 'P1; P2 / C' or a diagram sequent 'd1, d2 |= g'", text, len(text))


def parse_rll_input(text: str) -> rll.RllSequent:
    if "/" in text and "|-" not in text and "⊢" not in text:
        return sg.parse_syllogism(text).rll_sequent()
    return rll.parse_sequent(text)


# --- prove / verify -------------------------------------------------------------------

def cmd_prove(args: argparse.Namespace, out) -> int:
    if args.system == "rll":
        seq = parse_rll_input(args.sequent)
        proof = rll.prove_rll(seq)
        doc = {"system": "rll", "sequent": seq.render(), "provable": proof is not None,
               "proof": proof.to_json() if proof else None}
    else:
        system = syll.SYSTEM_NAMES[args.system]
        seq = parse_syll_input(args.sequent)
        proof = syll.prove(seq, system, _budget(args, syll.AxiomBudget()))
        doc = {"system": args.system, "sequent": str(seq), "provable": proof is not None,
               "proof": proof.to_json() if proof else None}
        if args.budget is not None:
            doc["budget"] = args.budget
    if args.format == "json":
        print(_dump(doc), file=out)
    elif proof is None:
        print("unprovable", file=out)
    else:
        print(proof.pretty(), file=out)
    return OK if proof is not None else FAIL


def verify_document(doc: dict[str, Any]) -> bool:
    """Replay a proof document produced by ``prove --format json``."""
    if not doc.get("provable") or doc.get("proof") is None:
        return False
    if doc["system"] == "rll":
        proof = rll.RllProof.from_json(doc["proof"])
        return proof.node == parse_rll_input(doc["sequent"]) and rll.check_rll_proof(proof)
    if doc["system"] not in syll.SYSTEM_NAMES:
        raise UsageError(f"unknown system {doc['system']!r}")
    seq = parse_syll_input(doc["sequent"])
    proof = syll.SyllProof.from_json(doc["proof"])
    return syll.check_proof(proof, seq, syll.SYSTEM_NAMES[doc["system"]])


def cmd_verify(args: argparse.Namespace, out) -> int:
    text = sys.stdin.read() if args.file == "-" else Path(args.file).read_text()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"not a JSON document: {exc}") from exc
    if not isinstance(doc, dict) or "system" not in doc or "sequent" not in doc:
        raise UsageError("expected a proof document with 'system' and 'sequent'")
    try:
        ok = verify_document(doc)
    except (KeyError, TypeError) as exc:
        raise UsageError(f"malformed proof document: {exc}") from exc
    print("valid" if ok else "invalid", file=out)
    return OK if ok else FAIL


# --- enumerate -------------------------------------------------------------------------

def _verdict_word(ok: bool) -> str:
    return "provable" if ok else "unprovable"


def enumeration_report(kind: str, strengthened: bool, budget: syll.AxiomBudget) -> dict[str, Any]:
    golden = sg.golden_table(kind)
    expected = golden.strengthened if strengthened else golden.plain
    cands = sg.enumerate_candidates(kind, strengthened)
    rows, proved, disagree = [], [], []
    for s in cands:
        v = sg.classify(s, budget=budget)
        name = str(s)
        rows.append({
            "candidate": name,
            "figure": sg.figure_of(s),
            "mood": sg.mood_of(s),
            "syll": _verdict_word(v.syll_provable),
            "rll": _verdict_word(v.rll_provable),
            "golden": name in expected,
        })
        if v.syll_provable and v.rll_provable:
            proved.append(s)
        if not v.agree:
            disagree.append(name)
    # with imports, De Morgan tables only list subject-term imports
    scoped = [s for s in proved if sg.subject_import(s)] if (strengthened and kind == sg.DEMORGAN) else proved
    scoped_names = {str(s) for s in scoped}
    columns = sg.table_columns(expected)
    in_columns = {str(s) for s in scoped if (sg.mood_of(s), sg.figure_of(s)) in columns}
    missing = sorted(expected - scoped_names)
    extra = sorted(scoped_names - expected)
    summary = {
        "kind": kind,
        "strengthened": strengthened,
        "rows": len(rows),
        "syll_provable": sum(r["syll"] == "provable" for r in rows),
        "rll_provable": sum(r["rll"] == "provable" for r in rows),
        "provable": len(proved),
        "golden": len(expected),
        "disagreements": len(disagree),
        "golden_match": not missing and not extra,
        "golden_columns_match": in_columns == expected,
    }
    findings = {
        "disagreements": disagree,
        "missing_from_enumeration": missing,
        "beyond_golden_table": extra,
        "provable_by_mood": dict(sorted(Counter(sg.mood_of(s) for s in proved).items())),
    }
    if strengthened and kind == sg.DEMORGAN:
        findings["full_sweep_provable"] = sorted(str(s) for s in proved)
    return {"summary": summary, "rows": rows, "findings": findings}


def _report_text(rep: dict[str, Any]) -> str:
    lines = ["# candidate\tfigure\tmood\tsyll\trll\tgolden"]
    for r in rep["rows"]:
        lines.append(f"{r['candidate']}\t{r['figure']}\t{r['mood']}\t{r['syll']}\t{r['rll']}\t{'yes' if r['golden'] else 'no'}")
    lines.append("")
    lines.append("# summary")
    lines += [f"{k}\t{v}" for k, v in rep["summary"].items()]
    lines.append("")
    lines.append("# findings")
    for key, value in rep["findings"].items():
        if isinstance(value, dict):
            lines.append(f"{key}\t" + " ".join(f"{k}={n}" for k, n in value.items()))
        else:
            lines.append(f"{key}\t{len(value)}")
            lines += [f"  {item}" for item in value]
    return "\n".join(lines) + "\n"


def _summary_text(rep: dict[str, Any]) -> str:
    s = rep["summary"]
    head = (f"{s['kind']}{' strengthened' if s['strengthened'] else ''}: {s['rows']} rows, "
            f"{s['provable']} provable (syll {s['syll_provable']}, rll {s['rll_provable']}), "
            f"{s['disagreements']} disagreements, golden table {'matched' if s['golden_match'] else 'MISMATCH'}"
            f" ({'exact' if s['golden_columns_match'] else 'mismatched'} within its mood/figure columns)")
    f = rep["findings"]
    lines = [head]
    for label, key in (("disagreement", "disagreements"), ("missing", "missing_from_enumeration"),
                       ("extra", "beyond_golden_table")):
        lines += [f"  {label}: {x}" for x in f[key]]
    return "\n".join(lines) + "\n"


def cmd_enumerate(args: argparse.Namespace, out) -> int:
    rep = enumeration_report(args.kind, args.strengthened, _budget(args, sg.CLASSIFY_BUDGET))
    if args.report:
        body = _dump(rep) + "\n" if args.format == "json" else _report_text(rep)
        Path(args.report).write_text(body)
    if args.format == "json":
        print(_dump(rep["summary"] | {"findings": rep["findings"]}), file=out)
    else:
        out.write(_summary_text(rep))
    s = rep["summary"]
    return OK if s["disagreements"] == 0 and s["golden_match"] else FAIL


# --- net ----------------------------------------------------------------------------------

def cmd_net(args: argparse.Namespace, out) -> int:
    seq = parse_rll_input(args.sequent)
    built = nets.net_for(seq)
    if built is None:
        print("unprovable", file=out)
        return FAIL
    _, _, net = built
    if args.format == "json":
        print(nets.dumps_net(net), file=out)
    else:
        out.write(nets.net_to_dot(net))
    if args.check_planar:
        pl = nets.planarity(net)
        print(f"planar: {'yes' if pl.planar else 'no'} ({len(pl.crossings)} crossing(s))", file=sys.stderr)
        return OK if pl.planar else FAIL
    return OK


# --- tables ---------------------------------------------------------------------------------

def table_checks(only: Optional[str] = None) -> list[tuple[str, str, bool]]:
    """(section, item, proved) for every fixture, re-derived from scratch."""
    checks: list[tuple[str, str, bool]] = []
    if only in (None, "table1", "table2"):
        for section, kind in (("table1", sg.TRADITIONAL), ("table2", sg.DEMORGAN)):
            if only not in (None, section):
                continue
            plain, strong = (sg.TABLE1_PLAIN, sg.TABLE1_STRENGTHENED) if kind == sg.TRADITIONAL else (
                sg.TABLE2_PLAIN, sg.TABLE2_STRENGTHENED)
            for text in (*plain, *strong):
                s = sg.parse_syllogism(text)
                v = sg.classify(s, sg.system_for(kind))
                checks.append((section, str(s), v.syll_provable and v.rll_provable))
    if only in (None, "square"):
        for law in sg.square_laws():
            ok = rll.is_provable(law.rll_sequent)
            if law.syll_sequent is not None:
                ok = ok and syll.is_provable(law.syll_sequent, law.system)
            checks.append(("square", law.name, ok))
    if only in (None, "catalog"):
        for entry in sg.reduction_catalog():
            ok = all(syll.is_provable(o.sequent, sg.CATALOG_SYSTEM) for o in entry.obligations)
            checks.append(("catalog", entry.name, ok))
    return checks


def cmd_tables(args: argparse.Namespace, out) -> int:
    checks = table_checks(args.only)
    if args.format == "json":
        print(_dump([{"section": s, "item": i, "status": "PROVED" if ok else "FAILED"} for s, i, ok in checks]),
              file=out)
    else:
        for section, item, ok in checks:
            print(f"{'PROVED' if ok else 'FAILED'}\t{section}\t{item}", file=out)
    return OK if all(ok for *_, ok in checks) else FAIL


# --- entry point -------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="linsyll", description="Diagrammatic and linear-logic syllogistics.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("prove", help="search for a proof")
    p.add_argument("sequent")
    p.add_argument("--system", choices=SYSTEM_CHOICES, default="syll")
    p.add_argument("--budget", type=int, help="axiom instances per term-variable")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_prove)

    p = sub.add_parser("verify", help="replay a JSON proof document")
    p.add_argument("file", help="path, or - for stdin")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="classify every candidate syllogism")
    p.add_argument("--kind", choices=sg.KINDS, required=True)
    p.add_argument("--strengthened", action="store_true")
    p.add_argument("--report", metavar="PATH")
    p.add_argument("--budget", type=int)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("net", help="proof net of an RLL sequent")
    p.add_argument("sequent")
    p.add_argument("--check-planar", action="store_true")
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.set_defaults(func=cmd_net)

    p = sub.add_parser("tables", help="re-derive the validity tables and law catalogs")
    p.add_argument("--only", choices=TABLE_SECTIONS)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_tables)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.func(args, out)
    except (ParseError, UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
