"""Command line front end.

    qsing resolve cyclic:7/3 --lattice --monomials --charts
    qsing table1 --pmax 50 [--format md]
    qsing table3
    qsing verify --pmax 100 --lmax 300

Structured output is one JSON object per line, each carrying
``"schema": 1``. Errors go to stderr as a JSON object; exit codes are
2 (parse), 3 (validation), 4 (divisor data required), 1 (failed sweep).
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Iterable, List, Optional

from . import group as grp
from .divisor import bundled_divisors, counts, dihedral_embedding_dimension, find_divisor, load_divisor_file
from .errors import DivisorDataRequired, ParseError, QsingError
from .hj import dual_expand, embedding_dimension, hj_expand
from .moduli import ModuliReport, full_report, moduli_dimension_cyclic, table3_rows
from .toric import chart_atlas, invariant_monomials, lattice_chain, verify_transitions
from .verify import coprime_pairs, faulty_expand, run_all

SCHEMA = 1

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_INVALID, EXIT_DIVISOR = 0, 1, 2, 3, 4


def format_record(record: dict) -> str:
    return json.dumps(record, sort_keys=True, separators=(",", ":"))


def parse_record(line: str) -> dict:
    return json.loads(line)


def has_float(obj) -> bool:
    if isinstance(obj, float):
        return True
    if isinstance(obj, dict):
        return any(has_float(v) for v in obj.values())
    if isinstance(obj, (list, tuple)):
        return any(has_float(v) for v in obj)
    return False


def _counts_dict(c):
    if c is None:
        return None
    return {"jGamma": c.jGamma, "kGamma": c.kGamma, "dGamma": c.dGamma, "h1Theta": c.h1Theta}


def report_record(rep: ModuliReport) -> dict:
    desc = rep.group
    rec = {
        "schema": SCHEMA,
        "record": "resolve",
        "group": grp.format_descriptor(desc),
        "order": grp.order(desc),
        "dispatch": grp.classify(desc).kind.value,
        "route": rep.route,
        "counts": _counts_dict(rep.counts),
        "embeddingDim": rep.embeddingDim,
        "orbitDim": rep.orbitDim,
        "mGamma": rep.mGamma,
        "divisor": rep.divisor.to_record() if rep.divisor is not None else None,
    }
    if rep.table3 is not None:
        rec["table3"] = {"condition": rep.table3.condition(), "formula": rep.table3.formula()}
    if isinstance(desc, grp.Cyclic):
        rec["hj"] = list(hj_expand(desc.p, desc.q).entries)
        rec["dual"] = list(dual_expand(desc.p, desc.q).entries)
    return rec


def resolve_record(desc, rep: ModuliReport, lattice=False, monomials=False, charts=False) -> dict:
    rec = report_record(rep)
    if not isinstance(desc, grp.Cyclic):
        return rec
    p, q = desc.p, desc.q
    if lattice:
        rec["lattice"] = [list(pt) for pt in lattice_chain(p, q).points]
    if monomials:
        rec["monomials"] = [list(u.as_tuple()) for u in invariant_monomials(p, q)]
    if charts:
        atlas = chart_atlas(p, q)
        rec["charts"] = [
            {"eta": list(c.eta.as_tuple()), "xi": list(c.xi.as_tuple())} for c in atlas.charts
        ]
        rec["transitions"] = [
            {
                "index": t.index,
                "inverseHolds": t.inverseHolds,
                "recursionHolds": t.recursionHolds,
                "coefficient": t.coefficient,
            }
            for t in verify_transitions(p, q).perIndex
        ]
    return rec


def markdown_table(headers: List[str], rows: Iterable[Iterable]) -> str:
    lines = ["| " + " | ".join(headers) + " |", "|" + "---|" * len(headers)]
    for row in rows:
        lines.append("| " + " | ".join("" if v is None else str(v) for v in row) + " |")
    return "\n".join(lines)


def _emit(records: List[dict], fmt: str, out, md_headers=None, md_row=None):
    if fmt == "md":
        print(markdown_table(md_headers, (md_row(r) for r in records)), file=out)
    else:
        for r in records:
            print(format_record(r), file=out)


def _pick_divisor(desc, path: Optional[str]):
    if path is None or isinstance(desc, grp.Cyclic):
        return None
    records = load_divisor_file(path)
    if len(records) == 1:
        return records[0]
    return find_divisor(grp.format_descriptor(desc), records)


# -- commands -------------------------------------------------------------


def cmd_resolve(args, out) -> int:
    desc = grp.validate(grp.parse_descriptor(args.descriptor))
    div = _pick_divisor(desc, args.divisor_file)
    rep = full_report(desc, div)
    rec = resolve_record(desc, rep, args.lattice, args.monomials, args.charts)
    if args.format == "md":
        print(markdown_table(["field", "value"], ((k, json.dumps(v)) for k, v in sorted(rec.items()))), file=out)
    else:
        print(format_record(rec), file=out)
    return EXIT_OK


def table1_records(p_max: int, divisor_file: Optional[str] = None) -> List[dict]:
    recs = []
    for p, q in coprime_pairs(p_max, 3):
        if q == p - 1:
            continue
        rep = moduli_dimension_cyclic(p, q)
        c, e = rep.counts, rep.embeddingDim
        row = {"Table1Row1": 1, "Table1Row2": 2, "Table1Row3": 3}[rep.route]
        closed = {1: 2, 2: 2 * p - 5, 3: 2 * e + 3 * c.kGamma - 8}[row]
        recs.append({
            "schema": SCHEMA, "record": "table1", "row": row,
            "group": f"cyclic:{p}/{q}",
            "jGamma": c.jGamma, "kGamma": c.kGamma, "dGamma": c.dGamma,
            "embeddingDim": e, "mGamma": rep.mGamma, "mClosedForm": closed,
        })
    divisors = list(bundled_divisors())
    if divisor_file:
        divisors += load_divisor_file(divisor_file)
    for div in divisors:
        if not div.is_star or div.is_ade():
            continue
        c = counts(div)
        e = dihedral_embedding_dimension(div)
        recs.append({
            "schema": SCHEMA, "record": "table1", "row": 4,
            "group": div.meta.get("group") or div.label,
            "jGamma": c.jGamma, "kGamma": c.kGamma, "dGamma": c.dGamma,
            "embeddingDim": e, "mGamma": c.jGamma + c.kGamma - 1,
            "mClosedForm": 2 * e + 3 * c.kGamma - 7,
        })
    return recs


def cmd_table1(args, out) -> int:
    if args.pmax < 3:
        raise ParseError("--pmax must be at least 3")
    recs = table1_records(args.pmax, args.divisor_file)
    _emit(recs, args.format, out,
          ["group", "row", "d", "m", "closed form", "j", "k", "e"],
          lambda r: (r["group"], r["row"], r["dGamma"], r["mGamma"], r["mClosedForm"],
                     r["jGamma"], r["kGamma"], r["embeddingDim"]))
    return EXIT_OK


_FAMILY_NAMES = {
    "tetra": "phi(L(1,2l) x T*)",
    "idx3tetra": "index-3 diagonal in phi(L(1,6l) x T*)",
    "octa": "phi(L(1,2l) x O*)",
    "icosa": "phi(L(1,2l) x I*)",
}


def table3_records() -> List[dict]:
    recs = []
    for row in table3_rows():
        l = row.smallest_instance()
        desc = (grp.Index3Tetrahedral(l) if row.family == "idx3tetra"
                else grp.PhiProduct(grp.Factor(row.family), l))
        rep = full_report(desc)
        recs.append({
            "schema": SCHEMA, "record": "table3",
            "family": row.family, "groupName": _FAMILY_NAMES[row.family],
            "condition": row.condition(), "formula": row.formula(),
            "modulus": row.modulus, "residue": row.residue,
            "smallestL": l, "group": grp.format_descriptor(desc), "mGamma": rep.mGamma,
        })
    return recs


def cmd_table3(args, out) -> int:
    _emit(table3_records(), args.format, out,
          ["group", "condition", "m", "smallest l", "m at smallest l"],
          lambda r: (r["groupName"], r["condition"], r["formula"], r["smallestL"], r["mGamma"]))
    return EXIT_OK


def cmd_verify(args, out) -> int:
    if args.pmax < 2 or args.lmax < 2:
        raise ParseError("--pmax and --lmax must be at least 2")
    kwargs = {}
    if args.inject_fault:
        target = grp.parse_descriptor(f"cyclic:{args.inject_fault}")
        kwargs["expand"] = faulty_expand((target.p, target.q))
    results = run_all(args.pmax, args.lmax, **kwargs)
    recs = [
        {"schema": SCHEMA, "record": "verify", "sweep": r.name, "checked": r.checked,
         "failed": r.failed, "counterexample": r.counterexample}
        for r in results
    ]
    failed = [r for r in results if not r.ok]
    recs.append({"schema": SCHEMA, "record": "verify-summary",
                 "passed": len(results) - len(failed), "failed": len(failed)})
    _emit(recs, args.format, out,
          ["sweep", "checked", "failed", "counterexample"],
          lambda r: (r.get("sweep", "TOTAL"), r.get("checked", r.get("passed")),
                     r["failed"], r.get("counterexample")))
    if failed:
        print(f"FAIL {failed[0].name}: {failed[0].counterexample}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qsing", description=__doc__.split("\n")[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "md"), default="json")
    div = argparse.ArgumentParser(add_help=False)
    div.add_argument("--divisor-file", metavar="PATH", default=None)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("resolve", parents=[common, div], help="resolution data and m for one group")
    p.add_argument("descriptor")
    p.add_argument("--charts", action="store_true")
    p.add_argument("--monomials", action="store_true")
    p.add_argument("--lattice", action="store_true")
    p.set_defaults(func=cmd_resolve)

    p = sub.add_parser("table1", parents=[common, div], help="instantiate Table 1")
    p.add_argument("--pmax", type=int, default=20)
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("table3", parents=[common], help="Table 3 with smallest instances")
    p.set_defaults(func=cmd_table3)

    p = sub.add_parser("verify", parents=[common], help="run all identity sweeps")
    p.add_argument("--pmax", type=int, default=100)
    p.add_argument("--lmax", type=int, default=300)
    p.add_argument("--inject-fault", metavar="P/Q", default=None, help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except QsingError as exc:
        payload = {"schema": SCHEMA, **exc.to_dict()}
        print(format_record(payload), file=sys.stderr)
        if isinstance(exc, ParseError):
            return EXIT_PARSE
        if isinstance(exc, DivisorDataRequired):
            return EXIT_DIVISOR
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
