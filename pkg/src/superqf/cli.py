"""``superqf`` command line: list, show, verify, extend, qf.

Exit codes: 0 success, 1 a check failed, 2 usage or data error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import catalog as cat
from .lie import classify_at_point
from .verify import CHECKS, DEFAULT_SAMPLES, UnknownCheck, VerificationPlan, build_extension, run
from .extension import extension_report, map_from_pairs, verify_iso

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class NoExtensionData(cat.CatalogError):
    """The entry carries no extension block."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False, sort_keys=False)


def _load(args):
    if args.catalog:
        return cat.load_catalog(Path(args.catalog))
    return cat.load_default()


def _combo(terms):
    """Render (coefficient, symbol) pairs as a readable linear combination."""
    out = ""
    for c, sym in terms:
        c = str(c)
        if c in ("0", ""):
            continue
        neg = c.startswith("-") and not any(op in c[1:] for op in "+-")
        body = c[1:] if neg else c
        if any(op in body for op in "+-"):
            body = f"({body})"
        piece = sym if body == "1" else f"{body}*{sym}"
        if not out:
            out = f"-{piece}" if neg else piece
        else:
            out += f" - {piece}" if neg else f" + {piece}"
    return out or "0"


def _vec(space_labels, row):
    return _combo((c, lab) for lab, c in zip(space_labels, row))


# ---------------------------------------------------------------------------
# list / show
# ---------------------------------------------------------------------------

def _summary(e):
    return {
        "id": e.id,
        "table": e.table,
        "sdim": "%d|%d" % e.sdim,
        "parameters": list(e.region.parameters),
        "items": [c.item for c in e.cases],
        "verdict": e.verdict,
        "categories": sorted({c.category for c in e.cases}),
        "extensions": [x.kind for _, x in e.extensions],
        "lsa": [b.kind for b in e.lsa],
    }


def cmd_list(args, out):
    C = _load(args)
    rows = [_summary(e) for e in C if args.table is None or e.table == args.table]
    if args.format == "json":
        out.write(_dump({"entries": rows, "count": len(rows)}) + "\n")
        return EXIT_OK
    out.write(f"{'id':<18}{'table':>5}  {'sdim':<5}{'verdict':<9}{'items':<8}{'extensions':<20}lsa\n")
    for r in rows:
        out.write(
            f"{r['id']:<18}{r['table']:>5}  {r['sdim']:<5}{r['verdict']:<9}"
            f"{','.join(map(str, r['items'])):<8}{','.join(r['extensions']) or '-':<20}"
            f"{','.join(r['lsa']) or '-'}\n"
        )
    out.write(f"{len(rows)} entries\n")
    return EXIT_OK


def cmd_show(args, out):
    e = _load(args).get(args.id)
    if args.format == "json":
        out.write(_dump(e.as_json()) + "\n")
        return EXIT_OK
    out.write(f"{e.id}  ({e.name})  table {e.table}  sdim {e.sdim[0]}|{e.sdim[1]}\n")
    out.write("brackets:\n")
    for (i, j), rhs in e.brackets.items():
        out.write(f"  [{i},{j}] = {_combo((c, k) for k, c in rhs.items())}\n")
    if e.region.parameters:
        cons = ", ".join(f"{c.poly} {c.rel} 0" for c in e.region.constraints) or "none"
        out.write(f"region: {' '.join(e.region.parameters)}; {cons}\n")
    for c in e.cases:
        out.write(f"item {c.item}: {c.category}, verdict {c.verdict}\n")
        for k, f in enumerate(c.forms):
            terms = _combo((t, f"{i}*^{j}*") for t, i, j in f.terms)
            out.write(f"  form {k} [{f.parity}]: {terms}\n")
        for x in c.extensions:
            out.write(f"  extension {x.kind} over {{{','.join(x.base_labels)}}} (form {x.form})\n")
        if c.certificate:
            out.write(f"  no-Lagrangian certificate: {c.certificate}\n")
    for b in e.lsa:
        out.write(f"lsa {b.kind}: {len(b.products)} nonzero products, free {' '.join(b.free) or '-'}\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _text_report(report, out):
    for eid, checks in report.entries.items():
        cells = []
        for name, r in checks.items():
            cells.append(f"{name}={r.status}")
        out.write(f"{eid:<18} {'  '.join(cells)}\n")
        for name, r in checks.items():
            if r.status == "fail":
                err = r.detail.get("error")
                if err:
                    out.write(f"    {name}: {err}\n")
                for w in r.witnesses[:3]:
                    out.write(f"    {name}: {json.dumps(w, ensure_ascii=False)}\n")
    c = report.counts()
    total = sum(r.elapsed for checks in report.entries.values() for r in checks.values())
    out.write(f"{report.status.upper()}: {c['pass']} passed, {c['fail']} failed, {c['skipped']} skipped"
              f" ({total:.1f}s)\n")


def cmd_verify(args, out):
    try:
        plan = VerificationPlan(args.entry or (), args.check or CHECKS, args.samples, args.format, args.jobs)
    except (UnknownCheck, ValueError) as exc:
        print(f"superqf verify: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report = run(plan, _load(args))
    if plan.format == "json":
        out.write(_dump(report.as_json(timings=args.timings)) + "\n")
    else:
        _text_report(report, out)
    return report.exit_code


# ---------------------------------------------------------------------------
# extend / qf
# ---------------------------------------------------------------------------

def _extension_artifact(entry, case, spec, point):
    h, nabla, cocycle, ext = build_extension(spec, point)
    labels = ext.space.labels
    brackets = {
        f"[{a},{b}]": _vec(labels, v) for (a, b), v in
        ((k, [val.get(x, 0) for x in labels]) for k, val in ext.algebra.brackets_dict().items())
    }
    vals = ext.form.values()
    form = {f"w({labels[i]},{labels[j]})": str(vals[i][j])
            for i in range(len(labels)) for j in range(len(labels)) if vals[i][j]}
    space = entry.space()
    L = entry.algebra()
    omega = case.forms[spec.form].build(space)
    if point:
        L, omega = L.subs(point), omega.subs(point)
    f = map_from_pairs(ext.space, space, [(ext.space.basis_vector(r), list(spec.identification[r]))
                                          for r in range(ext.space.dim)])
    iso = verify_iso(f, ext.algebra, L, forms=(ext.form, omega))
    rep = extension_report(ext)
    return {
        "item": case.item,
        "kind": spec.kind,
        "point": {k: str(Fraction(v)) for k, v in point.items()},
        "base": {"labels": list(h.space.labels), "parities": [int(p) for p in h.space.parities]},
        "brackets": brackets,
        "form": {"parity": int(ext.form.parity), "values": form},
        "ideal": [_vec(labels, r) for r in ext.dual_ideal.rows],
        "identification": {labels[r]: _vec(cat.LABELS, spec.identification[r]) for r in range(len(labels))},
        "extension_checks": {"ok": rep.ok, "failures": rep.failures[:5]},
        "isomorphism": {"ok": iso.ok, "form_factor": iso.detail.get("form_factor"), "failures": iso.failures[:5]},
    }


def cmd_extend(args, out):
    e = _load(args).get(args.id)
    if not e.extensions:
        raise NoExtensionData(f"{e.id} has no extension data (verdict {e.verdict})")
    artifacts = []
    for case, spec in e.extensions:
        pinned = any(c.rel == "=" for c in case.region.constraints)
        points = [dict(p) for p in case.region.samples] if pinned else [{}]
        for p in points:
            artifacts.append(_extension_artifact(e, case, spec, p))
    ok = all(a["extension_checks"]["ok"] and a["isomorphism"]["ok"] for a in artifacts)
    if args.format == "json":
        out.write(_dump({"id": e.id, "ok": ok, "extensions": artifacts}) + "\n")
    else:
        for a in artifacts:
            where = f" at {a['point']}" if a["point"] else ""
            out.write(f"{e.id} item {a['item']}: {a['kind']} extension of "
                      f"span{{{', '.join(a['base']['labels'])}}}{where}\n")
            out.write("  brackets:\n")
            for k, v in a["brackets"].items():
                out.write(f"    {k} = {v}\n")
            out.write(f"  form (parity {a['form']['parity']}):\n")
            for k, v in a["form"]["values"].items():
                out.write(f"    {k} = {v}\n")
            out.write(f"  Lagrangian ideal: span{{{', '.join(a['ideal'])}}}\n")
            out.write("  identification: " + ", ".join(f"{k} -> {v}" for k, v in a["identification"].items()) + "\n")
            ec, iso = a["extension_checks"], a["isomorphism"]
            out.write(f"  extension checks: {'pass' if ec['ok'] else 'FAIL'}\n")
            out.write(f"  isomorphism to catalog: {'pass' if iso['ok'] else 'FAIL'}"
                      f" (form factor {iso['form_factor']})\n")
            for w in iso["failures"][:3]:
                out.write(f"    {json.dumps(w, ensure_ascii=False)}\n")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_qf(args, out):
    e = _load(args).get(args.id)
    L = e.algebra()
    rows = []
    for case in e.cases:
        pts = [{}] if not case.region.parameters else (
            [dict(p) for p in case.region.samples] if any(c.rel == "=" for c in case.region.constraints)
            else cat.sample_points(case.region, args.samples))
        for p in pts:
            res = classify_at_point(L.subs(p) if p else L)
            rows.append({"item": case.item, "point": {k: str(Fraction(v)) for k, v in p.items()},
                         "expected": case.verdict, **res, "match": res["verdict"] == case.verdict})
    ok = all(r["match"] for r in rows)
    if args.format == "json":
        out.write(_dump({"id": e.id, "ok": ok, "points": rows}) + "\n")
    else:
        for r in rows:
            pt = ", ".join(f"{k}={v}" for k, v in r["point"].items() if k in L.parameters()) or "-"
            mark = "ok" if r["match"] else "MISMATCH"
            out.write(f"{e.id} item {r['item']} [{pt}]: {r['verdict']} (expected {r['expected']}; "
                      f"closed even {r['dim_even']}, odd {r['dim_odd']}) {mark}\n")
    return EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------------------

def build_parser():
    p = _Parser(prog="superqf", description="Quasi-Frobenius Lie superalgebra catalog tools.")
    p.add_argument("--catalog", help=f"catalog file (default: ${cat.ENV_VAR} or the shipped catalog)")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("list", help="list catalog entries")
    s.add_argument("--table", type=int, choices=range(1, 7))
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.set_defaults(func=cmd_list)

    s = sub.add_parser("show", help="show one entry")
    s.add_argument("id")
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.set_defaults(func=cmd_show)

    s = sub.add_parser("verify", help="run verification checks")
    s.add_argument("--entry", action="append", metavar="ID")
    s.add_argument("--check", action="append", metavar="NAME", help="one of: " + ", ".join(CHECKS))
    s.add_argument("--samples", type=int, default=DEFAULT_SAMPLES, help="sample points per region")
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--timings", action="store_true", help="include elapsed seconds in JSON")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("extend", help="construct the T*/Pi T* extension of an entry")
    s.add_argument("id")
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.set_defaults(func=cmd_extend)

    s = sub.add_parser("qf", help="classify closed forms at sample points")
    s.add_argument("id")
    s.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.set_defaults(func=cmd_qf)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    if hasattr(out, "reconfigure"):
        try:
            out.reconfigure(encoding="utf-8")
        except (AttributeError, ValueError):
            pass
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except cat.UnknownEntryId as exc:
        print(f"superqf: {exc}", file=sys.stderr)
    except NoExtensionData as exc:
        print(f"superqf: {exc}", file=sys.stderr)
    except cat.CatalogError as exc:
        print(f"superqf: catalog error: {exc}", file=sys.stderr)
    except (OSError, ValueError) as exc:
        print(f"superqf: {exc}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
