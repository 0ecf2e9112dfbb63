"""Verification checks over catalog entries and the plan runner behind ``superqf verify``."""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from . import catalog as cat
from .certificates import replay_no_lagrangian_proof
from .extension import (
    ExtensionPreconditionFailed,
    cocycle_condition,
    curvature_report,
    extension_report,
    map_from_pairs,
    pi_t_star_extend,
    quotient_flat_connection,
    t_star_extend,
    torsion_report,
    verify_iso,
)
from .lie import check_anticommutativity, check_jacobi, classify_at_point, closed_failures, is_lagrangian_ideal
from .lsa import (
    bn_induced_bracket,
    compatibility,
    induced_bracket,
    is_balinsky_novikov,
    is_left_symmetric,
    is_novikov,
)
from .obstruction import CERTIFIED_ENTRIES, StepNotImplied, groebner_nonexistence, novikov_obstruction_replay
from .superspace import (
    NHForm,
    check_superdim_constraints,
    form_determinant,
    is_antisymmetric,
    orthogonal_complement,
)

CHECKS = (
    "jacobi",
    "forms",
    "qf-classify",
    "extension",
    "roundtrip",
    "lagrangian-cert",
    "lsa",
    "bn",
    "novikov-obstruction",
)
DEFAULT_SAMPLES = 3
MAX_WITNESSES = 8


class UnknownCheck(ValueError):
    pass


@dataclass
class VerificationPlan:
    entries: tuple = ()  # empty means all
    checks: tuple = CHECKS
    samples: int = DEFAULT_SAMPLES
    format: str = "text"
    jobs: int = 1

    def __post_init__(self):
        self.entries = tuple(self.entries)
        self.checks = tuple(self.checks) or CHECKS
        bad = [c for c in self.checks if c not in CHECKS]
        if bad:
            raise UnknownCheck(f"unknown check(s): {', '.join(bad)}")
        if self.samples < 1:
            raise ValueError("samples per region must be at least 1")
        if self.format not in ("text", "json"):
            raise ValueError(f"unknown format {self.format!r}")
        if self.jobs < 1:
            raise ValueError("jobs must be at least 1")


@dataclass
class CheckResult:
    check: str
    status: str  # pass | fail | skipped
    detail: dict = field(default_factory=dict)
    witnesses: list = field(default_factory=list)
    samples: list = field(default_factory=list)
    elapsed: float = 0.0

    def as_json(self, timings=False):
        out = {
            "status": self.status,
            "detail": self.detail,
            "witnesses": self.witnesses,
            "samples": self.samples,
        }
        if timings:
            out["elapsed"] = round(self.elapsed, 3)
        return out


@dataclass
class Report:
    entries: dict  # id -> {check: CheckResult}, in plan order

    @property
    def status(self):
        failed = any(r.status == "fail" for checks in self.entries.values() for r in checks.values())
        return "fail" if failed else "pass"

    @property
    def exit_code(self):
        return 1 if self.status == "fail" else 0

    def counts(self):
        out = {"pass": 0, "fail": 0, "skipped": 0}
        for checks in self.entries.values():
            for r in checks.values():
                out[r.status] += 1
        return out

    def as_json(self, timings=False):
        return {
            "status": self.status,
            "counts": self.counts(),
            "entries": [
                {"id": eid, "checks": {name: r.as_json(timings) for name, r in checks.items()}}
                for eid, checks in self.entries.items()
            ],
        }


# ---------------------------------------------------------------------------
# helpers
# ---------------------------------------------------------------------------

def _pt(point):
    return {k: str(Fraction(v)) for k, v in point.items()}


def _pinned(region):
    return any(c.rel == "=" for c in region.constraints)


def _points(region, n):
    """Sample points of a region; a parameter-free region gives one empty point.

    A region pinned by an equation only has its curated points.
    """
    if not region.parameters:
        return [{}]
    if _pinned(region):
        return [dict(p) for p in region.samples]
    return cat.sample_points(region, n)


def _skip(name, reason):
    return CheckResult(name, "skipped", {"reason": reason})


def _result(name, failures, detail=None, samples=()):
    failures = list(failures)
    return CheckResult(
        name,
        "fail" if failures else "pass",
        detail or {},
        failures[:MAX_WITNESSES],
        [_pt(p) for p in samples if p],
    )


def _subs_form(form, point):
    return form.subs(point) if point else form


# ---------------------------------------------------------------------------
# the checks
# ---------------------------------------------------------------------------

def check_axioms(entry, n):
    L = entry.algebra(check=False)
    fails = []
    for rep in (check_anticommutativity(L), check_jacobi(L)):
        fails += [{"axiom": rep.name, **w} for w in rep.failures]
    detail = {"parameters": sorted(L.parameters()), "symbolic": True}
    pts = []
    if L.is_parametric():
        pts = _points(entry.region, n)
        for p in pts:
            rep = check_jacobi(L.subs(p))
            fails += [{"axiom": "jacobi", "point": _pt(p), **w} for w in rep.failures]
    return _result("jacobi", fails, detail, pts)


def _form_failures(L, form, where):
    fails = []
    parts = form.parts() if isinstance(form, NHForm) else (form,)
    for part in parts:
        if not is_antisymmetric(part):
            fails.append({**where, "property": "anti-symmetric", "parity": int(part.parity)})
        for w in closed_failures(L, part):
            fails.append({**where, "property": "closed", **{k: str(v) if not isinstance(v, (list, dict)) else v
                                                             for k, v in w.items()}})
    return fails


def check_forms(entry, n):
    forms = [(c, k, f) for c in entry.cases for k, f in enumerate(c.forms)]
    if not forms:
        return _skip("forms", "no closed form listed")
    L = entry.algebra(check=False)
    space = entry.space()
    fails, details, used = [], [], []
    for case, k, spec in forms:
        where = {"item": case.item, "form": k}
        omega = spec.build(space)
        det = form_determinant(omega)
        info = {"item": case.item, "form": k, "parity": spec.parity, "det": str(det)}
        if not _pinned(spec.region):
            fails += _form_failures(L, omega, where)
            if det.is_zero():
                fails.append({**where, "property": "non-degenerate", "det": "0"})
        pts = _points(spec.region, n)
        for p in pts:
            used.append(p)
            Lp, wp = L.subs(p), _subs_form(omega, p)
            if L.is_parametric() or _pinned(spec.region):
                fails += [{**w, "point": _pt(p)} for w in _form_failures(Lp, wp, where)]
            dp = form_determinant(wp)
            if dp.is_zero():
                fails.append({**where, "property": "non-degenerate", "point": _pt(p)})
            elif spec.parity != "nh" and not check_superdim_constraints(wp):
                fails.append({**where, "property": "superdimension", "point": _pt(p)})
        details.append(info)
    return _result("forms", fails, {"forms": details}, used)


def check_classification(entry, n):
    L = entry.algebra(check=False)
    fails, detail, used = [], [], []
    for case in entry.cases:
        pts = _points(case.region, n)
        verdicts = []
        for p in pts:
            used.append(p)
            res = classify_at_point(L.subs(p) if p else L)
            verdicts.append(res["verdict"])
            if res["verdict"] != case.verdict:
                fails.append({"item": case.item, "point": _pt(p), "expected": case.verdict,
                              "computed": res["verdict"], "dim_even": res["dim_even"], "dim_odd": res["dim_odd"]})
        detail.append({"item": case.item, "category": case.category, "expected": case.verdict,
                       "computed": sorted(set(verdicts))})
    return _result("qf-classify", fails, {"cases": detail}, used)


def _extension_points(case, n):
    return _points(case.region, n) if _pinned(case.region) else [{}]


def build_extension(ext_spec, point=None):
    """Construct the extension described by a catalog block, optionally at a point."""
    h = ext_spec.base_algebra()
    nabla = ext_spec.connection_object()
    cocycle = ext_spec.cocycle_object()
    if point:
        h = h.subs(point)
        from .extension import Connection

        nabla = Connection(h, [[[x.subs(point) for x in r] for r in m] for m in nabla.gamma])
    build = t_star_extend if ext_spec.kind == "t-star" else pi_t_star_extend
    return h, nabla, cocycle, build(h, nabla, cocycle, check=False)


def _iso(entry, case, ext_spec, ext, point):
    space = entry.space()
    L = entry.algebra(check=False)
    omega = case.forms[ext_spec.form].build(space)
    if point:
        L, omega = L.subs(point), omega.subs(point)
    pairs = [(ext.space.basis_vector(r), list(ext_spec.identification[r])) for r in range(ext.space.dim)]
    f = map_from_pairs(ext.space, space, pairs)
    rep = verify_iso(f, ext.algebra, L, forms=(ext.form, omega))
    factor = rep.detail.get("form_factor")
    fails = list(rep.failures)
    if factor in (None, "0"):
        fails.append({"property": "form-factor", "factor": factor})
    ideal = cat.subspace(space, ext_spec.ideal)
    comp = cat.subspace(space, ext_spec.complement)
    if not is_lagrangian_ideal(L, ideal, omega):
        fails.append({"property": "catalog-ideal-lagrangian"})
    if orthogonal_complement(comp, omega) != comp:
        fails.append({"property": "catalog-complement-lagrangian"})
    return fails, factor


def check_extensions(entry, n):
    exts = entry.extensions
    if not exts:
        return _skip("extension", "no extension block")
    fails, detail, used = [], [], []
    for case, ext_spec in exts:
        for p in _extension_points(case, n):
            used.append(p)
            h, nabla, cocycle, ext = build_extension(ext_spec, p)
            where = {"item": case.item, "kind": ext_spec.kind}
            if p:
                where["point"] = _pt(p)
            reps = [torsion_report(nabla), curvature_report(nabla), cocycle_condition(cocycle, h, nabla),
                    extension_report(ext)]
            for rep in reps:
                fails += [{**where, "check": rep.name, **w} if isinstance(w, dict) else {**where, "witness": w}
                          for w in rep.failures]
            iso_fails, factor = _iso(entry, case, ext_spec, ext, p)
            fails += [{**where, "check": "isomorphism", **w} for w in iso_fails]
            detail.append({**where, "form_factor": factor, "form_parity": int(ext.form.parity)})
    return _result("extension", fails, {"extensions": detail}, used)


def check_roundtrip(entry, n):
    """Entry JSON round trip, plus the converse construction for every extension."""
    fails = []
    again = cat.loads(cat.serialize(cat.Catalog(["p", "q", "lambda", "gamma", "mu", "nu", "delta"], [entry])))
    if again.get(entry.id).as_json() != entry.as_json():
        fails.append({"property": "entry-json"})
    detail = {"entry_json": not fails, "converse": []}
    used = []
    for case, ext_spec in entry.extensions:
        for p in _extension_points(case, n):
            used.append(p)
            h, nabla, _, ext = build_extension(ext_spec, p)
            h2, nabla2 = quotient_flat_connection(
                ext.algebra, ext.form, ext.dual_ideal, ext.base_complement,
                labels=h.space.labels, a_rows=ext.dual_ideal.rows, n_rows=ext.base_complement.rows,
            )
            same_h = h2.c == h.c
            same_nabla = nabla2.gamma == nabla.gamma
            if not (same_h and same_nabla):
                fails.append({"item": case.item, "kind": ext_spec.kind, "algebra": same_h, "connection": same_nabla})
            detail["converse"].append({"item": case.item, "kind": ext_spec.kind, "algebra": same_h,
                                       "connection": same_nabla})
    return _result("roundtrip", fails, detail, used)


def check_certificates(entry, n):
    certs = [c for c in entry.cases if c.certificate]
    if not certs:
        return _skip("lagrangian-cert", "no Lagrangian non-existence certificate")
    L = entry.algebra(check=False)
    space = entry.space()
    fails, detail, used = [], [], []
    for case in certs:
        omega = case.forms[0].build(space)
        algebra_params = L.parameters()
        form_only = tuple(sorted(set(case.forms[0].region.parameters) - algebra_params))
        pts = _points(entry.region, n) if algebra_params else [{}]
        for p in pts:
            used.append(p)
            Lp = L.subs(p) if p else L
            wp = omega.subs(p) if p else omega
            res = replay_no_lagrangian_proof(case.certificate, Lp, wp, nonzero_params=form_only,
                                             assignment={k: Fraction(v) for k, v in p.items()} or None)
            info = {"item": case.item, "certificate": case.certificate, "ok": res["ok"],
                    "steps": len(res["steps"]), "expansions": len(res["expansions"])}
            if p:
                info["point"] = _pt(p)
            detail.append(info)
            if not res["ok"]:
                bad = [e for e in res["expansions"] if not e["ok"]]
                fails.append({**info, "error": res["error"], "expansions_failed": bad[:3]})
    return _result("lagrangian-cert", fails, {"replays": detail}, used)


def _lsa_report(entry, block):
    space = entry.space()
    L = entry.algebra(check=False)
    P = block.table(space)
    out = {"kind": block.kind, "free": list(block.free)}
    fails = []
    if block.kind == "bn":
        bn = is_balinsky_novikov(P)
        comp = compatibility(bn_induced_bracket(P), L)
        out.update(balinsky_novikov=bn.ok, compatible=comp.ok)
        fails += [{"kind": "bn", "axiom": "bn", **w} for w in bn.failures]
        fails += [{"kind": "bn", "axiom": "compatibility", **w} for w in comp.failures]
        return out, fails
    ls = is_left_symmetric(P)
    nov = is_novikov(P)
    comp = compatibility(induced_bracket(P), L)
    out.update(left_symmetric=ls.ok, novikov=nov.ok, compatible=comp.ok)
    fails += [{"kind": block.kind, "axiom": "left-symmetric", **w} for w in ls.failures]
    fails += [{"kind": block.kind, "axiom": "compatibility", **w} for w in comp.failures]
    if block.kind == "novikov":
        fails += [{"kind": "novikov", "axiom": "novikov", **w} for w in nov.failures]
    else:
        # a table listed only as left-symmetric is expected to fail the Novikov law
        out["novikov_witnesses"] = [w for w in nov.failures if isinstance(w, dict)][:MAX_WITNESSES]
        if nov.ok:
            fails.append({"kind": "lssa", "axiom": "novikov", "expected": "fail", "computed": "pass"})
    return out, fails


def check_lsa(entry, n, kinds=("novikov", "lssa"), name="lsa"):
    blocks = [b for b in entry.lsa if b.kind in kinds]
    if not blocks:
        return _skip(name, f"no {'/'.join(kinds)} table")
    fails, detail = [], []
    for b in blocks:
        info, f = _lsa_report(entry, b)
        detail.append(info)
        fails += f
    return _result(name, fails, {"tables": detail})


def check_bn(entry, n):
    return check_lsa(entry, n, kinds=("bn",), name="bn")


def check_obstruction(entry, n):
    if entry.id not in CERTIFIED_ENTRIES:
        return _skip("novikov-obstruction", "no Novikov non-existence claim")
    L = entry.algebra(check=False)
    fails = []
    rep = novikov_obstruction_replay(entry.id, L)
    try:
        novikov_obstruction_replay(entry.id, L, strict=True)
        strict = {"ok": True}
    except StepNotImplied as exc:
        strict = {"ok": False, "first_gap": str(exc)}
    groebner = groebner_nonexistence(L)
    if not groebner:
        fails.append({"property": "groebner", "basis": "not {1}"})
    if rep.get("displayed_compatibility_matches") is False:
        fails.append({"property": "displayed-compatibility"})
    detail = {
        "terminal": rep["terminal"],
        "steps": rep["steps"],
        "all_implied": rep["all_implied"],
        "strict": strict,
        "groebner_basis_is_one": groebner,
    }
    if "displayed_compatibility_matches" in rep:
        detail["displayed_compatibility_matches"] = rep["displayed_compatibility_matches"]
    return _result("novikov-obstruction", fails, detail)


RUNNERS = {
    "jacobi": check_axioms,
    "forms": check_forms,
    "qf-classify": check_classification,
    "extension": check_extensions,
    "roundtrip": check_roundtrip,
    "lagrangian-cert": check_certificates,
    "lsa": check_lsa,
    "bn": check_bn,
    "novikov-obstruction": check_obstruction,
}


def run_check(entry, name, n=DEFAULT_SAMPLES) -> CheckResult:
    t0 = time.perf_counter()
    try:
        res = RUNNERS[name](entry, n)
    except (ExtensionPreconditionFailed, cat.RegionExhausted, ArithmeticError, ValueError) as exc:
        res = CheckResult(name, "fail", {"error": f"{type(exc).__name__}: {exc}"})
    res.elapsed = time.perf_counter() - t0
    return res


def verify_entry(entry, checks=CHECKS, n=DEFAULT_SAMPLES) -> dict:
    return {name: run_check(entry, name, n) for name in checks}


# process-pool plumbing: each worker parses the catalog text once
_WORKER_CATALOG = None


def _init_worker(text):
    global _WORKER_CATALOG
    _WORKER_CATALOG = cat.loads(text)


def _work(args):
    entry_id, checks, n = args
    return entry_id, verify_entry(_WORKER_CATALOG.get(entry_id), checks, n)


def run(plan: VerificationPlan, catalog) -> Report:
    for i in plan.entries:
        catalog.get(i)  # raises UnknownEntryId before any work starts
    wanted = set(plan.entries)
    # catalog order, whatever order the entries were requested in
    ids = [i for i in catalog.ids() if not wanted or i in wanted]
    entries = [catalog.get(i) for i in ids]
    results = {}
    if plan.jobs > 1 and len(entries) > 1:
        text = cat.serialize(catalog)
        with ProcessPoolExecutor(max_workers=plan.jobs, initializer=_init_worker, initargs=(text,)) as pool:
            for eid, res in pool.map(_work, [(e.id, plan.checks, plan.samples) for e in entries]):
                results[eid] = res
    else:
        for e in entries:
            results[e.id] = verify_entry(e, plan.checks, plan.samples)
    return Report({eid: results[eid] for eid in ids})
