"""Machine-readable catalog of the 4-dimensional Lie superalgebras.

The catalog file is UTF-8 JSON with top-level keys ``schema_version``,
``parameters`` and ``entries``.  Scalars are strings in the scalar grammar.
Loading validates every structural invariant; :func:`serialize` writes the
canonical form, so ``serialize(load_catalog(x))`` is byte-stable.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from itertools import count, product

from .lie import LieSuperStructure
from .lsa import ProductTable
from .scalar import PARAMETERS, PoleAtSamplePoint, Scalar, ScalarError, UnboundParameter, evaluate, parse_scalar
from .superspace import (
    Parity,
    SubSpace,
    SuperSpace,
    nh_wedge_form,
    wedge_form,
)

SCHEMA_VERSION = "1"
ENV_VAR = "SUPERQF_CATALOG"
RELATIONS = ("!=", ">", "<", ">=", "<=", "=")
VERDICTS = ("even", "odd", "both", "NH-only", "none")
CATEGORIES = ("constructive", "not-qf", "nh", "no-lagrangian")
LSA_KINDS = ("novikov", "lssa", "bn")
EXTENSION_KINDS = ("t-star", "pi-t-star")
COCYCLE_KINDS = ("even-alpha", "odd-beta")

# basis layout per table: parities of e1..e4
TABLE_PARITIES = {
    1: (0, 0, 1, 1),
    2: (0, 0, 1, 1),
    3: (0, 0, 0, 1),
    4: (0, 1, 1, 1),
    5: (0, 0, 0, 1),
    6: (0, 1, 1, 1),
}
LABELS = ("e1", "e2", "e3", "e4")


class CatalogError(ValueError):
    pass


class ParseError(CatalogError):
    def __init__(self, message, line=None, field=None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field:
            where.append(f"field {field}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)
        self.line = line
        self.field = field


class SchemaViolation(CatalogError):
    def __init__(self, invariant, where=""):
        super().__init__(f"{where}: {invariant}" if where else invariant)
        self.invariant = invariant
        self.where = where


class RegionExhausted(CatalogError):
    pass


class UnknownEntryId(CatalogError, KeyError):
    def __str__(self):
        return f"unknown catalog entry {self.args[0]!r}"


# ---------------------------------------------------------------------------
# parameter regions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Constraint:
    poly: Scalar
    rel: str

    def holds(self, point) -> bool:
        try:
            c = evaluate(self.poly, point)
        except UnboundParameter:
            raise SchemaViolation(f"constraint {self.poly} {self.rel} 0 has unassigned parameters") from None
        except PoleAtSamplePoint:
            return False
        return {
            "!=": c != 0, ">": c > 0, "<": c < 0, ">=": c >= 0, "<=": c <= 0, "=": c == 0,
        }[self.rel]

    def as_json(self):
        return {"poly": str(self.poly), "rel": self.rel}


@dataclass
class ParamRegion:
    parameters: tuple = ()
    constraints: tuple = ()
    samples: tuple = ()

    def contains(self, point) -> bool:
        return all(c.holds(point) for c in self.constraints)

    @property
    def is_parametric(self) -> bool:
        return bool(self.parameters)

    def as_json(self):
        return {
            "parameters": list(self.parameters),
            "constraints": [c.as_json() for c in self.constraints],
            "samples": [{k: _frac_str(pt[k]) for k in self.parameters} for pt in self.samples],
        }


def _frac_str(x) -> str:
    return str(Fraction(x))


def _rationals():
    """0, 1, -1, 1/2, -1/2, 2, -2, ... : signed Calkin-Wilf order."""
    yield Fraction(0)
    a = Fraction(1)
    while True:
        yield a
        yield -a
        a = 1 / (2 * Fraction(int(a)) - a + 1)


def _tuples(k):
    """Index k-tuples in shells of increasing maximum entry."""
    for m in count():
        # the first coordinate equal to m sits at position p
        for p in range(k):
            for head in product(range(m), repeat=p):
                for tail in product(range(m + 1), repeat=k - p - 1):
                    yield head + (m,) + tail


def sample_points(region: ParamRegion, n: int, search_limit: int = 20000) -> list:
    """``n`` points of the region: curated samples first, then enumerated ones."""
    if n < 1:
        raise ValueError("need at least one sample point")
    if not region.parameters:
        return [{}]
    out = [dict(pt) for pt in region.samples[:n]]
    if len(out) >= n:
        return out
    seen = {tuple(pt[k] for k in region.parameters) for pt in out}
    vals = []
    gen = _rationals()
    names = region.parameters
    for tried, idx in enumerate(_tuples(len(names))):
        if tried >= search_limit:
            break
        while len(vals) <= max(idx):
            vals.append(next(gen))
        key = tuple(vals[i] for i in idx)
        if key in seen:
            continue
        pt = dict(zip(names, key))
        if region.contains(pt):
            seen.add(key)
            out.append(pt)
            if len(out) >= n:
                return out
    raise RegionExhausted(f"found only {len(out)} of {n} points in the region")


# ---------------------------------------------------------------------------
# entry components
# ---------------------------------------------------------------------------

@dataclass
class FormSpec:
    parity: str  # "0", "1" or "nh"
    terms: list  # (Scalar, label, label)
    region: ParamRegion

    def build(self, space: SuperSpace):
        t = [(c, i, j) for c, i, j in self.terms]
        if self.parity == "nh":
            return nh_wedge_form(t, space)
        return wedge_form(t, space, Parity(int(self.parity)))

    def as_json(self):
        return {
            "parity": self.parity,
            "terms": [{"coeff": str(c), "i": i, "j": j} for c, i, j in self.terms],
            "region": self.region.as_json(),
        }


@dataclass
class ExtensionSpec:
    kind: str
    form: int
    base_labels: tuple
    base_parities: tuple
    base_brackets: dict
    connection: list  # (i, j, k, Scalar)
    cocycle_kind: str
    cocycle_terms: list  # ({module-label: Scalar}, [(Scalar, i, j)])
    identification: list  # rows: catalog coordinates of each extension basis vector
    ideal: list
    complement: list

    def base_space(self) -> SuperSpace:
        return SuperSpace(tuple(self.base_labels), tuple(self.base_parities))

    def base_algebra(self) -> LieSuperStructure:
        return LieSuperStructure.from_brackets(self.base_space(), self.base_brackets)

    def connection_object(self):
        from .extension import Connection

        h = self.base_algebra()
        terms = {}
        for i, j, k, c in self.connection:
            terms.setdefault((i, j), {})[k] = c
        return Connection.from_terms(h, terms)

    def cocycle_object(self):
        from .extension import ModuleCocycle

        target = "dual" if self.kind == "t-star" else "pi-dual"
        if not self.cocycle_terms:
            return ModuleCocycle.zero(len(self.base_labels), target)
        terms = [(dict(v), [(c, i, j) for c, i, j in f]) for v, f in self.cocycle_terms]
        return ModuleCocycle.from_terms(self.base_space(), terms, target)

    def as_json(self):
        return {
            "kind": self.kind,
            "form": self.form,
            "base_basis": {"labels": list(self.base_labels), "parities": list(self.base_parities)},
            "base_brackets": _brackets_json(self.base_brackets),
            "connection": [{"i": i, "j": j, "k": k, "coeff": str(c)} for i, j, k, c in self.connection],
            "cocycle": {
                "kind": self.cocycle_kind,
                "terms": [
                    {"value": {k: str(v) for k, v in val.items()},
                     "form": [{"coeff": str(c), "i": i, "j": j} for c, i, j in f]}
                    for val, f in self.cocycle_terms
                ],
            },
            "identification": [[str(x) for x in r] for r in self.identification],
            "ideal": [[str(x) for x in r] for r in self.ideal],
            "complement": [[str(x) for x in r] for r in self.complement],
        }


@dataclass
class LSABlock:
    kind: str
    products: dict  # (i, j) -> {k: Scalar}
    free: tuple

    def table(self, space: SuperSpace) -> ProductTable:
        return ProductTable.from_products(space, self.products)

    def as_json(self):
        return {
            "kind": self.kind,
            "free": list(self.free),
            "products": [
                {"i": i, "j": j, "result": {k: str(v) for k, v in rhs.items()}}
                for (i, j), rhs in self.products.items()
            ],
        }


@dataclass
class Case:
    item: int
    category: str
    verdict: str
    region: ParamRegion
    forms: list = field(default_factory=list)
    extensions: list = field(default_factory=list)
    certificate: str | None = None

    def as_json(self):
        return {
            "item": self.item,
            "category": self.category,
            "verdict": self.verdict,
            "region": self.region.as_json(),
            "forms": [f.as_json() for f in self.forms],
            "extensions": [e.as_json() for e in self.extensions],
            "no_lagrangian_certificate": self.certificate,
        }


@dataclass
class CatalogEntry:
    id: str
    name: str
    table: int
    parities: tuple
    brackets: dict
    region: ParamRegion
    cases: list
    lsa: list = field(default_factory=list)

    @property
    def sdim(self):
        odd = sum(int(p) for p in self.parities)
        return (len(self.parities) - odd, odd)

    def space(self) -> SuperSpace:
        return SuperSpace(LABELS, tuple(self.parities))

    def algebra(self, check=True) -> LieSuperStructure:
        return LieSuperStructure.from_brackets(self.space(), self.brackets, check=check)

    @property
    def forms(self):
        return [f for c in self.cases for f in c.forms]

    @property
    def extensions(self):
        return [(c, e) for c in self.cases for e in c.extensions]

    @property
    def verdict(self):
        vs = {c.verdict for c in self.cases}
        return vs.pop() if len(vs) == 1 else "mixed"

    def as_json(self):
        return {
            "id": self.id,
            "name": self.name,
            "table": self.table,
            "sdim": list(self.sdim),
            "brackets": _brackets_json(self.brackets),
            "region": self.region.as_json(),
            "cases": [c.as_json() for c in self.cases],
            "lsa": [b.as_json() for b in self.lsa],
        }


def _brackets_json(brackets):
    return [
        {"i": i, "j": j, "rhs": {k: str(v) for k, v in rhs.items()}}
        for (i, j), rhs in brackets.items()
    ]


@dataclass
class Catalog:
    parameters: tuple
    entries: list
    schema_version: str = SCHEMA_VERSION

    def __post_init__(self):
        self._index = {e.id: e for e in self.entries}

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __contains__(self, entry_id):
        return entry_id in self._index

    def get(self, entry_id) -> CatalogEntry:
        try:
            return self._index[entry_id]
        except KeyError:
            raise UnknownEntryId(entry_id) from None

    def ids(self):
        return [e.id for e in self.entries]

    def table_counts(self):
        return tuple(sum(1 for e in self.entries if e.table == t) for t in range(1, 7))

    def as_json(self):
        return {
            "schema_version": self.schema_version,
            "parameters": list(self.parameters),
            "entries": [e.as_json() for e in self.entries],
        }


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

class _Reader:
    """Field access with path tracking for error messages."""

    def __init__(self, params):
        self.params = params

    def req(self, obj, key, path, kind=None):
        if not isinstance(obj, dict) or key not in obj:
            raise ParseError("missing required field", field=f"{path}.{key}")
        v = obj[key]
        if kind is not None and not isinstance(v, kind):
            raise ParseError(f"expected {getattr(kind, '__name__', kind)}", field=f"{path}.{key}")
        return v

    def scalar(self, text, path) -> Scalar:
        if not isinstance(text, str):
            raise ParseError("scalars must be strings", field=path)
        try:
            s = parse_scalar(text)
        except ScalarError as exc:
            raise ParseError(str(exc), field=path) from None
        unknown = s.parameters() - set(self.params)
        if unknown:
            raise SchemaViolation(f"undeclared parameters {sorted(unknown)}", path)
        return s

    def fraction(self, text, path) -> Fraction:
        try:
            return Fraction(text)
        except (TypeError, ValueError):
            raise ParseError("sample values must be rational strings", field=path) from None

    def label(self, lab, labels, path):
        if lab not in labels:
            raise SchemaViolation(f"unknown basis label {lab!r}", path)
        return lab

    def vector(self, obj, labels, path):
        if not isinstance(obj, dict):
            raise ParseError("expected a sparse vector object", field=path)
        return {self.label(k, labels, path): self.scalar(v, f"{path}.{k}") for k, v in obj.items()}

    def region(self, obj, path) -> ParamRegion:
        names = tuple(self.req(obj, "parameters", path, list))
        for n in names:
            if n not in self.params:
                raise SchemaViolation(f"undeclared parameter {n!r}", path)
        cons = []
        for k, c in enumerate(self.req(obj, "constraints", path, list)):
            p = f"{path}.constraints[{k}]"
            rel = self.req(c, "rel", p, str)
            if rel not in RELATIONS:
                raise SchemaViolation(f"unknown relation {rel!r}", p)
            poly = self.scalar(self.req(c, "poly", p, str), f"{p}.poly")
            if not poly.parameters() <= set(names):
                raise SchemaViolation("constraint uses parameters outside the region", p)
            cons.append(Constraint(poly, rel))
        samples = []
        for k, s in enumerate(self.req(obj, "samples", path, list)):
            p = f"{path}.samples[{k}]"
            if not isinstance(s, dict) or set(s) != set(names):
                raise SchemaViolation("sample must assign exactly the region parameters", p)
            samples.append({n: self.fraction(s[n], f"{p}.{n}") for n in names})
        region = ParamRegion(names, tuple(cons), tuple(samples))
        for k, s in enumerate(samples):
            if not region.contains(s):
                raise SchemaViolation("sample violates a region constraint", f"{path}.samples[{k}]")
        return region

    def brackets(self, items, labels, path):
        out = {}
        for k, b in enumerate(items):
            p = f"{path}[{k}]"
            i = self.label(self.req(b, "i", p, str), labels, p)
            j = self.label(self.req(b, "j", p, str), labels, p)
            if (i, j) in out:
                raise SchemaViolation(f"bracket [{i},{j}] listed twice", p)
            out[(i, j)] = self.vector(self.req(b, "rhs", p, dict), labels, f"{p}.rhs")
        return out

    def wedge_terms(self, items, labels, path):
        out = []
        for k, t in enumerate(items):
            p = f"{path}[{k}]"
            out.append((
                self.scalar(self.req(t, "coeff", p, str), f"{p}.coeff"),
                self.label(self.req(t, "i", p, str), labels, p),
                self.label(self.req(t, "j", p, str), labels, p),
            ))
        return out

    def rows(self, items, width, path):
        if not isinstance(items, list):
            raise ParseError("expected a list of rows", field=path)
        out = []
        for k, r in enumerate(items):
            if not isinstance(r, list) or len(r) != width:
                raise SchemaViolation(f"row must have {width} entries", f"{path}[{k}]")
            out.append([self.scalar(x, f"{path}[{k}]") for x in r])
        return out


def _parse_form(R: _Reader, obj, path, parities) -> FormSpec:
    parity = R.req(obj, "parity", path, str)
    if parity not in ("0", "1", "nh"):
        raise SchemaViolation(f"form parity must be 0, 1 or nh, got {parity!r}", path)
    terms = R.wedge_terms(R.req(obj, "terms", path, list), LABELS, f"{path}.terms")
    if parity != "nh":
        for c, i, j in terms:
            if (parities[LABELS.index(i)] + parities[LABELS.index(j)]) % 2 != int(parity):
                raise SchemaViolation(f"term {i}*^{j}* has the wrong parity", path)
    region = R.region(R.req(obj, "region", path, dict), f"{path}.region")
    return FormSpec(parity, terms, region)


def _parse_extension(R: _Reader, obj, path, nforms) -> ExtensionSpec:
    kind = R.req(obj, "kind", path, str)
    if kind not in EXTENSION_KINDS:
        raise SchemaViolation(f"unknown extension kind {kind!r}", path)
    form = R.req(obj, "form", path, int)
    if not 0 <= form < nforms:
        raise SchemaViolation("extension refers to a missing form", path)
    bb = R.req(obj, "base_basis", path, dict)
    labels = tuple(R.req(bb, "labels", f"{path}.base_basis", list))
    parities = tuple(R.req(bb, "parities", f"{path}.base_basis", list))
    if len(labels) != len(parities) or any(p not in (0, 1) for p in parities):
        raise SchemaViolation("base basis labels and parities disagree", path)
    brackets = R.brackets(R.req(obj, "base_brackets", path, list), labels, f"{path}.base_brackets")
    conn = []
    for k, t in enumerate(R.req(obj, "connection", path, list)):
        p = f"{path}.connection[{k}]"
        conn.append((
            R.label(R.req(t, "i", p, str), labels, p),
            R.label(R.req(t, "j", p, str), labels, p),
            R.label(R.req(t, "k", p, str), labels, p),
            R.scalar(R.req(t, "coeff", p, str), f"{p}.coeff"),
        ))
    coc = R.req(obj, "cocycle", path, dict)
    ckind = R.req(coc, "kind", f"{path}.cocycle", str)
    expected = "even-alpha" if kind == "t-star" else "odd-beta"
    if ckind != expected:
        raise SchemaViolation(f"cocycle kind {ckind!r} does not match extension kind", path)
    module = [f"{x}*" for x in labels] if kind == "t-star" else [f"Pi({x}*)" for x in labels]
    cterms = []
    for k, t in enumerate(R.req(coc, "terms", f"{path}.cocycle", list)):
        p = f"{path}.cocycle.terms[{k}]"
        val = R.vector(R.req(t, "value", p, dict), module, f"{p}.value")
        cterms.append((val, R.wedge_terms(R.req(t, "form", p, list), labels, f"{p}.form")))
    n = 2 * len(labels)
    ident = R.rows(R.req(obj, "identification", path, list), len(LABELS), f"{path}.identification")
    if len(ident) != n:
        raise SchemaViolation("identification needs one row per extension basis vector", path)
    ideal = R.rows(R.req(obj, "ideal", path, list), len(LABELS), f"{path}.ideal")
    comp = R.rows(R.req(obj, "complement", path, list), len(LABELS), f"{path}.complement")
    return ExtensionSpec(kind, form, labels, parities, brackets, conn, ckind, cterms, ident, ideal, comp)


def _parse_case(R: _Reader, obj, path, parities) -> Case:
    item = R.req(obj, "item", path, int)
    category = R.req(obj, "category", path, str)
    if category not in CATEGORIES:
        raise SchemaViolation(f"unknown category {category!r}", path)
    verdict = R.req(obj, "verdict", path, str)
    if verdict not in VERDICTS:
        raise SchemaViolation(f"unknown verdict {verdict!r}", path)
    region = R.region(R.req(obj, "region", path, dict), f"{path}.region")
    forms = [_parse_form(R, f, f"{path}.forms[{k}]", parities)
             for k, f in enumerate(R.req(obj, "forms", path, list))]
    exts = [_parse_extension(R, e, f"{path}.extensions[{k}]", len(forms))
            for k, e in enumerate(R.req(obj, "extensions", path, list))]
    cert = obj.get("no_lagrangian_certificate")
    if cert is not None and not isinstance(cert, str):
        raise ParseError("certificate id must be a string", field=f"{path}.no_lagrangian_certificate")
    case = Case(item, category, verdict, region, forms, exts, cert)
    _check_case(case, path)
    return case


def _check_case(case: Case, path):
    if (case.verdict == "none") != (not case.forms):
        raise SchemaViolation("forms must be present iff the verdict is not none", path)
    parities = {f.parity for f in case.forms}
    if case.verdict == "NH-only" and parities != {"nh"}:
        raise SchemaViolation("NH-only verdict needs non-homogeneous forms only", path)
    wanted = {"even": {"0"}, "odd": {"1"}, "both": {"0", "1"}}.get(case.verdict)
    if wanted is not None and parities != wanted:
        raise SchemaViolation(f"verdict {case.verdict} disagrees with form parities", path)
    rules = {
        "constructive": lambda c: bool(c.extensions) and c.verdict in ("even", "odd", "both"),
        "no-lagrangian": lambda c: c.certificate is not None and not c.extensions,
        "not-qf": lambda c: c.verdict == "none",
        "nh": lambda c: c.verdict == "NH-only",
    }
    if not rules[case.category](case):
        raise SchemaViolation(f"category {case.category} is inconsistent with the case data", path)


def _parse_lsa(R: _Reader, obj, path) -> LSABlock:
    kind = R.req(obj, "kind", path, str)
    if kind not in LSA_KINDS:
        raise SchemaViolation(f"unknown product kind {kind!r}", path)
    free = tuple(R.req(obj, "free", path, list))
    for f in free:
        if f not in R.params:
            raise SchemaViolation(f"undeclared parameter {f!r}", path)
    prods = {}
    for k, t in enumerate(R.req(obj, "products", path, list)):
        p = f"{path}.products[{k}]"
        i = R.label(R.req(t, "i", p, str), LABELS, p)
        j = R.label(R.req(t, "j", p, str), LABELS, p)
        if (i, j) in prods:
            raise SchemaViolation(f"product {i}.{j} listed twice", p)
        prods[(i, j)] = R.vector(R.req(t, "result", p, dict), LABELS, f"{p}.result")
    return LSABlock(kind, prods, free)


def _parse_entry(R: _Reader, obj, path) -> CatalogEntry:
    eid = R.req(obj, "id", path, str)
    path = f"entries[{eid}]"
    table = R.req(obj, "table", path, int)
    if table not in TABLE_PARITIES:
        raise SchemaViolation("table must be 1..6", path)
    parities = TABLE_PARITIES[table]
    sdim = R.req(obj, "sdim", path, list)
    if tuple(sdim) != (parities.count(0), parities.count(1)):
        raise SchemaViolation("sdim does not match the table's basis layout", path)
    brackets = R.brackets(R.req(obj, "brackets", path, list), LABELS, f"{path}.brackets")
    region = R.region(R.req(obj, "region", path, dict), f"{path}.region")
    if region.is_parametric and len(region.samples) < 3:
        raise SchemaViolation("parametric entries need at least 3 samples", path)
    cases = [_parse_case(R, c, f"{path}.cases[{k}]", parities)
             for k, c in enumerate(R.req(obj, "cases", path, list))]
    if not cases:
        raise SchemaViolation("entry has no cases", path)
    lsa = [_parse_lsa(R, b, f"{path}.lsa[{k}]") for k, b in enumerate(R.req(obj, "lsa", path, list))]
    entry = CatalogEntry(eid, R.req(obj, "name", path, str), table, parities, brackets, region, cases, lsa)
    try:
        entry.algebra()
    except (ValueError, KeyError) as exc:
        raise SchemaViolation(f"brackets are inconsistent: {exc}", path) from None
    return entry


def loads(text: str) -> Catalog:
    if not text.strip():
        raise ParseError("empty catalog", line=1)
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno) from None
    R = _Reader(PARAMETERS)
    if not isinstance(raw, dict):
        raise ParseError("top level must be an object", line=1)
    version = R.req(raw, "schema_version", "", str)
    if version != SCHEMA_VERSION:
        raise SchemaViolation(f"schema version must be {SCHEMA_VERSION!r}, got {version!r}")
    params = tuple(R.req(raw, "parameters", "", list))
    if not set(params) <= set(PARAMETERS):
        raise SchemaViolation(f"parameters must be drawn from {PARAMETERS}")
    R.params = params
    entries = [_parse_entry(R, e, f"entries[{k}]") for k, e in enumerate(R.req(raw, "entries", "", list))]
    ids = [e.id for e in entries]
    dup = {i for i in ids if ids.count(i) > 1}
    if dup:
        raise SchemaViolation(f"duplicate entry ids {sorted(dup)}")
    return Catalog(params, entries, version)


def load_catalog(source) -> Catalog:
    """Load from bytes, text, a binary/text stream or a path."""
    if isinstance(source, (bytes, bytearray)):
        data = bytes(source)
    elif isinstance(source, str):
        data = source.encode("utf-8")
    elif isinstance(source, os.PathLike):
        with open(source, "rb") as fh:
            data = fh.read()
    else:
        data = source.read()
        if isinstance(data, str):
            data = data.encode("utf-8")
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError(f"catalog is not UTF-8: {exc.reason}") from None
    return loads(text)


def serialize(catalog: Catalog) -> str:
    return json.dumps(catalog.as_json(), indent=1, ensure_ascii=False) + "\n"


def normalize(text: str) -> str:
    """Canonical text of a catalog document."""
    return serialize(loads(text))


def default_catalog_path():
    override = os.environ.get(ENV_VAR)
    if override:
        return override
    return resources.files("superqf").joinpath("data/catalog.json")


def load_default() -> Catalog:
    path = default_catalog_path()
    if isinstance(path, str):
        with open(path, "rb") as fh:
            return load_catalog(fh)
    return load_catalog(path.read_bytes())


# ---------------------------------------------------------------------------
# helpers for building objects from entries
# ---------------------------------------------------------------------------

def subspace(space: SuperSpace, rows) -> SubSpace:
    return SubSpace(space, [list(r) for r in rows])


def merged_point(*points):
    out = {}
    for p in points:
        out.update(p)
    return out


def ext_space_labels(ext: ExtensionSpec):
    if ext.kind == "t-star":
        return tuple(ext.base_labels) + tuple(f"{x}*" for x in ext.base_labels)
    return tuple(ext.base_labels) + tuple(f"Pi({x}*)" for x in ext.base_labels)


def ext_space_parities(ext: ExtensionSpec):
    shift = 0 if ext.kind == "t-star" else 1
    return tuple(ext.base_parities) + tuple((p + shift) % 2 for p in ext.base_parities)
