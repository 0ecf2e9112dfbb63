from __future__ import annotations

import io
import json
from collections import Counter
from fractions import Fraction

import pytest

from superqf import catalog as cat
from superqf.lie import check_jacobi


def _doc(catalog):
    return json.loads(cat.serialize(catalog))


def _one_entry_doc(catalog, eid="D6"):
    doc = _doc(catalog)
    doc["entries"] = [e for e in doc["entries"] if e["id"] == eid]
    return doc


def test_shipped_catalog_shape(catalog):
    assert len(catalog) == 48
    assert Counter(e.table for e in catalog) == {1: 10, 2: 17, 3: 4, 4: 10, 5: 5, 6: 2}
    assert sorted({c.item for e in catalog for c in e.cases}) == list(range(1, 49))
    assert len(set(catalog.ids())) == len(catalog)


def test_item_categories(catalog):
    cats = {}
    for e in catalog:
        for c in e.cases:
            cats.setdefault(c.item, set()).add(c.category)
    qf = [i for i, s in cats.items() if s & {"constructive", "no-lagrangian"}]
    assert len(qf) == 17
    assert sum("not-qf" in s for s in cats.values()) == 24
    assert sum("nh" in s for s in cats.values()) == 8


def test_serialization_is_canonical(catalog):
    text = cat.serialize(catalog)
    assert cat.normalize(text) == text
    assert cat.default_catalog_path().read_text(encoding="utf-8") == text
    again = cat.loads(text)
    assert [e.as_json() for e in again] == [e.as_json() for e in catalog]


@pytest.mark.parametrize("kind", ["bytes", "text", "stream", "path"])
def test_loader_sources(catalog, tmp_path, kind):
    text = cat.serialize(catalog)
    if kind == "bytes":
        src = text.encode()
    elif kind == "text":
        src = text
    elif kind == "stream":
        src = io.BytesIO(text.encode())
    else:
        src = tmp_path / "c.json"
        src.write_text(text, encoding="utf-8")
    assert cat.load_catalog(src).ids() == catalog.ids()


def test_environment_override(catalog, tmp_path, monkeypatch):
    p = tmp_path / "small.json"
    p.write_text(json.dumps(_one_entry_doc(catalog)), encoding="utf-8")
    monkeypatch.setenv("SUPERQF_CATALOG", str(p))
    assert cat.load_default().ids() == ["D6"]


def test_parse_error_carries_line():
    with pytest.raises(cat.ParseError) as exc:
        cat.loads('{\n "schema_version": "1",\n "parameters": [,\n}')
    assert exc.value.line == 3
    with pytest.raises(cat.ParseError):
        cat.loads("   ")
    with pytest.raises(cat.ParseError):
        cat.load_catalog(b"\xff\xfe")


def test_missing_field_names_path(catalog):
    doc = _one_entry_doc(catalog)
    del doc["entries"][0]["brackets"]
    with pytest.raises(cat.ParseError) as exc:
        cat.loads(json.dumps(doc))
    assert exc.value.field == "entries[D6].brackets"


@pytest.mark.parametrize(
    "mutate, invariant",
    [
        (lambda d: d.update(schema_version="2"), "schema version"),
        (lambda d: d["entries"].append(dict(d["entries"][0])), "duplicate entry ids"),
        (lambda d: d["entries"][0].update(sdim=[3, 1]), "sdim"),
        (lambda d: d["entries"][0]["brackets"].append(d["entries"][0]["brackets"][0]), "listed twice"),
        (lambda d: d["entries"][0]["brackets"][0].update(i="e9"), "unknown basis label"),
        (lambda d: d["entries"][0]["brackets"][0]["rhs"].update(e3="x"), "unknown parameter"),
        (lambda d: d["entries"][0]["cases"][0].update(verdict="even"), "verdict"),
        (lambda d: d["entries"][0].update(cases=[]), "no cases"),
    ],
)
def test_schema_violations(catalog, mutate, invariant):
    doc = _one_entry_doc(catalog)
    mutate(doc)
    with pytest.raises(cat.CatalogError, match=invariant):
        cat.loads(json.dumps(doc))


def test_parametric_entries_need_samples(catalog):
    doc = _one_entry_doc(catalog, "D10_q")
    doc["entries"][0]["region"]["samples"] = doc["entries"][0]["region"]["samples"][:2]
    with pytest.raises(cat.SchemaViolation, match="at least 3 samples"):
        cat.loads(json.dumps(doc))


def test_samples_must_lie_in_region(catalog):
    doc = _one_entry_doc(catalog, "D10_q")
    doc["entries"][0]["region"]["samples"][0] = {"q": "-1"}
    with pytest.raises(cat.SchemaViolation, match="violates"):
        cat.loads(json.dumps(doc))


def test_unknown_entry_id(catalog):
    with pytest.raises(cat.UnknownEntryId) as exc:
        catalog.get("D99")
    assert isinstance(exc.value, KeyError)
    assert "D99" in str(exc.value)


def test_sample_points_respect_region(catalog):
    region = catalog.get("D7_pq").region
    pts = cat.sample_points(region, 6)
    assert len(pts) == 6 and len({tuple(sorted(p.items())) for p in pts}) == 6
    assert all(region.contains(p) for p in pts)
    assert pts[:3] == [dict(s) for s in region.samples[:3]]
    assert cat.sample_points(region, 6) == pts  # deterministic


def test_sample_points_exhaustion():
    region = cat.ParamRegion(("q",), (cat.Constraint(cat.parse_scalar("q^2+1"), "<"),), ())
    with pytest.raises(cat.RegionExhausted):
        cat.sample_points(region, 1, search_limit=200)


def test_every_entry_satisfies_jacobi_at_its_samples(catalog):
    for e in catalog:
        L = e.algebra()
        for s in e.region.samples:
            assert check_jacobi(L.subs(s)).ok, (e.id, s)


def test_curated_samples_are_rational(catalog):
    for e in catalog:
        for s in e.region.samples:
            assert all(isinstance(v, Fraction) for v in s.values())
