"""Computed facts where the shipped classification data and the algebra disagree.

Each test freezes what exact computation gives, cross-checked against the
independent sympy oracle.  The catalog keeps the published data unchanged;
the verification suite reports these points as failures.
"""
from __future__ import annotations

import pytest

import oracle
from superqf.lie import classify_at_point, closed_failures
from superqf.scalar import parse_scalar
from superqf.superspace import BilForm
from superqf.verify import _points


def test_classifier_agrees_with_oracle_everywhere(catalog):
    checked = 0
    for entry in catalog:
        L = entry.algebra()
        for case in entry.cases:
            for p in _points(case.region, 3):
                res = classify_at_point(L.subs(p) if p else L)
                assert (res["verdict"], res["dim_even"], res["dim_odd"]) == oracle.verdict(entry, p), (entry.id, p)
                checked += 1
    assert checked >= 80


@pytest.mark.parametrize(
    "eid, point, listed, computed",
    [
        ("D9_pq", {"p": 0, "q": 1}, "none", "even"),
        ("D2_q", {"q": 1}, "none", "NH-only"),
        ("D14_pq", {"p": 1, "q": 0}, "none", "NH-only"),
        ("D2_-1", {}, "NH-only", "none"),
    ],
)
def test_verdict_disagreements(catalog, eid, point, listed, computed):
    entry = catalog.get(eid)
    assert entry.verdict == listed
    L = entry.algebra()
    assert classify_at_point(L.subs(point) if point else L)["verdict"] == computed
    assert oracle.verdict(entry, point)[0] == computed


def test_d2_minus1_listed_form_is_not_closed(catalog):
    entry = catalog.get("D2_-1")
    even, odd = entry.cases[0].forms[0].build(entry.space()).parts()
    assert closed_failures(entry.algebra(), even) == []
    fails = closed_failures(entry.algebra(), odd)
    assert {f["residual"] for f in fails} == {"-2*nu", "2*nu"}
    # the same form closes on D2_q at q = +1
    d2q = catalog.get("D2_q")
    _, odd_q = entry.cases[0].forms[0].build(d2q.space()).parts()
    assert closed_failures(d2q.algebra().subs({"q": 1}), odd_q) == []


def test_d3_self_term(catalog):
    entry = catalog.get("D3_-1/2,-1/2")
    L = entry.algebra()
    even, _ = entry.cases[0].forms[0].build(entry.space()).parts()
    assert even.value(3, 3) == parse_scalar("-lambda")
    assert {f["residual"] for f in closed_failures(L, even)} == {"3/2*lambda"}
    vals = even.values()
    vals[3][3] = parse_scalar("1/2*lambda")  # = w(e1, e2)
    assert closed_failures(L, BilForm.from_values(entry.space(), 0, vals)) == []


def test_second_d10_entry_copies_first_even_data(catalog):
    a, b = catalog.get("D10_0^1"), catalog.get("D10_0^2")
    even = lambda e: [f for c in e.cases for f in c.forms if f.parity == "0"][0]
    assert even(a).terms == even(b).terms
    assert closed_failures(a.algebra(), even(a).build(a.space())) == []
    assert closed_failures(b.algebra(), even(b).build(b.space())) != []


@pytest.mark.parametrize("p, verdict", [(2, "odd"), ("1/2", "odd"), (3, "odd"), ("-1/2", "odd"), (1, "both")])
def test_d7_boundary_row_q_minus_one(catalog, p, verdict):
    """D7_{p,-1} for -1 < p != 1 sits outside every table row yet admits an odd form."""
    entry = catalog.get("D7_pq")
    point = {"p": parse_scalar(str(p)).constant_value(), "q": -1}
    assert not entry.region.contains(point)
    assert classify_at_point(entry.algebra().subs(point))["verdict"] == verdict
    assert oracle.verdict(entry, point)[0] == verdict
