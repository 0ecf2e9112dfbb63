from __future__ import annotations

import json
from importlib import resources

import jsonschema
import pytest

from superqf import catalog as cat
from superqf.verify import CHECKS, UnknownCheck, VerificationPlan, run, run_check, verify_entry


@pytest.fixture(scope="module")
def schema():
    return json.loads(resources.files("superqf").joinpath("data/report.schema.json").read_text())


@pytest.mark.parametrize(
    "kwargs, exc",
    [
        ({"checks": ("nope",)}, UnknownCheck),
        ({"samples": 0}, ValueError),
        ({"format": "xml"}, ValueError),
        ({"jobs": 0}, ValueError),
    ],
)
def test_plan_validation(kwargs, exc):
    with pytest.raises(exc):
        VerificationPlan(**kwargs)


def test_empty_check_list_means_all():
    assert VerificationPlan(checks=()).checks == CHECKS


def test_unknown_entry_fails_before_work(catalog):
    with pytest.raises(cat.UnknownEntryId):
        run(VerificationPlan(entries=("D6", "nope")), catalog)


def test_report_order_follows_catalog(catalog):
    rep = run(VerificationPlan(entries=("D6", "D5"), checks=("jacobi",)), catalog)
    assert list(rep.entries) == ["D5", "D6"]


def test_report_shape_and_schema(catalog, schema):
    rep = run(VerificationPlan(entries=("D6", "D10_0^1"), checks=("jacobi", "extension", "novikov-obstruction")),
              catalog)
    doc = rep.as_json()
    jsonschema.validate(doc, schema)
    assert "elapsed" not in json.dumps(doc)
    jsonschema.validate(rep.as_json(timings=True), schema)
    assert rep.status == "pass" and rep.exit_code == 0
    assert doc["counts"] == {"pass": 5, "fail": 0, "skipped": 1}


def test_failing_entry_sets_exit_code(catalog):
    rep = run(VerificationPlan(entries=("D9_pq",), checks=("qf-classify",)), catalog)
    assert rep.status == "fail" and rep.exit_code == 1
    (w,) = rep.entries["D9_pq"]["qf-classify"].witnesses
    assert w["point"] == {"p": "0", "q": "1"} and w["computed"] == "even"


def test_parallel_run_matches_serial(catalog):
    plan = dict(entries=("D5", "D6", "D10_q", "D2_q"), checks=("jacobi", "forms", "qf-classify", "lsa"))
    serial = run(VerificationPlan(**plan), catalog).as_json()
    parallel = run(VerificationPlan(**plan, jobs=2), catalog).as_json()
    assert json.dumps(serial) == json.dumps(parallel)


def test_checks_report_failures_instead_of_raising(catalog):
    # an empty region cannot be sampled: the check fails with the error recorded
    entry = catalog.get("D10_q")
    empty = cat.ParamRegion(("q",), (cat.Constraint(cat.parse_scalar("q^2+1"), "<"),), ())
    broken = cat.CatalogEntry(entry.id, entry.name, entry.table, entry.parities, entry.brackets,
                              empty, entry.cases, entry.lsa)
    res = run_check(broken, "jacobi")
    assert res.status == "fail"
    assert res.detail["error"].startswith("RegionExhausted")


def test_skips_are_explained(catalog):
    res = verify_entry(catalog.get("D1"), ("extension", "lagrangian-cert", "novikov-obstruction"))
    assert {r.status for r in res.values()} == {"skipped"}
    assert all(r.detail["reason"] for r in res.values())


def test_d10q_form_degenerates_exactly_at_minus_one(catalog):
    from superqf.superspace import form_determinant

    entry = catalog.get("D10_q")
    omega = entry.cases[0].forms[0].build(entry.space())
    det = form_determinant(omega)
    assert det.subs({"q": -1}).is_zero()
    assert all(not det.subs({"q": q}).is_zero() for q in (0, 1, -2, "1/2", "-1/2"))
    res = run_check(entry, "forms")
    assert res.status == "pass"
    assert res.detail["forms"][0]["det"] == str(det)
