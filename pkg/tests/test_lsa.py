from __future__ import annotations

import pytest

from superqf.lsa import (
    ProductTable,
    bn_induced_bracket,
    compatibility,
    induced_bracket,
    is_balinsky_novikov,
    is_left_symmetric,
    is_novikov,
)
from superqf.scalar import Scalar
from superqf.superspace import MixedParityTerm, SuperSpace
from superqf.verify import check_bn, check_lsa

HALF = Scalar(1) / Scalar(2)


def test_non_left_symmetric_product_reports_defect():
    V = SuperSpace(("a", "b"), (0, 0))
    P = ProductTable.from_products(V, {("a", "b"): {"a": 1}})
    rep = is_left_symmetric(P)
    assert not rep.ok
    assert all("defect" in w for w in rep.failures)


def test_product_parity_enforced():
    V = SuperSpace(("a", "b"), (0, 1))
    with pytest.raises(MixedParityTerm):
        ProductTable.from_products(V, {("a", "a"): {"b": 1}})


def test_unit_line_is_novikov():
    V = SuperSpace(("a",), (0,))
    P = ProductTable.from_products(V, {("a", "a"): {"a": 1}})
    assert is_novikov(P).ok and is_balinsky_novikov(P).ok


def test_left_symmetric_but_not_novikov():
    # x.x = 2x, x.y = y: left-symmetric, but (x.x).y = 2y while (x.y).x = 0
    V = SuperSpace(("x", "y"), (0, 0))
    P = ProductTable.from_products(V, {("x", "x"): {"x": 2}, ("x", "y"): {"y": 1}})
    assert is_left_symmetric(P).ok
    nov = is_novikov(P)
    assert not nov.ok and nov.detail["left_symmetric"]


def test_bn_bracket_three_case_rule():
    V = SuperSpace(("x", "y"), (0, 1))
    P = ProductTable.from_products(V, {("x", "y"): {"y": 1}, ("y", "x"): {"y": 1}, ("y", "y"): {"x": 1}})
    B = bn_induced_bracket(P)
    assert B.c[0][1] == [Scalar(0), Scalar(1) - HALF]  # x.y - y.x/2
    assert B.c[1][0] == [Scalar(0), -(Scalar(1) - HALF)]
    assert B.c[1][1] == [Scalar(1), Scalar(0)]  # odd-odd: the product itself
    L = induced_bracket(P)
    assert L.c[0][1] == [Scalar(0), Scalar(0)]
    assert L.c[1][1] == [Scalar(2), Scalar(0)]


def test_compatibility_reports_pairs():
    V = SuperSpace(("x", "y"), (0, 0))
    P = ProductTable.from_products(V, {("x", "y"): {"y": 1}})
    target = induced_bracket(ProductTable.from_products(V, {("x", "y"): {"y": 2}}))
    rep = compatibility(induced_bracket(P), target)
    assert {tuple(w["pair"]) for w in rep.failures} == {("x", "y"), ("y", "x")}


def test_all_shipped_tables(catalog):
    checked = 0
    for entry in catalog:
        if not entry.lsa:
            continue
        for res in (check_lsa(entry, 3), check_bn(entry, 3)):
            assert res.status in ("pass", "skipped"), (entry.id, res.witnesses)
            checked += res.status == "pass"
    assert checked > 40


@pytest.mark.parametrize("eid", ["D10_0^1", "D10_0^2"])
def test_lssa_tables_fail_novikov(catalog, eid):
    res = check_lsa(catalog.get(eid), 3)
    lssa = [t for t in res.detail["tables"] if t["kind"] == "lssa"]
    assert lssa and all(t["left_symmetric"] and t["compatible"] and not t["novikov"] for t in lssa)
    assert all(t["novikov_witnesses"] for t in lssa)
