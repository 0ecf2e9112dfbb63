from __future__ import annotations

from fractions import Fraction

import pytest

from superqf.certificates import CERTIFICATES, replay_no_lagrangian_proof
from superqf.obstruction import UnknownCertificate
from superqf.verify import check_certificates


def _definite_steps(res):
    return [s for s in res["steps"] if "quadratic_form" in s]


def test_certificate_set():
    assert set(CERTIFICATES) == {"D7_1/2,1/2^1", "D9_1/2,p", "C1_1/2+A"}


def test_d7_replay_reaches_definite_block(catalog):
    entry = catalog.get("D7_1/2,1/2^1")
    case = [c for c in entry.cases if c.certificate][0]
    res = replay_no_lagrangian_proof(case.certificate, entry.algebra(), case.forms[0].build(entry.space()))
    assert res["ok"] and res["error"] is None
    definite = _definite_steps(res)
    assert definite and all(s["ok"] for s in definite)
    assert {s["quadratic_form"] for s in definite} == {"(1)*z3*z3 + (1)*z4*z4"}


@pytest.mark.parametrize("p", [Fraction(1), Fraction(1, 2), Fraction(3), Fraction(7, 5)])
def test_d9_replay_for_positive_p(catalog, p):
    entry = catalog.get("D9_1/2,p")
    case = [c for c in entry.cases if c.certificate][0]
    point = {"p": p}
    res = replay_no_lagrangian_proof(case.certificate, entry.algebra().subs(point),
                                     case.forms[0].build(entry.space()).subs(point), assignment=point)
    assert res["ok"], res["error"]


def test_c1_replay_keeps_form_parameters_symbolic(catalog):
    res = check_certificates(catalog.get("C1_1/2+A"), 3)
    assert res.status == "pass"
    assert res.samples == []  # lambda and mu stay symbolic, known nonzero


def test_replay_against_the_wrong_algebra_fails(catalog):
    d6 = catalog.get("D6")
    res = replay_no_lagrangian_proof("D7_1/2,1/2^1", d6.algebra(), d6.cases[0].forms[0].build(d6.space()))
    assert not res["ok"]


def test_unknown_certificate(catalog):
    d6 = catalog.get("D6")
    with pytest.raises(UnknownCertificate):
        replay_no_lagrangian_proof("D6", d6.algebra(), d6.cases[0].forms[0].build(d6.space()))
