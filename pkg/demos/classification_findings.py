"""Recompute quasi-Frobenius verdicts at sample points and compare with the catalog.

Most rows agree everywhere.  A few disagree at boundary samples; those are
printed with the closed forms that make the difference.
"""
from __future__ import annotations

from superqf import classify_at_point, load_default
from superqf.verify import _points

ENTRIES = ["D6", "D10_q", "D9_pq", "D2_q", "D14_pq", "D2_-1"]


def main():
    catalog = load_default()
    for eid in ENTRIES:
        entry = catalog.get(eid)
        L = entry.algebra()
        for case in entry.cases:
            for point in _points(case.region, 3):
                got = classify_at_point(L.subs(point) if point else L)
                where = ", ".join(f"{k}={v}" for k, v in point.items()) or "-"
                mark = "ok " if got["verdict"] == case.verdict else "DIFF"
                print(f"{mark} {eid:<8} item {case.item:>2} at {where}: "
                      f"listed {case.verdict}, computed {got['verdict']} "
                      f"(closed forms: {got['dim_even']} even, {got['dim_odd']} odd)")


if __name__ == "__main__":
    main()
