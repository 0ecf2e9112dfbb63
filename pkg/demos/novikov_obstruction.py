"""Replay the elimination showing D10_0^1 and D10_0^2 carry no Novikov structure.

Each step is tagged either as forced by the equations collected so far or as
a case choice.  The independent Groebner check settles non-existence on its
own, whatever the step tags say.
"""
from __future__ import annotations

from superqf import load_default
from superqf.obstruction import CERTIFIED_ENTRIES, StepNotImplied, groebner_nonexistence, novikov_obstruction_replay


def main():
    catalog = load_default()
    for eid in CERTIFIED_ENTRIES:
        L = catalog.get(eid).algebra()
        rep = novikov_obstruction_replay(eid, L)
        print(f"{eid}:")
        for step in rep["steps"]:
            tags = sorted(set(step["status"].values()))
            print(f"  {step['functional']:<16} {'/'.join(tags)}")
        print(f"  terminal N(e3,e4,e4) = {rep['terminal']['e3_coefficient']}*e3")
        try:
            novikov_obstruction_replay(eid, L, strict=True)
            print("  strict replay: every step forced")
        except StepNotImplied as exc:
            print(f"  strict replay stops: {exc}")
        print(f"  Groebner basis of all compatibility, T and N equations is {{1}}: {groebner_nonexistence(L)}")


if __name__ == "__main__":
    main()
