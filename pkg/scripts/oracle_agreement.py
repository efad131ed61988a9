"""Closed-form versus diagrammatic membership on the built-in fixtures.

Lists every disagreement, marking whether r centralizes the label image of
the functor, and repeats the mu != 0 fixture under both sign conventions.
"""

import argparse

from anncat.dual import COMMUTATOR, SUM, oracle_agreement
from anncat.fixtures import Functored, battery, coboundary_functor_z3, twisted_z2z2
from anncat.functor import identity_functor


def report(fd: Functored, convention: str, show: int) -> None:
    oa = oracle_agreement(fd.A, fd.B, fd.F, convention=convention)
    g = len(oa.guarded_discrepancies)
    print(f"{fd.name} [{convention}]: {oa.agreed}/{oa.checked} agree, {oa.members} members, "
          f"{len(oa.discrepancies) - g} unguarded / {g} guarded discrepancies")
    for d in oa.discrepancies[:show]:
        side = "closed form only" if d.closed_form else "diagrams only"
        why = d.diagram_failures if d.closed_form else d.closed_form_failures
        print(f"    r={d.r} u={list(d.u)} accepted by {side}; "
              f"{'guarded' if d.guarded else 'unguarded'}; fails {', '.join(why)}")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--show", type=int, default=4, help="discrepancies to print per fixture")
    args = ap.parse_args()
    T = twisted_z2z2()
    for fd in battery() + [Functored("id(Z2xZ2,twisted)", T, T, identity_functor(T))]:
        report(fd, SUM, args.show)
    mu = coboundary_functor_z3()
    for conv in (SUM, COMMUTATOR):
        report(mu, conv, args.show)


if __name__ == "__main__":
    main()
