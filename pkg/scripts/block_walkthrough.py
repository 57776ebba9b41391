"""Walk through one central-character block end to end.

Enumerates the block, prints the multiplicity matrix and its inverse,
then the socle k-character of each nonnegative row, flagging which rows
sit above the socle-simplicity threshold.

Usage: python scripts/block_walkthrough.py [--fixture NAME] [--kappa 3/2,1/2]
       [--cutoff N]
"""

from __future__ import annotations

import argparse
from fractions import Fraction

from ghcseries import (
    Weight,
    central_character_from_kappa,
    get_fixture,
    multiplicity_matrix,
    socle_k_character,
)
from ghcseries.report import rational


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--fixture", default="sp4-principal")
    parser.add_argument("--kappa", default="3/2,1/2")
    parser.add_argument("--cutoff", type=int, default=24)
    args = parser.parse_args()

    fixture = get_fixture(args.fixture)
    p = fixture.build_parabolic()
    coords = tuple(Fraction(c) for c in args.kappa.split(","))
    kappa = central_character_from_kappa(Weight(coords), p.embedding.rs)
    print(f"pair {fixture.name}: {fixture.summary}")
    print(
        "kappa representative "
        f"({', '.join(str(rational(c)) for c in kappa.representative.coords)})"
        f", regular={kappa.regular}, integral={kappa.integral}"
    )

    matrix = multiplicity_matrix(kappa, p)
    print(f"\nblock of {len(matrix.elements)} elements "
          f"(integral subgroup order {matrix.integral_group_order}):")
    for e, oid in zip(matrix.elements, matrix.orbit_ids):
        nu = ", ".join(str(rational(c)) for c in e.nu.coords)
        print(
            f"  mu={rational(e.mu):>3}  omega={rational(e.omega):>4}  "
            f"nu=({nu})  length={e.w.length}  class={oid}"
        )

    def show(name, rows):
        print(f"\n{name}:")
        for row in rows:
            print("  " + "  ".join(f"{v:>2}" for v in row))

    show("multiplicity matrix m", matrix.m_matrix)
    show("inverse p", matrix.p_matrix)

    print(f"\nsocle k-characters through cutoff {args.cutoff}:")
    for e in matrix.elements:
        if e.mu < 0:
            print(f"  mu={rational(e.mu):>3}: outside the mu >= 0 regime")
            continue
        result = socle_k_character(p, matrix, e, args.cutoff)
        pairs = "  ".join(f"V({d})x{c}" for d, c in result.character.items())
        tag = "socle" if result.genuine_socle else "submodule character"
        print(f"  mu={rational(e.mu):>3} [{tag}]: {pairs}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
