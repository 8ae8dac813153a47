"""Oracle Betti totals of I^2 and I^3 for small almost complete intersections.

Exploratory only: no closed form is claimed for powers of ACIs.  For
complete intersections the Eagon-Northcott values are printed alongside
as a sanity check.
"""

from __future__ import annotations

import argparse
import csv
import random
import sys

from monobetti.classify import is_complete_intersection, is_dominant
from monobetti.core import ideal_power
from monobetti.corpus import star_aci
from monobetti.errors import ResourceError
from monobetti.formulas import betti_ci_power
from monobetti.parsing import format_ideal, parse_ideal
from monobetti.resolutions import Caps, oracle_betti


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--count", type=int, default=15)
    ap.add_argument("--max-power", type=int, default=3)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    caps = Caps(max_gens=40, max_vars=12)
    ideals = [parse_ideal("x, y, z")]
    ideals += [star_aci(rng, max_q=3, max_vars=6).ideal for _ in range(args.count)]
    w = csv.writer(sys.stdout)
    w.writerow(["ideal", "dominant", "s", "gens", "totals", "eagon_northcott"])
    for I in ideals:
        for s in range(1, args.max_power + 1):
            P = ideal_power(I, s)
            try:
                t = oracle_betti(P, caps).totals
            except ResourceError:
                t = "cap"
            en = betti_ci_power(I.q, s).totals if is_complete_intersection(I) else ""
            w.writerow([format_ideal(I, header=False), is_dominant(I), s, P.q, t, en])


if __name__ == "__main__":
    main()
