"""Recompute the worked examples: Betti totals by formula and by oracle,
structural form, dominance and Cohen-Macaulayness."""

from __future__ import annotations

import argparse
import json

from monobetti.classify import aci_equivalence_report, classify
from monobetti.errors import NotApplicableError
from monobetti.formulas import betti_formula_dispatch
from monobetti.parsing import parse_ideal
from monobetti.resolutions import oracle_betti

EXAMPLES = [
    "x1^2*x2*x3^3, x5*x2*x4^5, x3^3*x4^5, x6*x7^3, x8*x9^2",
    "x^2, y^3, x*y^2*z",
    "x^4, y^3*z^2, x^2*y^4*z",
    "x^2, x*y, y^2",
    "x*y, x*z, y*z",
    "x1*y1, x2*y2, x3*y3, x4*y4, y1*y2",
]


def row(text: str) -> dict:
    I = parse_ideal(text)
    c = classify(I)
    try:
        f = betti_formula_dispatch(I)
        formula = {"totals": list(f.totals), "rule": f.rule, "via": f.via}
    except NotApplicableError:
        formula = None
    out = {
        "ideal": text,
        "oracle": list(oracle_betti(I).totals),
        "formula": formula,
        "form": c.kty.form_tag if c.kty else None,
        "dominant": c.is_dominant,
    }
    if c.is_aci:
        rep = aci_equivalence_report(I)
        out.update(cohen_macaulay=rep.cohen_macaulay, unmixed=rep.unmixed, ass_equals_min=rep.ass_equals_min)
    return out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    rows = [row(t) for t in EXAMPLES]
    if args.json:
        print(json.dumps(rows, indent=2))
        return
    for r in rows:
        f = r["formula"]
        ftxt = f"{tuple(f['totals'])} [{f['rule']}]" if f else "n/a"
        print(r["ideal"])
        print(f"  oracle {tuple(r['oracle'])}  formula {ftxt}  form {r['form']}  dominant {r['dominant']}")
        if "cohen_macaulay" in r:
            print(f"  CM {r['cohen_macaulay']}  unmixed {r['unmixed']}  Ass=Min {r['ass_equals_min']}")


if __name__ == "__main__":
    main()
