"""Command-line interface.

Exit codes: 0 success, 1 usage or parse error, 2 domain error,
3 resource cap exceeded, 4 invariant violation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from dataclasses import replace
from typing import Sequence

from .classify import (
    aci_equivalence_report,
    classify,
    cohen_macaulay,
    cohen_macaulay_aci,
    is_complete_intersection,
    is_semidominant,
)
from .core import (
    MonomialIdeal,
    alexander_dual,
    associated_primes,
    height,
    ideal_power,
    is_unmixed,
    minimal_primes,
    polarize,
)
from .corpus import generate_corpus
from .errors import InputError, InvariantViolation, MonoBettiError, NotApplicableError
from .formulas import betti_ci_power, betti_formula_dispatch
from .parsing import format_ideal, parse_ideal, read_corpus
from .resolutions import (
    BettiTable,
    Caps,
    oracle_betti,
    scarf_betti,
    scarf_chain_complex,
    taylor_complex,
)

SCHEMA_VERSION = "1"
_SAFE_INT = 2**53


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _jsonable(obj):
    """Integers beyond 2**53 become strings so JSON readers lose nothing."""
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return str(obj) if abs(obj) > _SAFE_INT else obj
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def _ideal_json(I: MonomialIdeal) -> dict:
    return {
        "variables": list(I.variables),
        "generators": [g.to_str(I.variables) for g in I.generators],
        "text": format_ideal(I),
    }


def _primes_json(primes, order) -> list[list[str]]:
    return [p.sorted_vars(order) for p in primes]


def betti_text(t: BettiTable) -> str:
    """Betti diagram: columns are homological degrees, row j holds beta_{i,i+j}."""
    graded = t.graded()
    cols = len(t.totals)
    rows = sorted({d - i for (i, d) in graded}) or [0]
    width = max(len(str(v)) for v in list(t.totals) + [1]) + 1
    lines = ["       " + "".join(str(i).rjust(width) for i in range(cols))]
    lines.append("total: " + "".join(str(v).rjust(width) for v in t.totals))
    for j in range(rows[0], rows[-1] + 1):
        cells = [graded.get((i, i + j), 0) for i in range(cols)]
        lines.append(f"{j:>5}: " + "".join((str(c) if c else ".").rjust(width) for c in cells))
    return "\n".join(lines)


def _read_ideal(args) -> MonomialIdeal:
    if args.file:
        with open(args.file) as fh:
            text = fh.read()
    elif args.ideal is None or args.ideal == "-":
        text = sys.stdin.read()
    else:
        text = args.ideal
    return parse_ideal(text)


def _caps(args) -> Caps:
    caps = Caps.from_env()
    for name in ("max_gens", "max_vars", "max_taylor_gens"):
        val = getattr(args, name, None)
        if val is not None:
            caps = replace(caps, **{name: val})
    return caps


def cmd_classify(args, caps):
    I = _read_ideal(args)
    c = classify(I)
    vs = I.variables
    kty = None
    if c.kty is not None:
        kty = c.kty.to_json(polarize(I)[0].variables if c.kty_on_polarization else vs)
        kty["on_polarization"] = c.kty_on_polarization
    if c.is_aci and c.aci_split is not None:
        ev = cohen_macaulay_aci(I, caps)
    else:
        ev = cohen_macaulay(I, caps)
    out = {
        "ideal": _ideal_json(I),
        "height": c.height,
        "is_ci": c.is_ci,
        "is_aci": c.is_aci,
        "aci_split": None if c.aci_split is None else {
            "ci_part": [u.to_str(vs) for u in c.aci_split.ci_part],
            "v": c.aci_split.v.to_str(vs),
        },
        "dominant_flags": list(c.dominant_flags),
        "is_dominant": c.is_dominant,
        "is_semidominant": c.is_semidominant,
        "kty": kty,
        "cohen_macaulay": {
            "value": ev.cohen_macaulay,
            "rule": ev.rule,
            "height": ev.height,
            "projective_dimension": ev.projective_dimension,
        },
        "unmixed": is_unmixed(I),
        "ass_equals_min": set(associated_primes(I)) == set(minimal_primes(I)),
    }
    if c.is_aci:
        rep = aci_equivalence_report(I, caps)
        out["aci_report"] = {
            "cohen_macaulay": rep.cohen_macaulay,
            "unmixed": rep.unmixed,
            "ass_equals_min": rep.ass_equals_min,
            "clean": rep.clean,
            "agree": rep.agree,
        }
    text = "\n".join(
        f"{k}: {v}" for k, v in (
            ("ideal", str(I)), ("height", c.height), ("complete intersection", c.is_ci),
            ("almost complete intersection", c.is_aci), ("dominant", c.is_dominant),
            ("semidominant", c.is_semidominant),
            ("form", None if c.kty is None else c.kty.form_tag),
            ("cohen-macaulay", ev.cohen_macaulay),
        )
    )
    return out, text


def cmd_betti(args, caps):
    I = _read_ideal(args)
    methods = ["formula", "oracle", "scarf"] if args.method == "all" else [args.method]
    results: dict = {}
    tables: dict = {}
    for m in methods:
        if m == "formula":
            try:
                res = betti_formula_dispatch(I)
            except NotApplicableError as exc:
                if args.method != "all":
                    raise
                results[m] = {"applicable": False, "reason": str(exc)}
                continue
            results[m] = dict(res.to_json(), applicable=True)
            tables[m] = res.totals
        elif m == "oracle":
            t = oracle_betti(I, caps)
            results[m] = dict(t.to_json(), applicable=True)
            tables[m] = t
        else:
            if args.method == "all" and not is_semidominant(I):
                results[m] = {"applicable": False, "reason": "not semidominant"}
                continue
            t = scarf_betti(I, caps)
            results[m] = dict(t.to_json(), applicable=True)
            tables[m] = t
    out = {"ideal": _ideal_json(I), "method": args.method, "results": results}
    if args.method == "all":
        oracle = tables["oracle"]
        agree = True
        if "formula" in tables and tables["formula"] != oracle.totals:
            agree = False
        if "scarf" in tables and tables["scarf"] != oracle:
            agree = False
        out["agree"] = agree
        if not agree:
            raise InvariantViolation(json.dumps(_jsonable(out), sort_keys=True))
    parts = []
    for m, val in tables.items():
        if isinstance(val, BettiTable):
            parts.append(f"[{m}]\n{betti_text(val)}")
        else:
            parts.append(f"[{m}] rule {results[m]['rule']}\ntotal: " + " ".join(map(str, val)))
    return out, "\n\n".join(parts)


def cmd_resolution(args, caps):
    I = _read_ideal(args)
    cc = taylor_complex(I, caps) if args.kind == "taylor" else scarf_chain_complex(I, caps)
    out = {"ideal": _ideal_json(I), "complex": cc.to_json()}
    lines = [f"{args.kind} complex of {I}", "ranks: " + " ".join(map(str, cc.ranks()))]
    for i in range(1, cc.length + 1):
        lines.append(f"d_{i}:")
        lines.extend("  " + " ".join(f"{v:>2}" for v in row) for row in cc.dense(i))
    return out, "\n".join(lines)


def cmd_primes(args, caps):
    I = _read_ideal(args)
    mp = minimal_primes(I)
    out = {"ideal": _ideal_json(I), "height": height(I), "minimal_primes": _primes_json(mp, I.variables)}
    return out, "\n".join("(" + ", ".join(p) + ")" for p in out["minimal_primes"])


def cmd_ass(args, caps):
    I = _read_ideal(args)
    ass = associated_primes(I)
    mp = minimal_primes(I)
    out = {
        "ideal": _ideal_json(I),
        "associated_primes": _primes_json(ass, I.variables),
        "minimal_primes": _primes_json(mp, I.variables),
        "ass_equals_min": set(ass) == set(mp),
        "unmixed": is_unmixed(I),
    }
    return out, "\n".join("(" + ", ".join(p) + ")" for p in out["associated_primes"])


def cmd_dual(args, caps):
    I = _read_ideal(args)
    D = alexander_dual(I)
    return {"ideal": _ideal_json(I), "dual": _ideal_json(D)}, format_ideal(D)


def cmd_polarize(args, caps):
    I = _read_ideal(args)
    P, pmap = polarize(I)
    mapping = [
        {"variable": var, "slot": j, "name": name}
        for (var, j), name in sorted(pmap.forward.items(), key=lambda kv: (I.variables.index(kv[0][0]), kv[0][1]))
    ]
    return {"ideal": _ideal_json(I), "polarization": _ideal_json(P), "map": mapping}, format_ideal(P)


def cmd_power(args, caps):
    I = _read_ideal(args)
    J = ideal_power(I, args.s)
    out = {"ideal": _ideal_json(I), "s": args.s, "power": _ideal_json(J)}
    text = format_ideal(J)
    if args.betti:
        t = oracle_betti(J, caps)
        out["betti"] = t.to_json()
        out["ideal_totals"] = list(t.ideal_totals())
        if is_complete_intersection(I):
            en = betti_ci_power(I.q, args.s)
            out["eagon_northcott"] = list(en.ideal_totals())
            out["agree"] = en.totals == t.totals
            if not out["agree"]:
                raise InvariantViolation(json.dumps(_jsonable(out), sort_keys=True))
        text += "\n" + betti_text(t)
    return out, text


def cmd_verify(args, caps):
    from .verify import verify_corpus

    ideals = []
    if args.corpus:
        with open(args.corpus) as fh:
            ideals = read_corpus(fh.read())
    count = args.count if args.count is not None else (0 if args.corpus else 100)
    ideals += generate_corpus(args.seed, count)
    report = verify_corpus(
        ideals, caps, seed=args.seed, corpus_file=os.path.basename(args.corpus) if args.corpus else None,
        generated=count,
    )
    text = "\n".join(
        f"{name:40s} passed {t['passed']:4d} failed {t['failed']:4d} skipped {t['skipped']:4d}"
        for name, t in report["checks"].items()
    )
    if not report["ok"]:
        return report, text, 4
    return report, text


COMMANDS = {
    "classify": cmd_classify,
    "betti": cmd_betti,
    "resolution": cmd_resolution,
    "primes": cmd_primes,
    "ass": cmd_ass,
    "dual": cmd_dual,
    "polarize": cmd_polarize,
    "power": cmd_power,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="monobetti", description="Betti numbers and classification of monomial ideals.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, with_ideal=True):
        if with_ideal:
            sp.add_argument("ideal", nargs="?", help="ideal text, e.g. 'x^2, x*y, y^2' ('-' or omitted: stdin)")
            sp.add_argument("-f", "--file", help="read the ideal from a file")
        fmt = sp.add_mutually_exclusive_group()
        fmt.add_argument("--json", dest="fmt", action="store_const", const="json", default="json")
        fmt.add_argument("--text", dest="fmt", action="store_const", const="text")
        sp.add_argument("--max-gens", type=int, help="oracle generator cap (default 12)")
        sp.add_argument("--max-vars", type=int, help="oracle variable cap (default 12)")
        sp.add_argument("--max-taylor-gens", type=int, help="Taylor/Scarf generator cap (default 20)")
        sp.add_argument("-o", "--output", help="write output to this file instead of stdout")

    common(sub.add_parser("classify", help="structural classification and Cohen-Macaulay test"))
    b = sub.add_parser("betti", help="Betti numbers of R/I")
    common(b)
    b.add_argument("--method", choices=["formula", "oracle", "scarf", "all"], default="all")
    r = sub.add_parser("resolution", help="Taylor or Scarf complex with differentials")
    common(r)
    r.add_argument("--kind", choices=["taylor", "scarf"], default="taylor")
    for name, help_ in (("primes", "minimal primes and height"), ("ass", "associated primes"),
                        ("dual", "Alexander dual (squarefree ideals)"), ("polarize", "polarization")):
        common(sub.add_parser(name, help=help_))
    pw = sub.add_parser("power", help="generators of I^s")
    common(pw)
    pw.add_argument("-s", type=int, required=True)
    pw.add_argument("--betti", action="store_true", help="also compute oracle Betti numbers of I^s")
    v = sub.add_parser("verify", help="run the invariant suite on a corpus")
    common(v, with_ideal=False)
    v.add_argument("--corpus", help="file with one ideal per line ('#' comments)")
    v.add_argument("--seed", type=int, required=True)
    v.add_argument("--count", type=int, help="number of generated ideals (default 100, or 0 with --corpus)")
    return p


def _emit(payload: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(payload)
        sys.stdout.flush()
        return
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".monobetti-")
    with os.fdopen(fd, "w") as fh:
        fh.write(payload)
    os.replace(tmp, path)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    code = 0
    try:
        caps = _caps(args)
        result = COMMANDS[args.command](args, caps)
        if len(result) == 3:
            out, text, code = result
        else:
            out, text = result
    except InvariantViolation as exc:
        print(f"monobetti: invariant violation: {exc}", file=sys.stderr)
        return exc.exit_code
    except MonoBettiError as exc:
        print(f"monobetti: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    except (OSError, ValueError) as exc:
        print(f"monobetti: {exc}", file=sys.stderr)
        return InputError.exit_code
    if args.fmt == "json":
        doc = {"schema_version": SCHEMA_VERSION, "command": args.command}
        doc.update(out)
        payload = json.dumps(_jsonable(doc), sort_keys=True, indent=2) + "\n"
    else:
        payload = text + "\n"
    _emit(payload, args.output)
    return code


if __name__ == "__main__":
    sys.exit(main())
