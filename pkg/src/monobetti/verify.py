"""Invariant suite run over a corpus of ideals.

Each check returns True (holds), False (violated) or None (not applicable
to this ideal).  The report is plain data with a fixed key order so that
identical inputs give byte-identical JSON.
"""

from __future__ import annotations

from dataclasses import replace
from math import comb
from typing import Callable, Iterable

from .classify import (
    aci_decompose,
    has_linear_quotients,
    is_complete_intersection,
    is_dominant,
    is_semidominant,
)
from .core import (
    MonomialIdeal,
    alexander_dual,
    associated_primes,
    height,
    is_unmixed,
    minimal_primes,
    minimal_primes_bruteforce,
    polarize,
)
from .errors import MonoBettiError, NotApplicableError
from .formulas import betti_formula_dispatch
from .parsing import format_ideal
from .resolutions import (
    BettiTable,
    Caps,
    is_taylor_minimal,
    l_counts,
    oracle_betti,
    scarf_betti,
)


class _Ctx:
    """Per-ideal cache so expensive results are computed once."""

    def __init__(self, I: MonomialIdeal, caps: Caps):
        self.I = I
        self.caps = caps
        self._betti: BettiTable | None = None

    @property
    def betti(self) -> BettiTable:
        if self._betti is None:
            self._betti = oracle_betti(self.I, self.caps)
        return self._betti


def _alt_sum(c: _Ctx):
    return sum((-1) ** i * b for i, b in enumerate(c.betti.totals)) == 0


def _linear_strand_01(c: _Ctx):
    t = c.betti
    gens = {b for (i, b) in t.entries if i == 1}
    return t.totals[0] == 1 and gens == set(c.I.generators)


def _taylor_bound(c: _Ctx):
    q = c.I.q
    t = c.betti.totals
    return len(t) <= q + 1 and all(b <= comb(q, i) for i, b in enumerate(t))


def _brun_romer(c: _Ctx):
    t = c.betti.totals
    p = len(t) - 1
    return all(t[i] >= comb(p, i) for i in range(p + 1))


def _monotone_truncation(c: _Ctx):
    q = c.I.q
    t = list(c.betti.totals) + [0] * (q + 1)
    full = [t[i] == comb(q, i) for i in range(q + 1)]
    return all(all(full[:i]) for i in range(q + 1) if full[i])


def _polarization(c: _Ctx):
    P, _ = polarize(c.I)
    wide = replace(c.caps, max_vars=max(c.caps.max_vars, len(P.variables)))
    return oracle_betti(P, wide).totals == c.betti.totals


def _dual_involution(c: _Ctx):
    if not c.I.is_squarefree():
        return None
    D = alexander_dual(c.I)
    return alexander_dual(D) == c.I and D.q == len(minimal_primes(c.I))


def _scarf(c: _Ctx):
    if not is_semidominant(c.I):
        return None
    return scarf_betti(c.I, c.caps) == c.betti


def _dominance(c: _Ctx):
    q = c.I.q
    full = c.betti.totals == tuple(comb(q, i) for i in range(q + 1))
    return is_dominant(c.I) == is_taylor_minimal(c.I, c.caps) == full


def _ci_height(c: _Ctx):
    return is_complete_intersection(c.I) == (height(c.I) == c.I.q)


def _primes(c: _Ctx):
    if len(c.I.variables) > 16:
        return None
    mp = minimal_primes(c.I)
    ok = mp == minimal_primes_bruteforce(c.I)
    ass = associated_primes(c.I)
    return ok and set(mp) <= set(ass) and all(any(m.vars <= p.vars for m in mp) for p in ass)


def _formula(c: _Ctx):
    try:
        res = betti_formula_dispatch(c.I)
    except NotApplicableError:
        return None
    return res.totals == c.betti.totals


def _split(I: MonomialIdeal):
    if height(I) != I.q - 1:
        return None
    return aci_decompose(I)


def _l_counts(c: _Ctx):
    split = _split(c.I)
    if split is None:
        return None
    L = l_counts(split.ci_part, split.v) + [0]
    t = list(c.betti.totals) + [0] * (len(L) + 1)
    return all(t[i] == L[i] + (L[i - 1] if i else 0) for i in range(len(L)))


def _cm_predicates(c: _Ctx):
    split = _split(c.I)
    if split is None:
        return None
    non_dominant = not is_dominant(c.I)
    cm = c.betti.pd == height(c.I)
    return non_dominant == cm == is_unmixed(c.I)


def _dual_linear_quotients(c: _Ctx):
    if not c.I.is_squarefree() or _split(c.I) is None:
        return None
    D = alexander_dual(c.I)
    if D.q > 8:
        return None
    return has_linear_quotients(D) is not None


CHECKS: dict[str, Callable[[_Ctx], bool | None]] = {
    "alternating_sum_zero": _alt_sum,
    "beta0_beta1": _linear_strand_01,
    "taylor_upper_bound": _taylor_bound,
    "brun_romer_lower_bound": _brun_romer,
    "monotone_truncation": _monotone_truncation,
    "polarization_preserves_totals": _polarization,
    "alexander_dual_involution": _dual_involution,
    "scarf_equals_oracle": _scarf,
    "dominant_iff_taylor_minimal_iff_full": _dominance,
    "ci_iff_height_equals_gens": _ci_height,
    "primes_consistent": _primes,
    "formula_equals_oracle": _formula,
    "betti_from_l_counts": _l_counts,
    "aci_cm_predicates_agree": _cm_predicates,
    "dual_has_linear_quotients": _dual_linear_quotients,
}


def check_ideal(I: MonomialIdeal, caps: Caps | None = None) -> dict[str, bool | None]:
    ctx = _Ctx(I, caps or Caps.from_env())
    out = {}
    for name, fn in CHECKS.items():
        try:
            out[name] = fn(ctx)
        except MonoBettiError:
            out[name] = False
    return out


def verify_corpus(ideals: Iterable[MonomialIdeal], caps: Caps | None = None, **meta) -> dict:
    tally = {name: {"passed": 0, "failed": 0, "skipped": 0} for name in CHECKS}
    failures = []
    n = 0
    for k, I in enumerate(ideals):
        n += 1
        for name, ok in check_ideal(I, caps).items():
            key = "skipped" if ok is None else ("passed" if ok else "failed")
            tally[name][key] += 1
            if ok is False:
                failures.append({"index": k, "ideal": format_ideal(I), "check": name})
    report = dict(meta)
    report.update({"corpus_size": n, "checks": tally, "failures": failures, "ok": not failures})
    return report
