"""Closed-form Betti numbers for complete and almost complete intersections.

All totals are for the cyclic module R/I (beta_0 = 1).  Results quoted for
the ideal itself are obtained with ``FormulaResult.ideal_totals``, which
drops beta_0 and shifts the index by one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Sequence

from .classify import (
    KtyForm,
    aci_decompose,
    is_complete_intersection,
    kty_form,
)
from .core import Monomial, MonomialIdeal, height, lcm_of, polarize
from .errors import DomainError, InvariantViolation, NotApplicableError

__all__ = [
    "FormulaResult",
    "binom",
    "betti_ci",
    "smallest_s",
    "betti_aci_general",
    "betti_aci_pair",
    "betti_kty",
    "betti_ci_power",
    "betti_formula_dispatch",
]

RULES = ("P1", "T1", "T2a", "T2b", "T2c", "T3-via-polarization", "EN-power", "CI-Koszul",
         "dominant-Taylor")


def binom(n: int, k: int) -> int:
    """C(n, k), zero outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def _trim(totals: Sequence[int]) -> tuple[int, ...]:
    t = list(totals)
    while t and t[-1] == 0:
        t.pop()
    return tuple(t)


@dataclass(frozen=True)
class FormulaResult:
    totals: tuple[int, ...]
    rule: str
    parameters: dict = field(default_factory=dict, hash=False)
    via: str | None = None
    notes: tuple[str, ...] = ()

    def __post_init__(self):
        if self.rule not in RULES:
            raise ValueError(f"unknown rule {self.rule!r}")
        if not self.totals or self.totals[0] != 1:
            raise InvariantViolation(f"beta_0 must be 1, got {self.totals}")
        if sum((-1) ** i * b for i, b in enumerate(self.totals)) != 0:
            raise InvariantViolation(f"alternating sum of {self.totals} is not zero")

    @property
    def pd(self) -> int:
        return len(self.totals) - 1

    def ideal_totals(self) -> tuple[int, ...]:
        return self.totals[1:]

    def to_json(self) -> dict:
        return {
            "totals": list(self.totals),
            "rule": self.rule,
            "via": self.via,
            "parameters": dict(self.parameters),
            "notes": list(self.notes),
        }


def betti_ci(q: int) -> FormulaResult:
    """Koszul complex on q generators."""
    if q < 1:
        raise DomainError("a complete intersection has at least one generator")
    return FormulaResult(tuple(comb(q, i) for i in range(q + 1)), "CI-Koszul", {"q": q})


def smallest_s(ci_part: Sequence[Monomial], v: Monomial) -> int:
    """Least s such that v divides the lcm of some s elements of ci_part.

    Found by exhaustive search by increasing size; with pairwise disjoint
    supports it must equal the number of u_i meeting supp(v).
    """
    for a, b in combinations(ci_part, 2):
        if a.support() & b.support():
            raise DomainError(f"{a} and {b} share variables")
    found = None
    for s in range(1, len(ci_part) + 1):
        if any(v.divides(lcm_of(sub)) for sub in combinations(ci_part, s)):
            found = s
            break
    if found is None:
        raise DomainError(f"{v} divides no lcm of the complete intersection part")
    fast = sum(1 for u in ci_part if u.support() & v.support())
    if fast != found:
        raise InvariantViolation(f"smallest s: search gave {found}, support count gave {fast}")
    return found


def betti_aci_general(q: int, s: int) -> FormulaResult:
    """beta_i = C(q+1, i) for i < s and C(q+1, i) - C(q+1-s, i-s) for s <= i <= q."""
    if not 2 <= s <= q:
        raise DomainError(f"need 2 <= s <= q, got q={q}, s={s}")
    totals = [binom(q + 1, i) for i in range(s)]
    totals += [binom(q + 1, q + 1 - i) - binom(q + 1 - s, q + 1 - i) for i in range(s, q + 1)]
    return FormulaResult(_trim(totals), "T1", {"q": q, "s": s})


def betti_aci_pair(q: int) -> FormulaResult:
    """The case where v divides the lcm of two of the u_i."""
    if q < 2:
        raise DomainError("need q >= 2")
    totals = [binom(q + 1, i) for i in range(2)]
    totals += [binom(q + 1, q + 1 - i) - binom(q - 1, q + 1 - i) for i in range(2, q + 1)]
    res = FormulaResult(_trim(totals), "P1", {"q": q, "s": 2})
    if res.totals != betti_aci_general(q, 2).totals:
        raise InvariantViolation(f"pair formula and general formula differ at q={q}")
    return res


def betti_kty(form: KtyForm | str, total_gens: int, r: int | None = None) -> FormulaResult:
    """Betti totals of a squarefree ACI with q + 1 = total_gens generators.

    ``form`` may be a KtyForm or a bare tag; form (i) needs r either way.
    """
    tag = form if isinstance(form, str) else form.form_tag
    if r is None and not isinstance(form, str):
        r = form.r
    q = total_gens - 1
    if q < 2:
        raise DomainError("need at least three generators")
    if tag == "i":
        if r is None:
            raise DomainError("form (i) needs r")
        res = betti_aci_general(q, r)
        return FormulaResult(res.totals, "T2a", {"q": q, "s": r, "r": r, "form": tag},
                             notes=("range bound p read as r",))
    if tag in ("ii", "vi"):
        # Taylor resolution is minimal; beta_{q+1} = 1 completes the range
        totals = tuple(binom(q + 1, i) for i in range(q + 2))
        return FormulaResult(totals, "T2b", {"q": q, "form": tag})
    if tag in ("iii", "iv", "v"):
        totals = [binom(q + 1, i) - binom(q - 1, i - 2) for i in range(q + 1)]
        return FormulaResult(_trim(totals), "T2c", {"q": q, "form": tag})
    raise DomainError(f"unknown form tag {tag!r}")


def betti_ci_power(q: int, s: int) -> FormulaResult:
    """Betti numbers of R/I^s for a complete intersection I on q generators.

    beta_i(I^s) = C(q+s-1, s+i) C(s+i-1, i) for i = 0..q-1; use
    ``ideal_totals()`` to read them in the ideal's indexing.
    """
    if q < 1 or s < 1:
        raise DomainError("need q >= 1 and s >= 1")
    ideal = [binom(q + s - 1, s + i) * binom(s + i - 1, i) for i in range(q)]
    return FormulaResult((1,) + tuple(ideal), "EN-power", {"q": q, "s": s})


def betti_formula_dispatch(I: MonomialIdeal) -> FormulaResult:
    """Pick the closed form that applies to I.

    Complete intersections use the Koszul complex.  Almost complete
    intersections are polarized if needed and matched against the six
    structural forms; star forms of type (i) go through ``smallest_s``.
    Anything else raises NotApplicableError.
    """
    if is_complete_intersection(I):
        return betti_ci(I.q)
    h = height(I)
    if h != I.q - 1:
        raise NotApplicableError(f"{I} is neither a complete nor an almost complete intersection")
    if h == 1:
        # two generators with a common factor: Taylor resolution is minimal
        return FormulaResult((1, 2, 1), "dominant-Taylor", {"q": 1})
    via = None
    P = I
    if not I.is_squarefree():
        P = polarize(I)[0]
        via = "T3-via-polarization"
    form = kty_form(P)
    if form.form_tag == "i":
        split = aci_decompose(P)
        s = smallest_s(split.ci_part, split.v)
        if s != form.r:
            raise InvariantViolation(f"smallest s = {s} but the star has r = {form.r}")
    res = betti_kty(form, P.q)
    return FormulaResult(res.totals, res.rule, res.parameters, via, res.notes)
