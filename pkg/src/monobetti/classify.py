"""Structural classification of monomial ideals.

Complete and almost complete intersections, (semi)dominance, the six
structural forms of squarefree almost complete intersections, linear
quotients / weak polymatroidality, and Cohen-Macaulay decisions.

Throughout, an almost complete intersection (ACI) has height |G(I)| - 1,
and ``q`` denotes that height, so the ideal has q + 1 generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Sequence

from .core import (
    Monomial,
    MonomialIdeal,
    associated_primes,
    height,
    is_unmixed,
    minimal_primes,
    polarize,
)
from .errors import ClassificationError, DomainError, InputError, InvariantViolation, ResourceError
from .resolutions import Caps, projective_dimension

__all__ = [
    "AciSplit",
    "KtyForm",
    "Classification",
    "CMEvidence",
    "AciReport",
    "is_regular_sequence",
    "is_complete_intersection",
    "is_almost_complete_intersection",
    "aci_decompose",
    "is_dominant_generator",
    "dominant_flags",
    "is_dominant",
    "is_semidominant",
    "kty_form",
    "is_weakly_polymatroidal",
    "weakly_polymatroidal_order",
    "has_linear_quotients",
    "cohen_macaulay",
    "cohen_macaulay_aci",
    "aci_equivalence_report",
    "classify",
]

FORM_TAGS = ("i", "ii", "iii", "iv", "v", "vi")


def _pairwise_disjoint(ms: Sequence[Monomial]) -> bool:
    seen: set[str] = set()
    for m in ms:
        s = m.support()
        if s & seen:
            return False
        seen |= s
    return True


def is_regular_sequence(gens: Sequence[Monomial]) -> bool:
    """Monomials form a regular sequence iff their supports are pairwise disjoint."""
    if not gens:
        raise InputError("empty sequence")
    if any(g.is_one() for g in gens):
        raise InputError("a unit cannot be part of a regular sequence")
    return _pairwise_disjoint(gens)


def is_complete_intersection(I: MonomialIdeal) -> bool:
    return _pairwise_disjoint(I.generators)


def is_almost_complete_intersection(I: MonomialIdeal) -> bool:
    return height(I) == I.q - 1


@dataclass(frozen=True)
class AciSplit:
    ci_part: tuple[Monomial, ...]
    v: Monomial


def aci_decompose(I: MonomialIdeal) -> AciSplit | None:
    """Write G(I) = (u_1, ..., u_q, v) with the u_i a complete intersection.

    Returns None when no generator can play the role of v (triangle-shaped
    ideals).  Among several candidates the canonically last one wins.
    """
    if not is_almost_complete_intersection(I):
        raise DomainError(f"{I} is not an almost complete intersection")
    gens = I.generators
    for k in reversed(range(len(gens))):
        rest = gens[:k] + gens[k + 1:]
        if _pairwise_disjoint(rest):
            return AciSplit(rest, gens[k])
    return None


def is_dominant_generator(u: Monomial, I: MonomialIdeal) -> bool:
    """Some variable of u has an exponent beating every other generator."""
    if u not in I.generators:
        raise InputError(f"{u} is not a minimal generator of {I}")
    others = [w for w in I.generators if w != u]
    return any(all(e > w[x] for w in others) for x, e in u.exps)


def dominant_flags(I: MonomialIdeal) -> tuple[bool, ...]:
    return tuple(is_dominant_generator(u, I) for u in I.generators)


def is_dominant(I: MonomialIdeal) -> bool:
    return all(dominant_flags(I))


def is_semidominant(I: MonomialIdeal) -> bool:
    return sum(not f for f in dominant_flags(I)) <= 1


@dataclass(frozen=True)
class KtyForm:
    """Decomposition of a squarefree ACI into one of six standard forms.

    Star forms (i)/(ii), with r the number of generators meeting the centre:
        (i)   u_1 v_1, ..., u_r v_r, u_{r+1}, ..., u_q, v_1 ... v_r
        (ii)  u_1 v_1, ..., u_r v_r, u_{r+1}, ..., u_q, u_{q+1} v_1 ... v_r
    Triangle forms, u_parts = (u_1, u_2, u_3, u_4, ..., u_{q+1}):
        u_1 v_1 v_2, u_2 v_1 v_3, u_3 v_2 v_3, u_4, ..., u_{q+1}
    with (iii) u_1 = u_2 = u_3 = 1, (iv) u_2 = u_3 = 1, (v) u_3 = 1,
    (vi) none trivial.
    """

    form_tag: str
    u_parts: tuple[Monomial, ...]
    v_parts: tuple[Monomial, ...]
    r: int | None = None

    def generators(self) -> list[Monomial]:
        u, v = self.u_parts, self.v_parts
        if self.form_tag in ("i", "ii"):
            r = self.r
            prod = Monomial()
            for p in v:
                prod = prod * p
            q = len(u) if self.form_tag == "i" else len(u) - 1
            gens = [u[i] * v[i] for i in range(r)] + list(u[r:q])
            gens.append(prod if self.form_tag == "i" else u[q] * prod)
            return gens
        v1, v2, v3 = v
        return [u[0] * v1 * v2, u[1] * v1 * v3, u[2] * v2 * v3] + list(u[3:])

    def parts(self) -> list[Monomial]:
        return [p for p in self.u_parts + self.v_parts if not p.is_one()]

    @property
    def dominant(self) -> bool:
        return self.form_tag in ("ii", "vi")

    def to_json(self, order: Sequence[str]) -> dict:
        return {
            "form": self.form_tag,
            "r": self.r,
            "u_parts": [p.to_str(order) for p in self.u_parts],
            "v_parts": [p.to_str(order) for p in self.v_parts],
        }


def _sharing_graph(gens: Sequence[Monomial]) -> dict[int, set[int]]:
    adj: dict[int, set[int]] = {k: set() for k in range(len(gens))}
    for a, b in combinations(range(len(gens)), 2):
        if gens[a].support() & gens[b].support():
            adj[a].add(b)
            adj[b].add(a)
    return adj


def _match_star(gens, adj) -> KtyForm:
    edges = sum(len(n) for n in adj.values()) // 2
    hubs = [k for k, n in adj.items() if len(n) >= 2]
    if len(hubs) == 1 and len(adj[hubs[0]]) == edges:
        centre = hubs[0]
    elif not hubs and edges == 1:
        # r = 1: either endpoint can be the centre; take the canonically later one
        centre = max(k for k, n in adj.items() if n)
    else:
        raise ClassificationError("sharing graph is neither a star nor a triangle")
    w = gens[centre]
    leaves = sorted(adj[centre])
    isolated = [k for k in range(len(gens)) if k != centre and not adj[k]]
    v_parts = tuple(gens[k].gcd(w) for k in leaves)
    u_lead = []
    for k, vk in zip(leaves, v_parts):
        uk = gens[k] / vk
        if uk.is_one():
            raise ClassificationError(f"{gens[k]} divides {w}")
        u_lead.append(uk)
    prod = Monomial()
    for p in v_parts:
        prod = prod * p
    rest = w / prod
    u_parts = tuple(u_lead) + tuple(gens[k] for k in isolated)
    r = len(leaves)
    if rest.is_one():
        if r < 2:
            raise ClassificationError("a single neighbour would divide the centre")
        return KtyForm("i", u_parts, v_parts, r)
    return KtyForm("ii", u_parts + (rest,), v_parts, r)


def _match_triangle(gens, tri) -> KtyForm:
    rem = {}
    for k in tri:
        others = [gens[j] for j in tri if j != k]
        shared = gens[k].gcd(others[0]).lcm(gens[k].gcd(others[1]))
        rem[k] = gens[k] / shared
    # generators with a nontrivial private part come first
    A, B, C = sorted(tri, key=lambda k: (rem[k].is_one(), k))
    v1 = gens[A].gcd(gens[B])
    v2 = gens[A].gcd(gens[C])
    v3 = gens[B].gcd(gens[C])
    n_trivial = sum(rem[k].is_one() for k in tri)
    tag = {3: "iii", 2: "iv", 1: "v", 0: "vi"}[n_trivial]
    isolated = tuple(gens[k] for k in range(len(gens)) if k not in tri)
    return KtyForm(tag, (rem[A], rem[B], rem[C]) + isolated, (v1, v2, v3))


def kty_form(I: MonomialIdeal) -> KtyForm:
    """Match a squarefree ACI of height >= 2 against the six standard forms."""
    if not I.is_squarefree():
        raise DomainError("kty_form needs a squarefree ideal; polarize first")
    h = height(I)
    if h != I.q - 1:
        raise DomainError(f"{I} is not an almost complete intersection")
    if h < 2:
        raise DomainError("kty_form needs height at least 2")
    gens = I.generators
    adj = _sharing_graph(gens)
    edges = {(a, b) for a in adj for b in adj[a] if a < b}
    tri = None
    if len(edges) == 3:
        nodes = sorted({k for e in edges for k in e})
        if len(nodes) == 3:
            tri = tuple(nodes)
    form = _match_triangle(gens, tri) if tri else _match_star(gens, adj)
    _check_reassembly(form, I)
    return form


def _check_reassembly(form: KtyForm, I: MonomialIdeal) -> None:
    parts = form.parts()
    if not _pairwise_disjoint(parts):
        raise ClassificationError(f"form ({form.form_tag}) parts are not pairwise disjoint")
    if any(p.is_one() for p in form.v_parts):
        raise ClassificationError("trivial v-part")
    nontrivial_u = form.u_parts[3:] if form.form_tag not in ("i", "ii") else form.u_parts
    if any(p.is_one() for p in nontrivial_u):
        raise ClassificationError("trivial u-part where the form forbids one")
    if sorted(form.generators(), key=str) != sorted(I.generators, key=str):
        raise ClassificationError(f"form ({form.form_tag}) does not reassemble to {I}")


def is_weakly_polymatroidal(I: MonomialIdeal, order: Sequence[str]) -> bool:
    """Exchange condition: whenever u, v first differ at x_t with
    deg_t u > deg_t v, some later x_j divides v and x_t v / x_j lies in I."""
    if set(order) != set(I.variables) or len(order) != len(I.variables):
        raise InputError("order must list every variable of the ideal exactly once")
    for u in I.generators:
        for v in I.generators:
            if u == v:
                continue
            t = next(k for k, x in enumerate(order) if u[x] != v[x])
            xt = order[t]
            if u[xt] <= v[xt]:
                continue
            if not any(
                v[xj] and I.contains(Monomial(((xt, 1),)) * (v / Monomial(((xj, 1),))))
                for xj in order[t + 1:]
            ):
                return False
    return True


def weakly_polymatroidal_order(I: MonomialIdeal, max_vars: int = 8) -> list[str] | None:
    """Search all orders of the variables that occur in G(I)."""
    used = [x for x in I.variables if any(g[x] for g in I.generators)]
    unused = [x for x in I.variables if x not in used]
    if len(used) > max_vars:
        raise ResourceError(f"{len(used)} variables exceeds the order-search bound {max_vars}")
    for perm in permutations(used):
        order = list(perm) + unused
        if is_weakly_polymatroidal(I, order):
            return order
    return None


def _linear_colon(prev: Sequence[Monomial], u: Monomial, variables) -> bool:
    if not prev:
        return True
    colon = MonomialIdeal(variables, tuple(w / w.gcd(u) for w in prev))
    return all(g.degree == 1 for g in colon.generators)


def has_linear_quotients(I: MonomialIdeal, max_gens: int = 8) -> list[Monomial] | None:
    """An order of G(I) whose successive colon ideals are generated by
    variables, or None.  Exhaustive over subsets, so None is definitive."""
    gens = I.generators
    q = len(gens)
    if q > max_gens:
        raise ResourceError(f"{q} generators exceeds the linear-quotients search bound {max_gens}")
    dead: set[int] = set()

    def extend(mask: int, order: list[int]) -> list[int] | None:
        if mask == (1 << q) - 1:
            return order
        if mask in dead:
            return None
        prev = [gens[k] for k in order]
        for j in range(q):
            if mask >> j & 1:
                continue
            if _linear_colon(prev, gens[j], I.variables):
                found = extend(mask | 1 << j, order + [j])
                if found is not None:
                    return found
        # success depends only on the set already placed, not its order
        dead.add(mask)
        return None

    found = extend(0, [])
    return None if found is None else [gens[k] for k in found]


@dataclass(frozen=True)
class CMEvidence:
    cohen_macaulay: bool
    height: int
    projective_dimension: int
    rule: str


def cohen_macaulay(I: MonomialIdeal, caps: Caps | None = None) -> CMEvidence:
    """R/I is Cohen-Macaulay iff pd(R/I) = height(I) (Auslander-Buchsbaum)."""
    h = height(I)
    pd = projective_dimension(I, caps)
    return CMEvidence(pd == h, h, pd, "pd-vs-height")


def cohen_macaulay_aci(I: MonomialIdeal, caps: Caps | None = None) -> CMEvidence:
    """For an ACI of shape (u_1, ..., u_q, v): Cohen-Macaulay iff not dominant.

    The answer is checked against the oracle's projective dimension.
    """
    if aci_decompose(I) is None:
        raise DomainError(f"{I} has no (complete intersection, v) splitting")
    verdict = not is_dominant(I)
    h = height(I)
    pd = projective_dimension(I, caps)
    if (pd == h) != verdict:
        raise InvariantViolation(
            f"{I}: dominance says CM={verdict} but pd={pd}, height={h}"
        )
    return CMEvidence(verdict, h, pd, "non-dominant")


@dataclass(frozen=True)
class AciReport:
    cohen_macaulay: bool
    unmixed: bool
    ass_equals_min: bool
    clean: bool
    agree: bool


def aci_equivalence_report(I: MonomialIdeal, caps: Caps | None = None) -> AciReport:
    """Cohen-Macaulay, unmixed and cleanness of an ACI, checked for agreement.

    Cleanness is reported as Ass = Min together with Cohen-Macaulayness.
    Ass = Min alone is not asserted: squarefree ideals always have it,
    including mixed ones that are not Cohen-Macaulay.
    """
    if not is_almost_complete_intersection(I):
        raise DomainError(f"{I} is not an almost complete intersection")
    cm = cohen_macaulay(I, caps).cohen_macaulay
    unmixed = is_unmixed(I)
    ass_min = set(associated_primes(I)) == set(minimal_primes(I))
    clean = ass_min and cm
    agree = cm == unmixed == clean
    if not agree:
        raise InvariantViolation(
            f"{I}: CM={cm}, unmixed={unmixed}, Ass=Min={ass_min} disagree"
        )
    return AciReport(cm, unmixed, ass_min, clean, agree)


@dataclass(frozen=True)
class Classification:
    is_ci: bool
    is_aci: bool
    height: int
    aci_split: AciSplit | None
    dominant_flags: tuple[bool, ...]
    is_dominant: bool
    is_semidominant: bool
    kty: KtyForm | None
    kty_on_polarization: bool


def classify(I: MonomialIdeal) -> Classification:
    h = height(I)
    ci = is_complete_intersection(I)
    aci = h == I.q - 1
    split = aci_decompose(I) if aci else None
    flags = dominant_flags(I)
    kty = None
    polarized = False
    if aci and h >= 2:
        if I.is_squarefree():
            kty = kty_form(I)
        else:
            kty = kty_form(polarize(I)[0])
            polarized = True
    return Classification(
        is_ci=ci,
        is_aci=aci,
        height=h,
        aci_split=split,
        dominant_flags=flags,
        is_dominant=all(flags),
        is_semidominant=sum(not f for f in flags) <= 1,
        kty=kty,
        kty_on_polarization=polarized,
    )
