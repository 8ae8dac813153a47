"""Monomials, monomial ideals and the basic ideal-theoretic operations on them.

Monomials are stored by variable *name* so they can move between rings
(polarization introduces new variables).  Ideals carry an ordered variable
list which fixes the canonical generator order and every bitmask encoding
used by the combinatorial routines.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, combinations_with_replacement
from typing import Iterable, Mapping, Sequence

from .errors import DomainError, InputError, ResourceError

__all__ = [
    "Monomial",
    "MonomialIdeal",
    "MonomialPrime",
    "PolarizationMap",
    "minimalize",
    "lcm_of",
    "divides",
    "support",
    "minimal_primes",
    "minimal_primes_bruteforce",
    "height",
    "polarize",
    "depolarize_monomial",
    "associated_primes",
    "is_unmixed",
    "alexander_dual",
    "ideal_power",
]


@dataclass(frozen=True)
class Monomial:
    """A monomial x1^a1 ... xn^an, stored as sorted (name, exponent) pairs.

    Zero exponents are dropped, so the monomial 1 is the empty tuple.
    """

    exps: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        merged: dict[str, int] = {}
        for var, e in self.exps:
            if not isinstance(e, int) or e < 0:
                raise InputError(f"exponent of {var!r} must be a nonnegative integer, got {e!r}")
            if e:
                merged[var] = merged.get(var, 0) + e
        object.__setattr__(self, "exps", tuple(sorted(merged.items())))

    @classmethod
    def from_dict(cls, mapping: Mapping[str, int]) -> Monomial:
        return cls(tuple(mapping.items()))

    @classmethod
    def from_vector(cls, variables: Sequence[str], vector: Sequence[int]) -> Monomial:
        return cls(tuple(zip(variables, vector)))

    @classmethod
    def one(cls) -> Monomial:
        return cls()

    @cached_property
    def as_dict(self) -> dict[str, int]:
        return dict(self.exps)

    def __getitem__(self, var: str) -> int:
        return self.as_dict.get(var, 0)

    def support(self) -> frozenset[str]:
        return frozenset(v for v, _ in self.exps)

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.exps)

    def is_one(self) -> bool:
        return not self.exps

    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.exps)

    def divides(self, other: Monomial) -> bool:
        od = other.as_dict
        return all(od.get(v, 0) >= e for v, e in self.exps)

    def __mul__(self, other: Monomial) -> Monomial:
        return Monomial(self.exps + other.exps)

    def __pow__(self, k: int) -> Monomial:
        return Monomial(tuple((v, e * k) for v, e in self.exps))

    def __truediv__(self, other: Monomial) -> Monomial:
        """Exact quotient; raises if `other` does not divide `self`."""
        if not other.divides(self):
            raise DomainError(f"{other} does not divide {self}")
        d = dict(self.exps)
        for v, e in other.exps:
            d[v] -= e
        return Monomial.from_dict(d)

    def lcm(self, other: Monomial) -> Monomial:
        d = dict(self.exps)
        for v, e in other.exps:
            if e > d.get(v, 0):
                d[v] = e
        return Monomial.from_dict(d)

    def gcd(self, other: Monomial) -> Monomial:
        od = other.as_dict
        return Monomial(tuple((v, min(e, od.get(v, 0))) for v, e in self.exps))

    def vector(self, variables: Sequence[str]) -> tuple[int, ...]:
        d = self.as_dict
        return tuple(d.get(v, 0) for v in variables)

    def to_str(self, order: Sequence[str] | None = None) -> str:
        if not self.exps:
            return "1"
        if order is None:
            items = self.exps
        else:
            rank = {v: i for i, v in enumerate(order)}
            items = sorted(self.exps, key=lambda ve: (rank.get(ve[0], len(rank)), ve[0]))
        return "*".join(v if e == 1 else f"{v}^{e}" for v, e in items)

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"Monomial({self.to_str()!r})"


def divides(a: Monomial, b: Monomial) -> bool:
    return a.divides(b)


def support(m: Monomial) -> frozenset[str]:
    return m.support()


def lcm_of(ms: Iterable[Monomial]) -> Monomial:
    ms = list(ms)
    if not ms:
        raise InputError("lcm of an empty list of monomials")
    out = ms[0]
    for m in ms[1:]:
        out = out.lcm(m)
    return out


def _canonical_key(variables: Sequence[str]):
    # ascending total degree, then lexicographically larger exponent vectors first
    def key(m: Monomial):
        vec = m.vector(variables)
        return (sum(vec), tuple(-e for e in vec))

    return key


@dataclass(frozen=True)
class MonomialIdeal:
    """A proper nonzero monomial ideal given by its minimal generators.

    Construction minimalizes and canonically orders ``generators``; two
    ideals over the same variable list compare equal iff they are equal.
    """

    variables: tuple[str, ...]
    generators: tuple[Monomial, ...]

    def __post_init__(self):
        variables = tuple(self.variables)
        if len(set(variables)) != len(variables):
            raise InputError(f"duplicate variables in {variables}")
        known = set(variables)
        gens = []
        for g in self.generators:
            unknown = g.support() - known
            if unknown:
                raise InputError(f"generator {g} uses undeclared variables {sorted(unknown)}")
            gens.append(g)
        if not gens:
            raise DomainError("the zero ideal is not representable")
        if any(g.is_one() for g in gens):
            raise DomainError("the unit ideal is not representable")
        unique = sorted(set(gens), key=_canonical_key(variables))
        # a divisor always sorts no later than its multiples (smaller degree)
        minimal: list[Monomial] = []
        for g in unique:
            if not any(m.divides(g) for m in minimal):
                minimal.append(g)
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "generators", tuple(minimal))

    @property
    def q(self) -> int:
        """Number of minimal generators."""
        return len(self.generators)

    @cached_property
    def vectors(self) -> tuple[tuple[int, ...], ...]:
        return tuple(g.vector(self.variables) for g in self.generators)

    @cached_property
    def support_masks(self) -> tuple[int, ...]:
        return tuple(
            sum(1 << k for k, e in enumerate(vec) if e) for vec in self.vectors
        )

    def is_squarefree(self) -> bool:
        return all(g.is_squarefree() for g in self.generators)

    def contains(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self.generators)

    def max_exponents(self) -> dict[str, int]:
        return {v: max(vec[k] for vec in self.vectors) for k, v in enumerate(self.variables)}

    def with_generators(self, gens: Iterable[Monomial]) -> MonomialIdeal:
        return MonomialIdeal(self.variables, tuple(gens))

    def to_str(self) -> str:
        return ", ".join(g.to_str(self.variables) for g in self.generators)

    def __str__(self) -> str:
        return f"({self.to_str()})"


def minimalize(gens: Iterable[Monomial], variables: Sequence[str]) -> MonomialIdeal:
    return MonomialIdeal(tuple(variables), tuple(gens))


@dataclass(frozen=True)
class MonomialPrime:
    """The prime ideal generated by a set of variables."""

    vars: frozenset[str]

    def generator(self) -> Monomial:
        return Monomial(tuple((v, 1) for v in self.vars))

    def __len__(self) -> int:
        return len(self.vars)

    def sorted_vars(self, order: Sequence[str]) -> list[str]:
        rank = {v: i for i, v in enumerate(order)}
        return sorted(self.vars, key=lambda v: (rank.get(v, len(rank)), v))


def sort_primes(primes: Iterable[MonomialPrime], order: Sequence[str]) -> list[MonomialPrime]:
    rank = {v: i for i, v in enumerate(order)}
    return sorted(primes, key=lambda p: (len(p), sorted(rank[v] for v in p.vars)))


def _check_proper(I: MonomialIdeal) -> None:
    # construction already rejects the zero and unit ideals
    if not isinstance(I, MonomialIdeal):
        raise InputError(f"expected a MonomialIdeal, got {type(I).__name__}")


def _minimal_edges(masks: Iterable[int]) -> list[int]:
    edges = sorted(set(masks), key=lambda m: (bin(m).count("1"), m))
    out: list[int] = []
    for e in edges:
        if not any(f & e == f for f in out):
            out.append(e)
    return out


def _minimal_transversals(masks: Sequence[int]) -> list[int]:
    """All inclusion-minimal vertex covers of the hypergraph with edge bitmasks."""
    edges = _minimal_edges(masks)
    found: set[int] = set()
    seen: set[tuple[int, int]] = set()

    def has_private_edges(cover: int) -> bool:
        v = cover
        while v:
            bit = v & -v
            v ^= bit
            if not any(e & cover == bit for e in edges):
                return False
        return True

    def rec(cover: int, banned: int) -> None:
        if (cover, banned) in seen:
            return
        seen.add((cover, banned))
        open_edges = [e for e in edges if not e & cover]
        if not open_edges:
            found.add(cover)
            return
        e = min(open_edges, key=lambda m: bin(m & ~banned).count("1"))
        choices = e & ~banned
        while choices:
            bit = choices & -choices
            choices ^= bit
            nxt = cover | bit
            # private edges only disappear as the cover grows
            if has_private_edges(nxt):
                rec(nxt, banned)
            banned |= bit

    rec(0, 0)
    return sorted(found)


def _bits(mask: int):
    while mask:
        bit = mask & -mask
        mask ^= bit
        yield bit


def _mask_to_prime(mask: int, variables: Sequence[str]) -> MonomialPrime:
    return MonomialPrime(frozenset(v for k, v in enumerate(variables) if mask >> k & 1))


def minimal_primes(I: MonomialIdeal) -> list[MonomialPrime]:
    """Minimal primes of I, as minimal transversals of the generator supports."""
    _check_proper(I)
    covers = _minimal_transversals(I.support_masks)
    return sort_primes((_mask_to_prime(c, I.variables) for c in covers), I.variables)


def minimal_primes_bruteforce(I: MonomialIdeal, max_vars: int = 20) -> list[MonomialPrime]:
    """Exhaustive subset scan; independent of the branching enumeration."""
    n = len(I.variables)
    if n > max_vars:
        raise ResourceError(f"{n} variables exceeds exhaustive bound {max_vars}")
    masks = I.support_masks
    found: list[int] = []
    for k in range(n + 1):
        for combo in combinations(range(n), k):
            c = sum(1 << i for i in combo)
            if all(m & c for m in masks) and not any(f & c == f for f in found):
                found.append(c)
    return sort_primes((_mask_to_prime(c, I.variables) for c in found), I.variables)


def height(I: MonomialIdeal) -> int:
    return min(len(p) for p in minimal_primes(I))


@dataclass(frozen=True)
class PolarizationMap:
    """forward[(x, j)] is the variable standing for the j-th copy of x."""

    forward: Mapping[tuple[str, int], str] = field(hash=False)
    backward: Mapping[str, tuple[str, int]] = field(hash=False)


def _slot_names(I: MonomialIdeal) -> PolarizationMap:
    maxe = I.max_exponents()
    taken = set(I.variables)
    sep = "_"
    while True:
        names = {
            (v, j): f"{v}{sep}{j}"
            for v in I.variables
            if maxe[v] > 1
            for j in range(1, maxe[v] + 1)
        }
        clash = set(names.values()) & taken
        if not clash and len(set(names.values())) == len(names):
            break
        sep += "_"
    forward = dict(names)
    for v in I.variables:
        if maxe[v] <= 1:
            forward[(v, 1)] = v
    backward = {name: key for key, name in forward.items()}
    return PolarizationMap(forward, backward)


def polarize(I: MonomialIdeal) -> tuple[MonomialIdeal, PolarizationMap]:
    """Replace each x^a by x_1 x_2 ... x_a.

    Variables that only occur to the first power keep their name, so a
    squarefree ideal polarizes to itself.
    """
    pmap = _slot_names(I)
    maxe = I.max_exponents()
    variables: list[str] = []
    for v in I.variables:
        variables.extend(pmap.forward[(v, j)] for j in range(1, max(maxe[v], 1) + 1))
    gens = [
        Monomial(tuple((pmap.forward[(v, j)], 1) for v, e in g.exps for j in range(1, e + 1)))
        for g in I.generators
    ]
    P = MonomialIdeal(tuple(variables), tuple(gens))
    if P.q != I.q:
        raise AssertionError("polarization changed the number of generators")
    return P, pmap


def depolarize_monomial(m: Monomial, pmap: PolarizationMap) -> Monomial:
    d: dict[str, int] = {}
    for name, e in m.exps:
        var, _ = pmap.backward[name]
        d[var] = d.get(var, 0) + e
    return Monomial.from_dict(d)


def associated_primes(I: MonomialIdeal) -> list[MonomialPrime]:
    """Depolarized minimal primes of the polarization of I."""
    P, pmap = polarize(I)
    primes = {
        MonomialPrime(frozenset(pmap.backward[v][0] for v in p.vars)) for p in minimal_primes(P)
    }
    return sort_primes(primes, I.variables)


def is_unmixed(I: MonomialIdeal) -> bool:
    h = height(I)
    return all(len(p) == h for p in associated_primes(I))


def alexander_dual(I: MonomialIdeal) -> MonomialIdeal:
    if not I.is_squarefree():
        raise DomainError(f"Alexander dual needs a squarefree ideal, got {I}")
    return I.with_generators(p.generator() for p in minimal_primes(I))


def ideal_power(I: MonomialIdeal, s: int) -> MonomialIdeal:
    if not isinstance(s, int) or s < 1:
        raise InputError(f"power must be a positive integer, got {s!r}")
    prods = []
    for combo in combinations_with_replacement(I.generators, s):
        m = Monomial()
        for g in combo:
            m = m * g
        prods.append(m)
    return I.with_generators(prods)
