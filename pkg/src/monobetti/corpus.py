"""Seeded random generators for test and verification corpora.

Every generator takes a ``random.Random`` so corpora are reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .core import Monomial, MonomialIdeal
from .errors import DomainError


def _mono(pairs) -> Monomial:
    return Monomial(tuple(pairs))


def random_ideal(
    rng: random.Random,
    max_vars: int = 8,
    max_gens: int = 6,
    max_exp: int = 3,
    zero_prob: float = 0.55,
) -> MonomialIdeal:
    """Unstructured ideal with at most max_gens minimal generators."""
    while True:
        n = rng.randint(2, max_vars)
        variables = tuple(f"x{k}" for k in range(1, n + 1))
        top = 1 if rng.random() < 0.3 else max_exp
        gens = []
        for _ in range(rng.randint(1, max_gens)):
            pairs = [(v, rng.randint(1, top)) for v in variables if rng.random() > zero_prob]
            if pairs:
                gens.append(_mono(pairs))
        if gens:
            return MonomialIdeal(variables, tuple(gens))


class _Names:
    def __init__(self, rng: random.Random, budget: int):
        self.rng = rng
        self.budget = budget
        self.used: list[str] = []

    def block(self, want: int = 0) -> list[str]:
        """Fresh variables; size 1 or 2 unless forced, within the budget."""
        remaining = self.budget - len(self.used)
        size = want or (2 if self.rng.random() < 0.35 else 1)
        if remaining < max(want, 1):
            raise DomainError("variable budget exhausted")
        size = min(size, remaining)
        out = [f"x{len(self.used) + k + 1}" for k in range(size)]
        self.used.extend(out)
        return out

    def ideal(self, gens) -> MonomialIdeal:
        names = list(self.used)
        self.rng.shuffle(names)
        return MonomialIdeal(tuple(names), tuple(gens))


@dataclass(frozen=True)
class StarInstance:
    ideal: MonomialIdeal
    ci_part: tuple[Monomial, ...]
    v: Monomial
    s: int | None  # None when v divides no lcm of the CI part


def star_aci(
    rng: random.Random,
    max_q: int = 6,
    max_vars: int = 12,
    squarefree: bool | None = None,
    divides_prob: float = 0.75,
) -> StarInstance:
    """(u_1, ..., u_q, v) with the u_i support-disjoint and v meeting s >= 2 of them."""
    if squarefree is None:
        squarefree = rng.random() < 0.5
    while True:
        try:
            return _star_once(rng, max_q, max_vars, squarefree, rng.random() < divides_prob)
        except DomainError:
            continue


def _star_once(rng, max_q, max_vars, squarefree, divides) -> StarInstance:
    q = rng.randint(2, max_q)
    s = rng.randint(2, q)
    names = _Names(rng, max_vars)
    ci, vpairs = [], []
    for k in range(q):
        shared = k < s
        block = names.block(2 if shared and squarefree else 0)
        if squarefree:
            exps = [1] * len(block)
        else:
            exps = [rng.randint(1, 3) for _ in block]
        if shared:
            if len(block) == 1 and exps[0] == 1:
                exps[0] = rng.randint(2, 3)
            # v takes a proper part of u_k so that u_k does not divide v
            while True:
                part = [(x, rng.randint(1, e)) if rng.random() < 0.7 else (x, 0)
                        for x, e in zip(block, exps)]
                if any(e for _, e in part) and any(pe < e for (_, pe), e in zip(part, exps)):
                    break
            vpairs.extend(part)
        ci.append(_mono(zip(block, exps)))
    if not divides:
        extra = names.block(1)
        vpairs.append((extra[0], 1 if squarefree else rng.randint(1, 2)))
    v = _mono(vpairs)
    I = names.ideal(ci + [v])
    if I.q != q + 1:
        raise DomainError("degenerate draw")
    return StarInstance(I, tuple(ci), v, s if divides else None)


def kty_instance(rng: random.Random, tag: str, max_q: int = 5, max_vars: int = 12) -> MonomialIdeal:
    """A squarefree ideal built from the template of the given form."""
    while True:
        try:
            return _kty_once(rng, tag, max_q, max_vars)
        except DomainError:
            continue


def _kty_once(rng, tag, max_q, max_vars) -> MonomialIdeal:
    names = _Names(rng, max_vars)

    def part() -> Monomial:
        return _mono((x, 1) for x in names.block())

    if tag in ("i", "ii"):
        q = rng.randint(2, max_q)
        r = rng.randint(2, q)
        u = [part() for _ in range(q)]
        v = [part() for _ in range(r)]
        prod = Monomial()
        for p in v:
            prod = prod * p
        gens = [u[k] * v[k] for k in range(r)] + u[r:]
        gens.append(prod if tag == "i" else part() * prod)
    else:
        q = rng.randint(2, max_q)
        n_nontrivial = {"iii": 0, "iv": 1, "v": 2, "vi": 3}[tag]
        v1, v2, v3 = part(), part(), part()
        u = [part() if k < n_nontrivial else Monomial() for k in range(3)]
        gens = [u[0] * v1 * v2, u[1] * v1 * v3, u[2] * v2 * v3]
        gens += [part() for _ in range(q - 2)]
    I = names.ideal(gens)
    if len(names.used) > max_vars or I.q != len(gens):
        raise DomainError("degenerate draw")
    return I


def generate_corpus(seed: int, size: int = 100) -> list[MonomialIdeal]:
    """Mixed corpus: unstructured ideals, star-shaped ACIs and all six forms."""
    rng = random.Random(seed)
    out = []
    tags = ("i", "ii", "iii", "iv", "v", "vi")
    for k in range(size):
        kind = k % 4
        if kind in (0, 1):
            out.append(random_ideal(rng))
        elif kind == 2:
            out.append(star_aci(rng, max_q=5).ideal)
        else:
            out.append(kty_instance(rng, tags[(k // 4) % 6], max_q=4))
    return out
