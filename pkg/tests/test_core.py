from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import I, ideals, m
from monobetti.core import (
    Monomial,
    MonomialIdeal,
    MonomialPrime,
    alexander_dual,
    associated_primes,
    depolarize_monomial,
    divides,
    height,
    ideal_power,
    is_unmixed,
    lcm_of,
    minimal_primes,
    minimal_primes_bruteforce,
    minimalize,
    polarize,
    support,
)
from monobetti.errors import DomainError, InputError


def primes(*groups):
    return {MonomialPrime(frozenset(g)) for g in groups}


class TestMonomial:
    def test_zero_exponents_dropped(self):
        assert Monomial((("x", 0), ("y", 2))) == m("y^2")
        assert Monomial().is_one()

    def test_divides(self):
        assert divides(m("x"), m("x^2*y"))
        assert not divides(m("x^3"), m("x^2*y"))
        assert divides(Monomial(), m("x*y"))

    def test_support(self):
        assert support(m("x^2*y")) == {"x", "y"}
        assert support(Monomial()) == frozenset()
        assert support(m("x1*x4^5")) == {"x1", "x4"}

    def test_lcm(self):
        assert lcm_of([m("x^2*y"), m("x*z")]) == m("x^2*y*z")
        assert lcm_of([m("x*y^3")]) == m("x*y^3")
        assert lcm_of([m("x^2*y"), m("x*y^4*z"), m("y^3")]) == m("x^2*y^4*z")
        with pytest.raises(InputError):
            lcm_of([])

    def test_quotient(self):
        assert m("x^2*y") / m("x") == m("x*y")
        with pytest.raises(DomainError):
            m("x") / m("y")


class TestMinimalize:
    def test_examples(self):
        assert minimalize([m("x^2"), m("x^3"), m("y")], ["x", "y"]).generators == (m("y"), m("x^2"))
        assert minimalize([m("x^2*y"), m("x^2*y")], ["x", "y"]).generators == (m("x^2*y"),)
        J = minimalize([m("x*y"), m("y*z"), m("x*z"), m("x*y*z")], ["x", "y", "z"])
        assert set(J.generators) == {m("x*y"), m("y*z"), m("x*z")}

    def test_canonical_order_is_graded_lex(self):
        assert I("vars: x, y; y^2, x*y, x^2").generators == (m("x^2"), m("x*y"), m("y^2"))

    def test_unknown_variable(self):
        with pytest.raises(InputError):
            minimalize([m("z")], ["x"])

    def test_zero_and_unit_rejected(self):
        with pytest.raises(DomainError):
            MonomialIdeal(("x",), ())
        with pytest.raises(DomainError):
            MonomialIdeal(("x",), (Monomial(), m("x")))

    @given(ideals(), st.randoms())
    def test_idempotent_and_order_independent(self, J, rnd):
        gens = list(J.generators) + [g * m("x1") for g in J.generators]
        rnd.shuffle(gens)
        again = minimalize(gens, J.variables)
        assert again == J
        assert minimalize(again.generators, J.variables) == again
        for a, b in combinations(again.generators, 2):
            assert not a.divides(b) and not b.divides(a)


class TestPrimes:
    def test_examples(self):
        assert set(minimal_primes(I("x*y, y*z"))) == primes("y", "xz")
        assert set(minimal_primes(I("x*y, x*z, y*z"))) == primes("xy", "xz", "yz")

    def test_derived_example_against_bruteforce(self):
        J = I("x^4, y^3*z^2, x^2*y^4*z")
        assert set(minimal_primes_bruteforce(J)) == primes("xy", "xz")
        assert set(minimal_primes(J)) == primes("xy", "xz")
        assert height(J) == 2

    def test_height(self):
        assert height(I("x*y, y*z")) == 1
        assert height(I("x, y, z")) == 3

    @settings(max_examples=150)
    @given(ideals(max_vars=7, max_gens=6))
    def test_transversals_match_bruteforce(self, J):
        assert minimal_primes(J) == minimal_primes_bruteforce(J)

    @given(ideals(max_vars=5, max_gens=5))
    def test_primes_meet_every_generator_minimally(self, J):
        for p in minimal_primes(J):
            assert all(g.support() & p.vars for g in J.generators)
            for x in p.vars:
                assert not all(g.support() & (p.vars - {x}) for g in J.generators)

    @given(ideals())
    def test_height_at_most_generators(self, J):
        assert height(J) <= J.q


class TestAssociatedPrimes:
    def test_squarefree_ass_is_min(self):
        J = I("x*y, y*z, z*w")
        assert associated_primes(J) == minimal_primes(J)

    def test_not_clean_example(self):
        J = I("x^4, y^3*z^2, x^2*y^4*z")
        ass, mins = set(associated_primes(J)), set(minimal_primes(J))
        assert mins < ass
        assert ass == primes("xy", "xz", "xyz")

    def test_complete_intersection(self):
        assert set(associated_primes(I("x^2, y^2"))) == primes("xy")

    def test_unmixed(self):
        assert not is_unmixed(I("x*y, y*z"))
        assert is_unmixed(I("x*y, x*z, y*z"))
        assert not is_unmixed(I("x^4, y^3*z^2, x^2*y^4*z"))

    @given(ideals(max_vars=4, max_gens=4))
    def test_every_ass_contains_a_min(self, J):
        mins = minimal_primes(J)
        ass = associated_primes(J)
        assert set(mins) <= set(ass)
        assert all(any(p.vars <= a.vars for p in mins) for a in ass)


class TestPolarization:
    def test_examples(self):
        P, pmap = polarize(I("x^2"))
        assert P.generators == (m("x_1*x_2"),)
        P, _ = polarize(I("x^2, x*y"))
        assert set(P.generators) == {m("x_1*x_2"), m("x_1*y")}

    def test_squarefree_is_identity(self):
        J = I("x*y, y*z")
        assert polarize(J)[0] == J

    def test_name_clash_avoided(self):
        J = I("x^2, x_1*y")
        P, pmap = polarize(J)
        assert len(set(P.variables)) == len(P.variables)
        assert {depolarize_monomial(g, pmap) for g in P.generators} == set(J.generators)

    @given(ideals())
    def test_roundtrip(self, J):
        P, pmap = polarize(J)
        assert P.is_squarefree()
        assert P.q == J.q
        assert {depolarize_monomial(g, pmap) for g in P.generators} == set(J.generators)
        for key, name in pmap.forward.items():
            assert pmap.backward[name] == key


class TestAlexanderDual:
    def test_examples(self):
        assert alexander_dual(I("x*y, y*z")) == I("vars: x, y, z; y, x*z")
        J = I("x*y, x*z, y*z")
        assert alexander_dual(J) == J

    def test_requires_squarefree(self):
        with pytest.raises(DomainError):
            alexander_dual(I("x^2, y"))

    @given(ideals(max_vars=6, max_gens=5, squarefree=True))
    def test_involution(self, J):
        D = alexander_dual(J)
        assert alexander_dual(D) == J
        assert D.q == len(minimal_primes(J))


class TestPowers:
    def test_examples(self):
        assert ideal_power(I("x, y"), 2) == I("x^2, x*y, y^2")
        J = I("x^2, y^3")
        assert ideal_power(J, 1) == J
        assert ideal_power(J, 2) == I("x^4, x^2*y^3, y^6")
        with pytest.raises(InputError):
            ideal_power(J, 0)

    @settings(max_examples=40)
    @given(ideals(max_vars=3, max_gens=3), st.integers(1, 2), st.integers(1, 2))
    def test_additive(self, J, s, t):
        A, B = ideal_power(J, s), ideal_power(J, t)
        prod = J.with_generators(a * b for a in A.generators for b in B.generators)
        assert ideal_power(J, s + t) == prod
