import random
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import I, m
from monobetti.core import ideal_power
from monobetti.corpus import star_aci
from monobetti.errors import DomainError, InvariantViolation, NotApplicableError
from monobetti.formulas import (
    FormulaResult,
    betti_aci_general,
    betti_aci_pair,
    betti_ci,
    betti_ci_power,
    betti_formula_dispatch,
    betti_kty,
    binom,
    smallest_s,
)
from monobetti.resolutions import oracle_betti


def test_binom():
    assert binom(5, 2) == 10
    assert binom(3, -1) == binom(3, 4) == binom(-1, 0) == 0


def test_result_validation():
    with pytest.raises(InvariantViolation):
        FormulaResult((1, 2), "P1")
    with pytest.raises(ValueError):
        FormulaResult((1, 1), "nope")


def test_ci():
    assert betti_ci(3).totals == (1, 3, 3, 1)


def test_smallest_s():
    ci = [m("x1*y1"), m("x2*y2"), m("x3*y3")]
    assert smallest_s(ci, m("y1*y2")) == 2
    assert smallest_s(ci, m("y1*x2*y3")) == 3
    with pytest.raises(DomainError):
        smallest_s(ci, m("z"))


def star(q, s):
    xs = ", ".join(f"x{k}*y{k}" for k in range(1, q + 1))
    v = "*".join(f"y{k}" for k in range(1, s + 1))
    return I(f"{xs}, {v}")


@pytest.mark.parametrize("q, s", [(2, 2), (3, 2), (3, 3), (4, 2), (4, 3), (5, 2), (5, 4)])
def test_general_matches_oracle(q, s):
    assert betti_aci_general(q, s).totals == oracle_betti(star(q, s)).totals


def test_frozen_values():
    # values confirmed against the oracle by test_general_matches_oracle
    assert betti_aci_general(5, 2).totals == (1, 6, 14, 16, 9, 2)
    assert betti_aci_pair(3).totals == (1, 4, 5, 2)
    assert betti_aci_pair(4).totals == (1, 5, 9, 7, 2)


@given(st.integers(2, 16).flatmap(lambda q: st.tuples(st.just(q), st.integers(2, q))))
def test_general_is_exact_sequence_shape(qs):
    q, s = qs
    res = betti_aci_general(q, s)  # construction checks alternating sum and beta_0
    assert res.pd == q
    assert all(b <= comb(q + 1, i) for i, b in enumerate(res.totals))
    assert res.totals[:s] == tuple(comb(q + 1, i) for i in range(s))


@given(st.integers(2, 16))
def test_pair_is_general(q):
    assert betti_aci_pair(q).totals == betti_aci_general(q, 2).totals


@given(st.integers(3, 16), st.sampled_from(["ii", "iii", "iv", "v", "vi"]))
def test_kty_totals_under_taylor(n, tag):
    res = betti_kty(tag, n)
    assert all(b <= comb(n, i) for i, b in enumerate(res.totals))
    assert res.totals[1] == n


def test_kty_requires_r_for_star():
    with pytest.raises(DomainError):
        betti_kty("i", 4)
    assert betti_kty("i", 4, r=2).totals == betti_aci_general(3, 2).totals


class TestDispatch:
    def test_headline(self, headline_ideal):
        res = betti_formula_dispatch(headline_ideal)
        assert res.totals == (1, 5, 9, 7, 2)
        assert res.via == "T3-via-polarization" and res.rule == "T2c"
        assert oracle_betti(headline_ideal).totals == res.totals

    def test_routes(self):
        assert betti_formula_dispatch(I("x, y")).rule == "CI-Koszul"
        assert betti_formula_dispatch(I("x*y, y*z")).totals == (1, 2, 1)
        assert betti_formula_dispatch(I("x^2, y^2, x*y")).rule == "T2a"
        assert betti_formula_dispatch(I("x^2, y^3, x*y^2*z")).totals == (1, 3, 3, 1)
        with pytest.raises(NotApplicableError):
            betti_formula_dispatch(I("x*y, y*z, z*w, w*x"))

    def test_random_stars_against_oracle(self):
        rng = random.Random(11)
        for _ in range(40):
            inst = star_aci(rng, max_q=5, max_vars=10)
            assert betti_formula_dispatch(inst.ideal).totals == oracle_betti(inst.ideal).totals


class TestEagonNorthcott:
    def test_values(self):
        assert betti_ci_power(2, 2).ideal_totals() == (3, 2)
        assert betti_ci_power(3, 2).ideal_totals() == (6, 8, 3)

    @given(st.integers(1, 10))
    def test_first_power_is_koszul(self, q):
        assert betti_ci_power(q, 1).totals == betti_ci(q).totals

    @pytest.mark.parametrize("q, s", [(2, 2), (2, 3), (3, 2), (3, 3)])
    def test_against_oracle(self, q, s):
        J = I(", ".join(f"x{k}^{k}" for k in range(1, q + 1)))
        assert betti_ci_power(q, s).totals == oracle_betti(ideal_power(J, s)).totals
