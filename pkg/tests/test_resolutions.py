from collections import Counter
from math import comb

import pytest
import sympy
from hypothesis import given, settings

from conftest import I, ideals, m
from monobetti.errors import DomainError, ResourceError
from monobetti.resolutions import (
    Caps,
    SimplicialComplex,
    is_taylor_minimal,
    koszul_homology,
    l_counts,
    oracle_betti,
    reduced_homology,
    scarf_betti,
    scarf_chain_complex,
    scarf_complex,
    subset_lcms,
    taylor_complex,
)


def taylor_strand_betti(J):
    """Independent route: beta_{i,b} is the homology of the Taylor complex
    restricted to subsets with lcm exactly b, over Q (computed by sympy)."""
    lcms = subset_lcms(J)
    groups = {}
    for mask, l in enumerate(lcms):
        groups.setdefault(l, []).append(mask)
    totals = Counter()
    for b, masks in groups.items():
        by_size = {}
        for mk in masks:
            by_size.setdefault(bin(mk).count("1"), []).append(mk)

        def rank(k):
            src, dst = by_size.get(k, []), by_size.get(k - 1, [])
            if not src or not dst:
                return 0
            idx = {f: r for r, f in enumerate(dst)}
            M = sympy.zeros(len(dst), len(src))
            for c, f in enumerate(src):
                bits = [1 << j for j in range(J.q) if f >> j & 1]
                for j, bit in enumerate(bits):
                    if f ^ bit in idx:
                        M[idx[f ^ bit], c] = (-1) ** j
            return M.rank()

        for k, fs in by_size.items():
            h = len(fs) - rank(k) - rank(k + 1)
            if h:
                totals[k] += h
    return tuple(totals[i] for i in range(max(totals) + 1))


class TestTaylor:
    def test_ranks_and_labels(self):
        T = taylor_complex(I("x^2, x*y, y^2"))
        assert T.ranks() == (1, 3, 3, 1)
        labels = sorted(l.to_str(("x", "y")) for l in T.labels[2] + T.labels[3])
        assert labels == sorted(["x^2*y", "x*y^2", "x^2*y^2", "x^2*y^2"])

    def test_not_minimal(self):
        assert not is_taylor_minimal(I("x^2, x*y, y^2"))
        assert is_taylor_minimal(I("x^2, y^2"))

    @settings(max_examples=60)
    @given(ideals(max_vars=4, max_gens=5))
    def test_d_squared_and_binomial_ranks(self, J):
        T = taylor_complex(J)
        T.check_d_squared()
        assert T.ranks() == tuple(comb(J.q, i) for i in range(J.q + 1))

    def test_cap(self):
        J = I(", ".join(f"x{k}" for k in range(1, 8)))
        with pytest.raises(ResourceError):
            taylor_complex(J, Caps(max_taylor_gens=6))


class TestScarf:
    def test_faces(self):
        assert scarf_complex(I("x^2, x*y, y^2")).faces() == {0, 1, 2, 4, 3, 6}
        # every pair of (xy, xz, yz) has lcm xyz, so only vertices survive
        assert scarf_complex(I("x*y, x*z, y*z")).faces() == {0, 1, 2, 4}

    def test_betti_on_semidominant(self):
        assert scarf_betti(I("x^2, x*y, y^2")).totals == (1, 3, 2)
        with pytest.raises(DomainError):
            scarf_betti(I("x*y, x*z, y*z"))

    def test_chain_complex(self):
        S = scarf_chain_complex(I("x^2, x*y, y^2"))
        S.check_d_squared()
        assert S.ranks() == (1, 3, 2)


class TestHomology:
    def test_simplicial_examples(self):
        assert reduced_homology(SimplicialComplex(0, ())) == {}
        assert reduced_homology(SimplicialComplex(0, (0,))) == {-1: 1}
        assert reduced_homology(SimplicialComplex(2, (1, 2))) == {0: 1}
        assert reduced_homology(SimplicialComplex(3, (0b111,))) == {}
        assert reduced_homology(SimplicialComplex(3, (0b011, 0b101, 0b110))) == {1: 1}
        octahedron = [a | b | c for a in (1, 2) for b in (4, 8) for c in (16, 32)]
        assert reduced_homology(SimplicialComplex(6, tuple(octahedron))) == {2: 1}

    @settings(max_examples=60)
    @given(ideals(max_vars=5, max_gens=5))
    def test_direct_and_nerve_agree(self, J):
        for b in set(subset_lcms(J)[1:]):
            assert koszul_homology(J, b, "direct") == koszul_homology(J, b, "nerve")


class TestOracle:
    def test_examples(self):
        assert oracle_betti(I("x^2, x*y, y^2")).totals == (1, 3, 2)
        assert oracle_betti(I("x*y, x*z, y*z")).totals == (1, 3, 2)
        assert oracle_betti(I("x, y, z")).totals == (1, 3, 3, 1)
        assert oracle_betti(I("x*y, y*z")).totals == (1, 2, 1)

    def test_multidegrees(self):
        t = oracle_betti(I("x^2, x*y, y^2"))
        assert {b for (i, b) in t.entries if i == 2} == {m("x^2*y"), m("x*y^2")}

    @settings(max_examples=80, deadline=None)
    @given(ideals(max_vars=4, max_gens=5))
    def test_matches_taylor_strands(self, J):
        assert oracle_betti(J).totals == taylor_strand_betti(J)

    def test_caps(self):
        J = I("x1, x2, x3, x4")
        with pytest.raises(ResourceError):
            oracle_betti(J, Caps(max_gens=3))
        with pytest.raises(ResourceError):
            oracle_betti(J, Caps(max_vars=3))

    def test_caps_from_env(self, monkeypatch):
        monkeypatch.setenv("MONOBETTI_MAX_GENS", "5")
        assert Caps.from_env().max_gens == 5


def test_l_counts():
    ci = [m("x1*y1"), m("x2*y2"), m("x3*y3")]
    # v = y1*y2 escapes exactly the subsets missing u_1 or u_2
    assert l_counts(ci, m("y1*y2")) == [1, 3, 2, 0]
    with pytest.raises(DomainError):
        l_counts([m("x*y"), m("y*z")], m("x"))
