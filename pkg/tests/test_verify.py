import random

from conftest import I
from monobetti.classify import aci_decompose
from monobetti.core import height
from monobetti.corpus import generate_corpus, random_ideal, star_aci
from monobetti.verify import CHECKS, check_ideal, verify_corpus


def test_generated_corpus_passes():
    rep = verify_corpus(generate_corpus(7, 60), seed=7)
    assert rep["ok"], rep["failures"]
    assert rep["corpus_size"] == 60
    assert set(rep["checks"]) == set(CHECKS)


def test_corpus_is_seeded():
    assert generate_corpus(3, 20) == generate_corpus(3, 20)
    assert generate_corpus(3, 20) != generate_corpus(4, 20)


def test_check_ideal_skips_inapplicable():
    res = check_ideal(I("x^2, y"))
    assert res["alexander_dual_involution"] is None
    assert res["formula_equals_oracle"] is True


def test_failures_are_reported():
    rep = verify_corpus([I("x*y, y*z")])
    assert rep["ok"] and rep["failures"] == []


def test_star_instances_are_acis():
    rng = random.Random(0)
    for _ in range(50):
        inst = star_aci(rng, max_q=5)
        J = inst.ideal
        assert height(J) == J.q - 1
        assert aci_decompose(J) is not None
        assert len(J.variables) <= 12


def test_random_ideal_bounds():
    rng = random.Random(1)
    for _ in range(100):
        J = random_ideal(rng, max_vars=6, max_gens=4)
        assert J.q <= 4 and len(J.variables) <= 6
