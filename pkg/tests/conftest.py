import pytest
from hypothesis import strategies as st

from monobetti.core import Monomial, MonomialIdeal
from monobetti.parsing import parse_ideal, parse_monomial


def I(text: str) -> MonomialIdeal:
    return parse_ideal(text)


def m(text: str) -> Monomial:
    return parse_monomial(text)


@st.composite
def ideals(draw, max_vars=5, max_gens=5, max_exp=3, squarefree=False):
    n = draw(st.integers(2, max_vars))
    variables = tuple(f"x{k}" for k in range(1, n + 1))
    top = 1 if squarefree else max_exp
    vecs = draw(
        st.lists(
            st.lists(st.integers(0, top), min_size=n, max_size=n).filter(any),
            min_size=1,
            max_size=max_gens,
        )
    )
    return MonomialIdeal(variables, tuple(Monomial.from_vector(variables, v) for v in vecs))


@pytest.fixture
def headline_ideal():
    return I("x1^2*x2*x3^3, x5*x2*x4^5, x3^3*x4^5, x6*x7^3, x8*x9^2")
