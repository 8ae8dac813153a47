import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from monobetti.linalg import integer_rank, sparse_rank

matrices = st.integers(1, 7).flatmap(
    lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=1, max_size=7)
)


def test_examples():
    assert integer_rank([[1, 2], [2, 4]]) == 1
    assert integer_rank([[0, 0], [0, 0]]) == 0
    assert integer_rank([[2, 0], [0, 3]]) == 2
    assert sparse_rank({(0, 0): 1, (1, 1): -1, (2, 0): 2}, 3, 2) == 2
    assert sparse_rank({}, 4, 4) == 0


@settings(max_examples=200)
@given(matrices)
def test_ranks_match_sympy(rows):
    expected = sympy.Matrix(rows).rank()
    assert integer_rank(rows) == expected
    entries = {(r, c): v for r, row in enumerate(rows) for c, v in enumerate(row) if v}
    assert sparse_rank(entries, len(rows), len(rows[0])) == expected


@given(matrices)
def test_rank_of_transpose(rows):
    cols = [list(c) for c in zip(*rows)]
    assert integer_rank(rows) == integer_rank(cols)
