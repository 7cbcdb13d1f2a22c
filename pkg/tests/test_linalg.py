import random
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from halphen.linalg import exact_rank, modp_rank


def naive_rank(rows, n_cols):
    """Plain Gaussian elimination over Fraction: the reference oracle."""
    matrix = []
    for row in rows:
        matrix.append([Fraction(row.get(j, 0)) for j in range(n_cols)])
    rank = 0
    col = 0
    while matrix and col < n_cols:
        pivot = next((i for i in range(rank, len(matrix)) if matrix[i][col]), None)
        if pivot is None:
            col += 1
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
        for i in range(rank + 1, len(matrix)):
            if matrix[i][col]:
                factor = matrix[i][col] / matrix[rank][col]
                matrix[i] = [a - factor * b for a, b in zip(matrix[i], matrix[rank])]
        rank += 1
        col += 1
    return rank


def random_sparse_rows(rng, n_rows, n_cols, density=0.4):
    rows = []
    for _ in range(n_rows):
        row = {}
        for j in range(n_cols):
            if rng.random() < density:
                row[j] = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        rows.append(row)
    return rows


def test_known_small_ranks():
    assert exact_rank([]) == 0
    assert exact_rank([{}]) == 0
    assert exact_rank([{0: 1}, {0: 2}]) == 1
    assert exact_rank([{0: 1, 1: 1}, {0: 1, 1: -1}]) == 2
    assert exact_rank([{0: Fraction(1, 2)}, {1: 1}, {0: 3, 1: 5}]) == 2


def test_rational_cancellation():
    # rows dependent only after exact rational arithmetic
    rows = [
        {0: Fraction(1, 3), 1: Fraction(1, 7)},
        {0: Fraction(2, 3), 1: Fraction(2, 7)},
    ]
    assert exact_rank(rows) == 1


def test_against_naive_oracle_randomized():
    rng = random.Random(20240811)
    for _ in range(60):
        n_rows = rng.randint(0, 8)
        n_cols = rng.randint(1, 8)
        rows = random_sparse_rows(rng, n_rows, n_cols)
        assert exact_rank(rows) == naive_rank(rows, n_cols)


def test_modp_agrees_with_exact_randomized():
    rng = random.Random(987123)
    for _ in range(60):
        n_rows = rng.randint(0, 10)
        n_cols = rng.randint(1, 10)
        rows = random_sparse_rows(rng, n_rows, n_cols)
        assert modp_rank(rows, n_cols) == exact_rank(rows)


@settings(max_examples=60)
@given(
    st.lists(
        st.dictionaries(st.integers(0, 6), st.integers(-20, 20), max_size=7),
        max_size=8,
    )
)
def test_exact_matches_naive_property(rows):
    assert exact_rank(rows) == naive_rank(rows, 7)


def test_row_scaling_invariance():
    rng = random.Random(5)
    rows = random_sparse_rows(rng, 6, 6)
    scaled = [{k: Fraction(7, 3) * v for k, v in row.items()} for row in rows]
    assert exact_rank(rows) == exact_rank(scaled)
