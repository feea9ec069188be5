import random

from extor.linalg import (
    RatMatrix,
    kernel_basis,
    rank,
    rank_of_rows,
    rank_sparse_pure,
    rref,
    rref_dense_pure,
    rref_sparse_pure,
    solve,
)
from extor.rational import ONE, Rational, rat


def test_rref_proportional_rows():
    m = RatMatrix.from_rows([[2, 4], [1, 2]])
    reduced, pivots = rref(m)
    assert reduced.to_rows() == [[ONE, rat(2)]]
    assert pivots == [0]


def test_rref_identity():
    m = RatMatrix.identity(3)
    reduced, pivots = rref(m)
    assert reduced == m
    assert pivots == [0, 1, 2]


def test_rref_by_hand_elimination():
    # [[1,1],[1,-1]] row-reduces to the identity.
    m = RatMatrix.from_rows([[1, 1], [1, -1]])
    reduced, pivots = rref(m)
    assert reduced == RatMatrix.identity(2)
    assert pivots == [0, 1]


def test_rref_idempotent():
    rng = random.Random(7)
    for _ in range(50):
        m = _random_matrix(rng, 5, 6)
        reduced, pivots = rref(m)
        again, pivots2 = rref(reduced)
        assert again == reduced
        assert pivots2 == pivots
        assert pivots == sorted(pivots)


def test_kernel_zero_matrix():
    m = RatMatrix.zero(2, 3)
    basis = kernel_basis(m)
    assert basis == [
        [ONE, rat(0), rat(0)],
        [rat(0), ONE, rat(0)],
        [rat(0), rat(0), ONE],
    ]


def test_kernel_single_row():
    basis = kernel_basis(RatMatrix.from_rows([[1, 2]]))
    assert basis == [[rat(-2), ONE]]


def test_kernel_invertible():
    m = RatMatrix.from_rows([[1, 1], [1, -1]])
    assert kernel_basis(m) == []


def test_rank_plus_kernel_dimension():
    rng = random.Random(20240517)
    for _ in range(200):
        rows = rng.randrange(1, 7)
        cols = rng.randrange(1, 7)
        m = _random_matrix(rng, rows, cols)
        assert rank(m) + len(kernel_basis(m)) == cols


def test_solve_exact_roundtrip():
    rng = random.Random(99)
    for _ in range(100):
        rows = rng.randrange(1, 6)
        cols = rng.randrange(1, 6)
        m = _random_matrix(rng, rows, cols)
        x = [rat(rng.randrange(-4, 5), rng.randrange(1, 4)) for _ in range(cols)]
        b = m.apply(x)
        got = solve(m, b)
        assert got is not None
        assert m.apply(got) == b


def test_solve_inconsistent():
    m = RatMatrix.from_rows([[1, 2], [2, 4]])
    assert solve(m, [rat(1), rat(3)]) is None


def test_kernel_vectors_annihilated():
    rng = random.Random(5)
    for _ in range(50):
        m = _random_matrix(rng, 4, 7)
        for vec in kernel_basis(m):
            assert all(v == 0 for v in m.apply(vec))


def test_pure_and_dispatched_kernels_agree():
    rng = random.Random(11)
    for _ in range(40):
        rows = rng.randrange(1, 8)
        cols = rng.randrange(1, 8)
        m = _random_matrix(rng, rows, cols)
        reduced, pivots = rref(m)
        prows, ppivots = rref_sparse_pure(m.dict_rows(), m.cols)
        assert pivots == ppivots
        drows, dpivots = rref_dense_pure(m.to_rows(), m.cols)
        assert dpivots == pivots
        dense_from_sparse = [
            [row.get(c, rat(0)) for c in range(m.cols)] for row in prows
        ]
        assert dense_from_sparse == drows
        assert rank_sparse_pure(m.dict_rows(), m.cols) == len(pivots)


def test_rank_of_rows_entrypoint():
    rows = [{0: ONE, 2: rat(3)}, {0: rat(2), 2: rat(6)}, {1: ONE}]
    assert rank_of_rows(rows, 3) == 2


def test_sparse_path_above_cutoff():
    # 70x70 permutation-ish matrix exercises the sparse branch.
    n = 70
    entries = {(i, (i * 3) % n): rat(i + 1) for i in range(n)}
    m = RatMatrix(n, n, entries)
    assert rank(m) == n
    reduced, pivots = rref(m)
    assert reduced == RatMatrix.identity(n)
    assert pivots == list(range(n))


def _random_matrix(rng, rows, cols, density=0.6):
    entries = {}
    for r in range(rows):
        for c in range(cols):
            if rng.random() < density:
                entries[(r, c)] = Rational(rng.randrange(-5, 6))
    return RatMatrix(rows, cols, entries)
