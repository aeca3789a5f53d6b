from .linalg_setup import *


def test_identity():
    f = linalg.cholesky_factor(jnp.eye(4))
    assert_allclose(f.L, np.eye(4))
    assert f.n == 4


def test_two_by_two():
    f = linalg.cholesky_factor(jnp.array([[4., 2.], [2., 3.]]))
    expected = np.array([[2., 0.], [1., math.sqrt(2.)]])
    assert_allclose(f.L, expected, atol=1e-14)


def test_indefinite():
    with pytest.raises(NonSPD):
        linalg.cholesky_factor(jnp.array([[1., 2.], [2., 1.]]))


def test_singular():
    with pytest.raises(NonSPD):
        linalg.cholesky_factor(jnp.array([[1., 1.], [1., 1.]]))


def test_not_symmetric():
    with pytest.raises(NotSymmetric):
        linalg.cholesky_factor(jnp.array([[2., 1.], [0., 2.]]))


@pytest.mark.parametrize("n", [1, 5, 20, 60])
def test_reconstruction(n):
    M = random_spd(keys[n % 16], n)
    f = linalg.cholesky_factor(M)
    L = np.asarray(f.L)
    assert_allclose(L, np.tril(L))
    assert_allclose(L @ L.T, M, rtol=1e-10, atol=1e-10 * np.abs(M).max())


def test_solve():
    M = random_spd(keys[1], 12)
    b = np.asarray(random.normal(keys[2], (12,)))
    f = linalg.cholesky_factor(M)
    assert_allclose(f.solve(b), np.linalg.solve(M, b), rtol=1e-9)
    B = np.asarray(random.normal(keys[3], (12, 3)))
    assert_allclose(f.solve(B), np.linalg.solve(M, B), rtol=1e-9)


def test_sparse_input():
    M = linalg.from_dense(np.array([[4., 2.], [2., 3.]]), symmetric=True)
    f = linalg.cholesky_factor(M)
    assert_allclose(f.L @ f.L.T, M.toarray(), atol=1e-14)


def test_shift():
    f = linalg.cholesky_factor(jnp.zeros((3, 3)), shift=1.)
    assert_allclose(f.L, np.eye(3))
    assert f.shift == 1.


def test_empty():
    f = linalg.cholesky_factor(jnp.zeros((0, 0)))
    assert f.n == 0
    b = jnp.zeros((0,))
    assert f.solve(b).shape == (0,)


def test_desk_scale():
    with pytest.raises(DeskScaleExceeded):
        linalg.cholesky_factor(linalg.identity(linalg.DESK_SCALE + 1))


def test_equilibrate():
    # blocks eight orders of magnitude apart
    M = np.array([[1e16, 1e8], [1e8, 2.]])
    f = linalg.cholesky_factor(M, equilibrate=True)
    assert_allclose(f.scale, [1e-8, 1. / math.sqrt(2.)], rtol=1e-14)
    s = np.asarray(f.scale)
    assert_allclose(f.L @ f.L.T, s[:, None] * M * s[None, :], atol=1e-14)
    x = np.array([1e-8, 1.])
    assert_allclose(f.solve(M @ x), x, rtol=1e-10)
    X = np.array([[1e-8, 2e-8], [1., -1.]])
    assert_allclose(f.solve(M @ X), X, rtol=1e-10)


def test_equilibrate_matches_plain():
    M = random_spd(keys[4], 10)
    b = np.asarray(random.normal(keys[5], (10,)))
    plain = linalg.cholesky_factor(M)
    scaled = linalg.cholesky_factor(M, equilibrate=True)
    assert plain.scale is None
    assert_allclose(scaled.solve(b), plain.solve(b), rtol=1e-9)


def test_equilibrate_nonpositive_diagonal():
    with pytest.raises(NonSPD):
        linalg.cholesky_factor(np.array([[1., 0.], [0., 0.]]), equilibrate=True)
