from .linalg_setup import *


def test_from_coo_sums_duplicates():
    M = linalg.from_coo([0, 0, 1], [0, 0, 1], [1., 2., 5.], (2, 2))
    assert M.nnz == 2
    assert_allclose(M.toarray(), [[3., 0.], [0., 5.]])


def test_symmetric_flag_checked():
    with pytest.raises(NotSymmetric):
        linalg.from_dense(np.array([[1., 2.], [0., 1.]]), symmetric=True)


def test_triplet_lengths():
    with pytest.raises(DimensionMismatch):
        linalg.from_coo([0, 1], [0], [1., 2.], (2, 2))


def test_matvec():
    A = np.asarray(random.normal(keys[0], (5, 3)))
    M = linalg.from_dense(A)
    x = np.asarray(random.normal(keys[1], (3,)))
    assert_allclose(M @ x, A @ x, rtol=1e-12)
    with pytest.raises(DimensionMismatch):
        M @ np.ones(5)


def test_transpose_and_scale():
    A = np.array([[1., 2.], [0., 3.]])
    M = linalg.from_dense(A)
    assert_allclose(M.T.toarray(), A.T)
    assert_allclose(M.scale(-2.).toarray(), -2 * A)
    P = linalg.identity(3)
    assert P.psd
    assert not P.scale(-1.).psd


def test_zeros():
    Z = linalg.zeros(3, 3)
    assert Z.nnz == 0
    assert Z.symmetric
    assert_allclose(linalg.dense(Z), np.zeros((3, 3)))


def test_asymmetry():
    assert linalg.asymmetry(np.zeros((2, 2))) == 0.
    assert_allclose(linalg.asymmetry(np.array([[1., 2.], [1., 1.]])), 0.5)
    assert linalg.is_symmetric(np.eye(3))
    assert not linalg.is_symmetric(np.ones((2, 3)))


def test_block_diag_operator():
    A = linalg.matrix_operator(jnp.array([[2., 0.], [0., 3.]]))
    B = linalg.matrix_operator(jnp.array([[4.]]))
    T = linalg.block_diag([A, B])
    assert T.shape == (3, 3)
    assert_allclose(T(jnp.ones(3)), [2., 3., 4.])
    assert_allclose(linalg.to_matrix(T), np.diag([2., 3., 4.]))
    with pytest.raises(DimensionMismatch):
        T(jnp.ones(2))
