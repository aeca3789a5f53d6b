from .linalg_setup import *


def test_identity_pencil():
    res = linalg.gen_sym_eig(jnp.eye(3), jnp.eye(3))
    assert_allclose(res.eigenvalues, np.ones(3), rtol=1e-12)
    assert res.kernel_dim == 0


def test_diagonal_pencil():
    res = linalg.gen_sym_eig(jnp.diag(jnp.array([2., 3.])), jnp.eye(2))
    assert_allclose(res.eigenvalues, [2., 3.], rtol=1e-12)
    assert_allclose(res.min, 2., rtol=1e-12)
    assert_allclose(res.max, 3., rtol=1e-12)


def test_singular_metric():
    M1 = jnp.diag(jnp.array([1., 1., 5.]))
    M2 = jnp.diag(jnp.array([1., 1., 0.]))
    res = linalg.gen_sym_eig(M1, M2)
    assert_allclose(res.eigenvalues, [1., 1.], rtol=1e-12)
    assert res.kernel_dim == 1


def test_singular_metric_coupled():
    # stationary values of the Rayleigh quotient with the kernel direction eliminated
    M1 = jnp.array([[2., 1.], [1., 1.]])
    M2 = jnp.diag(jnp.array([1., 0.]))
    res = linalg.gen_sym_eig(M1, M2)
    assert_allclose(res.eigenvalues, [1.], rtol=1e-12)


@pytest.mark.parametrize("n", [4, 17, 40])
def test_against_scipy(n):
    M1 = random_sym(keys[n % 16], n)
    M2 = random_spd(keys[(n + 1) % 16], n)
    res = linalg.gen_sym_eig(M1, M2)
    ref = scipy.linalg.eigh(M1, M2, eigvals_only=True)
    scale = np.abs(ref).max()
    assert_allclose(res.eigenvalues, ref, rtol=1e-8, atol=1e-10 * scale)


@pytest.mark.parametrize("spd_metric", [False, True])
def test_metric_orthonormal(spd_metric):
    n = 15
    M1 = random_sym(keys[4], n)
    M2 = random_spd(keys[5], n)
    res = linalg.gen_sym_eig(M1, M2, spd_metric=spd_metric)
    X = np.asarray(res.eigenvectors)
    assert_allclose(X.T @ M2 @ X, np.eye(n), atol=1e-8)
    assert_allclose(M1 @ X, M2 @ X * np.asarray(res.eigenvalues)[None, :],
        atol=1e-7 * np.abs(M1).max())


def test_spd_metric_agrees():
    M1 = random_sym(keys[6], 10)
    M2 = random_spd(keys[7], 10)
    a = linalg.gen_sym_eig(M1, M2)
    b = linalg.gen_sym_eig(M1, M2, spd_metric=True)
    assert_allclose(a.eigenvalues, b.eigenvalues, rtol=1e-9, atol=1e-11)


def test_congruence_invariance():
    n, r = 10, 7
    Y = np.asarray(random.normal(keys[8], (n, r)))
    M2 = Y @ Y.T
    M1 = random_spd(keys[9], n)
    R = np.eye(n) + 0.1 * np.asarray(random.normal(keys[10], (n, n)))
    a = linalg.gen_sym_eig(M1, M2)
    b = linalg.gen_sym_eig(R.T @ M1 @ R, R.T @ M2 @ R)
    assert a.kernel_dim == n - r
    assert b.kernel_dim == n - r
    assert_allclose(a.eigenvalues, b.eigenvalues, rtol=1e-8)


def test_scaling_invariance():
    M1 = random_spd(keys[11], 8)
    M2 = random_spd(keys[12], 8)
    a = linalg.gen_sym_eig(M1, M2)
    b = linalg.gen_sym_eig(1e6 * M1, 1e6 * M2)
    assert_allclose(a.eigenvalues, b.eigenvalues, rtol=1e-9)


def test_extremal():
    M1 = jnp.diag(jnp.array([3., 1., 2., 5.]))
    res = linalg.gen_sym_eig(M1, jnp.eye(4), mode="extremal")
    assert_allclose(res.eigenvalues, [1., 5.], rtol=1e-12)
    assert res.eigenvectors.shape == (4, 2)


def test_unknown_mode():
    with pytest.raises(ValueError):
        linalg.gen_sym_eig(jnp.eye(2), jnp.eye(2), mode="middle")


def test_sparse_input():
    M = linalg.from_dense(np.diag([1., 4.]), symmetric=True)
    res = linalg.gen_sym_eig(M, linalg.identity(2))
    assert_allclose(res.eigenvalues, [1., 4.], rtol=1e-12)


def test_zero_metric():
    with pytest.raises(EmptyRange):
        linalg.gen_sym_eig(jnp.eye(3), jnp.zeros((3, 3)))


def test_shape_mismatch():
    with pytest.raises(DimensionMismatch):
        linalg.gen_sym_eig(jnp.eye(3), jnp.eye(2))


def test_not_symmetric():
    with pytest.raises(NotSymmetric):
        linalg.gen_sym_eig(jnp.array([[1., 2.], [0., 1.]]), jnp.eye(2))


def test_desk_scale():
    n = linalg.DESK_SCALE + 1
    with pytest.raises(DeskScaleExceeded):
        linalg.gen_sym_eig(linalg.identity(n), linalg.identity(n))
