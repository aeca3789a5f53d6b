from .saddle_setup import *


@pytest.mark.parametrize("t,qbar,vbar", [
    (0., 1., 2.),
    (1., 2., 1.5),
    (3., 4., 1.25),
])
def test_scalar_norms(t, qbar, vbar):
    _, norms = scalar_system(t)
    assert_allclose(norms.Qbar, [[qbar]], rtol=rtol)
    assert_allclose(norms.Vbar, [[vbar]], rtol=rtol)
    assert_allclose(norms.metric(), np.diag([vbar, qbar]), rtol=rtol)


def test_apply_inverse():
    _, norms = scalar_system(0.)
    assert_allclose(norms.apply_inverse(jnp.array([2., 3.])), [1., 3.], rtol=rtol)


def test_combined_norm():
    _, norms = scalar_system(0.)
    assert_allclose(combined_norm(norms, jnp.array([1., 1.])), math.sqrt(3.), rtol=rtol)
    assert_allclose(combined_norm(norms, CombinedVector(jnp.ones(1), jnp.zeros(1))),
        math.sqrt(2.), rtol=rtol)
    with pytest.raises(DimensionMismatch):
        combined_norm(norms, jnp.ones(3))


def test_fitted_norm_formula():
    sys = random_system(keys[4], 8, 5)
    S_Q = np.eye(5)
    S_V = 2. * np.eye(8)
    norms = build_fitted_norms(sys, S_Q, S_V)
    Qbar = S_Q + sys.C.toarray()
    B = sys.B.toarray()
    Vbar = S_V + B.T @ np.linalg.solve(Qbar, B)
    assert_allclose(norms.Qbar, Qbar, rtol=1e-12)
    assert_allclose(norms.Vbar, Vbar, rtol=1e-10)
    L = np.asarray(norms.Vbar_factor.L)
    assert_allclose(L @ L.T, Vbar, rtol=1e-10, atol=1e-12)


def test_qbar_singular():
    sys = block_system(np.eye(2), np.ones((1, 2)), np.zeros((1, 1)))
    with pytest.raises(QbarSingular):
        build_fitted_norms(sys, np.zeros((1, 1)), np.eye(2))


def test_vbar_singular():
    # B^T Qbar^{-1} B has rank one, S_V adds nothing
    sys = block_system(np.eye(2), np.ones((1, 2)), np.zeros((1, 1)))
    with pytest.raises(NonSPD):
        build_fitted_norms(sys, np.eye(1), np.zeros((2, 2)))


def test_seminorm_checks():
    sys, _ = scalar_system(0.)
    with pytest.raises(DimensionMismatch):
        build_fitted_norms(sys, np.eye(2), np.eye(1))
    with pytest.raises(NotSymmetric):
        build_fitted_norms(block_system(np.eye(2), np.ones((1, 2)), np.eye(1)),
            np.eye(1), np.array([[1., 1.], [0., 1.]]))


def test_equivalent_norms():
    _, norms = scalar_system(0.)
    other = equivalent_norms(norms, Qbar=4. * np.eye(1))
    assert_allclose(other.Qbar, [[4.]])
    assert_allclose(other.Vbar, norms.Vbar)
    assert_allclose(other.apply_inverse(jnp.array([2., 4.])), [1., 1.], rtol=rtol)
    assert_allclose(other.S_Q, norms.S_Q)


def test_badly_scaled_qbar():
    # rank one C whose entries span sixteen orders of magnitude
    g = np.array([1., 1e8])
    sys = block_system(np.eye(2), np.eye(2), np.outer(g, g))
    norms = build_fitted_norms(sys, np.eye(2), np.eye(2))
    x = np.array([1., 1e-8])
    assert_allclose(norms.Qbar_factor.solve(np.asarray(norms.Qbar) @ x), x, rtol=1e-10)
    assert_allclose(norms.Vbar, [[2., -1e-8], [-1e-8, 1.]], atol=1e-12)
    other = equivalent_norms(norms, Qbar=norms.Qbar)
    assert_allclose(other.apply_inverse(jnp.array([0., 0., 3., 2e8])),
        [0., 0., 1., 1e-8], rtol=1e-10, atol=1e-14)
