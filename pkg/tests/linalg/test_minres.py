from .linalg_setup import *


def indefinite(k, n):
    Q, _ = np.linalg.qr(np.asarray(random.normal(k, (n, n))))
    lam = np.linspace(1., 2., n) * np.where(np.arange(n) % 2, -1., 1.)
    return Q @ np.diag(lam) @ Q.T, Q, lam


def test_identity():
    b = jnp.array([1., 0., 0.])
    sol = linalg.minres_solve(lambda x: x, b)
    assert sol.iterations == 1
    assert sol.converged
    assert_allclose(sol.x, b, atol=1e-14)


def test_diagonal_indefinite():
    A = jnp.diag(jnp.array([1., -1.]))
    sol = linalg.minres_solve(lambda x: A @ x, jnp.array([1., 1.]))
    assert sol.iterations <= 2
    assert_allclose(sol.x, [1., -1.], atol=1e-12)


def test_zero_rhs():
    sol = linalg.minres_solve(lambda x: 2 * x, jnp.zeros(5))
    assert sol.iterations == 0
    assert sol.converged
    assert_allclose(sol.x, np.zeros(5))


def test_random_indefinite():
    n = 50
    A, _, _ = indefinite(keys[0], n)
    b = np.asarray(random.normal(keys[1], (n,)))
    sol = linalg.minres_solve(lambda x: jnp.asarray(A) @ x, jnp.asarray(b), rel_tol=1e-10)
    assert sol.converged
    assert sol.relative_residual <= 1e-10
    assert_allclose(sol.x, np.linalg.solve(A, b), rtol=1e-6, atol=1e-8)


def test_exact_preconditioner():
    # P = |A| leaves two eigenvalues +1 and -1
    n = 30
    A, Q, lam = indefinite(keys[2], n)
    Pinv = jnp.asarray(Q @ np.diag(1. / np.abs(lam)) @ Q.T)
    b = jnp.asarray(random.normal(keys[3], (n,)))
    sol = linalg.minres(lambda x: jnp.asarray(A) @ x, lambda x: Pinv @ x, b)
    assert sol.converged
    assert sol.iterations <= 3
    assert_allclose(sol.x, np.linalg.solve(A, np.asarray(b)), rtol=1e-6, atol=1e-8)


def test_scale_invariance():
    n = 20
    A, _, _ = indefinite(keys[4], n)
    A = jnp.asarray(A)
    b = jnp.asarray(random.normal(keys[5], (n,)))
    s1 = linalg.minres_solve(lambda x: A @ x, b)
    s2 = linalg.minres_solve(lambda x: 1e5 * (A @ x), 1e5 * b)
    assert abs(s1.iterations - s2.iterations) <= 1
    assert_allclose(s1.x, s2.x, rtol=1e-6, atol=1e-8)


def test_max_iter():
    n = 40
    A, _, _ = indefinite(keys[6], n)
    A = jnp.asarray(A)
    b = jnp.asarray(random.normal(keys[7], (n,)))
    sol = linalg.minres_solve(lambda x: A @ x, b, rel_tol=1e-14, max_iter=3)
    assert sol.iterations == 3
    assert not sol.converged


def test_breakdown():
    with pytest.raises(BreakdownDetected):
        linalg.minres_solve(lambda x: 0. * x, jnp.ones(3))


def test_solution_str():
    sol = linalg.minres_solve(lambda x: x, jnp.ones(2))
    assert "iterations: 1" in str(sol)
