from .saddle_setup import *


def test_scalar_blocks():
    sys, _ = scalar_system(0.)
    assert sys.n_V == 1 and sys.n_Q == 1 and sys.n == 2
    assert_allclose(sys.matrix(), [[1., 1.], [1., 0.]])
    assert str(sys) == "BlockSystem n_V=1, n_Q=1"


def test_apply_matches_matrix():
    sys = random_system(keys[0], 7, 4)
    x = random.normal(keys[1], (sys.n,))
    y = apply_block_operator(sys, x)
    assert isinstance(y, CombinedVector)
    assert_allclose(y.join(), sys.matrix() @ x, rtol=1e-12, atol=1e-12)


def test_split():
    sys = random_system(keys[2], 3, 2)
    x = jnp.arange(5.)
    v = split(sys, x)
    assert_allclose(v.u, [0., 1., 2.])
    assert_allclose(v.p, [3., 4.])
    assert split(sys, v) is v
    with pytest.raises(DimensionMismatch):
        split(sys, jnp.ones(4))


def test_shape_checks():
    with pytest.raises(DimensionMismatch):
        block_system(np.eye(3), np.ones((2, 2)), np.eye(2))


def test_symmetry_checks():
    with pytest.raises(NotSymmetric):
        block_system(np.array([[1., 1.], [0., 1.]]), np.ones((1, 2)), np.eye(1))
    with pytest.raises(ValueError):
        block_system(-np.eye(2), np.ones((1, 2)), np.eye(1))


def test_apply_part_sizes():
    sys = random_system(keys[3], 3, 2)
    with pytest.raises(DimensionMismatch):
        apply_block_operator(sys, CombinedVector(jnp.ones(2), jnp.ones(3)))
