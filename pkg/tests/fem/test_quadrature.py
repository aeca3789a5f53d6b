from .fem_setup import *


def test_weights():
    rule = fem.triangle_rule()
    assert rule.points.shape == (6, 3)
    assert_allclose(rule.weights.sum(), 1., rtol=1e-14)
    assert_allclose(rule.points.sum(axis=1), np.ones(6), rtol=1e-14)


@pytest.mark.parametrize("powers,exact", [
    ((2, 0, 0), 1. / 6),
    ((1, 1, 0), 1. / 12),
    ((4, 0, 0), 1. / 15),
    ((2, 2, 0), 1. / 90),
    ((2, 1, 1), 1. / 180),
])
def test_exactness(powers, exact):
    # average of lam1^a lam2^b lam3^c is 2 a! b! c! / (a + b + c + 2)!
    rule = fem.triangle_rule()
    vals = np.prod(rule.points ** np.array(powers), axis=1)
    assert_allclose(rule.weights @ vals, exact, rtol=1e-12)
