from .precond_setup import *


def test_grid_points():
    base = ExampleParams(kappa=2.)
    points = precond.grid_points({"lam": (1., 10.), "t": (0.5,)}, base)
    assert [a for a, _ in points] == ["lam", "lam", "t"]
    assert points[1][1].lam == 10. and points[1][1].kappa == 2.
    assert points[2][1].t == 0.5 and points[2][1].lam == 1.
    assert precond.grid_points({}, base) == [(None, base)]


def test_example7_robust():
    result = precond.robustness_sweep(7, {"lambda_mu": (1., 1e4, 1e8)}, levels=(4,),
        tol=1e-8, seed=0)
    assert len(result.runs) == 3
    assert all(r.converged for r in result.runs)
    assert all(r.hypotheses_ok for r in result.runs)
    assert result.spreads[(4, "lambda_mu")] <= precond.SPREAD_LIMIT
    assert result.spread_ok


def test_sweep_frame(tmp_path):
    sweep = precond.RobustnessSweep(1, {"t": (0., 1.)}, levels=(2,), check_hypotheses=False)
    destination = tmp_path / "precond.csv"
    result = sweep(destination)
    df = result.to_frame()
    assert list(df.columns) == ["example", "level", "param_point", "iterations",
        "converged", "relative_residual", "seed", "hypotheses_ok"]
    assert list(df["param_point"]) == ["t=0", "t=1"]
    assert len(sweep.df) == 2
    assert destination.exists()


def test_sweep_seed_determinism():
    a = precond.robustness_sweep(1, {"t": (1e-4, 1e4)}, levels=(2,), seed=3)
    b = precond.robustness_sweep(1, {"t": (1e-4, 1e4)}, levels=(2,), seed=3)
    assert [r.iterations for r in a.runs] == [r.iterations for r in b.runs]
    assert [r.relative_residual for r in a.runs] == [r.relative_residual for r in b.runs]


def test_unconverged_spread_fails():
    result = precond.robustness_sweep(7, {"lambda_mu": (1., 1e8)}, levels=(2,),
        tol=1e-12, max_iter=5)
    assert not any(r.converged for r in result.runs)
    assert all(r.iterations == 5 for r in result.runs)
    assert not result.spread_ok


def test_failed_build_recorded(monkeypatch):
    from cr.saddle import QbarSingular
    from cr.saddle._src.precond import sweep

    def build(example_id, n, params=None):
        if params.lam > 1.:
            raise QbarSingular("S_Q + C is singular")
        return build_example(example_id, n, params)

    monkeypatch.setattr(sweep, "build_example", build)
    result = precond.robustness_sweep(5, {"lam": (1., 1e4)}, levels=(2,))
    ok, failed = result.runs
    assert ok.converged and ok.hypotheses_ok
    assert failed.hypotheses_ok is False
    assert not failed.converged
    assert np.isnan(failed.relative_residual)
    assert failed.param_point == ExampleParams(lam=1e4).label(5)
    assert result.spread_ok
