"""Smoke tests for the Python bindings. Run with PYTHONPATH set to the build
directory containing the mollipath package."""

import math

import mollipath as mp


def approx(a, b, tol=1e-8):
    assert abs(a - b) <= tol, f"{a} != {b} (tol {tol})"


def test_kernel():
    approx(mp.kernel_normalization(), 2.252283621043581, 1e-9)
    approx(mp.kernel_value(1.0), 0.0, 0.0)
    approx(mp.kernel_value(0.3), mp.kernel_value(-0.3), 1e-14)
    approx(mp.kernel_cdf(0.0, 1.0), 0.5, 1e-9)
    approx(mp.kernel_cdf(2.0, 1.0), 1.0, 0.0)


def test_smoothing():
    square = mp.WaypointPath([[0, 0], [2, 0], [2, 2], [0, 2]], closed=True)
    assert square.dimension == 2
    assert square.segment_count == 4
    moll = mp.MollifiedPath(square, [0.3])
    # deep inside the first segment the path is unchanged
    x, y = moll.eval(0.5)
    approx(x, 1.0, 1e-8)
    approx(y, 0.0, 1e-8)
    dx, dy = moll.derivative(1.5, 1)
    approx(dx, 0.0, 1e-7)
    approx(dy, 2.0, 1e-7)
    assert moll.curvature(1.0) > 0.0  # rounded corner
    approx(moll.curvature(1.5), 0.0, 1e-7)


def test_planning():
    square = mp.WaypointPath([[0, 0], [2, 0], [2, 2], [0, 2]], closed=True)
    plan = mp.plan_epsilons(square, kappa_max=5.0)
    assert plan["exact"]
    assert len(plan["per_corner"]) == 4
    assert 0 < plan["global_epsilon"] < 0.5
    moll = mp.MollifiedPath(square, [plan["global_epsilon"]])
    worst = max(moll.curvature(i + t) for i in range(4) for t in
                (x / 20 - 0.5 for x in range(21)))
    assert worst <= 5.0 * (1 + 1e-6), worst

    budget = mp.speed_to_curvature_budget(0.0, 2.0, 6.0, 10.0)
    approx(budget, 0.5, 1e-12)


def test_hull():
    cloud = [[0, 0], [2, 0], [0, 2]]
    assert mp.convex_hull_contains(cloud, [0.5, 0.5])
    assert not mp.convex_hull_contains(cloud, [2, 2])


def main():
    test_kernel()
    test_smoothing()
    test_planning()
    test_hull()
    print("python smoke tests passed")


if __name__ == "__main__":
    main()
