"""Two-ball variational problem: secular determinant, J(t) curve, constants."""

import numpy as np
import pytest

from eigenineq.balls import BallSpec, clamped_ball
from eigenineq.twoball import (
    TALENTI_D_PRIME,
    J_of_a,
    ball_eigenvalue,
    c_constant,
    curve_table,
    d_constant,
    secular_det,
)


def test_endpoints_return_ball_value():
    ball = ball_eigenvalue(2)
    assert abs(ball - clamped_ball(BallSpec(2), 1).values[0]) < 1e-9 * ball
    for a in (0.0, 1.0, 5e-4):
        assert J_of_a(2, a).eigenvalue == ball


def test_det_fixed_sign_below_first_root():
    # below the smallest eigenvalue the determinant never changes sign
    n, a = 2, 0.6
    mu1 = J_of_a(n, a).eigenvalue
    signs = {secular_det(n, a, (f * mu1**0.25) ** 4) > 0.0 for f in np.linspace(0.3, 0.97, 30)}
    assert len(signs) == 1


def test_det_small_at_root():
    # rows are sup-normalized, so the determinant scale is O(1)
    for n, t in [(2, 0.37), (4, 0.5), (5, 0.21)]:
        a = t ** (1.0 / n)
        mu = J_of_a(n, a).eigenvalue
        assert abs(secular_det(n, a, mu)) < 1e-8


def test_symmetry_about_half():
    for n in (2, 3, 4, 6):
        for t in (0.15, 0.3, 0.45):
            j1 = J_of_a(n, t ** (1.0 / n)).eigenvalue
            j2 = J_of_a(n, (1.0 - t) ** (1.0 / n)).eigenvalue
            assert abs(j1 - j2) <= 1e-7 * j1


def test_limit_toward_clamped_ball():
    # as a -> 1 the small-ball conditions wash out and J approaches the
    # clamped-ball eigenvalue monotonically from above
    ball = ball_eigenvalue(2)
    js = [J_of_a(2, (1.0 - t) ** 0.5).eigenvalue for t in (0.02, 0.005, 0.002)]
    gaps = [j / ball - 1.0 for j in js]
    assert all(g > 0.0 for g in gaps)
    assert gaps[0] > gaps[1] > gaps[2]
    assert gaps[-1] < 0.05


def test_symmetric_point_equals_single_ball_mode():
    # at t = 1/2 the lowest coupled mode is the symmetric one, whose secular
    # equation reduces to J_{n/2-1}(k a) = 0
    from eigenineq import specfun

    for n in (2, 4):
        a = 0.5 ** (1.0 / n)
        expect = (specfun.bessel_zero(n / 2.0 - 1.0, 1).value / a) ** 4
        got = J_of_a(n, a).eigenvalue
        assert abs(got - expect) < 1e-7 * expect


def test_c_constants_against_published_values():
    published = {2: 0.7877, 3: 0.7759, 4: 0.7872, 5: 0.8020, 6: 0.8163}
    for n, ref in published.items():
        assert abs(c_constant(n) - ref) < 5e-4
    assert all(c_constant(n) < 1.0 for n in range(2, 12))


def test_c_trend_toward_one():
    cs = [c_constant(n) for n in (5, 8, 12, 20, 50)]
    assert all(a < b for a, b in zip(cs, cs[1:]))
    assert c_constant(50) > c_constant(6)


def test_d_constants_against_published_values():
    for n, ref in [(4, 0.9537), (6, 0.9077)]:
        res = d_constant(n)
        assert abs(res.d_n - ref) < 2e-3
        assert abs(res.minimizer_t - 0.5) < 0.02
    res2 = d_constant(2)
    assert res2.d_n == 1.0
    assert res2.minimizer_t in (0.0, 1.0)


def test_d_curve_samples_and_symmetry():
    res = d_constant(4)
    ts = [t for t, _ in res.curve]
    ratios = dict(res.curve)
    assert ratios[0.0] == 1.0 and ratios[1.0] == 1.0
    for t in ts:
        assert abs(ratios[t] - ratios[1.0 - t]) < 1e-7 * ratios[t]
    assert min(ratios.values()) == pytest.approx(res.d_n, rel=1e-6)


def test_curve_table_endpoints():
    rows = curve_table(2, [0.0, 0.5, 1.0])
    assert rows[0][1] == 1.0 and rows[2][1] == 1.0
    assert rows[1][1] > 1.0  # n=2 minimum sits at the endpoints


def test_reference_d_prime_table():
    assert TALENTI_D_PRIME[2] == 0.9777
    assert set(TALENTI_D_PRIME) == {2, 3, 4}


def test_input_validation():
    with pytest.raises(ValueError):
        J_of_a(2, 1.5)
    with pytest.raises(ValueError):
        secular_det(2, 0.0, 10.0)
    with pytest.raises(ValueError):
        secular_det(2, 0.5, -1.0)
    with pytest.raises(ValueError):
        d_constant(1)
    with pytest.raises(ValueError):
        d_constant(4, grid_points=10)
