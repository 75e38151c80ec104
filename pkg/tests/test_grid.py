"""Rasterization, operator assembly and eigensolver against exact references."""

import math

import numpy as np
import pytest

from eigenineq import specfun
from eigenineq.balls import BallSpec, buckling_ball, clamped_ball, dirichlet_ball
from eigenineq.grid import (
    Annulus,
    Disk,
    DiscreteOperator,
    LShape,
    Polygon,
    RasterizeError,
    Rectangle,
    assemble,
    extrapolate,
    poisson_solve,
    rasterize,
    rayleigh_quotient,
    smallest_eigs,
    solve_shape,
)
from eigenineq.spectra import ProblemKind, Provenance


def discrete_square_eig(h, p, q):
    return (4.0 / h**2) * (math.sin(p * math.pi * h / 2.0) ** 2 + math.sin(q * math.pi * h / 2.0) ** 2)


class TestRasterize:
    def test_unit_square_counts(self):
        d = rasterize(Rectangle(1.0, 1.0), 0.25)
        assert d.mask.shape == (3, 3) and d.node_count == 9

    def test_disk_area_convergence(self):
        d = rasterize(Disk(1.0), 1.0 / 128.0)
        assert abs(d.area_discrete - math.pi) / math.pi < 0.03

    def test_degenerate_and_disconnected(self):
        with pytest.raises(RasterizeError):
            rasterize(Rectangle(0.01, 0.01), 0.25)  # no strictly interior node
        barbell = Polygon(((0, 0), (1, 0), (1, 1), (0.65, 1), (0.65, 0.02),
                           (0.35, 0.02), (0.35, 1), (0, 1)))
        with pytest.raises(RasterizeError):
            rasterize(barbell, 0.2)

    def test_annulus_and_lshape_rasterize(self):
        a = rasterize(Annulus(0.4, 1.0), 1.0 / 64.0)
        assert abs(a.area_discrete - a.area_exact) < 2.0 * (2 * math.pi * 1.4) * a.h
        l = rasterize(LShape(0.5, 0.5), 1.0 / 32.0)
        assert abs(l.area_exact - 0.75) < 1e-12


class TestAssembly:
    def test_square_smallest_matches_separable_stencil(self):
        h = 0.25
        op = assemble(rasterize(Rectangle(1.0, 1.0), h), ProblemKind.DIRICHLET)
        s = smallest_eigs(op, 1)
        assert abs(s.values[0] - discrete_square_eig(h, 1, 1)) < 1e-12 * s.values[0]

    @pytest.mark.parametrize("kind", list(ProblemKind))
    def test_symmetry_exact(self, kind):
        op = assemble(rasterize(Disk(1.0), 1.0 / 16.0), kind)
        gap = abs(op.matrix - op.matrix.T)
        assert gap.nnz == 0 or gap.max() == 0.0
        if op.mass is not None:
            gap = abs(op.mass - op.mass.T)
            assert gap.nnz == 0 or gap.max() == 0.0

    def test_clamped_differs_from_squared_laplacian(self):
        d = rasterize(Rectangle(1.0, 1.0), 1.0 / 32.0)
        clamped = smallest_eigs(assemble(d, ProblemKind.CLAMPED), 1).values[0]
        dir_op = assemble(d, ProblemKind.DIRICHLET)
        navier = smallest_eigs(
            DiscreteOperator((dir_op.matrix @ dir_op.matrix).tocsr(), ProblemKind.CLAMPED, d.h, d), 1
        ).values[0]
        assert abs(clamped - navier) / navier > 0.01

    def test_dirichlet_positive_definite(self):
        op = assemble(rasterize(Disk(1.0), 1.0 / 8.0), ProblemKind.DIRICHLET)
        assert np.all(np.linalg.eigvalsh(op.matrix.toarray()) > 0.0)
        cl = assemble(rasterize(Disk(1.0), 1.0 / 8.0), ProblemKind.CLAMPED)
        assert np.all(np.linalg.eigvalsh(cl.matrix.toarray()) > 0.0)


class TestSmallestEigs:
    def test_square_discrete_closed_form_h64(self):
        h = 1.0 / 64.0
        s = smallest_eigs(assemble(rasterize(Rectangle(1.0, 1.0), h), ProblemKind.DIRICHLET), 3)
        ref = sorted([discrete_square_eig(h, 1, 1), discrete_square_eig(h, 1, 2), discrete_square_eig(h, 2, 1)])
        for got, want in zip(s.values, ref):
            assert abs(got - want) < 1e-9 * want

    def test_neumann_square_zero_mode_and_mu1(self):
        _, ext = solve_shape(Rectangle(1.0, 1.0), ProblemKind.NEUMANN, 1.0 / 128.0, 2, 3)
        assert abs(ext.values[0]) <= 1e-8 * ext.values[1]
        assert abs(ext.values[1] - math.pi**2) / math.pi**2 < 0.01

    def test_disk_dirichlet_extrapolates_to_bessel_zero(self):
        _, ext = solve_shape(Disk(1.0), ProblemKind.DIRICHLET, 1.0 / 64.0, 2, 3)
        ref = dirichlet_ball(BallSpec(2), 1).values[0]
        assert abs(ext.values[0] - ref) / ref < 0.005
        assert abs(ext.values[1] / ext.values[0] - 2.5387) < 5e-3

    def test_neumann_disk_mu1_within_one_percent(self):
        # also pins the deriv-zero root against the grid oracle
        _, ext = solve_shape(Disk(1.0), ProblemKind.NEUMANN, 1.0 / 64.0, 2, 2)
        root_sq = specfun.bessel_j_deriv_zero(1.0, 1) ** 2
        assert abs(ext.values[1] - root_sq) / root_sq < 0.01

    def test_m_bounds_validated(self):
        op = assemble(rasterize(Rectangle(1.0, 1.0), 0.25), ProblemKind.DIRICHLET)
        with pytest.raises(ValueError):
            smallest_eigs(op, 9)


class TestExtrapolate:
    def test_fixed_point(self):
        h = 1.0 / 8.0
        s = smallest_eigs(assemble(rasterize(Rectangle(1.0, 1.0), h), ProblemKind.DIRICHLET), 2)
        import dataclasses

        fake_coarse = dataclasses.replace(s, mesh_h=2 * h)
        ext = extrapolate(fake_coarse, s)
        assert ext.values == s.values
        assert ext.provenance is Provenance.DISCRETE_EXTRAPOLATED

    def test_square_lambda1_converges(self):
        _, ext = solve_shape(Rectangle(1.0, 1.0), ProblemKind.DIRICHLET, 1.0 / 32.0, 2, 1)
        assert abs(ext.values[0] - 2.0 * math.pi**2) / (2.0 * math.pi**2) < 1e-4

    def test_metadata_mismatch_rejected(self):
        sa, _ = solve_shape(Rectangle(1.0, 1.0), ProblemKind.DIRICHLET, 1.0 / 8.0, 2, 2)
        sb, _ = solve_shape(Rectangle(1.0, 2.0), ProblemKind.DIRICHLET, 1.0 / 8.0, 2, 2)
        with pytest.raises(ValueError):
            extrapolate(sa[0], sb[1])
        with pytest.raises(ValueError):
            extrapolate(sa[1], sa[0])  # wrong ratio direction

    def test_convergence_order_on_square(self):
        # |lambda_h - extrapolated| shrinks by >= 3.5x per halving
        spectra, _ = solve_shape(Rectangle(1.0, 1.0), ProblemKind.DIRICHLET, 1.0 / 16.0, 3, 1)
        exact = 2.0 * math.pi**2
        errs = [abs(s.values[0] - exact) for s in spectra]
        assert errs[0] / errs[1] > 3.5 and errs[1] / errs[2] > 3.5


class TestRayleighQuotient:
    def test_eigenvector_reproduces_eigenvalue(self):
        d = rasterize(Rectangle(1.0, 1.0), 1.0 / 16.0)
        op = assemble(d, ProblemKind.DIRICHLET)
        lam = smallest_eigs(op, 1).values[0]
        xs, ys = d.node_coordinates()
        vec = np.sin(math.pi * xs) * np.sin(math.pi * ys)
        assert rayleigh_quotient(op, vec) >= lam - 1e-10
        dense = op.matrix.toarray()
        w, v = np.linalg.eigh(dense)
        assert abs(rayleigh_quotient(op, v[:, 0]) - w[0]) < 1e-10 * abs(w[0])

    def test_random_vector_above_minimum(self):
        d = rasterize(Disk(1.0), 1.0 / 16.0)
        op = assemble(d, ProblemKind.DIRICHLET)
        lam = smallest_eigs(op, 1).values[0]
        rng = np.random.default_rng(7)
        for _ in range(5):
            assert rayleigh_quotient(op, rng.standard_normal(op.dim)) >= lam * (1.0 - 1e-12)

    def test_buckling_pair_quotient_matches_explicit_form(self):
        d = rasterize(Disk(1.0), 1.0 / 16.0)
        op = assemble(d, ProblemKind.BUCKLING)
        rng = np.random.default_rng(11)
        x = rng.standard_normal(op.dim)
        explicit = (x @ (op.matrix @ x)) / (x @ (op.mass @ x))
        assert abs(rayleigh_quotient(op, x) - explicit) < 1e-12 * abs(explicit)

    def test_zero_vector_rejected(self):
        op = assemble(rasterize(Rectangle(1.0, 1.0), 0.25), ProblemKind.DIRICHLET)
        with pytest.raises(ValueError):
            rayleigh_quotient(op, np.zeros(op.dim))


class TestInvariants:
    def test_dirichlet_domain_monotonicity(self):
        h = 1.0 / 32.0
        small = smallest_eigs(assemble(rasterize(Rectangle(0.75, 0.75), h), ProblemKind.DIRICHLET), 4)
        big = smallest_eigs(assemble(rasterize(Rectangle(1.0, 1.0), h), ProblemKind.DIRICHLET), 4)
        for lo, hi in zip(big.values, small.values):
            assert hi >= lo

    def test_faber_krahn_trend_equal_area(self):
        shapes = [Rectangle(1.0, 1.0), Rectangle(math.sqrt(2.0), math.sqrt(0.5)), Disk(1.0 / math.sqrt(math.pi))]
        lam1 = []
        for shape in shapes:
            _, ext = solve_shape(shape, ProblemKind.DIRICHLET, 1.0 / 64.0, 2, 1)
            lam1.append(ext.values[0])
        assert lam1[2] < lam1[0] < lam1[1]

    def test_buckling_positive_and_disk_ratio(self):
        _, ext = solve_shape(Disk(1.0), ProblemKind.BUCKLING, 1.0 / 48.0, 2, 2)
        assert all(v > 0.0 for v in ext.values)
        ball = buckling_ball(BallSpec(2), 2)
        assert abs(ext.values[1] / ext.values[0] - ball.values[1] / ball.values[0]) < 2e-2

    def test_clamped_disk_second_mode_matches_secular(self):
        # pins the l=1 assignment of the second clamped-ball eigenvalue
        _, ext = solve_shape(Disk(1.0), ProblemKind.CLAMPED, 1.0 / 48.0, 2, 2)
        ball = clamped_ball(BallSpec(2), 2)
        for got, want in zip(ext.values, ball.values):
            assert abs(got - want) / want < 0.03


def test_poisson_solve_matches_radial_solution():
    d = rasterize(Disk(1.0), 1.0 / 64.0)
    u = poisson_solve(d, np.ones(d.node_count))
    xs, ys = d.node_coordinates()
    exact = (1.0 - xs**2 - ys**2) / 4.0
    assert np.max(np.abs(u - exact)) < 0.02
