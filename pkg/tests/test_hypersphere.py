"""Measure-level layer: D_n, regimes, unit crossings, the ensemble exhibit."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hslaplace import (
    GrandEnsembleSpec,
    HypersphereSpec,
    Regime,
    classify_regime,
    critical_point,
    ensemble_comparison,
    f2_exact,
    fn_contour,
    geometric_mean,
    laplace_dn,
    psi_theta,
    solve_saddle,
    unit_crossing,
)

K0_2 = 0.11389387274953344

positive_floats = st.floats(min_value=1e-6, max_value=1e6)


class TestGeometricMean:
    def test_identity_vector(self):
        assert geometric_mean([1.0, 1.0, 1.0, 1.0]) == 1.0

    def test_two_eight(self):
        assert abs(geometric_mean([2.0, 8.0]) - 4.0) < 1e-14

    def test_log_space_robustness(self):
        assert abs(geometric_mean([1e-300, 1e300]) - 1.0) < 1e-12

    @settings(max_examples=60, deadline=None)
    @given(st.lists(positive_floats, min_size=1, max_size=8), st.randoms())
    def test_permutation_bitwise(self, values, rnd):
        shuffled = list(values)
        rnd.shuffle(shuffled)
        assert geometric_mean(values) == geometric_mean(shuffled)

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            geometric_mean([])
        with pytest.raises(ValueError):
            geometric_mean([1.0, 0.0])
        with pytest.raises(ValueError):
            geometric_mean([1.0, -2.0])


class TestHypersphereSpecValidation:
    def test_rejects_mismatched_lengths(self):
        with pytest.raises(ValueError):
            HypersphereSpec(n=3, r=1.0, f=(1.0, 2.0))

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            HypersphereSpec(n=2, r=-1.0, f=(1.0, 2.0))
        with pytest.raises(ValueError):
            HypersphereSpec(n=2, r=1.0, f=(1.0, 0.0))
        with pytest.raises(ValueError):
            HypersphereSpec(n=0, r=1.0, f=())


class TestLaplaceDn:
    def test_n1_closed_form(self):
        spec = HypersphereSpec(n=1, r=1.0, f=(2.0,))
        assert laplace_dn(spec).value.ln_value == -2.0

    def test_n2_reduces_to_effective_lambda(self):
        # rho = 4, lambda_eff = 4 * (1/4) = 1
        spec = HypersphereSpec(n=2, r=0.25, f=(2.0, 8.0))
        assert abs(laplace_dn(spec).value.ln_value - math.log(2.0 * K0_2)) < 1e-10

    def test_permutation_invariance_bitwise(self):
        a = HypersphereSpec(n=3, r=0.8, f=(0.5, 2.2, 1.3))
        b = HypersphereSpec(n=3, r=0.8, f=(2.2, 1.3, 0.5))
        ra = laplace_dn(a, method="contour")
        rb = laplace_dn(b, method="contour")
        assert ra.value.ln_value == rb.value.ln_value

    def test_scale_covariance(self):
        for s in (3.0, 1e5):
            a = HypersphereSpec(n=3, r=0.9, f=(0.5, 2.2, 1.3))
            b = HypersphereSpec(n=3, r=0.9 / s, f=(0.5 * s, 2.2 * s, 1.3 * s))
            va = laplace_dn(a, method="contour").value.ln_value
            vb = laplace_dn(b, method="contour").value.ln_value
            assert abs(va - vb) < 1e-12

    def test_method_dispatch(self):
        spec = HypersphereSpec(n=2, r=1.0, f=(1.0, 1.0))
        closed = laplace_dn(spec, method="closed-form").value.ln_value
        quad = laplace_dn(spec, method="quadrature", tol=1e-9).value.ln_value
        cont = laplace_dn(spec, method="contour").value.ln_value
        assert abs(closed - quad) < 1e-8
        assert abs(closed - cont) < 1e-9

    def test_method_availability_errors(self):
        spec = HypersphereSpec(n=3, r=1.0, f=(1.0, 1.0, 1.0))
        with pytest.raises(ValueError):
            laplace_dn(spec, method="closed-form")
        spec5 = HypersphereSpec(n=5, r=1.0, f=(1.0,) * 5)
        with pytest.raises(ValueError):
            laplace_dn(spec5, method="quadrature")
        with pytest.raises(ValueError):
            laplace_dn(spec5, method="no-such-route")


class TestClassifyRegime:
    def test_dichotomy(self):
        lam_cr = critical_point().lambda_cr
        assert classify_regime(lam_cr - 0.1, 0.05).regime is Regime.DIVERGES
        assert classify_regime(lam_cr + 0.1, 0.05).regime is Regime.VANISHES

    def test_critical_band(self):
        lam_cr = critical_point().lambda_cr
        rep = classify_regime(lam_cr, 0.01)
        assert rep.regime is Regime.CRITICAL_BAND
        assert abs(rep.margin) < 1e-12

    def test_epsilon_required_positive(self):
        with pytest.raises(ValueError):
            classify_regime(1.0, 0.0)
        with pytest.raises(ValueError):
            classify_regime(1.0, -0.1)
        with pytest.raises(ValueError):
            classify_regime(-1.0, 0.1)


class TestUnitCrossing:
    def test_n2_against_closed_form(self):
        lam_2 = unit_crossing(2)
        # independent check: 2 K0(2 lambda_2) must be 1
        assert abs(f2_exact(lam_2).value.ln_value) < 1e-9
        # and against a bisection on the closed form alone
        lo, hi = 0.2, 1.5
        for _ in range(60):
            mid = 0.5 * (lo + hi)
            if f2_exact(mid).value.ln_value > 0.0:
                lo = mid
            else:
                hi = mid
        assert abs(lam_2 - 0.5 * (lo + hi)) < 1e-9

    def test_contour_residual_small(self):
        lam_5 = unit_crossing(5)
        assert abs(fn_contour(5, lam_5).value.ln_value) < 1e-9

    def test_sequence_moves_toward_critical(self):
        lam_cr = critical_point().lambda_cr
        gaps = [abs(unit_crossing(n) - lam_cr) for n in (5, 10)]
        assert gaps[1] < gaps[0]

    def test_rejects_n_below_two(self):
        with pytest.raises(ValueError):
            unit_crossing(1)


class TestPsiTheta:
    def test_flat_f_gives_zero(self):
        spec = GrandEnsembleSpec(theta=2.7, f=(1.0, 1.0, 1.0), weights=(0.2, 0.3, 0.5))
        assert psi_theta(spec).ln_value == 0.0

    def test_two_point_example(self):
        spec = GrandEnsembleSpec(theta=1.0, f=(2.0, 8.0), weights=(0.5, 0.5))
        assert abs(psi_theta(spec).ln_value + math.log(4.0)) < 1e-14

    @settings(max_examples=40, deadline=None)
    @given(st.floats(min_value=0.1, max_value=10.0))
    def test_linear_in_theta(self, theta):
        base = GrandEnsembleSpec(theta=1.0, f=(2.0, 0.3, 1.7), weights=(0.25, 0.5, 0.25))
        spec = GrandEnsembleSpec(theta=theta, f=base.f, weights=base.weights)
        assert abs(psi_theta(spec).ln_value - theta * psi_theta(base).ln_value) < 1e-12

    def test_refinement_invariance(self):
        coarse = GrandEnsembleSpec(theta=1.3, f=(2.0, 5.0), weights=(0.4, 0.6))
        fine = GrandEnsembleSpec(
            theta=1.3,
            f=(2.0, 2.0, 5.0, 5.0, 5.0),
            weights=(0.2, 0.2, 0.2, 0.2, 0.2),
        )
        assert abs(psi_theta(coarse).ln_value - psi_theta(fine).ln_value) < 1e-12

    def test_weight_validation(self):
        with pytest.raises(ValueError):
            GrandEnsembleSpec(theta=1.0, f=(1.0, 2.0), weights=(0.5, 0.6))
        with pytest.raises(ValueError):
            GrandEnsembleSpec(theta=1.0, f=(1.0, -2.0), weights=(0.5, 0.5))
        with pytest.raises(ValueError):
            GrandEnsembleSpec(theta=-1.0, f=(1.0, 2.0), weights=(0.5, 0.5))


class TestEnsembleComparison:
    def test_pinned_critical_schedule_drives_rate_to_zero(self):
        rows = ensemble_comparison(
            (1.0, 1.0, 1.0), 1.0, "critical", (5, 10, 20, 40), epsilon=0.02
        )
        lam_cr = critical_point().lambda_cr
        rates = [abs(r.ln_dn_per_n) for r in rows]
        assert all(abs(r.lambda_eff - lam_cr) < 1e-12 for r in rows)
        assert all(r.regime is Regime.CRITICAL_BAND for r in rows)
        assert all(b < a for a, b in zip(rates, rates[1:]))
        # the finite-n defect follows ln(2 pi n sigma)/(2n): ~0.07 at n=40
        sigma = solve_saddle(lam_cr).sigma
        assert abs(rates[-1] - math.log(2.0 * math.pi * 40 * sigma) / 80.0) < 0.01

    def test_double_critical_schedule_vanishes(self):
        lam_cr = critical_point().lambda_cr
        rows = ensemble_comparison(
            (1.0, 1.0), 1.0, (2.0 * lam_cr, 0.0), (5, 10, 20, 40), epsilon=0.05
        )
        assert all(r.regime is Regime.VANISHES for r in rows)
        target = solve_saddle(2.0 * lam_cr).ln_L
        defects = [abs(r.ln_dn_per_n - target) for r in rows]
        assert all(b < a for a, b in zip(defects, defects[1:]))
        assert defects[-1] < 0.08
        # the per-n rate separates from the fixed grand-ensemble value (0 here)
        assert abs(rows[-1].ln_dn_per_n - rows[-1].ln_psi_theta) > 0.5

    def test_growing_schedule_crosses_threshold(self):
        rows = ensemble_comparison(
            (1.0, 1.0), 1.0, (0.3, 0.5), (1, 4, 16, 25), epsilon=0.05
        )
        assert rows[0].regime is Regime.DIVERGES
        assert rows[-1].regime is Regime.VANISHES
        seen_vanish = False
        for r in rows:
            if r.regime is Regime.VANISHES:
                seen_vanish = True
            elif seen_vanish:
                pytest.fail("regime flipped back after vanishing")

    def test_psi_theta_column_constant(self):
        rows = ensemble_comparison(
            (2.0, 0.5), 1.5, (1.0, 0.0), (2, 3), epsilon=0.05
        )
        assert rows[0].ln_psi_theta == rows[1].ln_psi_theta
        assert abs(rows[0].ln_psi_theta - 0.0) < 1e-12  # rho = 1 for (2, 1/2)

    def test_validates_inputs(self):
        with pytest.raises(ValueError):
            ensemble_comparison((1.0,), 1.0, (1.0, 0.0), (5, 5), epsilon=0.05)
        with pytest.raises(ValueError):
            ensemble_comparison((1.0,), 1.0, (-1.0, 0.0), (2, 3), epsilon=0.05)
        with pytest.raises(ValueError):
            ensemble_comparison((1.0,), 1.0, "pinned", (2, 3), epsilon=0.05)
