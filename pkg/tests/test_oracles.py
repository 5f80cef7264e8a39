"""Cross-checks between the four ln F_n routes and the Monte Carlo estimator."""

import math

import numpy as np
import pytest

from hslaplace import (
    ContourSpec,
    Method,
    QuadratureDomain,
    bessel_k0,
    f1_exact,
    f2_exact,
    fn_contour,
    fn_montecarlo,
    fn_quadrature,
    fn_saddle_asymptotic,
    ln_gamma,
    solve_saddle,
)

K0_2 = 0.11389387274953344
K0_1 = 0.42102443824070833
GAMMA_1P3_SQ = 0.805453650728474  # Gamma(1.3)^2


class TestClosedForms:
    def test_f1_values(self):
        assert f1_exact(2.0).value.ln_value == -2.0
        assert f1_exact(0.5).value.ln_value == -0.5
        assert f1_exact(1.0).method is Method.CLOSED_FORM

    def test_f2_values(self):
        assert abs(f2_exact(1.0).value.ln_value - math.log(2.0 * K0_2)) < 1e-10
        assert abs(f2_exact(0.5).value.ln_value - math.log(2.0 * K0_1)) < 1e-10

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            f1_exact(0.0)
        with pytest.raises(ValueError):
            f2_exact(-1.0)


class TestContour:
    def test_n1_cahen_mellin(self):
        for lam in (0.5, 2.0, 10.0):
            assert abs(fn_contour(1, lam).value.ln_value + lam) < 1e-9

    def test_n2_against_closed_form(self):
        for lam in (0.3, 1.0, 5.0):
            ref = f2_exact(lam).value.ln_value
            assert abs(fn_contour(2, lam).value.ln_value - ref) < 1e-9

    def test_large_n_saddle_consistency(self):
        sol = solve_saddle(1.0)
        got = fn_contour(50, 1.0).value.ln_value
        predicted = 50 * sol.ln_L - 0.5 * math.log(2.0 * math.pi * 50 * sol.sigma)
        assert abs(got - predicted) < 0.01

    def test_abscissa_independence(self):
        # the inversion integral does not depend on the line's position
        ref = fn_contour(2, 1.0).value.ln_value
        for gamma in (0.8, 2.5):
            spec = ContourSpec(gamma=gamma, half_width=40.0, step=40.0 / 4000)
            assert abs(fn_contour(2, 1.0, spec).value.ln_value - ref) < 1e-9

    def test_monotone_in_lambda(self):
        for n in (3, 7):
            vals = [fn_contour(n, lam).value.ln_value for lam in np.logspace(-2, 1, 25)]
            assert all(b < a for a, b in zip(vals, vals[1:]))

    def test_truncation_guard(self):
        spec = ContourSpec(gamma=1.4616, half_width=0.2, step=0.002)
        with pytest.raises(RuntimeError):
            fn_contour(1, 1.0, spec)

    def test_spec_validation(self):
        with pytest.raises(ValueError):
            ContourSpec(gamma=-1.0, half_width=10.0, step=0.01)
        with pytest.raises(ValueError):
            ContourSpec(gamma=1.0, half_width=10.0, step=0.3)  # ratio not integer
        with pytest.raises(ValueError):
            ContourSpec(gamma=1.0, half_width=1.0, step=0.02)  # ratio 50 < 100

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            fn_contour(0, 1.0)
        with pytest.raises(ValueError):
            fn_contour(2, -1.0)


class TestQuadrature:
    def test_pairwise_route_agreement(self):
        for n in (2, 3, 4):
            for lam in (0.3, 1.0, 3.0):
                q = fn_quadrature(n, lam, 1e-7).value.ln_value
                c = fn_contour(n, lam).value.ln_value
                assert abs(q - c) < 1e-6, (n, lam)
                if n == 2:
                    assert abs(q - f2_exact(lam).value.ln_value) < 1e-8

    def test_n4_example(self):
        q = fn_quadrature(4, 2.0, 1e-7).value.ln_value
        c = fn_contour(4, 2.0).value.ln_value
        assert abs(q - c) < 1e-6

    def test_domain_invariant(self):
        for n, lam, tol in ((2, 0.3, 1e-8), (3, 1.0, 1e-9), (4, 3.0, 1e-7)):
            dom = QuadratureDomain.for_tolerance(n, lam, tol)
            X = dom.half_width
            assert lam * math.exp(X) >= math.log(1.0 / tol) + n * X
            assert dom.dimension == n - 1

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            fn_quadrature(1, 1.0)
        with pytest.raises(ValueError):
            fn_quadrature(5, 1.0)
        with pytest.raises(ValueError):
            fn_quadrature(2, 1.0, tol=1e-2)
        with pytest.raises(ValueError):
            fn_quadrature(2, -1.0)


class TestSaddleAsymptotic:
    def test_n2_lambda5_within_five_percent(self):
        approx = fn_saddle_asymptotic(2, 5.0).value.ln_value
        exact = f2_exact(5.0).value.ln_value
        assert abs(approx - exact) <= 0.05 * abs(exact)

    def test_n20_against_contour(self):
        approx = fn_saddle_asymptotic(20, 1.0).value.ln_value
        exact = fn_contour(20, 1.0).value.ln_value
        assert abs(approx - exact) < 0.01

    def test_n1_crude_sanity(self):
        assert abs(fn_saddle_asymptotic(1, 1.0).value.ln_value - (-1.0)) < 1.0

    def test_error_claims_are_upper_bounds(self):
        for n in (1, 2, 5, 20):
            for lam in (0.5, 1.0, 5.0):
                a = fn_saddle_asymptotic(n, lam)
                c = fn_contour(n, lam)
                diff = abs(a.value.ln_value - c.value.ln_value)
                assert diff <= a.err_ln + c.err_ln, (n, lam, diff, a.err_ln)


class TestPerDimensionRateConvergence:
    """(ln F_n)/n converges to ln L at the slow rate ln(2 pi n sigma)/(2 n)."""

    def test_defect_law(self):
        for lam in (0.5, 1.0, 2.0):
            sol = solve_saddle(lam)
            defects = []
            for n in (5, 10, 20, 40):
                a_n = fn_contour(n, lam).value.ln_value / n
                defect = abs(a_n - sol.ln_L)
                predicted = math.log(2.0 * math.pi * n * sol.sigma) / (2.0 * n)
                assert abs(defect - predicted) < 0.01, (n, lam)
                defects.append(defect)
            assert all(b < a for a, b in zip(defects, defects[1:]))


class TestPrefactorArbitration:
    def test_corrected_prefactor_wins(self):
        n = 40
        for lam in (0.5, 1.0, 2.0):
            sol = solve_saddle(lam)
            ln_f = fn_contour(n, lam).value.ln_value
            corrected = abs(ln_f - n * sol.ln_L + 0.5 * math.log(2.0 * math.pi * n * sol.sigma))
            variant = abs(ln_f - n * sol.ln_L + 0.5 * math.log(2.0 * math.pi * n / sol.sigma))
            assert corrected < 0.01
            assert variant > 0.01  # the sigma^{-1} form misses by |ln sigma|


class TestMellinForwardIdentity:
    def test_fn_pairs_with_gamma_power(self):
        # integral over (0, inf) of 2 F_2(lambda) lambda^{2s-1} dlambda at s=1.3
        # equals Gamma(1.3)^2; log substitution lambda = e^u, trapezoid.
        s = 1.3
        u = np.linspace(-30.0, 4.0, 3401)
        h = u[1] - u[0]
        ln_f2 = np.array([math.log(2.0) + bessel_k0(2.0 * math.exp(v)).ln_value for v in u])
        integrand = 2.0 * np.exp(ln_f2 + 2.0 * s * u)
        val = h * (integrand.sum() - 0.5 * (integrand[0] + integrand[-1]))
        assert abs(val - GAMMA_1P3_SQ) < 1e-6
        assert abs(val - math.exp(2.0 * ln_gamma(1.3))) < 1e-6


class TestMonteCarlo:
    def test_n2_against_closed_form(self):
        res = fn_montecarlo(2, 1.0, 10**6, seed=20240401)
        ref = f2_exact(1.0).value.ln_value
        assert abs(res.value.ln_value - ref) <= 3.0 * res.err_ln

    def test_n6_against_contour(self):
        res = fn_montecarlo(6, 1.0, 10**6, seed=20240402)
        ref = fn_contour(6, 1.0).value.ln_value
        assert abs(res.value.ln_value - ref) <= 3.0 * res.err_ln

    def test_seed_determinism(self):
        a = fn_montecarlo(3, 0.7, 20_000, seed=99)
        b = fn_montecarlo(3, 0.7, 20_000, seed=99)
        assert a.value.ln_value == b.value.ln_value
        assert a.err_ln == b.err_ln

    def test_different_seeds_differ(self):
        a = fn_montecarlo(3, 0.7, 20_000, seed=1)
        b = fn_montecarlo(3, 0.7, 20_000, seed=2)
        assert a.value.ln_value != b.value.ln_value

    def test_degenerate_weights_guard(self):
        with pytest.raises(RuntimeError):
            fn_montecarlo(6, 5000.0, 10_000, seed=3)

    def test_rejects_small_sample_counts(self):
        with pytest.raises(ValueError):
            fn_montecarlo(2, 1.0, 9_999, seed=0)
        with pytest.raises(ValueError):
            fn_montecarlo(1, 1.0, 10_000, seed=0)


class TestErrorClaimsAcrossRoutes:
    def test_exact_routes_mutually_consistent(self):
        for n in (2, 3):
            for lam in (0.5, 2.0):
                routes = [fn_quadrature(n, lam, 1e-8), fn_contour(n, lam)]
                if n == 2:
                    routes.append(f2_exact(lam))
                for i in range(len(routes)):
                    for j in range(i + 1, len(routes)):
                        diff = abs(routes[i].value.ln_value - routes[j].value.ln_value)
                        assert diff <= routes[i].err_ln + routes[j].err_ln
