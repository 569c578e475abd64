"""Numeric ground truth: constants, special functions, quadrature, FD."""

import math
import random
from fractions import Fraction

import pytest

from explogint.evaluator import IntegralSpec, PrefactorTerm
from explogint.oracle import (
    compute_constants,
    digamma_m,
    euler_gamma_value,
    fd_weights,
    gamma_value,
    hurwitz_zeta,
    log_gamma,
    nth_derivative_fd,
    quadrature,
)
from explogint.special_values import ArgPoint

GAMMA_REF = 0.57721566490153286060  # Euler's constant, 20 digits
ZETA2_REF = 1.64493406684822643647
ZETA3_REF = 1.20205690315959428540


class TestConstants:
    def test_gamma_against_reference(self):
        assert abs(euler_gamma_value() - GAMMA_REF) < 5e-16

    def test_gamma_cross_checked_by_quadrature(self, table):
        # the integrand e^-x ln x transforms onto the whole real axis as
        # -t e^-t e^(-e^-t); its quadrature must land on -gamma
        result = quadrature(IntegralSpec.simple(1, 1), 1.0, rel_tol=1e-12)
        assert result.converged
        assert abs(result.value + table.gamma) < 1e-12

    def test_zeta_values(self, table):
        assert abs(table.zeta[2] - ZETA2_REF) < 5e-16
        assert abs(table.zeta[3] - ZETA3_REF) < 5e-16

    def test_zeta2_equals_pi_squared_over_six(self, table):
        pi_sq_over_6 = table.sqrt_pi**4 / 6.0
        assert abs(table.zeta[2] - pi_sq_over_6) < 1e-14

    def test_zeta_tends_to_one(self, table):
        assert table.zeta[12] - 1.0 < 3e-4
        for k in range(2, 12):
            assert table.zeta[k] > table.zeta[k + 1] > 1.0

    def test_table_shape(self, table):
        assert table.max_zeta == 12
        assert set(table.zeta) == set(range(2, 13))
        assert abs(table.log2 - math.log(2.0)) == 0.0
        assert abs(table.sqrt_pi - math.sqrt(math.pi)) == 0.0

    def test_max_zeta_validation(self):
        with pytest.raises(ValueError):
            compute_constants(1)

    def test_bindings_include_mu(self, table):
        from explogint.ring import LOG_MU

        b = table.bindings(mu=2.0)
        assert b[LOG_MU] == math.log(2.0)
        with pytest.raises(ValueError):
            table.bindings(mu=-1.0)


class TestHurwitzZeta:
    def test_reduces_to_riemann_at_q_one(self, table):
        for k in range(2, 13):
            assert abs(hurwitz_zeta(float(k), 1.0) - table.zeta[k]) < 1e-14 * table.zeta[k]

    def test_half_argument_identity(self, table):
        # zeta(z, 1/2) = (2^z - 1) zeta(z)
        for k in range(2, 9):
            lhs = hurwitz_zeta(float(k), 0.5)
            rhs = (2.0**k - 1.0) * table.zeta[k]
            assert abs(lhs - rhs) <= 1e-12 * abs(rhs)

    def test_telescoping(self):
        rng = random.Random(1234)
        for _ in range(50):
            q = rng.uniform(1e-3, 10.0)
            lhs = hurwitz_zeta(3.0, q) - hurwitz_zeta(3.0, q + 1.0)
            rhs = q**-3.0
            assert abs(lhs - rhs) <= 1e-12 * abs(rhs)

    def test_telescoping_random_exponent(self):
        rng = random.Random(5678)
        for _ in range(50):
            z = rng.uniform(1.1, 9.0)
            q = rng.uniform(0.05, 8.0)
            lhs = hurwitz_zeta(z, q) - hurwitz_zeta(z, q + 1.0)
            rhs = q**-z
            assert abs(lhs - rhs) <= 1e-12 * abs(rhs)

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            hurwitz_zeta(1.0, 1.0)
        with pytest.raises(ValueError):
            hurwitz_zeta(2.0, 0.0)
        with pytest.raises(ValueError):
            hurwitz_zeta(2.0, -1.0)


class TestDigamma:
    def test_classical_values_at_one(self, table):
        assert abs(digamma_m(0, 1.0) + table.gamma) < 1e-13
        assert abs(digamma_m(1, 1.0) - table.zeta[2]) < 1e-12 * table.zeta[2]
        assert abs(digamma_m(2, 1.0) + 2.0 * table.zeta[3]) < 1e-12 * 2.0 * table.zeta[3]

    def test_recurrence_numerically(self):
        rng = random.Random(31337)
        for _ in range(60):
            x = rng.uniform(1e-3, 100.0)
            lhs = digamma_m(0, x + 1.0) - digamma_m(0, x)
            assert abs(lhs - 1.0 / x) <= 1e-12 * max(1.0, 1.0 / x)

    def test_against_asymptotics(self):
        # psi(x) ~ ln x for large x
        assert abs(digamma_m(0, 1e6) - math.log(1e6)) < 1e-6

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            digamma_m(0, 0.0)
        with pytest.raises(ValueError):
            digamma_m(0, -2.0)
        with pytest.raises(ValueError):
            digamma_m(-1, 1.0)


class TestGammaNumeric:
    def test_functional_equation(self):
        rng = random.Random(2468)
        for _ in range(120):
            x = rng.uniform(1e-6, 50.0)
            ratio = gamma_value(x + 1.0) / (x * gamma_value(x))
            assert abs(ratio - 1.0) <= 1e-12

    def test_classical_points(self):
        assert abs(gamma_value(0.5) - math.sqrt(math.pi)) < 1e-14
        for n in range(1, 10):
            assert abs(gamma_value(float(n)) - math.factorial(n - 1)) <= 1e-12 * math.factorial(n - 1)

    def test_log_gamma_domain(self):
        with pytest.raises(ValueError):
            log_gamma(0.0)


class TestQuadrature:
    def test_minus_gamma(self, table):
        result = quadrature(IntegralSpec.simple(1, 1), 1.0, rel_tol=1e-10)
        assert result.converged
        assert abs(result.value - (-0.5772156649)) < 1e-10 + 1e-9 * 0.58
        assert result.abs_error_estimate <= 1e-10 * (1.0 + abs(result.value))

    def test_pure_exponential(self):
        result = quadrature(IntegralSpec.simple(1, 0), 3.0, rel_tol=1e-10)
        assert result.converged
        assert abs(result.value - 1.0 / 3.0) < 1e-12

    def test_weight_two_value(self):
        result = quadrature(IntegralSpec.simple(1, 2), 1.0, rel_tol=1e-10)
        assert result.converged
        assert abs(result.value - 1.9781119906) < 1e-9

    def test_polynomial_prefactor(self, table):
        # (x - 1/2) x^(-1/2) e^-x ln x integrates to Gamma(1/2) = sqrt(pi)
        spec = IntegralSpec(
            (PrefactorTerm(0, Fraction(-1, 2)), PrefactorTerm(1, Fraction(1))),
            ArgPoint.of(Fraction(1, 2)),
            1,
            Fraction(1),
        )
        result = quadrature(spec, 1.0, rel_tol=1e-10)
        assert result.converged
        assert abs(result.value - table.sqrt_pi) <= 1e-9 * table.sqrt_pi

    def test_error_estimate_honest_on_refinement(self):
        spec = IntegralSpec.simple(1, 1)
        coarse = quadrature(spec, 1.0, rel_tol=1e-6)
        fine = quadrature(spec, 1.0, rel_tol=1e-12)
        assert coarse.converged and fine.converged
        assert fine.nodes_used >= coarse.nodes_used
        assert fine.abs_error_estimate <= coarse.abs_error_estimate

    def test_node_budget_exhaustion_reports_nonconvergence(self):
        result = quadrature(IntegralSpec.simple(1, 1), 1.0, rel_tol=1e-10, max_nodes=100)
        assert not result.converged

    def test_error_estimates_shrink_on_catalog_integrands(self):
        from explogint.catalog import catalog

        for entry in catalog():
            if entry.param_name is None:
                param = None
            elif entry.param_name == "n":
                param = 2
            else:
                param = ArgPoint.of(Fraction(3, 2))
            spec = entry.build(param)
            mu = 1.0 if spec.mu is None else float(spec.mu)
            coarse = quadrature(spec, mu, rel_tol=1e-6)
            fine = quadrature(spec, mu, rel_tol=1e-11)
            assert coarse.converged and fine.converged
            assert fine.abs_error_estimate <= coarse.abs_error_estimate

    def test_parameter_validation(self):
        with pytest.raises(ValueError):
            quadrature(IntegralSpec.simple(1, 0), -1.0)
        with pytest.raises(ValueError):
            quadrature(IntegralSpec.simple(1, 0), 1.0, rel_tol=1e-14)


class TestFiniteDifferences:
    def test_classic_weights(self):
        assert fd_weights(2, [-1, 0, 1]) == [1, -2, 1]
        assert fd_weights(1, [-2, -1, 0, 1, 2]) == [
            Fraction(1, 12),
            Fraction(-2, 3),
            Fraction(0),
            Fraction(2, 3),
            Fraction(-1, 12),
        ]

    def test_weights_validation(self):
        with pytest.raises(ValueError):
            fd_weights(3, [-1, 0, 1])
        with pytest.raises(ValueError):
            fd_weights(1, [0, 0, 1])

    def test_derivatives_of_exp(self):
        # every derivative of e^x at 0 is 1
        for order, h in [(1, 1e-3), (2, 1e-2), (4, 5e-2), (5, 8e-2)]:
            value = nth_derivative_fd(math.exp, 0.0, order, h)
            assert abs(value - 1.0) < 1e-8
