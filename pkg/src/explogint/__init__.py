"""Exact closed forms for exponential-logarithmic integrals.

The package evaluates integrals of the class

    integral_0^inf p(x) x^(s-1) e^(-mu x) (ln x)^n dx

in exact closed form over a ring of named constants (gamma, log mu, log 2,
sqrt(pi), zeta(k)), and verifies every closed form independently by
high-accuracy quadrature and direct special-function numerics.
"""

from .evaluator import (
    ClosedForm,
    IntegralSpec,
    PrefactorTerm,
    eval_general,
    eval_In,
    eval_Jn,
)
from .catalog import CatalogCheck, CatalogEntry, catalog, check_entry, run_catalog
from .oracle import (
    ConstantsTable,
    QuadratureResult,
    compute_constants,
    digamma_m,
    gamma_value,
    hurwitz_zeta,
    log_gamma,
    quadrature,
)
from .parser import (
    IntegrandSyntaxError,
    UnsupportedIntegrandError,
    ast_to_text,
    parse_integrand,
    to_integral_spec,
)
from .ring import (
    EULER_GAMMA,
    GAMMA,
    LOG2,
    LOG2_CONST,
    LOG_MU,
    LOG_MU_CONST,
    SQRT_PI,
    SQRT_PI_CONST,
    Generator,
    Grade,
    MissingBindingError,
    Monomial,
    Rational,
    SymbolicConstant,
    grade,
    parse_constant,
    rational_const,
    zeta_const,
    zeta_gen,
)
from .special_values import (
    ArgPoint,
    double_factorial_odd,
    gamma_at,
    gamma_deriv_at,
    harmonic,
    odd_harmonic,
    psi_at,
    psi_deriv_at,
)

__version__ = "0.1.0"

__all__ = [
    "ArgPoint",
    "CatalogCheck",
    "CatalogEntry",
    "ClosedForm",
    "ConstantsTable",
    "EULER_GAMMA",
    "GAMMA",
    "Generator",
    "Grade",
    "IntegralSpec",
    "IntegrandSyntaxError",
    "LOG2",
    "LOG2_CONST",
    "LOG_MU",
    "LOG_MU_CONST",
    "MissingBindingError",
    "Monomial",
    "PrefactorTerm",
    "QuadratureResult",
    "Rational",
    "SQRT_PI",
    "SQRT_PI_CONST",
    "SymbolicConstant",
    "UnsupportedIntegrandError",
    "ast_to_text",
    "catalog",
    "check_entry",
    "compute_constants",
    "digamma_m",
    "double_factorial_odd",
    "eval_general",
    "eval_In",
    "eval_Jn",
    "gamma_at",
    "gamma_deriv_at",
    "gamma_value",
    "grade",
    "harmonic",
    "hurwitz_zeta",
    "log_gamma",
    "odd_harmonic",
    "parse_constant",
    "parse_integrand",
    "psi_at",
    "psi_deriv_at",
    "quadrature",
    "rational_const",
    "run_catalog",
    "to_integral_spec",
    "zeta_const",
    "zeta_gen",
]
