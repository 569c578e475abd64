"""Independent floating-point ground truth.

This module supplies numeric values of the ring generators, direct
evaluation of Gamma / psi^(m) / Hurwitz zeta for arbitrary positive
arguments, finite differencing, and high-accuracy quadrature over the
integral class.  None of it shares a code path with the exact engine in
:mod:`special_values` / :mod:`evaluator`, so agreement between the two
sides is evidence rather than tautology.

All routines work in ordinary 64-bit floats; the advertised tolerances are
calibrated to that.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, Optional, Sequence

from .evaluator import IntegralSpec
from .ring import EULER_GAMMA, LOG2, LOG_MU, SQRT_PI, Generator, zeta_gen

# Bernoulli numbers B_2 .. B_16 (exact; converted to float where used).
_BERNOULLI = {
    2: Fraction(1, 6),
    4: Fraction(-1, 30),
    6: Fraction(1, 42),
    8: Fraction(-1, 30),
    10: Fraction(5, 66),
    12: Fraction(-691, 2730),
    14: Fraction(7, 6),
    16: Fraction(-3617, 510),
}


def euler_gamma_value(n_terms: int = 100) -> float:
    """Euler's constant from H_N - ln N with Euler-Maclaurin corrections.

    gamma = H_N - ln N - 1/(2N) + sum_j B_2j / (2j N^2j), truncated after
    B_8; at N = 100 the first omitted term is ~7e-23, far below double
    precision.
    """
    h = math.fsum(1.0 / k for k in range(1, n_terms + 1))
    x = float(n_terms)
    corrections = [
        float(_BERNOULLI[2 * j]) / (2 * j * x ** (2 * j)) for j in range(1, 5)
    ]
    return math.fsum([h, -math.log(x), -0.5 / x, *corrections])


def hurwitz_zeta(z: float, q: float) -> float:
    """zeta(z, q) = sum_{n>=0} (n+q)^(-z) for z > 1, q > 0.

    Euler-Maclaurin: a direct head sum up to N, the integral tail
    (N+q)^(1-z)/(z-1), the half-term, and Bernoulli corrections
    B_2j/(2j)! (z)_{2j-1} (N+q)^(1-z-2j).  N grows until the last
    correction is below 1e-17 of the result.
    """
    if z <= 1:
        raise ValueError(f"hurwitz_zeta needs z > 1, got {z}")
    if q <= 0:
        raise ValueError(f"hurwitz_zeta needs q > 0, got {q}")
    n = max(0, math.ceil(max(24.0, 3.0 * z) - q))
    for _ in range(8):
        nq = n + q
        head = math.fsum((j + q) ** (-z) for j in range(n))
        pieces = [head, nq ** (1.0 - z) / (z - 1.0), 0.5 * nq ** (-z)]
        rising = z  # (z)_{2j-1} built incrementally
        power = nq ** (-z - 1.0)
        factorial = 2.0  # (2j)!
        last = math.inf
        for two_j in range(2, 17, 2):
            term = float(_BERNOULLI[two_j]) / factorial * rising * power
            pieces.append(term)
            last = abs(term)
            rising *= (z + two_j - 1.0) * (z + two_j)
            power /= nq * nq
            factorial *= (two_j + 1.0) * (two_j + 2.0)
        result = math.fsum(pieces)
        if last <= 1e-17 * abs(result):
            return result
        n = 2 * n + 16
    raise ArithmeticError(f"hurwitz_zeta({z}, {q}) failed to converge")  # pragma: no cover


def digamma_m(m: int, x: float) -> float:
    """psi^(m)(x) for x > 0; relative accuracy ~1e-12 for m <= 6.

    m = 0 uses the recurrence psi(x) = psi(x+1) - 1/x to shift the argument
    to >= 10 and then the asymptotic series through the B_12 term; m >= 1
    reduces to (-1)^(m+1) m! zeta(m+1, x).
    """
    if x <= 0:
        raise ValueError(f"digamma_m needs x > 0, got {x}")
    if m < 0:
        raise ValueError("derivative order must be nonnegative")
    if m == 0:
        y = x
        terms = []
        while y < 10.0:
            terms.append(-1.0 / y)
            y += 1.0
        series = [math.log(y), -0.5 / y]
        y2 = y * y
        power = y2
        for two_j in range(2, 13, 2):
            series.append(-float(_BERNOULLI[two_j]) / (two_j * power))
            power *= y2
        return math.fsum(terms + series)
    sign = 1.0 if (m + 1) % 2 == 0 else -1.0
    return sign * math.factorial(m) * hurwitz_zeta(m + 1.0, x)


def log_gamma(x: float) -> float:
    """ln Gamma(x) for x > 0: argument shift to >= 10, then Stirling.

    ln Gamma(y) = (y - 1/2) ln y - y + ln(2 pi)/2
                  + sum_j B_2j / (2j (2j-1) y^(2j-1)),  through B_12.
    """
    if x <= 0:
        raise ValueError(f"log_gamma needs x > 0, got {x}")
    shift_terms = []
    y = x
    while y < 10.0:
        shift_terms.append(-math.log(y))
        y += 1.0
    series = [(y - 0.5) * math.log(y), -y, 0.5 * math.log(2.0 * math.pi)]
    power = y
    for two_j in range(2, 13, 2):
        series.append(float(_BERNOULLI[two_j]) / (two_j * (two_j - 1) * power))
        power *= y * y
    return math.fsum(shift_terms + series)


def gamma_value(x: float) -> float:
    return math.exp(log_gamma(x))


@dataclass(frozen=True, eq=False)
class ConstantsTable:
    """Numeric values of the ring generators; initialize once, read many."""

    gamma: float
    log2: float
    sqrt_pi: float
    zeta: Mapping[int, float]

    @property
    def max_zeta(self) -> int:
        return max(self.zeta)

    def bindings(self, mu: Optional[float] = None) -> dict[Generator, float]:
        """Generator bindings for numeric evaluation of symbolic constants."""
        out: dict[Generator, float] = {
            EULER_GAMMA: self.gamma,
            LOG2: self.log2,
            SQRT_PI: self.sqrt_pi,
        }
        for k, v in self.zeta.items():
            out[zeta_gen(k)] = v
        if mu is not None:
            if mu <= 0:
                raise ValueError("mu must be positive")
            out[LOG_MU] = math.log(mu)
        return out


def compute_constants(max_zeta: int = 12) -> ConstantsTable:
    if max_zeta < 2:
        raise ValueError("max_zeta must be at least 2")
    zetas = {k: hurwitz_zeta(float(k), 1.0) for k in range(2, max_zeta + 1)}
    return ConstantsTable(
        gamma=euler_gamma_value(),
        log2=math.log(2.0),
        sqrt_pi=math.sqrt(math.pi),
        zeta=zetas,
    )


# ---------------------------------------------------------------------------
# Quadrature
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    abs_error_estimate: float
    nodes_used: int
    converged: bool


# e^(-mu e^u) is capped where mu e^u = 700; beyond that the integrand is
# below 1e-300 and the tail is provably negligible.
_EXP_CAP = 700.0
_MIN_REL_TOL = 1e-13


def _integrand(spec: IntegralSpec, mu: float) -> Callable[[float], float]:
    # After x = e^u the integral becomes
    #   integral_R sum_j c_j mu^(mp_j) e^((s + p_j) u) e^(-mu e^u) u^n du,
    # smooth, doubly exponentially decaying to the right and exponentially
    # (rate s + min p_j) to the left.
    pairs = [
        (float(pf.coeff) * mu**pf.mu_power, float(spec.s.value) + pf.power)
        for pf in spec.prefactor
    ]
    n = spec.log_power

    def g(u: float) -> float:
        decay = mu * math.exp(u)
        total = 0.0
        for coeff, rate in pairs:
            w = rate * u - decay
            if w > -745.0:
                total += coeff * math.exp(w)
        if n and total:
            total *= u**n
        return total

    return g


def _left_cutoff(s_eff: float, n: int) -> float:
    # Smallest L with e^(-s_eff L) L^n below ~1e-26 relative to the
    # coefficient scale; fixed-point iteration on L = (60 + n ln L)/s_eff.
    L = max(6.0, 60.0 / s_eff)
    for _ in range(8):
        L = max(6.0, (60.0 + n * math.log(max(L, 2.0))) / s_eff)
    return L


def quadrature(
    spec: IntegralSpec,
    mu_value: float,
    rel_tol: float = 1e-10,
    max_nodes: int = 2**20,
) -> QuadratureResult:
    """Trapezoid rule on the u = ln x axis with step halving.

    The substitution makes the trapezoid rule spectrally accurate, so
    successive halvings converge very quickly; iteration stops when two
    refinements agree to ``rel_tol`` relatively.
    """
    if mu_value <= 0:
        raise ValueError("mu must be positive")
    if rel_tol < _MIN_REL_TOL:
        raise ValueError(f"rel_tol must be >= {_MIN_REL_TOL}")
    g = _integrand(spec, mu_value)
    s_eff = float(spec.s.value) + min(pf.power for pf in spec.prefactor)
    a = -_left_cutoff(s_eff, spec.log_power)
    b = math.log(_EXP_CAP / mu_value)

    panels = 64
    while (b - a) / panels > 0.5:
        panels *= 2
    h = (b - a) / panels
    total = math.fsum(
        [0.5 * g(a), 0.5 * g(b)] + [g(a + i * h) for i in range(1, panels)]
    )
    estimate = h * total
    nodes = panels + 1

    refinements = 0
    err = math.inf
    while nodes + panels <= max_nodes:
        mid_sum = math.fsum(g(a + (i + 0.5) * h) for i in range(panels))
        new_estimate = 0.5 * estimate + 0.5 * h * mid_sum
        nodes += panels
        panels *= 2
        h *= 0.5
        err = abs(new_estimate - estimate)
        estimate = new_estimate
        refinements += 1
        if refinements >= 2 and err <= rel_tol * max(abs(estimate), 1e-300):
            return QuadratureResult(estimate, err, nodes, True)
    return QuadratureResult(estimate, err, nodes, False)


# ---------------------------------------------------------------------------
# Finite differences
# ---------------------------------------------------------------------------


def fd_weights(order: int, offsets: Sequence[int]) -> list[Fraction]:
    """Exact finite-difference weights for the given derivative order.

    Fornberg's recurrence on the integer stencil ``offsets`` around 0; the
    actual step h is applied by the caller as a final division by h^order.
    """
    if order < 0:
        raise ValueError("derivative order must be nonnegative")
    if len(set(offsets)) != len(offsets):
        raise ValueError("stencil offsets must be distinct")
    if len(offsets) <= order:
        raise ValueError("stencil too small for the requested derivative")
    n = len(offsets)
    c: list[list[Fraction]] = [[Fraction(0)] * (order + 1) for _ in range(n)]
    c[0][0] = Fraction(1)
    c1 = Fraction(1)
    c4 = Fraction(offsets[0])
    for i in range(1, n):
        mn = min(i, order)
        c2 = Fraction(1)
        c5 = c4
        c4 = Fraction(offsets[i])
        for j in range(i):
            c3 = Fraction(offsets[i] - offsets[j])
            c2 *= c3
            if j == i - 1:
                for s in range(mn, 0, -1):
                    c[i][s] = c1 * (s * c[i - 1][s - 1] - c5 * c[i - 1][s]) / c2
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2
            for s in range(mn, 0, -1):
                c[j][s] = (c4 * c[j][s] - s * c[j][s - 1]) / c3
            c[j][0] = c4 * c[j][0] / c3
        c1 = c2
    return [row[order] for row in c]


def nth_derivative_fd(
    f: Callable[[float], float],
    x: float,
    order: int,
    h: float,
    half_width: int = 6,
) -> float:
    """Central finite difference of f^(order)(x) on a (2*half_width+1)-point stencil."""
    offsets = list(range(-half_width, half_width + 1))
    weights = fd_weights(order, offsets)
    terms = [float(w) * f(x + o * h) for w, o in zip(weights, offsets) if w]
    return math.fsum(terms) / h**order


# Step sizes balancing truncation against eps/h^k roundoff growth for a
# 13-point stencil applied to Gamma near x ~ 1..4.
_FD_STEPS = {0: 1e-3, 1: 1e-3, 2: 1e-3, 3: 8e-3, 4: 4e-2, 5: 5e-2}


def gamma_derivative_fd(order: int, x: float, h: Optional[float] = None) -> float:
    """Gamma^(order)(x) by pure finite differencing of the numeric Gamma.

    One Richardson step (h and h/2, leading error order 8 for the 13-point
    central stencil) removes most of the truncation error.
    """
    if order == 0:
        return gamma_value(x)
    step = h if h is not None else _FD_STEPS.get(order, 5e-2)
    coarse = nth_derivative_fd(gamma_value, x, order, step)
    fine = nth_derivative_fd(gamma_value, x, order, step / 2.0)
    return (256.0 * fine - coarse) / 255.0
