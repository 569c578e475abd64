"""Exact constant ring for closed-form integral values.

Every closed form produced by this package has its constant part in the
polynomial ring Q[gamma, log_mu, log2, sqrt_pi, zeta(2), zeta(3), ...].
The ring is purely formal: the generators are treated as algebraically
independent, and pi^2 is always carried as 6*zeta(2) (a pi^2-flavoured
rendering exists for display only).  All values are immutable and all
operations are pure, so they are safe to share between threads.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from functools import cmp_to_key
from typing import Iterator, Mapping, NamedTuple, Optional, Union

#: Coefficient field.  ``fractions.Fraction`` already guarantees the
#: invariants we need: arbitrary precision, positive denominator, fully
#: reduced, and zero stored as 0/1.  Division by zero raises
#: ``ZeroDivisionError``.
Rational = Fraction

Scalar = Union[int, Fraction]


class MissingBindingError(KeyError):
    """Raised when a numeric evaluation lacks a value for some generator."""

    def __init__(self, generator: "Generator"):
        super().__init__(generator.name)
        self.generator = generator

    def __str__(self) -> str:
        return f"no numeric binding supplied for generator '{self.generator.name}'"


class GeneratorKind(IntEnum):
    # The enum values fix the total order on generators.
    EULER_GAMMA = 0
    LOG_MU = 1
    LOG2 = 2
    SQRT_PI = 3
    ZETA = 4


_KIND_NAMES = {
    GeneratorKind.EULER_GAMMA: "gamma",
    GeneratorKind.LOG_MU: "log_mu",
    GeneratorKind.LOG2: "log2",
    GeneratorKind.SQRT_PI: "sqrt_pi",
}


@dataclass(frozen=True)
class Generator:
    """A named transcendental constant; totally ordered for canonical forms."""

    kind: GeneratorKind
    k: int = 0  # zeta index, 0 for every other kind

    def __post_init__(self) -> None:
        if self.kind is GeneratorKind.ZETA:
            if self.k < 2:
                raise ValueError(f"zeta generator requires k >= 2, got {self.k}")
        elif self.k != 0:
            raise ValueError(f"{self.kind.name} carries no index")

    @property
    def sort_key(self) -> tuple[int, int]:
        return (int(self.kind), self.k)

    def __lt__(self, other: "Generator") -> bool:
        return self.sort_key < other.sort_key

    @property
    def name(self) -> str:
        if self.kind is GeneratorKind.ZETA:
            return f"zeta({self.k})"
        return _KIND_NAMES[self.kind]

    @property
    def weight(self) -> Optional[Fraction]:
        """Grading weight: gamma has weight 1, zeta(k) weight k, others none."""
        if self.kind is GeneratorKind.EULER_GAMMA:
            return Fraction(1)
        if self.kind is GeneratorKind.ZETA:
            return Fraction(self.k)
        return None

    def __repr__(self) -> str:
        return f"Generator({self.name})"


EULER_GAMMA = Generator(GeneratorKind.EULER_GAMMA)
LOG_MU = Generator(GeneratorKind.LOG_MU)
LOG2 = Generator(GeneratorKind.LOG2)
SQRT_PI = Generator(GeneratorKind.SQRT_PI)


def zeta_gen(k: int) -> Generator:
    return Generator(GeneratorKind.ZETA, k)


def generator_from_name(name: str) -> Generator:
    m = re.fullmatch(r"zeta\((\d+)\)", name)
    if m:
        return zeta_gen(int(m.group(1)))
    for kind, kname in _KIND_NAMES.items():
        if name == kname:
            return Generator(kind)
    raise ValueError(f"unknown generator name {name!r}")


# Exponent maps are stored as tuples of (generator, exponent), sorted by
# generator, with all exponents strictly positive.
Powers = tuple[tuple[Generator, int], ...]


class Monomial(NamedTuple):
    coeff: Fraction
    powers: Powers


def _merge_powers(a: Powers, b: Powers) -> Powers:
    merged: dict[Generator, int] = dict(a)
    for g, e in b:
        merged[g] = merged.get(g, 0) + e
    return tuple(sorted(merged.items(), key=lambda item: item[0].sort_key))


def _powers_cmp(pa: Powers, pb: Powers) -> int:
    """Graded-lexicographic order, biggest monomial first.

    Higher total degree sorts first; ties are broken by the earliest
    generator at which the exponents differ, larger exponent first.
    """
    da = sum(e for _, e in pa)
    db = sum(e for _, e in pb)
    if da != db:
        return db - da
    ia = ib = 0
    while ia < len(pa) or ib < len(pb):
        ga = pa[ia][0].sort_key if ia < len(pa) else None
        gb = pb[ib][0].sort_key if ib < len(pb) else None
        if ga == gb:
            ea, eb = pa[ia][1], pb[ib][1]
            if ea != eb:
                return eb - ea
            ia += 1
            ib += 1
        elif gb is None or (ga is not None and ga < gb):
            return -1  # pa has a positive exponent on an earlier generator
        else:
            return 1
    return 0


_POWERS_SORT_KEY = cmp_to_key(_powers_cmp)


class SymbolicConstant:
    """An element of the generator ring in canonical combined form.

    Canonical form: like monomials combined, zero coefficients dropped,
    terms sorted graded-lexicographically.  The empty term list is exactly
    zero.  Instances are immutable and hashable.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Powers, Fraction] | None = None):
        combined: dict[Powers, Fraction] = {}
        if terms:
            for powers, coeff in terms.items():
                if coeff:
                    combined[powers] = combined.get(powers, Fraction(0)) + coeff
        cleaned = [
            Monomial(c, p) for p, c in combined.items() if c
        ]
        cleaned.sort(key=lambda m: _POWERS_SORT_KEY(m.powers))
        object.__setattr__(self, "_terms", tuple(cleaned))

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("SymbolicConstant is immutable")

    # -- construction ------------------------------------------------------

    @classmethod
    def from_rational(cls, value: Scalar) -> "SymbolicConstant":
        v = Fraction(value)
        return cls({(): v} if v else {})

    @classmethod
    def from_generator(cls, g: Generator, exponent: int = 1) -> "SymbolicConstant":
        if exponent < 0:
            raise ValueError("generator exponents must be nonnegative")
        if exponent == 0:
            return cls.from_rational(1)
        return cls({((g, exponent),): Fraction(1)})

    # -- inspection --------------------------------------------------------

    @property
    def terms(self) -> tuple[Monomial, ...]:
        return self._terms

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def generators(self) -> set[Generator]:
        return {g for m in self._terms for g, _ in m.powers}

    def as_rational(self) -> Fraction:
        """The value as a plain rational; raises if any generator appears."""
        if not self._terms:
            return Fraction(0)
        if len(self._terms) == 1 and not self._terms[0].powers:
            return self._terms[0].coeff
        raise ValueError(f"not a rational constant: {self}")

    # -- ring operations ---------------------------------------------------

    @staticmethod
    def _coerce(value) -> "SymbolicConstant":
        if isinstance(value, SymbolicConstant):
            return value
        if isinstance(value, (int, Fraction)):
            return SymbolicConstant.from_rational(value)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other) -> "SymbolicConstant":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc = {m.powers: m.coeff for m in self._terms}
        for m in other._terms:
            acc[m.powers] = acc.get(m.powers, Fraction(0)) + m.coeff
        return SymbolicConstant(acc)

    __radd__ = __add__

    def __neg__(self) -> "SymbolicConstant":
        return SymbolicConstant({m.powers: -m.coeff for m in self._terms})

    def __sub__(self, other) -> "SymbolicConstant":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "SymbolicConstant":
        return (-self) + other

    def __mul__(self, other) -> "SymbolicConstant":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc: dict[Powers, Fraction] = {}
        for ma in self._terms:
            for mb in other._terms:
                powers = _merge_powers(ma.powers, mb.powers)
                acc[powers] = acc.get(powers, Fraction(0)) + ma.coeff * mb.coeff
        return SymbolicConstant(acc)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "SymbolicConstant":
        # Scalar division only; the ring has no general inverses.
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division of a symbolic constant by zero")
            return self * SymbolicConstant.from_rational(Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, exponent: int) -> "SymbolicConstant":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = SymbolicConstant.from_rational(1)  # 0**0 == 1 (empty product)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = SymbolicConstant.from_rational(other)
        if not isinstance(other, SymbolicConstant):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self._terms)

    # -- substitution and evaluation ----------------------------------------

    def substitute(self, g: Generator, replacement) -> "SymbolicConstant":
        """Replace a generator by a scalar or another ring element."""
        rep = self._coerce(replacement)
        out = SymbolicConstant.from_rational(0)
        for m in self._terms:
            exp = 0
            rest: list[tuple[Generator, int]] = []
            for gen, e in m.powers:
                if gen == g:
                    exp = e
                else:
                    rest.append((gen, e))
            part = SymbolicConstant({tuple(rest): m.coeff})
            out = out + part * rep**exp
        return out

    def evaluate(self, bindings: Mapping[Generator, float]) -> float:
        """Floating value; compensated (Kahan) summation over monomials."""
        total = 0.0
        comp = 0.0
        for m in self._terms:
            v = float(m.coeff)
            for g, e in m.powers:
                if g not in bindings:
                    raise MissingBindingError(g)
                v *= bindings[g] ** e
            y = v - comp
            t = total + y
            comp = (t - total) - y
            total = t
        return total

    # -- rendering -----------------------------------------------------------

    def render(self, paper_style: bool = False) -> str:
        """Display form, e.g. ``-gamma^3 - 3*zeta(2)*gamma - 2*zeta(3)``.

        With ``paper_style`` the classical table presentation is used where
        possible: zeta(2) powers fold into pi^2 multiples, and gamma + log_mu
        collapses to delta whenever the whole expression is a polynomial in
        delta alone.
        """
        const = self
        gamma_name = "gamma"
        if paper_style:
            delta_form = self.substitute(
                EULER_GAMMA, GAMMA - LOG_MU_CONST
            )
            if LOG_MU not in delta_form.generators() and EULER_GAMMA in delta_form.generators():
                const = delta_form
                gamma_name = "delta"
        if not const._terms:
            return "0"
        parts: list[str] = []
        for i, m in enumerate(const._terms):
            coeff = m.coeff
            factors: list[str] = []
            # display order: descending generator order within the monomial
            for g, e in reversed(m.powers):
                if paper_style and g.kind is GeneratorKind.ZETA and g.k == 2:
                    coeff = coeff / Fraction(6**e)
                    factors.append("pi^2" if e == 1 else f"pi^{2 * e}")
                    continue
                name = gamma_name if g.kind is GeneratorKind.EULER_GAMMA else g.name
                factors.append(name if e == 1 else f"{name}^{e}")
            negative = coeff < 0
            mag = -coeff if negative else coeff
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = f"{mag}*" + "*".join(factors)
            if i == 0:
                parts.append(f"-{body}" if negative else body)
            else:
                parts.append(f" - {body}" if negative else f" + {body}")
        return "".join(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"SymbolicConstant({self.render()!r})"

    # -- JSON ----------------------------------------------------------------

    def to_json(self) -> dict:
        terms = []
        for m in self._terms:
            powers = {g.name: e for g, e in reversed(m.powers)}
            terms.append(
                {
                    "coeff": f"{m.coeff.numerator}/{m.coeff.denominator}",
                    "powers": powers,
                }
            )
        return {"terms": terms}

    @classmethod
    def from_json(cls, data: dict) -> "SymbolicConstant":
        if not isinstance(data, dict) or "terms" not in data:
            raise ValueError("expected an object with a 'terms' array")
        acc: dict[Powers, Fraction] = {}
        for item in data["terms"]:
            num, _, den = item["coeff"].partition("/")
            coeff = Fraction(int(num), int(den) if den else 1)
            powers = tuple(
                sorted(
                    ((generator_from_name(name), int(e)) for name, e in item["powers"].items()),
                    key=lambda p: p[0].sort_key,
                )
            )
            for _, e in powers:
                if e <= 0:
                    raise ValueError("exponents must be positive integers")
            acc[powers] = acc.get(powers, Fraction(0)) + coeff
        return cls(acc)


# Ring elements for the individual generators, plus scalar shorthands.
ZERO = SymbolicConstant.from_rational(0)
ONE = SymbolicConstant.from_rational(1)
GAMMA = SymbolicConstant.from_generator(EULER_GAMMA)
LOG_MU_CONST = SymbolicConstant.from_generator(LOG_MU)
LOG2_CONST = SymbolicConstant.from_generator(LOG2)
SQRT_PI_CONST = SymbolicConstant.from_generator(SQRT_PI)


def rational_const(value: Scalar) -> SymbolicConstant:
    return SymbolicConstant.from_rational(value)


def zeta_const(k: int) -> SymbolicConstant:
    return SymbolicConstant.from_generator(zeta_gen(k))


# ---------------------------------------------------------------------------
# Weight grading
# ---------------------------------------------------------------------------

HOMOGENEOUS = "homogeneous"
INHOMOGENEOUS = "inhomogeneous"
UNGRADABLE = "ungradable"


@dataclass(frozen=True)
class Grade:
    """Result of grading a constant by the gamma/zeta weight.

    ``weight`` is set only for the homogeneous case.  Zero is homogeneous of
    every weight and is reported as homogeneous with ``weight=None``.
    """

    kind: str
    weight: Optional[Fraction] = None

    @property
    def is_homogeneous(self) -> bool:
        return self.kind == HOMOGENEOUS

    def __str__(self) -> str:
        if self.kind == HOMOGENEOUS:
            w = "any" if self.weight is None else str(self.weight)
            return f"homogeneous(weight={w})"
        return self.kind


def grade(const: SymbolicConstant) -> Grade:
    """Grade by weight(gamma) = 1, weight(zeta(k)) = k.

    The grading is defined only on the subring generated by gamma and the
    zeta values; any occurrence of log_mu, log2 or sqrt_pi makes the
    expression ungradable.
    """
    if const.is_zero:
        return Grade(HOMOGENEOUS, None)
    weights: set[Fraction] = set()
    for m in const.terms:
        w = Fraction(0)
        for g, e in m.powers:
            gw = g.weight
            if gw is None:
                return Grade(UNGRADABLE)
            w += gw * e
        weights.add(w)
    if len(weights) == 1:
        return Grade(HOMOGENEOUS, weights.pop())
    return Grade(INHOMOGENEOUS)


# ---------------------------------------------------------------------------
# Parsing of rendered constants (round-trip partner of render/to_json)
# ---------------------------------------------------------------------------

_CONST_TOKEN = re.compile(
    r"\s*(?:(?P<number>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^()/]))"
)


class ConstantParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class _ConstTokens:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def peek(self) -> tuple[str, str, int]:
        m = _CONST_TOKEN.match(self.text, self.pos)
        if m is None:
            if self.text[self.pos :].strip():
                raise ConstantParseError("unexpected character", self.pos)
            return ("end", "", len(self.text))
        for kind in ("number", "name", "op"):
            value = m.group(kind)
            if value is not None:
                return (kind, value, m.end())
        raise ConstantParseError("unexpected character", self.pos)  # pragma: no cover

    def next(self) -> tuple[str, str]:
        kind, value, end = self.peek()
        self.pos = end
        return kind, value

    def expect_op(self, op: str) -> None:
        kind, value = self.next()
        if kind != "op" or value != op:
            raise ConstantParseError(f"expected {op!r}", self.pos)


def parse_constant(text: str) -> SymbolicConstant:
    """Parse the display form produced by :meth:`SymbolicConstant.render`.

    Also accepts the paper-style spellings: ``delta`` for gamma + log_mu and
    ``pi`` with even exponents (pi^2 enters as 6*zeta(2)).
    """
    toks = _ConstTokens(text)
    result = ZERO
    sign = 1
    kind, value, end = toks.peek()
    if kind == "op" and value == "-":
        toks.next()
        sign = -1
    while True:
        result = result + sign * _parse_const_term(toks)
        kind, value, _ = toks.peek()
        if kind == "end":
            return result
        if kind == "op" and value in "+-":
            toks.next()
            sign = 1 if value == "+" else -1
        else:
            raise ConstantParseError("expected '+' or '-'", toks.pos)


def _parse_const_term(toks: _ConstTokens) -> SymbolicConstant:
    product = _parse_const_factor(toks)
    while True:
        kind, value, _ = toks.peek()
        if kind == "op" and value == "*":
            toks.next()
            product = product * _parse_const_factor(toks)
        else:
            return product


def _parse_const_factor(toks: _ConstTokens) -> SymbolicConstant:
    kind, value = toks.next()
    if kind == "number":
        numer = int(value)
        kind, nxt, end = toks.peek()
        if kind == "op" and nxt == "/":
            toks.next()
            k2, v2 = toks.next()
            if k2 != "number":
                raise ConstantParseError("expected denominator", toks.pos)
            if int(v2) == 0:
                raise ConstantParseError("zero denominator", toks.pos)
            return rational_const(Fraction(numer, int(v2)))
        return rational_const(numer)
    if kind != "name":
        raise ConstantParseError("expected a number or generator name", toks.pos)
    if value == "zeta":
        toks.expect_op("(")
        k2, v2 = toks.next()
        if k2 != "number":
            raise ConstantParseError("expected zeta index", toks.pos)
        toks.expect_op(")")
        base = zeta_const(int(v2))
    elif value == "delta":
        base = GAMMA + LOG_MU_CONST
    elif value == "pi":
        base = None  # handled below: pi is only legal with even exponents
    else:
        try:
            base = SymbolicConstant.from_generator(generator_from_name(value))
        except ValueError:
            raise ConstantParseError(f"unknown constant {value!r}", toks.pos) from None
    exponent = 1
    kind, nxt, _ = toks.peek()
    if kind == "op" and nxt == "^":
        toks.next()
        k2, v2 = toks.next()
        if k2 != "number":
            raise ConstantParseError("expected integer exponent", toks.pos)
        exponent = int(v2)
    if base is None:
        if exponent % 2 != 0:
            raise ConstantParseError(
                "pi requires an even exponent (pi^2 = 6*zeta(2)); use sqrt_pi", toks.pos
            )
        half = exponent // 2
        return rational_const(Fraction(6**half)) * zeta_const(2) ** half
    return base**exponent
