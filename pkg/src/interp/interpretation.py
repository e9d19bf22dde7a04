"""
Linear interpretations and the term orders they induce.

An interpretation maps every n-ary symbol f to coefficients
(f_0, f_1, ..., f_n) over a carrier, read as

    [f](x_1, ..., x_n) = f_0 ⊕ f_1 ⊙ x_1 ⊕ ... ⊕ f_n ⊙ x_n

Three regimes are supported:
- plain: all coefficients ≥ 0, optionally monotone (mono f_1..f_n)
- negconst: f_1..f_n ≥ 0, f_0 arbitrary, every application wrapped in
  max(0, ·); terms are compared through left/right approximations
- arctic: over an arctic carrier, some coefficient of each symbol is pos
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

from src.algebra import Carrier, CarrierValue
from src.interp.polynomials import (
    EvaluationError,
    LinearPoly,
    poly_add,
    poly_ge,
    poly_gt,
    poly_scale,
    render_poly,
)
from src.rewriting.terms import ArityConflictError, Fun, Rule, Term, Var, collect_symbols


class InterpretationError(ValueError):
    """Missing symbol, wrong arity, wrong carrier shape or regime mismatch."""


class Regime(str, Enum):
    PLAIN = "plain"
    NEGCONST = "negconst"
    ARCTIC = "arctic"


class Orientation(str, Enum):
    STRICT = "Strict"
    WEAK = "Weak"
    NONE = "None"


@dataclass(frozen=True)
class WellFormednessViolation:
    symbol: Optional[str]
    index: Optional[int]
    condition: str

    def __str__(self) -> str:
        where = "interpretation" if self.symbol is None else f"[{self.symbol}]"
        if self.index is not None:
            where += f" coefficient {self.index}"
        return f"{where}: {self.condition}"


@dataclass(frozen=True)
class Interpretation:
    carrier: Carrier
    regime: Regime
    coefficients: Mapping[str, Tuple[CarrierValue, ...]] = field(default_factory=dict)
    monotone_claimed: bool = False

    def __post_init__(self):
        regime = Regime(self.regime)
        object.__setattr__(self, "regime", regime)
        if regime is Regime.ARCTIC and not self.carrier.is_arctic:
            raise InterpretationError(f"arctic regime needs an arctic carrier, got {self.carrier}")
        if regime is not Regime.ARCTIC and self.carrier.is_arctic:
            raise InterpretationError(f"{regime.value} regime cannot use {self.carrier}")
        if regime is Regime.NEGCONST and not self.carrier.supports_max0:
            raise InterpretationError(f"negconst regime needs max0 on {self.carrier}")

        coefficients = {}
        for symbol, coeffs in self.coefficients.items():
            if len(coeffs) == 0:
                raise InterpretationError(f"[{symbol}] has no constant coefficient")
            try:
                coefficients[symbol] = tuple(self.carrier.value(c) for c in coeffs)
            except ValueError as e:
                raise InterpretationError(f"[{symbol}]: {e}") from e
        object.__setattr__(self, "coefficients", coefficients)

    def coefficients_for(self, symbol: str, arity: int) -> Tuple[CarrierValue, ...]:
        coeffs = self.coefficients.get(symbol)
        if coeffs is None:
            raise InterpretationError(f"no interpretation for symbol '{symbol}'")
        if len(coeffs) != arity + 1:
            raise InterpretationError(
                f"[{symbol}] has {len(coeffs) - 1} argument coefficients, symbol has arity {arity}"
            )
        return coeffs


def check_well_formed(
    interp: Interpretation, signature: Mapping[str, int]
) -> Optional[WellFormednessViolation]:
    """
    Check the regime's side conditions for every symbol of the signature.

    Returns None when they hold, otherwise the first violation in symbol
    order. Missing symbols and arity mismatches raise InterpretationError.
    """
    carrier = interp.carrier
    zero = carrier.zero()

    if interp.monotone_claimed and interp.regime is not Regime.PLAIN:
        return WellFormednessViolation(
            None, None, f"monotonicity cannot be claimed in the {interp.regime.value} regime"
        )

    for symbol in sorted(signature):
        coeffs = interp.coefficients_for(symbol, signature[symbol])
        if interp.regime is Regime.PLAIN:
            for i, c in enumerate(coeffs):
                if not carrier.weak_ge(c, zero):
                    return WellFormednessViolation(symbol, i, "coefficient must be >= 0")
            if interp.monotone_claimed:
                for i, c in enumerate(coeffs[1:], start=1):
                    if not carrier.growth_pred(c):
                        return WellFormednessViolation(symbol, i, "coefficient must be mono")
        elif interp.regime is Regime.NEGCONST:
            for i, c in enumerate(coeffs[1:], start=1):
                if not carrier.weak_ge(c, zero):
                    return WellFormednessViolation(symbol, i, "argument coefficient must be >= 0")
        elif not any(carrier.growth_pred(c) for c in coeffs):
            return WellFormednessViolation(symbol, None, "some coefficient must be pos")
    return None


def term_signature(terms: Iterable[Term]) -> Dict[str, int]:
    signature: Dict[str, int] = {}
    try:
        for t in terms:
            collect_symbols(t, signature)
    except ArityConflictError as e:
        raise InterpretationError(str(e)) from e
    return signature


def _require_well_formed(interp: Interpretation, terms: Iterable[Term]) -> None:
    violation = check_well_formed(interp, term_signature(terms))
    if violation is not None:
        raise InterpretationError(f"interpretation is not well-formed: {violation}")


def _apply(interp: Interpretation, t: Fun, args: Sequence[LinearPoly]) -> LinearPoly:
    """[f](p_1, ..., p_n) for linear arguments; linear again."""
    carrier = interp.carrier
    coeffs = interp.coefficients_for(t.symbol, len(t.args))
    result = LinearPoly(coeffs[0], {})
    for c, p in zip(coeffs[1:], args):
        result = poly_add(carrier, result, poly_scale(carrier, c, p))
    return result


def symbolic_eval(interp: Interpretation, t: Term) -> LinearPoly:
    """The linear form of [t] for the plain and arctic regimes."""
    if interp.regime is Regime.NEGCONST:
        raise InterpretationError("negconst terms are evaluated through approx_left / approx_right")
    if isinstance(t, Var):
        return LinearPoly.variable(interp.carrier, t.name)
    return _apply(interp, t, [symbolic_eval(interp, a) for a in t.args])


def _lookup(assignment: Mapping[str, CarrierValue], name: str) -> CarrierValue:
    if name not in assignment:
        raise EvaluationError(f"no value for variable {name}")
    return assignment[name]


def eval_term(interp: Interpretation, t: Term, assignment: Mapping[str, CarrierValue]) -> CarrierValue:
    """Direct evaluation of [t] under an assignment (plain and arctic regimes)."""
    carrier = interp.carrier
    if isinstance(t, Var):
        return _lookup(assignment, t.name)
    coeffs = interp.coefficients_for(t.symbol, len(t.args))
    result = coeffs[0]
    for c, arg in zip(coeffs[1:], t.args):
        result = carrier.add(result, carrier.mul(c, eval_term(interp, arg, assignment)))
    return result


def eval_max(interp: Interpretation, t: Term, assignment: Mapping[str, CarrierValue]) -> CarrierValue:
    """Evaluation with every function application wrapped in max(0, ·)."""
    if interp.regime is not Regime.NEGCONST:
        raise InterpretationError("max-wrapped evaluation belongs to the negconst regime")
    carrier = interp.carrier
    zero = carrier.zero()

    def go(s: Term) -> CarrierValue:
        if isinstance(s, Var):
            value = _lookup(assignment, s.name)
            if not carrier.weak_ge(value, zero):
                raise EvaluationError(f"value of {s.name} must be >= 0, got {carrier.render(value)}")
            return value
        coeffs = interp.coefficients_for(s.symbol, len(s.args))
        result = coeffs[0]
        for c, arg in zip(coeffs[1:], s.args):
            result = carrier.add(result, carrier.mul(c, go(arg)))
        return carrier.max0(result)

    return go(t)


def _left(interp: Interpretation, t: Term) -> LinearPoly:
    if isinstance(t, Var):
        return LinearPoly.variable(interp.carrier, t.name)
    p = _apply(interp, t, [_left(interp, a) for a in t.args])
    if p.is_constant:
        return LinearPoly(interp.carrier.max0(p.constant), {})
    return p


def _right(interp: Interpretation, t: Term) -> LinearPoly:
    if isinstance(t, Var):
        return LinearPoly.variable(interp.carrier, t.name)
    p = _apply(interp, t, [_right(interp, a) for a in t.args])
    # ncp(p) ⊕ max0(cp(p))
    return LinearPoly(interp.carrier.max0(p.constant), dict(p.coeffs))


def approx_left(interp: Interpretation, t: Term) -> LinearPoly:
    """Max-free lower bound of the max-wrapped interpretation of t."""
    if interp.regime is not Regime.NEGCONST:
        raise InterpretationError("approximations belong to the negconst regime")
    _require_well_formed(interp, [t])
    return _left(interp, t)


def approx_right(interp: Interpretation, t: Term) -> LinearPoly:
    """Max-free upper bound of the max-wrapped interpretation of t."""
    if interp.regime is not Regime.NEGCONST:
        raise InterpretationError("approximations belong to the negconst regime")
    _require_well_formed(interp, [t])
    return _right(interp, t)


@dataclass(frozen=True)
class OrientationReport:
    rule: Rule
    carrier: Carrier
    lhs: LinearPoly
    rhs: LinearPoly
    orientation: Orientation

    @property
    def lhs_text(self) -> str:
        return render_poly(self.carrier, self.lhs)

    @property
    def rhs_text(self) -> str:
        return render_poly(self.carrier, self.rhs)

    def render(self) -> str:
        relation = {Orientation.STRICT: ">", Orientation.WEAK: ">=", Orientation.NONE: "?"}
        return (
            f"{self.lhs_text}  {relation[self.orientation]}  {self.rhs_text}  "
            f"[{self.orientation.value}]"
        )


def orient_report(interp: Interpretation, rule: Rule) -> OrientationReport:
    """Compare both sides of a rule and keep the compared polynomials."""
    carrier = interp.carrier
    if interp.regime is Regime.NEGCONST:
        lhs = approx_left(interp, rule.lhs)
        rhs = approx_right(interp, rule.rhs)
    else:
        lhs = symbolic_eval(interp, rule.lhs)
        rhs = symbolic_eval(interp, rule.rhs)

    if poly_gt(carrier, lhs, rhs):
        orientation = Orientation.STRICT
    elif poly_ge(carrier, lhs, rhs):
        orientation = Orientation.WEAK
    else:
        orientation = Orientation.NONE
    return OrientationReport(rule, carrier, lhs, rhs, orientation)


def orient(interp: Interpretation, rule: Rule) -> Orientation:
    return orient_report(interp, rule).orientation
