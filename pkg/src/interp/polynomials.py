"""
Linear polynomials over a carrier.

A LinearPoly is c ⊕ a_1 ⊙ x_1 ⊕ ... ⊕ a_k ⊙ x_k with coefficients taken
from a scalar or matrix carrier. Coefficients equal to the carrier's zero
are dropped, so `coeffs` only lists variables that actually occur.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Mapping

from src.algebra import Carrier, CarrierValue, Matrix


class EvaluationError(ValueError):
    """An assignment does not cover or does not fit the evaluated term."""


@dataclass(frozen=True)
class LinearPoly:
    constant: CarrierValue
    coeffs: Mapping[str, CarrierValue] = field(default_factory=dict)

    @classmethod
    def make(cls, carrier: Carrier, constant: CarrierValue, coeffs: Mapping[str, CarrierValue]) -> "LinearPoly":
        zero = carrier.zero()
        return cls(constant, {x: c for x, c in sorted(coeffs.items()) if c != zero})

    @classmethod
    def variable(cls, carrier: Carrier, name: str) -> "LinearPoly":
        return cls(carrier.zero(), {name: carrier.one()})

    def cp(self) -> "LinearPoly":
        """The constant part."""
        return LinearPoly(self.constant, {})

    def ncp(self, carrier: Carrier) -> "LinearPoly":
        """The non-constant part."""
        return LinearPoly(carrier.zero(), dict(self.coeffs))

    @property
    def is_constant(self) -> bool:
        return not self.coeffs

    def evaluate(self, carrier: Carrier, assignment: Mapping[str, CarrierValue]) -> CarrierValue:
        result = self.constant
        for x, c in self.coeffs.items():
            if x not in assignment:
                raise EvaluationError(f"no value for variable {x}")
            result = carrier.add(result, carrier.mul(c, assignment[x]))
        return result


def poly_add(carrier: Carrier, p: LinearPoly, q: LinearPoly) -> LinearPoly:
    coeffs: Dict[str, CarrierValue] = dict(p.coeffs)
    for x, c in q.coeffs.items():
        coeffs[x] = carrier.add(coeffs[x], c) if x in coeffs else c
    return LinearPoly.make(carrier, carrier.add(p.constant, q.constant), coeffs)


def poly_scale(carrier: Carrier, c: CarrierValue, p: LinearPoly) -> LinearPoly:
    """c ⊙ p, multiplying from the left."""
    return LinearPoly.make(
        carrier,
        carrier.mul(c, p.constant),
        {x: carrier.mul(c, a) for x, a in p.coeffs.items()},
    )


def poly_ge(carrier: Carrier, p: LinearPoly, q: LinearPoly) -> bool:
    """Coefficient-wise p ≥ q; absent coefficients are zero."""
    if not carrier.weak_ge(p.constant, q.constant):
        return False
    zero = carrier.zero()
    return all(
        carrier.weak_ge(p.coeffs.get(x, zero), q.coeffs.get(x, zero))
        for x in set(p.coeffs) | set(q.coeffs)
    )


def poly_gt(carrier: Carrier, p: LinearPoly, q: LinearPoly) -> bool:
    """
    Coefficient-wise p > q.

    Ordinary carriers use absolute positiveness: the constants are compared
    strictly and the variable coefficients weakly. Arctic carriers compare
    the constant and every coefficient strictly.
    """
    if not carrier.strict_gt(p.constant, q.constant):
        return False
    zero = carrier.zero()
    compare = carrier.strict_gt if carrier.is_arctic else carrier.weak_ge
    return all(
        compare(p.coeffs.get(x, zero), q.coeffs.get(x, zero))
        for x in set(p.coeffs) | set(q.coeffs)
    )


def render_poly(carrier: Carrier, p: LinearPoly) -> str:
    """
    Render for reports.

    Ordinary carriers print "1/2*x + 1/2"; arctic carriers print
    "max(x + 2, -inf)" with the constant always shown.
    """
    one = carrier.one()
    if carrier.is_arctic:
        parts = []
        for x, c in p.coeffs.items():
            if c == one:
                parts.append(x)
            elif isinstance(c, Matrix):
                parts.append(f"{carrier.render(c)}*{x}")
            else:
                parts.append(f"{x} + {carrier.render(c)}")
        parts.append(carrier.render(p.constant))
        return parts[0] if len(parts) == 1 else f"max({', '.join(parts)})"

    parts = [x if c == one else f"{carrier.render(c)}*{x}" for x, c in p.coeffs.items()]
    if p.constant != carrier.zero() or not parts:
        parts.append(carrier.render(p.constant))
    text = parts[0]
    for part in parts[1:]:
        text += f" - {part[1:]}" if part.startswith("-") else f" + {part}"
    return text
