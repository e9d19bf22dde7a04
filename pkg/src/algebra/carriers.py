"""
Scalar carriers for ordered semirings.

Provides the scalar carriers used by interpretations:
- naturals, integers and rationals (with a fixed strict margin delta)
- the arctic (max-plus) variants of the three, extended by minus infinity

Each carrier is described by a CarrierSpec, which also implements the
semiring operations, the orders and the growth predicate (mono / pos).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Union

WORD_BITS = 64
_WORD_LIMIT = 2 ** (WORD_BITS - 1)

NEG_INF_LITERAL = "-inf"

_INT_RE = re.compile(r"^[+-]?\d+$")
_RAT_RE = re.compile(r"^([+-]?\d+)/(\d+)$")


class CarrierMismatchError(ValueError):
    """A value does not belong to the carrier it is used with."""


class UnsupportedOperationError(ValueError):
    """The carrier does not provide the requested operation."""


class ArithmeticOverflowError(OverflowError):
    """An exact value left the signed 64-bit range."""


class ScalarSyntaxError(ValueError):
    """A scalar literal could not be parsed."""


class Kind(str, Enum):
    """Scalar carrier kinds."""

    NAT = "nat"
    INT = "int"
    RAT = "rat"
    ARCTIC_NAT = "arctic-nat"
    ARCTIC_INT = "arctic-int"
    ARCTIC_RAT = "arctic-rat"

    @property
    def is_arctic(self) -> bool:
        return self in (Kind.ARCTIC_NAT, Kind.ARCTIC_INT, Kind.ARCTIC_RAT)

    @property
    def is_rational(self) -> bool:
        return self in (Kind.RAT, Kind.ARCTIC_RAT)

    @property
    def is_natural(self) -> bool:
        return self in (Kind.NAT, Kind.ARCTIC_NAT)


@dataclass(frozen=True)
class Scalar:
    """
    An element of a scalar carrier.

    `value` is an exact Fraction for finite elements and None for the
    arctic bottom element minus infinity.
    """

    kind: Kind
    value: Optional[Fraction]

    def __post_init__(self):
        if self.value is None:
            if not self.kind.is_arctic:
                raise CarrierMismatchError(f"-inf is not an element of {self.kind.value}")
            return
        value = self.value
        if not isinstance(value, Fraction):
            if isinstance(value, bool) or not isinstance(value, int):
                raise CarrierMismatchError(
                    f"expected an exact number for {self.kind.value}, got {value!r}"
                )
            value = Fraction(value)
            object.__setattr__(self, "value", value)
        if not -_WORD_LIMIT <= value.numerator < _WORD_LIMIT or value.denominator >= _WORD_LIMIT:
            raise ArithmeticOverflowError(f"{value} exceeds the {WORD_BITS}-bit range")
        if not self.kind.is_rational and value.denominator != 1:
            raise CarrierMismatchError(f"{value} is not an element of {self.kind.value}")
        if self.kind.is_natural and value < 0:
            raise CarrierMismatchError(f"{value} is not an element of {self.kind.value}")

    @classmethod
    def neg_inf(cls, kind: Kind) -> "Scalar":
        return cls(kind, None)

    @property
    def is_neg_inf(self) -> bool:
        return self.value is None

    def __str__(self) -> str:
        return render_scalar(self)

    def __repr__(self) -> str:
        return f"Scalar({self.kind.value}, {render_scalar(self)})"


def render_scalar(a: Scalar) -> str:
    """Render a scalar in certificate syntax ("3", "-1/2", "-inf")."""
    if a.value is None:
        return NEG_INF_LITERAL
    if a.value.denominator == 1:
        return str(a.value.numerator)
    return f"{a.value.numerator}/{a.value.denominator}"


def parse_number(text: str) -> Union[Fraction, None]:
    """
    Parse a scalar literal into an exact number.

    Returns None for "-inf". Raises ScalarSyntaxError for anything else
    that is neither an optionally-signed integer nor "p/q".
    """
    text = text.strip()
    if text == NEG_INF_LITERAL:
        return None
    if _INT_RE.match(text):
        return Fraction(int(text))
    match = _RAT_RE.match(text)
    if match:
        denominator = int(match.group(2))
        if denominator == 0:
            raise ScalarSyntaxError(f"zero denominator in '{text}'")
        return Fraction(int(match.group(1)), denominator)
    raise ScalarSyntaxError(f"invalid scalar literal '{text}'")


ScalarLike = Union[Scalar, int, Fraction, str]


@dataclass(frozen=True)
class CarrierSpec:
    """
    A scalar carrier together with its parameters.

    delta is the fixed strict margin of the rational carriers: x > y holds
    iff x - y >= delta. It is present exactly for rat and arctic-rat.
    """

    kind: Kind
    delta: Optional[Fraction] = None

    def __post_init__(self):
        if self.kind.is_rational:
            if self.delta is None:
                raise ValueError(f"carrier {self.kind.value} requires delta")
            delta = self.delta
            if isinstance(delta, str):
                delta = parse_number(delta)
            elif not isinstance(delta, Fraction):
                delta = Fraction(delta)
            if delta is None or delta <= 0:
                raise ValueError(f"delta must be a positive rational, got {self.delta}")
            object.__setattr__(self, "delta", delta)
        elif self.delta is not None:
            raise ValueError(f"carrier {self.kind.value} takes no delta")

    @classmethod
    def from_name(cls, name: str, delta=None) -> "CarrierSpec":
        return cls(Kind(name), delta)

    @property
    def is_arctic(self) -> bool:
        return self.kind.is_arctic

    @property
    def supports_max0(self) -> bool:
        return not self.kind.is_arctic

    def __str__(self) -> str:
        if self.delta is not None:
            return f"{self.kind.value}(delta={self.delta})"
        return self.kind.value

    # -- values -----------------------------------------------------------

    def value(self, x: ScalarLike) -> Scalar:
        """Coerce a literal, number or scalar into this carrier."""
        if isinstance(x, Scalar):
            self._check(x)
            return x
        if isinstance(x, str):
            return Scalar(self.kind, parse_number(x))
        return Scalar(self.kind, x)

    def parse(self, text: str) -> Scalar:
        return Scalar(self.kind, parse_number(text))

    def render(self, a: Scalar) -> str:
        return render_scalar(a)

    def zero(self) -> Scalar:
        if self.is_arctic:
            return Scalar.neg_inf(self.kind)
        return Scalar(self.kind, Fraction(0))

    def one(self) -> Scalar:
        if self.is_arctic:
            return Scalar(self.kind, Fraction(0))
        return Scalar(self.kind, Fraction(1))

    def _check(self, *values: Scalar) -> None:
        for a in values:
            if not isinstance(a, Scalar) or a.kind is not self.kind:
                raise CarrierMismatchError(f"{a!r} is not an element of {self}")

    # -- semiring operations ----------------------------------------------

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        self._check(a, b)
        if self.is_arctic:
            if a.value is None:
                return b
            if b.value is None:
                return a
            return a if a.value >= b.value else b
        return Scalar(self.kind, a.value + b.value)

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        self._check(a, b)
        if self.is_arctic:
            if a.value is None or b.value is None:
                return self.zero()
            return Scalar(self.kind, a.value + b.value)
        return Scalar(self.kind, a.value * b.value)

    # -- orders -------------------------------------------------------------

    def _base_gt(self, x: Fraction, y: Fraction) -> bool:
        if self.kind.is_rational:
            return x - y >= self.delta
        return x > y

    def weak_ge(self, a: Scalar, b: Scalar) -> bool:
        self._check(a, b)
        if self.is_arctic:
            return b.value is None or (a.value is not None and a.value >= b.value)
        return a.value >= b.value

    def strict_gt(self, a: Scalar, b: Scalar) -> bool:
        self._check(a, b)
        if self.is_arctic:
            # -inf > -inf holds: every element is above the bottom element
            return b.value is None or (a.value is not None and self._base_gt(a.value, b.value))
        return self._base_gt(a.value, b.value)

    def growth_pred(self, a: Scalar) -> bool:
        """mono(a) for ordinary carriers, pos(a) for arctic carriers."""
        self._check(a)
        if self.is_arctic:
            return a.value is not None and a.value >= 0
        return a.value >= 1

    def max0(self, a: Scalar) -> Scalar:
        self._check(a)
        if self.is_arctic:
            raise UnsupportedOperationError(f"max0 is not defined on {self}")
        return a if a.value >= 0 else self.zero()

    def rank(self, a: Scalar) -> Optional[int]:
        """
        Well-foundedness witness.

        Whenever strict_gt(x, y) and y is in the guarded zone (y >= 0, or
        pos(y) for arctic carriers), rank(x) > rank(y). Returns None for
        -inf, which lies outside the guarded zone.
        """
        self._check(a)
        if a.value is None:
            return None
        if self.kind.is_rational:
            return max(0, math.floor(a.value / self.delta))
        return max(0, math.ceil(a.value))
