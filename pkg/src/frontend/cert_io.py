"""
Certificate files: JSON schema, parsing and rendering.

A certificate file looks like

    {
      "problem": "ordered",
      "pairs": ["s(x) -> p(half(s(s(x))))"],
      "steps": [
        {
          "regime": "negconst",
          "carrier": "rat",
          "delta": "1/2",
          "monotone": false,
          "interpretation": {"half": ["1/2", "1/2"], "p": ["-1", "1"], "s": ["1", "1"]},
          "strict": [0]
        }
      ]
    }

Scalars are strings in the carrier syntax ("3", "-1/2", "-inf"); plain JSON
integers are accepted too. Matrix carriers take row-major nested arrays; a
bare scalar c stands for c times the identity matrix.
"""

import json
from typing import Dict, List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, StrictInt, ValidationError, model_validator

from src.algebra import (
    WORD_BITS,
    ArithmeticOverflowError,
    Carrier,
    CarrierSpec,
    CarrierValue,
    Kind,
    Matrix,
    MatrixSpec,
)
from src.checker.certificate import (
    Certificate,
    OrderedProblem,
    ProofStep,
    TermProblem,
    UnsupportedStep,
)
from src.frontend.trs_parser import TrsParseError, parse_rule
from src.interp.interpretation import Interpretation, InterpretationError, Regime
from src.rewriting.terms import Trs

PROBLEM_KINDS = ("term", "ordered")
CARRIER_NAMES = tuple(k.value for k in Kind)
REGIME_NAMES = tuple(r.value for r in Regime)

ScalarLiteral = Union[StrictInt, str]
Coefficient = Union[ScalarLiteral, List[List[ScalarLiteral]]]


class CertificateSchemaError(ValueError):
    """The certificate does not follow the schema."""


class MatrixModel(BaseModel):
    """Matrix carrier parameters."""

    model_config = ConfigDict(extra="forbid")

    dim: int = Field(..., ge=1, description="Matrix dimension n")
    sd: Optional[int] = Field(None, ge=1, description="Strict dimension, 0 < sd <= n")

    @model_validator(mode="after")
    def check_sd(self):
        if self.sd is not None and self.sd > self.dim:
            raise ValueError(f"sd {self.sd} exceeds dim {self.dim}")
        return self


class StepModel(BaseModel):
    """One removal step."""

    model_config = ConfigDict(extra="forbid")

    regime: str = Field(..., description="plain | negconst | arctic")
    carrier: str = Field(..., description="nat | int | rat | arctic-nat | arctic-int | arctic-rat")
    delta: Optional[str] = Field(None, description="Strict margin p/q for rational carriers")
    matrix: Optional[MatrixModel] = None
    monotone: bool = False
    interpretation: Dict[str, List[Coefficient]]
    strict: List[int] = Field(default_factory=list)

    @model_validator(mode="after")
    def check_delta(self):
        if self.carrier in CARRIER_NAMES:
            rational = Kind(self.carrier).is_rational
            if rational and self.delta is None:
                raise ValueError(f"carrier '{self.carrier}' requires delta")
            if not rational and self.delta is not None:
                raise ValueError(f"delta is only allowed with rational carriers, not '{self.carrier}'")
        if any(i < 0 for i in self.strict):
            raise ValueError("strict indices must be non-negative")
        return self


class CertificateFile(BaseModel):
    """Top-level certificate document."""

    model_config = ConfigDict(extra="forbid")

    problem: str = "term"
    pairs: List[str] = Field(default_factory=list)
    steps: List[StepModel] = Field(default_factory=list)

    @model_validator(mode="after")
    def check_pairs(self):
        if self.problem == "term" and self.pairs:
            raise ValueError("pairs are only allowed for ordered problems")
        return self


def _format_validation_error(e: ValidationError) -> str:
    parts = []
    for err in e.errors():
        loc = ".".join(str(p) for p in err["loc"]) or "<document>"
        parts.append(f"{loc}: {err['msg']}")
    return "; ".join(parts)


def _unsupported_feature(step: StepModel) -> Optional[str]:
    if step.regime not in REGIME_NAMES:
        return f"regime '{step.regime}'"
    if step.carrier not in CARRIER_NAMES:
        return f"carrier '{step.carrier}'"
    regime, arctic = Regime(step.regime), Kind(step.carrier).is_arctic
    if (regime is Regime.ARCTIC) != arctic:
        return f"regime '{step.regime}' over carrier '{step.carrier}'"
    if arctic and step.matrix is not None and step.matrix.sd is not None:
        return "strict dimension for arctic matrices"
    return None


def _build_carrier(step: StepModel, default_sd: int) -> Carrier:
    base = CarrierSpec.from_name(step.carrier, step.delta)
    if step.matrix is None:
        return base
    sd = step.matrix.sd
    if sd is None and not base.is_arctic:
        sd = min(default_sd, step.matrix.dim)
    return MatrixSpec(base, step.matrix.dim, sd)


def _build_value(carrier: Carrier, literal: Coefficient, where: str) -> CarrierValue:
    if isinstance(literal, list) and not isinstance(carrier, MatrixSpec):
        raise CertificateSchemaError(f"{where}: matrix given for scalar carrier {carrier}")
    try:
        return carrier.value(str(literal) if isinstance(literal, int) else literal)
    except ArithmeticOverflowError:
        raise
    except ValueError as e:
        raise CertificateSchemaError(f"{where}: {e}") from e


def _build_step(step: StepModel, index: int, default_sd: int):
    feature = _unsupported_feature(step)
    if feature is not None:
        return UnsupportedStep(feature)
    where = f"steps.{index}"
    try:
        carrier = _build_carrier(step, default_sd)
    except ValueError as e:
        raise CertificateSchemaError(f"{where}: {e}") from e

    try:
        coefficients = {
            symbol: tuple(
                _build_value(carrier, c, f"{where}.interpretation.{symbol}.{i}")
                for i, c in enumerate(coeffs)
            )
            for symbol, coeffs in step.interpretation.items()
        }
    except ArithmeticOverflowError as e:
        return UnsupportedStep(f"arithmetic beyond {WORD_BITS}-bit range: {e}")
    try:
        interp = Interpretation(carrier, Regime(step.regime), coefficients, step.monotone)
    except InterpretationError as e:
        raise CertificateSchemaError(f"{where}.interpretation: {e}") from e
    return ProofStep(interp, frozenset(step.strict))


def parse_cert(text: str, trs: Trs, default_sd: int = 1) -> Certificate:
    """
    Parse a certificate for the given TRS.

    Raises CertificateSchemaError with the offending location. Unknown
    regimes and carriers do not raise: they become unsupported steps.
    """
    try:
        document = CertificateFile.model_validate_json(text)
    except ValidationError as e:
        raise CertificateSchemaError(_format_validation_error(e)) from e

    if document.problem not in PROBLEM_KINDS:
        return Certificate(TermProblem(trs), (UnsupportedStep(f"problem '{document.problem}'"),))

    if document.problem == "term":
        problem = TermProblem(trs)
    else:
        pairs = []
        for i, text_rule in enumerate(document.pairs):
            try:
                pairs.append(parse_rule(text_rule, trs.variables))
            except TrsParseError as e:
                raise CertificateSchemaError(f"pairs.{i}: {e}") from e
        problem = OrderedProblem(tuple(pairs), trs.rules)

    steps = tuple(_build_step(step, i, default_sd) for i, step in enumerate(document.steps))
    return Certificate(problem, steps)


def _render_value(carrier: Carrier, value: CarrierValue):
    if isinstance(value, Matrix):
        return [[str(a) for a in row] for row in value.entries]
    return str(value)


def _render_step(step: ProofStep) -> dict:
    interp = step.interpretation
    carrier = interp.carrier
    base = carrier.base if isinstance(carrier, MatrixSpec) else carrier
    document = {"regime": interp.regime.value, "carrier": base.kind.value}
    if base.delta is not None:
        delta = base.delta
        document["delta"] = f"{delta.numerator}/{delta.denominator}"
    if isinstance(carrier, MatrixSpec):
        document["matrix"] = {"dim": carrier.dim}
        if carrier.sd is not None:
            document["matrix"]["sd"] = carrier.sd
    document["monotone"] = interp.monotone_claimed
    document["interpretation"] = {
        symbol: [_render_value(carrier, c) for c in coeffs]
        for symbol, coeffs in sorted(interp.coefficients.items())
    }
    document["strict"] = sorted(step.strict)
    return document


def render_cert(cert: Certificate) -> str:
    """Canonical JSON for a certificate; the inverse of parse_cert."""
    steps = []
    for step in cert.steps:
        if isinstance(step, UnsupportedStep):
            raise ValueError(f"cannot render unsupported step ({step.feature})")
        steps.append(_render_step(step))
    document = {"problem": "term", "steps": steps}
    if isinstance(cert.problem, OrderedProblem):
        document = {
            "problem": "ordered",
            "pairs": [str(p) for p in cert.problem.pairs],
            "steps": steps,
        }
    return json.dumps(document, indent=2) + "\n"
