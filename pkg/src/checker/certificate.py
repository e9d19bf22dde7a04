"""
Certificate data model.

A certificate names an initial problem and a linear list of removal steps.
Checking produces a Verdict: CERTIFIED, REJECTED with a structured report,
or UNSUPPORTED with the feature the checker does not handle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import FrozenSet, List, Optional, Tuple, Union

from src.interp.interpretation import Interpretation
from src.rewriting.terms import Rule, Trs


@dataclass(frozen=True)
class TermProblem:
    """Prove SN(R)."""

    trs: Trs


@dataclass(frozen=True)
class OrderedProblem:
    """
    Orient all of P ∪ R weakly; strictly oriented pairs may be removed.

    Step indices address the list P ++ R: indices below len(pairs) are
    pairs, the remaining ones are rules.
    """

    pairs: Tuple[Rule, ...]
    rules: Tuple[Rule, ...]

    @property
    def obligations(self) -> Tuple[Rule, ...]:
        return tuple(self.pairs) + tuple(self.rules)


Problem = Union[TermProblem, OrderedProblem]


@dataclass(frozen=True)
class ProofStep:
    interpretation: Interpretation
    strict: FrozenSet[int] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "strict", frozenset(self.strict))


@dataclass(frozen=True)
class UnsupportedStep:
    """A step whose regime or carrier the checker does not implement."""

    feature: str


Step = Union[ProofStep, UnsupportedStep]


@dataclass(frozen=True)
class Certificate:
    problem: Problem
    steps: Tuple[Step, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))


class Status(str, Enum):
    CERTIFIED = "CERTIFIED"
    REJECTED = "REJECTED"
    UNSUPPORTED = "UNSUPPORTED"


@dataclass(frozen=True)
class Violation:
    """
    Why a certificate was rejected.

    `step` is the step index (len(steps) for the final emptiness claim,
    None for input admissibility); `rule` is the rule index within that
    step's obligations, or None for well-formedness conditions.
    """

    step: Optional[int]
    rule: Optional[int]
    condition: str
    detail: str = ""
    lhs: str = ""
    rhs: str = ""

    def render(self) -> List[str]:
        step = "input" if self.step is None else str(self.step)
        rule = "well-formedness" if self.rule is None else str(self.rule)
        lines = [f"step: {step}", f"rule: {rule}", f"condition: {self.condition}"]
        if self.detail:
            lines.append(f"detail: {self.detail}")
        if self.lhs or self.rhs:
            lines.append(f"lhs: {self.lhs}")
            lines.append(f"rhs: {self.rhs}")
        return lines


class ProofStepError(ValueError):
    """A removal step failed one of its side conditions."""

    def __init__(self, violation: Violation):
        self.violation = violation
        super().__init__(f"{violation.condition}: {violation.detail}")


@dataclass(frozen=True)
class Verdict:
    status: Status
    violation: Optional[Violation] = None
    feature: Optional[str] = None
    warnings: Tuple[str, ...] = ()

    @classmethod
    def certified(cls, warnings=()) -> "Verdict":
        return cls(Status.CERTIFIED, warnings=tuple(warnings))

    @classmethod
    def rejected(cls, violation: Violation, warnings=()) -> "Verdict":
        return cls(Status.REJECTED, violation=violation, warnings=tuple(warnings))

    @classmethod
    def unsupported(cls, feature: str, warnings=()) -> "Verdict":
        return cls(Status.UNSUPPORTED, feature=feature, warnings=tuple(warnings))

    def render(self) -> str:
        lines = [self.status.value]
        if self.violation is not None:
            lines += [f"  {line}" for line in self.violation.render()]
        if self.feature is not None:
            lines.append(f"  feature: {self.feature}")
        lines += [f"  warning: {w}" for w in self.warnings]
        return "\n".join(lines)
