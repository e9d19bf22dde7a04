"""
Brute-force search for interpretations on a finite coefficient grid.

Candidates are enumerated in grid order: symbols sorted by name, each
symbol's coefficients (f_0, ..., f_n) in lexicographic grid order, matrix
coefficients entry by entry. Each round takes the first candidate that
orients every obligation and strictly orients at least one removable rule;
rounds repeat until nothing is left. The assembled certificate is accepted
only if check_certificate certifies it.
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Sequence, Tuple

from src.algebra import Carrier, CarrierValue, MatrixSpec, ScalarLike
from src.checker.certificate import Certificate, OrderedProblem, Problem, ProofStep, Status, TermProblem
from src.checker.checker import check_certificate, obligations_of, remove_claimed
from src.interp.interpretation import (
    Interpretation,
    Orientation,
    Regime,
    check_well_formed,
    orient,
)
from src.rewriting.terms import signature_of

logger = logging.getLogger(__name__)

MAX_RULES = 6
MAX_SYMBOLS = 4
MAX_CANDIDATES = 200000
MAX_STEPS = 8


class SearchLimitError(ValueError):
    """The problem is too large for exhaustive search."""


@dataclass
class SearchStatistics:
    candidates_tried: int = 0
    steps_found: int = 0
    budget_exhausted: bool = False
    remaining_rules: int = 0

    def __str__(self) -> str:
        return (
            f"candidates tried: {self.candidates_tried}, steps found: {self.steps_found}, "
            f"remaining rules: {self.remaining_rules}, budget exhausted: {self.budget_exhausted}"
        )


@dataclass
class SearchOutcome:
    certificate: Optional[Certificate]
    statistics: SearchStatistics = field(default_factory=SearchStatistics)

    @property
    def found(self) -> bool:
        return self.certificate is not None


def _grid_values(carrier: Carrier, grid: Sequence[ScalarLike]) -> List[CarrierValue]:
    """Every carrier value whose entries come from the grid."""
    if isinstance(carrier, MatrixSpec):
        scalars = [carrier.base.value(v) for v in grid]
        n = carrier.dim
        return [
            carrier.value([list(entries[i * n : (i + 1) * n]) for i in range(n)])
            for entries in itertools.product(scalars, repeat=n * n)
        ]
    return [carrier.value(v) for v in grid]


def _symbol_choices(
    carrier: Carrier, regime: Regime, monotone: bool, symbol: str, arity: int, values
) -> List[Tuple[CarrierValue, ...]]:
    """Coefficient tuples for one symbol that pass its well-formedness conditions."""
    choices = []
    for coeffs in itertools.product(values, repeat=arity + 1):
        single = Interpretation(carrier, regime, {symbol: coeffs}, monotone)
        if check_well_formed(single, {symbol: arity}) is None:
            choices.append(coeffs)
    return choices


def _find_step(
    problem: Problem,
    carrier: Carrier,
    regime: Regime,
    monotone: bool,
    values: List[CarrierValue],
    stats: SearchStatistics,
    max_candidates: int,
) -> Optional[ProofStep]:
    obligations = obligations_of(problem)
    removable = len(obligations) if isinstance(problem, TermProblem) else len(problem.pairs)
    signature = signature_of(obligations)
    symbols = sorted(signature)
    per_symbol = [
        _symbol_choices(carrier, regime, monotone, f, signature[f], values) for f in symbols
    ]

    candidates: Iterator[tuple] = itertools.product(*per_symbol)
    for tried, choice in enumerate(candidates, start=1):
        if tried > max_candidates:
            stats.budget_exhausted = True
            logger.warning(f"Candidate budget of {max_candidates} exhausted")
            return None
        stats.candidates_tried += 1
        interp = Interpretation(carrier, regime, dict(zip(symbols, choice)), monotone)
        strict = set()
        for i, rule in enumerate(obligations):
            orientation = orient(interp, rule)
            if orientation is Orientation.NONE:
                break
            if orientation is Orientation.STRICT and i < removable:
                strict.add(i)
        else:
            if strict:
                return ProofStep(interp, frozenset(strict))
    return None


def _remaining(problem: Problem):
    return problem.trs.rules if isinstance(problem, TermProblem) else problem.pairs


def search_interpretation(
    problem: Problem,
    regime: Regime,
    carrier: Carrier,
    grid: Sequence[ScalarLike],
    max_rules: int = MAX_RULES,
    max_symbols: int = MAX_SYMBOLS,
    max_candidates: int = MAX_CANDIDATES,
    max_steps: int = MAX_STEPS,
) -> SearchOutcome:
    """
    Search a certificate for `problem` with interpretations from the grid.

    Term problems need plain interpretations with a monotonicity claim;
    ordering problems accept every regime. Raises SearchLimitError when the
    problem exceeds the rule or symbol limits.
    """
    obligations = obligations_of(problem)
    # P and R may share rules, as in as_ordered
    distinct = len(set(obligations))
    if distinct > max_rules:
        raise SearchLimitError(f"{distinct} rules exceed the search limit of {max_rules}")
    symbols = signature_of(obligations)
    if len(symbols) > max_symbols:
        raise SearchLimitError(f"{len(symbols)} symbols exceed the search limit of {max_symbols}")

    regime = Regime(regime)
    monotone = isinstance(problem, TermProblem)
    if monotone and regime is not Regime.PLAIN:
        raise ValueError(f"rule removal needs the plain regime, got {regime.value}")
    values = _grid_values(carrier, grid)
    stats = SearchStatistics()
    steps: List[ProofStep] = []

    current = problem
    while _remaining(current):
        if len(steps) >= max_steps:
            break
        step = _find_step(current, carrier, regime, monotone, values, stats, max_candidates)
        if step is None:
            break
        steps.append(step)
        stats.steps_found += 1
        logger.info(
            f"Step {len(steps) - 1}: removes {sorted(step.strict)} after {stats.candidates_tried} candidates"
        )
        current = remove_claimed(current, step)

    remaining = _remaining(current)
    stats.remaining_rules = len(remaining)
    if remaining:
        return SearchOutcome(None, stats)

    certificate = Certificate(problem, tuple(steps))
    verdict = check_certificate(certificate)
    if verdict.status is not Status.CERTIFIED:
        logger.error(f"Checker rejected a generated certificate: {verdict.render()}")
        return SearchOutcome(None, stats)
    return SearchOutcome(certificate, stats)


def as_ordered(problem: TermProblem) -> OrderedProblem:
    """
    The ordering problem whose pairs are the rules of the TRS.

    R is the same rule list, matching how certificate files pair their
    listed pairs with the rules of the TRS file.
    """
    return OrderedProblem(problem.trs.rules, problem.trs.rules)
