"""
Certificate checking.

Rule removal uses a monotone reduction pair (plain interpretations with a
monotonicity claim): every rule must be weakly oriented and the claimed
rules strictly. Pair removal on ordering problems accepts any reduction
pair and may only remove pairs.
"""

import logging
from typing import Tuple

from src.algebra import WORD_BITS, ArithmeticOverflowError
from src.checker.certificate import (
    Certificate,
    OrderedProblem,
    Problem,
    ProofStep,
    ProofStepError,
    TermProblem,
    UnsupportedStep,
    Verdict,
    Violation,
)
from src.interp.interpretation import (
    InterpretationError,
    Orientation,
    Regime,
    check_well_formed,
    orient_report,
)
from src.rewriting.terms import (
    ArityConflictError,
    InadmissibleRuleError,
    Rule,
    Trs,
    check_admissible,
    signature_of,
)

logger = logging.getLogger(__name__)


def _check_well_formed(step: ProofStep, rules: Tuple[Rule, ...], step_index: int) -> None:
    try:
        violation = check_well_formed(step.interpretation, signature_of(rules))
    except (InterpretationError, ArityConflictError) as e:
        raise ProofStepError(Violation(step_index, None, "interpretation-shape", str(e)))
    if violation is not None:
        raise ProofStepError(Violation(step_index, None, "well-formed", str(violation)))


def _check_indices(step: ProofStep, size: int, removable: int, step_index: int) -> None:
    for i in sorted(step.strict):
        if i >= size:
            raise ProofStepError(
                Violation(step_index, i, "index-in-range", f"only {size} rules in this step")
            )
        if i >= removable:
            raise ProofStepError(
                Violation(step_index, i, "removable", "only pairs can be removed by a reduction pair")
            )


def _check_orientations(step: ProofStep, obligations: Tuple[Rule, ...], step_index: int) -> None:
    for i, rule in enumerate(obligations):
        try:
            report = orient_report(step.interpretation, rule)
        except InterpretationError as e:
            raise ProofStepError(Violation(step_index, i, "interpretation-shape", str(e)))
        logger.debug(f"step {step_index} rule {i}: {rule}: {report.render()}")
        if i in step.strict and report.orientation is not Orientation.STRICT:
            raise ProofStepError(
                Violation(
                    step_index, i, "strict-orientation", str(rule), report.lhs_text, report.rhs_text
                )
            )
        if report.orientation is Orientation.NONE:
            raise ProofStepError(
                Violation(
                    step_index, i, "weak-orientation", str(rule), report.lhs_text, report.rhs_text
                )
            )


def check_rule_removal(step: ProofStep, trs: Trs, step_index: int = 0) -> Trs:
    """
    Validate a rule-removal step and return the remaining TRS.

    Raises ProofStepError naming the failed condition.
    """
    interp = step.interpretation
    if interp.regime is not Regime.PLAIN or not interp.monotone_claimed:
        raise ProofStepError(
            Violation(
                step_index,
                None,
                "monotone-reduction-pair",
                f"rule removal needs a plain interpretation claiming monotonicity, "
                f"got regime {interp.regime.value} with monotone={interp.monotone_claimed}",
            )
        )
    _check_well_formed(step, trs.rules, step_index)
    _check_indices(step, len(trs), len(trs), step_index)
    _check_orientations(step, trs.rules, step_index)
    return trs.without(step.strict)


def check_pair_removal(
    step: ProofStep,
    pairs: Tuple[Rule, ...],
    rules: Tuple[Rule, ...],
    step_index: int = 0,
) -> Tuple[Tuple[Rule, ...], Tuple[Rule, ...]]:
    """
    Validate a pair-removal step on an ordering problem.

    Returns the remaining (pairs, rules). Raises ProofStepError.
    """
    obligations = tuple(pairs) + tuple(rules)
    _check_well_formed(step, obligations, step_index)
    _check_indices(step, len(obligations), len(pairs), step_index)
    _check_orientations(step, obligations, step_index)
    kept = tuple(p for i, p in enumerate(pairs) if i not in step.strict)
    return kept, tuple(rules)


def remove_claimed(problem: Problem, step: ProofStep) -> Problem:
    """Drop the claimed rules without checking anything."""
    if isinstance(problem, TermProblem):
        return TermProblem(problem.trs.without(step.strict))
    kept = tuple(p for i, p in enumerate(problem.pairs) if i not in step.strict)
    return OrderedProblem(kept, problem.rules)


def obligations_of(problem: Problem) -> Tuple[Rule, ...]:
    if isinstance(problem, TermProblem):
        return problem.trs.rules
    return problem.obligations


def _admissibility_violation(problem: Problem):
    obligations = obligations_of(problem)
    try:
        check_admissible(obligations)
        signature_of(obligations)
    except InadmissibleRuleError as e:
        return Violation(None, e.index, "admissible", e.reason, str(e.rule.lhs), str(e.rule.rhs))
    except ArityConflictError as e:
        return Violation(None, None, "arity-consistent", str(e))
    return None


def check_certificate(cert: Certificate) -> Verdict:
    """Fold the certificate's steps over its problem and decide it."""
    violation = _admissibility_violation(cert.problem)
    if violation is not None:
        logger.info(f"Rejected: inadmissible input ({violation.detail})")
        return Verdict.rejected(violation)

    problem = cert.problem
    warnings = []
    for k, step in enumerate(cert.steps):
        if isinstance(step, UnsupportedStep):
            logger.info(f"Unsupported feature at step {k}: {step.feature}")
            return Verdict.unsupported(step.feature, warnings)

        before = len(obligations_of(problem))
        try:
            if isinstance(problem, TermProblem):
                problem = TermProblem(check_rule_removal(step, problem.trs, k))
            else:
                pairs, rules = check_pair_removal(step, problem.pairs, problem.rules, k)
                problem = OrderedProblem(pairs, rules)
        except ProofStepError as e:
            logger.info(f"Rejected at step {k}: {e}")
            return Verdict.rejected(e.violation, warnings)
        except ArithmeticOverflowError as e:
            logger.info(f"Unsupported arithmetic at step {k}: {e}")
            return Verdict.unsupported(f"arithmetic beyond {WORD_BITS}-bit range: {e}", warnings)
        except ValueError as e:
            return Verdict.rejected(Violation(k, None, "interpretation-shape", str(e)), warnings)

        removed = before - len(obligations_of(problem))
        logger.debug(f"step {k} removed {removed} rules")
        if removed == 0:
            message = f"step {k} removes no rules"
            logger.warning(message)
            warnings.append(message)

    remaining = problem.trs.rules if isinstance(problem, TermProblem) else problem.pairs
    if remaining:
        listed = "; ".join(str(r) for r in remaining)
        logger.info(f"Rejected: {len(remaining)} rules remain")
        return Verdict.rejected(
            Violation(len(cert.steps), None, "residual-empty", f"remaining: {listed}"), warnings
        )

    logger.info("Certified")
    return Verdict.certified(warnings)
