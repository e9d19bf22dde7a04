"""
Tests for the interpretation search.
"""

from pathlib import Path
import sys

import pytest

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.algebra import CarrierSpec, Kind  # noqa: E402
from src.checker.certificate import OrderedProblem, Status, TermProblem  # noqa: E402
from src.checker.checker import check_certificate  # noqa: E402
from src.frontend import SearchLimitError, as_ordered, parse_trs, search_interpretation  # noqa: E402
from src.interp.interpretation import Regime  # noqa: E402

NAT = CarrierSpec(Kind.NAT)
ARCTIC_NAT = CarrierSpec(Kind.ARCTIC_NAT)
GRID = ["0", "1", "2"]


def problem(rules, variables="x y"):
    return TermProblem(parse_trs(f"(VAR {variables})\n(RULES\n{rules}\n)"))


class TestSearchInterpretation:
    """Tests for search_interpretation."""

    def test_ffx(self):
        """Test that [f](x) = x + 1 is the first grid point removing f(f(x)) -> f(x)."""
        outcome = search_interpretation(problem("f(f(x)) -> f(x)"), Regime.PLAIN, NAT, GRID)
        assert outcome.found
        (step,) = outcome.certificate.steps
        assert step.interpretation.coefficients == {"f": (NAT.value(1), NAT.value(1))}
        assert step.strict == {0}
        assert step.interpretation.monotone_claimed

    def test_two_symbols(self):
        """Test f(x) -> g(x) with [f](x) = x + 1, [g](x) = x."""
        outcome = search_interpretation(problem("f(x) -> g(x)"), Regime.PLAIN, NAT, GRID)
        coefficients = outcome.certificate.steps[0].interpretation.coefficients
        assert coefficients == {
            "f": (NAT.value(1), NAT.value(1)),
            "g": (NAT.value(0), NAT.value(1)),
        }

    def test_plus(self):
        """Test that the addition rules are removed in two rounds."""
        rules = "plus(0, y) -> y\nplus(s(x), y) -> s(plus(x, y))"
        outcome = search_interpretation(problem(rules), Regime.PLAIN, NAT, GRID)
        assert outcome.found
        assert [set(step.strict) for step in outcome.certificate.steps] == [{1}, {0}]
        assert outcome.statistics.steps_found == 2
        assert check_certificate(outcome.certificate).status is Status.CERTIFIED

    def test_arctic_ordered(self):
        """Test a -> b as an ordering problem with arctic naturals."""
        outcome = search_interpretation(
            as_ordered(problem("a -> b", "")), Regime.ARCTIC, ARCTIC_NAT, ["-inf", "0", "1"]
        )
        assert outcome.found
        assert isinstance(outcome.certificate.problem, OrderedProblem)
        coefficients = outcome.certificate.steps[0].interpretation.coefficients
        assert coefficients == {"a": (ARCTIC_NAT.value(1),), "b": (ARCTIC_NAT.value(0),)}

    def test_not_found(self):
        """Test that a -> a has no strictly decreasing interpretation."""
        outcome = search_interpretation(problem("a -> a", ""), Regime.PLAIN, NAT, GRID)
        assert not outcome.found
        assert outcome.statistics.remaining_rules == 1
        assert outcome.statistics.candidates_tried == 3
        assert not outcome.statistics.budget_exhausted

    def test_budget(self):
        outcome = search_interpretation(
            problem("a -> a", ""), Regime.PLAIN, NAT, GRID, max_candidates=2
        )
        assert not outcome.found
        assert outcome.statistics.budget_exhausted

    def test_rule_limit(self):
        rules = "plus(0, y) -> y\nplus(s(x), y) -> s(plus(x, y))"
        with pytest.raises(SearchLimitError, match="rules"):
            search_interpretation(problem(rules), Regime.PLAIN, NAT, GRID, max_rules=1)

    def test_ordered_rule_limit_counts_distinct_rules(self):
        """Test that rules shared by P and R count once against the limit."""
        four = as_ordered(problem("f(f(x)) -> f(x)\nf(a) -> a\na -> b\nf(b) -> b"))
        outcome = search_interpretation(four, Regime.PLAIN, NAT, ["0", "1"], max_rules=4)
        assert outcome.statistics.candidates_tried > 0
        with pytest.raises(SearchLimitError, match="4 rules"):
            search_interpretation(four, Regime.PLAIN, NAT, ["0", "1"], max_rules=3)

    def test_symbol_limit(self):
        with pytest.raises(SearchLimitError, match="symbols"):
            search_interpretation(problem("f(x) -> g(x)"), Regime.PLAIN, NAT, GRID, max_symbols=1)

    def test_term_problem_needs_plain(self):
        """Test that rule removal cannot be searched with arctic interpretations."""
        with pytest.raises(ValueError, match="plain"):
            search_interpretation(problem("a -> b", ""), Regime.ARCTIC, ARCTIC_NAT, ["0", "1"])

    def test_empty_problem(self):
        """Test that nothing to remove needs no steps."""
        outcome = search_interpretation(TermProblem(parse_trs("(VAR)\n(RULES\n)")), Regime.PLAIN, NAT, GRID)
        assert outcome.found
        assert outcome.certificate.steps == ()
