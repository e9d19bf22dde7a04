"""
Unit and property tests for interpretations, approximations and orientation.
"""

from fractions import Fraction
from pathlib import Path
import sys

import pytest
from hypothesis import given, settings, strategies as st

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.algebra import CarrierSpec, Kind, MatrixSpec  # noqa: E402
from src.interp.interpretation import (  # noqa: E402
    Interpretation,
    InterpretationError,
    Orientation,
    Regime,
    approx_left,
    approx_right,
    check_well_formed,
    eval_max,
    eval_term,
    orient,
    orient_report,
    symbolic_eval,
)
from src.interp.polynomials import (  # noqa: E402
    EvaluationError,
    LinearPoly,
    poly_ge,
    poly_gt,
    render_poly,
)
from src.rewriting.terms import Fun, Rule, Var, apply_subst  # noqa: E402
from tests.strategies import (  # noqa: E402
    ARCTIC_INT,
    ARCTIC_NAT,
    INT,
    NAT,
    RAT_THIRD,
    assignments,
    ground_substitutions,
    interpretations,
    terms,
)

x = Var("x")
RAT_HALF = CarrierSpec(Kind.RAT, Fraction(1, 2))
INT_MATRIX = MatrixSpec(INT, 2, 1)
NAT_MATRIX = MatrixSpec(NAT, 2, 1)
ARCTIC_MATRIX = MatrixSpec(ARCTIC_NAT, 2)


def fun(symbol, *args):
    return Fun(symbol, args)


def poly(carrier, constant, **coeffs):
    return LinearPoly.make(
        carrier, carrier.value(constant), {v: carrier.value(c) for v, c in coeffs.items()}
    )


@pytest.fixture
def half_interpretation():
    """[half](x) = 1/2 x + 1/2, [p](x) = x - 1, [s](x) = x + 1 over rationals with delta 1/2."""
    return Interpretation(
        RAT_HALF,
        Regime.NEGCONST,
        {"half": ("1/2", "1/2"), "p": ("-1", "1"), "s": ("1", "1")},
    )


@pytest.fixture
def half_rule():
    return Rule(fun("s", x), fun("p", fun("half", fun("s", fun("s", x)))))


class TestWellFormedness:
    """Tests for the regime side conditions."""

    def test_negconst_matrix_example(self):
        """Test that negative constants are allowed when argument coefficients are >= 0."""
        spec = MatrixSpec(RAT_HALF, 2, 2)
        interp = Interpretation(
            spec,
            Regime.NEGCONST,
            {"f": ([["-1/3", 3], [-5, "2/9"]], [["1/2", 8], ["7/5", 0]], "1")},
        )
        assert check_well_formed(interp, {"f": 2}) is None

    def test_plain_monotone(self):
        """Test that x + 1 is a monotone plain interpretation."""
        interp = Interpretation(NAT, Regime.PLAIN, {"s": (1, 1)}, monotone_claimed=True)
        assert check_well_formed(interp, {"s": 1}) is None

    def test_plain_not_mono(self):
        """Test that a zero argument coefficient breaks a monotonicity claim."""
        interp = Interpretation(NAT, Regime.PLAIN, {"f": (1, 0)}, monotone_claimed=True)
        violation = check_well_formed(interp, {"f": 1})
        assert violation.symbol == "f"
        assert violation.index == 1

    def test_plain_negative_coefficient(self):
        """Test that plain interpretations need non-negative coefficients."""
        interp = Interpretation(INT, Regime.PLAIN, {"p": (-1, 1)})
        assert check_well_formed(interp, {"p": 1}).index == 0

    def test_negconst_negative_argument(self):
        """Test that negconst argument coefficients must be >= 0."""
        interp = Interpretation(INT, Regime.NEGCONST, {"p": (0, -1)})
        assert check_well_formed(interp, {"p": 1}).index == 1

    def test_arctic_without_pos(self):
        """Test that an arctic symbol needs some pos coefficient."""
        interp = Interpretation(ARCTIC_NAT, Regime.ARCTIC, {"f": ("-inf", "-inf")})
        violation = check_well_formed(interp, {"f": 1})
        assert violation.symbol == "f"
        assert violation.index is None

    def test_arctic_pos_below_zero_constant(self):
        """Test that the pos coefficient need not be the constant."""
        interp = Interpretation(ARCTIC_INT, Regime.ARCTIC, {"g": (-3, 1)})
        assert check_well_formed(interp, {"g": 1}) is None

    def test_monotone_claim_outside_plain(self):
        """Test that only plain interpretations may claim monotonicity."""
        interp = Interpretation(ARCTIC_NAT, Regime.ARCTIC, {"f": (0, 0)}, monotone_claimed=True)
        assert check_well_formed(interp, {"f": 1}) is not None

    def test_missing_symbol(self):
        """Test that uninterpreted symbols raise InterpretationError."""
        interp = Interpretation(NAT, Regime.PLAIN, {"f": (0, 1)})
        with pytest.raises(InterpretationError):
            check_well_formed(interp, {"g": 1})

    def test_wrong_arity(self):
        """Test that coefficient counts must match the arity."""
        interp = Interpretation(NAT, Regime.PLAIN, {"f": (0, 1)})
        with pytest.raises(InterpretationError):
            check_well_formed(interp, {"f": 2})

    @pytest.mark.parametrize(
        "carrier,regime",
        [(NAT, Regime.ARCTIC), (ARCTIC_NAT, Regime.PLAIN), (ARCTIC_INT, Regime.NEGCONST)],
    )
    def test_regime_carrier_mismatch(self, carrier, regime):
        """Test that regimes are tied to their carriers."""
        with pytest.raises(InterpretationError):
            Interpretation(carrier, regime, {})

    def test_coefficient_outside_carrier(self):
        """Test that coefficients are coerced into the carrier."""
        with pytest.raises(InterpretationError):
            Interpretation(NAT, Regime.PLAIN, {"f": ("-1", "1")})


class TestSymbolicEvaluation:
    """Tests for symbolic_eval and eval_term."""

    def test_composition(self):
        """Test [s(s(x))] = x + 2."""
        interp = Interpretation(NAT, Regime.PLAIN, {"s": (1, 1)})
        assert symbolic_eval(interp, fun("s", fun("s", x))) == poly(NAT, 2, x=1)

    def test_arctic_composition(self):
        """Test [f(f(x))] = max(x + 4, 2) for [f](x) = max(x + 2, 0)."""
        interp = Interpretation(ARCTIC_NAT, Regime.ARCTIC, {"f": (0, 2)})
        assert symbolic_eval(interp, fun("f", fun("f", x))) == poly(ARCTIC_NAT, 2, x=4)

    def test_variable(self):
        """Test that a variable evaluates to itself."""
        interp = Interpretation(ARCTIC_NAT, Regime.ARCTIC, {})
        assert symbolic_eval(interp, x) == LinearPoly.variable(ARCTIC_NAT, "x")

    def test_refuses_negconst(self, half_interpretation):
        """Test that negconst terms go through the approximations."""
        with pytest.raises(InterpretationError):
            symbolic_eval(half_interpretation, x)

    def test_eval_term(self):
        """Test direct evaluation."""
        interp = Interpretation(NAT, Regime.PLAIN, {"f": (1, 2, 3)})
        value = eval_term(interp, fun("f", x, x), {"x": NAT.value(2)})
        assert value == NAT.value(11)

    def test_eval_term_missing_variable(self):
        """Test that uncovered variables raise EvaluationError."""
        interp = Interpretation(NAT, Regime.PLAIN, {"f": (1, 1)})
        with pytest.raises(EvaluationError):
            eval_term(interp, fun("f", x), {})


class TestMaxEvaluation:
    """Tests for the max-wrapped semantics."""

    def test_cut_at_zero(self):
        """Test max0(x - 1) at x = 0."""
        interp = Interpretation(INT, Regime.NEGCONST, {"p": (-1, 1)})
        assert eval_max(interp, fun("p", x), {"x": INT.value(0)}) == INT.value(0)

    def test_half_example(self, half_interpretation):
        """Test [half(s(s(x)))] at x = 1."""
        term = fun("half", fun("s", fun("s", x)))
        assert eval_max(half_interpretation, term, {"x": RAT_HALF.value(1)}) == RAT_HALF.value(2)

    def test_variable(self):
        interp = Interpretation(INT, Regime.NEGCONST, {})
        assert eval_max(interp, x, {"x": INT.value(7)}) == INT.value(7)

    def test_negative_assignment(self):
        """Test that assignments must be >= 0."""
        interp = Interpretation(INT, Regime.NEGCONST, {})
        with pytest.raises(EvaluationError):
            eval_max(interp, x, {"x": INT.value(-1)})


class TestApproximations:
    """Tests for the left and right approximations."""

    def test_left_of_successor(self, half_interpretation):
        """Test that the left approximation of s(x) is x + 1."""
        assert approx_left(half_interpretation, fun("s", x)) == poly(RAT_HALF, 1, x=1)

    def test_right_of_nested_term(self, half_interpretation, half_rule):
        """Test that the right approximation of p(half(s(s(x)))) is 1/2 x + 1/2."""
        expected = poly(RAT_HALF, "1/2", x="1/2")
        assert approx_right(half_interpretation, half_rule.rhs) == expected

    def test_negative_constant_symbol(self):
        """Test that a negative constant is cut to zero on both sides."""
        interp = Interpretation(INT, Regime.NEGCONST, {"c": (-5,)})
        assert approx_left(interp, fun("c")) == poly(INT, 0)
        assert approx_right(interp, fun("c")) == poly(INT, 0)

    def test_left_keeps_non_constant_part(self):
        """Test that the left approximation only cuts constant results."""
        interp = Interpretation(INT, Regime.NEGCONST, {"p": (-1, 1)})
        assert approx_left(interp, fun("p", x)) == poly(INT, -1, x=1)
        assert approx_right(interp, fun("p", x)) == poly(INT, 0, x=1)

    def test_requires_well_formed(self):
        """Test that approximations refuse negative argument coefficients."""
        interp = Interpretation(INT, Regime.NEGCONST, {"p": (0, -1)})
        with pytest.raises(InterpretationError):
            approx_left(interp, fun("p", x))

    def test_requires_negconst(self):
        interp = Interpretation(NAT, Regime.PLAIN, {"s": (1, 1)})
        with pytest.raises(InterpretationError):
            approx_right(interp, fun("s", x))


class TestPolynomialOrders:
    """Tests for poly_gt / poly_ge."""

    def test_rational_strict(self):
        """Test x + 1 > 1/2 x + 1/2 with delta 1/2."""
        assert poly_gt(RAT_HALF, poly(RAT_HALF, 1, x=1), poly(RAT_HALF, "1/2", x="1/2"))

    def test_arctic(self):
        """Test component-wise strict comparison with -inf constants."""
        assert poly_gt(ARCTIC_NAT, poly(ARCTIC_NAT, 3, x=2), poly(ARCTIC_NAT, 0, x=1))
        assert not poly_gt(ARCTIC_NAT, poly(ARCTIC_NAT, "-inf", x=2), poly(ARCTIC_NAT, 0, x=1))

    def test_missing_variables_are_zero(self):
        """Test that absent coefficients count as zero."""
        assert poly_ge(NAT, poly(NAT, 1, x=1), poly(NAT, 1))
        assert not poly_ge(NAT, poly(NAT, 1), poly(NAT, 0, y=1))

    def test_reflexive(self):
        p = poly(INT, -2, x=3, y=1)
        assert poly_ge(INT, p, p)
        assert not poly_gt(INT, p, p)

    def test_render(self):
        """Test rendering of ordinary and arctic polynomials."""
        assert render_poly(RAT_HALF, poly(RAT_HALF, "1/2", x="1/2")) == "1/2*x + 1/2"
        assert render_poly(INT, poly(INT, -1, x=1)) == "x - 1"
        assert render_poly(INT, poly(INT, 0)) == "0"
        assert render_poly(ARCTIC_NAT, poly(ARCTIC_NAT, "-inf", x=2)) == "max(x + 2, -inf)"
        assert render_poly(ARCTIC_NAT, poly(ARCTIC_NAT, 3)) == "3"


class TestOrientation:
    """Tests for orient and orient_report."""

    def test_half_rule_is_strict(self, half_interpretation, half_rule):
        """Test the strict decrease of s(x) -> p(half(s(s(x))))."""
        assert orient(half_interpretation, half_rule) is Orientation.STRICT

    def test_half_rule_report(self, half_interpretation, half_rule):
        """Test the rendered comparison."""
        report = orient_report(half_interpretation, half_rule)
        assert report.render() == "x + 1  >  1/2*x + 1/2  [Strict]"

    def test_equal_sides_are_weak(self):
        """Test that f(x) -> f(x) is weak, never strict."""
        interp = Interpretation(NAT, Regime.PLAIN, {"f": (1, 1)})
        assert orient(interp, Rule(fun("f", x), fun("f", x))) is Orientation.WEAK

    def test_unorientable(self):
        """Test that [a] = 0, [b] = 1 does not orient a -> b."""
        interp = Interpretation(NAT, Regime.PLAIN, {"a": (0,), "b": (1,)})
        report = orient_report(interp, Rule(fun("a"), fun("b")))
        assert report.orientation is Orientation.NONE
        assert report.render() == "0  ?  1  [None]"

    def test_symmetric_arctic_is_weak(self):
        """Test that swapping arguments under a symmetric arctic form is weak."""
        interp = Interpretation(ARCTIC_NAT, Regime.ARCTIC, {"f": (0, 0, 0)})
        rule = Rule(fun("f", x, Var("y")), fun("f", Var("y"), x))
        assert orient(interp, rule) is Orientation.WEAK

    def test_erased_variable(self):
        """Test that variables missing on one side are compared against zero."""
        interp = Interpretation(NAT, Regime.PLAIN, {"f": (1, 1, 0)})
        rule = Rule(fun("f", x, Var("y")), x)
        assert orient(interp, rule) is Orientation.STRICT


def _rule(data):
    lhs = data.draw(terms().filter(lambda t: isinstance(t, Fun)))
    subterms = [lhs] + list(lhs.args)
    rhs = data.draw(st.one_of(st.sampled_from(subterms), terms()))
    return Rule(lhs, rhs)


def _semantics(interp, t, alpha):
    if interp.regime is Regime.NEGCONST:
        return eval_max(interp, t, alpha)
    return eval_term(interp, t, alpha)


SANDWICH_CARRIERS = [INT, RAT_THIRD, INT_MATRIX]

ORIENTATION_CASES = [
    (NAT, Regime.PLAIN),
    (RAT_THIRD, Regime.PLAIN),
    (NAT_MATRIX, Regime.PLAIN),
    (INT, Regime.NEGCONST),
    (RAT_THIRD, Regime.NEGCONST),
    (INT_MATRIX, Regime.NEGCONST),
    (ARCTIC_NAT, Regime.ARCTIC),
    (ARCTIC_INT, Regime.ARCTIC),
    (ARCTIC_MATRIX, Regime.ARCTIC),
]

STABLE_CASES = [case for case in ORIENTATION_CASES if case[1] is not Regime.NEGCONST]


@pytest.mark.parametrize("carrier", SANDWICH_CARRIERS, ids=str)
class TestSandwich:
    """The approximations bound the max-wrapped semantics."""

    @settings(max_examples=200, deadline=None)
    @given(data=st.data())
    def test_left_below_right_above(self, carrier, data):
        """Test left(t)(a) <= [t](a) <= right(t)(a)."""
        interp = data.draw(interpretations(carrier, Regime.NEGCONST))
        t = data.draw(terms())
        alpha = data.draw(assignments(carrier))

        value = eval_max(interp, t, alpha)
        left = approx_left(interp, t).evaluate(carrier, alpha)
        right = approx_right(interp, t).evaluate(carrier, alpha)
        assert carrier.weak_ge(value, left)
        assert carrier.weak_ge(right, value)


@pytest.mark.parametrize("carrier,regime", ORIENTATION_CASES, ids=str)
class TestSemanticDecrease:
    """Strict orientation implies a semantic decrease."""

    @settings(max_examples=100, deadline=None)
    @given(data=st.data())
    def test_strict_decreases(self, carrier, regime, data):
        """Test that Strict implies [l](a) > [r](a) and Weak implies [l](a) >= [r](a)."""
        interp = data.draw(interpretations(carrier, regime))
        rule = _rule(data)
        alpha = data.draw(assignments(carrier, non_negative=regime is not Regime.ARCTIC))

        orientation = orient(interp, rule)
        lhs = _semantics(interp, rule.lhs, alpha)
        rhs = _semantics(interp, rule.rhs, alpha)
        if orientation is Orientation.STRICT:
            assert carrier.strict_gt(lhs, rhs)
        if orientation is not Orientation.NONE:
            assert carrier.weak_ge(lhs, rhs)


@pytest.mark.parametrize("carrier,regime", STABLE_CASES, ids=str)
class TestStability:
    """Orientation of linear forms is closed under substitution."""

    @settings(max_examples=100, deadline=None)
    @given(data=st.data())
    def test_closed_under_substitution(self, carrier, regime, data):
        """Test that Strict stays Strict and Weak stays oriented under substitution."""
        interp = data.draw(interpretations(carrier, regime))
        rule = _rule(data)
        sigma = data.draw(ground_substitutions())

        orientation = orient(interp, rule)
        instance = Rule(apply_subst(rule.lhs, sigma), apply_subst(rule.rhs, sigma))
        if orientation is Orientation.STRICT:
            assert orient(interp, instance) is Orientation.STRICT
        elif orientation is Orientation.WEAK:
            assert orient(interp, instance) is not Orientation.NONE


@pytest.mark.parametrize("carrier", [NAT, RAT_THIRD, NAT_MATRIX], ids=str)
class TestMonotoneContexts:
    """Monotone plain interpretations orient contexts strictly."""

    @settings(max_examples=100, deadline=None)
    @given(data=st.data())
    def test_strict_in_context(self, carrier, data):
        """Test that Strict for s -> t implies Strict for C[s] -> C[t]."""
        interp = data.draw(interpretations(carrier, Regime.PLAIN, monotone=True))
        rule = _rule(data)
        other = data.draw(terms())
        holes = data.draw(st.lists(st.sampled_from(["g", "h0", "h1"]), min_size=1, max_size=2))

        def plug(t):
            for hole in holes:
                if hole == "g":
                    t = Fun("g", (t,))
                elif hole == "h0":
                    t = Fun("h", (t, other))
                else:
                    t = Fun("h", (other, t))
            return t

        if orient(interp, rule) is Orientation.STRICT:
            assert orient(interp, Rule(plug(rule.lhs), plug(rule.rhs))) is Orientation.STRICT


@pytest.mark.parametrize("carrier,regime", STABLE_CASES, ids=str)
class TestSymbolicAgreesWithEvaluation:
    """symbolic_eval agrees with direct evaluation."""

    @settings(max_examples=100, deadline=None)
    @given(data=st.data())
    def test_agreement(self, carrier, regime, data):
        interp = data.draw(interpretations(carrier, regime))
        t = data.draw(terms())
        alpha = data.draw(assignments(carrier, non_negative=regime is not Regime.ARCTIC))
        assert symbolic_eval(interp, t).evaluate(carrier, alpha) == eval_term(interp, t, alpha)

    @settings(max_examples=100, deadline=None)
    @given(data=st.data())
    def test_strict_implies_weak(self, carrier, regime, data):
        """Test that poly_gt implies poly_ge."""
        interp = data.draw(interpretations(carrier, regime))
        p = symbolic_eval(interp, data.draw(terms()))
        q = symbolic_eval(interp, data.draw(terms()))
        if poly_gt(carrier, p, q):
            assert poly_ge(carrier, p, q)
