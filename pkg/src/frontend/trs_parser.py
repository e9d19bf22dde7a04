"""
Reader and writer for TRS files in a subset of the old TPDB format.

    (VAR x y)
    (RULES
      plus(0, y) -> y
      plus(s(x), y) -> s(plus(x, y))
    )

Parsing is strict: a (VAR ...) block is mandatory, identifiers not declared
there are function symbols, and blocks other than VAR and RULES are errors.
"""

from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Tuple

from pyparsing import (
    DelimitedList,
    Forward,
    Group,
    Keyword,
    Optional as Opt,
    ParseBaseException,
    ParseFatalException,
    StringEnd,
    Suppress,
    Word,
    ZeroOrMore,
    alphanums,
    col,
    lineno,
)

from src.rewriting.terms import Fun, Rule, Term, Trs, Var


class TrsParseError(ValueError):
    """Syntax or declaration error with its position in the input."""

    def __init__(self, message: str, line: int, column: int):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


@dataclass(frozen=True)
class _RawTerm:
    name: str
    args: Optional[Tuple["_RawTerm", ...]]
    loc: int


@dataclass(frozen=True)
class _RawRule:
    lhs: _RawTerm
    rhs: _RawTerm


@dataclass(frozen=True)
class _Block:
    kind: str
    items: tuple


def _make_term(s, loc, toks):
    args = tuple(toks[1]) if len(toks) > 1 else None
    return _RawTerm(toks[0], args, loc)


def _unknown_block(s, loc, toks):
    raise ParseFatalException(s, loc, f"unsupported block '{toks[0]}'")


def _build_grammar():
    """Build the pyparsing grammar for TRS files and single rules."""
    LPAR, RPAR, COMMA = map(Suppress, "(),")
    ARROW = Suppress("->")

    identifier = Word(alphanums + "_#'")
    term = Forward()
    arguments = Group(LPAR + Opt(DelimitedList(term)) + RPAR)
    term <<= (identifier + Opt(arguments)).set_parse_action(_make_term)

    rule = (term + ARROW + term).set_parse_action(lambda t: _RawRule(t[0], t[1]))

    var_block = (LPAR + Suppress(Keyword("VAR")) - (ZeroOrMore(identifier) + RPAR)).set_parse_action(
        lambda t: _Block("VAR", tuple(t))
    )
    rules_block = (
        LPAR + Suppress(Keyword("RULES")) - (ZeroOrMore(rule + Opt(COMMA)) + RPAR)
    ).set_parse_action(lambda t: _Block("RULES", tuple(t)))
    unknown_block = (LPAR + ~(Keyword("VAR") | Keyword("RULES")) + identifier).set_parse_action(
        _unknown_block
    )

    trs_file = ZeroOrMore(var_block | rules_block | unknown_block) + StringEnd()
    single_rule = rule + StringEnd()
    return trs_file, single_rule


_TRS_FILE, _SINGLE_RULE = _build_grammar()


class _TermBuilder:
    """Turns raw parse trees into terms, checking declarations and arities."""

    def __init__(self, text: str, variables: Iterable[str]):
        self.text = text
        self.variables = frozenset(variables)
        self.signature: Dict[str, int] = {}

    def error(self, message: str, loc: int) -> TrsParseError:
        return TrsParseError(message, lineno(loc, self.text), col(loc, self.text))

    def build(self, raw: _RawTerm) -> Term:
        if raw.name in self.variables:
            if raw.args is not None:
                raise self.error(f"variable '{raw.name}' applied to arguments", raw.loc)
            return Var(raw.name)
        args = raw.args or ()
        arity = self.signature.setdefault(raw.name, len(args))
        if arity != len(args):
            raise self.error(
                f"symbol '{raw.name}' used with arity {len(args)}, earlier with arity {arity}",
                raw.loc,
            )
        return Fun(raw.name, tuple(self.build(a) for a in args))

    def rule(self, raw: _RawRule) -> Rule:
        return Rule(self.build(raw.lhs), self.build(raw.rhs))


def _parse(grammar, text: str):
    try:
        return grammar.parse_string(text, parse_all=True)
    except ParseBaseException as e:
        raise TrsParseError(e.msg, e.lineno, e.col) from e


def parse_trs(text: str) -> Trs:
    """
    Parse a TRS file.

    Raises TrsParseError for syntax errors, unsupported blocks, a missing
    VAR or RULES block, misuse of variables, and arity conflicts.
    """
    blocks: List[_Block] = list(_parse(_TRS_FILE, text))
    if not any(b.kind == "VAR" for b in blocks):
        raise TrsParseError("missing (VAR ...) block", 1, 1)
    if not any(b.kind == "RULES" for b in blocks):
        raise TrsParseError("missing (RULES ...) block", 1, 1)

    variables = [x for b in blocks if b.kind == "VAR" for x in b.items]
    builder = _TermBuilder(text, variables)
    rules = [builder.rule(raw) for b in blocks if b.kind == "RULES" for raw in b.items]
    return Trs(tuple(rules), frozenset(variables))


def parse_rule(text: str, variables: Iterable[str]) -> Rule:
    """Parse a single "lhs -> rhs" with the given declared variables."""
    raw = _parse(_SINGLE_RULE, text)[0]
    return _TermBuilder(text, variables).rule(raw)


def render_trs(trs: Trs) -> str:
    names = " ".join(sorted(trs.variables))
    lines = [f"(VAR {names})" if names else "(VAR)", "(RULES"]
    lines += [f"  {rule}" for rule in trs.rules]
    lines.append(")")
    return "\n".join(lines) + "\n"
