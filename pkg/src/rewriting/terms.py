"""
First-order terms, rewrite rules and term rewrite systems.

This module provides:
- Var / Fun terms and Rule / Trs containers
- substitution, matching and positions
- the one-step rewrite relation (all successors of a term)
- the admissibility check applied before certificates are checked
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Iterator, Mapping, Optional, Tuple, Union


class ArityConflictError(ValueError):
    """A function symbol occurs with two different arities."""


class InadmissibleRuleError(ValueError):
    """A rule has a variable left-hand side or introduces fresh variables."""

    def __init__(self, index: int, rule: "Rule", reason: str):
        self.index = index
        self.rule = rule
        self.reason = reason
        super().__init__(f"rule {index} ({rule}): {reason}")


@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Fun:
    symbol: str
    args: Tuple["Term", ...] = ()

    def __str__(self) -> str:
        if not self.args:
            return self.symbol
        return f"{self.symbol}({', '.join(str(a) for a in self.args)})"


Term = Union[Var, Fun]
Substitution = Mapping[str, Term]
Position = Tuple[int, ...]


@dataclass(frozen=True)
class Rule:
    lhs: Term
    rhs: Term

    def __str__(self) -> str:
        return f"{self.lhs} -> {self.rhs}"


def term_variables(t: Term) -> FrozenSet[str]:
    """Names of all variables occurring in t."""
    if isinstance(t, Var):
        return frozenset((t.name,))
    result: FrozenSet[str] = frozenset()
    for arg in t.args:
        result |= term_variables(arg)
    return result


def collect_symbols(t: Term, signature: Dict[str, int]) -> Dict[str, int]:
    """Add the symbols of t to signature, checking arity consistency."""
    if isinstance(t, Fun):
        arity = signature.setdefault(t.symbol, len(t.args))
        if arity != len(t.args):
            raise ArityConflictError(
                f"symbol '{t.symbol}' used with arity {len(t.args)} and {arity}"
            )
        for arg in t.args:
            collect_symbols(arg, signature)
    return signature


def signature_of(rules: Iterable[Rule]) -> Dict[str, int]:
    """Map every function symbol of the rules to its arity."""
    signature: Dict[str, int] = {}
    for rule in rules:
        collect_symbols(rule.lhs, signature)
        collect_symbols(rule.rhs, signature)
    return signature


@dataclass(frozen=True)
class Trs:
    """
    A term rewrite system.

    `variables` records the variable names declared by the source file, so
    that further rules (e.g. ordering-problem pairs) can be read with the
    same declarations.
    """

    rules: Tuple[Rule, ...] = ()
    variables: FrozenSet[str] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "rules", tuple(self.rules))
        object.__setattr__(self, "variables", frozenset(self.variables))
        signature_of(self.rules)

    @property
    def signature(self) -> Dict[str, int]:
        return signature_of(self.rules)

    def without(self, indices: Iterable[int]) -> "Trs":
        """The rules whose index is not in `indices`, in order."""
        drop = set(indices)
        kept = tuple(r for i, r in enumerate(self.rules) if i not in drop)
        return Trs(kept, self.variables)

    def __len__(self) -> int:
        return len(self.rules)


def check_admissible(rules: Iterable[Rule]) -> None:
    """Raise InadmissibleRuleError for the first rule with lhs in V or Var(rhs) not in Var(lhs)."""
    for index, rule in enumerate(rules):
        if isinstance(rule.lhs, Var):
            raise InadmissibleRuleError(index, rule, "left-hand side is a variable")
        fresh = term_variables(rule.rhs) - term_variables(rule.lhs)
        if fresh:
            raise InadmissibleRuleError(
                index, rule, f"right-hand side introduces {', '.join(sorted(fresh))}"
            )


def apply_subst(t: Term, sigma: Substitution) -> Term:
    """Replace variables homomorphically; unmapped variables stay."""
    if isinstance(t, Var):
        return sigma.get(t.name, t)
    return Fun(t.symbol, tuple(apply_subst(a, sigma) for a in t.args))


def match(pattern: Term, t: Term, sigma: Optional[Dict[str, Term]] = None) -> Optional[Dict[str, Term]]:
    """Most general matcher: sigma with pattern sigma == t, or None."""
    sigma = {} if sigma is None else sigma
    if isinstance(pattern, Var):
        bound = sigma.get(pattern.name)
        if bound is None:
            sigma[pattern.name] = t
            return sigma
        return sigma if bound == t else None
    if not isinstance(t, Fun) or t.symbol != pattern.symbol or len(t.args) != len(pattern.args):
        return None
    for p_arg, t_arg in zip(pattern.args, t.args):
        if match(p_arg, t_arg, sigma) is None:
            return None
    return sigma


def positions(t: Term, prefix: Position = ()) -> Iterator[Tuple[Position, Term]]:
    """All (position, subterm) pairs of t, pre-order."""
    yield prefix, t
    if isinstance(t, Fun):
        for i, arg in enumerate(t.args):
            yield from positions(arg, prefix + (i,))


def replace_at(t: Term, pos: Position, s: Term) -> Term:
    if not pos:
        return s
    assert isinstance(t, Fun)
    i = pos[0]
    args = t.args[:i] + (replace_at(t.args[i], pos[1:], s),) + t.args[i + 1 :]
    return Fun(t.symbol, args)


def successors(trs: Trs, s: Term) -> FrozenSet[Term]:
    """All t with s ->_R t in one step."""
    result = set()
    for pos, sub in positions(s):
        if isinstance(sub, Var):
            continue
        for rule in trs.rules:
            sigma = match(rule.lhs, sub)
            if sigma is not None:
                result.add(replace_at(s, pos, apply_subst(rule.rhs, sigma)))
    return frozenset(result)
