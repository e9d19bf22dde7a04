"""
Bounded exploration of rewrite derivations.

Used as a smoke oracle for termination: breadth-first search over the
one-step rewrite relation, with a cap on depth and explored states.
"""

import itertools
import logging
from enum import Enum
from typing import Dict, FrozenSet, Iterable, List, Mapping

from src.rewriting.terms import Fun, Term, Trs, Var, successors

logger = logging.getLogger(__name__)

MAX_DEPTH = 12
MAX_STATES = 50000


class DerivationCheck(str, Enum):
    BOUNDED = "bounded"
    UNBOUNDED = "unbounded"
    INCONCLUSIVE = "inconclusive"


def ground_terms(signature: Mapping[str, int], max_size: int) -> List[Term]:
    """
    All terms over the signature with at most max_size symbols.

    Leaves are the constants of the signature; a signature without
    constants uses the single variable x instead.
    """
    constants = sorted(f for f, n in signature.items() if n == 0)
    leaves: List[Term] = [Fun(c) for c in constants] or [Var("x")]
    functions = sorted((f, n) for f, n in signature.items() if n > 0)

    by_size: Dict[int, List[Term]] = {1: leaves}
    for size in range(2, max_size + 1):
        terms: List[Term] = []
        for symbol, arity in functions:
            for split in _compositions(size - 1, arity):
                if any(part not in by_size for part in split):
                    continue
                for args in itertools.product(*(by_size[part] for part in split)):
                    terms.append(Fun(symbol, tuple(args)))
        if terms:
            by_size[size] = terms
    return [t for size in sorted(by_size) for t in by_size[size]]


def _compositions(total: int, parts: int):
    """Ordered ways to write total as a sum of `parts` positive integers."""
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def bounded_no_long_derivation(
    trs: Trs,
    seeds: Iterable[Term],
    depth: int,
    max_depth: int = MAX_DEPTH,
    max_states: int = MAX_STATES,
) -> DerivationCheck:
    """
    Check that no derivation from any seed is longer than `depth`.

    Returns BOUNDED if every derivation has at most `depth` steps,
    UNBOUNDED if some seed has a derivation of length depth + 1, and
    INCONCLUSIVE when more than `max_states` terms would be explored.
    """
    if depth > max_depth:
        raise ValueError(f"depth {depth} exceeds the configured cap {max_depth}")

    cache: Dict[Term, FrozenSet[Term]] = {}
    frontier = set(seeds)
    explored = len(frontier)

    for level in range(1, depth + 2):
        reached = set()
        for t in frontier:
            if t not in cache:
                cache[t] = successors(trs, t)
            reached |= cache[t]
        logger.debug(f"level {level}: {len(reached)} terms")
        if not reached:
            return DerivationCheck.BOUNDED
        if level == depth + 1:
            return DerivationCheck.UNBOUNDED
        explored += len(reached)
        if explored > max_states:
            logger.warning(f"Explored-state budget of {max_states} exhausted at level {level}")
            return DerivationCheck.INCONCLUSIVE
        frontier = reached

    return DerivationCheck.UNBOUNDED
