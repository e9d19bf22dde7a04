# Terms, rewrite rules and bounded derivation search
from src.rewriting.terms import (  # noqa: F401
    ArityConflictError,
    Fun,
    InadmissibleRuleError,
    Rule,
    Term,
    Trs,
    Var,
    apply_subst,
    check_admissible,
    successors,
)
from src.rewriting.explore import (  # noqa: F401
    DerivationCheck,
    bounded_no_long_derivation,
    ground_terms,
)
