# Certificate model and checker
from src.checker.certificate import (  # noqa: F401
    Certificate,
    OrderedProblem,
    ProofStep,
    ProofStepError,
    Status,
    TermProblem,
    UnsupportedStep,
    Verdict,
    Violation,
)
from src.checker.checker import (  # noqa: F401
    check_certificate,
    check_pair_removal,
    check_rule_removal,
    obligations_of,
    remove_claimed,
)
