# Linear interpretations over ordered semirings
from src.interp.polynomials import (  # noqa: F401
    EvaluationError,
    LinearPoly,
    poly_ge,
    poly_gt,
    render_poly,
)
from src.interp.interpretation import (  # noqa: F401
    Interpretation,
    InterpretationError,
    Orientation,
    OrientationReport,
    Regime,
    WellFormednessViolation,
    approx_left,
    approx_right,
    check_well_formed,
    eval_max,
    eval_term,
    orient,
    orient_report,
    symbolic_eval,
)
