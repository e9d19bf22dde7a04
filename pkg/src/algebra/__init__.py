# Ordered semiring carriers: scalars and matrices
from src.algebra.carriers import (  # noqa: F401
    WORD_BITS,
    ArithmeticOverflowError,
    CarrierMismatchError,
    CarrierSpec,
    Kind,
    Scalar,
    ScalarLike,
    ScalarSyntaxError,
    UnsupportedOperationError,
    parse_number,
    render_scalar,
)
from src.algebra.matrices import (  # noqa: F401
    Carrier,
    CarrierValue,
    Matrix,
    MatrixShapeError,
    MatrixSpec,
)
