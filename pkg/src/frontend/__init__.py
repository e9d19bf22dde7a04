# File formats, interpretation search and command-line interface
from src.frontend.trs_parser import TrsParseError, parse_rule, parse_trs, render_trs  # noqa: F401
from src.frontend.cert_io import CertificateSchemaError, parse_cert, render_cert  # noqa: F401
from src.frontend.search import (  # noqa: F401
    SearchLimitError,
    SearchOutcome,
    as_ordered,
    search_interpretation,
)
