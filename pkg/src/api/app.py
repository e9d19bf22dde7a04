"""
FastAPI application for termination certificate checking.

Endpoints:
- GET /health: Health check
- GET /: API info
- POST /certify: Check a certificate against a TRS
- POST /orient: Per-rule comparison report for one step
- GET /metrics: Prometheus metrics
"""

import sys
import time
import logging
from datetime import datetime
from pathlib import Path
from typing import List, Optional

from fastapi import FastAPI, HTTPException, Request
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel, Field
from prometheus_client import Counter, Histogram, generate_latest, CONTENT_TYPE_LATEST
from starlette.responses import Response

# Add project root to path for imports
project_root = Path(__file__).parent.parent.parent
sys.path.insert(0, str(project_root))

from src.algebra import WORD_BITS, ArithmeticOverflowError  # noqa: E402
from src.checker.certificate import Certificate, UnsupportedStep  # noqa: E402
from src.checker.checker import check_certificate, obligations_of, remove_claimed  # noqa: E402
from src.config import configure_logging, load_config  # noqa: E402
from src.frontend.cert_io import CertificateSchemaError, parse_cert  # noqa: E402
from src.frontend.trs_parser import TrsParseError, parse_trs  # noqa: E402
from src.interp.interpretation import InterpretationError, orient_report  # noqa: E402

config = load_config()
configure_logging(config)
logger = logging.getLogger(__name__)

# Prometheus metrics
CERTIFICATES_TOTAL = Counter(
    "certificates_total", "Total number of checked certificates", ["verdict"]
)
CERTIFICATION_LATENCY = Histogram(
    "certification_latency_seconds", "Certificate checking latency in seconds"
)
REQUEST_COUNT = Counter(
    "request_count_total", "Total request count", ["method", "endpoint", "status"]
)

VERSION = "1.0.0"

app = FastAPI(
    title="Termination Certificate API",
    description="Checks termination certificates for term rewrite systems",
    version=VERSION,
    docs_url="/docs",
    redoc_url="/redoc",
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


class CertifyRequest(BaseModel):
    """A TRS file and a certificate, both as text."""

    trs: str = Field(..., description="TRS in (VAR ...) (RULES ...) syntax")
    certificate: str = Field(..., description="Certificate JSON document")

    class Config:
        json_schema_extra = {
            "example": {
                "trs": "(VAR x) (RULES f(f(x)) -> f(x))",
                "certificate": '{"problem": "term", "steps": [{"regime": "plain", "carrier": "nat", '
                '"monotone": true, "interpretation": {"f": ["1", "1"]}, "strict": [0]}]}',
            }
        }


class OrientRequest(CertifyRequest):
    step: int = Field(0, ge=0, description="Step index")


class CertifyResponse(BaseModel):
    verdict: str = Field(..., description="CERTIFIED, REJECTED or UNSUPPORTED")
    report: List[str] = Field(default_factory=list, description="Violation or unsupported-feature lines")
    warnings: List[str] = Field(default_factory=list)
    timestamp: str


class RuleComparison(BaseModel):
    index: int
    rule: str
    claimed_strict: bool
    lhs: Optional[str] = None
    rhs: Optional[str] = None
    orientation: Optional[str] = None
    error: Optional[str] = None


class OrientResponse(BaseModel):
    step: int
    regime: str
    carrier: str
    rules: List[RuleComparison]


class HealthResponse(BaseModel):
    status: str
    version: str
    timestamp: str


def _parse(request: CertifyRequest) -> Certificate:
    try:
        trs = parse_trs(request.trs)
        default_sd = config.get("checker", {}).get("default_sd", 1)
        return parse_cert(request.certificate, trs, default_sd=default_sd)
    except TrsParseError as e:
        raise HTTPException(status_code=422, detail=f"trs: {e}")
    except CertificateSchemaError as e:
        raise HTTPException(status_code=422, detail=f"certificate: {e}")


@app.middleware("http")
async def log_requests(request: Request, call_next):
    """Middleware to log all requests."""
    start_time = time.time()

    response = await call_next(request)

    process_time = time.time() - start_time
    logger.info(
        f"{request.method} {request.url.path} "
        f"status={response.status_code} "
        f"duration={process_time:.3f}s"
    )
    REQUEST_COUNT.labels(
        method=request.method, endpoint=request.url.path, status=response.status_code
    ).inc()

    return response


@app.get("/", tags=["Info"])
async def root():
    """API information endpoint."""
    return {
        "name": "Termination Certificate API",
        "version": VERSION,
        "description": "Check termination certificates for term rewrite systems",
        "endpoints": {
            "/health": "Health check",
            "/certify": "Check a certificate (POST)",
            "/orient": "Per-rule comparison report (POST)",
            "/docs": "API documentation",
            "/metrics": "Prometheus metrics",
        },
    }


@app.get("/health", response_model=HealthResponse, tags=["Health"])
async def health_check():
    """Health check endpoint."""
    return HealthResponse(status="healthy", version=VERSION, timestamp=datetime.utcnow().isoformat())


@app.post("/certify", response_model=CertifyResponse, tags=["Certification"])
async def certify(request: CertifyRequest):
    """
    Check a certificate.

    Malformed input is answered with 422; every verdict, including
    REJECTED and UNSUPPORTED, is a 200 response.
    """
    cert = _parse(request)

    start_time = time.time()
    verdict = check_certificate(cert)
    latency = time.time() - start_time
    CERTIFICATION_LATENCY.observe(latency)
    CERTIFICATES_TOTAL.labels(verdict=verdict.status.value).inc()
    logger.info(f"Verdict: {verdict.status.value} (latency: {latency:.3f}s)")

    report = verdict.render().splitlines()[1:]
    report = [line.strip() for line in report if not line.strip().startswith("warning:")]
    return CertifyResponse(
        verdict=verdict.status.value,
        report=report,
        warnings=list(verdict.warnings),
        timestamp=datetime.utcnow().isoformat(),
    )


@app.post("/orient", response_model=OrientResponse, tags=["Certification"])
async def orient(request: OrientRequest):
    """Compare both sides of every rule under the interpretation of one step."""
    cert = _parse(request)
    if request.step >= len(cert.steps):
        raise HTTPException(
            status_code=422,
            detail=f"step {request.step} out of range, certificate has {len(cert.steps)} steps",
        )

    problem = cert.problem
    for step in cert.steps[: request.step + 1]:
        if isinstance(step, UnsupportedStep):
            raise HTTPException(status_code=422, detail=f"unsupported feature: {step.feature}")
    for step in cert.steps[: request.step]:
        problem = remove_claimed(problem, step)

    step = cert.steps[request.step]
    comparisons = []
    for i, rule in enumerate(obligations_of(problem)):
        entry = RuleComparison(index=i, rule=str(rule), claimed_strict=i in step.strict)
        try:
            report = orient_report(step.interpretation, rule)
            entry.lhs = report.lhs_text
            entry.rhs = report.rhs_text
            entry.orientation = report.orientation.value
        except ArithmeticOverflowError as e:
            entry.error = f"unsupported: arithmetic beyond {WORD_BITS}-bit range: {e}"
        except (InterpretationError, ValueError) as e:
            entry.error = str(e)
        comparisons.append(entry)

    return OrientResponse(
        step=request.step,
        regime=step.interpretation.regime.value,
        carrier=str(step.interpretation.carrier),
        rules=comparisons,
    )


@app.get("/metrics", tags=["Monitoring"])
async def metrics():
    """Prometheus metrics endpoint."""
    return Response(content=generate_latest(), media_type=CONTENT_TYPE_LATEST)


if __name__ == "__main__":
    import uvicorn

    api = config.get("api", {})
    uvicorn.run(app, host=api.get("host", "0.0.0.0"), port=api.get("port", 8000))
