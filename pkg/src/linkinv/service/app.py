"""FastAPI application wrapping the report builders.

Library errors surface as structured JSON: 422 for invalid input or
parameters, 413 when the expansion oracle would exceed its degree cap.
Integers above 2^53 are stringified, so payloads stay lossless in
JavaScript consumers.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from ..errors import DegreeCapError, LinkInvError
from ..poly import parse_polynomial
from ..report import family_payload, full_report, json_safe, oracle_report
from ..tables import verify_table
from .schemas import (
    AnalyzeRequest,
    FamilyRequest,
    OracleRequest,
    PolynomialRequest,
    VerifyTablesRequest,
)


def create_app() -> FastAPI:
    app = FastAPI(
        title="linkinv",
        summary="Exact invariants of weighted-homogeneous links.",
    )

    @app.exception_handler(LinkInvError)
    async def _linkinv_error(_: Request, exc: LinkInvError) -> JSONResponse:
        status = 413 if isinstance(exc, DegreeCapError) else 422
        return JSONResponse(
            status_code=status,
            content={"error": type(exc).__name__, "detail": str(exc)},
        )

    @app.get("/health")
    async def health() -> dict:
        return {"status": "ok"}

    @app.post("/analyze")
    async def analyze(req: AnalyzeRequest) -> JSONResponse:
        report = full_report(parse_polynomial(req.polynomial), transpose=req.transpose)
        return JSONResponse(json_safe(report))

    @app.post("/homology")
    async def homology(req: PolynomialRequest) -> JSONResponse:
        report = full_report(parse_polynomial(req.polynomial))
        keep = {k: report[k] for k in ("polynomial", "weights", "homology")}
        return JSONResponse(json_safe(keep))

    @app.post("/obstruct")
    async def obstruct(req: PolynomialRequest) -> JSONResponse:
        report = full_report(parse_polynomial(req.polynomial))
        keep = {k: report[k] for k in ("polynomial", "weights", "obstructions")}
        return JSONResponse(json_safe(keep))

    @app.post("/family")
    async def family(req: FamilyRequest) -> JSONResponse:
        payload = family_payload(
            req.selector, tuple(req.params), squares=req.squares, k_values=req.k
        )
        return JSONResponse(json_safe(payload))

    @app.post("/oracle")
    async def oracle(req: OracleRequest) -> JSONResponse:
        report = oracle_report(parse_polynomial(req.polynomial), max_degree=req.oracle_cap)
        return JSONResponse(json_safe(report))

    @app.post("/verify-tables")
    async def verify_tables(req: VerifyTablesRequest) -> JSONResponse:
        tables = [1, 2] if req.table == "all" else [int(req.table)]
        try:
            results = [
                verify_table(t, rows=req.rows, oracle_cap=req.oracle_cap) for t in tables
            ]
        except ValueError as exc:
            return JSONResponse(
                status_code=422,
                content={"error": "ValueError", "detail": str(exc)},
            )
        payload = {
            "passed": all(r.passed for r in results),
            "tables": [r.as_dict() for r in results],
        }
        return JSONResponse(json_safe(payload))

    return app


app = create_app()
