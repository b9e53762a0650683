"""Request models for the HTTP service."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field

from ..alexander import DEGREE_CAP_DEFAULT
from ..tables import DEFAULT_ORACLE_CAP


class AnalyzeRequest(BaseModel):
    polynomial: str
    transpose: bool = False


class PolynomialRequest(BaseModel):
    polynomial: str


class OracleRequest(BaseModel):
    polynomial: str
    oracle_cap: int = Field(default=DEGREE_CAP_DEFAULT, ge=1)


class FamilyRequest(BaseModel):
    selector: str
    params: list[int] = Field(default_factory=list)
    squares: int = Field(default=0, ge=0)
    k: list[int] | None = None


class VerifyTablesRequest(BaseModel):
    table: Literal["1", "2", "all"] = "all"
    rows: str | None = None
    oracle_cap: int = Field(default=DEFAULT_ORACLE_CAP, ge=0)
