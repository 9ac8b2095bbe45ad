"""HTTP front end wrapping the core operations.

Run with `revcode serve` or any ASGI server pointing at
`revcode.service:app`.  Counts travel as decimal strings; code records use
the same matrix text format as the CLI.
"""

from __future__ import annotations

from typing import Literal, Optional

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import codefile, counter, distance, dna, enumerator
from .cli import verify_n
from .errors import RevcodeError, TooLarge
from .reverse import ReverseSpace

app = FastAPI(
    title="revcode",
    description="Reversible and reversible-complementary codes over GF(4)",
)


class CountRequest(BaseModel):
    n: int = Field(ge=1)
    contains_one: bool = False
    mode: Literal["paper", "verified", "both"] = "both"


class EnumerateRequest(BaseModel):
    n: int = Field(ge=1)
    t: int = Field(ge=0)
    s: int = Field(ge=0)
    contains_one: bool = False
    format: Literal["matrix", "generator", "dna"] = "matrix"
    limit: Optional[int] = Field(default=None, ge=1)


class EnumerateResponse(BaseModel):
    n: int
    t: int
    s: int
    contains_one: bool
    format: str
    total: str
    returned: int
    truncated: bool
    codes: list[str]


class DistanceRequest(BaseModel):
    code: str


class VerifyRequest(BaseModel):
    n: int = Field(ge=1)


class DnaReportRequest(BaseModel):
    code: str


class ComplementRequest(BaseModel):
    strand: str


class ComplementResponse(BaseModel):
    strand: str
    complement: str


def _translate(exc: RevcodeError) -> HTTPException:
    status = 413 if isinstance(exc, TooLarge) else 400
    return HTTPException(status_code=status, detail=str(exc))


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/count")
def count(req: CountRequest) -> dict:
    try:
        table = counter.count_table(req.n, req.contains_one, counter.Mode(req.mode))
        payload = table.to_dict()
        payload["iso_types"] = counter.count_iso_types(req.n, req.contains_one)
        return payload
    except RevcodeError as exc:
        raise _translate(exc)


@app.post("/enumerate", response_model=EnumerateResponse)
def enumerate_codes(req: EnumerateRequest) -> EnumerateResponse:
    try:
        rs = ReverseSpace(req.n)
        total = counter.count_cell(
            req.n, req.t, req.s, req.contains_one, counter.Mode.VERIFIED
        )
        codes = []
        for code in enumerator.enumerate_type(rs, req.t, req.s, req.contains_one):
            if req.limit is not None and len(codes) >= req.limit:
                break
            if req.format == "matrix":
                codes.append(codefile.emit_code(code))
            elif req.format == "generator":
                rows = enumerator.generator_matrix(code, rs)
                codes.append(codefile.emit_rows(code.n, rows))
            else:
                codes.append("\n".join(dna.export_dna(code.space)) + "\n")
        return EnumerateResponse(
            n=req.n,
            t=req.t,
            s=req.s,
            contains_one=req.contains_one,
            format=req.format,
            total=str(total),
            returned=len(codes),
            truncated=len(codes) < total,
            codes=codes,
        )
    except RevcodeError as exc:
        raise _translate(exc)


@app.post("/distance")
def distance_report(req: DistanceRequest) -> dict:
    try:
        code = codefile.parse_code(req.code)
        rs = ReverseSpace(code.n)
        return distance.distance_report(code, rs).to_dict()
    except RevcodeError as exc:
        raise _translate(exc)


@app.post("/verify")
def verify(req: VerifyRequest) -> dict:
    try:
        _, ok, payload = verify_n(req.n)
        payload["passed"] = ok
        return payload
    except RevcodeError as exc:
        raise _translate(exc)


@app.post("/dna/report")
def dna_report(req: DnaReportRequest) -> dict:
    try:
        code = codefile.parse_code(req.code)
        rs = ReverseSpace(code.n)
        return dna.constraint_report(code.space, rs).to_dict()
    except RevcodeError as exc:
        raise _translate(exc)


@app.post("/dna/complement", response_model=ComplementResponse)
def complement(req: ComplementRequest) -> ComplementResponse:
    try:
        return ComplementResponse(
            strand=req.strand, complement=dna.wc_complement(req.strand)
        )
    except RevcodeError as exc:
        raise _translate(exc)
