"""HTTP service wrapping the calculator.

FastAPI application exposing the same operations as the command line client
as POST endpoints with pydantic request models.  Responses are the exact
payload dicts of the api module.  Unsupported parameters map to 400,
computation-level failures (degenerate solves, inconsistent multiplicities)
to 409.  The certify endpoint runs minutes-long exact computations
synchronously; it is meant for batch clients.

Run with:  uvicorn qfrob.service:app
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import api
from .errors import (
    DegenerateDecomposition,
    InconsistentMultiplicity,
    MalformedShape,
    SearchExhausted,
    UnsupportedParameters,
)

app = FastAPI(
    title="qfrob",
    description=(
        "Exact computations with Frobenius pushforwards and spinor bundles "
        "on even-dimensional smooth quadrics."
    ),
)

SheafKind = str


class MFRequest(BaseModel):
    p: int = Field(ge=2)
    m: int = Field(ge=0)
    check_involution: bool = False


class DecomposeRequest(BaseModel):
    p: int = Field(ge=2)
    m: int = Field(ge=2)
    e: int = Field(ge=0)
    sheaf: SheafKind
    twist: int


class HomRequest(BaseModel):
    p: int = Field(ge=2)
    m: int = Field(ge=2)
    src: SheafKind
    src_twist: int = 0
    tgt: SheafKind
    tgt_twist: int = 0
    degree: int = 0
    stable: bool = False


class ExtRequest(BaseModel):
    p: int = Field(ge=2)
    m: int = Field(ge=2)
    src: SheafKind
    src_twist: int = 0
    tgt: SheafKind
    tgt_twist: int = 0
    degree: int = 0


class HilbertRequest(BaseModel):
    m: int = Field(ge=2)
    sheaf: SheafKind
    twist: int = 0
    max_degree: int = Field(default=8, ge=0, le=200)
    e: int = Field(default=0, ge=0)
    p: int = Field(default=3, ge=2)


class CertifyRequest(BaseModel):
    p: int = Field(ge=2)
    m: int = Field(ge=2)
    e_max: int = Field(ge=1)


def _run(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except UnsupportedParameters as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    except (
        DegenerateDecomposition,
        InconsistentMultiplicity,
        MalformedShape,
        SearchExhausted,
    ) as exc:
        raise HTTPException(status_code=409, detail=str(exc))


@app.get("/health")
def health():
    return {"status": "ok"}


@app.post("/mf")
def mf(req: MFRequest):
    return _run(api.mf_payload, req.p, req.m, req.check_involution)


@app.post("/decompose")
def decompose(req: DecomposeRequest):
    return _run(api.decompose_payload, req.p, req.m, req.e, req.sheaf, req.twist)


@app.post("/hom")
def hom(req: HomRequest):
    return _run(
        api.hom_payload,
        req.p,
        req.m,
        req.src,
        req.src_twist,
        req.tgt,
        req.tgt_twist,
        req.degree,
        req.stable,
    )


@app.post("/ext")
def ext(req: ExtRequest):
    return _run(
        api.ext_payload,
        req.p,
        req.m,
        req.src,
        req.src_twist,
        req.tgt,
        req.tgt_twist,
        req.degree,
    )


@app.post("/hilbert")
def hilbert(req: HilbertRequest):
    return _run(
        api.hilbert_payload, req.m, req.sheaf, req.twist, req.max_degree, req.e, req.p
    )


@app.post("/certify")
def certify(req: CertifyRequest):
    payload, verdict = _run(api.certify_payload, req.p, req.m, req.e_max)
    return {"certificate": payload, "verdict": verdict}
