"""HTTP service exposing the same reports as the command line interface.

Run with: uvicorn loopforge.service:app
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from .reports import (RunConfig, UsageError, run_catalog, run_expcheck,
                      run_suite_report, run_verify)
from .suite import ChecksumError

app = FastAPI(title="loopforge",
              description="verification toolkit for sharply transitive "
                          "sections in non-solvable Lie groups")


class RunRequest(BaseModel):
    seed: int = 0
    samples: int = Field(default=200, ge=1)
    tol: float | None = Field(default=None, gt=0)
    radius: float = 1.0
    entry: str | None = None
    params: dict[str, float] = Field(default_factory=dict)
    only: str | None = None
    timestamp: bool = True

    def to_config(self) -> RunConfig:
        return RunConfig(seed=self.seed, samples=self.samples, tol=self.tol,
                         radius=self.radius, entry=self.entry,
                         params=dict(self.params), only=self.only,
                         timestamp=self.timestamp)


class RunResponse(BaseModel):
    ok: bool
    report: dict


def _run(runner, request: RunRequest) -> RunResponse:
    try:
        report, ok = runner(request.to_config())
    except UsageError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
    except ChecksumError as exc:
        raise HTTPException(status_code=500, detail=str(exc)) from exc
    return RunResponse(ok=ok, report=report)


@app.post("/catalog", response_model=RunResponse)
def catalog(request: RunRequest) -> RunResponse:
    return _run(run_catalog, request)


@app.post("/verify", response_model=RunResponse)
def verify(request: RunRequest) -> RunResponse:
    return _run(run_verify, request)


@app.post("/suite", response_model=RunResponse)
def suite(request: RunRequest) -> RunResponse:
    return _run(run_suite_report, request)


@app.post("/expcheck", response_model=RunResponse)
def expcheck(request: RunRequest) -> RunResponse:
    return _run(run_expcheck, request)


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}
