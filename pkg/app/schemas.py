from __future__ import annotations

import json
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from . import config as app_config

ClaimStatus = Literal["pending", "verified", "failed"]
ReportStatus = Literal["passed", "failed", "error"]
OutputFormat = Literal["text", "json"]


class CongruenceClaim(BaseModel):
    """a_K(M n + c) == 0 (mod m) for 0 <= n <= n_max."""

    model_config = ConfigDict(extra="forbid")

    k_colors: int = Field(..., ge=1)
    modulus_ap: int = Field(..., ge=1)
    residue: int = Field(..., ge=0)
    prime: int = Field(..., ge=2)
    n_max: int = Field(..., ge=0)
    status: ClaimStatus = "pending"
    first_failure: Optional[int] = None
    # family offsets delta_k may exceed the modulus; such progressions start past the first residue class
    reduced_residue: bool = True

    @model_validator(mode="after")
    def _residue_in_range(self) -> "CongruenceClaim":
        if self.reduced_residue and self.residue >= self.modulus_ap:
            raise ValueError(f"residue {self.residue} must be < {self.modulus_ap}")
        return self

    def describe(self) -> str:
        return (
            f"a_{self.k_colors}({self.modulus_ap}n + {self.residue}) == 0 (mod {self.prime}) "
            f"for n <= {self.n_max}"
        )


class VerificationReport(BaseModel):
    model_config = ConfigDict(extra="forbid")

    check: str
    claim: str
    alpha: Optional[int] = None
    k: Optional[int] = None
    precision: int = Field(0, ge=0)
    bound: Optional[int] = None
    status: ReportStatus
    first_failure: Optional[int] = None
    duration_ms: float = Field(0.0, ge=0)
    details: Dict[str, Any] = Field(default_factory=dict)
    error: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.status == "passed"

    def sort_key(self) -> tuple:
        return (
            -1 if self.alpha is None else self.alpha,
            -1 if self.k is None else self.k,
            self.check,
            self.claim,
        )


class RunConfig(BaseModel):
    model_config = ConfigDict(extra="forbid")

    command: str = Field(..., min_length=1)
    alphas: List[int] = Field(default_factory=list)
    ks: List[int] = Field(default_factory=list)
    n_max: Optional[int] = Field(None, ge=0)
    precision: Optional[int] = Field(None, ge=1)
    modulus: Optional[int] = Field(None, ge=2)
    output_format: OutputFormat = "text"
    workers: int = Field(default_factory=lambda: app_config.DEFAULT_WORKERS, ge=1)
    output: Optional[str] = None

    @field_validator("alphas", "ks")
    @classmethod
    def _non_negative(cls, values: List[int]) -> List[int]:
        if any(v < 0 for v in values):
            raise ValueError("values must be >= 0")
        return sorted(set(values))


class RunEnvelope(BaseModel):
    schema_version: str = app_config.REPORT_SCHEMA_VERSION
    command: str
    config: RunConfig
    results: List[VerificationReport]

    @classmethod
    def build(cls, run: RunConfig, results: List[VerificationReport]) -> "RunEnvelope":
        return cls(command=run.command, config=run, results=sorted(results, key=VerificationReport.sort_key))

    def as_payload(self, deterministic: bool = False) -> Dict[str, Any]:
        payload = self.model_dump(mode="json")
        if deterministic:
            for item in payload["results"]:
                item["duration_ms"] = 0.0
        return payload

    def to_json(self, deterministic: bool = False) -> str:
        return json.dumps(self.as_payload(deterministic), ensure_ascii=False, indent=2, sort_keys=True)

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.results)
