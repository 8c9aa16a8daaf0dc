from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, field_validator, model_validator


class EqualityCase(str, Enum):
    strict = "strict"
    case_i = "case_i"
    case_ii = "case_ii"
    case_iii = "case_iii"


class Verdict(str, Enum):
    holds = "holds"
    equality = "equality"
    violated = "violated"
    inconclusive = "inconclusive"


class Thm1Report(BaseModel):
    dim: int = Field(ge=2)
    lhs: float
    rhs: float
    gap: float
    trace_identity_residual: Optional[float] = None
    rank_a3: int = Field(ge=0)
    equality: bool
    equality_case: EqualityCase
    consistent: bool
    tolerance: float = Field(gt=0.0)


class InequalityReport(BaseModel):
    name: str
    lhs: float
    rhs: float
    gap: float
    relative_gap: float
    scale: float = Field(ge=0.0)
    verdict: Verdict
    equality_case: Optional[str] = None
    inputs_digest: str
    tolerances: Dict[str, float]
    notes: List[str] = Field(default_factory=list)
    details: Dict[str, Any] = Field(default_factory=dict)

    @model_validator(mode="after")
    def check_verdict(self):
        tol = self.tolerances.get("equality", 0.0)
        bound = tol * self.scale + 1e-12
        if self.verdict == Verdict.equality and abs(self.gap) > bound:
            raise ValueError("equality verdict with a gap outside the tolerance")
        return self


class RadiiResult(BaseModel):
    r: float = Field(ge=0.0)
    R: float = Field(ge=0.0)
    x: Tuple[float, float]
    y: Tuple[float, float]
    verified: bool

    @field_validator("R")
    @classmethod
    def validate_order(cls, v, info):
        r = info.data.get("r")
        if r is not None and v < r - 1e-9:
            raise ValueError("outer radius smaller than inner radius")
        return v


class DerivativeReport(BaseModel):
    V0: float
    V1: float
    W0: float
    W1: float
    fprime0: float
    info: float


class Constants(BaseModel):
    n: int = Field(ge=2)
    kappa: float = Field(gt=0.0)
    ratio: float
    C_n: float
    D_n: Optional[float] = None
    bound_ok: bool
    rearrangement_ok: bool


class HarmonicCoefficient(BaseModel):
    m: int = Field(ge=0)
    l: int = Field(ge=0)
    value: float


class HarmonicExpansionOut(BaseModel):
    lmax: int = Field(ge=0)
    quadrature: str
    coefficients: List[HarmonicCoefficient]
    residual: float = Field(ge=0.0)


class SweepRow(BaseModel):
    trial: int = Field(ge=0)
    inputs_digest: str
    lhs: float
    rhs: float
    gap: float
    verdict: str


class SweepReport(BaseModel):
    name: str
    seed: int
    trials: int = Field(ge=1)
    counts: Dict[str, int]
    worst_relative_gap: float
    tolerances: Dict[str, float]
    details: Dict[str, Any] = Field(default_factory=dict)
    rows: List[SweepRow] = Field(default_factory=list)


class CheckRecord(BaseModel):
    name: str
    verdict: str
    expected: List[str]
    ok: bool
    report: Dict[str, Any]


class RunReport(BaseModel):
    artifact: str
    version: str
    command: str
    seed: int
    prng: str
    quadrature: str
    tolerances: Dict[str, float]
    generated_at: Optional[str] = None
    checks: List[CheckRecord]

    @property
    def contradictions(self) -> List[str]:
        return [c.name for c in self.checks if not c.ok]
