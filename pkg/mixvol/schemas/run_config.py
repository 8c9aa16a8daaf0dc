from typing import Any, Dict, Literal, Optional

from pydantic import BaseModel, Field, field_validator

from mixvol.config import settings
from mixvol.services.sphere import parse_quadrature_id

Command = Literal[
    "md_verify",
    "thm2",
    "prop13",
    "prop51",
    "prop53",
    "bonnesen",
    "cor52",
    "counterexample",
    "reproduce",
]


class RunConfig(BaseModel):
    """One CLI invocation, validated before anything is computed"""

    command: Command
    seed: int = Field(default_factory=lambda: settings.DEFAULT_SEED)
    trials: int = Field(default_factory=lambda: settings.DEFAULT_TRIALS, ge=1)
    tolerances: Dict[str, float] = Field(default_factory=settings.tolerances)
    tol: Optional[float] = Field(default=None, gt=0.0, lt=1.0)
    quadrature: str = Field(default_factory=lambda: settings.DEFAULT_QUADRATURE)
    out: Optional[str] = None
    format: Literal["json", "csv"] = "json"
    timestamp: bool = True
    workers: int = Field(default_factory=lambda: settings.WORKERS, ge=1)
    params: Dict[str, Any] = Field(default_factory=dict)

    @field_validator("quadrature")
    @classmethod
    def validate_quadrature(cls, v):
        parse_quadrature_id(v)
        return v
