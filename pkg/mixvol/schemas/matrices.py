import json
from pathlib import Path
from typing import List

from pydantic import BaseModel, Field, model_validator

from mixvol.services.matrix_core import SymMatrix
from mixvol.services.mixed_discriminant import MatArgs


class SymMatrixIn(BaseModel):
    dim: int = Field(ge=1)
    rows: List[List[float]]

    @model_validator(mode="after")
    def validate_rows(self):
        if len(self.rows) != self.dim or any(len(r) != self.dim for r in self.rows):
            raise ValueError(f"rows must form a {self.dim}×{self.dim} grid")
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                if self.rows[i][j] != self.rows[j][i]:
                    raise ValueError(
                        f"matrix is not exactly symmetric at ({i}, {j}): "
                        f"{self.rows[i][j]!r} != {self.rows[j][i]!r}"
                    )
        return self

    def to_domain(self) -> SymMatrix:
        return SymMatrix(self.rows)

    @classmethod
    def from_domain(cls, m: SymMatrix) -> "SymMatrixIn":
        return cls(dim=m.dim, rows=m.to_rows())


class MatrixSlot(BaseModel):
    matrix: SymMatrixIn
    multiplicity: int = Field(default=1, ge=0)


class MatArgsIn(BaseModel):
    items: List[MatrixSlot] = Field(min_length=1)

    def to_domain(self) -> MatArgs:
        return MatArgs(
            tuple((s.matrix.to_domain(), s.multiplicity) for s in self.items)
        )


def load_mat_args(path) -> MatArgs:
    return MatArgsIn.model_validate(json.loads(Path(path).read_text())).to_domain()
