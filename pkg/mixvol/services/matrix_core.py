# mixvol/services/matrix_core.py
import logging
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from mixvol.config import settings
from mixvol.errors import DimensionMismatchError, ParameterError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class SymMatrix:
    """Dense symmetric real matrix; symmetry is exact, not approximate."""

    entries: np.ndarray

    def __post_init__(self):
        a = np.array(self.entries, dtype=np.float64)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
            raise ParameterError(
                f"SymMatrix needs a non-empty square grid, got {a.shape}"
            )
        if not np.all(np.isfinite(a)):
            raise ParameterError("SymMatrix entries must be finite")
        if not np.array_equal(a, a.T):
            raise ParameterError("SymMatrix entries must be exactly symmetric")
        a.setflags(write=False)
        object.__setattr__(self, "entries", a)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    @classmethod
    def symmetrized(cls, a) -> "SymMatrix":
        a = np.asarray(a, dtype=np.float64)
        # a_ij + a_ji is computed bitwise-identically on both sides
        return cls((a + a.T) / 2.0)

    @classmethod
    def identity(cls, n: int) -> "SymMatrix":
        return cls(np.eye(n))

    @classmethod
    def diag(cls, values: Sequence[float]) -> "SymMatrix":
        return cls(np.diag(np.asarray(values, dtype=np.float64)))

    @classmethod
    def zeros(cls, n: int) -> "SymMatrix":
        return cls(np.zeros((n, n)))

    def to_rows(self) -> list:
        return self.entries.tolist()

    def __add__(self, other: "SymMatrix") -> "SymMatrix":
        check_same_dim(self, other)
        return SymMatrix(self.entries + other.entries)

    def scaled(self, factor: float) -> "SymMatrix":
        return SymMatrix(factor * self.entries)


def check_same_dim(*matrices: SymMatrix) -> int:
    dims = {m.dim for m in matrices}
    if len(dims) != 1:
        raise DimensionMismatchError(f"matrix dimensions differ: {sorted(dims)}")
    return dims.pop()


def det(m: SymMatrix) -> float:
    # LAPACK getrf: LU with partial pivoting
    return float(np.linalg.det(m.entries))


def inverse(m: SymMatrix) -> SymMatrix:
    """Inverse of an invertible matrix, re-symmetrized to remove round-off asymmetry"""
    return SymMatrix.symmetrized(np.linalg.inv(m.entries))


def trace(m: SymMatrix) -> float:
    return float(np.trace(m.entries))


def eigenvalues(m: SymMatrix) -> np.ndarray:
    return np.linalg.eigvalsh(m.entries)


def psd_threshold(values: np.ndarray, tol: float) -> float:
    top = float(values.max()) if values.size else 0.0
    scale = top if top > 0 else 1.0
    return max(tol * scale, settings.PSD_ABS_FLOOR)


def rank_psd(m: SymMatrix, tol: float = settings.PSD_RANK_TOL) -> int:
    """Count of eigenvalues above tol times the largest one (or above tol)"""
    if tol <= 0:
        raise ParameterError(f"tol must be positive, got {tol}")
    values = eigenvalues(m)
    return int(np.count_nonzero(values > psd_threshold(values, tol)))


def column_space(m: SymMatrix, tol: float = settings.PSD_RANK_TOL) -> np.ndarray:
    """Orthonormal basis (as columns) of the numeric image of m"""
    values, vectors = np.linalg.eigh(m.entries)
    keep = np.abs(values) > psd_threshold(np.abs(values), tol)
    return vectors[:, keep]


def image_contained(a: SymMatrix, b: SymMatrix, tol: float) -> bool:
    """Im(a) ⊆ Im(b), tested on the residual of a's columns off b's column space"""
    basis = column_space(b)
    residual = a.entries - basis @ (basis.T @ a.entries)
    scale = max(1.0, float(np.linalg.norm(a.entries)))
    return float(np.linalg.norm(residual)) <= tol * scale


def trial_rng(master_seed: int, trial: int) -> np.random.Generator:
    """Per-trial generator derived from (master seed, trial index)"""
    return np.random.default_rng(np.random.SeedSequence([master_seed, trial]))


def psd_from_rng(rng: np.random.Generator, dim: int, rank: int) -> SymMatrix:
    if not 0 <= rank <= dim:
        raise ParameterError(f"rank must lie in [0, {dim}], got {rank}")
    g = rng.standard_normal((dim, rank))
    return SymMatrix.symmetrized(g @ g.T)


def random_psd(dim: int, rank: int, seed: int) -> SymMatrix:
    """G·Gᵀ for a dim×rank Gaussian G drawn from the seeded generator"""
    if dim < 1:
        raise ParameterError(f"dim must be positive, got {dim}")
    return psd_from_rng(np.random.default_rng(seed), dim, rank)


def random_invertible(rng: np.random.Generator, dim: int) -> np.ndarray:
    while True:
        b = rng.standard_normal((dim, dim))
        if abs(np.linalg.det(b)) > 1e-3:
            return b
