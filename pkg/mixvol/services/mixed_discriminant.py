# mixvol/services/mixed_discriminant.py
import itertools
import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from mixvol.config import settings
from mixvol.errors import CapacityError, DimensionMismatchError, ParameterError
from mixvol.schemas.reports import EqualityCase, Thm1Report
from mixvol.services.matrix_core import (
    SymMatrix,
    check_same_dim,
    det,
    image_contained,
    inverse,
    rank_psd,
)

logger = logging.getLogger(__name__)

_SUBSET_CHUNK = 4096


@dataclass(frozen=True, eq=False)
class MatArgs:
    """Ordered multiset of matrices as (matrix, multiplicity) pairs."""

    items: Tuple[Tuple[SymMatrix, int], ...]

    def __post_init__(self):
        items = tuple((m, int(k)) for m, k in self.items if int(k) != 0)
        if not items:
            raise ParameterError("MatArgs needs at least one matrix")
        if any(k < 0 for _, k in items):
            raise ParameterError("multiplicities must be non-negative")
        n = check_same_dim(*(m for m, _ in items))
        total = sum(k for _, k in items)
        if total != n:
            raise ParameterError(f"multiplicities sum to {total}, expected {n}")
        object.__setattr__(self, "items", items)

    @property
    def dim(self) -> int:
        return self.items[0][0].dim

    @classmethod
    def of(cls, *matrices: SymMatrix) -> "MatArgs":
        return cls(tuple((m, 1) for m in matrices))

    def expanded(self) -> List[SymMatrix]:
        return [m for m, k in self.items for _ in range(k)]


def _as_stack(matrices: Sequence[np.ndarray]) -> np.ndarray:
    stack = np.stack([np.asarray(m, dtype=np.float64) for m in matrices])
    n = stack.shape[1]
    if stack.shape != (n, n, n):
        raise DimensionMismatchError(
            f"need n square n×n matrices, got stack of shape {stack.shape}"
        )
    return stack


def _md_perm_stack(stack: np.ndarray) -> float:
    n = stack.shape[0]
    if n > settings.MD_PERM_MAX_N:
        raise CapacityError(
            f"permutation algorithm is limited to n <= {settings.MD_PERM_MAX_N} "
            f"(n! enumeration), got n = {n}"
        )
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.intp)
    cols = np.arange(n)
    # column i of the p-th matrix is column i of stack[perms[p, i]]
    mixed = stack[perms[:, None, :], cols[None, :, None], cols[None, None, :]]
    return float(np.linalg.det(mixed).sum() / math.factorial(n))


def _md_incl_excl_stack(stack: np.ndarray) -> float:
    n = stack.shape[0]
    if n > settings.MD_INCL_EXCL_MAX_N:
        raise CapacityError(
            f"inclusion-exclusion algorithm is limited to n <= "
            f"{settings.MD_INCL_EXCL_MAX_N} (2^n enumeration), got n = {n}"
        )
    total = 0.0
    shifts = np.arange(n)
    for start in range(1, 2**n, _SUBSET_CHUNK):
        masks = np.arange(start, min(start + _SUBSET_CHUNK, 2**n))
        bits = ((masks[:, None] >> shifts) & 1).astype(np.float64)
        sums = np.einsum("sk,kij->sij", bits, stack)
        signs = np.where((n - bits.sum(axis=1).astype(int)) % 2 == 0, 1.0, -1.0)
        total += float(np.dot(signs, np.linalg.det(sums)))
    return total / math.factorial(n)


def _md_grouped(args: MatArgs) -> float:
    n = args.dim
    if n > settings.MD_INCL_EXCL_MAX_N:
        raise CapacityError(
            f"inclusion-exclusion algorithm is limited to n <= "
            f"{settings.MD_INCL_EXCL_MAX_N}, got n = {n}"
        )
    mats = [m.entries for m, _ in args.items]
    mults = [k for _, k in args.items]
    total = 0.0
    for counts in itertools.product(*(range(k + 1) for k in mults)):
        used = sum(counts)
        if used == 0:
            continue
        weight = math.prod(math.comb(k, j) for k, j in zip(mults, counts))
        combo = sum(j * a for j, a in zip(counts, mats))
        total += (-1) ** (n - used) * weight * float(np.linalg.det(combo))
    return total / math.factorial(n)


def md_perm(args: MatArgs) -> float:
    """Mixed discriminant as the permutation average of column-mixed determinants"""
    return _md_perm_stack(_as_stack([m.entries for m in args.expanded()]))


def md_incl_excl(args: MatArgs, grouped: bool = False) -> float:
    """Mixed discriminant by polarization of the determinant over argument subsets"""
    if grouped:
        return _md_grouped(args)
    return _md_incl_excl_stack(_as_stack([m.entries for m in args.expanded()]))


def mixed_discriminant_of_arrays(
    matrices: Sequence[np.ndarray], method: str = "perm"
) -> float:
    """Mixed discriminant of n arbitrary square n×n matrices (symmetry not required)"""
    stack = _as_stack(matrices)
    if method == "perm":
        return _md_perm_stack(stack)
    if method == "incl_excl":
        return _md_incl_excl_stack(stack)
    raise ParameterError(f"unknown method {method!r}")


def reduced_pattern_arrays(x: np.ndarray, y: np.ndarray) -> Tuple[float, float, float]:
    n = x.shape[0]
    if n < 2:
        raise ParameterError(f"reduced pattern needs n >= 2, got {n}")
    tx, ty = float(np.trace(x)), float(np.trace(y))
    # Σ_{i,j} (x_ii y_jj - x_ji y_ij) = tr(X)tr(Y) - tr(XY)
    cross = (tx * ty - float(np.sum(x.T * y))) / (n * (n - 1))
    return tx / n, ty / n, cross


def md_reduced_pattern(x: SymMatrix, y: SymMatrix) -> Tuple[float, float, float]:
    """(D(X,I[n-1]), D(Y,I[n-1]), D(X,Y,I[n-2])) from traces"""
    check_same_dim(x, y)
    return reduced_pattern_arrays(x.entries, y.entries)


def _bracket(*pairs: Tuple[SymMatrix, int]) -> MatArgs:
    return MatArgs(tuple(p for p in pairs if p[1] > 0))


def thm1_check(
    a1: SymMatrix,
    a2: SymMatrix,
    a3: SymMatrix,
    tol: float = settings.THM1_TOL,
    grouped: bool = False,
) -> Thm1Report:
    """Evaluate D(A1,A3[n-1])D(A2,A3[n-1]) >= (n-1)/n D(A1,A2,A3[n-2]) D(A3[n])"""
    n = check_same_dim(a1, a2, a3)
    if n < 2:
        raise ParameterError(f"the inequality needs n >= 2, got {n}")

    d13 = md_incl_excl(_bracket((a1, 1), (a3, n - 1)), grouped=grouped)
    d23 = md_incl_excl(_bracket((a2, 1), (a3, n - 1)), grouped=grouped)
    d123 = md_incl_excl(_bracket((a1, 1), (a2, 1), (a3, n - 2)), grouped=grouped)
    d3 = md_incl_excl(_bracket((a3, n)), grouped=grouped)

    lhs = d13 * d23
    rhs = (n - 1) / n * d123 * d3
    gap = lhs - rhs
    scale = max(1.0, abs(lhs), abs(rhs))
    rank3 = rank_psd(a3)

    residual: Optional[float] = None
    case = EqualityCase.strict
    if rank3 == n:
        inv3 = inverse(a3).entries
        identity_gap = det(a3) ** 2 * float(
            np.trace(inv3 @ a1.entries @ inv3 @ a2.entries)
        ) / n**2
        residual = abs(gap - identity_gap)
        product = a1.entries @ inv3 @ a2.entries
        if float(np.linalg.norm(product)) <= tol * scale:
            case = EqualityCase.case_i
    elif rank3 <= n - 2:
        case = EqualityCase.case_ii
    elif image_contained(a1, a3, tol) or image_contained(a2, a3, tol):
        case = EqualityCase.case_iii

    equality = abs(gap) <= tol * scale
    consistent = equality == (case != EqualityCase.strict)
    if not consistent:
        logger.warning(
            "equality %s but classification %s (gap=%.3e, rank(A3)=%d)",
            equality,
            case.value,
            gap,
            rank3,
        )
    return Thm1Report(
        dim=n,
        lhs=lhs,
        rhs=rhs,
        gap=gap,
        trace_identity_residual=residual,
        rank_a3=rank3,
        equality=equality,
        equality_case=case,
        consistent=consistent,
        tolerance=tol,
    )
