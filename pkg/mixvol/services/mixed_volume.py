# mixvol/services/mixed_volume.py
import itertools
import logging
import math
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from mixvol.errors import (
    CapacityError,
    DimensionMismatchError,
    ParameterError,
    UndefinedValueError,
)
from mixvol.schemas.reports import DerivativeReport
from mixvol.services.bodies import (
    Ball,
    Body,
    Direction,
    as_direction,
    minkowski_sum,
)
from mixvol.services.sphere import QuadratureScheme, kappa, resolve_scheme

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class BodyArgs:
    """Bodies with multiplicities summing to the ambient dimension."""

    items: Tuple[Tuple[Body, int], ...]

    def __post_init__(self):
        items = tuple((K, int(k)) for K, k in self.items if int(k) != 0)
        if not items:
            raise ParameterError("BodyArgs needs at least one body")
        if any(k < 0 for _, k in items):
            raise ParameterError("multiplicities must be non-negative")
        dims = {K.dim for K, _ in items}
        if len(dims) != 1:
            raise DimensionMismatchError(f"body dimensions differ: {sorted(dims)}")
        n = dims.pop()
        total = sum(k for _, k in items)
        if total != n:
            raise ParameterError(f"multiplicities sum to {total}, expected {n}")
        object.__setattr__(self, "items", items)

    @property
    def dim(self) -> int:
        return self.items[0][0].dim

    @classmethod
    def of(cls, *bodies: Body) -> "BodyArgs":
        return cls(tuple((K, 1) for K in bodies))


def minkowski_combination(bodies: Sequence[Body], coeffs: Sequence[int]) -> Body:
    total: Optional[Body] = None
    for K, c in zip(bodies, coeffs):
        if c == 0:
            continue
        term = K if c == 1 else K.scale(c)
        total = term if total is None else minkowski_sum(total, term)
    if total is None:
        raise ParameterError("empty Minkowski combination")
    return total


def _polarized(items: Sequence[Tuple[Body, int]], n: int) -> float:
    bodies = [K for K, _ in items]
    mults = [k for _, k in items]
    if len(bodies) == 1:
        return bodies[0].volume()
    total = 0.0
    for counts in itertools.product(*(range(k + 1) for k in mults)):
        used = sum(counts)
        if used == 0:
            continue
        weight = math.prod(math.comb(k, j) for k, j in zip(mults, counts))
        vol = minkowski_combination(bodies, counts).volume()
        total += (-1) ** (n - used) * weight * vol
    return total / math.factorial(n)


def mstar(K: Body, quad=None) -> float:
    """M*(K): mean of the support function over the sphere (normalized measure)"""
    scheme = resolve_scheme(quad, K.dim)
    return scheme.integrate(K.support_many(scheme.nodes))


def quermassintegral_Mstar(K: Body, quad=None) -> Tuple[float, float]:
    """(M*(K), V(K, B[n-1]) = κ_n·M*(K)) by quadrature"""
    value = mstar(K, quad)
    return value, kappa(K.dim) * value


def mstar_planar(K: Body) -> float:
    """Exact planar M*(K) = L(K)/(2π)"""
    if K.dim != 2:
        raise ParameterError(f"the perimeter identity is planar, got dim {K.dim}")
    return K.surface_area() / (2.0 * math.pi)


def _ball_slots(args: BodyArgs, quad) -> Optional[float]:
    balls = [(K, k) for K, k in args.items if isinstance(K, Ball)]
    if not balls:
        return None
    others = [(K, k) for K, k in args.items if not isinstance(K, Ball)]
    radius = math.prod(K.radius**k for K, k in balls)
    slots = sum(k for _, k in balls)
    n = args.dim
    if n == 1:
        return 2.0 * radius
    if n == 2:
        if slots == 2:
            return math.pi * radius
        # V(K, B_r) = r·L(K)/2
        return radius * others[0][0].surface_area() / 2.0
    if n == 3:
        if slots == 3:
            return kappa(3) * radius
        if slots == 2:
            return radius * kappa(3) * mstar(others[0][0], quad)
        rest = [K for K, k in others for _ in range(k)]
        return radius * mv_with_ball(rest[0], rest[1], quad)
    raise CapacityError(
        f"ball slots are handled in dim 2 and 3 only, got {n}; "
        "use quermassintegral_Mstar"
    )


def mixed_volume(args: BodyArgs, quad=None) -> float:
    """V(K_1, …, K_n) by polarization of the volume over Minkowski sub-sums.

    Ball slots are evaluated through the closed forms of the Steiner
    polynomial instead of Minkowski sums with a ball.
    """
    n = args.dim
    if n not in (1, 2, 3):
        raise CapacityError(f"mixed volumes are implemented for dim <= 3, got {n}")
    value = _ball_slots(args, quad)
    if value is not None:
        return value
    return _polarized(args.items, n)


def mv_with_ball(K: Body, T: Body, quad=None) -> float:
    """V(K, T, B) in R^3 from surface areas: (|∂(K+T)| − |∂K| − |∂T|)/6"""
    if K.dim != 3 or T.dim != 3:
        raise ParameterError(f"mv_with_ball lives in dim 3, got {K.dim} and {T.dim}")
    if isinstance(K, Ball) and isinstance(T, Ball):
        return kappa(3) * K.radius * T.radius
    if isinstance(K, Ball):
        K, T = T, K
    if isinstance(T, Ball):
        return T.radius * kappa(3) * mstar(K, quad)
    if K.is_degenerate() or T.is_degenerate():
        logger.debug("degenerate body in mv_with_ball: flat surfaces count both sides")
    total = minkowski_sum(K, T).surface_area()
    return (total - K.surface_area() - T.surface_area()) / 6.0


def segment_mv(
    u: Direction, rest: Sequence[Tuple[Body, int]], length: float = 1.0
) -> float:
    """V([0, length·u], K_2, …, K_n) = (length/n)·ν(K_2|u, …, K_n|u)"""
    items = tuple((K, int(k)) for K, k in rest if int(k) != 0)
    if not items:
        raise ParameterError("segment_mv needs the remaining n-1 bodies")
    n = items[0][0].dim
    if any(K.dim != n for K, _ in items):
        raise DimensionMismatchError("segment_mv bodies live in different dimensions")
    if sum(k for _, k in items) != n - 1:
        raise ParameterError(f"segment_mv needs n-1 = {n - 1} remaining slots")
    v = as_direction(u, n)
    projected = BodyArgs(tuple((K.project(v), k) for K, k in items))
    return length * mixed_volume(projected) / n


def info(K: Body) -> float:
    """I(K) = |K| / |∂K|"""
    surface = K.surface_area()
    if surface <= 0.0:
        raise UndefinedValueError(f"I(K) is undefined: {K.kind} has surface area 0")
    if K.is_degenerate():
        logger.warning(
            "I(K) of a lower-dimensional %s uses the both-sides surface convention",
            K.kind,
        )
    return K.volume() / surface


def info_of_sum(A: Body, T: Body, quad=None) -> float:
    """I(A + T), through the Steiner polynomial when T is a ball"""
    if isinstance(T, Ball):
        return steiner_info(A, T.radius, quad)
    return info(minkowski_sum(A, T))


def steiner_info(A: Body, r: float, quad=None) -> float:
    """I(A + rB) from the Steiner polynomial of A"""
    if r < 0:
        raise ParameterError(f"radius must be >= 0, got {r}")
    n = A.dim
    V, S = A.volume(), A.surface_area()
    if n == 2:
        vol = V + r * S + math.pi * r**2
        surf = S + 2.0 * math.pi * r
    elif n == 3:
        k3 = kappa(3)
        w = k3 * mstar(A, quad)
        vol = V + r * S + 3.0 * r**2 * w + k3 * r**3
        surf = S + 6.0 * r * w + 3.0 * k3 * r**2
    else:
        raise CapacityError(f"Steiner formulas cover dim 2 and 3, got {n}")
    if surf <= 0.0:
        raise UndefinedValueError("I(A + rB) is undefined for a point and r = 0")
    return vol / surf


def first_variation(A: Body, T: Body, quad=None) -> DerivativeReport:
    """Derivative at 0 of λ ↦ I(A + λT) from mixed volumes of A, T and the ball"""
    n = A.dim
    if n not in (2, 3):
        raise CapacityError(f"first_variation is implemented in dim 2 and 3, got {n}")
    if T.dim != n:
        raise DimensionMismatchError(f"A has dim {n}, T has dim {T.dim}")
    V0 = A.volume()
    if V0 <= 0.0 or A.is_degenerate():
        raise UndefinedValueError("first_variation needs a full-dimensional A")
    S = A.surface_area()
    W0 = S / n
    V1 = mixed_volume(BodyArgs(((T, 1), (A, n - 1))), quad)
    ball = Ball.unit(n)
    if n == 2:
        W1 = mixed_volume(BodyArgs(((T, 1), (ball, 1))), quad)
    else:
        W1 = mixed_volume(BodyArgs(((T, 1), (A, 1), (ball, 1))), quad)
    I0 = V0 / S
    fprime0 = I0 * (n * V1 / V0 - (n - 1) * W1 / W0)
    logger.debug("first variation: V1=%.6g W1=%.6g f'(0)=%.6g", V1, W1, fprime0)
    return DerivativeReport(V0=V0, V1=V1, W0=W0, W1=W1, fprime0=fprime0, info=I0)


def support_dominates(K: Body, L: Body, scheme: QuadratureScheme, tol: float) -> bool:
    """h_K <= h_L + tol on every node (K ⊆ L up to the node density)"""
    hk = K.support_many(scheme.nodes)
    hl = L.support_many(scheme.nodes)
    return bool(np.all(hk <= hl + tol))
