# mixvol/services/radii.py
import logging
from typing import Tuple

import numpy as np
from scipy.optimize import linprog

from mixvol.config import settings
from mixvol.errors import CapacityError, MixvolError, ParameterError
from mixvol.schemas.reports import RadiiResult
from mixvol.services.bodies import Body, Polytope
from mixvol.services.hull import edge_normals, monotone_chain
from mixvol.services.sphere import get_scheme

logger = logging.getLogger(__name__)


def _planar_points(K: Body) -> np.ndarray:
    if K.dim != 2:
        raise ParameterError(f"relative radii are planar, got dim {K.dim}")
    return np.asarray(K.vertex_array(), dtype=np.float64)


def _facets(points: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    ccw = monotone_chain(points)
    normals, _ = edge_normals(ccw)
    return normals, (normals @ ccw.T).max(axis=1)


def _lexicographic_lp(objective, a_ub, b_ub) -> Tuple[float, np.ndarray]:
    """Optimal scale for `objective` over (scale, tx, ty).

    Among optimal solutions the translation is the lexicographically smallest.
    """
    bounds = [(0, None), (None, None), (None, None)]
    rows = [np.asarray(a_ub, dtype=np.float64)]
    rhs = [np.asarray(b_ub, dtype=np.float64)]
    value, translation = None, None
    for c in (objective, [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]):
        res = linprog(
            c,
            A_ub=np.vstack(rows),
            b_ub=np.concatenate(rhs),
            bounds=bounds,
            method="highs",
        )
        if res.status != 0:
            if value is None:
                raise MixvolError(f"radius LP failed: {res.message}")
            break
        if value is None:
            value = float(res.x[0])
        translation = res.x[1:]
        # pin this stage's optimum before the next one
        rows.append(np.asarray(c, dtype=np.float64)[None, :])
        rhs.append(np.array([res.fun + 1e-12 * max(1.0, abs(res.fun))]))
    return value, translation


def outer_radius(T: Body, A: Body) -> Tuple[float, np.ndarray]:
    """min R with T ⊆ R·A + y, as an LP over the outward facet normals of A"""
    normals, h_a = _facets(_planar_points(A))
    h_t = (normals @ _planar_points(T).T).max(axis=1)
    # -R·h_A(u) - <y, u> <= -h_T(u)
    a_ub = -np.hstack([h_a[:, None], normals])
    return _lexicographic_lp([1.0, 0.0, 0.0], a_ub, -h_t)


def inner_radius(T: Body, A: Body) -> Tuple[float, np.ndarray]:
    """max r with r·A + x ⊆ T; zero for a lower-dimensional T"""
    pts_t = _planar_points(T)
    if Polytope(pts_t).affine_dimension() < 2:
        return 0.0, pts_t[0].copy()
    normals, h_t = _facets(pts_t)
    h_a = (normals @ _planar_points(A).T).max(axis=1)
    # r·h_A(w) + <x, w> <= h_T(w)
    a_ub = np.hstack([h_a[:, None], normals])
    return _lexicographic_lp([-1.0, 0.0, 0.0], a_ub, h_t)


def inner_outer_radii(T: Body, A: Body) -> RadiiResult:
    """Relative radii r_A(T) <= R_A(T) with witnesses, checked on S^1 nodes"""
    pts_a = _planar_points(A)
    if Polytope(pts_a).affine_dimension() < 2:
        raise CapacityError("relative radii need a full-dimensional A")
    R, y = outer_radius(T, A)
    r, x = inner_radius(T, A)
    nodes = get_scheme(f"circle{settings.CIRCLE_NODES}").nodes
    h_t, h_a = T.support_many(nodes), A.support_many(nodes)
    tol = settings.CONTAINMENT_TOL * max(1.0, float(np.abs(h_t).max()), R)
    outer_ok = bool(np.all(h_t <= R * h_a + nodes @ y + tol))
    inner_ok = bool(np.all(r * h_a + nodes @ x <= h_t + tol))
    if not (outer_ok and inner_ok):
        logger.warning("radius witnesses failed containment (r=%g, R=%g)", r, R)
    return RadiiResult(
        r=r,
        R=max(R, r),
        x=(float(x[0]), float(x[1])),
        y=(float(y[0]), float(y[1])),
        verified=outer_ok and inner_ok,
    )


def _disk_two(p: np.ndarray, q: np.ndarray) -> Tuple[np.ndarray, float]:
    center = (p + q) / 2.0
    return center, float(np.linalg.norm(p - center))


def _disk_three(
    p: np.ndarray, q: np.ndarray, s: np.ndarray
) -> Tuple[np.ndarray, float]:
    b, c = q - p, s - p
    d = 2.0 * (b[0] * c[1] - b[1] * c[0])
    if abs(d) < 1e-15:
        # collinear: the widest pair spans the disk
        pairs = [(p, q), (p, s), (q, s)]
        return max((_disk_two(*pair) for pair in pairs), key=lambda cr: cr[1])
    bb, cc = b @ b, c @ c
    ux = (c[1] * bb - b[1] * cc) / d
    uy = (b[0] * cc - c[0] * bb) / d
    center = p + np.array([ux, uy])
    return center, float(np.linalg.norm(center - p))


def _inside(center: np.ndarray, radius: float, p: np.ndarray) -> bool:
    return float(np.linalg.norm(p - center)) <= radius * (1.0 + 1e-12) + 1e-12


def smallest_enclosing_disk(points, seed: int = settings.ENCLOSING_DISK_SEED):
    """Randomized incremental smallest enclosing disk; returns (center, radius)"""
    pts = np.unique(np.asarray(points, dtype=np.float64), axis=0)
    if pts.ndim != 2 or pts.shape[1] != 2 or pts.shape[0] == 0:
        raise ParameterError("smallest_enclosing_disk needs non-empty 2D points")
    pts = pts[np.random.default_rng(seed).permutation(len(pts))]
    center, radius = pts[0], 0.0
    for i in range(1, len(pts)):
        if _inside(center, radius, pts[i]):
            continue
        center, radius = pts[i], 0.0
        for j in range(i):
            if _inside(center, radius, pts[j]):
                continue
            center, radius = _disk_two(pts[i], pts[j])
            for k in range(j):
                if not _inside(center, radius, pts[k]):
                    center, radius = _disk_three(pts[i], pts[j], pts[k])
    return center, radius


def circumradius(T: Body) -> float:
    """R(T), the radius of the smallest disk containing T"""
    return smallest_enclosing_disk(_planar_points(T))[1]
