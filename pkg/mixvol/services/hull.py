# mixvol/services/hull.py
import logging
from dataclasses import dataclass
from typing import Tuple

import numpy as np
from scipy.spatial import ConvexHull

from mixvol.config import settings
from mixvol.errors import CapacityError, ParameterError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class HullData:
    """Extreme points of a finite point set plus the measures derived from them.

    `surface` follows the both-sides convention: a flat body in R^3 has
    surface 2·area, a segment in R^2 has perimeter 2·length.
    """

    vertices: np.ndarray
    affine_dim: int
    volume: float
    surface: float


def affine_frame(points: np.ndarray, tol: float = settings.DEGENERACY_TOL):
    """(origin, basis columns, affine dimension) of the affine hull of `points`"""
    origin = points.mean(axis=0)
    centered = points - origin
    if points.shape[0] == 1:
        return origin, np.zeros((points.shape[1], 0)), 0
    _, s, vt = np.linalg.svd(centered, full_matrices=False)
    scale = max(1.0, float(np.abs(points).max()))
    rank = int(np.count_nonzero(s > tol * scale * max(1.0, np.sqrt(points.shape[0]))))
    return origin, vt[:rank].T, rank


def monotone_chain(points: np.ndarray) -> np.ndarray:
    """Counter-clockwise extreme points of a planar set; collinear points dropped"""
    pts = sorted(set(map(tuple, np.asarray(points, dtype=np.float64))))
    if len(pts) <= 2:
        return np.array(pts)

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return np.array(lower[:-1] + upper[:-1])


def polygon_area(ccw: np.ndarray) -> float:
    x, y = ccw[:, 0], ccw[:, 1]
    return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(np.roll(x, -1), y))


def polygon_perimeter(ccw: np.ndarray) -> float:
    return float(np.linalg.norm(np.roll(ccw, -1, axis=0) - ccw, axis=1).sum())


def edge_normals(ccw: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Outward unit normals and edge lengths of a counter-clockwise polygon"""
    edges = np.roll(ccw, -1, axis=0) - ccw
    lengths = np.linalg.norm(edges, axis=1)
    keep = lengths > 0
    normals = np.stack([edges[keep, 1], -edges[keep, 0]], axis=1) / lengths[keep, None]
    return normals, lengths[keep]


def _segment_hull(points: np.ndarray, origin: np.ndarray, basis: np.ndarray):
    coords = (points - origin) @ basis[:, 0]
    lo, hi = points[int(np.argmin(coords))], points[int(np.argmax(coords))]
    return np.stack([lo, hi]), float(np.linalg.norm(hi - lo))


def hull2(points: np.ndarray) -> HullData:
    origin, basis, rank = affine_frame(points)
    if rank == 0:
        return HullData(points[:1].copy(), 0, 0.0, 0.0)
    if rank == 1:
        verts, length = _segment_hull(points, origin, basis)
        return HullData(verts, 1, 0.0, 2.0 * length)
    ccw = monotone_chain(points)
    return HullData(ccw, 2, polygon_area(ccw), polygon_perimeter(ccw))


def fan_volume(points: np.ndarray, simplices: np.ndarray) -> float:
    """Sum of the tetrahedra spanned by an interior point and each boundary triangle"""
    apex = points.mean(axis=0)
    a = points[simplices[:, 0]] - apex
    b = points[simplices[:, 1]] - apex
    c = points[simplices[:, 2]] - apex
    return float(np.abs(np.einsum("ij,ij->i", a, np.cross(b, c))).sum() / 6.0)


def triangle_area_sum(points: np.ndarray, simplices: np.ndarray) -> float:
    a = points[simplices[:, 0]]
    cross = np.cross(points[simplices[:, 1]] - a, points[simplices[:, 2]] - a)
    return float(np.linalg.norm(cross, axis=1).sum() / 2.0)


def hull3(points: np.ndarray) -> HullData:
    origin, basis, rank = affine_frame(points)
    if rank == 0:
        return HullData(points[:1].copy(), 0, 0.0, 0.0)
    if rank == 1:
        verts, _ = _segment_hull(points, origin, basis)
        return HullData(verts, 1, 0.0, 0.0)
    if rank == 2:
        planar = monotone_chain((points - origin) @ basis)
        verts = origin + planar @ basis.T
        return HullData(verts, 2, 0.0, 2.0 * polygon_area(planar))
    hull = ConvexHull(points)
    extreme = points[hull.vertices]
    # fan over the triangulated facets of the extreme points only
    local = ConvexHull(extreme)
    return HullData(
        extreme,
        3,
        fan_volume(extreme, local.simplices),
        triangle_area_sum(extreme, local.simplices),
    )


def convex_hull(points, dim: int) -> HullData:
    """Extreme points and measures of conv(points) in R^2 or R^3"""
    pts = np.asarray(points, dtype=np.float64)
    if pts.ndim != 2 or pts.shape[0] == 0:
        raise ParameterError("hull needs at least one point")
    if pts.shape[1] != dim:
        raise ParameterError(f"points have dimension {pts.shape[1]}, expected {dim}")
    if not np.all(np.isfinite(pts)):
        raise ParameterError("hull points must be finite")
    if dim == 2:
        return hull2(pts)
    if dim == 3:
        return hull3(pts)
    raise CapacityError(f"polytope hulls are implemented for dim 2 and 3, got {dim}")
