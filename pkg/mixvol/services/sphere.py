# mixvol/services/sphere.py
import logging
import math
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, Tuple

import numpy as np

from mixvol.config import settings
from mixvol.errors import ParameterError

logger = logging.getLogger(__name__)

_ID_RE = re.compile(r"^(icosa|gl|circle)([0-9]+)$")

# (min, max) accepted parameter of each quadrature family
_BOUNDS: Dict[str, Tuple[int, int]] = {
    "icosa": (0, 6),
    "gl": (2, 200),
    "circle": (3, 1_000_000),
}


def kappa(n: int) -> float:
    """Volume of the n-dimensional Euclidean unit ball"""
    if n < 0:
        raise ParameterError(f"kappa needs n >= 0, got {n}")
    return math.pi ** (n / 2) / math.gamma(n / 2 + 1)


@dataclass(frozen=True, eq=False)
class QuadratureScheme:
    """Nodes on S^{dim-1} with positive weights summing to one (normalized measure)."""

    id: str
    nodes: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        nodes = np.array(self.nodes, dtype=np.float64)
        weights = np.array(self.weights, dtype=np.float64)
        if nodes.ndim != 2 or nodes.shape[1] not in (2, 3):
            raise ParameterError(f"nodes must be a (k, 2|3) array, got {nodes.shape}")
        if weights.shape != (nodes.shape[0],) or np.any(weights <= 0):
            raise ParameterError("weights must be positive, one per node")
        weights = weights / weights.sum()
        nodes.setflags(write=False)
        weights.setflags(write=False)
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "weights", weights)

    @property
    def dim(self) -> int:
        return self.nodes.shape[1]

    @property
    def size(self) -> int:
        return self.nodes.shape[0]

    def integrate(self, values: np.ndarray) -> float:
        # numpy pairwise summation in node order
        return float(np.sum(self.weights * np.asarray(values, dtype=np.float64)))

    def mean_of(self, fn: Callable[[np.ndarray], np.ndarray]) -> float:
        return self.integrate(fn(self.nodes))

    def describe(self) -> Dict[str, object]:
        return {"id": self.id, "dim": self.dim, "nodes": self.size}


def _icosahedron() -> Tuple[np.ndarray, np.ndarray]:
    t = (1.0 + math.sqrt(5.0)) / 2.0
    verts = np.array(
        [
            [-1, t, 0], [1, t, 0], [-1, -t, 0], [1, -t, 0],
            [0, -1, t], [0, 1, t], [0, -1, -t], [0, 1, -t],
            [t, 0, -1], [t, 0, 1], [-t, 0, -1], [-t, 0, 1],
        ],
        dtype=np.float64,
    )  # fmt: skip
    faces = np.array(
        [
            [0, 11, 5], [0, 5, 1], [0, 1, 7], [0, 7, 10], [0, 10, 11],
            [1, 5, 9], [5, 11, 4], [11, 10, 2], [10, 7, 6], [7, 1, 8],
            [3, 9, 4], [3, 4, 2], [3, 2, 6], [3, 6, 8], [3, 8, 9],
            [4, 9, 5], [2, 4, 11], [6, 2, 10], [8, 6, 7], [9, 8, 1],
        ],
        dtype=np.intp,
    )  # fmt: skip
    return verts / np.linalg.norm(verts, axis=1, keepdims=True), faces


def icosphere(level: int) -> Tuple[np.ndarray, np.ndarray]:
    """Unit-sphere vertices and triangles of the icosahedron subdivided `level` times"""
    verts, faces = _icosahedron()
    points = [v for v in verts]
    for _ in range(level):
        cache: Dict[Tuple[int, int], int] = {}

        def midpoint(i: int, j: int) -> int:
            key = (i, j) if i < j else (j, i)
            if key not in cache:
                m = points[i] + points[j]
                points.append(m / np.linalg.norm(m))
                cache[key] = len(points) - 1
            return cache[key]

        refined = []
        for a, b, c in faces:
            ab, bc, ca = midpoint(a, b), midpoint(b, c), midpoint(c, a)
            refined.extend([(a, ab, ca), (b, bc, ab), (c, ca, bc), (ab, bc, ca)])
        faces = np.array(refined, dtype=np.intp)
    return np.array(points), faces


def _spherical_triangle_areas(points: np.ndarray, faces: np.ndarray) -> np.ndarray:
    a, b, c = points[faces[:, 0]], points[faces[:, 1]], points[faces[:, 2]]
    triple = np.abs(np.einsum("ij,ij->i", a, np.cross(b, c)))
    denom = (
        1.0
        + np.einsum("ij,ij->i", a, b)
        + np.einsum("ij,ij->i", b, c)
        + np.einsum("ij,ij->i", c, a)
    )
    return 2.0 * np.arctan2(triple, denom)


def icosa_scheme(level: int) -> QuadratureScheme:
    points, faces = icosphere(level)
    areas = _spherical_triangle_areas(points, faces)
    # each vertex receives a third of the area of every incident triangle
    weights = np.zeros(points.shape[0])
    for k in range(3):
        np.add.at(weights, faces[:, k], areas / 3.0)
    return QuadratureScheme(f"icosa{level}", points, weights)


def gauss_legendre_scheme(n: int) -> QuadratureScheme:
    """Gauss–Legendre in cos(theta) times a uniform 2n-point azimuth rule"""
    x, w = np.polynomial.legendre.leggauss(n)
    phi = 2.0 * math.pi * np.arange(2 * n) / (2 * n)
    sin_t = np.sqrt(1.0 - x**2)
    nodes = np.stack(
        [
            np.outer(sin_t, np.cos(phi)).ravel(),
            np.outer(sin_t, np.sin(phi)).ravel(),
            np.repeat(x, 2 * n),
        ],
        axis=1,
    )
    weights = np.repeat(w / 2.0, 2 * n) / (2 * n)
    return QuadratureScheme(f"gl{n}", nodes, weights)


def circle_scheme(n: int) -> QuadratureScheme:
    angles = 2.0 * math.pi * (np.arange(n) + 0.5) / n
    nodes = np.stack([np.cos(angles), np.sin(angles)], axis=1)
    return QuadratureScheme(f"circle{n}", nodes, np.full(n, 1.0 / n))


def parse_quadrature_id(qid: str) -> Tuple[str, int]:
    match = _ID_RE.match(qid or "")
    if not match:
        raise ParameterError(f"unknown quadrature id {qid!r}")
    family, value = match.group(1), int(match.group(2))
    low, high = _BOUNDS[family]
    if not low <= value <= high:
        raise ParameterError(
            f"quadrature id {qid!r}: parameter must lie in [{low}, {high}]"
        )
    return family, value


@lru_cache(maxsize=16)
def get_scheme(qid: str) -> QuadratureScheme:
    """Build (once) the quadrature scheme named by `qid`"""
    family, value = parse_quadrature_id(qid)
    if family == "icosa":
        scheme = icosa_scheme(value)
    elif family == "gl":
        scheme = gauss_legendre_scheme(value)
    else:
        scheme = circle_scheme(value)
    logger.debug("built quadrature %s with %d nodes", qid, scheme.size)
    return scheme


def default_scheme(dim: int) -> QuadratureScheme:
    if dim == 3:
        qid = settings.DEFAULT_QUADRATURE
        if qid.startswith("circle"):
            qid = f"icosa{settings.ICOSPHERE_LEVEL}"
        return get_scheme(qid)
    if dim == 2:
        return get_scheme(f"circle{settings.CIRCLE_NODES}")
    raise ParameterError(f"quadrature is available on S^1 and S^2 only, got dim {dim}")


def resolve_scheme(qid_or_scheme, dim: int) -> QuadratureScheme:
    if qid_or_scheme is None:
        return default_scheme(dim)
    scheme = (
        qid_or_scheme
        if isinstance(qid_or_scheme, QuadratureScheme)
        else get_scheme(qid_or_scheme)
    )
    if scheme.dim != dim:
        raise ParameterError(
            f"quadrature {scheme.id} lives on S^{scheme.dim - 1}, body needs dim {dim}"
        )
    return scheme


def perp_basis(u: np.ndarray) -> np.ndarray:
    """Orthonormal basis of u⊥ as the columns of an n×(n-1) array.

    Gram–Schmidt on the standard basis with the coordinate of largest |u_i|
    removed, so the result depends only on u.
    """
    u = np.asarray(u, dtype=np.float64)
    u = u / np.linalg.norm(u)
    n = u.shape[0]
    drop = int(np.argmax(np.abs(u)))
    basis = [u]
    for i in range(n):
        if i == drop:
            continue
        v = np.zeros(n)
        v[i] = 1.0
        for b in basis:
            v = v - np.dot(v, b) * b
        basis.append(v / np.linalg.norm(v))
    return np.stack(basis[1:], axis=1)


def great_circle_scheme(u: np.ndarray, n_nodes: int) -> QuadratureScheme:
    """Uniform rule on the unit circle of u⊥ inside R^3"""
    base = circle_scheme(n_nodes)
    frame = perp_basis(u)
    return QuadratureScheme(
        f"circle{n_nodes}", base.nodes @ frame.T, np.asarray(base.weights)
    )
