# mixvol/services/bodies.py
import itertools
import logging
import math
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import ClassVar, Optional, Sequence, Union

import numpy as np

from mixvol.config import settings
from mixvol.errors import CapacityError, DimensionMismatchError, ParameterError
from mixvol.services.hull import HullData, convex_hull, monotone_chain
from mixvol.services.sphere import icosphere, kappa, perp_basis

logger = logging.getLogger(__name__)

# beyond this many subsets the zonotope determinant sums are refused
_MAX_SUBSETS = 2_000_000


def _vector(values, name: str) -> np.ndarray:
    v = np.array(values, dtype=np.float64)
    if v.ndim != 1 or v.shape[0] == 0:
        raise ParameterError(f"{name} must be a non-empty vector, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise ParameterError(f"{name} must be finite")
    v.setflags(write=False)
    return v


@dataclass(frozen=True, eq=False)
class UnitVector:
    """Direction on S^{n-1}; normalized on construction."""

    components: np.ndarray

    def __post_init__(self):
        v = np.array(self.components, dtype=np.float64)
        if v.ndim != 1 or v.shape[0] == 0 or not np.all(np.isfinite(v)):
            raise ParameterError("UnitVector needs a finite, non-empty vector")
        norm = float(np.linalg.norm(v))
        if norm == 0.0:
            raise ParameterError("UnitVector cannot be built from the zero vector")
        v = v / norm
        v.setflags(write=False)
        object.__setattr__(self, "components", v)

    @property
    def dim(self) -> int:
        return self.components.shape[0]

    @classmethod
    def axis(cls, n: int, i: int, sign: float = 1.0) -> "UnitVector":
        v = np.zeros(n)
        v[i] = sign
        return cls(v)


Direction = Union[UnitVector, Sequence[float], np.ndarray]


def as_direction(u: Direction, dim: int) -> np.ndarray:
    v = u.components if isinstance(u, UnitVector) else UnitVector(u).components
    if v.shape[0] != dim:
        raise DimensionMismatchError(
            f"direction has dimension {v.shape[0]}, body {dim}"
        )
    return v


class Body(ABC):
    """Common interface of every convex-body representation"""

    kind: ClassVar[str] = ""

    @property
    @abstractmethod
    def dim(self) -> int:
        ...

    @abstractmethod
    def support_many(self, directions: np.ndarray) -> np.ndarray:
        ...

    def support(self, u: Direction) -> float:
        return float(self.support_many(as_direction(u, self.dim)[None, :])[0])

    @abstractmethod
    def volume(self) -> float:
        ...

    @abstractmethod
    def surface_area(self) -> float:
        ...

    @abstractmethod
    def affine_dimension(self) -> int:
        ...

    @abstractmethod
    def translate(self, t) -> "Body":
        ...

    @abstractmethod
    def scale(self, factor: float) -> "Body":
        ...

    @abstractmethod
    def reflect(self, u: Direction) -> "Body":
        ...

    @abstractmethod
    def project(self, u: Direction) -> "Body":
        ...

    def vertex_array(self) -> np.ndarray:
        raise CapacityError(f"{self.kind} has no finite vertex set")

    def is_point(self) -> bool:
        return self.affine_dimension() == 0

    def is_degenerate(self) -> bool:
        return self.affine_dimension() < self.dim

    def _check_translation(self, t) -> np.ndarray:
        t = _vector(t, "translation")
        if t.shape[0] != self.dim:
            raise DimensionMismatchError(
                f"translation has dim {t.shape[0]}, body {self.dim}"
            )
        return t


def _check_factor(factor: float) -> float:
    factor = float(factor)
    if not np.isfinite(factor) or factor < 0:
        raise ParameterError(f"scale factor must be finite and >= 0, got {factor}")
    return factor


def _reflection(u: np.ndarray) -> np.ndarray:
    return np.eye(u.shape[0]) - 2.0 * np.outer(u, u)


@dataclass(frozen=True, eq=False)
class Polytope(Body):
    """Convex hull of finitely many points in R^2 or R^3 (V-representation).

    The vertex list is replaced by the extreme points of its hull.
    """

    vertices: np.ndarray
    _hull: HullData = field(init=False, repr=False)

    kind: ClassVar[str] = "polytope"

    def __post_init__(self):
        pts = np.array(self.vertices, dtype=np.float64)
        if pts.ndim != 2 or pts.shape[0] == 0 or pts.shape[1] not in (2, 3):
            raise ParameterError(
                f"polytope needs a non-empty list of 2D or 3D points, got {pts.shape}"
            )
        data = convex_hull(pts, pts.shape[1])
        verts = np.array(data.vertices)
        verts.setflags(write=False)
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "_hull", data)

    @property
    def dim(self) -> int:
        return self.vertices.shape[1]

    def support_many(self, directions: np.ndarray) -> np.ndarray:
        return (np.asarray(directions) @ self.vertices.T).max(axis=1)

    def volume(self) -> float:
        return self._hull.volume

    def surface_area(self) -> float:
        return self._hull.surface

    def affine_dimension(self) -> int:
        return self._hull.affine_dim

    def vertex_array(self) -> np.ndarray:
        return self.vertices

    def affine_image(self, matrix: np.ndarray, shift=None) -> "Polytope":
        pts = self.vertices @ np.asarray(matrix).T
        return Polytope(pts if shift is None else pts + shift)

    def translate(self, t) -> "Polytope":
        return Polytope(self.vertices + self._check_translation(t))

    def scale(self, factor: float) -> "Polytope":
        return Polytope(_check_factor(factor) * self.vertices)

    def reflect(self, u: Direction) -> "Polytope":
        return self.affine_image(_reflection(as_direction(u, self.dim)))

    def project(self, u: Direction) -> Body:
        coords = self.vertices @ perp_basis(as_direction(u, self.dim))
        if self.dim == 3:
            return Polytope(coords)
        return Segment([coords[:, 0].min()], [coords[:, 0].max()])


@dataclass(frozen=True, eq=False)
class Segment(Body):
    a: np.ndarray
    b: np.ndarray

    kind: ClassVar[str] = "segment"

    def __post_init__(self):
        a, b = _vector(self.a, "a"), _vector(self.b, "b")
        if a.shape != b.shape:
            raise DimensionMismatchError(
                f"segment endpoints differ in dimension: {a.shape} vs {b.shape}"
            )
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def dim(self) -> int:
        return self.a.shape[0]

    @property
    def length(self) -> float:
        return float(np.linalg.norm(self.b - self.a))

    def support_many(self, directions: np.ndarray) -> np.ndarray:
        d = np.asarray(directions)
        return np.maximum(d @ self.a, d @ self.b)

    def volume(self) -> float:
        return self.length if self.dim == 1 else 0.0

    def surface_area(self) -> float:
        if self.dim == 1:
            return 2.0 if self.length > 0 else 0.0
        if self.dim == 2:
            return 2.0 * self.length
        return 0.0

    def affine_dimension(self) -> int:
        return 1 if self.length > 0 else 0

    def vertex_array(self) -> np.ndarray:
        return np.stack([self.a, self.b]) if self.length > 0 else self.a[None, :].copy()

    def as_zonotope(self) -> "Zonotope":
        return Zonotope(self.a, [self.b - self.a])

    def affine_image(self, matrix: np.ndarray, shift=None) -> "Segment":
        m = np.asarray(matrix)
        shift = 0.0 if shift is None else shift
        return Segment(m @ self.a + shift, m @ self.b + shift)

    def translate(self, t) -> "Segment":
        t = self._check_translation(t)
        return Segment(self.a + t, self.b + t)

    def scale(self, factor: float) -> "Segment":
        factor = _check_factor(factor)
        return Segment(factor * self.a, factor * self.b)

    def reflect(self, u: Direction) -> "Segment":
        return self.affine_image(_reflection(as_direction(u, self.dim)))

    def project(self, u: Direction) -> "Segment":
        if self.dim < 2:
            raise ParameterError("projection needs dim >= 2")
        basis = perp_basis(as_direction(u, self.dim))
        return Segment(self.a @ basis, self.b @ basis)


@dataclass(frozen=True, eq=False)
class Zonotope(Body):
    """center + Σ [0, g_i]; zero generators allowed."""

    center: np.ndarray
    generators: np.ndarray

    kind: ClassVar[str] = "zonotope"

    def __post_init__(self):
        c = _vector(self.center, "center")
        g = np.array(self.generators, dtype=np.float64)
        if g.size == 0:
            g = np.zeros((0, c.shape[0]))
        if g.ndim != 2 or g.shape[1] != c.shape[0]:
            raise DimensionMismatchError(
                f"generators must be a (k, {c.shape[0]}) array, got {g.shape}"
            )
        if not np.all(np.isfinite(g)):
            raise ParameterError("generators must be finite")
        g.setflags(write=False)
        object.__setattr__(self, "center", c)
        object.__setattr__(self, "generators", g)

    @property
    def dim(self) -> int:
        return self.center.shape[0]

    def support_many(self, directions: np.ndarray) -> np.ndarray:
        d = np.asarray(directions)
        return d @ self.center + np.maximum(d @ self.generators.T, 0.0).sum(axis=1)

    def _subset_stack(self, size: int) -> np.ndarray:
        k = self.generators.shape[0]
        if math.comb(k, size) > _MAX_SUBSETS:
            raise CapacityError(
                f"zonotope with {k} generators needs C({k},{size}) subsets "
                f"(limit {_MAX_SUBSETS})"
            )
        idx = np.array(list(itertools.combinations(range(k), size)), dtype=np.intp)
        return self.generators[idx]

    def volume(self) -> float:
        if self.generators.shape[0] < self.dim:
            return 0.0
        return float(np.abs(np.linalg.det(self._subset_stack(self.dim))).sum())

    def surface_area(self) -> float:
        nonzero = np.linalg.norm(self.generators, axis=1) > 0
        if self.dim == 1:
            return 2.0 if nonzero.any() else 0.0
        if self.generators.shape[0] < self.dim - 1:
            return 0.0
        faces = self._subset_stack(self.dim - 1)
        gram = np.einsum("sij,skj->sik", faces, faces)
        return 2.0 * float(np.sqrt(np.clip(np.linalg.det(gram), 0.0, None)).sum())

    def affine_dimension(self) -> int:
        if self.generators.shape[0] == 0:
            return 0
        tol = settings.DEGENERACY_TOL * max(1.0, float(np.abs(self.generators).max()))
        return int(np.linalg.matrix_rank(self.generators, tol=tol))

    def as_polytope(self) -> Polytope:
        if self.dim not in (2, 3):
            raise CapacityError(
                f"zonotope realization is limited to dim 2 and 3, got {self.dim}"
            )
        pts = self.center[None, :]
        for g in self.generators:
            pts = convex_hull(np.vstack([pts, pts + g]), self.dim).vertices
        return Polytope(pts)

    def vertex_array(self) -> np.ndarray:
        if self.affine_dimension() == 0:
            return (self.center + self.generators.sum(axis=0))[None, :]
        return self.as_polytope().vertices

    def affine_image(self, matrix: np.ndarray, shift=None) -> "Zonotope":
        m = np.asarray(matrix)
        c = m @ self.center + (0.0 if shift is None else shift)
        return Zonotope(c, self.generators @ m.T)

    def translate(self, t) -> "Zonotope":
        return Zonotope(self.center + self._check_translation(t), self.generators)

    def scale(self, factor: float) -> "Zonotope":
        factor = _check_factor(factor)
        return Zonotope(factor * self.center, factor * self.generators)

    def reflect(self, u: Direction) -> "Zonotope":
        return self.affine_image(_reflection(as_direction(u, self.dim)))

    def project(self, u: Direction) -> "Zonotope":
        if self.dim < 2:
            raise ParameterError("projection needs dim >= 2")
        basis = perp_basis(as_direction(u, self.dim))
        return Zonotope(self.center @ basis, self.generators @ basis)


@dataclass(frozen=True, eq=False)
class Ball(Body):
    center: np.ndarray
    radius: float

    kind: ClassVar[str] = "ball"

    def __post_init__(self):
        c = _vector(self.center, "center")
        r = float(self.radius)
        if not np.isfinite(r) or r < 0:
            raise ParameterError(f"radius must be finite and >= 0, got {r}")
        object.__setattr__(self, "center", c)
        object.__setattr__(self, "radius", r)

    @classmethod
    def unit(cls, n: int) -> "Ball":
        return cls(np.zeros(n), 1.0)

    @property
    def dim(self) -> int:
        return self.center.shape[0]

    def support_many(self, directions: np.ndarray) -> np.ndarray:
        return np.asarray(directions) @ self.center + self.radius

    def volume(self) -> float:
        return kappa(self.dim) * self.radius**self.dim

    def surface_area(self) -> float:
        if self.radius == 0:
            return 0.0
        return self.dim * kappa(self.dim) * self.radius ** (self.dim - 1)

    def affine_dimension(self) -> int:
        return self.dim if self.radius > 0 else 0

    def vertex_array(self) -> np.ndarray:
        if self.radius > 0:
            return super().vertex_array()
        return self.center[None, :].copy()

    def translate(self, t) -> "Ball":
        return Ball(self.center + self._check_translation(t), self.radius)

    def scale(self, factor: float) -> "Ball":
        factor = _check_factor(factor)
        return Ball(factor * self.center, factor * self.radius)

    def reflect(self, u: Direction) -> "Ball":
        return Ball(_reflection(as_direction(u, self.dim)) @ self.center, self.radius)

    def project(self, u: Direction) -> "Ball":
        if self.dim < 2:
            raise ParameterError("projection needs dim >= 2")
        return Ball(self.center @ perp_basis(as_direction(u, self.dim)), self.radius)


@dataclass(frozen=True, eq=False)
class TruncatedPrism(Body):
    """The box [0,1]^{n-1}×[0,M] cut by x_1/ε+…+x_{n-1}/ε+x_n/M >= 1.

    Equivalently (Q + M[0,e_n]) with the corner simplex
    conv{0, εe_1, …, εe_{n-1}, Me_n} removed. Volume, surface area, support
    and the projection along e_n are closed forms valid for every n.
    """

    n: int
    eps: float
    M: float

    kind: ClassVar[str] = "truncated_prism"

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 2:
            raise ParameterError(f"n must be an integer >= 2, got {self.n}")
        if not 0.0 < self.eps < 1.0:
            raise ParameterError(f"eps must lie in (0, 1), got {self.eps}")
        if not self.M > 1.0 or not np.isfinite(self.M):
            raise ParameterError(f"M must be a finite value > 1, got {self.M}")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "eps", float(self.eps))
        object.__setattr__(self, "M", float(self.M))

    @property
    def dim(self) -> int:
        return self.n

    def facet_areas(self) -> dict:
        n, eps, M = self.n, self.eps, self.M
        fact = math.factorial(n - 1)
        apex = np.zeros(n)
        apex[-1] = M
        edges = np.zeros((n, n - 1))
        for i in range(n - 1):
            edges[i, i] = eps
        edges -= apex[:, None]
        cut = math.sqrt(max(np.linalg.det(edges.T @ edges), 0.0)) / fact
        return {
            "F0": cut,
            "F_side": M * eps ** (n - 2) / fact,
            "F_bottom": eps ** (n - 1) / fact,
        }

    def volume(self) -> float:
        return self.M - self.M * self.eps ** (self.n - 1) / math.factorial(self.n)

    def surface_area(self) -> float:
        n, M = self.n, self.M
        f = self.facet_areas()
        box = 2.0 * M * (n - 1) + 2.0
        return box - (f["F_bottom"] + (n - 1) * f["F_side"]) + f["F0"]

    def affine_dimension(self) -> int:
        return self.n

    def support_many(self, directions: np.ndarray) -> np.ndarray:
        d = np.asarray(directions)
        weights = np.ones(self.n)
        weights[-1] = self.M
        box = np.maximum(d * weights, 0.0).sum(axis=1)
        corner = np.maximum(self.eps * d[:, :-1].max(axis=1), self.M * d[:, -1])
        return np.where((d >= 0).any(axis=1), box, corner)

    def vertex_array(self) -> np.ndarray:
        if self.n > 20:
            raise CapacityError(
                f"vertex enumeration is limited to n <= 20, got {self.n}"
            )
        corners = np.array(list(itertools.product((0.0, 1.0), repeat=self.n)))[1:]
        corners[:, -1] *= self.M
        cut = self.eps * np.eye(self.n)[: self.n - 1]
        return np.vstack([corners, cut])

    def as_polytope(self) -> Polytope:
        if self.n not in (2, 3):
            raise CapacityError(
                "the truncated prism is materialized as a polytope for n = 2, 3 "
                f"only, got {self.n}"
            )
        return Polytope(self.vertex_array())

    def translate(self, t) -> Polytope:
        return self.as_polytope().translate(t)

    def scale(self, factor: float) -> Polytope:
        return self.as_polytope().scale(factor)

    def reflect(self, u: Direction) -> Polytope:
        return self.as_polytope().reflect(u)

    def project(self, u: Direction) -> Body:
        v = as_direction(u, self.n)
        if abs(abs(v[-1]) - 1.0) <= 1e-12:
            return Zonotope(np.zeros(self.n - 1), np.eye(self.n - 1))
        return self.as_polytope().project(v)


def point(p) -> Polytope:
    return Polytope([list(np.asarray(p, dtype=np.float64))])


def hull(points, dim: int) -> Polytope:
    """Polytope spanned by `points`; degenerate hulls keep their affine dimension"""
    pts = np.asarray(points, dtype=np.float64)
    if pts.ndim != 2 or pts.shape[1] != dim:
        raise ParameterError(
            f"expected points of dimension {dim}, got shape {pts.shape}"
        )
    return Polytope(pts)


def support(K: Body, u: Direction) -> float:
    return K.support(u)


def volume(K: Body) -> float:
    return K.volume()


def surface_area(K: Body) -> float:
    return K.surface_area()


def project(K: Body, u: Direction) -> Body:
    return K.project(u)


def reflect(K: Body, u: Direction) -> Body:
    return K.reflect(u)


def translate(K: Body, t) -> Body:
    return K.translate(t)


def scale(K: Body, factor: float) -> Body:
    return K.scale(factor)


def vertex_array(K: Body) -> np.ndarray:
    return K.vertex_array()


def affine_dimension(K: Body) -> int:
    return K.affine_dimension()


def _check_dims(K: Body, L: Body) -> int:
    if K.dim != L.dim:
        raise DimensionMismatchError(f"bodies live in dimensions {K.dim} and {L.dim}")
    return K.dim


def _to_polytope(K: Body) -> Polytope:
    if isinstance(K, Polytope):
        return K
    if isinstance(K, (Zonotope, TruncatedPrism)):
        return K.as_polytope()
    if isinstance(K, Segment):
        return Polytope(K.vertex_array())
    raise CapacityError(f"{K.kind} cannot be realized as a polytope")


def _lowest_first(ccw: np.ndarray) -> np.ndarray:
    start = min(range(len(ccw)), key=lambda i: (ccw[i, 1], ccw[i, 0]))
    return np.roll(ccw, -start, axis=0)


def polygon_sum(P: np.ndarray, Q: np.ndarray) -> np.ndarray:
    """Minkowski sum of two convex polygons by merging their edge sequences"""
    P = _lowest_first(monotone_chain(P))
    Q = _lowest_first(monotone_chain(Q))
    n, m = len(P), len(Q)
    P = np.vstack([P, P[:2]])
    Q = np.vstack([Q, Q[:2]])
    out = []
    i = j = 0
    while i < n or j < m:
        out.append(P[i] + Q[j])
        if i == n:
            j += 1
            continue
        if j == m:
            i += 1
            continue
        e, f = P[i + 1] - P[i], Q[j + 1] - Q[j]
        cross = e[0] * f[1] - e[1] * f[0]
        if cross >= 0:
            i += 1
        if cross <= 0:
            j += 1
    return np.array(out)


def minkowski_sum(K: Body, L: Body) -> Body:
    """K + L for the representable pairs; a ball mixes only with balls and points"""
    _check_dims(K, L)
    if L.is_point():
        return K.translate(L.vertex_array()[0])
    if K.is_point():
        return L.translate(K.vertex_array()[0])
    if isinstance(K, Ball) and isinstance(L, Ball):
        return Ball(K.center + L.center, K.radius + L.radius)
    if isinstance(K, Ball) or isinstance(L, Ball):
        raise CapacityError(
            "Minkowski sums with a ball are not represented; use steiner_info or the "
            "ball slots of mixed_volume"
        )
    flat = (Zonotope, Segment)
    if isinstance(K, flat) and isinstance(L, flat):
        kz = K.as_zonotope() if isinstance(K, Segment) else K
        lz = L.as_zonotope() if isinstance(L, Segment) else L
        gens = np.vstack([kz.generators, lz.generators])
        return Zonotope(kz.center + lz.center, gens)
    if K.dim not in (2, 3):
        raise CapacityError(f"polytope sums are limited to dim 2 and 3, got {K.dim}")
    P, Q = _to_polytope(K), _to_polytope(L)
    if K.dim == 2 and P.affine_dimension() == 2 and Q.affine_dimension() == 2:
        return Polytope(polygon_sum(P.vertices, Q.vertices))
    sums = (P.vertices[:, None, :] + Q.vertices[None, :, :]).reshape(-1, K.dim)
    return Polytope(sums)


def embed(K: Body, dim: int = 3) -> Body:
    """K ⊂ R^k placed in R^dim by appending zero coordinates"""
    if dim < K.dim:
        raise ParameterError(f"cannot embed a {K.dim}-dimensional body into R^{dim}")
    pad = np.zeros(dim - K.dim)
    if isinstance(K, Polytope):
        return Polytope(np.hstack([K.vertices, np.tile(pad, (len(K.vertices), 1))]))
    if isinstance(K, Segment):
        return Segment(np.concatenate([K.a, pad]), np.concatenate([K.b, pad]))
    if isinstance(K, Zonotope):
        gens = np.hstack([K.generators, np.zeros((K.generators.shape[0], dim - K.dim))])
        return Zonotope(np.concatenate([K.center, pad]), gens)
    raise CapacityError(f"{K.kind} cannot be embedded as a flat body")


def flatten(K: Body, u: Direction) -> Body:
    """Orthogonal projection of K onto u⊥, kept in the ambient space"""
    v = as_direction(u, K.dim)
    projector = np.eye(K.dim) - np.outer(v, v)
    if isinstance(K, Ball):
        raise CapacityError("a flattened ball is a disk, which has no representation")
    if isinstance(K, TruncatedPrism):
        K = K.as_polytope()
    return K.affine_image(projector)


def box_polytope(sides: Sequence[float]) -> Polytope:
    sides = np.asarray(sides, dtype=np.float64)
    corners = np.array(list(itertools.product((0.0, 1.0), repeat=len(sides))))
    return Polytope(corners * sides)


def unit_cube(n: int = 3) -> Zonotope:
    return Zonotope(np.zeros(n), np.eye(n))


def disk_polygon(
    sides: Optional[int] = None, radius: float = 1.0, center=None
) -> Polytope:
    """Regular polygon inscribed in the circle of `radius`, a vertex on the x-axis"""
    sides = sides or settings.DISK_SIDES
    if sides < 3:
        raise ParameterError(f"a polygon needs at least 3 sides, got {sides}")
    angles = 2.0 * math.pi * np.arange(sides) / sides
    pts = radius * np.stack([np.cos(angles), np.sin(angles)], axis=1)
    if center is not None:
        pts = pts + np.asarray(center, dtype=np.float64)
    return Polytope(pts)


def icosphere_polytope(level: int = 2, radius: float = 1.0) -> Polytope:
    points, _ = icosphere(level)
    return Polytope(radius * points)


def _uniform_in_ball(rng: np.random.Generator, size: int, dim: int) -> np.ndarray:
    g = rng.standard_normal((size, dim))
    g /= np.linalg.norm(g, axis=1, keepdims=True)
    return g * rng.random(size)[:, None] ** (1.0 / dim)


def random_body_from_rng(
    rng: np.random.Generator, kind: str, dim: int, size: int
) -> Body:
    if kind == "polytope":
        if dim not in (2, 3):
            raise CapacityError(
                f"random polytopes are generated in dim 2 and 3, got {dim}"
            )
        if size < 1:
            raise ParameterError(f"size must be positive, got {size}")
        return Polytope(_uniform_in_ball(rng, size, dim))
    if kind == "zonotope":
        if size < 0:
            raise ParameterError(f"size must be >= 0, got {size}")
        gens = rng.standard_normal((size, dim)) / math.sqrt(dim)
        return Zonotope(np.zeros(dim), gens)
    if kind == "segment":
        return Segment(rng.standard_normal(dim), rng.standard_normal(dim))
    if kind == "ball":
        return Ball(0.5 * rng.standard_normal(dim), rng.uniform(0.5, 1.5))
    raise ParameterError(f"unknown random body kind {kind!r}")


def random_body(kind: str, dim: int, size: int, seed: int) -> Body:
    """Seeded random body: hull of `size` points, or `size` zonotope generators"""
    return random_body_from_rng(np.random.default_rng(seed), kind, dim, size)
