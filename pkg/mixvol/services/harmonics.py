# mixvol/services/harmonics.py
"""Real spherical harmonics on S² and the spectral side of the mixed-volume
inequalities.

Basis: Y_{m,l}, 0 <= l <= 2m, orthonormal for the normalized measure σ on S²,

    Y_{m,l}(θ, φ) = sqrt((2m+1)·(m-|q|)!/(m+|q|)!) · P_m^{|q|}(cos θ) · w_q(φ)

with q = l - m and w_q = 1, √2·cos(qφ), √2·sin(|q|φ) for q = 0, q > 0, q < 0.
Hence Y_{0,0} ≡ 1 and the (0,0) coefficient of h_K is M*(K). Columns are
stored at index m² + l.
"""
import logging
import math
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np
from scipy.special import gammaln, lpmv

from mixvol.config import settings
from mixvol.errors import CapacityError, ParameterError
from mixvol.schemas.reports import (
    Constants,
    HarmonicCoefficient,
    HarmonicExpansionOut,
    InequalityReport,
)
from mixvol.services.bodies import Ball, Body
from mixvol.services.reports import inequality_report
from mixvol.services.sphere import QuadratureScheme, kappa, perp_basis, resolve_scheme

logger = logging.getLogger(__name__)


def n_coefficients(lmax: int) -> int:
    return (lmax + 1) ** 2


def real_sph_harm(lmax: int, directions: np.ndarray) -> np.ndarray:
    """Basis values at `directions` (normalized here), shape (N, (lmax+1)²)"""
    d = np.atleast_2d(np.asarray(directions, dtype=np.float64))
    d = d / np.linalg.norm(d, axis=1, keepdims=True)
    cos_theta = np.clip(d[:, 2], -1.0, 1.0)
    phi = np.arctan2(d[:, 1], d[:, 0])
    out = np.empty((d.shape[0], n_coefficients(lmax)))
    for m in range(lmax + 1):
        for q in range(m + 1):
            norm = math.sqrt(
                (2 * m + 1) * math.exp(gammaln(m - q + 1) - gammaln(m + q + 1))
            )
            legendre = norm * lpmv(q, m, cos_theta)
            if q == 0:
                out[:, m * m + m] = legendre
            else:
                out[:, m * m + m + q] = math.sqrt(2.0) * legendre * np.cos(q * phi)
                out[:, m * m + m - q] = math.sqrt(2.0) * legendre * np.sin(q * phi)
    return out


def default_harmonic_quadrature(lmax: int) -> str:
    return f"gl{max(32, 2 * lmax + 2)}"


@dataclass(frozen=True, eq=False)
class SmoothBody:
    """Convex body given by a finite harmonic expansion of its support function"""

    lmax: int
    coeffs: np.ndarray

    kind = "smooth"

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=np.float64)
        if c.shape != (n_coefficients(self.lmax),):
            raise ParameterError(
                f"expected {n_coefficients(self.lmax)} coefficients for lmax "
                f"{self.lmax}, got {c.shape}"
            )
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @property
    def dim(self) -> int:
        return 3

    def support_many(self, directions: np.ndarray) -> np.ndarray:
        return real_sph_harm(self.lmax, directions) @ self.coeffs

    def support(self, u) -> float:
        return float(self.support_many(np.asarray(u, dtype=np.float64)[None, :])[0])

    def describe(self) -> dict:
        return {"kind": self.kind, "lmax": self.lmax, "coeffs": self.coeffs.tolist()}


SupportBody = Union[Body, SmoothBody]


def _describe(K: SupportBody):
    return K.describe() if isinstance(K, SmoothBody) else K


def _homogeneous(K: SupportBody, x: np.ndarray) -> np.ndarray:
    r = np.linalg.norm(x, axis=1)
    return r * K.support_many(x / r[:, None])


def is_convex_support(K: SupportBody, scheme_id: str = "icosa3", step=1e-3) -> bool:
    """Positive definite tangential Hessian of x ↦ |x|·h(x/|x|) on every node"""
    nodes = resolve_scheme(scheme_id, 3).nodes
    frames = np.stack([perp_basis(u) for u in nodes])
    e1, e2 = frames[:, :, 0], frames[:, :, 1]
    s = step
    h0 = _homogeneous(K, nodes)

    def second(v):
        forward = _homogeneous(K, nodes + s * v)
        backward = _homogeneous(K, nodes - s * v)
        return (forward - 2 * h0 + backward) / s**2

    h11, h22 = second(e1), second(e2)
    h12 = (
        _homogeneous(K, nodes + s * (e1 + e2))
        - _homogeneous(K, nodes + s * (e1 - e2))
        - _homogeneous(K, nodes - s * (e1 - e2))
        + _homogeneous(K, nodes - s * (e1 + e2))
    ) / (4 * s**2)
    return bool(np.all(h11 > 0) and np.all(h11 * h22 - h12**2 > 0))


def random_smooth_body(
    lmax: int = 2,
    amplitude: float = 0.1,
    seed: Optional[int] = None,
    rng: Optional[np.random.Generator] = None,
    max_attempts: int = 100,
) -> SmoothBody:
    """h = 1 + amplitude·(unit random combination of degree 2..lmax harmonics)"""
    if lmax < 2:
        raise ParameterError(f"lmax must be >= 2, got {lmax}")
    rng = np.random.default_rng(seed) if rng is None else rng
    for attempt in range(max_attempts):
        c = np.zeros(n_coefficients(lmax))
        tail = rng.standard_normal(n_coefficients(lmax) - 4)
        c[4:] = amplitude * tail / np.linalg.norm(tail)
        c[0] = 1.0
        body = SmoothBody(lmax, c)
        if is_convex_support(body):
            logger.debug("convex smooth body after %d rejections", attempt)
            return body
    raise CapacityError(
        f"no convex sample in {max_attempts} attempts (amplitude {amplitude})"
    )


@dataclass(frozen=True, eq=False)
class HarmonicExpansion:
    lmax: int
    coeffs: np.ndarray
    residual: float
    quadrature: str

    def coefficient(self, m: int, l: int) -> float:
        if not (0 <= m <= self.lmax and 0 <= l <= 2 * m):
            raise ParameterError(f"no coefficient ({m}, {l}) below lmax {self.lmax}")
        return float(self.coeffs[m * m + l])

    def block(self, m: int) -> np.ndarray:
        return self.coeffs[m * m : (m + 1) ** 2]

    def evaluate(self, directions: np.ndarray) -> np.ndarray:
        return real_sph_harm(self.lmax, directions) @ self.coeffs

    def to_schema(self) -> HarmonicExpansionOut:
        return HarmonicExpansionOut(
            lmax=self.lmax,
            quadrature=self.quadrature,
            coefficients=[
                HarmonicCoefficient(m=m, l=l, value=self.coefficient(m, l))
                for m in range(self.lmax + 1)
                for l in range(2 * m + 1)
            ],
            residual=self.residual,
        )


def _resolve(lmax: Optional[int], quad) -> tuple:
    lmax = settings.HARMONICS_LMAX if lmax is None else int(lmax)
    if lmax < 0:
        raise ParameterError(f"lmax must be >= 0, got {lmax}")
    if lmax > settings.HARMONICS_LMAX_CAP:
        raise CapacityError(
            f"lmax is capped at {settings.HARMONICS_LMAX_CAP}, got {lmax}"
        )
    if quad is None:
        quad = default_harmonic_quadrature(lmax)
    return lmax, resolve_scheme(quad, 3)


def expand_support(
    K: SupportBody, lmax: Optional[int] = None, quad=None
) -> HarmonicExpansion:
    """Coefficients of h_K by quadrature inner products against the basis"""
    if K.dim != 3:
        raise ParameterError(f"harmonic expansions live on S^2, got dim {K.dim}")
    lmax, scheme = _resolve(lmax, quad)
    return _expand(K, lmax, scheme)


def _expand(K: SupportBody, lmax: int, scheme: QuadratureScheme) -> HarmonicExpansion:
    if not isinstance(K, (Ball, SmoothBody)):
        logger.warning(
            "support function of %s has kinks; spectral accuracy degrades slowly "
            "with lmax",
            K.kind,
        )
    h = K.support_many(scheme.nodes)
    weights = np.asarray(scheme.weights)
    basis = real_sph_harm(lmax, scheme.nodes)
    coeffs = basis.T @ (weights * h)
    energy = float(weights @ (h * h))
    residual = 0.0
    if energy > 0.0:
        residual = math.sqrt(max(0.0, energy - float(coeffs @ coeffs)) / energy)
    return HarmonicExpansion(lmax, coeffs, residual, scheme.id)


def _pair(K: SupportBody, T: SupportBody, lmax, quad):
    if K.dim != 3 or T.dim != 3:
        raise ParameterError("spectral mixed volumes live in dim 3")
    lmax, scheme = _resolve(lmax, quad)
    return _expand(K, lmax, scheme), _expand(T, lmax, scheme)


def mv_spectral(
    K: SupportBody, T: SupportBody, lmax: Optional[int] = None, quad=None
) -> float:
    """V(K,T,B) = κ₃·Σ k_{m,l}·t_{m,l}·(1 - m(m+1)/2)"""
    ek, et = _pair(K, T, lmax, quad)
    total = sum(
        (1.0 - m * (m + 1) / 2.0) * float(ek.block(m) @ et.block(m))
        for m in range(ek.lmax + 1)
    )
    return kappa(3) * total


def constants(n: int) -> Constants:
    if int(n) != n or n < 2:
        raise ParameterError(f"constants need an integer n >= 2, got {n}")
    n = int(n)
    ratio = kappa(n - 1) ** 2 / (kappa(n) * kappa(n - 2))
    c_n = (n - 1) / n * ratio
    bound_ok = 1.0 < ratio < 1.0 + 1.0 / (n - 1)
    if not bound_ok:
        logger.warning("κ ratio %.12g outside (1, 1 + 1/(n-1)) for n = %d", ratio, n)
    return Constants(
        n=n,
        kappa=kappa(n),
        ratio=ratio,
        C_n=c_n,
        D_n=c_n / (1.0 - c_n) if c_n < 1.0 else None,
        bound_ok=bound_ok,
        rearrangement_ok=c_n < 1.0,
    )


def conjecture_check(
    K: SupportBody, T: SupportBody, lmax: Optional[int] = None, quad=None
) -> InequalityReport:
    """k₀₀t₀₀ >= D₃·Σ_{m>=1} ((1-m)(m+2)/2)·Σ_l k_{m,l}t_{m,l}, truncated at lmax.

    The equality budget adds twice the last nonzero block term, the size of
    the truncated alternating tail.
    """
    ek, et = _pair(K, T, lmax, quad)
    d3 = constants(3).D_n
    terms = [
        (1 - m) * (m + 2) / 2.0 * float(ek.block(m) @ et.block(m))
        for m in range(1, ek.lmax + 1)
    ]
    lhs = ek.coefficient(0, 0) * et.coefficient(0, 0)
    rhs = d3 * sum(terms)
    scale = max(abs(lhs), abs(rhs))
    last = next((t for t in reversed(terms) if abs(t) > 1e-15), 0.0)
    tol = settings.QUAD_TOL + (2.0 * d3 * abs(last) / scale if scale > 0 else 0.0)
    return inequality_report(
        "conjecture",
        lhs,
        rhs,
        tol,
        inputs={"K": _describe(K), "T": _describe(T), "lmax": ek.lmax},
        notes=["numerical evidence on truncated expansions"],
        details={
            "D_3": d3,
            "block_terms": terms,
            "residual_K": ek.residual,
            "residual_T": et.residual,
            "quadrature": ek.quadrature,
        },
    )
