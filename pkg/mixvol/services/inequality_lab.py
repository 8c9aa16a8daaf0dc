# mixvol/services/inequality_lab.py
import logging
import math
from typing import Dict, Optional, Sequence, Tuple

import numpy as np

from mixvol.config import settings
from mixvol.errors import ParameterError, UndefinedValueError
from mixvol.schemas.reports import InequalityReport, Verdict
from mixvol.services.bodies import (
    Ball,
    Body,
    Direction,
    Polytope,
    Segment,
    TruncatedPrism,
    Zonotope,
    as_direction,
    flatten,
    minkowski_sum,
)
from mixvol.services.hull import monotone_chain
from mixvol.services.mixed_volume import (
    BodyArgs,
    first_variation,
    info,
    info_of_sum,
    mixed_volume,
    mstar,
    segment_mv,
)
from mixvol.services.radii import circumradius, inner_outer_radii
from mixvol.services.reports import inequality_report
from mixvol.services.sphere import great_circle_scheme, kappa, resolve_scheme

logger = logging.getLogger(__name__)

# C_3 = (2/3)·κ₂²/(κ₃κ₁)
C3 = math.pi / 4.0


def _require_dim(name: str, dims: Sequence[int], *bodies: Body) -> int:
    n = bodies[0].dim
    if any(K.dim != n for K in bodies):
        raise ParameterError(f"{name}: bodies live in different dimensions")
    if n not in dims:
        raise ParameterError(f"{name} is defined in dim {dims}, got {n}")
    return n


def _uses_ball(*bodies: Body) -> bool:
    return any(isinstance(K, Ball) for K in bodies)


def _line_direction(K: Body) -> Optional[np.ndarray]:
    """Unit direction of a body lying in a line; None for a point"""
    if isinstance(K, Segment):
        return None if K.length == 0 else (K.b - K.a) / K.length
    pts = np.asarray(K.vertex_array(), dtype=np.float64)
    spread = pts - pts.mean(axis=0)
    if np.abs(spread).max() == 0.0:
        return None
    _, _, vt = np.linalg.svd(spread)
    return vt[0]


def _parallel(u: Optional[np.ndarray], v: Optional[np.ndarray], tol=1e-9) -> bool:
    if u is None or v is None:
        return True
    return abs(u[0] * v[1] - u[1] * v[0]) <= tol


def _zonotope_of(Z: Body) -> Zonotope:
    if isinstance(Z, Segment):
        return Z.as_zonotope()
    if isinstance(Z, Zonotope):
        return Z
    raise ParameterError(f"expected a zonotope, a segment or a ball, got {Z.kind}")


def thm2_check(K: Body, Z: Body, quad=None) -> InequalityReport:
    """V(K,B,B)·V(Z,B,B) >= C₃·κ₃·V(K,Z,B) for a zonotope (or ball) Z in R^3.

    Zonotope pieces are summed per generator g with weight |g|: V([0,ĝ],B,B)
    is π/3 and V(K,[0,ĝ],B) is a planar mixed volume of the projections.
    """
    _require_dim("thm2_check", (3,), K, Z)
    scheme = resolve_scheme(quad, 3)
    k3 = kappa(3)
    m_k = mstar(K, scheme)
    v_kbb = k3 * m_k
    reduction = []
    if isinstance(Z, Ball):
        v_zbb = k3 * Z.radius
        v_kzb = Z.radius * k3 * m_k
        orthogonal = False
    else:
        Z = _zonotope_of(Z)
        v_zbb, v_kzb = 0.0, 0.0
        orthogonal = True
        for g in Z.generators:
            length = float(np.linalg.norm(g))
            if length == 0.0:
                continue
            u = g / length
            v_zbb += length * math.pi / 3.0
            v_kzb += length * segment_mv(u, [(K, 1), (Ball.unit(3), 1)])
            width = K.support(u) + K.support(-u)
            orthogonal &= width <= 1e-9 * max(1.0, m_k)
            circle = great_circle_scheme(u, settings.CIRCLE_NODES)
            circle_mean = circle.integrate(K.support_many(circle.nodes))
            reduction.append(
                {
                    "length": length,
                    "circle_mean": circle_mean,
                    "bound": C3 * circle_mean,
                    "holds": m_k >= C3 * circle_mean * (1.0 - settings.QUAD_TOL),
                }
            )
    lhs = v_kbb * v_zbb
    rhs = C3 * k3 * v_kzb
    report = inequality_report(
        "thm2",
        lhs,
        rhs,
        settings.QUAD_TOL,
        inputs={"K": K, "Z": Z, "quadrature": scheme.id},
        equality_case="orthogonal" if orthogonal and reduction else None,
        details={
            "mstar_K": m_k,
            "V_KBB": v_kbb,
            "V_ZBB": v_zbb,
            "V_KZB": v_kzb,
            "quadrature": scheme.id,
            "reduction": reduction,
        },
    )
    if report.verdict == Verdict.equality and report.equality_case is None:
        report.notes.append(
            "equality within the quadrature budget, bodies not orthogonal"
        )
    return report


def prop13_check(
    A: Body, T: Body, quad=None, delta: float = 1.0
) -> Tuple[InequalityReport, InequalityReport]:
    """Both forms of monotonicity of I under adding T: the mixed-volume form and
    I(A+T) >= I(A). With `delta`, A is replaced by A/delta first."""
    n = _require_dim("prop13_check", (2, 3), A, T)
    if delta <= 0.0:
        raise ParameterError(f"delta must be positive, got {delta}")
    if delta != 1.0:
        A = A.scale(1.0 / delta)
    if A.is_degenerate():
        raise ParameterError("prop13_check needs a full-dimensional A")
    tol = settings.QUAD_TOL if n == 3 and _uses_ball(A, T) else settings.EXACT_TOL
    inputs = {"A": A, "T": T, "delta": delta, "quadrature": quad}
    deriv = first_variation(A, T, quad)
    mixed_form = inequality_report(
        "prop13_i",
        deriv.W0 * deriv.V1,
        (n - 1) / n * deriv.W1 * deriv.V0,
        tol,
        inputs=inputs,
        details={"first_variation": deriv},
    )
    info_form = inequality_report(
        "prop13_ii",
        info_of_sum(A, T, quad),
        info(A),
        tol,
        inputs=inputs,
    )
    if mixed_form.verdict == Verdict.violated and info_form.verdict == Verdict.violated:
        logger.info("both monotonicity forms fail for this (A, T)")
    return mixed_form, info_form


def counterexample_condition(n: int, eps: float, M: float) -> Tuple[float, float]:
    """The two sides of the sufficient condition for I(A) > I(A|u)"""
    lhs = 1.0 / (M * (n - 1)) + eps ** (n - 1) / math.factorial(n)
    rhs = (
        eps ** (n - 2)
        / (2.0 * math.factorial(n - 1))
        * (1.0 - math.sqrt(n) / (n - 1))
    )
    return lhs, rhs


def counterexample_verify(n: int, eps: float, M: float) -> InequalityReport:
    """I(A|u) >= I(A) for the truncated prism A and u = e_n, expected to fail.

    The closed forms hold for any n; in dim 3 the prism is also rebuilt as
    an explicit polytope and its I(A) recomputed by the hull pipeline.
    """
    if int(n) != n or n < 3:
        raise ParameterError(f"the counterexample needs n >= 3, got {n}")
    n = int(n)
    A = TruncatedPrism(n, eps, M)
    cond_lhs, cond_rhs = counterexample_condition(n, eps, M)
    feasible = cond_lhs < cond_rhs
    info_a = A.volume() / A.surface_area()
    info_proj = 1.0 / (2.0 * (n - 1))
    details: Dict[str, object] = {
        "condition_lhs": cond_lhs,
        "condition_rhs": cond_rhs,
        "feasible": feasible,
        "volume": A.volume(),
        "surface_area": A.surface_area(),
        "facet_areas": A.facet_areas(),
        "info_A": info_a,
        "info_projection": info_proj,
    }
    notes = []
    if n == 3:
        poly = Polytope(A.vertex_array())
        info_poly = info(poly)
        agree = abs(info_poly - info_a) <= 1e-9 * abs(info_a)
        details["polytope_info"] = info_poly
        details["pipelines_agree"] = agree
        if not agree:
            logger.warning(
                "closed-form I(A)=%.12g disagrees with the hull pipeline %.12g",
                info_a,
                info_poly,
            )
        deriv = first_variation(poly, Segment([0.0, 0.0, 0.0], [0.0, 0.0, 1.0]))
        details["first_variation"] = deriv
    verdict = None
    if not feasible:
        verdict = Verdict.inconclusive
        notes.append(
            f"(eps, M) = ({eps}, {M}) fails the feasibility condition: "
            f"{cond_lhs:.6g} >= {cond_rhs:.6g}"
        )
    report = inequality_report(
        "counterexample",
        info_proj,
        info_a,
        settings.EXACT_TOL,
        inputs={"n": n, "eps": eps, "M": M},
        verdict=verdict,
        notes=notes,
        details=details,
    )
    logger.info(
        "truncated prism (%d, %g, %g): I(A)=%.6f, I(A|u)=%.6f, %s",
        n,
        eps,
        M,
        info_a,
        info_proj,
        report.verdict.value,
    )
    return report


def counterexample_scan(
    n: int,
    eps_grid: Optional[Sequence[float]] = None,
    M_grid: Optional[Sequence[float]] = None,
) -> InequalityReport:
    """Feasible (eps, M) of the prism family with the largest I(A)/I(A|u) - 1"""
    if int(n) != n or n < 3:
        raise ParameterError(f"the counterexample needs n >= 3, got {n}")
    eps_grid = np.linspace(0.05, 0.95, 19) if eps_grid is None else eps_grid
    M_grid = np.geomspace(2.0, 1e5, 25) if M_grid is None else M_grid
    best, best_margin, feasible_count = None, -math.inf, 0
    for eps in eps_grid:
        for M in M_grid:
            lhs, rhs = counterexample_condition(n, eps, M)
            if lhs >= rhs:
                continue
            feasible_count += 1
            A = TruncatedPrism(n, float(eps), float(M))
            margin = A.volume() / A.surface_area() * 2.0 * (n - 1) - 1.0
            if margin > best_margin:
                best, best_margin = (float(eps), float(M)), margin
    if best is None:
        raise UndefinedValueError(f"no feasible (eps, M) in the scan grid for n = {n}")
    report = counterexample_verify(n, *best)
    report.details["scan"] = {
        "grid_size": len(eps_grid) * len(M_grid),
        "feasible": feasible_count,
        "eps": best[0],
        "M": best[1],
        "relative_excess": best_margin,
    }
    return report


def bonnesen_check(T: Body, A: Body) -> InequalityReport:
    """Sign of P(λ) = V(A,A)λ² + 2V(T,A)λ + V(T,T) at -R and -r, and the
    ordering of its roots around them, with r, R the radii of T relative to A."""
    _require_dim("bonnesen_check", (2,), T, A)
    if T.is_degenerate() or A.is_degenerate():
        raise ParameterError("bonnesen_check needs two full-dimensional bodies")
    a = A.volume()
    b = mixed_volume(BodyArgs.of(T, A))
    c = T.volume()
    radii = inner_outer_radii(T, A)
    r, R = radii.r, radii.R

    def P(lam: float) -> float:
        return a * lam**2 + 2.0 * b * lam + c

    disc = max(b * b - a * c, 0.0)
    lam_minus = (-b - math.sqrt(disc)) / a
    lam_plus = (-b + math.sqrt(disc)) / a
    scale = a * R**2 + 2.0 * b * R + c
    slack = settings.EXACT_TOL * max(1.0, R)
    relations = {
        "P(-R) <= 0": P(-R) <= settings.EXACT_TOL * scale,
        "P(-r) <= 0": P(-r) <= settings.EXACT_TOL * scale,
        "lambda- <= -R": lam_minus <= -R + slack,
        "-R <= -r <= lambda+": -R <= -r + slack and -r <= lam_plus + slack,
    }
    report = inequality_report(
        "bonnesen",
        0.0,
        max(P(-R), P(-r)),
        settings.EXACT_TOL,
        inputs={"T": T, "A": A},
        scale=scale,
        verdict=None if all(relations.values()) else Verdict.violated,
        details={
            "V_AA": a,
            "V_TA": b,
            "V_TT": c,
            "radii": radii,
            "P(-R)": P(-R),
            "P(-r)": P(-r),
            "roots": [lam_minus, lam_plus],
            "relations": relations,
            "V_TA >= (R/2) V_AA": b >= 0.5 * R * a * (1.0 - settings.EXACT_TOL),
        },
    )
    if not radii.verified:
        report.notes.append("radius witnesses failed the containment check")
    return report


def _is_parallelogram_along(A: Body, u: np.ndarray, v: np.ndarray) -> bool:
    if isinstance(A, Ball):
        return False
    ccw = monotone_chain(A.vertex_array())
    if len(ccw) != 4:
        return False
    edges = np.roll(ccw, -1, axis=0) - ccw
    edges /= np.linalg.norm(edges, axis=1, keepdims=True)
    return all(_parallel(e, u) or _parallel(e, v) for e in edges)


def planar_equality_case(K: Body, T: Body, A: Body) -> Optional[str]:
    """Which equality configuration (K, T, A) is in, if any"""
    if A.is_point():
        return "case_iii"
    if K.is_point() or T.is_point():
        return "point_argument"
    lines = {
        name: X.affine_dimension() <= 1 for name, X in (("K", K), ("T", T), ("A", A))
    }
    if lines["K"] and lines["T"] and not lines["A"]:
        u, v = _line_direction(K), _line_direction(T)
        if not _parallel(u, v) and _is_parallelogram_along(A, u, v):
            return "case_i"
    if lines["A"]:
        a = _line_direction(A)
        for X in (K, T):
            if X.affine_dimension() <= 1 and _parallel(_line_direction(X), a):
                return "case_ii"
    return None


def prop51_check(K: Body, T: Body, A: Body) -> InequalityReport:
    """V(K,A)·V(T,A) >= ½·V(K,T)·V(A,A) in the plane"""
    _require_dim("prop51_check", (2,), K, T, A)
    v_ka = mixed_volume(BodyArgs.of(K, A))
    v_ta = mixed_volume(BodyArgs.of(T, A))
    v_kt = mixed_volume(BodyArgs.of(K, T))
    v_aa = A.volume()
    configuration = planar_equality_case(K, T, A)
    report = inequality_report(
        "prop51",
        v_ka * v_ta,
        0.5 * v_kt * v_aa,
        settings.EXACT_TOL,
        inputs={"K": K, "T": T, "A": A},
        details={
            "V_KA": v_ka,
            "V_TA": v_ta,
            "V_KT": v_kt,
            "V_AA": v_aa,
            "configuration": configuration,
        },
    )
    if report.verdict == Verdict.equality:
        report.equality_case = configuration
        if configuration is None:
            report.notes.append("equality without a recognized configuration")
    return report


def prop53_check(K: Body, T: Body) -> InequalityReport:
    """V(T,B)·V(K,B) >= (2/π)·V(T,K)·V(B,B) in the plane, with L(T) >= 4R(T)"""
    _require_dim("prop53_check", (2,), K, T)
    length_k, length_t = K.surface_area(), T.surface_area()
    v_tk = mixed_volume(BodyArgs.of(T, K))
    radius = circumradius(T)
    lemma_ok = length_t >= 4.0 * radius - 1e-9
    orthogonal = False
    if K.affine_dimension() == 1 and T.affine_dimension() == 1:
        orthogonal = abs(float(_line_direction(K) @ _line_direction(T))) <= 1e-9
    report = inequality_report(
        "prop53",
        (length_t / 2.0) * (length_k / 2.0),
        2.0 * v_tk,
        settings.EXACT_TOL,
        inputs={"K": K, "T": T},
        equality_case="orthogonal_segments" if orthogonal else None,
        verdict=None if lemma_ok else Verdict.violated,
        details={
            "L_T": length_t,
            "L_K": length_k,
            "V_TK": v_tk,
            "circumradius_T": radius,
            "L_T - 4R_T": length_t - 4.0 * radius,
            "perimeter_lemma": lemma_ok,
        },
    )
    if not lemma_ok:
        report.notes.append("L(T) >= 4R(T) failed")
    return report


def cor52_check(A: Body, T: Body) -> InequalityReport:
    """I(A+T) > I(A) in the plane"""
    _require_dim("cor52_check", (2,), A, T)
    if A.is_degenerate():
        raise ParameterError("cor52_check needs a full-dimensional A")
    report = inequality_report(
        "cor52",
        info_of_sum(A, T),
        info(A),
        settings.EXACT_TOL,
        inputs={"A": A, "T": T},
    )
    if T.is_point():
        report.notes.append("T is a point, so A + T is a translate of A")
    return report


def symmetrization_check(K: Body, u: Direction, quad=None) -> InequalityReport:
    """M*(K) = M*((K + Π_uK)/2) >= M*(K|u)"""
    n = _require_dim("symmetrization_check", (2, 3), K)
    v = as_direction(u, n)
    scheme = resolve_scheme(quad, n)
    m_k = mstar(K, scheme)
    symmetral = minkowski_sum(K, K.reflect(v)).scale(0.5)
    m_sym = mstar(symmetral, scheme)
    m_proj = mstar(flatten(K, v), scheme)
    preserved = abs(m_sym - m_k) <= settings.QUAD_TOL * max(abs(m_k), 1e-12)
    return inequality_report(
        "symmetrization",
        m_k,
        m_proj,
        settings.QUAD_TOL,
        inputs={"K": K, "u": v, "quadrature": scheme.id},
        verdict=None if preserved else Verdict.violated,
        details={"mstar_K": m_k, "mstar_symmetral": m_sym, "mstar_projection": m_proj},
    )


def dimension_reduction_check(
    K: Body, u: Direction = (0.0, 0.0, 1.0), quad=None
) -> InequalityReport:
    """For planar K in a plane parallel to u⊥: the S² mean of h_K equals
    (c₁₃/c₁₂)·κ₂/κ₃ times its mean over the great circle of u⊥."""
    _require_dim("dimension_reduction_check", (3,), K)
    v = as_direction(u, 3)
    scheme = resolve_scheme(quad, 3)
    width = K.support(v) + K.support(-v)
    m3 = mstar(K, scheme)
    if width > 1e-9 * max(1.0, m3):
        raise ParameterError(f"K is not flat along u (width {width:.3g})")
    circle = great_circle_scheme(v, settings.CIRCLE_NODES)
    m2 = circle.integrate(K.support_many(circle.nodes))

    def c(i: int, k: int) -> float:
        return kappa(k - i) / math.comb(k, i)

    factor = c(1, 3) / c(1, 2) * kappa(2) / kappa(3)
    return inequality_report(
        "dimension_reduction",
        m3,
        factor * m2,
        settings.QUAD_TOL,
        inputs={"K": K, "u": v, "quadrature": scheme.id},
        details={"mstar_3": m3, "mstar_2": m2, "factor": factor},
    )


def minkowski_first_spot_check(K: Body, quad=None) -> InequalityReport:
    """V(K,B,B)² >= V(K,K,B)·V(B,B,B) in R^3"""
    _require_dim("minkowski_first_spot_check", (3,), K)
    scheme = resolve_scheme(quad, 3)
    k3 = kappa(3)
    v_kbb = k3 * mstar(K, scheme)
    v_kkb = K.surface_area() / 3.0
    return inequality_report(
        "minkowski_first",
        v_kbb**2,
        v_kkb * k3,
        settings.QUAD_TOL,
        inputs={"K": K, "quadrature": scheme.id},
        details={"V_KBB": v_kbb, "V_KKB": v_kkb},
    )
