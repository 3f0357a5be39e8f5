"""Weighted Fermat-Torricelli points in the plane, with certificates.

A location w minimizes the weighted distance sum exactly when the vector of
weighted displacements (alpha_i * (z_i - w))_i is orthogonal, in the sum
norm, to the weight vector.  Concretely the weighted unit directions from w
to the configuration points must sum to something no larger than the slack
contributed by points coinciding with w.  Every solver in this module
returns that test's outcome as a certificate next to the location.

Closed forms cover three points (case dispatch on the weights, then vertex
angle tests, then an inscribed-arc construction) and four points with unit
weights (a hull vertex, or the diagonal crossing).  The general solver is a
reweighting iteration with a certified vertex-escape rule and a quadratic
polish step.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from typing import Optional, Sequence, Union

import numpy as np

from . import geom
from .bjorth import SupportCertificate, build_l1_certificate
from .errors import (
    CertificatePreconditionFailed,
    EmptyInput,
    LengthMismatch,
    MaxIterationsExceeded,
    MixedSigns,
    NotOrthogonal,
    VertexPreconditionFailed,
)
from .tolerances import EPS_CLASS, EPS_REL, spread


@dataclass(frozen=True)
class WeightedConfiguration:
    """Pairwise distinct planar points with positive weights."""

    points: tuple[complex, ...]
    weights: tuple[float, ...]

    def __post_init__(self):
        pts = tuple(complex(z) for z in self.points)
        wts = tuple(float(a) for a in self.weights)
        if not pts:
            raise EmptyInput("a configuration needs at least one point")
        if len(pts) != len(wts):
            raise LengthMismatch("one weight per point")
        geom.require_finite(*pts)
        for a in wts:
            if not (math.isfinite(a) and a > 0.0):
                raise ValueError(f"weights must be positive and finite, got {a!r}")
        geom.ensure_distinct(pts)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "weights", wts)

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def diameter(self) -> float:
        return spread(self.points)

    @property
    def total_weight(self) -> float:
        return sum(self.weights)


def ft_objective(config: WeightedConfiguration, w: complex) -> float:
    w = complex(w)
    return sum(a * abs(z - w) for z, a in zip(config.points, config.weights))


def ft_certificate(
    config: WeightedConfiguration, w: complex, tol: Optional[float] = None
) -> SupportCertificate:
    """Optimality certificate for w as weighted Fermat-Torricelli point.

    The pass condition is

        |sum over z_i != w of alpha_i * conj(z_i - w)/|z_i - w||
            <= sum over z_i = w of alpha_i  +  tol * total weight

    with coincidence decided by the configuration's classification band.
    ``tol`` is relative and defaults to EPS_REL.  When w coincides with
    exactly one configuration point the certificate's ``gamma`` is the free
    coefficient spent there.
    """
    w = complex(w)
    geom.require_finite(w)
    if tol is None:
        tol = EPS_REL
    band = EPS_CLASS * config.diameter
    mask = [abs(z - w) <= band for z in config.points]
    x = tuple(a * (z - w) for z, a in zip(config.points, config.weights))
    return build_l1_certificate(x, config.weights, mask, tol * config.total_weight)


# ---------------------------------------------------------------------------
# solve results


class FtCase(enum.Enum):
    DOMINANT_WEIGHT = "dominant-weight"
    SEGMENT_OF_SOLUTIONS = "segment-of-solutions"
    VERTEX = "vertex"
    INTERIOR = "interior"
    DIAGONAL_INTERSECTION = "diagonal-intersection"
    HULL_VERTEX = "hull-vertex"
    ITERATIVE = "iterative"


@dataclass(frozen=True)
class FtPoint:
    location: complex


@dataclass(frozen=True)
class FtSegment:
    start: complex
    end: complex


@dataclass(frozen=True)
class FtSolveResult:
    solution: Union[FtPoint, FtSegment]
    objective: float
    case: FtCase
    certificate: SupportCertificate
    vertex: Optional[int] = None
    vertex_angle: Optional[float] = None
    angles: Optional[tuple[float, float]] = None

    @property
    def location(self) -> complex:
        """A representative optimal point (the start for segments)."""
        if isinstance(self.solution, FtPoint):
            return self.solution.location
        return self.solution.start


def _point_result(config, w, case, **extra) -> FtSolveResult:
    cert = ft_certificate(config, w)
    return FtSolveResult(
        solution=FtPoint(w),
        objective=ft_objective(config, w),
        case=case,
        certificate=cert,
        **extra,
    )


# ---------------------------------------------------------------------------
# three points


def _on_segment(p: complex, a: complex, b: complex, tol: float) -> bool:
    d = b - a
    L = abs(d)
    if L == 0.0:
        return abs(p - a) <= tol
    t = ((p - a) / d).real
    t = min(1.0, max(0.0, t))
    return abs(p - (a + t * d)) <= tol


def _angle_threshold(a_i: float, a_j: float, a_k: float) -> float:
    # cosine bound at the vertex carrying weight a_i
    return (a_i * a_i - a_j * a_j - a_k * a_k) / (2.0 * a_j * a_k)


def _subtend_circles(a: complex, b: complex, psi: float):
    """Circles whose arcs see the chord [a, b] under the angle psi."""
    chord = abs(b - a)
    s = math.sin(psi)
    if s <= 1e-9:
        return ()
    radius = chord / (2.0 * s)
    mid = 0.5 * (a + b)
    normal = 1j * (b - a) / chord
    h = radius * math.cos(psi)
    if abs(h) <= 1e-15 * radius:
        return (geom.Circle(mid, radius),)
    return (geom.Circle(mid + h * normal, radius), geom.Circle(mid - h * normal, radius))


def solve_ft3_weighted(
    z1: complex, z2: complex, z3: complex, weights: Sequence[float]
) -> FtSolveResult:
    """Weighted Fermat-Torricelli point of three distinct points.

    Dispatch: a dominant weight pins the solution to its point; the
    boundary case (one weight equal to the sum of the others) gives either
    a whole segment of solutions or that point alone; under the triangle
    condition either some vertex passes the slack test or the solution is
    interior, constructed by intersecting two inscribed-angle arcs.
    """
    config = WeightedConfiguration((z1, z2, z3), tuple(weights))
    zs = config.points
    ws = config.weights
    wsum = config.total_weight
    band_w = EPS_CLASS * wsum
    band_len = EPS_CLASS * config.diameter

    for i in range(3):
        j, k = [m for m in range(3) if m != i]
        excess = ws[i] - ws[j] - ws[k]
        if excess > band_w:
            return _point_result(config, zs[i], FtCase.DOMINANT_WEIGHT, vertex=i)
        if abs(excess) <= band_w:
            special = _boundary_ft3(config, i, j, k, band_len)
            if special is not None:
                return special
            # certificate refused the band classification; the vertex and
            # interior machinery below settles the instance instead
            break

    # vertex slack tests first
    best = None
    for i in range(3):
        j, k = [m for m in range(3) if m != i]
        forced = ws[j] * _unit(zs[j] - zs[i]).conjugate() + ws[k] * _unit(
            zs[k] - zs[i]
        ).conjugate()
        margin = abs(forced) - ws[i]
        if best is None or margin < best[0]:
            best = (margin, i, j, k)
    margin, i, j, k = best
    if margin <= EPS_REL * wsum:
        theta = geom.directed_angle(zs[i], zs[j], zs[k])
        return _point_result(
            config, zs[i], FtCase.VERTEX, vertex=i, vertex_angle=theta
        )

    w = _interior_ft3(config)
    if w is None:
        w = _iterate(config, EPS_REL, 20000)[0]
    theta = geom.directed_angle(w, zs[0], zs[1])
    phi = geom.directed_angle(w, zs[0], zs[2])
    return _point_result(config, w, FtCase.INTERIOR, angles=(theta, phi))


def _unit(z: complex) -> complex:
    return z / abs(z)


def _boundary_ft3(
    config: WeightedConfiguration, i: int, j: int, k: int, band_len: float
) -> Optional[FtSolveResult]:
    """Classify the boundary-weight case alpha_i = alpha_j + alpha_k.

    A whole segment of solutions appears only when the lighter points line
    up behind the heavy one; otherwise the heavy point wins alone.  Returns
    None when the certificate rejects the classification, which happens
    only for weights just inside the band but beyond the certificate
    tolerance.
    """
    zs = config.points
    seg = None
    if _on_segment(zs[j], zs[i], zs[k], band_len):
        seg = FtSegment(zs[i], zs[j])
    elif _on_segment(zs[k], zs[i], zs[j], band_len):
        seg = FtSegment(zs[i], zs[k])
    if seg is None:
        result = _point_result(config, zs[i], FtCase.DOMINANT_WEIGHT, vertex=i)
        return result if result.certificate.passed else None
    cert = ft_certificate(config, 0.5 * (seg.start + seg.end))
    if not cert.passed:
        return None
    return FtSolveResult(
        solution=seg,
        objective=ft_objective(config, seg.start),
        case=FtCase.SEGMENT_OF_SOLUTIONS,
        certificate=cert,
        vertex=i,
    )


def _interior_ft3(config: WeightedConfiguration) -> Optional[complex]:
    """Interior solution by intersecting two inscribed-angle loci.

    Both loci pass through z1, so each circle pair meets in z1 plus at most
    one further point; the certificate picks the root where the weighted
    directions cancel.  Returns None when the arcs are too flat to trust.
    """
    z1, z2, z3 = config.points
    a1, a2, a3 = config.weights
    t12 = _angle_threshold(a3, a1, a2)
    t13 = _angle_threshold(a2, a1, a3)
    if not (-1.0 < t12 < 1.0 and -1.0 < t13 < 1.0):
        return None
    circles_a = _subtend_circles(z1, z2, math.acos(t12))
    circles_b = _subtend_circles(z1, z3, math.acos(t13))
    if not circles_a or not circles_b:
        return None
    scale = config.diameter
    best = None
    for ca in circles_a:
        for cb in circles_b:
            for cand in geom.intersect_loci(ca, cb, scale):
                cert = ft_certificate(config, cand)
                score = abs(cert.forced) - cert.slack
                if best is None or score < best[0]:
                    best = (score, cand)
    if best is None:
        return None
    score, w = best
    if score > EPS_REL * config.total_weight:
        return None
    return w


# ---------------------------------------------------------------------------
# four points, unit weights


def solve_ft4(z1: complex, z2: complex, z3: complex, z4: complex) -> FtSolveResult:
    """Fermat-Torricelli point of four distinct points with unit weights.

    A point inside the hull of the others is itself the solution;
    otherwise the points are in convex position and the solution is the
    crossing of the diagonals.
    """
    shape = geom.quadrilateral_shape(z1, z2, z3, z4)
    config = WeightedConfiguration((z1, z2, z3, z4), (1.0, 1.0, 1.0, 1.0))
    zs = config.points
    if isinstance(shape, geom.NonConvex):
        result = _point_result(
            config, zs[shape.contained], FtCase.HULL_VERTEX, vertex=shape.contained
        )
    else:
        (i0, i2), (i1, i3) = shape.diagonals
        w = geom.segment_intersection(zs[i0], zs[i2], zs[i1], zs[i3])
        if w is None:
            raise NotOrthogonal("convex quadrilateral with non-crossing diagonals")
        result = _point_result(config, w, FtCase.DIAGONAL_INTERSECTION)
    if not result.certificate.passed:
        raise NotOrthogonal("four-point solution failed its certificate")
    return result


# ---------------------------------------------------------------------------
# general n


def _vertex_margin(pts: np.ndarray, wts: np.ndarray, i: int) -> float:
    diff = np.delete(pts, i) - pts[i]
    units = diff / np.abs(diff)
    return float(abs((np.delete(wts, i) * units).sum())) - float(wts[i])


def _np_objective(pts: np.ndarray, wts: np.ndarray, w: complex) -> float:
    return float(np.abs(pts - w) @ wts)


def solve_ft_n(
    config: WeightedConfiguration, tol: float = 1e-10, max_iter: int = 10000
) -> FtSolveResult:
    """Certified iterative solver for any number of points.

    Runs the inverse-distance reweighting iteration from the weighted
    centroid, switching to a damped quadratic step once the residual is
    small.  Whenever the iterate lands on a configuration point the slack
    test decides between stopping there and stepping away along the descent
    direction.  The returned location passes ft_certificate at the given
    relative tolerance; otherwise MaxIterationsExceeded carries the best
    iterate seen.
    """
    if not (tol > 0.0):
        raise ValueError("tol must be positive")
    pts = np.asarray(config.points, dtype=complex)
    wts = np.asarray(config.weights, dtype=float)
    n = len(pts)
    wsum = float(wts.sum())
    if n == 1:
        return _point_result(config, complex(pts[0]), FtCase.ITERATIVE)

    margins = [_vertex_margin(pts, wts, i) for i in range(n)]
    i_best = int(np.argmin(margins))
    if margins[i_best] <= tol * wsum:
        return _point_result(config, complex(pts[i_best]), FtCase.ITERATIVE)

    w, ok = _iterate(config, tol, max_iter)
    cert = ft_certificate(config, w, tol)
    if not (ok and cert.passed):
        raise MaxIterationsExceeded(
            f"no certified point within {max_iter} iterations",
            location=w,
            certificate=cert,
        )
    return FtSolveResult(
        solution=FtPoint(w),
        objective=ft_objective(config, w),
        case=FtCase.ITERATIVE,
        certificate=cert,
    )


def _iterate(
    config: WeightedConfiguration, tol: float, max_iter: int
) -> tuple[complex, bool]:
    pts = np.asarray(config.points, dtype=complex)
    wts = np.asarray(config.weights, dtype=float)
    wsum = float(wts.sum())
    near_band = EPS_CLASS * config.diameter
    target = tol * wsum
    w = complex((wts * pts).sum() / wsum)
    best = (math.inf, w)
    for _ in range(max_iter):
        d = np.abs(pts - w)
        k = int(np.argmin(d))
        if d[k] <= near_band:
            if _vertex_margin(pts, wts, k) <= target:
                return complex(pts[k]), True
            w = _escape_vertex(pts, wts, k)
            continue
        units = (pts - w) / d
        pull = complex((wts * units).sum())
        rn = abs(pull)
        if rn < best[0]:
            best = (rn, w)
        if rn <= target:
            return w, True
        stepped = None
        if rn <= 1e-2 * wsum:
            stepped = _newton_step(pts, wts, w, d, units, pull, rn, near_band)
        if stepped is None:
            inv = wts / d
            stepped = complex((inv * pts).sum() / inv.sum())
            if stepped == w:
                # stalled fixed point away from every vertex; accept as is
                return w, rn <= target
        w = stepped
    return best[1], False


def _escape_vertex(pts: np.ndarray, wts: np.ndarray, k: int) -> complex:
    zk = complex(pts[k])
    diff = np.delete(pts, k) - zk
    dist = np.abs(diff)
    grad = complex((np.delete(wts, k) * (-diff / dist)).sum())  # ascent part
    v = -grad / abs(grad)
    base = _np_objective(pts, wts, zk)
    t = 0.3 * float(dist.min())
    for _ in range(60):
        cand = zk + t * v
        if _np_objective(pts, wts, cand) < base:
            return cand
        t *= 0.5
    return zk + t * v


def _newton_step(pts, wts, w, d, units, pull, rn, near_band) -> Optional[complex]:
    inv = wts / d
    ux = units.real
    uy = units.imag
    hxx = float((inv * (1.0 - ux * ux)).sum())
    hyy = float((inv * (1.0 - uy * uy)).sum())
    hxy = float((inv * (-ux * uy)).sum())
    det = hxx * hyy - hxy * hxy
    if det <= 0.0 or not math.isfinite(det):
        return None
    gx, gy = pull.real, pull.imag
    dx = (gx * hyy - gy * hxy) / det
    dy = (gy * hxx - gx * hxy) / det
    step = complex(dx, dy)
    for _ in range(8):
        cand = w + step
        dc = np.abs(pts - cand)
        if dc.min() > near_band:
            pc = complex(((pts - cand) / dc * wts).sum())
            if abs(pc) < rn:
                return cand
        step *= 0.5
    return None


# ---------------------------------------------------------------------------
# perturbations of a certified optimum


def _require_certified_interior(config: WeightedConfiguration, w: complex) -> None:
    w = complex(w)
    band = EPS_CLASS * config.diameter
    if any(abs(z - w) <= band for z in config.points):
        raise CertificatePreconditionFailed("the optimum must avoid every point")
    if not ft_certificate(config, w).passed:
        raise CertificatePreconditionFailed("w is not a certified optimum")


def addition_preserves(
    config: WeightedConfiguration, w: complex, z_new: complex, alpha_new: float
) -> bool:
    """Whether w stays optimal after adding (z_new, alpha_new).

    Happens exactly when the new point lands on w itself, since any other
    placement tilts the balanced direction sum.
    """
    _require_certified_interior(config, w)
    if not (alpha_new > 0.0):
        raise ValueError("alpha_new must be positive")
    extended = WeightedConfiguration(
        config.points + (complex(z_new),), config.weights + (float(alpha_new),)
    )
    return ft_certificate(extended, w).passed


def replacement_preserves(
    config: WeightedConfiguration, w: complex, index: int, s: complex
) -> bool:
    """Whether moving point ``index`` to s keeps w optimal.

    True exactly when s sits on the closed ray from w through the point it
    replaces, so its unit direction (and hence the direction sum) does not
    change.
    """
    _require_certified_interior(config, w)
    if not (0 <= index < config.n):
        raise IndexError("index out of range")
    w = complex(w)
    s = complex(s)
    ray = config.points[index] - w
    band = EPS_CLASS * spread(list(config.points) + [w, s])
    t = max(0.0, ((s - w).real * ray.real + (s - w).imag * ray.imag) / abs(ray) ** 2)
    return abs(s - (w + t * ray)) <= band


def decomposition_equivalence(
    config_a: WeightedConfiguration, w: complex, config_b: WeightedConfiguration
) -> bool:
    """Whether w solves the concatenation of two configurations.

    With w already optimal for the first part, this holds exactly when w
    also solves the second part alone; the direction sums add.
    """
    _require_certified_interior(config_a, w)
    merged = WeightedConfiguration(
        config_a.points + config_b.points, config_a.weights + config_b.weights
    )
    return ft_certificate(merged, w).passed


def scaled_configuration(
    config: WeightedConfiguration, w: complex, scales: Sequence[float]
) -> WeightedConfiguration:
    """Slide each point along its ray from w by a same-sign factor.

    Unit directions are preserved (or all flipped), so w stays optimal for
    the result; the returned configuration is re-certified before handing
    it back.
    """
    _require_certified_interior(config, w)
    cs = [float(c) for c in scales]
    if len(cs) != config.n:
        raise LengthMismatch("one scale per point")
    if any(c == 0.0 for c in cs):
        raise MixedSigns("scales must be nonzero")
    if any(c > 0.0 for c in cs) and any(c < 0.0 for c in cs):
        raise MixedSigns("scales must share one sign")
    w = complex(w)
    moved = tuple(w + c * (z - w) for z, c in zip(config.points, cs))
    out = WeightedConfiguration(moved, config.weights)
    if not ft_certificate(out, w).passed:
        raise CertificatePreconditionFailed("scaled configuration lost the optimum")
    return out


class _Undetermined:
    """Marker for the weight band the vertex-extension result leaves open."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "UNDETERMINED"


UNDETERMINED = _Undetermined()


def extend_at_vertex(
    config: WeightedConfiguration, w: complex, alpha_new: float
):
    """Add a point keeping a vertex optimum, when the new weight allows it.

    With w sitting on configuration point i0, a new weight up to the weight
    at i0 can always be placed so that w stays optimal; the construction
    spends the free coefficient gamma reported by the certificate.  Weights
    above twice the vertex weight are impossible (returns None) and the
    band in between is reported as UNDETERMINED rather than guessed.
    """
    w = complex(w)
    if not (alpha_new > 0.0):
        raise ValueError("alpha_new must be positive")
    band = EPS_CLASS * config.diameter
    hits = [i for i, z in enumerate(config.points) if abs(z - w) <= band]
    if len(hits) != 1:
        raise VertexPreconditionFailed("w must equal exactly one configuration point")
    i0 = hits[0]
    a0 = config.weights[i0]
    cert = ft_certificate(config, w)
    if not cert.passed:
        raise VertexPreconditionFailed("w is not a certified optimum")
    if alpha_new > 2.0 * a0 * (1.0 + EPS_CLASS):
        return None
    if alpha_new > a0 * (1.0 + EPS_CLASS):
        return UNDETERMINED
    gamma = cert.gamma if cert.gamma is not None else 0j
    ratio = alpha_new / a0
    if abs(gamma) > EPS_REL:
        delta = gamma * (1.0 - ratio / abs(gamma))
    else:
        delta = complex(ratio, 0.0)
    z_new = w + (a0 / alpha_new) * (gamma - delta).conjugate()
    extended = WeightedConfiguration(
        config.points + (z_new,), config.weights + (float(alpha_new),)
    )
    if not ft_certificate(extended, w).passed:
        raise VertexPreconditionFailed("extension lost the optimum")
    return z_new
