"""Planar geometric primitives over complex coordinates.

Points of the plane are plain ``complex`` numbers throughout the package.
Angles are in radians, normalized to [0, 2*pi), positive orientation
counterclockwise.  Every predicate is banded by the shared tolerance model
in :mod:`planarloc.tolerances`, scaled by the bounding-box diagonal of the
points involved, so all operations are similarity-invariant in practice.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import (
    CoincidentPoints,
    CollinearPoints,
    DuplicatePoints,
    EmptyInput,
    NotUnimodular,
    OverlappingSegments,
)
from .tolerances import EPS_CLASS, spread

TWO_PI = 2.0 * math.pi


def require_finite(*zs: complex) -> None:
    for z in zs:
        z = complex(z)
        if not (math.isfinite(z.real) and math.isfinite(z.imag)):
            raise ValueError(f"non-finite coordinate {z!r}")


def normalize_angle(theta: float) -> float:
    """Fold an angle into [0, 2*pi)."""
    theta = math.fmod(theta, TWO_PI)
    if theta < 0.0:
        theta += TWO_PI
    if theta >= TWO_PI:
        # fmod can land exactly on the upper endpoint after the correction
        theta -= TWO_PI
    return theta


def _cross(o: complex, a: complex, b: complex) -> float:
    return (a.real - o.real) * (b.imag - o.imag) - (a.imag - o.imag) * (b.real - o.real)


def _dot(o: complex, a: complex, b: complex) -> float:
    return (a.real - o.real) * (b.real - o.real) + (a.imag - o.imag) * (b.imag - o.imag)


def directed_angle(u: complex, v: complex, w: complex) -> float:
    """Rotation in [0, 2*pi) carrying the ray u->v onto the ray u->w.

    The value theta satisfies (w - u) = c * (v - u) * exp(i*theta) for some
    real c > 0.  Raises CoincidentPoints when either ray is undefined.
    """
    require_finite(u, v, w)
    u, v, w = complex(u), complex(v), complex(w)
    scale = spread([u, v, w])
    band = EPS_CLASS * scale
    if abs(v - u) <= band or abs(w - u) <= band:
        raise CoincidentPoints("rays at a coincident point pair have no angle")
    return normalize_angle(cmath.phase((w - u) / (v - u)))


def ensure_distinct(points: Sequence[complex], scale: Optional[float] = None) -> None:
    """Raise DuplicatePoints when any two points sit closer than the band."""
    pts = [complex(z) for z in points]
    require_finite(*pts)
    if scale is None:
        scale = spread(pts)
    band = EPS_CLASS * scale
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if abs(pts[i] - pts[j]) <= band:
                raise DuplicatePoints(f"points {i} and {j} coincide within tolerance")


# ---------------------------------------------------------------------------
# convex hulls and membership


def _hull_indices(pts: Sequence[complex], eps_area: float) -> list[int]:
    """Monotone-chain hull, counterclockwise, as indices into pts.

    Points within eps_area of an edge (in cross-product units) are treated
    as collinear and dropped, so the returned polygon is strictly convex.
    """
    order = sorted(range(len(pts)), key=lambda i: (pts[i].real, pts[i].imag, i))
    # drop exact coordinate duplicates, keep the first occurrence
    uniq: list[int] = []
    for i in order:
        if uniq and pts[uniq[-1]] == pts[i]:
            continue
        uniq.append(i)
    if len(uniq) <= 2:
        return uniq

    def build(seq):
        out: list[int] = []
        for i in seq:
            while len(out) >= 2 and _cross(pts[out[-2]], pts[out[-1]], pts[i]) <= eps_area:
                out.pop()
            out.append(i)
        return out

    lower = build(uniq)
    upper = build(reversed(uniq))
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 2:
        hull = uniq[:1] + uniq[-1:]
    return hull


def convex_hull_membership(
    p: complex, pts: Sequence[complex]
) -> Optional[tuple[float, ...]]:
    """Convex coefficients expressing p over pts, or None when p is outside.

    The hull is taken boundary inclusive with the classification band.  On
    success the tuple t has one entry per input point, t_i >= 0 (up to the
    band, clamped), sum(t) = 1 and sum(t_i * pts_i) = p within the band.
    """
    zs = [complex(z) for z in pts]
    if not zs:
        raise EmptyInput("membership in the hull of no points")
    p = complex(p)
    require_finite(p, *zs)
    scale = spread(zs + [p])
    if scale == 0.0:
        # every input point equals p
        t = [0.0] * len(zs)
        t[0] = 1.0
        return tuple(t)
    tol = EPS_CLASS * scale
    hull = _hull_indices(zs, EPS_CLASS * scale * scale)

    if len(hull) == 1:
        if abs(p - zs[hull[0]]) <= tol:
            t = [0.0] * len(zs)
            t[hull[0]] = 1.0
            return tuple(t)
        return None

    if len(hull) == 2:
        a, b = zs[hull[0]], zs[hull[1]]
        d = b - a
        L = abs(d)
        if L == 0.0:
            return None
        # distance from the supporting line, then the segment parameter
        if abs(_cross(a, b, p)) / L > tol:
            return None
        s = _dot(a, b, p) / (L * L)
        if s < -tol / L or s > 1.0 + tol / L:
            return None
        s = min(1.0, max(0.0, s))
        t = [0.0] * len(zs)
        t[hull[0]] = 1.0 - s
        t[hull[1]] = s
        return tuple(t)

    # proper polygon, counterclockwise
    m = len(hull)
    for k in range(m):
        a = zs[hull[k]]
        b = zs[hull[(k + 1) % m]]
        if _cross(a, b, p) < -tol * abs(b - a):
            return None

    # triangle fan from hull[0]; pick the fan triangle holding p
    best = None
    a = zs[hull[0]]
    for k in range(1, m - 1):
        b = zs[hull[k]]
        c = zs[hull[k + 1]]
        det = _cross(a, b, c)
        if abs(det) <= EPS_CLASS * scale * scale:
            continue
        l1 = _cross(a, p, c) / det
        l2 = _cross(a, b, p) / det
        l0 = 1.0 - l1 - l2
        low = min(l0, l1, l2)
        if best is None or low > best[0]:
            best = (low, k, l0, l1, l2)
    if best is None:
        return None
    low, k, l0, l1, l2 = best
    if low < -EPS_CLASS:
        return None
    t = [0.0] * len(zs)
    t[hull[0]] += max(l0, 0.0)
    t[hull[k]] += max(l1, 0.0)
    t[hull[k + 1]] += max(l2, 0.0)
    total = sum(t)
    return tuple(ti / total for ti in t)


# ---------------------------------------------------------------------------
# circles and loci


@dataclass(frozen=True)
class Circle:
    center: complex
    radius: float


@dataclass(frozen=True)
class Line:
    """Line through ``point`` along the unit ``direction``."""

    point: complex
    direction: complex


@dataclass(frozen=True)
class Degenerate:
    point: complex


@dataclass(frozen=True)
class Empty:
    pass


def circumcenter3(a: complex, b: complex, c: complex) -> complex:
    """Center of the circle through three non-collinear points."""
    a, b, c = complex(a), complex(b), complex(c)
    require_finite(a, b, c)
    scale = spread([a, b, c])
    det = 2.0 * _cross(a, b, c)
    if abs(det) <= EPS_CLASS * scale * scale:
        raise CollinearPoints("no circumcircle through collinear points")
    ab = abs(b) ** 2 - abs(a) ** 2
    ac = abs(c) ** 2 - abs(a) ** 2
    ux = ((c.imag - a.imag) * ab - (b.imag - a.imag) * ac) / det
    uy = ((b.real - a.real) * ac - (c.real - a.real) * ab) / det
    return complex(ux, uy)


def apollonius_locus(zi: complex, zj: complex, wi: float, wj: float):
    """Locus of points w with wi*|zi - w| = wj*|zj - w|.

    A perpendicular bisector Line for equal weights, otherwise a Circle.
    """
    zi, zj = complex(zi), complex(zj)
    require_finite(zi, zj)
    if not (wi > 0.0 and wj > 0.0):
        raise ValueError("weights must be positive")
    if abs(zi - zj) <= EPS_CLASS * spread([zi, zj]) or zi == zj:
        raise CoincidentPoints("locus undefined for a coincident pair")
    if abs(wi - wj) <= EPS_CLASS * (wi + wj):
        mid = 0.5 * (zi + zj)
        direction = 1j * (zj - zi) / abs(zj - zi)
        return Line(mid, direction)
    d = wi * wi - wj * wj
    center = (wi * wi * zi - wj * wj * zj) / d
    rad2 = abs(center) ** 2 - (wi * wi * abs(zi) ** 2 - wj * wj * abs(zj) ** 2) / d
    return Circle(center, math.sqrt(max(rad2, 0.0)))


def intersect_loci(a, b, scale: Optional[float] = None) -> tuple[complex, ...]:
    """Intersection points of two loci (lines or circles).

    Overlapping loci of the same carrier are reported as empty rather than
    as a continuum; callers that care about that case handle it upstream.
    """
    if isinstance(a, Empty) or isinstance(b, Empty):
        return ()
    if isinstance(a, Degenerate):
        return (a.point,) if _on_locus(b, a.point, scale) else ()
    if isinstance(b, Degenerate):
        return (b.point,) if _on_locus(a, b.point, scale) else ()
    if isinstance(a, Line) and isinstance(b, Line):
        return _line_line(a, b, scale)
    if isinstance(a, Line) and isinstance(b, Circle):
        return _line_circle(a, b, scale)
    if isinstance(a, Circle) and isinstance(b, Line):
        return _line_circle(b, a, scale)
    return _circle_circle(a, b, scale)


def _locus_scale(pts, scale):
    if scale is not None and scale > 0.0:
        return scale
    s = spread(pts)
    return s if s > 0.0 else 1.0


def _on_locus(locus, p, scale=None) -> bool:
    if isinstance(locus, Circle):
        s = _locus_scale([locus.center, p], scale)
        return abs(abs(p - locus.center) - locus.radius) <= EPS_CLASS * max(s, locus.radius)
    if isinstance(locus, Line):
        s = _locus_scale([locus.point, p], scale)
        off = (p - locus.point) / locus.direction
        return abs(off.imag) <= EPS_CLASS * s
    if isinstance(locus, Degenerate):
        return abs(p - locus.point) <= EPS_CLASS * _locus_scale([locus.point, p], scale)
    return False


def _line_line(a: Line, b: Line, scale) -> tuple[complex, ...]:
    s = _locus_scale([a.point, b.point], scale)
    denom = (a.direction * b.direction.conjugate()).imag
    if abs(denom) <= EPS_CLASS:
        return ()
    diff = b.point - a.point
    t = (diff * b.direction.conjugate()).imag / denom
    return (a.point + t * a.direction,)


# The discriminant band below only forgives a slightly NEGATIVE disc, so a
# grazing pass still yields its touch point.  A positive disc is always taken
# at face value: near-equal weights give Apollonius circles with radii far
# beyond the working scale, and any band proportional to radius**2 would
# swallow genuinely separated intersections there.


def _line_circle(ln: Line, ci: Circle, scale) -> tuple[complex, ...]:
    s = _locus_scale([ln.point, ci.center], scale)
    rel = (ci.center - ln.point) / ln.direction
    h = rel.imag  # signed distance from the line to the center
    disc = ci.radius * ci.radius - h * h
    band = EPS_CLASS * s * max(s, ci.radius)
    foot = ln.point + rel.real * ln.direction
    if disc <= -band:
        return ()
    if disc <= 0.0:
        return (foot,)
    half = math.sqrt(disc)
    return (foot - half * ln.direction, foot + half * ln.direction)


def _circle_circle(a: Circle, b: Circle, scale) -> tuple[complex, ...]:
    s = _locus_scale([a.center, b.center], scale)
    d = abs(b.center - a.center)
    if d <= EPS_CLASS * max(s, a.radius, b.radius):
        return ()
    # distance from a.center to the radical line
    x = (d * d + a.radius * a.radius - b.radius * b.radius) / (2.0 * d)
    disc = a.radius * a.radius - x * x
    band = EPS_CLASS * s * max(s, a.radius, b.radius)
    u = (b.center - a.center) / d
    foot = a.center + x * u
    if disc <= -band:
        return ()
    if disc <= 0.0:
        return (foot,)
    half = math.sqrt(disc)
    return (foot + half * 1j * u, foot - half * 1j * u)


# ---------------------------------------------------------------------------
# segments


def segment_intersection(
    a: complex, b: complex, c: complex, d: complex
) -> Optional[complex]:
    """Single intersection point of segments [a, b] and [c, d].

    Returns None for disjoint segments and raises OverlappingSegments when
    the segments share more than one point.  Endpoint contact counts as an
    intersection.
    """
    a, b, c, d = complex(a), complex(b), complex(c), complex(d)
    require_finite(a, b, c, d)
    scale = spread([a, b, c, d])
    if scale == 0.0:
        return a
    tol = EPS_CLASS * scale
    r = b - a
    s = d - c
    denom = r.real * s.imag - r.imag * s.real
    if abs(denom) <= EPS_CLASS * scale * scale:
        # parallel; collinear only when c is on the carrier of [a, b]
        if abs(r) <= tol and abs(s) <= tol:
            return a if abs(c - a) <= tol else None
        carrier = r if abs(r) > tol else s
        if abs(_cross(a, a + carrier, c)) / abs(carrier) > tol:
            return None
        u = carrier / abs(carrier)
        ta = sorted((((b - a) / u).real, 0.0))
        tc = sorted((((c - a) / u).real, ((d - a) / u).real))
        lo = max(ta[0], tc[0])
        hi = min(ta[1], tc[1])
        if hi < lo - tol:
            return None
        if hi - lo <= tol:
            m = 0.5 * (lo + hi)
            return a + m * u
        raise OverlappingSegments("segments share a subsegment")
    q = c - a
    t = (q.real * s.imag - q.imag * s.real) / denom
    u = (q.real * r.imag - q.imag * r.real) / denom
    bt = tol / max(abs(r), tol)
    bu = tol / max(abs(s), tol)
    if -bt <= t <= 1.0 + bt and -bu <= u <= 1.0 + bu:
        t = min(1.0, max(0.0, t))
        return a + t * r
    return None


# ---------------------------------------------------------------------------
# four-point shape


@dataclass(frozen=True)
class ConvexOrder:
    """Convex position; ``order`` is the hull cycle counterclockwise."""

    order: tuple[int, int, int, int]
    diagonals: tuple[tuple[int, int], tuple[int, int]]


@dataclass(frozen=True)
class NonConvex:
    """One point inside (or on the boundary of) the hull of the others."""

    contained: int


def quadrilateral_shape(z1: complex, z2: complex, z3: complex, z4: complex):
    """Classify four distinct points as ConvexOrder or NonConvex.

    A collinear triple counts as NonConvex with its middle point contained,
    so the convex branch always has a proper quadrilateral with crossing
    diagonals.
    """
    zs = [complex(z1), complex(z2), complex(z3), complex(z4)]
    require_finite(*zs)
    scale = spread(zs)
    ensure_distinct(zs, scale)
    hull = _hull_indices(zs, EPS_CLASS * scale * scale)
    if len(hull) == 4:
        i0, i1, i2, i3 = hull
        return ConvexOrder(order=(i0, i1, i2, i3), diagonals=((i0, i2), (i1, i3)))
    inside = [i for i in range(4) if i not in hull]
    if len(hull) == 3:
        return NonConvex(contained=inside[0])
    # all four collinear: report a point between the extremes, by position
    u = (zs[hull[-1]] - zs[hull[0]]) / abs(zs[hull[-1]] - zs[hull[0]])
    inside.sort(key=lambda i: ((zs[i] - zs[hull[0]]) / u).real)
    return NonConvex(contained=inside[0])


# ---------------------------------------------------------------------------
# unimodular triples


class TripleClass(enum.Enum):
    SUM_BELOW_ONE = "sum-below-one"
    SUM_ONE = "sum-one"
    SUM_ABOVE_ONE = "sum-above-one"


def unimodular_triple_class(z1: complex, z2: complex, z3: complex) -> TripleClass:
    """Classify |z1 + z2 + z3| against 1 for distinct unit-modulus numbers."""
    zs = [complex(z1), complex(z2), complex(z3)]
    require_finite(*zs)
    for z in zs:
        if abs(abs(z) - 1.0) > EPS_CLASS:
            raise NotUnimodular(f"{z!r} does not lie on the unit circle")
    for i in range(3):
        for j in range(i + 1, 3):
            if abs(zs[i] - zs[j]) <= EPS_CLASS:
                raise DuplicatePoints("unimodular triple must be pairwise distinct")
    s = abs(zs[0] + zs[1] + zs[2])
    if abs(s - 1.0) <= EPS_CLASS:
        return TripleClass.SUM_ONE
    if s < 1.0:
        return TripleClass.SUM_BELOW_ONE
    return TripleClass.SUM_ABOVE_ONE
