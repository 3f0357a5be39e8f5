"""Birkhoff-James orthogonality in the finite sequence norms.

A vector x is orthogonal to y when ||x + s*y|| >= ||x|| for every complex
scalar s, equivalently when some norm-one functional attains ||x|| at x and
annihilates y.  Both tests below return that functional explicitly as a
certificate instead of a bare boolean.

In the sum norm the attaining functional is forced to conj(x_i)/|x_i| on
every nonzero entry and may carry any coefficient of modulus at most one on
zero entries, so orthogonality reduces to the slack inequality

    |sum over nonzero entries of conj(x_i)/|x_i| * y_i|  <=  sum over zero
    entries of |y_i|.

In the max norm the functional is a convex combination of the coordinate
functionals on the maximal-modulus entries, and the test is feasibility of
the origin in a planar convex hull.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from . import geom
from .errors import (
    LengthMismatch,
    NotOrthogonal,
    WeightConditionViolated,
    ZeroVector,
)
from .tolerances import EPS_CLASS, EPS_REL


@dataclass(frozen=True)
class SupportCertificate:
    """Norm-one functional witnessing an orthogonality (or failing to).

    ``d`` holds the coefficient applied to each entry, all of modulus at
    most one.  ``residual`` is the modulus of the functional applied to y,
    which is what a verifier recomputes.  For the sum norm ``forced`` is
    the contribution of the entries whose coefficient is forced and
    ``slack`` the total cancellation available on the free entries; the
    certificate passes when |forced| <= slack + tol.  For the max norm
    ``support`` lists the active entries and ``t`` the convex weights on
    them.  ``gamma`` reports the free coefficient spent at a location that
    coincides with the query point, when there is exactly one.
    """

    space: str
    d: tuple[complex, ...]
    residual: float
    passed: bool
    forced: complex
    slack: float
    tol: float
    t: Optional[tuple[float, ...]] = None
    support: Optional[tuple[int, ...]] = None
    gamma: Optional[complex] = None


def _entries(x: Sequence[complex], name: str) -> tuple[complex, ...]:
    out = tuple(complex(v) for v in x)
    if not out:
        raise ZeroVector(f"{name} has no entries")
    for v in out:
        if not (math.isfinite(v.real) and math.isfinite(v.imag)):
            raise ValueError(f"non-finite entry in {name}: {v!r}")
    return out


def build_l1_certificate(
    x: Sequence[complex],
    y: Sequence[complex],
    zero_mask: Sequence[bool],
    tol: float,
) -> SupportCertificate:
    """Assemble the sum-norm functional for x against y.

    ``zero_mask`` says which entries of x count as zero; callers choose the
    band (entry modulus for raw vectors, geometric coincidence for location
    problems).  Free coefficients are spent proportionally to cancel the
    forced part, clamped to the unit disc.
    """
    xs = tuple(complex(v) for v in x)
    ys = tuple(complex(v) for v in y)
    forced = 0j
    slack = 0.0
    d: list[complex] = [0j] * len(xs)
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if zero_mask[i]:
            slack += abs(yi)
        else:
            d[i] = (xi / abs(xi)).conjugate()
            forced += d[i] * yi
    need = abs(forced)
    if need > 0.0 and slack > 0.0:
        ratio = min(1.0, need / slack)
        direction = -forced / need
        for i, yi in enumerate(ys):
            if zero_mask[i] and abs(yi) > 0.0:
                d[i] = direction * ratio * yi.conjugate() / abs(yi)
    residual = abs(sum(di * yi for di, yi in zip(d, ys)))
    passed = need <= slack + tol
    gamma = None
    free = [i for i in range(len(xs)) if zero_mask[i]]
    if len(free) == 1:
        gamma = d[free[0]]
    return SupportCertificate(
        space="l1",
        d=tuple(d),
        residual=residual,
        passed=passed,
        forced=forced,
        slack=slack,
        tol=tol,
        gamma=gamma,
    )


def is_bj_orthogonal_l1(
    x: Sequence[complex], y: Sequence[complex], tol: Optional[float] = None
) -> Optional[SupportCertificate]:
    """Certificate for x orthogonal to y in the sum norm, or None.

    Entries of x within EPS_CLASS * max|x| of zero count as zero entries.
    """
    xs = _entries(x, "x")
    ys = _entries(y, "y")
    if len(xs) != len(ys):
        raise LengthMismatch("vectors must have equal length")
    top = max(abs(v) for v in xs)
    if top == 0.0:
        raise ZeroVector("x must be nonzero")
    if tol is None:
        tol = EPS_REL * sum(abs(v) for v in ys)
    mask = [abs(v) <= EPS_CLASS * top for v in xs]
    cert = build_l1_certificate(xs, ys, mask, tol)
    return cert if cert.passed else None


def is_bj_orthogonal_linf(
    x: Sequence[complex], y: Sequence[complex]
) -> Optional[SupportCertificate]:
    """Certificate for x orthogonal to y in the max norm, or None."""
    xs = _entries(x, "x")
    ys = _entries(y, "y")
    if len(xs) != len(ys):
        raise LengthMismatch("vectors must have equal length")
    top = max(abs(v) for v in xs)
    if top == 0.0:
        raise ZeroVector("x must be nonzero")
    support = [i for i, v in enumerate(xs) if abs(v) >= (1.0 - EPS_CLASS) * top]
    d: list[complex] = [0j] * len(xs)
    vals: list[complex] = []
    for i in support:
        d[i] = (xs[i] / abs(xs[i])).conjugate()
        vals.append(d[i] * ys[i])
    t = geom.convex_hull_membership(0j, vals)
    if t is None:
        return None
    residual = abs(sum(tj * vj for tj, vj in zip(t, vals)))
    tfull = [0.0] * len(xs)
    for idx, tj in zip(support, t):
        tfull[idx] = tj
    return SupportCertificate(
        space="linf",
        d=tuple(d),
        residual=residual,
        passed=True,
        forced=sum(vals),
        slack=0.0,
        tol=EPS_REL * sum(abs(v) for v in ys),
        t=tuple(tfull),
        support=tuple(support),
    )


def smoothness_order_linf(x: Sequence[complex]) -> int:
    """Number of entries attaining the max modulus, within the band.

    Order 1 means the norm is smooth at x and the supporting functional is
    unique; order k > 1 means a (k-1)-dimensional face of functionals.
    """
    xs = _entries(x, "x")
    top = max(abs(v) for v in xs)
    if top == 0.0:
        raise ZeroVector("x must be nonzero")
    return sum(1 for v in xs if abs(v) >= (1.0 - EPS_CLASS) * top)


# ---------------------------------------------------------------------------
# classification of orthogonal directions in dimensions three and four


@dataclass(frozen=True)
class OrthogonalityType:
    """Parametric form of a vector orthogonal to a weight vector.

    ``slots`` are the indices of the nonzero entries, ``directions`` their
    unit values, ``mixing`` the convex coefficients and ``scale`` the sum
    of the entry moduli, so the vector is scale * mixing_j * directions_j
    placed on the slots.  ``label`` appends the slot pattern as a letter,
    e.g. a one-slot vector living in the third coordinate is "I(c)".
    """

    tag: str
    slots: tuple[int, ...]
    directions: tuple[complex, ...]
    mixing: tuple[float, ...]
    scale: float
    n: int = 3

    @property
    def label(self) -> str:
        from itertools import combinations

        if len(self.slots) == 1:
            return f"{self.tag}({'abcd'[self.slots[0]]})"
        if len(self.slots) == self.n:
            return self.tag
        pool = list(combinations(range(self.n), len(self.slots)))
        return f"{self.tag}({'abcdef'[pool.index(self.slots)]})"


def _slot_split(c: Sequence[complex]) -> tuple[list[int], list[int]]:
    top = max(abs(v) for v in c)
    zero = [i for i, v in enumerate(c) if abs(v) <= EPS_CLASS * top]
    nonzero = [i for i in range(len(c)) if i not in zero]
    return nonzero, zero


def _angle_threshold(weights: Sequence[float], i: int, j: int, k: int) -> float:
    return (weights[k] ** 2 - weights[i] ** 2 - weights[j] ** 2) / (
        2.0 * weights[i] * weights[j]
    )


def classify_l1_orthogonal_3(
    c: Sequence[complex], weights: Sequence[float]
) -> OrthogonalityType:
    """Sort a vector orthogonal to a positive weight triple into its type.

    The weights must satisfy the strict triangle condition.  Types are by
    number of nonzero slots; the angle conditions tying the directions to
    the weights are re-verified so the classification never takes the
    orthogonality test's word for more than it says.
    """
    cs = _entries(c, "c")
    ws = tuple(float(w) for w in weights)
    if len(cs) != 3 or len(ws) != 3:
        raise LengthMismatch("expected a triple and three weights")
    if any(w <= 0.0 for w in ws):
        raise WeightConditionViolated("weights must be positive")
    wsum = sum(ws)
    for i in range(3):
        j, k = [m for m in range(3) if m != i]
        if ws[i] >= ws[j] + ws[k] - EPS_CLASS * wsum:
            raise WeightConditionViolated(
                "weights must satisfy the strict triangle condition"
            )
    if is_bj_orthogonal_l1(cs, ws) is None:
        raise NotOrthogonal("vector is not orthogonal to the weights")
    nonzero, _ = _slot_split(cs)
    scale = sum(abs(cs[i]) for i in nonzero)
    units = tuple(cs[i] / abs(cs[i]) for i in nonzero)
    mixing = tuple(abs(cs[i]) / scale for i in nonzero)
    if len(nonzero) == 1:
        return OrthogonalityType("I", tuple(nonzero), units, mixing, scale, 3)
    if len(nonzero) == 2:
        i, j = nonzero
        k = [m for m in range(3) if m not in nonzero][0]
        cos_angle = (units[0] * units[1].conjugate()).real
        if cos_angle > _angle_threshold(ws, i, j, k) + EPS_CLASS:
            raise NotOrthogonal("two-slot vector fails its angle bound")
        return OrthogonalityType("II", tuple(nonzero), units, mixing, scale, 3)
    cos_12 = (units[0] * units[1].conjugate()).real
    cos_13 = (units[0] * units[2].conjugate()).real
    if abs(cos_12 - _angle_threshold(ws, 0, 1, 2)) > EPS_CLASS or abs(
        cos_13 - _angle_threshold(ws, 0, 2, 1)
    ) > EPS_CLASS:
        raise NotOrthogonal("three-slot vector fails its angle equalities")
    return OrthogonalityType("III", tuple(nonzero), units, mixing, scale, 3)


def classify_l1_orthogonal_4(c: Sequence[complex]) -> OrthogonalityType:
    """Classify a vector orthogonal to (1, 1, 1, 1) in the sum norm.

    Three nonzero slots additionally require the origin inside the hull of
    the three directions; four nonzero slots require the directions to sum
    to zero, which makes them two antipodal pairs.
    """
    cs = _entries(c, "c")
    if len(cs) != 4:
        raise LengthMismatch("expected a quadruple")
    ones = (1.0, 1.0, 1.0, 1.0)
    if is_bj_orthogonal_l1(cs, ones) is None:
        raise NotOrthogonal("vector is not orthogonal to the unit weights")
    nonzero, _ = _slot_split(cs)
    scale = sum(abs(cs[i]) for i in nonzero)
    units = tuple(cs[i] / abs(cs[i]) for i in nonzero)
    mixing = tuple(abs(cs[i]) / scale for i in nonzero)
    if len(nonzero) == 1:
        return OrthogonalityType("I", tuple(nonzero), units, mixing, scale, 4)
    if len(nonzero) == 2:
        return OrthogonalityType("II", tuple(nonzero), units, mixing, scale, 4)
    if len(nonzero) == 3:
        if geom.convex_hull_membership(0j, units) is None:
            raise NotOrthogonal("three-slot directions do not surround the origin")
        return OrthogonalityType("III", tuple(nonzero), units, mixing, scale, 4)
    if abs(sum(units)) > 4.0 * EPS_CLASS:
        raise NotOrthogonal("four-slot directions do not sum to zero")
    return OrthogonalityType("IV", tuple(nonzero), units, mixing, scale, 4)
