"""Acceptance gate.

Ten end-to-end checks, one per released behavior.  Each emits a single
``[PASS]``/``[FAIL]`` line on the terminal (bypassing capture) so a full
run reads as a checklist.  Everything here goes through the public API.
"""

import cmath
import json
import math
import subprocess
import sys
import time
import xml.etree.ElementTree as ET

import numpy as np
import pytest

import planarloc as pl

from conftest import (
    convex_quad,
    distinct_points,
    interior_instance,
    parallelogram,
    sample_type3,
    sample_type4,
    triangle_weights,
    unit,
    vertex_instance,
)

FIVE_SQRT3 = [4 + 1j, 1 + 2j, 2 - 1j, 3 + (1 + math.sqrt(3)) * 1j, 2 - math.sqrt(3)]
FIVE_SQRT2 = [4 + 1j, 1 + 2j, 2 - 1j, 3 + (1 + math.sqrt(2)) * 1j, 2 - math.sqrt(2)]
ROOTS3 = [cmath.exp(2j * math.pi * k / 3) for k in range(3)]


def _report(capsys, name, ok, detail=""):
    line = f"[{'PASS' if ok else 'FAIL'}] {name}"
    if detail:
        line += f" ({detail})"
    with capsys.disabled():
        sys.stdout.write(line + "\n")
    assert ok, line


def _seg_dist(p, a, b):
    d = b - a
    if d == 0:
        return abs(p - a)
    t = ((p - a) / d).real
    t = min(1.0, max(0.0, t))
    return abs(p - (a + t * d))


def test_enclosing_circle_frozen_instance(capsys):
    t0 = time.perf_counter()
    res = pl.solve_chebyshev(FIVE_SQRT3)
    elapsed = time.perf_counter() - t0
    ok = (
        abs(res.center - (2 + 1j)) <= 1e-9
        and abs(res.radius - 2.0) <= 1e-9
        and res.support == (0, 2, 3, 4)
        and elapsed < 1.0
        and abs(pl.circumcenter3(4 + 1j, 1 + 2j, 2 - 1j) - (2.25 + 0.75j)) <= 1e-12
    )
    _report(
        capsys,
        "five point enclosing circle",
        ok,
        f"center={res.center:.12g}, radius={res.radius:.12g}, {elapsed*1e3:.1f} ms",
    )


def test_enclosing_circle_oracle_crosscheck(capsys):
    _, oracle_radius = pl.oracle_cheby(FIVE_SQRT2)
    res = pl.solve_chebyshev(FIVE_SQRT2)
    ok = oracle_radius < 2.0 - 1e-3 and abs(res.radius - oracle_radius) <= 1e-5
    _report(
        capsys,
        "cocircular variant agrees with the grid oracle",
        ok,
        f"oracle={oracle_radius:.9f}, solver={res.radius:.9f}",
    )


def test_triangle_sweep(capsys):
    gen = np.random.default_rng(31001)
    t0 = time.perf_counter()
    checked = {"interior": 0, "vertex": 0}
    ok = True
    detail = ""
    for _ in range(1000):
        pts = distinct_points(gen, 3, box=1.0, min_gap=2e-2)
        weights = triangle_weights(gen)
        res = pl.solve_ft3_weighted(*pts, weights)
        config = pl.WeightedConfiguration(tuple(pts), weights)
        _, oval = pl.oracle_ft(config)
        if res.objective > oval + 1e-6:
            ok, detail = False, f"objective {res.objective} above oracle {oval}"
            break
        a1, a2, a3 = weights
        if res.case is pl.FtCase.VERTEX:
            i = res.vertex
            aj, ak = [weights[k] for k in range(3) if k != i]
            ai = weights[i]
            bound = (ai * ai - aj * aj - ak * ak) / (2 * aj * ak)
            if math.cos(res.vertex_angle) > bound + 1e-7:
                ok, detail = False, "vertex angle outside the admissible cone"
                break
            checked["vertex"] += 1
        elif res.case is pl.FtCase.INTERIOR:
            t_theta = (a3 * a3 - a1 * a1 - a2 * a2) / (2 * a1 * a2)
            t_phi = (a2 * a2 - a1 * a1 - a3 * a3) / (2 * a1 * a3)
            theta, phi = res.angles
            if abs(math.cos(theta) - t_theta) > 1e-7 or abs(math.cos(phi) - t_phi) > 1e-7:
                ok, detail = False, "interior angles miss the weight law"
                break
            checked["interior"] += 1
    elapsed = time.perf_counter() - t0
    if ok:
        ok = elapsed < 30.0
        detail = (
            f"{checked['interior']} interior, {checked['vertex']} vertex, "
            f"{elapsed:.1f} s"
        )
    _report(capsys, "1000 random triangles beat the oracle and obey the angle law", ok, detail)


def test_quadrilateral_sweep(capsys):
    gen = np.random.default_rng(31002)
    counts = {"convex": 0, "reflex": 0}
    ok = True
    detail = ""
    for _ in range(1000):
        pts = distinct_points(gen, 4, box=1.0, min_gap=3e-2)
        shape = pl.quadrilateral_shape(*pts)
        res = pl.solve_ft4(*pts)
        config = pl.WeightedConfiguration(tuple(pts), (1.0,) * 4)
        _, oval = pl.oracle_ft(config)
        if res.objective > oval + 1e-6:
            ok, detail = False, f"objective {res.objective} above oracle {oval}"
            break
        if isinstance(shape, pl.NonConvex):
            if res.solution.location != pts[shape.contained]:
                ok, detail = False, "reflex vertex not chosen"
                break
            counts["reflex"] += 1
        elif isinstance(shape, pl.ConvexOrder):
            w = res.solution.location
            (i1, j1), (i2, j2) = shape.diagonals
            if (
                _seg_dist(w, pts[i1], pts[j1]) > 1e-9
                or _seg_dist(w, pts[i2], pts[j2]) > 1e-9
            ):
                ok, detail = False, "optimum off the diagonals"
                break
            counts["convex"] += 1
    if ok:
        detail = f"{counts['convex']} convex, {counts['reflex']} reflex"
    _report(capsys, "1000 random quadrilaterals certified against the oracle", ok, detail)


def test_many_point_median(capsys):
    gen = np.random.default_rng(31003)
    ok = True
    detail = ""
    worst = 0.0
    for n in (5, 10, 25, 50):
        for _ in range(100):
            pts = distinct_points(gen, n, box=2.0, min_gap=1e-2)
            weights = tuple(float(gen.uniform(0.5, 2.0)) for _ in range(n))
            config = pl.WeightedConfiguration(tuple(pts), weights)
            res = pl.solve_ft_n(config)
            total = config.total_weight
            if res.certificate.residual > 1e-8 * total:
                ok, detail = False, f"residual {res.certificate.residual} at n={n}"
                break
            _, oval = pl.oracle_ft(config)
            gap = abs(res.objective - oval) / (config.diameter * total)
            worst = max(worst, gap)
            if gap > 1e-6:
                ok, detail = False, f"oracle gap {gap:.2e} at n={n}"
                break
        if not ok:
            break
    if ok:
        detail = f"worst relative oracle gap {worst:.2e}"
    _report(capsys, "iterative median certified for n up to 50", ok, detail)


def test_perturbation_rules(capsys):
    gen = np.random.default_rng(31004)
    ok = True
    detail = ""
    for _ in range(500):
        n = int(gen.integers(3, 7))
        config, w = interior_instance(gen, n)
        diam = config.diameter
        alpha = float(gen.uniform(0.5, 2.0))
        if not pl.addition_preserves(config, w, w, alpha):
            ok, detail = False, "addition at the optimum rejected"
            break
        off = w + float(gen.uniform(0.02, 0.5)) * diam * unit(gen)
        if pl.addition_preserves(config, w, off, alpha):
            ok, detail = False, "addition away from the optimum accepted"
            break
        i = int(gen.integers(0, n))
        ray = config.points[i] - w
        c = float(gen.uniform(0.05, 3.0))
        if not pl.replacement_preserves(config, w, i, w + c * ray):
            ok, detail = False, "replacement along the ray rejected"
            break
        phi = float(gen.uniform(0.15, math.pi - 0.2)) * (1 if gen.integers(0, 2) else -1)
        bad = w + c * ray * cmath.exp(1j * phi)
        if pl.replacement_preserves(config, w, i, bad):
            ok, detail = False, "rotated replacement accepted"
            break
        if pl.replacement_preserves(config, w, i, w - c * ray):
            ok, detail = False, "reflected replacement accepted"
            break
        scales = tuple(float(gen.uniform(0.5, 2.0)) for _ in range(n))
        moved = pl.scaled_configuration(config, w, scales)
        flipped = pl.scaled_configuration(config, w, tuple(-s for s in scales))
        if not (
            pl.ft_certificate(moved, w).passed and pl.ft_certificate(flipped, w).passed
        ):
            ok, detail = False, "scaling lost the optimum"
            break
    if ok:
        for _ in range(200):
            config, res = vertex_instance(gen, 3)
            w = config.points[res.vertex]
            a0 = config.weights[res.vertex]
            alpha_new = a0 * float(gen.uniform(0.15, 0.99))
            z_new = pl.extend_at_vertex(config, w, alpha_new)
            if not isinstance(z_new, complex):
                ok, detail = False, "light extension did not produce a point"
                break
            grown = pl.WeightedConfiguration(
                config.points + (z_new,), config.weights + (alpha_new,)
            )
            if not pl.ft_certificate(grown, w).passed:
                ok, detail = False, "extension failed to re-certify"
                break
            if pl.extend_at_vertex(config, w, a0 * float(gen.uniform(2.01, 3.0))) is not None:
                ok, detail = False, "heavy extension should be impossible"
                break
    if ok:
        detail = "500 interior + 200 vertex instances"
    _report(capsys, "perturbation rules hold on certified optima", ok, detail)


def test_orthogonality_families(capsys):
    gen = np.random.default_rng(31005)
    ok = True
    detail = ""
    per_family = 10_000
    for tag in ("I", "II", "III"):
        for _ in range(per_family):
            weights = triangle_weights(gen)
            c = sample_type3(gen, tag, weights)
            if pl.is_bj_orthogonal_l1(c, weights) is None:
                ok, detail = False, f"3-slot family {tag} sample not orthogonal"
                break
            if pl.classify_l1_orthogonal_3(c, weights).tag != tag:
                ok, detail = False, f"3-slot family {tag} misclassified"
                break
        if not ok:
            break
    if ok:
        for tag in ("I", "II", "III", "IV"):
            for _ in range(per_family):
                c = sample_type4(gen, tag)
                if pl.is_bj_orthogonal_l1(c, (1.0,) * 4) is None:
                    ok, detail = False, f"4-slot family {tag} sample not orthogonal"
                    break
                if pl.classify_l1_orthogonal_4(c).tag != tag:
                    ok, detail = False, f"4-slot family {tag} misclassified"
                    break
            if not ok:
                break
    rejected = 0
    if ok:
        while rejected < 10_000:
            if gen.integers(0, 2):
                weights = triangle_weights(gen)
                c = tuple(complex(*gen.normal(0.0, 1.0, 2)) for _ in range(3))
                if pl.is_bj_orthogonal_l1(c, weights) is not None:
                    continue
                try:
                    pl.classify_l1_orthogonal_3(c, weights)
                    ok, detail = False, "non-orthogonal 3-vector classified"
                    break
                except pl.NotOrthogonal:
                    rejected += 1
            else:
                c = tuple(complex(*gen.normal(0.0, 1.0, 2)) for _ in range(4))
                if pl.is_bj_orthogonal_l1(c, (1.0,) * 4) is not None:
                    continue
                try:
                    pl.classify_l1_orthogonal_4(c)
                    ok, detail = False, "non-orthogonal 4-vector classified"
                    break
                except pl.NotOrthogonal:
                    rejected += 1
    if ok:
        detail = f"7 families x {per_family}, {rejected} rejections"
    _report(capsys, "orthogonality families classify and round-trip", ok, detail)


def test_coincidence_characterization(capsys):
    gen = np.random.default_rng(31006)
    ok = True
    detail = ""
    for _ in range(100):
        a = float(gen.uniform(0.2, 3.0)) * unit(gen)
        b = complex(*gen.normal(0.0, 2.0, 2))
        if pl.ft_cheby_coincide3(*(a * z + b for z in ROOTS3)) is not True:
            ok, detail = False, "equilateral image not recognized"
            break
    generic = 0
    if ok:
        while generic < 1000:
            pts = distinct_points(gen, 3, box=2.0, min_gap=5e-2)
            sides = sorted(
                (
                    abs(pts[0] - pts[1]),
                    abs(pts[1] - pts[2]),
                    abs(pts[2] - pts[0]),
                )
            )
            if sides[2] - sides[0] < 0.05 * sides[2]:
                continue
            area = abs(((pts[1] - pts[0]).conjugate() * (pts[2] - pts[0])).imag)
            if area < 0.05 * sides[2] ** 2:
                continue
            if pl.ft_cheby_coincide3(*pts) is not False:
                ok, detail = False, "scalene triangle reported coincident"
                break
            generic += 1
    if ok:
        for _ in range(100):
            if pl.ft_cheby_coincide4(*parallelogram(gen)) is not True:
                ok, detail = False, "parallelogram not recognized"
                break
    if ok:
        for _ in range(1000):
            quad = convex_quad(gen)
            pts = quad
            shape = pl.quadrilateral_shape(*pts)
            (i1, j1), (i2, j2) = shape.diagonals
            w = pl.segment_intersection(pts[i1], pts[j1], pts[i2], pts[j2])
            band = 1e-7 * pl.spread(pts)
            dists = [abs(z - w) for z in pts]
            expected = False
            for i, j in shape.diagonals:
                k, m = (x for x in range(4) if x not in (i, j))
                if abs(dists[i] - dists[j]) <= band and min(
                    dists[i], dists[j]
                ) >= max(dists[k], dists[m]) - band:
                    expected = True
            if pl.ft_cheby_coincide4(*pts) is not expected:
                ok, detail = False, "convex quadrilateral disagrees with the balance test"
                break
    if ok:
        detail = "100 equilateral, 1000 scalene, 100 parallelograms, 1000 convex"
    _report(capsys, "coincidence tests match their characterizations", ok, detail)


def test_weighted_circles(capsys):
    gen = np.random.default_rng(31007)
    ok = True
    detail = ""
    worst = 0.0
    for _ in range(500):
        n = int(gen.integers(2, 13))
        pts = distinct_points(gen, n, box=3.0, min_gap=2e-2)
        weights = [float(gen.uniform(0.5, 2.0)) for _ in range(n)]
        res = pl.solve_chebyshev_weighted(pts, weights)
        diam = max(abs(p - q) for p in pts for q in pts)
        _, oradius = pl.oracle_cheby(pts, weights)
        gap = abs(res.radius - oradius) / max(diam, 1.0)
        worst = max(worst, gap)
        if gap > 1e-5:
            ok, detail = False, f"oracle gap {gap:.2e}"
            break
        bad_support = any(
            abs(weights[j] * abs(pts[j] - res.center) - res.radius)
            > 1e-8 * max(res.radius, 1.0)
            for j in res.support
        )
        if bad_support:
            ok, detail = False, "support point off the critical distance"
            break
        plain = pl.solve_chebyshev(pts)
        lifted = pl.solve_chebyshev_weighted(pts, [1.0] * n)
        if (
            lifted.center != plain.center
            or lifted.radius != plain.radius
            or lifted.support != plain.support
        ):
            ok, detail = False, "unit weights disagree with the plain solver"
            break
    if ok:
        detail = f"500 instances, worst oracle gap {worst:.2e}"
    _report(capsys, "weighted circles certified against the oracle", ok, detail)


def test_cli_end_to_end(capsys, tmp_path):
    from planarloc.cli import main

    ok = True
    detail = ""

    problem = tmp_path / "five.json"
    problem.write_text(
        json.dumps(
            {"kind": "chebyshev", "points": [[z.real, z.imag] for z in FIVE_SQRT3]}
        ),
        encoding="utf-8",
    )
    rc = main(["solve", str(problem), "--svg", str(tmp_path / "five.svg")])
    out = capsys.readouterr().out
    doc = json.loads(out) if rc == 0 else {}
    if rc != 0 or not doc.get("certificate", {}).get("passed"):
        ok, detail = False, "solve did not emit a certified document"

    if ok:
        root = ET.fromstring((tmp_path / "five.svg").read_text(encoding="utf-8"))
        circles = [
            el
            for el in root.iter()
            if el.tag.endswith("circle") and el.get("class") == "radius"
        ]
        if root.tag != "{http://www.w3.org/2000/svg}svg" or len(circles) != 1:
            ok, detail = False, "svg missing its radius circle"
        elif abs(float(circles[0].get("r")) - doc["radius"]) > 1e-6:
            ok, detail = False, "svg radius disagrees with the document"

    if ok:
        rc = main(["certify", str(problem), "--at", "2,1"])
        capsys.readouterr()
        if rc != 0:
            ok, detail = False, "certify rejected the true center"
    if ok:
        rc = main(["certify", str(problem), "--at", "0,0"])
        capsys.readouterr()
        if rc != 2:
            ok, detail = False, "certify accepted a wrong center"

    if ok:
        tampered = dict(doc)
        tampered["solution"] = {"type": "point", "location": [9.0, 9.0]}
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps(tampered), encoding="utf-8")
        target = tmp_path / "bad.svg"
        rc = main(["plot", str(problem), str(bad), str(target)])
        capsys.readouterr()
        if rc != 2 or target.exists():
            ok, detail = False, "tampered result was plotted"

    if ok:
        hard = tmp_path / "hard.json"
        hard.write_text(
            json.dumps(
                {
                    "kind": "fermat",
                    "points": [[0, 0], [1, 0], [3, 1], [2, 2], [0.5, 1.7]],
                }
            ),
            encoding="utf-8",
        )
        rc = main(["solve", str(hard), "--max-iter", "1"])
        captured = capsys.readouterr()
        if rc != 2 or captured.out.strip():
            ok, detail = False, "starved solve leaked an uncertified result"

    if ok:
        proc = subprocess.run(
            ["planarloc", "solve", str(problem), "--oracle"],
            capture_output=True,
            text=True,
            timeout=120,
        )
        if proc.returncode != 0:
            ok, detail = False, "console script with oracle cross-check failed"

    if ok:
        detail = "solve, certify, plot, svg, refusal paths"
    _report(capsys, "command line refuses everything uncertified", ok, detail)
