"""Problem and result documents: parsing, validation, serialization.

Problems arrive as JSON ({"kind": ..., "points": [[x, y], ...],
"weights": [...]}) or as CSV rows "x,y[,weight]".  Results leave as JSON
with every float printed at 17 significant digits, which round-trips IEEE
doubles exactly; parse(serialize(doc)) equals doc.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass
from typing import Optional, Sequence

from . import geom
from .errors import ProblemFormatError
from .tolerances import EPS_CLASS, EPS_REL

KINDS = ("fermat", "chebyshev")


@dataclass(frozen=True)
class ProblemFile:
    kind: Optional[str]
    points: tuple[complex, ...]
    weights: Optional[tuple[float, ...]]


def _pair(value, where: str) -> complex:
    if (
        not isinstance(value, (list, tuple))
        or len(value) != 2
        or not all(isinstance(c, (int, float)) and not isinstance(c, bool) for c in value)
    ):
        raise ProblemFormatError(f"{where}: expected a [x, y] pair of numbers")
    z = complex(float(value[0]), float(value[1]))
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ProblemFormatError(f"{where}: coordinates must be finite")
    return z


def _validate(kind, points, weights) -> ProblemFile:
    if kind is not None and kind not in KINDS:
        raise ProblemFormatError(f"kind: expected one of {KINDS}, got {kind!r}")
    if not points:
        raise ProblemFormatError("points: at least one point required")
    if weights is not None:
        if len(weights) != len(points):
            raise ProblemFormatError(
                f"weights: length {len(weights)} does not match {len(points)} points"
            )
        for i, a in enumerate(weights):
            if not (math.isfinite(a) and a > 0.0):
                raise ProblemFormatError(f"weights[{i}]: must be positive and finite")
    geom.ensure_distinct(points)
    return ProblemFile(
        kind=kind,
        points=tuple(points),
        weights=None if weights is None else tuple(weights),
    )


def _load_json_problem(text: str, kind_flag: Optional[str]) -> ProblemFile:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise ProblemFormatError(f"line {e.lineno}, column {e.colno}: {e.msg}") from e
    if not isinstance(raw, dict):
        raise ProblemFormatError("top level: expected an object")
    unknown = set(raw) - {"kind", "points", "weights"}
    if unknown:
        raise ProblemFormatError(f"unknown fields: {sorted(unknown)}")
    kind = raw.get("kind")
    if kind is not None and not isinstance(kind, str):
        raise ProblemFormatError("kind: expected a string")
    if "points" not in raw or not isinstance(raw["points"], list):
        raise ProblemFormatError("points: expected a list of [x, y] pairs")
    points = [_pair(v, f"points[{i}]") for i, v in enumerate(raw["points"])]
    weights = None
    if raw.get("weights") is not None:
        if not isinstance(raw["weights"], list):
            raise ProblemFormatError("weights: expected a list of numbers")
        weights = []
        for i, a in enumerate(raw["weights"]):
            if not isinstance(a, (int, float)) or isinstance(a, bool):
                raise ProblemFormatError(f"weights[{i}]: expected a number")
            weights.append(float(a))
    return _validate(kind_flag or kind, points, weights)


def _load_csv_problem(text: str, kind_flag: Optional[str]) -> ProblemFile:
    points: list[complex] = []
    weights: list[float] = []
    widths: set[int] = set()
    rows = csv.reader(text.splitlines())
    for lineno, row in enumerate(rows, start=1):
        row = [c.strip() for c in row if c.strip() != ""]
        if not row or row[0].startswith("#"):
            continue
        if len(row) not in (2, 3):
            raise ProblemFormatError(f"line {lineno}: expected 2 or 3 fields")
        try:
            vals = [float(c) for c in row]
        except ValueError as e:
            raise ProblemFormatError(f"line {lineno}: {e}") from e
        if not all(math.isfinite(v) for v in vals):
            raise ProblemFormatError(f"line {lineno}: values must be finite")
        widths.add(len(row))
        points.append(complex(vals[0], vals[1]))
        if len(row) == 3:
            weights.append(vals[2])
    if len(widths) > 1:
        raise ProblemFormatError("weight column must be present on every row or none")
    return _validate(kind_flag, points, weights if weights else None)


def load_problem(path: str, kind_flag: Optional[str] = None) -> ProblemFile:
    """Read a problem file, JSON or CSV, with field-level diagnostics.

    A kind given on the command line wins over one stored in the file.
    """
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    if path.endswith(".json") or text.lstrip().startswith("{"):
        return _load_json_problem(text, kind_flag)
    return _load_csv_problem(text, kind_flag)


# ---------------------------------------------------------------------------
# result documents


def _fmt_float(v: float) -> str:
    if math.isinf(v):
        return "Infinity" if v > 0 else "-Infinity"
    if math.isnan(v):
        return "NaN"
    return format(v, ".17g")


def emit_json(value, indent: int = 0) -> str:
    """Serialize a JSON tree with 17-significant-digit floats."""
    pad = "  " * indent
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return _fmt_float(value)
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, (list, tuple)):
        if not value:
            return "[]"
        inner = ",\n".join(
            "  " * (indent + 1) + emit_json(v, indent + 1) for v in value
        )
        return "[\n" + inner + "\n" + pad + "]"
    if isinstance(value, dict):
        if not value:
            return "{}"
        inner = ",\n".join(
            "  " * (indent + 1) + json.dumps(str(k)) + ": " + emit_json(v, indent + 1)
            for k, v in value.items()
        )
        return "{\n" + inner + "\n" + pad + "}"
    raise TypeError(f"cannot serialize {type(value).__name__}")


@dataclass
class ResultDocument:
    """JSON-shaped result payload with lossless round-tripping."""

    payload: dict

    def to_json(self) -> str:
        return emit_json(self.payload) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "ResultDocument":
        try:
            raw = json.loads(text)
        except json.JSONDecodeError as e:
            raise ProblemFormatError(
                f"line {e.lineno}, column {e.colno}: {e.msg}"
            ) from e
        if not isinstance(raw, dict):
            raise ProblemFormatError("result document: expected an object")
        return cls(raw)


def _c(z: complex) -> list:
    return [float(z.real), float(z.imag)]


def certificate_payload(cert) -> dict:
    out = {
        "space": cert.space,
        "passed": bool(cert.passed),
        "d": [_c(v) for v in cert.d],
        "residual": float(cert.residual),
        "forced": _c(cert.forced),
        "slack": float(cert.slack),
        "tol": float(cert.tol),
        "t": None if cert.t is None else [float(v) for v in cert.t],
        "support": None if cert.support is None else [int(i) for i in cert.support],
        "gamma": None if cert.gamma is None else _c(cert.gamma),
    }
    return out


def fermat_result_document(result, tol_used: float) -> ResultDocument:
    from . import __version__
    from .fermat import FtPoint

    if isinstance(result.solution, FtPoint):
        solution = {"type": "point", "location": _c(result.solution.location)}
    else:
        solution = {
            "type": "segment",
            "start": _c(result.solution.start),
            "end": _c(result.solution.end),
        }
    payload = {
        "solver": "planarloc",
        "version": __version__,
        "kind": "fermat",
        "case": result.case.value,
        "solution": solution,
        "objective": float(result.objective),
        "support": None,
        "vertex": None if result.vertex is None else int(result.vertex),
        "vertex_angle": None if result.vertex_angle is None else float(result.vertex_angle),
        "angles": None if result.angles is None else [float(a) for a in result.angles],
        "certificate": certificate_payload(result.certificate),
        "tolerances": {"eps_rel": EPS_REL, "eps_class": EPS_CLASS, "tol": float(tol_used)},
    }
    return ResultDocument(payload)


def cheby_result_document(result) -> ResultDocument:
    from . import __version__

    payload = {
        "solver": "planarloc",
        "version": __version__,
        "kind": "chebyshev",
        "case": None,
        "solution": {"type": "point", "location": _c(result.center)},
        "radius": float(result.radius),
        "support": [int(i) for i in result.support],
        "t": [float(v) for v in result.t],
        "hull_coefficients": [float(v) for v in result.hull_coefficients],
        "certificate": None
        if result.certificate is None
        else certificate_payload(result.certificate),
        "tolerances": {"eps_rel": EPS_REL, "eps_class": EPS_CLASS},
    }
    return ResultDocument(payload)


def certify_document(kind: str, w: complex, cert) -> ResultDocument:
    from . import __version__

    payload = {
        "solver": "planarloc",
        "version": __version__,
        "kind": kind,
        "candidate": _c(w),
        "passed": bool(cert.passed),
        "residual": float(cert.residual),
        "slack": float(cert.slack),
        "certificate": certificate_payload(cert),
        "tolerances": {"eps_rel": EPS_REL, "eps_class": EPS_CLASS},
    }
    return ResultDocument(payload)
