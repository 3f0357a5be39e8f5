"""Command-line front end.

Three commands: ``solve`` runs a solver and prints a certified result
document, ``certify`` checks a candidate location and prints its residual
and slack, ``plot`` renders a problem plus an existing result to SVG.
Exit codes: 0 success, 1 parse or validation trouble, 2 a certificate
refused to pass.  Nothing is ever printed as a solution without its
certificate re-run first.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from . import chebyshev as cheby
from . import documents, fermat, oracle, svgplot
from .errors import MaxIterationsExceeded, PlanarLocError
from .tolerances import EPS_REL


def _parse_at(text: str) -> complex:
    parts = text.split(",")
    if len(parts) != 2:
        raise documents.ProblemFormatError("--at: expected X,Y")
    try:
        return complex(float(parts[0]), float(parts[1]))
    except ValueError as e:
        raise documents.ProblemFormatError(f"--at: {e}") from e


def _config_of(problem: documents.ProblemFile) -> fermat.WeightedConfiguration:
    weights = problem.weights or tuple(1.0 for _ in problem.points)
    return fermat.WeightedConfiguration(problem.points, weights)


def _solve_fermat(problem, tol, max_iter) -> fermat.FtSolveResult:
    pts = problem.points
    wts = problem.weights
    unit = wts is None or all(a == 1.0 for a in wts)
    if len(pts) == 3:
        return fermat.solve_ft3_weighted(pts[0], pts[1], pts[2], wts or (1.0,) * 3)
    if len(pts) == 4 and unit:
        return fermat.solve_ft4(pts[0], pts[1], pts[2], pts[3])
    return fermat.solve_ft_n(_config_of(problem), tol=tol, max_iter=max_iter)


def _certify(problem, kind: str, w: complex, tol: Optional[float]):
    if kind == "fermat":
        return fermat.ft_certificate(_config_of(problem), w, tol)
    return cheby.cheby_certificate(problem.points, problem.weights, w)


def _recertify_location(result) -> complex:
    if isinstance(result.solution, fermat.FtSegment):
        return 0.5 * (result.solution.start + result.solution.end)
    return result.solution.location


def cmd_solve(args) -> int:
    problem = documents.load_problem(args.input, args.kind)
    kind = problem.kind
    if kind is None:
        raise documents.ProblemFormatError("kind: give it in the file or via --kind")
    if args.certificate_only:
        if args.at is None:
            raise documents.ProblemFormatError("--certificate-only needs --at X,Y")
        return _run_certify(problem, kind, _parse_at(args.at), args.tol)
    tol = args.tol if args.tol is not None else 1e-10
    if kind == "fermat":
        try:
            result = _solve_fermat(problem, tol, args.max_iter)
        except MaxIterationsExceeded as e:
            print(f"certification failed: {e}", file=sys.stderr)
            return 2
        config = _config_of(problem)
        cert = fermat.ft_certificate(config, _recertify_location(result))
        doc = documents.fermat_result_document(result, tol)
        value = result.objective
        if args.oracle:
            _, oval = oracle.oracle_ft(config)
            gap = 1e-6 * max(1.0, config.diameter * config.total_weight)
            if value > oval + gap:
                print(
                    f"oracle disagrees: solver {value!r} vs oracle {oval!r}",
                    file=sys.stderr,
                )
                return 2
    else:
        if problem.weights is None:
            result = cheby.solve_chebyshev(problem.points)
        else:
            result = cheby.solve_chebyshev_weighted(problem.points, problem.weights)
        cert = None
        if len(problem.points) >= 2:
            cert = cheby.cheby_certificate(
                problem.points, problem.weights, result.center
            )
        doc = documents.cheby_result_document(result)
        if args.oracle:
            wts = problem.weights or tuple(1.0 for _ in problem.points)
            _, oval = oracle.oracle_cheby(problem.points, problem.weights)
            from .tolerances import spread

            gap = 1e-5 * max(1.0, spread(problem.points) * max(wts))
            if abs(result.radius - oval) > gap:
                print(
                    f"oracle disagrees: solver {result.radius!r} vs oracle {oval!r}",
                    file=sys.stderr,
                )
                return 2
    if cert is not None and not cert.passed:
        print("certification failed: result withheld", file=sys.stderr)
        return 2
    sys.stdout.write(doc.to_json())
    if args.svg:
        try:
            with open(args.svg, "w", encoding="utf-8") as fh:
                fh.write(svgplot.render_svg(problem, doc.payload))
        except OSError as e:
            print(f"cannot write svg: {e}", file=sys.stderr)
            return 1
    return 0


def _run_certify(problem, kind: str, w: complex, tol: Optional[float]) -> int:
    cert = _certify(problem, kind, w, tol)
    doc = documents.certify_document(kind, w, cert)
    sys.stdout.write(doc.to_json())
    print(
        f"residual={cert.residual!r} slack={cert.slack!r} "
        f"passed={cert.passed}",
        file=sys.stderr,
    )
    return 0 if cert.passed else 2


def cmd_certify(args) -> int:
    problem = documents.load_problem(args.input, args.kind)
    kind = problem.kind
    if kind is None:
        raise documents.ProblemFormatError("kind: give it in the file or via --kind")
    return _run_certify(problem, kind, _parse_at(args.at), args.tol)


def cmd_plot(args) -> int:
    problem = documents.load_problem(args.input, args.kind)
    with open(args.result, "r", encoding="utf-8") as fh:
        doc = documents.ResultDocument.from_json(fh.read())
    kind = doc.payload.get("kind")
    if kind not in documents.KINDS:
        raise documents.ProblemFormatError("result document: missing kind")
    sol = svgplot.solution_points(doc.payload)
    w = sol[0] if len(sol) == 1 else 0.5 * (sol[0] + sol[1])
    if len(problem.points) >= 2 or kind == "fermat":
        cert = _certify(problem, kind, w, None)
        if not cert.passed:
            print("certification failed: refusing to plot", file=sys.stderr)
            return 2
    try:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(svgplot.render_svg(problem, doc.payload))
    except OSError as e:
        print(f"cannot write svg: {e}", file=sys.stderr)
        return 1
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="planarloc",
        description="Certified planar location solvers: weighted distance-sum "
        "points and covering-circle centers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="solve a problem file")
    p_solve.add_argument("input", help="problem file (JSON or CSV)")
    p_solve.add_argument("--kind", choices=documents.KINDS)
    p_solve.add_argument("--tol", type=float, default=None,
                         help="relative residual tolerance")
    p_solve.add_argument("--max-iter", type=int, default=10000)
    p_solve.add_argument("--certificate-only", action="store_true",
                         help="only certify the --at point, do not solve")
    p_solve.add_argument("--at", default=None, help="candidate X,Y")
    p_solve.add_argument("--svg", default=None, help="also render an SVG here")
    p_solve.add_argument("--oracle", action="store_true",
                         help="cross-check against the grid oracle before emitting")

    p_cert = sub.add_parser("certify", help="certify a candidate location")
    p_cert.add_argument("input")
    p_cert.add_argument("--kind", choices=documents.KINDS)
    p_cert.add_argument("--at", required=True, help="candidate X,Y")
    p_cert.add_argument("--tol", type=float, default=None)

    p_plot = sub.add_parser("plot", help="render a solved result to SVG")
    p_plot.add_argument("input")
    p_plot.add_argument("result", help="result document from solve")
    p_plot.add_argument("output", help="SVG path to write")
    p_plot.add_argument("--kind", choices=documents.KINDS)

    args = parser.parse_args(argv)
    handler = {"solve": cmd_solve, "certify": cmd_certify, "plot": cmd_plot}
    try:
        return handler[args.command](args)
    except PlanarLocError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
