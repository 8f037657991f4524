"""Command-line front end.

Subcommands operate on JSON documents (see the documents module) and print
JSON results or CSV verification tables.  Exit codes: 0 success, 1 a
verification or cross-method consistency failure, 2 unreadable or invalid
input, 3 an analytic obstruction (divergent transform, non-rearrangeable
input, membership failure), 4 method not applicable to the input class.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from typing import Sequence

from . import cesaro as cz
from . import documents as dc
from . import norms as nm
from . import oc
from . import oracle as orc
from . import piecewise as pw
from . import rearrange as rr
from .errors import (CesaroSpacesError, MethodInapplicableError, ParseError)
from .piecewise import PPL
from .spaces import SpaceDescriptor

RESULT_SCHEMA = "cesarospaces/result-v1"

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_PARSE = 2
EXIT_ANALYTIC = 3
EXIT_INAPPLICABLE = 4

TOL_ENV = "CESAROSPACES_TOL"


def _read_text(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


def _load_function(path: str) -> PPL:
    return dc.load_function(_read_text(path))


def _load_space(path: str) -> SpaceDescriptor:
    return dc.load_space(_read_text(path))


def _write(out: str | None, text: str) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    with open(out, "w", encoding="utf-8") as handle:
        handle.write(text)


def _parse_grid(spec: str | None, f: PPL) -> list[float]:
    if spec is None:
        return pw.sample_grid(f)
    pts = []
    for chunk in spec.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            t = float(chunk)
        except ValueError as exc:
            raise ParseError(f"bad grid entry {chunk!r}") from exc
        if not (t > 0.0 and t <= f.domain.end) or math.isnan(t):
            raise ParseError(f"grid point {chunk} outside (0, end]")
        pts.append(t)
    if not pts:
        raise ParseError("empty grid")
    return pts


def _tolerance(args: argparse.Namespace) -> float | None:
    if args.tol is not None:
        return args.tol
    raw = os.environ.get(TOL_ENV)
    if raw is None:
        return None
    try:
        return float(raw)
    except ValueError as exc:
        raise ParseError(f"{TOL_ENV} is not a number: {raw!r}") from exc


def _verdict_doc(operation: str, v: oc.OCVerdict, extra: dict | None = None) -> dict:
    doc = {"schema": RESULT_SCHEMA, "operation": operation,
           "verdict": v.verdict, "rule": v.rule, "evidence": v.evidence}
    if extra:
        doc.update(extra)
    return doc


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_norm(args: argparse.Namespace) -> int:
    f = _load_function(args.function)
    X = _load_space(args.space)
    if X.tag == "cesaro" and not f.is_zero:
        # an undefined transform is an analytic error at the command level,
        # even though the library reads it as plain non-membership
        res = nm.norm(cz.cesaro_transform(pw.absolute(f)), X.inner)
    else:
        res = nm.norm(f, X)
    doc = {"schema": RESULT_SCHEMA, "operation": "norm",
           "space": X.describe(), "value": res.value,
           "method": res.method, "error_bound": res.error_bound}
    _write(args.out, dc.dumps(doc))
    return EXIT_OK


def _cmd_rearrange(args: argparse.Namespace) -> int:
    f = _load_function(args.function)
    r = rr.decreasing_rearrangement(f)
    grid = _parse_grid(args.grid, f)
    samples = [[t, r.evaluate(t)] for t in grid]
    doc = {"schema": RESULT_SCHEMA, "operation": "rearrange",
           "exact": dc.function_to_doc(r.exact) if r.exact is not None else None,
           "sup": r.sup_value,
           "support_measure": r.support_measure(),
           "samples": samples}
    _write(args.out, dc.dumps(doc))
    return EXIT_OK


def _cmd_cesaro(args: argparse.Namespace) -> int:
    f = _load_function(args.function)
    cf = cz.cesaro_transform(f)
    grid = _parse_grid(args.grid, f)
    samples = [[t, pw.evaluate(cf, t)] for t in grid]
    doc = {"schema": RESULT_SCHEMA, "operation": "averaging-transform",
           "exact": dc.function_to_doc(cf), "samples": samples}
    _write(args.out, dc.dumps(doc))
    return EXIT_OK


def _cmd_oc_point(args: argparse.Namespace) -> int:
    f = _load_function(args.function)
    CX = _load_space(args.space)
    verdict = oc.oc_point(f, CX, method=args.method)
    extra: dict = {"method": args.method}
    code = EXIT_OK
    if verdict.rule == "method-conflict":
        code = EXIT_VERIFY
    if args.adversarial > 0:
        report = oc.adversarial_family_search(f, CX, budget=args.adversarial,
                                              seed=args.seed)
        extra["adversarial"] = {"found": report.found,
                                "families_tried": report.families_tried,
                                "witness": report.witness}
        if report.found and verdict.is_oc is True:
            extra["conflict"] = "witness family refutes the OC verdict"
            code = EXIT_VERIFY
    _write(args.out, dc.dumps(_verdict_doc("oc-point", verdict, extra)))
    return code


def _cmd_oc_space(args: argparse.Namespace) -> int:
    X = _load_space(args.space)
    if args.method == "transfer":
        verdict = oc.oc_space_via_transfer(X)
    else:
        verdict = oc.oc_space(X)
    _write(args.out, dc.dumps(_verdict_doc("oc-space", verdict,
                                           {"method": args.method,
                                            "space": X.describe()})))
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    f = _load_function(args.function)
    reports = [orc.rearrangement_oracle(f)]
    if args.space is not None:
        X = _load_space(args.space)
        reports.append(orc.quadrature_norm_oracle(f, X, name="norm"))
    tol = _tolerance(args)
    if tol is not None:
        reports = [orc.OracleReport(r.name, r.exact, r.oracle, tol, r.note)
                   for r in reports]
    lines = ["check,exact,oracle,tolerance,status"]
    lines.extend(r.row() for r in reports)
    _write(args.out, "\n".join(lines) + "\n")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_VERIFY


# ---------------------------------------------------------------------------
# parser wiring


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cesarospaces",
        description="Exact norms, rearrangements, averaging transforms, and "
                    "order-continuity decisions for piecewise functions.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, space_required: bool | None) -> None:
        p.add_argument("--function", required=True,
                       help="path to a function document")
        if space_required is not None:
            p.add_argument("--space", required=space_required,
                           help="path to a space document")
        p.add_argument("--out", help="write the result here instead of stdout")

    p_norm = sub.add_parser("norm", help="compute a norm")
    common(p_norm, True)
    p_norm.set_defaults(handler=_cmd_norm)

    p_re = sub.add_parser("rearrange", help="decreasing rearrangement")
    common(p_re, None)
    p_re.add_argument("--grid", help="comma-separated sample points")
    p_re.set_defaults(handler=_cmd_rearrange)

    p_cz = sub.add_parser("cesaro", help="averaging transform")
    common(p_cz, None)
    p_cz.add_argument("--grid", help="comma-separated sample points")
    p_cz.set_defaults(handler=_cmd_cesaro)

    p_pt = sub.add_parser("oc-point", help="order continuity of one function")
    common(p_pt, True)
    p_pt.add_argument("--method", default="closed-form",
                      choices=["closed-form", "theorem", "direct", "all"])
    p_pt.add_argument("--adversarial", type=int, default=0, metavar="BUDGET",
                      help="also hunt for a refuting family with this budget")
    p_pt.add_argument("--seed", type=int, default=0)
    p_pt.set_defaults(handler=_cmd_oc_point)

    p_sp = sub.add_parser("oc-space", help="order continuity of a whole space")
    p_sp.add_argument("--space", required=True)
    p_sp.add_argument("--out")
    p_sp.add_argument("--method", default="family",
                      choices=["family", "transfer"])
    p_sp.set_defaults(handler=_cmd_oc_space)

    p_vf = sub.add_parser("verify", help="run independent numeric oracles")
    common(p_vf, False)
    p_vf.add_argument("--tol", type=float,
                      help=f"override oracle tolerances (or set {TOL_ENV})")
    p_vf.set_defaults(handler=_cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.handler(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except MethodInapplicableError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INAPPLICABLE
    except CesaroSpacesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ANALYTIC


if __name__ == "__main__":
    sys.exit(main())
