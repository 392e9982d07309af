"""``gyrolab`` command line interface.

Every subcommand prints one JSON report (or writes it to ``--out``). The
exit code mirrors the report's ``status``: 0 for pass, 1 for fail or a
domain error, 2 for an unparseable table file, 64 for bad usage. Reports
carry no timestamps, so identical inputs give byte-identical output.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys

from . import __version__
from .core import check_axioms
from .einstein import EinsteinModel
from .errors import GyroError, TableParseError
from .finite import (
    coset_partition,
    enumerate_subgyrogroups,
    format_gyro,
    is_symmetric,
    kg_violation,
    members,
    parse_gyro,
    product_gyrogroup,
    search_gyrogroups,
    set_oplus,
    star_of_point,
    translate_cover,
    verify_gyrogroup,
)
from .finite.subgroups import DEFAULT_MAX_ORDER as SUBS_MAX_ORDER
from .finite.verify import require_gyrogroup
from .mobius import MobiusModel
from .topo import admissible_chain_check, strongly_topological_base_check

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_PARSE = 2
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def _digest(*parts: bytes) -> str:
    h = hashlib.sha256()
    for p in parts:
        h.update(hashlib.sha256(p).digest())
    return h.hexdigest()


def _load(path):
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError:
        raise TableParseError("file is not UTF-8 text") from None
    return parse_gyro(text), raw


def _subset(text):
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise UsageError(f"--subset expects comma-separated integers, got {text!r}") from None


def _params_digest(args, keys):
    params = {k: getattr(args, k) for k in keys}
    return _digest(json.dumps(params, sort_keys=True).encode())


def _model(args):
    if args.model == "mobius":
        return MobiusModel()
    return EinsteinModel(args.c)


# -- subcommands: each returns the report body with a "status" key ----------

def cmd_verify(args):
    t, raw = _load(args.path)
    report = verify_gyrogroup(t)
    return {
        "input_digest": _digest(raw),
        "order": t.n,
        "status": "pass" if report.passed else "fail",
        "axioms": report.to_dict(),
    }


def cmd_subs(args):
    t, raw = _load(args.path)
    subs = enumerate_subgyrogroups(t, max_order=args.max_order)
    return {
        "input_digest": _digest(raw),
        "order": t.n,
        "status": "pass",
        "subgyrogroups": [{"elements": s.elements, "order": len(s), "l_subgyrogroup": s.is_l} for s in subs],
    }


def cmd_cosets(args):
    t, raw = _load(args.path)
    H = _subset(args.subset)
    part = coset_partition(t, H, allow_non_l=args.allow_non_l)
    return {
        "input_digest": _digest(raw),
        "order": t.n,
        "subset": members(part.subset),
        "l_subgyrogroup": part.is_l_subgyrogroup,
        "status": "pass" if part.is_partition else "fail",
        "cells": part.cell_members(),
        "representatives": part.representatives,
        "quotient": part.quotient,
        "checks": part.checks,
    }


def cmd_product(args):
    t1, raw1 = _load(args.left)
    t2, raw2 = _load(args.right)
    p = product_gyrogroup(t1, t2)
    report = verify_gyrogroup(p)
    if args.table_out:
        with open(args.table_out, "w", encoding="utf-8") as fh:
            fh.write(format_gyro(p))
    return {
        "input_digest": _digest(raw1, raw2),
        "order": p.n,
        "status": "pass" if report.passed else "fail",
        "table": p.rows(),
        "axioms": report.to_dict(),
    }


def cmd_search(args):
    if args.jobs < 1:
        raise UsageError("--jobs must be >= 1")
    res = search_gyrogroups(
        args.order,
        max_nodes=args.max_nodes,
        time_limit=args.time_limit,
        jobs=args.jobs,
        allow_large=args.allow_large,
    )
    body = {
        "input_digest": _params_digest(args, ["order", "max_nodes", "allow_large"]),
        "order": args.order,
        "status": "pass" if res.complete else "incomplete",
        "complete": res.complete,
        "count": len(res.tables),
        "result_digest": res.digest(),
        "tables": [
            {"table": t.rows(), "associative": t.is_associative()} for t in res.tables
        ],
        "nodes": res.nodes,
        "subtrees": res.subtrees,
    }
    return body


def cmd_axioms(args):
    model = _model(args)
    report = check_axioms(model, count=args.samples, tol=args.tol, seed=args.seed, radius=args.radius)
    return {
        "input_digest": _params_digest(args, ["model", "samples", "seed", "tol", "radius", "c"]),
        "model": repr(model),
        "status": "pass" if report.passed else "fail",
        "max_residual": report.max_residual,
        "axioms": report.to_dict(),
    }


def cmd_chain(args):
    model = _model(args)
    radii = [float(x) for x in args.radii.split(",") if x.strip()]
    report = admissible_chain_check(model, radii, samples=args.samples, seed=args.seed, tol=args.tol)
    return {
        "input_digest": _params_digest(args, ["model", "radii", "samples", "seed", "tol", "c"]),
        "model": repr(model),
        "status": report.status,
        "chain": report.to_dict(),
    }


def cmd_base(args):
    model = _model(args)
    radii = [float(x) for x in args.radii.split(",") if x.strip()]
    res = strongly_topological_base_check(model, radii, samples=args.samples, seed=args.seed, tol=args.tol)
    return {
        "input_digest": _params_digest(args, ["model", "radii", "samples", "seed", "tol", "c"]),
        "model": repr(model),
        "status": "pass" if res.passed else "fail",
        "base": res.to_dict(),
    }


def cmd_star(args):
    t, raw = _load(args.path)
    t = require_gyrogroup(t)
    U = _subset(args.subset)
    cover = translate_cover(t, U)
    star = star_of_point(cover, args.point)
    body = {
        "input_digest": _digest(raw),
        "order": t.n,
        "subset": sorted(set(U)),
        "point": args.point,
        "cover": [members(c) for c in cover],
        "star": members(star),
        "status": "pass",
    }
    if is_symmetric(t, U):
        uu = set_oplus(t, U, U)
        body["point_plus_UU"] = members(set_oplus(t, 1 << args.point, uu))
        bad = kg_violation(t, U)
        body["kg_chain"] = {"holds": bad is None, "witness": None if bad is None else list(bad)}
        if bad is not None:
            body["status"] = "fail"
    else:
        body["kg_chain"] = None
    return body


def _add_model_args(p, samples, tol):
    p.add_argument("--model", choices=("mobius", "einstein"), required=True)
    p.add_argument("--samples", type=int, default=samples)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=tol)
    p.add_argument("--c", type=float, default=1.0, help="speed bound of the Einstein model")


def build_parser():
    parser = _Parser(prog="gyrolab", description=__doc__.split("\n")[0])
    parser.add_argument("--version", action="version", version=f"gyrolab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_out(p):
        p.add_argument("--out", help="write the report here instead of stdout")
        return p

    p = with_out(sub.add_parser("verify", help="check every gyrogroup axiom on a .gyro table"))
    p.add_argument("path")
    p.set_defaults(func=cmd_verify)

    p = with_out(sub.add_parser("subs", help="list subgyrogroups and their L-status"))
    p.add_argument("path")
    p.add_argument("--max-order", type=int, default=SUBS_MAX_ORDER)
    p.set_defaults(func=cmd_subs)

    p = with_out(sub.add_parser("cosets", help="left coset partition by a subgyrogroup"))
    p.add_argument("path")
    p.add_argument("--subset", required=True)
    p.add_argument("--allow-non-l", action="store_true")
    p.set_defaults(func=cmd_cosets)

    p = with_out(sub.add_parser("product", help="direct product of two tables"))
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--table-out", help="also write the product as a .gyro file")
    p.set_defaults(func=cmd_product)

    p = with_out(sub.add_parser("search", help="all gyrogroups of a given order"))
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--max-nodes", type=int, default=None, help="node budget per subtree")
    p.add_argument("--time-limit", type=float, default=None, help="wall-clock budget in seconds")
    p.add_argument("--allow-large", action="store_true", help="permit orders 7 and 8")
    p.set_defaults(func=cmd_search)

    p = with_out(sub.add_parser("axioms", help="sampled axiom check of a continuous model"))
    _add_model_args(p, 100_000, 1e-9)
    p.add_argument("--radius", type=float, default=0.95)
    p.set_defaults(func=cmd_axioms)

    p = with_out(sub.add_parser("chain", help="check U[n+1] ⊕ (U[n+1] ⊕ U[n+1]) ⊆ U[n] for a radius chain"))
    _add_model_args(p, 10_000, 1e-9)
    p.add_argument("--radii", required=True, help="comma-separated, strictly decreasing")
    p.set_defaults(func=cmd_chain)

    p = with_out(sub.add_parser("base", help="gyration invariance of a family of balls"))
    _add_model_args(p, 10_000, None)
    p.add_argument("--radii", required=True)
    p.set_defaults(func=cmd_base)

    p = with_out(sub.add_parser("star", help="star of a point in the translate cover {x ⊕ U}"))
    p.add_argument("path")
    p.add_argument("--subset", required=True, help="U, must contain the identity")
    p.add_argument("--point", type=int, required=True)
    p.set_defaults(func=cmd_star)
    return parser


def _status_code(status):
    return EXIT_OK if status == "pass" else EXIT_FAIL


def execute(args) -> tuple[int, dict]:
    head = {"tool": "gyrolab", "version": __version__, "command": args.command}
    try:
        body = args.func(args)
        code = _status_code(body["status"])
    except UsageError as exc:
        body, code = _error("usage", exc), EXIT_USAGE
    except TableParseError as exc:
        body, code = _error("parse", exc), EXIT_PARSE
    except (GyroError, ValueError) as exc:
        body, code = _error(type(exc).__name__, exc), EXIT_FAIL
    return code, {**head, **body}


def run(argv=None) -> tuple[int, dict]:
    """Parse ``argv`` and run the subcommand; returns ``(exit_code, report)``."""
    return execute(build_parser().parse_args(argv))


def _error(kind, exc):
    err = {"kind": kind, "message": str(exc)}
    if isinstance(exc, TableParseError):
        err["line"], err["column"] = exc.line, exc.column
    return {"status": "error", "error": err}


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    code, report = execute(args)
    text = dumps(report)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
