"""Command-line front end.

Exit codes: 0 success, 1 bad input, 2 disconnected graph, 3 over solver cap,
4 verified set is not doubly resolving, 5 construction inapplicable,
6 conformance failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import graph as G
from .conformance import run_conformance
from .constructive import (
    ConstructionError,
    construct_diametral,
    construct_tree_basis,
    construct_unicyclic,
    cycle_basis_preferring_branch_vertices,
)
from .families import classify_n_minus_1, closed_form_psi, recognize
from .graph import DisconnectedGraphError, Graph, GraphError
from .resolve import check_doubly_resolving, vertex_set
from .solver import SolverCapError, default_cap, psi_exact

SCHEMA = 1

EXIT_OK, EXIT_INPUT, EXIT_DISCONNECTED, EXIT_CAP = 0, 1, 2, 3
EXIT_NOT_RESOLVING, EXIT_INAPPLICABLE, EXIT_CONFORMANCE = 4, 5, 6


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _load(path: str) -> tuple[Graph, G.DistanceMatrix]:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}", EXIT_INPUT) from None
    try:
        g = G.parse_graph(text)
    except GraphError as exc:
        raise CliError(f"{path}: {exc}", EXIT_INPUT) from None
    try:
        dm = G.apsp(g)
    except DisconnectedGraphError as exc:
        raise CliError(str(exc), EXIT_DISCONNECTED) from None
    return g, dm


def _summary(g: Graph, dm: G.DistanceMatrix) -> dict:
    return {"n": g.n, "edges": g.m, "diam": dm.diam, "leaves": len(G.leaves(g))}


def cmd_psi(args) -> tuple[dict, int]:
    g, dm = _load(args.file)
    cap = args.cap if args.cap is not None else default_cap()
    if g.n < 2:
        raise CliError("doubly resolving number is undefined for a single vertex", EXIT_INPUT)
    try:
        result = psi_exact(g, cap=cap, dm=dm)
    except SolverCapError as exc:
        raise CliError(str(exc), EXIT_CAP) from None
    return {"graph": _summary(g, dm), "result": result.as_dict()}, EXIT_OK


def _parse_set(text: str, n: int) -> tuple[int, ...]:
    try:
        members = [int(tok) for tok in text.split(",") if tok.strip()]
        W = vertex_set(members, n)
    except ValueError as exc:
        raise CliError(f"bad --set {text!r}: {exc}", EXIT_INPUT) from None
    if len(W) < 2:
        raise CliError("--set needs at least two vertices", EXIT_INPUT)
    return W


def cmd_verify(args) -> tuple[dict, int]:
    g, dm = _load(args.file)
    W = _parse_set(args.set, g.n)
    failure = check_doubly_resolving(dm, W)
    result = {"set": list(W), "doubly_resolving": failure is None}
    if failure is not None:
        result["witness"] = {"u": failure.u, "v": failure.v, "difference": failure.difference}
    code = EXIT_OK if failure is None else EXIT_NOT_RESOLVING
    return {"graph": _summary(g, dm), "result": result}, code


def cmd_construct(args) -> tuple[dict, int]:
    g, dm = _load(args.file)
    l = len(G.leaves(g))
    try:
        if args.method == "diametral":
            W = construct_diametral(g, dm)
            bound = {"kind": "n-diam+1", "value": g.n - dm.diam + 1}
        elif args.method == "tree":
            W = construct_tree_basis(g)
            bound = {"kind": "leaves (exact)", "value": l}
        else:
            W = construct_unicyclic(g, dm)
            cs = G.find_cycle(g)
            _, u_set = cycle_basis_preferring_branch_vertices(g, cs)
            slack = 1 if cs.m % 2 else 2
            bound = {"kind": f"leaves+{slack}", "value": l + slack,
                     "cycle_length": cs.m, "degree2_cycle_members": list(u_set)}
    except ConstructionError as exc:
        raise CliError(f"method {args.method} not applicable: {exc}", EXIT_INAPPLICABLE) from None
    verified = check_doubly_resolving(dm, W) is None
    result = {"method": args.method, "set": list(W), "size": len(W), "bound": bound, "verified": verified}
    return {"graph": _summary(g, dm), "result": result}, EXIT_OK


def cmd_family(args) -> tuple[dict, int]:
    g, dm = _load(args.file)
    fams = []
    for f in recognize(g):
        entry = f.as_dict()
        try:
            value = closed_form_psi(f)
            entry["psi"] = list(value) if isinstance(value, tuple) else value
        except ValueError:
            entry["psi"] = None
        fams.append(entry)
    return {"graph": _summary(g, dm), "result": {"families": fams}}, EXIT_OK


def cmd_classify(args) -> tuple[dict, int]:
    g, dm = _load(args.file)
    try:
        hit, fam = classify_n_minus_1(g)
    except GraphError as exc:
        raise CliError(str(exc), EXIT_INPUT) from None
    result = {"psi_is_n_minus_1": hit, "family": fam.as_dict() if fam else None}
    return {"graph": _summary(g, dm), "result": result}, EXIT_OK


def cmd_conformance(args) -> tuple[dict, int]:
    if args.count < 0:
        raise CliError("--count must be non-negative", EXIT_INPUT)
    try:
        report = run_conformance(seed=args.seed, count=args.count, max_n=args.max_n)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_INPUT) from None
    code = EXIT_OK if report["status"] == "pass" else EXIT_CONFORMANCE
    return {"result": report}, code


def _text(report: dict) -> str:
    lines = []

    def walk(prefix: str, obj):
        if isinstance(obj, dict):
            for k, v in obj.items():
                walk(f"{prefix}.{k}" if prefix else k, v)
        elif isinstance(obj, str) and "\n" in obj:
            lines.append(f"{prefix}:")
            lines.extend("  " + ln for ln in obj.rstrip("\n").splitlines())
        else:
            lines.append(f"{prefix}: {json.dumps(obj)}")

    walk("", report)
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=["json", "text"], default=argparse.SUPPRESS)
    fmt.add_argument("--timing", action="store_true", default=argparse.SUPPRESS,
                     help="add wall-clock time (makes output non-reproducible)")

    ap = argparse.ArgumentParser(prog="drs", description="Doubly resolving sets in graphs.",
                                 parents=[fmt])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("psi", parents=[fmt], help="exact doubly resolving number")
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=None, help="largest n the solver accepts")
    p.set_defaults(func=cmd_psi)

    p = sub.add_parser("verify", parents=[fmt], help="check a vertex set")
    p.add_argument("file")
    p.add_argument("--set", required=True, help="comma-separated vertex indices")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", parents=[fmt], help="build a doubly resolving set")
    p.add_argument("file")
    p.add_argument("--method", required=True, choices=["diametral", "tree", "unicyclic"])
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("family", parents=[fmt], help="recognise named families")
    p.add_argument("file")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("classify-n1", parents=[fmt], help="is psi = n - 1?")
    p.add_argument("file")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("conformance", parents=[fmt], help="randomised theorem checks")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--max-n", type=int, default=8)
    p.set_defaults(func=cmd_conformance)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    fmt = getattr(args, "format", "json")
    start = time.perf_counter()
    try:
        body, code = args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code

    args_echo = {k: v for k, v in sorted(vars(args).items())
                 if k not in ("func", "command", "format", "timing")}
    report = {"schema": SCHEMA, "command": args.command, "args": args_echo, **body}
    if getattr(args, "timing", False):
        report["timing"] = {"seconds": round(time.perf_counter() - start, 6)}
    if fmt == "json":
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        print(_text(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
