"""Command-line interface: ``nsdweight weight|verify|exact|survey|gen``.

Exit status is 0 on success, 1 when a weighting fails verification and 2 on
usage, parse or structural errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager

from .dispatch import METHODS, auto_weight
from .errors import GraphError, InvariantViolation
from .general7 import format_trace
from .generators import KINDS, all_labeled, generate
from .graph import Graph, format_edge_list, format_weighting, parse_edge_list, parse_weighting
from .oracle import DEFAULT_EDGE_CAP, exact_weighting, relaxed_parameter
from .survey import N_MAX_GUARD, survey, write_tsv
from .verify import report

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


@contextmanager
def _writer(path: str | None):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as fh:
            yield fh


def _load_graph(path: str) -> Graph:
    return parse_edge_list(_read(path))


def cmd_weight(args) -> int:
    g = _load_graph(args.input)
    traces: list | None = [] if args.trace else None
    w, cert = auto_weight(g, args.method, traces=traces)
    with _writer(args.output) as out:
        out.write(f"# method {cert.method} k {cert.k} t {cert.t}\n")
        for c in cert.components:
            out.write(f"# component {' '.join(map(str, c.vertices))} : {c.method} k {c.k} t {c.t}\n")
        out.write(format_weighting(g, w.weights))
    if args.trace:
        with _writer(args.trace) as out:
            out.write("# step vertex raised r committed (vertex indices local to the component)\n")
            for vertices, records in traces or []:
                out.write(f"# component {' '.join(map(str, vertices))}\n")
                out.write(format_trace(records))
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _load_graph(args.input)
    w = parse_weighting(g, _read(args.weights))
    rep = report(g, w.weights, t=args.t, d=args.d)
    print(json.dumps(rep.to_dict(), sort_keys=True))
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_exact(args) -> int:
    g = _load_graph(args.input)
    d = args.d if args.d is not None else relaxed_parameter(g)
    w = exact_weighting(g, "relaxed", d, max_k=args.max_k, edge_cap=args.edge_cap)
    with _writer(args.output) as out:
        out.write(f"# exact k {w.k} d {d}\n")
        out.write(format_weighting(g, w.weights))
    return EXIT_OK


def cmd_survey(args) -> int:
    rows = survey(args.n, override=args.override, jobs=args.jobs)
    with _writer(args.output) as out:
        summary = write_tsv(rows, out)
    return EXIT_OK if summary.verified == summary.rows and not summary.exact_above_dispatcher else EXIT_FAIL


def cmd_gen(args) -> int:
    if args.kind == "all_labeled":
        if args.n is None:
            raise GraphError("all_labeled needs --n")
        with _writer(args.output) as out:
            for i, g in enumerate(all_labeled(args.n, connected=args.connected, nice=args.nice)):
                if i:
                    out.write("\n")
                out.write(format_edge_list(g))
        return EXIT_OK
    names = {"n": args.n, "n1": args.n1, "n2": args.n2, "p": args.p, "max_degree": args.max_degree,
             "density": args.density, "seed": args.seed, "connected": args.connected}
    params = {k: v for k, v in names.items() if v is not None}
    g = generate(args.kind, **params)
    with _writer(args.output) as out:
        out.write(format_edge_list(g))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nsdweight", description="Neighbour-sum-distinguishing edge-weightings.")
    sub = p.add_subparsers(dest="command", required=True)

    w = sub.add_parser("weight", help="construct and certify a weighting")
    w.add_argument("--input", required=True, help="edge-list file ('-' for stdin)")
    w.add_argument("--method", choices=METHODS, default="auto")
    w.add_argument("--output", help="weighting file (default stdout)")
    w.add_argument("--trace", help="write the general7 step trace here")
    w.set_defaults(func=cmd_weight)

    v = sub.add_parser("verify", help="check a weighting against a graph")
    v.add_argument("--input", required=True)
    v.add_argument("--weights", required=True)
    v.add_argument("--t", type=int, default=2, help="local threshold (default 2)")
    v.add_argument("--d", type=int, default=None, help="relaxation (default Δ-1)")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("exact", help="least k for a distinguishing d-relaxed weighting")
    e.add_argument("--input", required=True)
    e.add_argument("--d", type=int, default=None, help="relaxation (default Δ-1)")
    e.add_argument("--max-k", type=int, default=None)
    e.add_argument("--edge-cap", type=int, default=DEFAULT_EDGE_CAP)
    e.add_argument("--output")
    e.set_defaults(func=cmd_exact)

    s = sub.add_parser("survey", help="tabulate dispatcher and exact values on small graphs")
    s.add_argument("--n", type=int, required=True, help=f"largest vertex count (guard {N_MAX_GUARD})")
    s.add_argument("--override", action="store_true", help="allow n above the guard")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--output")
    s.set_defaults(func=cmd_survey)

    g = sub.add_parser("gen", help="generate a graph")
    g.add_argument("--kind", required=True, choices=KINDS + ("all_labeled",))
    g.add_argument("--n", type=int)
    g.add_argument("--n1", type=int)
    g.add_argument("--n2", type=int)
    g.add_argument("--p", type=float)
    g.add_argument("--max-degree", type=int)
    g.add_argument("--density", type=float)
    g.add_argument("--connected", action="store_true")
    g.add_argument("--nice", action="store_true", help="all_labeled: skip graphs with a K2 component")
    g.add_argument("--seed", type=int, default=None)
    g.add_argument("--output")
    g.set_defaults(func=cmd_gen)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InvariantViolation as exc:
        print(f"nsdweight: internal check failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (GraphError, OSError) as exc:
        print(f"nsdweight: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
