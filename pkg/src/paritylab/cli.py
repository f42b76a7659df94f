"""Command-line front end.

Exit codes: 0 success / feasible, 1 infeasible or failed verification,
2 usage error, 3 enumeration / edge cap exceeded.
"""
from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import __version__
from .connectivity import edge_connectivity
from .errors import (
    GraphTooLargeForEnumeration,
    ParityLabError,
    TooManyEdges,
)
from .experiment import parse_config, run_verification_experiment
from .generators import ExtremalParams, extremal_construction, random_regular
from .graph import Graph, VertexSet, emit_graph, parse_graph
from .lovasz import (
    DEFAULT_ENUMERATION_CAP,
    ParitySpec,
    decide_by_enumeration,
    deficiency,
    parse_witness,
    serialize_witness,
    verify_witness,
)
from .solver import (
    DEFAULT_EDGE_CAP,
    Factor,
    brute_force_factor,
    find_parity_factor,
    parse_factor,
    serialize_factor,
    verify_factor,
)
from .theorems import ALL_CASES, check_main_conditions

EXIT_OK = 0
EXIT_INFEASIBLE = 1
EXIT_USAGE = 2
EXIT_CAP = 3


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _load_graph(path: str) -> tuple[Graph, str]:
    text = _read_text(path)
    return parse_graph(text), text


def _hub_metadata(text: str) -> VertexSet | None:
    for line in text.splitlines():
        stripped = line.strip()
        if stripped.startswith("# hubs:"):
            return VertexSet.of(int(x) for x in stripped[len("# hubs:"):].split())
    return None


def _load_spec(args, n: int) -> ParitySpec:
    if args.spec_file:
        g_vals, f_vals = [], []
        for line in _read_text(args.spec_file).splitlines():
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            gv, fv = (int(x) for x in line.split())
            g_vals.append(gv)
            f_vals.append(fv)
        return ParitySpec(tuple(g_vals), tuple(f_vals))
    if args.a is None or args.b is None:
        raise ParityLabError("either --a/--b or --spec-file is required")
    return ParitySpec.constant(args.a, args.b, n)


def _default_seed() -> int:
    return int(os.environ.get("PARITYLAB_SEED", "0"))


def _dot_graph(g: Graph, bold_edges=(), marked_vertices=()) -> str:
    bold = {tuple(sorted(e)) for e in bold_edges}
    marked = set(marked_vertices)
    lines = ["graph G {"]
    for v in range(g.n):
        attrs = ' [style=filled, fillcolor=lightgray]' if v in marked else ""
        lines.append(f"  {v}{attrs};")
    for u, v in g.edges:
        attrs = ' [style=bold, penwidth=3]' if (u, v) in bold else ""
        lines.append(f"  {u} -- {v}{attrs};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _infeasibility_witness(g: Graph, spec: ParitySpec, raw_text: str, enum_cap: int):
    """Best-effort witness for an infeasible instance: full enumeration when the
    graph is small enough, then the hub metadata a construct pipeline carries,
    then the (empty, empty) pair that catches odd-f(V) obstructions."""
    if g.n <= enum_cap:
        decision = decide_by_enumeration(g, spec, enum_cap)
        if not decision.feasible:
            return decision.witness
    hubs = _hub_metadata(raw_text)
    if hubs is not None and all(v < g.n for v in hubs):
        w = deficiency(g, spec, hubs, VertexSet.empty())
        if w.delta < 0:
            return w
    w = deficiency(g, spec, VertexSet.empty(), VertexSet.empty())
    if w.delta < 0:
        return w
    return None


def cmd_solve(args) -> int:
    g, raw = _load_graph(args.graph)
    spec = _load_spec(args, g.n)
    if args.method == "brute":
        factor = brute_force_factor(g, spec, args.edge_cap)
    else:
        factor = find_parity_factor(g, spec)
    if factor is not None:
        if args.dot:
            sys.stdout.write(_dot_graph(g, bold_edges=factor.edges))
        else:
            sys.stdout.write(serialize_factor(factor))
        return EXIT_OK
    witness = _infeasibility_witness(g, spec, raw, args.enum_cap)
    if witness is not None:
        sys.stdout.write(serialize_witness(witness))
    else:
        sys.stdout.write("infeasible (no witness within enumeration cap)\n")
    return EXIT_INFEASIBLE


def cmd_decide(args) -> int:
    g, _ = _load_graph(args.graph)
    spec = _load_spec(args, g.n)
    decision = decide_by_enumeration(g, spec, args.enum_cap)
    if decision.feasible:
        sys.stdout.write("feasible\n")
        return EXIT_OK
    sys.stdout.write(serialize_witness(decision.witness))
    return EXIT_INFEASIBLE


def cmd_deficiency(args) -> int:
    g, _ = _load_graph(args.graph)
    spec = _load_spec(args, g.n)
    s = VertexSet.of(int(x) for x in args.S.split())
    t = VertexSet.of(int(x) for x in args.T.split())
    sys.stdout.write(serialize_witness(deficiency(g, spec, s, t)))
    return EXIT_OK


def cmd_verify_factor(args) -> int:
    g, _ = _load_graph(args.graph)
    spec = _load_spec(args, g.n)
    factor = parse_factor(_read_text(args.factor), g.n)
    ok, reason = verify_factor(g, spec, factor)
    sys.stdout.write(("ok\n" if ok else f"invalid: {reason}\n"))
    return EXIT_OK if ok else EXIT_INFEASIBLE


def cmd_verify_witness(args) -> int:
    g, _ = _load_graph(args.graph)
    spec = _load_spec(args, g.n)
    witness = parse_witness(_read_text(args.witness))
    ok, reason = verify_witness(g, spec, witness)
    if ok:
        sys.stdout.write("verified: infeasibility certificate accepted\n")
        return EXIT_OK
    sys.stdout.write(f"rejected: {reason}\n")
    return EXIT_INFEASIBLE


def cmd_connectivity(args) -> int:
    g, _ = _load_graph(args.graph)
    lam, cert = edge_connectivity(g)
    sys.stdout.write(f"lambda: {lam}\n")
    sys.stdout.write("cut_side:" + "".join(f" {v}" for v in cert.cut_side) + "\n")
    sys.stdout.write(f"cut_size: {cert.cut_size}\n")
    return EXIT_OK


def cmd_construct(args) -> int:
    g, hubs = extremal_construction(ExtremalParams(args.r, args.m))
    if args.dot:
        sys.stdout.write(_dot_graph(g, marked_vertices=list(hubs)))
    else:
        sys.stdout.write(emit_graph(g))
        sys.stdout.write("# hubs:" + "".join(f" {v}" for v in hubs) + "\n")
    return EXIT_OK


def cmd_gen_random(args) -> int:
    seed = args.seed if args.seed is not None else _default_seed()
    g = random_regular(args.n, args.r, seed)
    sys.stdout.write(emit_graph(g))
    return EXIT_OK


def cmd_check_conditions(args) -> int:
    report = check_main_conditions(args.r, args.m, args.a, args.b, args.n_even)
    relevant = [c for c in ALL_CASES if c.startswith("Main")] if args.a != args.b else list(ALL_CASES)
    for case in relevant:
        status = "satisfied" if case in report.satisfied_cases else "not satisfied"
        sys.stdout.write(f"{case}: {status}\n")
    return EXIT_OK


def cmd_experiment(args) -> int:
    config = parse_config(_read_text(args.config))
    report = run_verification_experiment(config)
    sys.stdout.write(report.to_table())
    if args.csv:
        Path(args.csv).write_text(report.to_csv())
    return EXIT_OK


def _add_spec_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--a", type=int, default=None, help="constant lower bound")
    p.add_argument("--b", type=int, default=None, help="constant upper bound")
    p.add_argument("--spec-file", default=None, help="per-vertex 'g f' lines")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="paritylab",
        description="Decide, construct, and certify parity factors in undirected graphs.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="construct a parity factor or certify infeasibility")
    p.add_argument("graph", help="graph file or '-' for stdin")
    _add_spec_flags(p)
    p.add_argument("--method", choices=("gadget", "brute"), default="gadget")
    p.add_argument("--enum-cap", type=int, default=DEFAULT_ENUMERATION_CAP)
    p.add_argument("--edge-cap", type=int, default=DEFAULT_EDGE_CAP)
    p.add_argument("--dot", action="store_true", help="emit the certificate as DOT")
    p.set_defaults(fn=cmd_solve)

    p = sub.add_parser("decide", help="exhaustive feasibility decision (small graphs)")
    p.add_argument("graph")
    _add_spec_flags(p)
    p.add_argument("--enum-cap", type=int, default=DEFAULT_ENUMERATION_CAP)
    p.set_defaults(fn=cmd_decide)

    p = sub.add_parser("deficiency", help="evaluate delta(S,T) for given sets")
    p.add_argument("graph")
    _add_spec_flags(p)
    p.add_argument("--S", default="", help="space-separated vertex ids")
    p.add_argument("--T", default="", help="space-separated vertex ids")
    p.set_defaults(fn=cmd_deficiency)

    p = sub.add_parser("verify-factor", help="check a factor block against a graph")
    p.add_argument("graph")
    _add_spec_flags(p)
    p.add_argument("--factor", required=True, help="factor block file or '-'")
    p.set_defaults(fn=cmd_verify_factor)

    p = sub.add_parser("verify-witness", help="check an infeasibility witness block")
    p.add_argument("graph")
    _add_spec_flags(p)
    p.add_argument("--witness", required=True, help="witness block file or '-'")
    p.set_defaults(fn=cmd_verify_witness)

    p = sub.add_parser("connectivity", help="exact edge-connectivity with a cut")
    p.add_argument("graph")
    p.set_defaults(fn=cmd_connectivity)

    p = sub.add_parser("construct", help="emit the sharpness construction")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--dot", action="store_true")
    p.set_defaults(fn=cmd_construct)

    p = sub.add_parser("gen-random", help="seeded random regular graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--seed", type=int, default=None,
                   help="defaults to PARITYLAB_SEED, then 0")
    p.set_defaults(fn=cmd_gen_random)

    p = sub.add_parser("check-conditions", help="evaluate the theorem conditions")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--n-even", dest="n_even", action="store_true")
    group.add_argument("--n-odd", dest="n_even", action="store_false")
    p.set_defaults(fn=cmd_check_conditions)

    p = sub.add_parser("experiment", help="run a verification experiment config")
    p.add_argument("config", help="key=value config file or '-'")
    p.add_argument("--csv", default=None, help="also write the machine-readable CSV here")
    p.set_defaults(fn=cmd_experiment)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (GraphTooLargeForEnumeration, TooManyEdges) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ParityLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
