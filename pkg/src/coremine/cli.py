"""Command-line front end.

Exit codes: 0 on success, 1 when ``verify`` finds a disagreement, 2 on any
input error (unreadable file, malformed line, invalid graph, bad thresholds).
"""
import argparse
import json
import sys

import numpy as np

from . import distsim, oracle
from .exceptions import GraphError, ThresholdArityMismatch
from .io import ParseError, read_edge_list, read_partite_graph
from .peel import extract_cores, peel_k, peel_partite

EXIT_OK, EXIT_VERIFY_FAILED, EXIT_INPUT_ERROR = 0, 1, 2


class InputError(Exception):
    pass


def label_key(label):
    """Sort numeric labels numerically, everything else lexically after them."""
    s = str(label)
    try:
        return (0, int(s), s)
    except ValueError:
        return (1, 0, s)


def parse_thresholds(text):
    try:
        values = [int(t) for t in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad threshold list {text!r}") from None
    if any(v < 0 for v in values):
        raise argparse.ArgumentTypeError("thresholds must be non-negative")
    return values


def parse_k_range(text):
    lo, sep, hi = text.partition("..")
    try:
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected <lo>..<hi>, got {text!r}") from None
    if not sep or lo < 0 or hi < lo:
        raise argparse.ArgumentTypeError(f"expected <lo>..<hi> with 0 <= lo <= hi, got {text!r}")
    return lo, hi


def non_negative_int(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("k must be non-negative")
    return v


class Printer:
    def __init__(self, fmt, out):
        self.structured = fmt == "structured"
        self.out = out

    def line(self, text):
        self.out.write(text + "\n")

    def record(self, record):
        self.out.write(json.dumps(record) + "\n")


def _emit_cores(pr, command, graph, result, params):
    cores = sorted((sorted(c, key=label_key) for c in extract_cores(graph, result)),
                   key=lambda c: [label_key(x) for x in c])
    active = result.active
    n_vertices = int(active.sum())
    n_edges = int(result.final_counters[active].sum()) // 2
    if pr.structured:
        for i, core in enumerate(cores):
            pr.record({"type": "core", "index": i, "size": len(core),
                       "labels": [str(x) for x in core]})
        pr.record({"type": "summary", "command": command, **params,
                   "cores": len(cores), "vertices": n_vertices, "edges": n_edges})
    else:
        for core in cores:
            pr.line(" ".join(str(x) for x in core))
        pr.line(f"cores={len(cores)} vertices={n_vertices} edges={n_edges}")
    return EXIT_OK


def cmd_peel(args, pr):
    g = read_edge_list(args.input)
    return _emit_cores(pr, "peel", g, peel_k(g, args.k), {"k": args.k})


def cmd_ppeel(args, pr):
    pg = read_partite_graph(args.input, args.partitions)
    result = peel_partite(pg, args.thresholds)
    return _emit_cores(pr, "ppeel", pg.graph, result, {"thresholds": args.thresholds})


def cmd_decompose(args, pr):
    g = read_edge_list(args.input)
    cd = oracle.bucket_decomposition(g)
    rows = sorted(zip(g.labels, cd.coreness.tolist()), key=lambda r: label_key(r[0]))
    if pr.structured:
        for lab, c in rows:
            pr.record({"type": "vertex", "label": str(lab), "coreness": c})
        pr.record({"type": "summary", "command": "decompose",
                   "vertices": g.vertex_count, "max_core": cd.max_core})
    else:
        for lab, c in rows:
            pr.line(f"{lab} {c}")
        pr.line(f"vertices={g.vertex_count} max_core={cd.max_core}")
    return EXIT_OK


def cmd_simulate(args, pr):
    if args.partitions is not None:
        if args.thresholds is None:
            raise InputError("simulate with --partitions needs --thresholds")
        target = read_partite_graph(args.input, args.partitions)
        thresholds = args.thresholds
        g = target.graph
    else:
        if args.k is None:
            raise InputError("simulate needs -k (or --partitions with --thresholds)")
        target = g = read_edge_list(args.input)
        thresholds = args.k
    report = distsim.run_sync(target, thresholds)
    bound = distsim.phase_bound(target, thresholds)
    fields = {"phases": report.phases, "total_messages": report.total_messages,
              "bound_2E": 2 * g.edge_count}
    if bound is not None:
        fields["bound_phases"] = bound
    fields["messages_per_phase"] = list(report.messages_per_phase)
    fields["active_count"] = report.active_count
    if pr.structured:
        pr.record({"type": "simulation", **fields})
    else:
        def fmt(v):
            return "[" + ",".join(map(str, v)) + "]" if isinstance(v, list) else str(v)
        pr.line(" ".join(f"{key}={fmt(v)}" for key, v in fields.items()))
    return EXIT_OK


def cmd_verify(args, pr):
    g = read_edge_list(args.input)
    if args.k_range is None:
        lo, hi = 0, (int(g.degrees.max()) if g.vertex_count else 0) + 1
    else:
        lo, hi = args.k_range
    cd = oracle.bucket_decomposition(g)
    failures = 0
    for k in range(lo, hi + 1):
        active = peel_k(g, k).active
        checks = {
            "fixpoint": np.array_equal(active, oracle.fixpoint_peel(g, k)),
            "coreness": np.array_equal(active, cd.mask(k)),
            "distributed": np.array_equal(active, distsim.run_sync(g, k).final_active),
        }
        failures += not all(checks.values())
        if pr.structured:
            pr.record({"type": "check", "k": k, "active": int(active.sum()),
                       **{name: "PASS" if ok else "FAIL" for name, ok in checks.items()}})
        else:
            verdicts = " ".join(f"{name}={'PASS' if ok else 'FAIL'}"
                                for name, ok in checks.items())
            pr.line(f"k={k} active={int(active.sum())} {verdicts}")
    status = "FAIL" if failures else "PASS"
    if pr.structured:
        pr.record({"type": "summary", "command": "verify", "result": status,
                   "checked": hi - lo + 1, "failed": failures})
    else:
        pr.line(f"verify={status} checked={hi - lo + 1} failed={failures}")
    return EXIT_VERIFY_FAILED if failures else EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="coremine", description="Mine k-cores and (k1,...,kp)-cores of graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--input", required=True, help="edge-list file")
        p.add_argument("--format", choices=("text", "structured"), default="text")
        p.set_defaults(func=func)
        return p

    p = add("peel", cmd_peel, "list the k-cores for one k")
    p.add_argument("-k", type=non_negative_int, required=True)

    p = add("ppeel", cmd_ppeel, "list the (k1,...,kp)-cores of a p-partite graph")
    p.add_argument("--partitions", required=True, help="partition file")
    p.add_argument("--thresholds", type=parse_thresholds, required=True,
                   help="comma-separated k1,...,kp")

    add("decompose", cmd_decompose, "coreness of every vertex (reference method)")

    p = add("simulate", cmd_simulate, "run the synchronized distributed protocol")
    p.add_argument("-k", type=non_negative_int)
    p.add_argument("--partitions")
    p.add_argument("--thresholds", type=parse_thresholds)

    p = add("verify", cmd_verify, "cross-check peeling against the reference oracles")
    p.add_argument("--k-range", type=parse_k_range, help="inclusive, e.g. 0..4")
    return parser


def main(argv=None, out=None):
    args = build_parser().parse_args(argv)
    pr = Printer(args.format, out if out is not None else sys.stdout)
    try:
        return args.func(args, pr)
    except (OSError, ParseError, GraphError, ThresholdArityMismatch, InputError) as exc:
        print(f"coremine {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
