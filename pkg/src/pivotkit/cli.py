"""Command-line front end.

Exit codes: 0 success/PASS, 1 property violated (witness printed),
2 usage or parse error, 3 budget or size cap exceeded (unknown).
All file arguments accept `-` for stdin; all formats are line-oriented
ASCII with `#` comment lines ignored.
"""

from __future__ import annotations

import argparse
import sys

from .cutrank import cut_rank, find_low_rank_separation
from .errors import (CapExceeded, FormatError, OrbitBudgetExceeded,
                     SearchBudgetExceeded, UnknownCampaign)
from .extremal import format_instance, gen_c6_blowup_example, gen_ktt_example, gen_random_instance
from .gf2 import parse_matrix
from .graph import format_bigraph, format_graph, parse_bigraph, parse_graph
from .matroid import (circuits, cographic_matroid, connectivity_lambda,
                      format_matroid, graphic_matroid, is_k_connected, minor,
                      parse_matroid, parse_multigraph)
from .pivot import is_pivot_minor, pivot
from .structure import (constant_block_partition, format_block_partition,
                        format_tree_split, perturbation_partition, split_tree)
from .verify import campaign_names, format_report, replay_report, run_campaign

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def _csv_ints(raw: str) -> list[int]:
    return [int(x) for x in raw.split(",") if x != ""]


def _csv_strs(raw: str) -> list[str]:
    return [x for x in raw.split(",") if x != ""]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pivotkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate an instance")
    gen_sub = p.add_subparsers(dest="generator", required=True)
    g = gen_sub.add_parser("ktt")
    g.add_argument("t", type=int)
    g = gen_sub.add_parser("c6blowup")
    g.add_argument("s", type=int)
    g = gen_sub.add_parser("random")
    g.add_argument("n", type=int)
    g.add_argument("extra", type=int)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--allow-loops", action="store_true")

    p = sub.add_parser("fundgraph", help="fundamental graph of a multigraph")
    p.add_argument("file")

    p = sub.add_parser("pivot", help="pivot a graph edge")
    p.add_argument("file")
    p.add_argument("x", type=int)
    p.add_argument("y", type=int)

    p = sub.add_parser("cutrank", help="cut-rank of a vertex set")
    p.add_argument("file")
    p.add_argument("--set", dest="vertex_set", required=True)

    p = sub.add_parser("rankconn", help="certify k-rank-connectivity")
    p.add_argument("file")
    p.add_argument("k", type=int)

    p = sub.add_parser("matroid", help="binary matroid operations")
    msub = p.add_subparsers(dest="matroid_command", required=True)
    m = msub.add_parser("fromgraph")
    m.add_argument("file")
    m.add_argument("--cographic", action="store_true")
    m = msub.add_parser("circuits")
    m.add_argument("file")
    m = msub.add_parser("minor")
    m.add_argument("file")
    m.add_argument("--delete", default="")
    m.add_argument("--contract", default="")
    m = msub.add_parser("lambda")
    m.add_argument("file")
    m.add_argument("--set", dest="element_set", required=True)
    m = msub.add_parser("connectivity")
    m.add_argument("file")
    m.add_argument("k", type=int)

    p = sub.add_parser("splittree", help="split a tree into large parts")
    p.add_argument("file")
    p.add_argument("s", type=int)

    p = sub.add_parser("partition", help="constant-block partition")
    p.add_argument("file", nargs="?")
    p.add_argument("--pair", nargs=2, metavar=("G1", "G2"))

    p = sub.add_parser("pivotminor", help="pivot-minor containment search")
    p.add_argument("h_file")
    p.add_argument("g_file")
    p.add_argument("--budget", type=int, default=20000)
    p.add_argument("--refute", action="store_true",
                   help="exit 1 when the pivot-minor IS found")

    p = sub.add_parser("check", help="run a verification campaign")
    p.add_argument("campaign", choices=campaign_names())
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--k-max", type=int)
    p.add_argument("--bound-offset", type=int)
    p.add_argument("--max-edges", type=int)
    p.add_argument("--classes", type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--size", type=int)
    p.add_argument("--max-rank", type=int)
    p.add_argument("--max-elements", type=int)
    p.add_argument("--instance", action="append", dest="instances",
                   help="ktt:<t> | c6blowup:<s> | random:<n>:<extra>:<seed>; "
                        "repeatable, replaces random generation")

    p = sub.add_parser("replay", help="re-verify the witnesses in a report")
    p.add_argument("file")
    return parser


def _cmd_gen(args) -> int:
    if args.generator == "ktt":
        inst = gen_ktt_example(args.t)
    elif args.generator == "c6blowup":
        inst = gen_c6_blowup_example(args.s)
    else:
        inst = gen_random_instance(args.n, args.extra, args.seed,
                                   allow_loops=args.allow_loops)
    sys.stdout.write(format_instance(inst))
    return EXIT_OK


def _cmd_fundgraph(args) -> int:
    mg, tree = parse_multigraph(_read(args.file))
    m = graphic_matroid(mg, tree)
    sys.stdout.write(format_bigraph(m.fundamental_graph()))
    return EXIT_OK


def _cmd_pivot(args) -> int:
    g = parse_graph(_read(args.file))
    sys.stdout.write(format_graph(pivot(g, args.x, args.y)))
    return EXIT_OK


def _cmd_cutrank(args) -> int:
    g = parse_graph(_read(args.file))
    print(cut_rank(g, _csv_ints(args.vertex_set)))
    return EXIT_OK


def _cmd_rankconn(args) -> int:
    g = parse_graph(_read(args.file))
    sep = find_low_rank_separation(g, args.k)
    if sep is None:
        print(f"{args.k}-rank-connected")
        return EXIT_OK
    print(f"separation order={sep.order} cutrank={sep.cutrank_value} "
          f"side={','.join(map(str, sep.side_x))}")
    return EXIT_VIOLATION


def _cmd_matroid(args) -> int:
    if args.matroid_command == "fromgraph":
        mg, tree = parse_multigraph(_read(args.file))
        m = cographic_matroid(mg, tree) if args.cographic else graphic_matroid(mg, tree)
        sys.stdout.write(format_matroid(m))
        return EXIT_OK
    m = parse_matroid(_read(args.file))
    if args.matroid_command == "circuits":
        for circuit in sorted(sorted(c) for c in circuits(m)):
            print(" ".join(circuit))
        return EXIT_OK
    if args.matroid_command == "minor":
        result = minor(m, _csv_strs(args.delete), _csv_strs(args.contract))
        sys.stdout.write(format_matroid(result))
        return EXIT_OK
    if args.matroid_command == "lambda":
        print(connectivity_lambda(m, _csv_strs(args.element_set)))
        return EXIT_OK
    connected, witness = is_k_connected(m, args.k)
    if connected:
        print(f"{args.k}-connected")
        return EXIT_OK
    print("separation side=" + ",".join(sorted(witness)))
    return EXIT_VIOLATION


def _cmd_splittree(args) -> int:
    tree = parse_graph(_read(args.file))
    sys.stdout.write(format_tree_split(split_tree(tree, args.s)))
    return EXIT_OK


def _cmd_partition(args) -> int:
    if args.pair:
        g1 = parse_bigraph(_read(args.pair[0]))
        g2 = parse_bigraph(_read(args.pair[1]))
        bp = perturbation_partition(g1, g2)
    elif args.file:
        bp = constant_block_partition(parse_matrix(_read(args.file)))
    else:
        print("partition: need a matrix file or --pair", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(format_block_partition(bp))
    return EXIT_OK


def _cmd_pivotminor(args) -> int:
    h = parse_graph(_read(args.h_file))
    g = parse_graph(_read(args.g_file))
    found, witness = is_pivot_minor(h, g, args.budget)
    if found:
        steps = " ".join("pivot:%d,%d" % step[1:] if step[0] == "pivot"
                         else "delete:%d" % step[1] for step in witness)
        print(f"yes {steps}".rstrip())
        return EXIT_VIOLATION if args.refute else EXIT_OK
    print("no")
    return EXIT_OK


def _cmd_check(args) -> int:
    params = {}
    mapping = {"trials": "trials", "s": "s", "t": "t", "k_max": "k_max",
               "bound_offset": "bound_offset", "max_edges": "max_edges",
               "classes": "classes", "n_max": "n_max", "size": "size",
               "max_rank": "max_rank", "max_elements": "max_elements",
               "instances": "instances"}
    for attr, key in mapping.items():
        value = getattr(args, attr, None)
        if value is not None:
            params[key] = value
    report = run_campaign(args.campaign, params, seed=args.seed)
    sys.stdout.write(format_report(report))
    return EXIT_OK if report.passed else EXIT_VIOLATION


def _cmd_replay(args) -> int:
    results = replay_report(_read(args.file))
    if not results:
        print("no witnesses")
        return EXIT_OK
    all_confirmed = True
    for i, (_, retriggered) in enumerate(results):
        print(f"witness {i} " + ("CONFIRMED" if retriggered else "NOT-REPRODUCED"))
        all_confirmed &= retriggered
    if not all_confirmed:
        print("replay: some witnesses did not re-trigger", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_VIOLATION


_DISPATCH = {
    "gen": _cmd_gen,
    "fundgraph": _cmd_fundgraph,
    "pivot": _cmd_pivot,
    "cutrank": _cmd_cutrank,
    "rankconn": _cmd_rankconn,
    "matroid": _cmd_matroid,
    "splittree": _cmd_splittree,
    "partition": _cmd_partition,
    "pivotminor": _cmd_pivotminor,
    "check": _cmd_check,
    "replay": _cmd_replay,
}


def run_cli(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return _DISPATCH[args.command](args)
    except (OrbitBudgetExceeded, SearchBudgetExceeded, CapExceeded) as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (FormatError, UnknownCampaign, FileNotFoundError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run_cli())
