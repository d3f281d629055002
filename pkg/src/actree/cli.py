"""Command-line front end: decompose, sssp, width, bench.

Exit codes: 0 ok, 2 parse or usage error, 3 contract violation (cycle,
negative weight), 4 internal invariant failure (a failed --verify or a
width disagreement, which would falsify the decomposition).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .ac_tree import build_ac_tree
from .bench import FAMILIES, run_grid, write_csv
from .dominators import compute_dominator_tree
from .graph import (
    CycleError,
    FormatError,
    Graph,
    NegativeWeightError,
    parse_dimacs_sp,
    parse_edge_list,
    prune_unreachable,
)
from .nesting import brute_force_nesting_width
from .sssp import dag_sssp, dijkstra, recursive_dijkstra, verify_spt

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CONTRACT = 3
EXIT_INTERNAL = 4

EXACT_WIDTH_LIMIT = 12

_DIMACS_EXTENSIONS = (".gr", ".dimacs")


def _detect_format(path: str, fmt: str | None) -> str:
    if fmt:
        return fmt
    return "dimacs" if path.lower().endswith(_DIMACS_EXTENSIONS) else "edgelist"


def _load_graph(args) -> Graph:
    with open(args.input, "r", encoding="utf-8") as handle:
        text = handle.read()
    if _detect_format(args.input, args.format) == "dimacs":
        return parse_dimacs_sp(text, source=getattr(args, "source", 1))
    return parse_edge_list(text)


def _load_pruned(args) -> Graph:
    g = _load_graph(args)
    pruned, remap = prune_unreachable(g)
    if pruned.node_count < g.node_count:
        dropped = [v for v, nv in enumerate(remap) if nv is None]
        print(
            f"warning: dropped {len(dropped)} unreachable nodes: "
            + " ".join(map(str, dropped)),
            file=sys.stderr,
        )
    return pruned


def _dump(doc) -> None:
    print(json.dumps(doc, separators=(",", ":")))


def cmd_decompose(args) -> int:
    g = _load_pruned(args)
    tree = build_ac_tree(g)
    doc = {
        "components": {
            str(a): [sorted(c) for c in tree.components[a]]
            for a in sorted(tree.components)
        },
        "width": tree.width,
    }
    if args.json:
        doc["idom"] = list(compute_dominator_tree(g).idom)
    _dump(doc)
    return EXIT_OK


def cmd_sssp(args) -> int:
    g = _load_pruned(args)
    if args.algo == "dijkstra":
        result = dijkstra(g)
    elif args.algo == "dag":
        result = dag_sssp(g)
    else:
        result = recursive_dijkstra(g, build_ac_tree(g))
    if args.verify:
        check = verify_spt(g, result)
        if not check:
            for violation in check.violations:
                print(f"verify: {violation}", file=sys.stderr)
            return EXIT_INTERNAL
        if args.algo == "recursive":
            oracle = dijkstra(g)
            if result.dist != oracle.dist:
                print(
                    "verify: recursive distances diverge from Dijkstra",
                    file=sys.stderr,
                )
                return EXIT_INTERNAL
    _dump(result.as_dict())
    return EXIT_OK


def cmd_width(args) -> int:
    g = _load_pruned(args)
    tree = build_ac_tree(g)
    if args.exact:
        if g.node_count > EXACT_WIDTH_LIMIT:
            print(
                f"error: --exact is limited to {EXACT_WIDTH_LIMIT} nodes "
                f"(graph has {g.node_count})",
                file=sys.stderr,
            )
            return EXIT_USAGE
        exact = brute_force_nesting_width(g)
        if exact != tree.width:
            print(
                f"internal error: exact width {exact} != decomposition width "
                f"{tree.width}",
                file=sys.stderr,
            )
            return EXIT_INTERNAL
    print(tree.width)
    return EXIT_OK


def _parse_count(token: str) -> int:
    if "^" in token:
        base, _, exp = token.partition("^")
        return int(base) ** int(exp)
    return int(token)


def parse_sizes(spec: str) -> list[int]:
    """Comma list of sizes; ``a..b`` expands by doubling, ``2^k`` works."""
    sizes: list[int] = []
    for token in (t.strip() for t in spec.split(",")):
        if not token:
            continue
        if ".." in token:
            lo_s, _, hi_s = token.partition("..")
            lo, hi = _parse_count(lo_s), _parse_count(hi_s)
            if lo < 1 or hi < lo:
                raise ValueError(f"bad size range {token!r}")
            while lo <= hi:
                sizes.append(lo)
                lo *= 2
        else:
            value = _parse_count(token)
            if value < 1:
                raise ValueError(f"bad size {token!r}")
            sizes.append(value)
    if not sizes:
        raise ValueError("empty size list")
    return sizes


def _default_seeds() -> list[int]:
    return [int(os.environ.get("ACTREE_SEED", "0"))]


def cmd_bench(args) -> int:
    try:
        sizes = parse_sizes(args.sizes)
        seeds = (
            [int(t) for t in args.seeds.split(",") if t.strip()]
            if args.seeds
            else _default_seeds()
        )
        if not seeds:
            raise ValueError("empty seed list")
        if args.family not in FAMILIES:
            raise ValueError(f"unknown graph family {args.family!r}")
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    records = run_grid(args.family, sizes, seeds)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            write_csv(records, handle)
    else:
        write_csv(records, sys.stdout)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="actree",
        description="A-C tree graph decomposition and shortest-path tools",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("input", help="graph file")
        p.add_argument(
            "--format",
            choices=("edgelist", "dimacs"),
            help="input format (default: by extension, .gr/.dimacs is DIMACS)",
        )
        p.add_argument(
            "--source",
            type=int,
            default=1,
            help="1-based source node for DIMACS input (default 1)",
        )

    p = sub.add_parser("decompose", help="print the A-C tree as JSON")
    add_input(p)
    p.add_argument(
        "--json",
        action="store_true",
        help="include the dominator tree (idom array) in the output",
    )
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("sssp", help="single-source shortest paths as JSON")
    add_input(p)
    p.add_argument(
        "--algo",
        choices=("dijkstra", "recursive", "dag"),
        default="recursive",
        help="engine to run (default recursive)",
    )
    p.add_argument(
        "--verify",
        action="store_true",
        help="check the result; recursive is also compared against Dijkstra",
    )
    p.set_defaults(func=cmd_sssp)

    p = sub.add_parser("width", help="print the nesting width")
    add_input(p)
    p.add_argument(
        "--exact",
        action="store_true",
        help=f"cross-check with the exhaustive oracle (n <= {EXACT_WIDTH_LIMIT})",
    )
    p.set_defaults(func=cmd_width)

    p = sub.add_parser("bench", help="run the benchmark grid, CSV output")
    p.add_argument("--family", required=True, help="|".join(FAMILIES))
    p.add_argument("--sizes", required=True, help="e.g. 2^10..2^16 or 100,200")
    p.add_argument(
        "--seeds", help="comma list of seeds (default: ACTREE_SEED or 0)"
    )
    p.add_argument("--out", help="CSV path (default: stdout)")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NegativeWeightError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONTRACT
    except CycleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONTRACT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
