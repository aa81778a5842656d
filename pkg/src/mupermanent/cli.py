"""Command-line entry point: ``mupermanent {compute,label,check,enumerate,verify}``.

Exit codes: 0 success, 1 invalid labeling or failed suite, 2 unreadable
input, 3 precondition violated, 4 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import sys

from .algebra import as_fraction, format_rational
from .labeling import (
    UnlabeledTree,
    enumerate_path_labelings,
    find_crossing,
    is_mu_labeling,
    label_tree,
    read_graph,
    relabel_edges,
)
from .matrix import DEFAULT_MAX_N, ResourceLimitError, mu_permanent_brute, read_matrix
from .suites import format_rows, run_identities, run_labelings, run_sequence
from .trees import PreconditionError, mu_permanent_tree_fast

EXIT_INVALID = 1
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_RESOURCE = 4


class _InputError(Exception):
    pass


def _load(reader, path):
    try:
        return reader(path)
    except (OSError, ValueError) as exc:
        raise _InputError(f"{path}: {exc}") from None


def cmd_compute(args) -> int:
    A = _load(read_matrix, args.matrix)
    if args.method == "brute":
        poly = mu_permanent_brute(A, max_n=args.max_n)
    elif args.method == "tree-fast":
        poly = mu_permanent_tree_fast(A, require_mu_labeling=True)
    else:
        poly = mu_permanent_tree_fast(A, require_mu_labeling=False)
    if args.mu is not None:
        try:
            mu = as_fraction(args.mu)
        except (ValueError, ZeroDivisionError) as exc:
            raise _InputError(f"--mu: {exc}") from None
        print(format_rational(poly.evaluate(mu)))
        return 0
    print(f"P(mu) = {poly.pretty()}")
    coeffs = " ".join(format_rational(c) for c in poly.coefficients) or "0"
    print(f"coeffs: {coeffs}")
    return 0


def cmd_label(args) -> int:
    graph = _load(read_graph, args.tree)
    try:
        tree = UnlabeledTree(sorted(graph.edges), range(1, graph.n + 1))
    except ValueError as exc:
        raise PreconditionError(f"not a tree: {exc}") from None
    root = args.root
    if root is not None and root not in tree.adjacency:
        raise PreconditionError(f"root {root} is not a vertex")
    labels = label_tree(tree, root)
    for v in tree.vertices:
        print(f"{v} {labels[v]}")
    valid = is_mu_labeling(relabel_edges(tree.edges(), labels))
    print(f"valid: {'true' if valid else 'false'}")
    return 0 if valid else EXIT_INVALID


def cmd_check(args) -> int:
    graph = _load(read_graph, args.graph)
    crossing = find_crossing(graph.edges)
    if crossing is None:
        print("valid")
        return 0
    (i, j), (k, l) = crossing
    print(f"invalid witness {{{i},{j}}} {{{k},{l}}}")
    return EXIT_INVALID


def cmd_enumerate(args) -> int:
    try:
        seqs = enumerate_path_labelings(args.path_order, canonical=not args.all, engine=args.engine)
    except ValueError as exc:
        raise _InputError(str(exc)) from None
    if args.count_only:
        print(len(seqs))
    else:
        sys.stdout.write("".join(" ".join(map(str, s)) + "\n" for s in seqs))
    return 0


_DEFAULT_ORDERS = {"identities": 7, "sequence": 20, "labelings": 11}


def cmd_verify(args) -> int:
    max_order = args.max_order if args.max_order is not None else _DEFAULT_ORDERS[args.suite]
    if args.suite == "identities":
        rows = run_identities(max_order, seed=args.seed, per_order=args.trees_per_order)
    elif args.suite == "sequence":
        rows, table = run_sequence(max_order)
        sys.stdout.write(table)
    else:
        rows = run_labelings(max_order, engine=args.engine)
    sys.stdout.write(format_rows(rows))
    ok = all(r.passed for r in rows)
    print("ALL PASS" if ok else "FAILURES")
    return 0 if ok else EXIT_INVALID


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mupermanent", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="mu-permanent of a matrix file")
    p.add_argument("--matrix", required=True, metavar="FILE")
    p.add_argument("--mu", metavar="P/Q", help="evaluate at this exact rational instead")
    p.add_argument("--method", choices=["brute", "tree-fast", "tree-matchings"], default="brute")
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N, help="brute-force order cap")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("label", help="mu-label a tree")
    p.add_argument("--tree", required=True, metavar="FILE")
    p.add_argument("--root", type=int)
    p.set_defaults(func=cmd_label)

    p = sub.add_parser("check", help="test whether a labeled graph is a mu-labeling")
    p.add_argument("--graph", required=True, metavar="FILE")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("enumerate", help="mu-labelings of a path")
    p.add_argument("--path-order", required=True, type=int, metavar="M")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--all", action="store_true", help="include both orientations of each sequence")
    p.add_argument("--engine", choices=["exhaustive", "pruned"], default="exhaustive")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run a property suite")
    p.add_argument("--suite", required=True, choices=["identities", "sequence", "labelings"])
    p.add_argument("--max-order", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trees-per-order", type=int, default=100)
    p.add_argument("--engine", choices=["exhaustive", "pruned"], default="pruned")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except PreconditionError as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
