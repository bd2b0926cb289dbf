"""
``domideal`` command line.

Results go to stdout, diagnostics to stderr. Exit codes: 0 success / property
holds, 1 property fails or a verification failed, 2 usage, parse or scale
error, 3 not applicable.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from typing import Optional

import numpy as np

from . import theorems
from .theorems import TREE_CLAIMS
from .bitsets import ScaleError, UniverseMismatch
from .domination import minimal_dominating_sets
from .graph import (
    Graph,
    GraphFormatError,
    all_trees,
    corona,
    is_tree,
    parse_edge_list,
    random_graph,
    random_tree,
    recognize_corona,
)
from .ideal import closed_neighborhood_ideal, irreducible_decomposition, is_complete_intersection

FORMAT_VERSION = 1
BRUTE_CHECK_MAX_N = 16
SCALAR_TREE_SWEEP_MAX_N = 7

EXIT_OK, EXIT_FAIL, EXIT_ERROR, EXIT_NA = 0, 1, 2, 3


class UsageError(ValueError):
    pass


def _read_graph(path: Optional[str]) -> Graph:
    if path is None or path == "-":
        return parse_edge_list(sys.stdin.read())
    with open(path) as fh:
        return parse_edge_list(fh.read())


def _digest(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()


def _emit(args, payload, text_lines, digest_source: str) -> None:
    if args.json:
        envelope = {
            "command": args.command,
            "format_version": FORMAT_VERSION,
            "input_digest": _digest(digest_source),
            "payload": payload,
        }
        print(json.dumps(envelope, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def cmd_ideal(args) -> int:
    G = _read_graph(args.file)
    I = closed_neighborhood_ideal(G)
    _emit(args, {"ideal": str(I), "generators": I.to_json(), "nvars": G.n}, [str(I)], G.to_edge_list())
    return EXIT_OK


def cmd_decompose(args) -> int:
    G = _read_graph(args.file)
    D = irreducible_decomposition(closed_neighborhood_ideal(G))
    lines = [str(len(D))] if args.count else D.lines()
    _emit(args, {"count": len(D), "components": D.to_json(), "nvars": G.n}, lines, G.to_edge_list())
    return EXIT_OK


def cmd_domsets(args) -> int:
    G = _read_graph(args.file)
    sets = minimal_dominating_sets(G)
    if args.check_against_bruteforce:
        if G.n > BRUTE_CHECK_MAX_N:
            raise ScaleError(f"--check-against-bruteforce limited to {BRUTE_CHECK_MAX_N} vertices")
        if minimal_dominating_sets(G, engine="brute") != sets:
            print("engine mismatch: incremental and brute-force results differ", file=sys.stderr)
            return EXIT_FAIL
    lines = [str(len(sets))] if args.count else [str(s) for s in sets]
    payload = {"count": len(sets), "sets": sets.to_json(), "nvars": G.n}
    if args.check_against_bruteforce:
        payload["bruteforce_agrees"] = True
    _emit(args, payload, lines, G.to_edge_list())
    return EXIT_OK


def cmd_check(args) -> int:
    G = _read_graph(args.file)
    if args.property == "cm":
        status = theorems.cm_status_of_tree(G)
        code = {
            theorems.CMKind.MIXED: EXIT_FAIL,
            theorems.CMKind.NOT_APPLICABLE: EXIT_NA,
        }.get(status.kind, EXIT_OK)
        payload = {"property": "cm", "status": status.kind.value, "note": status.note}
        _emit(args, payload, [status.kind.value], G.to_edge_list())
        if status.note:
            print(status.note, file=sys.stderr)
        return code
    if args.property == "unmixed":
        holds = len(minimal_dominating_sets(G).sizes()) <= 1
    elif args.property == "corona":
        holds = recognize_corona(G) is not None
    else:
        holds = is_complete_intersection(closed_neighborhood_ideal(G))
    payload = {"property": args.property, "holds": holds}
    _emit(args, payload, ["true" if holds else "false"], G.to_edge_list())
    return EXIT_OK if holds else EXIT_FAIL


def _toggle_random_edge(G: Graph, rng: np.random.Generator) -> Graph:
    if G.n < 2:
        return G
    i, j = sorted(rng.choice(G.n, size=2, replace=False).tolist())
    edges = set(G.edges) ^ {(i, j)}
    return Graph(G.n, edges)


def _random_corpus(claim: str, k: int, size: int, seed: int) -> list[Graph]:
    if claim in TREE_CLAIMS:
        return [random_tree(size, [seed, i]) for i in range(k)]
    rng = np.random.default_rng(seed)
    return [random_graph(size, float(rng.uniform(0.15, 0.6)), rng) for _ in range(k)]


def _run_claim(claim: str, args, file_graph: Optional[Graph], other: Optional[Graph]) -> theorems.SweepReport:
    if claim == "ideal-equality":
        report = theorems.SweepReport(claim)
        pairs = []
        if file_graph is not None:
            pairs.append((file_graph, other if other is not None else file_graph))
        if args.random:
            rng = np.random.default_rng([args.seed, 1])
            for G in _random_corpus(claim, args.random, args.size, args.seed):
                pairs.append((G, _toggle_random_edge(G, rng)))
        if args.trees_exhaustive:
            _check_scalar_cap(args.trees_exhaustive)
            for n in range(1, args.trees_exhaustive + 1):
                trees = list(all_trees(n))
                pairs += list(zip(trees, trees[1:] + trees[:1]))
        for G, H in pairs:
            report.add(theorems.verify_ideal_equality_corollary(G, H), G.n)
        return report

    if args.trees_exhaustive and claim in TREE_CLAIMS:
        report = theorems.sweep_trees_exhaustive(claim, args.trees_exhaustive)
    else:
        report = theorems.SweepReport(claim)
        if args.trees_exhaustive:
            _check_scalar_cap(args.trees_exhaustive)
            for G in theorems.iter_trees(args.trees_exhaustive):
                if claim in ("decomposition", "corona-proposition") and G.n < 1:
                    continue
                report.add(theorems.VERIFIERS[claim](G), G.n)
    verifier = theorems.VERIFIERS[claim]
    graphs = []
    if file_graph is not None:
        graphs.append(file_graph)
    if args.random:
        graphs += _random_corpus(claim, args.random, args.size, args.seed)
    for G in graphs:
        if claim in TREE_CLAIMS and not is_tree(G):
            if args.claim == "all":
                continue
            raise UsageError(f"{claim} needs a tree input")
        report.add(verifier(G), G.n)
    return report


def _check_scalar_cap(n: int) -> None:
    if n > SCALAR_TREE_SWEEP_MAX_N:
        raise ScaleError(
            f"exhaustive tree corpus for non-tree claims limited to n <= {SCALAR_TREE_SWEEP_MAX_N}"
        )


def cmd_verify(args) -> int:
    if args.random and (args.seed is None or args.size is None):
        raise UsageError("--random needs explicit --seed and --size")
    if args.file is None and not args.random and not args.trees_exhaustive:
        raise UsageError("verify needs a graph file, --random or --trees-exhaustive")
    file_graph = _read_graph(args.file) if args.file is not None else None
    other = _read_graph(args.other) if args.other is not None else None
    claims = theorems.CLAIMS if args.claim == "all" else (args.claim,)
    reports = [_run_claim(c, args, file_graph, other) for c in claims]

    lines = []
    for r in reports:
        lines.append(
            f"{r.claim}: instances={r.instances} passes={r.passes} vacuous={r.vacuous} "
            f"edge_cases={len(r.edge_cases)} failures={len(r.failures)}"
        )
        for n, row in sorted(r.by_size.items()):
            lines.append(f"  n={n}: instances={row['instances']} passes={row['passes']}")
        for e in r.edge_cases:
            lines.append(f"  edge case: {e['edge_case']}")
        for w in r.failures:
            lines.append(f"  FAILURE: {json.dumps(w, sort_keys=True)}")
    source = json.dumps(
        {
            "claim": args.claim,
            "file": file_graph.to_edge_list() if file_graph else None,
            "other": other.to_edge_list() if other else None,
            "random": args.random,
            "seed": args.seed,
            "size": args.size,
            "trees_exhaustive": args.trees_exhaustive,
        },
        sort_keys=True,
    )
    _emit(args, {"reports": [r.to_json() for r in reports]}, lines, source)
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FAIL


def cmd_gen(args) -> int:
    if args.kind == "tree":
        if args.n is None or args.seed is None:
            raise UsageError("gen tree needs --n and --seed")
        G = random_tree(args.n, args.seed)
        source = json.dumps({"kind": "tree", "n": args.n, "seed": args.seed}, sort_keys=True)
    else:
        base = _read_graph(args.of)
        G = corona(base)
        source = base.to_edge_list()
    text = G.to_edge_list()
    if args.json:
        _emit(args, {"graph": G.to_json(), "edge_list": text}, [], source)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="domideal",
        description="Closed neighborhood ideals, minimal dominating sets and tree Cohen-Macaulay checks.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a versioned JSON envelope")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ideal", parents=[common], help="minimal generators of N_G")
    p.add_argument("file", nargs="?", help="edge-list file ('-' or omitted: stdin)")
    p.set_defaults(func=cmd_ideal)

    p = sub.add_parser("decompose", parents=[common], help="irredundant irreducible decomposition of N_G")
    p.add_argument("file", nargs="?")
    p.add_argument("--count", action="store_true")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("domsets", parents=[common], help="minimal dominating sets")
    p.add_argument("file", nargs="?")
    p.add_argument("--count", action="store_true")
    p.add_argument("--check-against-bruteforce", action="store_true")
    p.set_defaults(func=cmd_domsets)

    p = sub.add_parser("check", parents=[common], help="decide unmixed, corona, ci or cm")
    p.add_argument("property", choices=["unmixed", "corona", "ci", "cm"])
    p.add_argument("file", nargs="?")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("verify", parents=[common], help="run a claim verifier over a corpus")
    p.add_argument("claim", choices=[*theorems.CLAIMS, "all"])
    p.add_argument("file", nargs="?")
    p.add_argument("--other", help="second graph file for ideal-equality")
    p.add_argument("--trees-exhaustive", type=int, metavar="N", help="all labeled trees with up to N vertices")
    p.add_argument("--random", type=int, metavar="K", help="K random graphs (random trees for tree claims)")
    p.add_argument("--seed", type=int)
    p.add_argument("--size", type=int, metavar="N")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", parents=[common], help="generate a graph in edge-list format")
    p.add_argument("kind", choices=["tree", "corona"])
    p.add_argument("--n", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--of", help="base graph file for corona ('-' for stdin)")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphFormatError, ScaleError, UniverseMismatch, UsageError, ValueError, IndexError, OSError) as exc:
        print(f"domideal {args.command}: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
