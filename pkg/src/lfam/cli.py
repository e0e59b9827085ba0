"""Command-line entry point.

Subcommands: construct, count, check, psi, phi, fsearch, factcheck, report.
Exit codes: 0 success / property holds, 1 property fails, 2 parse error,
3 budget exhausted, 4 invalid parameters.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

from . import __version__
from . import constructions as cons
from .errors import BudgetExceededError, FormatError, LfamError
from .family import IntersectionSpec, associated_family, is_l_intersecting
from .copies import count_copies
from .factorization import (
    OneFactorization,
    check_flawless,
    f_of_n,
)
from .graphio import parse_graph_text, parse_pattern, to_graph6
from .graphs import Graph, cycle
from .search import max_intersecting_family, max_pattern_count, verify_construction

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_PARSE = 2
EXIT_BUDGET = 3
EXIT_PARAMS = 4


def _digest(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()[:16]


def _emit(command: str, result: dict, started: float, inputs=None) -> None:
    envelope = {
        "tool": "lfam",
        "version": __version__,
        "command": command,
        "elapsed_s": round(time.time() - started, 3),
        "result": result,
    }
    if inputs:
        envelope["input_digests"] = inputs
    print(json.dumps(envelope, indent=2, sort_keys=True))


def _parse_l(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError as exc:
        raise FormatError(f"bad L list {text!r}: {exc}") from exc


def _load_graph(path: str) -> Graph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc
    return parse_graph_text(text)


def _build_construction(args) -> cons.ConstructionOutput:
    name = args.name
    if name == "turan":
        g = cons.turan(args.n, args.t)
        sizes = cons.turan_part_sizes(args.n, args.t)
        parts, offset = {}, 0
        for i, size in enumerate(sizes, start=1):
            parts[f"U{i}"] = tuple(range(offset, offset + size))
            offset += size
        return cons.ConstructionOutput(
            g, IntersectionSpec(max(args.t + 1, 3), range(args.t)), parts, None,
            g.n, "turan", {"n": args.n, "t": args.t},
        )
    if name == "clique-join-turan":
        return cons.clique_join_turan(args.t, args.r - args.t, args.n)
    if name == "cycle-blowup":
        positions = set(_parse_l(args.positions)) if args.positions else None
        return cons.cycle_blowup(args.l1, args.s, args.n, positions)
    if name == "cycle-blowup-22":
        return cons.cycle_blowup_22(args.n)
    if name == "cycle-blowup-13":
        return cons.cycle_blowup_13(args.n)
    if name == "path-blowup":
        positions = set(_parse_l(args.positions)) if args.positions else None
        return cons.path_blowup(args.l1, args.s, args.d, args.n, positions)
    if name == "path-blowup-clique":
        return cons.path_blowup_clique_s2(args.l1, args.d, args.n)
    if name == "staircase":
        lengths = _parse_l(args.paths) if args.paths else None
        return cons.staircase(args.l, args.d, args.n, lengths)
    if name == "flawless-triple":
        g, matchings = cons.flawless_triple(args.l)
        out = cons.ConstructionOutput(
            g, IntersectionSpec(3, (0, 1)), {"U": tuple(range(g.n))}, None,
            g.n, "flawless-triple", {"l": args.l},
        )
        out.params["matchings"] = [[list(e) for e in m] for m in matchings]
        return out
    if name == "flawless-expansion":
        base, matchings = cons.flawless_triple(args.l)
        return cons.flawless_expansion(
            base, matchings, args.l // 2, args.k,
            cross_superscript=not args.same_superscript,
        )
    raise ValueError(f"unknown construction {name!r}")


def cmd_construct(args) -> int:
    started = time.time()
    out = _build_construction(args)
    prefix = Path(args.out)
    g6 = to_graph6(out.graph)
    prefix.with_suffix(".g6").write_text(g6 + "\n")
    meta = {
        "name": out.name,
        "params": out.params,
        "graph6": g6,
        "order": out.graph.n,
        "actual_order": out.actual_order,
        "spec": out.spec.describe(),
        "parts": {k: list(v) for k, v in out.parts.items()},
        "expected_count": out.expected_count,
    }
    prefix.with_suffix(".json").write_text(json.dumps(meta, indent=2, sort_keys=True))
    _emit("construct", meta, started)
    return EXIT_OK


def cmd_count(args) -> int:
    started = time.time()
    g = _load_graph(args.graph)
    pattern = parse_pattern(args.pattern)
    value = count_copies(g, pattern, args.mode)
    _emit(
        "count",
        {"count": value, "mode": args.mode, "order": g.n},
        started,
        inputs={args.graph: _digest(Path(args.graph))},
    )
    return EXIT_OK


def cmd_check(args) -> int:
    started = time.time()
    g = _load_graph(args.graph)
    pattern = parse_pattern(args.pattern)
    r = args.r if args.r else pattern.n
    spec = IntersectionSpec(r, _parse_l(args.L))
    fam = associated_family(g, pattern, args.mode)
    ok, violation = is_l_intersecting(fam, spec)
    result = {
        "l_intersecting": ok,
        "copies": len(fam.edges),
        "spec": spec.describe(),
        "violation": None
        if violation is None
        else {
            "edge_a": list(violation[0]),
            "edge_b": list(violation[1]),
            "size": violation[2],
        },
    }
    _emit("check", result, started, inputs={args.graph: _digest(Path(args.graph))})
    return EXIT_OK if ok else EXIT_VIOLATION


def cmd_psi(args) -> int:
    started = time.time()
    pattern = parse_pattern(args.pattern)
    spec = IntersectionSpec(args.r if args.r else pattern.n, _parse_l(args.L))
    outcome = max_pattern_count(
        args.n,
        pattern,
        spec,
        mode=args.mode,
        min_core=args.min_core,
        max_order=args.budget,
        workers=args.workers,
        witness_cap=args.witnesses,
    )
    _emit(
        "psi",
        {
            "value": outcome.value,
            "witnesses": [to_graph6(w) for w in outcome.witnesses],
            "nodesExplored": outcome.nodes_explored,
            "budgetExhausted": outcome.budget_exhausted,
        },
        started,
    )
    return EXIT_OK


def cmd_phi(args) -> int:
    started = time.time()
    spec = IntersectionSpec(args.r, _parse_l(args.L))
    outcome = max_intersecting_family(
        args.n,
        spec,
        compat_cap=args.budget,
        workers=args.workers,
        witness_cap=args.witnesses,
    )
    _emit(
        "phi",
        {
            "value": outcome.value,
            "witnesses": [
                {"ground_size": w.ground_size, "edges": [list(e) for e in w.edges]}
                for w in outcome.witnesses
            ],
            "nodesExplored": outcome.nodes_explored,
            "budgetExhausted": outcome.budget_exhausted,
        },
        started,
    )
    return EXIT_OK


def cmd_fsearch(args) -> int:
    started = time.time()
    result = f_of_n(
        args.n,
        k_range=[args.kmax] if args.kmax else None,
        max_order=args.budget,
        workers=args.workers,
    )
    payload = {
        "f": result.value,
        "witness_graph6": to_graph6(result.witness.host),
        "factors": [[list(e) for e in m] for m in result.witness.factors],
        "per_k": {str(k): v for k, v in result.per_k.items()},
    }
    if args.out:
        Path(args.out).write_text(json.dumps(payload, indent=2, sort_keys=True))
    _emit("fsearch", payload, started)
    return EXIT_OK


def cmd_factcheck(args) -> int:
    started = time.time()
    try:
        data = json.loads(Path(args.certificate).read_text())
        host = parse_graph_text(data["witness_graph6"])
        factors = tuple(
            tuple((int(u), int(v)) for u, v in m) for m in data["factors"]
        )
        claimed = int(data["f"])
    except (OSError, KeyError, ValueError, TypeError) as exc:
        raise FormatError(f"bad certificate: {exc}") from exc
    try:
        fact = OneFactorization(host, factors)
    except ValueError as exc:
        _emit("factcheck", {"valid": False, "reason": str(exc)}, started)
        return EXIT_VIOLATION
    verdict = check_flawless(host, fact)
    valid = verdict.is_flawless and fact.k == claimed
    result = {
        "valid": valid,
        "is_flawless": verdict.is_flawless,
        "claimed": claimed,
        "witness_degree": fact.k,
        "hamiltonian_count": verdict.hamiltonian_count,
    }
    _emit("factcheck", result, started, inputs={args.certificate: _digest(Path(args.certificate))})
    return EXIT_OK if valid else EXIT_VIOLATION


def cmd_report(args) -> int:
    started = time.time()
    out = _build_construction(args)
    report = verify_construction(out)
    _emit("report", report, started)
    holds = report["l_intersecting"] and report["count_matches"] in (True, None)
    return EXIT_OK if holds else EXIT_VIOLATION


def _add_construction_params(p: argparse.ArgumentParser) -> None:
    p.add_argument("name", help="construction id, e.g. cycle-blowup-22")
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--t", type=int, default=1)
    p.add_argument("--r", type=int, default=0)
    p.add_argument("--l1", type=int, default=1)
    p.add_argument("--l", type=int, default=4)
    p.add_argument("--s", type=int, default=2)
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--positions", default="")
    p.add_argument("--paths", default="")
    p.add_argument("--same-superscript", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lfam",
        description="Construct, count and certify intersection-constrained "
        "families of induced subgraph copies.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="emit a construction as graph6 + JSON")
    _add_construction_params(p)
    p.add_argument("--out", required=True, help="output path prefix")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("count", help="count pattern copies in a graph file")
    p.add_argument("--graph", required=True)
    p.add_argument("--pattern", required=True, help="C<r>, K<r>, or graph6")
    p.add_argument("--mode", choices=("induced", "span"), default="induced")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("check", help="verify the copy family is L-intersecting")
    p.add_argument("--graph", required=True)
    p.add_argument("--pattern", required=True)
    p.add_argument("--L", required=True, help="comma list, e.g. 2,3")
    p.add_argument("--r", type=int, default=0)
    p.add_argument("--mode", choices=("induced", "span"), default="induced")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("psi", help="max copy count over L-intersecting hosts")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--pattern", required=True)
    p.add_argument("--L", required=True)
    p.add_argument("--r", type=int, default=0)
    p.add_argument("--mode", choices=("induced", "span"), default="induced")
    p.add_argument("--min-core", type=int, default=0)
    p.add_argument("--budget", type=int, default=9)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--witnesses", type=int, default=1)
    p.set_defaults(func=cmd_psi)

    p = sub.add_parser("phi", help="max L-intersecting family size")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--L", required=True)
    p.add_argument("--budget", type=int, default=2000)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--witnesses", type=int, default=1)
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("fsearch", help="largest flawless-admitting degree")
    p.add_argument("n", type=int)
    p.add_argument("--kmax", type=int, default=0)
    p.add_argument("--budget", type=int, default=8)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", default="")
    p.set_defaults(func=cmd_fsearch)

    p = sub.add_parser("factcheck", help="re-validate an fsearch certificate")
    p.add_argument("certificate")
    p.set_defaults(func=cmd_factcheck)

    p = sub.add_parser("report", help="build a construction and verify it")
    _add_construction_params(p)
    p.set_defaults(func=cmd_report)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BudgetExceededError as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, LfamError) as exc:
        print(f"invalid parameters: {exc}", file=sys.stderr)
        return EXIT_PARAMS


if __name__ == "__main__":
    sys.exit(main())
