"""Command-line front end.

Exit codes: 0 on success, 1 on a usage error, 2 when a verification report
contains failures.  Output is deterministic for identical invocations.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .equivalence import admissible_closure, admissible_moves, plactic_closure, plactic_moves
from .hecke import canonical_basis
from .insertion import bitableau_correspondence, bitableau_prime, domino_correspondence
from .signed import CoxType, SignedPerm, is_involution
from .verify import SUITES, run_suites
from .wgraph import GRAPH_MODELS, build_graph, cells, molecules, to_dot

FORMAT_ENV = "GELFAND_BD_FORMAT"
RANK_CAP = 5


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad input; usage errors here exit with 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _dump(data) -> str:
    return json.dumps(data, sort_keys=True, indent=1)


def _default_format() -> str:
    fmt = os.environ.get(FORMAT_ENV, "ascii")
    return fmt if fmt in ("ascii", "json") else "ascii"


def _word(text: str) -> SignedPerm:
    try:
        w = SignedPerm.parse(text)
    except ValueError as exc:
        raise UsageError(f"bad word {text!r}: {exc}") from None
    if sorted(abs(v) for v in w) != list(range(1, len(w) + 1)):
        raise UsageError(f"{text!r} is not a signed permutation")
    return w


def _check_rank(n: int, allow_large: bool) -> None:
    if n < 1:
        raise UsageError("rank must be positive")
    if n > RANK_CAP and not allow_large:
        raise UsageError(f"rank {n} exceeds the cap {RANK_CAP}; pass --allow-large to override")


def _type(text: str) -> CoxType:
    try:
        return CoxType.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_insert(args) -> int:
    w = _word(args.word)
    if args.algo == "domino":
        P, Q = domino_correspondence(w, args.core)
    elif args.algo == "bitableau":
        P, Q = bitableau_correspondence(w)
    else:
        if not is_involution(w):
            raise UsageError("bitableau-prime needs an involution")
        P, Q = bitableau_prime(w)
    if args.format == "json":
        print(_dump({"word": str(w), "algo": args.algo, "P": P.to_json(), "Q": Q.to_json()}))
    else:
        print(f"P:\n{P.ascii()}\nQ:\n{Q.ascii()}")
    return 0


def cmd_moves(args) -> int:
    w = _word(args.word)
    found = plactic_moves(w, args.core) if args.kind == "plactic" else admissible_moves(w)
    rows = sorted((str(label), str(v)) for label, v in found)
    if args.format == "json":
        print(_dump([{"move": m, "word": v} for m, v in rows]))
    else:
        for m, v in rows:
            print(f"{m}\t{v}")
    return 0


def cmd_closure(args) -> int:
    w = _word(args.word)
    cls = plactic_closure(w, args.core) if args.kind == "plactic" else admissible_closure(w)
    print(_dump({"word": str(w), "kind": args.kind, "size": len(cls),
                 "class": [str(v) for v in sorted(cls)]}))
    return 0


def cmd_basis(args) -> int:
    _check_rank(args.rank, args.allow_large)
    cb = canonical_basis(args.rank, _type(args.type), GRAPH_MODELS[args.model])
    print(_dump(cb.to_json()))
    return 0


def _graph(args):
    _check_rank(args.rank, args.allow_large)
    return build_graph(args.rank, _type(args.type), args.model)


def cmd_wgraph(args) -> int:
    g = _graph(args)
    print(to_dot(g) if args.out == "dot" else g.dumps())
    return 0


def _partition(args, fn) -> int:
    g = _graph(args)
    parts = [[str(v) for v in part] for part in fn(g)]
    if args.format == "json":
        print(_dump({"type": g.t.value, "rank": g.n, "model": args.model, "count": len(parts), "parts": parts}))
    else:
        for part in parts:
            print(" | ".join(part))
    return 0


def cmd_molecules(args) -> int:
    return _partition(args, molecules)


def cmd_cells(args) -> int:
    return _partition(args, cells)


def _report(reports: list[dict]) -> int:
    print(_dump(reports))
    return 0 if all(rep["ok"] for rep in reports) else 2


def cmd_verify(args) -> int:
    _check_rank(args.rank, args.allow_large)
    if args.jobs < 1:
        raise UsageError("--jobs must be positive")
    names = list(SUITES) if args.suite == "all" else [args.suite]
    t = _type(args.type).value
    return _report(run_suites(names, args.rank, args.core, t, args.model, args.jobs))


def cmd_verify_edges(args) -> int:
    _check_rank(args.rank, args.allow_large)
    return _report(run_suites(["edges", "edge-tableaux"], args.rank, 0, _type(args.type).value))


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="gelfand-bd", description="Type B/D insertion, Gelfand modules and W-graphs.")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)
    fmt = _default_format()

    def word_cmd(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--word", required=True, help='one-line notation such as "-3,4,-1,2"')
        sp.add_argument("--core", type=int, default=0, choices=range(0, 10), metavar="r")
        return sp

    def group_cmd(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--type", default="B", choices=["B", "D"])
        sp.add_argument("--rank", type=int, required=True)
        sp.add_argument("--allow-large", action="store_true", help=f"lift the rank cap of {RANK_CAP}")
        return sp

    sp = word_cmd("insert", "insertion tableaux of a word")
    sp.add_argument("--algo", default="domino", choices=["domino", "bitableau", "bitableau-prime"])
    sp.add_argument("--format", default=fmt, choices=["ascii", "json"])
    sp.set_defaults(func=cmd_insert)

    sp = word_cmd("moves", "applicable plactic or admissible moves")
    sp.add_argument("--kind", default="plactic", choices=["plactic", "admissible"])
    sp.add_argument("--format", default=fmt, choices=["ascii", "json"])
    sp.set_defaults(func=cmd_moves)

    sp = word_cmd("closure", "equivalence class of a word as JSON")
    sp.add_argument("--kind", default="plactic", choices=["plactic", "admissible"])
    sp.set_defaults(func=cmd_closure)

    sp = group_cmd("basis", "canonical basis coefficients as JSON")
    sp.add_argument("--model", default="m", choices=["m", "n", "row", "col"])
    sp.set_defaults(func=cmd_basis)

    sp = group_cmd("wgraph", "Gelfand W-graph as DOT or JSON")
    sp.add_argument("--model", default="row", choices=["row", "col"])
    sp.add_argument("--out", default="dot", choices=["dot", "json"])
    sp.set_defaults(func=cmd_wgraph)

    for name, func in (("molecules", cmd_molecules), ("cells", cmd_cells)):
        sp = group_cmd(name, f"{name} of a Gelfand W-graph")
        sp.add_argument("--model", default="row", choices=["row", "col"])
        sp.add_argument("--format", default=fmt, choices=["ascii", "json"])
        sp.set_defaults(func=func)

    sp = group_cmd("verify", "exhaustive verification suites")
    sp.add_argument("--suite", required=True, choices=list(SUITES) + ["all"])
    sp.add_argument("--core", type=int, default=0, choices=range(0, 10), metavar="r")
    sp.add_argument("--model", default=None, choices=["m", "n"], help="module model (default: both)")
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_verify)

    sp = group_cmd("verify-edges", "edge classification and edge-tableau checks")
    sp.set_defaults(func=cmd_verify_edges)
    return p


def _join_words(argv: list[str]) -> list[str]:
    """Words such as ``-3,4,-1,2`` look like flags to argparse; glue them to ``--word``."""
    out, i = [], 0
    while i < len(argv):
        if argv[i] == "--word" and i + 1 < len(argv):
            out.append("--word=" + argv[i + 1])
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def run(argv: list[str] | None = None) -> int:
    argv = _join_words(list(sys.argv[1:] if argv is None else argv))
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
