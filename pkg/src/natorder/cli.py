"""Command-line front end.

    natorder check SUITE --universe relations --n 2 [--sample N] [--seed S] [--report PATH]
    natorder order PRED A_FILE B_FILE
    natorder hasse relations 2 [--dot PATH]
    natorder enumerate partitions 2
    natorder suites

Exit status: 0 pass, 1 verified failure, 2 usage, guard or parse error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import lattice as lab
from . import partition_orders as po
from . import partitions as pt
from . import relation_orders as ro
from . import relations as rel
from .errors import DimensionMismatch, ParseError, PreconditionError, UniverseTooLarge
from .suites import SUITES, encode, run_all, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read_element(path: str, universe: Optional[str]):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    if universe is None:
        first = text.strip().splitlines()[0].strip() if text.strip() else ""
        universe = "relations" if first.isdigit() else "partitions"
    if universe == "relations":
        return rel.parse_relation(text)
    return pt.parse_partition(text)


def _relation_predicates():
    return {
        "mitsch": ro.mitsch_le,
        "mitsch-oracle": ro.mitsch_le_oracle,
        "incl": rel.is_subset,
        "rincl": lambda a, b: rel.is_subset(b, a),
        "meet-incl": ro.meet_with_inclusion,
        "meet-rev": ro.meet_with_reverse_inclusion,
        "incl-then-le": ro.comp_subset_then_le,
        "supset-then-le": ro.comp_supset_then_le,
        "divides-right": rel.divides_right,
        "divides-left": rel.divides_left,
        "eq": lambda a, b: a == b,
    }


def _partition_predicates():
    return {
        "mitsch": po.mitsch_le_oracle,
        "mitsch-oracle": po.mitsch_le_oracle,
        "mitsch-fast": po.mitsch_le_fast,
        "incl": pt.refinement_le,
        "rincl": lambda a, b: pt.refinement_le(b, a),
        "meet-incl": lambda a, b: po.mitsch_le_oracle(a, b) and pt.refinement_le(a, b),
        "meet-rev": lambda a, b: po.mitsch_le_oracle(a, b) and pt.refinement_le(b, a),
        "incl-then-le": po.comp_subset_then_le,
        "supset-then-le": po.comp_supset_then_le,
        "eq": lambda a, b: a == b,
    }


def cmd_check(args: argparse.Namespace) -> int:
    suite = args.suite_opt or args.suite
    if suite is None:
        raise UsageError("no suite given")
    if suite != "all" and suite not in SUITES:
        raise UsageError(f"unknown suite {suite!r}; see `natorder suites`")
    if args.n is None:
        raise UsageError("--n is required")
    try:
        if suite == "all":
            reports = list(run_all(args.universe, args.n, args.sample, args.seed))
        else:
            reports = [run_suite(suite, args.universe, args.n, args.sample, args.seed)]
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    text = "".join(r.to_text(timing=args.timing) for r in reports)
    if args.report:
        Path(args.report).write_text(text)
    else:
        sys.stdout.write(text)
    for r in reports:
        print(f"{r.summary()} ({r.elapsed:.2f}s)", file=sys.stderr)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_order(args: argparse.Namespace) -> int:
    a = _read_element(args.a, args.universe)
    b = _read_element(args.b, args.universe)
    if type(a) is not type(b):
        raise UsageError("both elements must be relations or both partitions")
    preds = _relation_predicates() if isinstance(a, rel.Relation) else _partition_predicates()
    if args.pred not in preds:
        raise UsageError(f"unknown predicate {args.pred!r}; choose from {', '.join(sorted(preds))}")
    fn = preds[args.pred]
    if args.force_large and args.pred.startswith("mitsch-"):
        verdict = fn(a, b, force_large=True)
    else:
        verdict = fn(a, b)
    print("true" if verdict else "false")
    if args.pred == "meet-rev" and isinstance(a, rel.Relation):
        w = ro.meet_rev_witnesses(a, b)
        if w is not None:
            print("epsilon:")
            sys.stdout.write(rel.format_relation(w.epsilon))
            print("phi:")
            sys.stdout.write(rel.format_relation(w.phi))
    return EXIT_OK


def cmd_hasse(args: argparse.Namespace) -> int:
    args.universe = args.universe_opt or args.universe
    args.n = args.n_opt if args.n_opt is not None else args.n
    if args.universe is None or args.n is None:
        raise UsageError("hasse needs a universe and n")
    limit = 2 if args.universe == "relations" else 3
    if args.n > limit and not args.force_large:
        raise UniverseTooLarge(f"hasse on {args.universe} is limited to n<={limit}")
    u = lab.enumerate_universe(args.universe, args.n, force_large=args.force_large)
    gens = [lab.materialise(u, x) for x in ("mitsch", "incl", "rincl")]
    dot = lab.to_dot(lab.generate_sublattice(u, gens))
    if args.dot:
        Path(args.dot).write_text(dot)
    else:
        sys.stdout.write(dot)
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    u = lab.enumerate_universe(args.universe, args.n, force_large=args.force_large)
    for i, e in enumerate(u.elements):
        print(f"{i}\t{encode(e)}")
    return EXIT_OK


def cmd_suites(args: argparse.Namespace) -> int:
    for name, s in SUITES.items():
        print(f"{name:26} {'/'.join(s.kinds):21} {s.description}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="natorder", description="Natural order and inclusion on B_n and P_n.")
    sub = p.add_subparsers(dest="command", required=True)

    def universe_opt(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--universe", choices=("relations", "partitions"), default="relations")

    c = sub.add_parser("check", help="run a verification suite")
    c.add_argument("suite", nargs="?", help="suite name, or 'all'")
    c.add_argument("--suite", dest="suite_opt")
    universe_opt(c)
    c.add_argument("--n", type=int)
    c.add_argument("--sample", type=int)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--report")
    c.add_argument("--timing", action="store_true", help="include wall time in the report")
    c.set_defaults(func=cmd_check)

    o = sub.add_parser("order", help="evaluate a predicate on two element files")
    o.add_argument("pred")
    o.add_argument("a")
    o.add_argument("b")
    o.add_argument("--universe", choices=("relations", "partitions"))
    o.add_argument("--force-large", action="store_true")
    o.set_defaults(func=cmd_order)

    h = sub.add_parser("hasse", help="emit the sublattice generated by ≤, ⊆, ⊇ as DOT")
    h.add_argument("universe", nargs="?", choices=("relations", "partitions"))
    h.add_argument("n", nargs="?", type=int)
    h.add_argument("--universe", dest="universe_opt", choices=("relations", "partitions"))
    h.add_argument("--n", dest="n_opt", type=int)
    h.add_argument("--dot")
    h.add_argument("--force-large", action="store_true")
    h.set_defaults(func=cmd_hasse)

    e = sub.add_parser("enumerate", help="list a universe in canonical order")
    e.add_argument("universe", choices=("relations", "partitions"))
    e.add_argument("n", type=int)
    e.add_argument("--force-large", action="store_true")
    e.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("suites", help="list suite names")
    s.set_defaults(func=cmd_suites)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ParseError, DimensionMismatch, UniverseTooLarge, PreconditionError) as exc:
        print(f"natorder: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
