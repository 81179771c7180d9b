"""``qp`` command line.

Exit codes: 0 quasi-positive, 1 not quasi-positive, 2 usage or parse
error, 3 brute-force budget exceeded.
"""
from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from .diagrams import diagram_from_rbs, diagram_from_witness, render_svg
from .factorizer import factor_qp, format_factorization
from .oracle import DEFAULT_BUDGET, BudgetExceeded, ball_size, brute_force_search
from .rbs import find_rbs, rbs_to_witness
from .recognizer import format_witness, test_qp
from .words import MAX_RANK, Word, free_reduce, infer_rank, parse_word
from .workbench import ALGORITHMS, FAMILIES, parse_k_range, run_bench, write_csv

EXIT_QP, EXIT_NOT_QP, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _word(args) -> Word:
    rank = args.rank or infer_rank(args.word)
    try:
        return parse_word(args.word, rank)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _witness(w: Word, algo: str):
    if algo == "rbs":
        r = find_rbs(w)
        return None if r is None else rbs_to_witness(w, r)
    v = test_qp(w, algo, record_witness=True)
    return v.witness


def cmd_test(args) -> int:
    w = _word(args)
    if args.algo == "brute":
        f, checks = brute_force_search(w, args.budget)
        print("quasi-positive" if f is not None else "not quasi-positive")
        if f is not None and args.witness:
            print(format_factorization(f))
        print(f"checks: {checks}", file=sys.stderr)
        return EXIT_QP if f is not None else EXIT_NOT_QP
    if args.algo == "rbs":
        r = find_rbs(free_reduce(w))
        print("quasi-positive" if r is not None else "not quasi-positive")
        if r is not None and args.witness:
            print(r)
        return EXIT_QP if r is not None else EXIT_NOT_QP
    v = test_qp(w, args.algo, record_witness=args.witness)
    print("quasi-positive" if v.is_qp else "not quasi-positive")
    if v.witness is not None:
        print(format_witness(v.witness))
    print(f"calls: {v.calls}", file=sys.stderr)
    return EXIT_QP if v.is_qp else EXIT_NOT_QP


def cmd_factor(args) -> int:
    w = free_reduce(_word(args))
    t = _witness(w, args.algo)
    if t is None:
        print("not quasi-positive")
        return EXIT_NOT_QP
    print(format_factorization(factor_qp(t)))
    return EXIT_QP


def cmd_diagram(args) -> int:
    w = free_reduce(_word(args))
    if args.algo == "rbs":
        r = find_rbs(w)
        d = None if r is None else diagram_from_rbs(w, r)
    else:
        t = _witness(w, args.algo)
        d = None if t is None else diagram_from_witness(t)
    if d is None:
        print("not quasi-positive")
        return EXIT_NOT_QP
    svg = render_svg(d)
    if args.output == "-":
        sys.stdout.write(svg)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(svg)
    return EXIT_QP


def _split_list(text: str, allowed, what: str) -> List[str]:
    items = [s.strip() for s in text.split(",") if s.strip()]
    bad = [s for s in items if s not in allowed]
    if not items or bad:
        raise UsageError(f"invalid {what} {text!r}; choose from {', '.join(allowed)}")
    return items


def cmd_bench(args) -> int:
    families = _split_list(args.family, FAMILIES, "family")
    algos = _split_list(args.algo, ALGORITHMS, "algorithm list")
    try:
        ks = parse_k_range(args.k)
        records = run_bench(families, ks, algos, j=args.j, budget=args.budget, jobs=args.jobs)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.csv in (None, "-"):
        write_csv(records, sys.stdout)
    else:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            write_csv(records, fh)
    return EXIT_BUDGET if any(r.error for r in records) else 0


def cmd_ball(args) -> int:
    if args.rank < 1 or args.radius < 0:
        raise UsageError("rank must be >= 1 and radius >= 0")
    print(ball_size(args.rank, args.radius))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qp", description="Quasi-positivity in free groups.")
    sub = p.add_subparsers(dest="command", required=True)

    def word_args(sp):
        sp.add_argument("word", help="word in the compact alphabet (A = a^-1)")
        sp.add_argument("--rank", type=int, choices=range(1, MAX_RANK + 1), metavar="N",
                        help="number of generators (default: inferred, at least 2)")

    t = sub.add_parser("test", help="decide quasi-positivity")
    word_args(t)
    t.add_argument("--algo", choices=ALGORITHMS, default="naive")
    t.add_argument("--witness", action="store_true", help="print the witness")
    t.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    t.set_defaults(func=cmd_test)

    f = sub.add_parser("factor", help="write a QP word as a product of conjugates")
    word_args(f)
    f.add_argument("--algo", choices=("pruned", "rbs", "naive"), default="pruned")
    f.set_defaults(func=cmd_factor)

    d = sub.add_parser("diagram", help="render a cancellation diagram as SVG")
    word_args(d)
    d.add_argument("-o", "--output", required=True, help="output file ('-' for stdout)")
    d.add_argument("--algo", choices=("rbs", "pruned", "naive"), default="rbs")
    d.set_defaults(func=cmd_diagram)

    b = sub.add_parser("bench", help="benchmark strategies on word families")
    b.add_argument("--family", required=True, help="comma list of: " + ", ".join(FAMILIES))
    b.add_argument("--k", required=True, help="k or a..b")
    b.add_argument("--algo", default="naive,pruned,rbs", help="comma list of: " + ", ".join(ALGORITHMS))
    b.add_argument("--csv", help="output file (default stdout)")
    b.add_argument("--j", type=int, default=0, help="exponent j for the commutator family")
    b.add_argument("--budget", type=int, default=10 ** 6, help="brute-force check cap per row")
    b.add_argument("--jobs", type=int, default=1, help="run rows in parallel processes")
    b.set_defaults(func=cmd_bench)

    ball = sub.add_parser("ball", help="size of the free-group ball")
    ball.add_argument("--rank", type=int, required=True)
    ball.add_argument("--radius", type=int, required=True)
    ball.set_defaults(func=cmd_ball)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"qp: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"qp: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
