"""Command-line interface: ``hsop <subcommand> ...``.

Exit codes: 0 success, 2 usage or input error, 3 a predicate failed under
``--assert``, 4 internal inconsistency.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from typing import Iterable, Sequence

from hsop import __version__
from hsop.catalog import CATALOG, SEPTIMIC_ENV, get_chain
from hsop.chains import InvariantChain, evaluate_chain, parse_chain, shape
from hsop.classifier import (
    admissible,
    conjecture_scan,
    enumerate_minimal,
    enumerate_shard,
    find_reduction,
    merge_shards,
)
from hsop.combinatorics import covariant_dim, format_table_tsv
from hsop.conditions import parse_sequence, theorem1_counts
from hsop.errors import HsopError, NotPolynomial, PreconditionFailed
from hsop.forms import is_nullform, max_root_multiplicity, parse_form, transvectant
from hsop.series import hsop_numerator, poincare_series

EXIT_OK, EXIT_USAGE, EXIT_ASSERT, EXIT_INTERNAL = 0, 2, 3, 4


class UsageError(Exception):
    pass


def _seq_text(seq: Iterable[int]) -> str:
    return ",".join(str(d) for d in seq)


def _ints(values) -> list[str]:
    return [str(v) for v in values]


class Output:
    """Collects result lines in text or JSON-lines form."""

    def __init__(self, as_json: bool, stream=None):
        self.as_json = as_json
        self.stream = stream or sys.stdout

    def emit(self, text: str, record: dict) -> None:
        if self.as_json:
            self.stream.write(json.dumps(record, sort_keys=True) + "\n")
        else:
            self.stream.write(text + "\n")


def _sequences(args) -> list[tuple[int, ...]]:
    if args.degrees:
        return [parse_sequence(args.degrees)]
    lines = [ln.strip() for ln in sys.stdin if ln.strip() and not ln.startswith("#")]
    if not lines:
        raise UsageError("no degree sequence given (use --degrees or stdin)")
    return [parse_sequence(ln) for ln in lines]


def cmd_dims(args, out: Output) -> int:
    d = covariant_dim(args.n, args.m, args.a)
    out.emit(str(d), {"n": str(args.n), "m": str(args.m), "a": str(args.a), "dim": str(d)})
    return EXIT_OK


def cmd_table(args, out: Output) -> int:
    text = format_table_tsv(args.n_max, args.m_max)
    if out.as_json:
        for line in text.splitlines()[1:]:
            m, *row = line.split("\t")
            out.emit("", {"m": m, "h": ["0" if v == "." else v for v in row]})
    else:
        out.stream.write(text)
    return EXIT_OK


def cmd_poincare(args, out: Output) -> int:
    s = poincare_series(args.n, args.order)
    out.emit(str(s), {"n": str(args.n), "order": str(args.order), "coefficients": _ints(s.coeffs)})
    if args.machine and not out.as_json:
        out.emit(s.machine_str(), {})
    return EXIT_OK


def cmd_numerator(args, out: Output) -> int:
    seq = parse_sequence(args.degrees)
    try:
        num = hsop_numerator(args.n, seq)
    except PreconditionFailed as exc:
        raise UsageError(str(exc)) from exc
    neg = num.first_negative()
    out.emit(
        str(num),
        {
            "n": str(args.n),
            "degrees": _ints(seq),
            "coefficients": _ints(num.coeffs),
            "first_negative": None if neg is None else str(neg),
            "palindromic": num.is_palindromic(),
        },
    )
    if args.machine and not out.as_json:
        out.emit(num.machine_str(), {})
    return EXIT_ASSERT if args.assert_ and neg is not None else EXIT_OK


def cmd_check(args, out: Output) -> int:
    ok = True
    for seq in _sequences(args):
        for req, have in theorem1_counts(args.n, seq):
            passed = have >= req.min_count
            ok &= passed
            out.emit(
                f"mod {req.modulus}: need {req.min_count}, have {have}, {'OK' if passed else 'FAIL'}",
                {
                    "degrees": _ints(seq),
                    "modulus": str(req.modulus),
                    "need": str(req.min_count),
                    "have": str(have),
                    "ok": passed,
                },
            )
    return EXIT_ASSERT if args.assert_ and not ok else EXIT_OK


def cmd_admissible(args, out: Output) -> int:
    ok = True
    for seq in _sequences(args):
        rep = admissible(args.n, seq)
        ok &= rep.verdict
        text = f"{_seq_text(seq)}: " + ("admissible" if rep.verdict else "rejected " + " ".join(rep.rules))
        out.emit(
            text,
            {
                "degrees": _ints(seq),
                "admissible": rep.verdict,
                "violations": [
                    {"rule": v.rule, "description": v.description, "witness": _ints(v.witness)}
                    for v in rep.violations
                ],
            },
        )
    return EXIT_ASSERT if args.assert_ and not ok else EXIT_OK


def cmd_minimal(args, out: Output) -> int:
    ok = True
    for seq in _sequences(args):
        rep = admissible(args.n, seq)
        record = {"degrees": _ints(seq), "admissible": rep.verdict, "minimal": False, "witness": None}
        if not rep.verdict:
            text = f"{_seq_text(seq)}: not admissible"
        else:
            w = find_reduction(args.n, seq)
            if w is None:
                record["minimal"] = True
                text = f"{_seq_text(seq)}: minimal"
            else:
                record["witness"] = {
                    "degree": str(w.degree),
                    "split": [str(w.left), str(w.right)],
                    "sequences": [_ints(w.left_sequence), _ints(w.right_sequence)],
                }
                text = (
                    f"{_seq_text(seq)}: reducible {w.degree} = {w.left} + {w.right} "
                    f"via {_seq_text(w.left_sequence)} and {_seq_text(w.right_sequence)}"
                )
        ok &= record["minimal"]
        out.emit(text, record)
    return EXIT_ASSERT if args.assert_ and not ok else EXIT_OK


def cmd_enumerate(args, out: Output) -> int:
    if args.merge:
        parts = []
        for path in args.merge:
            with open(path) as fh:
                parts.append([parse_sequence(ln) for ln in fh if ln.strip()])
        result = merge_shards(parts)
    elif args.shard is not None:
        if args.shards is None:
            raise UsageError("--shard requires --shards")
        result = enumerate_shard(args.n, args.shard, args.shards)
    else:
        workers = args.workers or os.cpu_count() or 1
        result = enumerate_minimal(args.n, workers=workers, shards=args.shards)
    for seq in result:
        out.emit(_seq_text(seq), {"n": str(args.n), "degrees": _ints(seq)})
    return EXIT_OK


def cmd_scan(args, out: Output) -> int:
    rep = conjecture_scan(args.n, args.lower, args.upper)
    for seq, e in rep.obstructions:
        out.emit(f"{_seq_text(seq)}: negative coefficient at t^{e}", {"degrees": _ints(seq), "first_negative": str(e)})
    out.emit(
        f"# checked {rep.checked} sequences, {len(rep.obstructions)} with negative numerator",
        {"checked": str(rep.checked), "obstructions": str(len(rep.obstructions))},
    )
    return EXIT_ASSERT if args.assert_ and rep.obstructions else EXIT_OK


def _form_record(form) -> dict:
    return {"n": str(form.n), "coefficients": [str(c) for c in form.coeffs]}


def cmd_transvect(args, out: Output) -> int:
    g = parse_form(args.form, args.binomial)
    h = parse_form(args.form2, args.binomial) if args.form2 else g
    res = transvectant(g, h, args.k)
    out.emit(str(res), _form_record(res))
    return EXIT_OK


def cmd_nullform(args, out: Output) -> int:
    f = parse_form(args.form, args.binomial)
    mult = max_root_multiplicity(f)
    null = is_nullform(f)
    out.emit(
        f"{'nullform' if null else 'not a nullform'} (max root multiplicity {mult}, n = {f.n})",
        {"n": str(f.n), "max_multiplicity": str(mult), "nullform": null},
    )
    return EXIT_ASSERT if args.assert_ and not null else EXIT_OK


def cmd_eval(args, out: Output) -> int:
    if args.list:
        for c in CATALOG.values():
            out.emit(
                f"{c.name}\tn={c.n}\tdegree={c.degree}\torder={c.order}\t{c.expr}",
                {"name": c.name, "n": str(c.n), "degree": str(c.degree), "order": str(c.order), "expr": c.expr},
            )
        return EXIT_OK
    if not args.form:
        raise UsageError("--form is required")
    f = parse_form(args.form, args.binomial)
    if args.chain:
        chain = get_chain(args.chain)
    elif args.expr:
        env = {"H": "(f,f)_2", **SEPTIMIC_ENV}
        deg, order = shape(parse_chain(args.expr, env), f.n)
        chain = InvariantChain.build("expr", f.n, args.expr, deg, order, env)
    else:
        raise UsageError("give --chain NAME or --expr EXPRESSION")
    res = evaluate_chain(chain, f)
    out.emit(str(res), {"chain": chain.name, "degree": str(chain.degree), **_form_record(res)})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON object per result line")
    common.add_argument("--assert", dest="assert_", action="store_true", help="exit 3 when a verdict is false")

    p = argparse.ArgumentParser(prog="hsop", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("dims", parents=[common], help="dimension of covariants of degree m, order a")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--a", type=int, default=0)
    s.set_defaults(func=cmd_dims)

    s = sub.add_parser("table", parents=[common], help="invariant dimensions as TSV")
    s.add_argument("--n-max", type=int, default=18)
    s.add_argument("--m-max", type=int, default=18)
    s.set_defaults(func=cmd_table)

    s = sub.add_parser("poincare", parents=[common], help="Poincare series up to a given order")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--order", type=int, default=30)
    s.add_argument("--machine", action="store_true", help="also print exponent:coefficient pairs")
    s.set_defaults(func=cmd_poincare)

    s = sub.add_parser("numerator", parents=[common], help="P(t) * prod(1 - t^d)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--degrees", required=True)
    s.add_argument("--machine", action="store_true")
    s.set_defaults(func=cmd_numerator)

    for name, func, helptext in (
        ("check", cmd_check, "divisibility conditions, one line per modulus"),
        ("admissible", cmd_admissible, "exact hsop characterisation for 3 <= n <= 8"),
        ("minimal", cmd_minimal, "minimality test with reduction witness"),
    ):
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("--n", type=int, required=True)
        s.add_argument("--degrees", help="comma-separated degrees; otherwise one sequence per stdin line")
        s.set_defaults(func=func)

    s = sub.add_parser("enumerate", parents=[common], help="all minimal degree sequences")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--workers", type=int, default=None, help="process count (default: all CPUs)")
    s.add_argument("--shards", type=int, default=None)
    s.add_argument("--shard", type=int, default=None, help="run only this shard")
    s.add_argument("--merge", nargs="+", metavar="FILE", help="merge shard output files")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("scan", parents=[common], help="numerator nonnegativity over a box of degrees")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--lower", type=int, required=True)
    s.add_argument("--upper", type=int, required=True)
    s.set_defaults(func=cmd_scan)

    for name, func, helptext in (
        ("transvect", cmd_transvect, "transvectant of two forms"),
        ("nullform", cmd_nullform, "nullcone membership by root multiplicity"),
        ("eval-invariant", cmd_eval, "evaluate a transvectant chain on a form"),
    ):
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("--form", required=func is not cmd_eval, help="'n: c0,c1,...,cn'")
        s.add_argument("--binomial", action="store_true", help="coefficients use the binomial convention")
        s.set_defaults(func=func)
        if func is cmd_transvect:
            s.add_argument("--form2", help="second form (default: the first)")
            s.add_argument("--k", type=int, required=True)
        if func is cmd_eval:
            s.add_argument("--chain", help="catalog name")
            s.add_argument("--expr", help="chain expression, e.g. '(H,H)_2'; H, psi, psi1, psi2, psi3 are predefined")
            s.add_argument("--list", action="store_true", help="list catalog chains")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    out = Output(args.json)
    try:
        return args.func(args, out)
    except NotPolynomial as exc:
        print(f"hsop: internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (UsageError, HsopError, ValueError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"hsop: error: {msg}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
