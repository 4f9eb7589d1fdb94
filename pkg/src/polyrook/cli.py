"""Command-line interface: ``polyrook <command> ...``.

Exit status: 0 when every check passes, 1 when a report records a mismatch
or counterexample, 2 on invalid input or configuration.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import verify
from .enumerate import DEDUP_D4, DEDUP_NONE, MAX_ENUM_RANK, count_fixed, enumerate_fixed, enumerate_simple
from .errors import MethodsDisagree, PolyrookError
from .grid import load_polyomino, to_json
from .groebner import DEGREVLEX, LEX, h_polynomial, krull_dim
from .lattice import h_via_cell_chains, h_via_descents, lattice_of
from .motzkin import decode, encode
from .parallelogram import ALL, METHODS, derived_sequence, detect, from_paths, gorenstein_verdicts, is_gorenstein
from .rooks import equivalence_classes, rook_levels, rook_polynomial, r_tilde_polynomial

EXIT_OK, EXIT_MISMATCH, EXIT_INVALID = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    # registered on the top-level parser and on every subcommand, so the flags
    # may appear before or after the command name
    default = argparse.SUPPRESS if suppress else None
    parser.add_argument("--jobs", type=int, default=argparse.SUPPRESS if suppress else 1, help="worker processes")
    parser.add_argument("--out", default=default, help="write output to FILE instead of stdout")
    parser.add_argument(
        "--json", action="store_true", default=argparse.SUPPRESS if suppress else False, help="JSON output"
    )


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="polyrook", description=__doc__.splitlines()[0])
    _global_flags(p, suppress=False)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_):
        sp = sub.add_parser(name, help=help_)
        _global_flags(sp, suppress=True)
        return sp

    sp = add("enumerate", "list polyominoes of a given rank, one JSON object per line")
    sp.add_argument("--rank", type=int, required=True)
    sp.add_argument("--simple", action="store_true", help="keep simple polyominoes only")
    sp.add_argument("--dedup", choices=[DEDUP_NONE, DEDUP_D4], default=DEDUP_NONE)
    sp.add_argument("--count-only", action="store_true")

    sp = add("verify", "check h(t) = r~(t) on all simple polyominoes up to a rank")
    sp.add_argument("--max-rank", type=int, required=True)
    sp.add_argument("--dedup", choices=[DEDUP_NONE, DEDUP_D4], default=DEDUP_D4)
    sp.add_argument("--timings", action="store_true", help="record per-polyomino timings (non-deterministic)")
    sp.add_argument("--resume", metavar="CHECKPOINT", help="append finished shards here and skip them on rerun")

    for name, help_ in (
        ("crosscheck", "four-way h(t) agreement on parallelogram polyominoes"),
        ("gorenstein-sweep", "three-way Gorenstein agreement on parallelogram polyominoes"),
    ):
        sp = add(name, help_)
        sp.add_argument("--max-rank", type=int, required=True)
        sp.add_argument("--resume", metavar="CHECKPOINT")

    sp = add("hilbert", "h-polynomial of one polyomino")
    sp.add_argument("file")
    sp.add_argument("--method", choices=["groebner", "descent", "chains"], default="groebner")
    sp.add_argument("--order", choices=[DEGREVLEX, LEX], default=DEGREVLEX)

    sp = add("rook", "rook polynomial and switch-class polynomial")
    sp.add_argument("file")
    sp.add_argument("--classes", action="store_true", help="list class representatives")

    sp = add("gorenstein", "Gorenstein test for a parallelogram polyomino")
    sp.add_argument("file")
    sp.add_argument("--method", choices=[*METHODS, ALL], default=ALL)

    sp = add("motzkin", "Motzkin word coding of parallelogram polyominoes")
    msub = sp.add_subparsers(dest="action", required=True, parser_class=_Parser)
    enc = msub.add_parser("encode")
    enc.add_argument("file")
    dec = msub.add_parser("decode")
    dec.add_argument("word")
    for leaf in (enc, dec):
        _global_flags(leaf, suppress=True)

    sp = add("paths", "upper and lower boundary words of a parallelogram polyomino")
    sp.add_argument("file")

    sp = add("derive", "derived sequence of a parallelogram polyomino")
    sp.add_argument("file")
    return p


# -- command handlers: each returns (text, exit code) ------------------------


def _cmd_enumerate(a):
    if not 1 <= a.rank <= MAX_ENUM_RANK:
        raise PolyrookError(f"--rank must be in 1..{MAX_ENUM_RANK}")
    if not a.simple and a.dedup != DEDUP_NONE:
        raise PolyrookError("--dedup requires --simple")
    if a.simple:
        stream = enumerate_simple(a.rank, a.dedup)
    else:
        if a.count_only:
            return str(count_fixed(a.rank)), EXIT_OK
        stream = enumerate_fixed(a.rank)
    if a.count_only:
        return str(sum(1 for _ in stream)), EXIT_OK
    return "\n".join(to_json(P) for P in stream), EXIT_OK


def _report(rep: verify.Report, a):
    text = rep.to_jsonl().rstrip("\n")
    if not a.json and not a.out:
        s = rep.summary
        text = f"{rep.kind}: {s['total']} polyominoes, {s['failures']} failures\n" + json.dumps(
            s["per_rank"], sort_keys=True
        )
    return text, rep.exit_code


def _cmd_verify(a):
    rep = verify.verify_conjecture(a.max_rank, a.jobs, a.dedup, a.timings, a.resume)
    return _report(rep, a)


def _cmd_crosscheck(a):
    return _report(verify.crosscheck_parallelogram(a.max_rank, a.jobs, a.resume), a)


def _cmd_sweep(a):
    return _report(verify.classify_gorenstein(a.max_rank, a.jobs, a.resume), a)


def _cmd_hilbert(a):
    P = load_polyomino(a.file)
    if a.method == "groebner":
        h = h_polynomial(P, a.order)
        return json.dumps({"h": h.to_list(), "dim": krull_dim(P), "reg": h.degree}), EXIT_OK
    h = h_via_descents(lattice_of(P)) if a.method == "descent" else h_via_cell_chains(P)
    return json.dumps(h.to_list()), EXIT_OK


def _cmd_rook(a):
    P = load_polyomino(a.file)
    r, rt = rook_polynomial(P), r_tilde_polynomial(P)
    reps = None
    if a.classes:
        levels = rook_levels(P)
        reps = [
            [[list(c) for c in cl.representative] for cl in equivalence_classes(P, k, levels)]
            for k in range(len(levels))
        ]
    if a.json:
        out = {"r": r.to_list(), "r_tilde": rt.to_list()}
        if reps is not None:
            out["classes"] = reps
        return json.dumps(out), EXIT_OK
    lines = [f"r(t) = {r}", f"r~(t) = {rt}"]
    if reps is not None:
        for k, level in enumerate(reps):
            lines.append(f"k={k}: " + " | ".join(" ".join(f"({x},{y})" for x, y in F) or "{}" for F in level))
    return "\n".join(lines), EXIT_OK


def _cmd_gorenstein(a):
    P = load_polyomino(a.file)
    if a.method == ALL:
        verdicts = gorenstein_verdicts(P)
        agree = len(set(verdicts.values())) == 1
        if a.json:
            return json.dumps({"gorenstein": verdicts[METHODS[0]], "verdicts": verdicts, "agree": agree}), (
                EXIT_OK if agree else EXIT_MISMATCH
            )
        if not agree:
            raise MethodsDisagree({"cells": P.to_list(), "verdicts": verdicts})
        return str(verdicts[METHODS[0]]).lower(), EXIT_OK
    result = is_gorenstein(P, a.method)
    return (json.dumps({"gorenstein": result}) if a.json else str(result).lower()), EXIT_OK


def _cmd_motzkin(a):
    if a.action == "encode":
        w = str(encode(detect(load_polyomino(a.file))))
        return (json.dumps({"word": w}) if a.json else w), EXIT_OK
    pp = decode(a.word)
    P = from_paths(pp)
    if a.json:
        return json.dumps({"u": pp.u, "l": pp.l, "cells": P.to_list()}), EXIT_OK
    return f"{pp.u}\n{pp.l}\n{to_json(P)}", EXIT_OK


def _cmd_paths(a):
    pp = detect(load_polyomino(a.file))
    return (json.dumps({"u": pp.u, "l": pp.l}) if a.json else f"u {pp.u}\nl {pp.l}"), EXIT_OK


def _cmd_derive(a):
    seq = derived_sequence(load_polyomino(a.file))
    out = {
        "stages": [P.to_list() for P in seq.stages],
        "removed": [[list(R.interval.lo), list(R.interval.hi)] for R in seq.removed],
        "terminal": seq.terminal,
        "well_shortenable": seq.well_shortenable,
    }
    if seq.remainder is not None:
        out["remainder"] = [list(c) for c in seq.remainder]
    return json.dumps(out), EXIT_OK


HANDLERS = {
    "enumerate": _cmd_enumerate,
    "verify": _cmd_verify,
    "crosscheck": _cmd_crosscheck,
    "gorenstein-sweep": _cmd_sweep,
    "hilbert": _cmd_hilbert,
    "rook": _cmd_rook,
    "gorenstein": _cmd_gorenstein,
    "motzkin": _cmd_motzkin,
    "paths": _cmd_paths,
    "derive": _cmd_derive,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.jobs < 1:
        print("polyrook: error: --jobs must be positive", file=sys.stderr)
        return EXIT_INVALID
    try:
        text, code = HANDLERS[args.command](args)
    except MethodsDisagree as exc:
        print(f"polyrook: methods disagree: {json.dumps(exc.report)}", file=sys.stderr)
        return EXIT_MISMATCH
    except (PolyrookError, ValueError, OSError) as exc:
        print(f"polyrook: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + ("\n" if text else ""))
    elif text:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
