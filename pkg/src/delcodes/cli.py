"""Command-line interface for batch experiments and report generation.

Exit status: 0 success/pass, 1 usage error, 2 verification fail,
3 budget exceeded.  JSON output is the stable machine format; the text
format is human-oriented.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from . import analysis, far, rep, verify, vt
from .errors import BudgetExceeded, DecodeFailure, FormulaDomainError
from .patterns import ErrorPattern, PatternFamily, apply_pattern, sample_pattern
from .words import parse_word, word_to_str

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY_FAIL = 2
EXIT_BUDGET = 3

MAX_INLINE_WORD = 4096


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read_word(arg: str):
    if arg.startswith("@"):
        with open(arg[1:], encoding="ascii") as fh:
            text = fh.read().strip()
    else:
        if len(arg) > MAX_INLINE_WORD:
            raise UsageError(
                f"inline words are capped at {MAX_INLINE_WORD} symbols; "
                "use @path for longer input")
        text = arg
    return parse_word(text)


def _parse_family(spec: str, n: int) -> PatternFamily:
    """Family spec: atmost:T | pfar:P[:T] | burst:B, optional @KINDS."""
    kinds = "DEF"
    if "@" in spec:
        spec, kinds = spec.split("@", 1)
    parts = spec.split(":")
    name = parts[0].lower()
    try:
        if name == "atmost":
            return PatternFamily.at_most(n, int(parts[1]), kinds=kinds)
        if name == "pfar":
            t = int(parts[2]) if len(parts) > 2 else None
            return PatternFamily.p_far(n, int(parts[1]), t=t, kinds=kinds)
        if name == "burst":
            return PatternFamily.burst(n, int(parts[1]), kinds=kinds)
    except (IndexError, ValueError) as exc:
        raise UsageError(f"bad family spec {spec!r}: {exc}") from exc
    raise UsageError(f"unknown family kind {name!r}")


def _make_code(args) -> object:
    kind = args.code
    if kind == "vt":
        _require(args, "n", "a")
        return verify.make_code("vt", n=args.n, a=args.a)
    if kind == "rep":
        _require(args, "n", "t")
        return verify.make_code("rep", n=args.n, t=args.t)
    if kind == "burst":
        _require(args, "n", "b")
        return verify.make_code("burst", n=args.n, b=args.b)
    if kind == "far":
        _require(args, "n", "P")
        return verify.make_code("far", n=args.n, P=args.P)
    raise UsageError(f"unknown code {kind!r}")


def _require(args, *names):
    for name in names:
        if getattr(args, name, None) is None:
            raise UsageError(f"--{name} is required for --code {args.code}")


def _budget() -> int:
    value = os.environ.get("DELCODE_BUDGET")
    return int(value) if value else verify.DEFAULT_BUDGET


def _emit(args, payload: dict, text_lines) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _cmd_vt_enum(args) -> int:
    codebook = vt.vt_enumerate(vt.VtParams(args.n, args.a))
    lines = [word_to_str(w) for w in codebook]
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write("\n".join(lines) + "\n")
        _emit(args, {"config": {"command": "vt-enum", "n": args.n, "a": args.a},
                     "size": len(codebook), "out": args.out},
              [f"wrote {len(codebook)} codewords to {args.out}"])
    else:
        for line in lines:
            print(line)
    return EXIT_OK


def _cmd_encode(args) -> int:
    config = {"command": "encode", "code": args.code}
    if args.code == "rep":
        _require(args, "n", "t")
        params = rep.RepParams(args.n, args.t)
        info = _read_word(args.info)
        codeword = rep.rep_encode(params, info)
        config.update(n=args.n, t=args.t, info=word_to_str(info))
    elif args.code == "far":
        _require(args, "n", "P")
        params = far.far_params(args.n, args.P)
        indices = [int(part) for part in args.info.split(",")]
        codeword = far.far_encode(params, indices)
        config.update(n=args.n, P=args.P, indices=indices)
    else:
        raise UsageError("encode supports --code rep|far")
    _emit(args, {"config": config, "codeword": word_to_str(codeword)},
          [word_to_str(codeword)])
    return EXIT_OK


def _cmd_decode(args) -> int:
    word = _read_word(args.word)
    config = {"command": "decode", "code": args.code,
              "word": word_to_str(word)}
    if args.code == "vt":
        _require(args, "n", "a")
        estimate, ambiguous = vt.correct_single(vt.VtParams(args.n, args.a), word)
        diagnostics = {"ambiguous": ambiguous}
        config.update(n=args.n, a=args.a)
    elif args.code == "rep":
        _require(args, "n", "t")
        info, tied = rep.rep_decode(rep.RepParams(args.n, args.t), word)
        estimate, diagnostics = info, {"majorityTie": tied}
        config.update(n=args.n, t=args.t)
    elif args.code == "far":
        _require(args, "n", "P")
        estimate, info = far.far_decode(far.far_params(args.n, args.P), word)
        diagnostics = {"iterations": info.iterations,
                       "ambiguousFlips": info.ambiguous_flips}
        config.update(n=args.n, P=args.P)
    else:
        raise UsageError("decode supports --code vt|rep|far")
    _emit(args, {"config": config, "estimate": word_to_str(estimate),
                 "diagnostics": diagnostics},
          [word_to_str(estimate)])
    return EXIT_OK


def _cmd_corrupt(args) -> int:
    word = _read_word(args.word)
    if args.pattern:
        pattern = ErrorPattern.from_json_dict(json.loads(args.pattern))
        config = {"command": "corrupt", "pattern": pattern.to_json_dict()}
    elif args.family:
        if args.seed is None:
            raise UsageError("--seed is required with --family")
        family = _parse_family(args.family, len(word))
        pattern = sample_pattern(family, args.seed)
        config = {"command": "corrupt", "family": family.describe(),
                  "seed": args.seed, "pattern": pattern.to_json_dict()}
    else:
        raise UsageError("corrupt needs --pattern or --family")
    corrupted = apply_pattern(word, pattern)
    _emit(args, {"config": config, "word": word_to_str(word),
                 "corrupted": word_to_str(corrupted)},
          [word_to_str(corrupted)])
    return EXIT_OK


def _cmd_count(args) -> int:
    if args.far is not None and args.burst is not None:
        raise UsageError("--far and --burst are mutually exclusive")
    if args.far is not None:
        if args.t is None:
            raise UsageError("--t is required with --far")
        value = analysis.count_far_patterns(args.n, args.far, args.t)
        config = {"command": "count", "n": args.n, "t": args.t, "far": args.far}
    elif args.burst is not None:
        value = analysis.count_burst_patterns(args.n, args.burst)
        config = {"command": "count", "n": args.n, "burst": args.burst}
    else:
        if args.t is None:
            raise UsageError("--t is required")
        value = analysis.count_patterns(args.n, args.t)
        config = {"command": "count", "n": args.n, "t": args.t}
    _emit(args, {"config": config, "count": value}, [str(value)])
    return EXIT_OK


_BOUND_ARGS = {
    "rep_bounds": ("n", "t"),
    "any_code_lower": ("n", "t"),
    "frac_upper": ("n", "t", "omega"),
    "frac_upper_K": ("n", "t", "K"),
    "delta": ("P",),
    "far_upper": ("n", "P"),
    "far_lower": ("n", "P"),
    "far_lower_largeP": ("n", "P"),
    "burst_lower": ("n", "b"),
}


def _cmd_bounds(args) -> int:
    evaluator = analysis.BOUND_EVALUATORS.get(args.name)
    if evaluator is None:
        raise UsageError(f"unknown bound name {args.name!r}; "
                         f"choices: {', '.join(sorted(_BOUND_ARGS))}")
    arg_names = _BOUND_ARGS[args.name]
    values = []
    for name in arg_names:
        value = getattr(args, name, None)
        if value is None:
            raise UsageError(f"--{name} is required for bound {args.name}")
        values.append(value)
    report = evaluator(*values)
    _emit(args, {"config": {"command": "bounds", "name": args.name,
                            "inputs": report.inputs},
                 "report": report.to_json_dict()},
          [f"{report.name}{report.inputs} = {report.value}  "
           f"[{report.applicability}]"])
    return EXIT_OK


def _cmd_fraction(args) -> int:
    fraction, bound = analysis.far_fraction(args.n, args.t, args.omega)
    payload = {
        "config": {"command": "fraction", "n": args.n, "t": args.t,
                   "omega": args.omega},
        "fraction": fraction,
        "bound": bound,
    }
    _emit(args, payload,
          [f"fraction = {fraction}", f"bound (1 - 42/omega) = {bound}"])
    return EXIT_OK


def _cmd_verify(args) -> int:
    code = _make_code(args)
    family = _parse_family(args.family, args.n)
    budget = _budget()
    if args.mode == "combinatorial":
        codebook = list(code.codewords())
        report = verify.verify_combinatorial(codebook, family, budget=budget)
    elif args.mode == "roundtrip":
        report = verify.verify_roundtrip(code, family, budget=budget)
    else:
        raise UsageError("verify supports --mode combinatorial|roundtrip")
    payload = report.to_json_dict()
    payload["config"]["command"] = "verify"
    payload["config"]["mode"] = args.mode
    _emit(args, payload,
          [f"{args.mode} verification: {report.result} "
           f"({report.cases if report.cases is not None else report.family_size} "
           f"cases, {report.failures} failures, "
           f"{report.ambiguity_count} ambiguous)"])
    return EXIT_OK if report.passed else EXIT_VERIFY_FAIL


def _cmd_simulate(args) -> int:
    code = _make_code(args)
    family = _parse_family(args.family, args.n)
    report = verify.simulate(code, family, args.trials, args.seed,
                             workers=args.workers)
    payload = report.to_json_dict()
    payload["config"]["command"] = "simulate"
    _emit(args, payload,
          [f"montecarlo: {report.result}, "
           f"{report.trial_count - report.failures}/{report.trial_count} "
           f"successes, seed {report.seed}"])
    return EXIT_OK if report.passed else EXIT_VERIFY_FAIL


def build_parser() -> _Parser:
    parser = _Parser(prog="delcodes",
                     description="codes correcting deletable errors")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(func=func)
        p.add_argument("--format", choices=("text", "json"), default="text")
        return p

    p = add("vt-enum", _cmd_vt_enum, help="enumerate a VT codebook")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--out", help="write codebook file (one word per line)")

    p = add("encode", _cmd_encode, help="encode with rep or far code")
    p.add_argument("--code", required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--P", type=int)
    p.add_argument("--info", required=True,
                   help="info word (rep) or comma-separated indices (far)")

    p = add("decode", _cmd_decode, help="decode a received word")
    p.add_argument("--code", required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--P", type=int)
    p.add_argument("--word", required=True)

    p = add("corrupt", _cmd_corrupt, help="apply or sample an error pattern")
    p.add_argument("--word", required=True)
    p.add_argument("--pattern", help="pattern JSON")
    p.add_argument("--family", help="family spec, e.g. pfar:9 or atmost:2@D")
    p.add_argument("--seed", type=int)

    p = add("count", _cmd_count, help="exact pattern counts")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int)
    p.add_argument("--far", type=int, metavar="P")
    p.add_argument("--burst", type=int, metavar="B")

    p = add("bounds", _cmd_bounds, help="evaluate a redundancy bound")
    p.add_argument("--name", required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--P", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--omega", type=float)
    p.add_argument("--K", type=int)

    p = add("fraction", _cmd_fraction, help="fraction of far patterns")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--omega", type=int, required=True)

    for name, func in (("verify", _cmd_verify), ("simulate", _cmd_simulate)):
        p = add(name, func, help=f"{name} a code against a pattern family")
        p.add_argument("--code", required=True)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--a", type=int)
        p.add_argument("--t", type=int)
        p.add_argument("--P", type=int)
        p.add_argument("--b", type=int)
        p.add_argument("--family", required=True)
        if name == "verify":
            p.add_argument("--mode", required=True)
        else:
            p.add_argument("--trials", type=int, required=True)
            p.add_argument("--seed", type=int, required=True)
            p.add_argument("--workers", type=int, default=1)
    return parser


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, FormulaDomainError, DecodeFailure, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
