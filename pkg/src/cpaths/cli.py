"""The ``cpath`` command.

Arguments that take a term or path accept literal text, ``-`` for standard
input, or ``@file``. Exit statuses: 0 success, 1 parse or usage error,
2 coherence error, 3 fuel exhausted, 4 uninhabited premise.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import circle, lambda_paths, nat
from .engine import DEFAULT_FUEL, STRATEGIES, format_trace, normalize, trace_document
from .errors import CPathError, ParseError
from .syntax import parse_path, parse_term, print_path, print_term
from .terms import format_location, numeral_value, pretty

CONFIG_KEYS = {"fuel", "strategy", "rule39_literal"}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(f"{self.prog}: {message}")


def read_config(path: str) -> dict:
    """Read ``key = value`` lines; ``#`` starts a comment."""
    out = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ParseError(f"{path}: expected key = value", lineno, 1)
            key, value = (s.strip() for s in line.split("=", 1))
            key = key.replace("-", "_")
            if key not in CONFIG_KEYS:
                raise ParseError(f"{path}: unknown setting {key!r}", lineno, 1)
            out[key] = value
    return out


def _settings(args) -> dict:
    cfg = read_config(args.config) if args.config else {}
    fuel = args.fuel if args.fuel is not None else int(cfg.get("fuel", DEFAULT_FUEL))
    strategy = args.strategy or cfg.get("strategy", "lo")
    if strategy not in STRATEGIES:
        raise ParseError(f"unknown strategy {strategy!r}")
    lit = args.rule39_literal or cfg.get("rule39_literal", "false").lower() in ("1", "true", "yes")
    if fuel < 1:
        raise ParseError("fuel must be positive")
    return {"fuel": fuel, "strategy": strategy, "rule39_literal": lit}


def _text(arg: str, stdin) -> str:
    if arg == "-":
        return stdin.read()
    if arg.startswith("@"):
        with open(arg[1:], encoding="utf-8") as fh:
            return fh.read()
    return arg


def _numeral(arg: str) -> int:
    try:
        n = int(arg)
    except ValueError:
        n = numeral_value(parse_term(arg))
        if n is None:
            raise ParseError(f"{arg!r} is not a numeral") from None
    if n < 0:
        raise ParseError(f"numerals are non-negative, got {n}")
    return n


def _emit(out, obj):
    out.write(json.dumps(obj, indent=2, ensure_ascii=False) + "\n")


def cmd_normalize(args, s, out, stdin):
    p = parse_path(_text(args.path, stdin))
    nf, trace = normalize(p, s["fuel"], s["strategy"], rule39_literal=s["rule39_literal"])
    if args.json:
        _emit(out, {"input": print_path(p), "normal_form": print_path(nf),
                    "step_count": len(trace), "rules": trace.rules})
    else:
        out.write(f"{print_path(nf)}\n")
        out.write(f"steps: {len(trace)}" + (f" ({' '.join(trace.rules)})" if trace.rules else "") + "\n")


def cmd_equal(args, s, out, stdin):
    from .engine import rw_equal
    from .paths import check_well_formed

    p = parse_path(_text(args.left, stdin))
    q = parse_path(_text(args.right, stdin))
    check_well_formed(p)
    check_well_formed(q)
    if s["rule39_literal"]:
        a = normalize(p, s["fuel"], s["strategy"], rule39_literal=True)[0]
        b = normalize(q, s["fuel"], s["strategy"], rule39_literal=True)[0]
        eq = a == b
    else:
        eq = rw_equal(p, q, s["fuel"], s["strategy"])
    if args.json:
        _emit(out, {"equal": eq})
    else:
        out.write("true\n" if eq else "false\n")


def cmd_trace(args, s, out, stdin):
    p = parse_path(_text(args.path, stdin))
    nf, trace = normalize(p, s["fuel"], s["strategy"], rule39_literal=s["rule39_literal"])
    if args.json:
        body = json.dumps(trace_document(p, nf, trace), indent=2, ensure_ascii=False) + "\n"
    else:
        body = format_trace(trace) + f"normal form: {print_path(nf)}\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(body)
        out.write(f"wrote {len(trace)} steps to {args.out}\n")
    else:
        out.write(body)


def cmd_winding(args, s, out, stdin):
    p = parse_path(_text(args.path, stdin))
    n, nf, trace = circle.winding_trace(p, s["fuel"], s["strategy"])
    if args.json:
        doc = {"winding": n, "canonical": circle.format_power(n), "normal_form": print_path(nf)}
        if args.trace:
            doc["steps"] = trace_document(p, nf, trace)["steps"]
        _emit(out, doc)
        return
    out.write(f"{n}\n")
    if args.trace:
        out.write(format_trace(trace))


def cmd_nat_encode(args, s, out, stdin):
    m, n = _numeral(args.m), _numeral(args.n)
    p = parse_path(_text(args.path, stdin))
    w = nat.encode(m, n, p)
    if args.json:
        _emit(out, {"code": nat.code(m, n).value, "witness": print_term(w.witness)})
    else:
        out.write(f"{print_term(w.witness)}\n")


def cmd_nat_decode(args, s, out, stdin):
    m, n = _numeral(args.m), _numeral(args.n)
    p = nat.decode(m, n, nat.STAR)
    if args.json:
        _emit(out, {"path": print_path(p), "source": print_term(p.source),
                    "target": print_term(p.target)})
    else:
        out.write(f"{print_path(p)}\n")


def _lambda_steps(seq):
    for i, st in enumerate(seq.steps):
        yield {"step": i + 1, "kind": st.kind, "location": list(st.loc),
               "direction": st.direction, "before": pretty(seq.terms[i]),
               "after": pretty(seq.terms[i + 1])}


def cmd_lambda_path(args, s, out, stdin):
    m = parse_term(_text(args.left, stdin))
    n = parse_term(_text(args.right, stdin))
    p = lambda_paths.find_path(m, n, s["fuel"])
    down = lambda_paths.reduction_to_normal(m, s["fuel"])
    up = lambda_paths.reduction_to_normal(n, s["fuel"])
    steps = list(_lambda_steps(down))
    for i, st in reversed(list(enumerate(up.steps))):
        steps.append({"step": len(steps) + 1, "kind": st.kind, "location": list(st.loc),
                      "direction": lambda_paths.REVERSED, "before": pretty(up.terms[i + 1]),
                      "after": pretty(up.terms[i])})
    if args.json:
        _emit(out, {"left": print_term(m), "right": print_term(n),
                    "path": None if p is None else print_path(p),
                    "normal_forms": [pretty(down.terms[-1]), pretty(up.terms[-1])],
                    "steps": steps if p is not None else []})
        return
    if p is None:
        out.write(f"none: normal forms differ ({pretty(down.terms[-1])} vs {pretty(up.terms[-1])})\n")
        return
    out.write(f"{print_path(p)}\n")
    out.write(f"{pretty(m)}  =  {pretty(n)}\n")
    for st in steps:
        arrow = "->" if st["direction"] == lambda_paths.FORWARD else "<-"
        out.write(f"{st['step']:>4}  {st['kind']:<4} {format_location(st['location']):<10} "
                  f"{st['before']}  {arrow}  {st['after']}\n")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--fuel", type=int, default=None,
                        help=f"maximum rewrite steps (default {DEFAULT_FUEL})")
    common.add_argument("--strategy", choices=STRATEGIES, default=None)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--rule39-literal", action="store_true",
                        help="rule tst yields u as printed, skipping its endpoint check")
    common.add_argument("--config", help="file of key = value settings (flags win)")

    parser = _Parser(prog="cpath", description="Computational paths and their rewriting.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help_, *params):
        sp = sub.add_parser(name, parents=[common], help=help_)
        for prm in params:
            sp.add_argument(prm)
        sp.set_defaults(func=fn)
        return sp

    add("normalize", cmd_normalize, "print the rw-normal form and the step count", "path")
    add("equal", cmd_equal, "decide rw-equality of two paths", "left", "right")
    sp = add("trace", cmd_trace, "print every rewrite step", "path")
    sp.add_argument("--out", help="write the trace to this file")
    sp = add("winding", cmd_winding, "winding number of a loop expression", "path")
    sp.add_argument("--trace", action="store_true", help="also print the rewrite trace")
    add("nat-encode", cmd_nat_encode, "encode a path between numerals", "m", "n", "path")
    add("nat-decode", cmd_nat_decode, "decode code(m, n) into a path", "m", "n")
    add("lambda-path", cmd_lambda_path, "certificate path for beta-eta equality", "left", "right")
    return parser


def main(argv=None, out=None, err=None, stdin=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    stdin = stdin or sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        settings = _settings(args)
        args.func(args, settings, out, stdin)
    except CPathError as e:
        err.write(f"error: {e}\n")
        return e.exit_code
    except OSError as e:
        err.write(f"error: {e}\n")
        return 1
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
