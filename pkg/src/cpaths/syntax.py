"""S-expression reader and printer for terms and paths.

Terms::

    (var x) | (lam x T) | (app T T) | zero | (succ T) | star | base | 0 | 1 | ...

Paths::

    (rho T) | (beta T [i ...]) | (eta T [i ...]) | (sigma P) | (tau P P)
    | (mu P T) | (nu P T) | (xi x P) | (subl P P) | (subr P P) | loop
    | (mu1 P) | (mu2 P) | (mu2arg P P) | (mu3arg P P P) | (xi1 P) | (xi2 P)
    | (xipair P P)

An opaque form may end with ``(ends T T)`` to declare its endpoints.
The printer writes numerals as digits, so ``print(parse(s))`` is the
canonical spelling of ``s`` and ``parse(print(x)) == x`` always holds.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import CoherenceError, ParseError
from .paths import (OPAQUE_TYPES, BetaStep, EtaStep, Loop, Mu, Nu, Opaque, Path,
                    Rho, Sigma, SubL, SubR, Tau, Xi, check_well_formed)
from .terms import (App, Base, Lam, Star, Succ, Term, Var, Zero, numeral,
                    numeral_value)

_TOKEN = re.compile(r"\s+|;[^\n]*|([()\[\]])|([^\s()\[\];]+)")
_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_']*\Z")


@dataclass
class _Node:
    kind: str  # "atom", "list" or "loc"
    value: object
    line: int
    col: int


def _error(msg, node):
    return ParseError(msg, node.line, node.col)


def read_sexprs(text: str) -> list[_Node]:
    """Tokenize and bracket ``text`` into a list of top-level nodes."""
    stack: list[tuple[str, list, int, int]] = [("top", [], 1, 1)]
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # pragma: no cover - the pattern matches any character
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        col = pos - line_start + 1
        tok_paren, tok_atom = m.group(1), m.group(2)
        if tok_paren in ("(", "["):
            stack.append(("list" if tok_paren == "(" else "loc", [], line, col))
        elif tok_paren in (")", "]"):
            kind, items, l0, c0 = stack.pop() if len(stack) > 1 else (None, None, 0, 0)
            want = "list" if tok_paren == ")" else "loc"
            if kind != want:
                raise ParseError(f"unbalanced {tok_paren!r}", line, col)
            stack[-1][1].append(_Node(kind, items, l0, c0))
        elif tok_atom is not None:
            stack[-1][1].append(_Node("atom", tok_atom, line, col))
        chunk = m.group(0)
        nl = chunk.count("\n")
        if nl:
            line += nl
            line_start = pos + chunk.rindex("\n") + 1
        pos = m.end()
    if len(stack) > 1:
        _, _, l0, c0 = stack[-1]
        raise ParseError("unclosed bracket", l0, c0)
    return stack[0][1]


def _read_one(text: str, what: str) -> _Node:
    nodes = read_sexprs(text)
    if not nodes:
        raise ParseError(f"empty input, expected a {what}", 1, 1)
    if len(nodes) > 1:
        raise _error(f"trailing input after the {what}", nodes[1])
    return nodes[0]


def _ident(node) -> str:
    if node.kind != "atom" or not _IDENT.match(node.value):
        raise _error("expected an identifier", node)
    return node.value


def _arity(node, head, n):
    if len(node.value) != n + 1:
        raise _error(f"'{head}' takes {n} argument(s), got {len(node.value) - 1}", node)


def term_from_sexpr(node: _Node) -> Term:
    if node.kind == "atom":
        v = node.value
        if v == "zero":
            return Zero()
        if v == "star":
            return Star()
        if v == "base":
            return Base()
        if v.isdigit():
            return numeral(int(v))
        raise _error(f"unknown term {v!r}", node)
    if node.kind == "loc" or not node.value:
        raise _error("expected a term", node)
    head = node.value[0]
    if head.kind != "atom":
        raise _error("expected a term constructor", head)
    args = node.value[1:]
    h = head.value
    if h == "var":
        _arity(node, h, 1)
        return Var(_ident(args[0]))
    if h == "lam":
        _arity(node, h, 2)
        return Lam(_ident(args[0]), term_from_sexpr(args[1]))
    if h == "app":
        _arity(node, h, 2)
        return App(term_from_sexpr(args[0]), term_from_sexpr(args[1]))
    if h == "succ":
        _arity(node, h, 1)
        return Succ(term_from_sexpr(args[0]))
    raise _error(f"unknown term constructor {h!r}", head)


def _location(node) -> tuple:
    if node.kind != "loc":
        raise _error("expected a location such as [0 1]", node)
    out = []
    for item in node.value:
        if item.kind != "atom" or not item.value.isdigit():
            raise _error("location entries are non-negative integers", item)
        out.append(int(item.value))
    return tuple(out)


def path_from_sexpr(node: _Node) -> Path:
    if node.kind == "atom":
        if node.value == "loop":
            return Loop()
        raise _error(f"unknown path {node.value!r}", node)
    if node.kind == "loc" or not node.value:
        raise _error("expected a path", node)
    head = node.value[0]
    if head.kind != "atom":
        raise _error("expected a path constructor", head)
    h, args = head.value, node.value[1:]
    if h == "rho":
        _arity(node, h, 1)
        return Rho(term_from_sexpr(args[0]))
    if h in ("beta", "eta"):
        _arity(node, h, 2)
        cls = BetaStep if h == "beta" else EtaStep
        return cls(term_from_sexpr(args[0]), _location(args[1]))
    if h == "sigma":
        _arity(node, h, 1)
        return Sigma(path_from_sexpr(args[0]))
    if h in ("tau", "subl", "subr"):
        _arity(node, h, 2)
        cls = {"tau": Tau, "subl": SubL, "subr": SubR}[h]
        return cls(path_from_sexpr(args[0]), path_from_sexpr(args[1]))
    if h in ("mu", "nu"):
        _arity(node, h, 2)
        cls = Mu if h == "mu" else Nu
        return cls(path_from_sexpr(args[0]), term_from_sexpr(args[1]))
    if h == "xi":
        _arity(node, h, 2)
        return Xi(_ident(args[0]), path_from_sexpr(args[1]))
    if h in OPAQUE_TYPES:
        cls = OPAQUE_TYPES[h]
        n = len(cls.fields)
        ends = None
        if len(args) == n + 1:
            last = args[-1]
            if (last.kind != "list" or len(last.value) != 3 or last.value[0].kind != "atom"
                    or last.value[0].value != "ends"):
                raise _error("expected (ends <term> <term>)", last)
            ends = (term_from_sexpr(last.value[1]), term_from_sexpr(last.value[2]))
            args = args[:-1]
        if len(args) != n:
            raise _error(f"'{h}' takes {n} path argument(s)", node)
        return cls(*(path_from_sexpr(a) for a in args), ends=ends)
    raise _error(f"unknown path constructor {h!r}", head)


def parse_term(text: str) -> Term:
    return term_from_sexpr(_read_one(text, "term"))


def parse_path(text: str, check: bool = True) -> Path:
    """Parse a path; with ``check`` an incoherent tau junction raises CoherenceError."""
    p = path_from_sexpr(_read_one(text, "path"))
    if check:
        check_well_formed(p)
    return p


def print_term(t: Term) -> str:
    n = numeral_value(t)
    if n is not None:
        return str(n)
    if isinstance(t, Var):
        return f"(var {t.name})"
    if isinstance(t, Lam):
        return f"(lam {t.binder} {print_term(t.body)})"
    if isinstance(t, App):
        return f"(app {print_term(t.fn)} {print_term(t.arg)})"
    if isinstance(t, Succ):
        return f"(succ {print_term(t.pred)})"
    if isinstance(t, Star):
        return "star"
    if isinstance(t, Base):
        return "base"
    raise TypeError(f"not a term: {t!r}")


def print_location(loc) -> str:
    return "[" + " ".join(map(str, loc)) + "]"


def print_path(p: Path) -> str:
    if isinstance(p, Loop):
        return "loop"
    if isinstance(p, Rho):
        return f"(rho {print_term(p.term)})"
    if isinstance(p, BetaStep):
        return f"(beta {print_term(p.term)} {print_location(p.loc)})"
    if isinstance(p, EtaStep):
        return f"(eta {print_term(p.term)} {print_location(p.loc)})"
    if isinstance(p, Sigma):
        return f"(sigma {print_path(p.p)})"
    if isinstance(p, Tau):
        return f"(tau {print_path(p.p)} {print_path(p.q)})"
    if isinstance(p, SubL):
        return f"(subl {print_path(p.r)} {print_path(p.s)})"
    if isinstance(p, SubR):
        return f"(subr {print_path(p.r)} {print_path(p.s)})"
    if isinstance(p, Mu):
        return f"(mu {print_path(p.p)} {print_term(p.applied)})"
    if isinstance(p, Nu):
        return f"(nu {print_path(p.p)} {print_term(p.arg)})"
    if isinstance(p, Xi):
        return f"(xi {p.binder} {print_path(p.p)})"
    if isinstance(p, Opaque):
        parts = [p.tag] + [print_path(c) for c in p.children]
        if p.declares_ends:
            parts.append(f"(ends {print_term(p.source)} {print_term(p.target)})")
        return "(" + " ".join(parts) + ")"
    raise TypeError(f"not a path: {p!r}")


__all__ = ["parse_term", "parse_path", "print_term", "print_path", "print_location",
           "read_sexprs", "CoherenceError"]
