"""Computational paths: proof objects for equalities between terms.

A path knows its two endpoints. They are computed from the children when the
node is built, together with an alpha-invariant key (``==`` compares keys)
and a well-formedness flag, so none of these queries recurse later on.
Building an ill-formed path is allowed; ``well_formed`` reports it.

Position convention inside a path: the path-valued children of a node in
field order (``Tau(p, q)``: p is 0, q is 1; ``Mu(p, f)``: p is 0).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional

from .errors import CoherenceError, RedexError
from .terms import (App, Base, Lam, Term, _tkey, apply_fn, contract_at,
                    format_location, redex_kind, replace_subterm, subterm_at)


def _pkey(p: "Path", env: tuple) -> tuple:
    if not env or not (p.fn & set(env)):
        return p.key
    if isinstance(p, Xi):
        return ("xi", _pkey(p.p, (p.binder,) + env))
    if isinstance(p, (Rho, BetaStep, EtaStep)):
        k = p.key
        return (k[0], _tkey(p.term, env)) + k[2:]
    if isinstance(p, Mu):
        return ("mu", _pkey(p.p, env), _tkey(p.applied, env))
    if isinstance(p, Nu):
        return ("nu", _pkey(p.p, env), _tkey(p.arg, env))
    if isinstance(p, Opaque):
        return ((p.key[0],) + tuple(_pkey(c, env) for c in p.children)
                + (_tkey(p.source, env), _tkey(p.target, env)))
    return (p.key[0],) + tuple(_pkey(c, env) for c in p.children)


class Path:
    key: tuple
    source: Term
    target: Term
    wf: bool
    fn: frozenset
    _normal = False  # set by the rewrite engine once no rule applies below

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Path):
            return NotImplemented
        return self.key == other.key

    def __hash__(self):
        return hash(self.key)

    @property
    def children(self) -> tuple:
        return ()

    def with_children(self, children) -> "Path":
        return self

    def __str__(self):
        from .syntax import print_path

        return print_path(self)


def _init(obj, key, source, target, wf, fn):
    object.__setattr__(obj, "key", key)
    object.__setattr__(obj, "source", source)
    object.__setattr__(obj, "target", target)
    object.__setattr__(obj, "wf", wf)
    object.__setattr__(obj, "fn", fn)


@dataclass(frozen=True, eq=False)
class Rho(Path):
    term: Term

    def __post_init__(self):
        _init(self, ("rho", self.term.key), self.term, self.term, True, self.term.fv)


class _Step(Path):
    kind = ""

    def __post_init__(self):
        loc = tuple(self.loc)
        object.__setattr__(self, "loc", loc)
        node = subterm_at(self.term, loc)
        if redex_kind(node) != self.kind:
            raise RedexError(f"no {self.kind}-redex at location {format_location(loc)}", loc)
        _init(self, (self.kind, self.term.key, loc), self.term,
              contract_at(self.term, loc), True, self.term.fv)


@dataclass(frozen=True, eq=False)
class BetaStep(_Step):
    """One beta-contraction of the redex at ``loc`` inside ``term``."""

    term: Term
    loc: tuple = ()
    kind = "beta"


@dataclass(frozen=True, eq=False)
class EtaStep(_Step):
    term: Term
    loc: tuple = ()
    kind = "eta"


@dataclass(frozen=True, eq=False)
class Sigma(Path):
    p: Path

    def __post_init__(self):
        p = self.p
        _init(self, ("sigma", p.key), p.target, p.source, p.wf, p.fn)

    @property
    def children(self):
        return (self.p,)

    def with_children(self, children):
        return Sigma(children[0])


@dataclass(frozen=True, eq=False)
class Tau(Path):
    p: Path
    q: Path

    def __post_init__(self):
        p, q = self.p, self.q
        wf = p.wf and q.wf and p.target == q.source
        _init(self, ("tau", p.key, q.key), p.source, q.target, wf, p.fn | q.fn)

    @property
    def children(self):
        return (self.p, self.q)

    def with_children(self, children):
        return Tau(children[0], children[1])


@dataclass(frozen=True, eq=False)
class Mu(Path):
    """Congruence on the argument side: from ``M = M'`` to ``f M = f M'``."""

    p: Path
    applied: Term

    def __post_init__(self):
        p, f = self.p, self.applied
        _init(self, ("mu", p.key, f.key), apply_fn(f, p.source), apply_fn(f, p.target),
              p.wf, p.fn | f.fv)

    @property
    def children(self):
        return (self.p,)

    def with_children(self, children):
        return Mu(children[0], self.applied)


@dataclass(frozen=True, eq=False)
class Nu(Path):
    """Congruence on the function side: from ``M = M'`` to ``M N = M' N``."""

    p: Path
    arg: Term

    def __post_init__(self):
        p, a = self.p, self.arg
        _init(self, ("nu", p.key, a.key), App(p.source, a), App(p.target, a),
              p.wf, p.fn | a.fv)

    @property
    def children(self):
        return (self.p,)

    def with_children(self, children):
        return Nu(children[0], self.arg)


@dataclass(frozen=True, eq=False)
class Xi(Path):
    binder: str
    p: Path

    def __post_init__(self):
        p, x = self.p, self.binder
        _init(self, ("xi", _pkey(p, (x,))), Lam(x, p.source), Lam(x, p.target),
              p.wf, p.fn - {x})

    @property
    def children(self):
        return (self.p,)

    def with_children(self, children):
        return Xi(self.binder, children[0])


@dataclass(frozen=True, eq=False)
class SubL(Path):
    """From ``x = C[y]`` (r) and ``y = u`` (s) conclude ``x = C[u]``."""

    r: Path
    s: Path

    def __post_init__(self):
        r, s = self.r, self.s
        tgt = replace_subterm(r.target, s.source, s.target)
        _init(self, ("subl", r.key, s.key), r.source, tgt, r.wf and s.wf, r.fn | s.fn)

    @property
    def children(self):
        return (self.r, self.s)

    def with_children(self, children):
        return SubL(children[0], children[1])


@dataclass(frozen=True, eq=False)
class SubR(Path):
    """From ``x = w`` (r) and ``C[w] = u`` (s) conclude ``C[x] = u``."""

    r: Path
    s: Path

    def __post_init__(self):
        r, s = self.r, self.s
        src = replace_subterm(s.source, r.target, r.source)
        _init(self, ("subr", r.key, s.key), src, s.target, r.wf and s.wf, r.fn | s.fn)

    @property
    def children(self):
        return (self.r, self.s)

    def with_children(self, children):
        return SubR(children[0], children[1])


@dataclass(frozen=True, eq=False)
class Loop(Path):
    """The generating path ``base = base`` of the circle."""

    def __post_init__(self):
        b = Base()
        _init(self, ("loop",), b, b, True, frozenset())


class Opaque(Path):
    """Constructor variants only ever matched syntactically by the rewrite rules.

    Endpoints are declared with ``ends=(source, target)``; by default they are
    those of the first argument.
    """

    tag = ""
    fields = ()

    def __post_init__(self):
        kids = self.children
        ends = self.ends
        if ends is None:
            src, tgt = kids[0].source, kids[0].target
        else:
            src, tgt = ends
            object.__setattr__(self, "ends", (src, tgt))
        fn = frozenset().union(*(k.fn for k in kids)) | src.fv | tgt.fv
        key = (self.tag,) + tuple(k.key for k in kids) + (src.key, tgt.key)
        _init(self, key, src, tgt, all(k.wf for k in kids), fn)

    @property
    def children(self):
        return tuple(getattr(self, f) for f in self.fields)

    def with_children(self, children, ends=None):
        return type(self)(*children, ends=ends if ends is not None else self.ends)

    @property
    def declares_ends(self) -> bool:
        first = self.children[0]
        return not (self.source == first.source and self.target == first.target)


def _opaque(name, tag, fields_):
    ns = {"__annotations__": {f: Path for f in fields_}, "tag": tag, "fields": fields_}
    ns["__annotations__"]["ends"] = Optional[tuple]
    ns["ends"] = field(default=None, kw_only=True)
    cls = type(name, (Opaque,), ns)
    return dataclass(frozen=True, eq=False)(cls)


Mu1 = _opaque("Mu1", "mu1", ("p",))
Mu2 = _opaque("Mu2", "mu2", ("p",))
Mu2arg = _opaque("Mu2arg", "mu2arg", ("p", "q"))
Mu3arg = _opaque("Mu3arg", "mu3arg", ("p", "q", "r"))
Xi1 = _opaque("Xi1", "xi1", ("p",))
Xi2 = _opaque("Xi2", "xi2", ("p",))
XiPair = _opaque("XiPair", "xipair", ("p", "q"))

OPAQUE_TYPES = {c.tag: c for c in (Mu1, Mu2, Mu2arg, Mu3arg, Xi1, Xi2, XiPair)}


# -- accessors and constructors ------------------------------------------

def source(p: Path) -> Term:
    return p.source


def target(p: Path) -> Term:
    return p.target


def well_formed(p: Path) -> bool:
    return p.wf


def compose(r: Path, s: Path) -> Path:
    """``r ∘ s``: run ``s`` first, then ``r``; the result is ``Tau(s, r)``."""
    if s.target != r.source:
        raise CoherenceError(
            f"cannot compose: {s.target} (end of the first path) differs from "
            f"{r.source} (start of the second)", s.target, r.source)
    return Tau(s, r)


def inverse(p: Path) -> Path:
    return Sigma(p)


def subpaths(p: Path) -> Iterator[tuple[tuple, Path]]:
    """Pre-order walk yielding ``(position, node)``."""
    stack = [((), p)]
    while stack:
        pos, node = stack.pop()
        yield pos, node
        kids = node.children
        for i in range(len(kids) - 1, -1, -1):
            stack.append((pos + (i,), kids[i]))


def size(p: Path) -> int:
    return sum(1 for _ in subpaths(p))


def subpath_at(p: Path, pos) -> Path:
    for i in pos:
        p = p.children[i]
    return p


def replace_subpath(p: Path, pos, new: Path) -> Path:
    spine = [p]
    for i in pos:
        spine.append(spine[-1].children[i])
    out = new
    for node, i in zip(reversed(spine[:-1]), reversed(tuple(pos))):
        kids = list(node.children)
        kids[i] = out
        out = node.with_children(kids)
    return out


def find_incoherence(p: Path):
    """First ill-formed ``Tau`` junction in pre-order, as ``(position, left, right)``."""
    if p.wf:
        return None
    for pos, node in subpaths(p):
        if isinstance(node, Tau) and node.p.wf and node.q.wf and node.p.target != node.q.source:
            return pos, node.p.target, node.q.source
    return None


def check_well_formed(p: Path) -> None:
    bad = find_incoherence(p)
    if bad is not None:
        pos, left, right = bad
        raise CoherenceError(
            f"tau junction at position {format_location(pos)}: {left} does not "
            f"match {right}", left, right, pos)
