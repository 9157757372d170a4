"""Lambda terms extended with natural numbers, unit and the circle base point.

Terms keep their binder names for printing, but equality and hashing go
through a canonical nameless key, so ``==`` on terms *is* alpha-equivalence::

    >>> Lam("x", Var("x")) == Lam("y", Var("y"))
    True

Every node computes its key and free variables once, at construction.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import RedexError

Location = tuple  # child indices from the root: Lam body 0, App fn 0 / arg 1, Succ 0


def _tkey(t: "Term", env: tuple) -> tuple:
    """Nameless key of ``t`` where ``env`` lists enclosing binders, innermost first."""
    if not env or not (t.fv & set(env)):
        return t.key
    if isinstance(t, Var):
        return ("b", env.index(t.name)) if t.name in env else t.key
    if isinstance(t, Lam):
        return ("lam", _tkey(t.body, (t.binder,) + env))
    if isinstance(t, App):
        return ("app", _tkey(t.fn, env), _tkey(t.arg, env))
    if isinstance(t, Succ):
        return ("S", _tkey(t.pred, env))
    return t.key


class Term:
    key: tuple
    fv: frozenset

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Term):
            return NotImplemented
        return self.key == other.key

    def __hash__(self):
        return hash(self.key)

    @property
    def children(self) -> tuple:
        return ()

    def with_children(self, children) -> "Term":
        return self

    def __str__(self):
        from .syntax import print_term

        return print_term(self)


def _init(obj, key, fv):
    object.__setattr__(obj, "key", key)
    object.__setattr__(obj, "fv", fv)


@dataclass(frozen=True, eq=False, repr=True)
class Var(Term):
    name: str

    def __post_init__(self):
        _init(self, ("v", self.name), frozenset((self.name,)))


@dataclass(frozen=True, eq=False)
class Lam(Term):
    binder: str
    body: Term

    def __post_init__(self):
        _init(self, ("lam", _tkey(self.body, (self.binder,))),
              self.body.fv - {self.binder})

    @property
    def children(self):
        return (self.body,)

    def with_children(self, children):
        return Lam(self.binder, children[0])


@dataclass(frozen=True, eq=False)
class App(Term):
    fn: Term
    arg: Term

    def __post_init__(self):
        _init(self, ("app", self.fn.key, self.arg.key), self.fn.fv | self.arg.fv)

    @property
    def children(self):
        return (self.fn, self.arg)

    def with_children(self, children):
        return App(children[0], children[1])


@dataclass(frozen=True, eq=False)
class Zero(Term):
    def __post_init__(self):
        _init(self, ("0",), frozenset())


@dataclass(frozen=True, eq=False)
class Succ(Term):
    pred: Term

    def __post_init__(self):
        _init(self, ("S", self.pred.key), self.pred.fv)

    @property
    def children(self):
        return (self.pred,)

    def with_children(self, children):
        return Succ(children[0])


@dataclass(frozen=True, eq=False)
class Star(Term):
    def __post_init__(self):
        _init(self, ("*",), frozenset())


@dataclass(frozen=True, eq=False)
class Base(Term):
    def __post_init__(self):
        _init(self, ("base",), frozenset())


# The successor as a function term; congruence along it builds Succ nodes.
SUCC = Lam("n", Succ(Var("n")))


def numeral(n: int) -> Term:
    if n < 0:
        raise ValueError(f"numerals are non-negative, got {n}")
    t = Zero()
    for _ in range(n):
        t = Succ(t)
    return t


def numeral_value(t: Term) -> int | None:
    """Return ``n`` if ``t`` is ``succ^n(zero)``, else None."""
    n = 0
    while isinstance(t, Succ):
        t = t.pred
        n += 1
    return n if isinstance(t, Zero) else None


def apply_fn(f: Term, t: Term) -> Term:
    """The congruence image ``f(t)``; the successor function yields ``Succ(t)``."""
    if f == SUCC:
        return Succ(t)
    return App(f, t)


def alpha_eq(a: Term, b: Term) -> bool:
    return a == b


def is_closed(t: Term) -> bool:
    return not t.fv


def fresh_name(base: str, avoid) -> str:
    name = base
    while name in avoid:
        name += "'"
    return name


def substitute(body: Term, var: str, value: Term) -> Term:
    """Capture-avoiding ``body[var := value]``.

    Binders that would capture a free variable of ``value`` get primed.
    """
    if var not in body.fv:
        return body
    if isinstance(body, Var):
        return value
    if isinstance(body, Lam):
        x, b = body.binder, body.body
        if x in value.fv:
            x2 = fresh_name(x, value.fv | b.fv | {var})
            b = substitute(b, x, Var(x2))
            x = x2
        return Lam(x, substitute(b, var, value))
    return body.with_children([substitute(c, var, value) for c in body.children])


def replace_subterm(t: Term, old: Term, new: Term) -> Term:
    """Replace every occurrence of ``old`` (up to alpha) in ``t`` by ``new``.

    Occurrences under a binder that is free in ``old`` refer to a different
    variable and are left alone; binders free in ``new`` are renamed first.
    """
    if t == old:
        return new
    if isinstance(t, Lam):
        if t.binder in old.fv:
            return t
        x, b = t.binder, t.body
        if x in new.fv:
            x2 = fresh_name(x, new.fv | old.fv | b.fv)
            b = substitute(b, x, Var(x2))
            x = x2
        nb = replace_subterm(b, old, new)
        return t if nb is b and x == t.binder else Lam(x, nb)
    kids = t.children
    if not kids:
        return t
    new_kids = [replace_subterm(c, old, new) for c in kids]
    if all(a is b for a, b in zip(kids, new_kids)):
        return t
    return t.with_children(new_kids)


def is_beta_redex(t: Term) -> bool:
    return isinstance(t, App) and isinstance(t.fn, Lam)


def is_eta_redex(t: Term) -> bool:
    return (isinstance(t, Lam) and isinstance(t.body, App)
            and t.body.arg == Var(t.binder) and isinstance(t.body.arg, Var)
            and t.binder not in t.body.fn.fv)


def redex_kind(t: Term) -> str | None:
    if is_beta_redex(t):
        return "beta"
    if is_eta_redex(t):
        return "eta"
    return None


def subterms(t: Term) -> Iterator[tuple[Location, Term]]:
    """Pre-order walk yielding ``(location, subterm)``, left to right."""
    stack = [((), t)]
    while stack:
        loc, node = stack.pop()
        yield loc, node
        kids = node.children
        for i in range(len(kids) - 1, -1, -1):
            stack.append((loc + (i,), kids[i]))


def find_redexes(t: Term) -> list[tuple[Location, str]]:
    """All beta and eta redexes, outermost first, left to right."""
    out = []
    for loc, node in subterms(t):
        kind = redex_kind(node)
        if kind is not None:
            out.append((loc, kind))
    return out


def subterm_at(t: Term, loc: Location) -> Term:
    node = t
    for depth, i in enumerate(loc):
        kids = node.children
        if not 0 <= i < len(kids):
            raise RedexError(f"no subterm at location {format_location(loc)} "
                             f"(index {i} at depth {depth})", loc)
        node = kids[i]
    return node


def replace_at(t: Term, loc: Location, new: Term) -> Term:
    if not loc:
        return new
    kids = list(t.children)
    i = loc[0]
    if not 0 <= i < len(kids):
        raise RedexError(f"no subterm at location {format_location(loc)}", loc)
    kids[i] = replace_at(kids[i], loc[1:], new)
    return t.with_children(kids)


def contract_redex(t: Term) -> Term:
    if is_beta_redex(t):
        return substitute(t.fn.body, t.fn.binder, t.arg)
    if is_eta_redex(t):
        return t.body.fn
    raise RedexError("term is not a redex")


def contract_at(t: Term, loc: Location) -> Term:
    loc = tuple(loc)
    node = subterm_at(t, loc)
    if redex_kind(node) is None:
        raise RedexError(f"no redex at location {format_location(loc)}", loc)
    return replace_at(t, loc, contract_redex(node))


def format_location(loc: Location) -> str:
    return "[" + " ".join(str(i) for i in loc) + "]"


def pretty(t: Term) -> str:
    """Render in the usual notation, e.g. ``(λx.(λy.y x) (λw.z w)) v``."""
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Lam):
        return f"λ{t.binder}.{pretty(t.body)}"
    if isinstance(t, App):
        f = pretty(t.fn)
        if isinstance(t.fn, Lam):
            f = f"({f})"
        a = pretty(t.arg)
        if isinstance(t.arg, (Lam, App)):
            a = f"({a})"
        return f"{f} {a}"
    n = numeral_value(t)
    if n is not None:
        return str(n)
    if isinstance(t, Succ):
        return f"succ({pretty(t.pred)})"
    if isinstance(t, Star):
        return "*"
    return "base"


def next_redex(t: Term) -> tuple[Location, str] | None:
    """The redex to contract next: the first eta-redex if any, else the first beta-redex."""
    first_beta = None
    for loc, kind in find_redexes(t):
        if kind == "eta":
            return loc, kind
        if first_beta is None:
            first_beta = (loc, kind)
    return first_beta


def normalize_term(t: Term, fuel: int = 1000) -> Term:
    """Beta-eta normal form, contracting ``next_redex`` at most ``fuel`` times."""
    from .errors import FuelExhausted

    for _ in range(fuel):
        nxt = next_redex(t)
        if nxt is None:
            return t
        t = contract_at(t, nxt[0])
    if next_redex(t) is None:
        return t
    raise FuelExhausted(f"no beta-eta normal form within {fuel} steps")
