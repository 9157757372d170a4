"""Seeded random generators for terms and well-formed paths.

Every generator takes a ``random.Random`` so runs are reproducible.
"""
from __future__ import annotations

import random

from .paths import (BetaStep, EtaStep, Loop, Mu, Mu1, Mu2, Mu2arg, Mu3arg, Nu, Path,
                    Rho, Sigma, SubL, SubR, Tau, Xi, Xi1, Xi2, XiPair, size)
from .terms import (SUCC, App, Base, Lam, Succ, Term, Var, find_redexes, numeral,
                    subterms)

NAMES = ("x", "y", "z", "w")


def random_term(rng: random.Random, depth: int = 3, bound=(), redexes: bool = True) -> Term:
    """A small term over a few variable names; plants beta and eta redexes now and then."""
    if depth <= 0 or rng.random() < 0.25:
        r = rng.random()
        if r < 0.7:
            pool = list(bound) + ["x", "y", "z"]
            return Var(rng.choice(pool))
        if r < 0.85:
            return numeral(rng.randint(0, 2))
        return Base()
    r = rng.random()
    if redexes and r < 0.15:
        x = rng.choice(NAMES)
        return App(Lam(x, random_term(rng, depth - 1, bound + (x,))),
                   random_term(rng, depth - 1, bound))
    if redexes and r < 0.25:
        x = rng.choice(NAMES)
        fn = random_term(rng, depth - 1, bound)
        if x in fn.fv:
            return fn
        return Lam(x, App(fn, Var(x)))
    if r < 0.55:
        x = rng.choice(NAMES)
        return Lam(x, random_term(rng, depth - 1, bound + (x,)))
    if r < 0.65:
        return Succ(random_term(rng, depth - 1, bound))
    return App(random_term(rng, depth - 1, bound), random_term(rng, depth - 1, bound))


class PathGen:
    """Random well-formed paths of bounded size.

    ``from_(t)`` builds a path starting at ``t`` and ``to(t)`` one ending at
    ``t``; mixing them keeps every ``Tau`` junction coherent by construction.
    """

    def __init__(self, rng: random.Random, substitution: bool = True, opaque: bool = True):
        self.rng = rng
        self.substitution = substitution
        self.opaque = opaque

    # atoms available at t
    def _atoms_from(self, t: Term) -> list:
        out = [Rho(t)]
        for loc, kind in find_redexes(t)[:4]:
            out.append(BetaStep(t, loc) if kind == "beta" else EtaStep(t, loc))
        if t == Base():
            out.append(Loop())
        return out

    def _congruence(self, t: Term, budget: int, forward: bool):
        gen = self.from_ if forward else self.to
        if isinstance(t, App):
            if self.rng.random() < 0.5:
                return Mu(gen(t.arg, budget), t.fn)
            return Nu(gen(t.fn, budget), t.arg)
        if isinstance(t, Succ):
            return Mu(gen(t.pred, budget), SUCC)
        if isinstance(t, Lam):
            return Xi(t.binder, gen(t.body, budget))
        return None

    def _opaque(self, p: Path, budget: int):
        rng = self.rng
        k = rng.randrange(8)
        if k == 0:
            return Mu1(p)
        if k == 1:
            return Mu2(p)
        if k == 2:
            return Xi1(p)
        if k == 3:
            return Xi2(p)
        if k == 4:
            return XiPair(p, self.from_(p.source, budget // 2))
        if k == 5:
            return Mu2arg(p, self.from_(p.target, budget // 2))
        if k == 6:
            return Mu3arg(p, self.from_(p.source, budget // 3), self.from_(p.target, budget // 3))
        inner = rng.choice((Xi1, Xi2))(p)
        return rng.choice((Mu1, Mu2))(inner)

    def from_(self, t: Term, budget: int = 30) -> Path:
        rng = self.rng
        if budget <= 1:
            return rng.choice(self._atoms_from(t))
        r = rng.random()
        if r < 0.2:
            return rng.choice(self._atoms_from(t))
        if r < 0.32:
            return Sigma(self.to(t, budget - 1))
        if r < 0.52:
            p = self.from_(t, budget // 2)
            return Tau(p, self.from_(p.target, budget - 1 - size(p)))
        if r < 0.6:
            p = self.from_(t, (budget - 1) // 2)
            return Tau(p, Sigma(p)) if rng.random() < 0.5 else Tau(Rho(t), p)
        if r < 0.75:
            c = self._congruence(t, budget - 1, True)
            if c is not None:
                return c
            return self.from_(t, budget - 1)
        if r < 0.83:
            # two congruence steps in a row, so tau-congruence rules get a chance
            c = self._congruence(t, (budget - 1) // 2, True)
            if c is None:
                return rng.choice(self._atoms_from(t))
            d = self._congruence(c.target, (budget - 1 - size(c)), True)
            return c if d is None else Tau(c, d)
        if r < 0.91 and self.substitution:
            r_ = self.from_(t, budget // 2)
            subs = [s for _, s in subterms(r_.target)][:12]
            y = rng.choice(subs)
            return SubL(r_, self.from_(y, budget - 1 - size(r_)))
        if self.opaque:
            return self._opaque(self.from_(t, budget // 2), budget // 2)
        return rng.choice(self._atoms_from(t))

    def to(self, t: Term, budget: int = 30) -> Path:
        rng = self.rng
        if budget <= 1:
            return Rho(t) if rng.random() < 0.5 or t != Base() else Loop()
        r = rng.random()
        if r < 0.25:
            return Sigma(self.from_(t, budget - 1))
        if r < 0.45:
            q = self.to(t, budget // 2)
            return Tau(self.to(q.source, budget - 1 - size(q)), q)
        if r < 0.65:
            c = self._congruence(t, budget - 1, False)
            if c is not None:
                return c
            return Sigma(self.from_(t, budget - 1))
        if r < 0.8 and self.substitution:
            s = self.to(t, budget // 2)
            subs = [u for _, u in subterms(s.source)][:12]
            w = rng.choice(subs)
            return SubR(self.to(w, budget - 1 - size(s)), s)
        return Sigma(self.from_(t, budget - 1))


def random_path(rng: random.Random, max_size: int = 30, **kw) -> Path:
    """A well-formed path with at most ``max_size`` nodes."""
    gen = PathGen(rng, **kw)
    while True:
        t = random_term(rng, rng.randint(1, 3))
        p = gen.from_(t, rng.randint(2, max_size))
        if p.wf and size(p) <= max_size:
            return p


# -- paths generated from reflexivity ---------------------------------------

def _rho_term(rng: random.Random, depth: int, max_numeral: int) -> Term:
    if depth <= 0 or rng.random() < 0.6:
        return numeral(rng.randint(0, max_numeral))
    r = rng.random()
    if r < 0.4:
        return Lam("x", _rho_term(rng, depth - 1, max_numeral))
    if r < 0.7:
        return App(Var(rng.choice(("f", "x"))), _rho_term(rng, depth - 1, max_numeral))
    return App(_rho_term(rng, depth - 1, max_numeral), numeral(rng.randint(0, max_numeral)))


def rho_generated(rng: random.Random, t: Term, depth: int = 10) -> Path:
    """A path from ``t`` to ``t`` built from ``rho`` with sigma, tau, mu, nu and xi."""
    if depth <= 0:
        return Rho(t)
    r = rng.random()
    if r < 0.2:
        return Rho(t)
    if r < 0.4:
        return Sigma(rho_generated(rng, t, depth - 1))
    if r < 0.65:
        return Tau(rho_generated(rng, t, depth - 1), rho_generated(rng, t, depth - 1))
    if isinstance(t, Succ):
        return Mu(rho_generated(rng, t.pred, depth - 1), SUCC)
    if isinstance(t, App):
        if rng.random() < 0.5:
            return Mu(rho_generated(rng, t.arg, depth - 1), t.fn)
        return Nu(rho_generated(rng, t.fn, depth - 1), t.arg)
    if isinstance(t, Lam):
        return Xi(t.binder, rho_generated(rng, t.body, depth - 1))
    return Sigma(rho_generated(rng, t, depth - 1))


def random_rho_generated(rng: random.Random, depth: int = 10, max_numeral: int = 20) -> Path:
    return rho_generated(rng, _rho_term(rng, 3, max_numeral), depth)


def nat_path(rng: random.Random, n: int, depth: int = 8) -> Path:
    """A generated path from the numeral ``n`` to itself."""
    return rho_generated(rng, numeral(n), depth)


# -- loop words ---------------------------------------------------------------

def random_loop_word(rng: random.Random, max_len: int = 200) -> tuple[Path, int]:
    """A random loop expression with at most ``max_len`` letters and its signed letter count."""
    n = rng.randint(0, max_len)
    word = [rng.choice((1, -1)) for _ in range(n)]
    return word_to_path(rng, word), sum(word)


def word_to_path(rng: random.Random, word: list) -> Path:
    """Randomly bracket ``word`` (+1 loop, -1 sigma loop) into a loop expression."""
    if not word:
        return Rho(Base())
    if rng.random() < 0.15:
        return Sigma(word_to_path(rng, [-x for x in reversed(word)]))
    if len(word) == 1:
        leaf = Loop() if word[0] > 0 else Sigma(Loop())
        if rng.random() < 0.1:
            leaf = Tau(leaf, Rho(Base())) if rng.random() < 0.5 else Tau(Rho(Base()), leaf)
        return leaf
    k = rng.randint(1, len(word) - 1)
    return Tau(word_to_path(rng, word[:k]), word_to_path(rng, word[k:]))
