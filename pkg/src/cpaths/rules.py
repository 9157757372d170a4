"""The 42 rewrite rules over paths.

Each rule is a matcher: given a node it returns the rewritten node or None.
Rules written with a context ``C[...]`` find the context by walking both
arguments top-down in lockstep through ``sigma``/``mu``/``nu``/``xi`` frames
that agree, trying the hole (empty context) first at every level.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Optional

from .paths import (BetaStep, EtaStep, Mu, Mu1, Mu2, Mu2arg, Mu3arg, Nu, Path, Rho, Sigma, SubL,
                    SubR, Tau, Xi, Xi1, Xi2, XiPair)
from .terms import App, Lam, Var, apply_fn


class RuleId(enum.IntEnum):
    sr = 1
    ss = 2
    tr = 3
    tsr = 4
    trr = 5
    tlr = 6
    slr = 7
    srr = 8
    sls = 9
    slss = 10
    srs = 11
    srrr = 12
    mx2l1 = 13
    mx2l2 = 14
    mx2r1 = 15
    mx2r2 = 16
    mx3l = 17
    mx3r = 18
    mxl = 19
    mxr = 20
    mx = 21
    mxx = 22
    xmr = 23
    mx1r = 24
    stss = 25
    ssbl = 26
    ssbr = 27
    sx = 28
    sxss = 29
    sm = 30
    smss = 31
    smsss = 32
    tsbll = 33
    tsbrl = 34
    tsblr = 35
    tsbrr = 36
    tt = 37
    tts = 38
    tst = 39
    mxp = 40
    nxp = 41
    xxp = 42


@dataclass(frozen=True)
class Rule:
    id: RuleId
    head: type
    lhs: str
    rhs: str
    match: Callable[[Path, bool], Optional[Path]]
    # Guarded rules only fire on instances whose result keeps the endpoints
    # and is well formed; for the others that always holds, so a failure is a bug.
    guarded: bool = False

    @property
    def number(self) -> int:
        return int(self.id)

    @property
    def label(self) -> str:
        return self.id.name


_CONTEXT = (Sigma, Mu, Nu, Xi)


def _same_frame(a, b) -> bool:
    if isinstance(a, Sigma):
        return True
    if isinstance(a, Mu):
        return a.applied == b.applied
    if isinstance(a, Nu):
        return a.arg == b.arg
    return a.binder == b.binder


def common_context(a: Path, b: Path, hole):
    """Return ``(frames, binding)`` for the outermost place where ``hole`` matches."""
    frames = []
    while True:
        found = hole(a, b)
        if found is not None:
            return frames, found
        if type(a) is not type(b) or not isinstance(a, _CONTEXT) or not _same_frame(a, b):
            return None
        frames.append(a)
        a, b = a.p, b.p


def plug(frames, x: Path) -> Path:
    for f in reversed(frames):
        x = f.with_children([x])
    return x


def _flipped(frames) -> bool:
    return sum(isinstance(f, Sigma) for f in frames) % 2 == 1


# -- hole predicates: each returns the path standing for r (or u), or None ---

def _hole_r_sr(a, b):  # a = r, b = sigma(r)
    return a if isinstance(b, Sigma) and b.p == a else None


def _hole_sr_r(a, b):  # a = sigma(r), b = r
    return b if isinstance(a, Sigma) and a.p == b else None


def _hole_r_rho(a, b):
    return a if isinstance(b, Rho) else None


def _hole_rho_r(a, b):
    return b if isinstance(a, Rho) else None


# -- matchers ------------------------------------------------------------

def _sr(p, lit):
    return Rho(p.p.term) if isinstance(p.p, Rho) else None


def _ss(p, lit):
    return p.p.p if isinstance(p.p, Sigma) else None


def _tr(p, lit):
    m = common_context(p.p, p.q, _hole_r_sr)
    if m is None:
        return None
    frames, r = m
    return plug(frames, Rho(r.target if _flipped(frames) else r.source))


def _tsr(p, lit):
    m = common_context(p.p, p.q, _hole_sr_r)
    if m is None:
        return None
    frames, r = m
    return plug(frames, Rho(r.source if _flipped(frames) else r.target))


def _ctx_keep(hole):
    def match(p, lit):
        a, b = p.children
        m = common_context(a, b, hole)
        return None if m is None else plug(m[0], m[1])
    return match


def _sls_family(hole):
    def match(p, lit):
        inner = p.r
        if not isinstance(inner, SubL):
            return None
        return inner.r if common_context(inner.s, p.s, hole) is not None else None
    return match


def _srs_family(hole):
    def match(p, lit):
        inner = p.s
        if not isinstance(inner, SubR):
            return None
        return inner.s if common_context(p.r, inner.r, hole) is not None else None
    return match


def _unwrap(inner_type, pick):
    def match(p, lit):
        c = p.children[0]
        return pick(p, c) if isinstance(c, inner_type) else None
    return match


def _mxl(p, lit):
    # nu(xi(x, r), N): the endpoints are (lam x. M) N and (lam x. M') N, one
    # beta step away from those of r, so r is framed by those two steps.
    xi = p.p
    if not isinstance(xi, Xi) or xi.binder in xi.p.fn:
        return None
    r = xi.p
    return Tau(BetaStep(p.source), Tau(r, Sigma(BetaStep(p.target))))


def _mx(p, lit):
    a, b = p.p, p.q
    if isinstance(a, Mu1) and isinstance(b, Mu2) and a.p == b.p:
        return a.p
    return None


def _mxx(p, lit):
    if isinstance(p.q, Xi1) and isinstance(p.r, Xi2):
        return p.p
    return None


def _xmr(p, lit):
    # xi(x, nu(r, x)): endpoints lam x. M x and lam x. M' x, eta-expansions of
    # those of r.
    nu = p.p
    if not isinstance(nu, Nu):
        return None
    x, r = p.binder, nu.p
    if not (isinstance(nu.arg, Var) and nu.arg.name == x) or x in r.fn:
        return None
    return Tau(EtaStep(p.source), Tau(r, Sigma(EtaStep(p.target))))


def _mx1r(p, lit):
    return p.p if isinstance(p.q, Xi2) else None


def _stss(p, lit):
    t = p.p
    return Tau(Sigma(t.q), Sigma(t.p)) if isinstance(t, Tau) else None


def _ssbl(p, lit):
    t = p.p
    return SubR(Sigma(t.s), Sigma(t.r)) if isinstance(t, SubL) else None


def _ssbr(p, lit):
    t = p.p
    return SubL(Sigma(t.s), Sigma(t.r)) if isinstance(t, SubR) else None


def _sx(p, lit):
    # unary xi covers the congruence and both projections xi1, xi2
    t = p.p
    if isinstance(t, Xi):
        return Xi(t.binder, Sigma(t.p))
    if isinstance(t, (Xi1, Xi2)):
        return type(t)(Sigma(t.p), ends=(t.target, t.source))
    return None


def _sigma_opaque(cls):
    def match(p, lit):
        t = p.p
        if not isinstance(t, cls):
            return None
        return cls(*(Sigma(c) for c in t.children), ends=(t.target, t.source))
    return match


def _sm(p, lit):
    t = p.p
    if isinstance(t, Mu):
        return Mu(Sigma(t.p), t.applied)
    if isinstance(t, (Mu1, Mu2)):
        return type(t)(Sigma(t.p), ends=(t.target, t.source))
    return None


def _tsbll(p, lit):
    s = p.q
    if isinstance(s, SubL) and isinstance(s.r, Rho):
        return SubL(p.p, s.s)
    return None


def _tsbrl(p, lit):
    s = p.q
    if isinstance(s, SubR) and isinstance(s.s, Rho):
        return SubL(p.p, s.r)
    return None


def _tsblr(p, lit):
    a = p.p
    return Tau(a.r, SubR(a.s, p.q)) if isinstance(a, SubL) else None


def _tsbrr(p, lit):
    a = p.p
    return SubR(a.r, Tau(a.s, p.q)) if isinstance(a, SubR) else None


def _tt(p, lit):
    a = p.p
    return Tau(a.p, Tau(a.q, p.q)) if isinstance(a, Tau) else None


def _tts(p, lit):
    b = p.q
    if not isinstance(b, Tau):
        return None
    return b.q if common_context(p.p, b.p, _hole_r_sr) is not None else None


def _tst(p, lit):
    b = p.q
    if not isinstance(b, Tau):
        return None
    m = common_context(p.p, b.p, _hole_sr_r)
    if m is None:
        return None
    return m[1] if lit else b.q


def _mxp(p, lit):
    return Rho(apply_fn(p.applied, p.p.term)) if isinstance(p.p, Rho) else None


def _nxp(p, lit):
    return Rho(App(p.p.term, p.arg)) if isinstance(p.p, Rho) else None


def _xxp(p, lit):
    return Rho(Lam(p.binder, p.p.term)) if isinstance(p.p, Rho) else None


R = RuleId
RULES: list[Rule] = [
    Rule(R.sr, Sigma, "σ(ρ)", "ρ", _sr),
    Rule(R.ss, Sigma, "σ(σ(r))", "r", _ss),
    Rule(R.tr, Tau, "τ(C[r], C[σ(r)])", "C[ρ]", _tr),
    Rule(R.tsr, Tau, "τ(C[σ(r)], C[r])", "C[ρ]", _tsr),
    Rule(R.trr, Tau, "τ(C[r], C[ρ])", "C[r]", _ctx_keep(_hole_r_rho)),
    Rule(R.tlr, Tau, "τ(C[ρ], C[r])", "C[r]", _ctx_keep(_hole_rho_r)),
    Rule(R.slr, SubL, "subL(C[r], C[ρ])", "C[r]", _ctx_keep(_hole_r_rho)),
    Rule(R.srr, SubR, "subR(C[ρ], C[r])", "C[r]", _ctx_keep(_hole_rho_r)),
    Rule(R.sls, SubL, "subL(subL(s, C[r]), C[σ(r)])", "s", _sls_family(_hole_r_sr), True),
    Rule(R.slss, SubL, "subL(subL(s, C[σ(r)]), C[r])", "s", _sls_family(_hole_sr_r), True),
    Rule(R.srs, SubR, "subR(C[s], subR(C[σ(s)], r))", "r", _srs_family(_hole_r_sr), True),
    Rule(R.srrr, SubR, "subR(C[σ(s)], subR(C[s], r))", "r", _srs_family(_hole_sr_r), True),
    Rule(R.mx2l1, Mu1, "μ1(ξ1(r))", "r", _unwrap(Xi1, lambda p, c: c.p), True),
    Rule(R.mx2l2, Mu1, "μ1(ξ∧(r, s))", "r", _unwrap(XiPair, lambda p, c: c.p), True),
    Rule(R.mx2r1, Mu2, "μ2(ξ∧(r, s))", "s", _unwrap(XiPair, lambda p, c: c.q), True),
    Rule(R.mx2r2, Mu2, "μ2(ξ2(s))", "s", _unwrap(Xi2, lambda p, c: c.p), True),
    Rule(R.mx3l, Mu3arg, "μ(ξ1(r), s, u)", "s", _unwrap(Xi1, lambda p, c: p.q), True),
    Rule(R.mx3r, Mu3arg, "μ(ξ2(r), s, u)", "u", _unwrap(Xi2, lambda p, c: p.r), True),
    Rule(R.mxl, Nu, "ν(ξ(r))", "τ(β, τ(r, σ(β)))", _mxl),
    Rule(R.mxr, Mu2arg, "μ(ξ2(r), s)", "s", _unwrap(Xi2, lambda p, c: p.q), True),
    Rule(R.mx, XiPair, "ξ(μ1(r), μ2(r))", "r", _mx, True),
    Rule(R.mxx, Mu3arg, "μ(t, ξ1(r), ξ2(s))", "t", _mxx, True),
    Rule(R.xmr, Xi, "ξ(ν(r))", "τ(η, τ(r, σ(η)))", _xmr),
    Rule(R.mx1r, Mu2arg, "μ(s, ξ2(r))", "s", _mx1r, True),
    Rule(R.stss, Sigma, "σ(τ(r, s))", "τ(σ(s), σ(r))", _stss),
    Rule(R.ssbl, Sigma, "σ(subL(r, s))", "subR(σ(s), σ(r))", _ssbl),
    Rule(R.ssbr, Sigma, "σ(subR(r, s))", "subL(σ(s), σ(r))", _ssbr),
    Rule(R.sx, Sigma, "σ(ξ(r))", "ξ(σ(r))", _sx),
    Rule(R.sxss, Sigma, "σ(ξ(s, r))", "ξ(σ(s), σ(r))", _sigma_opaque(XiPair)),
    Rule(R.sm, Sigma, "σ(μ(r))", "μ(σ(r))", _sm),
    Rule(R.smss, Sigma, "σ(μ(s, r))", "μ(σ(s), σ(r))", _sigma_opaque(Mu2arg)),
    Rule(R.smsss, Sigma, "σ(μ(r, u, v))", "μ(σ(r), σ(u), σ(v))", _sigma_opaque(Mu3arg)),
    Rule(R.tsbll, Tau, "τ(r, subL(ρ, s))", "subL(r, s)", _tsbll, True),
    Rule(R.tsbrl, Tau, "τ(r, subR(s, ρ))", "subL(r, s)", _tsbrl, True),
    Rule(R.tsblr, Tau, "τ(subL(r, s), t)", "τ(r, subR(s, t))", _tsblr, True),
    Rule(R.tsbrr, Tau, "τ(subR(s, t), u)", "subR(s, τ(t, u))", _tsbrr),
    Rule(R.tt, Tau, "τ(τ(t, r), s)", "τ(t, τ(r, s))", _tt),
    Rule(R.tts, Tau, "τ(C[u], τ(C[σ(u)], v))", "v", _tts),
    Rule(R.tst, Tau, "τ(C[σ(u)], τ(C[u], v))", "v", _tst),
    Rule(R.mxp, Mu, "μf(ρx)", "ρf(x)", _mxp),
    Rule(R.nxp, Nu, "ν(ρx)", "ρf(x)", _nxp),
    Rule(R.xxp, Xi, "ξ(ρ)", "ρ", _xxp),
]

RULES_BY_HEAD: dict[type, list[Rule]] = {}
for _rule in RULES:
    RULES_BY_HEAD.setdefault(_rule.head, []).append(_rule)
RULE = {r.id: r for r in RULES}


def rule_catalog() -> list[tuple[RuleId, str, str]]:
    return [(r.id, r.lhs, r.rhs) for r in RULES]


def get_rule(label_or_number) -> Rule:
    if isinstance(label_or_number, str):
        return RULE[RuleId[label_or_number]]
    return RULE[RuleId(label_or_number)]
