"""One canonical instance per rule: it fires, gives the listed right-hand side,
and keeps both endpoints."""
import pytest

from cpaths.engine import apply_rule, contract_once
from cpaths.paths import (BetaStep, EtaStep, Loop, Mu, Mu1, Mu2, Mu2arg, Mu3arg, Nu, Rho,
                          Sigma, SubL, SubR, Tau, Xi, Xi1, Xi2, XiPair)
from cpaths.rules import RULES, RuleId, get_rule, rule_catalog
from cpaths.terms import SUCC, App, Base, Lam, Var, numeral

L, SL = Loop(), Sigma(Loop())
RB = Rho(Base())
f, n, y = Var("f"), Var("n"), Var("y")
P = App(Lam("x", Var("x")), y)  # (λx.x) y, one beta step from y
B = BetaStep(P)
FL = Mu(L, f)  # f base = f base
K = Lam("x", Base())  # λx.base

CASES = {
    "sr": (Sigma(RB), RB),
    "ss": (Sigma(SL), L),
    "tr": (Tau(L, SL), RB),
    "tsr": (Tau(SL, L), RB),
    "trr": (Tau(L, RB), L),
    "tlr": (Tau(RB, L), L),
    "slr": (SubL(L, RB), L),
    "srr": (SubR(RB, L), L),
    "sls": (SubL(SubL(Rho(App(f, P)), B), Sigma(B)), Rho(App(f, P))),
    "slss": (SubL(SubL(Rho(App(f, y)), Sigma(B)), B), Rho(App(f, y))),
    "srs": (SubR(B, SubR(Sigma(B), Rho(App(f, P)))), Rho(App(f, P))),
    "srrr": (SubR(Sigma(B), SubR(B, Rho(App(f, y)))), Rho(App(f, y))),
    "mx2l1": (Mu1(Xi1(L)), L),
    "mx2l2": (Mu1(XiPair(L, SL)), L),
    "mx2r1": (Mu2(XiPair(L, SL)), SL),
    "mx2r2": (Mu2(Xi2(L)), L),
    "mx3l": (Mu3arg(Xi1(RB), L, SL), L),
    "mx3r": (Mu3arg(Xi2(RB), L, SL), SL),
    "mxl": (Nu(Xi("x", L), n),
            Tau(BetaStep(App(K, n)), Tau(L, Sigma(BetaStep(App(K, n)))))),
    "mxr": (Mu2arg(Xi2(RB), L), L),
    "mx": (XiPair(Mu1(L), Mu2(L)), L),
    "mxx": (Mu3arg(L, Xi1(RB), Xi2(RB)), L),
    "xmr": (Xi("x", Nu(FL, Var("x"))),
            Tau(EtaStep(Lam("x", App(App(f, Base()), Var("x")))),
                Tau(FL, Sigma(EtaStep(Lam("x", App(App(f, Base()), Var("x")))))))),
    "mx1r": (Mu2arg(L, Xi2(RB)), L),
    "stss": (Sigma(Tau(L, SL)), Tau(Sigma(SL), SL)),
    "ssbl": (Sigma(SubL(Rho(App(f, P)), B)), SubR(Sigma(B), Sigma(Rho(App(f, P))))),
    "ssbr": (Sigma(SubR(B, Rho(App(f, y)))), SubL(Sigma(Rho(App(f, y))), Sigma(B))),
    "sx": (Sigma(Xi("x", L)), Xi("x", SL)),
    "sxss": (Sigma(XiPair(L, SL)), XiPair(SL, Sigma(SL))),
    "sm": (Sigma(FL), Mu(SL, f)),
    "smss": (Sigma(Mu2arg(L, SL)), Mu2arg(SL, Sigma(SL))),
    "smsss": (Sigma(Mu3arg(L, L, SL)), Mu3arg(SL, SL, Sigma(SL))),
    "tsbll": (Tau(FL, SubL(Rho(App(f, Base())), L)), SubL(FL, L)),
    "tsbrl": (Tau(FL, SubR(L, Rho(App(f, Base())))), SubL(FL, L)),
    "tsblr": (Tau(SubL(FL, L), Mu(SL, f)), Tau(FL, SubR(L, Mu(SL, f)))),
    "tsbrr": (Tau(SubR(L, FL), Mu(SL, f)), SubR(L, Tau(FL, Mu(SL, f)))),
    "tt": (Tau(Tau(L, L), SL), Tau(L, Tau(L, SL))),
    "tts": (Tau(L, Tau(SL, L)), L),
    "tst": (Tau(SL, Tau(L, SL)), SL),
    "mxp": (Mu(Rho(numeral(0)), SUCC), Rho(numeral(1))),
    "nxp": (Nu(Rho(f), Base()), Rho(App(f, Base()))),
    "xxp": (Xi("x", Rho(Var("x"))), Rho(Lam("x", Var("x")))),
}


def test_catalog_is_complete_and_numbered():
    cat = rule_catalog()
    assert [int(r) for r, _, _ in cat] == list(range(1, 43))
    assert [r.name for r, _, _ in cat] == list(CASES)
    assert len(RULES) == 42


@pytest.mark.parametrize("label", list(CASES))
def test_rule_fires_on_canonical_instance(label):
    lhs, rhs = CASES[label]
    assert lhs.wf
    got = apply_rule(label, lhs)
    assert got == rhs
    assert (got.source, got.target) == (lhs.source, lhs.target)


@pytest.mark.parametrize("label", list(CASES))
def test_rule_numbering(label):
    assert get_rule(label).number == RuleId[label].value
    assert get_rule(RuleId[label].value).label == label


def test_catalog_schemas():
    cat = {r.name: (lhs, rhs) for r, lhs, rhs in rule_catalog()}
    assert cat["ss"] == ("σ(σ(r))", "r")
    assert cat["tt"] == ("τ(τ(t, r), s)", "τ(t, τ(r, s))")
    assert cat["mxp"] == ("μf(ρx)", "ρf(x)")


def test_context_rules_match_through_congruences():
    # tau(C[r], C[sigma r]) with C = mu_f(xi_x(.))
    c = lambda p: Mu(Xi("x", p), f)
    got = apply_rule("tr", Tau(c(L), c(SL)))
    assert got == c(RB)
    # an odd number of sigma frames picks rho of the other endpoint
    lhs = Tau(Sigma(Mu(B, f)), Sigma(Mu(Sigma(B), f)))
    got = apply_rule("tr", lhs)
    assert got == Sigma(Mu(Rho(y), f))
    assert (got.source, got.target) == (lhs.source, lhs.target)


def test_context_frames_must_agree():
    assert apply_rule("tr", Tau(Mu(L, f), Mu(SL, Var("g")))) is None


def test_rule39_literal_mode_returns_u():
    lhs = CASES["tst"][0]
    assert apply_rule("tst", lhs, rule39_literal=True) == L
    assert apply_rule("tst", lhs) == SL


def test_guarded_rule_refuses_endpoint_change():
    # mx2r1 would swap in s, whose endpoints differ from the declared ones
    lhs = Mu2(XiPair(L, Rho(y)))
    assert apply_rule("mx2r1", lhs) is None


def test_mxl_needs_binder_not_free():
    lhs = Nu(Xi("x", Rho(Var("x"))), n)
    assert apply_rule("mxl", lhs) is None


def test_rule_heads():
    for lhs_label, (lhs, _) in CASES.items():
        found = contract_once(lhs)
        assert found is not None, lhs_label
