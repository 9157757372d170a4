import random

import pytest

from cpaths.errors import CoherenceError, RedexError
from cpaths.generate import random_path
from cpaths.paths import (BetaStep, EtaStep, Loop, Mu, Mu1, Mu3arg, Nu, Rho, Sigma, SubL,
                          SubR, Tau, Xi, XiPair, check_well_formed, compose, inverse,
                          replace_subpath, size, subpath_at, well_formed)
from cpaths.terms import SUCC, App, Base, Lam, Var, Zero, numeral

x, y, z, f = Var("x"), Var("y"), Var("z"), Var("f")
ID_Y = App(Lam("x", x), y)  # (λx.x) y


def test_rho_endpoints():
    p = Rho(Zero())
    assert p.source == p.target == Zero()


def test_beta_step_target():
    p = BetaStep(ID_Y)
    assert (p.source, p.target) == (ID_Y, y)


def test_eta_step_target():
    p = EtaStep(Lam("w", App(z, Var("w"))))
    assert p.target == z


def test_step_requires_redex():
    with pytest.raises(RedexError):
        BetaStep(App(x, y))
    with pytest.raises(RedexError):
        EtaStep(ID_Y)


def test_sigma_swaps():
    p = Sigma(BetaStep(ID_Y))
    assert (p.source, p.target) == (y, ID_Y)


def test_tau_endpoints_and_wf():
    p = Tau(BetaStep(ID_Y), Rho(y))
    assert (p.source, p.target) == (ID_Y, y)
    assert well_formed(p)
    assert not well_formed(Tau(Loop(), Rho(Zero())))


def test_congruence_endpoints():
    s = BetaStep(ID_Y)
    assert Mu(s, f).source == App(f, ID_Y)
    assert Mu(s, f).target == App(f, y)
    assert Nu(s, z).target == App(y, z)
    assert Xi("q", s).source == Lam("q", ID_Y)
    assert Mu(Rho(numeral(1)), SUCC).target == numeral(2)


def test_sub_endpoints():
    r = Rho(App(f, ID_Y))
    s = BetaStep(ID_Y)
    assert SubL(r, s).target == App(f, y)
    r2 = Rho(App(f, y))
    assert SubR(s, r2).source == App(f, ID_Y)


def test_loop():
    assert Loop().source == Loop().target == Base()


def test_opaque_declared_ends():
    p = Mu1(Loop())
    assert p.source == Base() and not p.declares_ends
    q = XiPair(Loop(), Sigma(Loop()), ends=(x, y))
    assert (q.source, q.target) == (x, y) and q.declares_ends
    assert Mu3arg(Loop(), Loop(), Loop()).wf


def test_compose_runs_right_argument_first():
    assert compose(Loop(), Loop()) == Tau(Loop(), Loop())
    s = BetaStep(ID_Y)
    assert compose(Rho(y), s) == Tau(s, Rho(y))
    with pytest.raises(CoherenceError):
        compose(s, BetaStep(ID_Y))


def test_inverse():
    assert inverse(Loop()) == Sigma(Loop())
    assert inverse(Rho(x)) == Sigma(Rho(x))


def test_check_well_formed_reports_junction():
    p = Sigma(Tau(Loop(), Rho(Zero())))
    with pytest.raises(CoherenceError) as e:
        check_well_formed(p)
    assert e.value.position == (0,)


def test_xi_alpha_equality():
    a = Xi("x", Rho(x))
    b = Xi("y", Rho(y))
    assert a == b
    assert Xi("x", Rho(z)) != Xi("x", Rho(x))


def test_replace_subpath():
    p = Tau(Loop(), Sigma(Loop()))
    q = replace_subpath(p, (1, 0), Rho(Base()))
    assert q == Tau(Loop(), Sigma(Rho(Base())))
    assert subpath_at(q, (1,)) == Sigma(Rho(Base()))
    assert size(q) == 4


def test_random_paths_are_well_formed():
    rng = random.Random(5)
    for _ in range(300):
        p = random_path(rng)
        assert p.wf and size(p) <= 30
        assert inverse(p).source == p.target
