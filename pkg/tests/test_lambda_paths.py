import random

import pytest

from cpaths.engine import rw_equal
from cpaths.errors import CoherenceError, FuelExhausted
from cpaths.generate import random_term
from cpaths.lambda_paths import (REVERSED, ReductionSequence, SeqStep, find_path,
                                 path_from_sequence, reduction_to_normal)
from cpaths.paths import BetaStep, EtaStep, Rho, Sigma, Tau, subpaths
from cpaths.terms import App, Lam, Var, normalize_term

x, y, z, v, w = (Var(n) for n in "xyzvw")
M = App(Lam("x", App(Lam("y", App(y, x)), Lam("w", App(z, w)))), v)
M1 = App(Lam("x", App(Lam("y", App(y, x)), z)), v)
M2 = App(Lam("y", App(y, v)), z)
N = App(z, v)
EXAMPLE = Tau(Tau(EtaStep(M, (0, 0, 1)), BetaStep(M1)), BetaStep(M2))


def test_example_sequence():
    seq = reduction_to_normal(M)
    assert seq.terms == (M, M1, M2, N)
    assert [s.kind for s in seq.steps] == ["eta", "beta", "beta"]
    assert path_from_sequence(seq) == EXAMPLE


def test_find_path_reproduces_example():
    p = find_path(M, N)
    assert p == EXAMPLE
    assert isinstance(p.p, Tau) and isinstance(p.p.p, EtaStep)
    assert (p.source, p.target) == (M, N)


def test_singleton_sequence_is_rho():
    assert path_from_sequence(ReductionSequence([M])) == Rho(M)


def test_two_beta_steps():
    ident = Lam("x", x)
    t0 = App(ident, App(Lam("y", y), z))
    seq = ReductionSequence([t0, App(ident, z), z], [SeqStep((1,), "beta"), SeqStep((), "beta")])
    p = path_from_sequence(seq)
    assert p == Tau(BetaStep(t0, (1,)), BetaStep(App(ident, z)))


def test_reversed_step_is_sigma():
    seq = ReductionSequence([N, M2], [SeqStep((), "beta", REVERSED)])
    assert path_from_sequence(seq) == Sigma(BetaStep(M2))


def test_alpha_step_is_absorbed():
    seq = ReductionSequence([Lam("x", x), Lam("y", y)], [SeqStep((), "alpha")])
    assert path_from_sequence(seq) == Rho(Lam("x", x))


def test_incoherent_sequence_reports_index():
    seq = ReductionSequence([M, M1, N], [SeqStep((0, 0, 1), "eta"), SeqStep((), "beta")])
    with pytest.raises(CoherenceError) as e:
        path_from_sequence(seq)
    assert e.value.position == 1
    with pytest.raises(CoherenceError):
        ReductionSequence([M, M1], [])


def test_forward_sequences_have_no_sigma():
    p = path_from_sequence(reduction_to_normal(M))
    assert not any(isinstance(n, Sigma) for _, n in subpaths(p))


def test_find_path_same_term():
    assert find_path(M, M) == Tau(EXAMPLE, Sigma(EXAMPLE))
    assert rw_equal(find_path(M, M), Rho(M))
    assert find_path(N, N) == Rho(N)


def test_find_path_both_sides_reduce():
    p = find_path(M, App(Lam("q", App(z, Var("q"))), v))
    assert (p.source, p.target) == (M, App(Lam("q", App(z, Var("q"))), v))
    assert isinstance(p.q, Sigma)


def test_find_path_none_when_normal_forms_differ():
    assert find_path(Lam("x", x), Lam("y", App(y, y))) is None


def test_find_path_reports_diverging_side():
    omega = App(Lam("x", App(x, x)), Lam("x", App(x, x)))
    with pytest.raises(FuelExhausted) as e:
        find_path(z, omega, fuel=50)
    assert e.value.side == "right"
    with pytest.raises(FuelExhausted) as e:
        find_path(omega, z, fuel=50)
    assert e.value.side == "left"


def test_random_certificates():
    rng = random.Random(31)
    done = 0
    for _ in range(300):
        m = random_term(rng, 3)
        try:
            nf = normalize_term(m, 200)
        except FuelExhausted:
            continue
        n = random_term(rng, 2)
        n = App(Lam("u", nf), n) if "u" not in nf.fv else nf
        p = find_path(m, n, 200)
        assert p is not None and p.wf
        assert (p.source, p.target) == (m, n)
        assert rw_equal(Tau(p, Sigma(p)), Rho(m))
        done += 1
    assert done > 200
