import json
import random

import jsonschema
import pytest

from cpaths.engine import (TRACE_SCHEMA, apply_rule, contract_once, format_trace, is_normal,
                           normal_form, normalize, reduce_rho_generated, rw_equal,
                           trace_document, trace_to_json)
from cpaths.errors import CoherenceError, FuelExhausted, PreconditionError
from cpaths.generate import random_path, random_rho_generated
from cpaths.paths import (BetaStep, Loop, Mu, Nu, Rho, Sigma, SubL, SubR, Tau, Xi,
                          replace_subpath, subpath_at)
from cpaths.syntax import parse_path
from cpaths.terms import App, Base, Lam, Var, Zero

L, SL, RB = Loop(), Sigma(Loop()), Rho(Base())


def test_contract_once_examples():
    new, step = contract_once(Sigma(SL))
    assert new == L and step.rule.name == "ss" and step.position == ()
    assert contract_once(Rho(Zero())) is None
    new, step = contract_once(Tau(L, Tau(SL, L)))
    assert new == L and step.rule.name == "tts"


def test_normalize_examples():
    nf, trace = normalize(Tau(SL, L))
    assert nf == RB and trace.rules == ["tsr"]
    nf, trace = normalize(RB)
    assert nf == RB and len(trace) == 0


def test_inner_redex_position():
    p = Tau(L, Sigma(Sigma(SL)))
    new, step = contract_once(p)
    assert step.position == (1,)
    assert step.redex == Sigma(Sigma(SL)) and step.contractum == SL
    assert new == Tau(L, SL)


def test_priority_strategy_prefers_low_rule_numbers():
    # lo fires tt at the root; priority finds ss below it first
    p = Tau(Tau(L, L), Sigma(SL))
    assert contract_once(p, "lo")[1].rule.name == "tt"
    assert contract_once(p, "priority")[1].rule.name == "ss"


def test_unknown_strategy():
    with pytest.raises(ValueError):
        normalize(L, strategy="innermost")


def test_trace_is_chained_and_local():
    p = parse_path("(sigma (tau (tau loop (sigma loop)) (tau (rho base) loop)))")
    nf, trace = normalize(p)
    assert trace.is_chained()
    assert trace[0].before is p and trace[-1].after == nf
    for st in trace:
        assert replace_subpath(st.before, st.position, subpath_at(st.after, st.position)) == st.after
    assert nf == SL


def test_fuel_exhaustion_carries_partial_trace():
    p = parse_path("(tau (tau (tau loop loop) loop) loop)")
    with pytest.raises(FuelExhausted) as e:
        normalize(p, fuel=1)
    assert len(e.value.partial) == 1


def test_ill_formed_input_is_rejected():
    with pytest.raises(CoherenceError):
        normalize(Tau(L, Rho(Zero())))


def test_rw_equal():
    assert rw_equal(Tau(RB, L), L)
    assert not rw_equal(L, SL)
    p = random_path(random.Random(1))
    assert rw_equal(p, p)
    with pytest.raises(CoherenceError):
        rw_equal(L, Rho(Zero()))


def test_random_steps_keep_endpoints():
    rng = random.Random(17)
    for _ in range(300):
        p = random_path(rng)
        for strategy in ("lo", "priority"):
            nf, trace = normalize(p, strategy=strategy)
            assert is_normal(nf)
            for st in trace:
                assert (st.after.source, st.after.target) == (p.source, p.target)


def test_mxl_result_joins_with_the_rho_rules():
    # nu(xi(x, rho M), N): mxl first, or xxp then nxp, meet at rho((λx.M) N)
    p = Nu(Xi("x", Rho(Var("m"))), Var("n"))
    want = Rho(App(Lam("x", Var("m")), Var("n")))
    assert normal_form(p, strategy="lo") == want
    assert normal_form(p, strategy="priority") == want
    assert apply_rule("mxl", p) is not None


def test_tlr_and_tsbrl_overlap_without_common_reduct():
    # A critical pair of the catalog: both contracta are rw-normal and differ.
    s = Mu(L, Var("f"))
    p = Tau(Rho(s.source), SubR(L, Rho(s.source)))
    a = apply_rule("tlr", p)
    b = apply_rule("tsbrl", p)
    assert a == SubR(L, Rho(s.source)) and b == SubL(Rho(s.source), L)
    assert is_normal(a) and is_normal(b) and a != b
    assert (a.source, a.target) == (b.source, b.target)


def test_tt_and_tsbll_overlap_without_common_reduct():
    f = Var("f")
    r1 = BetaStep(App(Lam("x", Var("x")), App(f, Base())))
    r2 = Mu(L, f)
    p = Tau(Tau(r1, r2), SubL(Rho(r2.target), L))
    a = normal_form(Tau(r1, apply_rule("tsbll", Tau(r2, SubL(Rho(r2.target), L)))))
    b = normal_form(apply_rule("tsbll", p))
    assert a != b and (a.source, a.target) == (b.source, b.target)


# -- paths generated from reflexivity ------------------------------------------

def test_reduce_rho_generated_examples():
    assert reduce_rho_generated(Sigma(Rho(Zero()))).rules == ["sr"]
    assert reduce_rho_generated(Tau(Rho(Zero()), Rho(Zero()))).rules == ["trr"]
    trace = reduce_rho_generated(Xi("x", Sigma(Rho(Var("x")))))
    assert trace.rules == ["sr", "xxp"]
    assert trace[-1].after == normal_form(Xi("x", Sigma(Rho(Var("x")))))


def test_reduce_rho_generated_rejects_other_atoms():
    with pytest.raises(PreconditionError):
        reduce_rho_generated(Tau(L, RB))


def test_rho_generated_agrees_with_normalize():
    rng = random.Random(23)
    for _ in range(200):
        p = random_rho_generated(rng)
        trace = reduce_rho_generated(p)
        final = trace[-1].after if len(trace) else p
        assert final == Rho(p.source) == normal_form(p)


# -- trace export -------------------------------------------------------------

def test_trace_json_validates():
    rng = random.Random(8)
    for _ in range(50):
        p = random_path(rng)
        nf, trace = normalize(p)
        doc = json.loads(trace_to_json(p, nf, trace))
        jsonschema.validate(doc, TRACE_SCHEMA)
        assert [s["rule"] for s in doc["steps"]] == trace.rules


def test_trace_text():
    nf, trace = normalize(Sigma(SL))
    assert format_trace(trace).splitlines()[0].split()[:4] == ["1", "ss", "(rule", "2)"]
    assert trace_document(Sigma(SL), nf, trace)["normal_form"] == "loop"
