import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import freeterm
import models
import verify
from models import PolyModel, PolyMulSpec, SeqModel
from qexact import QPoly
from rbcommon import CarrierError
from verify import SamplingPlan
from worker import Worker

STAR20 = PolyModel(PolyMulSpec("star", 2, 0))
INTEGRAL = PolyModel(PolyMulSpec("int"))


def test_plan_descriptions():
    assert SamplingPlan.grid(6).describe() == "grid:0..6"
    assert SamplingPlan.grid(4, 1, divided=True).describe() == "grid:1..4,divided"
    assert SamplingPlan.random(200).describe() == "random:200,seed=42,bound=3"
    assert SamplingPlan.basis().describe() == "basis"
    assert SamplingPlan.of([(1, 2)]).describe() == "explicit:1"


def test_grid_orders():
    assert list(SamplingPlan.grid(1).exponents(2)) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    distinct = list(SamplingPlan.grid(2, distinct=True).exponents(2))
    assert distinct == [(0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1)]


def test_plan_must_fit_the_carrier():
    with pytest.raises(CarrierError):
        list(SamplingPlan.grid(2).assignments(SeqModel(3), 2))
    with pytest.raises(CarrierError):
        list(SamplingPlan.basis().assignments(STAR20, 2))


def test_default_plans():
    assert verify.default_plan(SeqModel(6)).kind == verify.RANDOM
    assert verify.default_plan(STAR20) == SamplingPlan.grid(6)
    assert verify.default_plan(PolyModel(PolyMulSpec("novsub"))).min_exp == 1
    assert verify.default_plan(models.parse_model_spec("eps:m=3,seed=1")).kind == verify.BASIS_TUPLES


@pytest.mark.parametrize("name", ["rcom", "f4"])
def test_identities_of_partial_sums(name):
    verdict = verify.check_identity(freeterm.builtin(name), SeqModel(6), SamplingPlan.random(200, seed=42))
    assert verdict.holds
    assert verdict.samples == 200
    assert verdict.grade == "evidence"


def test_lie_and_jordan_words_on_partial_sums():
    seq = SeqModel(7)
    plan = SamplingPlan.random(60)
    assert verify.check_identity(freeterm.builtin("tortkara"), seq, plan).holds
    assert verify.check_identity(freeterm.builtin("f5plus"), seq, plan).holds


def test_failure_reports_first_witness():
    commutator = freeterm.expand("a*b - b*a")
    seq = SeqModel(3)
    verdict = verify.check_identity(commutator, seq, SamplingPlan.random(50))
    assert verdict.status == "fails"
    assert set(verdict.witness_text) == {"a", "b"}
    assert models.eval_poly(commutator, seq, verdict.witness) == verdict.value
    assert not seq.is_zero(verdict.value)
    assert verdict.to_json()["value"] == verdict.value_text


def test_verdict_does_not_depend_on_threads():
    commutator = freeterm.expand("a*(b*c) - (a*b)*c")
    plan = SamplingPlan.random(300, seed=3)
    single = verify.check_identity(commutator, SeqModel(4), plan, Worker(threads=1, chunk=8))
    pooled = verify.check_identity(commutator, SeqModel(4), plan, Worker(threads=4, chunk=8))
    assert single == pooled


def test_grid_proof_grade():
    rcom = freeterm.builtin("rcom")
    assert verify.evidence_bound(rcom, INTEGRAL) == 0
    verdict = verify.check_identity(rcom, INTEGRAL, SamplingPlan.grid(2))
    assert verdict.holds
    assert verdict.grade == "proof"
    assert verdict.samples == 27


def test_evidence_bound_needs_polynomials():
    with pytest.raises(CarrierError):
        verify.evidence_bound(freeterm.builtin("rcom"), SeqModel(3))
    assert verify.evidence_bound(freeterm.FreePoly.zero(3), STAR20) == 0


@pytest.mark.parametrize("name, model", [("rcom", STAR20), ("zinbiel", PolyModel(PolyMulSpec("star", 1, 0)))])
def test_grid_at_the_bound_decides(name, model):
    p = freeterm.builtin(name)
    bound = verify.evidence_bound(p, model)
    at_bound = verify.check_identity(p, model, SamplingPlan.grid(bound))
    assert at_bound.holds
    assert at_bound.grade == "proof"
    beyond = verify.check_identity(p, model, SamplingPlan.grid(bound + 3))
    assert beyond.holds
    assert beyond.samples == (bound + 4) ** 3


@settings(max_examples=20, deadline=None)
@given(st.fractions(-3, 3, max_denominator=4), st.fractions(-3, 3, max_denominator=4))
def test_combinations_of_identities_hold(alpha, beta):
    seq = SeqModel(6)
    plan = SamplingPlan.random(30, seed=5)
    p, q = freeterm.builtin("f4"), freeterm.combination("rcom(a,b,c)*d - d*rcom(b,a,c)", 4)
    assert verify.check_identity(p, seq, plan).holds
    assert verify.check_identity(q, seq, plan).holds
    assert verify.check_identity(alpha * p + beta * q, seq, plan).holds


def test_basis_tuples_decide_multilinear_identities():
    model = models.parse_model_spec("eps:m=4,seed=5")
    verdict = verify.check_identity(freeterm.builtin("f4"), model, SamplingPlan.basis())
    assert verdict.holds
    assert verdict.samples == 4**4
    assert verdict.grade == "proof"


def test_counterexample_search_finds_smallest_distinct_exponents():
    hit = verify.find_counterexample(freeterm.builtin("f5plus"), STAR20)
    assert hit is not None
    assignment, value = hit
    assert assignment == tuple(QPoly.monomial(e) for e in range(5))
    assert value.degree == 18


def test_counterexample_search_respects_budget():
    assert verify.find_counterexample(freeterm.builtin("rcom"), INTEGRAL, budget=50) is None


def test_worker_keeps_plan_order():
    worker = Worker(threads=3, chunk=2)
    assert worker.map(lambda x: x * x, range(10)) == [x * x for x in range(10)]
    count, hit = worker.first_failure(lambda x: x % 7, range(1, 30), lambda r: r == 0)
    assert hit == (6, 7, 0)
    assert count == 7
    assert worker.first_failure(lambda x: x, [], bool) == (0, None)


def test_verdict_is_exported():
    assert verify.Verdict is models.Verdict
    verdict = verify.check_identity(freeterm.builtin("rcom"), INTEGRAL, SamplingPlan.grid(1))
    assert isinstance(verdict, verify.Verdict)
