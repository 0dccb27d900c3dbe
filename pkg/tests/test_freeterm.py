import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import freeterm
import verify
from freeterm import JORDAN, LIE, PLAIN, FreePoly, Mul, RewriteSystem, Var
from models import PolyModel, PolyMulSpec
from rbcommon import ArityError, KindError, RewriteError, UnknownMacroError
from verify import SamplingPlan

A, B, C = Var(1), Var(2), Var(3)
DEGREE5 = list(freeterm.monomials(5))
UP_TO_DEGREE5 = [term for degree in range(1, 6) for term in freeterm.monomials(degree)]


def test_counts():
    assert len(freeterm.shapes(4)) == 5
    assert len(list(freeterm.monomials(4))) == 120
    assert len(DEGREE5) == 14 * 120


def test_term_order_is_degree_descending():
    assert Mul(A, B).key < A.key
    assert Mul(Mul(A, B), C).key != Mul(A, Mul(B, C)).key
    assert Mul(A, C).key < Mul(B, A).key
    p = freeterm.expand("a*(b*c) + a")
    assert [term.degree for term, _ in p] == [3, 1]


def test_expand_brackets():
    p = freeterm.expand("[a,b]")
    assert p.coefficient(Mul(A, B)) == 1
    assert p.coefficient(Mul(B, A)) == -1
    q = freeterm.expand("{a,b}")
    assert q.coefficient(Mul(B, A)) == 1
    assert len(freeterm.expand("[a,b]", LIE)) == 1


def test_kind_errors():
    with pytest.raises(KindError):
        freeterm.expand("a*b", LIE)
    with pytest.raises(KindError):
        freeterm.builtin("tortkara") + freeterm.builtin("f4")
    with pytest.raises(KindError):
        FreePoly({}, 0, "octonion")


def test_builtins_and_natural_kinds():
    assert freeterm.builtin("f4").kind == PLAIN
    assert freeterm.builtin("tortkara").kind == LIE
    assert freeterm.builtin("f5plus").kind == JORDAN
    assert freeterm.natural_kind("{a,b}") == JORDAN
    assert freeterm.builtin("f4").is_multilinear()
    assert not freeterm.expand("a*a").is_multilinear()
    with pytest.raises(UnknownMacroError):
        freeterm.builtin("nope")


def test_jacobi_is_not_a_plain_word_identity():
    plain = freeterm.builtin("jac").to_plain()
    assert len(plain) == 12
    assert not plain.is_zero()
    assert not freeterm.builtin("tortkara").to_plain().is_zero()
    # commutators of an associative product satisfy it
    associative = PolyModel(PolyMulSpec("star", 0, 1))
    assert verify.check_identity(freeterm.builtin("jac"), associative, SamplingPlan.grid(2)).holds


def test_combination_of_rcom_instances():
    assert freeterm.combination("rcom(a,b,c) + rcom(a,c,b)", 3).is_zero()


def test_permute_and_substitute():
    p = freeterm.expand("a*(b*c)")
    assert p.permute((2, 3, 1)).to_dsl() == "b*(c*a)"
    with pytest.raises(ArityError):
        p.permute((1, 1, 2))
    q = freeterm.expand("a*b").substitute({2: FreePoly.var(2).multiply(FreePoly.var(3))}, 3)
    assert q == p
    assert q.arity == 3


@pytest.mark.parametrize("name", ["f4", "tortkara", "f5plus", "s13"])
def test_to_dsl_parses_back(name):
    p = freeterm.builtin(name)
    assert freeterm.combination(p.to_dsl(), p.arity, p.kind) == p


def test_tree_positions():
    t = Mul(Mul(A, B), C)
    assert list(freeterm.positions(t)) == [(0,), ()]
    assert freeterm.subterm(t, (0, 1)) == B
    assert freeterm.replace(t, (1,), Mul(C, A)) == Mul(Mul(A, B), Mul(C, A))
    head, factors = freeterm.spine(t)
    assert head == A and factors == [B, C]
    assert freeterm.from_spine(head, factors) == t


def test_normal_forms():
    assert freeterm.normal_form(freeterm.builtin("rcom"), "rcomSort").is_zero()
    assert freeterm.normal_form(freeterm.expand("a*b + b*a"), "anticommSort").is_zero()
    assert freeterm.normal_form(freeterm.expand("a*b - b*a"), "commSort").is_zero()
    merged = freeterm.normal_form(freeterm.expand("(a*c)*b + (a*b)*c"), "rcomSort")
    assert merged == 2 * FreePoly.from_term(Mul(Mul(A, B), C))


def test_rewrite_errors():
    with pytest.raises(RewriteError):
        RewriteSystem("nope")
    with pytest.raises(RewriteError):
        RewriteSystem("deg5Rules").normalize(Mul(Mul(A, B), C))
    with pytest.raises(RewriteError):
        RewriteSystem("commSort").apply_at(Mul(A, B), ())


def test_deg5_rules_order_pairs():
    d, e = Var(4), Var(5)
    term = Mul(Mul(Mul(B, A), C), Mul(d, e))
    sign, normal = RewriteSystem("deg5Rules").normalize(term)
    assert sign == 1
    assert RewriteSystem("deg5Rules").redexes(normal) == []


@settings(max_examples=1000, deadline=None)
@given(st.sampled_from(UP_TO_DEGREE5), st.sampled_from(["rcomSort", "commSort", "anticommSort"]), st.integers(0, 10**6))
def test_rewriting_is_confluent(term, name, seed):
    rs = RewriteSystem(name)
    assert rs.reduce(term, random.Random(seed)) == rs.normalize(term)
    assert rs.reduce(term) == rs.normalize(term)


@given(st.sampled_from([t for t in UP_TO_DEGREE5 if isinstance(t, Mul)]))
def test_anticommutative_sign_law(term):
    forward = freeterm.normal_form(FreePoly.from_term(Mul(term.left, term.right)), "anticommSort")
    backward = freeterm.normal_form(FreePoly.from_term(Mul(term.right, term.left)), "anticommSort")
    assert forward == -backward
    assert not forward.is_zero()


@pytest.mark.parametrize("text, kind", [("f4(a,b,c,d)", PLAIN), ("tortkara(a,b,c,d)", LIE), ("[a,{b,c}]*d", PLAIN)])
def test_expand_is_idempotent(text, kind):
    once = freeterm.expand(text, kind)
    assert freeterm.expand(once, kind) == once
    assert freeterm.expand(freeterm.expand(text, kind)) == freeterm.expand(text)


@settings(deadline=None)
@given(st.sampled_from(["rcom", "f4", "f4p", "s13", "cyc4", "tortkara", "f5plus"]), st.data())
def test_multilinearity_is_preserved(name, data):
    p = freeterm.builtin(name)
    assert p.is_multilinear()
    sigma = data.draw(st.permutations(list(range(1, p.arity + 1))))
    moved = p.permute(tuple(sigma))
    assert moved.is_multilinear()
    plain = moved.to_plain()
    assert plain.is_multilinear()
    for rule in ("rcomSort", "commSort", "anticommSort"):
        assert freeterm.normal_form(plain, rule).is_multilinear()


@given(st.permutations([1, 2, 3, 4]), st.permutations([1, 2, 3, 4]))
def test_permutations_compose(s, t):
    f4 = freeterm.builtin("f4")
    composed = tuple(t[s[i] - 1] for i in range(4))
    assert f4.permute(s).permute(t) == f4.permute(composed)
