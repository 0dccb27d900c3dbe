import itertools
import math
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

import freeterm
import models
from models import EpsModel, EpsSpec, PolyModel, PolyMulSpec, SeqModel
from qexact import ONE, X, QPoly
from rbcommon import CarrierError, ModelSpecError

vectors = st.lists(st.integers(-4, 4), min_size=5, max_size=5).map(lambda v: tuple(Fraction(x) for x in v))


def monomials(*exps):
    return [QPoly.monomial(e) for e in exps]


def test_seq_model():
    seq = SeqModel(3)
    assert seq.rbo((1, 2, 3)) == (1, 3, 6)
    assert seq.product((1, 1, 1), (1, 2, 3)) == (1, 3, 6)
    assert seq.weight == -1
    assert seq.spec == "seq:N=3"
    with pytest.raises(ModelSpecError):
        SeqModel(0)


def test_parse_model_specs():
    assert models.parse_model_spec("seq:N=6").spec == "seq:N=6"
    assert models.parse_model_spec("poly:mul=star,k=2,n=0").mul == PolyMulSpec("star", 2, 0)
    assert models.parse_model_spec("poly:mul=circ3").mul == PolyMulSpec("star", 2, 1)
    assert models.parse_model_spec("poly:mul=bracket").mul.n == 1
    assert models.parse_model_spec("eps:m=3,values=1|1/2").eps_spec.eps == (1, Fraction(1, 2))
    assert models.parse_model_spec("eps:m=6,seed=7").spec == "eps:m=6,seed=7"
    assert models.parse_model_spec("seq:N=4,eps=1/9").weight == Fraction(-1, 9)


@pytest.mark.parametrize(
    "text",
    ["foo:x=1", "poly:k=2", "poly:mul=star,k=2,q=1", "poly:mul=nope", "poly:mul=bracket,n=0", "seq:N=x"],
)
def test_parse_model_spec_rejects(text):
    with pytest.raises(ModelSpecError):
        models.parse_model_spec(text)


def test_catalog_lists_every_selector():
    specs = [spec for spec, _ in models.model_catalog()]
    for name in models.SELECTORS:
        assert any(spec.startswith(f"poly:mul={name}") for spec in specs)
    assert "poly:mul=circ2" in specs


def test_integration_products():
    integral = PolyModel(PolyMulSpec("int"))
    assert integral.product(ONE, X) == QPoly.monomial(2, Fraction(1, 2))
    double = PolyModel(PolyMulSpec("double"))
    assert double.product(ONE, ONE) == QPoly.monomial(2)


@pytest.mark.parametrize("n, value", [(1, Fraction(-1, 20)), (2, Fraction(-1, 60)), (3, Fraction(-11, 2100))])
def test_bracket_values(n, value):
    bracket = PolyModel(PolyMulSpec("bracket", n=n))
    assert bracket.product(QPoly.monomial(3), QPoly.monomial(4)) == QPoly.monomial(7 + n, value)


@pytest.mark.parametrize("i, j", [(1, 1), (2, 5), (3, 3), (4, 1), (8, 8)])
def test_diamond_on_divided_powers(i, j):
    diamond = PolyModel(PolyMulSpec("diamond"))
    e = QPoly.divided_power
    assert diamond.product(e(i), e(j)) == math.comb(i + j, i - 1) * e(i + j)
    forms = models.diamond_closed_forms(i, j)
    lie = models.eval_poly(freeterm.expand("[a,b]", freeterm.LIE), diamond, (e(i), e(j)))
    jordan = models.eval_poly(freeterm.expand("{a,b}", freeterm.JORDAN), diamond, (e(i), e(j)))
    assert lie == forms["lie"] * e(i + j)
    assert jordan == forms["jordan"] * e(i + j)


def test_f5plus_on_star20():
    star20 = models.parse_model_spec("poly:mul=star,k=2,n=0")
    value = models.eval_poly(freeterm.builtin("f5plus"), star20, monomials(0, 1, 2, 3, 4))
    assert value == QPoly.monomial(18, Fraction(-4537, 6107270400))


def test_eval_poly_accepts_mappings():
    seq = SeqModel(3)
    p = freeterm.expand("a*b")
    assert models.eval_poly(p, seq, {1: (1, 1, 1), 2: (1, 2, 3)}) == (1, 3, 6)
    with pytest.raises(CarrierError):
        models.eval_poly(p, seq, {1: (1, 1, 1)})
    with pytest.raises(CarrierError):
        models.eval_poly(p, seq, [(1, 1, 1)])


def test_eps_algebra():
    spec = EpsSpec(3, (2, 5))
    model = EpsModel(spec)
    e1, e2, e3 = (model.basis(i) for i in (1, 2, 3))
    assert model.product(e3, e1) == (0, 0, 2)
    assert model.product(e3, e2) == (0, 0, 5)
    assert model.product(e1, e3) == (0, 0, 0)
    assert models.eps_bracket(spec, 1, 3) == (-2, 3)
    assert models.eps_jordan(spec, 2, 2) == (0, 2)
    with pytest.raises(ModelSpecError):
        EpsSpec(3, (1,))


def test_eps_g_coefficient_matches_f4():
    spec = EpsSpec.random(4, seed=3)
    model = EpsModel(spec)
    f4 = freeterm.builtin("f4")
    for i, j, s, k in [(4, 1, 2, 3), (3, 2, 1, 1), (4, 3, 2, 1)]:
        value = models.eval_poly(f4, model, [model.basis(t) for t in (i, j, s, k)])
        expected = [Fraction(0)] * 4
        expected[i - 1] = models.g_coefficient(spec, i, j, s, k)
        assert value == tuple(expected)


@given(vectors, vectors)
def test_prefix_sums_are_rota_baxter(a, b):
    seq = SeqModel(5)
    assert seq.is_zero(models.baxter_defect(seq, a, b))


def test_rbo_law_checks():
    seq = SeqModel(5)
    rng = random.Random(1)
    pairs = [(seq.random_value(rng, 3), seq.random_value(rng, 3)) for _ in range(20)]
    assert models.rbo_law_check(seq, pairs).holds
    assert not models.rbo_law_check(seq, pairs, weight=1).holds
    integral = PolyModel(PolyMulSpec("int"))
    assert models.rbo_law_check(integral, [(X, X), (ONE, QPoly.monomial(3))]).holds
    with pytest.raises(CarrierError):
        models.rbo_law_check(PolyModel(PolyMulSpec("diamond")), [(X, X)])


@pytest.mark.parametrize("eps", [1, -1, 4, Fraction(1, 9)])
def test_rescaled_operator(eps):
    scaled = models.rescale_rbo(SeqModel(4), eps)
    assert scaled.weight == -Fraction(eps)
    rng = random.Random(5)
    pairs = [(scaled.random_value(rng, 3), scaled.random_value(rng, 3)) for _ in range(10)]
    assert models.rbo_law_check(scaled, pairs).holds


def test_rescale_rejects():
    with pytest.raises(ModelSpecError):
        models.rescale_rbo(SeqModel(4), 0)
    with pytest.raises(ModelSpecError):
        models.rescale_rbo(PolyModel(PolyMulSpec("int")), 2)


@given(vectors, vectors, vectors)
def test_jordan_associator_law(a, b, c):
    seq = SeqModel(5)
    assert seq.is_zero(models.jordan_associator_law(seq, a, b, c))


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_derivative_is_a_homomorphism(n):
    for i in range(1, 4):
        for j in range(1, 4):
            assert models.derivative_homomorphism(n, QPoly.monomial(i), QPoly.monomial(j)).is_zero()


def test_g_coefficient_vanishes_and_is_skew():
    spec = EpsSpec.random(5, seed=11)
    for i, j, s, k in itertools.product(range(1, 6), repeat=4):
        assert models.g_coefficient(spec, i, j, s, k) == 0
        assert models.g_coefficient(spec, i, j, s, k) == -models.g_coefficient(spec, i, s, j, k)


@given(st.permutations([1, 2, 3, 4]), vectors, vectors, vectors, vectors)
def test_permuting_variables_permutes_arguments(sigma, a, b, c, d):
    seq = SeqModel(5)
    values = (a, b, c, d)
    p = freeterm.expand("(a*b)*(c*d) - 2 a*((b*c)*d)")
    moved = models.eval_poly(p.permute(sigma), seq, values)
    assert moved == models.eval_poly(p, seq, tuple(values[s - 1] for s in sigma))


@given(vectors, vectors, vectors, st.fractions(max_denominator=5))
def test_seq_product_is_bilinear_and_causal(a, b, c, r):
    seq = SeqModel(5)
    left = seq.product(seq.add(a, seq.scale(r, c)), b)
    assert left == seq.add(seq.product(a, b), seq.scale(r, seq.product(c, b)))
    assert SeqModel(3).product(a[:3], b[:3]) == seq.product(a, b)[:3]


def star_triple(k, n, i, j, s):
    """Coefficient of (x^i * x^j) * x^s for the k,n star product."""
    top = math.comb(i + j + s + 2 * k + 3 * n, n)
    m = k + n
    return Fraction(top, math.factorial(m) ** 2 * math.comb(i + n, n) * math.comb(s + m, m) * math.comb(j + m, m))


@pytest.mark.parametrize("k, n", list(itertools.product(range(3), repeat=2)))
def test_star_triple_product_closed_form(k, n):
    star = PolyModel(PolyMulSpec("star", k, n))
    for i, j, s in itertools.product(range(4), repeat=3):
        xi, xj, xs = monomials(i, j, s)
        value = star.product(star.product(xi, xj), xs)
        assert value == QPoly.monomial(2 * (k + n) + i + j + s, star_triple(k, n, i, j, s))
        assert value == star.product(star.product(xi, xs), xj)


@pytest.mark.parametrize("n", [0, 1, 2, 3, 4])
def test_bracket_is_commutator_of_zinbiel_star(n):
    bracket, star = PolyModel(PolyMulSpec("bracket", n=n + 1)), PolyModel(PolyMulSpec("star", 1, n))
    for a, b in itertools.product(monomials(0, 1, 2, 3) + [QPoly.parse("1 - 2*x + 1/3*x^2")], repeat=2):
        assert bracket.product(a, b) == star.product(a, b) - star.product(b, a)


def test_jordan_product_of_m1():
    m1 = PolyModel(PolyMulSpec("meps", eps=1))
    jordan = freeterm.expand("{a,b}", freeterm.JORDAN)
    for i, j in itertools.product(range(6), repeat=2):
        value = models.eval_poly(jordan, m1, monomials(i, j))
        coef = Fraction((i + j + 3) * (i + j + 4), (i + 1) * (i + 2) * (j + 1) * (j + 2))
        assert value == QPoly.monomial(i + j + 2, coef)
