import csv
import io
from fractions import Fraction

import pytest

import freeterm
import identities
import idspace
import verify
from freeterm import LIE, FreePoly, Mul, Var
from models import SeqModel
from rbcommon import DegreeError, RbidentError
from repro import COMPONENT3_ROW1, DEG4_RELATIONS, TABLE1_ROWS
from verify import SamplingPlan


@pytest.fixture(scope="module")
def lie4():
    return idspace.enumerate_basis(4, "anticomm")


@pytest.fixture(scope="module")
def lie_space(lie4):
    return idspace.identity_space(lie4, SeqModel(6), seed=11)


@pytest.mark.parametrize(
    "degree, symmetry, size",
    [(3, "none", 12), (4, "none", 120), (4, "anticomm", 15), (4, "rcomReduced", 64), (5, "comm", 105)],
)
def test_basis_sizes(degree, symmetry, size):
    assert len(idspace.enumerate_basis(degree, symmetry)) == size


@pytest.mark.parametrize("degree", [0, 7])
def test_basis_degree_range(degree):
    with pytest.raises(DegreeError):
        idspace.enumerate_basis(degree)


def test_unknown_symmetry():
    with pytest.raises(RbidentError):
        idspace.enumerate_basis(3, "sorted")


def test_table1_rows(lie4):
    matrix = idspace.build_matrix(lie4, SeqModel(4), idspace.TABLE1_SAMPLES, coordinates=[4])
    assert matrix.shape == (12, 15)
    assert [tuple(int(x) for x in row) for row in matrix.rows] == [tuple(row) for row in TABLE1_ROWS]
    third = idspace.build_matrix(lie4, SeqModel(4), idspace.TABLE1_SAMPLES[:1], coordinates=[3])
    assert third.rows[0] == tuple(Fraction(x) for x in COMPONENT3_ROW1)


def test_zero_sample_gives_zero_rows(lie4):
    zero = (0, 0, 0, 0)
    matrix = idspace.build_matrix(lie4, SeqModel(4), [(zero,) * 4])
    assert matrix.shape == (4, 15)
    assert not any(x for row in matrix.rows for x in row)


def test_table1_kernel(lie4):
    matrix = idspace.build_matrix(lie4, SeqModel(4), idspace.TABLE1_SAMPLES, coordinates=[4])
    kernel = idspace.nullspace(matrix)
    assert kernel.rank == 12
    assert kernel.free == (0, 1, 3)
    assert tuple(kernel.relations_text()) == DEG4_RELATIONS
    for vector in kernel.vectors:
        for row in matrix.rows:
            assert sum(a * b for a, b in zip(row, vector)) == 0
    assert kernel.to_csv(matrix.columns).splitlines()[1].startswith("free1,1,0,-1")


def test_trivial_kernels():
    identity = [[Fraction(int(i == j)) for j in range(3)] for i in range(3)]
    assert idspace.nullspace(identity).dimension == 0
    zero = idspace.nullspace([[Fraction(0)] * 5])
    assert zero.dimension == 5
    assert zero.rank == 0


def test_identity_space_of_lie_words(lie_space):
    assert lie_space.dimension == 3
    assert lie_space.kernel.rank == 12
    assert tuple(lie_space.kernel.relations_text()) == DEG4_RELATIONS
    g1 = freeterm.builtin("g_lie4_1")
    assert lie_space.contains(g1)
    assert not lie_space.contains(freeterm.expand("[[[a,b],c],d]", LIE))
    assert lie_space.to_json()["free"] == [1, 2, 4]


def test_kernel_agrees_with_check_identity(lie_space):
    seq = SeqModel(6)
    plan = SamplingPlan.random(50, seed=7)
    for p in lie_space.identities():
        assert verify.check_identity(p, seq, plan).holds
    outside = freeterm.expand("[[[a,b],c],d]", LIE)
    assert not lie_space.contains(outside)
    assert not verify.check_identity(outside, seq, plan).holds


def test_evaluation_matrix_csv(lie4):
    matrix = idspace.build_matrix(lie4, SeqModel(4), idspace.TABLE1_SAMPLES[:1], coordinates=[4])
    header, row = csv.reader(io.StringIO(matrix.to_csv()))
    assert header[0] == "row"
    assert header[1:] == lie4.labels()
    assert len(header) == 16
    assert row == ["s1[4]"] + [str(x) for x in TABLE1_ROWS[0]]


def test_permutation_consequences():
    tortkara = freeterm.builtin("tortkara")
    span = idspace.consequence_span(tortkara, 4, "anticomm", "tortkara")
    assert all(c.label.startswith("tortkara(") for c in span)
    assert idspace.consequence_span(FreePoly.zero(4, LIE), 4, "anticomm") == []
    with pytest.raises(DegreeError):
        idspace.consequence_span(tortkara, 6, "anticomm")


def test_f4_permutations_modulo_rcom():
    span = idspace.consequence_span(freeterm.builtin("f4"), 4, "rcomReduced", "f4")
    assert idspace.span_rank(span) == 12


def test_rcom_lifts_to_degree_four():
    span = idspace.consequence_span(freeterm.builtin("rcom"), 4, "none", "rcom")
    assert any(c.label.startswith("(d*rcom(") or c.label.startswith("(a*rcom(") for c in span)
    assert all(c.poly.arity == 4 for c in span)


@pytest.mark.parametrize(
    "i, stated",
    [
        (1, "tortkara(a,c,b,d) - tortkara(b,a,d,c)"),
        (2, "tortkara(b,a,d,c)"),
        (3, "tortkara(c,a,d,b)"),
    ],
)
def test_lie_generators_are_tortkara_instances(i, stated):
    assert identities.LIE4_DECOMPOSITIONS[i] == stated
    target = freeterm.builtin(f"g_lie4_{i}")
    combination = freeterm.combination(stated, 4, LIE)
    status, difference = idspace.verify_decomposition(target, combination, "anticomm")
    assert status == "exact"
    assert difference.is_zero()


@pytest.mark.parametrize("i", [1, 2, 3])
def test_solved_lie_combinations_are_exact(i):
    span = idspace.consequence_span(freeterm.builtin("tortkara"), 4, "anticomm", "tortkara")
    target = freeterm.builtin(f"g_lie4_{i}")
    found = idspace.decompose(target, span, symmetry="anticomm")
    assert found.exact
    rebuilt = freeterm.combination(found.to_dsl(), 4, LIE)
    assert idspace.verify_decomposition(target, rebuilt, "anticomm")[0] == "exact"


def test_printed_lie_combinations_are_shifted():
    printed, actual = identities.LIE4_PRINTED, identities.LIE4_DECOMPOSITIONS
    assert [printed[i] for i in (1, 2, 3)] == [actual[3], actual[1], actual[2]]
    for i, text in printed.items():
        target = freeterm.builtin(f"g_lie4_{i}")
        assert idspace.verify_decomposition(target, freeterm.combination(text, 4, LIE), "anticomm")[0] == "fails"


def test_decompose_trivial_and_outside():
    ab = FreePoly.from_term(Mul(Var(1), Var(2)))
    found = idspace.decompose(ab, [idspace.Consequence("a*b", ab)])
    assert found.coefficients == (("a*b", Fraction(1)),)
    outside = idspace.decompose(FreePoly.from_term(Mul(Var(2), Var(1))), [idspace.Consequence("a*b", ab)])
    assert isinstance(outside, idspace.NotInSpan)
    assert outside.to_json()["span_rank"] == 1


def test_decompose_modulo_kernel(lie_space):
    g1 = freeterm.builtin("g_lie4_1")
    found = idspace.decompose(g1, [], kernel_context=lie_space, symmetry="anticomm")
    assert isinstance(found, idspace.Decomposition)
    assert not found.exact
    assert found.to_json()["status"] == "modulo kernel"


def test_symmetry_consequences():
    comm = idspace.symmetry_consequences(2, "comm")
    assert [c.poly for c in comm] == [freeterm.expand("a*b - b*a")]
    with pytest.raises(RbidentError):
        idspace.symmetry_consequences(2, "none")


def test_in_span_matches_decompose(lie4):
    span = idspace.consequence_span(freeterm.builtin("tortkara"), 4, "anticomm", "tortkara")
    targets = [freeterm.builtin(f"g_lie4_{i}") for i in (1, 2, 3)]
    outside = lie4.as_poly([Fraction(1)] + [Fraction(0)] * (len(lie4) - 1))
    found = idspace.in_span(targets + [outside], span, "anticomm")
    assert found == [True, True, True, False]
    assert isinstance(idspace.decompose(outside, span, symmetry="anticomm"), idspace.NotInSpan)


def test_in_span_of_nothing():
    ab = FreePoly.from_term(Mul(Var(1), Var(2)))
    assert idspace.in_span([ab], []) == [False]
    assert idspace.in_span([ab - ab], []) == [True]


def test_vanishing_on_the_kernel(lie_space):
    found = lie_space.identities()
    outside = lie_space.basis.as_poly([Fraction(1)] + [Fraction(0)] * (len(lie_space.basis) - 1))
    assert lie_space.contains_all(found + [outside]) == [True] * len(found) + [False]
    assert lie_space.contains(found[0] + found[1])
    sampled = idspace.build_matrix(lie_space.basis, SeqModel(4), idspace.TABLE1_SAMPLES)
    assert idspace.vanishing(sampled, lie_space.basis, [outside]) == [False]
