import warnings
from fractions import Fraction

import pytest

import dsl
from dsl import Call, LinComb, Op, Ref
from rbcommon import ArityError, DslSyntaxError, UnknownMacroError


def test_bare_expression():
    e = dsl.parse("(a*b)*c - (a*c)*b")
    assert e.variables == ("a", "b", "c")
    assert e.arity == 3
    assert e.name is None
    assert e.body == LinComb(
        (
            (Fraction(1), Op("*", Op("*", Ref("a"), Ref("b")), Ref("c"))),
            (Fraction(-1), Op("*", Op("*", Ref("a"), Ref("c")), Ref("b"))),
        )
    )


def test_brackets_and_coefficients():
    e = dsl.parse("2[x,y] - 1/3 {y,x}")
    assert e.variables == ("x", "y")
    assert e.body.terms[0] == (Fraction(2), Op("[", Ref("x"), Ref("y")))
    assert e.body.terms[1] == (Fraction(-1, 3), Op("{", Ref("y"), Ref("x")))


def test_single_term_is_not_wrapped():
    assert dsl.parse("a*b").body == Op("*", Ref("a"), Ref("b"))


def test_products_are_binary():
    with pytest.raises(DslSyntaxError) as info:
        dsl.parse("a*b*c")
    assert info.value.line == 1


def test_error_position_on_second_line():
    with pytest.raises(DslSyntaxError) as info:
        dsl.parse("g(x,y) := x*y\nh(a,b) := g(a,b) +")
    assert info.value.line == 2


def test_definitions_last_is_target():
    source = """
    # helper first
    g(x,y) := x*y - y*x
    h(a,b,c) := g(a,b)*c
    """
    e = dsl.parse(source)
    assert e.name == "h"
    assert e.variables == ("a", "b", "c")
    assert set(e.macros) == {"g"}
    assert isinstance(e.body, Op)
    assert e.body.left == Call("g", (Ref("a"), Ref("b")))


def test_unknown_macro():
    with pytest.raises(UnknownMacroError):
        dsl.parse("nope(a,b)")


def test_wrong_argument_count():
    table = dsl.parse_definitions("g(x,y) := x*y")
    with pytest.raises(ArityError):
        dsl.parse("g(a,b,c)", table)


def test_unbound_variable_in_definition():
    with pytest.raises(DslSyntaxError):
        dsl.parse("g(x,y) := x*z")


def test_parse_definitions_keeps_order():
    table = dsl.parse_definitions("p(x,y) := x*y\nq(x,y,z) := p(x,y)*z")
    assert list(table) == ["p", "q"]
    assert table["q"].params == ("x", "y", "z")


def test_parse_definitions_rejects_bare_expression():
    with pytest.raises(DslSyntaxError):
        dsl.parse_definitions("a*b")


def test_operators_follow_macros():
    table = dsl.parse_definitions("c(x,y) := [x,y]")
    e = dsl.parse("{c(a,b),d}", table)
    assert dsl.operators(e.body, table) == {"[", "{"}
    assert dsl.variables_in_order(e.body) == ["a", "b", "d"]


def test_grammar_builds_without_deprecation_warnings():
    with warnings.catch_warnings():
        warnings.simplefilter("error", DeprecationWarning)
        program = dsl._build_grammar()
        program.parse_string("r(a,b,c) := rcom(a,b,c) + rcom(a,c,b)", parse_all=True)
