"""Identity DSL: grammar and expression trees.

A source is either one bare expression or a sequence of definitions
``name(x,y,...) := expr``; the last definition is the target. Products are
binary, so ``a*b*c`` is rejected and must be written ``(a*b)*c``::

    expr  := ["+"|"-"] prod (("+"|"-") prod)*
    prod  := [RATIONAL ["*"]] atom ["*" atom]
    atom  := VAR | "(" expr ")" | "[" expr "," expr "]" | "{" expr "," expr "}"
           | NAME "(" expr ("," expr)* ")"

``[x,y]`` is the Lie commutator, ``{x,y}`` the Jordan product and ``*`` the
underlying product. Everything after ``#`` on a line is a comment.
"""

# Global imports
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Tuple, Union

# 3rd party imports
import pyparsing as pp
from loguru import logger

# Local imports
from rbcommon import ArityError, DslSyntaxError, UnknownMacroError

pp.ParserElement.enable_packrat()


# =============================================================================
@dataclass(frozen=True)
class Ref:
    """Variable occurrence."""

    name: str


# =============================================================================
@dataclass(frozen=True)
class Op:
    """Binary product node; ``op`` is ``*``, ``[`` or ``{``."""

    op: str
    left: "Node"
    right: "Node"


# =============================================================================
@dataclass(frozen=True)
class Call:
    """Macro application. Position is kept for error messages only."""

    name: str
    args: Tuple["Node", ...]
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)


# =============================================================================
@dataclass(frozen=True)
class LinComb:
    """Rational linear combination of nodes."""

    terms: Tuple[Tuple[Fraction, "Node"], ...]


Node = Union[Ref, Op, Call, LinComb]


# =============================================================================
@dataclass(frozen=True)
class Definition:
    name: str
    params: Tuple[str, ...]
    body: Node


# =============================================================================
@dataclass(frozen=True)
class MacroExpr:
    """A parsed identity: expression tree plus its variables in index order.

    ``macros`` holds the definitions that preceded the target in a
    multi-definition source; they shadow the builtin table.
    """

    body: Node
    variables: Tuple[str, ...]
    macros: Mapping[str, Definition] = field(default_factory=dict, compare=False)
    name: Optional[str] = None

    @property
    def arity(self) -> int:
        return len(self.variables)


# =============================================================================
@dataclass(frozen=True)
class _Scaled:
    coef: Fraction
    node: Node


# -----------------------------------------------------------------------------
def _prod_action(toks):
    items = list(toks)
    coef = Fraction(1)
    if isinstance(items[0], str):
        coef = Fraction(items.pop(0))
    node = items[0] if len(items) == 1 else Op("*", items[0], items[1])
    return _Scaled(coef, node)


# -----------------------------------------------------------------------------
def _expr_action(toks):
    items = list(toks)
    terms = []
    sign = 1
    for item in items:
        if isinstance(item, str):
            sign = -1 if item == "-" else 1
            continue
        terms.append((sign * item.coef, item.node))
        sign = 1
    if len(terms) == 1 and terms[0][0] == 1:
        return terms[0][1]
    return LinComb(tuple(terms))


# -----------------------------------------------------------------------------
def _call_action(s, loc, toks):
    return Call(toks[0], tuple(toks[1]), pp.lineno(loc, s), pp.col(loc, s))


# -----------------------------------------------------------------------------
def _build_grammar():
    """Assemble the pyparsing grammar for a whole source."""
    ident = pp.Word(pp.alphas + "_", pp.alphanums + "_")
    rational = pp.Regex(r"\d+(/\d+)?")
    lpar, rpar, lbrk, rbrk, lbrc, rbrc, comma, star = map(pp.Suppress, "()[]{},*")
    sign = pp.one_of("+ -")

    expr = pp.Forward()
    call = (ident + lpar + pp.Group(pp.DelimitedList(expr)) + rpar).set_parse_action(_call_action)
    var = ident.copy().set_parse_action(lambda toks: Ref(toks[0]))
    lie = (lbrk + expr + comma + expr + rbrk).set_parse_action(lambda toks: Op("[", toks[0], toks[1]))
    jor = (lbrc + expr + comma + expr + rbrc).set_parse_action(lambda toks: Op("{", toks[0], toks[1]))
    paren = lpar + expr + rpar
    atom = call | lie | jor | paren | var
    prod = (pp.Optional(rational + pp.Optional(star)) + atom + pp.Optional(star + atom)).set_parse_action(
        _prod_action
    )
    expr <<= (pp.Optional(sign) + prod + pp.ZeroOrMore(sign + prod)).set_parse_action(_expr_action)

    definition = (
        ident + lpar + pp.Group(pp.DelimitedList(ident)) + rpar
        + pp.Suppress(":=") + expr + pp.Optional(pp.Suppress(";"))
    ).set_parse_action(lambda toks: Definition(toks[0], tuple(toks[1]), toks[2]))
    program = pp.OneOrMore(definition) | expr
    program.ignore(pp.python_style_comment)
    return program


_PROGRAM = _build_grammar()


# -----------------------------------------------------------------------------
def variables_in_order(node: Node) -> List[str]:
    """Variable names in first-appearance order."""
    seen: Dict[str, None] = {}

    def walk(item):
        if isinstance(item, Ref):
            seen.setdefault(item.name, None)
        elif isinstance(item, Op):
            walk(item.left)
            walk(item.right)
        elif isinstance(item, Call):
            for arg in item.args:
                walk(arg)
        elif isinstance(item, LinComb):
            for _, sub in item.terms:
                walk(sub)

    walk(node)
    return list(seen)


# -----------------------------------------------------------------------------
def _check_calls(node: Node, table: Mapping[str, Definition]) -> None:
    """Raise for unknown macro names or wrong argument counts."""
    if isinstance(node, Op):
        _check_calls(node.left, table)
        _check_calls(node.right, table)
    elif isinstance(node, LinComb):
        for _, sub in node.terms:
            _check_calls(sub, table)
    elif isinstance(node, Call):
        if node.name not in table:
            raise UnknownMacroError(f"unknown macro {node.name!r} (line {node.line}, col {node.col})")
        expected = len(table[node.name].params)
        if len(node.args) != expected:
            raise ArityError(
                f"{node.name} takes {expected} arguments, got {len(node.args)} (line {node.line}, col {node.col})"
            )
        for arg in node.args:
            _check_calls(arg, table)


# -----------------------------------------------------------------------------
def parse(text: str, table: Optional[Mapping[str, Definition]] = None) -> MacroExpr:
    """Parse DSL text into a :class:`MacroExpr`.

    :param text: a bare expression or one or more definitions
    :param table: known macros (the builtin table when called via freeterm)
    :raises DslSyntaxError: malformed text, with line and column
    :raises UnknownMacroError: call of an undefined name
    :raises ArityError: call with the wrong number of arguments
    """
    try:
        result = _PROGRAM.parse_string(text, parse_all=True)
    except pp.ParseBaseException as exc:
        raise DslSyntaxError(exc.msg, exc.lineno, exc.col) from exc

    known: Dict[str, Definition] = dict(table or {})
    local: Dict[str, Definition] = {}
    items = list(result)
    if isinstance(items[0], Definition):
        for definition in items:
            _check_calls(definition.body, known)
            unbound = set(variables_in_order(definition.body)) - set(definition.params)
            if unbound:
                raise DslSyntaxError(f"unbound variables {sorted(unbound)} in {definition.name}")
            known[definition.name] = definition
            local[definition.name] = definition
        target = items[-1]
        del local[target.name]
        logger.debug(f"parsed {len(items)} definitions, target {target.name}")
        return MacroExpr(target.body, target.params, local, target.name)

    body = items[0]
    _check_calls(body, known)
    return MacroExpr(body, tuple(variables_in_order(body)))


# -----------------------------------------------------------------------------
def parse_definitions(text: str, table: Optional[Mapping[str, Definition]] = None) -> Dict[str, Definition]:
    """Parse a definition file and return every definition, in order."""
    try:
        result = _PROGRAM.parse_string(text, parse_all=True)
    except pp.ParseBaseException as exc:
        raise DslSyntaxError(exc.msg, exc.lineno, exc.col) from exc
    known: Dict[str, Definition] = dict(table or {})
    found: Dict[str, Definition] = {}
    for definition in result:
        if not isinstance(definition, Definition):
            raise DslSyntaxError("expected a definition")
        _check_calls(definition.body, known)
        known[definition.name] = definition
        found[definition.name] = definition
    return found


# -----------------------------------------------------------------------------
def operators(node: Node, table: Mapping[str, Definition]) -> set:
    """Set of product tokens used by node, following macro bodies."""
    found = set()

    def walk(item):
        if isinstance(item, Op):
            found.add(item.op)
            walk(item.left)
            walk(item.right)
        elif isinstance(item, LinComb):
            for _, sub in item.terms:
                walk(sub)
        elif isinstance(item, Call):
            walk(table[item.name].body)
            for arg in item.args:
                walk(arg)

    walk(node)
    return found
