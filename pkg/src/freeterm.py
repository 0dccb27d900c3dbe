"""Free nonassociative terms, multilinear polynomials and their normal forms.

A :class:`Term` is a binary tree over the variables ``Var(1), Var(2), ...``.
A :class:`FreePoly` is a finite rational combination of terms together with
a word kind that says what its product denotes:

* ``plain``  the underlying product ``a*b``
* ``lie``    the commutator ``[a,b]``
* ``jordan`` the Jordan product ``{a,b}``

Lie and Jordan polynomials are compact notations for plain ones;
:meth:`FreePoly.to_plain` rewrites them. Identities are written in the DSL of
:mod:`dsl`; the builtin macros live in :mod:`identities`.
"""

# Global imports
import collections
import functools
import itertools
import random
import types
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

# 3rd party imports
from loguru import logger

# Local imports
import dsl
import identities
import qexact
from rbcommon import ArityError, KindError, RewriteError, UnknownMacroError

PLAIN = "plain"
LIE = "lie"
JORDAN = "jordan"
KINDS = (PLAIN, LIE, JORDAN)

_KIND_TOKEN = {LIE: "[", JORDAN: "{"}


# =============================================================================
@dataclass(frozen=True)
class Var:
    """Variable leaf, 1-based index."""

    index: int

    degree = 1

    @property
    def leftmost(self) -> int:
        return self.index

    @property
    def leaves(self) -> Tuple[int, ...]:
        return (self.index,)

    @property
    def key(self) -> tuple:
        return (-1, self.index)


# =============================================================================
@dataclass(frozen=True)
class Mul:
    """Binary product node."""

    left: "Term"
    right: "Term"

    @functools.cached_property
    def degree(self) -> int:
        return self.left.degree + self.right.degree

    @functools.cached_property
    def leftmost(self) -> int:
        return self.left.leftmost

    @functools.cached_property
    def leaves(self) -> Tuple[int, ...]:
        return self.left.leaves + self.right.leaves

    @functools.cached_property
    def key(self) -> tuple:
        """Term order: higher degree first, then smaller leftmost leaf, then children."""
        return (-self.degree, self.leftmost, self.left.key, self.right.key)


Term = Union[Var, Mul]
Path = Tuple[int, ...]


# -----------------------------------------------------------------------------
def term_key(term: Term) -> tuple:
    return term.key


# -----------------------------------------------------------------------------
def var_name(index: int, names: Optional[Sequence[str]] = None) -> str:
    """Display name of variable index: a, b, c, ... then x27, x28, ..."""
    if names is not None:
        return names[index - 1]
    if index <= len(identities.LETTERS):
        return identities.LETTERS[index - 1]
    return f"x{index}"


# -----------------------------------------------------------------------------
def render(term: Term, kind: str = PLAIN, names: Optional[Sequence[str]] = None) -> str:
    """DSL text of a single term written as a word of the given kind."""
    if isinstance(term, Var):
        return var_name(term.index, names)
    left = render(term.left, kind, names)
    right = render(term.right, kind, names)
    if kind == LIE:
        return f"[{left},{right}]"
    if kind == JORDAN:
        return f"{{{left},{right}}}"
    if isinstance(term.left, Mul):
        left = f"({left})"
    if isinstance(term.right, Mul):
        right = f"({right})"
    return f"{left}*{right}"


# -----------------------------------------------------------------------------
def relabel(term: Term, sigma: Sequence[int]) -> Term:
    """Replace every leaf i by sigma[i-1]."""
    if isinstance(term, Var):
        return Var(sigma[term.index - 1])
    return Mul(relabel(term.left, sigma), relabel(term.right, sigma))


# -----------------------------------------------------------------------------
def spine(term: Term) -> Tuple[Var, List[Term]]:
    """Split ((h*m1)*m2)...*mk into the head leaf h and the factors m1..mk."""
    factors = []
    while isinstance(term, Mul):
        factors.append(term.right)
        term = term.left
    return term, factors[::-1]


# -----------------------------------------------------------------------------
def from_spine(head: Term, factors: Sequence[Term]) -> Term:
    for factor in factors:
        head = Mul(head, factor)
    return head


# -----------------------------------------------------------------------------
def positions(term: Term, path: Path = ()) -> Iterator[Path]:
    """Paths (0 = left, 1 = right) of all product nodes, children before parents."""
    if isinstance(term, Mul):
        yield from positions(term.left, path + (0,))
        yield from positions(term.right, path + (1,))
        yield path


# -----------------------------------------------------------------------------
def subterm(term: Term, path: Path) -> Term:
    for step in path:
        term = term.right if step else term.left
    return term


# -----------------------------------------------------------------------------
def replace(term: Term, path: Path, new: Term) -> Term:
    if not path:
        return new
    if path[0]:
        return Mul(term.left, replace(term.right, path[1:], new))
    return Mul(replace(term.left, path[1:], new), term.right)


# -----------------------------------------------------------------------------
@functools.lru_cache(maxsize=None)
def shapes(degree: int) -> Tuple[Term, ...]:
    """All bracketings of Var(1)..Var(degree) in leaf order (Catalan many)."""

    def build(start, count):
        if count == 1:
            yield Var(start)
            return
        for split in range(1, count):
            for left in build(start, split):
                for right in build(start + split, count - split):
                    yield Mul(left, right)

    return tuple(build(1, degree))


# -----------------------------------------------------------------------------
def monomials(degree: int) -> Iterator[Term]:
    """Every multilinear monomial of the given degree, shape by shape."""
    for shape in shapes(degree):
        for perm in itertools.permutations(range(1, degree + 1)):
            yield relabel(shape, perm)


# -----------------------------------------------------------------------------
@functools.lru_cache(maxsize=None)
def _plain_expansion(term: Term, kind: str) -> Tuple[Tuple[Term, int], ...]:
    if isinstance(term, Var):
        return ((term, 1),)
    sign = -1 if kind == LIE else 1
    found: Dict[Term, int] = collections.defaultdict(int)
    for left, lcoef in _plain_expansion(term.left, kind):
        for right, rcoef in _plain_expansion(term.right, kind):
            found[Mul(left, right)] += lcoef * rcoef
            found[Mul(right, left)] += sign * lcoef * rcoef
    return tuple((item, coef) for item, coef in found.items() if coef)


# =============================================================================
class FreePoly:
    """Rational combination of terms; immutable.

    ``arity`` is the declared number of variables, ``kind`` one of
    :data:`KINDS`. Equality compares kind and terms only.
    """

    __slots__ = ("_terms", "arity", "kind")

    def __init__(self, terms: Optional[Mapping[Term, object]] = None, arity: int = 0, kind: str = PLAIN):
        if kind not in KINDS:
            raise KindError(f"unknown word kind {kind!r}")
        self._terms = {term: Fraction(coef) for term, coef in (terms or {}).items() if coef}
        self.arity = arity
        self.kind = kind

    # -------------------------------------------------------------------------
    @classmethod
    def zero(cls, arity: int = 0, kind: str = PLAIN) -> "FreePoly":
        return cls({}, arity, kind)

    @classmethod
    def var(cls, index: int, arity: int = 0, kind: str = PLAIN) -> "FreePoly":
        return cls({Var(index): 1}, max(arity, index), kind)

    @classmethod
    def from_term(cls, term: Term, coef=1, arity: Optional[int] = None, kind: str = PLAIN) -> "FreePoly":
        return cls({term: coef}, max(term.leaves) if arity is None else arity, kind)

    # -------------------------------------------------------------------------
    @property
    def terms(self) -> Mapping[Term, Fraction]:
        return types.MappingProxyType(self._terms)

    def __iter__(self) -> Iterator[Tuple[Term, Fraction]]:
        """Terms with coefficients, in term order."""
        return iter(sorted(self._terms.items(), key=lambda item: item[0].key))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, term: Term) -> Fraction:
        return self._terms.get(term, Fraction(0))

    @property
    def degree(self) -> Optional[int]:
        if not self._terms:
            return None
        return max(term.degree for term in self._terms)

    def is_homogeneous(self) -> bool:
        return len({term.degree for term in self._terms}) <= 1

    def is_multilinear(self) -> bool:
        """Each of the arity variables occurs exactly once in every term."""
        expected = tuple(range(1, self.arity + 1))
        return all(tuple(sorted(term.leaves)) == expected for term in self._terms)

    # -------------------------------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, FreePoly):
            return NotImplemented
        return self.kind == other.kind and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.kind, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"FreePoly({self.to_dsl()!r}, kind={self.kind!r})"

    # -------------------------------------------------------------------------
    def _same_kind(self, other: "FreePoly") -> None:
        if self.kind != other.kind:
            raise KindError(f"cannot combine {self.kind} and {other.kind} words")

    def __add__(self, other: "FreePoly") -> "FreePoly":
        self._same_kind(other)
        found = dict(self._terms)
        for term, coef in other._terms.items():
            found[term] = found.get(term, 0) + coef
        return FreePoly(found, max(self.arity, other.arity), self.kind)

    def __neg__(self) -> "FreePoly":
        return FreePoly({term: -coef for term, coef in self._terms.items()}, self.arity, self.kind)

    def __sub__(self, other: "FreePoly") -> "FreePoly":
        return self + (-other)

    def __mul__(self, scalar) -> "FreePoly":
        if isinstance(scalar, FreePoly):
            return NotImplemented
        scalar = Fraction(scalar)
        return FreePoly({term: scalar * coef for term, coef in self._terms.items()}, self.arity, self.kind)

    __rmul__ = __mul__

    # -------------------------------------------------------------------------
    def multiply(self, other: "FreePoly") -> "FreePoly":
        """Bilinear product of two polynomials of the same kind."""
        self._same_kind(other)
        found: Dict[Term, Fraction] = collections.defaultdict(Fraction)
        for lterm, lcoef in self._terms.items():
            for rterm, rcoef in other._terms.items():
                found[Mul(lterm, rterm)] += lcoef * rcoef
        return FreePoly(found, max(self.arity, other.arity), self.kind)

    # -------------------------------------------------------------------------
    def permute(self, sigma: Sequence[int]) -> "FreePoly":
        """Relabel variable i as sigma[i-1] (1-based images).

        :raises ArityError: sigma is not a permutation of 1..arity
        """
        sigma = tuple(sigma)
        if len(sigma) != self.arity or sorted(sigma) != list(range(1, self.arity + 1)):
            raise ArityError(f"{sigma} is not a permutation of {self.arity} variables")
        return FreePoly({relabel(term, sigma): coef for term, coef in self._terms.items()}, self.arity, self.kind)

    # -------------------------------------------------------------------------
    def substitute(self, mapping: Mapping[int, "FreePoly"], arity: Optional[int] = None) -> "FreePoly":
        """Replace variables by polynomials of the same kind and expand."""

        def image(term):
            if isinstance(term, Var):
                if term.index in mapping:
                    return mapping[term.index]
                return FreePoly.var(term.index, kind=self.kind)
            return image(term.left).multiply(image(term.right))

        result = FreePoly.zero(kind=self.kind)
        for term, coef in self._terms.items():
            result = result + coef * image(term)
        return FreePoly(result.terms, self.arity if arity is None else arity, self.kind)

    # -------------------------------------------------------------------------
    def to_plain(self) -> "FreePoly":
        """Rewrite Lie/Jordan words into plain products."""
        if self.kind == PLAIN:
            return self
        found: Dict[Term, Fraction] = collections.defaultdict(Fraction)
        for term, coef in self._terms.items():
            for plain, sign in _plain_expansion(term, self.kind):
                found[plain] += sign * coef
        return FreePoly(found, self.arity, PLAIN)

    # -------------------------------------------------------------------------
    def to_dsl(self, names: Optional[Sequence[str]] = None) -> str:
        """DSL text that parses back to this polynomial; ``0`` for zero."""
        text = ""
        for term, coef in self:
            body = render(term, self.kind, names)
            if abs(coef) != 1:
                body = f"{qexact.format_rat(abs(coef))} {body}"
            if not text:
                text = f"-{body}" if coef < 0 else body
            else:
                text += f" {'-' if coef < 0 else '+'} {body}"
        return text or "0"


# -----------------------------------------------------------------------------
@functools.lru_cache(maxsize=None)
def macro_table() -> Mapping[str, dsl.Definition]:
    """Builtin macros, parsed once from :mod:`identities`."""
    table = dsl.parse_definitions(identities.BUILTIN_SOURCE)
    logger.debug(f"{len(table)=}")
    return types.MappingProxyType(table)


# -----------------------------------------------------------------------------
def parse(text: str) -> dsl.MacroExpr:
    """Parse DSL text against the builtin macro table."""
    return dsl.parse(text, macro_table())


# -----------------------------------------------------------------------------
def _product(op: str, left: FreePoly, right: FreePoly, kind: str) -> FreePoly:
    if kind == PLAIN:
        product = left.multiply(right)
        if op == "*":
            return product
        swapped = right.multiply(left)
        return product - swapped if op == "[" else product + swapped
    if op == _KIND_TOKEN[kind]:
        return left.multiply(right)
    raise KindError(f"{op!r} products cannot be written as {kind} words")


# -----------------------------------------------------------------------------
def _evaluate(node: dsl.Node, env: Mapping[str, FreePoly], table, kind: str) -> FreePoly:
    if isinstance(node, dsl.Ref):
        return env[node.name]
    if isinstance(node, dsl.Op):
        left = _evaluate(node.left, env, table, kind)
        right = _evaluate(node.right, env, table, kind)
        return _product(node.op, left, right, kind)
    if isinstance(node, dsl.LinComb):
        found: Dict[Term, Fraction] = collections.defaultdict(Fraction)
        arity = 0
        for coef, sub in node.terms:
            value = _evaluate(sub, env, table, kind)
            arity = max(arity, value.arity)
            for term, inner in value.terms.items():
                found[term] += coef * inner
        return FreePoly(found, arity, kind)
    definition = table[node.name]
    args = [_evaluate(arg, env, table, kind) for arg in node.args]
    return _evaluate(definition.body, dict(zip(definition.params, args)), table, kind)


# -----------------------------------------------------------------------------
def expand(e: Union[str, dsl.MacroExpr, FreePoly], kind: str = PLAIN) -> FreePoly:
    """Rewrite macros and brackets into a :class:`FreePoly` of the given kind.

    With ``kind="plain"`` every ``[x,y]`` becomes ``xy - yx`` and every
    ``{x,y}`` becomes ``xy + yx``. With ``lie`` or ``jordan`` the matching
    bracket is kept as the product and any other product is an error.
    A :class:`FreePoly` argument is returned in the requested kind, so
    expansion is idempotent.

    :raises KindError: the expression uses a product the kind cannot express
    """
    if isinstance(e, FreePoly):
        if e.kind == kind:
            return e
        if kind == PLAIN:
            return e.to_plain()
        raise KindError(f"cannot rewrite {e.kind} words as {kind} words")
    if isinstance(e, str):
        e = parse(e)
    table = {**macro_table(), **e.macros}
    env = {name: FreePoly.var(index, e.arity, kind) for index, name in enumerate(e.variables, 1)}
    result = _evaluate(e.body, env, table, kind)
    return FreePoly(result.terms, e.arity, kind)


# -----------------------------------------------------------------------------
def natural_kind(e: Union[str, dsl.MacroExpr]) -> str:
    """Word kind an expression is written in: only ``[]`` is lie, only ``{}`` is jordan."""
    if isinstance(e, str):
        e = parse(e)
    ops = dsl.operators(e.body, {**macro_table(), **e.macros})
    if ops == {"["}:
        return LIE
    if ops == {"{"}:
        return JORDAN
    return PLAIN


# -----------------------------------------------------------------------------
@functools.lru_cache(maxsize=None)
def builtin(name: str, kind: Optional[str] = None) -> FreePoly:
    """Expand a builtin macro over its own parameters, in its natural kind by default.

    :raises UnknownMacroError: no builtin of that name
    """
    table = macro_table()
    if name not in table:
        raise UnknownMacroError(f"unknown identity {name!r}")
    definition = table[name]
    e = dsl.MacroExpr(definition.body, definition.params, {}, name)
    return expand(e, kind or natural_kind(e))


# -----------------------------------------------------------------------------
def combination(text: str, arity: int, kind: str = PLAIN) -> FreePoly:
    """Expand text whose variables are the first arity letters, a = 1, b = 2, ..."""
    params = ",".join(identities.LETTERS[:arity])
    return expand(parse(f"combination({params}) := {text}"), kind)


# -----------------------------------------------------------------------------
def _rcom_step(term: Term):
    if isinstance(term, Mul) and isinstance(term.left, Mul) and term.right.key < term.left.right.key:
        return 1, Mul(Mul(term.left.left, term.right), term.left.right)
    return None


# -----------------------------------------------------------------------------
def _comm_step(term: Term):
    if isinstance(term, Mul) and term.right.key < term.left.key:
        return 1, Mul(term.right, term.left)
    return None


# -----------------------------------------------------------------------------
def _anticomm_step(term: Term):
    if not isinstance(term, Mul):
        return None
    if term.left == term.right:
        return 0, term
    if term.right.key < term.left.key:
        return -1, Mul(term.right, term.left)
    return None


# -----------------------------------------------------------------------------
def _pair(term: Term) -> Optional[Tuple[int, int]]:
    if isinstance(term, Mul) and isinstance(term.left, Var) and isinstance(term.right, Var):
        return term.left.index, term.right.index
    return None


# -----------------------------------------------------------------------------
def _var_times_pair(term: Term) -> bool:
    return isinstance(term, Mul) and isinstance(term.left, Var) and _pair(term.right) is not None


# -----------------------------------------------------------------------------
def _deg5_step(term: Term):
    """The four degree-5 rules, tried in order at the root.

    1. a_j a_i -> a_i a_j for i < j
    2. (a_i a_j)(a_s a_k) -> (a_s a_k)(a_i a_j) for i > s, i < j, s < k
    3. (x(yz))(uv) -> ((yz)x)(uv)
    4. ((x(yz))u)v -> (((yz)x)u)v
    """
    if not isinstance(term, Mul):
        return None
    left, right = term.left, term.right
    pair = _pair(term)
    if pair and pair[0] > pair[1]:
        return 1, Mul(right, left)
    first, second = _pair(left), _pair(right)
    if first and second and first[0] > second[0] and first[0] < first[1] and second[0] < second[1]:
        return 1, Mul(right, left)
    if _var_times_pair(left) and second:
        return 1, Mul(Mul(left.right, left.left), right)
    if isinstance(right, Var) and isinstance(left, Mul) and isinstance(left.right, Var) and _var_times_pair(left.left):
        inner = left.left
        return 1, Mul(Mul(Mul(inner.right, inner.left), left.right), right)
    return None


# -----------------------------------------------------------------------------
@functools.lru_cache(maxsize=None)
def _rcom_normal(term: Term) -> Tuple[int, Term]:
    if isinstance(term, Var):
        return 1, term
    head, factors = spine(term)
    factors = sorted((_rcom_normal(factor)[1] for factor in factors), key=term_key)
    return 1, from_spine(head, factors)


# -----------------------------------------------------------------------------
@functools.lru_cache(maxsize=None)
def _sorted_normal(term: Term, anti: bool) -> Tuple[int, Term]:
    if isinstance(term, Var):
        return 1, term
    lsign, left = _sorted_normal(term.left, anti)
    rsign, right = _sorted_normal(term.right, anti)
    sign = lsign * rsign
    if anti and left == right:
        return 0, term
    if right.key < left.key:
        left, right = right, left
        if anti:
            sign = -sign
    return sign, Mul(left, right)


_STEPS = {
    "rcomSort": _rcom_step,
    "commSort": _comm_step,
    "anticommSort": _anticomm_step,
    "deg5Rules": _deg5_step,
}

_FAST = {
    "rcomSort": _rcom_normal,
    "commSort": lambda term: _sorted_normal(term, False),
    "anticommSort": lambda term: _sorted_normal(term, True),
}


# =============================================================================
@dataclass(frozen=True)
class RewriteSystem:
    """Named rule set acting on single terms.

    Rules rewrite one product node and return ``(sign, term)``; a sign of 0
    means the term vanishes. A rewrite fixes the node it acts on and only
    disturbs its ancestors, so the count of out-of-order nodes, compared
    level by level from the deepest, strictly drops and reduction stops.

    * ``rcomSort``     (u*a)*b -> (u*b)*a when b precedes a
    * ``commSort``     children of every node in term order
    * ``anticommSort`` the same with a sign per swap, u*u -> 0
    * ``deg5Rules``    the four rules of :func:`_deg5_step`, degree 5 only
    """

    name: str

    NAMES = tuple(_STEPS)

    def __post_init__(self):
        if self.name not in _STEPS:
            raise RewriteError(f"unknown rewrite system {self.name!r}, choose from {', '.join(_STEPS)}")

    # -------------------------------------------------------------------------
    def step(self, term: Term):
        """Rewrite at the root; None when no rule applies."""
        return _STEPS[self.name](term)

    def redexes(self, term: Term) -> List[Path]:
        return [path for path in positions(term) if self.step(subterm(term, path)) is not None]

    def apply_at(self, term: Term, path: Path) -> Tuple[int, Term]:
        result = self.step(subterm(term, path))
        if result is None:
            raise RewriteError(f"no {self.name} rule applies at {path}")
        sign, new = result
        if sign == 0:
            return 0, term
        return sign, replace(term, path, new)

    # -------------------------------------------------------------------------
    def reduce(self, term: Term, rng: Optional[random.Random] = None) -> Tuple[int, Term]:
        """Apply rules until none is left.

        :param rng: pick redexes at random from this generator; leftmost
            innermost when omitted
        """
        sign = 1
        while True:
            found = self.redexes(term)
            if not found:
                return sign, term
            path = rng.choice(found) if rng is not None else found[0]
            factor, term = self.apply_at(term, path)
            sign *= factor
            if sign == 0:
                return 0, term

    # -------------------------------------------------------------------------
    def normalize(self, term: Term) -> Tuple[int, Term]:
        """Signed normal form of one term.

        :raises RewriteError: deg5Rules on a term that is not of degree 5
        """
        if self.name == "deg5Rules" and term.degree != 5:
            raise RewriteError(f"deg5Rules needs degree 5, got {term.degree}")
        fast = _FAST.get(self.name)
        if fast is not None:
            return fast(term)
        return self.reduce(term)


# -----------------------------------------------------------------------------
def normal_form(p: FreePoly, rs: Union[str, RewriteSystem]) -> FreePoly:
    """Reduce every term of p and merge equal normal forms."""
    if isinstance(rs, str):
        rs = RewriteSystem(rs)
    found: Dict[Term, Fraction] = collections.defaultdict(Fraction)
    for term, coef in p.terms.items():
        sign, normal = rs.normalize(term)
        if sign:
            found[normal] += sign * coef
    return FreePoly(found, p.arity, p.kind)
