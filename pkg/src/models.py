"""Concrete algebras in which identities are evaluated.

Three carriers are provided:

* :class:`SeqModel`   rational sequences of fixed length, componentwise
  product and the prefix-sum operator, a Rota-Baxter operator of weight -1
* :class:`PolyModel`  Q[x] with one of the integration products selected by
  a :class:`PolyMulSpec`
* :class:`EpsModel`   the triangular algebra ``e_i o e_j = eps_ij e_i``

Models are parsed from short spec strings such as ``seq:N=6`` or
``poly:mul=star,k=2,n=0``, see :func:`parse_model_spec`.
"""

# Global imports
import functools
import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple, Union

# 3rd party imports
from loguru import logger

# Local imports
import freeterm
import qexact
from qexact import QPoly
from rbcommon import CarrierError, ModelSpecError

Vector = Tuple[Fraction, ...]
ModelValue = Union[QPoly, Vector]

SEQ = "seq"
POLY = "poly"
BASIS = "basis"


# =============================================================================
@dataclass(frozen=True)
class Verdict:
    """Outcome of a check: ``holds`` with the number of samples, or ``fails``
    with the first witness in plan order and its exact nonzero value.

    ``grade`` is ``proof`` when the plan is large enough to decide the
    identity, ``evidence`` otherwise.
    """

    status: str
    samples: int
    plan: str = ""
    grade: str = "evidence"
    witness_text: Optional[Dict[str, str]] = None
    value_text: Optional[str] = None
    witness: Optional[tuple] = field(default=None, compare=False)
    value: Optional[object] = field(default=None, compare=False)

    @property
    def holds(self) -> bool:
        return self.status == "holds"

    def to_json(self) -> dict:
        payload = {"status": self.status, "samples": self.samples, "plan": self.plan, "grade": self.grade}
        if not self.holds:
            payload["witness"] = dict(self.witness_text or {})
            payload["value"] = self.value_text
        return payload


# =============================================================================
class Model:
    """Common interface of every model.

    ``product`` is the multiplication identities are evaluated with. Models
    built on a Rota-Baxter operator also expose ``rbo``, ``weight`` and the
    ``base_product`` of the underlying commutative algebra.
    """

    carrier = ""
    weight: Optional[Fraction] = None

    @property
    def has_rbo(self) -> bool:
        return self.weight is not None

    @property
    def spec(self) -> str:
        raise NotImplementedError

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.spec!r})"

    def product(self, a: ModelValue, b: ModelValue) -> ModelValue:
        raise NotImplementedError

    def rbo(self, a: ModelValue) -> ModelValue:
        raise CarrierError(f"{self.spec} has no Rota-Baxter operator")

    def base_product(self, a: ModelValue, b: ModelValue) -> ModelValue:
        raise CarrierError(f"{self.spec} has no underlying commutative product")

    def coerce(self, value) -> ModelValue:
        raise NotImplementedError

    def zero(self) -> ModelValue:
        raise NotImplementedError

    def random_value(self, rng: random.Random, bound: int) -> ModelValue:
        raise NotImplementedError

    # Vector arithmetic, overridden by PolyModel.
    def add(self, a: ModelValue, b: ModelValue) -> ModelValue:
        return tuple(x + y for x, y in zip(a, b))

    def scale(self, c, a: ModelValue) -> ModelValue:
        return tuple(c * x for x in a)

    def sub(self, a: ModelValue, b: ModelValue) -> ModelValue:
        return self.add(a, self.scale(-1, b))

    def is_zero(self, a: ModelValue) -> bool:
        return not any(a)

    def serialize(self, value: ModelValue) -> str:
        return "(" + ", ".join(qexact.format_rat(x) for x in value) + ")"

    # -------------------------------------------------------------------------
    def _vector(self, value, length: int) -> Vector:
        if isinstance(value, (QPoly, str)) or not hasattr(value, "__len__"):
            raise CarrierError(f"{self.spec} expects a vector of length {length}, got {value!r}")
        if len(value) != length:
            raise CarrierError(f"{self.spec} expects length {length}, got {len(value)}")
        return tuple(Fraction(x) for x in value)


# =============================================================================
class SeqModel(Model):
    """Sequences of length N with R = scale * prefix sums.

    ``product`` is the derived multiplication ``a . R(b)``; the base product
    is componentwise. With the default scale 1 the weight is -1.
    """

    carrier = SEQ

    def __init__(self, length: int, scale=1, weight=None):
        if length < 1:
            raise ModelSpecError(f"sequence length must be >= 1, got {length}")
        self.length = length
        self.scale_factor = Fraction(scale)
        self.weight = -self.scale_factor if weight is None else Fraction(weight)

    @property
    def spec(self) -> str:
        if self.scale_factor == 1:
            return f"seq:N={self.length}"
        return f"seq:N={self.length},eps={qexact.format_rat(self.scale_factor)}"

    def coerce(self, value) -> Vector:
        return self._vector(value, self.length)

    def zero(self) -> Vector:
        return (Fraction(0),) * self.length

    def rbo(self, a: Vector) -> Vector:
        return tuple(self.scale_factor * x for x in itertools.accumulate(a))

    def base_product(self, a: Vector, b: Vector) -> Vector:
        return tuple(x * y for x, y in zip(a, b))

    def product(self, a: Vector, b: Vector) -> Vector:
        return self.base_product(a, self.rbo(b))

    def random_value(self, rng: random.Random, bound: int) -> Vector:
        return tuple(Fraction(rng.randint(-bound, bound)) for _ in range(self.length))


# =============================================================================
@dataclass(frozen=True)
class ClosedForm:
    """Product of monomials ``x^p * x^q = N(p,q) / (L(p) R(q)) x^(p+q+shift)``.

    ``left`` and ``right`` list the constants c of the linear factors
    ``(p + c)`` and ``(q + c)`` of the denominator; ``numerator`` bounds the
    degree of N in p and in q.
    """

    left: Tuple[int, ...]
    right: Tuple[int, ...]
    numerator: Tuple[int, int]
    shift: int


# name: (description, parameters)
SELECTORS = {
    "int": ("a*∫b, the integration operator product", ()),
    "star": ("sum C(n,i) ∫_i a ∫_(n-i+k) b", ("k", "n")),
    "bracket": ("[a,b]_n = sum C(n,i) (1-2i/n) ∫_i a ∫_(n-i) b, n >= 1", ("n",)),
    "meps": ("a ∫_2 b + eps ∫a ∫b", ("eps",)),
    "double": ("∫a ∫b", ()),
    "deformed": ("∫a ∫b + eps a ∫_2 b", ("eps",)),
    "diamond": ("∂a ∫b", ()),
    "novsub": ("ab - ∂a ∫b", ()),
    "plain": ("ab", ()),
    "deriv": ("a ∂b, the derivation product", ()),
}

# Named products that coincide with a star product.
ALIASES = {
    "circ2": ("star", 1, 1),
    "circ3": ("star", 2, 1),
    "circ4": ("star", 2, 2),
}

_RBO_SELECTORS = ("int", "double", "deformed")


# =============================================================================
@dataclass(frozen=True)
class PolyMulSpec:
    """Selector and parameters of a product on Q[x]."""

    selector: str
    k: int = 0
    n: int = 0
    eps: Fraction = Fraction(1)

    def __post_init__(self):
        if self.selector not in SELECTORS:
            raise ModelSpecError(f"unknown product {self.selector!r}, choose from {', '.join(SELECTORS)}")
        if self.k < 0 or self.n < 0:
            raise ModelSpecError(f"k and n must be >= 0, got k={self.k}, n={self.n}")
        if self.selector == "bracket" and self.n < 1:
            raise ModelSpecError("bracket needs n >= 1")
        object.__setattr__(self, "eps", Fraction(self.eps))

    @property
    def spec(self) -> str:
        params = SELECTORS[self.selector][1]
        parts = [f"mul={self.selector}"]
        for name in params:
            value = getattr(self, name)
            parts.append(f"{name}={qexact.format_rat(value)}")
        return "poly:" + ",".join(parts)

    # -------------------------------------------------------------------------
    def closed_form(self) -> ClosedForm:
        """Coefficient shape of the product on monomials."""
        sel, k, n = self.selector, self.k, self.n
        if sel == "star":
            return ClosedForm(tuple(range(1, n + 1)), tuple(range(1, n + k + 1)), (n, n), n + k)
        if sel == "bracket":
            return ClosedForm(tuple(range(1, n + 1)), tuple(range(1, n + 1)), (n, n), n)
        if sel in ("meps", "deformed"):
            return ClosedForm((1,), (1, 2), (1, 1), 2)
        if sel == "double":
            return ClosedForm((1,), (1,), (0, 0), 2)
        if sel == "diamond":
            return ClosedForm((), (1,), (1, 0), 0)
        if sel == "novsub":
            return ClosedForm((), (1,), (1, 1), 0)
        if sel == "int":
            return ClosedForm((), (1,), (0, 0), 1)
        if sel == "deriv":
            return ClosedForm((), (), (0, 1), -1)
        return ClosedForm((), (), (0, 0), 0)


# -----------------------------------------------------------------------------
def _star(a: QPoly, b: QPoly, k: int, n: int) -> QPoly:
    total = qexact.ZERO
    for i in range(n + 1):
        total = total + math.comb(n, i) * (a.integrate(i) * b.integrate(n - i + k))
    return total


# -----------------------------------------------------------------------------
def _bracket(a: QPoly, b: QPoly, n: int) -> QPoly:
    total = qexact.ZERO
    for i in range(n + 1):
        weight = math.comb(n, i) * Fraction(n - 2 * i, n)
        total = total + weight * (a.integrate(i) * b.integrate(n - i))
    return total


# -----------------------------------------------------------------------------
@functools.lru_cache(maxsize=1 << 16)
def poly_product(spec: PolyMulSpec, a: QPoly, b: QPoly) -> QPoly:
    """Product of two polynomials under the selected multiplication."""
    sel = spec.selector
    if sel == "int":
        return a * b.integrate(1)
    if sel == "star":
        return _star(a, b, spec.k, spec.n)
    if sel == "bracket":
        return _bracket(a, b, spec.n)
    if sel == "meps":
        return a * b.integrate(2) + spec.eps * (a.integrate(1) * b.integrate(1))
    if sel == "double":
        return a.integrate(1) * b.integrate(1)
    if sel == "deformed":
        return a.integrate(1) * b.integrate(1) + spec.eps * (a * b.integrate(2))
    if sel == "diamond":
        return a.derivative() * b.integrate(1)
    if sel == "novsub":
        return a * b - a.derivative() * b.integrate(1)
    if sel == "deriv":
        return a * b.derivative()
    return a * b


# =============================================================================
class PolyModel(Model):
    """Q[x] with the product chosen by a :class:`PolyMulSpec`.

    The selectors built from R = ∫ (``int``, ``double``, ``deformed``) carry
    that operator at weight 0.
    """

    carrier = POLY

    def __init__(self, spec: PolyMulSpec):
        self.mul = spec
        self.weight = Fraction(0) if spec.selector in _RBO_SELECTORS else None

    @property
    def spec(self) -> str:
        return self.mul.spec

    def coerce(self, value) -> QPoly:
        if isinstance(value, QPoly):
            return value
        if isinstance(value, (int, Fraction)):
            return QPoly.constant(value)
        if isinstance(value, str):
            return QPoly.parse(value)
        raise CarrierError(f"{self.spec} expects a polynomial, got {value!r}")

    def zero(self) -> QPoly:
        return qexact.ZERO

    def product(self, a: QPoly, b: QPoly) -> QPoly:
        return poly_product(self.mul, a, b)

    def rbo(self, a: QPoly) -> QPoly:
        if self.weight is None:
            return super().rbo(a)
        return a.integrate(1)

    def base_product(self, a: QPoly, b: QPoly) -> QPoly:
        return a * b

    def add(self, a: QPoly, b: QPoly) -> QPoly:
        return a + b

    def scale(self, c, a: QPoly) -> QPoly:
        return qexact.scale(c, a)

    def is_zero(self, a: QPoly) -> bool:
        return a.is_zero()

    def serialize(self, value: QPoly) -> str:
        return value.serialize()

    def random_value(self, rng: random.Random, bound: int) -> QPoly:
        return QPoly({exp: rng.randint(-bound, bound) for exp in range(bound + 1)})


# =============================================================================
@dataclass(frozen=True)
class EpsSpec:
    """Dimension m and parameters eps_1..eps_(m-1).

    eps_ij is 0 when i <= j and eps_j when i > j.
    """

    m: int
    eps: Tuple[Fraction, ...]

    def __post_init__(self):
        if self.m < 2:
            raise ModelSpecError(f"eps algebra needs m >= 2, got {self.m}")
        if len(self.eps) != self.m - 1:
            raise ModelSpecError(f"eps algebra of dimension {self.m} needs {self.m - 1} parameters")
        object.__setattr__(self, "eps", tuple(Fraction(e) for e in self.eps))

    @classmethod
    def random(cls, m: int, seed: int, bound: int = 5) -> "EpsSpec":
        """Random nonzero parameters with small numerators and denominators."""
        rng = random.Random(seed)
        values = []
        for _ in range(m - 1):
            values.append(Fraction(rng.choice([v for v in range(-bound, bound + 1) if v]), rng.randint(1, bound)))
        return cls(m, tuple(values))

    def eps_ij(self, i: int, j: int) -> Fraction:
        return self.eps[j - 1] if i > j else Fraction(0)


# =============================================================================
class EpsModel(Model):
    """m-dimensional algebra with basis e_1..e_m and ``e_i o e_j = eps_ij e_i``.

    Values are coordinate vectors; the structure constants are kept as an
    m x m table of (scalar, target index) pairs.
    """

    carrier = BASIS

    def __init__(self, spec: EpsSpec, seed: Optional[int] = None):
        self.eps_spec = spec
        self.seed = seed
        self.table = [[(spec.eps_ij(i, j), i) for j in range(1, spec.m + 1)] for i in range(1, spec.m + 1)]

    @property
    def m(self) -> int:
        return self.eps_spec.m

    @property
    def spec(self) -> str:
        if self.seed is not None:
            return f"eps:m={self.m},seed={self.seed}"
        return f"eps:m={self.m},values=" + "|".join(qexact.format_rat(e) for e in self.eps_spec.eps)

    def basis(self, index: int) -> Vector:
        return tuple(Fraction(1 if pos == index else 0) for pos in range(1, self.m + 1))

    def coerce(self, value) -> Vector:
        return self._vector(value, self.m)

    def zero(self) -> Vector:
        return (Fraction(0),) * self.m

    def product(self, a: Vector, b: Vector) -> Vector:
        result = [Fraction(0)] * self.m
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                scalar, target = self.table[i][j]
                if y and scalar:
                    result[target - 1] += scalar * x * y
        return tuple(result)

    def random_value(self, rng: random.Random, bound: int) -> Vector:
        return tuple(Fraction(rng.randint(-bound, bound)) for _ in range(self.m))


# -----------------------------------------------------------------------------
def eps_bracket(spec: EpsSpec, i: int, j: int) -> Tuple[Fraction, int]:
    """[e_i, e_j] as (coefficient, index): eps_j e_i if i > j, -eps_i e_j if i < j."""
    if i > j:
        return spec.eps_ij(i, j), i
    if i < j:
        return -spec.eps_ij(j, i), j
    return Fraction(0), i


# -----------------------------------------------------------------------------
def eps_jordan(spec: EpsSpec, i: int, j: int) -> Tuple[Fraction, int]:
    """{e_i, e_j} as (coefficient, index); zero on the diagonal since eps_ii = 0."""
    if i > j:
        return spec.eps_ij(i, j), i
    if i < j:
        return spec.eps_ij(j, i), j
    return Fraction(0), i


# -----------------------------------------------------------------------------
def g_coefficient(spec: EpsSpec, i: int, j: int, s: int, k: int) -> Fraction:
    """Coefficient G of f4(e_i, e_j, e_s, e_k) = G e_i, antisymmetric in j and s."""
    e = spec.eps_ij
    return (
        e(i, j) * e(j, s) * e(j, k)
        - e(i, s) * e(s, j) * e(s, k)
        - e(i, j) * e(j, s) * e(s, k)
        + e(i, j) * e(i, s) * e(s, k)
        + e(i, s) * e(s, j) * e(j, k)
        - e(i, s) * e(i, j) * e(j, k)
    )


# -----------------------------------------------------------------------------
def diamond_closed_forms(i: int, j: int) -> Dict[str, Fraction]:
    """Coefficients on e_(i+j) of the diamond products of divided powers e_i = x^i/i!."""
    return {
        "product": Fraction(math.comb(i + j, i - 1)) if i >= 1 else Fraction(0),
        "lie": math.comb(i + j + 2, i + 1) * Fraction(i - j, i + j + 2),
        "jordan": math.comb(i + j + 2, i + 1) * Fraction(i + j + i * i + j * j, (i + j + 1) * (i + j + 2)),
    }


# -----------------------------------------------------------------------------
def _split_spec(text: str) -> Tuple[str, Dict[str, str]]:
    carrier, _, rest = text.strip().partition(":")
    options: Dict[str, str] = {}
    for item in filter(None, rest.split(",")):
        key, sep, value = item.partition("=")
        if not sep or not key.strip():
            raise ModelSpecError(f"malformed option {item!r} in model spec {text!r}")
        options[key.strip()] = value.strip()
    return carrier.strip(), options


# -----------------------------------------------------------------------------
def _take(options: Dict[str, str], key: str, convert: Callable, default=None):
    if key not in options:
        return default
    try:
        return convert(options.pop(key))
    except (ValueError, ZeroDivisionError) as exc:
        raise ModelSpecError(f"bad value for {key}: {exc}") from exc


# -----------------------------------------------------------------------------
def parse_model_spec(text: str, default_length: int = 6) -> Model:
    """Build a model from a spec string.

    ``seq:N=6[,eps=r]``, ``poly:mul=NAME[,k=..][,n=..][,eps=..]``,
    ``eps:m=6,seed=7`` or ``eps:m=3,values=1|1/2``. Unknown keys are rejected.

    :raises ModelSpecError: unknown carrier, key or malformed value
    """
    carrier, options = _split_spec(text)
    if carrier == SEQ:
        length = _take(options, "N", int, default_length)
        eps = _take(options, "eps", Fraction, Fraction(1))
        model = SeqModel(length)
        if eps != 1:
            model = rescale_rbo(model, eps)
    elif carrier == POLY:
        selector = options.pop("mul", None)
        if selector is None:
            raise ModelSpecError(f"poly model needs mul=..., got {text!r}")
        k, n = 0, 0
        if selector in ALIASES:
            selector, k, n = ALIASES[selector]
        params = SELECTORS.get(selector, ("", ()))[1]
        if "k" in params:
            k = _take(options, "k", int, k)
        if "n" in params:
            n = _take(options, "n", int, 1 if selector == "bracket" else n)
        eps = _take(options, "eps", Fraction, Fraction(1)) if "eps" in params else Fraction(1)
        model = PolyModel(PolyMulSpec(selector, k, n, eps))
    elif carrier == "eps":
        m = _take(options, "m", int, 6)
        seed = _take(options, "seed", int)
        values = _take(options, "values", lambda v: tuple(Fraction(x) for x in v.split("|")))
        if values is not None:
            model = EpsModel(EpsSpec(m, values))
        else:
            seed = 42 if seed is None else seed
            model = EpsModel(EpsSpec.random(m, seed), seed)
    else:
        raise ModelSpecError(f"unknown carrier {carrier!r} in {text!r}, use seq, poly or eps")
    if options:
        raise ModelSpecError(f"unknown keys {sorted(options)} in model spec {text!r}")
    logger.debug(f"parse_model_spec({text=}) -> {model.spec}")
    return model


# -----------------------------------------------------------------------------
def model_catalog() -> List[Tuple[str, str]]:
    """(spec pattern, description) for every model the CLI accepts."""
    rows = [("seq:N=<length>[,eps=<r>]", "prefix sums R (times eps), product a.R(b), weight -eps")]
    for name, (description, params) in SELECTORS.items():
        pattern = ",".join([f"poly:mul={name}"] + [f"{p}=<{p}>" for p in params])
        rows.append((pattern, description))
    for name, (selector, k, n) in ALIASES.items():
        rows.append((f"poly:mul={name}", f"alias of poly:mul={selector},k={k},n={n}"))
    rows.append(("eps:m=<dim>,seed=<int> | eps:m=<dim>,values=<e1|e2|..>", "e_i o e_j = eps_ij e_i"))
    return rows


# -----------------------------------------------------------------------------
def rescale_rbo(model: Model, eps) -> SeqModel:
    """Model with R' = eps R and weight eps * weight.

    :raises ModelSpecError: no operator, zero weight or zero eps
    """
    eps = Fraction(eps)
    if not model.has_rbo:
        raise ModelSpecError(f"{model.spec} has no Rota-Baxter operator to rescale")
    if not model.weight:
        raise ModelSpecError(f"{model.spec} has weight 0, rescaling needs a nonzero weight")
    if not eps:
        raise ModelSpecError("rescaling factor must be nonzero")
    if not isinstance(model, SeqModel):
        raise ModelSpecError(f"cannot rescale {model.spec}")
    return SeqModel(model.length, model.scale_factor * eps, model.weight * eps)


# -----------------------------------------------------------------------------
def coerce_assignment(model: Model, assignment, arity: int) -> List[ModelValue]:
    """Values for variables 1..arity from a sequence or an index mapping.

    :raises CarrierError: missing variable or value outside the carrier
    """
    if isinstance(assignment, Mapping):
        missing = [i for i in range(1, arity + 1) if i not in assignment]
        if missing:
            raise CarrierError(f"assignment misses variables {missing}")
        values = [assignment[i] for i in range(1, arity + 1)]
    else:
        values = list(assignment)
        if len(values) < arity:
            raise CarrierError(f"assignment has {len(values)} values for {arity} variables")
    return [model.coerce(value) for value in values]


# -----------------------------------------------------------------------------
class TermEvaluator:
    """Values of monomials at one assignment, sharing subterm values.

    Lie words use ``ab - ba`` and Jordan words ``ab + ba`` of the model product.
    """

    def __init__(self, model: Model, kind: str, values: Sequence[ModelValue]):
        self.model = model
        self.kind = kind
        self.values = values
        self.cache: Dict[freeterm.Term, ModelValue] = {}

    # -------------------------------------------------------------------------
    def __call__(self, term: freeterm.Term) -> ModelValue:
        if isinstance(term, freeterm.Var):
            return self.values[term.index - 1]
        if term in self.cache:
            return self.cache[term]
        model = self.model
        left, right = self(term.left), self(term.right)
        result = model.product(left, right)
        if self.kind == freeterm.LIE:
            result = model.sub(result, model.product(right, left))
        elif self.kind == freeterm.JORDAN:
            result = model.add(result, model.product(right, left))
        self.cache[term] = result
        return result


# -----------------------------------------------------------------------------
def eval_poly(p: freeterm.FreePoly, model: Model, assignment) -> ModelValue:
    """Evaluate p in the model. Subterm values are shared between monomials.

    :raises CarrierError: assignment does not fit the model
    """
    value = TermEvaluator(model, p.kind, coerce_assignment(model, assignment, p.arity))
    total = model.zero()
    for term, coef in p:
        total = model.add(total, model.scale(coef, value(term)))
    return total


# -----------------------------------------------------------------------------
def baxter_defect(model: Model, a: ModelValue, b: ModelValue) -> ModelValue:
    """R(a)R(b) - R(aR(b) + R(a)b + weight ab) in the base product."""
    base, rbo = model.base_product, model.rbo
    inner = model.add(model.add(base(a, rbo(b)), base(rbo(a), b)), model.scale(model.weight, base(a, b)))
    return model.sub(base(rbo(a), rbo(b)), rbo(inner))


# -----------------------------------------------------------------------------
def rbo_law_check(model: Model, samples: Sequence[Tuple[ModelValue, ModelValue]], weight=None) -> Verdict:
    """Check the Baxter law on sample pairs at the model's (or the given) weight.

    :raises CarrierError: the model has no operator
    """
    if not model.has_rbo:
        raise CarrierError(f"{model.spec} has no Rota-Baxter operator")
    if weight is not None:
        model = _with_weight(model, Fraction(weight))
    count = 0
    for a, b in samples:
        a, b = model.coerce(a), model.coerce(b)
        count += 1
        defect = baxter_defect(model, a, b)
        if not model.is_zero(defect):
            logger.debug(f"Baxter law fails at sample {count}")
            return Verdict(
                "fails",
                count,
                f"pairs:{len(samples)}",
                witness_text={"a": model.serialize(a), "b": model.serialize(b)},
                value_text=model.serialize(defect),
                witness=(a, b),
                value=defect,
            )
    return Verdict("holds", count, f"pairs:{len(samples)}")


# -----------------------------------------------------------------------------
def _with_weight(model: Model, weight: Fraction) -> Model:
    if isinstance(model, SeqModel):
        return SeqModel(model.length, model.scale_factor, weight)
    clone = PolyModel(model.mul)
    clone.weight = weight
    return clone


# -----------------------------------------------------------------------------
def jordan_associator_law(model: Model, a: ModelValue, b: ModelValue, c: ModelValue) -> ModelValue:
    """<a,b,c> + weight (aR(bc) - R(ab)c); zero in every derived algebra a.R(b)."""
    jordan = freeterm.builtin("jassoc", freeterm.JORDAN)
    lhs = eval_poly(jordan, model, (a, b, c))
    base, rbo = model.base_product, model.rbo
    assoc_r = model.sub(base(a, rbo(base(b, c))), base(rbo(base(a, b)), c))
    return model.add(lhs, model.scale(model.weight, assoc_r))


# -----------------------------------------------------------------------------
def derivative_homomorphism(n: int, a: QPoly, b: QPoly) -> QPoly:
    """∂(a star_0n b) - ∂a star_0(n+1) ∂b; zero when a(0) = b(0) = 0."""
    low = PolyMulSpec("star", 0, n)
    high = PolyMulSpec("star", 0, n + 1)
    return poly_product(low, a, b).derivative() - poly_product(high, a.derivative(), b.derivative())
