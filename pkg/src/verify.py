"""Identity checking: evaluate a polynomial over a sampling plan.

A check walks the plan in order and stops at the first assignment where the
polynomial does not vanish. On integration models the monomial grid can be
made large enough to decide the identity, see :func:`evidence_bound`. Checks
return a :class:`Verdict`, shared with the operator law checks of :mod:`models`.
"""

# Global imports
import collections
import itertools
import random
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence, Tuple

# 3rd party imports
from loguru import logger

# Local imports
import freeterm
import models
import param
from models import BASIS, POLY, Model, Verdict
from qexact import QPoly
from rbcommon import CarrierError
from worker import Worker

GRID = "grid"
RANDOM = "random"
BASIS_TUPLES = "basis"
EXPLICIT = "explicit"


# =============================================================================
@dataclass(frozen=True)
class SamplingPlan:
    """Deterministic source of assignments.

    * ``grid``      all exponent tuples min_exp..max_exp, lexicographic; with
      ``distinct`` only pairwise distinct exponents, by sum then
      lexicographic; with ``divided`` the values are x^i/i!
    * ``random``    count pseudorandom values with entries in -bound..bound
    * ``basis``     every tuple of basis vectors
    * ``explicit``  the given assignments
    """

    kind: str
    max_exp: int = 6
    min_exp: int = 0
    divided: bool = False
    distinct: bool = False
    count: int = 200
    seed: int = 42
    bound: int = 3
    explicit: Tuple[tuple, ...] = ()

    @classmethod
    def grid(cls, max_exp: int, min_exp: int = 0, divided: bool = False, distinct: bool = False) -> "SamplingPlan":
        return cls(GRID, max_exp=max_exp, min_exp=min_exp, divided=divided, distinct=distinct)

    @classmethod
    def random(cls, count: int, seed: int = 42, bound: int = 3) -> "SamplingPlan":
        return cls(RANDOM, count=count, seed=seed, bound=bound)

    @classmethod
    def basis(cls) -> "SamplingPlan":
        return cls(BASIS_TUPLES)

    @classmethod
    def of(cls, assignments: Sequence[tuple]) -> "SamplingPlan":
        return cls(EXPLICIT, explicit=tuple(tuple(a) for a in assignments))

    # -------------------------------------------------------------------------
    def describe(self) -> str:
        if self.kind == GRID:
            flags = "".join([",divided" if self.divided else "", ",distinct" if self.distinct else ""])
            return f"grid:{self.min_exp}..{self.max_exp}{flags}"
        if self.kind == RANDOM:
            return f"random:{self.count},seed={self.seed},bound={self.bound}"
        if self.kind == BASIS_TUPLES:
            return "basis"
        return f"explicit:{len(self.explicit)}"

    # -------------------------------------------------------------------------
    def exponents(self, arity: int) -> Iterator[Tuple[int, ...]]:
        span = range(self.min_exp, self.max_exp + 1)
        if not self.distinct:
            yield from itertools.product(span, repeat=arity)
            return
        found = [e for e in itertools.product(span, repeat=arity) if len(set(e)) == arity]
        yield from sorted(found, key=lambda e: (sum(e), e))

    # -------------------------------------------------------------------------
    def assignments(self, model: Model, arity: int) -> Iterator[tuple]:
        """Assignments in plan order.

        :raises CarrierError: the plan kind does not fit the model's carrier
        """
        if self.kind == GRID:
            if model.carrier != POLY:
                raise CarrierError(f"monomial grids need a polynomial model, not {model.spec}")
            make = QPoly.divided_power if self.divided else QPoly.monomial
            for exps in self.exponents(arity):
                yield tuple(make(e) for e in exps)
        elif self.kind == RANDOM:
            rng = random.Random(self.seed)
            for _ in range(self.count):
                yield tuple(model.random_value(rng, self.bound) for _ in range(arity))
        elif self.kind == BASIS_TUPLES:
            if model.carrier != BASIS:
                raise CarrierError(f"basis tuples need a basis model, not {model.spec}")
            for indices in itertools.product(range(1, model.m + 1), repeat=arity):
                yield tuple(model.basis(i) for i in indices)
        else:
            for assignment in self.explicit:
                yield tuple(model.coerce(value) for value in assignment)


# -----------------------------------------------------------------------------
def default_plan(model: Model) -> SamplingPlan:
    """Grid for polynomials, random vectors for sequences, all tuples for bases."""
    if model.carrier == POLY:
        min_exp = 1 if model.mul.selector == "novsub" else 0
        return SamplingPlan.grid(param.config.getint("verify", "grid"), min_exp=min_exp)
    if model.carrier == BASIS:
        return SamplingPlan.basis()
    return SamplingPlan.random(
        param.config.getint("verify", "samples"), param.seed, param.config.getint("verify", "bound")
    )


# -----------------------------------------------------------------------------
def _witness_text(model: Model, assignment: tuple) -> dict:
    return {freeterm.var_name(i): model.serialize(value) for i, value in enumerate(assignment, 1)}


# -----------------------------------------------------------------------------
def _grade(p: freeterm.FreePoly, model: Model, plan: SamplingPlan) -> str:
    if plan.kind == GRID and not plan.distinct:
        if plan.max_exp - plan.min_exp >= evidence_bound(p, model):
            return "proof"
    if plan.kind == BASIS_TUPLES and p.is_multilinear():
        return "proof"
    return "evidence"


# -----------------------------------------------------------------------------
def check_identity(
    p: freeterm.FreePoly, model: Model, plan: Optional[SamplingPlan] = None, worker: Optional[Worker] = None
) -> Verdict:
    """Evaluate p on every planned assignment.

    :param p: expanded polynomial
    :param model: where to evaluate
    :param plan: sampling plan, :func:`default_plan` when omitted
    :param worker: thread pool, one built from :mod:`param` when omitted
    :returns: ``holds`` when every value is exactly 0, else ``fails`` with
        the first nonzero assignment in plan order
    :raises CarrierError: plan or values do not fit the model
    """
    plan = plan or default_plan(model)
    worker = worker or Worker()
    logger.debug(f"check_identity {p.kind} arity {p.arity} on {model.spec} with {plan.describe()}")

    def evaluate(assignment):
        return models.eval_poly(p, model, assignment)

    count, hit = worker.first_failure(evaluate, plan.assignments(model, p.arity), lambda v: not model.is_zero(v))
    if hit is None:
        return Verdict("holds", count, plan.describe(), _grade(p, model, plan))
    _, assignment, value = hit
    return Verdict(
        "fails",
        count,
        plan.describe(),
        witness_text=_witness_text(model, assignment),
        value_text=model.serialize(value),
        witness=assignment,
        value=value,
    )


# -----------------------------------------------------------------------------
def _search_space(model: Model, arity: int, seed: int) -> Iterator[tuple]:
    grid = param.config.getint("verify", "grid")
    samples = param.config.getint("verify", "samples")
    bound = param.config.getint("verify", "bound")
    if model.carrier == POLY:
        min_exp = 1 if model.mul.selector == "novsub" else 0
        top = max(grid, min_exp + arity)
        yield from SamplingPlan.grid(top, min_exp, distinct=True).assignments(model, arity)
        yield from SamplingPlan.grid(grid, min_exp).assignments(model, arity)
        return
    if model.carrier == BASIS:
        yield from SamplingPlan.basis().assignments(model, arity)
    yield from SamplingPlan.random(samples * 100, seed, bound).assignments(model, arity)


# -----------------------------------------------------------------------------
def find_counterexample(
    p: freeterm.FreePoly, model: Model, budget: Optional[int] = None, seed: Optional[int] = None
) -> Optional[Tuple[tuple, object]]:
    """Search for an assignment where p does not vanish.

    Polynomial models try pairwise distinct exponents first (smallest sum
    first), then the full grid. Other carriers use basis tuples and random
    values.

    :param budget: maximum number of evaluations
    :returns: (assignment, value) or None when the budget is exhausted
    """
    budget = budget if budget is not None else param.config.getint("verify", "budget")
    seed = seed if seed is not None else param.seed
    space = itertools.islice(_search_space(model, p.arity, seed), budget)
    count, hit = Worker().first_failure(
        lambda a: models.eval_poly(p, model, a), space, lambda v: not model.is_zero(v)
    )
    logger.debug(f"find_counterexample evaluated {count} assignments")
    if hit is None:
        return None
    return hit[1], hit[2]


# -----------------------------------------------------------------------------
def evidence_bound(p: freeterm.FreePoly, model: Model) -> int:
    """Per-variable exponent bound B deciding p on a polynomial model.

    Each product of monomials x^p, x^q is N(p,q) / (L(p) R(q)) x^(p+q+shift)
    with linear factors in L and R. Over a common denominator the value of p
    at exponents (e_1..e_d) is a polynomial in each e_v of degree at most B,
    so vanishing on the grid 0..B (B+1 points per variable) means it
    vanishes for all exponents.

    :raises CarrierError: model is not a polynomial model
    """
    if model.carrier != POLY:
        raise CarrierError(f"evidence bounds need a polynomial model, not {model.spec}")
    form = model.mul.closed_form()
    plain = p.to_plain()
    if plain.is_zero():
        return 0

    groups = collections.defaultdict(list)
    for term, _ in plain:
        groups[term.degree].append(term)

    bound = 0
    for terms in groups.values():
        shapes = [_denominator_shape(term, form) for term in terms]
        common = collections.Counter()
        for dens, _ in shapes:
            for factor, mult in dens.items():
                common[factor] = max(common[factor], mult)
        variables = {v for term in terms for v in term.leaves}
        for v in variables:
            common_deg = sum(mult for (leaves, _), mult in common.items() if v in leaves)
            for dens, num in shapes:
                own_deg = sum(mult for (leaves, _), mult in dens.items() if v in leaves)
                bound = max(bound, num[v] + common_deg - own_deg)
    logger.debug(f"evidence_bound({model.spec}) -> {bound}")
    return bound


# -----------------------------------------------------------------------------
def _denominator_shape(term: freeterm.Term, form: models.ClosedForm):
    """Denominator factors (leaves, constant) with multiplicity and numerator degree per variable."""
    dens = collections.Counter()
    num = collections.Counter()

    def walk(node):
        if isinstance(node, freeterm.Var):
            return (node.index,), 0
        lleaves, lnodes = walk(node.left)
        rleaves, rnodes = walk(node.right)
        lkey, rkey = tuple(sorted(lleaves)), tuple(sorted(rleaves))
        for const in form.left:
            dens[(lkey, lnodes * form.shift + const)] += 1
        for const in form.right:
            dens[(rkey, rnodes * form.shift + const)] += 1
        for v in lleaves:
            num[v] += form.numerator[0]
        for v in rleaves:
            num[v] += form.numerator[1]
        return lleaves + rleaves, lnodes + rnodes + 1

    walk(term)
    return dens, num
