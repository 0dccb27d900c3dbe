"""Identity spaces of a model and decomposition against generators.

The identities of a given degree satisfied by a model form the kernel of the
evaluation matrix: one column per basis monomial, one row per sample and
coordinate. All linear algebra is exact, on :class:`sympy.polys.matrices.DomainMatrix`
over QQ.

Kernel bases use a fixed pivot convention: row reduction runs on the
column-reversed matrix, so the free parameters are the earliest basis
monomials that can be free and every other coefficient is expressed through
them.
"""

# Global imports
import csv
import io
import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

# 3rd party imports
from loguru import logger
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

# Local imports
import freeterm
import identities
import models
import param
from freeterm import FreePoly, Mul, Term, Var
from models import BASIS, POLY, Model
from rbcommon import ArityError, DegreeError, KindError, RbidentError
from worker import Worker

MAX_DEGREE = 6

# symmetry -> (rewrite system, word kind of the basis)
SYMMETRIES = {
    "none": (None, freeterm.PLAIN),
    "comm": ("commSort", freeterm.JORDAN),
    "anticomm": ("anticommSort", freeterm.LIE),
    "rcomReduced": ("rcomSort", freeterm.PLAIN),
}

# Component-4 samples (a, b, c, d) of the degree-4 Lie evaluation on seq:N=4
TABLE1_SAMPLES = tuple(
    ((0, 1, 0, 1), b, c, d)
    for b, c, ds in [
        ((1, 0, 1, 0), (0, 1, 1, 1), [(1, 1, 1, 1), (1, 1, 2, 1), (1, 2, 1, 1)]),
        ((1, 0, 1, 0), (0, 1, 1, 2), [(1, 1, 2, 1), (1, 2, 1, 1)]),
        ((1, 0, 1, 0), (0, 1, 2, 1), [(1, 1, 1, 1), (1, 2, 1, 1)]),
        ((1, 0, 1, 0), (0, 1, 2, 2), [(1, 1, 2, 1), (1, 2, 2, 1)]),
        ((1, 0, 2, 0), (0, 1, 1, 1), [(1, 1, 1, 1), (1, 1, 2, 1), (1, 2, 1, 1)]),
    ]
    for d in ds
)


# -----------------------------------------------------------------------------
def _to_dm(rows: Sequence[Sequence[Fraction]], ncols: int) -> DomainMatrix:
    if not rows:
        return DomainMatrix.zeros((0, ncols), QQ)
    data = [[QQ(int(x.numerator), int(x.denominator)) for x in row] for row in rows]
    return DomainMatrix(data, (len(data), ncols), QQ)


def _frac(q) -> Fraction:
    return Fraction(int(q.numerator), int(q.denominator))


# -----------------------------------------------------------------------------
def _rref(rows: Sequence[Sequence[Fraction]], ncols: int) -> Tuple[List[List[Fraction]], Tuple[int, ...]]:
    """Reduced row echelon form as Fractions, nonzero rows only, and pivots."""
    if not rows:
        return [], ()
    reduced, pivots = _to_dm(rows, ncols).rref()
    table = reduced.to_list()
    return [[_frac(x) for x in table[r]] for r in range(len(pivots))], tuple(pivots)


# -----------------------------------------------------------------------------
def _annihilated(rows: Sequence[Sequence[Fraction]], vectors: Sequence[Sequence[Fraction]], ncols: int) -> List[bool]:
    """For each vector, whether every row has zero dot product with it."""
    if not rows or not vectors:
        return [True] * len(vectors)
    product = _to_dm(rows, ncols).matmul(_to_dm(vectors, ncols).transpose()).to_list()
    return [not any(line[c] for line in product) for c in range(len(vectors))]


# -----------------------------------------------------------------------------
def shape_key(term: Term) -> tuple:
    """Bracket-shape order: by right factor degree, then recursively."""
    if isinstance(term, Var):
        return ()
    return (term.right.degree, shape_key(term.left), shape_key(term.right))


def basis_key(term: Term) -> tuple:
    """Shape first, then the leaf sequence."""
    return shape_key(term), term.leaves


# -----------------------------------------------------------------------------
def _symmetry(symmetry: str) -> Tuple[Optional[str], str]:
    if symmetry not in SYMMETRIES:
        raise RbidentError(f"unknown symmetry {symmetry!r}, choose from {', '.join(SYMMETRIES)}")
    return SYMMETRIES[symmetry]


# -----------------------------------------------------------------------------
def reduce(p: FreePoly, symmetry: str) -> FreePoly:
    """Normal form of p in the word kind and rewrite system of symmetry.

    :raises KindError: Lie or Jordan words for the wrong symmetry
    """
    rule, kind = _symmetry(symmetry)
    if kind == freeterm.PLAIN:
        p = p.to_plain()
    elif p.kind != kind:
        raise KindError(f"{symmetry} works on {kind} words, got {p.kind}")
    return freeterm.normal_form(p, rule) if rule else p


# =============================================================================
@dataclass(frozen=True)
class MonomialBasis:
    """Ordered multilinear monomials of one degree under a symmetry."""

    degree: int
    symmetry: str
    kind: str
    monomials: Tuple[Term, ...]

    def __len__(self) -> int:
        return len(self.monomials)

    @property
    def index(self) -> Dict[Term, int]:
        return {term: pos for pos, term in enumerate(self.monomials)}

    def labels(self) -> List[str]:
        return [freeterm.render(term, self.kind) for term in self.monomials]

    # -------------------------------------------------------------------------
    def as_poly(self, vector: Sequence[Fraction]) -> FreePoly:
        """Sum of vector[i] times monomial i."""
        return FreePoly(dict(zip(self.monomials, vector)), self.degree, self.kind)

    def coordinates(self, p: FreePoly) -> Tuple[Fraction, ...]:
        """Coordinates of the normal form of p.

        :raises ArityError: p has a term that is not a basis monomial
        """
        index = self.index
        vector = [Fraction(0)] * len(self.monomials)
        for term, coef in reduce(p, self.symmetry):
            if term not in index:
                text = freeterm.render(term, self.kind)
                raise ArityError(f"{text} is not a degree-{self.degree} multilinear monomial")
            vector[index[term]] += coef
        return tuple(vector)


# -----------------------------------------------------------------------------
def enumerate_basis(degree: int, symmetry: str = "none") -> MonomialBasis:
    """Normal forms of all multilinear monomials, in basis order.

    Counts: 15 at degree 4 and 105 at degree 5 for comm or anticomm, 120 and
    1680 for none, 64 for rcomReduced at degree 4.

    :raises DegreeError: degree outside 1..6
    """
    if not 1 <= degree <= MAX_DEGREE:
        raise DegreeError(f"degree must be in 1..{MAX_DEGREE}, got {degree}")
    rule, kind = _symmetry(symmetry)
    if rule is None:
        found = set(freeterm.monomials(degree))
    else:
        system = freeterm.RewriteSystem(rule)
        found = set()
        for term in freeterm.monomials(degree):
            sign, normal = system.normalize(term)
            if sign:
                found.add(normal)
    monomials = tuple(sorted(found, key=basis_key))
    logger.debug(f"enumerate_basis({degree}, {symmetry}) -> {len(monomials)}")
    return MonomialBasis(degree, symmetry, kind, monomials)


# =============================================================================
@dataclass(frozen=True)
class EvalMatrix:
    """Exact evaluation matrix with row and column labels."""

    columns: Tuple[str, ...]
    row_labels: Tuple[str, ...]
    rows: Tuple[Tuple[Fraction, ...], ...]

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.rows), len(self.columns)

    def rank(self) -> int:
        return _to_dm(self.rows, len(self.columns)).rank() if self.rows else 0

    def to_csv(self) -> str:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["row"] + list(self.columns))
        for label, row in zip(self.row_labels, self.rows):
            writer.writerow([label] + [str(x) for x in row])
        return out.getvalue()

    def to_json(self) -> dict:
        return {
            "columns": list(self.columns),
            "rows": [
                {"label": label, "values": [str(x) for x in row]} for label, row in zip(self.row_labels, self.rows)
            ],
        }


# -----------------------------------------------------------------------------
def _sample_rows(basis: MonomialBasis, model: Model, sample, coordinates, tag: str):
    values = models.coerce_assignment(model, sample, basis.degree)
    evaluate = models.TermEvaluator(model, basis.kind, values)
    cells = [evaluate(term) for term in basis.monomials]
    if model.carrier == POLY:
        exps = sorted({exp for cell in cells for exp, _ in cell.items()})
        return [(f"{tag}[x^{exp}]", tuple(cell.coefficient(exp) for cell in cells)) for exp in exps]
    width = len(cells[0]) if cells else 0
    picked = coordinates or range(1, width + 1)
    return [(f"{tag}[{c}]", tuple(cell[c - 1] for cell in cells)) for c in picked]


# -----------------------------------------------------------------------------
def build_matrix(
    basis: MonomialBasis,
    model: Model,
    samples: Sequence,
    coordinates: Optional[Sequence[int]] = None,
    worker: Optional[Worker] = None,
    first: int = 1,
) -> EvalMatrix:
    """Evaluate every basis monomial at every sample.

    :param samples: assignments of the basis degree
    :param coordinates: 1-based components to keep (vector carriers); all
        when omitted. Polynomial values give one row per exponent present.
    :param first: number of the first sample in row labels
    """
    worker = worker or Worker()
    tagged = list(enumerate(samples, first))
    blocks = worker.map(lambda item: _sample_rows(basis, model, item[1], coordinates, f"s{item[0]}"), tagged)
    labels, rows = [], []
    for block in blocks:
        for label, row in block:
            labels.append(label)
            rows.append(row)
    return EvalMatrix(tuple(basis.labels()), tuple(labels), tuple(rows))


# =============================================================================
@dataclass(frozen=True)
class NullspaceBasis:
    """Kernel vectors, one per free column, in basis order.

    ``free`` and ``pivots`` are 0-based column indices.
    """

    vectors: Tuple[Tuple[Fraction, ...], ...]
    rank: int
    free: Tuple[int, ...]
    pivots: Tuple[int, ...]

    @property
    def dimension(self) -> int:
        return len(self.vectors)

    def relations(self) -> Dict[int, Dict[int, Fraction]]:
        """1-based pivot coefficient -> {free coefficient: factor}."""
        found = {}
        for pivot in self.pivots:
            found[pivot + 1] = {f + 1: v[pivot] for f, v in zip(self.free, self.vectors) if v[pivot]}
        return found

    def relations_text(self, symbol: str = "λ") -> List[str]:
        lines = []
        for pivot, combo in sorted(self.relations().items()):
            text = ""
            for index, coef in sorted(combo.items()):
                body = f"{symbol}{index}" if abs(coef) == 1 else f"{abs(coef)} {symbol}{index}"
                if not text:
                    text = f"-{body}" if coef < 0 else body
                else:
                    text += f" {'-' if coef < 0 else '+'} {body}"
            lines.append(f"{symbol}{pivot} = {text or '0'}")
        return lines

    def to_csv(self, columns: Sequence[str]) -> str:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["vector"] + list(columns))
        for free, vector in zip(self.free, self.vectors):
            writer.writerow([f"free{free + 1}"] + [str(x) for x in vector])
        return out.getvalue()


# -----------------------------------------------------------------------------
def nullspace(matrix: Union[EvalMatrix, Sequence[Sequence[Fraction]]], ncols: Optional[int] = None) -> NullspaceBasis:
    """Exact kernel basis of the matrix, pivots chosen from the right."""
    if isinstance(matrix, EvalMatrix):
        rows, ncols = matrix.rows, len(matrix.columns)
    else:
        rows = matrix
        ncols = ncols if ncols is not None else len(rows[0])
    reduced, rpivots = _rref([list(row)[::-1] for row in rows], ncols)
    taken = set(rpivots)
    rfree = [c for c in range(ncols) if c not in taken]
    vectors = []
    for f in sorted(rfree, reverse=True):
        vector = [Fraction(0)] * ncols
        vector[f] = Fraction(1)
        for row, pc in zip(reduced, rpivots):
            vector[pc] = -row[f]
        vectors.append(tuple(vector[::-1]))
    free = tuple(ncols - 1 - f for f in sorted(rfree, reverse=True))
    pivots = tuple(sorted(ncols - 1 - pc for pc in rpivots))
    logger.debug(f"nullspace rank {len(rpivots)} of {ncols} columns, free {free}")
    return NullspaceBasis(tuple(vectors), len(rpivots), free, pivots)


# =============================================================================
@dataclass(frozen=True)
class IdentitySpace:
    """Kernel of a model on a monomial basis.

    ``matrix`` holds a row-reduced matrix with the same row space as the
    sampled evaluation matrix.
    """

    basis: MonomialBasis
    model_spec: str
    matrix: EvalMatrix
    kernel: NullspaceBasis
    samples: int

    @property
    def dimension(self) -> int:
        return self.kernel.dimension

    def identities(self) -> List[FreePoly]:
        return [self.basis.as_poly(vector) for vector in self.kernel.vectors]

    def contains(self, p: FreePoly) -> bool:
        """Whether p, in basis coordinates, lies in the kernel span."""
        return self.contains_all([p])[0]

    def contains_all(self, polys: Sequence[FreePoly]) -> List[bool]:
        """Kernel membership of each polynomial, checked against the reduced rows."""
        return vanishing(self.matrix, self.basis, polys)

    def to_json(self) -> dict:
        return {
            "model": self.model_spec,
            "degree": self.basis.degree,
            "symmetry": self.basis.symmetry,
            "basis": self.basis.labels(),
            "samples": self.samples,
            "rank": self.kernel.rank,
            "dimension": self.dimension,
            "free": [f + 1 for f in self.kernel.free],
            "identities": [p.to_dsl() for p in self.identities()],
            "relations": self.kernel.relations_text(),
        }


# -----------------------------------------------------------------------------
def identity_space(
    basis: MonomialBasis,
    model: Model,
    initial: Sequence = (),
    seed: Optional[int] = None,
    worker: Optional[Worker] = None,
) -> IdentitySpace:
    """Sample until the rank stops growing, then take the exact kernel.

    Initial samples are evaluated first, then batches of random values (and
    every basis tuple, for basis models) until the rank has been unchanged
    for ``idspace.stable_batches`` consecutive batches.
    """
    worker = worker or Worker()
    seed = param.seed if seed is None else seed
    batch = param.config.getint("idspace", "batch")
    stable_needed = param.config.getint("idspace", "stable_batches")
    max_batches = param.config.getint("idspace", "max_batches")
    bound = param.config.getint("verify", "bound")
    ncols = len(basis)
    rng = random.Random(seed)

    def extend(rows, samples, first):
        block = build_matrix(basis, model, samples, worker=worker, first=first)
        return _rref(list(rows) + list(block.rows), ncols)[0]

    rows: List[List[Fraction]] = []
    count = 0
    if initial:
        rows = extend(rows, initial, 1)
        count = len(initial)
    if model.carrier == BASIS:
        tuples = list(itertools.product(range(1, model.m + 1), repeat=basis.degree))
        rows = extend(rows, [tuple(model.basis(i) for i in idx) for idx in tuples], count + 1)
        count += len(tuples)

    stable = 0
    for _ in range(max_batches):
        if stable >= stable_needed or len(rows) == ncols:
            break
        samples = [tuple(model.random_value(rng, bound) for _ in range(basis.degree)) for _ in range(batch)]
        before = len(rows)
        rows = extend(rows, samples, count + 1)
        count += batch
        stable = stable + 1 if len(rows) == before else 0
    else:
        logger.warning(f"identity_space: rank still growing after {max_batches} batches")

    logger.info(f"identity_space {model.spec} degree {basis.degree} {basis.symmetry}: rank {len(rows)} of {ncols}")
    labels = tuple(f"r{i}" for i in range(1, len(rows) + 1))
    matrix = EvalMatrix(tuple(basis.labels()), labels, tuple(tuple(row) for row in rows))
    return IdentitySpace(basis, model.spec, matrix, nullspace(rows, ncols), count)


# =============================================================================
@dataclass(frozen=True)
class Consequence:
    """One generator instance; ``label`` is DSL text producing ``poly``."""

    label: str
    poly: FreePoly


# -----------------------------------------------------------------------------
def _product_text(left: str, right: str, kind: str) -> str:
    if kind == freeterm.LIE:
        return f"[{left},{right}]"
    if kind == freeterm.JORDAN:
        return f"{{{left},{right}}}"
    return f"({left}*{right})"


def _relabelled(f: FreePoly, images: Sequence[int], arity: int) -> FreePoly:
    return FreePoly({freeterm.relabel(term, images): coef for term, coef in f.terms.items()}, arity, f.kind)


# -----------------------------------------------------------------------------
def consequence_span(f: FreePoly, target_degree: int, symmetry: str = "none", name: str = "f") -> List[Consequence]:
    """Instances of the multilinear identity f at target_degree.

    At the degree of f these are the variable permutations. One degree up
    they are the products of a fresh variable with f on either side and the
    substitutions of a product of two variables into each slot. Every
    instance is normal-formed for symmetry; zero and repeated instances are
    dropped.

    :param name: macro name used in the labels
    :raises DegreeError: target_degree is not deg f or deg f + 1
    """
    d = f.arity
    if f.is_zero():
        return []
    if not f.is_multilinear():
        raise ArityError(f"{name} is not multilinear in {d} variables")
    names = identities.LETTERS
    found: Dict[FreePoly, str] = {}

    def keep(label, poly):
        poly = reduce(poly, symmetry)
        if poly and poly not in found and -poly not in found:
            found[poly] = label

    if target_degree == d:
        for sigma in itertools.permutations(range(1, d + 1)):
            keep(f"{name}({','.join(names[i - 1] for i in sigma)})", f.permute(sigma))
    elif target_degree == d + 1:
        n = d + 1
        for images in itertools.permutations(range(1, n + 1), d):
            fresh = (set(range(1, n + 1)) - set(images)).pop()
            args = [names[i - 1] for i in images]
            x = names[fresh - 1]
            g = _relabelled(f, images, n)
            call = f"{name}({','.join(args)})"
            r = FreePoly.var(fresh, n, f.kind)
            keep(_product_text(x, call, f.kind), r.multiply(g))
            keep(_product_text(call, x, f.kind), g.multiply(r))
            for slot, image in enumerate(images):
                v = FreePoly.var(image, n, f.kind)
                for left, right, text in [(v, r, (args[slot], x)), (r, v, (x, args[slot]))]:
                    replaced = list(args)
                    replaced[slot] = _product_text(text[0], text[1], f.kind)
                    keep(f"{name}({','.join(replaced)})", g.substitute({image: left.multiply(right)}, n))
    else:
        raise DegreeError(f"consequences of a degree-{d} identity exist at degree {d} or {d + 1}, not {target_degree}")
    logger.debug(f"consequence_span({name}, {target_degree}, {symmetry}) -> {len(found)}")
    return [Consequence(label, poly) for poly, label in found.items()]


# -----------------------------------------------------------------------------
def symmetry_consequences(degree: int, symmetry: str) -> List[Consequence]:
    """Plain polynomials m -+ m' where m' swaps the factors of one node of m.

    ``comm`` gives the consequences of commutativity, ``anticomm`` those of
    anticommutativity.
    """
    if symmetry not in ("comm", "anticomm"):
        raise RbidentError(f"symmetry consequences exist for comm and anticomm, not {symmetry!r}")
    sign = -1 if symmetry == "comm" else 1
    found = {}
    for term in freeterm.monomials(degree):
        for path in freeterm.positions(term):
            node = freeterm.subterm(term, path)
            if not isinstance(node, Mul):
                continue
            swapped = freeterm.replace(term, path, Mul(node.right, node.left))
            poly = FreePoly({term: 1}, degree) + FreePoly({swapped: sign}, degree)
            if poly and poly not in found and -poly not in found:
                found[poly] = f"{freeterm.render(term)} {'-' if sign < 0 else '+'} {freeterm.render(swapped)}"
    return [Consequence(label, poly) for poly, label in found.items()]


# -----------------------------------------------------------------------------
def span_rank(span: Sequence[Union[Consequence, FreePoly]]) -> int:
    """Dimension of the span of the given polynomials."""
    polys = [item.poly if isinstance(item, Consequence) else item for item in span]
    terms = sorted({term for p in polys for term in p.terms}, key=freeterm.term_key)
    if not terms:
        return 0
    rows = [[p.coefficient(term) for term in terms] for p in polys]
    return _to_dm(rows, len(terms)).rank()


# -----------------------------------------------------------------------------
def vanishing(matrix: EvalMatrix, basis: MonomialBasis, polys: Sequence[FreePoly]) -> List[bool]:
    """Whether each polynomial is zero on every row of an evaluation matrix of basis.

    A row holds the basis monomials at one sample, so the value of p there is
    the row times the coordinates of p.
    """
    vectors = [basis.coordinates(p) for p in polys]
    return _annihilated(matrix.rows, vectors, len(basis))


# -----------------------------------------------------------------------------
def in_span(targets: Sequence[FreePoly], span: Sequence[Consequence], symmetry: str = "none") -> List[bool]:
    """Span membership of each target, from one row reduction of the span."""
    polys = [reduce(item.poly, symmetry) for item in span]
    goals = [reduce(target, symmetry) for target in targets]
    terms = sorted({term for p in polys + goals for term in p.terms}, key=freeterm.term_key)
    if not terms:
        return [True] * len(goals)
    reduced, pivots = _rref([[p.coefficient(term) for term in terms] for p in polys], len(terms))
    found = []
    for goal in goals:
        vector = [goal.coefficient(term) for term in terms]
        for row, pc in zip(reduced, pivots):
            factor = vector[pc]
            if factor:
                vector = [v - factor * r for v, r in zip(vector, row)]
        found.append(not any(vector))
    return found


# =============================================================================
@dataclass(frozen=True)
class Decomposition:
    """target = sum(coef * instance) + residual, residual in the kernel."""

    coefficients: Tuple[Tuple[str, Fraction], ...]
    residual: FreePoly

    @property
    def exact(self) -> bool:
        return self.residual.is_zero()

    def to_dsl(self) -> str:
        text = ""
        for label, coef in self.coefficients:
            body = label if abs(coef) == 1 else f"{abs(coef)} {label}"
            if not text:
                text = f"-{body}" if coef < 0 else body
            else:
                text += f" {'-' if coef < 0 else '+'} {body}"
        return text or "0"

    def to_json(self) -> dict:
        return {
            "status": "exact" if self.exact else "modulo kernel",
            "combination": self.to_dsl(),
            "coefficients": {label: str(coef) for label, coef in self.coefficients},
            "residual": self.residual.to_dsl(),
        }


# =============================================================================
@dataclass(frozen=True)
class NotInSpan:
    """The target is outside the span (and the kernel, when one was given)."""

    target: FreePoly
    span_rank: int

    def to_json(self) -> dict:
        return {"status": "not in span", "target": self.target.to_dsl(), "span_rank": self.span_rank}


# -----------------------------------------------------------------------------
def _solve(target: FreePoly, columns: Sequence[FreePoly]) -> Optional[List[Fraction]]:
    """Coefficients x with sum x_i columns_i == target, free variables 0."""
    terms = sorted({term for p in list(columns) + [target] for term in p.terms}, key=freeterm.term_key)
    if not terms:
        return [Fraction(0)] * len(columns)
    rows = [[p.coefficient(term) for p in columns] + [target.coefficient(term)] for term in terms]
    reduced, pivots = _rref(rows, len(columns) + 1)
    if len(columns) in pivots:
        return None
    solution = [Fraction(0)] * len(columns)
    for row, pc in zip(reduced, pivots):
        solution[pc] = row[-1]
    return solution


# -----------------------------------------------------------------------------
def decompose(
    target: FreePoly,
    span: Sequence[Consequence],
    kernel_context: Optional[IdentitySpace] = None,
    symmetry: str = "none",
) -> Union[Decomposition, NotInSpan]:
    """Write target as a combination of span instances.

    An exact combination is tried first. With a kernel context the
    difference may be any identity of that model, returned as residual.

    :param span: instances from :func:`consequence_span`
    :param kernel_context: identity space of a model of the same degree
    """
    goal = reduce(target, symmetry)
    polys = [reduce(item.poly, symmetry) for item in span]
    solution = _solve(goal, polys)
    kernel_polys: List[FreePoly] = []
    if solution is None and kernel_context is not None:
        kernel_polys = [reduce(p, symmetry) for p in kernel_context.identities()]
        solution = _solve(goal, polys + kernel_polys)
    if solution is None:
        logger.debug(f"decompose: {goal.to_dsl()[:60]} not in span")
        return NotInSpan(goal, span_rank(polys))

    coefficients = tuple((item.label, coef) for item, coef in zip(span, solution) if coef)
    residual = FreePoly.zero(goal.arity, goal.kind)
    for p, coef in zip(kernel_polys, solution[len(polys):]):
        residual = residual + coef * p
    return Decomposition(coefficients, FreePoly(residual.terms, goal.arity, goal.kind))


# -----------------------------------------------------------------------------
def verify_decomposition(
    target: FreePoly, stated: FreePoly, symmetry: str = "none", kernel_context: Optional[IdentitySpace] = None
) -> Tuple[str, FreePoly]:
    """Compare target with a stated combination.

    :returns: (status, difference) with status ``exact`` when the normal
        forms agree, ``kernel`` when the difference is an identity of the
        kernel model and ``fails`` otherwise
    """
    difference = reduce(target, symmetry) - reduce(stated, symmetry)
    if difference.is_zero():
        return "exact", difference
    if kernel_context is not None and kernel_context.contains(difference):
        return "kernel", difference
    return "fails", difference
