"""Exact rational numbers and univariate polynomials over Q.

Rationals are plain :class:`fractions.Fraction` values. :class:`QPoly` is a
sparse, immutable polynomial in ``x`` with the calculus the integration models
need: derivative and iterated integration with zero constants.
"""

# Global imports
import math
import re
from fractions import Fraction
from typing import Dict, Iterator, Optional, Tuple, Union

# Local imports
from rbcommon import RbidentError

Rat = Fraction
Scalar = Union[int, Fraction]

_TERM_RE = re.compile(r"^(?P<coef>[0-9]+(?:/[0-9]+)?)?(?:\*?x(?:\^(?P<exp>[0-9]+))?)?$")


# -----------------------------------------------------------------------------
def format_rat(value: Scalar) -> str:
    """Serialize a rational as ``p/q``, omitting ``q`` when it is 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


# -----------------------------------------------------------------------------
def parse_rat(text: str) -> Fraction:
    """Parse ``p/q`` or ``p`` back into a Fraction.

    :raises RbidentError: on malformed input
    """
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise RbidentError(f"not a rational number: {text!r}") from exc


# =============================================================================
class QPoly:
    """Sparse polynomial with rational coefficients.

    The coefficient map never stores zeros, so two equal polynomials always
    have equal maps. Instances are treated as immutable.
    """

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs: Optional[Dict[int, Scalar]] = None):
        clean = {}
        for exp, coef in (coeffs or {}).items():
            if exp < 0:
                raise RbidentError(f"negative exponent {exp}")
            coef = Fraction(coef)
            if coef:
                clean[int(exp)] = coef
        self._coeffs = clean
        self._hash = None

    # -------------------------------------------------------------------------
    @classmethod
    def monomial(cls, exp: int, coef: Scalar = 1) -> "QPoly":
        """Return ``coef * x**exp``."""
        return cls({exp: coef})

    # -------------------------------------------------------------------------
    @classmethod
    def constant(cls, coef: Scalar) -> "QPoly":
        return cls({0: coef})

    # -------------------------------------------------------------------------
    @classmethod
    def divided_power(cls, exp: int) -> "QPoly":
        """Return ``x**exp / exp!``, the divided-power basis element e_exp."""
        return cls({exp: Fraction(1, math.factorial(exp))})

    @property
    def degree(self) -> Optional[int]:
        """Degree, or ``None`` for the zero polynomial."""
        return max(self._coeffs) if self._coeffs else None

    # -------------------------------------------------------------------------
    def coefficient(self, exp: int) -> Fraction:
        return self._coeffs.get(exp, Fraction(0))

    # -------------------------------------------------------------------------
    def items(self) -> Iterator[Tuple[int, Fraction]]:
        """Yield (exponent, coefficient) pairs in ascending exponent order."""
        for exp in sorted(self._coeffs):
            yield exp, self._coeffs[exp]

    # -------------------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self._coeffs

    # -------------------------------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self._coeffs)

    # -------------------------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = QPoly.constant(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    # -------------------------------------------------------------------------
    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._coeffs.items()))
        return self._hash

    # -------------------------------------------------------------------------
    def __add__(self, other: "QPoly") -> "QPoly":
        if isinstance(other, (int, Fraction)):
            other = QPoly.constant(other)
        result = dict(self._coeffs)
        for exp, coef in other._coeffs.items():
            result[exp] = result.get(exp, 0) + coef
        return QPoly(result)

    __radd__ = __add__

    # -------------------------------------------------------------------------
    def __neg__(self) -> "QPoly":
        return QPoly({exp: -coef for exp, coef in self._coeffs.items()})

    # -------------------------------------------------------------------------
    def __sub__(self, other: "QPoly") -> "QPoly":
        if isinstance(other, (int, Fraction)):
            other = QPoly.constant(other)
        return self + (-other)

    # -------------------------------------------------------------------------
    def __mul__(self, other: Union["QPoly", Scalar]) -> "QPoly":
        if isinstance(other, (int, Fraction)):
            return scale(other, self)
        if not isinstance(other, QPoly):
            return NotImplemented
        result: Dict[int, Fraction] = {}
        for exp_a, coef_a in self._coeffs.items():
            for exp_b, coef_b in other._coeffs.items():
                exp = exp_a + exp_b
                result[exp] = result.get(exp, 0) + coef_a * coef_b
        return QPoly(result)

    # -------------------------------------------------------------------------
    def __rmul__(self, other: Scalar) -> "QPoly":
        return scale(other, self)

    # -------------------------------------------------------------------------
    def __call__(self, point: Scalar) -> Fraction:
        """Evaluate at a rational point (Horner)."""
        value = Fraction(0)
        point = Fraction(point)
        for exp in range(self.degree if self._coeffs else 0, -1, -1):
            value = value * point + self._coeffs.get(exp, 0)
        return value

    # -------------------------------------------------------------------------
    def derivative(self) -> "QPoly":
        return derivative(self)

    # -------------------------------------------------------------------------
    def integrate(self, k: int = 1) -> "QPoly":
        return integrate(self, k)

    # -------------------------------------------------------------------------
    def serialize(self) -> str:
        """``c0 + c1*x + c2*x^2`` in ascending order, ``0`` for zero."""
        if not self._coeffs:
            return "0"
        parts = []
        for exp, coef in self.items():
            if exp == 0:
                body = format_rat(abs(coef))
            elif exp == 1:
                body = f"{format_rat(abs(coef))}*x"
            else:
                body = f"{format_rat(abs(coef))}*x^{exp}"
            if not parts:
                parts.append(body if coef > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if coef > 0 else f"- {body}")
        return " ".join(parts)

    # -------------------------------------------------------------------------
    @classmethod
    def parse(cls, text: str) -> "QPoly":
        """Parse the :meth:`serialize` format (also accepts ``x^k`` and ``c``).

        :raises RbidentError: on malformed input
        """
        source = text.replace(" ", "")
        if not source:
            raise RbidentError("empty polynomial")
        if source[0] not in "+-":
            source = "+" + source
        tokens = re.findall(r"[+-][^+-]+", source)
        if "".join(tokens) != source:
            raise RbidentError(f"malformed polynomial: {text!r}")
        result: Dict[int, Fraction] = {}
        for token in tokens:
            sign, body = token[0], token[1:]
            match = _TERM_RE.match(body)
            if not match or not body:
                raise RbidentError(f"malformed term {body!r} in {text!r}")
            coef = parse_rat(match.group("coef")) if match.group("coef") else Fraction(1)
            if "x" in body:
                exp = int(match.group("exp")) if match.group("exp") else 1
            else:
                exp = 0
            if sign == "-":
                coef = -coef
            result[exp] = result.get(exp, 0) + coef
        return cls(result)

    # -------------------------------------------------------------------------
    def __repr__(self) -> str:
        return f"QPoly({self.serialize()!r})"


X = QPoly.monomial(1)
ZERO = QPoly()
ONE = QPoly.constant(1)


# -----------------------------------------------------------------------------
def add(a: QPoly, b: QPoly) -> QPoly:
    return a + b


# -----------------------------------------------------------------------------
def mul(a: QPoly, b: QPoly) -> QPoly:
    return a * b


# -----------------------------------------------------------------------------
def scale(c: Scalar, a: QPoly) -> QPoly:
    """Multiply every coefficient of ``a`` by the rational ``c``."""
    c = Fraction(c)
    if not c:
        return ZERO
    return QPoly({exp: c * coef for exp, coef in a.items()})


# -----------------------------------------------------------------------------
def derivative(a: QPoly) -> QPoly:
    """Formal derivative."""
    return QPoly({exp - 1: exp * coef for exp, coef in a.items() if exp > 0})


# -----------------------------------------------------------------------------
def integrate(a: QPoly, k: int = 1) -> QPoly:
    """k-fold antiderivative with lower limit 0.

    ``x^j`` maps to ``j!/(j+k)! x^(j+k)``.

    :param a: polynomial to integrate
    :param k: number of integrations, ``k >= 0``
    :returns: the iterated integral; ``a`` itself when ``k == 0``
    """
    if k < 0:
        raise RbidentError(f"integration count must be >= 0, got {k}")
    if k == 0:
        return a
    return QPoly({exp + k: coef / math.perm(exp + k, k) for exp, coef in a.items()})
