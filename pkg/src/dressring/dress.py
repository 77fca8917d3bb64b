"""Membership, units, divisibility and numerator classification for the ring D.

D is the subring of the rational-function field generated by all 1/(1 + x^2):
exactly the fractions f/g whose reduced denominator has no real roots and
whose degree is <= 0.  Membership is decided on the reduced form; this is
sound because a common factor of any root-free-denominator presentation is
itself root-free and cancelling it drops both degrees equally.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import NotInDressRing, ZeroPolynomialError
from .polynomials import (
    Degree,
    Polynomial,
    RationalFunction,
    divrem,
    squarefree_decomposition,
)
from .realroots import _rational_roots, count_distinct_real_roots, is_gamma


def is_member(r: RationalFunction) -> bool:
    """True iff r lies in D: root-free reduced denominator and degree <= 0."""
    if r.is_zero:
        return True
    return r.degree <= 0 and is_gamma(r.den)


def membership_failure(r: RationalFunction) -> Optional[str]:
    """None when r is a member, else which condition failed."""
    if r.is_zero:
        return None
    if not is_gamma(r.den):
        return "denominator-has-real-roots"
    if r.degree > 0:
        return "positive-degree"
    return None


def is_unit(r: RationalFunction) -> bool:
    """True iff r is invertible in D: numerator and denominator root-free of equal degree."""
    if r.is_zero:
        return False
    return r.degree == 0 and is_gamma(r.den) and is_gamma(r.num)


@dataclass(frozen=True)
class DressElement:
    """A rational function certified to lie in D.

    Construction is checked, never trusted: a failed check raises
    :class:`NotInDressRing` carrying the violated condition.  Values are
    immutable; all arithmetic is pure and re-certifies its result.
    """

    value: RationalFunction

    def __post_init__(self):
        reason = membership_failure(self.value)
        if reason is not None:
            raise NotInDressRing(self.value, reason)

    @staticmethod
    def from_parts(num: Polynomial, den: Polynomial) -> "DressElement":
        return DressElement(RationalFunction.make(num, den))

    @staticmethod
    def from_rational(c) -> "DressElement":
        return DressElement(RationalFunction.from_rational(c))

    @staticmethod
    def zero() -> "DressElement":
        return DressElement(RationalFunction.zero())

    @staticmethod
    def one() -> "DressElement":
        return DressElement(RationalFunction.one())

    @property
    def numerator(self) -> Polynomial:
        return self.value.num

    @property
    def denominator(self) -> Polynomial:
        return self.value.den

    @property
    def degree(self) -> Degree:
        return self.value.degree

    @property
    def is_zero(self) -> bool:
        return self.value.is_zero

    def is_unit(self) -> bool:
        return is_unit(self.value)

    def __bool__(self) -> bool:
        return bool(self.value)

    def __add__(self, other) -> "DressElement":
        return DressElement(self.value + _val(other))

    __radd__ = __add__

    def __neg__(self) -> "DressElement":
        return DressElement(-self.value)

    def __sub__(self, other) -> "DressElement":
        return DressElement(self.value - _val(other))

    def __rsub__(self, other) -> "DressElement":
        return DressElement(_val(other) - self.value)

    def __mul__(self, other) -> "DressElement":
        return DressElement(self.value * _val(other))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "DressElement":
        return DressElement(self.value**n)

    def quotient(self, other: "DressElement") -> RationalFunction:
        """self / other in the fraction field; not necessarily a member."""
        return self.value / _val(other)

    def inverse(self) -> "DressElement":
        """1 / self; raises NotInDressRing unless self is a unit."""
        return DressElement(RationalFunction.one() / self.value)

    def __str__(self) -> str:
        return str(self.value)

    def __repr__(self) -> str:
        return f"DressElement({self.value})"


def _val(x) -> RationalFunction:
    if isinstance(x, DressElement):
        return x.value
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, (int, Fraction, Polynomial)):
        from .polynomials import _coerce_rf

        return _coerce_rf(x)
    raise TypeError(f"cannot mix DressElement with {type(x).__name__}")


def divides(a: DressElement, b: DressElement) -> bool:
    """True iff b/a stays in D.  Everything divides zero; a must be nonzero."""
    if a.is_zero:
        raise ZeroPolynomialError("division by the zero element")
    if b.is_zero:
        return True
    return is_member(b.value / a.value)


def associates(a: DressElement, b: DressElement) -> bool:
    """True iff a and b generate the same principal ideal (ratio a unit, or both zero)."""
    if a.is_zero or b.is_zero:
        return a.is_zero and b.is_zero
    return is_unit(a.value / b.value)


@dataclass(frozen=True)
class NumeratorClassification:
    """Square-free content of a reduced numerator, sorted by real-root behaviour.

    Each entry is a (monic factor, multiplicity) pair certified by a Sturm
    count: real_rooted factors have as many distinct real roots as their
    degree, root_free factors have none, mixed factors are strictly in
    between.  ``constant`` is the leading scalar, so that
    constant * prod(factor ** multiplicity) reproduces the numerator exactly.

    Root-free factors may legally be moved into the unit part by a caller.
    Beyond linear factors at rational roots no irreducible factorization is
    attempted, so a listed factor need not be irreducible over Q.
    """

    constant: Fraction
    real_rooted: tuple[tuple[Polynomial, int], ...] = field(default=())
    root_free: tuple[tuple[Polynomial, int], ...] = field(default=())
    mixed: tuple[tuple[Polynomial, int], ...] = field(default=())

    def reassemble(self) -> Polynomial:
        p = Polynomial.constant(self.constant)
        for factor, mult in self.real_rooted + self.root_free + self.mixed:
            p = p * factor**mult
        return p


def classify_numerator(a: DressElement) -> NumeratorClassification:
    """Classify the square-free factors of a's reduced numerator by root type."""
    if a.is_zero:
        raise ZeroPolynomialError("cannot classify the zero element")
    num = a.numerator
    constant = num.leading_coefficient
    real_rooted: list[tuple[Polynomial, int]] = []
    root_free: list[tuple[Polynomial, int]] = []
    mixed: list[tuple[Polynomial, int]] = []
    for s, mult in squarefree_decomposition(num):
        for root in _rational_roots(s):
            lin = Polynomial.from_coeffs([-root, 1])
            real_rooted.append((lin, mult))
            s, rem = divrem(s, lin)
            assert rem.is_zero
        if s.degree >= 1:
            n_real = count_distinct_real_roots(s)
            if n_real == 0:
                root_free.append((s, mult))
            elif n_real == s.degree:
                real_rooted.append((s, mult))
            else:
                mixed.append((s, mult))
    return NumeratorClassification(
        constant=constant,
        real_rooted=tuple(real_rooted),
        root_free=tuple(root_free),
        mixed=tuple(mixed),
    )
