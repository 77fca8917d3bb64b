"""Factorization of singular 2x2 matrices over D into idempotent factors.

The pipeline factors row matrices (p q; 0 0):

* trivial rows and proportional rows come from the two-line identities
  (0 q; 0 0) = (1 0; 0 0)(0 q; 0 1) and
  (p 0; 0 0) = (1 -1; 0 0)(1 0; 1-p 0);
* a strict degree gap is removed by one shear similarity (p, q) -> (p, p+q),
  which keeps the sign hypothesis because p vanishes at its own roots;
* the equal-degree core writes the *swapped* row (y/g, x/g; 0 0) as
  (d/(g b), 0; 0 0) * T, where d = x^2 + y*b comes from the positivity
  certificate and T = (b y/d, b x/d; y x/d, x^2/d) is idempotent with trace
  (y b + x^2)/d = 1; a final swap restores the requested order.  (Writing the
  product for the swapped row, rather than the row itself, is what makes the
  middle identity exact; expanding the unswapped variant gives the wrong
  product.)

Factor lists multiply left-to-right: the product of ``factors`` in sequence
order equals ``target``.  Every constructor re-verifies membership,
idempotency and the exact product before returning.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .dress import DressElement, is_member
from .errors import (
    CertificatePreconditionError,
    HypothesisNotMet,
    InternalSearchError,
    ShapeViolation,
    ZeroPolynomialError,
)
from .polynomials import (
    Polynomial,
    RationalFunction,
    affine_substitute,
    divrem,
    poly_gcd,
    poly_lcm,
)
from .realroots import SignPattern, is_gamma, is_gamma_plus, sign_at_roots

_SCALE_SEARCH_CAP = 1_000
_FACTOR_COUNT_BOUND = 12  # empirical bound for the fixed pipeline, asserted in tests


@dataclass(frozen=True)
class Mat2:
    """2x2 matrix over D, row-major."""

    a: DressElement
    b: DressElement
    c: DressElement
    d: DressElement

    @staticmethod
    def of(a, b, c, d) -> "Mat2":
        return Mat2(_elem(a), _elem(b), _elem(c), _elem(d))

    @staticmethod
    def row(p, q) -> "Mat2":
        """The row matrix (p q; 0 0)."""
        zero = DressElement.zero()
        return Mat2(_elem(p), _elem(q), zero, zero)

    @staticmethod
    def identity() -> "Mat2":
        one, zero = DressElement.one(), DressElement.zero()
        return Mat2(one, zero, zero, one)

    @staticmethod
    def zero() -> "Mat2":
        z = DressElement.zero()
        return Mat2(z, z, z, z)

    def __mul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def entries(self) -> tuple[DressElement, DressElement, DressElement, DressElement]:
        return (self.a, self.b, self.c, self.d)

    def trace(self) -> DressElement:
        return self.a + self.d

    def det(self) -> DressElement:
        return self.a * self.d - self.b * self.c

    def is_singular(self) -> bool:
        return self.det().is_zero

    def has_zero_second_row(self) -> bool:
        return self.c.is_zero and self.d.is_zero

    def __str__(self) -> str:
        from .parsing import format_matrix

        return format_matrix(self)

    def __repr__(self) -> str:
        return f"Mat2({self})"


def _elem(x) -> DressElement:
    if isinstance(x, DressElement):
        return x
    if isinstance(x, RationalFunction):
        return DressElement(x)
    if isinstance(x, (int, Fraction)):
        return DressElement.from_rational(x)
    if isinstance(x, Polynomial):
        return DressElement(RationalFunction.from_polynomial(x))
    raise TypeError(f"cannot use {type(x).__name__} as a matrix entry")


def is_idempotent(m: Mat2) -> bool:
    """Exact test m * m == m."""
    return m * m == m


def complete_idempotent_pair(p: DressElement, q: DressElement) -> Optional[Mat2]:
    """Extend a first row (p q) to an idempotent matrix (p q; r 1-p), if possible.

    Requires r = p(1 - p)/q to lie in D; returns None when it does not.
    """
    if q.is_zero:
        raise ZeroPolynomialError("the pair completion needs q != 0")
    top = p * (DressElement.one() - p)
    r = top.value / q.value
    if not is_member(r):
        return None
    m = Mat2(p, q, DressElement(r), DressElement.one() - p)
    assert is_idempotent(m)
    return m


@dataclass(frozen=True)
class PositivityCertificate:
    """Data making x^2 + y*beta everywhere positive.

    ``base`` is the signed root-free seed c*(1+X^2)^(e/2) and ``scale`` the
    positive rational found by the halving search, so beta = -scale * base.
    Invariants (checked at construction): delta = x^2 + y*beta, delta is
    everywhere positive, beta is root-free, deg x - 1 <= deg beta <= deg x and
    deg delta = 2 deg x.
    """

    beta: Polynomial
    delta: Polynomial
    scale: Fraction
    base: Polynomial


def positivity_certificate(x: Polynomial, y: Polynomial) -> PositivityCertificate:
    """Find beta with x^2 + y*beta everywhere positive.

    Preconditions: x, y nonzero of equal degree, and y of one strict sign at
    every real root of x (vacuous when x has none).  The seed is
    +-c (1+X^2)^(e/2) with e the even member of {deg x - 1, deg x}; its sign
    opposes y's sign at the roots of x, c shrinks until the leading
    coefficient of x^2 - base*y is positive, and the scale halves until the
    positivity test passes.  Termination is guaranteed: every sufficiently
    small positive scale works.
    """
    if x.is_zero or y.is_zero:
        raise CertificatePreconditionError("certificate inputs must be nonzero")
    if x.degree != y.degree:
        raise CertificatePreconditionError(
            f"certificate needs equal degrees, got {x.degree} and {y.degree}"
        )
    pattern = sign_at_roots(y, x)
    if not pattern.is_definite():
        raise CertificatePreconditionError(f"sign of y at roots of x is {pattern.value}")

    n = int(x.degree)
    e = n if n % 2 == 0 else n - 1
    seed = Polynomial.from_coeffs([1, 0, 1]) ** (e // 2)

    if pattern == SignPattern.ALL_POSITIVE:
        sign = -1
    elif pattern == SignPattern.ALL_NEGATIVE:
        sign = 1
    else:  # x has no real roots; any sign works, pick the one that can't fight the lc
        sign = -1 if y.leading_coefficient > 0 else 1

    # Shrink c until lc(x^2 - base*y) > 0.  For odd n the seed degree is below
    # 2n - deg y, so the leading coefficient is lc(x)^2 automatically.
    c = Fraction(1)
    lc_target = x.leading_coefficient**2
    if e + int(y.degree) == 2 * n:
        for _ in range(_SCALE_SEARCH_CAP):
            if lc_target - sign * c * y.leading_coefficient > 0:
                break
            c /= 2
        else:
            raise InternalSearchError("leading-coefficient shrink did not converge")
    base = seed.scale(sign * c)

    x_sq = x * x
    scale = Fraction(1)
    for _ in range(_SCALE_SEARCH_CAP):
        delta = x_sq - (base * y).scale(scale)
        if is_gamma_plus(delta):
            beta = base.scale(-scale)
            assert is_gamma(beta)
            assert x_sq + y * beta == delta
            assert n - 1 <= beta.degree <= n and delta.degree == 2 * n
            return PositivityCertificate(beta=beta, delta=delta, scale=scale, base=base)
        scale /= 2
    raise InternalSearchError("positivity scale search did not converge; this is a bug")


def positivity_certificate_b(x: Polynomial, y: Polynomial) -> PositivityCertificate:
    """Mirror certificate: eta (returned in ``beta``) with x*eta + y^2 everywhere positive.

    This is the role-swapped form: precondition is a definite sign of x at the
    roots of y, and the invariants read delta = x*beta + y^2 with
    deg y - 1 <= deg beta <= deg y.
    """
    return positivity_certificate(y, x)


@dataclass(frozen=True)
class Factorization:
    """A target matrix with a list of idempotent factors multiplying to it.

    The constructor does not verify; pipeline functions call
    :func:`verify_factorization` (and assert) before handing one out, and the
    same reports are available to callers for independently built candidates.
    """

    target: Mat2
    factors: tuple[Mat2, ...]

    def product(self) -> Mat2:
        acc = Mat2.identity()
        for f in self.factors:
            acc = acc * f
        return acc


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    failure: Optional[str] = None
    factor_index: Optional[int] = None


def verify_factorization(f: Factorization) -> VerificationReport:
    """Re-check entry membership, idempotency of every factor, and the exact product."""
    for i, m in enumerate(f.factors):
        for entry in m.entries():
            if not is_member(entry.value):  # unreachable through DressElement, kept for reports
                return VerificationReport(False, "entry-not-in-ring", i)
        if not is_idempotent(m):
            return VerificationReport(False, "factor-not-idempotent", i)
    if f.product() != f.target:
        return VerificationReport(False, "product-mismatch")
    return VerificationReport(True)


def _checked(target: Mat2, factors: list[Mat2]) -> Factorization:
    fact = Factorization(target, tuple(factors))
    report = verify_factorization(fact)
    assert report.ok, f"pipeline produced an invalid factorization: {report.failure}"
    return fact


def _shear(u) -> Mat2:
    """(1 u; 0 1); invertible over D whenever u is."""
    return Mat2.of(1, u, 0, 1)


def _perm() -> Mat2:
    return Mat2.of(0, 1, 1, 0)


def _invert(p: Mat2) -> Mat2:
    det = p.det()
    if not det.is_unit():
        raise ShapeViolation("conjugation needs a matrix invertible over the ring")
    inv_det = det.inverse()
    return Mat2(p.d * inv_det, -p.b * inv_det, -p.c * inv_det, p.a * inv_det)


def conjugate_factorization(f: Factorization, p: Mat2) -> Factorization:
    """Map every factor E to P^-1 E P (and the target likewise); similarity
    preserves idempotency and products, and all invariants are re-verified."""
    p_inv = _invert(p)
    new_target = p_inv * f.target * p
    new_factors = [p_inv * e * p for e in f.factors]
    return _checked(new_target, new_factors)


def swap_factorization(f: Factorization) -> Factorization:
    """From a factorization of (p q; 0 0) produce one of (q p; 0 0).

    Conjugating by the permutation matrix factors (0 0; p q); prepending the
    idempotent (1 1; 0 0) then restores a row matrix with the entries swapped.
    """
    if not f.target.has_zero_second_row():
        raise ShapeViolation("swap needs a target with zero second row")
    perm = _perm()
    swapped = [perm * e * perm for e in f.factors]
    new_target = Mat2.row(f.target.b, f.target.a)
    return _checked(new_target, [Mat2.of(1, 1, 0, 0)] + swapped)


def _factor_zero_q(p: DressElement) -> list[Mat2]:
    # (p 0; 0 0) = (1 -1; 0 0)(1 0; 1-p 0)
    return [Mat2.of(1, -1, 0, 0), Mat2(DressElement.one(), DressElement.zero(),
                                       DressElement.one() - p, DressElement.zero())]


def _factor_zero_p(q: DressElement) -> list[Mat2]:
    # (0 q; 0 0) = (1 0; 0 0)(0 q; 0 1)
    return [Mat2.of(1, 0, 0, 0), Mat2(DressElement.zero(), q, DressElement.zero(),
                                      DressElement.one())]


def _factor_proportional(p: DressElement, r: DressElement) -> list[Mat2]:
    # (p rp; 0 0) = (1 -1; 0 0)(1 0; 1-p 0)(1 r; 0 0)
    return _factor_zero_q(p) + [Mat2.row(DressElement.one(), r)]


def factor_row_matrix(p: DressElement, q: DressElement) -> Factorization:
    """Factor (p q; 0 0) into idempotent matrices over D.

    Branches, in order: zero entries; proportional entries (either way); the
    main sign-hypothesis pipeline for deg p >= deg q (with a swap reduction
    for the mirrored hypothesis); the small-degree construction for quadratic
    numerators sharing a linear factor.  When no branch applies,
    HypothesisNotMet reports the computed sign patterns and degrees.
    """
    target = Mat2.row(p, q)
    if p.is_zero and q.is_zero:
        return _checked(target, [Mat2.zero()])
    if p.is_zero:
        return _checked(target, _factor_zero_p(q))
    if q.is_zero:
        return _checked(target, _factor_zero_q(p))

    ratio_qp = q.value / p.value
    if is_member(ratio_qp):
        return _checked(target, _factor_proportional(p, DressElement(ratio_qp)))
    ratio_pq = p.value / q.value
    if is_member(ratio_pq):
        swapped = _checked(Mat2.row(q, p), _factor_proportional(q, DressElement(ratio_pq)))
        return swap_factorization(swapped)

    sign_q_at_p = sign_at_roots(q.numerator, p.numerator)
    if p.degree >= q.degree and sign_q_at_p.is_definite():
        return _factor_dominant(p, q)
    sign_p_at_q = sign_at_roots(p.numerator, q.numerator)
    if q.degree >= p.degree and sign_p_at_q.is_definite():
        return swap_factorization(_factor_dominant(q, p))

    small = _try_small_common_root(p, q)
    if small is not None:
        return small
    raise HypothesisNotMet(
        "no factorization hypothesis applies: "
        f"deg p = {p.degree}, deg q = {q.degree}, "
        f"sign of q at roots of p: {sign_q_at_p.value}, "
        f"sign of p at roots of q: {sign_p_at_q.value}",
        sign_q_at_p=sign_q_at_p,
        sign_p_at_q=sign_p_at_q,
        deg_p=p.degree,
        deg_q=q.degree,
    )


def _factor_dominant(p: DressElement, q: DressElement) -> Factorization:
    """Hypothesis branch: deg p >= deg q and q sign-definite at the roots of p."""
    if p.degree > q.degree:
        # One shear similarity replaces q by p + q, which has deg p exactly and
        # the same values as q at every root of p.
        inner = _factor_equal_degree(p, p + q)
        return conjugate_factorization(inner, _shear(-1))
    return _factor_equal_degree(p, q)


def _factor_equal_degree(p: DressElement, q: DressElement) -> Factorization:
    gamma = poly_lcm(p.denominator, q.denominator)
    cof_p, rem = divrem(gamma, p.denominator)
    assert rem.is_zero
    cof_q, rem = divrem(gamma, q.denominator)
    assert rem.is_zero
    x = p.numerator * cof_p
    y = q.numerator * cof_q
    assert x.degree == y.degree
    if gamma.degree > x.degree + 1:
        # Pad: pull out (tau/gamma 0; 0 0) so the remaining denominator tau has
        # the even degree in {deg x, deg x + 1}.
        n = int(x.degree)
        e = n if n % 2 == 0 else n + 1
        tau = Polynomial.from_coeffs([1, 0, 1]) ** (e // 2)
        prefix = _factor_zero_q(DressElement.from_parts(tau, gamma))
        core = _factor_core(x, y, tau)
        return _checked(Mat2.row(p, q), prefix + list(core.factors))
    return _factor_core(x, y, gamma)


def _factor_core(x: Polynomial, y: Polynomial, gamma: Polynomial) -> Factorization:
    """Equal-degree core over a common denominator with deg gamma <= deg x + 1."""
    cert = positivity_certificate(x, y)
    beta, delta = cert.beta, cert.delta
    u = DressElement(RationalFunction.make(delta, gamma * beta))
    assert u.is_unit(), "delta/(gamma*beta) must be a unit"
    t = Mat2(
        DressElement.from_parts(beta * y, delta),
        DressElement.from_parts(beta * x, delta),
        DressElement.from_parts(y * x, delta),
        DressElement.from_parts(x * x, delta),
    )
    assert is_idempotent(t)
    swapped_row = _checked(
        Mat2.row(DressElement.from_parts(y, gamma), DressElement.from_parts(x, gamma)),
        _factor_zero_q(u) + [t],
    )
    return swap_factorization(swapped_row)


def _try_small_common_root(p: DressElement, q: DressElement) -> Optional[Factorization]:
    """The quadratic-numerators-with-common-linear-factor construction, if it applies."""
    gamma = poly_lcm(p.denominator, q.denominator)
    cof_p, _ = divrem(gamma, p.denominator)
    cof_q, _ = divrem(gamma, q.denominator)
    x = p.numerator * cof_p
    y = q.numerator * cof_q
    if x.degree != 2 or y.degree != 2:
        return None
    m = poly_gcd(x, y)
    if m.degree != 1:
        return None  # degree 2 gcd means proportional, already handled
    return _factor_quadratics_sharing_root(p, q, x, y, gamma, m)


def factor_small(p: DressElement, q: DressElement) -> Factorization:
    """Small-numerator factorizations: degrees <= 1, or quadratics sharing a root.

    Over the common denominator, numerators of degree <= 1 always satisfy a
    main-pipeline branch (a single root forces a definite sign, and common
    roots force proportionality), so they dispatch there.  Two degree-2
    numerators with a nonconstant gcd use the dedicated construction.
    """
    gamma = poly_lcm(p.denominator, q.denominator)
    cof_p, _ = divrem(gamma, p.denominator)
    cof_q, _ = divrem(gamma, q.denominator)
    x = p.numerator * cof_p
    y = q.numerator * cof_q
    if x.degree <= 1 and y.degree <= 1:
        return factor_row_matrix(p, q)
    if x.degree == 2 and y.degree == 2:
        m = poly_gcd(x, y)
        if m.degree == 2:
            return factor_row_matrix(p, q)  # proportional
        if m.degree == 1:
            return _factor_quadratics_sharing_root(p, q, x, y, gamma, m)
    raise ShapeViolation(
        "factor_small needs numerators of degree <= 1, or degree-2 numerators "
        f"with a nonconstant gcd (got degrees {x.degree}, {y.degree})"
    )


def _factor_quadratics_sharing_root(
    p: DressElement,
    q: DressElement,
    x: Polynomial,
    y: Polynomial,
    gamma: Polynomial,
    m: Polynomial,
) -> Factorization:
    """deg x = deg y = 2 with gcd M = X - rho: build one idempotent directly.

    After moving rho to 0, x = X*x1 and y = X*y1 with x1, y1 linear and
    independent; c*x + y = s'X for c = -lc(y1)/lc(x1) ... more precisely we use
    the combination c*x + y with c chosen to kill the quadratic term, giving a
    row (x/d, s'X/d; 0 0) that extends to an idempotent via
    z = (d - x)x/(s'X).  A shear conjugation restores (x/d, y/d; 0 0), a
    prefactor (d/gamma 0; 0 0) restores the denominator, and the substitution
    is undone at the end.
    """
    rho = -m.coeffs[0]  # m = X - rho, monic linear
    x_t = _shift_poly(x, rho)
    y_t = _shift_poly(y, rho)
    gamma_t = _shift_poly(gamma, rho)
    x1, rem = divrem(x_t, Polynomial.x())
    assert rem.is_zero
    y1, rem = divrem(y_t, Polynomial.x())
    assert rem.is_zero
    # c kills the quadratic term of c*x_t + y_t: c = -lc(y1)/lc(x1).
    c = -y1.leading_coefficient / x1.leading_coefficient
    combo = x1.scale(c) + y1
    assert combo.degree <= 0
    if combo.is_zero:
        # x and y proportional after all; cannot happen with deg gcd = 1.
        raise ShapeViolation("numerators are proportional, use the divisibility branch")
    s_prime = combo.coeffs[0]

    delta = _grow_linear_to_gamma(x_t)
    diff = delta - x_t
    assert diff.degree == 1
    z = (diff * x1).scale(1 / s_prime)
    sx = Polynomial.x().scale(s_prime)
    e = Mat2(
        DressElement.from_parts(x_t, delta),
        DressElement.from_parts(sx, delta),
        DressElement.from_parts(z, delta),
        DressElement.from_parts(diff, delta),
    )
    assert is_idempotent(e)
    b_row = _checked(
        Mat2.row(DressElement.from_parts(x_t, delta), DressElement.from_parts(sx, delta)),
        [Mat2.of(1, 0, 0, 0), e],
    )
    # b_row is the conjugate of (x/delta, y/delta; 0 0) by the shear with
    # parameter c; conjugating by the shear with parameter -c undoes it... and
    # c = 1/r in the usual notation x + r y = s X.
    a_row = conjugate_factorization(b_row, _shear(-c))
    prefix = _factor_zero_q(DressElement.from_parts(delta, gamma_t))
    shifted = _checked(
        Mat2.row(DressElement.from_parts(x_t, gamma_t), DressElement.from_parts(y_t, gamma_t)),
        prefix + list(a_row.factors),
    )
    unshifted = _substitute_factorization(shifted, -rho)
    assert unshifted.target == Mat2.row(p, q)
    return unshifted


def _shift_poly(p: Polynomial, rho: Fraction) -> Polynomial:
    from .polynomials import affine_compose

    if rho == 0:
        return p
    return affine_compose(p, 1, rho)


def _grow_linear_to_gamma(x_t: Polynomial) -> Polynomial:
    """First delta = x_t + (X + c0), c0 in +-{1, 2, 4, ...}, with no real roots."""
    direction = 1 if x_t.leading_coefficient > 0 else -1
    c0 = Fraction(direction)
    for _ in range(_SCALE_SEARCH_CAP):
        delta = x_t + Polynomial.from_coeffs([c0, 1])
        if is_gamma(delta):
            return delta
        c0 *= 2
    raise InternalSearchError("root-free offset search did not converge")


def _substitute_factorization(f: Factorization, shift: Fraction) -> Factorization:
    """Apply X -> X + shift to every entry; an automorphism, so all checks survive."""

    def sub_mat(m: Mat2) -> Mat2:
        return Mat2(*(DressElement(affine_substitute(x.value, 1, shift)) for x in m.entries()))

    return _checked(sub_mat(f.target), [sub_mat(m) for m in f.factors])


@dataclass(frozen=True)
class StableRangeEvidence:
    """Witness data showing a + b*z is never a unit for a = X/(1+X^2), b = (X^2-1)/(1+X^2).

    ``sum_sq_unit`` confirms a^2 + b^2 is a unit, so (a, b) is the whole ring;
    the two signed values of f1 = X*d' + (X^2 - 1)*f at 1 and -1 certify a
    real zero of a + b*z in [-1, 1], so a + b*z is not a unit.
    """

    sum_sq_unit: bool
    value_at_1: Fraction
    value_at_minus_1: Fraction
    sign_at_1: str
    sign_at_minus_1: str
    nonunit_certified: bool


def stable_range_witness(z: DressElement) -> StableRangeEvidence:
    """Evaluate the square-stable-range witness pair at z."""
    gamma = Polynomial.from_coeffs([1, 0, 1])
    a = DressElement.from_parts(Polynomial.x(), gamma)
    b = DressElement.from_parts(Polynomial.from_coeffs([-1, 0, 1]), gamma)
    sum_sq_unit = (a * a + b * b).is_unit()
    # z = f/d' with d' everywhere positive: the reduced denominator is monic
    # and root-free, hence positive.
    f = z.numerator
    d_pos = z.denominator
    f1 = Polynomial.x() * d_pos + Polynomial.from_coeffs([-1, 0, 1]) * f
    v1 = f1.evaluate(1)
    v_minus = f1.evaluate(-1)
    assert v1 > 0 and v_minus < 0
    return StableRangeEvidence(
        sum_sq_unit=sum_sq_unit,
        value_at_1=v1,
        value_at_minus_1=v_minus,
        sign_at_1="+" if v1 > 0 else "-",
        sign_at_minus_1="+" if v_minus > 0 else "-",
        nonunit_certified=sum_sq_unit and v1 > 0 and v_minus < 0,
    )
