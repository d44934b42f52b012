"""Canonical fractions of integer polynomials (the field Z(X)).

Every ``Frac`` holds a coprime numerator/denominator pair.  Coprime pairs
are unique only up to a global sign, so a deterministic convention picks
one of the two: the denominator's graded-lex leading coefficient is always
positive.  With that fixed, structural equality of ``Frac`` values decides
equality in the field, and fractions hash consistently, which is what the
enumeration code relies on for deduplication.

Arithmetic is exact: operate on cross-multiplied polynomials, then divide
out the gcd.  Fractions are immutable and safe to share.
"""

from __future__ import annotations

from .polys import Poly, divexact, poly_gcd, poly_str


class Frac:
    """A canonical fraction num/den with gcd(num, den) = 1 and den > 0."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Poly, den: Poly):
        f = canonicalize(num, den)
        self.num = f.num
        self.den = f.den
        self._hash = None

    @classmethod
    def _raw(cls, num: Poly, den: Poly) -> "Frac":
        # Trusted constructor: (num, den) must already be canonical.
        f = cls.__new__(cls)
        f.num = num
        f.den = den
        f._hash = None
        return f

    @classmethod
    def variable(cls, index: int) -> "Frac":
        return cls._raw(Poly.variable(index), Poly.one())

    @classmethod
    def const(cls, c: int) -> "Frac":
        return cls._raw(Poly.const(c), Poly.one())

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def variables(self) -> frozenset[int]:
        """Set of variable indices contained by the fraction."""
        return self.num.variables() | self.den.variables()

    def _combine(self, other: "Frac", sign: int) -> "Frac":
        # Classical cross-cancelling sum: with gcd(a,b) = gcd(c,d) = 1 and
        # g = gcd(b,d), h = gcd(a(d/g) +/- c(b/g), g), the pair
        # (t/h, (b/g)(d/h)) is already coprime, so no further gcd is needed.
        a, b = self.num, self.den
        c, d = other.num, other.den
        g = poly_gcd(b, d)
        if g.is_constant() and g.constant_value() == 1:
            t = a * d + c * b if sign > 0 else a * d - c * b
            if t.is_zero():
                return ZERO
            return Frac._raw(t, b * d)
        b0 = divexact(b, g)
        d0 = divexact(d, g)
        t = a * d0 + c * b0 if sign > 0 else a * d0 - c * b0
        if t.is_zero():
            return ZERO
        h = poly_gcd(t, g)
        return Frac._raw(divexact(t, h), b0 * divexact(d, h))

    def __add__(self, other: "Frac") -> "Frac":
        return self._combine(other, 1)

    def __sub__(self, other: "Frac") -> "Frac":
        return self._combine(other, -1)

    def __mul__(self, other: "Frac") -> "Frac":
        if self.num.is_zero() or other.num.is_zero():
            return ZERO
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        return Frac._raw(
            divexact(self.num, g1) * divexact(other.num, g2),
            divexact(self.den, g2) * divexact(other.den, g1),
        )

    def __truediv__(self, other: "Frac") -> "Frac":
        if other.num.is_zero():
            raise ZeroDivisionError("division by the zero fraction")
        if self.num.is_zero():
            return ZERO
        g1 = poly_gcd(self.num, other.num)
        g2 = poly_gcd(self.den, other.den)
        num = divexact(self.num, g1) * divexact(other.den, g2)
        den = divexact(self.den, g2) * divexact(other.num, g1)
        if den.leading_coeff() < 0:
            num, den = -num, -den
        return Frac._raw(num, den)

    def __neg__(self) -> "Frac":
        # Negating the numerator keeps the pair canonical.
        return Frac._raw(-self.num, self.den)

    def derivative(self, v: int) -> "Frac":
        """Formal partial derivative with respect to x_v (quotient rule)."""
        return canonicalize(
            self.num.derivative(v) * self.den - self.num * self.den.derivative(v),
            self.den * self.den,
        )

    def equal_up_to_sign(self, other: "Frac") -> bool:
        return self.den == other.den and (
            self.num == other.num or self.num == -other.num
        )

    def positive_rep(self) -> "Frac":
        """The member of {f, -f} whose numerator leads with a positive coefficient."""
        if self.num.is_zero() or self.num.leading_coeff() > 0:
            return self
        return -self

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Frac)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def render(self) -> str:
        """Deterministic text form, e.g. ``(x1*x2 + x3)/(x2)``."""
        return f"({poly_str(self.num)})/({poly_str(self.den)})"

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"Frac({self.render()})"


def canonicalize(num: Poly, den: Poly) -> Frac:
    """Reduce num/den to the canonical coprime pair with positive denominator.

    Idempotent; raises ZeroDivisionError for a zero denominator.
    """
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    if num.is_zero():
        return Frac._raw(Poly.zero(), Poly.one())
    g = poly_gcd(num, den)
    n = divexact(num, g)
    d = divexact(den, g)
    if d.leading_coeff() < 0:
        n, d = -n, -d
    return Frac._raw(n, d)


ZERO = Frac._raw(Poly.zero(), Poly.one())
ONE = Frac._raw(Poly.one(), Poly.one())
