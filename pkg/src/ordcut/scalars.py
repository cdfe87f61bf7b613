"""Exact arithmetic and sign determination for numbers a + b*sqrt(d).

Scalars are the coordinate domain for every rank-one factor and for gap
anchors.  All order decisions are exact: signs are resolved by case analysis
and squaring, never by floating point.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .errors import DomainError


def _square_free(d):
    """Split d >= 0 as k^2 * d0 with d0 square-free; returns (k, d0)."""
    if d < 0:
        raise DomainError("negative radicand %d" % d)
    if d == 0:
        return 1, 0
    k = 1
    d0 = d
    f = 2
    while f * f <= d0:
        while d0 % (f * f) == 0:
            d0 //= f * f
            k *= f
        f += 1
    return k, d0


def _sgn(q):
    if q > 0:
        return 1
    if q < 0:
        return -1
    return 0


def _quad_sign(a, b, d):
    """Exact sign of a + b*sqrt(d) for rational a, b and integer d >= 0."""
    k, d0 = _square_free(d)
    b = b * k
    if d0 <= 1:
        return _sgn(a + b * d0)
    if b == 0:
        return _sgn(a)
    if a == 0:
        return _sgn(b)
    if a > 0 and b > 0:
        return 1
    if a < 0 and b < 0:
        return -1
    c = _sgn(a * a - b * b * d0)
    if c == 0:
        return 0
    return c * _sgn(a)


def _sign3(u, v, d, w, e):
    """Exact sign of u + v*sqrt(d) + w*sqrt(e), d and e square-free."""
    if d == 0:
        v = Fraction(0)
    if e == 0:
        w = Fraction(0)
    if v == 0 and w == 0:
        return _sgn(u)
    if w == 0:
        return _quad_sign(u, v, d)
    if v == 0:
        return _quad_sign(u, w, e)
    if d == e:
        return _quad_sign(u, v + w, d)
    if v > 0 and w > 0:
        s_l = 1
    elif v < 0 and w < 0:
        s_l = -1
    else:
        c = _sgn(v * v * d - w * w * e)
        if c == 0:
            s_l = 0
        elif c > 0:
            s_l = _sgn(v)
        else:
            s_l = _sgn(w)
    if u == 0:
        return s_l
    s_u = _sgn(u)
    if s_l == 0:
        return s_u
    if s_l == s_u:
        return s_l
    c = _quad_sign(v * v * d + w * w * e - u * u, 2 * v * w, d * e)
    if c > 0:
        return s_l
    if c < 0:
        return s_u
    return 0


@dataclass(frozen=True)
class Scalar:
    """The exact real a + b*sqrt(d), canonical: d square-free, d=0 when b=0."""

    a: Fraction
    b: Fraction
    d: int

    @staticmethod
    def make(a, b=0, d=0):
        a = Fraction(a)
        b = Fraction(b)
        k, d0 = _square_free(d)
        b = b * k
        if d0 == 1:
            a += b
            b = Fraction(0)
        if d0 == 0:
            b = Fraction(0)
        if b == 0:
            d0 = 0
        return Scalar(a, b, d0)

    def is_rational(self):
        return self.b == 0

    def _merged(self, other):
        # radical of the sum/difference; None when incompatible
        if self.b == 0:
            return other.d
        if other.b == 0 or self.d == other.d:
            return self.d
        return None

    def __add__(self, other):
        if not isinstance(other, Scalar):
            other = Scalar.make(other)
        d = self._merged(other)
        if d is None:
            raise DomainError("cannot add scalars over distinct radicals")
        return Scalar.make(self.a + other.a, self.b + other.b, d)

    def __neg__(self):
        return Scalar(-self.a, -self.b, self.d)

    def __sub__(self, other):
        if not isinstance(other, Scalar):
            other = Scalar.make(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Scalar.make(self.a * other, self.b * other, self.d)
        d = self.d if self.b != 0 else other.d
        if self.b != 0 and other.b != 0 and self.d != other.d:
            raise DomainError("cannot multiply scalars over distinct radicals")
        return Scalar.make(self.a * other.a + self.b * other.b * d,
                           self.a * other.b + self.b * other.a, d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return Scalar.make(self.a / other, self.b / other, self.d)
        norm = other.a * other.a - other.b * other.b * other.d
        if norm == 0:
            raise ZeroDivisionError("division by zero scalar")
        inv = Scalar.make(other.a / norm, -other.b / norm, other.d)
        return self * inv

    def sign(self):
        return _quad_sign(self.a, self.b, self.d)

    def floor(self):
        """Exact floor, certified by sign checks."""
        if self.b == 0:
            return self.a.numerator // self.a.denominator
        scale = 10 ** 20
        s = isqrt(self.d * scale * scale)
        lo = Fraction(s, scale)
        hi = Fraction(s + 1, scale)
        if self.b > 0:
            xlo = self.a + self.b * lo
        else:
            xlo = self.a + self.b * hi
        n = xlo.numerator // xlo.denominator
        while (self - Scalar.make(n + 1)).sign() >= 0:
            n += 1
        assert (self - Scalar.make(n)).sign() >= 0
        return n

    def height(self):
        return max(abs(self.a.numerator), self.a.denominator,
                   abs(self.b.numerator), self.b.denominator)


ZERO = Scalar.make(0)
ONE = Scalar.make(1)


def sign(x):
    return x.sign()


def compare(x, y):
    """Exact ordering of two scalars in compatible fields: -1, 0, or +1."""
    return compare_cross(x, y)


def compare_cross(x, y):
    """Exact ordering of any two scalars, possibly over distinct radicals."""
    return _sign3(x.a - y.a, x.b, x.d, -y.b, y.d)


@dataclass(frozen=True)
class RankOneKind:
    """A concrete rank-one subgroup of the reals.

    tag "Z" with d=0 is the integers; tag "Q" with d=0 the rationals;
    tag "Z" with d>=2 the group Z + Z*sqrt(d); tag "Q" with d>=2 the
    field Q + Q*sqrt(d).
    """

    tag: str
    d: int

    def __post_init__(self):
        if self.tag not in ("Z", "Q"):
            raise DomainError("unknown rank-one kind %r" % (self.tag,))
        if self.d:
            k, d0 = _square_free(self.d)
            if k != 1 or d0 < 2:
                raise DomainError("radicand %d is not square-free >= 2" % self.d)


KIND_Z = RankOneKind("Z", 0)
KIND_Q = RankOneKind("Q", 0)


def quad_z(d):
    return RankOneKind("Z", d)


def quad_q(d):
    return RankOneKind("Q", d)


def contains(kind, x):
    """Membership of the scalar x in the rank-one group."""
    if kind.d == 0:
        if x.b != 0:
            return False
        if kind.tag == "Q":
            return True
        return x.a.denominator == 1
    if x.d not in (0, kind.d):
        return False
    if kind.tag == "Q":
        return True
    return x.a.denominator == 1 and x.b.denominator == 1


def divisible_hull_kind(kind):
    return RankOneKind("Q", kind.d)


def is_discrete_kind(kind):
    return kind.tag == "Z" and kind.d == 0


def is_dense_kind(kind):
    return not is_discrete_kind(kind)


def small_positive(kind, bound):
    """Some element of the kind strictly between 0 and bound (bound > 0)."""
    if is_discrete_kind(kind):
        if compare_cross(ONE, bound) < 0:
            return ONE
        raise DomainError("no integer in (0, bound)")
    if kind.tag == "Q":
        h = Fraction(1, 2)
        while compare_cross(Scalar.make(h), bound) >= 0:
            h /= 2
        return Scalar.make(h)
    # Z + Z*sqrt(d): powers of the fractional part of sqrt(d) shrink to 0
    u = Scalar.make(-isqrt(kind.d), 1, kind.d)
    p = u
    while compare_cross(p, bound) >= 0:
        p = p * u
    return p


def _rationalize_below(delta, gap):
    """A rational r with delta - gap/2 < r < delta, for irrational delta."""
    half = gap / 2
    t = 1
    while compare_cross(Scalar.make(Fraction(1, 2 ** t)), half) >= 0:
        t += 1
    n = (delta * (2 ** t)).floor()
    r = Scalar.make(Fraction(n, 2 ** t))
    if compare_cross(r, delta) == 0:
        r = Scalar.make(Fraction(n, 2 ** t) - Fraction(1, 2 ** (t + 1)))
    return r


def element_below(kind, delta, gap):
    """An element of the kind inside (delta - gap, delta).

    Requires delta outside the (dense) kind and gap > 0.  Used to build
    invariance witnesses next to gap anchors.
    """
    if is_discrete_kind(kind):
        raise DomainError("element_below needs a dense kind")
    target = delta
    step = gap
    if target.d not in (0, kind.d):
        target = _rationalize_below(delta, gap)
        step = gap / 2
    u = small_positive(kind, step)
    m = (target / u).floor()
    q = u * m
    if compare_cross(q, target) == 0:
        q = q - u
    assert compare_cross(q, delta) < 0
    assert compare_cross(q + gap, delta) > 0
    return q
