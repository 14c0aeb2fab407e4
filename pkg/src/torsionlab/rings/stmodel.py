"""A concrete model of the ring ``S = Z[X_0, X_1, ...] / <p^(j-i) X_j - X_i>`` and its localization.

``S`` is realized as ``{f in Z[1/p][t] : f(0) in Z}`` through ``Y_i -> p^(-i) t``;
every defining relation then holds identically. The local ring ``S_n`` at
``n = <p, Y_i>`` is realized by fractions whose denominator has a constant term
prime to ``p``. Divisibility in ``S_n`` is read off the lexicographic value
``(t-order, p-adic valuation of the lowest coefficient)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from ..linalg.scalars import LocalizedIntegerScalar, is_prime, p_valuation


def _q_valuation(q: Fraction, p: int) -> int:
    return p_valuation(q.numerator, p) - p_valuation(q.denominator, p)


def _in_localized(q: Fraction, p: int) -> bool:
    d = q.denominator
    while d % p == 0:
        d //= p
    return d == 1


def _trim(c: list) -> tuple:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class STElement:
    """Polynomial in ``t`` with ``Z[1/p]`` coefficients and integral constant term."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: Iterable):
        c = []
        for x in coeffs:
            if isinstance(x, LocalizedIntegerScalar):
                x = x.to_fraction()
            x = Fraction(x)
            if not _in_localized(x, p):
                raise ValueError(f"coefficient {x} is not in Z[1/{p}]")
            c.append(x)
        c = _trim(c)
        if c and c[0].denominator != 1:
            raise ValueError("constant term must be an integer")
        self.p = p
        self.coeffs = c

    @classmethod
    def Y(cls, p: int, i: int) -> "STElement":
        return cls(p, [0, Fraction(1, p ** i)])

    @classmethod
    def const(cls, p: int, n: int) -> "STElement":
        return cls(p, [n])

    @property
    def scalars(self) -> tuple:
        return tuple(LocalizedIntegerScalar.from_fraction(x, self.p) for x in self.coeffs)

    def _lift(self, other):
        if isinstance(other, STElement):
            if other.p != self.p:
                raise ValueError("prime mismatch")
            return other
        return STElement.const(self.p, other)

    def __add__(self, other):
        o = self._lift(other)
        n = max(len(self.coeffs), len(o.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = o.coeffs + (0,) * (n - len(o.coeffs))
        return STElement(self.p, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return STElement(self.p, [-x for x in self.coeffs])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        if not self.coeffs or not o.coeffs:
            return STElement(self.p, [])
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(o.coeffs):
                    out[i + j] += x * y
        return STElement(self.p, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = STElement.const(self.p, 1)
        for _ in range(n):
            out = out * self
        return out

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, STElement):
            return self.p == other.p and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self == STElement.const(self.p, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def t_order(self) -> int:
        return next(k for k, x in enumerate(self.coeffs) if x)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"({x})*t^{k}" for k, x in enumerate(self.coeffs) if x)


@dataclass(frozen=True, order=True)
class LexValue:
    t_order: int
    p_valuation: int

    def __post_init__(self):
        if self.t_order < 0:
            raise ValueError("t-order must be non-negative")


# -- polynomial helpers over Q, used for the canonical fraction key ----------

def _poly_divmod(a: Sequence[Fraction], b: Sequence[Fraction]):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lb = b[-1]
    while len(a) >= len(b) and a:
        f = a[-1] / lb
        k = len(a) - len(b)
        q[k] = f
        for i, y in enumerate(b):
            a[k + i] -= f * y
        a = list(_trim(a))
    return q, a


def _poly_gcd(a, b):
    a, b = list(_trim(list(a))), list(_trim(list(b)))
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, list(r)
    if not a:
        return (Fraction(0),)
    lead = a[-1]
    return tuple(x / lead for x in a)


class SnFraction:
    """An element ``num / den`` of ``S_n``; ``den`` has a constant term prime to ``p``."""

    __slots__ = ("num", "den")

    def __init__(self, num: STElement, den: STElement | None = None):
        if den is None:
            den = STElement.const(num.p, 1)
        if num.p != den.p:
            raise ValueError("prime mismatch")
        if not den.coeffs or den.coeffs[0] == 0 or den.coeffs[0].numerator % num.p == 0:
            raise ValueError("denominator must have constant term prime to p")
        self.num = num
        self.den = den

    @property
    def p(self) -> int:
        return self.num.p

    @classmethod
    def Y(cls, p: int, i: int) -> "SnFraction":
        return cls(STElement.Y(p, i))

    @classmethod
    def const(cls, p: int, n: int) -> "SnFraction":
        return cls(STElement.const(p, n))

    def _lift(self, other):
        if isinstance(other, SnFraction):
            if other.p != self.p:
                raise ValueError("prime mismatch")
            return other
        if isinstance(other, STElement):
            return SnFraction(other)
        return SnFraction.const(self.p, other)

    def __add__(self, other):
        o = self._lift(other)
        return SnFraction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return SnFraction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __mul__(self, other):
        o = self._lift(other)
        return SnFraction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        return SnFraction(self.num ** n, self.den ** n)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        if isinstance(other, (SnFraction, STElement, int)):
            o = self._lift(other)
            return (self.num * o.den) == (o.num * self.den)
        return NotImplemented

    def key(self) -> tuple:
        """Canonical representative in Q(t): reduced, monic denominator."""
        if self.is_zero():
            return ((), (Fraction(1),))
        g = _poly_gcd(self.num.coeffs, self.den.coeffs)
        n, _ = _poly_divmod(self.num.coeffs, g)
        d, _ = _poly_divmod(self.den.coeffs, g)
        lead = d[-1]
        return (tuple(x / lead for x in _trim(list(n))), tuple(x / lead for x in _trim(list(d))))

    def __hash__(self):
        return hash(self.key())

    def is_unit(self) -> bool:
        return not self.is_zero() and sn_valuation(self) == LexValue(0, 0)

    def inverse(self) -> "SnFraction":
        if not self.is_unit():
            raise ZeroDivisionError("not a unit of S_n")
        return SnFraction(self.den, self.num)

    def __repr__(self):
        return f"({self.num}) / ({self.den})"


def sn_valuation(f: SnFraction) -> LexValue:
    if f.is_zero():
        raise ValueError("valuation of zero")
    k = f.num.t_order()
    e = _q_valuation(f.num.coeffs[k], f.p) - _q_valuation(f.den.coeffs[0], f.p)
    return LexValue(k, e)


def sn_divides(f: SnFraction, g: SnFraction) -> bool:
    """``f | g`` in ``S_n``, decided by the lexicographic value."""
    if f.is_zero() or g.is_zero():
        raise ValueError("divisibility test on zero")
    return sn_valuation(f) <= sn_valuation(g)


def sn_quotient(g: SnFraction, f: SnFraction) -> SnFraction:
    """The element ``g / f`` of ``S_n``; raises when ``f`` does not divide ``g``."""
    if not sn_divides(f, g):
        raise ValueError("divisor does not divide")
    num = g.num * f.den
    den = g.den * f.num
    # strip the common t-power and the p-part of den's lowest coefficient
    k = den.t_order()
    num_c = list(num.coeffs[k:])
    den_c = list(den.coeffs[k:])
    c = den_c[0]
    scale = Fraction(1) / (Fraction(f.p) ** _q_valuation(c, f.p))
    num_c = [x * scale for x in num_c]
    den_c = [x * scale for x in den_c]
    # now den_c[0] is a p-unit rational; clear its prime-to-p denominator
    m = den_c[0].denominator
    for x in den_c[1:] + num_c:
        d = x.denominator
        while d % f.p == 0:
            d //= f.p
        m = m * d // math.gcd(m, d)
    return SnFraction(STElement(f.p, [x * m for x in num_c]), STElement(f.p, [x * m for x in den_c]))


@dataclass(frozen=True)
class SnNormalForm:
    unit: SnFraction
    n: int
    i: int
    k: int


def sn_normal_form(f: SnFraction) -> SnNormalForm:
    """Write ``f = u * p^n * Y_i^k`` with ``u`` a unit and ``n, i, k >= 0``."""
    v = sn_valuation(f)
    k, e = v.t_order, v.p_valuation
    i = 0 if k == 0 else max(0, -(e // k))
    n = e + i * k
    base = SnFraction.const(f.p, f.p ** n) * SnFraction.Y(f.p, i) ** k
    u = sn_quotient(f, base)
    return SnNormalForm(u, n, i, k)


def check_prime(p: int) -> int:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return p
