"""The idealization ``U = Z_(p) x M`` with ``M`` the Prüfer group ``Z(p^inf)``.

``M`` is generated by ``Z_0, Z_1, ...`` with ``Z_(i-1) = p Z_i`` and ``p Z_0 = 0``;
we identify ``Z_i`` with ``1/p^(i+1)`` modulo 1. Multiplication is
``(r, x)(s, y) = (rs, ry + sx)``.
"""

from __future__ import annotations

from fractions import Fraction

from ..linalg.scalars import p_valuation


def _is_p_local(q: Fraction, p: int) -> bool:
    return q.denominator % p != 0


def _is_prufer(q: Fraction, p: int) -> bool:
    d = q.denominator
    while d % p == 0:
        d //= p
    return d == 1


def prufer_scale(r: Fraction, q: Fraction, p: int) -> Fraction:
    """``r * q`` in ``Z(p^inf)`` for a p-local rational ``r``."""
    if q == 0 or r == 0:
        return Fraction(0)
    pk = q.denominator
    b_inv = pow(r.denominator, -1, pk) if pk > 1 else 0
    return Fraction((q.numerator * r.numerator * b_inv) % pk, pk)


class IdealizationElement:
    __slots__ = ("p", "scalar", "torsion")

    def __init__(self, p: int, scalar, torsion=0):
        scalar = Fraction(scalar)
        torsion = Fraction(torsion)
        if not _is_p_local(scalar, p):
            raise ValueError(f"{scalar} is not in Z_({p})")
        if not _is_prufer(torsion, p):
            raise ValueError(f"{torsion} does not have a {p}-power denominator")
        self.p = p
        self.scalar = scalar
        self.torsion = torsion - (torsion.numerator // torsion.denominator)

    @classmethod
    def Z(cls, p: int, i: int, v=1) -> "IdealizationElement":
        return cls(p, 0, prufer_scale(Fraction(v), Fraction(1, p ** (i + 1)), p))

    def _other(self, o):
        if isinstance(o, IdealizationElement):
            if o.p != self.p:
                raise ValueError("prime mismatch")
            return o
        return IdealizationElement(self.p, o, 0)

    def __add__(self, o):
        o = self._other(o)
        return IdealizationElement(self.p, self.scalar + o.scalar, self.torsion + o.torsion)

    __radd__ = __add__

    def __neg__(self):
        return IdealizationElement(self.p, -self.scalar, -self.torsion)

    def __sub__(self, o):
        return self + (-self._other(o))

    def __mul__(self, o):
        o = self._other(o)
        p = self.p
        t = prufer_scale(self.scalar, o.torsion, p) + prufer_scale(o.scalar, self.torsion, p)
        return IdealizationElement(p, self.scalar * o.scalar, t)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = IdealizationElement(self.p, 1, 0)
        for _ in range(n):
            out = out * self
        return out

    def is_zero(self) -> bool:
        return self.scalar == 0 and self.torsion == 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, o):
        if isinstance(o, IdealizationElement):
            return (self.p, self.scalar, self.torsion) == (o.p, o.scalar, o.torsion)
        if isinstance(o, int):
            return self == IdealizationElement(self.p, o, 0)
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.scalar, self.torsion))

    def normal_form(self):
        """``(u, n, v, i)`` with ``self = (u p^n, v Z_i)``, ``u, v`` units or 0 and ``i`` minimal."""
        p = self.p
        if self.scalar:
            n = p_valuation(self.scalar.numerator, p)
            u = self.scalar / p ** n
        else:
            n, u = 0, Fraction(0)
        if self.torsion:
            i = p_valuation(self.torsion.denominator, p) - 1
            v = Fraction(self.torsion.numerator)
        else:
            i, v = 0, Fraction(0)
        return u, n, v, i

    def __repr__(self):
        return f"({self.scalar}, {self.torsion})"


def idealization_essential_multiplier(u: IdealizationElement) -> IdealizationElement:
    """An ``m`` with ``u * m = (0, Z_0)``."""
    if u.is_zero():
        raise ValueError("zero has no essential multiplier")
    p = u.p
    unit, n, v, i = u.normal_form()
    if unit:
        # (u p^n, x)(0, u^-1 Z_n) = (0, Z_0)
        return IdealizationElement(p, 0, prufer_scale(1 / unit, Fraction(1, p ** (n + 1)), p))
    # (0, v Z_i)(v^-1 p^i, 0) = (0, Z_0)
    return IdealizationElement(p, Fraction(p ** i) / v, 0)


def q_power_member(x: IdealizationElement, n: int) -> IdealizationElement | None:
    """A cofactor ``c`` with ``(p^n, 0) * c == x``, or None when ``x`` is not in ``q^n``."""
    p = x.p
    if x.scalar and p_valuation(x.scalar.numerator, p) < n:
        return None
    # divide the torsion part by p^n: Z(p^inf) is divisible
    t = Fraction(x.torsion.numerator, x.torsion.denominator * p ** n) if x.torsion else Fraction(0)
    return IdealizationElement(p, x.scalar / p ** n, t)
