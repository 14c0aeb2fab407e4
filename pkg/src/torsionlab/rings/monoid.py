"""The monoid algebra ``K[Q]`` of non-negative rationals, its local ring and truncation.

``R = K[Q]`` has basis ``e_alpha`` with ``e_a * e_b = e_(a+b)``. Elements of the
local ring ``S`` (inverting everything outside ``m = <e_a | a > 0>``) factor as
``unit * e_ord`` where ``ord`` is the least exponent present, so the order is all
the ideal theory needs. ``T = S / <e_a | a > 1>`` is the truncation that drops
every exponent strictly above 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from ..linalg.scalars import QQ, Domain


@dataclass(frozen=True)
class MonoidAlgebra:
    scalar: Domain = QQ
    truncate_above: Fraction | None = None   # None for R (or S); 1 for T
    local: bool = False                      # True for S and T

    @property
    def name(self) -> str:
        if self.truncate_above is not None:
            return "T"
        return "S" if self.local else "R"

    def element(self, terms: Mapping) -> "MonoidAlgElement":
        return MonoidAlgElement(self, terms)

    def e(self, alpha, c=1) -> "MonoidAlgElement":
        return MonoidAlgElement(self, {Fraction(alpha): c})

    def one(self) -> "MonoidAlgElement":
        return self.e(0)

    def zero(self) -> "MonoidAlgElement":
        return MonoidAlgElement(self, {})

    def killed(self, alpha: Fraction) -> bool:
        return self.truncate_above is not None and alpha > self.truncate_above


K_Q = MonoidAlgebra()
S_LOCAL = MonoidAlgebra(local=True)
T_TRUNC = MonoidAlgebra(truncate_above=Fraction(1), local=True)


class MonoidAlgElement:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: MonoidAlgebra, terms: Mapping):
        self.ring = ring
        acc: dict[Fraction, object] = {}
        for a, c in terms.items():
            a = Fraction(a)
            if a < 0:
                raise ValueError("exponents must be non-negative")
            if ring.killed(a):
                continue
            c = ring.scalar.convert(c)
            acc[a] = acc[a] + c if a in acc else c
        self.terms = {a: c for a, c in sorted(acc.items()) if c}

    def _other(self, other):
        if isinstance(other, MonoidAlgElement):
            if other.ring != self.ring:
                raise ValueError("ring mismatch")
            return other
        return self.ring.e(0, other)

    def __add__(self, other):
        other = self._other(other)
        acc = dict(self.terms)
        for a, c in other.terms.items():
            acc[a] = acc[a] + c if a in acc else c
        return MonoidAlgElement(self.ring, acc)

    __radd__ = __add__

    def __neg__(self):
        return MonoidAlgElement(self.ring, {a: -c for a, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._other(other))

    def __mul__(self, other):
        other = self._other(other)
        acc: dict[Fraction, object] = {}
        for a, c in self.terms.items():
            for b, d in other.terms.items():
                s = a + b
                if self.ring.killed(s):
                    continue
                acc[s] = acc[s] + c * d if s in acc else c * d
        return MonoidAlgElement(self.ring, acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = self.ring.one()
        for _ in range(n):
            out = out * self
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, MonoidAlgElement):
            return self.ring == other.ring and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def ord(self) -> Fraction:
        """Least exponent carrying a nonzero coefficient."""
        if not self.terms:
            raise ValueError("order of zero")
        return next(iter(self.terms))

    def is_unit(self) -> bool:
        """Units of the local rings are exactly the elements of order 0."""
        if not self.ring.local:
            return len(self.terms) == 1 and self.ord() == 0
        return bool(self.terms) and self.ord() == 0

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*e_{a}" for a, c in self.terms.items())


def divides(x: MonoidAlgElement, y: MonoidAlgElement) -> bool:
    """Divisibility in the local ring: ``x | y`` iff ``ord x <= ord y`` (or ``y = 0``)."""
    if not x.ring.local:
        raise ValueError("order divisibility only holds in the local rings")
    if y.is_zero():
        return True
    if x.is_zero():
        return False
    return x.ord() <= y.ord()
