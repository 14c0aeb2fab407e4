"""Eventually periodic sequences (a subring of ``K^N``) and finite products of fields.

A sequence is a finite prefix followed by a repeating block. Eventually
constant sequences are the special case of a block of length one. Periodic
blocks are needed to exhibit zero divisors modulo the finite-support ideal:
inside the eventually constant subring that ideal is prime.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..linalg.scalars import QQ, Domain


def _normalize(prefix: tuple, period: tuple) -> tuple[tuple, tuple]:
    # shortest period
    n = len(period)
    for d in range(1, n + 1):
        if n % d == 0 and period == period[:d] * (n // d):
            period = period[:d]
            break
    # shortest prefix: absorb trailing prefix entries into the rotating block
    prefix = list(prefix)
    while prefix and prefix[-1] == period[-1]:
        prefix.pop()
        period = (period[-1],) + period[:-1]
    return tuple(prefix), period


class EventualSequence:
    __slots__ = ("prefix", "period", "domain")

    def __init__(self, prefix: Sequence = (), tail: Sequence | object = 0, domain: Domain = QQ):
        period = tuple(tail) if isinstance(tail, (tuple, list)) else (tail,)
        if not period:
            raise ValueError("the repeating block must be non-empty")
        conv = domain.convert
        self.domain = domain
        self.prefix, self.period = _normalize(tuple(conv(x) for x in prefix), tuple(conv(x) for x in period))

    @property
    def tail(self):
        """The eventual value when the sequence is eventually constant."""
        if len(self.period) != 1:
            raise ValueError("sequence is not eventually constant")
        return self.period[0]

    def is_eventually_constant(self) -> bool:
        return len(self.period) == 1

    def __getitem__(self, n: int):
        if n < len(self.prefix):
            return self.prefix[n]
        return self.period[(n - len(self.prefix)) % len(self.period)]

    def _zip(self, other: "EventualSequence", op):
        if other.domain is not self.domain:
            raise ValueError("scalar domain mismatch")
        start = max(len(self.prefix), len(other.prefix))
        per = len(self.period) * len(other.period) // math.gcd(len(self.period), len(other.period))
        prefix = [op(self[n], other[n]) for n in range(start)]
        period = [op(self[n], other[n]) for n in range(start, start + per)]
        return EventualSequence(prefix, period, self.domain)

    def _lift(self, o):
        if isinstance(o, EventualSequence):
            return o
        return EventualSequence((), o, self.domain)

    def __add__(self, o):
        return self._zip(self._lift(o), lambda x, y: x + y)

    __radd__ = __add__

    def __sub__(self, o):
        return self._zip(self._lift(o), lambda x, y: x - y)

    def __rsub__(self, o):
        return self._lift(o) - self

    def __mul__(self, o):
        return self._zip(self._lift(o), lambda x, y: x * y)

    __rmul__ = __mul__

    def __neg__(self):
        return EventualSequence([-x for x in self.prefix], [-x for x in self.period], self.domain)

    def __pow__(self, n: int):
        return EventualSequence([x ** n for x in self.prefix], [x ** n for x in self.period], self.domain)

    def is_zero(self) -> bool:
        return not self.prefix and not any(self.period)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, o):
        if isinstance(o, EventualSequence):
            return (self.prefix, self.period) == (o.prefix, o.period)
        if isinstance(o, (int, Fraction)):
            return self == self._lift(o)
        return NotImplemented

    def __hash__(self):
        return hash((self.prefix, self.period))

    def is_idempotent(self) -> bool:
        return self * self == self

    def __repr__(self):
        pre = ",".join(str(x) for x in self.prefix)
        per = ",".join(str(x) for x in self.period)
        return f"({pre}|{per})*" if pre else f"({per})*"


def in_finite_support_ideal(x: EventualSequence) -> bool:
    """Membership in ``b``: eventually zero."""
    return not any(x.period)


def zeroed_at_start(x: EventualSequence) -> EventualSequence:
    """``x'`` with ``x'_0 = 0`` and ``x'_n = x_n`` for ``n > 0``."""
    head = [x.domain.zero] + [x[n] for n in range(1, len(x.prefix) + 1)]
    return EventualSequence(head, [x[len(head) + k] for k in range(len(x.period))], x.domain)


def indicator_after_zero(domain: Domain = QQ) -> EventualSequence:
    """``f`` with ``f_0 = 0`` and ``f_n = 1`` for ``n > 0``."""
    return EventualSequence((0,), 1, domain)


@dataclass(frozen=True)
class FiniteProductRing:
    """``K^r`` with componentwise operations."""

    r: int
    domain: Domain = QQ

    def element(self, comps: Sequence) -> "FiniteProductElement":
        return FiniteProductElement(self, tuple(self.domain.convert(c) for c in comps))

    def one(self):
        return self.element([1] * self.r)

    def zero(self):
        return self.element([0] * self.r)

    def idempotents(self):
        for mask in range(2 ** self.r):
            yield self.element([(mask >> k) & 1 for k in range(self.r)])


@dataclass(frozen=True)
class FiniteProductElement:
    ring: FiniteProductRing
    comps: tuple

    def _zip(self, o, op):
        if isinstance(o, FiniteProductElement):
            if o.ring != self.ring:
                raise ValueError("ring mismatch")
            oc = o.comps
        else:
            oc = (self.ring.domain.convert(o),) * self.ring.r
        return FiniteProductElement(self.ring, tuple(op(x, y) for x, y in zip(self.comps, oc)))

    def __add__(self, o):
        return self._zip(o, lambda x, y: x + y)

    def __sub__(self, o):
        return self._zip(o, lambda x, y: x - y)

    def __mul__(self, o):
        return self._zip(o, lambda x, y: x * y)

    __radd__ = __add__
    __rmul__ = __mul__

    def __pow__(self, n: int):
        return FiniteProductElement(self.ring, tuple(x ** n for x in self.comps))

    def is_zero(self) -> bool:
        return not any(self.comps)

    def is_idempotent(self) -> bool:
        return self * self == self

    def support(self) -> tuple[int, ...]:
        return tuple(k for k, x in enumerate(self.comps) if x)

    def annihilator_idempotent(self) -> "FiniteProductElement":
        """The idempotent generating ``(0 : self)``."""
        return self.ring.element([0 if x else 1 for x in self.comps])
