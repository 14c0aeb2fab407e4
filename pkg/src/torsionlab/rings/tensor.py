"""Truncated levels of ``L (x)_K L`` with ``K = F_p(s)`` and ``L`` its perfect closure.

Level ``n`` uses ``L_n = K(s^(1/p^n))``. The tensor square ``L_n (x)_K L_n`` is free
over ``K`` on ``s^(i/p^n) (x) s^(j/p^n)`` for ``0 <= i, j < p^n``; an element is a
sparse grid of coefficients in ``K``. Rational functions over ``F_p`` are kept
as (numerator, monic denominator) pairs of coefficient tuples.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Mapping

# -- polynomials over F_p: tuples of ints in [0, p), lowest degree first -------


def _ptrim(a: list) -> tuple:
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def padd(a, b, p):
    n = max(len(a), len(b))
    return _ptrim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p for i in range(n)])


def pneg(a, p):
    return tuple((-x) % p for x in a)


def pmul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = (out[i + j] + x * y) % p
    return _ptrim(out)


def pdivmod(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    inv = pow(b[-1], -1, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        f = (a[-1] * inv) % p
        k = len(a) - len(b)
        q[k] = f
        for i, y in enumerate(b):
            a[k + i] = (a[k + i] - f * y) % p
        a = list(_ptrim(a))
    return _ptrim(q), tuple(a)


def pgcd(a, b, p):
    while b:
        a, b = b, pdivmod(a, b, p)[1]
    if not a:
        return ()
    inv = pow(a[-1], -1, p)
    return tuple((x * inv) % p for x in a)


def pcompose_power(a, k):
    """``a(s^k)``: spread coefficients ``k`` apart."""
    if not a:
        return ()
    out = [0] * ((len(a) - 1) * k + 1)
    for i, x in enumerate(a):
        out[i * k] = x
    return tuple(out)


class RationalFunction:
    """An element of ``F_p(s)``."""

    __slots__ = ("p", "num", "den")

    def __init__(self, p: int, num, den=(1,), reduce: bool = True):
        num = _ptrim([x % p for x in num])
        den = _ptrim([x % p for x in den])
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            den = (1,)
        elif reduce and len(den) > 1:
            g = pgcd(num, den, p)
            if len(g) > 1:
                num = pdivmod(num, g, p)[0]
                den = pdivmod(den, g, p)[0]
        inv = pow(den[-1], -1, p)
        if inv != 1:
            num = tuple((x * inv) % p for x in num)
            den = tuple((x * inv) % p for x in den)
        self.p, self.num, self.den = p, num, den

    @classmethod
    def const(cls, p, c):
        return cls(p, (c,))

    @classmethod
    def s_power(cls, p, k):
        return cls(p, (0,) * k + (1,))

    def __add__(self, o):
        p = self.p
        if self.den == o.den:
            return RationalFunction(p, padd(self.num, o.num, p), self.den)
        return RationalFunction(p, padd(pmul(self.num, o.den, p), pmul(o.num, self.den, p), p),
                                pmul(self.den, o.den, p))

    def __neg__(self):
        return RationalFunction(self.p, pneg(self.num, self.p), self.den, reduce=False)

    def __sub__(self, o):
        return self + (-o)

    def __mul__(self, o):
        p = self.p
        return RationalFunction(p, pmul(self.num, o.num, p), pmul(self.den, o.den, p),
                                reduce=len(self.den) > 1 or len(o.den) > 1)

    def frobenius(self) -> "RationalFunction":
        """``c^p = c(s^p)`` in characteristic ``p``."""
        return RationalFunction(self.p, pcompose_power(self.num, self.p),
                                pcompose_power(self.den, self.p), reduce=False)

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, o):
        return isinstance(o, RationalFunction) and (self.p, self.num, self.den) == (o.p, o.num, o.den)

    def __hash__(self):
        return hash((self.p, self.num, self.den))

    def __repr__(self):
        return f"{self.num}/{self.den}" if self.den != (1,) else f"{self.num}"


# -- tensor levels -------------------------------------------------------------


@dataclass(frozen=True)
class TensorLevel:
    p: int
    level: int

    @property
    def size(self) -> int:
        return self.p ** self.level

    def zero(self) -> "TensorLevelElement":
        return TensorLevelElement(self, {})

    def one(self) -> "TensorLevelElement":
        return self.basis(0, 0)

    def basis(self, i: int, j: int, c: RationalFunction | None = None) -> "TensorLevelElement":
        c = c if c is not None else RationalFunction.const(self.p, 1)
        return TensorLevelElement(self, {(i, j): c})

    def delta(self) -> "TensorLevelElement":
        """``s^(1/p^n) (x) 1 - 1 (x) s^(1/p^n)``."""
        if self.level == 0:
            return self.zero()
        one = RationalFunction.const(self.p, 1)
        return TensorLevelElement(self, {(1, 0): one, (0, 1): -one})


class TensorLevelElement:
    __slots__ = ("space", "grid")

    def __init__(self, space: TensorLevel, grid: Mapping):
        n = space.size
        g = {}
        for (i, j), c in grid.items():
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"index {(i, j)} outside the level-{space.level} grid")
            if c:
                g[(i, j)] = c
        self.space = space
        self.grid = g

    @property
    def p(self):
        return self.space.p

    @property
    def level(self):
        return self.space.level

    def __add__(self, o):
        self._check(o)
        g = dict(self.grid)
        for k, c in o.grid.items():
            g[k] = g[k] + c if k in g else c
        return TensorLevelElement(self.space, g)

    def __neg__(self):
        return TensorLevelElement(self.space, {k: -c for k, c in self.grid.items()})

    def __sub__(self, o):
        return self + (-o)

    def _check(self, o):
        if not isinstance(o, TensorLevelElement) or o.space != self.space:
            raise ValueError("elements live at different levels")

    def _fold(self, e: int):
        """``s^(e/p^n)`` for ``0 <= e < 2 p^n``: (index, extra power of s)."""
        n = self.space.size
        return (e - n, 1) if e >= n else (e, 0)

    def __mul__(self, o):
        self._check(o)
        p = self.p
        s = RationalFunction.s_power(p, 1)
        acc: dict = {}
        for (i1, j1), c1 in self.grid.items():
            for (i2, j2), c2 in o.grid.items():
                i, a = self._fold(i1 + i2)
                j, b = self._fold(j1 + j2)
                c = c1 * c2
                for _ in range(a + b):
                    c = c * s
                acc[(i, j)] = acc[(i, j)] + c if (i, j) in acc else c
        return TensorLevelElement(self.space, acc)

    def __pow__(self, n: int):
        out = self.space.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def is_zero(self) -> bool:
        return not self.grid

    def __bool__(self):
        return bool(self.grid)

    def __eq__(self, o):
        return isinstance(o, TensorLevelElement) and o.space == self.space and o.grid == self.grid

    def __repr__(self):
        return f"TensorLevelElement(p={self.p}, level={self.level}, {self.grid})"

    def include(self) -> "TensorLevelElement":
        """Image at the next level: ``s^(i/p^n) = s^(ip/p^(n+1))``."""
        p = self.p
        return TensorLevelElement(TensorLevel(p, self.level + 1),
                                  {(i * p, j * p): c for (i, j), c in self.grid.items()})

    def multiply_out(self) -> dict:
        """The multiplication map ``L_n (x) L_n -> L_n`` as a sparse vector over K."""
        s = RationalFunction.s_power(self.p, 1)
        acc: dict = {}
        for (i, j), c in self.grid.items():
            e, a = self._fold(i + j)
            if a:
                c = c * s
            acc[e] = acc[e] + c if e in acc else c
        return {e: c for e, c in acc.items() if c}

    def is_nilpotent(self) -> bool:
        """``L (x)_K L`` is local with nilradical the kernel of multiplication."""
        return not self.multiply_out()

    def frobenius_power(self) -> "TensorLevelElement":
        """``self^p`` via the freshman's dream, returned at the same level."""
        n = self.space.size
        s = RationalFunction.s_power(self.p, 1)
        acc: dict = {}
        for (i, j), c in self.grid.items():
            c = c.frobenius()
            a, i2 = divmod(i * self.p, n)
            b, j2 = divmod(j * self.p, n)
            for _ in range(a + b):
                c = c * s
            acc[(i2, j2)] = acc[(i2, j2)] + c if (i2, j2) in acc else c
        return TensorLevelElement(self.space, acc)


def _coefficient_root(c: RationalFunction, level: int):
    """``c^(1/p)`` as an element of ``L_(level)`` in the form {index: K-coefficient}.

    Writing ``c = N(s)/D(s)``, the root is ``N(s^(1/p)) D(s^(1/p))^(p-1) / D(s)``; the
    numerator is a polynomial in ``s^(1/p)`` whose terms land on indices that are
    multiples of ``p^(level-1)``.
    """
    p = c.p
    poly = pmul(c.num, _ppow(c.den, p - 1, p), p)   # a polynomial in r = s^(1/p)
    step = p ** (level - 1)
    out: dict = {}
    for m, a in enumerate(poly):
        if not a:
            continue
        q, r = divmod(m, p)
        coeff = RationalFunction(p, (0,) * q + (a,), c.den)
        idx = r * step
        out[idx] = out[idx] + coeff if idx in out else coeff
    return out


def _ppow(a, n, p):
    out = (1,)
    for _ in range(n):
        out = pmul(out, a, p)
    return out


def frobenius_root(f: TensorLevelElement, require_nilpotent: bool = True) -> TensorLevelElement:
    """A ``g`` at level ``n+1`` with ``g^p`` equal to the image of ``f`` at level ``n+1``."""
    if require_nilpotent and not f.is_nilpotent():
        raise ValueError("frobenius_root expects a nilpotent element")
    p = f.p
    target = TensorLevel(p, f.level + 1)
    acc: dict = {}
    for (i, j), c in f.grid.items():
        for idx, coeff in _coefficient_root(c, target.level).items():
            key = (idx + i, j)
            acc[key] = acc[key] + coeff if key in acc else coeff
    return TensorLevelElement(target, acc)


def random_coefficient(p: int, rng: random.Random, max_deg: int = 2, rational: bool = False) -> RationalFunction:
    num = tuple(rng.randrange(p) for _ in range(rng.randint(0, max_deg) + 1))
    if rational and rng.random() < 0.5:
        den = tuple(rng.randrange(p) for _ in range(rng.randint(1, max_deg))) + (1,)
        return RationalFunction(p, num, den)
    return RationalFunction(p, num)


def random_element(space: TensorLevel, rng: random.Random, density: float = 0.5,
                   rational: bool = False) -> TensorLevelElement:
    n = space.size
    g = {}
    for i in range(n):
        for j in range(n):
            if rng.random() < density:
                g[(i, j)] = random_coefficient(space.p, rng, rational=rational)
    return TensorLevelElement(space, g)


def random_nilpotent(space: TensorLevel, rng: random.Random, **kw) -> TensorLevelElement:
    """``x - mu(x) (x) 1`` lies in the kernel of multiplication for any ``x``."""
    x = random_element(space, rng, **kw)
    mu = x.multiply_out()
    return x - TensorLevelElement(space, {(e, 0): c for e, c in mu.items()})


def nilpotency_index(x: TensorLevelElement, bound: int) -> int | None:
    y = x
    for k in range(1, bound + 1):
        if y.is_zero():
            return k
        y = y * x
    return None
