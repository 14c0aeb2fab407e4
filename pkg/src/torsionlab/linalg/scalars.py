"""Exact scalar domains: rationals, integers, prime fields and Z[1/p]."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def p_valuation(n: int, p: int) -> int:
    """Exponent of ``p`` in the nonzero integer ``n``."""
    if n == 0:
        raise ValueError("valuation of zero is undefined")
    n = abs(n)
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


class PrimeFieldScalar:
    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.p = p
        self.value = value % p

    def _coerce(self, other):
        if isinstance(other, PrimeFieldScalar):
            if other.p != self.p:
                raise ValueError("characteristic mismatch")
            return other.value
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction) and other.denominator == 1:
            return other.numerator
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return PrimeFieldScalar(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return PrimeFieldScalar(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return PrimeFieldScalar(o - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return PrimeFieldScalar(self.value * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return PrimeFieldScalar(-self.value, self.p)

    def inverse(self) -> "PrimeFieldScalar":
        if self.value == 0:
            raise ZeroDivisionError("zero has no inverse")
        return PrimeFieldScalar(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * PrimeFieldScalar(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return PrimeFieldScalar(o, self.p) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return PrimeFieldScalar(pow(self.value, n, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, PrimeFieldScalar):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value} (mod {self.p})"


class LocalizedIntegerScalar:
    """An element ``mantissa * p**exponent`` of Z[1/p], with p not dividing the mantissa."""

    __slots__ = ("mantissa", "exponent", "p")

    def __init__(self, mantissa: int, exponent: int, p: int):
        if mantissa == 0:
            exponent = 0
        else:
            while mantissa % p == 0:
                mantissa //= p
                exponent += 1
        self.mantissa = mantissa
        self.exponent = exponent
        self.p = p

    @classmethod
    def from_fraction(cls, q, p: int) -> "LocalizedIntegerScalar":
        q = Fraction(q)
        den = q.denominator
        e = 0
        while den % p == 0:
            den //= p
            e += 1
        if den != 1:
            raise ValueError(f"{q} is not in Z[1/{p}]")
        return cls(q.numerator, -e, p)

    def to_fraction(self) -> Fraction:
        return Fraction(self.mantissa) * Fraction(self.p) ** self.exponent

    def valuation(self) -> int:
        if self.mantissa == 0:
            raise ValueError("valuation of zero is undefined")
        return self.exponent

    def is_integer(self) -> bool:
        return self.mantissa == 0 or self.exponent >= 0

    def _coerce(self, other):
        if isinstance(other, LocalizedIntegerScalar):
            if other.p != self.p:
                raise ValueError("prime mismatch")
            return other
        if isinstance(other, int):
            return LocalizedIntegerScalar(other, 0, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.mantissa == 0:
            return o
        if o.mantissa == 0:
            return self
        e = min(self.exponent, o.exponent)
        m = self.mantissa * self.p ** (self.exponent - e) + o.mantissa * self.p ** (o.exponent - e)
        return LocalizedIntegerScalar(m, e, self.p)

    __radd__ = __add__

    def __neg__(self):
        return LocalizedIntegerScalar(-self.mantissa, self.exponent, self.p)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return LocalizedIntegerScalar(self.mantissa * o.mantissa, self.exponent + o.exponent, self.p)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if self.mantissa not in (1, -1):
                raise ZeroDivisionError("not a unit of Z[1/p]")
            return LocalizedIntegerScalar(self.mantissa ** n, self.exponent * n, self.p)
        return LocalizedIntegerScalar(self.mantissa ** n, self.exponent * n, self.p)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self.mantissa == o.mantissa and self.exponent == o.exponent

    def __hash__(self):
        return hash((self.mantissa, self.exponent, self.p))

    def __bool__(self):
        return self.mantissa != 0

    def __repr__(self):
        return f"{self.mantissa}*{self.p}^{self.exponent}"


class Domain:
    """A scalar domain tag with conversion and text round-tripping."""

    name = "?"
    is_field = False

    def convert(self, x):
        raise NotImplementedError

    @property
    def zero(self):
        return self.convert(0)

    @property
    def one(self):
        return self.convert(1)

    def parse(self, text: str):
        return self.convert(Fraction(text))

    def format(self, x) -> str:
        return str(x)

    def __repr__(self):
        return self.name


class RationalField(Domain):
    name = "QQ"
    is_field = True

    def convert(self, x):
        if isinstance(x, PrimeFieldScalar):
            raise TypeError("cannot coerce a prime field element to QQ")
        if isinstance(x, LocalizedIntegerScalar):
            return x.to_fraction()
        return Fraction(x)

    def format(self, x) -> str:
        return str(Fraction(x))


class IntegerRing(Domain):
    name = "ZZ"

    def convert(self, x):
        if isinstance(x, int):
            return x
        q = Fraction(x)
        if q.denominator != 1:
            raise ValueError(f"{x} is not an integer")
        return q.numerator


class PrimeField(Domain):
    is_field = True

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.name = f"GF({p})"

    def convert(self, x):
        if isinstance(x, PrimeFieldScalar):
            if x.p != self.p:
                raise ValueError("characteristic mismatch")
            return x
        q = Fraction(x)
        return PrimeFieldScalar(q.numerator, self.p) / q.denominator

    def format(self, x) -> str:
        return str(self.convert(x).value)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


class LocalizedIntegers(Domain):
    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.name = f"ZZ[1/{p}]"

    def convert(self, x):
        if isinstance(x, LocalizedIntegerScalar):
            return x
        return LocalizedIntegerScalar.from_fraction(x, self.p)

    def parse(self, text: str):
        # "m*p^e" or a plain rational
        if "*" in text and "^" in text:
            m, rest = text.split("*", 1)
            base, e = rest.split("^", 1)
            if int(base) != self.p:
                raise ValueError(f"expected base {self.p} in {text!r}")
            return LocalizedIntegerScalar(int(m), int(e), self.p)
        return self.convert(Fraction(text))

    def format(self, x) -> str:
        x = self.convert(x)
        return f"{x.mantissa}*{self.p}^{x.exponent}"

    def __eq__(self, other):
        return isinstance(other, LocalizedIntegers) and other.p == self.p

    def __hash__(self):
        return hash(("ZZloc", self.p))


QQ = RationalField()
ZZ = IntegerRing()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def domain_from_name(name: str) -> Domain:
    if name in ("QQ", "Q", "rational"):
        return QQ
    if name in ("ZZ", "Z", "integer"):
        return ZZ
    if name.startswith("GF(") and name.endswith(")"):
        return GF(int(name[3:-1]))
    if name.startswith("ZZ[1/") and name.endswith("]"):
        return LocalizedIntegers(int(name[5:-1]))
    raise ValueError(f"unknown scalar domain {name!r}")
