"""Ideal handles: generators plus family-specific closure data.

Every handle answers ``contains`` and ``power``. Ideals that are not of finite
type carry a schema (an index schema for monomial families, an alpha-cut for
the monoid algebra, a value cut for ``S_n``) instead of a generator list.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Sequence

from .idealization import IdealizationElement, q_power_member
from .monoid import MonoidAlgebra, MonoidAlgElement
from .polynomial import Monomial, PolyElement, PolyRing, minimal_monomials
from .sequences import EventualSequence, in_finite_support_ideal
from .stmodel import LexValue, SnFraction, sn_valuation


class IdealHandle:
    family = "?"
    generators: tuple = ()
    closure = None

    def contains(self, x) -> bool:
        raise NotImplementedError

    def power(self, n: int) -> "IdealHandle":
        raise NotImplementedError

    def __contains__(self, x) -> bool:
        return self.contains(x)


# -- monoid algebra --------------------------------------------------------------

@dataclass(frozen=True)
class CutClosure:
    """``{x : ord x > alpha}``, or ``ord x >= alpha`` when ``attained``."""

    alpha: Fraction
    attained: bool

    def admits(self, a: Fraction) -> bool:
        return a > self.alpha or (self.attained and a == self.alpha)

    def scaled(self, n: int) -> "CutClosure":
        return CutClosure(self.alpha * n, self.attained)


@dataclass(frozen=True)
class MonoidIdeal(IdealHandle):
    ring: MonoidAlgebra
    closure: CutClosure
    generators: tuple = ()
    family = "monoid-algebra"

    @classmethod
    def from_generators(cls, ring: MonoidAlgebra, gens: Sequence[MonoidAlgElement]) -> "MonoidIdeal":
        gens = tuple(g for g in gens if not g.is_zero())
        if not gens:
            raise ValueError("need at least one nonzero generator")
        if not ring.local:
            for g in gens:
                if len(g.terms) != 1:
                    raise ValueError(f"{g} is not of the form unit * e_alpha outside the local ring")
        return cls(ring, CutClosure(min(g.ord() for g in gens), True), gens)

    @classmethod
    def cut(cls, ring: MonoidAlgebra, alpha, attained: bool) -> "MonoidIdeal":
        return cls(ring, CutClosure(Fraction(alpha), attained))

    @classmethod
    def maximal(cls, ring: MonoidAlgebra) -> "MonoidIdeal":
        return cls.cut(ring, 0, False)

    def contains(self, x: MonoidAlgElement) -> bool:
        if x.is_zero():
            return True
        if self.ring.local:
            return self.closure.admits(x.ord())
        return all(self.closure.admits(a) for a in x.terms)

    def power(self, n: int) -> "MonoidIdeal":
        if n < 1:
            raise ValueError("power must be positive")
        if self.generators:
            prods = {}
            for combo in combinations_with_replacement(self.generators, n):
                g = combo[0]
                for h in combo[1:]:
                    g = g * h
                if not g.is_zero():
                    prods[g] = None
            if not prods:
                return MonoidIdeal(self.ring, CutClosure(self.closure.alpha * n, self.closure.attained), ())
            gens = tuple(prods)
            alpha = min(g.ord() for g in gens)
            return MonoidIdeal(self.ring, CutClosure(alpha, True), gens)
        return MonoidIdeal(self.ring, self.closure.scaled(n))

    def is_zero(self) -> bool:
        """Only the truncated ring can hold a nonzero cut that is zero."""
        cap = self.ring.truncate_above
        if cap is None:
            return False
        return self.closure.alpha > cap or (self.closure.alpha == cap and not self.closure.attained)


def alpha_invariant(c: MonoidIdeal) -> tuple[Fraction, bool]:
    return c.closure.alpha, c.closure.attained


# -- monomial families -------------------------------------------------------------

@dataclass(frozen=True)
class IndexSchema:
    """Generators ``X_i^power`` for every index ``i >= min_index``."""

    power: int = 1
    min_index: int = 0


@dataclass(frozen=True)
class MonomialIdeal(IdealHandle):
    """``(<generators> + <schema>)^exponent`` in a polynomial ring or monomial quotient."""

    ring: PolyRing
    generators: tuple = ()
    schema: IndexSchema | None = None
    exponent: int = 1
    family = "monomial"

    @classmethod
    def of(cls, ring: PolyRing, gens: Sequence) -> "MonomialIdeal":
        mons = []
        for g in gens:
            if isinstance(g, PolyElement):
                if not g.is_monomial():
                    raise ValueError(f"{g} is not a monomial")
                mons.append(g.monomials()[0])
            else:
                mons.append(g)
        return cls(ring, tuple(minimal_monomials(mons)))

    @classmethod
    def maximal_schema(cls, ring: PolyRing) -> "MonomialIdeal":
        return cls(ring, (), IndexSchema(1, 0))

    @property
    def closure(self):
        return self.schema

    def _candidates(self, t: Monomial):
        for g in self.generators:
            if g.divides(t):
                yield g
        if self.schema is not None:
            k = self.schema.power
            for v, e in t.exps:
                if v >= self.schema.min_index and e >= k:
                    yield Monomial.var(v, k)

    def contains_monomial(self, t: Monomial) -> bool:
        return _in_power(self, t, self.exponent)

    def contains(self, x) -> bool:
        if isinstance(x, Monomial):
            return self.contains_monomial(x)
        if x.ring != self.ring:
            raise ValueError("ring mismatch")
        return all(self.contains_monomial(t) for t in x.terms)

    def power(self, n: int) -> "MonomialIdeal":
        if n < 1:
            raise ValueError("power must be positive")
        return MonomialIdeal(self.ring, self.generators, self.schema, self.exponent * n)

    def base_generators(self, var_bound: int) -> list[Monomial]:
        gens = [g for g in self.generators if g.max_var() <= var_bound]
        if self.schema is not None:
            k, lo = self.schema.power, self.schema.min_index
            gens += [Monomial.var(i, k) for i in range(lo, var_bound + 1)]
        return gens

    def generator_products(self, var_bound: int) -> list[PolyElement]:
        """Generators of the ideal with nonvanishing normal form, indices ``<= var_bound``."""
        ring = self.ring
        base = self.base_generators(var_bound)
        layer = {Monomial(): None}
        for _ in range(self.exponent):
            nxt = {}
            for t in layer:
                for g in base:
                    s = t * g
                    if ring.is_normal(s):
                        nxt[s] = None
            layer = nxt
        return [ring.monomial(t) for t in minimal_monomials(layer)]

    def is_finite_type(self) -> bool:
        return self.schema is None


def _in_power(ideal: MonomialIdeal, t: Monomial, n: int) -> bool:
    @lru_cache(maxsize=None)
    def rec(t: Monomial, n: int) -> bool:
        if n == 0:
            return True
        return any(rec(t / g, n - 1) for g in ideal._candidates(t))
    return rec(t, n)


# -- S_n ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SnIdeal(IdealHandle):
    """Either principal ``<f>`` or the schematic prime ``{g : t-order(g) >= 1}``."""

    p: int
    generator: SnFraction | None = None
    min_t_order: int | None = None
    family = "Sn-localized"

    @classmethod
    def principal(cls, f: SnFraction) -> "SnIdeal":
        if f.is_zero():
            raise ValueError("zero generator")
        return cls(f.p, f)

    @classmethod
    def maximal(cls, p: int) -> "SnIdeal":
        return cls.principal(SnFraction.const(p, p))

    @classmethod
    def height_one_prime(cls, p: int) -> "SnIdeal":
        return cls(p, None, 1)

    @property
    def generators(self):
        return (self.generator,) if self.generator is not None else ()

    @property
    def closure(self):
        return sn_valuation(self.generator) if self.generator is not None else LexValue(self.min_t_order, 0)

    def contains(self, g: SnFraction) -> bool:
        if g.is_zero():
            return True
        if self.generator is not None:
            return sn_valuation(self.generator) <= sn_valuation(g)
        return sn_valuation(g).t_order >= self.min_t_order

    def power(self, n: int) -> "SnIdeal":
        if self.generator is not None:
            return SnIdeal.principal(self.generator ** n)
        # g = t^k * unit with k >= 1; products of n such have t-order >= n, and t^n is
        # reached, while every t-order >= 1 element is divisible by each p-power
        return SnIdeal(self.p, None, self.min_t_order * n)


# -- idealization --------------------------------------------------------------------

@dataclass(frozen=True)
class IdealizationIdeal(IdealHandle):
    """``q^n = <(p^n, 0)>`` inside ``Z_(p) x Z(p^inf)``."""

    p: int
    exponent: int = 1
    family = "idealization"

    @property
    def generators(self):
        return (IdealizationElement(self.p, self.p ** self.exponent, 0),)

    def contains(self, x: IdealizationElement) -> bool:
        return q_power_member(x, self.exponent) is not None

    def power(self, n: int) -> "IdealizationIdeal":
        return IdealizationIdeal(self.p, self.exponent * n)


# -- sequences ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SequenceIdeal(IdealHandle):
    """Principal ``<g>`` in eventually periodic sequences, or the finite-support ideal."""

    generator: EventualSequence | None = None
    family = "eventual-sequence"

    @property
    def generators(self):
        return (self.generator,) if self.generator is not None else ()

    def contains(self, x: EventualSequence) -> bool:
        if self.generator is None:
            return in_finite_support_ideal(x)
        # x in <g> iff x vanishes wherever g does (pointwise over a field)
        g = self.generator
        n = max(len(x.prefix), len(g.prefix)) + len(x.period) * len(g.period)
        return all(g[k] != 0 or x[k] == 0 for k in range(n))

    def power(self, n: int) -> "SequenceIdeal":
        if self.generator is None:
            return self
        return SequenceIdeal(self.generator ** n)
