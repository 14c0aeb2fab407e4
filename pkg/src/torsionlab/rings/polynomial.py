"""Polynomials in indexed variables and their quotients by monomial rewrite rules.

Variables are non-negative integers. A :class:`RewriteSystem` kills monomials
outright, so the normal form of an element is obtained by dropping every
term whose monomial matches a rule; that is confluent by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Mapping, Sequence

from ..linalg.scalars import QQ, Domain


class RingMismatch(ValueError):
    pass


class Monomial:
    """Finite-support map variable -> positive exponent."""

    __slots__ = ("exps", "_hash")

    def __init__(self, exps: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = exps.items() if isinstance(exps, Mapping) else exps
        acc: dict[int, int] = {}
        for v, e in items:
            if v < 0 or e < 0:
                raise ValueError("variables and exponents must be non-negative")
            if e:
                acc[v] = acc.get(v, 0) + e
        self.exps = tuple(sorted(acc.items()))
        self._hash = hash(self.exps)

    @classmethod
    def var(cls, i: int, e: int = 1) -> "Monomial":
        return cls(((i, e),))

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(self.exps + other.exps)

    def __pow__(self, n: int) -> "Monomial":
        return Monomial((v, e * n) for v, e in self.exps)

    def divides(self, other: "Monomial") -> bool:
        d = dict(other.exps)
        return all(d.get(v, 0) >= e for v, e in self.exps)

    def __truediv__(self, other: "Monomial") -> "Monomial":
        d = dict(self.exps)
        for v, e in other.exps:
            if d.get(v, 0) < e:
                raise ValueError(f"{other} does not divide {self}")
            d[v] -= e
        return Monomial(d)

    def lcm(self, other: "Monomial") -> "Monomial":
        d = dict(self.exps)
        for v, e in other.exps:
            d[v] = max(d.get(v, 0), e)
        return Monomial(d)

    def exponent(self, v: int) -> int:
        for w, e in self.exps:
            if w == v:
                return e
        return 0

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.exps)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.exps)

    def max_var(self) -> int:
        return self.exps[-1][0] if self.exps else -1

    def is_one(self) -> bool:
        return not self.exps

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exps == other.exps

    def __hash__(self):
        return self._hash

    def __lt__(self, other: "Monomial"):
        return (self.degree, self.exps) < (other.degree, other.exps)

    def __repr__(self):
        if not self.exps:
            return "1"
        return "*".join(f"X{v}" if e == 1 else f"X{v}^{e}" for v, e in self.exps)


ONE = Monomial()


# -- rewrite rules ---------------------------------------------------------

@dataclass(frozen=True)
class MonomialRule:
    """Kill every multiple of a fixed monomial."""

    monomial: Monomial

    def kills(self, t: Monomial) -> bool:
        return self.monomial.divides(t)

    def materialize(self, var_bound: int) -> list[Monomial]:
        return [self.monomial] if self.monomial.max_var() <= var_bound else []

    def to_json(self):
        return {"rule": "monomial", "monomial": [[v, e] for v, e in self.monomial.exps]}


@dataclass(frozen=True)
class PairRule:
    """``X_i X_j -> 0`` for indices ``i, j >= min_index`` (``i != j`` when ``distinct``)."""

    distinct: bool = True
    min_index: int = 0

    def kills(self, t: Monomial) -> bool:
        relevant = [(v, e) for v, e in t.exps if v >= self.min_index]
        if len(relevant) >= 2:
            return True
        return not self.distinct and bool(relevant) and relevant[0][1] >= 2

    def materialize(self, var_bound: int) -> list[Monomial]:
        idx = range(self.min_index, var_bound + 1)
        out = []
        for i in idx:
            for j in idx:
                if j < i or (self.distinct and i == j):
                    continue
                out.append(Monomial(((i, 1), (j, 1))))
        return out

    def to_json(self):
        return {"rule": "pair", "distinct": self.distinct, "min_index": self.min_index}


@dataclass(frozen=True)
class IndexPowerRule:
    """``X_i^(i + offset) -> 0`` for every index ``i``."""

    offset: int = 1

    def kills(self, t: Monomial) -> bool:
        return any(e >= v + self.offset for v, e in t.exps)

    def materialize(self, var_bound: int) -> list[Monomial]:
        return [Monomial.var(i, i + self.offset) for i in range(var_bound + 1) if i + self.offset > 0]

    def to_json(self):
        return {"rule": "index-power", "offset": self.offset}


@dataclass(frozen=True)
class RewriteSystem:
    rules: tuple = ()

    def kills(self, t: Monomial) -> bool:
        return any(r.kills(t) for r in self.rules)

    def materialize(self, var_bound: int) -> list[Monomial]:
        """Minimal monomial generators of the killed ideal in variables ``<= var_bound``."""
        gens: list[Monomial] = []
        for r in self.rules:
            gens.extend(r.materialize(var_bound))
        return minimal_monomials(gens)

    @property
    def is_finite(self) -> bool:
        return all(isinstance(r, MonomialRule) for r in self.rules)

    def to_json(self):
        return [r.to_json() for r in self.rules]


def minimal_monomials(gens: Iterable[Monomial]) -> list[Monomial]:
    uniq = sorted(set(gens))
    out: list[Monomial] = []
    for g in uniq:
        if not any(h.divides(g) for h in out):
            out.append(g)
    return out


# -- rings and elements ------------------------------------------------------

class PolyRing:
    """``K[X_0, X_1, ...]`` modulo a monomial rewrite system.

    ``var_bound`` (inclusive) caps the variable indices a concrete computation
    may touch; ``None`` means unbounded (used for schematic arguments).
    """

    def __init__(self, scalar: Domain = QQ, rules: RewriteSystem | Sequence = (),
                 var_bound: int | None = None, names: Sequence[str] | None = None):
        self.scalar = scalar
        self.rules = rules if isinstance(rules, RewriteSystem) else RewriteSystem(tuple(rules))
        if names is not None and var_bound is None:
            var_bound = len(names) - 1
        self.var_bound = var_bound
        self.names = tuple(names) if names is not None else None

    @property
    def family(self) -> str:
        return "monomial-quotient" if self.rules.rules else "polynomial"

    @property
    def nvars(self) -> int:
        if self.var_bound is None:
            raise ValueError("ring has unboundedly many variables")
        return self.var_bound + 1

    def with_bound(self, var_bound: int) -> "PolyRing":
        return PolyRing(self.scalar, self.rules, var_bound, None)

    def key(self):
        return (self.scalar.name, self.rules, self.var_bound)

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"PolyRing({self.scalar}, rules={self.rules.to_json()}, var_bound={self.var_bound})"

    # constructors
    def element(self, terms: Mapping[Monomial, object] | Iterable = ()) -> "PolyElement":
        return PolyElement(self, terms)

    def zero(self) -> "PolyElement":
        return PolyElement(self, {})

    def one(self) -> "PolyElement":
        return PolyElement(self, {ONE: 1})

    def const(self, c) -> "PolyElement":
        return PolyElement(self, {ONE: c})

    def var(self, i: int, e: int = 1) -> "PolyElement":
        return PolyElement(self, {Monomial.var(i, e): 1})

    def monomial(self, t: Monomial, c=1) -> "PolyElement":
        return PolyElement(self, {t: c})

    def gens(self) -> list["PolyElement"]:
        return [self.var(i) for i in range(self.nvars)]

    def var_index(self, name: str) -> int:
        if self.names is None or name not in self.names:
            raise KeyError(f"unknown variable {name!r}")
        return self.names.index(name)

    def is_normal(self, t: Monomial) -> bool:
        return not self.rules.kills(t)

    def normal_monomials(self, degree: int) -> list[Monomial]:
        """All non-killed monomials of the given total degree (needs a variable bound)."""
        out = []
        for combo in combinations_with_replacement(range(self.nvars), degree):
            t = Monomial((v, 1) for v in combo)
            if self.is_normal(t):
                out.append(t)
        return sorted(out)

    def materialized_ideal(self) -> list[Monomial]:
        return self.rules.materialize(self.var_bound if self.var_bound is not None else 0)


class PolyElement:
    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: Mapping[Monomial, object] | Iterable = ()):
        self.ring = ring
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, object] = {}
        conv = ring.scalar.convert
        for t, c in items:
            if ring.var_bound is not None and t.max_var() > ring.var_bound:
                raise ValueError(f"monomial {t} exceeds the variable bound {ring.var_bound}")
            if ring.rules.kills(t):
                continue
            acc[t] = acc[t] + conv(c) if t in acc else conv(c)
        self.terms = {t: c for t, c in acc.items() if c}
        self._hash = None

    def _check(self, other):
        if isinstance(other, PolyElement):
            if other.ring != self.ring:
                raise RingMismatch("elements of different rings")
            return other
        return self.ring.const(other)

    def __add__(self, other):
        other = self._check(other)
        acc = dict(self.terms)
        for t, c in other.terms.items():
            acc[t] = acc[t] + c if t in acc else c
        return PolyElement(self.ring, acc)

    __radd__ = __add__

    def __neg__(self):
        return PolyElement(self.ring, {t: -c for t, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        other = self._check(other)
        acc: dict[Monomial, object] = {}
        kills = self.ring.rules.kills
        for t1, c1 in self.terms.items():
            for t2, c2 in other.terms.items():
                t = t1 * t2
                if kills(t):
                    continue
                acc[t] = acc[t] + c1 * c2 if t in acc else c1 * c2
        return PolyElement(self.ring, acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = self.ring.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def leading(self) -> tuple[Monomial, object]:
        t = max(self.terms)
        return t, self.terms[t]

    def monomials(self) -> list[Monomial]:
        return sorted(self.terms)

    def support_vars(self) -> set[int]:
        return {v for t in self.terms for v in t.support}

    def __eq__(self, other):
        if isinstance(other, PolyElement):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int,)):
            return self == self.ring.const(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        names = self.ring.names
        parts = []
        for t in sorted(self.terms):
            c = self.terms[t]
            if names:
                mono = "*".join(names[v] if e == 1 else f"{names[v]}^{e}" for v, e in t.exps) or "1"
            else:
                mono = repr(t)
            parts.append(mono if c == 1 and not t.is_one() else f"{c}*{mono}" if not t.is_one() else f"{c}")
        return " + ".join(parts)


# Convenience constructors for the named rings of the corpus.

def lemma_quotient_rules() -> RewriteSystem:
    """Rules for ``K[X_i]/<X_i X_j (i != j), X_i^(i+1)>``."""
    return RewriteSystem((PairRule(distinct=True), IndexPowerRule(offset=1)))


def square_zero_rules() -> RewriteSystem:
    """Rules for ``K[X_i]/<X_i X_j | all i, j>``."""
    return RewriteSystem((PairRule(distinct=False),))
