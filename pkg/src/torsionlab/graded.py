"""Multigraded cyclic modules ``K[x_1..x_m] / J`` with ``J`` a monomial ideal.

Each multidegree piece is zero or spanned by the single monomial of that
degree, so every graded computation reduces to small exact matrices. The
same description covers localizations: inverting a set of variables keeps a
piece nonzero exactly when no generator of ``J`` divides the monomial in the
remaining coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from .linalg.scalars import QQ, Domain
from .rings.polynomial import Monomial, PolyElement, PolyRing, minimal_monomials

Degree = tuple  # tuple[int, ...]


def _vec(t: Monomial, n: int) -> Degree:
    v = [0] * n
    for i, e in t.exps:
        if i >= n:
            raise ValueError(f"variable {i} outside a ring with {n} variables")
        v[i] = e
    return tuple(v)


def _minimal_vectors(vs: Iterable[Degree]) -> tuple:
    uniq = sorted(set(vs), key=lambda v: (sum(v), v))
    out: list[Degree] = []
    for v in uniq:
        if not any(all(a <= b for a, b in zip(w, v)) for w in out):
            out.append(v)
    return tuple(out)


@dataclass(frozen=True)
class MonomialModule:
    """``R/J`` where ``R = K[x_0..x_(m-1)] / I`` and ``J`` contains ``I``.

    ``ring_relations`` generate ``I``; ``relations`` generate ``J`` (and include
    ``I``). Keeping ``I`` separate lets the same data be read as a module over
    the polynomial ring or over the quotient.
    """

    nvars: int
    relations: tuple = ()
    domain: Domain = QQ
    names: tuple | None = None
    ring_relations: tuple = ()

    def __post_init__(self):
        rel = _minimal_vectors(tuple(r) for r in self.relations + self.ring_relations)
        object.__setattr__(self, "relations", rel)
        object.__setattr__(self, "ring_relations", _minimal_vectors(tuple(r) for r in self.ring_relations))
        for r in rel:
            if len(r) != self.nvars or min(r, default=0) < 0:
                raise ValueError(f"bad relation exponent vector {r}")
        if self.names is not None and len(self.names) != self.nvars:
            raise ValueError("names do not match the number of variables")

    # -- constructors ----------------------------------------------------------

    @classmethod
    def free(cls, nvars: int, domain: Domain = QQ, names=None) -> "MonomialModule":
        return cls(nvars, (), domain, tuple(names) if names else None)

    @classmethod
    def from_ring(cls, ring: PolyRing, extra: Sequence = ()) -> "MonomialModule":
        """The ring itself (plus optional extra monomial relations) as a module."""
        if ring.var_bound is None:
            raise ValueError("need a variable bound to realize the ring as a graded module")
        n = ring.nvars
        ring_rel = tuple(_vec(t, n) for t in ring.rules.materialize(ring.var_bound))
        extra_rel = tuple(_vec(_as_monomial(t), n) for t in extra)
        names = ring.names if ring.names else tuple(f"x{i}" for i in range(n))
        return cls(n, extra_rel, ring.scalar, names, ring_rel)

    def quotient(self, more: Iterable[Degree]) -> "MonomialModule":
        return MonomialModule(self.nvars, self.relations + tuple(tuple(v) for v in more), self.domain,
                              self.names, self.ring_relations)

    def restricted(self) -> "MonomialModule":
        """Forget the ring structure: the same module over the polynomial ring."""
        return MonomialModule(self.nvars, self.relations, self.domain, self.names, ())

    def over_ring(self) -> "MonomialModule":
        """The ring ``R = K[x]/I`` as a module over itself."""
        return MonomialModule(self.nvars, (), self.domain, self.names, self.ring_relations)

    def with_domain(self, domain: Domain) -> "MonomialModule":
        return MonomialModule(self.nvars, self.relations, domain, self.names, self.ring_relations)

    # -- pieces ------------------------------------------------------------------

    @property
    def max_exponent(self) -> int:
        return max((max(r) for r in self.relations), default=0)

    def is_nonzero(self, deg: Degree) -> bool:
        if min(deg, default=0) < 0:
            return False
        return not any(all(g <= d for g, d in zip(r, deg)) for r in self.relations)

    def localized_nonzero(self, deg: Degree, inverted: frozenset | set) -> bool:
        """Is the degree-``deg`` piece of ``M[x_k^-1 : k in inverted]`` nonzero?"""
        for k, d in enumerate(deg):
            if k not in inverted and d < 0:
                return False
        for r in self.relations:
            if all(k in inverted or g <= deg[k] for k, g in enumerate(r)):
                return False
        return True

    def normal_monomials(self, max_total: int) -> list[Degree]:
        """Degrees of all nonzero pieces with total degree at most ``max_total``."""
        zero = (0,) * self.nvars
        if not self.is_nonzero(zero):
            return []
        seen = {zero}
        frontier = [zero]
        for _ in range(max_total):
            nxt = []
            for d in frontier:
                for k in range(self.nvars):
                    e = d[:k] + (d[k] + 1,) + d[k + 1:]
                    if e not in seen and self.is_nonzero(e):
                        seen.add(e)
                        nxt.append(e)
            frontier = nxt
        return sorted(seen, key=lambda v: (sum(v), v))

    def name_of(self, deg: Degree) -> str:
        names = self.names or tuple(f"x{i}" for i in range(self.nvars))
        parts = [names[k] if e == 1 else f"{names[k]}^{e}" for k, e in enumerate(deg) if e]
        return "*".join(parts) or "1"

    def var_index(self, name: str) -> int:
        names = self.names or tuple(f"x{i}" for i in range(self.nvars))
        if name not in names:
            raise KeyError(f"unknown variable {name!r}")
        return names.index(name)


def _as_monomial(t) -> Monomial:
    if isinstance(t, Monomial):
        return t
    if isinstance(t, PolyElement):
        if not t.is_monomial():
            raise ValueError(f"{t} is not a monomial")
        return t.monomials()[0]
    raise TypeError(f"cannot read {t!r} as a monomial")


@dataclass(frozen=True)
class SeqElement:
    """A term ``coeff * x^exps`` used as a member of a Koszul/Čech sequence."""

    exps: Degree
    coeff: object = 1

    @property
    def support(self) -> frozenset:
        return frozenset(k for k, e in enumerate(self.exps) if e)


def seq_from(module: MonomialModule, items: Sequence) -> tuple[SeqElement, ...]:
    """Accept variable names, exponent tuples, Monomials, PolyElements or SeqElements."""
    out = []
    for it in items:
        if isinstance(it, SeqElement):
            out.append(SeqElement(tuple(it.exps), module.domain.convert(it.coeff)))
        elif isinstance(it, str):
            out.append(SeqElement(parse_term(module, it), module.domain.one))
        elif isinstance(it, PolyElement):
            if not it.is_monomial():
                raise ValueError(f"sequence element {it} must be a single term")
            t, c = it.leading()
            out.append(SeqElement(_vec(t, module.nvars), module.domain.convert(c)))
        elif isinstance(it, Monomial):
            out.append(SeqElement(_vec(it, module.nvars), module.domain.one))
        else:
            v = tuple(int(x) for x in it)
            if len(v) != module.nvars:
                raise ValueError("exponent vector length mismatch")
            out.append(SeqElement(v, module.domain.one))
    if not out:
        raise ValueError("the sequence must be non-empty")
    return tuple(out)


def parse_term(module: MonomialModule, text: str) -> Degree:
    """``"x*y^2"`` -> exponent vector."""
    v = [0] * module.nvars
    for part in text.replace(" ", "").split("*"):
        if not part:
            continue
        name, _, e = part.partition("^")
        v[module.var_index(name)] += int(e) if e else 1
    return tuple(v)


def box(nvars: int, lo: int, hi: int) -> list[Degree]:
    return list(product(range(lo, hi + 1), repeat=nvars))


def total_degree_window(nvars: int, max_total: int) -> list[Degree]:
    return [d for d in product(range(max_total + 1), repeat=nvars) if sum(d) <= max_total]


def add(a: Degree, b: Degree) -> Degree:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Degree, b: Degree) -> Degree:
    return tuple(x - y for x, y in zip(a, b))


def scale(a: Degree, k: int) -> Degree:
    return tuple(k * x for x in a)


def minimal_vectors(vs: Iterable[Degree]) -> tuple:
    return _minimal_vectors(vs)


__all__ = ["Degree", "MonomialModule", "SeqElement", "add", "box", "minimal_monomials",
           "minimal_vectors", "parse_term", "scale", "seq_from", "sub", "total_degree_window"]
