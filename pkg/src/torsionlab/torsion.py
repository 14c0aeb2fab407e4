"""The a-torsion functor and element/ideal-level certificates.

Certificates answer "is ``a^n x = 0``" by multiplying out generator products
(ideals of finite type) or schema instances up to a variable bound
(schematic ideals). For a schematic monomial ring the index set always
contains one index beyond everything the question mentions: all such fresh
indices behave alike under the rewrite rules, so one of them stands for the
whole infinite tail.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .graded import Degree, MonomialModule, add, minimal_vectors, seq_from
from .linalg.matrix import ExactMatrix, kernel_basis
from .rings.idealization import IdealizationElement
from .rings.ideals import (IdealizationIdeal, MonoidIdeal, MonomialIdeal, SequenceIdeal, SnIdeal)
from .rings.monoid import MonoidAlgElement
from .rings.polynomial import Monomial, PolyElement, PolyRing
from .rings.sequences import (EventualSequence, FiniteProductElement, in_finite_support_ideal,
                              indicator_after_zero, zeroed_at_start)
from .rings.stmodel import SnFraction
from .rings.tensor import TensorLevel, frobenius_root, random_nilpotent


class TruncationNotFinite(ValueError):
    pass


class FamilyNotDecidable(ValueError):
    pass


class GammaNotSchematic(ValueError):
    pass


# -- certificates ---------------------------------------------------------------


@dataclass(frozen=True)
class TorsionCertificate:
    """``exponent = n`` means ``a^n x = 0``; ``None`` means unknown up to ``bound``.

    ``survivor`` is a nonzero product ``g_1 ... g_k x`` at the largest ``k`` tried
    below the exponent (or at the bound), which is the evidence for minimality.
    """

    element: object
    ideal: object
    exponent: int | None
    bound: int
    survivor: object = None
    index_bound: int | None = None

    @property
    def status(self) -> str:
        return f"exponent={self.exponent}" if self.exponent is not None else f"unknown-up-to({self.bound})"

    def to_json(self) -> dict:
        out = {"element": str(self.element), "exponent": self.exponent, "bound": self.bound,
               "status": self.status}
        if self.survivor is not None:
            out["survivor"] = str(self.survivor)
        if self.index_bound is not None:
            out["index_bound"] = self.index_bound
        return out


def _monomial_layers(ring: PolyRing, terms: Iterable[Monomial], base: Sequence[Monomial], step: int):
    """Successive sets of nonzero normal products ``g_1 ... g_(k*step) t``."""
    layer = {t for t in terms}
    while True:
        yield layer
        for _ in range(step):
            layer = {s * g for s in layer for g in base if ring.is_normal(s * g)}


def _fresh_bound(ring: PolyRing, x: PolyElement, bound: int, var_bound: int | None) -> int:
    if ring.var_bound is not None:
        return ring.var_bound
    top = max((t.max_var() for t in x.terms), default=0)
    return max(top, bound, var_bound or 0) + 1


def is_torsion_element(x, a, bound: int, var_bound: int | None = None, modulo=None) -> TorsionCertificate:
    """Least ``n <= bound`` with ``a^n x = 0`` (in the quotient by ``modulo`` if given)."""
    if isinstance(a, MonomialIdeal):
        return _torsion_monomial(x, a, bound, var_bound)
    if isinstance(a, MonoidIdeal):
        return _torsion_monoid(x, a, bound)
    survivor = x
    for n in range(bound + 1):
        prod = _apply_power(a, n, x)
        if _is_zero_mod(prod, modulo):
            return TorsionCertificate(x, a, n, bound, survivor if n else None)
        survivor = prod
    return TorsionCertificate(x, a, None, bound, survivor)


def _is_zero_mod(y, modulo) -> bool:
    if modulo is not None:
        return modulo.contains(y)
    return y.is_zero()


def _apply_power(a, n: int, x):
    if isinstance(a, SequenceIdeal):
        if a.generator is None:
            raise FamilyNotDecidable("the finite-support ideal is not of finite type")
        return a.generator ** n * x if n else x
    if isinstance(a, IdealizationIdeal):
        g = IdealizationElement(a.p, a.p ** (a.exponent * n), 0)
        return g * x
    if isinstance(a, SnIdeal):
        if a.generator is None:
            raise FamilyNotDecidable("the height-one prime of S_n is not of finite type")
        return a.generator ** n * x if n else x
    if isinstance(a, (list, tuple)):
        # principal ideal given by a single element of any family
        g, = a
        return g ** n * x if n else x
    raise FamilyNotDecidable(f"no torsion test for {type(a).__name__}")


def _torsion_monomial(x: PolyElement, a: MonomialIdeal, bound: int, var_bound) -> TorsionCertificate:
    ring = a.ring
    if x.ring != ring:
        raise ValueError("ring mismatch")
    vb = _fresh_bound(ring, x, bound, var_bound)
    base = a.base_generators(vb)
    survivor = None
    for n, layer in enumerate(_monomial_layers(ring, x.terms, base, a.exponent)):
        if not layer:
            return TorsionCertificate(x, a, n, bound, survivor, vb)
        survivor = ring.monomial(min(layer))
        if n == bound:
            return TorsionCertificate(x, a, None, bound, survivor, vb)


def _torsion_monoid(x: MonoidAlgElement, a: MonoidIdeal, bound: int) -> TorsionCertificate:
    if x.is_zero():
        return TorsionCertificate(x, a, 0, bound)
    cap = x.ring.truncate_above
    beta = x.ord()
    for n in range(1, bound + 1):
        if cap is None:
            break
        cl = a.power(n).closure
        # every element of a^n has order admitted by the cut; products land above beta + alpha
        lowest = cl.alpha + beta
        if lowest > cap or (lowest == cap and not cl.attained):
            return TorsionCertificate(x, a, n, bound, f"order {beta} + cut {a.power(n - 1).closure.alpha if n > 1 else 0}")
    return TorsionCertificate(x, a, None, bound, f"order {beta} + cut {a.power(bound).closure.alpha}")


# -- colon submodules and the torsion functor -------------------------------------


def _ideal_vectors(module: MonomialModule, a) -> list[Degree]:
    if isinstance(a, MonomialIdeal):
        n = module.nvars
        out = []
        for g in a.base_generators(n - 1):
            v = [0] * n
            for i, e in g.exps:
                v[i] = e
            out.append(tuple(v))
        return out
    return [s.exps for s in seq_from(module, list(a))]


def _power_vectors(gens: list[Degree], n: int, nvars: int) -> list[Degree]:
    layer = {(0,) * nvars}
    for _ in range(n):
        layer = {add(t, g) for t in layer for g in gens}
    return list(minimal_vectors(layer))


def realize(target, a, var_bound: int | None = None, exponent_bound: int = 0):
    """``(MonomialModule, ideal generator vectors, ideal power multiplier)`` for a module or ring.

    Schematic rings are truncated at ``max(var_bound, exponent_bound) + 1`` so that
    a fresh index exists beyond every exponent the caller will ask about.
    """
    if isinstance(target, MonomialModule):
        return target, _ideal_vectors(target, a), getattr(a, "exponent", 1)
    if isinstance(target, PolyRing):
        if target.var_bound is not None:
            ring = target
        else:
            if var_bound is None:
                raise TruncationNotFinite("a schematic ring needs a variable bound")
            ring = target.with_bound(max(var_bound, exponent_bound) + 1)
        module = MonomialModule.from_ring(ring)
        if not isinstance(a, MonomialIdeal):
            raise TruncationNotFinite("rings are paired with monomial ideals")
        return module, _ideal_vectors(module, MonomialIdeal(ring, a.generators, a.schema, 1)), a.exponent
    raise TruncationNotFinite(f"{type(target).__name__} has no degreewise-finite truncation")


def colon_submodule(target, a, n: int, degree_bound: int, var_bound: int | None = None) -> list[Degree]:
    """Monomial basis of ``(0 :_M a^n)`` in total degrees ``<= degree_bound``."""
    module, gens, mult = realize(target, a, var_bound, n)
    return _colon(module, gens, n * mult, degree_bound)


def _colon(module: MonomialModule, gens: list[Degree], n: int, degree_bound: int) -> list[Degree]:
    # each candidate monomial m gets its multiplication matrix into the pieces m + deg g
    # for the generators g of a^n; m is in the colon exactly when that matrix has a kernel
    prods = _power_vectors(gens, n, module.nvars)
    dom = module.domain
    out = []
    for m in module.normal_monomials(degree_bound):
        rows = [[dom.one if module.is_nonzero(add(m, g)) else dom.zero] for g in prods]
        if kernel_basis(ExactMatrix.from_rows(dom, rows, cols=1)):
            out.append(m)
    return out


@dataclass(frozen=True)
class GammaResult:
    basis: tuple
    stabilized_at: int | None
    bound: int
    dims: tuple = ()
    names: tuple = ()

    @property
    def status(self) -> str:
        return f"stabilized-at({self.stabilized_at})" if self.stabilized_at is not None \
            else f"not-stabilized-by({self.bound})"

    def to_json(self) -> dict:
        return {"basis": list(self.names) or [list(b) for b in self.basis], "status": self.status,
                "dims": list(self.dims)}


def gamma_truncated(target, a, bound: int, degree_bound: int, var_bound: int | None = None) -> GammaResult:
    """``(0 : a^n)`` for ``n = 1, 2, ...`` until two consecutive colons agree or ``n`` reaches ``bound``."""
    module, gens, mult = realize(target, a, max(var_bound or 0, bound + 1))
    names = lambda basis: tuple(module.name_of(m) for m in basis)
    prev = _colon(module, gens, mult, degree_bound)
    dims = [len(prev)]
    for n in range(1, bound):
        nxt = _colon(module, gens, (n + 1) * mult, degree_bound)
        if not set(prev) <= set(nxt):
            raise AssertionError("colon submodules must increase")
        dims.append(len(nxt))
        if nxt == prev:
            return GammaResult(tuple(prev), n, bound, tuple(dims), names(prev))
        prev = nxt
    return GammaResult(tuple(prev), None, bound, tuple(dims), names(prev))


def gamma_dims_by_degree(target, a, bound: int, degree_bound: int) -> dict:
    res = gamma_truncated(target, a, bound, degree_bound)
    out: dict = {}
    for m in res.basis:
        out[m] = out.get(m, 0) + 1
    return out


# -- nilpotency / idempotency --------------------------------------------------------


@dataclass(frozen=True)
class NilpotencyVerdict:
    exponent: int | None
    bound: int
    witness: object = None

    @property
    def status(self) -> str:
        return f"nilpotent({self.exponent})" if self.exponent is not None else f"unknown-up-to({self.bound})"

    def to_json(self) -> dict:
        return {"status": self.status, "witness": None if self.witness is None else str(self.witness)}


def is_nilpotent(a, bound: int, var_bound: int | None = None) -> NilpotencyVerdict:
    """Least ``n <= bound`` with ``a^n = 0``; otherwise a nonzero element of ``a^bound``."""
    if isinstance(a, MonoidIdeal):
        for n in range(1, bound + 1):
            if a.power(n).is_zero():
                return NilpotencyVerdict(n, bound)
        w = a.power(bound).closure
        return NilpotencyVerdict(None, bound, f"cut alpha={w.alpha} attained={w.attained}")
    if isinstance(a, MonomialIdeal):
        ring = a.ring
        vb = ring.var_bound if ring.var_bound is not None else max(var_bound or 0, bound) + 1
        for n in range(1, bound + 1):
            prods = MonomialIdeal(ring, a.generators, a.schema, a.exponent * n).generator_products(vb)
            if not prods:
                return NilpotencyVerdict(n, bound)
        return NilpotencyVerdict(None, bound, max(prods, key=lambda g: g.monomials()[0]))
    if isinstance(a, SequenceIdeal):
        if a.generator is None:
            return NilpotencyVerdict(None, bound, indicator_after_zero())
        for n in range(1, bound + 1):
            if (a.generator ** n).is_zero():
                return NilpotencyVerdict(n, bound)
        return NilpotencyVerdict(None, bound, a.generator ** bound)
    if isinstance(a, IdealizationIdeal):
        return NilpotencyVerdict(None, bound, a.power(bound).generators[0])
    if isinstance(a, SnIdeal):
        if a.generator is None:
            return NilpotencyVerdict(None, bound, SnFraction.Y(a.p, 0) * SnFraction.Y(a.p, 0) ** max(bound - 1, 0))
        return NilpotencyVerdict(None, bound, a.generator ** bound)
    raise FamilyNotDecidable(f"no nilpotency test for {type(a).__name__}")


@dataclass(frozen=True)
class TensorNilradical:
    """The kernel of multiplication on ``L (x)_K L``, probed on levels ``1..levels``."""

    p: int
    levels: int
    samples: int = 20
    seed: int = 0


@dataclass(frozen=True)
class IdempotencyVerdict:
    idempotent: bool
    witness: object = None
    reason: str = ""

    def to_json(self) -> dict:
        return {"idempotent": self.idempotent, "witness": None if self.witness is None else str(self.witness),
                "reason": self.reason}


def is_idempotent(a, var_bound: int | None = None) -> IdempotencyVerdict:
    if isinstance(a, MonoidIdeal):
        sq = a.power(2)
        if a.is_zero():
            return IdempotencyVerdict(True, reason="zero ideal")
        if sq.closure == a.closure and sq.generators == () and a.generators == ():
            return IdempotencyVerdict(True, reason="cut scales to itself (alpha = 0)")
        if a.closure.alpha == 0 and not a.closure.attained:
            return IdempotencyVerdict(True, reason="alpha = 0, not attained")
        if a.closure.alpha == 0:
            return IdempotencyVerdict(True, reason="unit ideal")
        return IdempotencyVerdict(False, f"alpha(a^2) = {sq.closure.alpha} > {a.closure.alpha}",
                                  "alpha doubles under squaring")
    if isinstance(a, MonomialIdeal):
        ring = a.ring
        vb = ring.var_bound if ring.var_bound is not None else (var_bound or 4) + 1
        sq = a.power(2)
        for g in a.base_generators(vb) if a.exponent == 1 else [m.monomials()[0] for m in a.generator_products(vb)]:
            if ring.is_normal(g) and not sq.contains_monomial(g):
                return IdempotencyVerdict(False, ring.monomial(g), "generator outside the square")
        if a.is_finite_type() or ring.var_bound is not None:
            return IdempotencyVerdict(True, reason="every generator lies in the square")
        raise FamilyNotDecidable("schematic ideal whose instances all lie in the square up to the bound")
    if isinstance(a, SequenceIdeal):
        if a.generator is None:
            return IdempotencyVerdict(True, reason="x = x * (indicator of the support of x)")
        return IdempotencyVerdict(True, reason="<g> = <g^2> pointwise over a field")
    if isinstance(a, IdealizationIdeal):
        return IdempotencyVerdict(False, a.generators[0], "(p^n, 0) is not in q^(2n)")
    if isinstance(a, SnIdeal):
        if a.generator is not None:
            unit = a.generator.is_unit()
            return IdempotencyVerdict(unit, None if unit else a.generator,
                                      "principal ideal of a domain" if not unit else "unit ideal")
        y = SnFraction.Y(a.p, 0)
        return IdempotencyVerdict(a.power(2).contains(y), y, "Y_0 has t-order 1")
    if isinstance(a, TensorNilradical):
        rng = random.Random(a.seed)
        for level in range(0, a.levels):
            space = TensorLevel(a.p, level)
            for _ in range(a.samples):
                f = random_nilpotent(space, rng)
                g = frobenius_root(f)
                if g ** a.p != f.include() or not g.is_nilpotent():
                    return IdempotencyVerdict(False, f, "no nilpotent p-th root found")
        return IdempotencyVerdict(True, reason="sampled nilpotents are p-th powers of nilpotents one level up")
    raise FamilyNotDecidable(f"no idempotency test for {type(a).__name__}")


# -- T-nilpotency ----------------------------------------------------------------------


@dataclass(frozen=True)
class TNilpotencyResult:
    n: int
    shared_index: int
    within_bound: bool

    def to_json(self) -> dict:
        return {"n": self.n, "shared_index": self.shared_index, "within_bound": self.within_bound}


def t_nilpotency_check(family: Sequence[PolyElement]) -> TNilpotencyResult:
    """Least ``n`` with ``x_0 x_1 ... x_n = 0``, for nonzero monomials of one ring."""
    if not family:
        raise ValueError("empty family")
    for x in family:
        if not x.is_monomial() or x.is_zero():
            raise ValueError(f"{x} is not a nonzero monomial")
    head = family[0].monomials()[0]
    shared = head.max_var()
    prod = family[0]
    if prod.is_zero():
        return TNilpotencyResult(0, shared, True)
    for n in range(1, len(family)):
        prod = prod * family[n]
        if prod.is_zero():
            return TNilpotencyResult(n, shared, n <= shared + 2)
    raise ValueError("the family is too short for its product to vanish")


def random_monomial_family(ring: PolyRing, rng: random.Random, max_index: int, length: int,
                           max_exp: int = 2) -> list[PolyElement]:
    """Nonzero monomials; with probability 1/2 all share one variable."""
    shared = rng.randint(1, max_index)
    out = []
    while len(out) < length:
        i = shared if rng.random() < 0.5 or not out else rng.randint(1, max_index)
        e = rng.randint(1, min(max_exp, i))
        out.append(ring.var(i, e))
    return out


# -- adic separatedness ------------------------------------------------------------------


@dataclass(frozen=True)
class SeparationVerdict:
    bound: int
    witness: object = None
    checked: int = 0

    @property
    def status(self) -> str:
        return f"empty-up-to({self.bound})" if self.witness is None else "witness"

    def to_json(self) -> dict:
        return {"status": self.status, "witness": None if self.witness is None else str(self.witness),
                "checked": self.checked}


def adic_separated_up_to(target, a, N: int, var_bound: int | None = None, degree_bound: int | None = None,
                         candidates: Sequence = ()) -> SeparationVerdict:
    """Look for a nonzero element of ``a^N`` among the normal forms of a truncation.

    For a schematic monomial ring the truncation keeps indices ``<= var_bound``
    (default ``N - 1``). Other families are probed on the given ``candidates``.
    """
    if isinstance(a, MonomialIdeal):
        ring = a.ring
        vb = var_bound if var_bound is not None else (ring.var_bound if ring.var_bound is not None else N - 1)
        module = MonomialModule.from_ring(ring.with_bound(vb) if ring.var_bound is None else ring)
        power = a.power(N)
        mons = module.normal_monomials(degree_bound if degree_bound is not None else N + vb + 1)
        for m in mons:
            t = Monomial((i, e) for i, e in enumerate(m) if e)
            if power.contains_monomial(t):
                return SeparationVerdict(N, ring.monomial(t), len(mons))
        return SeparationVerdict(N, None, len(mons))
    power = a.power(N)
    for c in candidates:
        if not c.is_zero() and power.contains(c):
            return SeparationVerdict(N, c, len(candidates))
    return SeparationVerdict(N, None, len(candidates))


# -- radical defect ------------------------------------------------------------------------


@dataclass(frozen=True)
class RadicalDefect:
    found: bool
    witness: str = ""
    certificates: tuple = ()
    gamma: tuple = ()

    def to_json(self) -> dict:
        return {"status": "defect" if self.found else "no-defect-found", "witness": self.witness,
                "certificates": [c.to_json() for c in self.certificates], "gamma": list(self.gamma)}


def radical_defect(target, a, bound: int, degree_bound: int = 8, var_bound: int | None = None) -> RadicalDefect:
    if isinstance(target, PolyRing) and target.var_bound is None and not target.rules.is_finite:
        if not isinstance(a, MonomialIdeal):
            raise GammaNotSchematic("schematic torsion needs a monomial ideal")
        vb = var_bound if var_bound is not None else bound
        certs = [is_torsion_element(target.var(i), a, bound + 1, vb) for i in range(1, vb + 1)]
        if any(c.exponent is None for c in certs):
            raise GammaNotSchematic("some generator has no torsion certificate within the bound")
        one = is_torsion_element(target.one(), a, bound, vb)
        if one.exponent is not None:
            return RadicalDefect(False, "", tuple(certs))
        # a * 1 lies in Gamma (every generator is torsion) while 1 does not
        return RadicalDefect(True, "1 + Gamma", tuple(certs) + (one,))
    module, _, _ = realize(target, a, var_bound, bound)
    g = gamma_truncated(module, a if not isinstance(target, PolyRing) else _vectors_for(module, a), bound,
                        degree_bound)
    if g.stabilized_at is None:
        raise GammaNotSchematic("the torsion submodule did not stabilize within the bound")
    quotient = module.quotient(g.basis) if g.basis else module
    g2 = gamma_truncated(quotient, a if not isinstance(target, PolyRing) else _vectors_for(module, a), bound,
                         degree_bound)
    if g2.basis:
        return RadicalDefect(True, quotient.name_of(g2.basis[0]) + " + Gamma", (), g.names)
    return RadicalDefect(False, "", (), g.names)


def _vectors_for(module, a):
    return _ideal_vectors(module, MonomialIdeal(a.ring.with_bound(module.nvars - 1), a.generators, a.schema, 1))


# -- weak assassin -------------------------------------------------------------------------


@dataclass(frozen=True)
class MinimalPrimeWitness:
    prime: frozenset
    element: object
    evidence: tuple  # (variable, annihilator generator with only that variable in the prime)

    def to_json(self) -> dict:
        return {"prime": sorted(self.prime), "element": str(self.element),
                "evidence": [[v, list(g)] for v, g in self.evidence]}


def annihilator_generators(module: MonomialModule, t: Degree) -> tuple:
    """Minimal generators of ``(J : x^t)`` for a monomial module ``K[x]/J``."""
    if not module.is_nonzero(t):
        return ((0,) * module.nvars,)
    return minimal_vectors(tuple(max(g - e, 0) for g, e in zip(r, t)) for r in module.relations)


def _support(v: Degree) -> frozenset:
    return frozenset(k for k, e in enumerate(v) if e)


def weak_assassin_membership(target, x, prime: Iterable, var_bound: int | None = None):
    """Is the variable prime ``prime`` minimal over ``(0 : x)``?"""
    module, t = _module_and_vector(target, x, var_bound)
    P = frozenset(module.var_index(v) if isinstance(v, str) else int(v) for v in prime)
    ann = annihilator_generators(module, t)
    if any(not (_support(g) & P) for g in ann):
        return False, None
    evidence = []
    for v in sorted(P):
        g = next((g for g in ann if _support(g) & P == {v}), None)
        if g is None:
            return False, None
        evidence.append((v, g))
    return True, MinimalPrimeWitness(P, module.name_of(t), tuple(evidence))


def minimal_primes(ann: Sequence[Degree], nvars: int) -> list[frozenset]:
    """Minimal variable subsets meeting the support of every generator."""
    supports = [_support(g) for g in ann]
    if any(not s for s in supports):
        return []
    out: list[frozenset] = []
    for size in range(nvars + 1):
        for P in combinations(range(nvars), size):
            P = frozenset(P)
            if all(s & P for s in supports) and not any(q <= P for q in out):
                out.append(P)
    return out


def _module_and_vector(target, x, var_bound):
    if isinstance(target, MonomialModule):
        if isinstance(x, str):
            from .graded import parse_term
            return target, parse_term(target, x)
        return target, tuple(x)
    if isinstance(target, PolyRing):
        ring = target if target.var_bound is not None else target.with_bound(
            max(var_bound or 0, max((t.max_var() for t in x.terms), default=0)))
        module = MonomialModule.from_ring(ring)
        if not x.is_monomial():
            raise ValueError("the annihilator of a non-monomial element is not handled")
        t = x.monomials()[0]
        v = [0] * module.nvars
        for i, e in t.exps:
            v[i] = e
        return module, tuple(v)
    raise ValueError("weak assassins are computed for monomial modules only")


# -- the implication chain on instances ----------------------------------------------------


@dataclass
class ImplicationReport:
    torsion: bool | None
    primes: list
    primes_contain_a: bool
    consistent: bool
    notes: list = field(default_factory=list)
    witnesses: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {"torsion": self.torsion, "primes": [sorted(p) for p in self.primes],
                "primes_contain_a": self.primes_contain_a, "consistent": self.consistent,
                "notes": self.notes, "witnesses": self.witnesses}


def _module_torsion_exponent(module: MonomialModule, gens: list[Degree], m: Degree, bound: int) -> int | None:
    layer = {m} if module.is_nonzero(m) else set()
    for n in range(bound + 1):
        if not layer:
            return n
        layer = {add(t, g) for t in layer for g in gens if module.is_nonzero(add(t, g))}
    return None


def check_1_130_instance(module: MonomialModule, a, bound: int = 12, degree_bound: int = 6) -> ImplicationReport:
    """Torsion versus weak-assassin data on the normal monomials of a window."""
    gens = _ideal_vectors(module, a)
    samples = module.normal_monomials(degree_bound)
    exps = [_module_torsion_exponent(module, gens, m, bound) for m in samples]
    torsion = all(e is not None for e in exps)
    primes: list = []
    for m in samples:
        for P in minimal_primes(annihilator_generators(module, m), module.nvars):
            if P not in primes:
                primes.append(P)
    contain = all(all(_support(g) & P for g in gens) for P in primes)
    # (1) => (2): torsion forces every weak-assassin prime to contain a;
    # finite type gives the converse (2) => (1) on the sampled elements
    consistent = (not torsion or contain) and (not contain or torsion)
    notes = []
    if not torsion:
        m = samples[exps.index(None)]
        notes.append(f"{module.name_of(m)} has no certificate up to {bound}")
    return ImplicationReport(torsion, primes, contain, consistent, notes)


def implication_sequences_report(bound: int = 10, samples: int = 100, seed: int = 0) -> ImplicationReport:
    """``R`` = eventually periodic sequences, ``M = R/b``, ``a = <f>`` with ``f = (0,1,1,...)``."""
    rng = random.Random(seed)
    f = indicator_after_zero()
    a = SequenceIdeal(f)
    b = SequenceIdeal(None)
    notes: list = []
    witnesses: list = []
    ok = f.is_idempotent() and not f.is_zero()
    cert = is_torsion_element(EventualSequence((), 1), a, bound, modulo=b)
    ok &= cert.exponent is None
    notes.append(f"class of 1: {cert.status}")
    g = EventualSequence((), (1, 0))
    h = EventualSequence((), (0, 1))
    for _ in range(samples):
        prefix = [rng.randint(-3, 3) for _ in range(rng.randint(0, 4))]
        tail = rng.choice([c for c in range(-3, 4) if c])
        x = EventualSequence(prefix, tail)
        xp = f * x
        # the construction x' agrees with x off index 0, lies in b only if x has zero tail
        ok &= xp == zeroed_at_start(x) and not in_finite_support_ideal(xp)
        # ann(x + b) = b: g h = 0 lies in it while g, h do not
        ok &= in_finite_support_ideal(g * h * x) and not in_finite_support_ideal(g * x) \
            and not in_finite_support_ideal(h * x)
    witnesses.append({"non_prime_pair": [repr(g), repr(h)], "f": repr(f)})
    notes.append("sampled annihilators are not prime; M is not a-torsion")
    return ImplicationReport(False, [], True, bool(ok), notes, witnesses)


__all__ = ["FamilyNotDecidable", "GammaNotSchematic", "GammaResult", "IdempotencyVerdict", "ImplicationReport",
           "MinimalPrimeWitness", "NilpotencyVerdict", "RadicalDefect", "SeparationVerdict", "TNilpotencyResult",
           "TensorNilradical", "TorsionCertificate", "TruncationNotFinite", "adic_separated_up_to",
           "annihilator_generators", "check_1_130_instance", "implication_sequences_report", "colon_submodule",
           "gamma_dims_by_degree", "gamma_truncated", "is_idempotent", "is_nilpotent", "is_torsion_element",
           "minimal_primes", "radical_defect", "random_monomial_family", "realize", "t_nilpotency_check",
           "weak_assassin_membership"]
