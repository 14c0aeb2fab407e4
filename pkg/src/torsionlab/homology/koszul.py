"""Koszul complexes of monomial sequences on monomial modules, one multidegree at a time.

Basis of ``K_k(a^u) (x) M`` in internal degree ``eps``: the subsets ``S`` of size
``k`` for which the monomial of degree ``eps - u * deg(a_S)`` is nonzero in ``M``.
The differential is ``d e_S = sum_r (-1)^r a_(s_r)^u e_(S - s_r)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from ..linalg.homology import homology_over_field, homology_over_integers
from ..linalg.matrix import CompositionNotZero, Echelon, ExactMatrix, solve
from ..linalg.scalars import ZZ
from ..graded import Degree, MonomialModule, SeqElement, add, scale, seq_from, sub


@dataclass(frozen=True)
class KoszulComplexSpec:
    sequence: tuple
    power: int = 1

    def __post_init__(self):
        if not self.sequence:
            raise ValueError("the sequence must be non-empty")
        if self.power < 1:
            raise ValueError("power must be at least 1")

    @property
    def n(self) -> int:
        return len(self.sequence)


def _deg_of_subset(seq: Sequence[SeqElement], S: tuple, nvars: int) -> Degree:
    d = (0,) * nvars
    for s in S:
        d = add(d, seq[s].exps)
    return d


def _coeff_of_subset(seq, S, u, domain):
    c = domain.one
    for s in S:
        c = c * seq[s].coeff ** u
    return c


@dataclass
class GradedComplexSlice:
    """One multidegree of a (co)chain complex: bases and differentials.

    ``bases[k]`` lists ``(S, module_degree)`` pairs. For a chain complex
    ``diffs[k]`` maps degree ``k`` to ``k-1``; for a cochain complex it maps
    ``k`` to ``k+1``.
    """

    degree: Degree
    bases: list
    diffs: dict
    domain: object
    cochain: bool = False
    index: list = field(default_factory=list)

    def __post_init__(self):
        self.index = [{S: j for j, (S, _) in enumerate(b)} for b in self.bases]
        step = 1 if self.cochain else -1
        for k, d in self.diffs.items():
            nxt = self.diffs.get(k + step)
            if nxt is not None and d.rows and nxt.rows and d.cols:
                if not (nxt @ d).is_zero():
                    raise CompositionNotZero(f"d∘d ≠ 0 at degree {self.degree}, position {k}")

    def dim(self, k: int) -> int:
        return len(self.bases[k]) if 0 <= k < len(self.bases) else 0

    def _in(self, k):
        """Differential arriving at position ``k``."""
        src = k - 1 if self.cochain else k + 1
        if 0 <= src < len(self.bases):
            return self.diffs[src]
        return ExactMatrix.zeros(self.domain, self.dim(k), 0)

    def _out(self, k):
        tgt = k + 1 if self.cochain else k - 1
        if 0 <= tgt < len(self.bases):
            return self.diffs[k]
        return ExactMatrix.zeros(self.domain, 0, self.dim(k))

    def homology(self, k: int):
        if not 0 <= k < len(self.bases):
            z = ExactMatrix.zeros(self.domain, 0, 0)
            return homology_over_integers(z, z) if self.domain is ZZ else homology_over_field(z, z)
        if self.domain is ZZ:
            return homology_over_integers(self._in(k), self._out(k))
        return homology_over_field(self._in(k), self._out(k))

    def homology_dim(self, k: int) -> int:
        h = self.homology(k)
        if self.domain is ZZ:
            return h.rank + len(h.invariant_factors)
        return h.dimension

    def boundary_echelon(self, k: int) -> Echelon:
        ech = Echelon(self.domain, self.dim(k))
        for col in self._in(k).columns():
            ech.add(col)
        return ech


def koszul_slice(module: MonomialModule, seq, u: int, degree: Degree) -> GradedComplexSlice:
    seq = seq_from(module, seq)
    n, dom = len(seq), module.domain
    degree = tuple(degree)
    bases = []
    for k in range(n + 1):
        b = []
        for S in combinations(range(n), k):
            mdeg = sub(degree, scale(_deg_of_subset(seq, S, module.nvars), u))
            if module.is_nonzero(mdeg):
                b.append((S, mdeg))
        bases.append(b)
    index = [{S: j for j, (S, _) in enumerate(b)} for b in bases]
    diffs = {}
    for k in range(1, n + 1):
        entries = {}
        for col, (S, _) in enumerate(bases[k]):
            for r, s in enumerate(S):
                T = S[:r] + S[r + 1:]
                row = index[k - 1].get(T)
                if row is None:
                    continue
                c = seq[s].coeff ** u
                entries[(row, col)] = dom.convert(c if r % 2 == 0 else -c)
        diffs[k] = _matrix(dom, len(bases[k - 1]), len(bases[k]), entries)
    return GradedComplexSlice(degree, bases, diffs, dom)


def koszul_coslice(module: MonomialModule, seq, u: int, degree: Degree) -> GradedComplexSlice:
    """``K^.(a^u; M) = Hom(K_.(a^u), M)`` at internal degree ``degree``.

    ``e_S^*`` has degree ``-u deg(a_S)``, so its coefficient lives in module
    degree ``degree + u deg(a_S)``.
    """
    seq = seq_from(module, seq)
    n, dom = len(seq), module.domain
    degree = tuple(degree)
    bases = []
    for k in range(n + 1):
        b = []
        for S in combinations(range(n), k):
            mdeg = add(degree, scale(_deg_of_subset(seq, S, module.nvars), u))
            if module.is_nonzero(mdeg):
                b.append((S, mdeg))
        bases.append(b)
    index = [{S: j for j, (S, _) in enumerate(b)} for b in bases]
    diffs = {}
    for k in range(n):
        entries = {}
        for col, (S, _) in enumerate(bases[k]):
            for j in range(n):
                if j in S:
                    continue
                T = tuple(sorted(S + (j,)))
                row = index[k + 1].get(T)
                if row is None:
                    continue
                sign = sum(1 for s in S if s < j) % 2
                c = seq[j].coeff ** u
                entries[(row, col)] = dom.convert(-c if sign else c)
        diffs[k] = _matrix(dom, len(bases[k + 1]), len(bases[k]), entries)
    return GradedComplexSlice(degree, bases, diffs, dom, cochain=True)


def _matrix(dom, rows, cols, entries) -> ExactMatrix:
    data = [[dom.zero] * cols for _ in range(rows)]
    for (r, c), v in entries.items():
        data[r][c] = v
    return ExactMatrix.from_rows(dom, data, cols=cols)


# -- transition maps ------------------------------------------------------------


@dataclass
class KoszulTransitionMap:
    """Chain map between two slices, with the matrices per homological position."""

    source: GradedComplexSlice
    target: GradedComplexSlice
    u: int
    v: int
    matrices: dict
    direction: str  # "inverse": K(a^v) -> K(a^u); "direct": K(a^u) -> K(a^v)

    def __post_init__(self):
        s, t = self.source, self.target
        for k in range(1, len(s.bases)):
            lhs = t.diffs[k] @ self.matrices[k]
            rhs = self.matrices[k - 1] @ s.diffs[k]
            if lhs.entries != rhs.entries:
                raise CompositionNotZero(f"transition map is not a chain map at position {k}")

    def induced(self, k: int) -> "InducedMap":
        return induced_map(self.source, self.target, self.matrices[k], k)


def inverse_transition(module, seq, u: int, v: int, degree: Degree) -> KoszulTransitionMap:
    """``K(a^v) -> K(a^u)`` at internal degree ``degree``: ``e_S -> a_S^(v-u) e_S``."""
    if v < u:
        raise ValueError("need v >= u")
    seq = seq_from(module, seq)
    src = koszul_slice(module, seq, v, degree)
    tgt = koszul_slice(module, seq, u, degree)
    dom = module.domain
    mats = {}
    for k in range(len(seq) + 1):
        entries = {}
        for col, (S, _) in enumerate(src.bases[k]):
            row = tgt.index[k].get(S)
            if row is not None:
                entries[(row, col)] = dom.convert(_coeff_of_subset(seq, S, v - u, dom))
        mats[k] = _matrix(dom, tgt.dim(k), src.dim(k), entries)
    return KoszulTransitionMap(src, tgt, u, v, mats, "inverse")


def direct_transition(module, seq, u: int, v: int, delta: Degree) -> KoszulTransitionMap:
    """``K(a^u)_(delta + uD) -> K(a^v)_(delta + vD)``: ``e_S -> a_(S^c)^(v-u) e_S``.

    ``D = deg(a_1 ... a_n)``; these maps build the colimit computing Čech cohomology.
    """
    if v < u:
        raise ValueError("need v >= u")
    seq = seq_from(module, seq)
    n = len(seq)
    D = _deg_of_subset(seq, tuple(range(n)), module.nvars)
    src = koszul_slice(module, seq, u, add(delta, scale(D, u)))
    tgt = koszul_slice(module, seq, v, add(delta, scale(D, v)))
    dom = module.domain
    mats = {}
    for k in range(n + 1):
        entries = {}
        for col, (S, _) in enumerate(src.bases[k]):
            row = tgt.index[k].get(S)
            if row is not None:
                comp = tuple(j for j in range(n) if j not in S)
                entries[(row, col)] = dom.convert(_coeff_of_subset(seq, comp, v - u, dom))
        mats[k] = _matrix(dom, tgt.dim(k), src.dim(k), entries)
    return KoszulTransitionMap(src, tgt, u, v, mats, "direct")


@dataclass
class InducedMap:
    """A chain map read on homology at one position.

    ``images`` are the images of the source homology representatives, and
    ``rank`` is the rank of the induced map modulo target boundaries.
    ``survivor`` is a source cycle whose image is not a boundary (or None).
    """

    source_dim: int
    target_dim: int
    rank: int
    survivor: tuple | None
    survivor_image: tuple | None
    solutions: list

    @property
    def is_zero(self) -> bool:
        return self.rank == 0

    @property
    def is_iso(self) -> bool:
        return self.source_dim == self.target_dim == self.rank


def induced_map(src: GradedComplexSlice, tgt: GradedComplexSlice, mat: ExactMatrix, k: int) -> InducedMap:
    hs = src.homology(k)
    ht = tgt.homology(k)
    ech = tgt.boundary_echelon(k)
    base_dim = ech.dim
    survivor = survivor_image = None
    solutions = []
    for rep in hs.representatives:
        img = mat.apply(rep)
        if ech.contains(img):
            # a preimage under the incoming differential, kept for re-checking
            solutions.append(_preimage(tgt, k, img))
        elif survivor is None:
            survivor, survivor_image = tuple(rep), tuple(img)
        ech.add(img)
    return InducedMap(hs.dimension, ht.dimension, ech.dim - base_dim, survivor, survivor_image, solutions)


def _preimage(tgt: GradedComplexSlice, k: int, img):
    m = tgt._in(k)
    if not any(img):
        return tuple(tgt.domain.zero for _ in range(m.cols))
    return tuple(solve(m, list(img)))


# -- convenience ----------------------------------------------------------------


def koszul_homology(module: MonomialModule, seq, i: int, degrees, u: int = 1) -> dict:
    """``{degree: dim H_i(a^u; M)_degree}`` (field) or presentation (integers)."""
    out = {}
    for d in degrees:
        sl = koszul_slice(module, seq, u, tuple(d))
        if module.domain is ZZ:
            h = sl.homology(i)
            out[tuple(d)] = (h.rank, tuple(h.invariant_factors))
        else:
            out[tuple(d)] = sl.homology_dim(i)
    return out


def koszul_cohomology(module: MonomialModule, seq, i: int, degrees, u: int = 1) -> dict:
    return {tuple(d): koszul_coslice(module, seq, u, tuple(d)).homology_dim(i) for d in degrees}


def koszul_inverse_system(module: MonomialModule, seq, i: int, u: int, v: int, degrees) -> dict:
    """Induced maps ``H_i(a^v) -> H_i(a^u)`` per internal degree."""
    return {tuple(d): inverse_transition(module, seq, u, v, tuple(d)).induced(i) for d in degrees}


def sequence_degree(module: MonomialModule, seq) -> Degree:
    seq = seq_from(module, seq)
    return _deg_of_subset(seq, tuple(range(len(seq))), module.nvars)


__all__ = ["GradedComplexSlice", "InducedMap", "KoszulComplexSpec", "KoszulTransitionMap",
           "direct_transition", "induced_map", "inverse_transition", "koszul_coslice",
           "koszul_cohomology", "koszul_homology", "koszul_inverse_system", "koszul_slice",
           "sequence_degree"]
