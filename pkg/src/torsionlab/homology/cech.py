"""Čech cohomology of monomial sequences on monomial modules.

Two independent evaluations:

* ``cech_piece`` (the colimit route): ``Ȟ^i(a; M)_delta`` is the colimit over
  ``u`` of ``H_(n-i)(a^u; M)_(delta + uD)`` along the direct transition maps,
  evaluated by raising ``u`` until two consecutive maps are isomorphisms.
* ``cech_slice`` (the localization route): the cocomplex
  ``0 -> M -> (+) M_(a_i) -> ... -> M_(a_1...a_n) -> 0`` in degree ``delta``.
  Localizing a monomial module at monomials keeps every piece zero or a line.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from ..graded import Degree, MonomialModule, add, scale, seq_from
from .koszul import (GradedComplexSlice, _matrix, direct_transition, induced_map, koszul_slice,
                     sequence_degree)

DEFAULT_POWER_BOUND = 24


def cech_slice(module: MonomialModule, seq, delta: Degree,
               extra_inverted: frozenset = frozenset()) -> GradedComplexSlice:
    """``Č(a; M[extra^-1])`` in degree ``delta``."""
    seq = seq_from(module, seq)
    n, dom = len(seq), module.domain
    delta = tuple(delta)
    extra = frozenset(extra_inverted)
    bases = []
    for k in range(n + 1):
        b = []
        for S in combinations(range(n), k):
            inv = extra.union(*(seq[s].support for s in S)) if S else extra
            if module.localized_nonzero(delta, inv):
                b.append((S, delta))
        bases.append(b)
    index = [{S: j for j, (S, _) in enumerate(b)} for b in bases]
    diffs = {}
    for k in range(n):
        entries = {}
        for col, (S, _) in enumerate(bases[k]):
            for j in range(n):
                if j in S:
                    continue
                row = index[k + 1].get(tuple(sorted(S + (j,))))
                if row is None:
                    continue
                sign = sum(1 for s in S if s < j) % 2
                entries[(row, col)] = -dom.one if sign else dom.one
        diffs[k] = _matrix(dom, len(bases[k + 1]), len(bases[k]), entries)
    return GradedComplexSlice(delta, bases, diffs, dom, cochain=True)


def cech_dim_localized(module: MonomialModule, seq, i: int, delta: Degree,
                       extra_inverted: frozenset = frozenset()) -> int:
    return cech_slice(module, seq, delta, extra_inverted).homology_dim(i)


def inclusion_matrix(src: GradedComplexSlice, tgt: GradedComplexSlice, k: int):
    """``e_S -> e_S`` between two Čech slices (localization or degree shift)."""
    entries = {}
    for col, (S, _) in enumerate(src.bases[k]):
        row = tgt.index[k].get(S)
        if row is not None:
            entries[(row, col)] = src.domain.one
    return _matrix(src.domain, tgt.dim(k), src.dim(k), entries)


# -- colimit route --------------------------------------------------------------


@dataclass(frozen=True)
class CechPiece:
    degree: Degree
    dim: int
    stabilized_at: int | None
    power_bound: int

    def to_json(self) -> dict:
        return {"degree": list(self.degree), "dim": self.dim,
                "stabilized_at": self.stabilized_at if self.stabilized_at is not None
                else f"bound-exhausted({self.power_bound})"}


def saturation_floor(module: MonomialModule, delta: Degree) -> int:
    """From this power on, the Koszul slices feeding the colimit no longer change shape."""
    e = module.max_exponent
    return max(1, max((e - d for d in delta), default=1))


def cech_piece(module: MonomialModule, seq, i: int, delta: Degree,
               power_bound: int = DEFAULT_POWER_BOUND) -> CechPiece:
    seq = seq_from(module, seq)
    n = len(seq)
    delta = tuple(delta)
    k = n - i
    if not 0 <= k <= n:
        return CechPiece(delta, 0, 1, power_bound)
    u = saturation_floor(module, delta)
    last_dim = 0
    while u + 2 <= power_bound:
        first = direct_transition(module, seq, u, u + 1, delta).induced(k)
        last_dim = first.target_dim
        if first.is_iso:
            second = direct_transition(module, seq, u + 1, u + 2, delta).induced(k)
            if second.is_iso:
                return CechPiece(delta, first.source_dim, u, power_bound)
        u += 1
    return CechPiece(delta, last_dim, None, power_bound)


@dataclass
class CohomologyTable:
    op: str
    window: list
    pieces: list

    @property
    def verdict(self) -> str:
        if all(p.stabilized_at is not None for p in self.pieces):
            return "stabilized"
        return "bound-exhausted"

    def dims(self) -> dict:
        return {p.degree: p.dim for p in self.pieces}

    def to_json(self) -> dict:
        return {"op": self.op, "window": self.window, "pieces": [p.to_json() for p in self.pieces],
                "verdict": self.verdict}


def cech_cohomology(module: MonomialModule, seq, i: int, degrees: Iterable[Degree],
                    power_bound: int = DEFAULT_POWER_BOUND, window_label=None) -> CohomologyTable:
    degrees = sorted(tuple(d) for d in degrees)
    pieces = [cech_piece(module, seq, i, d, power_bound) for d in degrees]
    label = window_label if window_label is not None else [list(d) for d in degrees]
    return CohomologyTable(f"cech H^{i}", label, pieces)


def cech_cohomology_localized(module: MonomialModule, seq, i: int, degrees: Iterable[Degree],
                              extra_inverted: frozenset = frozenset()) -> dict:
    """The localization route, returned as ``{degree: dim}``."""
    return {tuple(d): cech_dim_localized(module, seq, i, tuple(d), extra_inverted) for d in degrees}


def stabilization_tripwire(module: MonomialModule, seq, i: int, delta: Degree, extra: int = 10) -> bool:
    """After declared stabilization, the next ``extra`` powers keep the same dimension."""
    piece = cech_piece(module, seq, i, delta)
    if piece.stabilized_at is None:
        return False
    seq = seq_from(module, seq)
    D = sequence_degree(module, seq)
    for u in range(piece.stabilized_at, piece.stabilized_at + extra + 1):
        sl = koszul_slice(module, seq, u, add(tuple(delta), scale(D, u)))
        if sl.homology_dim(len(seq) - i) != piece.dim:
            return False
    return True


def map_rank_on_cohomology(src: GradedComplexSlice, tgt: GradedComplexSlice, k: int) -> int:
    """Rank of the map induced on ``H^k`` by ``e_S -> e_S``."""
    if not 0 <= k < len(src.bases):
        return 0
    return induced_map(src, tgt, inclusion_matrix(src, tgt, k), k).rank


__all__ = ["CechPiece", "CohomologyTable", "DEFAULT_POWER_BOUND", "cech_cohomology",
           "cech_cohomology_localized", "cech_dim_localized", "cech_piece", "cech_slice",
           "inclusion_matrix", "map_rank_on_cohomology", "saturation_floor",
           "stabilization_tripwire"]
