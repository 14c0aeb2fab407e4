"""Semi-decision test for weak proregularity.

The criterion: for every ``i >= 1`` and every ``u`` there is ``v >= u`` such that
``H_i(a^v) -> H_i(a^u)`` is the zero map. Bounded search over ``u <= U`` and
``v <= V`` gives three outcomes:

* ``ProZeroCertified``: a zero map was found for every ``(i, u)``.
* ``NotProZeroUpTo``: some ``(i, u)`` keeps a surviving cycle for every ``v <= V``.
* ``Unknown``: the family or coefficients are outside what can be computed.

Monomial modules use full graded linear algebra on a window of internal
degrees. Principal ideals in the other families use the colon description
``H_1(g^u) = (0 : g^u)``, where the map is multiplication by ``g^(v-u)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from ..graded import MonomialModule, add, scale, seq_from
from ..linalg.scalars import ZZ
from ..rings.sequences import EventualSequence, FiniteProductElement
from ..rings.stmodel import SnFraction
from .koszul import _deg_of_subset, inverse_transition


@dataclass
class ProZeroCertified:
    certificates: list
    method: str
    bounds: dict = field(default_factory=dict)
    kind = "ProZeroCertified"

    def to_json(self) -> dict:
        return {"verdict": self.kind, "method": self.method, "bounds": self.bounds,
                "certificates": self.certificates}


@dataclass
class NotProZeroUpTo:
    V: int
    witness: dict
    method: str
    bounds: dict = field(default_factory=dict)
    kind = "NotProZeroUpTo"

    def to_json(self) -> dict:
        return {"verdict": f"{self.kind}({self.V})", "method": self.method, "bounds": self.bounds,
                "witness": self.witness}


@dataclass
class Unknown:
    bounds: dict
    reason: str
    kind = "Unknown"

    def to_json(self) -> dict:
        return {"verdict": self.kind, "bounds": self.bounds, "reason": self.reason}


WprVerdict = ProZeroCertified | NotProZeroUpTo | Unknown


def _window_degrees(module: MonomialModule, seq, i: int, v: int, window: int) -> list:
    """Internal degrees where a cycle of ``H_i(a^v)`` can sit: ``m + v deg(a_S)``, ``|S| = i``."""
    mons = module.normal_monomials(window)
    out = set()
    for S in combinations(range(len(seq)), i):
        shift = scale(_deg_of_subset(seq, S, module.nvars), v)
        out.update(add(m, shift) for m in mons)
    return sorted(out)


def _describe_cycle(module, slice_, k, vec) -> list:
    terms = []
    for (S, mdeg), c in zip(slice_.bases[k], vec):
        if c:
            terms.append({"e": list(S), "coeff": str(c), "monomial": module.name_of(mdeg)})
    return terms


def wpr_test(target, seq=None, U: int = 4, V: int = 8, window: int = 8) -> WprVerdict:
    bounds = {"U": U, "V": V, "window": window}
    if isinstance(target, MonomialModule):
        if target.domain is ZZ or not target.domain.is_field:
            return Unknown(bounds, "integer coefficients: the zero-map test needs a field")
        return _wpr_graded(target, seq_from(target, seq), U, V, window, bounds)
    if isinstance(target, (FiniteProductElement, EventualSequence, SnFraction)):
        return _wpr_principal(target, U, V, bounds)
    return Unknown(bounds, f"no evaluation strategy for {type(target).__name__}")


def _wpr_graded(module, seq, U, V, window, bounds) -> WprVerdict:
    n = len(seq)
    certs = []
    for i in range(1, n + 1):
        for u in range(1, U + 1):
            found = None
            last = None
            for v in range(u, max(u, V) + 1):
                survivor = None
                checked = 0
                solved = 0
                for eps in _window_degrees(module, seq, i, v, window):
                    tm = inverse_transition(module, seq, u, v, eps)
                    if tm.source.dim(i) == 0:
                        continue
                    ind = tm.induced(i)
                    checked += 1
                    solved += len(ind.solutions)
                    if not ind.is_zero:
                        survivor = {"i": i, "u": u, "v": v, "degree": list(eps),
                                    "cycle": _describe_cycle(module, tm.source, i, ind.survivor),
                                    "image": _describe_cycle(module, tm.target, i, ind.survivor_image)}
                        break
                if survivor is None:
                    found = {"i": i, "u": u, "v": v, "degrees_checked": checked, "solved_systems": solved}
                    break
                last = survivor
            if found is None:
                return NotProZeroUpTo(V, last, "graded", bounds)
            certs.append(found)
    return ProZeroCertified(certs, "graded", bounds)


def _annihilator_generator(g):
    """An element generating ``(0 : g)`` in the family."""
    if isinstance(g, FiniteProductElement):
        return g.annihilator_idempotent()
    if isinstance(g, EventualSequence):
        return EventualSequence([0 if x else 1 for x in g.prefix], [0 if x else 1 for x in g.period], g.domain)
    if isinstance(g, SnFraction):
        # a domain: only zero kills a nonzero element
        return SnFraction.const(g.p, 0) if not g.is_zero() else SnFraction.const(g.p, 1)
    raise TypeError(type(g).__name__)


def _power(g, k):
    if k == 0:
        if isinstance(g, FiniteProductElement):
            return g.ring.one()
        if isinstance(g, EventualSequence):
            return EventualSequence((), 1, g.domain)
        return SnFraction.const(g.p, 1)
    return g ** k


def _wpr_principal(g, U, V, bounds) -> WprVerdict:
    certs = []
    for u in range(1, U + 1):
        found = None
        survivor = None
        for v in range(u, max(u, V) + 1):
            ann = _annihilator_generator(_power(g, v))
            img = _power(g, v - u) * ann
            if img.is_zero():
                found = {"i": 1, "u": u, "v": v, "annihilator": repr(ann)}
                break
            survivor = {"i": 1, "u": u, "v": v, "cycle": repr(ann), "image": repr(img)}
        if found is None:
            return NotProZeroUpTo(V, survivor, "principal", bounds)
        certs.append(found)
    return ProZeroCertified(certs, "principal", bounds)


def principal_fast_path(module: MonomialModule, g, U: int, V: int, window: int) -> WprVerdict:
    """The colon test on a monomial module: ``g^(v-u) (0 : g^v) = 0`` on the window."""
    (s,) = seq_from(module, [g])
    bounds = {"U": U, "V": V, "window": window}
    mons = module.normal_monomials(window)
    certs = []
    for u in range(1, U + 1):
        found = survivor = None
        for v in range(u, max(u, V) + 1):
            colon = [m for m in mons if not module.is_nonzero(add(m, scale(s.exps, v)))]
            bad = next((m for m in colon if module.is_nonzero(add(m, scale(s.exps, v - u)))), None)
            if bad is None:
                found = {"i": 1, "u": u, "v": v, "colon_size": len(colon)}
                break
            survivor = {"i": 1, "u": u, "v": v, "cycle": module.name_of(bad),
                        "image": module.name_of(add(bad, scale(s.exps, v - u)))}
        if found is None:
            return NotProZeroUpTo(V, survivor, "principal", bounds)
        certs.append(found)
    return ProZeroCertified(certs, "principal", bounds)


__all__ = ["NotProZeroUpTo", "ProZeroCertified", "Unknown", "WprVerdict", "principal_fast_path", "wpr_test"]
