"""Descriptor fixtures and their realization as graded modules."""

from __future__ import annotations

from ..graded import MonomialModule
from ..rings.descriptor import DescriptorError, RingDescriptor


def _term(*pairs) -> list:
    return [[[{"var": v, "exp": e} for v, e in pairs], "1"]]


def nonwpr_descriptor(k: int = 8) -> RingDescriptor:
    """``K[x, y_1..y_k] / ({x^i y_i} + {y_i y_j : i <= j})`` with the sequence ``x``."""
    names = ["x"] + [f"y{i}" for i in range(1, k + 1)]
    rels = [_term((0, i), (i, 1)) for i in range(1, k + 1)]
    rels += [_term((i, 2)) if i == j else _term((i, 1), (j, 1))
             for i in range(1, k + 1) for j in range(i, k + 1)]
    return RingDescriptor("monomial-quotient", "QQ", {"variables": names, "relations": rels},
                          (_term((0, 1)),))


def module_from_descriptor(desc: RingDescriptor) -> MonomialModule:
    """The ring of a polynomial or monomial-quotient descriptor, as a module over itself."""
    if desc.family not in ("polynomial", "monomial-quotient"):
        raise DescriptorError(f"family {desc.family!r} has no graded realization; "
                              "use 'polynomial' or 'monomial-quotient'")
    ring = desc.poly_ring()
    if ring.var_bound is None:
        raise DescriptorError("the descriptor must name its variables")
    if not desc.domain.is_field:
        raise DescriptorError(f"scalar {desc.scalar} is not a field")
    return MonomialModule.from_ring(ring)


def default_sequence(desc: RingDescriptor) -> list:
    """The descriptor's generators as a sequence of monomials."""
    ring = desc.poly_ring()
    gens = desc.ideal_generators(ring)
    for g in gens:
        if not g.is_monomial():
            raise DescriptorError(f"generator {g} is not a single term")
    return gens
