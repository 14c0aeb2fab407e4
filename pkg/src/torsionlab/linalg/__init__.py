"""Exact scalars and the linear-algebra kernel used by every homology computation."""

from .homology import FieldHomology, IntegerHomology, homology_over_field, homology_over_integers
from .matrix import (
    CompositionNotZero,
    DomainError,
    Echelon,
    ExactMatrix,
    integer_determinant,
    kernel_basis,
    rank,
    rref,
    solve,
)
from .scalars import (
    GF,
    QQ,
    ZZ,
    Domain,
    LocalizedIntegers,
    LocalizedIntegerScalar,
    PrimeFieldScalar,
    domain_from_name,
    is_prime,
    p_valuation,
)
from .smith import smith_normal_form, unimodular_inverse

__all__ = [
    "CompositionNotZero", "Domain", "DomainError", "Echelon", "ExactMatrix", "FieldHomology",
    "GF", "IntegerHomology", "LocalizedIntegerScalar", "LocalizedIntegers", "PrimeFieldScalar",
    "QQ", "ZZ", "domain_from_name", "homology_over_field", "homology_over_integers",
    "integer_determinant", "is_prime", "kernel_basis", "p_valuation", "rank", "rref",
    "smith_normal_form", "solve", "unimodular_inverse",
]
