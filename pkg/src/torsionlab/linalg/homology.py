"""Homology of a two-step piece ``C_{i+1} --d_in--> C_i --d_out--> C_{i-1}``."""

from __future__ import annotations

from dataclasses import dataclass, field

from .matrix import CompositionNotZero, DomainError, Echelon, ExactMatrix, kernel_basis
from .scalars import ZZ
from .smith import diagonal, smith_normal_form, unimodular_inverse


@dataclass(frozen=True)
class FieldHomology:
    dimension: int
    representatives: tuple
    kernel_dim: int
    image_rank: int


@dataclass(frozen=True)
class IntegerHomology:
    rank: int
    invariant_factors: tuple = field(default=())

    def elementary_divisors(self) -> list[int]:
        """Prime-power decomposition of the torsion part, sorted."""
        out = []
        for d in self.invariant_factors:
            n, f = d, 2
            while n > 1:
                if n % f == 0:
                    q = 1
                    while n % f == 0:
                        n //= f
                        q *= f
                    out.append(q)
                f += 1
        return sorted(out)

    def is_zero(self) -> bool:
        return self.rank == 0 and not self.invariant_factors


def _check_composable(d_in: ExactMatrix, d_out: ExactMatrix):
    if d_in.rows != d_out.cols:
        raise ValueError(f"incompatible shapes: d_in has {d_in.rows} rows, d_out has {d_out.cols} columns")
    if d_out.rows and d_in.cols and not (d_out @ d_in).is_zero():
        raise CompositionNotZero("d_out @ d_in != 0")


def homology_over_field(d_in: ExactMatrix, d_out: ExactMatrix) -> FieldHomology:
    if not d_in.domain.is_field:
        raise DomainError(f"{d_in.domain} is not a field")
    _check_composable(d_in, d_out)
    n = d_in.rows
    ker = kernel_basis(d_out) if d_out.rows else [tuple(col) for col in ExactMatrix.identity(d_in.domain, n).columns()]
    ech = Echelon(d_in.domain, n)
    for col in d_in.columns():
        ech.add(col)
    image_rank = ech.dim
    reps = tuple(v for v in ker if ech.add(v))
    return FieldHomology(len(reps), reps, len(ker), image_rank)


def homology_over_integers(d_in: ExactMatrix, d_out: ExactMatrix) -> IntegerHomology:
    if d_in.domain is not ZZ or d_out.domain is not ZZ:
        raise DomainError("homology_over_integers needs integer matrices")
    _check_composable(d_in, d_out)
    n = d_in.rows
    if d_out.rows:
        _, d, v = smith_normal_form(d_out)
        r = sum(1 for x in diagonal(d) if x)
    else:
        v = ExactMatrix.identity(ZZ, n)
        r = 0
    kdim = n - r
    if kdim == 0:
        return IntegerHomology(0, ())
    if d_in.cols == 0:
        return IntegerHomology(kdim, ())
    # coordinates of the boundaries in the kernel basis (last columns of v)
    coords = unimodular_inverse(v) @ d_in
    sub = ExactMatrix.from_rows(ZZ, coords.to_rows()[r:], d_in.cols)
    _, dd, _ = smith_normal_form(sub)
    diag = [x for x in diagonal(dd) if x]
    return IntegerHomology(kdim - len(diag), tuple(x for x in diag if x > 1))
