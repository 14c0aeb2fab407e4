"""Instance checks comparing local-cohomology computations along different routes.

Each check returns an ``InstanceReport``: a boolean, the window it ran on, and
the per-degree numbers that were compared.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

from ..graded import Degree, MonomialModule, add, box, scale, seq_from, total_degree_window
from ..linalg.matrix import ExactMatrix, rank
from ..linalg.scalars import QQ
from ..rings.polynomial import Monomial
from ..rings.sequences import EventualSequence, FiniteProductElement
from ..torsion import gamma_truncated
from .cech import (cech_cohomology, cech_dim_localized, cech_slice, inclusion_matrix, map_rank_on_cohomology,
                   saturation_floor)
from .koszul import GradedComplexSlice, _matrix, induced_map


@dataclass
class InstanceReport:
    name: str
    ok: bool
    window: object
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"name": self.name, "ok": self.ok, "window": self.window, "details": self.details}


def _fmt(d: dict) -> list:
    return [[list(k), v] for k, v in sorted(d.items()) if v]


# -- Gamma versus Čech degree zero ---------------------------------------------------


def gamma0_isomorphism_check(module: MonomialModule, seq, window: int, bound: int = 16) -> InstanceReport:
    """Graded dimensions of ``Gamma_a(M)`` (colon route) and ``Ȟ^0(a; M)`` (colimit route)."""
    degrees = total_degree_window(module.nvars, window)
    g = gamma_truncated(module, seq, bound, window)
    left = {d: 0 for d in degrees}
    for m in g.basis:
        left[m] = 1
    table = cech_cohomology(module, seq, 0, degrees)
    right = table.dims()
    ok = g.stabilized_at is not None and table.verdict == "stabilized" and left == right
    return InstanceReport("gamma0", ok, {"total_degree": window},
                          {"gamma": g.status, "cech": table.verdict, "total_dim": sum(right.values()),
                           "mismatch": [list(d) for d in degrees if left[d] != right[d]]})


def random_monomial_module(rng: random.Random, nvars: int = 2, max_exp: int = 3, max_gens: int = 3,
                           names=("x", "y")) -> MonomialModule:
    rels = []
    for _ in range(rng.randint(1, max_gens)):
        v = tuple(rng.randint(0, max_exp) for _ in range(nvars))
        if any(v):
            rels.append(v)
    if not rels:
        rels.append((max_exp,) + (0,) * (nvars - 1))
    return MonomialModule(nvars, tuple(rels), QQ, tuple(names[:nvars]))


# -- Prop: torsion modules are acyclic -------------------------------------------------


def torsion_acyclicity_check(module: MonomialModule, seq, window: int = 4) -> InstanceReport:
    seq = seq_from(module, seq)
    gamma = gamma_truncated(module, seq, 16, window + module.max_exponent * module.nvars)
    torsion = len(gamma.basis) == len(module.normal_monomials(window + module.max_exponent * module.nvars))
    degrees = box(module.nvars, -window, window)
    dims = {}
    for i in range(1, len(seq) + 1):
        colim = cech_cohomology(module, seq, i, degrees).dims()
        loc = {d: cech_dim_localized(module, seq, i, d) for d in degrees}
        dims[i] = (sum(colim.values()), sum(loc.values()))
    ok = torsion and all(a == 0 and b == 0 for a, b in dims.values())
    return InstanceReport("torsion-acyclic", ok, {"box": [-window, window]},
                          {"torsion": torsion, "higher_dims": {str(i): list(v) for i, v in dims.items()}})


# -- Prop: comparison sequence ----------------------------------------------------------


def _cone_dim(A: GradedComplexSlice, B: GradedComplexSlice, k: int) -> int:
    """``H^k`` of the cone ``C^k = A^k (+) B^(k-1)``, ``d(a, b) = (d a, phi a - d b)``."""
    dom = A.domain

    def block(k):
        return A.dim(k), B.dim(k - 1)

    def diff(k):
        ra, rb = block(k + 1)
        ca, cb = block(k)
        rows = [[dom.zero] * (ca + cb) for _ in range(ra + rb)]
        if 0 <= k < len(A.bases) - 1 and ra and ca:
            d = A.diffs[k]
            for r in range(ra):
                for c in range(ca):
                    rows[r][c] = d[r, c]
        if 0 <= k < len(A.bases) and rb and ca:
            phi = inclusion_matrix(A, B, k)
            for r in range(rb):
                for c in range(ca):
                    rows[ra + r][c] = phi[r, c]
        if 0 <= k - 1 < len(B.bases) - 1 and rb and cb:
            d = B.diffs[k - 1]
            for r in range(rb):
                for c in range(cb):
                    rows[ra + r][ca + c] = -d[r, c]
        return ExactMatrix.from_rows(dom, rows, cols=ca + cb)

    dim = sum(block(k))
    out_rank = rank(diff(k)) if dim else 0
    in_rank = rank(diff(k - 1)) if sum(block(k - 1)) and dim else 0
    return dim - out_rank - in_rank


def comparison_sequence_check(module: MonomialModule, a_seq, b, n: int, window: int) -> InstanceReport:
    """``dim Ȟ^n_(a+b) = dim H^1_b(Ȟ^(n-1)_a) + dim Gamma_b(Ȟ^n_a)`` degree by degree.

    ``H^1_b`` and ``Gamma_b`` of a graded module ``N`` are the cokernel and kernel of
    ``N -> N_b``; with ``N = Ȟ_a(M)`` that map is induced by ``Č(a; M) -> Č(a; M_b)``.
    The long exact sequence of the cone of that map gives a third count.
    """
    a_seq = seq_from(module, a_seq)
    (b_el,) = seq_from(module, [b])
    extra = b_el.support
    full = a_seq + (b_el,)
    degrees = box(module.nvars, -window, window)
    bad, table, top_a_nonzero = [], {}, []
    for d in degrees:
        A = cech_slice(module, a_seq, d)
        B = cech_slice(module, a_seq, d, extra)
        h1b = B.homology_dim(n - 1) - map_rank_on_cohomology(A, B, n - 1) if n >= 1 else 0
        gam = A.homology_dim(n) - map_rank_on_cohomology(A, B, n)
        lhs = cech_slice(module, full, d).homology_dim(n)
        cone = _cone_dim(A, B, n)
        if A.homology_dim(n):
            top_a_nonzero.append(list(d))
        if lhs != h1b + gam or lhs != cone:
            bad.append({"degree": list(d), "lhs": lhs, "h1b": h1b, "gamma_b": gam, "cone": cone})
        if lhs or h1b or gam:
            table[d] = [lhs, h1b, gam]
    details = {"violations": bad, "nonzero": [[list(k), v] for k, v in sorted(table.items())],
               "top_a_nonzero_degrees": top_a_nonzero}
    return InstanceReport("comparison-sequence", not bad, {"box": [-window, window]}, details)


# -- Prop: base independence --------------------------------------------------------------


def base_independence_check(module: MonomialModule, seq, i: int, window: int) -> InstanceReport:
    """Čech cohomology of ``M`` over the quotient ring versus over the polynomial ring.

    The ring-side computation runs the colimit route on ``M`` with its quotient
    structure; the polynomial side runs the localization route on ``M`` with the
    ring relations forgotten (they survive as module relations).
    """
    degrees = box(module.nvars, -window, window)
    over_s = cech_cohomology(module, seq, i, degrees).dims()
    over_r = {d: cech_dim_localized(module.restricted(), seq, i, d) for d in degrees}
    ok = over_s == over_r
    return InstanceReport("base-independence", ok, {"box": [-window, window]},
                          {"nonzero": _fmt(over_s), "mismatch": [list(d) for d in degrees if over_s[d] != over_r[d]]})


# -- Prop: flat base change -----------------------------------------------------------------


def _localized_colimit_dim(module, seq, i, delta, f_exps, power_bound=24) -> tuple[int, int | None]:
    """``(Ȟ^i(a; M)_f)_delta`` as the colimit of ``Ȟ^i_(delta + k deg f)`` under multiplication by ``f``."""
    e = module.max_exponent
    k = max(0, max((e - delta[j] for j, x in enumerate(f_exps) if x), default=0))
    while k + 2 <= power_bound:
        s0 = cech_slice(module, seq, add(delta, scale(f_exps, k)))
        s1 = cech_slice(module, seq, add(delta, scale(f_exps, k + 1)))
        s2 = cech_slice(module, seq, add(delta, scale(f_exps, k + 2)))
        m1 = induced_map(s0, s1, inclusion_matrix(s0, s1, i), i)
        m2 = induced_map(s1, s2, inclusion_matrix(s1, s2, i), i)
        if m1.is_iso and m2.is_iso:
            return m1.source_dim, k
        k += 1
    return 0, None


def flat_base_change_check(module: MonomialModule, seq, f, i: int, window: int) -> InstanceReport:
    seq = seq_from(module, seq)
    (f_el,) = seq_from(module, [f])
    degrees = box(module.nvars, -window, window)
    left, right, unstable = {}, {}, []
    for d in degrees:
        dim, k = _localized_colimit_dim(module, seq, i, d, f_el.exps)
        if k is None:
            unstable.append(list(d))
        left[d] = dim
        right[d] = cech_dim_localized(module, seq, i, d, f_el.support)
    ok = not unstable and left == right
    return InstanceReport("flat-base-change", ok, {"box": [-window, window]},
                          {"nonzero": _fmt(left), "unstable": unstable,
                           "mismatch": [list(d) for d in degrees if left[d] != right[d]]})


# -- Prop: idempotent ideals have no higher cohomology ----------------------------------------


def idempotent_vanishing_check(e, module_support: Sequence[int] | None = None,
                               samples: Iterable = ()) -> InstanceReport:
    """``0 -> M -> M_e -> 0`` for ``a = <e>``, ``e`` idempotent.

    For ``e`` in ``K^r`` and ``M = K^r`` restricted to ``module_support`` the two
    terms are coordinate spaces and the map is a matrix. For eventually periodic
    sequences the sampled fractions ``y / e^k`` are shown to be images: ``y e``
    maps to them.
    """
    if isinstance(e, FiniteProductElement):
        if not e.is_idempotent():
            raise ValueError("e must be idempotent")
        dom = e.ring.domain
        supp_m = list(module_support) if module_support is not None else list(range(e.ring.r))
        supp_me = [k for k in supp_m if e.comps[k]]
        rows = [[dom.one if k == j else dom.zero for j in supp_m] for k in supp_me]
        mat = ExactMatrix.from_rows(dom, rows, cols=len(supp_m))
        r = rank(mat) if supp_me and supp_m else 0
        h0, h1 = len(supp_m) - r, len(supp_me) - r
        return InstanceReport("idempotent-vanishing", h1 == 0, {"components": len(supp_m)},
                              {"H0": h0, "H1": h1, "e": [str(c) for c in e.comps]})
    if isinstance(e, EventualSequence):
        if not e.is_idempotent():
            raise ValueError("e must be idempotent")
        ok = True
        count = 0
        for y, k in samples:
            # y/e^k - (y e)/1 = 0 in M_e because e (y - y e^(k+1)) = 0
            ok &= (e * (y - y * e ** (k + 1))).is_zero()
            count += 1
        return InstanceReport("idempotent-vanishing", ok, {"samples": count}, {"H1": 0 if ok else None})
    raise TypeError(f"no idempotent check for {type(e).__name__}")


# -- the functional of the lemma on the monomial quotient -------------------------------------------


def _is_diagonal_power(t: Monomial) -> bool:
    """``t = X_i^i`` for some ``i`` (``X_0^0 = 1`` included)."""
    if t.is_one():
        return True
    if len(t.exps) != 1:
        return False
    i, e = t.exps[0]
    return i == e


def lemma_functional(t: Monomial) -> int:
    return 1 if _is_diagonal_power(t) else 0


def lemma_2_110_witness_check(V: int, brute_vars: int = 4, brute_degree: int = 6) -> InstanceReport:
    """The functional ``f`` with ``f(t) = 1`` exactly on ``{X_i^i}``.

    (i) ``g f = 0`` for every relation ``g`` (indices ``<= V``): ``g t = X_k^k`` would force
    ``g | X_k^k``, which fails for ``X_i X_j`` (two variables) and for ``X_i^(i+1)``
    (exponent too large). A brute-force pass over a small window cross-checks it.
    (ii) ``X_n^n f(1) = 1`` for ``n <= V``. (iii) ``X_1 f`` is supported on ``1`` only.
    """
    rels = [Monomial(((i, 1), (j, 1))) for i in range(V + 1) for j in range(i + 1, V + 1)]
    rels += [Monomial.var(i, i + 1) for i in range(V + 1)]
    divisor_ok = True
    for g in rels:
        for k in range(V + 2 + max(g.degree, 1)):
            if g.divides(Monomial.var(k, k) if k else Monomial()):
                divisor_ok = False
    brute_ok = True
    brute_count = 0
    window_mons = [Monomial()]
    for deg in range(1, brute_degree + 1):
        for combo in combinations_with_replacement(range(brute_vars + 1), deg):
            window_mons.append(Monomial((v, 1) for v in combo))
    for g in rels:
        if g.max_var() > brute_vars:
            continue
        for t in window_mons:
            brute_count += 1
            if lemma_functional(g * t):
                brute_ok = False
    powers_ok = all(lemma_functional(Monomial.var(n, n)) == 1 for n in range(1, V + 1))
    x1 = Monomial.var(1)
    residue_ok = lemma_functional(x1) == 1 and all(
        lemma_functional(x1 * t) == 0 for t in window_mons if not t.is_one())
    ok = divisor_ok and brute_ok and powers_ok and residue_ok
    return InstanceReport("lemma-functional", ok, {"V": V, "brute_vars": brute_vars, "brute_degree": brute_degree},
                          {"relations": len(rels), "annihilated_by_divisors": divisor_ok,
                           "brute_force_products": brute_count, "brute_force_ok": brute_ok,
                           "powers_nonzero": powers_ok, "residue_generator": residue_ok,
                           "example": {"X2*X3*f(X1)": lemma_functional(Monomial(((1, 1), (2, 1), (3, 1)))),
                                       "X5^5*f(1)": lemma_functional(Monomial.var(5, 5))}})


__all__ = ["InstanceReport", "base_independence_check", "comparison_sequence_check", "flat_base_change_check",
           "gamma0_isomorphism_check", "idempotent_vanishing_check", "lemma_2_110_witness_check",
           "lemma_functional", "random_monomial_module", "saturation_floor", "torsion_acyclicity_check"]
