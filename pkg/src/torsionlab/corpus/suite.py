"""Named, reproducible check suites and the JSON report format.

Each corpus item is an ``ExampleSpec``: an id, default parameters and a runner
that returns a list of ``SubCheck`` results. Every sub-check cites a key of the
reference index. A report passes when every sub-check does; a sub-check is
``unknown`` only when a computation ran out of its bound before deciding.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable

from ..graded import MonomialModule, total_degree_window
from ..homology import (NotProZeroUpTo, ProZeroCertified, base_independence_check, cech_cohomology,
                        comparison_sequence_check, flat_base_change_check, gamma0_isomorphism_check,
                        idempotent_vanishing_check, koszul_homology, lemma_2_110_witness_check,
                        random_monomial_module, stabilization_tripwire, torsion_acyclicity_check, wpr_test)
from ..linalg.scalars import QQ
from ..rings import (IdealizationElement, IdealizationIdeal, MonoidIdeal, MonomialIdeal, PolyRing, S_LOCAL,
                     SequenceIdeal, SnFraction, SnIdeal, STElement, T_TRUNC, EventualSequence, FiniteProductRing,
                     TensorLevel, alpha_invariant, frobenius_root, idealization_essential_multiplier,
                     in_finite_support_ideal, indicator_after_zero, lemma_quotient_rules, q_power_member,
                     sn_divides, sn_normal_form, sn_quotient, sn_valuation)
from ..rings.tensor import nilpotency_index, random_nilpotent
from ..torsion import (TensorNilradical, adic_separated_up_to, check_1_130_instance, implication_sequences_report,
                       colon_submodule, is_idempotent, is_nilpotent, is_torsion_element, radical_defect,
                       random_monomial_family, t_nilpotency_check, weak_assassin_membership)
from .fixtures import module_from_descriptor, nonwpr_descriptor
from .references import REFERENCE_INDEX

REPORT_VERSION = 1


@dataclass
class SubCheck:
    name: str
    ref: str
    status: str
    data: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"name": self.name, "ref": self.ref, "status": self.status, "data": self.data}


def _sub(name: str, ref: str, ok: bool, /, **data) -> SubCheck:
    if ref not in REFERENCE_INDEX:
        raise KeyError(f"unresolved reference {ref!r}")
    return SubCheck(name, ref, "pass" if ok else "fail", data)


def _unknown(name: str, ref: str, exhausted: str, /, **data) -> SubCheck:
    return SubCheck(name, ref, "unknown", {"exhausted": exhausted, **data})


@dataclass
class VerdictReport:
    check_id: str
    status: str
    paper_ref: str
    bounds: dict
    witnesses: list
    runtime_ms: int

    def to_json(self) -> dict:
        return {"check_id": self.check_id, "status": self.status, "paper_ref": self.paper_ref,
                "bounds": self.bounds, "witnesses": self.witnesses, "runtime_ms": self.runtime_ms}


@dataclass(frozen=True)
class ExampleSpec:
    id: str
    ref: str
    title: str
    defaults: dict
    runner: Callable[[dict, random.Random], list]


def _overall(subs: list) -> str:
    statuses = {s.status for s in subs}
    if "fail" in statuses:
        return "fail"
    if "unknown" in statuses:
        return "unknown"
    return "pass"


# -- eventually periodic sequences ------------------------------------------------------------


def _non_prime_pair():
    """Search small sequences for ``g h`` eventually zero with ``g, h`` not.

    Eventually constant candidates are tried first; among them the finite-support
    ideal is prime, so the search moves on to period two.
    """
    checked = 0
    for period in (1, 2):
        cands = []
        for plen in range(0, 2):
            for prefix in product((0, 1), repeat=plen):
                for per in product((0, 1), repeat=period):
                    s = EventualSequence(prefix, list(per))
                    if not in_finite_support_ideal(s) and len(s.period) == period and s not in cands:
                        cands.append(s)
        for i, g in enumerate(cands):
            for h in cands[i:]:
                checked += 1
                if in_finite_support_ideal(g * h):
                    return g, h, checked, period
    return None, None, checked, None


def run_sequences(params: dict, rng: random.Random) -> list:
    bound, samples = params["bound"], params["samples"]
    f = indicator_after_zero()
    subs = [_sub("f-idempotent", "seq/idempotent", f * f == f and not f.is_zero(), f=repr(f), f_squared=repr(f * f))]
    nil = is_nilpotent(SequenceIdeal(f), bound)
    subs.append(_sub("not-nilpotent", "seq/idempotent", nil.exponent is None and f ** bound == f,
                     bounded_refutation=True, bound=bound, **nil.to_json()))
    rep = implication_sequences_report(bound, samples, rng.randrange(2 ** 31))
    subs.append(_sub("zeroing-construction", "seq/construction", rep.consistent, samples=samples, **rep.to_json()))
    cert = is_torsion_element(EventualSequence((), 1), SequenceIdeal(f), bound, modulo=SequenceIdeal(None))
    subs.append(_sub("class-of-1", "seq/no-torsion", cert.exponent is None, bounded_refutation=True,
                     certificate=cert.to_json(),
                     reason="f^n * 1 = f is not eventually zero, for every n"))
    g, h, checked, period = _non_prime_pair()
    ok = g is not None and period == 2
    subs.append(_sub("non-prime-annihilator", "seq/non-prime", ok, pairs_checked=checked, period=period,
                     g=repr(g), h=repr(h), product=repr(g * h) if g is not None else None))
    wpr = wpr_test(f)
    subs.append(_sub("wpr", "seq/wpr", isinstance(wpr, ProZeroCertified), verdict=wpr.to_json()))
    pairs = []
    for _ in range(min(samples, 20)):
        y = EventualSequence([rng.randint(-3, 3) for _ in range(rng.randint(0, 3))],
                             [rng.randint(-3, 3) for _ in range(rng.randint(1, 2))])
        pairs.append((y, rng.randint(0, 4)))
    van = idempotent_vanishing_check(f, samples=pairs)
    subs.append(_sub("idempotent-vanishing", "seq/vanishing", van.ok, **van.to_json()))
    return subs


# -- the rational monoid algebra ----------------------------------------------------------------


def _rand_rational(rng: random.Random, lo: int, hi: int, den: int) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, den))


def _least_zero_power(alpha: Fraction, attained: bool) -> int:
    """Least ``n`` with the cut ``n * alpha`` (attained or not) above 1."""
    n = 1
    while not (n * alpha > 1 or (n * alpha == 1 and not attained)):
        n += 1
    return n


def run_monoid(params: dict, rng: random.Random) -> list:
    bound, samples = params["bound"], params["samples"]
    subs = []
    # alpha(c^n) = n alpha(c) on random finitely generated ideals of the local ring
    bad, rows = [], 0
    for _ in range(samples):
        gens = []
        for _ in range(rng.randint(1, 3)):
            a = _rand_rational(rng, 0, 6, 6)
            tail = a + _rand_rational(rng, 1, 4, 4)
            gens.append(S_LOCAL.e(a, rng.randint(1, 5)) + S_LOCAL.e(tail, rng.randint(-3, 3)))
        c = MonoidIdeal.from_generators(S_LOCAL, gens)
        a0, att0 = alpha_invariant(c)
        for n in range(1, 4):
            rows += 1
            an, attn = alpha_invariant(c.power(n))
            if an != n * a0 or attn != att0:
                bad.append({"generators": [repr(g) for g in gens], "n": n, "alpha": str(a0), "alpha_n": str(an)})
    half = MonoidIdeal.from_generators(S_LOCAL, [S_LOCAL.e(Fraction(1, 2))])
    example = alpha_invariant(half.power(3))[0]
    subs.append(_sub("alpha-scaling", "monoid/alpha", not bad and example == Fraction(3, 2),
                     ideals=samples, comparisons=rows, violations=bad[:5], example=str(example)))
    # the maximal ideal of T is idempotent: m^2 = m, and e_a = e_(a/2)^2
    m = MonoidIdeal.maximal(T_TRUNC)
    idem = is_idempotent(m)
    sq_ok = m.power(2).closure == m.closure
    elem_ok = True
    for _ in range(samples):
        a = _rand_rational(rng, 1, 6, 6)
        half_el = T_TRUNC.e(a / 2)
        elem_ok &= m.contains(half_el) and half_el * half_el == T_TRUNC.e(a)
    subs.append(_sub("idempotent-maximal", "monoid/idempotent-maximal", idem.idempotent and sq_ok and elem_ok,
                     square_closure=repr(m.power(2).closure), **idem.to_json()))
    # p = (0 : e_1) is not of finite type
    e1 = T_TRUNC.e(1)
    witnesses, ok = [], not (e1 * T_TRUNC.one()).is_zero()
    for _ in range(samples):
        family = sorted({_rand_rational(rng, 1, 12, 12) for _ in range(rng.randint(1, 4))})
        family = [a for a in family if 0 < a <= 1] or [Fraction(1)]
        gens = [T_TRUNC.e(a) for a in family]
        beta = min(family) / 2
        eb = T_TRUNC.e(beta)
        in_p = (e1 * eb).is_zero() and all((e1 * g).is_zero() for g in gens)
        outside = not MonoidIdeal.from_generators(T_TRUNC, gens).contains(eb)
        ok &= in_p and outside
        if len(witnesses) < 3:
            witnesses.append({"subfamily": [str(a) for a in family], "beta": str(beta)})
    subs.append(_sub("non-coherence", "monoid/non-coherent", ok, subfamilies=samples, examples=witnesses))
    # cut ideals of positive order are nilpotent in T
    bad, examples = [], []
    cuts = [(Fraction(1, 4), True)] + [(_rand_rational(rng, 1, 6, 6), rng.random() < 0.5)
                                        for _ in range(samples - 1)]
    for alpha, att in cuts:
        v = is_nilpotent(MonoidIdeal.cut(T_TRUNC, alpha, att), bound)
        want = _least_zero_power(alpha, att)
        if v.exponent != want:
            bad.append({"alpha": str(alpha), "attained": att, "got": v.exponent, "want": want})
        if len(examples) < 3:
            examples.append({"alpha": str(alpha), "attained": att, "n": v.exponent})
    subs.append(_sub("nilpotent-cuts", "monoid/nilpotent-cuts", not bad, cuts=len(cuts), violations=bad[:5],
                     examples=examples))
    nil = is_nilpotent(m, bound)
    subs.append(_sub("maximal-not-nilpotent", "monoid/idempotent-maximal", nil.exponent is None,
                     bounded_refutation=True, bound=bound, **nil.to_json()))
    # torsion against the cut alpha = 1/3: e_1 needs one step, the unit at most ceil(1/alpha) + 1
    cut = MonoidIdeal.cut(T_TRUNC, Fraction(1, 3), True)
    c_e1 = is_torsion_element(e1, cut, bound)
    c_one = is_torsion_element(T_TRUNC.one(), cut, bound)
    subs.append(_sub("torsion", "monoid/torsion", c_e1.exponent == 1 and c_one.exponent == 4,
                     e1=c_e1.to_json(), unit=c_one.to_json()))
    return subs


# -- tensor levels ----------------------------------------------------------------------------------


def run_tensor(params: dict, rng: random.Random) -> list:
    levels, samples = params["levels"], params["samples"]
    primes = [params["p"]] if params.get("p") else [2, 3]
    subs = []
    per = max(1, samples // (len(primes) * max(levels, 1)))
    for p in primes:
        bad, count = [], 0
        for n in range(levels):
            space = TensorLevel(p, n)
            for _ in range(per):
                f = random_nilpotent(space, rng, density=0.4)
                g = frobenius_root(f)
                count += 1
                if g ** p != f.include() or g.frobenius_power() != f.include() or not g.is_nilpotent() \
                        or g.level != n + 1:
                    bad.append({"level": n, "f": repr(f)})
        zero_root = frobenius_root(TensorLevel(p, 1).zero())
        subs.append(_sub(f"roots-p{p}", "tensor/roots", not bad and zero_root.is_zero(),
                         p=p, levels=levels, samples=count, violations=bad[:3], zero_root=repr(zero_root)))
        indices, ok = [], True
        for n in range(1, levels + 1):
            d = TensorLevel(p, n).delta()
            idx = nilpotency_index(d, p ** levels + 1)
            indices.append(idx)
            ok &= not d.is_zero() and idx == p ** n
        ok &= all(a < b for a, b in zip(indices, indices[1:]))
        if p == 2 and levels >= 1:
            d1 = TensorLevel(2, 1).delta()
            ok &= (d1 * d1).is_zero()
        subs.append(_sub(f"delta-p{p}", "tensor/delta", ok, p=p, nilpotency_indices=indices,
                         index_bounded_by_p=[i <= p for i in indices[:1]]))
        idem = is_idempotent(TensorNilradical(p, levels, max(1, per // 4), rng.randrange(2 ** 31)))
        subs.append(_sub(f"nilradical-idempotent-p{p}", "tensor/roots", idem.idempotent, **idem.to_json()))
    return subs


# -- the valuation model ----------------------------------------------------------------------------


def _rand_unit_den(p: int, rng: random.Random) -> STElement:
    c0 = rng.choice([c for c in range(-6, 7) if c % p])
    return STElement(p, [c0] + [Fraction(rng.randint(-4, 4), p ** rng.randint(0, 2)) for _ in range(rng.randint(0, 1))])


def random_sn(p: int, rng: random.Random) -> SnFraction:
    """A nonzero element of ``S_n`` built from a random numerator and unit denominator."""
    while True:
        k = rng.randint(0, 2)
        coeffs = [0] * k + [Fraction(rng.randint(-6, 6), p ** rng.randint(0, 3))]
        coeffs += [Fraction(rng.randint(-4, 4), p ** rng.randint(0, 2)) for _ in range(rng.randint(0, 2))]
        if k == 0:
            coeffs[0] = Fraction(coeffs[0].numerator * p ** rng.randint(0, 2))
        num = STElement(p, coeffs)
        if not num.is_zero():
            return SnFraction(num, _rand_unit_den(p, rng))


def run_sn(params: dict, rng: random.Random) -> list:
    bound, samples, p = params["bound"], params["samples"], params.get("p") or 3
    P = SnFraction.const(p, p)
    Y = lambda i: SnFraction.Y(p, i)
    subs = []
    rel_ok = all(SnFraction.const(p, p ** (j - i)) * Y(j) == Y(i) for j in range(bound + 1) for i in range(j))
    st_ok = all(STElement.Y(p, i) == STElement.const(p, p) * STElement.Y(p, i + 1) for i in range(bound))
    subs.append(_sub("relations", "sn/relations", rel_ok and st_ok, pairs=bound * (bound + 1) // 2))
    elements = [random_sn(p, rng) for _ in range(samples)]
    div_ok = all(sn_divides(P, Y(i)) for i in range(bound + 1))
    nonunits = [f for f in elements if not f.is_unit()]
    div_ok &= all(sn_divides(P, f) for f in nonunits)
    subs.append(_sub("maximal-is-principal", "sn/maximal-principal", div_ok, nonunits=len(nonunits)))
    pY0 = P * Y(0)
    n_ideal = SnIdeal.maximal(p)
    in_all = all(n_ideal.power(N).contains(pY0) for N in range(1, bound + 1))
    no_pow = all(not sn_divides(pY0, SnFraction.const(p, p ** n)) for n in range(bound + 1))
    sep = adic_separated_up_to(None, n_ideal, bound, candidates=[pY0])
    subs.append(_sub("not-separated", "sn/non-separated", in_all and no_pow and sep.witness is not None,
                     element=repr(pY0), valuation=repr(sn_valuation(pY0)), **sep.to_json()))
    bad = []
    for _ in range(samples):
        f, g = rng.choice(elements), rng.choice(elements)
        if sn_divides(f, g):
            q = sn_quotient(g, f)
            ok = q * f == g
        elif sn_divides(g, f):
            q = sn_quotient(f, g)
            ok = q * g == f
        else:
            ok = False
        if not ok:
            bad.append([repr(f), repr(g)])
    subs.append(_sub("comparability", "sn/comparable", not bad, pairs=samples, violations=bad[:3]))
    bad = []
    for f in elements:
        nf = sn_normal_form(f)
        base = SnFraction.const(p, p ** nf.n) * Y(nf.i) ** nf.k
        if not (nf.unit.is_unit() and nf.unit * base == f and sn_valuation(base) == sn_valuation(f)):
            bad.append(repr(f))
    subs.append(_sub("normal-form", "sn/normal-form", not bad, samples=len(elements), violations=bad[:3]))
    c = SnIdeal.height_one_prime(p)
    prime_ok = all(c.contains(Y(i)) for i in range(bound + 1))
    prime_ok &= all(not c.contains(SnFraction.const(p, p ** n)) for n in range(bound + 1))
    for _ in range(samples):
        f, g = rng.choice(elements), rng.choice(elements)
        if c.contains(f * g) and not (c.contains(f) or c.contains(g)):
            prime_ok = False
    subs.append(_sub("height-one-prime", "sn", prime_ok, contains_Y=True, contains_no_p_power=True))
    return subs


# -- the idealization --------------------------------------------------------------------------------


def random_idealization(p: int, rng: random.Random) -> IdealizationElement:
    while True:
        a = Fraction(rng.randint(-9, 9) * p ** rng.randint(0, 3), rng.choice([c for c in range(1, 8) if c % p]))
        if rng.random() < 0.3:
            a = Fraction(0)
        t = Fraction(rng.randint(0, p ** 3), p ** rng.randint(1, 3)) if rng.random() < 0.7 else Fraction(0)
        x = IdealizationElement(p, a, t)
        if not x.is_zero():
            return x


def run_idealization(params: dict, rng: random.Random) -> list:
    bound, samples, p = params["bound"], params["samples"], params.get("p") or 3
    target = IdealizationElement.Z(p, 0)
    subs = []
    bad, examples = [], []
    for _ in range(samples):
        u = random_idealization(p, rng)
        mult = idealization_essential_multiplier(u)
        if u * mult != target:
            bad.append(repr(u))
        if len(examples) < 3:
            examples.append({"element": repr(u), "multiplier": repr(mult)})
    subs.append(_sub("essential-multiplier", "ideal/essential", not bad, samples=samples, target=repr(target),
                     violations=bad[:3], examples=examples))
    q = IdealizationIdeal(p)
    gens_ok = all(q.power(n).generators == (IdealizationElement(p, p ** n, 0),) for n in range(1, bound + 1))
    prufer_ok = True
    for _ in range(samples):
        x = IdealizationElement(p, 0, Fraction(rng.randint(1, p ** 4), p ** rng.randint(1, 4)))
        for N in range(1, bound + 1):
            c = q_power_member(x, N)
            prufer_ok &= c is not None and IdealizationElement(p, p ** N, 0) * c == x
    scalar_ok = True
    for _ in range(samples):
        v = rng.randint(0, bound - 1)
        a = Fraction(rng.choice([c for c in range(1, 10) if c % p]) * p ** v)
        x = IdealizationElement(p, a, Fraction(rng.randint(0, p), p))
        scalar_ok &= q_power_member(x, v) is not None and q_power_member(x, v + 1) is None
    subs.append(_sub("powers", "ideal/powers", gens_ok and prufer_ok and scalar_ok, bound=bound,
                     generators=gens_ok, prufer_in_every_power=prufer_ok, scalars_leave=scalar_ok))
    nil = is_nilpotent(q, bound)
    subs.append(_sub("not-nilpotent", "ideal/not-nilpotent", nil.exponent is None and not nil.witness.is_zero(),
                     bounded_refutation=True, bound=bound, **nil.to_json()))
    return subs


# -- the schematic monomial quotient ---------------------------------------------------------------


def schematic_ring() -> PolyRing:
    return PolyRing(QQ, lemma_quotient_rules())


def run_quotient(params: dict, rng: random.Random) -> list:
    V, samples = params["bound"], params["samples"]
    R = schematic_ring()
    m = MonomialIdeal.maximal_schema(R)
    subs = []
    lem = lemma_2_110_witness_check(V)
    subs.append(_sub("lemma-functional", "quot/functional", lem.ok, **lem.to_json()))
    powers_ok = all(not R.var(N, N).is_zero() and m.power(N).contains(R.var(N, N)) for N in range(1, V + 1))
    nil = is_nilpotent(m, V)
    subs.append(_sub("not-nilpotent", "quot/not-nilpotent", powers_ok and nil.exponent is None,
                     bounded_refutation=True, bound=V, **nil.to_json()))
    idem = is_idempotent(m, V)
    outside = not m.power(2).contains(R.var(1))
    subs.append(_sub("not-idempotent", "quot/not-idempotent", outside and not idem.idempotent, **idem.to_json()))
    bad, worst = [], 0
    for _ in range(samples):
        fam = random_monomial_family(R, rng, V, V + 3)
        res = t_nilpotency_check(fam)
        worst = max(worst, res.n - res.shared_index)
        if not res.within_bound:
            bad.append([repr(x) for x in fam])
    subs.append(_sub("t-nilpotent", "quot/t-nilpotent", not bad, families=samples,
                     max_excess_over_shared_index=worst, violations=bad[:3]))
    sep = adic_separated_up_to(R, m, V)
    subs.append(_sub("separated", "quot/separated", sep.witness is None, bounded_refutation=True, **sep.to_json()))
    certs = [is_torsion_element(R.var(i), m, V + 2, V) for i in range(1, V + 1)]
    one = is_torsion_element(R.one(), m, V + 2, V)
    tors_ok = all(c.exponent == i for i, c in enumerate(certs, start=1)) and one.exponent is None
    subs.append(_sub("torsion-certificates", "quot/torsion", tors_ok,
                     exponents=[c.exponent for c in certs], unit=one.to_json()))
    rad = radical_defect(R, m, V)
    subs.append(_sub("radical-defect", "quot/radical", rad.found, status="defect" if rad.found else "none",
                     witness=rad.witness))
    colon = colon_submodule(R, m, 2, 8, var_bound=4)
    names = sorted(_degree_name(d) for d in colon)
    # Y_i^k (k <= i) is killed by m^2 exactly when k + 2 > i
    want = sorted(f"x{i}" + (f"^{k}" if k > 1 else "") for i in range(1, 6) for k in range(1, i + 1) if k + 2 > i)
    subs.append(_sub("colon", "quot/colon", names == want, n=2, var_bound=4, basis=names))
    wa, wit = weak_assassin_membership(R, R.var(2), range(0, 5), var_bound=4)
    subs.append(_sub("weak-assassin", "quot/weak-assassin", wa, element="x2",
                     witness=wit.to_json() if wit else None))
    return subs


def _degree_name(d) -> str:
    parts = []
    for i, e in enumerate(d):
        if e:
            parts.append(f"x{i}" + (f"^{e}" if e > 1 else ""))
    return "*".join(parts) or "1"


# -- local cohomology instances ------------------------------------------------------------------


def _poly(names=("x", "y"), rels=(), ring_rels=()) -> MonomialModule:
    return MonomialModule(len(names), tuple(rels), QQ, tuple(names), tuple(ring_rels))


def _instance(name: str, ref: str, rep) -> SubCheck:
    data = rep.to_json()
    unstable = data.get("details", {}).get("cech") == "bound-exhausted" or data.get("details", {}).get("unstable")
    if unstable and not rep.ok:
        return _unknown(name, ref, "power bound of the colimit", **data)
    return _sub(name, ref, rep.ok, **data)


def run_local_cohomology(params: dict, rng: random.Random) -> list:
    w = params["window"]
    subs = []
    R2 = _poly()
    # Gamma versus degree-zero Čech cohomology
    fixed = [(_poly(("x",), [(3,)]), ["x"]), (_poly(rels=[(2, 1)]), ["x"]), (_poly(("x",)), ["x"]),
             (_poly(rels=[(2, 0), (1, 2)]), ["x", "y"])]
    for k in range(params["samples"]):
        mod = random_monomial_module(rng)
        fixed.append((mod, [rng.choice(["x", "y", "x*y"])] if rng.random() < 0.5 else ["x", "y"]))
    for k, (mod, seq) in enumerate(fixed):
        subs.append(_instance(f"gamma0-{k}", "lc/gamma0", gamma0_isomorphism_check(mod, seq, min(w, 8))))
    # torsion modules are acyclic
    for k, (mod, seq) in enumerate([(_poly(("x",), [(2,)]), ["x"]), (_poly(rels=[(2, 0), (0, 2)]), ["x", "y"]),
                                    (_poly(rels=[(0, 0)]), ["x"])]):
        subs.append(_instance(f"torsion-acyclic-{k}", "lc/torsion-acyclic",
                              torsion_acyclicity_check(mod, seq, min(w, 4))))
    # comparison sequence
    for k, (mod, n) in enumerate([(R2, 2), (R2, 1), (_poly(rels=[(1, 0)]), 1)]):
        subs.append(_instance(f"comparison-{k}", "lc/comparison",
                              comparison_sequence_check(mod, ["x"], "y", n, min(w, 6))))
    # base independence: S = K[x,y]/(x y) and S/(y^2) over S versus over K[x,y]
    S = _poly(ring_rels=[(1, 1)])
    for k, (mod, seq, i) in enumerate([(S, ["x"], 0), (S, ["x"], 1), (S.quotient([(0, 2)]), ["x", "y"], 1)]):
        subs.append(_instance(f"base-independence-{k}", "lc/base-independence",
                              base_independence_check(mod, seq, i, min(w, 4))))
    # flat base change along localization
    for k, (mod, seq, f, i) in enumerate([(R2, ["x"], "y", 1), (R2, ["x", "y"], "x", 2),
                                          (_poly(rels=[(2, 1)]), ["x", "y"], "y", 1)]):
        subs.append(_instance(f"flat-base-change-{k}", "lc/flat-base-change",
                              flat_base_change_check(mod, seq, f, i, min(w, 4))))
    # idempotent-generated ideals
    QQ2 = FiniteProductRing(2)
    for k, e in enumerate([QQ2.element([1, 0]), QQ2.one(), QQ2.zero()]):
        subs.append(_instance(f"idempotent-{k}", "lc/idempotent", idempotent_vanishing_check(e)))
    # regular sequences: Koszul homology vanishes above zero
    reg_ok, checked = True, 0
    for u in (1, 2):
        for i in (1, 2):
            dims = koszul_homology(R2, ["x", "y"], i, total_degree_window(2, min(w, 6)), u)
            checked += len(dims)
            reg_ok &= not any(dims.values())
    subs.append(_sub("regular-acyclic", "lc/wpr", reg_ok, pieces=checked))
    trip = all(stabilization_tripwire(R2, ["x", "y"], 2, d) for d in [(-1, -1), (-3, -2), (-1, -4)])
    subs.append(_sub("stabilization-tripwire", "lc/gamma0", trip, degrees=[[-1, -1], [-3, -2], [-1, -4]]))
    # weak proregularity
    cases = [("wpr-regular", wpr_test(R2, ["x", "y"], 4, 8, min(w, 8)), ProZeroCertified),
             ("wpr-idempotent", wpr_test(QQ2.element([1, 0])), ProZeroCertified),
             ("wpr-principal-sn", wpr_test(SnFraction.const(params.get("p") or 3, params.get("p") or 3)),
              ProZeroCertified),
             ("wpr-nonwpr-fixture", wpr_test(module_from_descriptor(nonwpr_descriptor()), ["x"], 4, 8, min(w, 8)),
              NotProZeroUpTo)]
    for name, verdict, want in cases:
        ok = isinstance(verdict, want) and (want is not NotProZeroUpTo or verdict.V == 8)
        subs.append(_sub(name, "lc/wpr", ok, **verdict.to_json()))
    # torsion against weak-assassin data
    for k, (mod, a) in enumerate([(_poly(rels=[(2, 0)]), ["x"]), (R2, ["x"]), (_poly(rels=[(2, 0), (0, 3)]), ["x", "y"])]):
        rep = check_1_130_instance(mod, [tuple(1 if mod.names[j] == v else 0 for j in range(2)) for v in a])
        subs.append(_sub(f"implication-{k}", "lc/implication", rep.consistent, **rep.to_json()))
    return subs


# -- registry -----------------------------------------------------------------------------------------

DEFAULTS = {"bound": 12, "window": 8, "samples": 100, "levels": 2, "seed": 0}

SPECS: dict[str, ExampleSpec] = {
    "1.200A": ExampleSpec("1.200A", "seq", "idempotent principal ideal in sequences",
                          {"bound": 12, "samples": 100}, run_sequences),
    "2.20": ExampleSpec("2.20", "monoid", "rational monoid algebra and its truncation",
                        {"bound": 12, "samples": 100}, run_monoid),
    "2.50": ExampleSpec("2.50", "tensor", "Frobenius roots in L tensor L",
                        {"levels": 2, "samples": 100, "p": None}, run_tensor),
    "2.90": ExampleSpec("2.90", "sn", "valuation model S_n",
                        {"bound": 12, "samples": 200, "p": 3}, run_sn),
    "2.100": ExampleSpec("2.100", "ideal", "idealization of the Pruefer group",
                         {"bound": 12, "samples": 100, "p": 3}, run_idealization),
    "2.110+2.120": ExampleSpec("2.110+2.120", "quot", "schematic monomial quotient",
                               {"bound": 12, "samples": 50}, run_quotient),
    "3.x": ExampleSpec("3.x", "lc", "local cohomology instances",
                       {"window": 8, "samples": 10, "p": 3}, run_local_cohomology),
}

ALIASES = {"2.110": "2.110+2.120", "2.120": "2.110+2.120", "1.200": "1.200A"}


def resolve_id(check_id: str) -> str:
    cid = ALIASES.get(check_id, check_id)
    if cid not in SPECS:
        raise KeyError(f"unknown check id {check_id!r}; known: {', '.join(SPECS)}")
    return cid


def verify(check_id: str, seed: int = 0, timing: bool = True, **overrides) -> VerdictReport:
    """Run one corpus item. ``overrides`` replace defaults (``bound``, ``window``, ``samples``, ``p``, ``levels``)."""
    spec = SPECS[resolve_id(check_id)]
    params = dict(spec.defaults)
    for k, v in overrides.items():
        if v is not None and k in params:
            params[k] = v
    rng = random.Random(f"{spec.id}:{seed}")
    start = time.perf_counter()
    subs = spec.runner(params, rng)
    elapsed = int((time.perf_counter() - start) * 1000) if timing else 0
    bounds = {**params, "seed": seed}
    return VerdictReport(spec.id, _overall(subs), spec.ref, bounds, [s.to_json() for s in subs], elapsed)


def run_suite(ids=None, seed: int = 0, timing: bool = True, **overrides) -> dict:
    ids = [resolve_id(i) for i in ids] if ids else list(SPECS)
    reports = [verify(i, seed, timing, **overrides) for i in sorted(dict.fromkeys(ids), key=list(SPECS).index)]
    return {"version": REPORT_VERSION, "checks": [r.to_json() for r in reports]}


def suite_exit_code(doc: dict) -> int:
    statuses = {c["status"] for c in doc["checks"]}
    if "fail" in statuses:
        return 1
    if "unknown" in statuses:
        return 2
    return 0


__all__ = ["ALIASES", "DEFAULTS", "ExampleSpec", "REPORT_VERSION", "SPECS", "SubCheck", "VerdictReport",
           "random_idealization", "random_sn", "resolve_id", "run_suite", "schematic_ring", "suite_exit_code",
           "verify"]
