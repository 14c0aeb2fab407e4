import random
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from torsionlab.corpus import nonwpr_descriptor
from torsionlab.corpus.suite import random_idealization, random_sn
from torsionlab.linalg import QQ
from torsionlab.rings import (K_Q, S_LOCAL, T_TRUNC, DescriptorError, EventualSequence, FiniteProductRing,
                              IdealizationElement, IdealizationIdeal, MonoidIdeal, Monomial, MonomialIdeal,
                              MonomialRule, PolyRing, RingDescriptor, SnFraction, SnIdeal, STElement, TensorLevel,
                              alpha_invariant, frobenius_root, idealization_essential_multiplier,
                              in_finite_support_ideal, indicator_after_zero, lemma_quotient_rules, q_power_member,
                              sn_divides, sn_normal_form, sn_quotient, sn_valuation, square_zero_rules,
                              zeroed_at_start)
from torsionlab.rings.tensor import nilpotency_index, random_nilpotent

R = PolyRing(QQ, lemma_quotient_rules())


# -- monomial rewriting --------------------------------------------------------------

def test_lemma_relations():
    assert R.var(0).is_zero()
    assert (R.var(1) * R.var(2)).is_zero()
    assert not R.var(3, 3).is_zero()
    assert R.var(3, 4).is_zero()


def test_square_zero():
    S = PolyRing(QQ, square_zero_rules())
    assert (S.var(2) * S.var(2)).is_zero()
    assert not S.var(2).is_zero()


@settings(max_examples=50, deadline=None)
@given(st.lists(st.tuples(st.integers(1, 5), st.integers(1, 3)), min_size=1, max_size=3),
       st.lists(st.tuples(st.integers(1, 5), st.integers(1, 3)), min_size=1, max_size=3),
       st.lists(st.tuples(st.integers(1, 5), st.integers(1, 3)), min_size=1, max_size=3))
def test_multiplication_associative(a, b, c):
    x, y, z = (R.monomial(Monomial(t)) + R.one() for t in (a, b, c))
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x


def test_maximal_ideal_powers():
    m = MonomialIdeal.maximal_schema(R)
    assert m.power(4).contains(R.var(4, 4))
    assert not m.power(2).contains(R.var(1))
    assert not m.power(5).contains(R.var(4, 4))


def test_finite_quotient():
    A = PolyRing(QQ, [MonomialRule(Monomial.var(0, 3))], names=["x"])
    assert A.var(0, 3).is_zero()
    assert not A.var(0, 2).is_zero()


# -- monoid algebra ---------------------------------------------------------------------

def test_monoid_truncation():
    assert (T_TRUNC.e(Fraction(2, 3)) * T_TRUNC.e(Fraction(1, 2))).is_zero()
    assert not (T_TRUNC.e(Fraction(1, 2)) * T_TRUNC.e(Fraction(1, 2))).is_zero()
    assert not (K_Q.e(5) * K_Q.e(7)).is_zero()


@settings(max_examples=50, deadline=None)
@given(st.fractions(min_value=0, max_value=3, max_denominator=8), st.integers(1, 5))
def test_alpha_scales(a, n):
    c = MonoidIdeal.from_generators(S_LOCAL, [S_LOCAL.e(a) + S_LOCAL.e(a + 1)])
    assert alpha_invariant(c.power(n))[0] == n * a


def test_cut_nilpotency_example():
    cut = MonoidIdeal.cut(T_TRUNC, Fraction(1, 4), True)
    assert not cut.power(4).is_zero()
    assert cut.power(5).is_zero()


# -- sequences ------------------------------------------------------------------------

def test_sequences():
    f = indicator_after_zero()
    x = EventualSequence((3, 4), 5)
    assert f * f == f
    assert f * x == zeroed_at_start(x)
    assert in_finite_support_ideal(EventualSequence((1, 2), 0))
    assert not in_finite_support_ideal(f)
    assert EventualSequence((), (1, 0)) * EventualSequence((), (0, 1)) == EventualSequence((), 0)


def test_finite_product():
    K2 = FiniteProductRing(2)
    e = K2.element([1, 0])
    assert e.is_idempotent()
    assert (e * e.annihilator_idempotent()).is_zero()


# -- valuation model -------------------------------------------------------------------

def test_sn_relations():
    p = 3
    assert SnFraction.const(p, 3) * SnFraction.Y(p, 2) == SnFraction.Y(p, 1)
    pY0 = SnFraction.const(p, p) * SnFraction.Y(p, 0)
    assert all(SnIdeal.maximal(p).power(N).contains(pY0) for N in range(1, 15))
    assert not sn_divides(pY0, SnFraction.const(p, p ** 6))


@pytest.mark.parametrize("p", [2, 3, 5])
def test_sn_comparability_and_normal_form(p):
    rng = random.Random(p)
    for _ in range(40):
        f, g = random_sn(p, rng), random_sn(p, rng)
        assert sn_divides(f, g) or sn_divides(g, f)
        if sn_divides(f, g):
            assert sn_quotient(g, f) * f == g
        nf = sn_normal_form(f)
        assert nf.unit.is_unit()
        assert nf.unit * SnFraction.const(p, p ** nf.n) * SnFraction.Y(p, nf.i) ** nf.k == f


def test_sn_valuation_multiplicative():
    rng = random.Random(0)
    for _ in range(30):
        f, g = random_sn(3, rng), random_sn(3, rng)
        vf, vg, vfg = sn_valuation(f), sn_valuation(g), sn_valuation(f * g)
        assert vfg.t_order == vf.t_order + vg.t_order


def test_st_rejects_bad_constant():
    with pytest.raises(ValueError):
        STElement(3, [Fraction(1, 3)])


# -- idealization ------------------------------------------------------------------------

def test_essential_multiplier():
    rng = random.Random(1)
    for _ in range(50):
        u = random_idealization(3, rng)
        assert u * idealization_essential_multiplier(u) == IdealizationElement.Z(3, 0)


def test_q_powers():
    x = IdealizationElement(3, 0, Fraction(1, 9))
    for n in range(1, 10):
        c = q_power_member(x, n)
        assert IdealizationElement(3, 3 ** n, 0) * c == x
    assert q_power_member(IdealizationElement(3, 9, 0), 3) is None
    assert IdealizationIdeal(3).power(4).generators == (IdealizationElement(3, 81, 0),)


# -- tensor levels -----------------------------------------------------------------------

@pytest.mark.parametrize("p", [2, 3])
def test_frobenius_roots(p):
    rng = random.Random(p)
    for _ in range(10):
        f = random_nilpotent(TensorLevel(p, 1), rng)
        g = frobenius_root(f)
        assert g ** p == f.include()
        assert g.is_nilpotent()


def test_delta_index():
    d = TensorLevel(2, 1).delta()
    assert not d.is_zero() and (d * d).is_zero()
    assert nilpotency_index(TensorLevel(3, 2).delta(), 20) == 9


def test_zero_root():
    assert frobenius_root(TensorLevel(2, 1).zero()).is_zero()


# -- descriptors ----------------------------------------------------------------------------

def test_descriptor_roundtrip():
    d = nonwpr_descriptor()
    assert RingDescriptor.from_json(d.to_json()) == d
    ring = d.poly_ring()
    assert ring.var_bound == 8


def test_fixture_file_matches():
    path = Path(__file__).resolve().parents[1] / "fixtures" / "nonwpr.json"
    assert RingDescriptor.load(path) == nonwpr_descriptor()


@pytest.mark.parametrize("obj", [{"family": "nope"}, {"family": "polynomial"}, [1, 2],
                                 {"family": "polynomial", "scalar": "RR", "params": {"variables": ["x"]}}])
def test_descriptor_errors(obj):
    with pytest.raises(DescriptorError):
        RingDescriptor.from_json(obj)
