import random

import pytest

from torsionlab.graded import MonomialModule
from torsionlab.linalg import QQ
from torsionlab.rings import (T_TRUNC, EventualSequence, Monomial, MonomialIdeal, MonomialRule, MonoidIdeal,
                              PolyRing, SequenceIdeal, indicator_after_zero, lemma_quotient_rules)
from torsionlab.torsion import (TensorNilradical, TruncationNotFinite, adic_separated_up_to, check_1_130_instance,
                                implication_sequences_report, colon_submodule, gamma_truncated, is_idempotent,
                                is_nilpotent, is_torsion_element, radical_defect, random_monomial_family, realize,
                                t_nilpotency_check, weak_assassin_membership)

R = PolyRing(QQ, lemma_quotient_rules())
m = MonomialIdeal.maximal_schema(R)


@pytest.mark.parametrize("i", range(1, 9))
def test_generator_exponent(i):
    # Y_i^i != 0 and Y_i^(i+1) = 0, so m^i kills Y_i while m^(i-1) does not
    cert = is_torsion_element(R.var(i), m, 12, 8)
    assert cert.exponent == i
    assert not (R.var(i) * R.var(i, i - 1)).is_zero()


def test_unit_not_torsion():
    cert = is_torsion_element(R.one(), m, 10, 8)
    assert cert.exponent is None
    assert cert.status == "unknown-up-to(10)"


def test_truncated_polynomial_gamma():
    A = PolyRing(QQ, [MonomialRule(Monomial.var(0, 3))], names=["x"])
    a = MonomialIdeal.of(A, [A.var(0)])
    g = gamma_truncated(A, a, 8, 6)
    assert g.stabilized_at == 3
    assert len(g.basis) == 3
    assert colon_submodule(A, a, 2, 6) == [(1,), (2,)]


def test_polynomial_gamma_zero():
    A = PolyRing(QQ, (), names=["x"])
    g = gamma_truncated(A, MonomialIdeal.of(A, [A.var(0)]), 8, 6)
    assert g.basis == () and g.stabilized_at == 1


def test_schematic_needs_bound():
    with pytest.raises(TruncationNotFinite):
        realize(R, m)


def test_nilpotency():
    assert is_nilpotent(m, 10).exponent is None
    cut = MonoidIdeal.cut(T_TRUNC, 0.25, True)
    assert is_nilpotent(cut, 10).exponent == 5
    assert is_nilpotent(MonoidIdeal.maximal(T_TRUNC), 10).exponent is None


def test_idempotency():
    v = is_idempotent(m, 6)
    assert not v.idempotent and str(v.witness) == "X1"
    assert is_idempotent(MonoidIdeal.maximal(T_TRUNC)).idempotent
    assert is_idempotent(SequenceIdeal(indicator_after_zero())).idempotent
    assert is_idempotent(TensorNilradical(2, 1, 4)).idempotent


def test_t_nilpotency_families():
    rng = random.Random(3)
    for _ in range(30):
        fam = random_monomial_family(R, rng, 8, 12)
        res = t_nilpotency_check(fam)
        assert res.within_bound


def test_t_nilpotency_rejects_zero():
    with pytest.raises(ValueError):
        t_nilpotency_check([R.var(1, 2)])


def test_separated_and_radical():
    assert adic_separated_up_to(R, m, 8).witness is None
    assert radical_defect(R, m, 8).found
    A = PolyRing(QQ, [MonomialRule(Monomial.var(0, 2))], names=["x"])
    assert not radical_defect(A, MonomialIdeal.of(A, [A.var(0)]), 6, 6).found


def test_weak_assassin():
    ok, wit = weak_assassin_membership(R, R.var(2), range(5), var_bound=4)
    assert ok and wit.prime == frozenset(range(5))
    M = MonomialModule(2, ((2, 0),), QQ, ("x", "y"))
    ok, _ = weak_assassin_membership(M, "x", ["x"])
    assert ok
    ok, _ = weak_assassin_membership(M, "x", ["y"])
    assert not ok


def test_implication_instances():
    M = MonomialModule(2, ((2, 0), (0, 3)), QQ, ("x", "y"))
    rep = check_1_130_instance(M, [(1, 0), (0, 1)])
    assert rep.torsion and rep.consistent
    F = MonomialModule(2, (), QQ, ("x", "y"))
    rep = check_1_130_instance(F, [(1, 0)])
    assert not rep.torsion and not rep.primes_contain_a and rep.consistent


def test_sequence_example():
    rep = implication_sequences_report(bound=8, samples=20, seed=4)
    assert rep.consistent and rep.torsion is False
    cert = is_torsion_element(EventualSequence((), 1), SequenceIdeal(indicator_after_zero()), 8,
                              modulo=SequenceIdeal(None))
    assert cert.exponent is None
