"""Normal-form arithmetic for every ring family the corpus uses, plus ideal handles."""

from .descriptor import DescriptorError, RingDescriptor
from .idealization import IdealizationElement, idealization_essential_multiplier, q_power_member
from .ideals import (CutClosure, IdealHandle, IdealizationIdeal, IndexSchema, MonoidIdeal,
                     MonomialIdeal, SequenceIdeal, SnIdeal, alpha_invariant)
from .monoid import K_Q, S_LOCAL, T_TRUNC, MonoidAlgebra, MonoidAlgElement
from .polynomial import (IndexPowerRule, Monomial, MonomialRule, PairRule, PolyElement, PolyRing,
                         RewriteSystem, RingMismatch, lemma_quotient_rules, square_zero_rules)
from .sequences import (EventualSequence, FiniteProductElement, FiniteProductRing,
                        in_finite_support_ideal, indicator_after_zero, zeroed_at_start)
from .stmodel import (LexValue, SnFraction, STElement, sn_divides, sn_normal_form, sn_quotient,
                      sn_valuation)
from .tensor import RationalFunction, TensorLevel, TensorLevelElement, frobenius_root

__all__ = [
    "CutClosure", "DescriptorError", "EventualSequence", "FiniteProductElement", "FiniteProductRing",
    "IdealHandle", "IdealizationElement", "IdealizationIdeal", "IndexPowerRule", "IndexSchema",
    "K_Q", "LexValue", "MonoidAlgElement", "MonoidAlgebra", "MonoidIdeal", "Monomial",
    "MonomialIdeal", "MonomialRule", "PairRule", "PolyElement", "PolyRing", "RationalFunction",
    "RewriteSystem", "RingDescriptor", "RingMismatch", "STElement", "S_LOCAL", "SequenceIdeal",
    "SnFraction", "SnIdeal", "TensorLevel", "TensorLevelElement", "T_TRUNC", "alpha_invariant",
    "frobenius_root", "idealization_essential_multiplier", "in_finite_support_ideal",
    "indicator_after_zero", "lemma_quotient_rules", "q_power_member", "sn_divides",
    "sn_normal_form", "sn_quotient", "sn_valuation", "square_zero_rules", "zeroed_at_start",
]
