"""The reference index shipped with the corpus.

Every report carries a ``paper_ref`` key and every sub-check a ``ref`` key; both
resolve here. Entries are short descriptions of the claim being exercised.
"""

from __future__ import annotations

REFERENCE_INDEX: dict[str, str] = {
    # eventually periodic sequences
    "seq": "Idempotent principal ideal of the sequence ring; the quotient by finite supports is not torsion.",
    "seq/idempotent": "The generator (0,1,1,...) is idempotent and nonzero, so its ideal is not nilpotent.",
    "seq/construction": "Zeroing the first entry of x is multiplication by the generator; the result keeps x's tail.",
    "seq/no-torsion": "The class of 1 in the quotient by finite supports has no torsion exponent.",
    "seq/non-prime": "The annihilator of the class of 1 is the finite-support ideal, which is not prime.",
    "seq/wpr": "An ideal generated by an idempotent passes the pro-zero test.",
    "seq/vanishing": "Localizing at an idempotent is a quotient, so the first Čech cohomology vanishes.",
    # rational monoid algebra
    "monoid": "The monoid algebra of non-negative rationals, its localization and its truncation above 1.",
    "monoid/alpha": "The order invariant of an ideal scales linearly under powers.",
    "monoid/idempotent-maximal": "The maximal ideal squares to itself.",
    "monoid/non-coherent": "The annihilator of e_1 in the truncation needs infinitely many generators.",
    "monoid/nilpotent-cuts": "Cut ideals with positive order in the truncation are nilpotent.",
    "monoid/torsion": "Torsion exponents of e_1 and of the unit against a cut ideal.",
    # tensor levels
    "tensor": "Nilradical of L tensor L for a purely inseparable tower over F_p(s).",
    "tensor/roots": "Nilpotents at one level are p-th powers of nilpotents one level up.",
    "tensor/delta": "s^(1/p^n) (x) 1 - 1 (x) s^(1/p^n) is nonzero with nilpotency index p^n.",
    # valuation model
    "sn": "The local domain S_n with a rank-two valuation and elements u p^n Y_i^k.",
    "sn/relations": "Y_i = p^(j-i) Y_j for i < j.",
    "sn/maximal-principal": "The maximal ideal is generated by p.",
    "sn/non-separated": "p Y_0 lies in every power of the maximal ideal and divides no power of p.",
    "sn/comparable": "Any two elements are comparable under divisibility.",
    "sn/normal-form": "Normal forms u p^n Y_i^k reproduce the valuation.",
    # idealization
    "ideal": "The idealization of Z(p^inf) over Z_(p).",
    "ideal/essential": "Every nonzero element has a multiple equal to (0, Z_0).",
    "ideal/powers": "q^n is generated by (p^n, 0), and the intersection of all powers is 0 (+) M.",
    "ideal/not-nilpotent": "(p^n, 0) is nonzero for every n.",
    # schematic monomial quotient
    "quot": "K[X_1, X_2, ...] modulo X_i X_j (i != j) and X_i^(i+1), with maximal ideal m.",
    "quot/functional": "A linear functional killed by the relations detects X_n^n.",
    "quot/not-nilpotent": "Y_N^N is nonzero in m^N.",
    "quot/not-idempotent": "Y_1 lies outside m^2.",
    "quot/t-nilpotent": "Products along any sequence of elements of m vanish after finitely many steps.",
    "quot/separated": "No nonzero normal monomial lies in m^N.",
    "quot/torsion": "Y_i is killed by m^i and the unit is not torsion.",
    "quot/radical": "1 + Gamma is a nonzero torsion class of R / Gamma, so Gamma is not a radical.",
    "quot/colon": "The colon (0 : m^n) on a finite truncation.",
    "quot/weak-assassin": "Weak assassin membership via minimal primes over monomial annihilators.",
    # local cohomology instances
    "lc": "Local cohomology instance checks on graded monomial modules.",
    "lc/gamma0": "Torsion equals degree-zero Čech cohomology.",
    "lc/torsion-acyclic": "Torsion modules have no higher Čech cohomology.",
    "lc/comparison": "The comparison sequence for a + b in top degree.",
    "lc/base-independence": "Cohomology does not depend on the base ring the ideal is generated in.",
    "lc/flat-base-change": "Localization commutes with Čech cohomology.",
    "lc/idempotent": "Idempotent-generated ideals have no higher cohomology.",
    "lc/wpr": "The pro-zero test on four ideals: regular, idempotent, principal regular, and non-WPR.",
    "lc/implication": "Torsion against weak-assassin data on finitely generated instances.",
}


def resolve(key: str) -> str:
    try:
        return REFERENCE_INDEX[key]
    except KeyError:
        raise KeyError(f"unresolved reference {key!r}") from None
