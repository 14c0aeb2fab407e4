"""Ring descriptors and their JSON form.

A descriptor is ``{"family", "scalar", "params", "generators"}``. Element
literals use exact text only:

* polynomial term: ``[[{"var": i, "exp": e}, ...], "coeff"]``
* monoid term: ``[["num/den"], "coeff"]``
* ST element: ``["m*p^e", ...]`` (coefficient of ``t^k`` at position ``k``)
* idealization pair: ``["a/b", "c/p^k"]``
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any

from ..linalg.scalars import Domain, LocalizedIntegers, domain_from_name
from .idealization import IdealizationElement
from .monoid import MonoidAlgebra, MonoidAlgElement
from .polynomial import (IndexPowerRule, Monomial, MonomialRule, PairRule, PolyElement, PolyRing,
                         RewriteSystem)
from .stmodel import STElement

FAMILIES = ("polynomial", "monoid-algebra", "monomial-quotient", "ST", "Sn-localized",
            "idealization", "tensor-level", "eventual-sequence", "finite-product")


class DescriptorError(ValueError):
    pass


@dataclass(frozen=True)
class RingDescriptor:
    family: str
    scalar: str = "QQ"
    params: dict = field(default_factory=dict)
    generators: tuple = ()

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise DescriptorError(f"unknown family {self.family!r}")
        try:
            domain_from_name(self.scalar)
        except ValueError as exc:
            raise DescriptorError(str(exc)) from None
        need = {
            "polynomial": ("variables",),
            "monomial-quotient": ("variables", "relations"),
            "ST": ("p",), "Sn-localized": ("p",), "idealization": ("p",),
            "tensor-level": ("p", "level"), "finite-product": ("factors",),
        }.get(self.family, ())
        missing = [k for k in need if k not in self.params]
        if missing:
            raise DescriptorError(f"family {self.family} needs params {missing}")

    @property
    def domain(self) -> Domain:
        return domain_from_name(self.scalar)

    def to_json(self) -> dict:
        return {"family": self.family, "scalar": self.scalar, "params": self.params,
                "generators": list(self.generators)}

    @classmethod
    def from_json(cls, obj: Any) -> "RingDescriptor":
        if not isinstance(obj, dict) or "family" not in obj:
            raise DescriptorError("descriptor must be an object with a 'family' key")
        return cls(obj["family"], obj.get("scalar", "QQ"), dict(obj.get("params", {})),
                   tuple(obj.get("generators", ())))

    @classmethod
    def load(cls, path: str | Path) -> "RingDescriptor":
        try:
            obj = json.loads(Path(path).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise DescriptorError(f"cannot read descriptor {path}: {exc}") from None
        return cls.from_json(obj)

    # -- realizations ---------------------------------------------------------

    def poly_ring(self) -> PolyRing:
        if self.family not in ("polynomial", "monomial-quotient"):
            raise DescriptorError(f"{self.family} is not a polynomial family")
        names = self.params["variables"]
        ring = PolyRing(self.domain, (), names=names)
        rules = []
        for rel in self.params.get("relations", ()):
            el = parse_poly(ring, rel)
            if not el.is_monomial():
                raise DescriptorError("only monomial relations are supported")
            rules.append(MonomialRule(el.monomials()[0]))
        for sch in self.params.get("schematic_rules", ()):
            rules.append(rule_from_json(sch))
        return PolyRing(self.domain, RewriteSystem(tuple(rules)), names=names)

    def ideal_generators(self, ring: PolyRing) -> list[PolyElement]:
        return [parse_poly(ring, g) for g in self.generators]


def rule_from_json(obj: dict):
    kind = obj.get("rule")
    if kind == "pair":
        return PairRule(bool(obj.get("distinct", True)), int(obj.get("min_index", 0)))
    if kind == "index-power":
        return IndexPowerRule(int(obj.get("offset", 1)))
    if kind == "monomial":
        return MonomialRule(Monomial((v, e) for v, e in obj["monomial"]))
    raise DescriptorError(f"unknown rule {kind!r}")


# -- element literals --------------------------------------------------------------

def format_monomial(t: Monomial) -> list:
    return [{"var": v, "exp": e} for v, e in t.exps]


def parse_monomial(obj) -> Monomial:
    try:
        return Monomial((int(d["var"]), int(d["exp"])) for d in obj)
    except (TypeError, KeyError, ValueError) as exc:
        raise DescriptorError(f"bad monomial literal {obj!r}") from exc


def format_poly(x: PolyElement) -> list:
    dom = x.ring.scalar
    return [[format_monomial(t), dom.format(c)] for t, c in sorted(x.terms.items())]


def parse_poly(ring: PolyRing, obj) -> PolyElement:
    if not isinstance(obj, list):
        raise DescriptorError(f"polynomial literal must be a list of terms, got {obj!r}")
    terms = []
    for term in obj:
        if not (isinstance(term, list) and len(term) == 2):
            raise DescriptorError(f"bad term {term!r}")
        try:
            terms.append((parse_monomial(term[0]), ring.scalar.parse(str(term[1]))))
        except (ValueError, ZeroDivisionError) as exc:
            raise DescriptorError(f"bad coefficient in {term!r}") from exc
    return ring.element(terms)


def format_monoid(x: MonoidAlgElement) -> list:
    return [[[f"{a.numerator}/{a.denominator}"], x.ring.scalar.format(c)] for a, c in x.terms.items()]


def parse_monoid(ring: MonoidAlgebra, obj) -> MonoidAlgElement:
    try:
        return ring.element({Fraction(t[0][0]): ring.scalar.parse(str(t[1])) for t in obj})
    except (TypeError, IndexError, ValueError) as exc:
        raise DescriptorError(f"bad monoid literal {obj!r}") from exc


def format_st(x: STElement) -> list:
    dom = LocalizedIntegers(x.p)
    return [dom.format(c) for c in x.coeffs]


def parse_st(p: int, obj) -> STElement:
    dom = LocalizedIntegers(p)
    try:
        return STElement(p, [dom.parse(str(c)) for c in obj])
    except ValueError as exc:
        raise DescriptorError(f"bad ST literal {obj!r}: {exc}") from exc


def format_idealization(x: IdealizationElement) -> list:
    t = x.torsion
    if t:
        k = 0
        d = t.denominator
        while d > 1:
            d //= x.p
            k += 1
        tors = f"{t.numerator}/{x.p}^{k}"
    else:
        tors = "0"
    return [f"{x.scalar.numerator}/{x.scalar.denominator}", tors]


def parse_idealization(p: int, obj) -> IdealizationElement:
    try:
        a, q = obj
        if q == "0":
            tors = Fraction(0)
        else:
            num, rest = q.split("/")
            base, k = rest.split("^")
            if int(base) != p:
                raise ValueError("wrong prime")
            tors = Fraction(int(num), p ** int(k))
        return IdealizationElement(p, Fraction(a), tors)
    except (TypeError, ValueError) as exc:
        raise DescriptorError(f"bad idealization literal {obj!r}") from exc
