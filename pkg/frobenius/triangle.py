from dataclasses import dataclass, field as dataclass_field
from typing import Any, Dict, Optional

from algebra.module import Module, ModuleMorphism
from pseudotri.triangles import Extension


@dataclass
class StandardData:
    """
    A conflation X -f-> Y -g-> Z -h-> Sigma X with the comparison pair
    p: Y -> I_X, q: Z -> S_X satisfying p f = alpha_X, q g = beta_X p and
    gamma_X q = h.
    """

    extension: Extension
    p: ModuleMorphism
    q: ModuleMorphism


@dataclass
class TriangleIso:
    """(a, b, c) from a triangle to the triangle of ``standard``, with inverses."""

    standard: StandardData
    a: ModuleMorphism
    b: ModuleMorphism
    c: ModuleMorphism
    a_inv: Optional[ModuleMorphism] = None
    b_inv: Optional[ModuleMorphism] = None
    c_inv: Optional[ModuleMorphism] = None


@dataclass
class FillWitness:
    """Named morphisms produced by a construction, with the identity each one satisfies."""

    morphisms: Dict[str, ModuleMorphism] = dataclass_field(default_factory=dict)
    identities: Dict[str, str] = dataclass_field(default_factory=dict)

    def add(self, name: str, morphism: ModuleMorphism, identity: str = "") -> None:
        self.morphisms[name] = morphism
        if identity:
            self.identities[name] = identity

    def to_payload(self) -> Dict[str, Any]:
        return {name: {"morphism": m.to_payload(), "identity": self.identities.get(name, "")}
                for name, m in sorted(self.morphisms.items())}


@dataclass
class StableTriangle:
    """
    X -f-> Y -g-> Z -h-> S X in Z/I_D.

    ``standard`` is set when the triangle is literally the standard
    triangle of a conflation; ``reference`` when an isomorphism to one is
    known.
    """

    f: ModuleMorphism
    g: ModuleMorphism
    h: ModuleMorphism
    standard: Optional[StandardData] = None
    reference: Optional[TriangleIso] = None
    witness: FillWitness = dataclass_field(default_factory=FillWitness)

    @property
    def x(self) -> Module:
        return self.f.source

    @property
    def y(self) -> Module:
        return self.f.target

    @property
    def z(self) -> Module:
        return self.g.target

    def to_payload(self) -> Dict[str, Any]:
        return {"f": self.f.to_payload(), "g": self.g.to_payload(), "h": self.h.to_payload(),
                "standard": self.standard is not None}


@dataclass
class Distinguished:
    ok: bool
    reason: str = "pass"
    witness: Optional[ModuleMorphism] = None

    def __bool__(self) -> bool:
        return self.ok
