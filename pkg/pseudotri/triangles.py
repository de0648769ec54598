from dataclasses import dataclass
from typing import Any, Dict

from pydantic import BaseModel, Field

from algebra.module import Module, ModuleMorphism


class Validation(BaseModel):
    """Outcome of a membership or identity test"""

    ok: bool = Field(..., description="True when the datum passes")
    reason: str = Field(default="pass", description="First violated condition")

    def __bool__(self) -> bool:
        return self.ok


@dataclass
class RightTriangle:
    """A --f--> B --g--> C --h--> Sigma A"""

    f: ModuleMorphism
    g: ModuleMorphism
    h: ModuleMorphism

    @property
    def a(self) -> Module:
        return self.f.source

    @property
    def b(self) -> Module:
        return self.f.target

    @property
    def c(self) -> Module:
        return self.g.target

    def to_payload(self) -> Dict[str, Any]:
        return {"f": self.f.to_payload(), "g": self.g.to_payload(), "h": self.h.to_payload()}


@dataclass
class LeftTriangle:
    """Omega C --e--> A --f--> B --g--> C"""

    e: ModuleMorphism
    f: ModuleMorphism
    g: ModuleMorphism

    @property
    def a(self) -> Module:
        return self.f.source

    @property
    def b(self) -> Module:
        return self.f.target

    @property
    def c(self) -> Module:
        return self.g.target

    def to_payload(self) -> Dict[str, Any]:
        return {"e": self.e.to_payload(), "f": self.f.to_payload(), "g": self.g.to_payload()}


@dataclass
class Extension:
    """
    Omega C --e--> A --f--> B --g--> C --h--> Sigma A, lying in both
    triangulations with h = -psi(e).
    """

    e: ModuleMorphism
    f: ModuleMorphism
    g: ModuleMorphism
    h: ModuleMorphism

    @property
    def a(self) -> Module:
        return self.f.source

    @property
    def b(self) -> Module:
        return self.f.target

    @property
    def c(self) -> Module:
        return self.g.target

    def right(self) -> RightTriangle:
        return RightTriangle(self.f, self.g, self.h)

    def left(self) -> LeftTriangle:
        return LeftTriangle(self.e, self.f, self.g)

    def to_payload(self) -> Dict[str, Any]:
        return {"e": self.e.to_payload(), "f": self.f.to_payload(),
                "g": self.g.to_payload(), "h": self.h.to_payload()}
