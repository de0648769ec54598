"""
Morphism arguments: ``SRC->TGT[c1,c2,...]`` with coefficients on the
reduced hom basis of the category in use. ``SRC->TGT`` alone is the zero
map and ``id:X`` the identity.
"""
import re
from typing import Dict, List

from algebra.category import LinearCategory
from algebra.module import Module, ModuleMorphism
from errors import ContractError, WorkspaceError

_MORPHISM = re.compile(r"^\s*(?P<src>[^\s\-\[\]]+)\s*->\s*(?P<tgt>[^\s\[\]]+)\s*(\[(?P<coeffs>[^\]]*)\])?\s*$")


def parse_morphism(text: str, category: LinearCategory, modules: Dict[str, Module]) -> ModuleMorphism:
    text = text.strip()
    if text.startswith("id:"):
        name = text[3:].strip()
        if name not in modules:
            raise WorkspaceError(f"undeclared module '{name}'", entity=name)
        return category.identity(modules[name])
    match = _MORPHISM.match(text)
    if match is None:
        raise ContractError(f"cannot parse morphism '{text}': expected SRC->TGT[c1,...]")
    names = match.group("src"), match.group("tgt")
    for name in names:
        if name not in modules:
            raise WorkspaceError(f"undeclared module '{name}'", entity=name)
    source, target = (modules[name] for name in names)
    q = category.quotient_hom(source, target)
    raw = match.group("coeffs")
    coeffs: List[int] = [int(c) for c in raw.split(",") if c.strip()] if raw else []
    if not coeffs:
        return category.zero(source, target)
    if len(coeffs) != q.dim:
        raise ContractError(f"{text}: {len(coeffs)} coefficients for a hom-space of dimension {q.dim}",
                            expected=q.dim)
    return q.element(coeffs)


def format_morphism(f: ModuleMorphism, category: LinearCategory) -> str:
    coeffs = ",".join(str(int(c)) for c in category.quotient_hom(f.source, f.target).coordinates(f))
    return f"{f.source.label()}->{f.target.label()}[{coeffs}]"
