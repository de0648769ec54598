"""
Octahedral completion in a pseudo-triangulated category.

Given right triangles on f: A -> B, l: A -> M and l': A' -> M with
m' o l = f, find g': B' -> C and h': C -> Sigma A' with

    h' g = n',   h g' = n,   g' m = g m',   Sigma(l) h + Sigma(l') h' = 0

such that A' -f'-> B' -g'-> C -h'-> Sigma A' is a right triangle, f' = m l'.
The four identities are linear in (g', h'); candidates from their solution
space are tried until the last condition holds.
"""
from dataclasses import dataclass
from typing import Optional

from loguru import logger

from algebra.category import Constraint, Term, Unknown
from algebra.module import ModuleMorphism
from errors import ContractError, InconclusiveError, InternalConsistencyError
from .base import Backend
from .triangles import Extension, RightTriangle


@dataclass
class Octahedron:
    g_prime: ModuleMorphism
    h_prime: ModuleMorphism
    triangle: RightTriangle  # A' -f'-> B' -g'-> C -h'-> Sigma A'
    extension: Optional[Extension] = None
    candidates: int = 0


def octahedron_identities(backend: Backend, t_f: RightTriangle, t_l: RightTriangle, t_lp: RightTriangle,
                          g_prime: ModuleMorphism, h_prime: ModuleMorphism) -> Optional[str]:
    """Name of the first identity that fails, or None."""
    c = backend.category
    if not c.equal(h_prime @ t_f.g, t_lp.h):
        return "h' g = n'"
    if not c.equal(t_f.h @ g_prime, t_l.h):
        return "h g' = n"
    if not c.equal(g_prime @ t_l.g, t_f.g @ t_lp.g):
        return "g' m = g m'"
    total = backend.sigma_map(t_l.f) @ t_f.h + backend.sigma_map(t_lp.f) @ h_prime
    if not c.is_null(total):
        return "Sigma(l) h + Sigma(l') h' = 0"
    return None


def octahedron_right(backend: Backend, t_f: RightTriangle, t_l: RightTriangle, t_lp: RightTriangle,
                     extension: bool = False) -> Octahedron:
    """
    ``t_f`` = (f, g, h), ``t_l`` = (l, m, n), ``t_lp`` = (l', m', n').
    With ``extension`` the completed triangle must also extend to an
    Extension with e' = -psi^{-1}(h').
    """
    category = backend.category
    f, g, h = t_f.f, t_f.g, t_f.h
    l, m, n = t_l.f, t_l.g, t_l.h
    lp, mp, np_ = t_lp.f, t_lp.g, t_lp.h
    if not category.equal(mp @ l, f):
        raise ContractError("octahedron: m' o l != f")
    f_prime = m @ lp
    unknowns = [Unknown(m.target, g.target, "g'"), Unknown(g.target, np_.target, "h'")]
    constraints = [
        Constraint([Term(1, right=g)], np_, "h' g = n'"),
        Constraint([Term(0, left=h)], n, "h g' = n"),
        Constraint([Term(0, right=m)], g @ mp, "g' m = g m'"),
        Constraint([Term(1, left=backend.sigma_map(lp))], -(backend.sigma_map(l) @ h),
                   "Sigma(l') h' = -Sigma(l) h"),
    ]
    solution = category.solve(unknowns, constraints)
    if solution is None:
        raise InternalConsistencyError("octahedron: the four identities have no common solution",
                                       identity="h' g = n'")
    budget = backend.budget
    rng = category.rng("octahedron", f.source.label(), m.target.label())
    tried = 0
    for g_prime, h_prime in solution.candidates(category.field, budget, rng):
        tried += 1
        if tried > budget.octahedron_solutions:
            break
        triangle = RightTriangle(f_prime, g_prime, h_prime)
        if not backend.in_right(triangle):
            continue
        ext = None
        if extension:
            ext = Extension(-backend.psi_inverse(h_prime, f_prime.source), f_prime, g_prime, h_prime)
            if not backend.validate_extension(ext):
                continue
        logger.debug(f"octahedron completed after {tried} candidates")
        return Octahedron(g_prime=g_prime, h_prime=h_prime, triangle=triangle, extension=ext, candidates=tried)
    if solution.exhaustive(category.field, budget) and tried <= budget.octahedron_solutions:
        raise InternalConsistencyError("octahedron: no solution of the identities gives a right triangle",
                                       identity="A' -> B' -> C -> Sigma A' in right triangles")
    raise InconclusiveError("octahedron: candidate budget exhausted", budget=budget.accounting())


def octahedron_ext(backend: Backend, ext_f: Extension, ext_l: Extension, ext_lp: Extension) -> Octahedron:
    """The extension form: all three inputs and the output are extensions."""
    return octahedron_right(backend, ext_f.right(), ext_l.right(), ext_lp.right(), extension=True)
