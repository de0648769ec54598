"""
Gluing conditions (G1)/(G2), the factorization conditions (AC1)/(AC2),
hom-exactness of triangles and the adjunction psi, checked on instances.

Each ``*_failure`` function decides a single instance and returns the first
violated condition (or None); ``check_gluing`` sweeps an inventory.
"""
from typing import Dict, Optional, Sequence

import numpy as np
from loguru import logger

from algebra.category import Constraint, Term, Unknown
from algebra.module import Module, ModuleMorphism
from errors import InconclusiveError, StableCatError
from linalg.elimination import rank
from .base import Backend
from .instances import Sweep, extensions, omega_monics, sigma_epics
from .triangles import Extension, LeftTriangle, RightTriangle


def g1_failure(backend: Backend, g: ModuleMorphism) -> Optional[str]:
    """A Sigma-epic g agrees with the cokernel of its kernel."""
    category = backend.category
    left = backend.complete_left(g)
    right = backend.complete_right(left.f)
    c = category.solve_one(Unknown(right.c, g.target, "c"), [
        Constraint([Term(0, right=right.g)], g, "c g' = g"),
        Constraint([Term(0, left=-backend.psi(left.e, left.c))], right.h, "-psi(e) c = h'"),
    ])
    if c is None:
        return "no c with c g' = g and -psi(e) c = h'"
    if not category.is_iso(c):
        return "the comparison c is not invertible"
    return None


def g2_failure(backend: Backend, f: ModuleMorphism) -> Optional[str]:
    """An Omega-monic f agrees with the kernel of its cokernel."""
    category = backend.category
    right = backend.complete_right(f)
    left = backend.complete_left(right.g)
    a = category.solve_one(Unknown(f.source, left.a, "a"), [
        Constraint([Term(0, left=left.f)], f, "f' a = f"),
        Constraint([Term(0, right=-backend.psi_inverse(right.h, right.a))], left.e, "-a psi^-1(h) = e'"),
    ])
    if a is None:
        return "no a with f' a = f and -a psi^-1(h) = e'"
    if not category.is_iso(a):
        return "the comparison a is not invertible"
    return None


def ac1_failure(backend: Backend, ext: Extension, ext2: Extension) -> Optional[ModuleMorphism]:
    """A c: C -> C' with h' c = 0 and c g = 0 not factoring through g'."""
    category = backend.category
    solution = category.solve([Unknown(ext.c, ext2.c, "c")], [
        Constraint([Term(0, left=ext2.h)], category.zero(ext.c, ext2.h.target), "h' c = 0"),
        Constraint([Term(0, right=ext.g)], category.zero(ext.b, ext2.c), "c g = 0"),
    ])
    for (c,) in solution.homogeneous if solution is not None else []:
        lifted = category.solve_one(Unknown(ext.c, ext2.b, "c'"),
                                    [Constraint([Term(0, left=ext2.g)], c, "g' c' = c")])
        if lifted is None:
            return c
    return None


def ac2_failure(backend: Backend, ext: Extension, ext2: Extension) -> Optional[ModuleMorphism]:
    """An a: A -> A' with f' a = 0 and a e = 0 not extending along f."""
    category = backend.category
    solution = category.solve([Unknown(ext.a, ext2.a, "a")], [
        Constraint([Term(0, left=ext2.f)], category.zero(ext.a, ext2.b), "f' a = 0"),
        Constraint([Term(0, right=ext.e)], category.zero(ext.e.source, ext2.a), "a e = 0"),
    ])
    for (a,) in solution.homogeneous if solution is not None else []:
        extended = category.solve_one(Unknown(ext.b, ext2.a, "a'"),
                                      [Constraint([Term(0, right=ext.f)], a, "a' f = a")])
        if extended is None:
            return a
    return None


def _pullback_matrix(category, f: ModuleMorphism, e: Module, contravariant: bool) -> np.ndarray:
    """Matrix of - o f: C(B, E) -> C(A, E), or of f o -: C(E, A) -> C(E, B)."""
    if contravariant:
        domain, codomain = category.quotient_hom(f.target, e), category.quotient_hom(f.source, e)
        images = [b @ f for b in domain.reduced]
    else:
        domain, codomain = category.quotient_hom(e, f.source), category.quotient_hom(e, f.target)
        images = [f @ b for b in domain.reduced]
    if not images:
        return np.zeros((codomain.dim, 0), dtype=np.int64)
    return np.stack([codomain.coordinates(img) for img in images], axis=1).reshape(codomain.dim, len(images))


def _exact_at(category, into: ModuleMorphism, out: ModuleMorphism, e: Module, contravariant: bool) -> bool:
    """ker(out_*) == im(into_*) at the middle hom-space."""
    field = category.field
    m_in = _pullback_matrix(category, into, e, contravariant)
    m_out = _pullback_matrix(category, out, e, contravariant)
    if m_in.size and m_out.size and field.matmul(m_out, m_in).any():
        return False
    middle = m_out.shape[1]
    kernel_dim = middle - (rank(m_out, field) if m_out.size else 0)
    return kernel_dim == (rank(m_in, field) if m_in.size else 0)


def exactness_failure(backend: Backend, t: RightTriangle, e: Module) -> Optional[str]:
    """C(A,E) <- C(B,E) <- C(C,E) <- C(Sigma A,E) <- C(Sigma B,E) is exact at its inner spots."""
    category = backend.category
    spots = (("C(B, E)", t.g, t.f), ("C(C, E)", t.h, t.g), ("C(Sigma A, E)", -backend.sigma_map(t.f), t.h))
    for name, into, out in spots:
        if not _exact_at(category, into, out, e, contravariant=True):
            return f"not exact at {name} for E = {e.label()}"
    return None


def left_exactness_failure(backend: Backend, t: LeftTriangle, e: Module) -> Optional[str]:
    """C(E, Omega C) -> C(E, A) -> C(E, B) -> C(E, C) is exact at its inner spots."""
    category = backend.category
    spots = (("C(E, A)", t.e, t.f), ("C(E, B)", t.f, t.g))
    for name, into, out in spots:
        if not _exact_at(category, into, out, e, contravariant=False):
            return f"not exact at {name} for E = {e.label()}"
    return None


def psi_failure(backend: Backend, c: Module, a: Module, others: Sequence[Module]) -> Optional[Dict]:
    """
    psi_{c,a} is bijective, inverted by psi_inverse and natural in both
    arguments against the maps from/to ``others``. Returns the failing
    instance as a dict, or None.
    """
    category = backend.category
    hom = category.quotient_hom(backend.omega(c), a)
    target = category.quotient_hom(c, backend.sigma(a))
    if hom.dim != target.dim:
        return {"reason": f"dim C(Omega {c.label()}, {a.label()}) != dim C({c.label()}, Sigma {a.label()})"}
    images = [backend.psi(e, c) for e in hom.reduced]
    if images:
        columns = np.stack([target.coordinates(img) for img in images], axis=1)
        if rank(columns, category.field) != target.dim:
            return {"reason": "psi is not bijective", "e": hom.reduced[0]}
    for e in hom.reduced:
        if not category.equal(backend.psi_inverse(backend.psi(e, c), a), e):
            return {"reason": "psi^-1 psi(e) != e", "e": e}
    for other in others:
        for x in category.quotient_hom(a, other).reduced:
            for e in hom.reduced:
                if not category.equal(backend.psi(x @ e, c), backend.sigma_map(x) @ backend.psi(e, c)):
                    return {"reason": "psi(x e) != Sigma(x) psi(e)", "e": e, "x": x}
        for y in category.quotient_hom(other, c).reduced:
            for e in hom.reduced:
                if not category.equal(backend.psi(e @ backend.omega_map(y), other), backend.psi(e, c) @ y):
                    return {"reason": "psi(e Omega(y)) != psi(e) y", "e": e, "y": y}
    return None


def guarded(sweep: Sweep, step) -> None:
    try:
        step()
    except InconclusiveError as exc:
        sweep.inconclusive = exc.message
    except StableCatError as exc:
        logger.error(f"{sweep.family}: {exc}")
        raise


def sweep_g1(backend: Backend, inventory: Sequence[Module]) -> Sweep:
    sweep = Sweep("G1")

    def step():
        for g in sigma_epics(backend, inventory):
            sweep.tested += 1
            failed = g1_failure(backend, g)
            if failed:
                sweep.fail(failed, "g1", g=g)
    guarded(sweep, step)
    return sweep


def sweep_g2(backend: Backend, inventory: Sequence[Module]) -> Sweep:
    sweep = Sweep("G2")

    def step():
        for f in omega_monics(backend, inventory):
            sweep.tested += 1
            failed = g2_failure(backend, f)
            if failed:
                sweep.fail(failed, "g2", f=f)
    guarded(sweep, step)
    return sweep


def _sweep_ac(backend: Backend, inventory: Sequence[Module], family: str, decide, validator: str) -> Sweep:
    sweep = Sweep(family)
    limit = backend.budget.max_instances

    def step():
        family_exts = extensions(backend, inventory)
        for ext in family_exts:
            for ext2 in family_exts:
                if sweep.tested >= limit:
                    return
                sweep.tested += 1
                witness = decide(backend, ext, ext2)
                if witness is not None:
                    sweep.fail(f"{family}: {witness.source.label()} -> {witness.target.label()} does not factor",
                               validator, f=ext.f, f2=ext2.f, witness=witness)
    guarded(sweep, step)
    return sweep


def sweep_ac1(backend: Backend, inventory: Sequence[Module]) -> Sweep:
    return _sweep_ac(backend, inventory, "AC1", ac1_failure, "ac1")


def sweep_ac2(backend: Backend, inventory: Sequence[Module]) -> Sweep:
    return _sweep_ac(backend, inventory, "AC2", ac2_failure, "ac2")


def check_gluing(backend: Backend, inventory: Sequence[Module]) -> Dict[str, Sweep]:
    """(G1), (G2), (AC1) and (AC2) over the inventory."""
    result = {
        "G1": sweep_g1(backend, inventory),
        "G2": sweep_g2(backend, inventory),
        "AC1": sweep_ac1(backend, inventory),
        "AC2": sweep_ac2(backend, inventory),
    }
    logger.info("gluing on " + backend.describe() + ": "
                + ", ".join(f"{name} {sweep.status}" for name, sweep in result.items()))
    return result
