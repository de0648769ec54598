"""
Standard module constructions: direct sums, submodules, quotients,
kernel/image/cokernel of a morphism, regular and dual regular modules.
"""
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from errors import ContractError
from linalg.elimination import column_complement, inverse, rref_full, row_basis, solve_affine
from .algebra import Algebra
from .module import Module, ModuleMorphism


@dataclass
class DirectSum:
    module: Module
    summands: List[Module]
    injections: List[ModuleMorphism]
    projections: List[ModuleMorphism]

    def inject(self, i: int, f: ModuleMorphism) -> ModuleMorphism:
        """X -> summand i, followed into the sum."""
        return self.injections[i] @ f

    def project(self, i: int, f: ModuleMorphism) -> ModuleMorphism:
        """X -> sum, followed by the projection onto summand i."""
        return self.projections[i] @ f


@dataclass
class KCI:
    kernel: Module
    kernel_inclusion: ModuleMorphism
    image: Module
    image_inclusion: ModuleMorphism
    coimage: ModuleMorphism  # source -> image, f = image_inclusion o coimage
    cokernel: Module
    cokernel_projection: ModuleMorphism
    cokernel_section: np.ndarray  # k-linear section of the projection


def direct_sum(modules: Sequence[Module], algebra: Optional[Algebra] = None, name: Optional[str] = None) -> DirectSum:
    if not modules and algebra is None:
        raise ContractError("direct sum of an empty list needs the algebra")
    algebra = algebra or modules[0].algebra
    if any(m.algebra is not algebra for m in modules):
        raise ContractError("direct sum of modules over different algebras")
    dims = [m.dim for m in modules]
    total = sum(dims)
    action = np.zeros((algebra.dim, total, total), dtype=np.int64)
    offsets = np.cumsum([0] + dims)
    for m, start in zip(modules, offsets[:-1]):
        action[:, start:start + m.dim, start:start + m.dim] = m.action
    label = name or (" + ".join(m.label() for m in modules) if modules else "0")
    module = Module(algebra, action, name=label, dim=total)
    injections, projections = [], []
    for m, start in zip(modules, offsets[:-1]):
        block = np.zeros((total, m.dim), dtype=np.int64)
        block[start:start + m.dim, :] = np.eye(m.dim, dtype=np.int64)
        injections.append(ModuleMorphism(m, module, block))
        projections.append(ModuleMorphism(module, m, block.T.copy()))
    return DirectSum(module=module, summands=list(modules), injections=injections, projections=projections)


def column_morphism(target_sum: DirectSum, parts: Sequence[ModuleMorphism]) -> ModuleMorphism:
    """The map X -> (+) Y_i with components parts[i]: X -> Y_i."""
    source = parts[0].source
    total = ModuleMorphism.zero(source, target_sum.module)
    for inj, part in zip(target_sum.injections, parts):
        total = total + inj @ part
    return total


def row_morphism(source_sum: DirectSum, parts: Sequence[ModuleMorphism]) -> ModuleMorphism:
    """The map (+) X_i -> Y with components parts[i]: X_i -> Y."""
    target = parts[0].target
    total = ModuleMorphism.zero(source_sum.module, target)
    for proj, part in zip(source_sum.projections, parts):
        total = total + part @ proj
    return total


def as_columns(vectors, dim: int, field) -> np.ndarray:
    """``vectors`` as a dim x k matrix; an empty input gives k = 0 even when dim = 0."""
    a = field.reduce(vectors)
    if a.size == 0:
        return np.zeros((dim, 0), dtype=np.int64)
    if dim == 0 or a.size % dim:
        raise ContractError(f"cannot read {a.size} entries as columns of length {dim}")
    return a.reshape(dim, a.size // dim)


def submodule(m: Module, vectors, name: Optional[str] = None) -> Tuple[Module, ModuleMorphism]:
    """The submodule spanned by the columns of ``vectors`` (must be invariant)."""
    field = m.field
    vectors = as_columns(vectors, m.dim, field)
    basis = row_basis(vectors.T, field).T
    k = basis.shape[1]
    if k == 0:
        sub = Module.zero(m.algebra, name=name or "0")
        return sub, ModuleMorphism.zero(sub, m)
    action = np.zeros((m.algebra.dim, k, k), dtype=np.int64)
    for i in range(m.algebra.dim):
        solution = solve_affine(basis, field.matmul(m.action[i], basis), field)
        if solution is None:
            raise ContractError(f"subspace of {m.label()} is not invariant under b_{i}")
        action[i] = solution.particular
    sub = Module(m.algebra, action, name=name)
    return sub, ModuleMorphism(sub, m, basis)


def quotient_module(m: Module, vectors, name: Optional[str] = None) -> Tuple[Module, ModuleMorphism, np.ndarray]:
    """m / span(vectors), with the projection and a k-linear section."""
    field = m.field
    vectors = as_columns(vectors, m.dim, field)
    basis = row_basis(vectors.T, field).T
    complement = column_complement(basis, field)
    frame = np.hstack([basis, complement])
    frame_inv = inverse(frame, field)
    if frame_inv is None:
        raise ContractError("quotient: degenerate complement")
    proj = frame_inv[basis.shape[1]:, :]
    q = complement.shape[1]
    action = np.zeros((m.algebra.dim, q, q), dtype=np.int64)
    for i in range(m.algebra.dim):
        action[i] = field.chain(proj, m.action[i], complement)
    quotient = Module(m.algebra, action, name=name, dim=q)
    return quotient, ModuleMorphism(m, quotient, proj), complement


def kci(f: ModuleMorphism) -> KCI:
    field = f.field
    result = rref_full(f.matrix, field)
    kernel, kernel_inclusion = submodule(f.source, result.kernel_basis)
    image_vectors = f.matrix[:, list(result.pivot_cols)]
    image, image_inclusion = submodule(f.target, image_vectors)
    factor = solve_affine(image_inclusion.matrix, f.matrix, field)
    coimage = ModuleMorphism(f.source, image, factor.particular)
    cokernel, projection, section = quotient_module(f.target, image_vectors)
    return KCI(kernel=kernel, kernel_inclusion=kernel_inclusion, image=image, image_inclusion=image_inclusion,
               coimage=coimage, cokernel=cokernel, cokernel_projection=projection, cokernel_section=section)


def factor_through_cokernel(data: KCI, phi: ModuleMorphism) -> ModuleMorphism:
    """The map coker(f) -> N induced by phi: target(f) -> N with phi o f = 0."""
    return ModuleMorphism(data.cokernel, phi.target, phi.field.matmul(phi.matrix, data.cokernel_section))


def factor_through_kernel(data: KCI, phi: ModuleMorphism) -> ModuleMorphism:
    """The map N -> ker(f) induced by phi: N -> source(f) with f o phi = 0."""
    solution = solve_affine(data.kernel_inclusion.matrix, phi.matrix, phi.field)
    if solution is None:
        raise ContractError("map does not land in the kernel")
    return ModuleMorphism(phi.source, data.kernel, solution.particular)


def regular_module(algebra: Algebra, name: str = "A") -> Module:
    return Module(algebra, algebra.left_regular_action(), name=name)


def free_module(algebra: Algebra, rank: int) -> DirectSum:
    return direct_sum([regular_module(algebra)] * rank, algebra=algebra, name=f"A^{rank}")


def dual_regular_module(algebra: Algebra, name: str = "D(A)") -> Module:
    """Hom_k(A, k) with (a.phi)(v) = phi(v a): the injective cogenerator."""
    action = np.transpose(algebra.right_regular_action(), (0, 2, 1)).copy()
    return Module(algebra, action, name=name)


def map_from_regular(x: Module, vector) -> ModuleMorphism:
    """A -> x, 1 |-> vector."""
    v = x.field.reduce(vector).reshape(x.dim)
    columns = [x.field.matmul(x.action[j], v) for j in range(x.algebra.dim)]
    matrix = np.stack(columns, axis=1) if columns else np.zeros((x.dim, 0), dtype=np.int64)
    return ModuleMorphism(regular_module(x.algebra), x, matrix)


def generated_subspace(x: Module, vectors) -> np.ndarray:
    """Basis (as columns) of the submodule generated by the given vectors."""
    field = x.field
    vectors = as_columns(vectors, x.dim, field)
    if vectors.shape[1] == 0:
        return np.zeros((x.dim, 0), dtype=np.int64)
    spans = [field.matmul(x.action[i], vectors) for i in range(x.algebra.dim)]
    return row_basis(np.hstack(spans).T, field).T


def dual_module(m: Module, name: Optional[str] = None) -> Module:
    """
    Hom_k(M, k) through the transposed action (phi.a)(v) = phi(a v). This
    is a right module; it is returned as a left module, which is only
    valid over a commutative algebra.
    """
    action = np.transpose(m.action, (0, 2, 1)).copy()
    return Module(m.algebra, action, name=name or f"D({m.label()})", dim=m.dim)
