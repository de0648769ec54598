"""
The stable category Z/I_D of a Frobenius triple.

Objects are modules of Z, morphisms are backend morphisms modulo the maps
factoring through an object of add(I_D) (and modulo the backend's own null
maps). The shift S and coshift S* come from cached injective and
projective presentations.
"""
from typing import Dict, List, Optional, Sequence

import numpy as np
from loguru import logger

from algebra.category import Constraint, LinearCategory, Term, Unknown
from algebra.module import Module, ModuleMorphism
from errors import InternalConsistencyError
from .injectives import relative_injectives
from .presentation import InjectivePresentation, ProjectivePresentation, injective_presentation, projective_presentation
from .triangulation import TriangulationMixin
from .triple import FrobeniusTriple


class StableCategory(TriangulationMixin, LinearCategory):

    def __init__(self, triple: FrobeniusTriple, injectives: Optional[Sequence[Module]] = None,
                 projectives: Optional[Sequence[Module]] = None, label: str = "stable"):
        backend = triple.backend
        super().__init__(backend.field, backend.budget, backend.seed, label=label)
        self.triple = triple
        self.backend = backend
        self.base = backend.category
        if injectives is None or projectives is None:
            found = relative_injectives(triple)
            injectives = found.injectives if injectives is None else injectives
            projectives = found.projectives if projectives is None else projectives
        self.injectives = list(injectives)
        self.projectives = list(projectives)
        self._injective: Dict = {}
        self._projective: Dict = {}
        self._units: Dict = {}
        self._counits: Dict = {}
        logger.info(f"stable category {label} of triple {triple.label} "
                    f"with {len(self.injectives)} relative injectives")

    def null_basis(self, m: Module, n: Module) -> List[np.ndarray]:
        null = list(self.base.null_basis(m, n))
        for i in self.injectives:
            into = self.base.quotient_hom(m, i).reduced
            out = self.base.quotient_hom(i, n).reduced
            null.extend((b @ a).matrix for a in into for b in out)
        return null

    def factors_through_injectives(self, f: ModuleMorphism) -> bool:
        """f is null here iff it factors through alpha of its source."""
        pres = self.injective_presentation(f.source)
        return self.base.solve_one(Unknown(pres.injective, f.target, "t"),
                                   [Constraint([Term(0, right=pres.alpha)], f, "t alpha = f")]) is not None

    def injective_presentation(self, x: Module) -> InjectivePresentation:
        if x.key not in self._injective:
            self._injective[x.key] = injective_presentation(self.triple, x, self.injectives)
        return self._injective[x.key]

    def projective_presentation(self, x: Module) -> ProjectivePresentation:
        if x.key not in self._projective:
            self._projective[x.key] = projective_presentation(self.triple, x, self.projectives)
        return self._projective[x.key]

    def shift_object(self, x: Module) -> Module:
        return self.injective_presentation(x).shift

    def coshift_object(self, x: Module) -> Module:
        return self.projective_presentation(x).coshift

    def _pick(self, solution, rng: Optional[np.random.Generator]) -> List[ModuleMorphism]:
        if rng is None or solution.dim == 0:
            return solution.particular
        return solution.combination(rng.integers(0, self.field.p, size=solution.dim))

    def shift_map(self, f: ModuleMorphism, rng: Optional[np.random.Generator] = None) -> ModuleMorphism:
        """
        S f: lift f to I_f: I_X -> I_Y along the inflations, then complete
        to S_f: S_X -> S_Y. ``rng`` picks a random lift instead of the
        canonical one.
        """
        px = self.injective_presentation(f.source)
        py = self.injective_presentation(f.target)
        unknowns = [Unknown(px.injective, py.injective, "I_f"), Unknown(px.shift, py.shift, "S_f")]
        constraints = [
            Constraint([Term(0, right=px.alpha)], py.alpha @ f, "I_f alpha_X = alpha_Y f"),
            Constraint([Term(1, right=px.beta), Term(0, left=py.beta, sign=-1)],
                       ModuleMorphism.zero(px.injective, py.shift), "S_f beta_X = beta_Y I_f"),
            Constraint([Term(1, left=py.gamma)], self.backend.sigma_map(f) @ px.gamma,
                       "gamma_Y S_f = Sigma f gamma_X"),
        ]
        solution = self.base.solve(unknowns, constraints)
        if solution is None:
            raise InternalConsistencyError(f"no lift of {f.source.label()} -> {f.target.label()} to the presentations",
                                           identity="I_f alpha_X = alpha_Y f")
        return self._pick(solution, rng)[1]

    def coshift_map(self, f: ModuleMorphism, rng: Optional[np.random.Generator] = None) -> ModuleMorphism:
        px = self.projective_presentation(f.source)
        py = self.projective_presentation(f.target)
        unknowns = [Unknown(px.projective, py.projective, "P_f"), Unknown(px.coshift, py.coshift, "K_f")]
        constraints = [
            Constraint([Term(0, left=py.pi)], f @ px.pi, "pi_Y P_f = f pi_X"),
            Constraint([Term(0, right=px.iota), Term(1, left=py.iota, sign=-1)],
                       ModuleMorphism.zero(px.coshift, py.projective), "P_f iota_X = iota_Y K_f"),
            Constraint([Term(1, right=px.epsilon)], py.epsilon @ self.backend.omega_map(f),
                       "K_f epsilon_X = epsilon_Y Omega f"),
        ]
        solution = self.base.solve(unknowns, constraints)
        if solution is None:
            raise InternalConsistencyError(f"no lift of {f.source.label()} -> {f.target.label()} to the presentations",
                                           identity="pi_Y P_f = f pi_X")
        return self._pick(solution, rng)[1]

    def unit(self, x: Module) -> ModuleMorphism:
        """eta_X: X -> S S* X, the comparison map of the projective conflation of X."""
        if x.key not in self._units:
            pres = self.projective_presentation(x)
            self._units[x.key] = self.standard_data(pres.extension).q
        return self._units[x.key]

    def counit(self, x: Module) -> ModuleMorphism:
        """theta_X: S* S X -> X, dual to the unit."""
        if x.key not in self._counits:
            inj = self.injective_presentation(x)
            proj = self.projective_presentation(inj.shift)
            unknowns = [Unknown(proj.projective, inj.injective, "p"), Unknown(proj.coshift, x, "q")]
            constraints = [
                Constraint([Term(0, left=inj.beta)], proj.pi, "beta p = pi"),
                Constraint([Term(1, left=inj.alpha), Term(0, right=proj.iota, sign=-1)],
                           ModuleMorphism.zero(proj.coshift, inj.injective), "alpha q = p iota"),
                Constraint([Term(1, right=proj.epsilon)], inj.delta, "q epsilon = delta"),
            ]
            solution = self.base.solve(unknowns, constraints)
            if solution is None:
                raise InternalConsistencyError(f"no comparison S*S {x.label()} -> {x.label()}", identity="beta p = pi")
            self._counits[x.key] = solution.particular[1]
        return self._counits[x.key]

    def __repr__(self) -> str:
        return f"<StableCategory {self.label} of {self.triple!r}>"
