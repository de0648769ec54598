"""
Standard triangles, cones, rotation and fill-ins on Z/I_D.

Mixed into StableCategory; every method assumes ``self`` carries
``backend``, ``base``, ``triple`` and the presentation caches.
"""
from typing import Optional, Tuple

from loguru import logger

from algebra.category import Constraint, Term, Unknown
from algebra.constructions import column_morphism, direct_sum
from algebra.module import ModuleMorphism
from errors import ContractError, InternalConsistencyError
from pseudotri.base import Side
from pseudotri.triangles import Extension
from .triangle import Distinguished, FillWitness, StableTriangle, StandardData, TriangleIso


class TriangulationMixin:

    def standard_data(self, ext: Extension) -> StandardData:
        """The comparison pair (p, q) of a conflation against the injective presentation of its first term."""
        pres = self.injective_presentation(ext.a)
        unknowns = [Unknown(ext.b, pres.injective, "p"), Unknown(ext.c, pres.shift, "q")]
        constraints = [
            Constraint([Term(0, right=ext.f)], pres.alpha, "p f = alpha_X"),
            Constraint([Term(1, right=ext.g), Term(0, left=pres.beta, sign=-1)],
                       ModuleMorphism.zero(ext.b, pres.shift), "q g = beta_X p"),
            Constraint([Term(1, left=pres.gamma)], ext.h, "gamma_X q = h"),
        ]
        solution = self.base.solve(unknowns, constraints)
        if solution is None:
            raise InternalConsistencyError(f"no comparison pair for the conflation on {ext.a.label()}",
                                           identity="p f = alpha_X")
        return StandardData(extension=ext, p=solution.particular[0], q=solution.particular[1])

    def standard_triangle(self, ext: Extension) -> StableTriangle:
        data = self.standard_data(ext)
        triangle = StableTriangle(ext.f, ext.g, data.q, standard=data)
        triangle.witness.add("p", data.p, "p f = alpha_X")
        triangle.witness.add("q", data.q, "q g = beta_X p, gamma_X q = h")
        return triangle

    def cone(self, f: ModuleMorphism) -> StableTriangle:
        """X -f-> Y -> C(f) -> S X through the conflation on f_X = (f, -alpha_X): X -> Y + I_X."""
        pres = self.injective_presentation(f.source)
        pair = direct_sum([f.target, pres.injective], algebra=self.backend.algebra,
                          name=f"{f.target.label()}+{pres.injective.label()}")
        f_x = column_morphism(pair, [f, -pres.alpha])
        ext = self.backend.make_extension(f_x, Side.FROM_MONIC, validate=False)
        if not self.triple.z.full:
            membership = self.triple.z.contains(ext.c)
            if membership.status == "no":
                raise ContractError(f"cone of {f.source.label()} -> {f.target.label()} leaves {self.triple.z.label}",
                                    unmatched=membership.unmatched)
        ext.c.name = f"C({f.source.label()}->{f.target.label()})"
        data = self.standard_data(ext)
        i_y, p_y = pair.injections[0], pair.projections[0]
        id_x, id_c = self.identity(f.source), self.identity(ext.c)
        reference = TriangleIso(standard=data, a=id_x, b=i_y, c=id_c, a_inv=id_x, b_inv=p_y, c_inv=id_c)
        triangle = StableTriangle(f, ext.g @ i_y, data.q, reference=reference)
        triangle.witness.add("f_X", f_x, "f_X = (f, -alpha_X)")
        triangle.witness.add("c_f", ext.g, "cokernel leg of f_X")
        triangle.witness.add("p", data.p, "p f_X = alpha_X")
        triangle.witness.add("q", data.q, "q c_f = beta_X p, gamma_X q = h")
        logger.debug(f"cone of {f.source.label()} -> {f.target.label()} is {ext.c.label()} (dim {ext.c.dim})")
        return triangle

    def _check_standard(self, t: StableTriangle) -> Distinguished:
        data = t.standard
        ext = data.extension
        pres = self.injective_presentation(ext.a)
        if not (self.equal(t.f, ext.f) and self.equal(t.g, ext.g) and self.equal(t.h, data.q)):
            return Distinguished(False, "triangle differs from its stored conflation")
        if not self.base.equal(data.p @ ext.f, pres.alpha):
            return Distinguished(False, "p f != alpha_X")
        if not self.base.equal(data.q @ ext.g, pres.beta @ data.p):
            return Distinguished(False, "q g != beta_X p")
        if not self.base.equal(pres.gamma @ data.q, ext.h):
            return Distinguished(False, "gamma_X q != h")
        right = self.backend.in_right(ext.right())
        if not right:
            return Distinguished(False, f"stored conflation is not a right triangle: {right.reason}")
        return Distinguished(True)

    def _invertible(self, f: ModuleMorphism, inverse) -> bool:
        if inverse is None:
            return self.is_iso(f)
        return self.equal(inverse @ f, self.identity(f.source)) and self.equal(f @ inverse, self.identity(f.target))

    def _check_reference(self, t: StableTriangle) -> Distinguished:
        ref = t.reference
        ext = ref.standard.extension
        for name, m, inv in (("a", ref.a, ref.a_inv), ("b", ref.b, ref.b_inv), ("c", ref.c, ref.c_inv)):
            if not self._invertible(m, inv):
                return Distinguished(False, f"comparison map {name} is not invertible", witness=m)
        if not self.equal(ref.b @ t.f, ext.f @ ref.a):
            return Distinguished(False, "b f != f' a")
        if not self.equal(ref.c @ t.g, ext.g @ ref.b):
            return Distinguished(False, "c g != g' b")
        if not self.equal(self.shift_map(ref.a) @ t.h, ref.standard.q @ ref.c):
            return Distinguished(False, "S(a) h != q' c")
        return self._check_standard(StableTriangle(ext.f, ext.g, ref.standard.q, standard=ref.standard))

    def is_distinguished(self, t: StableTriangle) -> Distinguished:
        if t.h.target.key != self.shift_object(t.x).key:
            return Distinguished(False, "third map does not land in S X")
        if t.standard is not None:
            return self._check_standard(t)
        if t.reference is not None:
            return self._check_reference(t)
        cone = self.cone(t.f)
        c = self.solve_one(Unknown(cone.z, t.z, "c"), [
            Constraint([Term(0, right=cone.g)], t.g, "c g_cone = g"),
            Constraint([Term(0, left=t.h)], cone.h, "h c = q_cone"),
        ])
        if c is None:
            return Distinguished(False, "no morphism of triangles from the cone of f")
        # any such c between distinguished triangles is invertible
        if not self.is_iso(c):
            return Distinguished(False, "comparison map from the cone of f is not invertible", witness=c)
        return Distinguished(True, witness=c)

    def rotate(self, t: StableTriangle) -> StableTriangle:
        """
        Y -g-> Z -h-> S X -(-S f)-> S Y.

        t is first matched against the cone of f by w: Z -> C(f); the
        rotation then carries an isomorphism (id, w, c) to the standard
        triangle of the conflation on mu: Y -> C(f), with c solved so that
        its third map q' c agrees with -S f.
        """
        cone = self.cone(t.f)
        w = self.solve_one(Unknown(t.z, cone.z, "w"), [
            Constraint([Term(0, right=t.g)], cone.g, "w g = mu"),
            Constraint([Term(0, left=cone.h)], t.h, "q w = h"),
        ])
        if w is None:
            raise ContractError(f"rotate: the triangle on {t.x.label()} -> {t.y.label()} is not distinguished")
        ext = self.backend.make_extension(cone.g, Side.FROM_MONIC, validate=False)
        data = self.standard_data(ext)
        third = -self.shift_map(t.f)
        c = self.solve_one(Unknown(t.h.target, ext.c, "c"), [
            Constraint([Term(0, right=t.h)], ext.g @ w, "c h = g' w"),
            Constraint([Term(0, left=data.q)], third, "q' c = -S f"),
        ])
        if c is None:
            raise InternalConsistencyError(f"rotation of {t.x.label()} -> {t.y.label()}: no c with q' c = -S f",
                                           identity="S f = -v")
        id_y = self.identity(t.y)
        reference = TriangleIso(standard=data, a=id_y, b=w, c=c, a_inv=id_y,
                                b_inv=self.find_inverse(w), c_inv=self.find_inverse(c))
        rotated = StableTriangle(t.g, t.h, third, reference=reference)
        rotated.witness.add("mu", cone.g, "mu = c_f i_Y")
        rotated.witness.add("w", w, "w g = mu, q w = h")
        rotated.witness.add("c", c, "c h = g' w")
        rotated.witness.add("v", data.q @ c, "S f = -v")
        return rotated

    def _standard_view(self, t: StableTriangle) -> Tuple[Optional[StableTriangle], Optional[TriangleIso]]:
        if t.standard is not None:
            return t, None
        if t.reference is not None:
            data = t.reference.standard
            return StableTriangle(data.extension.f, data.extension.g, data.q, standard=data), t.reference
        return None, None

    def fill_in(self, t: StableTriangle, t2: StableTriangle, x: ModuleMorphism,
                y: ModuleMorphism) -> Tuple[ModuleMorphism, FillWitness]:
        """z with z g = g' y and h' z = S(x) h, given y f = f' x."""
        if not self.equal(y @ t.f, t2.f @ x):
            raise ContractError("fill-in: the square y f = f' x does not commute stably")
        witness = FillWitness()
        s, ref = self._standard_view(t)
        s2, ref2 = self._standard_view(t2)
        if s is not None and s2 is not None:
            z = self._fill_transported(t, t2, (s, ref), (s2, ref2), x, y, witness)
            if z is not None:
                return z, witness
            logger.debug("constructive fill-in did not validate, solving directly")
        z = self.solve_one(Unknown(t.z, t2.z, "z"), [
            Constraint([Term(0, right=t.g)], t2.g @ y, "z g = g' y"),
            Constraint([Term(0, left=t2.h)], self.shift_map(x) @ t.h, "h' z = S x h"),
        ])
        if z is None:
            raise InternalConsistencyError("no fill-in for the given square", identity="z g = g' y")
        witness.add("z", z, "z g = g' y, h' z = S x h")
        return z, witness

    def _fill_transported(self, t: StableTriangle, t2: StableTriangle, view, view2, x: ModuleMorphism,
                          y: ModuleMorphism, witness: FillWitness) -> Optional[ModuleMorphism]:
        """Moves the square onto the standard triangles, fills it there and moves z back."""
        (s, ref), (s2, ref2) = view, view2
        x_s, y_s = x, y
        if ref is not None:
            a_inv = ref.a_inv if ref.a_inv is not None else self.find_inverse(ref.a)
            b_inv = ref.b_inv if ref.b_inv is not None else self.find_inverse(ref.b)
            if a_inv is None or b_inv is None:
                return None
            x_s, y_s = x_s @ a_inv, y_s @ b_inv
        if ref2 is not None:
            x_s, y_s = ref2.a @ x_s, ref2.b @ y_s
        z = self._fill_standard(s, s2, x_s, y_s, witness)
        if z is None:
            return None
        if ref is None and ref2 is None:
            return z
        if ref is not None:
            z = z @ ref.c
        if ref2 is not None:
            c2_inv = ref2.c_inv if ref2.c_inv is not None else self.find_inverse(ref2.c)
            if c2_inv is None:
                return None
            z = c2_inv @ z
        if not (self.equal(z @ t.g, t2.g @ y) and self.equal(t2.h @ z, self.shift_map(x) @ t.h)):
            return None
        witness.add("z_standard", witness.morphisms["z"], "fill-in between the standard triangles")
        witness.add("z", z, "z = c'^-1 z_standard c")
        return z

    def _fill_standard(self, t: StableTriangle, t2: StableTriangle, x: ModuleMorphism, y: ModuleMorphism,
                       witness: FillWitness):
        ext, ext2 = t.standard.extension, t2.standard.extension
        pres = self.injective_presentation(t.x)
        s2 = self.base.solve_one(Unknown(pres.injective, t2.y, "s2"), [
            Constraint([Term(0, right=pres.alpha)], y @ t.f - t2.f @ x, "s2 alpha_X = y f - f' x")])
        if s2 is None:
            return None
        s3 = t.standard.p
        y1 = y - s2 @ s3
        z = self.base.solve_one(Unknown(t.z, t2.z, "z"), [
            Constraint([Term(0, right=ext.g)], ext2.g @ y1, "z g = g' y'"),
            Constraint([Term(0, left=ext2.h)], self.backend.sigma_map(x) @ ext.h, "h' z = Sigma x h"),
        ])
        if z is None:
            return None
        if not (self.equal(z @ t.g, t2.g @ y) and self.equal(t2.h @ z, self.shift_map(x) @ t.h)):
            return None
        witness.add("s1", pres.alpha, "s1 = alpha_X")
        witness.add("s2", s2, "s2 s1 = y f - f' x")
        witness.add("s3", s3, "s3 f = s1")
        witness.add("y'", y1, "y' = y - s2 s3, y' f = f' x")
        witness.add("z", z, "z g = g' y', h' z = Sigma x h")
        return z
