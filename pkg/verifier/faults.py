"""
Deliberately broken backends. A sound verifier must report at least one
fail, with a replayable witness, on each of them.
"""
from loguru import logger

from algebra.module import ModuleMorphism
from pseudotri.stable import StableBackend
from pseudotri.triangles import RightTriangle


class FlippedPsiBackend(StableBackend):
    """psi composed with the sign change of the first reduced basis coordinate of e."""

    kind = "stable"

    def psi(self, e: ModuleMorphism, c) -> ModuleMorphism:
        q = self.category.quotient_hom(e.source, e.target)
        if q.dim:
            first = int(q.coordinates(e)[0])
            if first:
                e = e - q.reduced[0].scale(2 * first)
        return super().psi(e, c)

    def describe(self) -> str:
        return f"{super().describe()} (psi sign flipped on one basis vector)"


class UnsignedRotationBackend(StableBackend):
    """Rotation with third map +Sigma f instead of -Sigma f."""

    kind = "stable"

    def rotate_right(self, t: RightTriangle) -> RightTriangle:
        logger.debug("unsigned rotation")
        return RightTriangle(t.g, t.h, self.sigma_map(t.f))

    def describe(self) -> str:
        return f"{super().describe()} (rotation without sign)"


FAULTS = {
    "flipped-psi": FlippedPsiBackend,
    "unsigned-rotation": UnsignedRotationBackend,
}
