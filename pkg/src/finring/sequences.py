"""Validated triangulating sequences of idempotents.

A sequence e_1, ..., e_m is strongly triangulating when the e_i are pairwise
orthogonal idempotents summing to 1, every lower Peirce component e_j*A*e_i
with j > i vanishes, and each corner e_i*A*e_i is semicentral reduced.  The
empty sequence is valid exactly for the one-element ring.

TriangularSequence.build revalidates from scratch, so sequences constructed
anywhere in the package carry their invariants.
"""
from __future__ import annotations

from dataclasses import dataclass

from .corners import CornerRing, corner_ring, peirce_component
from .errors import InvalidSequence
from .idempotents import is_semicentral_reduced
from .presentation import Element, RingPresentation


def triangularity_failure(
    ring: RingPresentation, idems, cap: int | None = None
) -> str | None:
    """First reason the sequence fails to be strongly triangulating, or None."""
    idems = tuple(idems)
    for i, e in enumerate(idems):
        if e.ring != ring:
            return "element %d lives in a different ring" % i
        if not e.is_idempotent():
            return "element %d is not idempotent" % i
    for i, ei in enumerate(idems):
        for j, ej in enumerate(idems):
            if i != j and not ((ei * ej).is_zero() and (ej * ei).is_zero()):
                return "elements %d and %d are not orthogonal" % (i, j)
    if ring.sum(idems) != ring.one_element():
        return "sequence does not sum to the unit"
    for j in range(len(idems)):
        for i in range(j):
            if not peirce_component(ring, idems[j], idems[i]).is_trivial():
                return "lower component (%d, %d) is nonzero" % (j, i)
    for i, e in enumerate(idems):
        if not is_semicentral_reduced(corner_ring(ring, e).presentation, cap):
            return "corner %d is not semicentral reduced" % i
    return None


def is_strongly_triangular(ring: RingPresentation, idems, cap: int | None = None) -> bool:
    return triangularity_failure(ring, idems, cap) is None


@dataclass(frozen=True)
class TriangularSequence:
    """A strongly triangulating sequence with its corners and tails.

    tails[i] is the corner at e_i + ... + e_m, so tails[0] is the whole ring.
    """

    ring: RingPresentation
    idems: tuple[Element, ...]
    corners: tuple[CornerRing, ...]
    tails: tuple[CornerRing, ...]

    @classmethod
    def build(
        cls, ring: RingPresentation, idems, cap: int | None = None
    ) -> "TriangularSequence":
        idems = tuple(idems)
        reason = triangularity_failure(ring, idems, cap)
        if reason is not None:
            raise InvalidSequence(reason)
        corners = tuple(corner_ring(ring, e) for e in idems)
        tails = []
        for i in range(len(idems)):
            tails.append(corner_ring(ring, ring.sum(idems[i:])))
        return cls(ring, idems, corners, tuple(tails))

    @property
    def m(self) -> int:
        return len(self.idems)

    def tail_idempotent(self, i: int) -> Element:
        """e_i + ... + e_m for 0-based i; the zero element past the end."""
        return self.ring.sum(self.idems[i:])
