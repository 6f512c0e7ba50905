"""Corner rings e*A*e and Peirce components e*A*f.

A corner inherits its addition and multiplication from the ambient ring and
has e as its unit.  We present it on the independent cyclic generators of the
subgroup e*A*e, so the corner presentation is a valid RingPresentation in its
own right, with embed/project additive maps translating between corner and
ambient coordinates.  The corner at the ambient unit is the ring itself, with
identity translation, rather than a re-based copy.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NotIdempotent
from .maps import AdditiveMap, identity_map
from .presentation import Element, RingPresentation
from .subgroups import Subgroup


def _require_idempotent(e: Element):
    if not e.is_idempotent():
        raise NotIdempotent("element %r is not idempotent" % (e.coeffs,))


def peirce_component(ring: RingPresentation, e: Element, f: Element) -> Subgroup:
    """The additive subgroup e*A*f, spanned by e*g*f over the generators."""
    _require_idempotent(e)
    _require_idempotent(f)
    return Subgroup.span(ring, [e * g * f for g in ring.gens()])


@dataclass(frozen=True, eq=False)
class CornerRing:
    """The ring e*A*e presented on its own generators."""

    parent: RingPresentation
    idem: Element
    presentation: RingPresentation
    subgroup: Subgroup
    embed_map: AdditiveMap = field(repr=False)
    project_map: AdditiveMap = field(repr=False)

    def embed(self, x: Element) -> Element:
        """Corner coordinates to ambient coordinates."""
        return self.embed_map.apply(x)

    def project(self, y: Element) -> Element:
        """Ambient y to corner coordinates of e*y*e."""
        return self.project_map.apply(y)

    @property
    def order(self) -> int:
        return self.presentation.order

    def __eq__(self, other):
        if not isinstance(other, CornerRing):
            return NotImplemented
        return self.parent == other.parent and self.idem == other.idem

    def __hash__(self):
        return hash((self.parent, self.idem))


def corner_ring(ring: RingPresentation, e: Element) -> CornerRing:
    _require_idempotent(e)
    sub = peirce_component(ring, e, e)
    if sub.order == ring.order:
        # e A e = A forces e = 1; keep the original presentation untouched.
        ident = identity_map(ring)
        return CornerRing(ring, e, ring, sub, ident, ident)
    gens = sub.generators
    orders = sub.generator_orders
    k = len(gens)
    mul = tuple(
        tuple(sub.coords(gens[i] * gens[j]) for j in range(k)) for i in range(k)
    )
    pres = RingPresentation(orders, mul, sub.coords(e))
    embed = AdditiveMap(pres, sub, gens)
    project = AdditiveMap(ring, pres, [pres.element(sub.coords(e * g * e)) for g in ring.gens()])
    return CornerRing(ring, e, pres, sub, embed, project)
