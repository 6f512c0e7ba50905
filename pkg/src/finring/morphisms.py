"""Isomorphisms of triangulated rings: corner data, synthesis, decomposition.

A single semicentral level turns an isomorphism phi into corner data
(rho, phibar, chi, m): rho acts on the diagonal corner, phibar on the
complementary corner, chi on the connecting row, and m records where phi
drops the head idempotent inside its row coset.  Synthesis rebuilds

    phi(r + l + a) = rho(r) + [rho(r)*m + chi(l) - m*phibar(a)] + phibar(a)

with r, l, a the Peirce parts of the argument.  Iterating down a
triangulating sequence gives the full parametrization: a block permutation
sigma, one (rho, chi, m) layer per level but the last, and a closing corner
isomorphism.  Layer data is stored against canonical ambient objects (corner
presentations of the two sequences, full rows e_i*A*(1-e_i) and
f_j*B*(1-f_j)), so decomposition and synthesis round-trip field by field.

Enumeration walks sigma in lexicographic order and, per sigma, the layer
choices with deeper levels varying slowest and each level keyed by image
tuples in lexicographic order; iso_search returns the first hit in that
canonical order.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .corners import corner_ring, peirce_component
from .errors import (
    AmbientMismatch,
    CapExceeded,
    InadmissiblePermutation,
    InconsistentQuadruple,
    LocationMismatch,
    NotSemicentral,
    ShapeMismatch,
    StructureViolation,
)
from .idempotents import is_semicentral
from .maps import (
    AdditiveMap,
    BimoduleIsomorphism,
    RingIsomorphism,
    verify_ring_iso,
)
from .presentation import Element, RingPresentation
from .sequences import TriangularSequence, is_strongly_triangular
from .structure import admissible_orders
from .subgroups import Subgroup
from .triangulate import _locate_over, complete_triangulating_set

# Candidate image tuples per corner pair or row pair during brute search.
CORNER_SEARCH_CAP = 1 << 16


@dataclass(frozen=True)
class CornerQuadruple:
    """Corner data (rho, phibar, chi, m) for one semicentral level."""

    rho: RingIsomorphism
    phibar: RingIsomorphism
    chi: BimoduleIsomorphism
    m: Element


def _corner_context(ring: RingPresentation, e: Element):
    if not is_semicentral(ring, e):
        raise NotSemicentral("idempotent is not semicentral")
    comp = ring.one_element() - e
    return corner_ring(ring, e), corner_ring(ring, comp), peirce_component(ring, e, comp)


def check_corner_quadruple(e: Element, f: Element, q: CornerQuadruple) -> None:
    """Raise InconsistentQuadruple unless q satisfies every compatibility
    condition for the semicentral idempotents e (domain side) and f."""
    ring_a = e.ring
    ring_b = f.ring
    corner_r, corner_abar, row_l = _corner_context(ring_a, e)
    corner_s, corner_bbar, row_m = _corner_context(ring_b, f)
    if q.rho.domain != corner_r.presentation or q.rho.codomain != corner_s.presentation:
        raise InconsistentQuadruple("corner isomorphism endpoints do not match")
    if q.phibar.domain != corner_abar.presentation or q.phibar.codomain != corner_bbar.presentation:
        raise InconsistentQuadruple("complement isomorphism endpoints do not match")
    if q.chi.map.domain != row_l or q.chi.map.codomain != row_m:
        raise InconsistentQuadruple("row map endpoints do not match")
    if q.chi.left_via != q.rho or q.chi.right_via != q.phibar:
        raise InconsistentQuadruple("row map is not tagged with the quadruple's actions")
    if q.m.ring != ring_b or not row_m.contains(q.m):
        raise InconsistentQuadruple("offset element lies outside the target row")
    if not q.chi.map.is_bijective():
        raise InconsistentQuadruple("row map is not bijective")
    row_gens = row_l.generators
    for t in range(corner_r.presentation.rank):
        r_amb = corner_r.embed(corner_r.presentation.gen(t))
        rho_amb = corner_s.embed(q.rho.apply(corner_r.presentation.gen(t)))
        for l in row_gens:
            if q.chi.apply(r_amb * l) != rho_amb * q.chi.apply(l):
                raise InconsistentQuadruple("left action compatibility fails")
    for t in range(corner_abar.presentation.rank):
        a_amb = corner_abar.embed(corner_abar.presentation.gen(t))
        pb_amb = corner_bbar.embed(q.phibar.apply(corner_abar.presentation.gen(t)))
        for l in row_gens:
            if q.chi.apply(l * a_amb) != q.chi.apply(l) * pb_amb:
                raise InconsistentQuadruple("right action compatibility fails")


def corner_synthesize(e: Element, f: Element, q: CornerQuadruple) -> RingIsomorphism:
    """Build the isomorphism determined by corner data at one level."""
    check_corner_quadruple(e, f, q)
    ring_a = e.ring
    ring_b = f.ring
    corner_r, corner_abar, _row_l = _corner_context(ring_a, e)
    corner_s, corner_bbar, _row_m = _corner_context(ring_b, f)
    comp_a = ring_a.one_element() - e
    images = []
    for g in ring_a.gens():
        r = e * g * e
        l = e * g * comp_a
        a = comp_a * g * comp_a
        rho_amb = corner_s.embed(q.rho.apply(corner_r.project(r)))
        pb_amb = corner_bbar.embed(q.phibar.apply(corner_abar.project(a)))
        images.append(rho_amb + rho_amb * q.m + q.chi.apply(l) - q.m * pb_amb + pb_amb)
    try:
        return RingIsomorphism.create(AdditiveMap(ring_a, ring_b, images))
    except Exception as exc:  # consistent quadruples always synthesize; see tests
        raise StructureViolation("synthesis produced a non-isomorphism: %s" % exc)


def corner_decompose(phi: RingIsomorphism, e: Element, f: Element) -> CornerQuadruple:
    """Extract the corner data of phi at semicentral idempotents e, f.

    Requires phi(e) to lie in the row coset f + f*B*(1-f); raises
    LocationMismatch otherwise.
    """
    ring_a = phi.domain
    ring_b = phi.codomain
    if e.ring != ring_a or f.ring != ring_b:
        raise AmbientMismatch("idempotents do not match the map's endpoints")
    corner_r, corner_abar, row_l = _corner_context(ring_a, e)
    corner_s, corner_bbar, row_m = _corner_context(ring_b, f)
    offset = phi.apply(e) - f
    if not row_m.contains(offset):
        raise LocationMismatch("phi(e) is not in the row coset of f")
    comp_b = ring_b.one_element() - f
    rho = RingIsomorphism.create(
        AdditiveMap(
            corner_r.presentation,
            corner_s.presentation,
            [
                corner_s.project(f * phi.apply(corner_r.embed(corner_r.presentation.gen(t))) * f)
                for t in range(corner_r.presentation.rank)
            ],
        )
    )
    phibar = RingIsomorphism.create(
        AdditiveMap(
            corner_abar.presentation,
            corner_bbar.presentation,
            [
                corner_bbar.project(
                    comp_b * phi.apply(corner_abar.embed(corner_abar.presentation.gen(t))) * comp_b
                )
                for t in range(corner_abar.presentation.rank)
            ],
        )
    )
    try:
        chi_map = AdditiveMap(row_l, row_m, [phi.apply(l) for l in row_l.generators])
    except ShapeMismatch as exc:
        raise StructureViolation("restriction of phi leaves the target row: %s" % exc)
    q = CornerQuadruple(rho, phibar, BimoduleIsomorphism(chi_map, rho, phibar), offset)
    if corner_synthesize(e, f, q).map != phi.map:
        raise StructureViolation("corner data does not resynthesize the map")
    return q


# -- full decompositions ---------------------------------------------------


@dataclass(frozen=True)
class IsoLayer:
    """One level of an IsoDecomposition: corner isomorphism, row map, offset."""

    rho: RingIsomorphism
    chi: AdditiveMap
    m: Element


@dataclass(frozen=True)
class IsoDecomposition:
    """Block permutation, per-level layers, and the closing corner isomorphism.

    sigma is 0-based: layer i connects block i of the domain sequence to block
    sigma[i] of the codomain sequence.  last_rho is None only for the empty
    decomposition of one-element rings.
    """

    sigma: tuple[int, ...]
    layers: tuple[IsoLayer, ...]
    last_rho: RingIsomorphism | None


def _base_level(seq_a: TriangularSequence, seq_b: TriangularSequence, j: int, rho: RingIsomorphism):
    corner_r = seq_a.corners[seq_a.m - 1]
    corner_s = seq_b.corners[j]
    if rho is None or rho.domain != corner_r.presentation or rho.codomain != corner_s.presentation:
        raise InconsistentQuadruple("closing corner isomorphism has wrong endpoints", seq_a.m - 1)

    def base(x: Element) -> Element:
        return corner_s.embed(rho.apply(corner_r.project(x)))

    return base


def _wrap_level(
    seq_a: TriangularSequence,
    seq_b: TriangularSequence,
    sigma,
    i: int,
    layer: IsoLayer,
    phi_next,
    check: bool = True,
):
    ring_a = seq_a.ring
    ring_b = seq_b.ring
    e = seq_a.idems[i]
    j = sigma[i]
    corner_r = seq_a.corners[i]
    corner_s = seq_b.corners[j]
    row_l = peirce_component(ring_a, e, ring_a.one_element() - e)
    row_m = peirce_component(ring_b, seq_b.idems[j], ring_b.one_element() - seq_b.idems[j])
    if check:
        if layer.rho.domain != corner_r.presentation or layer.rho.codomain != corner_s.presentation:
            raise InconsistentQuadruple("layer corner isomorphism has wrong endpoints", i)
        if layer.chi.domain != row_l or layer.chi.codomain != row_m:
            raise InconsistentQuadruple("layer row map has wrong endpoints", i)
        if layer.m.ring != ring_b or not row_m.contains(layer.m):
            raise InconsistentQuadruple("layer offset lies outside the target row", i)
        if not layer.chi.is_bijective():
            raise InconsistentQuadruple("layer row map is not bijective", i)
        row_gens = row_l.generators
        for t in range(corner_r.presentation.rank):
            r_amb = corner_r.embed(corner_r.presentation.gen(t))
            rho_amb = corner_s.embed(layer.rho.apply(corner_r.presentation.gen(t)))
            for l in row_gens:
                if layer.chi.apply(r_amb * l) != rho_amb * layer.chi.apply(l):
                    raise InconsistentQuadruple("left action compatibility fails", i)
        for a in seq_a.tails[i + 1].subgroup.generators:
            pa = phi_next(a)
            for l in row_gens:
                if layer.chi.apply(l * a) != layer.chi.apply(l) * pa:
                    raise InconsistentQuadruple("right action compatibility fails", i)
    tail_idem = seq_a.tail_idempotent(i + 1)

    def level(x: Element) -> Element:
        r = e * x * e
        l = e * x * tail_idem
        a = tail_idem * x * tail_idem
        rho_amb = corner_s.embed(layer.rho.apply(corner_r.project(r)))
        pa = phi_next(a)
        return rho_amb + rho_amb * layer.m + layer.chi.apply(l) - layer.m * pa + pa

    return level


def iso_synthesize(
    seq_a: TriangularSequence,
    seq_b: TriangularSequence,
    d: IsoDecomposition,
    cap: int | None = None,
) -> RingIsomorphism:
    """Assemble the isomorphism parametrized by d over the two sequences."""
    ring_a = seq_a.ring
    ring_b = seq_b.ring
    m = seq_a.m
    if seq_b.m != m:
        raise ShapeMismatch("sequences have different lengths")
    if sorted(d.sigma) != list(range(m)):
        raise InadmissiblePermutation(d.sigma)
    if len(d.layers) != max(m - 1, 0):
        raise ShapeMismatch("expected %d layers, got %d" % (max(m - 1, 0), len(d.layers)))
    if m == 0:
        if d.last_rho is not None:
            raise ShapeMismatch("empty decomposition cannot carry a closing isomorphism")
        return RingIsomorphism.create(AdditiveMap(ring_a, ring_b, []))
    reordered = [seq_b.idems[j] for j in d.sigma]
    if not is_strongly_triangular(ring_b, reordered, cap):
        raise InadmissiblePermutation(d.sigma)
    phi = _base_level(seq_a, seq_b, d.sigma[m - 1], d.last_rho)
    for i in range(m - 2, -1, -1):
        phi = _wrap_level(seq_a, seq_b, d.sigma, i, d.layers[i], phi)
    iso_map = AdditiveMap(ring_a, ring_b, [phi(g) for g in ring_a.gens()])
    try:
        return RingIsomorphism.create(iso_map)
    except Exception as exc:
        raise StructureViolation("layer data passed checks but synthesis failed: %s" % exc)


def iso_decompose(
    phi: RingIsomorphism,
    seq_a: TriangularSequence,
    seq_b: TriangularSequence,
    cap: int | None = None,
) -> IsoDecomposition:
    """Factor phi into sigma, per-level corner data, and a closing corner
    isomorphism.  The result resynthesizes to phi exactly; that is asserted."""
    ring_a = seq_a.ring
    ring_b = seq_b.ring
    if phi.domain != ring_a or phi.codomain != ring_b:
        raise ShapeMismatch("map endpoints do not match the sequences")
    m = seq_a.m
    if seq_b.m != m:
        raise StructureViolation("isomorphic rings have sequences of equal length")
    if m == 0:
        return IsoDecomposition((), (), None)
    active = list(range(m))
    psi = phi.apply
    sigma: list[int] = []
    layers: list[IsoLayer] = []
    last_rho = None
    for i in range(m):
        e = seq_a.idems[i]
        k, rest = _locate_over(ring_b, seq_b.idems, active, psi(e))
        sigma.append(k)
        corner_r = seq_a.corners[i]
        corner_s = seq_b.corners[k]
        f_k = seq_b.idems[k]
        rho = RingIsomorphism.create(
            AdditiveMap(
                corner_r.presentation,
                corner_s.presentation,
                [
                    corner_s.project(f_k * psi(corner_r.embed(corner_r.presentation.gen(t))) * f_k)
                    for t in range(corner_r.presentation.rank)
                ],
            )
        )
        if i == m - 1:
            if not rest.is_zero():
                raise StructureViolation("closing block leaves a nonzero row part")
            last_rho = rho
            break
        row_l = peirce_component(ring_a, e, ring_a.one_element() - e)
        row_m = peirce_component(ring_b, f_k, ring_b.one_element() - f_k)
        try:
            chi = AdditiveMap(row_l, row_m, [psi(l) for l in row_l.generators])
        except ShapeMismatch as exc:
            raise StructureViolation("restriction of phi leaves the target row: %s" % exc)
        layers.append(IsoLayer(rho, chi, rest))
        active.remove(k)
        shrink = ring_b.sum(seq_b.idems[r] for r in active)
        psi = _restrict(psi, shrink)
    d = IsoDecomposition(tuple(sigma), tuple(layers), last_rho)
    if iso_synthesize(seq_a, seq_b, d, cap).map != phi.map:
        raise StructureViolation("decomposition does not resynthesize the isomorphism")
    return d


def _restrict(psi, shrink: Element):
    def inner(x: Element) -> Element:
        return shrink * psi(x) * shrink

    return inner


# -- structured enumeration ------------------------------------------------


def _enumerate_corner_isos(
    dom: RingPresentation, cod: RingPresentation
) -> list[RingIsomorphism]:
    """All ring isomorphisms dom -> cod, by image brute force with order and
    unit pruning, in lexicographic image order."""
    if dom.order != cod.order:
        return []
    elems = list(cod.elements())
    candidates = []
    space = 1
    for o in dom.orders:
        lst = [y for y in elems if (o * y).is_zero()]
        space *= len(lst)
        if space > CORNER_SEARCH_CAP:
            raise CapExceeded(space, CORNER_SEARCH_CAP, "corner isomorphism search")
        candidates.append(lst)
    out = []
    for tup in itertools.product(*candidates):
        f = AdditiveMap(dom, cod, list(tup))
        if verify_ring_iso(f, dom, cod):
            out.append(RingIsomorphism(f))
    return out


def _enumerate_row_maps(row_l: Subgroup, row_m: Subgroup, left_pairs, right_pairs):
    """Bijective additive maps row_l -> row_m compatible with both actions,
    in lexicographic image order."""
    gens = row_l.generators
    orders = row_l.generator_orders
    elems = row_m.elements()
    candidates = []
    space = 1
    for o in orders:
        lst = [y for y in elems if (o * y).is_zero()]
        space *= len(lst)
        if space > CORNER_SEARCH_CAP:
            raise CapExceeded(space, CORNER_SEARCH_CAP, "row map search")
        candidates.append(lst)
    out = []
    for tup in itertools.product(*candidates):
        chi = AdditiveMap(row_l, row_m, list(tup))
        if not chi.is_bijective():
            continue
        if any(
            chi.apply(r_amb * l) != rho_amb * img
            for r_amb, rho_amb in left_pairs
            for l, img in zip(gens, chi._image_elems)
        ):
            continue
        if any(
            chi.apply(l * a_amb) != img * pa
            for a_amb, pa in right_pairs
            for l, img in zip(gens, chi._image_elems)
        ):
            continue
        out.append(chi)
    return out


def enumerate_isomorphisms(
    ring_a: RingPresentation, ring_b: RingPresentation, cap: int | None = None
):
    """Yield (IsoDecomposition, RingIsomorphism) pairs in canonical order.

    Every valid parametrization over the canonical sequences appears exactly
    once, and by the structure theorem that is every isomorphism a -> b.
    """
    if ring_a.order != ring_b.order:
        return
    if ring_a.order == 1:
        yield IsoDecomposition((), (), None), RingIsomorphism.create(
            AdditiveMap(ring_a, ring_b, [])
        )
        return
    seq_a = complete_triangulating_set(ring_a, cap)
    seq_b = complete_triangulating_set(ring_b, cap)
    m = seq_a.m
    if seq_b.m != m:
        return
    one_a = ring_a.one_element()
    one_b = ring_b.one_element()
    rows_a = [peirce_component(ring_a, e, one_a - e) for e in seq_a.idems]
    rows_b = [peirce_component(ring_b, f, one_b - f) for f in seq_b.idems]
    corner_cache: dict[tuple[int, int], list[RingIsomorphism]] = {}

    def corner_isos(i: int, j: int) -> list[RingIsomorphism]:
        key = (i, j)
        if key not in corner_cache:
            corner_cache[key] = _enumerate_corner_isos(
                seq_a.corners[i].presentation, seq_b.corners[j].presentation
            )
        return corner_cache[key]

    for sigma in admissible_orders(ring_b, seq_b, cap):
        if any(seq_a.corners[i].order != seq_b.corners[sigma[i]].order for i in range(m)):
            continue
        if any(rows_a[i].order != rows_b[sigma[i]].order for i in range(m)):
            continue

        def levels(i: int):
            if i == m - 1:
                for rho in corner_isos(m - 1, sigma[m - 1]):
                    yield (), rho, _base_level(seq_a, seq_b, sigma[m - 1], rho)
                return
            e = seq_a.idems[i]
            j = sigma[i]
            corner_r = seq_a.corners[i]
            corner_s = seq_b.corners[j]
            row_l = rows_a[i]
            row_m = rows_b[j]
            tail_gens = seq_a.tails[i + 1].subgroup.generators
            offsets = row_m.elements()
            for sub_layers, last_rho, phi_next in levels(i + 1):
                right_pairs = [(a, phi_next(a)) for a in tail_gens]
                for rho in corner_isos(i, j):
                    left_pairs = [
                        (
                            corner_r.embed(corner_r.presentation.gen(t)),
                            corner_s.embed(rho.apply(corner_r.presentation.gen(t))),
                        )
                        for t in range(corner_r.presentation.rank)
                    ]
                    for chi in _enumerate_row_maps(row_l, row_m, left_pairs, right_pairs):
                        for offset in offsets:
                            layer = IsoLayer(rho, chi, offset)
                            phi_here = _wrap_level(
                                seq_a, seq_b, sigma, i, layer, phi_next, check=False
                            )
                            yield (layer,) + sub_layers, last_rho, phi_here

        for layers, last_rho, phi in levels(0):
            d = IsoDecomposition(sigma, layers, last_rho)
            iso = RingIsomorphism.create(
                AdditiveMap(ring_a, ring_b, [phi(g) for g in ring_a.gens()])
            )
            yield d, iso


def iso_search(
    ring_a: RingPresentation, ring_b: RingPresentation, cap: int | None = None
) -> RingIsomorphism | None:
    """First isomorphism in canonical enumeration order, or None."""
    for _d, iso in enumerate_isomorphisms(ring_a, ring_b, cap):
        return iso
    return None
