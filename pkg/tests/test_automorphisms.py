import pytest

from finring import (
    AutomorphismGroup,
    RingPresentation,
    aut_group,
    aut_order,
    identity_iso,
    inner_automorphism,
    ring_units,
)
from finring.fixtures import FIXTURE_BUILDERS, f2, fixture, product

# computed once by exhaustive search and frozen
AUT_ORDERS = {
    "z6": 1,
    "f2": 1,
    "f4": 2,
    "z4": 1,
    "t2_f2": 2,
    "t2_z4": 8,
    "t3_f2": 8,
    "z2xz3": 1,
    "three_block": 2,
}


@pytest.mark.parametrize("name", sorted(AUT_ORDERS))
def test_aut_orders(name):
    assert aut_order(fixture(name)) == AUT_ORDERS[name]


def test_aut_group_contents():
    ring = fixture("t2_f2")
    group = aut_group(ring)
    assert isinstance(group, AutomorphismGroup)
    assert group.order == 2
    assert identity_iso(ring) in group
    assert inner_automorphism(ring.element((1, 1, 1))) in group


def test_aut_group_sorted_and_deduplicated():
    group = aut_group(fixture("t2_z4"))
    images = [g.map.images for g in group.elements]
    assert images == sorted(images)
    assert len(set(images)) == len(images)


def test_inner_automorphisms_lie_in_group():
    ring = fixture("t3_f2")
    group = aut_group(ring)
    for u in ring_units(ring):
        assert inner_automorphism(u) in group


def test_trivial_rings():
    assert aut_order(RingPresentation((), (), ())) == 1
    assert aut_order(f2()) == 1
    assert aut_order(product(f2(), f2())) == 2  # swap of the two factors


def test_aut_order_is_presentation_invariant():
    # isomorphic rings have equal automorphism counts
    assert aut_order(fixture("z6")) == aut_order(fixture("z2xz3"))
    ring = fixture("t3_f2")
    perm = list(range(ring.rank))
    perm[0], perm[3] = perm[3], perm[0]
    assert aut_order(ring.permuted(perm)) == AUT_ORDERS["t3_f2"]


def test_every_fixture_group_satisfies_group_law():
    for name in FIXTURE_BUILDERS:
        group = aut_group(fixture(name))
        ids = {g.map.images for g in group.elements}
        for g in group.elements:
            assert g.inverse().map.images in ids
        assert AUT_ORDERS[name] == group.order
