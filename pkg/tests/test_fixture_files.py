"""The bundled fixture corpus must stay in sync with the builder functions."""
import json
import pathlib

import pytest

from finring import map_from_obj, map_to_obj, ring_from_obj, ring_to_obj, verify_ring_iso
from finring.fixtures import FIXTURE_BUILDERS, fixture, t2_f2, t2_f2_inner

FIXTURE_DIR = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


def _render(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


@pytest.mark.parametrize("name", sorted(FIXTURE_BUILDERS))
def test_ring_file_matches_builder(name):
    path = FIXTURE_DIR / ("%s.json" % name)
    text = path.read_text()
    assert text == _render(ring_to_obj(fixture(name)))
    assert ring_from_obj(json.loads(text)) == fixture(name)


def test_map_file_matches_builder():
    path = FIXTURE_DIR / "maps" / "t2_f2_inner.json"
    text = path.read_text()
    assert text == _render(map_to_obj(t2_f2_inner()))
    ring = t2_f2()
    loaded = map_from_obj(json.loads(text), ring, ring)
    assert verify_ring_iso(loaded, ring, ring)


def test_every_fixture_file_loads():
    for path in sorted(FIXTURE_DIR.glob("*.json")):
        ring = ring_from_obj(json.loads(path.read_text()))
        assert ring.order >= 1
