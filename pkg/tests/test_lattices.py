from __future__ import annotations

import json

import pytest

from homcode import lattices, surface
from homcode.errors import ConstraintViolation, ParseError, ValidationError
from oracle import counts

SPECS = [
    "tetrahedron",
    "cube",
    "octahedron",
    "icosahedron",
    "dodecahedron",
    "prism:n=5",
    "polygon:n=6",
    "square_torus:L=2",
    "square_torus:L=4",
    "hex_torus:a=3,b=3",
    "hex_torus:a=6,b=3",
    "torus_488:L=2",
    "torus_31212:a=3",
    "hex_torus_defect:a=3",
    "mixed_strip:W=4,H=4",
    "planar_ktc_patch:W=3,H=3,boundaries=4",
    "planar_tcc_triangle:s=1",
]


def test_square_torus_2():
    m = lattices.generate("square_torus:L=2")
    assert m.counts() == counts(m.alpha, m.sigma) == (4, 8, 4)
    assert surface.euler_genus(m)[1] == 1
    assert not m.is_simple()


def test_square_torus_counts():
    for L in (2, 4, 6):
        m = lattices.square_torus(L)
        assert m.counts() == (L * L, 2 * L * L, L * L)
        assert m.is_regular(4)


def test_hex_torus_18():
    m = lattices.hex_torus(3, 3)
    assert m.num_vertices == 18
    assert surface.euler_genus(m)[1] == 1
    assert m.is_regular(3) and m.face_size_profile() == {6: 9}
    assert surface.is_proper_coloring(m, surface.face_coloring(m, 3))


def test_torus_488():
    m = lattices.torus_488(2)
    assert m.is_regular(3)
    assert m.face_size_profile() == {4: 4, 8: 4}
    surface.face_coloring(m, 3)


def test_mixed_strip_valences():
    m = lattices.mixed_strip(4, 4)
    assert set(m.valence_profile()) == {3, 4}
    assert surface.euler_genus(m)[1] == 1


def test_constraints():
    with pytest.raises(ConstraintViolation):
        lattices.generate("square_torus:L=3")
    with pytest.raises(ConstraintViolation):
        lattices.generate("hex_torus:a=4")
    with pytest.raises(ParseError):
        lattices.generate("nope:L=1")
    with pytest.raises(ParseError):
        lattices.generate("square_torus:L=x")


@pytest.mark.parametrize("spec", SPECS)
def test_generated_maps_validate_and_are_deterministic(spec):
    m = lattices.generate(spec)
    data = lattices.write_map(m)
    again = lattices.read_map(data)
    assert again.alpha == m.alpha and again.sigma == m.sigma
    assert lattices.write_map(again) == data
    assert lattices.write_map(lattices.generate(spec)) == data
    assert m.counts() == counts(m.alpha, m.sigma)


def test_serialization_is_canonical():
    data = lattices.write_map(lattices.square_torus(4))
    assert data.endswith(b"\n")
    record = json.loads(data)
    assert list(record) == sorted(record)
    assert set(record) == {"alpha", "darts", "meta", "sigma"}


def test_read_map_errors():
    good = json.loads(lattices.write_map(lattices.tetrahedron()))
    bad = dict(good)
    bad["alpha"] = [1, 2, 0] + list(range(3, good["darts"]))
    with pytest.raises(ValidationError):
        lattices.read_map(json.dumps(bad))
    missing = {k: v for k, v in good.items() if k != "sigma"}
    with pytest.raises(ParseError):
        lattices.read_map(json.dumps(missing))
    with pytest.raises(ParseError):
        lattices.read_map(b"{not json")


def test_export_dot():
    text = lattices.export_dot(lattices.tetrahedron())
    assert text.count(" -- ") == 6
    assert len([ln for ln in text.splitlines() if ln.strip().startswith("v") and "--" not in ln]) == 4
    m = lattices.hex_torus(3, 3)
    text = lattices.export_dot(m, surface.face_coloring(m, 3))
    face_lines = [ln for ln in text.splitlines() if "// face" in ln]
    assert len(face_lines) == m.num_faces and all("color=" in ln for ln in face_lines)
    assert lattices.export_dot(m) == lattices.export_dot(m)
    empty = lattices.export_dot(surface.build_map(0, [], [], allow_disconnected=True))
    assert empty.splitlines() == ["graph homcode {", "}"]


def test_parse_spec_aliases():
    assert lattices.parse_spec("square_torus:L=4").params == {"L": 4}
    assert lattices.generate("square_torus:Lx=4").counts() == (16, 32, 16)
    assert lattices.generate("hex_torus:L=3").counts() == (18, 27, 9)
