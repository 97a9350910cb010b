from __future__ import annotations

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from homcode import lattices, surface
from homcode.errors import Disconnected, FixedPointEdge, NotColorable, NotInvolution, OddDartCount, WrongValence
from oracle import counts


@st.composite
def random_maps(draw, max_edges=7):
    """Connected rotation systems with alpha pairing darts 2i and 2i+1."""
    e = draw(st.integers(1, max_edges))
    alpha = [d ^ 1 for d in range(2 * e)]
    sigma = draw(st.permutations(range(2 * e)))
    m = surface.build_map(2 * e, alpha, list(sigma), allow_disconnected=True)
    assume(m.is_connected())
    return m


def named_maps():
    return [
        lattices.tetrahedron(),
        lattices.cube(),
        lattices.octahedron(),
        lattices.square_torus(2),
        lattices.square_torus(4),
        lattices.hex_torus(3, 3),
        lattices.torus_488(2),
    ]


def test_tetrahedron_counts():
    m = lattices.tetrahedron()
    assert m.dart_count == 12
    assert m.counts() == (4, 6, 4)
    assert surface.euler_genus(m) == (2, 0)


def test_single_loop_is_accepted():
    m = surface.build_map(2, [1, 0], [1, 0])
    assert m.num_vertices == 1 and m.num_edges == 1
    assert not m.is_simple()


def test_build_map_errors():
    with pytest.raises(FixedPointEdge):
        surface.build_map(2, [0, 1], [0, 1])
    with pytest.raises(OddDartCount):
        surface.build_map(3, [1, 0, 2], [0, 1, 2])
    with pytest.raises(NotInvolution):
        surface.build_map(4, [1, 2, 3, 0], [0, 1, 2, 3])
    with pytest.raises(Disconnected):
        surface.build_map(4, [1, 0, 3, 2], [1, 0, 3, 2])


def test_square_torus_3x3_genus():
    m = lattices.square_torus(3, require_checkerboard=False)
    assert m.counts() == (9, 18, 9)
    assert surface.euler_genus(m) == (0, 1)


def test_hex_torus_counts():
    m = lattices.hex_torus(3, 3)
    assert m.counts() == counts(m.alpha, m.sigma) == (18, 27, 9)
    assert surface.euler_genus(m) == (0, 1)


def test_cube_dual_has_octahedron_counts():
    d = surface.dual(lattices.cube())
    assert d.counts() == (6, 12, 8)
    assert surface.is_isomorphic(d, lattices.octahedron())
    assert surface.dual(lattices.tetrahedron()).counts() == (4, 6, 4)


def test_medial_of_cube_is_cuboctahedron():
    m, prov = surface.medial(lattices.cube())
    assert m.counts() == (12, 24, 14)
    kinds = [prov[f][0] for f in range(m.num_faces)]
    assert kinds.count("face") == 6 and kinds.count("vertex") == 8


def test_medial_of_two_valent_vertex_has_double_edge():
    m, _ = surface.medial(lattices.polygon(4))
    assert m.is_regular(4)
    assert not m.is_simple()


def test_medial_of_square_torus_3x3():
    m, _ = surface.medial(lattices.square_torus(3, require_checkerboard=False))
    assert m.counts() == (18, 36, 18)
    assert surface.euler_genus(m)[1] == 1


def test_medial_coloring_matches_provenance():
    m, prov = surface.medial(lattices.cube())
    col = surface.face_coloring(m, 2)
    for cls in col.classes():
        assert len({prov[f][0] for f in cls}) == 1


def test_coloring_errors():
    with pytest.raises(NotColorable) as exc:
        surface.face_coloring(lattices.dodecahedron(), 3)
    assert exc.value.witness["size"] == 5
    with pytest.raises(WrongValence):
        surface.face_coloring(lattices.cube(), 2)


def test_hex_torus_three_colorable():
    m = lattices.hex_torus(3, 3)
    col = surface.face_coloring(m, 3)
    assert surface.is_proper_coloring(m, col)
    assert sorted(len(c) for c in col.classes()) == [3, 3, 3]


def test_cycle_cut_dimensions():
    cyc, cut, b1 = surface.cycle_cut_spaces(lattices.tetrahedron())
    assert (cyc.dimension, cut.dimension, b1) == (3, 3, 0)
    m = lattices.square_torus(3, require_checkerboard=False)
    cyc, cut, b1 = surface.cycle_cut_spaces(m)
    assert cyc.dimension == 10
    assert cyc.dimension - b1 == 8
    assert b1 == 2


def test_cycle_space_equals_dual_cut_space_on_spheres():
    for m in [lattices.tetrahedron(), lattices.cube(), lattices.icosahedron(), lattices.prism(5)]:
        assert surface.cycle_space_is_dual_cut_space(m)
    assert not surface.cycle_space_is_dual_cut_space(lattices.square_torus(4))


@settings(max_examples=80, deadline=None)
@given(random_maps())
def test_counts_match_orbit_oracle(m):
    assert m.counts() == counts(m.alpha, m.sigma)
    chi, g = surface.euler_genus(m)
    assert chi % 2 == 0 and chi == 2 - 2 * g


@settings(max_examples=60, deadline=None)
@given(random_maps())
def test_dual_involution_and_genus(m):
    d = surface.dual(m)
    assert d.num_vertices == m.num_faces and d.num_faces == m.num_vertices
    assert surface.euler_genus(d) == surface.euler_genus(m)
    assert surface.is_isomorphic(surface.dual(d), m)


@settings(max_examples=60, deadline=None)
@given(random_maps())
def test_medial_properties(m):
    med, prov = surface.medial(m)
    assert med.is_regular(4)
    assert med.num_vertices == m.num_edges and med.num_edges == 2 * m.num_edges
    assert surface.euler_genus(med)[1] == surface.euler_genus(m)[1]
    col = surface.face_coloring(med, 2)
    for cls in col.classes():
        assert len({prov[f][0] for f in cls}) == 1
    for f in range(med.num_faces):
        kind, old = prov[f]
        size = m.face_size(old) if kind == "face" else m.valence(old)
        assert med.face_size(f) == size


@settings(max_examples=60, deadline=None)
@given(random_maps())
def test_cycles_orthogonal_to_cuts(m):
    cyc, cut, b1 = surface.cycle_cut_spaces(m)
    assert b1 == 2 * surface.euler_genus(m)[1]
    if cyc.dimension and cut.dimension:
        assert not ((cyc.vectors.astype(int) @ cut.vectors.T.astype(int)) % 2).any()


def test_betti_on_lattices():
    for m in named_maps():
        _, g = surface.euler_genus(m)
        assert surface.cycle_cut_spaces(m)[2] == 2 * g


def test_truncate_and_flip():
    t = surface.truncate(lattices.square_torus(2))
    assert t.is_regular(3)
    assert t.face_size_profile() == {4: 4, 8: 4}
    f = surface.flip_edge(lattices.hex_torus(3, 3), 0)
    assert surface.euler_genus(f)[1] == 1
    assert f.face_size_profile() == {5: 2, 6: 5, 7: 2}


def test_map_from_polygons_square():
    m = surface.map_from_polygons([[0, 1, 2, 3]])
    assert m.counts() == (4, 4, 2)
    assert m.face_size_profile() == {4: 2}
