from __future__ import annotations

from fractions import Fraction

import pytest

from homcode import features, hsc, lattices, pauli, surface
from homcode.errors import DegenerateParameters, InvalidBoundarySpec, NoSuchGenerator
from homcode.features import PERSISTENT, VANISHING


def faces_of_color(code, color):
    return [f for f, c in enumerate(code.coloring.colors) if c == color]


def punch_many(code, faces, slots=None):
    p = code
    for f in faces:
        p = features.puncture(p, f, slots)
    return p


def test_ktc_puncture_examples():
    code = hsc.build_ktc(lattices.square_torus(4))
    red, green = faces_of_color(code, 0), faces_of_color(code, 1)
    one = features.puncture(code, red[0])
    assert one.params().k == 2
    two = features.puncture(one, red[1])
    assert two.params().k == 3
    mixed = features.puncture(one, green[0])
    assert mixed.params().k == 2


def test_hole_counts_ktc_registries():
    code = hsc.build_ktc(lattices.square_torus(4))
    red, green = faces_of_color(code, 0), faces_of_color(code, 1)
    for hr in range(4):
        for hg in range(4):
            if hr + hg == 0:
                continue
            p = punch_many(code, red[:hr] + green[:hg])
            count = features.hole_logical_count(p)
            expected = max(hr - 1, 0) + max(hg - 1, 0)
            assert count.formula_total == count.rank_delta == count.exact_total == expected


def test_hole_count_red3_green1():
    code = hsc.build_ktc(lattices.square_torus(4))
    p = punch_many(code, faces_of_color(code, 0)[:3] + faces_of_color(code, 1)[:1])
    count = features.hole_logical_count(p)
    assert count.per_hole_type == {"red:X": 2, "green:Z": 0}
    assert p.params().k == 2 * 1 + 2


def test_hole_count_without_holes():
    code = hsc.build_ktc(lattices.square_torus(4))
    count = features.hole_logical_count(features.PuncturedCode(code, (), code))
    assert count.per_hole_type == {} and count.formula_total == count.rank_delta == 0


def test_tcc_hole_counts():
    code = hsc.build_tcc(lattices.hex_torus(6, 6))
    red = faces_of_color(code, 0)
    p = punch_many(code, red[:2], [0])
    count = features.hole_logical_count(p)
    assert count.per_hole_type == {"red:X": 1}
    assert count.rank_delta == 1 and count.agrees


def test_tcc_three_color_holes_need_exact_count():
    code = hsc.build_tcc(lattices.hex_torus(6, 6))
    p = punch_many(code, [faces_of_color(code, c)[0] for c in range(3)], [0])
    count = features.hole_logical_count(p)
    assert count.formula_total == 0
    assert count.rank_delta == count.exact_total == 1


def test_puncture_errors():
    code = hsc.build_ktc(lattices.square_torus(4))
    with pytest.raises(NoSuchGenerator):
        features.puncture(code, 99)
    with pytest.raises(NoSuchGenerator):
        features.puncture(code, 0, [1])
    once = features.puncture(code, 0)
    with pytest.raises(NoSuchGenerator):
        features.puncture(once, 0)


@pytest.mark.parametrize(
    "family,boundaries,size,k",
    [("KTC", 4, 3, 1), ("KTC", 6, 3, 2), ("KTC", 8, 4, 3), ("TCC", 3, 0, 1), ("TCC", 3, 2, 1), ("TCC", 4, 1, 2)],
)
def test_boundary_patches(family, boundaries, size, k):
    patch = features.build_boundary_patch(family, boundaries, size)
    report = features.boundary_logical_count(patch)
    assert report["rank_k"] == report["vertex_formula"] == report["boundary_formula"] == k
    assert len(patch.boundary_colors) == boundaries
    assert all(patch.boundary_colors[i] != patch.boundary_colors[i - 1] for i in range(boundaries))
    m = patch.code.map
    assert surface.euler_genus(m)[1] == 0


def test_boundary_vertex_formulas():
    assert features.ktc_boundary_formula(4) == 1
    assert features.ktc_boundary_formula(6) == 2
    assert features.tcc_boundary_formula(3) == 1
    assert features.tcc_boundary_formula(4) == 2


def test_boundary_color_sequence_spec():
    patch = features.build_boundary_patch("KTC", "red,green,red,green", 3)
    assert features.boundary_logical_count(patch)["rank_k"] == 1


def test_triangle_code_parameters():
    small = features.build_boundary_patch("TCC", 3, 0).code
    assert (small.n, small.params().k, pauli.min_distance(small.generators(), 3)) == (7, 1, 3)
    mid = features.build_boundary_patch("TCC", 3, 1).code
    assert (mid.n, mid.params().k) == (19, 1)


@pytest.mark.parametrize("spec", [5, 2, "red,red,green,green", "red,purple", "red,green,blue,green"])
def test_invalid_ktc_boundaries(spec):
    with pytest.raises(InvalidBoundarySpec):
        features.build_boundary_patch("KTC", spec, 3)


def test_invalid_tcc_boundaries():
    with pytest.raises(InvalidBoundarySpec):
        features.build_boundary_patch("TCC", 6, 2)
    with pytest.raises(InvalidBoundarySpec):
        features.build_boundary_patch("TCC", 4, 0)


def test_twist_sites():
    ktc = hsc.build_ktc(lattices.square_torus(4))
    report = features.twist_sites(ktc)
    assert report.label_defects == () and report.valence_defects == () and report.note == "none"
    merged = surface.delete_edges(lattices.square_torus(4), [0])
    report = features.twist_sites(merged)
    assert len(report.valence_defects) == 2
    assert all(merged.valence(v) == 3 for v in report.valence_defects)
    report = features.twist_sites(lattices.hex_torus_defect(3))
    sizes = sorted(lattices.hex_torus_defect(3).face_size(f) for f in report.odd_faces)
    assert sizes == [5, 5, 7, 7]


def test_twist_label_defect():
    code = hsc.build_ktc(lattices.square_torus(4))
    f = code.faces[0]
    flipped = hsc.FaceGenerators(0, ("ZZ" + f.generators[0][2:],))
    report = features.twist_sites(code.map, (flipped,) + code.faces[1:])
    assert report.label_defects


def test_density_hex_torus():
    for m in [lattices.hex_torus(3, 3), lattices.hex_torus(6, 6)]:
        report = features.density_analysis(m, 2)
        assert report.finite_density == 0 and report.limiting_density == 0
        assert report.verdict == VANISHING
    one = features.density_analysis(lattices.hex_torus(3, 3), 1)
    assert one.verdict == PERSISTENT and one.finite_density == Fraction(1, 2)


def test_density_persistent_families():
    for m in [lattices.torus_31212(3), lattices.hex_torus_defect(3), lattices.mixed_strip(4, 4), lattices.mixed_strip(6, 8)]:
        report = features.density_analysis(m)
        assert report.verdict == PERSISTENT
        assert report.m_required > report.m_mean
    strip = features.density_analysis(lattices.mixed_strip(4, 4))
    assert strip.m_mean == 1 and strip.m_required == Fraction(8, 7)
    assert strip.mixed_form == strip.limiting_density == Fraction(1, 8)


def test_density_refinement_keeps_vanishing():
    for small, big in [(lattices.square_torus(4), lattices.square_torus(8)), (lattices.torus_488(2), lattices.torus_488(4))]:
        assert features.density_analysis(small).verdict == features.density_analysis(big).verdict == VANISHING


def test_density_formula_vs_rank():
    report = features.density_analysis(lattices.hex_torus(3, 3)).formula_vs_rank
    assert report == {"code": "TCC1", "formula_k": 0, "rank_k": 4, "redundancies": 4}


def test_low_weight_logicals_in_persistent_codes():
    code = features.uniform_letter_code(lattices.torus_31212(3))
    assert code.params().k == 20
    assert pauli.min_distance(code.generators(), 2) == 2
    code = features.uniform_letter_code(lattices.hex_torus_defect(3))
    assert pauli.min_distance(code.generators(), 2) == 2
    strip = features.mixed_strip_code(4, 4)
    assert strip.params().k == 3
    assert pauli.min_distance(strip.generators(), 3) == 3


def test_favg_examples():
    assert features.favg_analysis(4, 1, 16) == 4
    assert features.favg_analysis(4, 1, 100) == 4
    assert features.favg_analysis(3, 1, 18) == 6
    assert features.favg_analysis(4, 0, 6) == 3
    m = lattices.hex_torus(3, 3)
    assert Fraction(2 * m.num_edges, m.num_faces) == 6
    o = lattices.octahedron()
    assert Fraction(2 * o.num_edges, o.num_faces) == 3
    with pytest.raises(DegenerateParameters):
        features.favg_analysis(3, 1, 7)
    with pytest.raises(DegenerateParameters):
        features.favg_analysis(4, 3, 2)


def test_favg_formula_matches_counts_on_lattices():
    for m in [lattices.square_torus(4), lattices.square_torus(6), lattices.hex_torus(3, 3), lattices.hex_torus(6, 3), lattices.torus_488(2), lattices.cube(), lattices.octahedron()]:
        valence = m.valence(0)
        _, g = surface.euler_genus(m)
        assert features.favg_analysis(valence, g, m.num_vertices) == Fraction(2 * m.num_edges, m.num_faces)
