"""One test per acceptance criterion, each under its stated time bound.

Expected values marked as oracles are recomputed here by independent means
(orbit tracing, integer-bitmask GF(2) rank, exhaustive Pauli enumeration)
rather than read back from the library.
"""

from __future__ import annotations

import itertools
import time
from contextlib import contextmanager
from fractions import Fraction

import numpy as np
import pytest

from homcode import features, hsc, lattices, pauli, surface
from homcode.errors import CountChangingTransform
from homcode.hsc import canonical_label_set
from homcode.pauli import PauliWord
from oracle import brute_force_distance, brute_force_k, counts, rank2


@contextmanager
def within(seconds):
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    assert elapsed < seconds, f"took {elapsed:.2f}s, bound {seconds}s"


def test_criterion_01_transform_invariants():
    maps = [
        lattices.tetrahedron(),
        lattices.cube(),
        lattices.octahedron(),
        lattices.square_torus(2),
        lattices.square_torus(4),
        lattices.hex_torus(3, 3),
    ]
    with within(1.0):
        for m in maps:
            genus = surface.euler_genus(m)
            d = surface.dual(m)
            assert surface.is_isomorphic(surface.dual(d), m)
            assert surface.euler_genus(d) == genus
            med, prov = surface.medial(m)
            assert surface.euler_genus(med) == genus
            assert med.is_regular(4)
            assert counts(med.alpha, med.sigma) == (m.num_edges, 2 * m.num_edges, m.num_vertices + m.num_faces)
            col = surface.face_coloring(med, 2)
            classes = [{prov[f][0] for f in cls} for cls in col.classes()]
            assert sorted(map(sorted, classes)) == [["face"], ["vertex"]]


def test_criterion_02_homology():
    spheres = [lattices.tetrahedron(), lattices.cube(), lattices.octahedron(), lattices.icosahedron(), lattices.dodecahedron(), lattices.prism(6)]
    tori = [lattices.square_torus(2), lattices.square_torus(4), lattices.hex_torus(3, 3), lattices.hex_torus(6, 3), lattices.torus_488(2), lattices.torus_31212(3), lattices.mixed_strip(4, 4)]
    with within(1.0):
        for m in spheres:
            assert surface.euler_genus(m)[1] == 0
            assert surface.cycle_cut_spaces(m)[2] == 0
            assert surface.cycle_space_is_dual_cut_space(m)
        for m in tori:
            assert surface.euler_genus(m)[1] == 1
            assert surface.cycle_cut_spaces(m)[2] == 2


def test_criterion_03_ktc_parameters():
    with within(30.0):
        small = hsc.build_ktc(lattices.square_torus(2))
        p = small.params()
        d = pauli.min_distance(small.generators(), 4)
        assert (p.n, p.k, d) == (4, 2, 2)
        words = [str(g) for g in small.generators()]
        assert brute_force_k(words, 4) == 2 and brute_force_distance(words, 3) == 2

        big = hsc.build_ktc(lattices.square_torus(4))
        p = big.params()
        genus = surface.euler_genus(big.map)[1]
        assert p.k == 2 * genus == 2
        assert brute_force_k([str(g) for g in big.generators()], 16) == 2
        d = pauli.min_distance(big.generators(), 4)
        assert (p.n, p.k, d) == (16, 2, 4)
        # no logical of weight <= 3, independently
        assert brute_force_distance([str(g) for g in big.generators()], 3) is None


def test_criterion_04_tcc_parameters():
    with within(5.0):
        m = lattices.hex_torus(3, 3)
        assert m.num_vertices == 18
        genus = surface.euler_genus(m)[1]
        for cls in (1, 2, 3):
            code = hsc.build_tcc(m, cls)
            assert code.params().k == 4 * genus == 4
            assert brute_force_k([str(g) for g in code.generators()], 18) == 4
        code = hsc.build_tcc(lattices.torus_488(2))
        assert code.params().k == 4
        assert brute_force_k([str(g) for g in code.generators()], code.n) == 4


def test_criterion_05_label_classes():
    with within(5.0):
        ktc = hsc.enumerate_label_classes(4, 1)
        assert len(ktc) == 1 and ktc[0] == canonical_label_set("{X,Z,X,Z}")
        three = hsc.enumerate_label_classes(3, 2)
        reps = ["{{X,Z},{X,Z},{X,Z}}", "{{X,Z},{X,Z},{X,Y}}", "{{X,Z},{X,Y},{Z,Y}}"]
        assert len(three) == 3
        assert set(three) == {canonical_label_set(r) for r in reps}
        for gens in (1, 2):
            assert hsc.enumerate_label_classes(5, gens) == []
        assert hsc.enumerate_label_classes(4, 2) == []


def full_params(code):
    p = code.params()
    return (p.n, p.s_independent, p.k, pauli.min_distance(code.generators(), 4))


def test_criterion_06_equivalence_transforms():
    with within(60.0):
        m = lattices.square_torus(4)
        code = hsc.build_ktc(m)
        base = full_params(code)
        assert base == (16, 14, 2, 4)
        for perm in itertools.permutations("XYZ"):
            mapping = dict(zip("XYZ", perm))
            assert full_params(hsc.apply_label_transform(code, hsc.LetterPermutation(mapping))) == base
        side = surface.vertex_bipartition(m)
        half = frozenset(v for v in range(m.num_vertices) if side[v] == 0)
        lwpm = hsc.apply_label_transform(code, hsc.Rotation(1, half))
        assert {fg.generators[0] for fg in lwpm.faces} == {"XZXZ", "ZXZX"}
        assert full_params(lwpm) == base
        with pytest.raises(CountChangingTransform):
            hsc.apply_label_transform(code, hsc.LabelReplacement(0, hsc.LabelSet.parse("{Z,Z,Z,Z}")))


def test_criterion_07_punctures():
    with within(5.0):
        code = hsc.build_ktc(lattices.square_torus(4))
        red = [f for f, c in enumerate(code.coloring.colors) if c == 0]
        green = [f for f, c in enumerate(code.coloring.colors) if c == 1]
        first = features.puncture(code, red[0])
        assert first.params().k == code.params().k
        previous = first.params().k
        p = first
        for f in red[1:3]:
            p = features.puncture(p, f)
            assert p.params().k == previous + 1
            previous = p.params().k
        for hr in range(4):
            for hg in range(4):
                if hr + hg == 0:
                    continue
                p = code
                for f in red[:hr] + green[:hg]:
                    p = features.puncture(p, f)
                count = features.hole_logical_count(p)
                assert count.formula_total == count.rank_delta == max(hr - 1, 0) + max(hg - 1, 0)


def test_criterion_08_boundaries():
    with within(5.0):
        for b, k in [(4, 1), (6, 2)]:
            patch = features.build_boundary_patch("KTC", b, 3)
            report = features.boundary_logical_count(patch)
            v3 = patch.code.map.valence_profile().get(3, 0)
            assert report["rank_k"] == k
            assert report["vertex_formula"] == k and report["boundary_formula"] == k
            assert report["rank_k"] == brute_force_k([str(g) for g in patch.code.generators()], patch.code.n)
            assert v3 == b
            assert v3 // 2 - 1 == b // 2 - 1 == k
        tri = features.build_boundary_patch("TCC", 3, 1)
        report = features.boundary_logical_count(tri)
        v2 = tri.code.map.valence_profile().get(2, 0)
        assert v2 == 3
        assert report["vertex_formula"] == v2 - 2 == 1
        assert report["rank_k"] == brute_force_k([str(g) for g in tri.code.generators()], tri.code.n) == 1


def test_criterion_09_density_exclusions():
    with within(30.0):
        odd = features.density_analysis(lattices.hex_torus_defect(3))
        strip = features.density_analysis(lattices.mixed_strip(4, 4))
        for report in (odd, strip):
            assert report.verdict == "persistent local logicals"
            assert report.m_required > report.m_mean
        hexes = features.density_analysis(lattices.hex_torus(3, 3), 2)
        assert hexes.finite_density == 0 and hexes.limiting_density == 0

        code = features.uniform_letter_code(lattices.hex_torus_defect(3))
        low = pauli.find_logical(code.generators(), 2)
        assert low is not None and low.weight <= 2
        assert brute_force_distance([str(g) for g in code.generators()], 2) == low.weight
        strip_code = features.mixed_strip_code(4, 4)
        assert pauli.min_distance(strip_code.generators(), 3) == 3
        assert brute_force_distance([str(g) for g in strip_code.generators()], 3) == 3


def test_criterion_10_favg():
    with within(1.0):
        cases = [(lattices.square_torus(4), 4, 4), (lattices.hex_torus(3, 3), 3, 6), (lattices.octahedron(), 4, 3)]
        for m, valence, expected in cases:
            genus = surface.euler_genus(m)[1]
            formula = features.favg_analysis(valence, genus, m.num_vertices)
            V, E, F = counts(m.alpha, m.sigma)
            assert formula == Fraction(2 * E, F) == expected
        assert lattices.hex_torus(3, 3).num_vertices == 18


def test_criterion_11_excitations():
    with within(5.0):
        ktc = hsc.build_ktc(lattices.square_torus(4))
        for q in range(ktc.n):
            assert len(hsc.excitations(ktc, PauliWord.from_letters(ktc.n, {q: "X"}))) == 2
        assert hsc.excitations(ktc, PauliWord.identity(ktc.n)) == []
        codes = [ktc, hsc.build_ktc(lattices.square_torus(2))]
        codes += [hsc.build_tcc(lattices.hex_torus(3, 3), c) for c in (1, 2, 3)]
        codes.append(hsc.build_tcc(lattices.torus_488(2)))
        rng = np.random.default_rng(2024)
        for code in codes:
            gens = code.generators()
            for _ in range(100):
                mask = rng.integers(0, 2, len(gens))
                element = pauli.stabilizer_element(gens, mask)
                assert not pauli.syndrome(gens, element).any()
                assert not hsc.excitations(code, element)
                assert rank2(np.vstack([pauli.as_matrix(gens), element.vector()])) == code.params().s_independent
