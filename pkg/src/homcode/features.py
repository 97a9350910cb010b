"""Punctures, planar boundaries, twist detection and logical-density counting.

Every counting formula here is reported next to the logical-qubit count
obtained from GF(2) rank, so callers can see whether the two agree.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import pauli
from .errors import DegenerateParameters, Disconnected, DomainError, InvalidBoundarySpec, NoSuchGenerator
from .hsc import (
    FaceGenerators,
    HscCode,
    build_ktc,
    build_tcc,
    canonical_label_set,
    vertex_label_set,
    with_consistent_signs,
)
from .lattices import PatchLayout, ktc_patch_layout, mixed_strip, planar_tcc_triangle, tcc_patch_layout, tcc_triangle_region
from .surface import COLOR_NAMES, CombinatorialMap, FaceColoring, euler_genus

# ---------------------------------------------------------------------------
# punctures


@dataclass(frozen=True)
class PuncturedCode:
    base: HscCode
    removed: tuple[tuple[int, int], ...]
    code: HscCode

    def holes(self) -> Counter:
        """Hole registry keyed by ``(color, letter)`` of each removed
        generator (the letter is the generator's type)."""
        out: Counter = Counter()
        for f, slot in self.removed:
            color = self.base.coloring.colors[f] if self.base.coloring else None
            letters = set(self.base.faces[f].generators[slot])
            kind = letters.pop() if len(letters) == 1 else "mixed"
            out[(color, kind)] += 1
        return out

    def holes_by_color(self) -> Counter:
        out: Counter = Counter()
        for (color, _), h in self.holes().items():
            out[color] += h
        return out

    def params(self) -> pauli.CodeParams:
        return self.code.params()


def puncture(code: HscCode | PuncturedCode, face: int, slots: Sequence[int] | None = None) -> PuncturedCode:
    """Remove generators of ``face`` (all of them when ``slots`` is None).

    Slots refer to the base code, so repeated punctures use stable names.
    """
    if isinstance(code, PuncturedCode):
        base, removed = code.base, list(code.removed)
    else:
        base, removed = code, []
    if not 0 <= face < len(base.faces):
        raise NoSuchGenerator(f"no face {face}", witness={"face": face})
    available = range(len(base.faces[face].generators))
    slots = list(available) if slots is None else list(slots)
    for s in slots:
        if s not in available or (face, s) in removed:
            raise NoSuchGenerator(f"face {face} has no generator in slot {s}", witness={"face": face, "slot": s})
        removed.append((face, s))
    gone = set(removed)
    faces = []
    for fg in base.faces:
        keep = [i for i in range(len(fg.generators)) if (fg.face, i) not in gone]
        faces.append(FaceGenerators(fg.face, tuple(fg.generators[i] for i in keep), tuple(fg.sign(i) for i in keep) if fg.signs else ()))
    return PuncturedCode(base, tuple(removed), base.with_faces(faces))


@dataclass(frozen=True)
class HoleCount:
    per_hole_type: dict
    formula_total: int
    rank_delta: int
    exact_total: int

    @property
    def agrees(self) -> bool:
        return self.formula_total == self.rank_delta

    def to_dict(self) -> dict:
        return {
            "per_hole_type": self.per_hole_type,
            "formula_total": self.formula_total,
            "rank_delta": self.rank_delta,
            "exact_total": self.exact_total,
            "agrees": self.agrees,
        }


def hole_logical_count(p: PuncturedCode) -> HoleCount:
    """Per-color (and per-type) counts ``l = h - 1`` against rank.

    ``exact_total`` counts broken generator relations directly: generators
    of one type satisfy one relation per pair of colors that share it (one
    relation for the toric code, two for the color code), and a relation
    survives only if none of its faces is punctured.  For the color code the
    per-color formula undercounts by one when holes of a type sit on all
    three colors.
    """
    per = {}
    formula = 0
    by_type: dict = {}
    for (color, kind), h in sorted(p.holes().items(), key=lambda kv: (str(kv[0][0]), kv[0][1])):
        name = (COLOR_NAMES[color] if color is not None else "uncolored") + ("" if kind == "mixed" else f":{kind}")
        per[name] = h - 1
        formula += h - 1
        by_type.setdefault(kind, Counter())[color] += h
    is_tcc = p.base.family.startswith("TCC")
    relations = 2 if is_tcc else 1
    exact = sum(sum(c.values()) - min(len(c), relations) for c in by_type.values())
    rank_delta = p.params().k - p.base.params().k
    return HoleCount(per, formula, rank_delta, exact)


# ---------------------------------------------------------------------------
# planar boundaries


@dataclass(frozen=True)
class BoundaryPatch:
    family: str
    layout: PatchLayout
    code: HscCode

    @property
    def boundary_colors(self) -> list[str]:
        return [COLOR_NAMES[c] for c, _ in self.layout.runs]


def _parse_boundaries(family: str, spec) -> list[int] | int:
    """Boundary count, or a cyclic color sequence with distinct neighbours."""
    if isinstance(spec, int):
        return spec
    if isinstance(spec, str):
        spec = [c.strip() for c in spec.split(",")]
    unknown = [c for c in spec if isinstance(c, str) and c not in COLOR_NAMES]
    if unknown:
        raise InvalidBoundarySpec(f"unknown boundary color {unknown[0]!r}", witness=list(spec))
    colors = [COLOR_NAMES.index(c) if isinstance(c, str) else int(c) for c in spec]
    if any(colors[i] == colors[i - 1] for i in range(len(colors))):
        raise InvalidBoundarySpec("neighbouring boundaries must have different colors", witness=list(spec))
    return colors


def _same_cycle_up_to_renaming(a: list[int], b: list[int]) -> bool:
    if len(a) != len(b):
        return False
    for r in range(len(b)):
        rot = b[r:] + b[:r]
        rename: dict = {}
        if all(rename.setdefault(x, y) == y for x, y in zip(a, rot)) and len(set(rename.values())) == len(rename):
            return True
    return False


def build_boundary_patch(family: str, boundaries=4, size: int = 3) -> BoundaryPatch:
    """Planar patch with colored boundaries.

    ``KTC``: ``size x size`` square patch with an even number of alternating
    red/green boundaries, weight-two faces gluing each run.  ``TCC``:
    triangular 6.6.6 patch of size ``size`` (``size = 0`` is the 7-qubit
    code) with one boundary per color; asking for 4 boundaries removes the
    corner hexagon, which splits one boundary in two.

    ``boundaries`` is a count or a cyclic list of color names; a list must
    match the built patch up to rotation and renaming of colors.
    """
    wanted = _parse_boundaries(family, boundaries)
    count = wanted if isinstance(wanted, int) else len(wanted)
    if family == "KTC":
        if count % 2 or count < 4 or (not isinstance(wanted, int) and set(wanted) - {0, 1}):
            raise InvalidBoundarySpec("toric-code boundaries alternate red and green, at least 4 of them", witness=boundaries)
        layout = ktc_patch_layout(size, size, count)
    elif family == "TCC":
        if count == 3:
            layout = planar_tcc_triangle(size)
        elif count == 4 and size >= 1:
            layout = tcc_patch_layout(tcc_triangle_region(size) - {(0, 0)})
        else:
            raise InvalidBoundarySpec("color-code patches support 3 boundaries, or 4 when size >= 1", witness=boundaries)
    else:
        raise InvalidBoundarySpec(f"unknown patch family {family!r}", witness=family)
    if not isinstance(wanted, int) and not _same_cycle_up_to_renaming(wanted, [c for c, _ in layout.runs]):
        raise InvalidBoundarySpec("boundary sequence not realizable by this construction", witness={"wanted": boundaries, "built": [COLOR_NAMES[c] for c, _ in layout.runs]})
    return _patch_from_layout(family, layout)


def _patch_from_layout(family: str, layout: PatchLayout) -> BoundaryPatch:
    m = layout.map
    faces = []
    for f, c in enumerate(layout.colors):
        size = m.face_size(f)
        if c is None:
            gens = ()
        elif family == "KTC":
            gens = ("XZ"[c] * size,)
        else:
            gens = ("X" * size, "Z" * size)
        faces.append(FaceGenerators(f, gens))
    coloring = FaceColoring(tuple(layout.colors), 2 if family == "KTC" else 3)
    code = with_consistent_signs(HscCode(m, tuple(faces), coloring, f"{family}-patch"))
    return BoundaryPatch(family, layout, code)


def tcc_region_patch(region) -> BoundaryPatch:
    """Color-code patch on an arbitrary triangulated region of hexagons."""
    return _patch_from_layout("TCC", tcc_patch_layout(region))


def ktc_boundary_formula(v3: int) -> int:
    """Logical qubits of a toric-code patch from its 3-valent corners."""
    return v3 // 2 - 1


def tcc_boundary_formula(v2: int) -> int:
    """Logical qubits of a color-code patch from its 2-valent corners."""
    return v2 - 2


def boundary_logical_count(patch: BoundaryPatch) -> dict:
    profile = patch.code.map.valence_profile()
    runs = len(patch.layout.runs)
    if patch.family == "KTC":
        vertex_formula = ktc_boundary_formula(profile.get(3, 0))
        boundary_formula = runs // 2 - 1
    else:
        vertex_formula = tcc_boundary_formula(profile.get(2, 0))
        boundary_formula = runs - 2
    k = patch.code.params().k
    return {
        "family": patch.family,
        "boundaries": runs,
        "vertex_formula": vertex_formula,
        "boundary_formula": boundary_formula,
        "rank_k": k,
        "agree": vertex_formula == boundary_formula == k,
    }


# ---------------------------------------------------------------------------
# twists


@dataclass(frozen=True)
class TwistReport:
    label_defects: tuple[int, ...]
    valence_defects: tuple[int, ...]
    odd_faces: tuple[int, ...]
    bulk_valence: int
    note: str

    def to_dict(self) -> dict:
        return {
            "label_defects": list(self.label_defects),
            "valence_defects": list(self.valence_defects),
            "odd_faces": list(self.odd_faces),
            "bulk_valence": self.bulk_valence,
            "note": self.note,
        }


def twist_sites(m: CombinatorialMap | HscCode, faces: Sequence[FaceGenerators] | None = None) -> TwistReport:
    """Vertices breaking vertex regularity.

    With generators, vertices whose canonical label set differs from the
    most common one are listed.  Structurally, vertices of non-bulk valence
    and (on 3-valent bulk) odd faces are reported.
    """
    code = None
    if isinstance(m, HscCode):
        code, m = m, m.map
    elif faces is not None:
        code = HscCode(m, tuple(faces))
    labels: tuple[int, ...] = ()
    if code is not None:
        canon = [canonical_label_set(vertex_label_set(code, v)) for v in range(m.num_vertices)]
        bulk, _ = Counter(canon).most_common(1)[0]
        labels = tuple(v for v, c in enumerate(canon) if c != bulk)
    valence_count = Counter(m.valence(v) for v in range(m.num_vertices))
    bulk_valence = valence_count.most_common(1)[0][0]
    val_defects = tuple(v for v in range(m.num_vertices) if m.valence(v) != bulk_valence)
    odd = tuple(f for f in range(m.num_faces) if m.face_size(f) % 2) if bulk_valence == 3 else ()
    notes = []
    if bulk_valence == 4 and any(m.valence(v) == 3 for v in val_defects):
        notes.append("3-valent vertex in a 4-valent lattice")
    if odd:
        notes.append("odd face in a 3-valent lattice")
    return TwistReport(labels, val_defects, odd, bulk_valence, "; ".join(notes) or "none")


# ---------------------------------------------------------------------------
# logical density


def face_generator_cap(m: CombinatorialMap, f: int) -> int:
    """Most generators face ``f`` can carry: two only on even faces whose
    vertices are all at most 3-valent."""
    if m.face_size(f) % 2:
        return 1
    if any(m.valence(v) >= 4 for v in m.face_vertices(f)):
        return 1
    return 2


@dataclass(frozen=True)
class DensityReport:
    V: int
    E: int
    F: int
    genus: int
    f_avg: Fraction
    f_avg_formula: Fraction | None
    m_required: Fraction
    m_mean: Fraction
    finite_density: Fraction
    limiting_density: Fraction
    mixed_form: Fraction | None
    verdict: str
    family: str | None = None
    formula_vs_rank: dict | None = None

    def to_dict(self) -> dict:
        def fr(x):
            return None if x is None else str(x)

        return {
            "V": self.V,
            "E": self.E,
            "F": self.F,
            "genus": self.genus,
            "F_avg": fr(self.f_avg),
            "F_avg_formula": fr(self.f_avg_formula),
            "m_required": fr(self.m_required),
            "m_max": fr(self.m_mean),
            "density": fr(self.finite_density),
            "limiting_density": fr(self.limiting_density),
            "mixed_form": fr(self.mixed_form),
            "verdict": self.verdict,
            "family": self.family,
            "formula_vs_rank": self.formula_vs_rank,
        }


PERSISTENT = "persistent local logicals"
VANISHING = "vanishing"


def _witness_code(m: CombinatorialMap) -> HscCode | None:
    """The natural code on ``m``: toric code, color code, or uniform
    letters when neither applies; None if the generators do not commute."""
    if m.meta.get("family") == "mixed_strip":
        params = m.meta["params"]
        return mixed_strip_code(params["W"], params["H"])
    for build in (build_ktc, build_tcc):
        try:
            return build(m)
        except DomainError:
            pass
    code = uniform_letter_code(m)
    try:
        pauli.check_abelian(code.generators())
    except DomainError:
        return None
    return code


def density_analysis(
    m: CombinatorialMap, m_per_face: int | str = "max", code: HscCode | None = None
) -> DensityReport:
    """Count logical-qubit density ``1 - (sum of generators) / |V|``.

    ``m_per_face="max"`` gives each face its largest admissible generator
    count; an integer applies a uniform count.  The limiting density uses the
    intensive ratio ``|F|/|V| -> (|E| - |V|)/|V|`` of a large closed lattice
    of the same local structure.  A positive limit means local logical
    operators persist; a limit of zero or below means the generators can
    fix everything but the topological qubits.

    ``formula_vs_rank`` compares the count ``|V| - (generators)`` with the
    rank-derived ``k`` of ``code`` (by default the natural code on ``m``);
    the difference is the number of generator redundancies.
    """
    if not m.is_connected():
        raise Disconnected("density analysis needs a connected map")
    _, genus = euler_genus(m)
    V, E, F = m.counts()
    if m_per_face == "max":
        ms = [face_generator_cap(m, f) for f in range(F)]
    else:
        ms = [int(m_per_face)] * F
    total = sum(ms)
    f_avg = Fraction(2 * E, F)
    formula = None
    profile = m.valence_profile()
    if set(profile) == {3}:
        formula = favg_analysis(3, genus, V)
    elif set(profile) == {4}:
        formula = favg_analysis(4, genus, V)
    m_mean = Fraction(total, F)
    finite = 1 - Fraction(total, V)
    limiting = 1 - m_mean * Fraction(E - V, V)
    mixed = None
    if set(profile) <= {3, 4}:
        c = Fraction(profile.get(3, 0), F)
        mixed = 1 - 4 * m_mean / (f_avg + c)
    verdict = VANISHING if limiting <= 0 else PERSISTENT
    if code is None and m.num_vertices <= 200:
        code = _witness_code(m)
    comparison = None
    if code is not None:
        p = code.params()
        comparison = {
            "code": code.family,
            "formula_k": p.n - p.s_generators_given,
            "rank_k": p.k,
            "redundancies": p.redundancies,
        }
    return DensityReport(
        V, E, F, genus, f_avg, formula, Fraction(V, F), m_mean, finite, limiting, mixed, verdict,
        m.meta.get("family"), comparison,
    )


def favg_analysis(family: int, genus: int, V: int) -> Fraction:
    """Average face size of a closed ``family``-valent map from Euler's
    formula: ``4V/(2 - 2g + V)`` or ``3V/(2 - 2g + V/2)``."""
    if family not in (3, 4):
        raise DegenerateParameters("family must be 3- or 4-valent", witness={"family": family})
    if V <= 0 or genus < 0:
        raise DegenerateParameters("need V > 0 and genus >= 0", witness={"V": V, "genus": genus})
    if family == 3:
        if V % 2:
            raise DegenerateParameters("a 3-valent map has an even number of vertices", witness={"V": V})
        faces = Fraction(V, 2) + 2 - 2 * genus
        num = 3 * V
    else:
        faces = Fraction(V) + 2 - 2 * genus
        num = 4 * V
    if faces <= 0:
        raise DegenerateParameters("Euler's formula leaves no faces for these parameters", witness={"V": V, "genus": genus})
    return num / faces


# ---------------------------------------------------------------------------
# explicit codes exhibiting persistent logicals


def uniform_letter_code(m: CombinatorialMap) -> HscCode:
    """Every face carries its maximal number of uniform-letter generators:
    ``X...X`` and ``Z...Z`` on two-generator faces, ``X...X`` otherwise.

    Uniform letters commute whenever faces overlap on an even number of
    vertices, as adjacent faces of a 3-valent map do.
    """
    faces = []
    for f in range(m.num_faces):
        size = m.face_size(f)
        gens = ("X" * size, "Z" * size) if face_generator_cap(m, f) == 2 else ("X" * size,)
        faces.append(FaceGenerators(f, gens))
    return with_consistent_signs(HscCode(m, tuple(faces), None, "uniform"))


def mixed_strip_code(W: int, H: int) -> HscCode:
    """Toric code on the mixed strip: squares keep their checkerboard letters
    and each fused hexagon carries the product of its two former squares
    (``Y`` on the two shared corners)."""
    m = mixed_strip(W, H)
    labels = m.meta["_vertex_labels"]
    faces = []
    for f in range(m.num_faces):
        corners = [labels[v] for v in m.face_vertices(f)]
        if len(corners) == 4:
            i0 = min(i for i, _ in corners if (i + 1) % W in {c[0] for c in corners})
            j0 = min(j for _, j in corners if (j + 1) % H in {c[1] for c in corners})
            letters = "XZ"[(i0 + j0) % 2] * 4
        else:
            x = next(i for i, _ in corners if i % 2)
            letters = "".join("Y" if i == x else ("X" if i == (x - 1) % W else "Z") for i, _ in corners)
        faces.append(FaceGenerators(f, (letters,)))
    return with_consistent_signs(HscCode(m, tuple(faces), None, "mixed-strip"))
