"""Homological stabilizer codes: label sets, admissibility rules, code
construction, classification and label-set equivalence transforms.

Qubits sit on vertices and every face carries zero, one or two generators.
A generator is stored as a letter string aligned with the face's corners in
facial order (``map.faces[f]``).  The rules checked here:

* rule I     -- generators live exactly on faces (at most two per face, two
  only on even faces with differing letters at each corner);
* commutation-- all generators commute and never multiply to ``-I``;
* rule IIA   -- every qubit is checked by at least two different letters;
* rule III   -- all vertices carry equivalent label sets;
* rule II    -- logical operators are homologically non-trivial, tested
  through the logical-qubit count and a small distance floor.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field, replace
from itertools import permutations, product
from typing import Sequence, Union

import numpy as np

from . import pauli
from .errors import (
    CountChangingTransform,
    Disconnected,
    Inadmissible,
    LengthMismatch,
    MalformedLabelSet,
    MinusIdentityInGroup,
    NonAbelian,
    NotColorable,
    ParseError,
    WrongValence,
)
from .pauli import CodeParams, PauliWord
from .surface import COLOR_NAMES, CombinatorialMap, FaceColoring, euler_genus, face_coloring

PAULI_LETTERS = "XYZ"

# ---------------------------------------------------------------------------
# label sets

Entry = Union[str, tuple]


@dataclass(frozen=True)
class LabelSet:
    """Cyclic list of the letters a vertex receives from its faces, in
    rotation order.  Entries are single letters or letter pairs."""

    entries: tuple

    def __post_init__(self):
        if not self.entries:
            raise MalformedLabelSet("a label set needs at least one entry", witness=[])
        for e in self.entries:
            letters = (e,) if isinstance(e, str) else tuple(e)
            if not 1 <= len(letters) <= 2 or any(c not in PAULI_LETTERS for c in letters):
                raise MalformedLabelSet(f"bad label entry {e!r}", witness=e)
            if len(letters) == 2 and letters[0] == letters[1]:
                raise MalformedLabelSet(f"pair entry {e!r} repeats a letter", witness=e)

    @classmethod
    def parse(cls, text: str) -> "LabelSet":
        """Read ``{X,Z,X,Z}`` or ``{{X,Z},{X,Y},{Z,Y}}``."""
        t = text.replace(" ", "")
        if not (t.startswith("{") and t.endswith("}")):
            raise ParseError(f"label set must be braced: {text!r}")
        body = t[1:-1]
        entries = []
        i = 0
        while i < len(body):
            if body[i] == "{":
                j = body.index("}", i)
                entries.append(tuple(body[i + 1 : j].split(",")))
                i = j + 2
            else:
                j = body.find(",", i)
                j = len(body) if j < 0 else j
                entries.append(body[i:j])
                i = j + 1
        return cls(tuple(entries))

    def __str__(self) -> str:
        parts = [e if isinstance(e, str) else "{" + ",".join(e) + "}" for e in self.entries]
        return "{" + ",".join(parts) + "}"

    def letters(self) -> Counter:
        out: Counter = Counter()
        for e in self.entries:
            out.update((e,) if isinstance(e, str) else e)
        return out


def _as_tuples(ls: LabelSet) -> tuple:
    return tuple((e,) if isinstance(e, str) else tuple(e) for e in ls.entries)


def _from_tuples(entries) -> LabelSet:
    return LabelSet(tuple(e[0] if len(e) == 1 else tuple(e) for e in entries))


def canonical_label_set(ls: LabelSet | str) -> LabelSet:
    """Lexicographic minimum over letter permutations, cyclic rotations and
    reordering inside each pair.

    Pairs are compared as unordered: the two generators on a face are an
    unordered set, so the order inside one entry carries no information.
    """
    if isinstance(ls, str):
        ls = LabelSet.parse(ls)
    base = _as_tuples(ls)
    best = None
    for perm in permutations(PAULI_LETTERS):
        rename = dict(zip(PAULI_LETTERS, perm))
        mapped = [tuple(sorted(rename[c] for c in e)) for e in base]
        for r in range(max(len(mapped), 1)):
            cand = tuple(mapped[r:] + mapped[:r])
            if best is None or cand < best:
                best = cand
    return _from_tuples(best or ())


def label_sets_equivalent(a: LabelSet | str, b: LabelSet | str) -> bool:
    return canonical_label_set(a) == canonical_label_set(b)


def _locally_consistent(entries: Sequence[tuple]) -> bool:
    """Commutation and rule IIA around one isolated vertex.

    Faces that are not neighbours in the rotation meet only at this vertex,
    so their generators must agree letter for letter there.  Around a 2- or
    3-valent vertex every pair of faces is adjacent.
    """
    v = len(entries)
    for i in range(v):
        for j in range(i + 1, v):
            if j - i in (1, v - 1):
                continue
            if any(a != b for a in entries[i] for b in entries[j]):
                return False
    letters = {c for e in entries for c in e}
    return len(letters) >= 2


def enumerate_label_classes(valence: int, gens_per_face: int) -> list[LabelSet]:
    """Exhaustive list of canonical label sets for one vertex."""
    if gens_per_face == 1:
        choices = [(c,) for c in PAULI_LETTERS]
    elif gens_per_face == 2:
        choices = [p for p in permutations(PAULI_LETTERS, 2)]
    else:
        raise ValueError("a face holds one or two generators")
    found = set()
    for entries in product(choices, repeat=valence):
        if _locally_consistent(entries):
            found.add(canonical_label_set(_from_tuples(entries)))
    return sorted(found, key=_as_tuples)


def admissible_label_classes(valence: int, gens_per_face: int) -> list[LabelSet]:
    """Label classes that can tile a closed surface with vanishing logical
    density.  Local consistency alone leaves 3-valent single-generator and
    2-valent sets; the first have more faces than independent constraints
    need to fix the logical count (see :func:`features.density_analysis`),
    the second only close up as a single polygon."""
    if valence == 4 and gens_per_face == 1 or valence == 3 and gens_per_face == 2:
        return enumerate_label_classes(valence, gens_per_face)
    return []


# ---------------------------------------------------------------------------
# codes


@dataclass(frozen=True)
class FaceGenerators:
    """Generators of one face as letter strings in facial corner order.

    ``signs`` is empty (all +1) or holds one sign per generator.
    """

    face: int
    generators: tuple[str, ...] = ()
    signs: tuple[int, ...] = ()

    def sign(self, slot: int) -> int:
        return self.signs[slot] if self.signs else 1


@dataclass(frozen=True)
class HscCode:
    map: CombinatorialMap
    faces: tuple[FaceGenerators, ...]
    coloring: FaceColoring | None = None
    family: str = "custom"
    meta: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def n(self) -> int:
        return self.map.num_vertices

    def slots(self) -> list[tuple[int, int]]:
        """``(face, slot)`` for each generator, in generator order."""
        return [(fg.face, i) for fg in self.faces for i in range(len(fg.generators))]

    def generator(self, face: int, slot: int) -> PauliWord:
        fg = self.faces[face]
        corners = self.map.faces[face]
        w = PauliWord.from_letters(self.n, {self.map.vertex_of[d]: c for d, c in zip(corners, fg.generators[slot])})
        w.sign = fg.sign(slot)
        return w

    def generators(self) -> list[PauliWord]:
        return [self.generator(f, s) for f, s in self.slots()]

    def params(self) -> CodeParams:
        return pauli.stabilizer_params(self.generators(), self.n)

    def label_set(self, v: int) -> LabelSet:
        return vertex_label_set(self, v)

    def with_faces(self, faces: Sequence[FaceGenerators], family: str | None = None) -> "HscCode":
        return replace(self, faces=tuple(faces), family=self.family if family is None else family)

    def to_record(self) -> dict:
        from .lattices import map_to_record

        rec = map_to_record(self.map)
        rec["faces"] = []
        for fg in self.faces:
            item = {"face": fg.face, "gens": list(fg.generators)}
            if any(s == -1 for s in fg.signs):
                item["signs"] = list(fg.signs)
            rec["faces"].append(item)
        rec["family"] = self.family
        if self.coloring is not None:
            rec["colors"] = [None if c is None else COLOR_NAMES[c] for c in self.coloring.colors]
        return rec


def code_from_record(record: dict) -> HscCode:
    from .lattices import record_to_map

    m = record_to_map(record)
    if "faces" not in record:
        raise ParseError("code JSON needs a 'faces' list")
    given: dict[int, FaceGenerators] = {}
    for item in record["faces"]:
        try:
            f = int(item["face"])
            given[f] = FaceGenerators(f, tuple(str(g) for g in item["gens"]), tuple(int(x) for x in item.get("signs", ())))
        except (KeyError, TypeError, ValueError, AttributeError) as exc:
            raise ParseError(f"malformed face entry {item!r}: {exc}") from None
    faces = tuple(given.get(f, FaceGenerators(f)) for f in range(m.num_faces))
    coloring = None
    if record.get("colors") is not None:
        colors = tuple(None if c is None else COLOR_NAMES.index(c) for c in record["colors"])
        coloring = FaceColoring(colors, 3 if 2 in colors else 2)
    return HscCode(m, faces, coloring, record.get("family", "custom"))


def with_consistent_signs(code: HscCode) -> HscCode:
    """Choose generator signs so that the stabilizer group avoids ``-I``."""
    signs = pauli.consistent_signs(code.generators(), code.n)
    it = iter(signs)
    faces = []
    for fg in code.faces:
        s = tuple(next(it) for _ in fg.generators)
        faces.append(FaceGenerators(fg.face, fg.generators, s if -1 in s else ()))
    return code.with_faces(faces)


def vertex_label_set(code: HscCode, v: int) -> LabelSet:
    """Entries in rotation order, starting at the incident face with the
    smallest id; faces without generators contribute nothing."""
    m = code.map
    corners = []
    for d in m.vertices[v]:
        f = m.face_of[d]
        gens = code.faces[f].generators
        if not gens:
            continue
        pos = m.faces[f].index(d)
        letters = tuple(g[pos] for g in gens)
        corners.append((f, letters))
    if not corners:
        return LabelSet(())
    start = min(range(len(corners)), key=lambda i: corners[i][0])
    ordered = corners[start:] + corners[:start]
    return _from_tuples([c[1] for c in ordered])


def _letters_at(code: HscCode, v: int) -> set[str]:
    return set(vertex_label_set(code, v).letters())


def check_admissibility(
    m: CombinatorialMap,
    faces: Sequence[FaceGenerators] | Sequence[Sequence[str]],
    *,
    coloring: FaceColoring | None = None,
    family: str = "custom",
    distance_floor: int = 2,
    bulk_qubits: int = 16,
) -> HscCode:
    """Return the code if it satisfies rules I, IIA, III and II, otherwise
    raise :class:`Inadmissible` naming the rule and a witness.

    Rule II is checked as: ``k`` equals ``2 * genus`` times the number of
    generators per face, and on instances with at least ``bulk_qubits``
    qubits no logical operator has weight ``<= distance_floor``.
    """
    faces = tuple(fg if isinstance(fg, FaceGenerators) else FaceGenerators(i, tuple(fg)) for i, fg in enumerate(faces))
    if len(faces) != m.num_faces or any(fg.face != i for i, fg in enumerate(faces)):
        raise Inadmissible("I", "one generator entry per face is required, in face order", witness={"faces": m.num_faces, "given": len(faces)})
    for fg in faces:
        f = fg.face
        size = m.face_size(f)
        if len(fg.generators) > 2:
            raise Inadmissible("I", f"face {f} holds more than two generators", witness={"face": f})
        for g in fg.generators:
            if len(g) != size or any(c not in PAULI_LETTERS for c in g):
                raise Inadmissible("I", f"generator {g!r} does not cover face {f} of size {size}", witness={"face": f, "generator": g})
        if fg.generators and len(set(m.face_vertices(f))) != size:
            raise Inadmissible("I", f"face {f} meets a vertex twice", witness={"face": f})
        if len(fg.generators) == 2:
            a, b = fg.generators
            clash = [i for i in range(size) if a[i] == b[i]]
            if size % 2 or clash:
                raise Inadmissible("I", f"the two generators of face {f} must differ at every corner of an even face", witness={"face": f})
    code = HscCode(m, faces, coloring, family)
    gens = code.generators()
    slots = code.slots()
    try:
        pauli.check_abelian(gens)
        pauli.check_no_minus_identity(gens, code.n)
    except NonAbelian as exc:
        i, j = exc.witness
        raise Inadmissible("commutation", f"generators on faces {slots[i][0]} and {slots[j][0]} anticommute", witness={"generators": [list(slots[i]), list(slots[j])]}) from None
    except MinusIdentityInGroup as exc:
        raise Inadmissible("commutation", "the generators multiply to -I", witness={"generators": [list(slots[i]) for i in exc.witness]}) from None
    for v in range(m.num_vertices):
        if len(_letters_at(code, v)) < 2:
            raise Inadmissible("IIA", f"vertex {v} is checked by fewer than two letter types", witness={"vertex": v, "label_set": str(vertex_label_set(code, v))})
    canon = [canonical_label_set(vertex_label_set(code, v)) for v in range(m.num_vertices)]
    majority, _ = Counter(canon).most_common(1)[0]
    for v, c in enumerate(canon):
        if c != majority:
            raise Inadmissible("III", f"vertex {v} has a label set inequivalent to the bulk", witness={"vertex": v, "label_set": str(c), "bulk": str(majority)})
    params = pauli.stabilizer_params(gens, code.n)
    _, genus = euler_genus(m)
    per_face = {len(fg.generators) for fg in faces if fg.generators}
    if len(per_face) == 1:
        expected = 2 * genus * per_face.pop()
        if params.k != expected:
            raise Inadmissible("II", f"k = {params.k}, but homology predicts {expected}", witness={"k": params.k, "expected": expected})
    if params.k and code.n >= bulk_qubits:
        low = pauli.find_logical(gens, distance_floor, code.n)
        if low is not None:
            raise Inadmissible("II", f"logical operator of weight {low.weight} is not a boundary-less cycle", witness={"logical": str(low)})
    return code


def _check_valence(m: CombinatorialMap, valence: int):
    if not m.is_regular(valence):
        bad = next(v for v in range(m.num_vertices) if m.valence(v) != valence)
        raise WrongValence(f"vertex {bad} has valence {m.valence(bad)}, need {valence}", witness={"vertex": bad, "valence": m.valence(bad)})


def build_ktc(m: CombinatorialMap, **kw) -> HscCode:
    """Toric code on a 4-valent map: X on red faces, Z on green faces."""
    _check_valence(m, 4)
    coloring = face_coloring(m, 2)
    faces = [FaceGenerators(f, ("XZ"[c] * m.face_size(f),)) for f, c in enumerate(coloring.colors)]
    faces = with_consistent_signs(HscCode(m, tuple(faces))).faces
    return check_admissibility(m, faces, coloring=coloring, family="KTC", **kw)


TCC_CLASS_PAIRS = {
    1: (("X", "Z"), ("X", "Z"), ("X", "Z")),
    2: (("X", "Z"), ("X", "Z"), ("X", "Y")),
    3: (("X", "Z"), ("X", "Y"), ("Z", "Y")),
}
"""Letter pairs attached to red, green and blue faces for each label class."""


def build_tcc(m: CombinatorialMap, class_index: int = 1, **kw) -> HscCode:
    """Color code on a 3-valent, 3-face-colorable map: each face of color
    ``c`` carries two uniform generators with the class's letter pair."""
    if class_index not in TCC_CLASS_PAIRS:
        raise ValueError("TCC label class must be 1, 2 or 3")
    _check_valence(m, 3)
    coloring = face_coloring(m, 3)
    pairs = TCC_CLASS_PAIRS[class_index]
    faces = []
    for f, c in enumerate(coloring.colors):
        a, b = pairs[c]
        faces.append(FaceGenerators(f, (a * m.face_size(f), b * m.face_size(f))))
    faces = with_consistent_signs(HscCode(m, tuple(faces))).faces
    return check_admissibility(m, faces, coloring=coloring, family=f"TCC{class_index}", **kw)


def build_polygon_code(m: CombinatorialMap) -> HscCode:
    """Even polygon: all-X and all-Z on one of its two faces ([[n, n-2, 2]])."""
    if not m.is_regular(2) or m.num_faces != 2:
        raise WrongValence("polygon codes live on a single cycle", witness=m.valence_profile())
    n = m.num_vertices
    if n % 2:
        raise Inadmissible("commutation", f"X and Z on an odd {n}-gon anticommute", witness={"n": n})
    faces = [FaceGenerators(0, ("X" * n, "Z" * n)), FaceGenerators(1, ())]
    return HscCode(m, tuple(faces), None, "PolygonCode")


@dataclass(frozen=True)
class Classification:
    family: str
    classes: tuple[int, ...] = ()
    params: dict | None = None
    reason: str | None = None
    witness: object = None

    def to_dict(self) -> dict:
        out: dict = {"family": self.family}
        if self.classes:
            out["classes"] = list(self.classes)
        if self.params is not None:
            out["params"] = self.params
        if self.reason is not None:
            out["reason"] = self.reason
            out["witness"] = self.witness
        return out


def classify(m: CombinatorialMap) -> Classification:
    """Decide which homological code family a map supports."""
    if not m.is_connected():
        raise Disconnected("classification needs a connected map")
    profile = m.valence_profile()

    def reject(reason, witness=None):
        return Classification("Inadmissible", reason=reason, witness=witness)

    if 1 in profile:
        v = next(v for v in range(m.num_vertices) if m.valence(v) == 1)
        return reject("1-valent", {"vertex": v})
    if len(profile) > 1:
        return reject("mixed-valence", {"valences": {str(k): c for k, c in profile.items()}})
    (valence,) = profile
    if valence == 2:
        n = m.num_vertices
        if n % 2:
            return reject("odd-polygon", {"n": n, "note": "X and Z generators on an odd cycle anticommute, and nothing else detects single errors"})
        return Classification("PolygonCode", params={"n": n, "k": n - 2, "d": 2})
    if valence >= 5:
        v = next(v for v in range(m.num_vertices) if m.valence(v) >= 5)
        return reject("valence>=5", {"vertex": v, "valence": m.valence(v)})
    if valence == 4:
        try:
            code = build_ktc(m)
        except NotColorable as exc:
            return reject("4-valent-not-2-colorable", exc.witness)
        except Inadmissible as exc:
            return reject(f"rule {exc.rule}", exc.witness)
        return Classification("KTC", params=code.params().to_dict())
    try:
        code = build_tcc(m, 1)
    except NotColorable as exc:
        return reject("4-colorable", exc.witness)
    except Inadmissible as exc:
        return reject(f"rule {exc.rule}", exc.witness)
    return Classification("TCC", classes=(1, 2, 3), params=code.params().to_dict())


# ---------------------------------------------------------------------------
# label-set equivalence transforms


@dataclass(frozen=True)
class LetterPermutation:
    """Rename letters at the given vertices (all vertices when None)."""

    mapping: dict
    vertices: frozenset | None = None


@dataclass(frozen=True)
class Rotation:
    """Cyclically shift the label set at each given vertex by ``shift``
    corners in rotation order (pairs move as units)."""

    shift: int
    vertices: frozenset | None = None


@dataclass(frozen=True)
class PairSwap:
    """Swap the two generators of every two-generator face."""


@dataclass(frozen=True)
class LabelReplacement:
    """Replace the label set of one vertex outright; allowed only when the
    new set is equivalent to the old one."""

    vertex: int
    label_set: LabelSet


Transform = Union[LetterPermutation, Rotation, PairSwap, LabelReplacement]


def _corner_table(code: HscCode):
    """Mutable per-face, per-slot letter lists."""
    return [[list(g) for g in fg.generators] for fg in code.faces]


def _rebuild(code: HscCode, table) -> HscCode:
    faces = [FaceGenerators(f, tuple("".join(g) for g in gens)) for f, gens in enumerate(table)]
    return with_consistent_signs(code.with_faces(faces))


def _vertex_corners(code: HscCode, v: int):
    m = code.map
    out = []
    for d in m.vertices[v]:
        f = m.face_of[d]
        if code.faces[f].generators:
            out.append((f, m.faces[f].index(d)))
    return out


def apply_label_transform(code: HscCode, transform: Transform) -> HscCode:
    """Apply a label-set equivalence; the code parameters are unchanged."""
    m = code.map
    table = _corner_table(code)
    if isinstance(transform, PairSwap):
        table = [gens[::-1] for gens in table]
        return _rebuild(code, table)
    if isinstance(transform, LetterPermutation):
        mapping = {c: transform.mapping.get(c, c) for c in PAULI_LETTERS}
        if sorted(mapping.values()) != sorted(PAULI_LETTERS):
            raise CountChangingTransform("letter map is not a permutation of X, Y, Z", witness=mapping)
        vs = range(m.num_vertices) if transform.vertices is None else transform.vertices
        for v in vs:
            for f, pos in _vertex_corners(code, v):
                for g in table[f]:
                    g[pos] = mapping[g[pos]]
        return _rebuild(code, table)
    if isinstance(transform, Rotation):
        vs = range(m.num_vertices) if transform.vertices is None else transform.vertices
        for v in vs:
            corners = _vertex_corners(code, v)
            if len({len(code.faces[f].generators) for f, _ in corners}) > 1:
                raise CountChangingTransform("rotation would move a pair onto a single-generator face", witness={"vertex": v})
            old = [tuple(g[pos] for g in table[f]) for f, pos in corners]
            r = transform.shift % len(corners)
            new = old[-r:] + old[:-r] if r else old
            for (f, pos), letters in zip(corners, new):
                for g, c in zip(table[f], letters):
                    g[pos] = c
        return _rebuild(code, table)
    if isinstance(transform, LabelReplacement):
        v = transform.vertex
        old = vertex_label_set(code, v)
        new = transform.label_set
        if len(new.entries) != len(old.entries):
            raise CountChangingTransform("label set length changed", witness={"vertex": v})
        if sorted(old.letters().values()) != sorted(new.letters().values()) or not label_sets_equivalent(old, new):
            raise CountChangingTransform(
                f"{old} -> {new} changes the number of labels of each type",
                witness={"vertex": v, "old": str(old), "new": str(new)},
            )
        corners = _vertex_corners(code, v)
        start = min(range(len(corners)), key=lambda i: corners[i][0])
        corners = corners[start:] + corners[:start]
        for (f, pos), entry in zip(corners, _as_tuples(new)):
            if len(entry) != len(table[f]):
                raise CountChangingTransform("entry arity does not match face generators", witness={"vertex": v, "face": f})
            for g, c in zip(table[f], entry):
                g[pos] = c
        return _rebuild(code, table)
    raise TypeError(f"unknown transform {transform!r}")


# ---------------------------------------------------------------------------
# excitations


def excitations(code: HscCode, error: PauliWord) -> list[tuple[int, int]]:
    """Generators violated by ``error`` as ``(face, slot)`` pairs."""
    if error.n != code.n:
        raise LengthMismatch(f"error acts on {error.n} qubits, code has {code.n}")
    syn = pauli.syndrome(code.generators(), error)
    slots = code.slots()
    return [slots[i] for i in np.flatnonzero(syn)]


def excitation_patterns(code: HscCode, v: int) -> set[frozenset]:
    """Distinct non-empty excitation sets made by single-qubit errors at ``v``."""
    out = set()
    for c in PAULI_LETTERS:
        ex = frozenset(excitations(code, PauliWord.from_letters(code.n, {v: c})))
        if ex:
            out.add(ex)
    return out
