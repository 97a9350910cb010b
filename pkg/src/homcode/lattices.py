"""Deterministic lattice generators, JSON (de)serialization and DOT export.

Every generator builds its map from an explicit list of oriented faces with
:func:`surface.map_from_faces`, so dart numbering is fixed: edges are
numbered in order of first appearance while walking the faces in the
documented order, and edge ``i`` owns darts ``2i`` (forward) and ``2i+1``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product

import numpy as np

from .errors import ConstraintViolation, InvalidBoundarySpec, ParseError
from .surface import (
    COLOR_NAMES,
    CombinatorialMap,
    FaceColoring,
    build_map,
    delete_edges,
    dual,
    face_id_of,
    flip_edge,
    map_from_faces,
    map_from_polygons,
    polygons_to_faces,
    triangles_of,
    truncate,
)


def _tag(m: CombinatorialMap, family: str, **params) -> CombinatorialMap:
    m.meta["family"] = family
    m.meta["params"] = params
    return m


# ---------------------------------------------------------------------------
# small closed surfaces


def tetrahedron() -> CombinatorialMap:
    return _tag(map_from_polygons([[0, 2, 1], [0, 1, 3], [0, 3, 2], [1, 2, 3]]), "tetrahedron")


def octahedron() -> CombinatorialMap:
    # vertex 2a is +axis a, 2a+1 is -axis a
    faces = [[x, 2 + y, 4 + z] for x, y, z in product((0, 1), repeat=3)]
    return _tag(map_from_polygons(faces), "octahedron")


def cube() -> CombinatorialMap:
    return _tag(dual(octahedron()), "cube")


def icosahedron() -> CombinatorialMap:
    phi = (1 + 5**0.5) / 2
    pts = []
    for a, b in product((1, -1), repeat=2):
        pts += [(0, a, b * phi), (a, b * phi, 0), (b * phi, 0, a)]
    pts = np.array(pts)
    adj = {i: set() for i in range(12)}
    for i in range(12):
        for j in range(12):
            if i != j and abs(np.linalg.norm(pts[i] - pts[j]) - 2) < 1e-9:
                adj[i].add(j)
    return _tag(map_from_polygons(triangles_of(adj)), "icosahedron")


def dodecahedron() -> CombinatorialMap:
    return _tag(dual(icosahedron()), "dodecahedron")


def prism(n: int) -> CombinatorialMap:
    if n < 3:
        raise ConstraintViolation("prism needs n >= 3", witness={"n": n})
    faces = [list(range(n)), [n + i for i in range(n)][::-1]]
    faces += [[i, (i + 1) % n, n + (i + 1) % n, n + i] for i in range(n)]
    return _tag(map_from_polygons(faces), "prism", n=n)


def polygon(n: int) -> CombinatorialMap:
    """A single ``n``-cycle on the sphere: two ``n``-gon faces, all vertices
    2-valent (``n = 1`` is a self-loop)."""
    if n < 1:
        raise ConstraintViolation("polygon needs n >= 1", witness={"n": n})
    face = [(i, ("e", i), True) for i in range(n)]
    return _tag(map_from_faces([face]), "polygon", n=n)


# ---------------------------------------------------------------------------
# tori


def _square_faces(Lx: int, Ly: int, periodic=True):
    """Square cell ``(i, j)`` walked counterclockwise from its lower-left
    corner; cells in row-major order (``j`` outer, ``i`` inner)."""
    wrap = (lambda a, L: a % L) if periodic else (lambda a, L: a)
    faces = []
    for j in range(Ly):
        for i in range(Lx):
            i1, j1 = wrap(i + 1, Lx), wrap(j + 1, Ly)
            faces.append([
                ((i, j), ("h", i, j), True),
                ((i1, j), ("v", i1, j), True),
                ((i1, j1), ("h", i, j1), False),
                ((i, j1), ("v", i, j), False),
            ])
    return faces


def square_torus(L: int, Ly: int | None = None, *, require_checkerboard: bool = True) -> CombinatorialMap:
    """``Lx x Ly`` square lattice on the torus; vertex ``(i, j)``, cell ``(i, j)``.

    The checkerboard 2-face-coloring needs both sides even; pass
    ``require_checkerboard=False`` to build odd tori anyway.
    """
    Lx, Ly = L, L if Ly is None else Ly
    if Lx < 1 or Ly < 1:
        raise ConstraintViolation("torus sides must be positive", witness={"Lx": Lx, "Ly": Ly})
    if require_checkerboard and (Lx % 2 or Ly % 2):
        raise ConstraintViolation("checkerboard coloring needs even side lengths", witness={"Lx": Lx, "Ly": Ly})
    return _tag(map_from_faces(_square_faces(Lx, Ly)), "square_torus", Lx=Lx, Ly=Ly)


def hex_cell(u: int, v: int, a: int, b: int) -> list[tuple]:
    """Corners of hexagon ``(u, v)`` counterclockwise.

    Hexagon centres form a triangular lattice with basis vectors at 120
    degrees; hex-lattice vertices are its triangles ``A(u,v)`` (up) and
    ``B(u,v)`` (down).
    """
    def A(p, q):
        return ("A", p % a, q % b)

    def B(p, q):
        return ("B", p % a, q % b)

    return [A(u, v), B(u, v), A(u - 1, v), B(u - 1, v - 1), A(u - 1, v - 1), B(u, v - 1)]


def hex_torus(a: int, b: int | None = None) -> CombinatorialMap:
    """Honeycomb on an ``a x b`` torus of hexagons (``2ab`` vertices).

    Hexagon ``(u, v)`` gets color ``(u + v) mod 3``; this is a proper
    3-coloring exactly when ``a`` and ``b`` are multiples of 3.  Faces are
    listed row-major (``v`` outer, ``u`` inner).
    """
    b = a if b is None else b
    if a % 3 or b % 3 or a < 3 or b < 3:
        raise ConstraintViolation("hex torus sides must be positive multiples of 3", witness={"a": a, "b": b})
    cells = [hex_cell(u, v, a, b) for v in range(b) for u in range(a)]
    m = map_from_polygons(cells)
    m = _tag(m, "hex_torus", a=a, b=b)
    faces = polygons_to_faces(cells)
    colors = [None] * m.num_faces
    for idx, (v, u) in enumerate(product(range(b), range(a))):
        colors[face_id_of(m, faces[idx])] = (u + v) % 3
    m.meta["_coloring"] = FaceColoring(tuple(colors), 3)
    return m


def torus_488(L: int) -> CombinatorialMap:
    """Square-octagon tiling: the truncated ``L x L`` square torus."""
    if L % 2 or L < 2:
        raise ConstraintViolation("4.8.8 torus needs even L", witness={"L": L})
    return _tag(truncate(square_torus(L)), "torus_488", L=L)


def torus_31212(a: int) -> CombinatorialMap:
    """Triangle-dodecagon tiling (truncated honeycomb): 3-valent with odd faces."""
    return _tag(truncate(hex_torus(a)), "torus_31212", a=a)


def hex_torus_defect(a: int) -> CombinatorialMap:
    """Honeycomb with one edge rotated (Stone-Wales): two pentagons and two
    heptagons, still 3-valent."""
    base = hex_torus(a)
    return _tag(flip_edge(base, 0), "hex_torus_defect", a=a)


def mixed_strip(W: int, H: int) -> CombinatorialMap:
    """Square torus whose every fourth row of cells is fused pairwise into
    hexagons, giving alternating bands of 3- and 4-valent vertices.

    The vertical edges ``(x, y)-(x, y+1)`` with ``y = 0 mod 4`` and ``x``
    odd are deleted.
    """
    if W % 2 or W < 2 or H % 4 or H < 4:
        raise ConstraintViolation("mixed strip needs even W and H a multiple of 4", witness={"W": W, "H": H})
    faces = _square_faces(W, H)
    base = map_from_faces(faces)
    ids = base.meta["_edge_ids"]
    doomed = [ids[("v", x, y)] for y in range(0, H, 4) for x in range(1, W, 2)]
    return _tag(delete_edges(base, doomed), "mixed_strip", W=W, H=H)


# ---------------------------------------------------------------------------
# planar patches with boundaries


@dataclass
class PatchLayout:
    """A planar map with one generator-free outer face.

    ``colors`` holds a color per face (None for the outer face);
    ``runs`` lists the boundary runs as ``(color, first perimeter index)``.
    """

    map: CombinatorialMap
    colors: list
    outer_face: int
    runs: list
    extra: dict = field(default_factory=dict)


def _perimeter(W, H):
    pts = [(x, 0) for x in range(W)] + [(W, y) for y in range(H)]
    pts += [(x, H) for x in range(W, 0, -1)] + [(0, y) for y in range(H, 0, -1)]
    return pts


def _perimeter_edges(W, H):
    """Perimeter edge ``t`` runs from perimeter vertex ``t`` to ``t+1``;
    returns ``(key, forward, bulk cell)``."""
    out = []
    for x in range(W):
        out.append((("h", x, 0), True, (x, 0)))
    for y in range(H):
        out.append((("v", W, y), True, (W - 1, y)))
    for x in range(W - 1, -1, -1):
        out.append((("h", x, H), False, (x, H - 1)))
    for y in range(H - 1, -1, -1):
        out.append((("v", 0, y), False, (0, y)))
    return out


def _choose_changes(W, H, nruns):
    """Pick the perimeter vertices where the boundary color flips.

    Local rules keep every vertex 3- or 4-valent: a flip at a side vertex
    needs the edge before it to border a cell of the outgoing run color, and
    a corner inside a run needs its cell to have the other color.
    """
    P = 2 * (W + H)
    corners = {0, W, W + H, 2 * W + H}
    edges = _perimeter_edges(W, H)
    bulk = [(i + j) % 2 for _, _, (i, j) in edges]

    def valid(changes, c0):
        run_color = [None] * P
        for r, t in enumerate(changes):
            end = changes[(r + 1) % nruns]
            c = (c0 + r) % 2
            s = t
            while True:
                run_color[s] = c
                s = (s + 1) % P
                if s == end:
                    break
        for t in range(P):
            before, after = run_color[t - 1], run_color[t]
            if before == after:
                if t in corners and bulk[t] == after:
                    return False
            elif t not in corners and bulk[t - 1] != before:
                return False
        return True

    for c0 in (0, 1):
        for shift in range(P):
            targets = [(shift + round(r * P / nruns)) % P for r in range(nruns)]
            result = _search(targets, P, nruns, lambda ch: valid(ch, c0))
            if result is not None:
                return result, c0
    return None


def _search(targets, P, nruns, ok):
    """Try change positions near evenly spaced targets, nearest first,
    keeping them in cyclic order."""
    reach = max(2, P // (2 * nruns))
    offsets = sorted(range(-reach, reach + 1), key=lambda o: (abs(o), -o))
    options = [[(t + o) % P for o in offsets] for t in targets]
    for choice in product(*options):
        offsets = [(s - choice[0]) % P for s in choice]
        if offsets != sorted(offsets) or len(set(offsets)) != nruns:
            continue
        if ok(list(choice)):
            return list(choice)
    return None


def ktc_patch_layout(W: int, H: int, boundaries: int = 4) -> PatchLayout:
    """Rectangular ``W x H`` planar toric-code patch with ``boundaries``
    alternating boundary runs.

    Cell ``(i, j)`` has color ``(i + j) mod 2`` (0 = red, 1 = green).  A run
    of color ``c`` is lined entirely by faces of color ``c``: each perimeter
    edge whose cell has the other color gets a weight-two (digon) face of
    color ``c`` glued outside it.  Where the color flips the perimeter vertex
    is 3-valent.
    """
    if boundaries < 2 or boundaries % 2:
        raise InvalidBoundarySpec("boundary colors alternate, so their number must be even and >= 2", witness={"boundaries": boundaries})
    if W < 1 or H < 1 or boundaries > 2 * (W + H) // 2:
        raise InvalidBoundarySpec("patch too small for the requested boundaries", witness={"W": W, "H": H})
    found = _choose_changes(W, H, boundaries)
    if found is None:
        raise InvalidBoundarySpec("no valid placement of boundary changes", witness={"W": W, "H": H, "boundaries": boundaries})
    changes, c0 = found
    P = 2 * (W + H)
    edges = _perimeter_edges(W, H)
    run_of = [None] * P
    for r, t in enumerate(changes):
        s = t
        while True:
            run_of[s] = r
            s = (s + 1) % P
            if s == changes[(r + 1) % boundaries]:
                break
    faces = _square_faces(W, H, periodic=False)
    colors_in = [(i + j) % 2 for j in range(H) for i in range(W)]
    perim = _perimeter(W, H)
    for t, (key, fwd, (i, j)) in enumerate(edges):
        c = (c0 + run_of[t]) % 2
        if (i + j) % 2 != c:
            tail, head = perim[t], perim[(t + 1) % P]
            faces.append([(head, key, not fwd), (tail, ("d", t), True)])
            colors_in.append(c)
    m = map_from_faces(faces)
    colors = [None] * m.num_faces
    for f, c in zip(faces, colors_in):
        colors[face_id_of(m, f)] = c
    outer = colors.index(None)
    _tag(m, "planar_ktc_patch", W=W, H=H, boundaries=boundaries)
    runs = [((c0 + r) % 2, t) for r, t in enumerate(changes)]
    return PatchLayout(m, colors, outer, runs)


# triangular face lattice: neighbours of a hexagon centre (120-degree basis)
_TRI_NEIGHBOURS = [(1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)]


def _rot(p):
    return (-p[1], p[0] - p[1])


def _det(p, q):
    # orientation of the 120-degree basis: det(e1, e2) > 0
    return p[0] * q[1] - p[1] * q[0]


def tcc_triangle_region(s: int) -> set[tuple[int, int]]:
    """Hexagon centres of a triangular color-code patch of size ``s``
    (``s = 0`` gives 3 hexagons, i.e. 7 qubits)."""
    v = [(2 * s + 1, s)]
    v.append(_rot(v[0]))
    v.append(_rot(v[1]))
    corners = [(0, 0), v[0], (v[0][0] + v[1][0], v[0][1] + v[1][1])]
    R = 4 * s + 4
    out = set()
    for p in product(range(-R, R + 1), repeat=2):
        if all(_det(v[i], (p[0] - corners[i][0], p[1] - corners[i][1])) >= -s for i in range(3)):
            out.add(p)
    return out


def tcc_patch_layout(region: set[tuple[int, int]]) -> PatchLayout:
    """Planar color code whose hexagons sit on ``region`` (a set of
    triangular-lattice points that triangulates a disk).

    Stabilizer faces are the region points, qubits the lattice triangles plus
    one triangle per boundary edge and per corner.  Boundary runs are maximal
    stretches of region boundary missing the same color; each run gets a
    virtual face of that color, and the qubits are read off as the dual of
    the resulting sphere triangulation with the virtual outer polygon removed.
    """
    pts = set(region)
    color = {p: (p[0] + p[1]) % 3 for p in pts}
    adj = {p: set() for p in pts}
    for p in pts:
        for du, dv in _TRI_NEIGHBOURS:
            q = (p[0] + du, p[1] + dv)
            if q in pts:
                adj[p].add(q)
    tris = triangles_of(adj)
    if not tris:
        raise InvalidBoundarySpec("region contains no lattice triangle", witness=sorted(pts))
    count = {}
    for t in tris:
        for e in ((t[0], t[1]), (t[1], t[2]), (t[0], t[2])):
            count[frozenset(e)] = count.get(frozenset(e), 0) + 1
    # boundary cycle of the triangulated disk, walked with the region on the left
    tri_faces = map_from_polygons([list(t) for t in tris])
    labels = tri_faces.meta["_vertex_labels"]
    outer = max(range(tri_faces.num_faces), key=tri_faces.face_size)
    cycle = [labels[v] for v in tri_faces.face_vertices(outer)]
    if len(set(cycle)) != len(cycle):
        raise InvalidBoundarySpec("region boundary is not a simple cycle", witness=cycle)
    n = len(cycle)
    missing = [3 - color[cycle[i]] - color[cycle[(i + 1) % n]] for i in range(n)]
    starts = [i for i in range(n) if missing[i] != missing[i - 1]]
    if len(starts) < 2:
        raise InvalidBoundarySpec("region boundary has fewer than two color runs", witness=missing)
    polys = [list(t) for t in tris]
    virtual = []
    for r, i in enumerate(starts):
        bv = ("boundary", r)
        virtual.append(bv)
        color[bv] = missing[i]
        j = i
        while True:
            polys.append([cycle[j], cycle[(j + 1) % n], bv])
            j = (j + 1) % n
            if j == starts[(r + 1) % len(starts)]:
                break
        # corner triangle at the start of this run
        polys.append([cycle[i], ("boundary", (r - 1) % len(starts)), bv])
    polys.append(virtual)
    T = map_from_polygons(polys)
    tlabels = T.meta["_vertex_labels"]
    D = dual(T)
    # the outer polygon is the only face of T whose corners are all virtual
    outer_face_T = next(f for f in range(T.num_faces) if all(isinstance(tlabels[v][0], str) for v in T.face_vertices(f)))
    doomed = sorted({T.edge_of[d] for d in T.faces[outer_face_T]})
    code_map = delete_edges(D, doomed)
    # delete_edges renumbers darts; faces of the code map are rotation orbits of T's vertices
    keep = [d for d in range(T.dart_count) if T.edge_of[d] not in set(doomed)]
    new_id = {d: i for i, d in enumerate(keep)}
    colors = [None] * code_map.num_faces
    virtual_faces = set()
    for v in range(T.num_vertices):
        lab = tlabels[v]
        darts = [d for d in T.vertices[v] if d in new_id]
        f = code_map.face_of[new_id[darts[0]]]
        if isinstance(lab[0], str):
            virtual_faces.add(f)
        else:
            colors[f] = color[lab]
    if len(virtual_faces) != 1:
        raise InvalidBoundarySpec("virtual boundary faces did not merge into one outer face", witness=sorted(virtual_faces))
    outer = virtual_faces.pop()
    runs = [(missing[i], i) for i in starts]
    m = _tag(code_map, "planar_tcc_patch", hexagons=len(pts))
    return PatchLayout(m, colors, outer, runs, {"region": sorted(pts)})


def planar_tcc_triangle(s: int) -> PatchLayout:
    return tcc_patch_layout(tcc_triangle_region(s))


# ---------------------------------------------------------------------------
# spec strings


@dataclass(frozen=True)
class LatticeSpec:
    family: str
    params: dict = field(default_factory=dict)


def parse_spec(text: str) -> LatticeSpec:
    """Parse ``family:key=val,...`` (integer values)."""
    family, _, rest = text.strip().partition(":")
    params = {}
    if rest:
        for item in rest.split(","):
            key, eq, val = item.partition("=")
            if not eq:
                raise ParseError(f"expected key=value, got {item!r}")
            try:
                params[key.strip()] = int(val)
            except ValueError:
                raise ParseError(f"parameter {key!r} must be an integer, got {val!r}") from None
    return LatticeSpec(family.strip(), params)


_FAMILIES = {
    "tetrahedron": (tetrahedron, ()),
    "cube": (cube, ()),
    "octahedron": (octahedron, ()),
    "icosahedron": (icosahedron, ()),
    "dodecahedron": (dodecahedron, ()),
    "prism": (prism, ("n",)),
    "polygon": (polygon, ("n",)),
    "square_torus": (lambda L, Ly=None: square_torus(L, Ly), ("L", "Ly")),
    "hex_torus": (hex_torus, ("a", "b")),
    "torus_488": (torus_488, ("L",)),
    "torus_31212": (torus_31212, ("a",)),
    "hex_torus_defect": (hex_torus_defect, ("a",)),
    "mixed_strip": (mixed_strip, ("W", "H")),
    "planar_ktc_patch": (lambda W, H, boundaries=4: ktc_patch_layout(W, H, boundaries).map, ("W", "H", "boundaries")),
    "planar_tcc_triangle": (lambda s: planar_tcc_triangle(s).map, ("s",)),
}

_ALIASES = {"square_torus": {"Lx": "L"}, "hex_torus": {"L": "a"}}


def families() -> list[str]:
    return sorted(_FAMILIES)


def generate(spec: LatticeSpec | str) -> CombinatorialMap:
    if isinstance(spec, str):
        spec = parse_spec(spec)
    if spec.family not in _FAMILIES:
        raise ParseError(f"unknown lattice family {spec.family!r}; known: {', '.join(families())}")
    fn, allowed = _FAMILIES[spec.family]
    params = {_ALIASES.get(spec.family, {}).get(k, k): v for k, v in spec.params.items()}
    unknown = set(params) - set(allowed)
    if unknown:
        raise ParseError(f"unknown parameters {sorted(unknown)} for {spec.family}")
    try:
        return fn(**params)
    except TypeError as exc:
        raise ParseError(f"bad parameters for {spec.family}: {exc}") from None


# ---------------------------------------------------------------------------
# serialization


def _public_meta(meta: dict) -> dict:
    return {k: v for k, v in meta.items() if not k.startswith("_")}


def map_to_record(m: CombinatorialMap) -> dict:
    return {"darts": m.dart_count, "alpha": list(m.alpha), "sigma": list(m.sigma), "meta": _public_meta(m.meta)}


def dumps(record: dict) -> bytes:
    return (json.dumps(record, sort_keys=True, separators=(",", ":")) + "\n").encode()


def write_map(m: CombinatorialMap) -> bytes:
    return dumps(map_to_record(m))


def record_to_map(record) -> CombinatorialMap:
    if not isinstance(record, dict):
        raise ParseError("map JSON must be an object")
    for key in ("darts", "alpha", "sigma"):
        if key not in record:
            raise ParseError(f"map JSON is missing {key!r}")
    try:
        darts = int(record["darts"])
        alpha = [int(a) for a in record["alpha"]]
        sigma = [int(s) for s in record["sigma"]]
    except (TypeError, ValueError) as exc:
        raise ParseError(f"malformed map arrays: {exc}") from None
    meta = record.get("meta") or {}
    if not isinstance(meta, dict):
        raise ParseError("meta must be an object")
    return build_map(darts, alpha, sigma, meta=meta)


def read_map(data: bytes | str) -> CombinatorialMap:
    try:
        record = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    return record_to_map(record)


def export_dot(m: CombinatorialMap, coloring: FaceColoring | None = None, generators=None) -> str:
    """Graphviz text: one node per vertex, one edge line per edge; faces are
    listed as comments, annotated with color and generators when given."""
    lines = ["graph homcode {"]
    for v in range(m.num_vertices):
        lines.append(f"  v{v};")
    for e in range(m.num_edges):
        a, b = m.edge_endpoints(e)
        lines.append(f"  v{a} -- v{b} [label=e{e}];")
    for f in range(m.num_faces):
        attrs = [f"size={m.face_size(f)}"]
        if coloring is not None and coloring.colors[f] is not None:
            attrs.append(f"color={COLOR_NAMES[coloring.colors[f]]}")
        if generators is not None and generators[f]:
            attrs.append("gens=" + "|".join(generators[f]))
        verts = " ".join(f"v{v}" for v in m.face_vertices(f))
        lines.append(f"  // face f{f} [{', '.join(attrs)}]: {verts}")
    lines.append("}")
    return "\n".join(lines) + "\n"
