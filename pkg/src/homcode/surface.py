"""Combinatorial maps: graphs embedded in closed orientable surfaces.

A map on ``N`` darts (half-edges) is a pair of permutations:

* ``alpha`` -- fixed-point-free involution pairing the two darts of an edge;
* ``sigma`` -- rotation of the darts around their common vertex.

Vertices are ``sigma`` orbits, edges ``alpha`` orbits and faces orbits of
``phi = sigma o alpha`` (``phi[d] = sigma[alpha[d]]``).  Every orbit table is
ordered by smallest dart, and each orbit is listed starting from its smallest
dart; vertex, edge and face ids index those tables.

The corner of dart ``d`` is the angle at ``vertex_of[d]`` between
``sigma^-1(d)`` and ``d``; it belongs to face ``face_of[d]``.  Walking the
darts of a face therefore walks its corners, and walking the darts of a vertex
in ``sigma`` order walks its corners in rotation order.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Hashable, Iterable, Sequence

import numpy as np

from . import gf2
from .errors import (
    Disconnected,
    FixedPointEdge,
    NotColorable,
    NotInvolution,
    OddDartCount,
    ValidationError,
    WrongValence,
)

COLOR_NAMES = ("red", "green", "blue")


def _orbits(perm: Sequence[int]) -> list[tuple[int, ...]]:
    seen = [False] * len(perm)
    out = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        orbit = []
        d = start
        while not seen[d]:
            seen[d] = True
            orbit.append(d)
            d = perm[d]
        out.append(tuple(orbit))
    return out


def _inverse(perm: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for i, p in enumerate(perm):
        inv[p] = i
    return tuple(inv)


@dataclass(frozen=True)
class CombinatorialMap:
    alpha: tuple[int, ...]
    sigma: tuple[int, ...]
    meta: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def dart_count(self) -> int:
        return len(self.alpha)

    @cached_property
    def phi(self) -> tuple[int, ...]:
        return tuple(self.sigma[a] for a in self.alpha)

    @cached_property
    def sigma_inv(self) -> tuple[int, ...]:
        return _inverse(self.sigma)

    @cached_property
    def vertices(self) -> list[tuple[int, ...]]:
        return _orbits(self.sigma)

    @cached_property
    def faces(self) -> list[tuple[int, ...]]:
        return _orbits(self.phi)

    @cached_property
    def edges(self) -> list[tuple[int, int]]:
        return [(d, self.alpha[d]) for d in range(self.dart_count) if d < self.alpha[d]]

    @cached_property
    def vertex_of(self) -> tuple[int, ...]:
        return _index(self.vertices, self.dart_count)

    @cached_property
    def face_of(self) -> tuple[int, ...]:
        return _index(self.faces, self.dart_count)

    @cached_property
    def edge_of(self) -> tuple[int, ...]:
        return _index(self.edges, self.dart_count)

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def num_faces(self) -> int:
        return len(self.faces)

    def counts(self) -> tuple[int, int, int]:
        return self.num_vertices, self.num_edges, self.num_faces

    def valence(self, v: int) -> int:
        return len(self.vertices[v])

    def valence_profile(self) -> dict[int, int]:
        """``{valence: number of vertices}``, i.e. the ``|V_n|`` table."""
        out: dict[int, int] = {}
        for orbit in self.vertices:
            out[len(orbit)] = out.get(len(orbit), 0) + 1
        return dict(sorted(out.items()))

    def face_size(self, f: int) -> int:
        return len(self.faces[f])

    def face_size_profile(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for orbit in self.faces:
            out[len(orbit)] = out.get(len(orbit), 0) + 1
        return dict(sorted(out.items()))

    def face_vertices(self, f: int) -> list[int]:
        """Vertices met along face ``f``, one per corner, in facial order."""
        return [self.vertex_of[d] for d in self.faces[f]]

    def vertex_faces(self, v: int) -> list[int]:
        """Faces around vertex ``v``, one per corner, in rotation order."""
        return [self.face_of[d] for d in self.vertices[v]]

    def edge_endpoints(self, e: int) -> tuple[int, int]:
        d, a = self.edges[e]
        return self.vertex_of[d], self.vertex_of[a]

    def is_regular(self, valence: int) -> bool:
        return all(len(o) == valence for o in self.vertices)

    def is_simple(self) -> bool:
        seen = set()
        for e in range(self.num_edges):
            u, w = self.edge_endpoints(e)
            if u == w:
                return False
            key = (min(u, w), max(u, w))
            if key in seen:
                return False
            seen.add(key)
        return True

    def is_connected(self) -> bool:
        return self.dart_count == 0 or len(self._components()) == 1

    def _components(self) -> list[set[int]]:
        n = self.dart_count
        seen = [False] * n
        comps = []
        for start in range(n):
            if seen[start]:
                continue
            comp = {start}
            seen[start] = True
            stack = [start]
            while stack:
                d = stack.pop()
                for nxt in (self.alpha[d], self.sigma[d], self.sigma_inv[d]):
                    if not seen[nxt]:
                        seen[nxt] = True
                        comp.add(nxt)
                        stack.append(nxt)
            comps.append(comp)
        return comps


def _index(orbits, n) -> tuple[int, ...]:
    out = [0] * n
    for i, orbit in enumerate(orbits):
        for d in orbit:
            out[d] = i
    return tuple(out)


def _check_perm(p, n, name):
    if len(p) != n:
        raise ValidationError(f"{name} has length {len(p)}, expected {n}")
    if sorted(p) != list(range(n)):
        raise ValidationError(f"{name} is not a permutation of 0..{n - 1}")


def build_map(
    darts: int,
    alpha: Sequence[int],
    sigma: Sequence[int],
    *,
    meta: dict | None = None,
    allow_disconnected: bool = False,
) -> CombinatorialMap:
    """Validate the permutation pair and return a :class:`CombinatorialMap`."""
    alpha = tuple(int(a) for a in alpha)
    sigma = tuple(int(s) for s in sigma)
    _check_perm(alpha, darts, "alpha")
    _check_perm(sigma, darts, "sigma")
    if darts % 2:
        raise OddDartCount(f"{darts} darts cannot be paired into edges")
    for d, a in enumerate(alpha):
        if a == d:
            raise FixedPointEdge(f"alpha fixes dart {d}")
        if alpha[a] != d:
            raise NotInvolution(f"alpha[alpha[{d}]] = {alpha[a]} != {d}")
    m = CombinatorialMap(alpha, sigma, dict(meta or {}))
    if not allow_disconnected and not m.is_connected():
        raise Disconnected(f"map has {len(m._components())} components")
    return m


def euler_genus(m: CombinatorialMap) -> tuple[int, int]:
    """Return ``(chi, genus)`` with ``chi = |V| - |E| + |F| = 2 - 2 genus``."""
    if m.dart_count == 0 or not m.is_connected():
        raise Disconnected("Euler genus needs a connected, non-empty map")
    v, e, f = m.counts()
    chi = v - e + f
    assert chi % 2 == 0, "rotation systems always give an even Euler characteristic"
    return chi, (2 - chi) // 2


def dual(m: CombinatorialMap) -> CombinatorialMap:
    """Dual map on the same darts: the rotation becomes ``phi``.

    Edges keep their ids, vertices of the dual are the faces of ``m`` and the
    faces of the dual are the vertices of ``m``; ``dual(dual(m)) == m``.
    """
    return CombinatorialMap(m.alpha, m.phi, {"derived": "dual"})


def medial(m: CombinatorialMap) -> tuple[CombinatorialMap, dict[int, tuple[str, int]]]:
    """Medial map and face provenance.

    Old dart ``x`` spawns the medial edge through the corner between ``x``
    and ``sigma(x)``: dart ``2x`` sits on the midpoint of ``edge(x)`` and
    dart ``2x+1`` on the midpoint of ``edge(sigma(x))``.  Faces made of even
    darts come from old faces ("face", cycle type); faces of odd darts come
    from old vertices ("vertex", cut type).
    """
    n = m.dart_count
    alpha = [0] * (2 * n)
    sigma = [0] * (2 * n)
    for x in range(n):
        alpha[2 * x], alpha[2 * x + 1] = 2 * x + 1, 2 * x
        sigma[2 * x] = 2 * m.sigma_inv[x] + 1
        sigma[2 * x + 1] = 2 * m.alpha[m.sigma[x]]
    out = CombinatorialMap(tuple(alpha), tuple(sigma), {"derived": "medial"})
    provenance = {}
    for f, orbit in enumerate(out.faces):
        d = orbit[0]
        x = d // 2
        if d % 2 == 0:
            provenance[f] = ("face", m.face_of[m.sigma[x]])
        else:
            provenance[f] = ("vertex", m.vertex_of[x])
    return out, provenance


def truncate(m: CombinatorialMap) -> CombinatorialMap:
    """Cut every vertex off: each old vertex becomes a polygon face.

    The result is 3-valent; old faces double in size.  Dart ``3x`` runs along
    old edge ``edge(x)``, ``3x+1`` / ``3x+2`` run along the new polygon towards
    the corners of ``sigma(x)`` / ``sigma^-1(x)``.
    """
    n = m.dart_count
    alpha = [0] * (3 * n)
    sigma = [0] * (3 * n)
    for x in range(n):
        alpha[3 * x] = 3 * m.alpha[x]
        alpha[3 * x + 1] = 3 * m.sigma[x] + 2
        alpha[3 * x + 2] = 3 * m.sigma_inv[x] + 1
        sigma[3 * x], sigma[3 * x + 1], sigma[3 * x + 2] = 3 * x + 1, 3 * x + 2, 3 * x
    return CombinatorialMap(tuple(alpha), tuple(sigma), {"derived": "truncate"})


def delete_edges(m: CombinatorialMap, edges: Iterable[int], *, allow_disconnected=False) -> CombinatorialMap:
    """Remove edges, merging the faces on either side.  Darts are renumbered
    in increasing order of their old ids."""
    removed = set()
    for e in edges:
        removed.update(m.edges[e])
    keep = [d for d in range(m.dart_count) if d not in removed]
    new_id = {d: i for i, d in enumerate(keep)}
    alpha = [new_id[m.alpha[d]] for d in keep]
    sigma = []
    for d in keep:
        s = m.sigma[d]
        while s in removed:
            s = m.sigma[s]
        sigma.append(new_id[s])
    out = build_map(len(keep), alpha, sigma, allow_disconnected=allow_disconnected)
    if "_vertex_labels" in m.meta:
        old = m.meta["_vertex_labels"]
        out.meta["_vertex_labels"] = [old[m.vertex_of[keep[o[0]]]] for o in out.vertices]
    return out


def flip_edge(m: CombinatorialMap, dart: int) -> CombinatorialMap:
    """Whitehead move on a 3-valent map: the edge of ``dart`` is re-attached so
    that the two faces along it shrink by one and the two faces at its ends
    grow by one (a Stone-Wales rotation on hexagons gives 5-7-5-7)."""
    d, dp = dart, m.alpha[dart]
    if m.valence(m.vertex_of[d]) != 3 or m.valence(m.vertex_of[dp]) != 3:
        raise WrongValence("flip_edge needs 3-valent endpoints", witness=dart)
    if m.vertex_of[d] == m.vertex_of[dp]:
        raise ValidationError("cannot flip a self-loop")
    sigma = list(m.sigma)
    a, b = m.sigma[d], m.sigma[m.sigma[d]]
    c, e = m.sigma[dp], m.sigma[m.sigma[dp]]
    sigma[d], sigma[e], sigma[a] = e, a, d
    sigma[dp], sigma[b], sigma[c] = b, c, dp
    return build_map(m.dart_count, m.alpha, sigma)


def is_isomorphic(m1: CombinatorialMap, m2: CombinatorialMap) -> bool:
    """Orientation-preserving map isomorphism for connected maps."""
    n = m1.dart_count
    if n != m2.dart_count:
        return False
    if n == 0:
        return True
    if m1.counts() != m2.counts():
        return False
    for target in range(n):
        image = {0: target}
        used = {target}
        stack = [0]
        ok = True
        while stack and ok:
            d = stack.pop()
            for p1, p2 in ((m1.alpha, m2.alpha), (m1.sigma, m2.sigma)):
                a, b = p1[d], p2[image[d]]
                if a in image:
                    if image[a] != b:
                        ok = False
                        break
                elif b in used:
                    ok = False
                    break
                else:
                    image[a] = b
                    used.add(b)
                    stack.append(a)
        if ok and len(image) == n:
            return True
    return False


def vertex_bipartition(m: CombinatorialMap) -> list[int] | None:
    """Proper 2-coloring of the vertices (0 for vertex 0), or None."""
    side = [-1] * m.num_vertices
    for root in range(m.num_vertices):
        if side[root] >= 0:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for d in m.vertices[v]:
                w = m.vertex_of[m.alpha[d]]
                if side[w] < 0:
                    side[w] = 1 - side[v]
                    queue.append(w)
                elif side[w] == side[v]:
                    return None
    return side


# ---------------------------------------------------------------------------
# face colorings


@dataclass(frozen=True)
class FaceColoring:
    colors: tuple[int | None, ...]
    palette_size: int

    def color_of_face(self, f: int) -> str | None:
        c = self.colors[f]
        return None if c is None else COLOR_NAMES[c]

    def classes(self) -> list[set[int]]:
        return [{f for f, c in enumerate(self.colors) if c == k} for k in range(self.palette_size)]


def two_coloring(m: CombinatorialMap, skip: Iterable[int] = ()) -> FaceColoring:
    """BFS 2-face-coloring; faces in ``skip`` are left uncolored and impose
    no constraint.  Face 0 (or the first colored face) is red."""
    skip = set(skip)
    colors: list[int | None] = [None] * m.num_faces
    for root in range(m.num_faces):
        if root in skip or colors[root] is not None:
            continue
        colors[root] = 0
        queue = deque([root])
        while queue:
            f = queue.popleft()
            for d in m.faces[f]:
                g = m.face_of[m.alpha[d]]
                if g in skip:
                    continue
                if g == f:
                    raise NotColorable(f"face {f} borders itself along edge {m.edge_of[d]}", witness={"face": f, "edge": m.edge_of[d]})
                if colors[g] is None:
                    colors[g] = 1 - colors[f]
                    queue.append(g)
                elif colors[g] == colors[f]:
                    raise NotColorable(
                        f"odd cycle of faces closes at faces {f} and {g}",
                        witness={"faces": [f, g], "edge": m.edge_of[d]},
                    )
    return FaceColoring(tuple(colors), 2)


def three_coloring(m: CombinatorialMap, skip: Iterable[int] = ()) -> FaceColoring:
    """3-face-coloring of a 3-valent map by forced propagation.

    Around a 3-valent vertex the three corner faces must take three distinct
    colors, so fixing the faces at one vertex forces everything reachable.
    Corners lying in ``skip`` faces are unconstrained.
    """
    skip = set(skip)
    for f in range(m.num_faces):
        if f not in skip and m.face_size(f) % 2:
            raise NotColorable(f"face {f} has odd size {m.face_size(f)}", witness={"face": f, "size": m.face_size(f)})
    colors: list[int | None] = [None] * m.num_faces
    done = [False] * m.num_vertices
    for root in range(m.num_vertices):
        if done[root]:
            continue
        queue = deque([root])
        seeded = False
        while queue:
            v = queue.popleft()
            if done[v]:
                continue
            fs = [f for f in m.vertex_faces(v) if f not in skip]
            if len(set(fs)) != len(fs):
                raise NotColorable(f"a face meets vertex {v} twice", witness={"vertex": v})
            known = {colors[f] for f in fs if colors[f] is not None}
            unknown = [f for f in fs if colors[f] is None]
            if not seeded and not known:
                for i, f in enumerate(fs):
                    colors[f] = i
                seeded = True
            elif len(fs) == 3 and len(unknown) == 1 and len(known) == 2:
                colors[unknown[0]] = ({0, 1, 2} - known).pop()
            elif len(fs) == 3 and unknown:
                continue
            elif len(fs) < 3 and unknown:
                free = sorted({0, 1, 2} - known)
                for f in unknown:
                    colors[f] = free.pop(0)
            seen = [colors[f] for f in fs]
            if len(set(seen)) != len(seen):
                raise NotColorable(f"faces around vertex {v} cannot be 3-colored", witness={"vertex": v})
            done[v] = True
            for d in m.vertices[v]:
                w = m.vertex_of[m.alpha[d]]
                if not done[w]:
                    queue.append(w)
    if any(c is None for f, c in enumerate(colors) if f not in skip) or not all(done):
        raise NotColorable("coloring propagation did not close", witness=None)
    out = FaceColoring(tuple(colors), 3)
    if not is_proper_coloring(m, out):
        raise NotColorable("propagated coloring is not proper", witness=None)
    return out


def face_coloring(m: CombinatorialMap, palette: int) -> FaceColoring:
    """Proper face coloring with 2 colors (4-valent maps) or 3 colors
    (3-valent maps).  Raises :class:`NotColorable` with a witness."""
    if palette == 2:
        if not m.is_regular(4):
            raise WrongValence("2-face-coloring is defined for 4-valent maps", witness=m.valence_profile())
        return two_coloring(m)
    if palette == 3:
        if not m.is_regular(3):
            raise WrongValence("3-face-coloring is defined for 3-valent maps", witness=m.valence_profile())
        return three_coloring(m)
    raise ValueError("palette must be 2 or 3")


def is_proper_coloring(m: CombinatorialMap, coloring: FaceColoring) -> bool:
    for d in range(m.dart_count):
        f, g = m.face_of[d], m.face_of[m.alpha[d]]
        cf, cg = coloring.colors[f], coloring.colors[g]
        if cf is not None and cg is not None and cf == cg:
            return False
    return True


# ---------------------------------------------------------------------------
# cycle and cut spaces


@dataclass(frozen=True)
class Gf2VectorSpaceBasis:
    ambient_dimension: int
    vectors: np.ndarray
    kind: str

    @property
    def dimension(self) -> int:
        return int(self.vectors.shape[0])

    def contains(self, v) -> bool:
        return gf2.in_span(self.vectors, v) if self.dimension else not np.any(v)


def incidence_matrix(m: CombinatorialMap) -> np.ndarray:
    """Vertex-edge boundary operator over GF(2); loops give zero columns."""
    B = np.zeros((m.num_vertices, m.num_edges), dtype=np.uint8)
    for d in range(m.dart_count):
        B[m.vertex_of[d], m.edge_of[d]] ^= 1
    return B


def facial_cycle_matrix(m: CombinatorialMap) -> np.ndarray:
    """Face-edge boundary operator over GF(2)."""
    D = np.zeros((m.num_faces, m.num_edges), dtype=np.uint8)
    for d in range(m.dart_count):
        D[m.face_of[d], m.edge_of[d]] ^= 1
    return D


def cycle_cut_spaces(m: CombinatorialMap) -> tuple[Gf2VectorSpaceBasis, Gf2VectorSpaceBasis, int]:
    """Cycle space (kernel of the boundary map), cut space (its row space) and
    the first Betti number ``dim Z - rank(facial cycles)``."""
    if not m.is_connected():
        raise Disconnected("cycle/cut spaces need a connected map")
    B = incidence_matrix(m)
    cycles = gf2.nullspace(B)
    cuts, _ = gf2.row_reduce(B)
    b1 = cycles.shape[0] - gf2.rank(facial_cycle_matrix(m))
    return (
        Gf2VectorSpaceBasis(m.num_edges, cycles, "cycle"),
        Gf2VectorSpaceBasis(m.num_edges, cuts, "cut"),
        b1,
    )


def homology_cycles(m: CombinatorialMap) -> np.ndarray:
    """Cycles completing the facial cycles to a basis of the cycle space.

    These are the boundary-less (homologically non-trivial) cycles; there are
    ``2 * genus`` of them.
    """
    cycles, _, _ = cycle_cut_spaces(m)
    return gf2.complement_basis(facial_cycle_matrix(m), cycles.vectors)


def cycle_space_is_dual_cut_space(m: CombinatorialMap) -> bool:
    """Subspace equality ``Z(G) == C*(G*)``; edge ids agree between a map
    and its dual, so the comparison is coordinate-wise."""
    cycles, _, _ = cycle_cut_spaces(m)
    _, dual_cuts, _ = cycle_cut_spaces(dual(m))
    return gf2.same_span(cycles.vectors, dual_cuts.vectors)


# ---------------------------------------------------------------------------
# construction from face lists

Dart = tuple[Hashable, Hashable, bool]


def map_from_faces(faces: Sequence[Sequence[Dart]], *, meta: dict | None = None) -> CombinatorialMap:
    """Build a map from faces given as dart cycles.

    Each dart is ``(tail_vertex, edge_key, forward)``; the two darts of an
    edge share ``edge_key`` and differ in ``forward``.  Faces must be
    consistently oriented (every dart used at most once).  Darts left unused
    are chained into extra boundary faces by matching heads to tails.

    Edges are numbered by first appearance; the dart running forward along
    edge ``i`` gets id ``2i`` and its partner ``2i + 1``.
    """
    edge_ids: dict[Hashable, int] = {}
    tail: dict[int, Hashable] = {}
    phi: dict[int, int] = {}

    def dart_id(key, forward):
        if key not in edge_ids:
            edge_ids[key] = len(edge_ids)
        return 2 * edge_ids[key] + (0 if forward else 1)

    cycles = []
    for face in faces:
        ids = []
        for v, key, fwd in face:
            d = dart_id(key, fwd)
            if d in tail:
                raise ValidationError(f"dart {(key, fwd)} used twice; faces are not consistently oriented")
            tail[d] = v
            ids.append(d)
        cycles.append(ids)
    for ids in cycles:
        for i, d in enumerate(ids):
            phi[d] = ids[(i + 1) % len(ids)]

    n = 2 * len(edge_ids)
    head = {d: tail[phi[d]] for d in phi}
    missing = [d for d in range(n) if d not in tail]
    for d in missing:
        tail[d] = head[d ^ 1]
    by_tail: dict[Hashable, list[int]] = {}
    for d in missing:
        by_tail.setdefault(tail[d], []).append(d)
    for d in missing:
        nxt = by_tail.get(tail[d ^ 1], [])
        if len(nxt) != 1:
            raise ValidationError(f"boundary is not a disjoint union of simple cycles near vertex {tail[d ^ 1]!r}")
        phi[d] = nxt[0]

    alpha = [d ^ 1 for d in range(n)]
    sigma = [phi[alpha[d]] for d in range(n)]
    m = build_map(n, alpha, sigma, meta=meta)
    m.meta["_vertex_labels"] = [tail[o[0]] for o in m.vertices]
    m.meta["_edge_ids"] = edge_ids
    for orbit in m.vertices:
        labels = {tail[d] for d in orbit}
        if len(labels) != 1:
            raise ValidationError(f"rotation orbit mixes vertices {sorted(map(repr, labels))}")
    if len({tail[o[0]] for o in m.vertices}) != m.num_vertices:
        raise ValidationError("a vertex is not a disk neighbourhood (pinched surface)")
    return m


def polygons_to_faces(polygons: Sequence[Sequence[Hashable]], *, orient: bool = True) -> list[list[Dart]]:
    """Turn vertex cycles of a simple graph into dart cycles for
    :func:`map_from_faces`, flipping faces to a consistent orientation."""
    polys = [list(p) for p in polygons]
    if orient and polys:
        flipped = [None] * len(polys)
        edge_faces: dict[frozenset, list[int]] = {}
        for i, p in enumerate(polys):
            for a, b in zip(p, p[1:] + p[:1]):
                edge_faces.setdefault(frozenset((a, b)), []).append(i)
        for root in range(len(polys)):
            if flipped[root] is not None:
                continue
            flipped[root] = False
            queue = deque([root])
            while queue:
                i = queue.popleft()
                p = polys[i][::-1] if flipped[i] else polys[i]
                for a, b in zip(p, p[1:] + p[:1]):
                    for j in edge_faces[frozenset((a, b))]:
                        if j == i:
                            continue
                        q = polys[j]
                        pairs = set(zip(q, q[1:] + q[:1]))
                        want_flip = (a, b) in pairs
                        if flipped[j] is None:
                            flipped[j] = want_flip
                            queue.append(j)
                        elif flipped[j] != want_flip:
                            raise ValidationError("face list is not orientable")
        polys = [p[::-1] if f else p for p, f in zip(polys, flipped)]
    out = []
    for p in polys:
        face = []
        for a, b in zip(p, p[1:] + p[:1]):
            key = (a, b) if _lt(a, b) else (b, a)
            face.append((a, key, key == (a, b)))
        out.append(face)
    return out


def _lt(a, b) -> bool:
    try:
        return a < b
    except TypeError:
        return repr(a) < repr(b)


def face_id_of(m: CombinatorialMap, face: Sequence[Dart]) -> int:
    """Face id, in a map built by :func:`map_from_faces`, of one input face."""
    _, key, fwd = face[0]
    return m.face_of[2 * m.meta["_edge_ids"][key] + (0 if fwd else 1)]


def map_from_polygons(polygons: Sequence[Sequence[Hashable]], *, meta: dict | None = None) -> CombinatorialMap:
    return map_from_faces(polygons_to_faces(polygons), meta=meta)


def triangles_of(adjacency: dict[Hashable, set]) -> list[tuple]:
    """All 3-cliques of a graph, used to read off triangulated solids."""
    out = []
    for a, b, c in combinations(sorted(adjacency), 3):
        if b in adjacency[a] and c in adjacency[a] and c in adjacency[b]:
            out.append((a, b, c))
    return out
