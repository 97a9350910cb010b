"""Logical qubits from punctures and from colored boundaries."""

from __future__ import annotations

from homcode import features, hsc, lattices, pauli

# %% Punctures: removing checks from faces of one color
code = hsc.build_ktc(lattices.square_torus(4))
red = [f for f, c in enumerate(code.coloring.colors) if c == 0]
p = code
for f in red[:3]:
    p = features.puncture(p, f)
    count = features.hole_logical_count(p)
    print(f"{len(p.removed)} red holes: k={p.params().k}  per color {count.per_hole_type}  rank delta {count.rank_delta}")

# %% Color code holes of one type on all three colors break a second relation
tcc = hsc.build_tcc(lattices.hex_torus(6, 6))
q = tcc
for color in range(3):
    face = next(f for f, c in enumerate(tcc.coloring.colors) if c == color)
    q = features.puncture(q, face, [0])
print("TCC, one X hole per color:", features.hole_logical_count(q).to_dict())

# %% Planar patches
for family, boundaries, size in [("KTC", 4, 3), ("KTC", 6, 3), ("KTC", 8, 4), ("TCC", 3, 0), ("TCC", 3, 1), ("TCC", 4, 1)]:
    patch = features.build_boundary_patch(family, boundaries, size)
    print(family, patch.boundary_colors, features.boundary_logical_count(patch))

triangle = features.build_boundary_patch("TCC", 3, 0).code
print("smallest triangle: n =", triangle.n, "d =", pauli.min_distance(triangle.generators(), 3))
