"""Color codes on 3-valent lattices and the three label-set classes.

A vertex where three two-generator faces meet can be labelled in exactly
three inequivalent ways.  Each gives a code with the same parameters.
"""

from __future__ import annotations

from homcode import hsc, lattices, surface

# %% Which local label sets survive the commutation and detection rules?
for valence, gens in [(4, 1), (3, 2), (5, 1), (4, 2)]:
    classes = hsc.enumerate_label_classes(valence, gens)
    print(f"valence {valence}, {gens} generator(s) per face: {[str(c) for c in classes]}")

# %% Build each class on the 18-qubit hexagonal torus
m = lattices.hex_torus(3, 3)
coloring = surface.face_coloring(m, 3)
print("face colors:", [surface.COLOR_NAMES[c] for c in coloring.colors])
for cls in (1, 2, 3):
    code = hsc.build_tcc(m, cls)
    p = code.params()
    print(f"class {cls}: n={p.n} checks={p.s_generators_given} independent={p.s_independent} k={p.k}",
          "label set", hsc.vertex_label_set(code, 0))

# %% The truncated square lattice (4.8.8) also carries a color code
print("4.8.8 torus k =", hsc.build_tcc(lattices.torus_488(2)).params().k)

# %% The classifier picks the family from the graph alone
for name in ["square_torus:L=4", "hex_torus:a=3", "dodecahedron", "icosahedron", "polygon:n=6", "mixed_strip:W=4,H=4"]:
    print(f"{name:22s}", hsc.classify(lattices.generate(name)).to_dict())
