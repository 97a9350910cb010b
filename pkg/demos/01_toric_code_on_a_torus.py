"""Toric code from a 4-valent torus lattice.

Build the square lattice on a torus, color its faces like a checkerboard,
put X checks on red faces and Z checks on green faces, then count logical
qubits and find the distance.
"""

from __future__ import annotations

from homcode import hsc, lattices, pauli, surface

# %% The lattice as a combinatorial map
m = lattices.square_torus(4)
chi, genus = surface.euler_genus(m)
print(f"V={m.num_vertices} E={m.num_edges} F={m.num_faces}  chi={chi} genus={genus}")

# Cycles that are not sums of faces: exactly two on a torus.
cycles, cuts, b1 = surface.cycle_cut_spaces(m)
print(f"cycle space dim {cycles.dimension}, cut space dim {cuts.dimension}, b1 = {b1}")

# %% The code
code = hsc.build_ktc(m)
params = code.params()
d = pauli.min_distance(code.generators(), 4)
print(f"[[{params.n},{params.k},{d}]] with {params.redundancies} redundant checks")
print("label set at vertex 0:", hsc.vertex_label_set(code, 0))

# %% Logical operators wrap around the torus
for xbar, zbar in pauli.logical_basis(code.generators()):
    print("X-bar", xbar, " Z-bar", zbar)

# %% A single bit flip lights up two green faces
err = pauli.PauliWord.from_letters(code.n, {5: "X"})
print("X on qubit 5 violates", hsc.excitations(code, err))

# %% Rotating the label set on one sublattice gives the plaquette model
side = surface.vertex_bipartition(m)
half = frozenset(v for v in range(m.num_vertices) if side[v] == 0)
lwpm = hsc.apply_label_transform(code, hsc.Rotation(1, half))
print("rotated face generators:", sorted({fg.generators[0] for fg in lwpm.faces}))
print("same parameters:", lwpm.params() == params, pauli.min_distance(lwpm.generators(), 4) == d)
