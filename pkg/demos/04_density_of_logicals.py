"""Why only the toric and color codes keep a vanishing logical density.

Counting generators against qubits tells whether a lattice family leaves
local logical operators behind.  The offending families are shown with an
explicit low-weight logical operator.
"""

from __future__ import annotations

from homcode import features, lattices, pauli

for name in ["square_torus:L=4", "hex_torus:a=3", "torus_488:L=2", "torus_31212:a=3", "hex_torus_defect:a=3", "mixed_strip:W=4,H=4"]:
    report = features.density_analysis(lattices.generate(name)).to_dict()
    print(f"{name:22s} F_avg={report['F_avg']:>5s} m_required={report['m_required']:>4s} "
          f"m_max={report['m_max']:>5s} density={report['density']:>4s} -> {report['verdict']}")

# %% Low-weight logical operators in the persistent families
for label, code in [
    ("3.12.12 torus", features.uniform_letter_code(lattices.torus_31212(3))),
    ("pentagon/heptagon torus", features.uniform_letter_code(lattices.hex_torus_defect(3))),
    ("mixed 3/4-valent strip", features.mixed_strip_code(4, 4)),
]:
    logical = pauli.find_logical(code.generators(), 3)
    print(f"{label}: k={code.params().k}, logical of weight {logical.weight}: {logical}")

# %% Average face size from Euler's formula
print("F_avg 4-valent torus:", features.favg_analysis(4, 1, 16))
print("F_avg 3-valent torus, V=18:", features.favg_analysis(3, 1, 18))
print("F_avg octahedron:", features.favg_analysis(4, 0, 6))
