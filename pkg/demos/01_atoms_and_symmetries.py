"""
Saddle atoms and their symmetries
=================================

Every atom of small complexity, its boundary circles, genus and symmetry
group, followed by the X/Y series and the moves that identify atoms.
"""

from sfatlas.atom import (
    boundary_circles,
    canonical_form,
    enumerate_atoms,
    extended_symmetries,
    genus,
    half_turn_count,
    identify,
    standard_series,
    symmetry_group,
)
from sfatlas.permgroup import iso_type

# atoms up to complexity 3, by name
for m in (1, 2, 3):
    print(f"complexity {m}:")
    for f in sorted(enumerate_atoms(m), key=identify):
        g = symmetry_group(f)
        print(f"  {identify(f):3} circles={boundary_circles(f)} genus={genus(f)} Sym={iso_type(g)}")

# complexity 4 grows quickly
print("atoms of complexity 4:", len(enumerate_atoms(4)))

# X3 and Y3 are one atom seen with the two signs of the function
x3, y3 = standard_series("X", 3), standard_series("Y", 3)
print("X3 == Y3 as atoms:", canonical_form(x3) == canonical_form(y3), "->", identify(x3))

# only X_m and Y_m carry an involution fixing every saddle
for m in (2, 3, 4):
    special = [
        identify(f)
        for f in enumerate_atoms(m)
        if any(half_turn_count(f, g) == m for g in symmetry_group(f) if g != tuple(range(2 * m)))
    ]
    print(f"m={m}: atoms with an all-fixing symmetry: {special}")

# the extended symmetries of C2 include a flip swapping two half-turns
c2 = next(f for f in enumerate_atoms(2) if identify(f) == "C2")
moves = sorted({tag for _, tag in extended_symmetries(c2)})
print("C2 extended symmetries:", len(extended_symmetries(c2)), "moves", moves)
