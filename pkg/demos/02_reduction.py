"""
Reducing an almost direct product
=================================

A Z2 action on D1 x F1 that flows half a period along the focus circle
is not a simple minimal model: the flow can be removed, and the quotient
of D1 by its free involution is B.
"""

from fractions import Fraction

from sfatlas.atom import FGraph, find_named, identify, symmetry_group
from sfatlas.errors import NonFreeActionError
from sfatlas.focus import shift_automorphism
from sfatlas.model import build, display_name, reduce

d1 = find_named("D1")
inv = next(g for g in symmetry_group(d1) if g != (0, 1, 2, 3))
adp = build(d1, 1, [(inv, shift_automorphism(1, 0, Fraction(1, 2)))])
model, report = reduce(adp)
print("report:", report)
print("result:", display_name(identify(model.atom), model.n, model.k))

# two generators on C2 x F2: a half-period rotation and a shifting half-turn
c2 = FGraph.from_perms([1, 0, 3, 2], [2, 3, 0, 1])
adp = build(
    c2,
    2,
    [((1, 0, 3, 2), shift_automorphism(2, 0, Fraction(1, 2))), ((2, 3, 0, 1), shift_automorphism(2, 1))],
)
model, report = reduce(adp)
print("|G| =", adp.order, "|N| =", report["N_order"])
print("result:", display_name(identify(model.atom), model.n, model.k))

# the involution of B fixes its saddle, so pairing it with a pure flow is not free
b = find_named("B")
try:
    build(b, 1, [((1, 0), shift_automorphism(1, 0, Fraction(1, 2)))])
except NonFreeActionError as exc:
    print("rejected:", exc)
