"""
Catalogs by complexity
======================

Every saddle-focus singularity of complexity 1, 2 and 3, then a look at
complexity 4 where the catalog is no longer checked against a list.
"""

from collections import Counter

from sfatlas.classify import classify, render

for p in (1, 2, 3):
    print(render(classify(p)))

cat = classify(4)
print(f"complexity 4: {len(cat)} singularities, {len(cat.warnings)} unresolved pairs")
print("by group order:", dict(sorted(Counter(e.model.k for e in cat.entries).items())))
print("largest symmetry groups:", sorted({(e.sym_order, e.atom_name) for e in cat.entries})[-3:])
