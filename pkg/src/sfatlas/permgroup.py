"""Small permutation groups stored as explicit element sets.

Permutations are tuples of 0-based images: ``p[i]`` is the image of ``i``.
``compose(p, q)`` is ``p o q`` and applies ``q`` first.

Groups here are tiny (orders at most a few dozen), so every group keeps
its full element set and all queries are brute force.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import ValidationError

Perm = tuple


def check_perm(images: Sequence[int], degree: int | None = None) -> Perm:
    """Return ``images`` as a tuple after checking it is a bijection."""
    p = tuple(int(x) for x in images)
    d = len(p)
    if degree is not None and d != degree:
        raise ValidationError(f"permutation {list(p)} has degree {d}, expected {degree}")
    if sorted(p) != list(range(d)):
        raise ValidationError(f"{list(p)} is not a bijection of 0..{d - 1}")
    return p


def identity(degree: int) -> Perm:
    return tuple(range(degree))


def compose(p: Perm, q: Perm) -> Perm:
    """``p o q``: apply ``q`` first, then ``p``."""
    return tuple(p[i] for i in q)


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def conjugate(pi: Perm, p: Perm) -> Perm:
    """``pi o p o pi^-1``, i.e. ``p`` written in the labels given by ``pi``."""
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[pi[i]] = pi[j]
    return tuple(out)


def power(p: Perm, k: int) -> Perm:
    k %= perm_order(p)
    result = identity(len(p))
    for _ in range(k):
        result = compose(p, result)
    return result


def cycles(p: Perm) -> list[tuple[int, ...]]:
    """Cycles of ``p`` (fixed points included), each starting at its minimum."""
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(i)
            i = p[i]
        out.append(tuple(cyc))
    return out


def num_cycles(p: Perm) -> int:
    return len(cycles(p))


def perm_order(p: Perm) -> int:
    return math.lcm(*(len(c) for c in cycles(p))) if p else 1


def is_identity(p: Perm) -> bool:
    return all(i == j for i, j in enumerate(p))


@dataclass(frozen=True)
class PermutationGroup:
    """A finite permutation group given by its full element set."""

    degree: int
    elements: frozenset = field(repr=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, p) -> bool:
        return tuple(p) in self.elements

    def __iter__(self):
        return iter(sorted(self.elements))

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Perm:
        return identity(self.degree)

    def generators(self) -> list[Perm]:
        """A small generating set, chosen greedily in sorted element order."""
        gens: list[Perm] = []
        current = frozenset([self.identity])
        for g in sorted(self.elements, key=lambda q: (-perm_order(q), q)):
            if g not in current:
                gens.append(g)
                current = generate(self.degree, gens).elements
            if len(current) == len(self.elements):
                break
        return gens

    def is_abelian(self) -> bool:
        els = list(self.elements)
        return all(compose(a, b) == compose(b, a) for a in els for b in els)

    def to_json(self) -> dict:
        return {"degree": self.degree, "generators": [list(g) for g in self.generators()]}

    @classmethod
    def from_json(cls, data: dict) -> "PermutationGroup":
        return generate(int(data["degree"]), [check_perm(g) for g in data["generators"]])


def generate(degree: int, generators: Iterable[Sequence[int]]) -> PermutationGroup:
    """Closure of ``generators`` under composition."""
    gens = [check_perm(g, degree) for g in generators]
    e = identity(degree)
    elements = {e}
    frontier = [e]
    while frontier:
        new = []
        for a in frontier:
            for g in gens:
                b = compose(g, a)
                if b not in elements:
                    elements.add(b)
                    new.append(b)
        frontier = new
    return PermutationGroup(degree, frozenset(elements))


def cyclic_subgroup(degree: int, g: Perm) -> PermutationGroup:
    return generate(degree, [g])


def iso_type(g: PermutationGroup) -> str:
    """Isomorphism label of a small group.

    Cyclic groups get ``Z<k>``, the Klein four-group ``Z2+Z2`` and the
    nonabelian group of order 6 ``S3``. Anything else falls back to
    ``order-<N>-abelian`` / ``order-<N>-nonabelian``.
    """
    n = g.order
    if n == 1:
        return "e"
    orders = [perm_order(x) for x in g.elements]
    if max(orders) == n:
        return f"Z{n}"
    abelian = g.is_abelian()
    if n == 4:
        return "Z2+Z2"
    if n == 6 and not abelian:
        return "S3"
    return f"order-{n}-{'abelian' if abelian else 'nonabelian'}"


def cyclic_subgroups(g: PermutationGroup) -> list[PermutationGroup]:
    """Every cyclic subgroup of ``g`` once, sorted by order then elements."""
    seen = {}
    for x in g.elements:
        h = cyclic_subgroup(g.degree, x)
        seen[h.elements] = h
    return sorted(seen.values(), key=lambda h: (h.order, sorted(h.elements)))


def conjugate_group(pi: Perm, h: PermutationGroup) -> PermutationGroup:
    return PermutationGroup(h.degree, frozenset(conjugate(pi, x) for x in h.elements))


def are_conjugate(h1: PermutationGroup, h2: PermutationGroup, conjugators: Iterable[Sequence[int]]) -> bool:
    """True iff some listed ``pi`` has ``pi h1 pi^-1 == h2`` as sets."""
    if h1.degree != h2.degree:
        raise ValidationError(f"degree mismatch: {h1.degree} vs {h2.degree}")
    if h1.order != h2.order:
        for pi in conjugators:
            check_perm(pi, h1.degree)
        return False
    for pi in conjugators:
        pi = check_perm(pi, h1.degree)
        if conjugate_group(pi, h1).elements == h2.elements:
            return True
    return False
