"""Almost direct products ``(V_m x F_n) / G`` and simple minimal models.

A group element is a pair ``(atom permutation, FocusAutomorphism)`` acting
component-wise. :func:`reduce` factors out the subgroup ``N`` generated by
elements that are trivial on the atom or fix the rank-0 points of the focus
factor, leaving a cyclic group that acts on the quotient factors as a
simple minimal model.

The singular leaf of a simple minimal model is stratified by orbits: over
each edge ``v`` of the atom's singular graph and each rank-0 point ``x_i``
sits a one-dimensional orbit, and over ``v`` and the focus orbit ``c_j`` a
three-dimensional one (a solid torus). The chain invariant groups these
into connected chains of adjoined one- and three-dimensional orbits.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

from .atom import (
    FGraph,
    canonical_form,
    find_named,
    free_on_atom,
    half_turn_count,
    identify,
    induced_permutation,
    quotient_atom,
    rank0_points,
    symmetry_group,
    symmetry_orbits_on_cycles,
)
from .errors import NonFreeActionError, NotAHomomorphismError, ValidationError
from .focus import FocusAutomorphism, parse_angle, shift_automorphism
from .permgroup import (
    Perm,
    PermutationGroup,
    check_perm,
    compose,
    cycles,
    identity,
    is_identity,
    perm_order,
    power,
)

Element = tuple  # (Perm, FocusAutomorphism)


def _mul(x: Element, y: Element) -> Element:
    return compose(x[0], y[0]), x[1] * y[1]


def _describe(x: Element) -> str:
    a = x[1]
    return f"(atom {list(x[0])}, shift {a.shift}, angle {a.angle})"


@dataclass(frozen=True)
class AlmostDirectProduct:
    atom: FGraph
    n: int
    generators: tuple
    elements: frozenset = field(repr=False, compare=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    def to_json(self, atom_name: str | None = None) -> dict:
        return {
            "format": "adp-v1",
            "atom": atom_name if atom_name is not None else self.atom.to_json(),
            "focus_complexity": self.n,
            "generators": [
                {"atom_perm": list(p), "focus_shift": a.shift, "focus_angle": a.to_json()["angle"]}
                for p, a in self.generators
            ],
        }


def build(atom: FGraph, n: int, generators: Sequence[tuple], order: int | None = None) -> AlmostDirectProduct:
    """Validate a component-wise action and return the product.

    ``generators`` holds ``(atom_perm, FocusAutomorphism)`` pairs. When
    ``order`` is given, the generated group must have exactly that order.
    """
    sym = symmetry_group(atom)
    gens = []
    for p, a in generators:
        p = check_perm(p, atom.degree)
        if p not in sym.elements:
            raise ValidationError(f"{list(p)} is not a symmetry of the atom")
        if a.n != n:
            raise ValidationError(f"focus part acts on F{a.n}, expected F{n}")
        gens.append((p, a))

    e = (identity(atom.degree), FocusAutomorphism(n, 0))
    elements = {e}
    frontier = [e]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = _mul(g, x)
                if y not in elements:
                    elements.add(y)
                    new.append(y)
        frontier = new
    if order is not None and len(elements) != order:
        raise NotAHomomorphismError(f"generators close to a group of order {len(elements)}, declared {order}")

    for x in elements:
        p, a = x
        if x == e or a.shift != 0:
            continue
        if is_identity(p):
            raise NonFreeActionError(
                f"{_describe(x)} fixes every point of the atom over the focus rank-0 points",
                element=x,
                witness=("focus-rank0", 0),
            )
        if not free_on_atom(atom, p):
            fixed = next(pt for pt in rank0_points(atom) if p[pt[0]] in pt)
            raise NonFreeActionError(
                f"{_describe(x)} fixes the saddle {fixed} of the atom and the focus rank-0 points",
                element=x,
                witness=("rank0", fixed),
            )
    return AlmostDirectProduct(atom, n, tuple(gens), frozenset(elements))


def adp_from_json(data: dict, table: dict | None = None) -> AlmostDirectProduct:
    if data.get("format") != "adp-v1":
        raise ValidationError(f"unsupported model format {data.get('format')!r}")
    atom_spec = data["atom"]
    atom = find_named(atom_spec, table) if isinstance(atom_spec, str) else FGraph.from_json(atom_spec)
    n = int(data["focus_complexity"])
    gens = []
    for g in data.get("generators", []):
        gens.append(
            (
                check_perm(g["atom_perm"], atom.degree),
                shift_automorphism(n, int(g.get("focus_shift", 0)) % n, parse_angle(g.get("focus_angle", "0/1"))),
            )
        )
    return build(atom, n, gens, order=data.get("group_order"))


@dataclass(frozen=True)
class SimpleMinimalModel:
    """``(atom x F_n) / Z_k`` with generator ``(generator, shift n/k)``."""

    atom: FGraph
    n: int
    k: int
    generator: Perm

    def __post_init__(self):
        g = check_perm(self.generator, self.atom.degree)
        object.__setattr__(self, "generator", g)
        if self.k < 1 or self.n % self.k:
            raise ValidationError(f"group order {self.k} does not divide focus complexity {self.n}")
        if g not in symmetry_group(self.atom).elements:
            raise ValidationError(f"{list(g)} is not a symmetry of the atom")
        if perm_order(g) != self.k:
            raise ValidationError(f"atom generator has order {perm_order(g)}, expected {self.k}")

    @property
    def m(self) -> int:
        return self.atom.m

    @property
    def focus_generator(self) -> FocusAutomorphism:
        return FocusAutomorphism(self.n, self.n // self.k)

    def as_adp(self) -> AlmostDirectProduct:
        return build(self.atom, self.n, [(self.generator, self.focus_generator)])

    def to_json(self, atom_name: str | None = None) -> dict:
        return self.as_adp().to_json(atom_name)


def direct_product(atom: FGraph, n: int) -> SimpleMinimalModel:
    return SimpleMinimalModel(atom, n, 1, identity(atom.degree))


# -- reduction ---------------------------------------------------------------------


def reduce(adp: AlmostDirectProduct) -> tuple[SimpleMinimalModel, dict]:
    """Factor out ``N`` and return the simple minimal model with a report."""
    atom, n = adp.atom, adp.n
    elements = list(adp.elements)
    zero_shift = [x for x in elements if x[1].shift == 0]
    atom_trivial = [x for x in elements if is_identity(x[0])]
    n_sub = {_mul(x, y) for x in zero_shift for y in atom_trivial}
    assert len(n_sub) == len(zero_shift) * len(atom_trivial)
    unit = (identity(atom.degree), FocusAutomorphism(n, 0))
    for g in elements:
        gi = next(y for y in elements if _mul(g, y) == unit)
        # N is generated by two kernels, so it is normal
        assert all(_mul(_mul(g, x), gi) in n_sub for x in n_sub)

    hamiltonian_part = PermutationGroup(atom.degree, frozenset(x[0] for x in zero_shift))
    n_prime = math.gcd(n, *(x[1].shift for x in atom_trivial))
    k = len(elements) // len(n_sub)
    if n_prime % k:
        raise AssertionError(f"quotient group of order {k} cannot act freely on F{n_prime}")

    target = n_prime // k if k > 1 else 0
    chosen = None
    for g in sorted(elements, key=lambda x: (x[0], x[1].shift, x[1].angle)):
        if g[1].shift % n_prime == target:
            chosen = g
            break
    assert chosen is not None, "G/N is not cyclic"

    new_atom = atom if hamiltonian_part.order == 1 else quotient_atom(atom, hamiltonian_part)
    new_gen = chosen[0] if hamiltonian_part.order == 1 else induced_permutation(atom, hamiltonian_part, chosen[0])
    model = SimpleMinimalModel(new_atom, n_prime, k, new_gen)
    report = {
        "group_order": len(elements),
        "N_order": len(n_sub),
        "N_zero_shift_order": len(zero_shift),
        "N_atom_trivial_order": len(atom_trivial),
        "m": atom.m,
        "n": n,
        "m_prime": new_atom.m,
        "n_prime": n_prime,
        "k": k,
    }
    return model, report


# -- invariants --------------------------------------------------------------------


def half_order_fixed_count(model: SimpleMinimalModel) -> int:
    """Saddles fixed by the involution ``a^(k/2)``; zero when ``k`` is odd or 1."""
    if model.k % 2 or model.k == 1:
        return 0
    return half_turn_count(model.atom, power(model.generator, model.k // 2))


def rank0_count(model: SimpleMinimalModel) -> int:
    assert (model.m * model.n) % model.k == 0
    return model.m * model.n // model.k


def m1_decomposition(model: SimpleMinimalModel, table: dict | None = None) -> tuple[str, int]:
    return identify(model.atom, table), model.n // model.k


def m2_decomposition(model: SimpleMinimalModel) -> tuple[tuple[int, int], ...]:
    """Focus singularities (complexity, copies) on the rank-2 stratum, sorted."""
    m, n, k = model.m, model.n, model.k
    if k % 2:
        assert m % k == 0
        terms = [(n, m // k)]
    else:
        s = half_order_fixed_count(model)
        k1 = k // 2
        assert (m - s) % k == 0 and s % k1 == 0 and n % 2 == 0
        terms = [(n, (m - s) // k), (n // 2, s // k1)]
    return tuple(sorted(t for t in terms if t[1]))


def torus_counts(model: SimpleMinimalModel) -> tuple[int, int]:
    """Tori over the two half-spaces: orbits on negative and positive circles, sorted."""
    g = model.generator
    neg = symmetry_orbits_on_cycles(cycles(model.atom.sigma), g)
    pos = symmetry_orbits_on_cycles(cycles(compose(model.atom.sigma, model.atom.tau)), g)
    return tuple(sorted((neg, pos)))


def quotient_incidence_graph(model: SimpleMinimalModel) -> tuple[list[tuple], list[tuple]]:
    """Adjacency of one- and three-dimensional orbit classes on the quotient leaf.

    Nodes are ``(v, "x", i)`` and ``(v, "c", j)`` where ``v`` runs over
    representatives of ``<a>``-orbits of edges and ``i, j`` over residues
    modulo the shift of the stabilizer of ``v``.
    """
    n, k, g = model.n, model.k, model.generator
    step = n // k
    seen = set()
    nodes: list[tuple] = []
    edges: list[tuple] = []
    for v in range(model.atom.degree):
        if v in seen:
            continue
        orbit = [v]
        w = g[v]
        while w != v:
            orbit.append(w)
            w = g[w]
        seen.update(orbit)
        # g^len(orbit) fixes v; it shifts the focus by len(orbit) * step
        period = math.gcd(n, len(orbit) * step)
        nodes += [(v, "x", i) for i in range(period)] + [(v, "c", j) for j in range(period)]
        for j in range(period):
            edges.append(((v, "x", j % period), (v, "c", j)))
            edges.append(((v, "x", (j + 1) % period), (v, "c", j)))
    return nodes, edges


def chain_invariant(model: SimpleMinimalModel) -> tuple[tuple[int, int], ...]:
    """Sorted (one-dimensional, three-dimensional) orbit counts per chain."""
    nodes, edges = quotient_incidence_graph(model)
    parent = {x: x for x in nodes}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    counts: dict = {}
    for x in nodes:
        ones, threes = counts.get(find(x), (0, 0))
        counts[find(x)] = (ones + 1, threes) if x[1] == "x" else (ones, threes + 1)
    return tuple(sorted(counts.values()))


def to_dot(model: SimpleMinimalModel, name: str = "chains") -> str:
    nodes, edges = quotient_incidence_graph(model)

    def label(x):
        v, kind, i = x
        return f'"e{v}_{kind}{i}"'

    lines = [f'graph "{name}" {{']
    for x in nodes:
        shape = "box" if x[1] == "c" else "circle"
        lines.append(f"  {label(x)} [shape={shape}];")
    for a, b in edges:
        lines.append(f"  {label(a)} -- {label(b)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Fingerprint:
    atom_canonical: FGraph
    n: int
    k: int
    s: int
    rank0_count: int
    m1: tuple
    m2: tuple
    torus_pair: tuple
    chains: tuple

    def to_json(self) -> dict:
        return {
            "atom_canonical": {"sigma": list(self.atom_canonical.sigma), "tau": list(self.atom_canonical.tau)},
            "n": self.n,
            "k": self.k,
            "s": self.s,
            "rank0_count": self.rank0_count,
            "m1": {"atom": self.m1[0], "copies": self.m1[1]},
            "m2": [list(t) for t in self.m2],
            "torus_pair": list(self.torus_pair),
            "chains": [list(c) for c in self.chains],
        }


def fingerprint(model: SimpleMinimalModel, table: dict | None = None) -> Fingerprint:
    return Fingerprint(
        atom_canonical=canonical_form(model.atom),
        n=model.n,
        k=model.k,
        s=half_order_fixed_count(model),
        rank0_count=rank0_count(model),
        m1=m1_decomposition(model, table),
        m2=m2_decomposition(model),
        torus_pair=torus_counts(model),
        chains=chain_invariant(model),
    )


def display_name(atom_name: str, n: int, k: int) -> str:
    if k == 1:
        return f"{atom_name} x F{n}"
    return f"({atom_name} x F{n})/Z{k}"


def chain_summary(chains: tuple) -> str:
    return ", ".join(f"{c} x ({a},{b})" for (a, b), c in sorted(Counter(chains).items()))


__all__ = [
    "AlmostDirectProduct",
    "SimpleMinimalModel",
    "Fingerprint",
    "build",
    "adp_from_json",
    "direct_product",
    "reduce",
    "rank0_count",
    "m1_decomposition",
    "m2_decomposition",
    "torus_counts",
    "chain_invariant",
    "quotient_incidence_graph",
    "fingerprint",
    "display_name",
    "to_dot",
]
