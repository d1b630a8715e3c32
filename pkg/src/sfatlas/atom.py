"""Saddle 2-atoms encoded as f-graphs.

An atom of complexity ``m`` is a pair of permutations on ``2m`` points:

* ``sigma`` -- its cycles are the negative boundary circles, traversed in
  the orientation of the surface;
* ``tau`` -- a fixed-point-free involution; each pair is one saddle
  (rank-0) point.

Points double as the ``2m`` edges of the singular graph ``K``: point ``c``
is the edge leaving the corner ``c`` along its negative circle, and ends at
the saddle of ``sigma(c)``. The positive boundary circles are the cycles
of ``sigma o tau`` (``tau`` applied first).

Two f-graphs describe the same atom when they are related by a
relabeling, possibly combined with the *mirror* move (orientation
reversal, ``sigma -> sigma^-1``) and the *flip* move (sign of the
function, ``sigma -> sigma o tau``). The symmetry group only uses the pure
centralizer of ``sigma`` and ``tau``.
"""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Iterator, Sequence

from .errors import BoundsError, NonFreeActionError, ValidationError
from .permgroup import (
    Perm,
    PermutationGroup,
    check_perm,
    compose,
    conjugate,
    inverse,
    is_identity,
    num_cycles,
    perm_order,
    power,
)

MAX_COMPLEXITY = 6

IDENTITY_MOVE = "identity"
MIRROR = "mirror"
FLIP = "flip"
MIRROR_FLIP = "mirror-flip"
MOVES = (IDENTITY_MOVE, MIRROR, FLIP, MIRROR_FLIP)
_MOVE_BITS = {IDENTITY_MOVE: (0, 0), MIRROR: (1, 0), FLIP: (0, 1), MIRROR_FLIP: (1, 1)}
_BITS_MOVE = {v: k for k, v in _MOVE_BITS.items()}

ENV_NAME_TABLE = "ATLAS_NAME_TABLE"


@dataclass(frozen=True)
class FGraph:
    m: int
    sigma: Perm
    tau: Perm

    def __post_init__(self):
        object.__setattr__(self, "sigma", tuple(self.sigma))
        object.__setattr__(self, "tau", tuple(self.tau))

    @property
    def degree(self) -> int:
        return 2 * self.m

    @classmethod
    def from_perms(cls, sigma: Sequence[int], tau: Sequence[int]) -> "FGraph":
        if len(sigma) % 2:
            raise ValidationError(f"f-graph needs an even number of points, got {len(sigma)}")
        return validate(cls(len(sigma) // 2, tuple(sigma), tuple(tau)))

    def key(self) -> tuple:
        return self.sigma + self.tau

    def to_json(self, name: str | None = None) -> dict:
        out = {"format": "fgraph-v1", "complexity": self.m, "sigma": list(self.sigma), "tau": list(self.tau)}
        if name is not None:
            out["name"] = name
        return out

    @classmethod
    def from_json(cls, data: dict) -> "FGraph":
        if data.get("format", "fgraph-v1") != "fgraph-v1":
            raise ValidationError(f"unsupported atom format {data.get('format')!r}")
        f = cls(int(data["complexity"]), tuple(data["sigma"]), tuple(data["tau"]))
        return validate(f)


@dataclass(frozen=True)
class AtomAction:
    """A cyclic group of atom symmetries given by one generator of order ``order``."""

    atom: FGraph
    generator: Perm
    order: int

    def __post_init__(self):
        g = check_perm(self.generator, self.atom.degree)
        object.__setattr__(self, "generator", g)
        if compose(g, self.atom.sigma) != compose(self.atom.sigma, g) or compose(g, self.atom.tau) != compose(
            self.atom.tau, g
        ):
            raise ValidationError(f"{list(g)} is not a symmetry of the atom")
        if perm_order(g) != self.order:
            raise ValidationError(f"{list(g)} has order {perm_order(g)}, not {self.order}")


# -- validation and basic invariants -------------------------------------------------


def _components(n: int, perms: Sequence[Perm]) -> int:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in perms:
        for i, j in enumerate(p):
            a, b = find(i), find(j)
            if a != b:
                parent[a] = b
    return len({find(i) for i in range(n)})


def validate(f: FGraph) -> FGraph:
    if f.m < 1:
        raise ValidationError(f"complexity must be positive, got {f.m}")
    check_perm(f.sigma, 2 * f.m)
    check_perm(f.tau, 2 * f.m)
    if any(f.tau[i] == i or f.tau[f.tau[i]] != i for i in range(2 * f.m)):
        raise ValidationError(f"tau {list(f.tau)} is not a fixed-point-free involution")
    if _components(2 * f.m, (f.sigma, f.tau)) != 1:
        raise ValidationError("f-graph is disconnected")
    return f


def boundary_circles(f: FGraph) -> tuple[int, int]:
    """(negative, positive) numbers of boundary circles."""
    return num_cycles(f.sigma), num_cycles(compose(f.sigma, f.tau))


def genus(f: FGraph) -> int:
    neg, pos = boundary_circles(f)
    twice = 2 + f.m - neg - pos
    assert twice >= 0 and twice % 2 == 0, (f, neg, pos)
    return twice // 2


def rank0_points(f: FGraph) -> list[tuple[int, int]]:
    """The saddle points as sorted ``tau``-pairs."""
    return sorted({tuple(sorted((i, f.tau[i]))) for i in range(f.degree)})


def singular_graph(f: FGraph) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
    """Vertices and edges of the singular leaf ``K``.

    Vertex ``v`` is the ``v``-th entry of :func:`rank0_points`; edge ``c``
    runs from the vertex of ``c`` to the vertex of ``sigma(c)``.
    """
    verts = rank0_points(f)
    where = {}
    for v, (a, b) in enumerate(verts):
        where[a] = where[b] = v
    edges = [(where[c], where[f.sigma[c]]) for c in range(f.degree)]
    return verts, edges


# -- isomorphisms, symmetries and moves ---------------------------------------------


def _isomorphisms(s1: Perm, t1: Perm, s2: Perm, t2: Perm) -> Iterator[Perm]:
    """All ``pi`` with ``pi s1 pi^-1 = s2`` and ``pi t1 pi^-1 = t2`` (connected inputs)."""
    n = len(s1)
    for target in range(n):
        pi = [-1] * n
        used = [False] * n
        pi[0] = target
        used[target] = True
        stack = [0]
        ok = True
        while stack and ok:
            x = stack.pop()
            y = pi[x]
            for a, b in ((s1[x], s2[y]), (t1[x], t2[y])):
                if pi[a] == -1:
                    if used[b]:
                        ok = False
                        break
                    pi[a] = b
                    used[b] = True
                    stack.append(a)
                elif pi[a] != b:
                    ok = False
                    break
        if ok and -1 not in pi:
            yield tuple(pi)


def _move_words(sigma: Perm, tau: Perm) -> dict[str, tuple[Perm, Perm]]:
    """The two ``sigma``-words representing each move; they differ by conjugation with ``tau``."""
    si = inverse(sigma)
    st = compose(sigma, tau)
    return {
        IDENTITY_MOVE: (sigma, conjugate(tau, sigma)),
        MIRROR: (si, conjugate(tau, si)),
        FLIP: (st, compose(tau, sigma)),
        MIRROR_FLIP: (inverse(st), compose(si, tau)),
    }


def apply_move(f: FGraph, move: str) -> FGraph:
    return FGraph(f.m, _move_words(f.sigma, f.tau)[move][0], f.tau)


def compose_moves(a: str, b: str) -> str:
    (x1, y1), (x2, y2) = _MOVE_BITS[a], _MOVE_BITS[b]
    return _BITS_MOVE[(x1 ^ x2, y1 ^ y2)]


def symmetry_group(f: FGraph) -> PermutationGroup:
    """Centralizer of ``sigma`` and ``tau``: the orientation- and sign-preserving symmetries."""
    return _symmetry_group(f.sigma, f.tau)


@lru_cache(maxsize=4096)
def _symmetry_group(sigma: Perm, tau: Perm) -> PermutationGroup:
    return PermutationGroup(len(sigma), frozenset(_isomorphisms(sigma, tau, sigma, tau)))


def isomorphisms(f: FGraph, g: FGraph, moves: Sequence[str] = MOVES) -> list[tuple[Perm, str]]:
    """Relabelings ``pi`` carrying ``f`` onto a move-image of ``g``, tagged with the move.

    ``pi f.sigma pi^-1`` equals one of the words of the move applied to ``g``
    and ``pi f.tau pi^-1 == g.tau``.
    """
    if f.m != g.m:
        return []
    out = {}
    words = _move_words(g.sigma, g.tau)
    for move in moves:
        for w in words[move]:
            for pi in _isomorphisms(f.sigma, f.tau, w, g.tau):
                out.setdefault(pi, move)
    return sorted(out.items())


def extended_symmetries(f: FGraph) -> list[tuple[Perm, str]]:
    """Self-relabelings of ``f`` up to mirror and flip moves, each tagged with its move.

    The set is a group and the tag is a homomorphism onto the Klein group of
    moves. It normalizes :func:`symmetry_group`.
    """
    return isomorphisms(f, f)


# -- canonical forms and enumeration ------------------------------------------------


def _normal_form(sigma: Perm, tau: Perm, root: int) -> tuple:
    """Relabel in traversal order from ``root`` (``sigma`` before ``tau``); return ``sigma' + tau'``."""
    n = len(sigma)
    lab = [-1] * n
    order = [root]
    lab[root] = 0
    i = 0
    while i < len(order):
        x = order[i]
        i += 1
        for y in (sigma[x], tau[x]):
            if lab[y] < 0:
                lab[y] = len(order)
                order.append(y)
    s = [0] * n
    t = [0] * n
    for x in range(n):
        s[lab[x]] = lab[sigma[x]]
        t[lab[x]] = lab[tau[x]]
    return tuple(s) + tuple(t)


def _variants(sigma: Perm, tau: Perm) -> list[Perm]:
    return [w[0] for w in _move_words(sigma, tau).values()]


def _all_normal_forms(sigma: Perm, tau: Perm) -> set:
    return {_normal_form(s, tau, r) for s in _variants(sigma, tau) for r in range(len(sigma))}


def canonical_form(f: FGraph) -> FGraph:
    """Minimal traversal-normal form over all roots and all four moves.

    Equal outputs <=> same atom (up to relabeling, mirror and flip).
    """
    return _canonical(f.sigma, f.tau)


@lru_cache(maxsize=65536)
def _canonical(sigma: Perm, tau: Perm) -> FGraph:
    key = min(_all_normal_forms(sigma, tau))
    n = len(sigma)
    return FGraph(n // 2, key[:n], key[n:])


def _rooted_structures(m: int) -> Iterator[tuple]:
    """Every connected (sigma, tau) on 2m points that is already in traversal normal form from 0."""
    n = 2 * m
    sigma = [-1] * n
    tau = [-1] * n
    has_pre = [False] * n

    def rec(i, nxt):
        if i == n:
            yield tuple(sigma) + tuple(tau)
            return
        if i >= nxt:
            return  # traversal stalled: disconnected
        choices = [j for j in range(nxt) if not has_pre[j]]
        if nxt < n:
            choices.append(nxt)
        for j in choices:
            sigma[i] = j
            has_pre[j] = True
            nxt1 = nxt + 1 if j == nxt else nxt
            if tau[i] >= 0:
                yield from rec(i + 1, nxt1)
            else:
                tchoices = [k for k in range(nxt1) if k != i and tau[k] < 0]
                if nxt1 < n:
                    tchoices.append(nxt1)
                for k in tchoices:
                    tau[i], tau[k] = k, i
                    yield from rec(i + 1, nxt1 + 1 if k == nxt1 else nxt1)
                    tau[i] = tau[k] = -1
            has_pre[j] = False
            sigma[i] = -1

    yield from rec(0, 1)


def enumerate_atoms(m: int, max_complexity: int = MAX_COMPLEXITY) -> list[FGraph]:
    """All saddle atoms of complexity ``m``, one canonical representative each."""
    if m < 1 or m > max_complexity:
        raise BoundsError(f"complexity {m} outside 1..{max_complexity}")
    return list(_enumerate(m))


@lru_cache(maxsize=None)
def _enumerate(m: int) -> tuple[FGraph, ...]:
    n = 2 * m
    seen: set = set()
    found = []
    for key in _rooted_structures(m):
        if key in seen:
            continue
        sigma, tau = key[:n], key[n:]
        forms = _all_normal_forms(sigma, tau)
        seen |= forms
        best = min(forms)
        found.append(FGraph(m, best[:n], best[n:]))
    return tuple(sorted(found, key=lambda f: f.key()))


def standard_series(series: str, m: int) -> FGraph:
    """``X_m``: two co-oriented m-cycles with rungs; ``Y_m``: a 2m-cycle with antipodal matching."""
    if m < 1:
        raise ValidationError(f"series index must be positive, got {m}")
    n = 2 * m
    if series == "X":
        sigma = tuple((i + 1) % m if i < m else m + (i - m + 1) % m for i in range(n))
    elif series == "Y":
        sigma = tuple((i + 1) % n for i in range(n))
    else:
        raise ValidationError(f"unknown series {series!r}")
    tau = tuple((i + m) % n for i in range(n))
    return validate(FGraph(m, sigma, tau))


# -- actions and quotients -----------------------------------------------------------


def rank0_fixed_count(a: AtomAction, power_: int) -> int:
    """Number of saddle points mapped to themselves by ``generator ** power_``."""
    g = power(a.generator, power_)
    return sum(1 for x, y in rank0_points(a.atom) if g[x] in (x, y))


def half_turn_count(f: FGraph, g: Perm) -> int:
    """Number of saddle points fixed (setwise) by ``g``."""
    return sum(1 for x, y in rank0_points(f) if g[x] in (x, y))


def free_on_atom(f: FGraph, g: Perm) -> bool:
    """Whether a symmetry ``g`` acts on the atom surface without fixed points.

    A nontrivial symmetry preserves the orientation of every edge and every
    boundary annulus, so its only possible fixed points are saddles whose two
    corners it exchanges.
    """
    if is_identity(g):
        return False
    return half_turn_count(f, g) == 0 and all(g[i] != i for i in range(len(g)))


def quotient_atom(f: FGraph, h: PermutationGroup) -> FGraph:
    """The atom ``f / h`` for a subgroup ``h`` of the symmetry group acting freely."""
    sym = symmetry_group(f)
    for g in h.elements:
        if g not in sym.elements:
            raise ValidationError(f"{list(g)} is not a symmetry of the atom")
        if is_identity(g):
            continue
        for x in range(f.degree):
            if g[x] == x:
                raise NonFreeActionError(f"{list(g)} fixes point {x}", element=g, witness=("point", x))
            if g[x] == f.tau[x]:
                raise NonFreeActionError(
                    f"{list(g)} fixes the saddle {{{x}, {f.tau[x]}}}", element=g, witness=("rank0", (x, f.tau[x]))
                )
    orbit_of = [-1] * f.degree
    count = 0
    for x in range(f.degree):
        if orbit_of[x] < 0:
            for g in h.elements:
                orbit_of[g[x]] = count
            count += 1
    reps = [orbit_of.index(o) for o in range(count)]
    sigma = tuple(orbit_of[f.sigma[x]] for x in reps)
    tau = tuple(orbit_of[f.tau[x]] for x in reps)
    assert count * h.order == f.degree
    return validate(FGraph(count // 2, sigma, tau))


def induced_permutation(f: FGraph, h: PermutationGroup, g: Perm) -> Perm:
    """Action of ``g`` (normalizing ``h``) on the points of ``quotient_atom(f, h)``."""
    orbit_of = [-1] * f.degree
    count = 0
    for x in range(f.degree):
        if orbit_of[x] < 0:
            for e in h.elements:
                orbit_of[e[x]] = count
            count += 1
    reps = [orbit_of.index(o) for o in range(count)]
    return tuple(orbit_of[g[x]] for x in reps)


# -- names -------------------------------------------------------------------------


def default_name_table_path():
    env = os.environ.get(ENV_NAME_TABLE)
    if env:
        return env
    return resources.files("sfatlas").joinpath("data/atom_names.json")


@lru_cache(maxsize=8)
def _load_table(path: str) -> dict:
    with open(path) as fh:
        rows = json.load(fh)
    table = {}
    for row in rows:
        f = canonical_form(FGraph.from_perms(row["sigma"], row["tau"]))
        table[f.key()] = row["name"]
    return table


def load_name_table(path=None) -> dict:
    """Map from canonical ``sigma + tau`` keys to atom names."""
    return _load_table(str(path if path is not None else default_name_table_path()))


def canonical_hash(f: FGraph) -> str:
    c = canonical_form(f)
    return hashlib.sha1(json.dumps([c.sigma, c.tau]).encode()).hexdigest()[:10]


def identify(f: FGraph, table: dict | None = None) -> str:
    """Name of the atom: table entry, ``X<m>``/``Y<m>`` beyond the table, else ``unnamed-<hash>``."""
    if table is None:
        table = load_name_table()
    c = canonical_form(f)
    if c.key() in table:
        return table[c.key()]
    for series in ("X", "Y"):
        if c == canonical_form(standard_series(series, f.m)):
            return f"{series}{f.m}"
    return f"unnamed-{canonical_hash(f)}"


def find_named(name: str, table: dict | None = None) -> FGraph:
    """Canonical f-graph of a named atom (table name or ``X<m>``/``Y<m>``)."""
    if table is None:
        table = load_name_table()
    for key, value in table.items():
        if value == name:
            n = len(key) // 2
            return FGraph(n // 2, key[:n], key[n:])
    if len(name) > 1 and name[0] in "XY" and name[1:].isdigit():
        return canonical_form(standard_series(name[0], int(name[1:])))
    raise ValidationError(f"unknown atom name {name!r}")


def symmetry_orbits_on_cycles(perm_cycles: list[tuple[int, ...]], g: Perm) -> int:
    """Number of orbits of ``<g>`` on a family of cycles (each a tuple of points)."""
    which = {}
    for idx, cyc in enumerate(perm_cycles):
        for x in cyc:
            which[x] = idx
    parent = list(range(len(perm_cycles)))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for idx, cyc in enumerate(perm_cycles):
        a, b = find(idx), find(which[g[cyc[0]]])
        if a != b:
            parent[a] = b
    return len({find(i) for i in range(len(perm_cycles))})


__all__ = [
    "FGraph",
    "AtomAction",
    "validate",
    "boundary_circles",
    "genus",
    "rank0_points",
    "singular_graph",
    "symmetry_group",
    "extended_symmetries",
    "isomorphisms",
    "apply_move",
    "compose_moves",
    "canonical_form",
    "enumerate_atoms",
    "standard_series",
    "rank0_fixed_count",
    "half_turn_count",
    "free_on_atom",
    "quotient_atom",
    "induced_permutation",
    "identify",
    "find_named",
    "load_name_table",
    "MOVES",
]
