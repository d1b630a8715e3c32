import json
from fractions import Fraction
from pathlib import Path

import pytest

from conftest import all_models, relabel
from sfatlas.atom import FGraph, canonical_form, find_named, symmetry_group
from sfatlas.errors import NonFreeActionError, NotAHomomorphismError, ValidationError
from sfatlas.focus import shift_automorphism
from sfatlas.model import (
    SimpleMinimalModel,
    adp_from_json,
    build,
    chain_invariant,
    direct_product,
    fingerprint,
    m1_decomposition,
    m2_decomposition,
    rank0_count,
    reduce,
    to_dot,
    torus_counts,
)
from sfatlas.permgroup import power

DATA = Path(__file__).parent / "data"
B = find_named("B")
C1 = find_named("C1")
C2 = FGraph.from_perms([1, 0, 3, 2], [2, 3, 0, 1])
RX, RY, RZ = (1, 0, 3, 2), (3, 2, 1, 0), (2, 3, 0, 1)
D1 = find_named("D1")
E1 = find_named("E1")


def model(atom, n, k, gen=None):
    if gen is None:
        gen = next(g for g in sorted(symmetry_group(atom)) if len(set(_powers(g))) == k)
    return SimpleMinimalModel(atom, n, k, gen)


def _powers(g):
    x = g
    out = [x]
    while x != tuple(range(len(g))):
        x = tuple(g[i] for i in x)
        out.append(x)
    return out


def brute_chains(mod):
    """Chains from the full product leaf: every (edge, focus index) node, glued by the group."""
    n, step, g = mod.n, mod.n // mod.k, mod.generator
    nodes = [(v, kind, i) for v in range(mod.atom.degree) for kind in "xc" for i in range(n)]
    parent = {x: x for x in nodes}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for v in range(mod.atom.degree):
        for j in range(n):
            union((v, "x", j), (v, "c", j))
            union((v, "x", (j + 1) % n), (v, "c", j))
    for v, kind, i in nodes:
        union((v, kind, i), (g[v], kind, (i + step) % n))

    def orbit_rep(x):
        v, kind, i = x
        reps = []
        for _ in range(mod.k):
            reps.append((v, kind, i))
            v, i = g[v], (i + step) % n
        return min(reps)

    per = {}
    for x in nodes:
        per.setdefault(find(x), set()).add(orbit_rep(x))
    return tuple(sorted((sum(1 for y in s if y[1] == "x"), sum(1 for y in s if y[1] == "c")) for s in per.values()))


def brute_torus_pair(mod):
    from sfatlas.permgroup import compose, cycles

    def orbits(perm):
        cyc = [frozenset(c) for c in cycles(perm)]
        seen, count = set(), 0
        for c in cyc:
            if c in seen:
                continue
            count += 1
            x = c
            while x not in seen:
                seen.add(x)
                x = frozenset(mod.generator[i] for i in x)
        return count

    return tuple(sorted((orbits(mod.atom.sigma), orbits(compose(mod.atom.sigma, mod.atom.tau)))))


# -- build -------------------------------------------------------------------------


def test_build_examples():
    adp = build(B, 2, [((1, 0), shift_automorphism(2, 1))])
    assert adp.order == 2
    adp = build(D1, 1, [((3, 2, 1, 0), shift_automorphism(1, 0, Fraction(1, 2)))])
    assert adp.order == 2


def test_build_rejects_common_fixed_point():
    with pytest.raises(NonFreeActionError) as exc:
        build(B, 1, [((1, 0), shift_automorphism(1, 0, Fraction(1, 2)))])
    assert exc.value.element[0] == (1, 0)


def test_build_rejects_non_symmetry_and_bad_order():
    with pytest.raises(ValidationError):
        build(C2, 2, [((1, 0, 2, 3), shift_automorphism(2, 1))])
    with pytest.raises(NotAHomomorphismError):
        build(B, 2, [((1, 0), shift_automorphism(2, 1))], order=4)
    with pytest.raises(ValidationError):
        build(B, 2, [((1, 0), shift_automorphism(3, 1))])


def test_build_rejects_pure_flow_with_trivial_atom_part():
    with pytest.raises(NonFreeActionError):
        build(B, 1, [((0, 1), shift_automorphism(1, 0, Fraction(1, 3)))])


# -- reduce ------------------------------------------------------------------------


def test_reduce_half_period_example():
    adp = adp_from_json(json.loads((DATA / "d1xf1_halfperiod.json").read_text()))
    mod, report = reduce(adp)
    assert canonical_form(mod.atom) == canonical_form(B)
    assert (mod.n, mod.k) == (1, 1)
    assert report["N_order"] == 2 and report["m_prime"] == 1 and report["n_prime"] == 1


def test_reduce_klein_example():
    adp = build(
        C2,
        2,
        [(RX, shift_automorphism(2, 0, Fraction(1, 2))), (RZ, shift_automorphism(2, 1))],
    )
    assert adp.order == 4
    mod, report = reduce(adp)
    assert canonical_form(mod.atom) == canonical_form(B)
    assert (mod.n, mod.k) == (2, 2)
    assert report["N_order"] == 2 and report["N_zero_shift_order"] == 2


def test_reduce_focus_only_subgroup():
    # the atom-trivial element (id, shift 2) merges focus points
    adp = build(B, 4, [((1, 0), shift_automorphism(4, 1))])
    mod, report = reduce(adp)
    assert report["N_atom_trivial_order"] == 2
    assert (mod.m, mod.n, mod.k) == (1, 2, 2)


@pytest.mark.parametrize("mod", all_models(2, 4), ids=str)
def test_reduce_fixes_simple_minimal_models(mod):
    out, report = reduce(mod.as_adp())
    assert report["N_order"] == 1
    assert out == mod
    assert reduce(out.as_adp())[0] == out


def test_reduce_idempotent_on_non_minimal_inputs():
    adp = build(D1, 2, [((3, 2, 1, 0), shift_automorphism(2, 1, Fraction(1, 2)))])
    once, _ = reduce(adp)
    assert reduce(once.as_adp())[0] == once


def test_simple_minimal_model_validation():
    with pytest.raises(ValidationError):
        SimpleMinimalModel(C1, 3, 2, power((1, 2, 3, 0), 2))
    with pytest.raises(ValidationError):
        SimpleMinimalModel(C1, 4, 2, (1, 2, 3, 0))
    with pytest.raises(ValidationError):
        SimpleMinimalModel(C1, 2, 2, (1, 0, 3, 2))


# -- invariants --------------------------------------------------------------------


def test_rank0_and_m1_examples():
    assert rank0_count(direct_product(B, 1)) == 1
    assert rank0_count(model(B, 2, 2)) == 1
    assert rank0_count(model(C1, 4, 4)) == 2
    assert m1_decomposition(model(B, 4, 2)) == ("B", 2)
    assert m1_decomposition(direct_product(B, 1)) == ("B", 1)
    assert m1_decomposition(model(E1, 6, 6)) == ("E1", 1)


def test_m2_examples():
    assert m2_decomposition(direct_product(C2, 1)) == ((1, 2),)
    assert m2_decomposition(model(B, 2, 2)) == ((1, 1),)
    assert m2_decomposition(model(E1, 3, 3)) == ((3, 1),)


def test_torus_examples():
    assert torus_counts(direct_product(B, 1)) == (1, 2)
    assert torus_counts(model(B, 2, 2)) == (1, 1)


def test_chain_fixtures():
    assert chain_invariant(direct_product(C1, 1)) == ((1, 1),) * 4
    assert chain_invariant(SimpleMinimalModel(C1, 2, 2, (2, 3, 0, 1))) == ((2, 2),) * 2
    assert chain_invariant(direct_product(B, 1)) == ((1, 1),) * 2


def test_fingerprint_examples():
    fz = fingerprint(SimpleMinimalModel(C2, 2, 2, RZ))
    fx = fingerprint(SimpleMinimalModel(C2, 2, 2, RX))
    assert (fz.s, fx.s) == (2, 0)
    a, b = fingerprint(direct_product(B, 1)), fingerprint(model(B, 2, 2))
    assert a.n != b.n and a.torus_pair != b.torus_pair


def test_dot_output():
    dot = to_dot(direct_product(C1, 1), "C1 x F1")
    assert dot.startswith('graph "C1 x F1" {') and dot.count("--") == 8


def test_adp_json_round_trip():
    mod = SimpleMinimalModel(C2, 2, 2, RX)
    data = mod.to_json()
    assert data["format"] == "adp-v1"
    back = adp_from_json(json.loads(json.dumps(data)))
    assert reduce(back)[0] == mod
    with pytest.raises(ValidationError):
        adp_from_json(dict(data, format="adp-v0"))


# -- properties over all models with m <= 4, n <= 6 ---------------------------------

MODELS = all_models(4, 6)


def test_model_corpus_is_large():
    assert len(MODELS) >= 200


@pytest.mark.parametrize("mod", all_models(2, 4), ids=str)
def test_chain_invariant_matches_brute_force(mod):
    assert chain_invariant(mod) == brute_chains(mod)


def test_model_properties():
    for mod in MODELS:
        m, n, k = mod.m, mod.n, mod.k
        fp = fingerprint(mod)
        assert fp.rank0_count == m * n // k
        total = 2 * m * n // k
        assert sum(c[0] for c in fp.chains) == total == sum(c[1] for c in fp.chains)
        assert sum(c * copies for c, copies in fp.m2) == fp.rank0_count
        assert fp.torus_pair == brute_torus_pair(mod)
        if k % 2:
            assert fp.s == 0 and m % k == 0


def test_fingerprint_relabeling_invariance(rng):
    from conftest import random_perm
    from sfatlas.permgroup import conjugate

    for mod in MODELS[::3]:
        pi = random_perm(mod.atom.degree, rng)
        other = SimpleMinimalModel(relabel(mod.atom, pi), mod.n, mod.k, conjugate(pi, mod.generator))
        assert fingerprint(other) == fingerprint(mod)

