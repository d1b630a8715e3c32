import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import relabel
from sfatlas.atom import (
    MOVES,
    AtomAction,
    FGraph,
    apply_move,
    boundary_circles,
    canonical_form,
    compose_moves,
    enumerate_atoms,
    extended_symmetries,
    find_named,
    genus,
    half_turn_count,
    identify,
    load_name_table,
    quotient_atom,
    rank0_fixed_count,
    standard_series,
    symmetry_group,
    validate,
)
from sfatlas.errors import BoundsError, NonFreeActionError, ValidationError
from sfatlas.permgroup import (
    compose,
    conjugate,
    cyclic_subgroup,
    generate,
    identity,
    inverse,
    iso_type,
    num_cycles,
    perm_order,
)

B = FGraph.from_perms([1, 0], [1, 0])
C1 = FGraph.from_perms([1, 2, 3, 0], [2, 3, 0, 1])
C2 = FGraph.from_perms([1, 0, 3, 2], [2, 3, 0, 1])
RX, RY, RZ = (1, 0, 3, 2), (3, 2, 1, 0), (2, 3, 0, 1)


def brute_centralizer(f):
    return {
        p
        for p in itertools.permutations(range(f.degree))
        if compose(p, f.sigma) == compose(f.sigma, p) and compose(p, f.tau) == compose(f.tau, p)
    }


def brute_atom_classes(m):
    """Atoms of complexity m by union-find over every sigma with a fixed pairing tau."""
    n = 2 * m
    tau = tuple(i ^ 1 for i in range(n))
    centralizer = [p for p in itertools.permutations(range(n)) if compose(p, tau) == compose(tau, p)]
    sigmas = []
    for s in itertools.permutations(range(n)):
        try:
            validate(FGraph(m, s, tau))
        except ValidationError:
            continue
        sigmas.append(s)
    parent = {s: s for s in sigmas}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for s in sigmas:
        for t in (inverse(s), compose(s, tau)) + tuple(conjugate(p, s) for p in centralizer):
            a, b = find(s), find(t)
            if a != b:
                parent[a] = b
    classes = {}
    for s in sigmas:
        classes.setdefault(find(s), []).append(FGraph(m, s, tau))
    return list(classes.values())


def test_validate():
    assert validate(B) == B
    with pytest.raises(ValidationError):
        FGraph.from_perms([1, 0], [0, 1])
    with pytest.raises(ValidationError):
        FGraph.from_perms([1, 0, 3, 2], [1, 0, 3, 2])
    with pytest.raises(ValidationError):
        validate(FGraph(2, (1, 0), (1, 0)))
    with pytest.raises(ValidationError):
        FGraph.from_perms([], [])


@pytest.mark.parametrize("f, circles, g", [(B, (1, 2), 0), (C1, (1, 1), 1), (C2, (2, 2), 0)])
def test_boundary_and_genus(f, circles, g):
    assert boundary_circles(f) == circles
    assert genus(f) == g


@pytest.mark.parametrize("m", [1, 2, 3])
def test_symmetry_group_matches_brute_force_centralizer(m):
    for f in enumerate_atoms(m):
        assert symmetry_group(f).elements == brute_centralizer(f)


def test_symmetry_group_examples():
    assert iso_type(symmetry_group(B)) == "Z2"
    assert iso_type(symmetry_group(C1)) == "Z4"
    assert iso_type(symmetry_group(C2)) == "Z2+Z2"
    assert iso_type(symmetry_group(find_named("E1"))) == "Z6"
    assert iso_type(symmetry_group(find_named("D2"))) == "e"


def test_extended_symmetries_contain_sym_with_identity_tag():
    ext = dict(extended_symmetries(B))
    for g in symmetry_group(B):
        assert ext[g] == "identity"


def test_c2_flip_conjugator_swaps_rx_and_ry():
    ext = dict(extended_symmetries(C2))
    pi = (2, 1, 0, 3)
    assert ext[pi] == "flip"
    assert conjugate(pi, RX) == RY


@pytest.mark.parametrize("m", [1, 2, 3])
def test_extended_symmetries_form_group_with_tag_homomorphism(m):
    for f in enumerate_atoms(m):
        ext = dict(extended_symmetries(f))
        for (p, a), (q, b) in itertools.product(ext.items(), repeat=2):
            assert ext[compose(p, q)] == compose_moves(a, b)
        # the identity-tagged part is Sym together with the relabelings onto tau.sigma.tau
        twisted = conjugate(f.tau, f.sigma)
        kernel = {p for p, t in ext.items() if t == "identity"}
        assert symmetry_group(f).elements <= kernel
        assert all(p in symmetry_group(f).elements or conjugate(p, f.sigma) == twisted for p in kernel)


def test_extended_symmetry_relation_holds():
    for f in enumerate_atoms(3):
        for pi, move in extended_symmetries(f):
            g = relabel(f, pi)
            target = apply_move(f, move)
            assert g.tau == f.tau
            assert canonical_form(g) == canonical_form(target)


def test_canonical_form_examples():
    assert canonical_form(B) == canonical_form(FGraph.from_perms([0, 1], [1, 0]))
    c = canonical_form(C2)
    assert canonical_form(c) == c
    assert canonical_form(standard_series("X", 3)) == canonical_form(standard_series("Y", 3))


@pytest.mark.parametrize("m, count", [(1, 1), (2, 4), (3, 10)])
def test_enumeration_counts_match_brute_force(m, count):
    atoms = enumerate_atoms(m)
    classes = brute_atom_classes(m)
    assert len(atoms) == len(classes) == count
    # each brute-force class maps to exactly one enumerated atom
    mapped = sorted(canonical_form(cls[0]).key() for cls in classes)
    assert mapped == sorted(f.key() for f in atoms)
    for cls in classes:
        assert len({canonical_form(f) for f in cls}) == 1


def test_enumeration_bound():
    with pytest.raises(BoundsError):
        enumerate_atoms(0)
    with pytest.raises(BoundsError):
        enumerate_atoms(7)
    with pytest.raises(BoundsError):
        enumerate_atoms(3, max_complexity=2)


def test_standard_series():
    assert canonical_form(standard_series("Y", 1)) == canonical_form(B)
    assert canonical_form(standard_series("Y", 2)) == canonical_form(C1)
    for m in range(1, 7):
        assert symmetry_group(standard_series("X", m)).order == 2 * m
        assert symmetry_group(standard_series("Y", m)).order == 2 * m
    with pytest.raises(ValidationError):
        standard_series("Z", 2)


def test_rank0_fixed_count_examples():
    assert rank0_fixed_count(AtomAction(B, (1, 0), 2), 1) == 1
    assert rank0_fixed_count(AtomAction(C2, RZ, 2), 1) == 2
    assert rank0_fixed_count(AtomAction(C2, RX, 2), 1) == 0


def test_atom_action_validation():
    with pytest.raises(ValidationError):
        AtomAction(C2, (1, 0, 2, 3), 2)
    with pytest.raises(ValidationError):
        AtomAction(C1, (1, 2, 3, 0), 2)


def test_quotient_examples():
    d1 = find_named("D1")
    h = [g for g in symmetry_group(d1) if perm_order(g) == 2]
    assert canonical_form(quotient_atom(d1, cyclic_subgroup(4, h[0]))) == canonical_form(B)
    trivial = generate(4, [])
    assert quotient_atom(C2, trivial) == C2
    x4 = standard_series("X", 4)
    rho2 = tuple((i + 2) % 4 if i < 4 else 4 + (i + 2) % 4 for i in range(8))
    q = quotient_atom(x4, cyclic_subgroup(8, rho2))
    assert q.m == 2
    assert canonical_form(q) == canonical_form(C2)


def test_y4_rotation_by_two_is_not_free():
    # its square is tau, which fixes every saddle
    y4 = standard_series("Y", 4)
    rot2 = tuple((i + 2) % 8 for i in range(8))
    assert conjugate(rot2, y4.tau) == y4.tau and tuple(rot2[rot2[i]] for i in range(8)) == y4.tau
    with pytest.raises(NonFreeActionError):
        quotient_atom(y4, cyclic_subgroup(8, rot2))


def test_quotient_rejects_non_free():
    with pytest.raises(NonFreeActionError) as exc:
        quotient_atom(C2, cyclic_subgroup(4, RZ))
    assert exc.value.element == RZ
    with pytest.raises(NonFreeActionError):
        quotient_atom(B, cyclic_subgroup(2, (1, 0)))


def test_identify():
    assert identify(B) == "B"
    assert identify(standard_series("Y", 2)) == "C1"
    assert identify(standard_series("X", 4)) == "X4"
    others = [f for f in enumerate_atoms(4) if not identify(f).startswith(("X", "Y"))]
    assert others and all(identify(f).startswith("unnamed-") for f in others)


def test_name_table_covers_table_atoms_once():
    table = load_name_table()
    assert len(table) == 15
    names = {identify(f) for m in (1, 2, 3) for f in enumerate_atoms(m)}
    assert names == set(table.values())


def test_name_table_override(tmp_path, monkeypatch):
    path = tmp_path / "names.json"
    path.write_text('[{"name": "Bee", "sigma": [1, 0], "tau": [1, 0]}]')
    monkeypatch.setenv("ATLAS_NAME_TABLE", str(path))
    assert identify(B, load_name_table()) == "Bee"


def test_fgraph_json_round_trip():
    for f in enumerate_atoms(3):
        data = f.to_json("x")
        assert data["format"] == "fgraph-v1" and data["complexity"] == 3
        assert FGraph.from_json(data) == f


# -- properties over every atom with m <= 4 ---------------------------------------

ATOMS_LE4 = [f for m in range(1, 5) for f in enumerate_atoms(m)]


@pytest.mark.parametrize("f", ATOMS_LE4, ids=lambda f: identify(f))
def test_atom_properties(f):
    sym = symmetry_group(f)
    assert sym.order <= 2 * f.m
    neg, pos = boundary_circles(f)
    assert (neg + pos) % 2 == f.m % 2
    assert genus(f) >= 0
    for g in sym:
        if perm_order(g) % 2:
            assert is_identity_or_free(f, g)


def is_identity_or_free(f, g):
    return g == identity(f.degree) or half_turn_count(f, g) == 0


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(ATOMS_LE4), st.randoms(use_true_random=False))
def test_canonical_form_relabeling_invariance(f, r):
    pi = list(range(f.degree))
    r.shuffle(pi)
    assert canonical_form(relabel(f, tuple(pi))) == canonical_form(f)


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(ATOMS_LE4), st.sampled_from(MOVES))
def test_moves_preserve_atom(f, move):
    assert canonical_form(apply_move(f, move)) == canonical_form(f)
    assert num_cycles(apply_move(f, "flip").sigma) == boundary_circles(f)[1]
