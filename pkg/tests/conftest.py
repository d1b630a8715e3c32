import random

import pytest

from sfatlas.atom import FGraph, enumerate_atoms, symmetry_group
from sfatlas.model import SimpleMinimalModel
from sfatlas.permgroup import conjugate, perm_order

ACCEPTANCE_LINES = []


def relabel(f, pi):
    return FGraph(f.m, conjugate(pi, f.sigma), conjugate(pi, f.tau))


def random_perm(n, rng):
    p = list(range(n))
    rng.shuffle(p)
    return tuple(p)


def all_models(max_m, max_n):
    """Every simple minimal model with atom complexity <= max_m and focus complexity <= max_n."""
    out = []
    for m in range(1, max_m + 1):
        for f in enumerate_atoms(m):
            for g in sorted(symmetry_group(f).elements):
                k = perm_order(g)
                for n in range(k, max_n + 1, k):
                    out.append(SimpleMinimalModel(f, n, k, g))
    return out


@pytest.fixture
def rng():
    return random.Random(20261018)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
