"""Catalogs of saddle-focus singularities of a given complexity.

For complexity ``p``: every divisor ``m`` of ``p``, every atom of
complexity ``m`` and every cyclic subgroup ``Z_k`` of its symmetry group
(taken up to conjugation by mirror/flip-extended symmetries) gives the
simple minimal model ``(V_m x F_{kp/m}) / Z_k``. Candidates sharing atom,
``n`` and ``k`` are compared with :func:`decide_equivalence`.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass, field

from .atom import (
    MAX_COMPLEXITY,
    canonical_form,
    enumerate_atoms,
    extended_symmetries,
    identify,
    isomorphisms,
    load_name_table,
    symmetry_group,
)
from .errors import BoundsError, ValidationError
from .model import SimpleMinimalModel, chain_summary, display_name, fingerprint, Fingerprint
from .permgroup import conjugate, conjugate_group, cyclic_subgroups, perm_order, power


class Verdict(enum.Enum):
    EQUIVALENT = "equivalent"
    DISTINCT = "distinct"
    UNKNOWN = "unknown"


def _pairing_units(k: int) -> set[int]:
    # reflecting the cyclic order of the focus points turns shift n/k into -n/k
    return {1 % k, (-1) % k} if k > 1 else {0}


def find_conjugator(a: SimpleMinimalModel, b: SimpleMinimalModel):
    """A relabeling (with move tag) carrying the action of ``a`` onto that of ``b``, or None.

    The generator must land on ``b.generator ** u`` with ``u = +-1 mod k``.
    """
    if a.k != b.k or a.n != b.n or a.m != b.m:
        return None
    targets = {power(b.generator, u) for u in _pairing_units(a.k)}
    for pi, move in isomorphisms(a.atom, b.atom):
        if conjugate(pi, a.generator) in targets:
            return pi, move
    return None


def decide_equivalence(a: SimpleMinimalModel, b: SimpleMinimalModel, table: dict | None = None) -> Verdict:
    if (a.n, a.k) != (b.n, b.k) or canonical_form(a.atom) != canonical_form(b.atom):
        return Verdict.DISTINCT
    fa, fb = fingerprint(a, table), fingerprint(b, table)
    if find_conjugator(a, b) is not None:
        if fa != fb:
            raise AssertionError(f"conjugate models with different fingerprints: {fa} vs {fb}")
        return Verdict.EQUIVALENT
    if fa != fb:
        return Verdict.DISTINCT
    return Verdict.UNKNOWN


@dataclass
class CatalogEntry:
    model: SimpleMinimalModel
    fingerprint: Fingerprint
    atom_name: str
    sym_order: int
    name: str = ""
    status: str = "distinct"

    def sort_key(self):
        return (self.model.m, self.atom_name, self.model.k, self.fingerprint.s, json.dumps(self.fingerprint.to_json()))

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "atom": self.atom_name,
            "m": self.model.m,
            "sym_order": self.sym_order,
            "n": self.model.n,
            "k": self.model.k,
            "generator": list(self.model.generator),
            "status": self.status,
            "fingerprint": self.fingerprint.to_json(),
        }


@dataclass
class Catalog:
    complexity: int
    entries: list = field(default_factory=list)
    warnings: list = field(default_factory=list)

    def __len__(self):
        return len(self.entries)

    def names(self) -> list[str]:
        return [e.name for e in self.entries]

    def to_json(self) -> dict:
        return {
            "complexity": self.complexity,
            "count": len(self.entries),
            "entries": [e.to_json() for e in self.entries],
            "warnings": list(self.warnings),
        }


def _subgroup_classes(atom):
    """Cyclic subgroups of ``Sym(atom)`` up to conjugation by extended symmetries."""
    ext = [pi for pi, _ in extended_symmetries(atom)]
    classes = []
    seen = set()
    for h in cyclic_subgroups(symmetry_group(atom)):
        if h.elements in seen:
            continue
        orbit = {conjugate_group(pi, h).elements for pi in ext}
        seen |= orbit
        classes.append(h)
    return classes, ext


def _generator_pairings(atom, h, ext) -> list:
    """Generators of ``h`` whose pairing with the shift ``n/k`` may give different models."""
    k = h.order
    if k == 1:
        return [min(h.elements)]
    alpha = min(g for g in h.elements if perm_order(g) == k)
    units = {u for u in range(1, k) if math.gcd(u, k) == 1}
    realized = set(_pairing_units(k))
    for pi in ext:
        image = conjugate(pi, alpha)
        for u in units:
            if power(alpha, u) == image:
                realized.add(u)
    # close the realized units under multiplication
    closure = {1}
    frontier = [1]
    while frontier:
        nxt = []
        for x in frontier:
            for u in realized:
                y = (x * u) % k
                if y not in closure:
                    closure.add(y)
                    nxt.append(y)
        frontier = nxt
    reps = []
    covered = set()
    for u in sorted(units):
        if u in covered:
            continue
        reps.append(power(alpha, u))
        covered |= {(u * c) % k for c in closure}
    return reps


def candidate_models(p: int, max_complexity: int = MAX_COMPLEXITY) -> list[SimpleMinimalModel]:
    out = []
    for m in range(1, p + 1):
        if p % m:
            continue
        for atom in enumerate_atoms(m, max_complexity):
            classes, ext = _subgroup_classes(atom)
            for h in classes:
                n = h.order * p // m
                for g in _generator_pairings(atom, h, ext):
                    out.append(SimpleMinimalModel(atom, n, h.order, g))
    return out


def assemble(p: int, models, table: dict | None = None) -> Catalog:
    """Deduplicate ``models`` pairwise and build a named, sorted catalog."""
    if table is None:
        table = load_name_table()
    entries: list[CatalogEntry] = []
    warnings = []
    for model in models:
        fp = fingerprint(model, table)
        unresolved = []
        merged = False
        for other in entries:
            if (other.model.n, other.model.k) != (model.n, model.k) or other.fingerprint.atom_canonical != fp.atom_canonical:
                continue
            verdict = decide_equivalence(model, other.model, table)
            if verdict is Verdict.EQUIVALENT:
                merged = True
                break
            if verdict is Verdict.UNKNOWN:
                unresolved.append(other)
        if merged:
            continue
        entry = CatalogEntry(model, fp, identify(model.atom, table), symmetry_group(model.atom).order)
        entries.append(entry)
        for other in unresolved:
            warnings.append((entry, other))

    entries.sort(key=CatalogEntry.sort_key)
    _assign_names(entries)
    warning_rows = []
    for a, b in warnings:
        a.status = f"unresolved:{b.name}"
        b.status = f"unresolved:{a.name}" if b.status == "distinct" else b.status
        warning_rows.append({"pair": sorted([a.name, b.name]), "reason": "equal fingerprints, no conjugating symmetry"})
    warning_rows.sort(key=lambda w: w["pair"])
    return Catalog(p, entries, warning_rows)


def _assign_names(entries: list[CatalogEntry]) -> None:
    groups: dict[str, list[CatalogEntry]] = {}
    for e in entries:
        groups.setdefault(display_name(e.atom_name, e.model.n, e.model.k), []).append(e)
    for base, group in groups.items():
        if len(group) == 1:
            group[0].name = base
            continue
        by_s: dict[int, list[CatalogEntry]] = {}
        for e in group:
            by_s.setdefault(e.fingerprint.s, []).append(e)
        for s, sub in by_s.items():
            if len(sub) == 1:
                sub[0].name = f"{base} [s={s}]"
            else:
                for i, e in enumerate(sub, 1):
                    e.name = f"{base} [s={s}, v{i}]"


def classify(p: int, max_complexity: int = MAX_COMPLEXITY, table: dict | None = None) -> Catalog:
    if p < 1 or p > max_complexity:
        raise BoundsError(f"complexity {p} outside 1..{max_complexity}")
    return assemble(p, candidate_models(p, max_complexity), table)


# -- rendering ---------------------------------------------------------------------


TABLE_COLUMNS = ("name", "m", "|Sym|", "n", "k", "s", "K0", "M1", "M2", "tori", "chains")


def _table_row(e: CatalogEntry) -> list[str]:
    fp = e.fingerprint
    m2 = " + ".join(f"{c} F{n}" for n, c in fp.m2)
    return [
        e.name,
        str(e.model.m),
        str(e.sym_order),
        str(fp.n),
        str(fp.k),
        str(fp.s),
        str(fp.rank0_count),
        f"{fp.m1[1]} {fp.m1[0]}",
        m2,
        "({},{})".format(*fp.torus_pair),
        chain_summary(fp.chains),
    ]


def format_table(header, rows) -> str:
    widths = [max(len(str(x)) for x in col) for col in zip(header, *rows)]
    lines = ["  ".join(str(x).ljust(w) for x, w in zip(header, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    for row in rows:
        lines.append("  ".join(str(x).ljust(w) for x, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


def render(catalog: Catalog, fmt: str = "table") -> str:
    if fmt == "json":
        return json.dumps(catalog.to_json(), indent=2) + "\n"
    if fmt == "table":
        out = f"saddle-focus singularities of complexity {catalog.complexity}: {len(catalog)}\n"
        out += format_table(TABLE_COLUMNS, [_table_row(e) for e in catalog.entries])
        for w in catalog.warnings:
            out += f"warning: {w['pair'][0]} / {w['pair'][1]}: {w['reason']}\n"
        return out
    raise ValidationError(f"unknown format {fmt!r} (expected table or json)")
