"""Finite groups as validated Cayley tables.

Groups are plain multiplication tables over element indices 0..n-1.
Construction always runs the full validation: Latin square property,
two-sided identity, inverses, and exhaustive associativity.  The order cap
(default 24, environment-overridable) guards the downstream computations
that scale as n**3 and n**4, not this module's own checks.

Subgroup enumeration is breadth-first closure: seed with every cyclic
subgroup, then repeatedly extend each known subgroup by one outside
generator and close under multiplication.  This finds the complete
subgroup lattice without scanning 2**n subsets.
"""

from __future__ import annotations

import itertools
import json
import os
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import (GroupValidationError, InternalCheckError, OrderCapError,
                     SpecParseError)

DEFAULT_ORDER_CAP = 24
ORDER_CAP_ENV = "PADICAMEN_ORDER_CAP"


def order_cap() -> int:
    """Active group-order cap; the environment variable wins when set."""
    raw = os.environ.get(ORDER_CAP_ENV)
    if raw is None:
        return DEFAULT_ORDER_CAP
    try:
        cap = int(raw)
    except ValueError as exc:
        raise SpecParseError(
            f"{ORDER_CAP_ENV} must be an integer, got {raw!r}") from exc
    if cap < 1:
        raise SpecParseError(f"{ORDER_CAP_ENV} must be positive, got {cap}")
    return cap


def require_within_cap(order: int, what: str) -> None:
    cap = order_cap()
    if order > cap:
        raise OrderCapError(
            f"{what} refused: group order {order} exceeds the cap {cap} "
            f"(override via {ORDER_CAP_ENV})"
        )


@dataclass(frozen=True)
class FiniteGroup:
    """Validated finite group presented by its Cayley table."""

    name: str
    order: int
    table: Tuple[Tuple[int, ...], ...]
    identity: int
    inverses: Tuple[int, ...]
    labels: Tuple[str, ...]

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def inv(self, i: int) -> int:
        return self.inverses[i]

    def elements(self) -> range:
        return range(self.order)

    def __repr__(self):
        return f"FiniteGroup({self.name!r}, order={self.order})"


def _validate_table(name: str, labels: Sequence[str],
                    table: Sequence[Sequence[int]]) -> FiniteGroup:
    n = len(table)
    if n == 0:
        raise GroupValidationError(f"{name}: empty table")
    if len(labels) != n:
        raise GroupValidationError(
            f"{name}: {len(labels)} labels for order {n}")
    if len(set(labels)) != n:
        raise GroupValidationError(f"{name}: duplicate labels")
    full = list(range(n))
    for i, row in enumerate(table):
        if len(row) != n:
            raise GroupValidationError(
                f"{name}: row {i} has length {len(row)}, expected {n}")
        if any(not isinstance(x, int) or not 0 <= x < n for x in row):
            raise GroupValidationError(
                f"{name}: row {i} contains an out-of-range entry")
        if sorted(row) != full:
            raise GroupValidationError(
                f"{name}: row {i} is not a permutation (Latin square fails)")
    for j in range(n):
        col = [table[i][j] for i in range(n)]
        if sorted(col) != full:
            raise GroupValidationError(
                f"{name}: column {j} is not a permutation (Latin square fails)")

    identity: Optional[int] = None
    for e in range(n):
        if all(table[e][j] == j for j in range(n)) and \
                all(table[i][e] == i for i in range(n)):
            identity = e
            break
    if identity is None:
        raise GroupValidationError(f"{name}: no two-sided identity")

    inverses = []
    for i in range(n):
        j = table[i].index(identity)
        if table[j][i] != identity:
            raise GroupValidationError(
                f"{name}: element {labels[i]} has no two-sided inverse")
        inverses.append(j)

    # exhaustive associativity, the only check that is not linear-time
    for a in range(n):
        ta = table[a]
        for b in range(n):
            ab = ta[b]
            tb = table[b]
            row_ab = table[ab]
            for c in range(n):
                if row_ab[c] != ta[tb[c]]:
                    raise GroupValidationError(
                        "%s: associativity fails at triple (%s, %s, %s)"
                        % (name, labels[a], labels[b], labels[c])
                    )

    return FiniteGroup(
        name=name,
        order=n,
        table=tuple(tuple(row) for row in table),
        identity=identity,
        inverses=tuple(inverses),
        labels=tuple(labels),
    )


def from_table(name: str, labels: Sequence[str],
               table: Sequence[Sequence[int]]) -> FiniteGroup:
    """Build and fully validate a group from a raw Cayley table."""
    return _validate_table(name, labels, table)


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise SpecParseError(f"cyclic order must be >= 1, got {n}")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    labels = [str(i) for i in range(n)]
    return _validate_table(f"cyclic:{n}", labels, table)


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the regular n-gon, order 2n; elements s^f r^k."""
    if n < 1:
        raise SpecParseError(f"dihedral parameter must be >= 1, got {n}")

    def idx(f: int, k: int) -> int:
        return f * n + k

    table = [[0] * (2 * n) for _ in range(2 * n)]
    for f in range(2):
        for k in range(n):
            for g in range(2):
                for l in range(n):
                    # (s^f r^k)(s^g r^l) = s^(f+g) r^(k*(-1)^g + l)
                    kk = (-k if g else k) + l
                    table[idx(f, k)][idx(g, l)] = idx((f + g) % 2, kk % n)
    labels = [f"r{k}" for k in range(n)] + [f"sr{k}" for k in range(n)]
    return _validate_table(f"dihedral:{n}", labels, table)


def symmetric(n: int) -> FiniteGroup:
    """Permutations of {0..n-1} under composition; capped at n = 4."""
    if not 1 <= n <= 4:
        raise SpecParseError(
            f"symmetric group parameter must be in 1..4, got {n}")
    perms = sorted(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = [
        [index[tuple(p[q[i]] for i in range(n))] for q in perms]
        for p in perms
    ]
    labels = ["".join(str(x) for x in p) for p in perms]
    return _validate_table(f"symmetric:{n}", labels, table)


def quaternion8() -> FiniteGroup:
    """The quaternion group {±1, ±i, ±j, ±k}."""
    # unit products: (flip, unit) for units indexed 1, i, j, k = 0..3
    unit_mul = {
        (0, 0): (0, 0), (0, 1): (0, 1), (0, 2): (0, 2), (0, 3): (0, 3),
        (1, 0): (0, 1), (1, 1): (1, 0), (1, 2): (0, 3), (1, 3): (1, 2),
        (2, 0): (0, 2), (2, 1): (1, 3), (2, 2): (1, 0), (2, 3): (0, 1),
        (3, 0): (0, 3), (3, 1): (0, 2), (3, 2): (1, 1), (3, 3): (1, 0),
    }

    def idx(sign: int, unit: int) -> int:
        return 2 * unit + sign

    table = [[0] * 8 for _ in range(8)]
    for s1 in range(2):
        for u1 in range(4):
            for s2 in range(2):
                for u2 in range(4):
                    flip, unit = unit_mul[(u1, u2)]
                    table[idx(s1, u1)][idx(s2, u2)] = \
                        idx((s1 + s2 + flip) % 2, unit)
    labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    return _validate_table("quaternion:8", labels, table)


def product(a: FiniteGroup, b: FiniteGroup) -> FiniteGroup:
    """Direct product with componentwise multiplication."""
    na, nb = a.order, b.order

    def idx(i: int, j: int) -> int:
        return i * nb + j

    table = [[0] * (na * nb) for _ in range(na * nb)]
    for i1 in range(na):
        for j1 in range(nb):
            for i2 in range(na):
                for j2 in range(nb):
                    table[idx(i1, j1)][idx(i2, j2)] = \
                        idx(a.table[i1][i2], b.table[j1][j2])
    labels = [
        f"({a.labels[i]},{b.labels[j]})"
        for i in range(na) for j in range(nb)
    ]
    return _validate_table(f"product:{a.name},{b.name}", labels, table)


def from_file(path: str) -> FiniteGroup:
    """Load a Cayley-table document: JSON with fields name, order, labels,
    table (row-major element indices)."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise SpecParseError(f"cannot read group file {path!r}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SpecParseError(f"group file {path!r} is not valid JSON: {exc}") \
            from exc
    if not isinstance(doc, dict):
        raise SpecParseError(f"group file {path!r}: top level must be an object")
    missing = [k for k in ("name", "order", "labels", "table") if k not in doc]
    if missing:
        raise SpecParseError(
            f"group file {path!r}: missing fields {', '.join(missing)}")
    name, n = doc["name"], doc["order"]
    labels, table = doc["labels"], doc["table"]
    if not isinstance(name, str):
        raise SpecParseError(f"group file {path!r}: name must be a string")
    if not isinstance(n, int) or n < 1:
        raise SpecParseError(f"group file {path!r}: bad order {n!r}")
    if not isinstance(labels, list) or not all(isinstance(x, str) for x in labels):
        raise SpecParseError(f"group file {path!r}: labels must be strings")
    if not isinstance(table, list) or len(table) != n:
        raise SpecParseError(
            f"group file {path!r}: table must have {n} rows")
    return _validate_table(name, labels, table)


def from_spec(spec: str) -> FiniteGroup:
    """Parse a group spec string: "cyclic:n", "dihedral:n", "symmetric:n",
    "quaternion:8", "product:a,b" (a and b non-product specs), or a path
    to a Cayley-table file."""
    spec = spec.strip()
    if os.path.sep in spec or spec.endswith(".json") or os.path.isfile(spec):
        return from_file(spec)
    kind, _, params = spec.partition(":")
    if kind == "product":
        parts = params.split(",")
        if len(parts) != 2:
            raise SpecParseError(
                f"product spec needs exactly two factors, got {spec!r}")
        factors = []
        for part in parts:
            if part.startswith("product"):
                raise SpecParseError(
                    f"nested product specs are not supported: {part!r}")
            factors.append(from_spec(part))
        return product(factors[0], factors[1])
    if kind in ("cyclic", "dihedral", "symmetric", "quaternion"):
        try:
            n = int(params)
        except ValueError as exc:
            raise SpecParseError(
                f"bad parameter {params!r} in group spec {spec!r}") from exc
        if kind == "cyclic":
            return cyclic(n)
        if kind == "dihedral":
            return dihedral(n)
        if kind == "symmetric":
            return symmetric(n)
        if n != 8:
            raise SpecParseError("the quaternion group here is quaternion:8")
        return quaternion8()
    raise SpecParseError(f"unknown group kind {kind!r} in spec {spec!r}")


@dataclass(frozen=True)
class Subgroup:
    """Validated subgroup given by its member index set."""

    group: FiniteGroup = field(repr=False)
    members: Tuple[int, ...]

    def __post_init__(self):
        g = self.group
        mem = set(self.members)
        if tuple(sorted(mem)) != self.members:
            raise GroupValidationError("subgroup members must be sorted")
        if g.identity not in mem:
            raise GroupValidationError("subgroup misses the identity")
        for i in self.members:
            if g.inverses[i] not in mem:
                raise GroupValidationError(
                    f"subgroup not closed under inverse of {g.labels[i]}")
            for j in self.members:
                if g.table[i][j] not in mem:
                    raise GroupValidationError(
                        "subgroup not closed under product %s*%s"
                        % (g.labels[i], g.labels[j])
                    )
        if g.order % len(mem) != 0:
            raise InternalCheckError(
                "subgroup order %d does not divide group order %d"
                % (len(mem), g.order)
            )

    @property
    def order(self) -> int:
        return len(self.members)

    def label_set(self) -> List[str]:
        return [self.group.labels[i] for i in self.members]

    def contains(self, other: "Subgroup") -> bool:
        return set(other.members) <= set(self.members)


def _closure(g: FiniteGroup, seed: frozenset) -> frozenset:
    members = set(seed)
    members.add(g.identity)
    frontier = list(members)
    while frontier:
        fresh = []
        for a in frontier:
            for b in list(members):
                for c in (g.table[a][b], g.table[b][a]):
                    if c not in members:
                        members.add(c)
                        fresh.append(c)
        frontier = fresh
    return frozenset(members)


def enumerate_subgroups(g: FiniteGroup,
                        cap: Optional[int] = None) -> List[Subgroup]:
    """Complete subgroup list, sorted by (order, member tuple).

    Breadth-first closure over one-generator extensions; refuses groups
    above the order cap instead of silently truncating.
    """
    if cap is None:
        cap = order_cap()
    if g.order > cap:
        raise OrderCapError(
            f"subgroup enumeration refused: order {g.order} exceeds cap {cap} "
            f"(override via {ORDER_CAP_ENV})"
        )
    known = {frozenset({g.identity})}
    for x in g.elements():
        known.add(_closure(g, frozenset({x})))
    grew = True
    while grew:
        grew = False
        for base in list(known):
            for x in g.elements():
                if x in base:
                    continue
                ext = _closure(g, base | {x})
                if ext not in known:
                    known.add(ext)
                    grew = True
    subs = [Subgroup(g, tuple(sorted(m))) for m in known]
    subs.sort(key=lambda s: (s.order, s.members))
    return subs


def subgroup_index(s1: Subgroup, s2: Subgroup) -> int:
    """The index [S2 : S1] for S1 contained in S2."""
    if s1.group is not s2.group:
        raise GroupValidationError("subgroups belong to different groups")
    outside = set(s1.members) - set(s2.members)
    if outside:
        witness = s1.group.labels[min(outside)]
        raise GroupValidationError(
            f"containment fails: element {witness} is in S1 but not S2")
    if s2.order % s1.order != 0:
        raise InternalCheckError(
            "Lagrange violation: %d does not divide %d" % (s1.order, s2.order))
    return s2.order // s1.order


def catalog(max_order: int) -> List[FiniteGroup]:
    """The deterministic test family, filtered by order.

    Cyclic groups up to 16, dihedral groups of the 3..8-gons, the
    symmetric groups on 3 and 4 letters, the quaternion group, and a few
    direct products (the Klein group among them).  Names are valid group
    specs, so any row of a report can be replayed through the CLI.
    """
    groups: List[FiniteGroup] = []
    for n in range(1, 17):
        if n <= max_order:
            groups.append(cyclic(n))
    for n in range(3, 9):
        if 2 * n <= max_order:
            groups.append(dihedral(n))
    if 6 <= max_order:
        groups.append(symmetric(3))
    if 24 <= max_order:
        groups.append(symmetric(4))
    if 8 <= max_order:
        groups.append(quaternion8())
    product_specs = [
        ("cyclic", 2, "cyclic", 2),
        ("cyclic", 2, "cyclic", 4),
        ("cyclic", 3, "cyclic", 3),
        ("cyclic", 2, "cyclic", 6),
        ("cyclic", 2, "symmetric", 3),
    ]
    makers = {"cyclic": cyclic, "symmetric": symmetric}
    for kind_a, na, kind_b, nb in product_specs:
        a = makers[kind_a](na)
        b = makers[kind_b](nb)
        if a.order * b.order <= max_order:
            groups.append(product(a, b))
    return groups
