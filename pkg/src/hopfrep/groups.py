"""Finite groups as validated Cayley tables, plus the built-in family."""

from __future__ import annotations

import itertools

from .errors import GroupError, ValidationReport


class GroupTable:
    """A group on indices 0..n-1 with a full multiplication table."""

    def __init__(self, mult, labels=None, name=""):
        self.mult = [list(row) for row in mult]
        self.order = len(self.mult)
        if any(len(row) != self.order for row in self.mult):
            raise GroupError("multiplication table is not square")
        self.labels = list(labels) if labels else [f"g{i}" for i in range(self.order)]
        if len(self.labels) != self.order:
            raise GroupError("label count differs from order")
        self.identity = None
        self.inverse: list[int] = []
        self.validated = False
        self.name = name or f"group of order {self.order}"

    def __repr__(self):
        return f"GroupTable({self.name})"

    def mul(self, a: int, b: int) -> int:
        return self.mult[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def conj(self, g: int, x: int) -> int:
        """g^{-1} x g."""
        return self.mul(self.mul(self.inv(g), x), g)

    def is_abelian(self) -> bool:
        return all(
            self.mult[a][b] == self.mult[b][a]
            for a in range(self.order)
            for b in range(a)
        )

    def element_order(self, a: int) -> int:
        n = 1
        x = a
        while x != self.identity:
            x = self.mul(x, a)
            n += 1
        return n


def check_group_axioms(group: GroupTable) -> ValidationReport:
    """Latin square, associativity on all triples, identity, inverses."""
    report = ValidationReport(subject=group.name)
    n = group.order
    full = set(range(n))
    for i, row in enumerate(group.mult):
        if set(row) != full:
            report.fail("latin-row", index=i)
            return report
    for j in range(n):
        if {group.mult[i][j] for i in range(n)} != full:
            report.fail("latin-column", index=j)
            return report
    identity = None
    for e in range(n):
        if all(group.mult[e][x] == x == group.mult[x][e] for x in range(n)):
            identity = e
            break
    if identity is None:
        report.fail("identity-missing")
        return report
    inverse = [0] * n
    for a in range(n):
        found = [b for b in range(n) if group.mult[a][b] == identity]
        if len(found) != 1 or group.mult[found[0]][a] != identity:
            report.fail("inverse-missing", index=a)
            return report
        inverse[a] = found[0]
    for a in range(n):
        for b in range(n):
            ab = group.mult[a][b]
            for c in range(n):
                if group.mult[ab][c] != group.mult[a][group.mult[b][c]]:
                    report.fail("associativity", triple=(a, b, c))
                    return report
    group.identity = identity
    group.inverse = inverse
    group.validated = True
    return report


def group_from_table(mult, labels=None, name="") -> GroupTable:
    group = GroupTable(mult, labels, name)
    check_group_axioms(group).raise_if_failed(GroupError)
    return group


def _cyclic(n: int) -> GroupTable:
    mult = [[(i + j) % n for j in range(n)] for i in range(n)]
    labels = ["e"] + [f"g{'^' + str(i) if i > 1 else ''}" for i in range(1, n)]
    return group_from_table(mult, labels, name=f"C{n}")


def _dihedral(n: int) -> GroupTable:
    """Order 2n: pairs r^i s^e with index i + n*e."""
    order = 2 * n

    def mul(x, y):
        i, e = x % n, x // n
        j, f = y % n, y // n
        if e == 0:
            return (i + j) % n + n * f
        return (i - j) % n + n * ((e + f) % 2)

    mult = [[mul(x, y) for y in range(order)] for x in range(order)]
    labels = [f"r{i}" if e == 0 else f"r{i}s" for e in (0, 1) for i in range(n)]
    return group_from_table(mult, labels, name=f"D{n}")


def _perm_group(perms, name: str) -> GroupTable:
    perms = sorted(perms)
    index = {p: i for i, p in enumerate(perms)}

    def compose(a, b):
        return tuple(a[b[i]] for i in range(len(a)))

    mult = [[index[compose(a, b)] for b in perms] for a in perms]
    labels = ["".join(str(x) for x in p) for p in perms]
    return group_from_table(mult, labels, name=name)


def _quaternion() -> GroupTable:
    """Q8 on (sign, axis) with axes 1, i, j, k."""
    elems = [(s, a) for a in range(4) for s in (1, -1)]
    axis_table = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (2, 0): (1, 2), (3, 0): (1, 3),
        (1, 1): (-1, 0), (2, 2): (-1, 0), (3, 3): (-1, 0),
        (1, 2): (1, 3), (2, 3): (1, 1), (3, 1): (1, 2),
        (2, 1): (-1, 3), (3, 2): (-1, 1), (1, 3): (-1, 2),
    }
    index = {e: i for i, e in enumerate(elems)}

    def mul(x, y):
        (sx, ax), (sy, ay) = x, y
        s, a = axis_table[(ax, ay)]
        return (sx * sy * s, a)

    mult = [[index[mul(a, b)] for b in elems] for a in elems]
    names = {(1, 0): "1", (-1, 0): "-1", (1, 1): "i", (-1, 1): "-i",
             (1, 2): "j", (-1, 2): "-j", (1, 3): "k", (-1, 3): "-k"}
    return group_from_table(mult, [names[e] for e in elems], name="Q8")


def builtin_group(name: str) -> GroupTable:
    """Cn (n <= 12), Dn (n <= 6), S3, S4, A4, Q8."""
    name = name.strip()
    if name.startswith("C") and name[1:].isdigit():
        n = int(name[1:])
        if 1 <= n <= 12:
            return _cyclic(n)
    if name.startswith("D") and name[1:].isdigit():
        n = int(name[1:])
        if 1 <= n <= 6:
            return _dihedral(n)
    if name == "S3":
        return _perm_group(list(itertools.permutations(range(3))), "S3")
    if name == "S4":
        return _perm_group(list(itertools.permutations(range(4))), "S4")
    if name == "A4":
        evens = [p for p in itertools.permutations(range(4)) if _parity(p) == 0]
        return _perm_group(evens, "A4")
    if name == "Q8":
        return _quaternion()
    raise GroupError(f"unknown builtin group {name!r}")


def _parity(perm) -> int:
    inversions = sum(
        1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j]
    )
    return inversions % 2


def is_subgroup(group: GroupTable, elements) -> bool:
    elems = set(elements)
    if group.identity not in elems:
        return False
    return all(
        group.mul(a, b) in elems and group.inv(a) in elems for a in elems for b in elems
    )


def is_normal_subgroup(group: GroupTable, elements) -> bool:
    if not is_subgroup(group, elements):
        return False
    elems = set(elements)
    return all(group.conj(g, x) in elems for g in range(group.order) for x in elems)


def subgroup_table(group: GroupTable, elements) -> tuple[GroupTable, list[int]]:
    """Standalone table on the given elements (in the given order)."""
    if not is_subgroup(group, elements):
        raise GroupError("element set is not a subgroup")
    elements = list(elements)
    index = {g: i for i, g in enumerate(elements)}
    mult = [[index[group.mul(a, b)] for b in elements] for a in elements]
    sub = group_from_table(mult, [group.labels[g] for g in elements],
                           name=f"subgroup of {group.name} order {len(elements)}")
    return sub, elements


def commutator_subgroup(group: GroupTable) -> tuple[list[int], GroupTable]:
    """Closure of all commutators; returned with its standalone table."""
    if not group.validated:
        raise GroupError("group must be validated")
    gens = set()
    for a in range(group.order):
        for b in range(group.order):
            gens.add(group.mul(group.mul(group.inv(a), group.inv(b)), group.mul(a, b)))
    elems = set(gens) | {group.identity}
    changed = True
    while changed:
        changed = False
        for a in list(elems):
            for b in list(elems):
                c = group.mul(a, b)
                if c not in elems:
                    elems.add(c)
                    changed = True
    ordered = sorted(elems)
    sub, _ = subgroup_table(group, ordered)
    return ordered, sub


def coset_representatives(group: GroupTable, elements) -> list[int]:
    """Left coset representatives of a subgroup, smallest index first."""
    elems = set(elements)
    seen = set()
    reps = []
    for g in range(group.order):
        if g in seen:
            continue
        reps.append(g)
        for h in elems:
            seen.add(group.mul(g, h))
    return reps


def group_to_dict(group: GroupTable) -> dict:
    return {"order": group.order, "mult": [list(r) for r in group.mult], "labels": list(group.labels)}


def group_from_dict(data: dict) -> GroupTable:
    try:
        mult = data["mult"]
        labels = data.get("labels")
    except (KeyError, TypeError) as exc:
        raise GroupError(f"malformed group table: {exc}") from exc
    return group_from_table(mult, labels)
