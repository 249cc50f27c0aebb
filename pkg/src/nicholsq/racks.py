"""Finite racks, quandles, and rack 2-cocycles.

Elements are 0-based indices internally; the 1-based labels used at the
interface (letters 1..4 of the braided vector space) are shifted at the
boundary.  The triangle operation on labels {1,2,3}, written 2i-j with
class-mod-3 representatives in {1,2,3}, is realized by an explicit lookup
table rather than modular arithmetic.
"""

from __future__ import annotations

import json

from .scalars import Scalar, render_scalar

__all__ = [
    "Rack",
    "TwoCocycle",
    "NotClosed",
    "validate_rack",
    "validate_cocycle",
    "conjugation_rack",
    "trivial_rack",
    "dihedral_rack",
    "hv1_rack_and_cocycle",
    "TRIANGLE",
]


class NotClosed(ValueError):
    """Conjugation left the candidate element set."""


# 2i-j on labels {1,2,3}: the third transposition when i != j, i when i == j.
TRIANGLE = {
    (1, 1): 1, (1, 2): 3, (1, 3): 2,
    (2, 1): 3, (2, 2): 2, (2, 3): 1,
    (3, 1): 2, (3, 2): 1, (3, 3): 3,
}


class Rack:
    """A finite set with a binary operation x > y given by a table."""

    def __init__(self, table):
        self.table = tuple(tuple(row) for row in table)
        self.size = len(self.table)

    def op(self, x: int, y: int) -> int:
        return self.table[x][y]

    def __eq__(self, other):
        return isinstance(other, Rack) and self.table == other.table

    def __repr__(self):
        return f"Rack(size={self.size})"

    def to_json(self) -> str:
        return json.dumps({"size": self.size, "op": [list(r) for r in self.table]})


class TwoCocycle:
    """Scalar table q[x][y]; entries may be any engine coefficient."""

    def __init__(self, values):
        self.values = tuple(tuple(row) for row in values)
        self.size = len(self.values)

    def __call__(self, x: int, y: int):
        return self.values[x][y]

    def to_json(self) -> str:
        return json.dumps({
            "size": self.size,
            "values": [[render_scalar(v) if isinstance(v, Scalar) else str(v)
                        for v in row] for row in self.values],
        })


def validate_rack(r: Rack):
    """Return (True, None) or (False, witness) for the rack axioms."""
    n = r.size
    for row in r.table:
        if len(row) != n or any(not (0 <= v < n) for v in row):
            return False, ("entry-range", row)
    for x in range(n):
        if len(set(r.table[x])) != n:
            return False, ("not-bijective", x)
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if r.op(x, r.op(y, z)) != r.op(r.op(x, y), r.op(x, z)):
                    return False, ("self-distributivity", (x, y, z))
    return True, None


def validate_cocycle(r: Rack, q: TwoCocycle):
    """Check q[x][y>z] * q[y][z] == q[x>y][x>z] * q[x][z] on all triples."""
    if q.size != r.size:
        return False, ("size-mismatch", (q.size, r.size))
    for x in range(r.size):
        for y in range(r.size):
            for z in range(r.size):
                lhs = q(x, r.op(y, z)) * q(y, z)
                rhs = q(r.op(x, y), r.op(x, z)) * q(x, z)
                if lhs != rhs:
                    return False, ("cocycle", (x, y, z))
    return True, None


def conjugation_rack(elements, conj) -> Rack:
    """Rack on `elements` with x > y := conj(x, y) (e.g. x y x^{-1}).

    Raises NotClosed if conjugation leaves the element list.  The result is
    a quandle whenever conj(x, x) == x, which holds for group conjugation.
    """
    index = {e: i for i, e in enumerate(elements)}
    table = []
    for x in elements:
        row = []
        for y in elements:
            v = conj(x, y)
            if v not in index:
                raise NotClosed(f"{x} > {y} = {v} escapes the element set")
            row.append(index[v])
        table.append(row)
    return Rack(table)


def trivial_rack(n: int) -> Rack:
    return Rack([[y for y in range(n)] for _ in range(n)])


def dihedral_rack() -> Rack:
    """The rack of transpositions of the symmetric group on three letters,
    labels 1..3 shifted to 0-based."""
    table = [[TRIANGLE[(i + 1, j + 1)] - 1 for j in range(3)] for i in range(3)]
    return Rack(table)


def hv1_rack_and_cocycle():
    """The 4-element rack (triangle rack plus a fixed point) and its cocycle.

    Cocycle blocks: -1 on the triangle, q on (i, 4), q2 on (4, i), and
    -w^2 on (4, 4).
    """
    tri = dihedral_rack()
    table = []
    for x in range(4):
        row = []
        for y in range(4):
            if x < 3 and y < 3:
                row.append(tri.op(x, y))
            elif y == 3:
                row.append(3)
            else:  # x == 3, y < 3
                row.append(y)
        table.append(row)
    rack = Rack(table)

    m1 = -Scalar.one()
    q1 = Scalar.q()
    q2 = Scalar.q2()
    mw2 = -(Scalar.omega() ** 2)
    values = []
    for x in range(4):
        row = []
        for y in range(4):
            if x < 3 and y < 3:
                row.append(m1)
            elif x < 3:
                row.append(q1)
            elif y < 3:
                row.append(q2)
            else:
                row.append(mw2)
        values.append(row)
    return rack, TwoCocycle(values)
