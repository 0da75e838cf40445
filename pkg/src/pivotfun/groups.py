"""Finite groups as Cayley tables.

Element 0 is the identity by convention.  Tables are validated on load by
brute force; groups at desk scale have order <= ~24 so cubic checks are fine.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import StructuralError
from .report import Report


@dataclass(frozen=True)
class FiniteGroup:
    table: tuple[tuple[int, ...], ...]
    inverse: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        n = len(self.table)
        if any(len(row) != n for row in self.table):
            raise StructuralError("Cayley table must be square")
        if any(not (0 <= v < n) for row in self.table for v in row):
            raise StructuralError("Cayley table entries out of range")
        inv = [-1] * n
        for g in range(n):
            for h in range(n):
                if self.table[g][h] == 0 and self.table[h][g] == 0:
                    inv[g] = h
                    break
            if inv[g] < 0:
                raise StructuralError(f"element {g} has no two-sided inverse")
        object.__setattr__(self, "inverse", tuple(inv))

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, g: int, h: int) -> int:
        return self.table[g][h]

    def inv(self, g: int) -> int:
        return self.inverse[g]

    def element_order(self, g: int) -> int:
        k, x = 1, g
        while x != 0:
            x = self.mul(x, g)
            k += 1
        return k

    def is_abelian(self) -> bool:
        n = self.order
        return all(self.table[g][h] == self.table[h][g]
                   for g in range(n) for h in range(n))

    def to_json(self) -> dict:
        return {"order": self.order, "table": [list(r) for r in self.table]}

    @staticmethod
    def from_json(obj) -> "FiniteGroup":
        try:
            table = tuple(tuple(int(v) for v in row) for row in obj["table"])
        except (KeyError, TypeError) as exc:
            raise StructuralError(f"malformed group JSON: {exc}") from exc
        if "order" in obj and int(obj["order"]) != len(table):
            raise StructuralError("declared order does not match table size")
        g = FiniteGroup(table)
        verify_group(table).require()
        return g


def verify_group(table, tol_eps: float = 0.0) -> Report:
    """Brute-force check that an index table is a group with identity 0."""
    rep = Report("group", tolerance=max(tol_eps, 0.5))
    n = len(table)
    if any(len(row) != n for row in table):
        raise StructuralError("Cayley table must be square")
    ident_bad = next(
        (g for g in range(n) if table[0][g] != g or table[g][0] != g), None)
    rep.add("identity", 0.0 if ident_bad is None else 1.0,
            witness=None if ident_bad is None else f"g={ident_bad}")
    assoc_bad = None
    for g in range(n):
        for h in range(n):
            for k in range(n):
                if table[table[g][h]][k] != table[g][table[h][k]]:
                    assoc_bad = (g, h, k)
                    break
            if assoc_bad:
                break
        if assoc_bad:
            break
    rep.add("associativity", 0.0 if assoc_bad is None else 1.0,
            witness=None if assoc_bad is None else f"triple={assoc_bad}")
    inv_bad = next(
        (g for g in range(n)
         if not any(table[g][h] == 0 and table[h][g] == 0 for h in range(n))),
        None)
    rep.add("inverses", 0.0 if inv_bad is None else 1.0,
            witness=None if inv_bad is None else f"g={inv_bad}")
    return rep


def cyclic(n: int) -> FiniteGroup:
    return FiniteGroup(tuple(tuple((i + j) % n for j in range(n)) for i in range(n)))


def direct_product(a: FiniteGroup, b: FiniteGroup) -> FiniteGroup:
    """Product group with elements enumerated as i*|B| + j."""
    nb = b.order
    pairs = [(i, j) for i in range(a.order) for j in range(b.order)]
    idx = {p: k for k, p in enumerate(pairs)}
    table = tuple(
        tuple(idx[(a.mul(i1, i2), b.mul(j1, j2))] for (i2, j2) in pairs)
        for (i1, j1) in pairs
    )
    return FiniteGroup(table)


def klein_four() -> FiniteGroup:
    return direct_product(cyclic(2), cyclic(2))
