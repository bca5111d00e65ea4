"""Finite groups as tables, and conjugation singquandles built from them."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from ._validation import StructureError, check_table
from .algebra import AxiomReport, OrientedSingquandle, validate_oriented_singquandle
from .presentation import format_blocks, parse_blocks

__all__ = [
    "GroupTable",
    "conjugation_singquandle",
    "cyclic_group",
    "format_group",
    "parse_group",
    "symmetric_group",
    "word_condition_holds",
]


@dataclass(frozen=True, eq=False)
class GroupTable:
    mul: np.ndarray
    inv: np.ndarray
    identity: int

    @classmethod
    def from_table(cls, mul) -> GroupTable:
        """Build from a multiplication table, deriving identity and inverses.

        Raises StructureError if the table is not a group.
        """
        m = check_table(mul, name="group table")
        n = m.shape[0]
        r = np.arange(n)
        ids = [e for e in range(n) if np.array_equal(m[e], r) and np.array_equal(m[:, e], r)]
        if not ids:
            raise StructureError("group table has no two-sided identity")
        e = ids[0]
        inv = np.full(n, -1, dtype=np.int64)
        for x in range(n):
            hits = np.flatnonzero(m[x] == e)
            if hits.size != 1 or m[hits[0], x] != e:
                raise StructureError(f"element {x} has no two-sided inverse")
            inv[x] = hits[0]
        g = cls(m, inv, e)
        g.check()
        return g

    @property
    def n(self) -> int:
        return self.mul.shape[0]

    def check(self) -> None:
        m, n = self.mul, self.n
        x, y, z = np.ix_(range(n), range(n), range(n))
        bad = np.argwhere(m[m[x, y], z] != m[x, m[y, z]])
        if bad.size:
            raise StructureError(f"group table is not associative at {tuple(int(v) for v in bad[0])}")
        r = np.arange(n)
        if not (np.array_equal(m[r, self.inv], np.full(n, self.identity))
                and np.array_equal(m[self.inv, r], np.full(n, self.identity))):
            raise StructureError("inverse table is inconsistent with the multiplication")

    def power(self, x: np.ndarray, k: int) -> np.ndarray:
        out = np.full_like(x, self.identity)
        for _ in range(k):
            out = self.mul[out, x]
        return out


def cyclic_group(n: int) -> GroupTable:
    r = np.arange(n)
    return GroupTable.from_table((r[:, None] + r[None, :]) % n)


def symmetric_group(k: int) -> GroupTable:
    """S_k on permutations of range(k) in lexicographic order; ``(p*q)(i) = q(p(i))``."""
    perms = list(itertools.permutations(range(k)))
    index = {p: i for i, p in enumerate(perms)}
    n = len(perms)
    mul = np.empty((n, n), dtype=np.int64)
    for i, p in enumerate(perms):
        for j, q in enumerate(perms):
            mul[i, j] = index[tuple(q[p[t]] for t in range(k))]
    return GroupTable.from_table(mul)


def conjugation_singquandle(g: GroupTable, variant: str, k: int) -> tuple[OrientedSingquandle, AxiomReport]:
    """Conjugation quandle ``x * y = y^-1 x y`` with one of three R-map families.

    - ``A``: ``R1 = x (x y^-1)^k``, ``R2 = y (x^-1 y)^k``
    - ``B``: ``R1 = (x y^-1)^k x``, ``R2 = (x^-1 y)^k y``
    - ``D``: ``R1 = x (y x^-1)^(k+1)``, ``R2 = x (y^-1 x)^k``

    Returns the structure and its axiom report; the report decides whether it
    is an oriented singquandle.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    m, inv = g.mul, g.inv
    x, y = np.ix_(range(g.n), range(g.n))
    x = np.broadcast_to(x, (g.n, g.n))
    y = np.broadcast_to(y, (g.n, g.n))
    star = m[m[inv[y], x], y]
    variant = variant.upper()
    if variant == "A":
        r1 = m[x, g.power(m[x, inv[y]], k)]
        r2 = m[y, g.power(m[inv[x], y], k)]
    elif variant == "B":
        r1 = m[g.power(m[x, inv[y]], k), x]
        r2 = m[g.power(m[inv[x], y], k), y]
    elif variant == "D":
        r1 = m[x, g.power(m[y, inv[x]], k + 1)]
        r2 = m[x, g.power(m[inv[y], x], k)]
    else:
        raise ValueError(f"unknown variant {variant!r}; expected A, B or D")
    s = OrientedSingquandle(star, r1, r2, name=f"conj-{variant}{k}")
    return s, validate_oriented_singquandle(s)


def word_condition_holds(g: GroupTable, s: OrientedSingquandle) -> bool:
    """Check ``R2(x,y) = R2(w,x) R1(w,x)^-1 R2(w,x)`` with ``w = x y^-1 x`` for all pairs."""
    m, inv = g.mul, g.inv
    x, y = np.ix_(range(g.n), range(g.n))
    w = m[m[x, inv[y]], x]
    xx = np.broadcast_to(x, w.shape)
    a = s.r2[w, xx]
    b = s.r1[w, xx]
    return bool(np.array_equal(s.r2, m[m[a, inv[b]], a]))


def format_group(g: GroupTable) -> str:
    return format_blocks((g.mul, g.inv[None, :]), f"n={g.n}")


def parse_group(text: str) -> GroupTable:
    """Parse ``n=<int>``, the multiplication block, a blank line, and the inverse line."""
    lines = text.strip().splitlines()
    body = "\n".join(lines)
    parts = body.split("\n\n")
    if len(parts) != 2:
        raise StructureError("group file must hold a multiplication block and an inverse line")
    n, blocks = parse_blocks(parts[0])
    if len(blocks) != 1:
        raise StructureError("expected exactly one multiplication block")
    try:
        inv = [int(t) for t in parts[1].split()]
    except ValueError:
        raise StructureError("inverse line must hold integers") from None
    if len(inv) != n:
        raise StructureError(f"inverse line must have {n} entries")
    g = GroupTable.from_table(blocks[0])
    if list(g.inv) != inv:
        raise StructureError("inverse line disagrees with the multiplication table")
    return g
