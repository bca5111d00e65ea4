"""Independent reference implementations used as test oracles.

Nothing here imports the package's algebra or solver code. The checks are
written out per element, straight from the axiom equations, so that a bug in
the vectorized validators or the backtracking solver cannot hide behind a
shared helper.
"""

from __future__ import annotations

import itertools

import numpy as np


def naive_inverse(star):
    n = len(star)
    bar = [[None] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            bar[star[x][y]][y] = x
    if any(v is None for row in bar for v in row):
        return None
    return bar


def naive_is_quandle(star) -> bool:
    n = len(star)
    r = range(n)
    if any(star[x][x] != x for x in r):
        return False
    if any(len({star[x][y] for x in r}) != n for y in r):
        return False
    return all(
        star[star[x][y]][z] == star[star[x][z]][star[y][z]] for x in r for y in r for z in r
    )


def naive_singquandle_ok(star, r1, r2) -> bool:
    if not naive_is_quandle(star):
        return False
    s, b, n = star, naive_inverse(star), len(star)
    for x, y, z in itertools.product(range(n), repeat=3):
        if s[r1[b[x][y]][z]][y] != r1[x][s[z][y]]:
            return False
        if r2[b[x][y]][z] != b[r2[x][s[z][y]]][y]:
            return False
        if s[b[y][r1[x][z]]][x] != b[s[y][r2[x][z]]][z]:
            return False
    for x, y in itertools.product(range(n), repeat=2):
        if r2[x][y] != r1[y][s[x][y]]:
            return False
        if s[r1[x][y]][r2[x][y]] != r2[y][s[x][y]]:
            return False
    return True


def naive_disingquandle_ok(s1, s2, r1, r2) -> bool:
    if not (naive_singquandle_ok(s1, r1, r2) and naive_singquandle_ok(s2, r1, r2)):
        return False
    b1, b2, n = naive_inverse(s1), naive_inverse(s2), len(s1)
    for x, y, z in itertools.product(range(n), repeat=3):
        if s2[b1[y][r1[x][z]]][x] != b1[s2[y][r2[x][z]]][z]:
            return False
        if s1[b2[y][r1[x][z]]][x] != b2[s1[y][r2[x][z]]][z]:
            return False
    for x, y in itertools.product(range(n), repeat=2):
        if s1[r1[x][y]][r2[x][y]] != r2[y][s2[x][y]]:
            return False
        if s2[r1[x][y]][r2[x][y]] != r2[y][s1[x][y]]:
            return False
    return True


def all_tables(n: int):
    for flat in itertools.product(range(n), repeat=n * n):
        yield [list(flat[i * n:(i + 1) * n]) for i in range(n)]


def naive_quandles(n: int) -> list[list[list[int]]]:
    return [t for t in all_tables(n) if naive_is_quandle(t)]


def _key(s1, s2, r1, r2) -> tuple:
    return tuple(tuple(map(tuple, t)) for t in (s1, s2, r1, r2))


def naive_filter_n2() -> set[tuple]:
    """Every (*1, *2, R1) triple of 2x2 tables with R2 derived, filtered naively."""
    found = set()
    tables = list(all_tables(2))
    for s1 in tables:
        if not naive_is_quandle(s1):
            continue
        for s2 in tables:
            if not naive_is_quandle(s2):
                continue
            for r1 in tables:
                r2 = [[r1[y][s1[x][y]] for y in range(2)] for x in range(2)]
                if naive_disingquandle_ok(s1, s2, r1, r2):
                    found.add(_key(s1, s2, r1, r2))
    return found


def _batched_ok(s1: np.ndarray, s2: np.ndarray, r1: np.ndarray) -> np.ndarray:
    """Check every axiom for a batch of R1 tables (shape (B, n, n)) at fixed quandles."""
    B, n = r1.shape[0], s1.shape[0]
    b1 = np.array([[int(np.flatnonzero(s1[:, y] == x)[0]) for y in range(n)] for x in range(n)])
    b2 = np.array([[int(np.flatnonzero(s2[:, y] == x)[0]) for y in range(n)] for x in range(n)])
    bi3 = np.arange(B)[:, None, None, None]
    bi2 = np.arange(B)[:, None, None]
    x3, y3, z3 = np.meshgrid(np.arange(n), np.arange(n), np.arange(n), indexing="ij")
    x2, y2 = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    r2 = r1[bi2, y2[None], s1[x2, y2][None]]

    def R1(a, c, bi):
        return r1[bi, a, c]

    def R2(a, c, bi):
        return r2[bi, a, c]

    ok = np.ones(B, dtype=bool)
    X, Y, Z = x3[None], y3[None], z3[None]
    for s, b in ((s1, b1), (s2, b2)):
        conds = [
            s[R1(b[X, Y], Z, bi3), Y] == R1(X, s[Z, Y], bi3),
            R2(b[X, Y], Z, bi3) == b[R2(X, s[Z, Y], bi3), Y],
            s[b[Y, R1(X, Z, bi3)], X] == b[s[Y, R2(X, Z, bi3)], Z],
        ]
        for c in conds:
            ok &= c.reshape(B, -1).all(axis=1)
        X2, Y2 = x2[None], y2[None]
        ok &= (R2(X2, Y2, bi2) == R1(Y2, s[X2, Y2], bi2)).reshape(B, -1).all(axis=1)
        ok &= (s[R1(X2, Y2, bi2), R2(X2, Y2, bi2)] == R2(Y2, s[X2, Y2], bi2)).reshape(B, -1).all(axis=1)
    mixed = [
        s2[b1[Y, R1(X, Z, bi3)], X] == b1[s2[Y, R2(X, Z, bi3)], Z],
        s1[b2[Y, R1(X, Z, bi3)], X] == b2[s1[Y, R2(X, Z, bi3)], Z],
    ]
    for c in mixed:
        ok &= c.reshape(B, -1).all(axis=1)
    X2, Y2 = x2[None], y2[None]
    ok &= (s1[R1(X2, Y2, bi2), R2(X2, Y2, bi2)] == R2(Y2, s2[X2, Y2], bi2)).reshape(B, -1).all(axis=1)
    ok &= (s2[R1(X2, Y2, bi2), R2(X2, Y2, bi2)] == R2(Y2, s1[X2, Y2], bi2)).reshape(B, -1).all(axis=1)
    return ok


def naive_filter(n: int) -> set[tuple]:
    """All structures of order n: naive quandle pairs times every R1 table, R2 derived."""
    quandles = [np.array(q) for q in naive_quandles(n)]
    r1_all = np.array(list(itertools.product(range(n), repeat=n * n)), dtype=np.int64).reshape(-1, n, n)
    found = set()
    x2, y2 = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    for s1 in quandles:
        for s2 in quandles:
            ok = _batched_ok(s1, s2, r1_all)
            for r1 in r1_all[ok]:
                r2 = r1[y2, s1[x2, y2]]
                found.add(_key(s1.tolist(), s2.tolist(), r1.tolist(), r2.tolist()))
    return found


def structure_key(d) -> tuple:
    return _key(d.star1.tolist(), d.star2.tolist(), d.r1.tolist(), d.r2.tolist())


_OPS = {
    "*1": lambda d, a, b: d["s1"][a][b],
    "*2": lambda d, a, b: d["s2"][a][b],
    "/1": lambda d, a, b: d["b1"][a][b],
    "/2": lambda d, a, b: d["b2"][a][b],
    "R1": lambda d, a, b: d["r1"][a][b],
    "R2": lambda d, a, b: d["r2"][a][b],
}


def _naive_tables(d) -> dict:
    tabs = {
        "s1": d.star1.tolist(), "s2": d.star2.tolist(),
        "r1": d.r1.tolist(), "r2": d.r2.tolist(),
    }
    tabs["b1"], tabs["b2"] = naive_inverse(tabs["s1"]), naive_inverse(tabs["s2"])
    return tabs


def _naive_ok(system, tabs, env) -> bool:
    def ev(t):
        if hasattr(t, "name"):
            return env[t.name]
        return _OPS[t.op](tabs, ev(t.left), ev(t.right))

    return all(ev(eq.lhs) == ev(eq.rhs) for eq in system.equations)


def naive_satisfies(system, d, env: dict) -> bool:
    return _naive_ok(system, _naive_tables(d), env)


def naive_count(system, d) -> int:
    """Count colorings with nested Python loops and recursive term evaluation."""
    tabs = _naive_tables(d)
    return sum(
        _naive_ok(system, tabs, dict(zip(system.variables, values)))
        for values in itertools.product(range(d.n), repeat=len(system.variables))
    )


def poly_table(n: int, coeffs, xmap=None, ymap=None) -> list[list[int]]:
    """Tabulate c0 + c1 x + c2 y + c3 x^2 + c4 y^2 + c5 xy mod n, one entry at a time."""
    c0, c1, c2, c3, c4, c5 = coeffs
    out = []
    for x in range(n):
        row = []
        for y in range(n):
            u = xmap(x, y) if xmap else x
            v = ymap(x, y) if ymap else y
            row.append((c0 + c1 * u + c2 * v + c3 * u * u + c4 * v * v + c5 * u * v) % n)
        out.append(row)
    return out
