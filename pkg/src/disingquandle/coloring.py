"""Counting colorings of relation systems by a finite oriented disingquandle.

Two independent routes:

* :func:`count_colorings_exhaustive` evaluates every one of the ``n**k``
  assignments by table lookup (vectorized in chunks). It is the oracle.
* :func:`count_colorings` backtracks over variables, most-constrained first,
  and after each choice solves equations with a single unknown where the
  unknown can be recovered through a column inverse.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .algebra import OrientedDisingquandle
from .links import App, RelationSystem, Term, Var

__all__ = [
    "CeilingExceeded",
    "ColoringResult",
    "DEFAULT_MATERIALIZATION_CEILING",
    "DEFAULT_ORACLE_CEILING",
    "PsiTuple",
    "count_colorings",
    "count_colorings_exhaustive",
    "enumerate_colorings",
    "psi",
]

DEFAULT_ORACLE_CEILING = 10**9
DEFAULT_MATERIALIZATION_CEILING = 10**6
_CHUNK_CELLS = 1 << 25


class CeilingExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class ColoringResult:
    count: int
    colorings: tuple[tuple[int, ...], ...] | None = None
    variables: tuple[str, ...] = ()
    structure_id: str = ""
    system_id: str = ""

    def assignments(self) -> list[dict[str, int]]:
        if self.colorings is None:
            raise ValueError("colorings were not materialized")
        return [dict(zip(self.variables, c)) for c in self.colorings]


@dataclass(frozen=True)
class PsiTuple:
    values: tuple[int, ...]
    structure_ids: tuple[str, ...] = ()

    def __iter__(self):
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __str__(self) -> str:
        return "(" + ", ".join(str(v) for v in self.values) + ")"


def _structure_id(d: OrientedDisingquandle) -> str:
    return d.name or f"n={d.n}"


# --- oracle ---------------------------------------------------------------


def _small_tables(d: OrientedDisingquandle) -> dict[str, np.ndarray]:
    dtype = np.uint8 if d.n <= 256 else np.int32
    return {sym: d.op(sym).astype(dtype) for sym in ("*1", "*2", "/1", "/2", "R1", "R2")}


def _eval_array(term: Term, tables, env):
    if isinstance(term, Var):
        return env[term.name]
    return tables[term.op][_eval_array(term.left, tables, env), _eval_array(term.right, tables, env)]


def count_colorings_exhaustive(
    system: RelationSystem,
    d: OrientedDisingquandle,
    *,
    ceiling: int = DEFAULT_ORACLE_CEILING,
    materialize: bool = False,
) -> ColoringResult:
    """Brute-force count over all ``n**k`` assignments.

    Raises CeilingExceeded when ``n**k`` exceeds `ceiling`.
    """
    n, names = d.n, system.variables
    k = len(names)
    total = n**k
    if total > ceiling:
        raise CeilingExceeded(f"{n}^{k} = {total} assignments exceeds the oracle ceiling {ceiling}")
    tables = _small_tables(d)
    dtype = next(iter(tables.values())).dtype

    lead = 0
    while lead < k and n ** (k - lead) > _CHUNK_CELLS:
        lead += 1
    rest = k - lead
    shape = (n,) * rest
    axes = {
        name: np.arange(n, dtype=dtype).reshape((1,) * i + (n,) + (1,) * (rest - i - 1))
        for i, name in enumerate(names[lead:])
    }

    count = 0
    found: list[tuple[int, ...]] = []
    for prefix in itertools.product(range(n), repeat=lead):
        env = dict(axes)
        env.update({name: dtype.type(v) for name, v in zip(names[:lead], prefix)})
        ok = np.ones(shape, dtype=bool)
        for eq in system.equations:
            ok &= _eval_array(eq.lhs, tables, env) == _eval_array(eq.rhs, tables, env)
        hits = int(np.count_nonzero(ok))
        count += hits
        if materialize and hits:
            for tail in np.argwhere(ok):
                found.append(tuple(prefix) + tuple(int(v) for v in tail))
    return ColoringResult(
        count,
        tuple(found) if materialize else None,
        names,
        _structure_id(d),
        system.name,
    )


# --- propagation solver ---------------------------------------------------

_VAR = -1


def _compile(term: Term, index: dict[str, int]):
    if isinstance(term, Var):
        return (_VAR, index[term.name])
    return (term.op, _compile(term.left, index), _compile(term.right, index))


def _term_vars(t) -> list[int]:
    if t[0] == _VAR:
        return [t[1]]
    return _term_vars(t[1]) + _term_vars(t[2])


class _Solver:
    def __init__(self, system: RelationSystem, d: OrientedDisingquandle):
        self.n = d.n
        self.tables = {sym: d.op(sym).tolist() for sym in ("*1", "*2", "/1", "/2", "R1", "R2")}
        self.inverse_of = {"*1": "/1", "*2": "/2", "/1": "*1", "/2": "*2"}
        index = {v: i for i, v in enumerate(system.variables)}
        self.k = len(system.variables)
        self.eqs = []
        for eq in system.equations:
            lhs, rhs = _compile(eq.lhs, index), _compile(eq.rhs, index)
            vs = _term_vars(lhs) + _term_vars(rhs)
            self.eqs.append((lhs, rhs, sorted(set(vs)), vs))
        freq = [0] * self.k
        for _, _, distinct, _ in self.eqs:
            for v in distinct:
                freq[v] += 1
        self.order = sorted(range(self.k), key=lambda v: (-freq[v], v))
        self.watch = [[i for i, e in enumerate(self.eqs) if v in e[2]] for v in range(self.k)]

    def ev(self, t, env):
        if t[0] == _VAR:
            return env[t[1]]
        a = self.ev(t[1], env)
        if a is None:
            return None
        b = self.ev(t[2], env)
        if b is None:
            return None
        return self.tables[t[0]][a][b]

    def solve_for(self, t, target, env):
        """Return (var, value) if `t == target` pins its single unknown through inverses."""
        while True:
            if t[0] == _VAR:
                return (t[1], target)
            op = t[0]
            if op not in self.inverse_of:
                return None
            right = self.ev(t[2], env)
            if right is None:
                return None  # unknown on the right: left multiplication need not be invertible
            target = self.tables[self.inverse_of[op]][target][right]
            t = t[1]

    def propagate(self, env, trail, pending) -> bool:
        """Process equations touched by new assignments. False on contradiction."""
        queue = list(pending)
        queued = set(queue)
        while queue:
            i = queue.pop()
            queued.discard(i)
            lhs, rhs, distinct, occurrences = self.eqs[i]
            unknown = [v for v in distinct if env[v] is None]
            if not unknown:
                if self.ev(lhs, env) != self.ev(rhs, env):
                    return False
                continue
            if len(unknown) > 1 or occurrences.count(unknown[0]) > 1:
                continue
            u = unknown[0]
            lv, rv = self.ev(lhs, env), self.ev(rhs, env)
            solved = None
            if lv is not None:
                solved = self.solve_for(rhs, lv, env)
            elif rv is not None:
                solved = self.solve_for(lhs, rv, env)
            if solved is None:
                continue
            var, value = solved
            assert var == u
            env[var] = value
            trail.append(var)
            for j in self.watch[var]:
                if j not in queued:
                    queued.add(j)
                    queue.append(j)
        return True

    def run(self, env, collect: list | None, first_values=None) -> int:
        trail: list[int] = []
        if not self.propagate(env, trail, range(len(self.eqs))):
            return 0
        return self._search(env, collect, first_values)

    def _search(self, env, collect, restrict=None) -> int:
        var = next((v for v in self.order if env[v] is None), None)
        if var is None:
            if collect is not None:
                collect.append(tuple(env))
            return 1
        total = 0
        values = range(self.n) if restrict is None else restrict
        for value in values:
            env[var] = value
            trail = [var]
            if self.propagate(env, trail, self.watch[var]):
                total += self._search(env, collect)
            for v in trail:
                env[v] = None
        return total


def _run_solver(system, d, collect: bool, threads: int):
    solver = _Solver(system, d)
    if solver.k == 0:
        env: list = []
        ok = solver.propagate(env, [], range(len(solver.eqs)))
        return (1 if ok else 0), ([()] if ok and collect else [])
    if threads <= 1:
        found: list | None = [] if collect else None
        count = solver.run([None] * solver.k, found)
        return count, found

    # each branch fixes the first branching variable to one value; merged in value order
    def branch(value):
        out: list | None = [] if collect else None
        c = solver.run([None] * solver.k, out, first_values=[value])
        return c, out

    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = list(pool.map(branch, range(d.n)))
    count = 0
    found = [] if collect else None
    for c, out in parts:
        count += c
        if collect:
            found.extend(out)
    return count, found


def count_colorings(system: RelationSystem, d: OrientedDisingquandle, *, threads: int = 1) -> ColoringResult:
    """Number of colorings, by backtracking with inverse-table propagation."""
    count, _ = _run_solver(system, d, collect=False, threads=threads)
    return ColoringResult(count, None, system.variables, _structure_id(d), system.name)


def enumerate_colorings(
    system: RelationSystem,
    d: OrientedDisingquandle,
    *,
    ceiling: int = DEFAULT_MATERIALIZATION_CEILING,
    threads: int = 1,
) -> ColoringResult:
    """All colorings, as tuples in the order of ``system.variables``, sorted lexicographically.

    Raises CeilingExceeded if there are more than `ceiling` colorings.
    """
    count = count_colorings(system, d, threads=threads).count
    if count > ceiling:
        raise CeilingExceeded(f"{count} colorings exceeds the materialization ceiling {ceiling}")
    _, found = _run_solver(system, d, collect=True, threads=threads)
    return ColoringResult(count, tuple(sorted(found)), system.variables, _structure_id(d), system.name)


def psi(system: RelationSystem, structures, *, threads: int = 1) -> PsiTuple:
    """Tuple of coloring counts of one system under several structures."""
    structures = list(structures)
    if not structures:
        raise ValueError("psi needs at least one structure")
    return PsiTuple(
        tuple(count_colorings(system, d, threads=threads).count for d in structures),
        tuple(_structure_id(d) for d in structures),
    )
