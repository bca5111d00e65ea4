"""Cayley-table quandles, oriented singquandles and oriented disingquandles.

Every structure lives on the carrier {0, ..., n-1}. Operations are stored as
read-only ``(n, n)`` int64 arrays with ``table[x, y] == x * y``. The right
inverse ``x /y`` of a quandle operation is never supplied by the caller; it is
derived by inverting each column of the table.

Validators check every axiom exhaustively (all pairs, all triples) and report
the lexicographically smallest counterexample of each failing axiom.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from ._validation import StructureError, check_table

__all__ = [
    "AxiomError",
    "AxiomReport",
    "AxiomResult",
    "OrientedDisingquandle",
    "OrientedSingquandle",
    "StructureError",
    "right_inverse_table",
    "validate_oriented_disingquandle",
    "validate_oriented_singquandle",
    "validate_quandle",
]


@dataclass(frozen=True)
class AxiomResult:
    axiom: str
    passed: bool
    counterexample: tuple[int, ...] | None = None
    detail: str = ""

    def format(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.axiom}"
        if self.counterexample is not None:
            line += f" counterexample={self.counterexample}"
        if self.detail:
            line += f" ({self.detail})"
        return line


@dataclass(frozen=True)
class AxiomReport:
    """Ordered per-axiom results. Truthy iff every axiom passed."""

    results: tuple[AxiomResult, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def __bool__(self) -> bool:
        return self.passed

    def __iter__(self):
        return iter(self.results)

    def __len__(self) -> int:
        return len(self.results)

    def __getitem__(self, axiom: str) -> AxiomResult:
        for r in self.results:
            if r.axiom == axiom:
                return r
        raise KeyError(axiom)

    @property
    def axioms(self) -> list[str]:
        return [r.axiom for r in self.results]

    def failures(self) -> list[AxiomResult]:
        return [r for r in self.results if not r.passed]

    def first_failure(self) -> AxiomResult | None:
        bad = self.failures()
        return bad[0] if bad else None

    def format(self) -> str:
        return "\n".join(r.format() for r in self.results)

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "results": [
                {
                    "axiom": r.axiom,
                    "passed": r.passed,
                    "counterexample": list(r.counterexample) if r.counterexample is not None else None,
                    "detail": r.detail,
                }
                for r in self.results
            ],
        }

    def prefixed(self, prefix: str) -> AxiomReport:
        return AxiomReport(
            tuple(AxiomResult(f"{prefix}{r.axiom}", r.passed, r.counterexample, r.detail) for r in self.results)
        )

    def __add__(self, other: AxiomReport) -> AxiomReport:
        return AxiomReport(self.results + other.results)


class AxiomError(ValueError):
    """Raised when a structure is required to satisfy axioms it does not."""

    def __init__(self, report: AxiomReport, message: str | None = None):
        self.report = report
        bad = report.first_failure()
        if message is None:
            message = "axiom check failed"
            if bad is not None:
                message += f": {bad.format()}"
        super().__init__(message)


def _check(axiom: str, holds: np.ndarray, shape: tuple[int, ...]) -> AxiomResult:
    # argwhere walks C order, so the first hit is the lexicographically smallest tuple
    holds = np.broadcast_to(holds, shape)
    bad = np.argwhere(~holds)
    if bad.size:
        return AxiomResult(axiom, False, tuple(int(v) for v in bad[0]))
    return AxiomResult(axiom, True)


def _skipped(axiom: str, reason: str) -> AxiomResult:
    return AxiomResult(axiom, False, None, f"not checked: {reason}")


def _grids(n: int, k: int) -> tuple[np.ndarray, ...]:
    r = np.arange(n)
    return tuple(r.reshape((1,) * i + (n,) + (1,) * (k - i - 1)) for i in range(k))


def _bijective_columns(t: np.ndarray) -> np.ndarray:
    n = t.shape[0]
    s = np.sort(t, axis=0)
    return np.all(s == np.arange(n)[:, None], axis=0)


def validate_quandle(table) -> AxiomReport:
    """Check idempotency, column bijectivity and right self-distributivity.

    Counterexamples: ``(x,)`` for idempotency, ``(x1, x2, y)`` with ``x1 < x2`` and
    ``x1*y == x2*y`` for bijectivity, ``(x, y, z)`` for self-distributivity.
    Raises StructureError for a malformed table.
    """
    t = check_table(table)
    n = t.shape[0]
    r = np.arange(n)
    results = [_check("idempotency", t[r, r] == r, (n,))]

    x1, x2, y = _grids(n, 3)
    collide = (x1 < x2) & (t[x1, y] == t[x2, y])
    results.append(_check("column_bijectivity", ~collide, (n, n, n)))

    x, y, z = _grids(n, 3)
    results.append(_check("self_distributivity", t[t[x, y], z] == t[t[x, z], t[y, z]], (n, n, n)))
    return AxiomReport(tuple(results))


def right_inverse_table(table) -> np.ndarray:
    """Return ``b`` with ``b[t[x, y], y] == x`` and ``t[b[x, y], y] == x``.

    Raises StructureError naming the first column of `table` that is not a bijection.
    """
    t = check_table(table)
    n = t.shape[0]
    ok = _bijective_columns(t)
    if not ok.all():
        col = int(np.argmin(ok))
        raise StructureError(f"column {col} of the operation table is not a bijection")
    b = np.empty_like(t)
    cols = np.broadcast_to(np.arange(n), (n, n))
    rows = np.broadcast_to(np.arange(n)[:, None], (n, n))
    b[t, cols] = rows
    b.setflags(write=False)
    return b


def _freeze(*tables: np.ndarray) -> None:
    for t in tables:
        t.setflags(write=False)


class OrientedSingquandle:
    """A quandle table ``star`` together with two binary maps ``r1``, ``r2``.

    Construction only checks that the tables are well-formed and share one
    carrier; use :func:`validate_oriented_singquandle` for the axioms.
    """

    def __init__(self, star, r1, r2, name: str | None = None):
        self.star = check_table(star, name="star")
        n = self.star.shape[0]
        self.r1 = check_table(r1, n, name="r1")
        self.r2 = check_table(r2, n, name="r2")
        self.name = name

    @property
    def n(self) -> int:
        return self.star.shape[0]

    @cached_property
    def star_bar(self) -> np.ndarray:
        return right_inverse_table(self.star)

    def __eq__(self, other) -> bool:
        if not isinstance(other, OrientedSingquandle):
            return NotImplemented
        return all(np.array_equal(a, b) for a, b in zip(self._tables(), other._tables()))

    def __hash__(self) -> int:
        return hash(tuple(t.tobytes() for t in self._tables()))

    def _tables(self):
        return (self.star, self.r1, self.r2)

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<OrientedSingquandle{label} n={self.n}>"


class OrientedDisingquandle:
    """Two quandle tables ``star1``, ``star2`` sharing the maps ``r1``, ``r2``."""

    def __init__(self, star1, star2, r1, r2, name: str | None = None):
        self.star1 = check_table(star1, name="star1")
        n = self.star1.shape[0]
        self.star2 = check_table(star2, n, name="star2")
        self.r1 = check_table(r1, n, name="r1")
        self.r2 = check_table(r2, n, name="r2")
        self.name = name

    @property
    def n(self) -> int:
        return self.star1.shape[0]

    @cached_property
    def star1_bar(self) -> np.ndarray:
        return right_inverse_table(self.star1)

    @cached_property
    def star2_bar(self) -> np.ndarray:
        return right_inverse_table(self.star2)

    def op(self, symbol: str) -> np.ndarray:
        """Table for one of ``*1 *2 /1 /2 R1 R2``."""
        try:
            attr = _OP_ATTR[symbol]
        except KeyError:
            raise KeyError(f"unknown operation {symbol!r}") from None
        return getattr(self, attr)

    def singquandle(self, k: int) -> OrientedSingquandle:
        star = {1: self.star1, 2: self.star2}[k]
        return OrientedSingquandle(star, self.r1, self.r2)

    def relabel(self, perm) -> OrientedDisingquandle:
        """Transport the structure along the bijection ``x -> perm[x]``."""
        p = np.asarray(perm, dtype=np.int64)
        if sorted(p.tolist()) != list(range(self.n)):
            raise StructureError("relabeling must be a permutation of the carrier")
        inv = np.argsort(p)

        def conj(t):
            return p[t[np.ix_(inv, inv)]]

        return OrientedDisingquandle(
            conj(self.star1), conj(self.star2), conj(self.r1), conj(self.r2), name=self.name
        )

    def _tables(self):
        return (self.star1, self.star2, self.r1, self.r2)

    def __eq__(self, other) -> bool:
        if not isinstance(other, OrientedDisingquandle):
            return NotImplemented
        return all(np.array_equal(a, b) for a, b in zip(self._tables(), other._tables()))

    def __hash__(self) -> int:
        return hash(tuple(t.tobytes() for t in self._tables()))

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<OrientedDisingquandle{label} n={self.n}>"


_OP_ATTR = {"*1": "star1", "*2": "star2", "/1": "star1_bar", "/2": "star2_bar", "R1": "r1", "R2": "r2"}

# Axioms that read the right inverse of the quandle operation.
_SINGQUANDLE_BAR_AXIOMS = ("r1_conjugation", "r2_conjugation", "pass_through")
_MIXED_BAR_AXIOMS = ("mixed_pass_through_12", "mixed_pass_through_21")


def _singquandle_axioms(star, bar, r1, r2) -> list[AxiomResult]:
    n = star.shape[0]
    results = []
    if bar is None:
        results.append(_skipped("inverse_coherence", "operation has a non-bijective column"))
        results.extend(_skipped(a, "operation has a non-bijective column") for a in _SINGQUANDLE_BAR_AXIOMS)
    else:
        x, y = _grids(n, 2)
        coherent = (bar[star[x, y], y] == x) & (star[bar[x, y], y] == x)
        results.append(_check("inverse_coherence", coherent, (n, n)))

        x, y, z = _grids(n, 3)
        # R1(x /y, z) * y = R1(x, z * y)
        results.append(_check("r1_conjugation", star[r1[bar[x, y], z], y] == r1[x, star[z, y]], (n, n, n)))
        # R2(x /y, z) = R2(x, z * y) / y
        results.append(_check("r2_conjugation", r2[bar[x, y], z] == bar[r2[x, star[z, y]], y], (n, n, n)))
        # (y / R1(x, z)) * x = (y * R2(x, z)) / z
        lhs = star[bar[y, r1[x, z]], x]
        rhs = bar[star[y, r2[x, z]], z]
        results.append(_check("pass_through", lhs == rhs, (n, n, n)))

    x, y = _grids(n, 2)
    # R2(x, y) = R1(y, x * y)
    results.append(_check("r2_from_r1", r2[x, y] == r1[y, star[x, y]], (n, n)))
    # R1(x, y) * R2(x, y) = R2(y, x * y)
    results.append(_check("exchange", star[r1[x, y], r2[x, y]] == r2[y, star[x, y]], (n, n)))
    return results


def _bar_or_none(star: np.ndarray) -> np.ndarray | None:
    try:
        return right_inverse_table(star)
    except StructureError:
        return None


def validate_oriented_singquandle(s: OrientedSingquandle) -> AxiomReport:
    """Quandle axioms, inverse coherence, then the five singquandle axioms.

    Axioms that need the right inverse are reported as failed with no
    counterexample when the operation has a non-bijective column.
    """
    report = validate_quandle(s.star)
    bar = _bar_or_none(s.star)
    return report + AxiomReport(tuple(_singquandle_axioms(s.star, bar, s.r1, s.r2)))


def validate_oriented_disingquandle(d: OrientedDisingquandle) -> AxiomReport:
    """Full check: both singquandle reducts, the four mixing axioms, and the
    label-symmetry identity ``R2(y, x *1 y) == R2(y, x *2 y)``.

    Reduct results are prefixed ``star1/`` and ``star2/``.
    """
    n = d.n
    report = AxiomReport()
    bars = {}
    for k, star in ((1, d.star1), (2, d.star2)):
        sub = validate_quandle(star)
        bars[k] = _bar_or_none(star)
        sub = sub + AxiomReport(tuple(_singquandle_axioms(star, bars[k], d.r1, d.r2)))
        report = report + sub.prefixed(f"star{k}/")

    s1, s2, r1, r2 = d.star1, d.star2, d.r1, d.r2
    mixed = []
    if bars[1] is None or bars[2] is None:
        mixed.extend(_skipped(a, "an operation has a non-bijective column") for a in _MIXED_BAR_AXIOMS)
    else:
        b1, b2 = bars[1], bars[2]
        x, y, z = _grids(n, 3)
        # (y /1 R1(x, z)) *2 x = (y *2 R2(x, z)) /1 z
        mixed.append(
            _check("mixed_pass_through_12", s2[b1[y, r1[x, z]], x] == b1[s2[y, r2[x, z]], z], (n, n, n))
        )
        # (y /2 R1(x, z)) *1 x = (y *1 R2(x, z)) /2 z
        mixed.append(
            _check("mixed_pass_through_21", s1[b2[y, r1[x, z]], x] == b2[s1[y, r2[x, z]], z], (n, n, n))
        )
    x, y = _grids(n, 2)
    # R1(x, y) *1 R2(x, y) = R2(y, x *2 y)
    mixed.append(_check("mixed_exchange_12", s1[r1[x, y], r2[x, y]] == r2[y, s2[x, y]], (n, n)))
    # R1(x, y) *2 R2(x, y) = R2(y, x *1 y)
    mixed.append(_check("mixed_exchange_21", s2[r1[x, y], r2[x, y]] == r2[y, s1[x, y]], (n, n)))
    mixed.append(_check("r2_label_symmetry", r2[y, s1[x, y]] == r2[y, s2[x, y]], (n, n)))
    return report + AxiomReport(tuple(mixed))
