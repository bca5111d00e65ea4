"""Parametric constructions of oriented disingquandles.

The affine-quadratic family lives on Z_n with the Alexander quandle
``x * y = a x + (1 - a) y`` and a quadratic polynomial for ``R1``. ``R2`` is
always derived as ``R2(x, y) = R1(y, x * y)``, never read from a printed
closed form.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

import numpy as np

from .algebra import AxiomError, OrientedDisingquandle, validate_oriented_disingquandle

__all__ = [
    "AffineQuadraticParams",
    "BUILTIN_NAMES",
    "InternalConsistencyError",
    "ParameterError",
    "Z60_PRINTED_R2",
    "affine_quadratic_disingquandle",
    "builtin",
    "compare_r2_with_polynomial",
    "derived_r2_polynomial",
    "parse_params",
    "polynomial_table",
]


class ParameterError(ValueError):
    """Family parameters violate a construction precondition."""

    def __init__(self, condition: str, message: str):
        self.condition = condition
        super().__init__(message)


class InternalConsistencyError(RuntimeError):
    """A constructed structure failed validation although its parameters were accepted."""

    def __init__(self, report):
        self.report = report
        bad = report.first_failure()
        super().__init__(f"constructed structure fails validation: {bad.format() if bad else '?'}")


COEFFICIENTS = ("alpha", "beta", "gamma", "lambda", "mu", "delta")


@dataclass(frozen=True)
class AffineQuadraticParams:
    """``x*y = a x + (1-a) y`` and ``R1(x,y) = alpha + beta x + gamma y + lambda x^2 + mu y^2 + delta xy`` mod n."""

    n: int
    a: int
    alpha: int = 0
    beta: int = 0
    gamma: int = 0
    lam: int = 0
    mu: int = 0
    delta: int = 0

    def reduced(self) -> AffineQuadraticParams:
        n = self.n
        return AffineQuadraticParams(
            n, self.a % n, self.alpha % n, self.beta % n, self.gamma % n, self.lam % n, self.mu % n, self.delta % n
        )

    @property
    def coefficients(self) -> tuple[int, int, int, int, int, int]:
        return (self.alpha, self.beta, self.gamma, self.lam, self.mu, self.delta)

    def violations(self) -> list[str]:
        """Descriptions of the violated preconditions, in a fixed order."""
        n, a = self.n, self.a
        if n < 3:
            return ["n < 3"]
        bad = []
        if math.gcd(a, n) != 1:
            bad.append("gcd(a, n) != 1")
        if (a * a - 1) % n == 0:
            bad.append("a^2 ≡ 1")
        c = 1 - a
        checks = [
            ("(1-a)*alpha ≢ 0", c * self.alpha),
            ("(1-a)*(1-beta-gamma) ≢ 0", c * (1 - self.beta - self.gamma)),
            ("(1-a)*lambda ≢ 0", c * self.lam),
            ("(1-a)*mu ≢ 0", c * self.mu),
            ("(1-a)*delta ≢ 0", c * self.delta),
        ]
        bad.extend(name for name, value in checks if value % n)
        return bad

    def format(self) -> str:
        return (
            f"n={self.n} a={self.a} alpha={self.alpha} beta={self.beta} gamma={self.gamma} "
            f"lambda={self.lam} mu={self.mu} delta={self.delta}"
        )


_PARAM_RE = re.compile(r"^\s*([A-Za-z]+)\s*=\s*(-?\d+)\s*$")


def parse_params(text: str) -> AffineQuadraticParams:
    """Parse ``"n=10 a=3 alpha=0 beta=4 gamma=2 lambda=0 mu=0 delta=5"``.

    Omitted coefficients default to 0; ``n`` and ``a`` are required.
    """
    values: dict[str, int] = {}
    for token in text.replace(",", " ").split():
        m = _PARAM_RE.match(token)
        if not m:
            raise ParameterError("syntax", f"cannot parse parameter {token!r}; expected key=integer")
        key, value = m.group(1).lower(), int(m.group(2))
        if key not in ("n", "a") + COEFFICIENTS:
            raise ParameterError("syntax", f"unknown parameter {key!r}")
        if key in values:
            raise ParameterError("syntax", f"parameter {key!r} given twice")
        values[key] = value
    for key in ("n", "a"):
        if key not in values:
            raise ParameterError("syntax", f"missing required parameter {key!r}")
    if "lambda" in values:
        values["lam"] = values.pop("lambda")
    return AffineQuadraticParams(**values)


def polynomial_table(n: int, coeffs, x_map=None, y_map=None) -> np.ndarray:
    """Tabulate ``c0 + c1 X + c2 Y + c3 X^2 + c4 Y^2 + c5 XY`` mod n on all pairs.

    ``X``/``Y`` default to the row/column index; pass arrays to substitute.
    """
    r = np.arange(n, dtype=np.int64)
    X = r[:, None] if x_map is None else np.asarray(x_map, dtype=np.int64)
    Y = r[None, :] if y_map is None else np.asarray(y_map, dtype=np.int64)
    c0, c1, c2, c3, c4, c5 = (int(c) % n for c in coeffs)
    out = (c0 + c1 * X + c2 * Y + c3 * X * X + c4 * Y * Y + c5 * X * Y) % n
    return np.broadcast_to(out, (n, n)).astype(np.int64)


def derived_r2_polynomial(p: AffineQuadraticParams) -> tuple[int, ...]:
    """Coefficients of ``R1(y, a x + (1-a) y)`` in the same monomial basis.

    Substituting ``X = y``, ``Y = a x + b y`` with ``b = 1 - a``::

        alpha + beta y + gamma (a x + b y) + lambda y^2
              + mu (a x + b y)^2 + delta y (a x + b y)
    """
    n, a = p.n, p.a
    b = 1 - a
    al, be, ga, la, mu, de = p.coefficients
    const = al
    cx = ga * a
    cy = be + ga * b
    cxx = mu * a * a
    cyy = la + mu * b * b + de * b
    cxy = 2 * mu * a * b + de * a
    return tuple(c % n for c in (const, cx, cy, cxx, cyy, cxy))


def affine_quadratic_disingquandle(
    p: AffineQuadraticParams, *, force: bool = False, name: str | None = None
) -> OrientedDisingquandle:
    """Build ``(Z_n, *, *, R1, R2)`` with ``*1 = *2`` from the affine-quadratic family.

    Raises ParameterError naming the first violated precondition unless
    `force` is set, in which case the preconditions are skipped and only
    validation decides. Raises InternalConsistencyError if accepted
    parameters give a structure that fails validation, and AxiomError if a
    forced structure fails.
    """
    if p.n < 1:
        raise ParameterError("n < 3", "modulus must be positive")
    bad = p.violations()
    if bad and not force:
        raise ParameterError(bad[0], f"rejected parameters: {bad[0]} (mod {p.n})")
    n, a = p.n, p.a % p.n
    r = np.arange(n, dtype=np.int64)
    star = (a * r[:, None] + (1 - a) * r[None, :]) % n
    r1 = polynomial_table(n, p.coefficients)
    r2 = r1[r[None, :], star]  # R2(x, y) = R1(y, x*y)
    d = OrientedDisingquandle(star, star, r1, r2, name=name)

    if math.gcd(a, n) == 1:
        a_inv = pow(a, -1, n)
        expected_bar = (a_inv * r[:, None] + (1 - a_inv) * r[None, :]) % n
        if not np.array_equal(d.star1_bar, expected_bar):  # pragma: no cover - arithmetic identity
            raise AssertionError("column inverse disagrees with a^-1 x + (1 - a^-1) y")

    report = validate_oriented_disingquandle(d)
    if not report.passed:
        if force:
            raise AxiomError(report)
        raise InternalConsistencyError(report)
    return d


_BUILTINS: dict[str, AffineQuadraticParams] = {
    "z10_canonical": AffineQuadraticParams(10, 3, 0, 4, 2, 0, 0, 5),
    "z10_uno": AffineQuadraticParams(10, 3, 5, 1, 5, 5, 5, 5),
    "z30": AffineQuadraticParams(30, 13, 5, -9, 5, 10, 15, 20).reduced(),
    "z60": AffineQuadraticParams(60, 7, 10, 6, 5, 10, 20, 30),
}
BUILTIN_NAMES = tuple(_BUILTINS)

# R2 for the Z_60 example as printed: 10 + 35x - 24y + 20x^2 + 10y^2 (no xy term).
Z60_PRINTED_R2 = (10, 35, -24, 20, 10, 0)


def builtin(name: str) -> OrientedDisingquandle:
    """One of ``z10_canonical``, ``z10_uno``, ``z30``, ``z60``."""
    try:
        params = _BUILTINS[name]
    except KeyError:
        raise KeyError(f"unknown builtin structure {name!r}; choose from {', '.join(BUILTIN_NAMES)}") from None
    return affine_quadratic_disingquandle(params, name=name)


def builtin_params(name: str) -> AffineQuadraticParams:
    return _BUILTINS[name]


@dataclass(frozen=True)
class R2Comparison:
    derived: np.ndarray
    printed: np.ndarray
    mismatches: tuple[tuple[int, int], ...]

    @property
    def matches(self) -> bool:
        return not self.mismatches


def compare_r2_with_polynomial(d: OrientedDisingquandle, coeffs) -> R2Comparison:
    """Compare the derived ``R2`` table of `d` with a printed polynomial."""
    printed = polynomial_table(d.n, coeffs)
    diff = np.argwhere(d.r2 != printed)
    return R2Comparison(d.r2, printed, tuple((int(x), int(y)) for x, y in diff))
