"""Random parameter tuples for the affine-quadratic family."""

from __future__ import annotations

import math

from disingquandle import AffineQuadraticParams

CONDITIONS = ("gcd", "a2", "alpha", "beta_gamma", "lambda", "mu", "delta")


def _units(n: int) -> list[int]:
    return [a for a in range(n) if math.gcd(a, n) == 1 and (a * a - 1) % n]


def _step(n: int, a: int) -> int:
    # c*(1-a) = 0 mod n exactly when c is a multiple of this step
    return n // math.gcd((1 - a) % n, n)


def _admissible_coeffs(rng, n: int, a: int) -> dict:
    step = _step(n, a)
    m = n // step

    def mult():
        return step * int(rng.integers(m))

    beta = int(rng.integers(n))
    return dict(alpha=mult(), beta=beta, gamma=(1 - beta + mult()) % n, lam=mult(), mu=mult(), delta=mult())


def valid_params(rng, lo: int = 6, hi: int = 40) -> AffineQuadraticParams:
    while True:
        n = int(rng.integers(lo, hi + 1))
        units = _units(n)
        if units:
            break
    a = int(rng.choice(units))
    return AffineQuadraticParams(n=n, a=a, **_admissible_coeffs(rng, n, a))


def violating_params(rng, which: str, lo: int = 6, hi: int = 40) -> AffineQuadraticParams:
    """A tuple breaking exactly the named condition and no other."""
    while True:
        n = int(rng.integers(lo, hi + 1))
        if which == "gcd":
            pool = [a for a in range(2, n) if math.gcd(a, n) > 1]
        elif which == "a2":
            pool = [a for a in range(n) if (a * a - 1) % n == 0]
        else:
            pool = _units(n)
        if pool:
            break
    a = int(rng.choice(pool))
    coeffs = _admissible_coeffs(rng, n, a)
    if which in ("gcd", "a2"):
        return AffineQuadraticParams(n=n, a=a, **coeffs)
    step = _step(n, a)
    # step > 1 because a != 1, so adding 1 leaves the multiples of step
    key = {"alpha": "alpha", "beta_gamma": "gamma", "lambda": "lam", "mu": "mu", "delta": "delta"}[which]
    coeffs[key] = (coeffs[key] + 1 + step * int(rng.integers(n // step))) % n
    assert step > 1
    return AffineQuadraticParams(n=n, a=a, **coeffs)


CONDITION_LABEL = {
    "gcd": "gcd(a, n) != 1",
    "a2": "a^2 ≡ 1",
    "alpha": "(1-a)*alpha ≢ 0",
    "beta_gamma": "(1-a)*(1-beta-gamma) ≢ 0",
    "lambda": "(1-a)*lambda ≢ 0",
    "mu": "(1-a)*mu ≢ 0",
    "delta": "(1-a)*delta ≢ 0",
}
