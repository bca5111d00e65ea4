"""Homomorphisms, isomorphism search and sub-structure closure."""

from __future__ import annotations

from collections import Counter

import numpy as np

from ._validation import StructureError, check_mapping, check_subset
from .algebra import OrientedDisingquandle

__all__ = ["closure", "find_isomorphism", "is_homomorphism", "is_subdisingquandle"]

_PRESERVED = ("star1", "star2", "r1", "r2")


def is_homomorphism(src: OrientedDisingquandle, dst: OrientedDisingquandle, f) -> bool:
    """True iff `f` preserves ``*1``, ``*2``, ``R1`` and ``R2`` on every pair.

    ``R2`` is compared with ``R2`` of the target (not ``R1``), so the identity
    map is always a homomorphism.
    """
    f = check_mapping(f, src.n, dst.n)
    fx, fy = f[:, None], f[None, :]
    for attr in _PRESERVED:
        s, t = getattr(src, attr), getattr(dst, attr)
        if not np.array_equal(f[s], t[fx, fy]):
            return False
    return True


def _element_profiles(d: OrientedDisingquandle) -> list[tuple]:
    """Relabeling-invariant fingerprint of each element."""
    n = d.n
    r = np.arange(n)
    profiles = []
    for x in range(n):
        prof = [int(d.r1[x, x] == x), int(d.r2[x, x] == x)]
        for t in (d.star1, d.star2):
            prof.append(int(np.sum(t[x, :] == x)))  # y with x*y = x
            prof.append(int(np.sum(t[:, x] == r)))  # fixed points of y -> y*x
            prof.append(_cycle_type(t[:, x]))
        for t in (d.r1, d.r2):
            prof.append(int(np.sum(t[x, :] == x)))
            prof.append(int(np.sum(t[:, x] == x)))
        profiles.append(tuple(prof))
    return profiles


def _cycle_type(perm: np.ndarray) -> tuple[int, ...]:
    n = len(perm)
    seen = [False] * n
    lengths = []
    for start in range(n):
        if seen[start]:
            continue
        k, cur = 0, start
        while not seen[cur]:
            seen[cur] = True
            cur = int(perm[cur])
            k += 1
        lengths.append(k)
    return tuple(sorted(lengths))


def find_isomorphism(a: OrientedDisingquandle, b: OrientedDisingquandle) -> np.ndarray | None:
    """Return a bijective homomorphism ``a -> b`` as an image array, or None.

    Backtracking over source elements in order, trying the smallest admissible
    image first. Candidates must share the element profile; each assignment
    forces the images of ``op(x, y)`` for already-mapped pairs, which are
    propagated before branching again.
    """
    if a.n != b.n:
        return None
    n = a.n
    pa, pb = _element_profiles(a), _element_profiles(b)
    if Counter(pa) != Counter(pb):
        return None
    candidates = [[u for u in range(n) if pb[u] == pa[x]] for x in range(n)]
    src_tabs = [getattr(a, t) for t in _PRESERVED]
    dst_tabs = [getattr(b, t) for t in _PRESERVED]

    def propagate(f: list[int], used: list[bool], x: int, u: int) -> list[int] | None:
        """Assign x -> u and everything it forces. Returns the trail, or None on conflict."""
        trail: list[int] = []
        queue = [(x, u)]
        while queue:
            s, t = queue.pop()
            if f[s] != -1:
                if f[s] != t:
                    return _undo(f, used, trail)
                continue
            if used[t] or pa[s] != pb[t]:
                return _undo(f, used, trail)
            f[s] = t
            used[t] = True
            trail.append(s)
            mapped = [v for v in range(n) if f[v] != -1]
            for v in mapped:
                for sa, ta in zip(src_tabs, dst_tabs):
                    for p, q in ((s, v), (v, s)):
                        queue.append((int(sa[p, q]), int(ta[f[p], f[q]])))
        return trail

    def _undo(f, used, trail):
        for s in trail:
            used[f[s]] = False
            f[s] = -1
        return None

    f = [-1] * n
    used = [False] * n

    def search() -> bool:
        try:
            x = f.index(-1)
        except ValueError:
            return True
        for u in candidates[x]:
            if used[u]:
                continue
            trail = propagate(f, used, x, u)
            if trail is None:
                continue
            if search():
                return True
            _undo(f, used, trail)
        return False

    if not search():
        return None
    result = np.array(f, dtype=np.int64)
    if not is_homomorphism(a, b, result):  # pragma: no cover - propagation guarantees this
        raise AssertionError("isomorphism search produced a non-homomorphism")
    return result


def closure(d: OrientedDisingquandle, seed) -> frozenset[int]:
    """Smallest superset of `seed` closed under ``*1 *2 /1 /2 R1 R2``."""
    current = set(check_subset(seed, d.n))
    tables = [d.star1, d.star2, d.star1_bar, d.star2_bar, d.r1, d.r2]
    while True:
        idx = np.fromiter(sorted(current), dtype=np.int64)
        grid = np.ix_(idx, idx)
        new = set()
        for t in tables:
            new.update(np.unique(t[grid]).tolist())
        if new <= current:
            return frozenset(current)
        current |= new


def is_subdisingquandle(d: OrientedDisingquandle, subset) -> bool:
    """True iff the non-empty `subset` is closed under all six operations."""
    s = check_subset(subset, d.n)
    idx = np.fromiter(sorted(s), dtype=np.int64)
    grid = np.ix_(idx, idx)
    allowed = np.zeros(d.n, dtype=bool)
    allowed[idx] = True
    for t in (d.star1, d.star2, d.star1_bar, d.star2_bar, d.r1, d.r2):
        if not allowed[t[grid]].all():
            return False
    return True


def inverse_mapping(f) -> np.ndarray:
    f = np.asarray(f, dtype=np.int64)
    if sorted(f.tolist()) != list(range(len(f))):
        raise StructureError("mapping is not a bijection")
    return np.argsort(f)
