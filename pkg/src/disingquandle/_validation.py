"""Input validation helpers shared by the table-based structures."""

from __future__ import annotations

from typing import Iterable

import numpy as np


class StructureError(ValueError):
    """A table or mapping is malformed (wrong shape, out-of-range entry, size mismatch)."""


def check_table(table, n: int | None = None, name: str = "table") -> np.ndarray:
    """Return `table` as a read-only square int64 array with entries in [0, n).

    `n` defaults to the side length of the table.
    """
    try:
        arr = np.asarray(table)
    except ValueError as exc:  # ragged nested lists
        raise StructureError(f"{name}: not a rectangular array ({exc})") from None
    if arr.dtype == object:
        raise StructureError(f"{name}: not a rectangular integer array")
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise StructureError(f"{name}: expected a square 2-d table, got shape {arr.shape}")
    if arr.shape[0] == 0:
        raise StructureError(f"{name}: carrier must have at least one element")
    if n is not None and arr.shape[0] != n:
        raise StructureError(f"{name}: expected a {n}x{n} table, got {arr.shape[0]}x{arr.shape[1]}")
    if arr.dtype.kind == "f":
        if not np.all(np.isfinite(arr)) or not np.all(arr == np.round(arr)):
            raise StructureError(f"{name}: entries must be integers")
    elif arr.dtype.kind not in "iub":
        raise StructureError(f"{name}: entries must be integers, got dtype {arr.dtype}")
    size = arr.shape[0]
    out = arr.astype(np.int64)
    bad = np.argwhere((out < 0) | (out >= size))
    if bad.size:
        i, j = (int(v) for v in bad[0])
        raise StructureError(f"{name}: entry ({i},{j}) = {out[i, j]} outside [0, {size})")
    out.setflags(write=False)
    return out


def check_mapping(mapping, n_source: int, n_target: int) -> np.ndarray:
    """Validate a map {0..n_source-1} -> {0..n_target-1} given as a sequence of images."""
    arr = np.asarray(mapping)
    if arr.ndim != 1 or arr.shape[0] != n_source:
        raise StructureError(f"mapping must have length {n_source}, got shape {arr.shape}")
    if arr.size and arr.dtype.kind not in "iu":
        raise StructureError("mapping entries must be integers")
    arr = arr.astype(np.int64)
    if np.any((arr < 0) | (arr >= n_target)):
        raise StructureError(f"mapping values must lie in [0, {n_target})")
    arr.setflags(write=False)
    return arr


def check_subset(subset: Iterable[int], n: int) -> frozenset[int]:
    """Validate a non-empty subset of the carrier {0..n-1}."""
    items = frozenset(int(v) for v in subset)
    if not items:
        raise StructureError("subset must be non-empty")
    out = [v for v in items if not 0 <= v < n]
    if out:
        raise StructureError(f"elements {sorted(out)} outside carrier [0, {n})")
    return items
