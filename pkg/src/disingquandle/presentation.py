"""Presentation matrices ``[M1 | M2 | M3 | M4]`` and their text file format.

File layout::

    n=<int>
    <M1 rows>

    <M2 rows>

    <M3 rows>

    <M4 rows>

Rows are space-separated zero-indexed entries, one row per line.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from ._validation import StructureError, check_table
from .algebra import AxiomError, OrientedDisingquandle, validate_oriented_disingquandle

__all__ = [
    "format_blocks",
    "format_presentation",
    "from_presentation_matrix",
    "parse_blocks",
    "parse_presentation",
    "read_presentation",
    "to_presentation_matrix",
    "write_presentation",
]


def to_presentation_matrix(d: OrientedDisingquandle) -> np.ndarray:
    """The ``(n, 4n)`` block matrix of ``*1``, ``*2``, ``R1``, ``R2``."""
    return np.hstack([d.star1, d.star2, d.r1, d.r2])


def from_presentation_matrix(blocks, *, validate: bool = True, name: str | None = None) -> OrientedDisingquandle:
    """Inverse of :func:`to_presentation_matrix`.

    `blocks` is either an ``(n, 4n)`` array or a sequence of four ``(n, n)``
    tables. Raises StructureError for malformed input and AxiomError (with the
    report attached) when validation fails.
    """
    if isinstance(blocks, np.ndarray) and blocks.ndim == 2:
        rows, cols = blocks.shape
        if cols != 4 * rows:
            raise StructureError(f"presentation matrix must be n x 4n, got {rows}x{cols}")
        parts = np.hsplit(blocks, 4)
    else:
        parts = list(blocks)
        if len(parts) != 4:
            raise StructureError(f"expected 4 blocks, got {len(parts)}")
    m1 = check_table(parts[0], name="M1")
    n = m1.shape[0]
    m2, m3, m4 = (check_table(p, n, name=f"M{k}") for k, p in zip((2, 3, 4), parts[1:]))
    d = OrientedDisingquandle(m1, m2, m3, m4, name=name)
    if validate:
        report = validate_oriented_disingquandle(d)
        if not report.passed:
            raise AxiomError(report)
    return d


def format_blocks(blocks, header: str) -> str:
    """Header line, then each table as rows separated by blank lines."""
    chunks = ["\n".join(" ".join(str(int(v)) for v in row) for row in b) for b in blocks]
    return header + "\n" + "\n\n".join(chunks) + "\n"


def format_presentation(d: OrientedDisingquandle) -> str:
    return format_blocks((d.star1, d.star2, d.r1, d.r2), f"n={d.n}")


def parse_blocks(text: str) -> tuple[int, list[list[list[int]]]]:
    """Parse ``n=<int>`` followed by blank-line separated integer blocks."""
    lines = text.splitlines()
    while lines and not lines[0].strip():
        lines.pop(0)
    if not lines:
        raise StructureError("empty input")
    head = lines[0].replace(" ", "")
    if not head.startswith("n="):
        raise StructureError(f"first line must be 'n=<int>', got {lines[0]!r}")
    try:
        n = int(head[2:])
    except ValueError:
        raise StructureError(f"first line must be 'n=<int>', got {lines[0]!r}") from None
    if n < 1:
        raise StructureError("n must be positive")
    blocks: list[list[list[int]]] = []
    current: list[list[int]] = []
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            if current:
                blocks.append(current)
                current = []
            continue
        try:
            current.append([int(tok) for tok in line.split()])
        except ValueError:
            raise StructureError(f"line {lineno}: non-integer entry") from None
    if current:
        blocks.append(current)
    for k, block in enumerate(blocks, start=1):
        if len(block) != n or any(len(row) != n for row in block):
            raise StructureError(f"block {k} is not {n}x{n}")
    return n, blocks


def parse_presentation(text: str, *, validate: bool = True, name: str | None = None) -> OrientedDisingquandle:
    _, blocks = parse_blocks(text)
    if len(blocks) != 4:
        raise StructureError(f"expected 4 blocks, found {len(blocks)}")
    return from_presentation_matrix(blocks, validate=validate, name=name)


def read_presentation(path, *, validate: bool = True) -> OrientedDisingquandle:
    path = Path(path)
    return parse_presentation(path.read_text(), validate=validate, name=path.stem)


def write_presentation(d: OrientedDisingquandle, path) -> None:
    Path(path).write_text(format_presentation(d))
