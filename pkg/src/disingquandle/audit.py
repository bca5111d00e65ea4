"""Published coloring-count tables and the audit that compares against them.

Computed counts are authoritative; the printed tables are only compared.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

from .algebra import OrientedDisingquandle
from .catalog import CatalogEntry, catalog
from .coloring import count_colorings, count_colorings_exhaustive

__all__ = [
    "AuditReport",
    "AuditRow",
    "PRINTED_TABLES",
    "TABLE_STRUCTURES",
    "audit_table",
    "audit_tables",
    "counts_to_csv",
]


def _table(groups: dict) -> dict[str, object]:
    out: dict[str, object] = {}
    for value, links in groups.items():
        for link in links.split():
            out[f"{link}^2"] = value
    return out


PRINTED_TABLES: dict[int, dict[str, object]] = {
    1: _table({
        10: "4_1 5_1 5_2 6_1 6_2 6_3 6_5 6_6 6_7 6_8 6_9 6_11 6_12",
        14: "5_3",
        50: "3_1 6_4 6_10",
        75: "1_1",
    }),
    2: _table({
        0: "6_12",
        30: "3_1 4_1 5_1 5_2 6_2 6_3 6_4 6_5 6_6 6_7 6_8 6_9 6_10 6_11",
        49: "5_3",
        50: "1_1",
        150: "6_1",
    }),
    3: _table({
        (75, 50): "1_1",
        (14, 49): "5_3",
        (10, 150): "6_1",
        (50, 30): "3_1 6_4 6_10",
        (10, 30): "4_1 5_1 5_2 6_2 6_3 6_5 6_6 6_7 6_8 6_9 6_11",
        (10, 0): "6_12",
    }),
}

# Structures the printed tables were computed with.
TABLE_STRUCTURES: dict[int, tuple[str, ...]] = {1: ("z10_canonical",), 2: ("z30",), 3: ("z10_canonical", "z30")}


@dataclass(frozen=True)
class AuditRow:
    link: str
    computed: object
    printed: object

    @property
    def match(self) -> bool:
        return self.computed == self.printed


@dataclass(frozen=True)
class AuditReport:
    table: int
    structures: tuple[str, ...]
    rows: tuple[AuditRow, ...]

    @property
    def mismatches(self) -> list[AuditRow]:
        return [r for r in self.rows if not r.match]

    def row(self, link: str) -> AuditRow:
        for r in self.rows:
            if r.link == link:
                return r
        raise KeyError(link)

    def to_dict(self) -> dict:
        def enc(v):
            return list(v) if isinstance(v, tuple) else v

        return {
            "table": self.table,
            "structures": list(self.structures),
            "rows": [
                {"link": r.link, "computed": enc(r.computed), "printed": enc(r.printed), "match": r.match}
                for r in self.rows
            ],
            "mismatches": [
                {"link": r.link, "computed": enc(r.computed), "printed": enc(r.printed), "table": self.table}
                for r in self.mismatches
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["link", "structure", "computed", "printed", "match"])
        for r in self.rows:
            w.writerow([r.link, "+".join(self.structures), _fmt(r.computed), _fmt(r.printed), int(r.match)])
        return buf.getvalue()

    def format(self) -> str:
        lines = [f"table {self.table} ({', '.join(self.structures)})"]
        width = max(len(r.link) for r in self.rows)
        for r in self.rows:
            flag = "ok" if r.match else "MISMATCH"
            lines.append(f"{r.link:<{width}}  computed={_fmt(r.computed):<10} printed={_fmt(r.printed):<10} {flag}")
        lines.append(f"{len(self.mismatches)} mismatch(es) out of {len(self.rows)} rows")
        return "\n".join(lines)


def _fmt(v) -> str:
    if isinstance(v, tuple):
        return "(" + ",".join(str(x) for x in v) + ")"
    return str(v)


def audit_table(
    table: int,
    structures: list[OrientedDisingquandle],
    entries: list[CatalogEntry] | None = None,
    *,
    oracle: bool = False,
    threads: int = 1,
) -> AuditReport:
    """Compare computed counts against printed table 1, 2 or 3.

    Tables 1 and 2 take one structure; table 3 takes two and compares pairs.
    """
    if table not in PRINTED_TABLES:
        raise ValueError(f"unknown table {table}; expected 1, 2 or 3")
    expected = len(TABLE_STRUCTURES[table])
    if len(structures) != expected:
        raise ValueError(f"table {table} needs {expected} structure(s), got {len(structures)}")
    entries = catalog() if entries is None else entries
    printed = PRINTED_TABLES[table]

    def count(e, d):
        if oracle:
            return count_colorings_exhaustive(e.system, d).count
        return count_colorings(e.system, d, threads=threads).count

    rows = []
    for e in entries:
        values = tuple(count(e, d) for d in structures)
        computed = values if table == 3 else values[0]
        rows.append(AuditRow(e.name, computed, printed.get(e.name)))
    return AuditReport(table, tuple(d.name or f"n={d.n}" for d in structures), tuple(rows))


def audit_tables(structures_by_name: dict[str, OrientedDisingquandle], **kwargs) -> list[AuditReport]:
    """Audit all three tables with the structures they were printed for."""
    return [
        audit_table(t, [structures_by_name[s] for s in names], **kwargs)
        for t, names in TABLE_STRUCTURES.items()
    ]


def counts_to_csv(rows) -> str:
    """CSV ``link,structure,count`` from ``(link, structure, count)`` triples."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["link", "structure", "count"])
    for row in rows:
        w.writerow(row)
    return buf.getvalue()
