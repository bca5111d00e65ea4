"""Command-line interface.

Exit statuses: 0 success, 1 structural or parse error, 2 axiom failure,
3 parameter rejection, 4 mismatch under ``audit --strict``.
"""

from __future__ import annotations

import json
import re
import sys
from pathlib import Path

import click

from ._validation import StructureError
from .algebra import AxiomError, OrientedDisingquandle, validate_oriented_disingquandle
from .audit import TABLE_STRUCTURES, audit_table, counts_to_csv
from .catalog import LINK_NAMES, get_link
from .coloring import (
    DEFAULT_MATERIALIZATION_CEILING,
    DEFAULT_ORACLE_CEILING,
    CeilingExceeded,
    count_colorings,
    count_colorings_exhaustive,
    enumerate_colorings,
)
from .enumeration import enumerate_disingquandles
from .families import (
    BUILTIN_NAMES,
    ParameterError,
    affine_quadratic_disingquandle,
    builtin,
    derived_r2_polynomial,
    parse_params,
)
from .links import DslSyntaxError, RelationSystem, parse_diagram, parse_relation_dsl, relations_from_diagram
from .morphisms import closure, find_isomorphism
from .presentation import format_presentation, parse_presentation

EXIT_OK, EXIT_STRUCTURAL, EXIT_AXIOM, EXIT_PARAMETER, EXIT_MISMATCH = 0, 1, 2, 3, 4

FORMATS = click.Choice(["text", "csv", "json"])


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _load_structure(spec: str, validate: bool = True) -> OrientedDisingquandle:
    if spec in BUILTIN_NAMES:
        return builtin(spec)
    path = Path(spec)
    if not path.exists():
        raise click.BadParameter(f"{spec!r} is neither a builtin ({', '.join(BUILTIN_NAMES)}) nor a file")
    return parse_presentation(path.read_text(), validate=validate, name=path.stem)


def _resolve_structure(builtin_name: str | None, structure_path: str | None) -> OrientedDisingquandle:
    if builtin_name and structure_path:
        raise click.UsageError("give either --builtin or --structure, not both")
    if builtin_name:
        return _load_structure(builtin_name)
    if structure_path:
        return _load_structure(structure_path)
    raise click.UsageError("a structure is required (--builtin NAME or --structure PATH)")


_DIAGRAM_LINE = re.compile(r"^\s*(pos|neg|sing)\s*\(|^\s*component\s")


def _load_system(spec: str) -> RelationSystem:
    if spec in LINK_NAMES or f"{spec}^2" in LINK_NAMES:
        return get_link(spec).system
    path = Path(spec)
    if not path.exists():
        raise click.BadParameter(f"{spec!r} is neither a catalog link nor a file")
    text = path.read_text()
    if any(_DIAGRAM_LINE.match(line) for line in text.splitlines()):
        return relations_from_diagram(parse_diagram(text), name=path.stem)
    return parse_relation_dsl(text, name=path.stem)


@click.group()
def cli():
    """Oriented disingquandles: axiom checks, constructions and coloring invariants."""


@cli.command()
@click.argument("path")
@click.option("--format", "fmt", type=FORMATS, default="text")
def verify(path, fmt):
    """Check every axiom for a presentation-matrix file (or builtin name)."""
    d = _load_structure(path, validate=False)
    report = validate_oriented_disingquandle(d)
    if fmt == "json":
        click.echo(_dump_json(report.to_dict()))
    elif fmt == "csv":
        click.echo("axiom,passed,counterexample")
        for r in report:
            ce = " ".join(map(str, r.counterexample)) if r.counterexample is not None else ""
            click.echo(f"{r.axiom},{int(r.passed)},{ce}")
    else:
        click.echo(report.format())
        click.echo("PASS" if report.passed else f"FAIL: {report.first_failure().axiom}")
    sys.exit(EXIT_OK if report.passed else EXIT_AXIOM)


@cli.command()
@click.argument("name", type=click.Choice(BUILTIN_NAMES))
@click.option("-o", "--output", type=click.Path(dir_okay=False), default=None)
def export(name, output):
    """Write the presentation matrix of a builtin structure."""
    text = format_presentation(builtin(name))
    if output:
        Path(output).write_text(text)
    else:
        click.echo(text, nl=False)


@cli.command()
@click.argument("params", nargs=-1, required=True)
@click.option("-o", "--output", type=click.Path(dir_okay=False), default=None)
def build(params, output):
    """Build an affine-quadratic structure, e.g. ``n=10 a=3 beta=4 gamma=2 delta=5``."""
    p = parse_params(" ".join(params))
    d = affine_quadratic_disingquandle(p)
    coeffs = derived_r2_polynomial(p)
    names = ("1", "x", "y", "x^2", "y^2", "xy")
    poly = " + ".join(f"{c}{'' if m == '1' else m}" for c, m in zip(coeffs, names) if c)
    click.echo(f"# R2(x,y) = {poly or '0'} mod {p.n}", err=True)
    text = format_presentation(d)
    if output:
        Path(output).write_text(text)
    else:
        click.echo(text, nl=False)


@cli.command()
@click.argument("link")
@click.option("--builtin", "builtin_name", type=click.Choice(BUILTIN_NAMES), default=None)
@click.option("--structure", "structure_path", default=None, help="presentation-matrix file")
@click.option("--oracle", is_flag=True, help="exhaustive enumeration instead of the solver")
@click.option("--enumerate", "enumerate_", is_flag=True, help="print every coloring")
@click.option("--threads", type=click.IntRange(min=1), default=1)
@click.option("--ceiling", type=click.IntRange(min=1), default=None)
@click.option("--format", "fmt", type=FORMATS, default="text")
def count(link, builtin_name, structure_path, oracle, enumerate_, threads, ceiling, fmt):
    """Count colorings of a catalog link or relation/diagram file."""
    system = _load_system(link)
    d = _resolve_structure(builtin_name, structure_path)
    sid = d.name or "structure"
    if enumerate_:
        if oracle:
            result = count_colorings_exhaustive(system, d, ceiling=ceiling or DEFAULT_ORACLE_CEILING, materialize=True)
        else:
            result = enumerate_colorings(system, d, ceiling=ceiling or DEFAULT_MATERIALIZATION_CEILING, threads=threads)
    elif oracle:
        result = count_colorings_exhaustive(system, d, ceiling=ceiling or DEFAULT_ORACLE_CEILING)
    else:
        result = count_colorings(system, d, threads=threads)
    name = system.name or link
    if fmt == "json":
        obj = {"link": name, "structure": sid, "count": result.count, "variables": list(system.variables)}
        if result.colorings is not None:
            obj["colorings"] = [list(c) for c in result.colorings]
        click.echo(_dump_json(obj))
    elif fmt == "csv":
        click.echo(counts_to_csv([(name, sid, result.count)]), nl=False)
        if result.colorings is not None:
            click.echo(",".join(system.variables))
            for c in result.colorings:
                click.echo(",".join(map(str, c)))
    else:
        click.echo(result.count)
        if result.colorings is not None:
            click.echo(" ".join(system.variables))
            for c in result.colorings:
                click.echo(" ".join(map(str, c)))


@cli.command()
@click.argument("table", type=click.IntRange(1, 3))
@click.option("--builtin", "builtin_name", type=click.Choice(BUILTIN_NAMES), default=None)
@click.option("--builtins", "builtin_list", default=None, help="comma-separated builtin names (table 3)")
@click.option("--oracle", is_flag=True)
@click.option("--strict", is_flag=True, help="exit 4 if any row mismatches")
@click.option("--threads", type=click.IntRange(min=1), default=1)
@click.option("--format", "fmt", type=FORMATS, default="text")
def audit(table, builtin_name, builtin_list, oracle, strict, threads, fmt):
    """Compare computed counts with printed table 1, 2 or 3."""
    if builtin_name and builtin_list:
        raise click.UsageError("give either --builtin or --builtins")
    if builtin_list:
        names = [s.strip() for s in builtin_list.split(",") if s.strip()]
    elif builtin_name:
        names = [builtin_name]
    else:
        names = list(TABLE_STRUCTURES[table])
    for nm in names:
        if nm not in BUILTIN_NAMES:
            raise click.BadParameter(f"unknown builtin {nm!r}")
    try:
        report = audit_table(table, [builtin(nm) for nm in names], oracle=oracle, threads=threads)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from None
    if fmt == "json":
        click.echo(report.to_json())
    elif fmt == "csv":
        click.echo(report.to_csv(), nl=False)
    else:
        click.echo(report.format())
    sys.exit(EXIT_MISMATCH if strict and report.mismatches else EXIT_OK)


@cli.command(name="enumerate")
@click.argument("n", type=click.IntRange(min=1))
@click.option("--budget", type=click.IntRange(min=1), default=None, help="search-node limit")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
def enumerate_cmd(n, budget, fmt):
    """Stream every oriented disingquandle of order N as presentation matrices."""
    run = enumerate_disingquandles(n, budget)
    if fmt == "json":
        items = [[d.star1.tolist(), d.star2.tolist(), d.r1.tolist(), d.r2.tolist()] for d in run]
        click.echo(_dump_json({"n": n, "count": len(items), "truncated": run.truncated, "structures": items}))
        return
    total = 0
    for d in run:
        if total:
            click.echo()
        click.echo(format_presentation(d), nl=False)
        total += 1
    click.echo(f"# {total} structure(s){' (truncated)' if run.truncated else ''}", err=True)


@cli.command(name="closure")
@click.argument("structure")
@click.option("--seed", required=True, help="comma-separated elements, e.g. 0,3")
def closure_cmd(structure, seed):
    """Smallest sub-disingquandle containing SEED."""
    d = _load_structure(structure)
    try:
        elems = [int(s) for s in seed.split(",") if s.strip()]
    except ValueError:
        raise click.BadParameter("seed must be comma-separated integers") from None
    result = closure(d, elems)
    click.echo("{" + ",".join(str(v) for v in sorted(result)) + "}")


@cli.command(name="iso")
@click.argument("first")
@click.argument("second")
def iso_cmd(first, second):
    """Find an isomorphism FIRST -> SECOND; prints the image list or 'none'."""
    f = find_isomorphism(_load_structure(first), _load_structure(second))
    click.echo("none" if f is None else " ".join(str(int(v)) for v in f))


def main(argv=None) -> int:
    try:
        cli.main(args=argv, prog_name="disingquandle", standalone_mode=False)
    except SystemExit as exc:
        return int(exc.code or 0)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.Abort:
        click.echo("aborted", err=True)
        return EXIT_STRUCTURAL
    except click.ClickException as exc:
        exc.show()
        return EXIT_STRUCTURAL
    except ParameterError as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_PARAMETER
    except AxiomError as exc:
        click.echo(f"axiom failure: {exc}", err=True)
        click.echo(exc.report.format(), err=True)
        return EXIT_AXIOM
    except (StructureError, DslSyntaxError, CeilingExceeded, ValueError, KeyError, OSError) as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_STRUCTURAL
    return EXIT_OK


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
