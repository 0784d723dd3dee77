"""Command-line interface: ``planar-cayley <command> ...``.

Exit codes: 0 when every check passes, 1 when any check fails, 2 on usage
or parse errors.  Output is deterministic for identical arguments.
"""

from __future__ import annotations

import sys
from pathlib import Path

import click

from .analysis import report_lines, verify_graph
from .builder import BudgetExceeded, build_entry, build_presentation
from .catalog import (
    UnknownEntryError,
    all_entries,
    classify,
    coincidences,
    expected_report,
    get_entry,
    instantiate_entry,
    parse_params,
    rows,
    validate_params,
)
from .export import FORMATS, dumps_json, export
from .patterns import PatternError, enumerate_noncrossing, is_regular
from .presentation import PresentationError, parse_presentation

USAGE = 2


class UsageFailure(click.ClickException):
    exit_code = USAGE


def _message(exc: Exception) -> str:
    return str(exc.args[0]) if isinstance(exc, KeyError) and exc.args else str(exc)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        click.echo(text, nl=False)


def _resolve(entry, params, pattern, presentation):
    """``(entry, params, presentation)`` from exactly one input source."""
    if (entry is None) == (presentation is None):
        raise UsageFailure("give exactly one of --entry or --presentation")
    try:
        if presentation is not None:
            if params or pattern:
                raise UsageFailure("--params and --pattern need --entry")
            return None, None, parse_presentation(presentation)
        e = get_entry(entry)
        p = parse_params(params)
        if pattern is not None:
            p["P"] = pattern
        if not p:
            p = e.param_set("minimal")
        p = validate_params(e, p)
        return e, p, instantiate_entry(e, p)
    except (PresentationError, PatternError, UnknownEntryError, ValueError) as exc:
        raise UsageFailure(_message(exc)) from exc


def _build(e, params, pres, radius, budget):
    try:
        if e is not None:
            return build_entry(e, params, radius, budget)
        return build_presentation(pres, radius, budget)
    except BudgetExceeded as exc:
        raise UsageFailure(f"coset budget exhausted: {exc}") from exc


input_options = [
    click.option("--entry", help="Catalogue row name or id."),
    click.option("--params", help="Row parameters as k=v,..."),
    click.option("--pattern", help="Pattern parameter P, e.g. '(dcbcdcbcbc)^2'."),
    click.option("--presentation", help="Presentation text, e.g. '<a,b | b^2, a^3, (ab)^2>'."),
    click.option("--radius", type=click.IntRange(min=1), default=6, show_default=True),
    click.option("--budget", type=click.IntRange(min=1), default=2_000_000, show_default=True),
]


def with_inputs(f):
    for opt in reversed(input_options):
        f = opt(f)
    return f


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
def main() -> None:
    """Planar cubic Cayley graphs: build, verify and classify."""


@main.command()
@with_inputs
@click.option("--format", "fmt", type=click.Choice(FORMATS), default="json", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), help="Output file (default: stdout).")
def build(entry, params, pattern, presentation, radius, budget, fmt, out):
    """Build a Cayley graph or ball and write it out."""
    e, p, pres = _resolve(entry, params, pattern, presentation)
    built = _build(e, p, pres, radius, budget)
    _emit(export(built.graph, fmt), out)


@main.command()
@with_inputs
@click.option("--max-len", type=click.IntRange(min=3), help="Longest dividing cycle to search for.")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), help="Write the JSON report here.")
def verify(entry, params, pattern, presentation, radius, budget, max_len, fmt, out):
    """Run every applicable check and compare with the catalogue."""
    e, p, pres = _resolve(entry, params, pattern, presentation)
    built = _build(e, p, pres, radius, budget)
    rep = verify_graph(built.graph, pres, e, p, dividing_max_len=max_len)
    if out:
        Path(out).write_text(rep.dumps() + "\n", encoding="utf-8")
    if fmt == "json":
        if not out:
            click.echo(rep.dumps())
    else:
        label = e.name if e is not None else "presentation"
        click.echo(f"{label}: {len(built.graph)} vertices, radius {built.radius if built.radius is not None else 'complete'}")
        for line in report_lines(rep):
            click.echo(line)
    sys.exit(0 if rep.passed else 1)


@main.command(name="classify")
@click.argument("presentation")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True)
def classify_cmd(presentation, fmt):
    """Name the catalogue row of a presentation."""
    try:
        pres = parse_presentation(presentation)
    except PresentationError as exc:
        raise UsageFailure(str(exc)) from exc
    c = classify(pres)
    click.echo(dumps_json(c.to_json()) if fmt == "json" else c.text(), nl=fmt != "json")
    sys.exit(0 if c.known else 1)


@main.command(name="enumerate-patterns")
@click.option("--max-len", type=click.IntRange(min=1), default=12, show_default=True)
@click.option("--regular-only", is_flag=True)
@click.option("--non-regular-only", is_flag=True)
def enumerate_patterns(max_len, regular_only, non_regular_only):
    """List non-crossing patterns up to rotation and inversion."""
    if regular_only and non_regular_only:
        raise UsageFailure("--regular-only and --non-regular-only are exclusive")
    want = True if regular_only else False if non_regular_only else None
    for w in enumerate_noncrossing(max_len, regular=want):
        click.echo(f"{w}\t{'regular' if is_regular(w) else 'non-regular'}")


@main.group()
def catalog() -> None:
    """Inspect the catalogue of rows."""


@catalog.command(name="list")
@click.option("--all", "show_all", is_flag=True, help="Include degenerate records.")
def catalog_list(show_all):
    for e in all_entries() if show_all else rows():
        click.echo(f"{e.id if e.id is not None else '-':>3}  {e.name:9} kappa={e.kappa if e.kappa is not None else '-'}  {e.ends or '-'}")


@catalog.command(name="show")
@click.argument("entry")
@click.option("--params", help="Parameters for the expected report (default: minimal).")
def catalog_show(entry, params):
    try:
        e = get_entry(entry)
        p = validate_params(e, parse_params(params)) if params else e.param_set("minimal")
        data = e.summary()
        if not e.degenerate:
            data["expected"] = expected_report(e, p)
        data["coincidences"] = [c for c in coincidences() if c.get("entry") == e.name or c.get("same_group_as") == e.name]
    except (PresentationError, UnknownEntryError, ValueError) as exc:
        raise UsageFailure(_message(exc)) from exc
    click.echo(dumps_json(data), nl=False)


if __name__ == "__main__":
    main()
