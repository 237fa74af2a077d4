"""Command-line front end: ``tgraph <command>``.

Graph inputs are an edge-list file or an inline ``gen:<family>:<params>`` spec.
Artifacts and reports go to stdout, logs and errors to stderr.

Exit codes: 0 success, 1 invariant failure, 2 usage/parse/precondition error,
3 resource guard.
"""

from __future__ import annotations

import logging
import sys
from collections.abc import Iterator
from contextlib import contextmanager
from dataclasses import dataclass, field
from pathlib import Path
from typing import Annotated, Optional

import typer

from core import config
from core.analysis import analyze, render_text
from core.coloring import chromatic_number
from core.config import Limits
from core.corpus import parse_corpus_spec
from core.decomposition import CheckResult, coloring_from_specializing, consumption_check, decompose
from core.decomposition import verify_decomposition
from core.errors import FormatParseError, ResourceGuardError, TGraphError
from core.formats import decomposition_to_dot, format_edge_list, load_graph, parse_tree, parse_tree_partition
from core.generators import generate
from core.invariants import run_check
from core.minors import find_clique_minor, greedy_subdivision, kurepa_family_check
from core.schemas import CheckSummary, ColoringDoc, DecompositionDoc, FamilyDoc, KurepaDoc, SubdivisionDoc
from core.schemas import TreeStatsDoc, VerificationDoc, WitnessDoc
from core.tree import branch_count, height_specializing, level_sizes, width_and_height

logger = logging.getLogger(__name__)

EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_GUARD = 3

app = typer.Typer(help="Finite T-graph decompositions, clique minors and colorings.", no_args_is_help=True)

Source = Annotated[str, typer.Argument(help="Edge-list file or gen:<family>:<params> spec.")]


@dataclass
class State:
    limits: Limits = field(default_factory=Limits)


state = State()


@app.callback()
def main(
    verbose: Annotated[bool, typer.Option("--verbose", "-v", help="Log progress to stderr.")] = False,
    max_exact_chromatic: Annotated[
        Optional[int], typer.Option(help="Largest n for the exact chromatic solver.")
    ] = None,
    max_exact_minor: Annotated[Optional[int], typer.Option(help="Largest n for the exact minor search.")] = None,
) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else config.log_level(),
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )
    state.limits = Limits.from_env().with_overrides(
        max_exact_chromatic=max_exact_chromatic, max_exact_minor=max_exact_minor
    )


@contextmanager
def reported() -> Iterator[None]:
    """Map library errors to messages on stderr and the documented exit codes."""
    try:
        yield
    except ResourceGuardError as exc:
        typer.echo(f"resource guard: {exc}", err=True)
        raise typer.Exit(EXIT_GUARD) from None
    except TGraphError as exc:
        typer.echo(f"error: {exc}", err=True)
        raise typer.Exit(EXIT_USAGE) from None


def _read(path: Path) -> str:
    try:
        return path.read_text()
    except OSError as exc:
        raise FormatParseError(f"cannot read {path}: {exc.strerror or exc}") from None


# ---------------------------------------------------------------------------
# Analysis and verification
# ---------------------------------------------------------------------------


@app.command("analyze")
def cmd_analyze(
    source: Source,
    as_json: Annotated[bool, typer.Option("--json", help="Emit the report as JSON.")] = False,
) -> None:
    """Chromatic and Hadwiger numbers, decomposition summary and the height inequalities."""
    with reported():
        report = analyze(load_graph(source), limits=state.limits)
    typer.echo(report.to_json() if as_json else render_text(report), nl=as_json)


def _render_summary(summary: CheckSummary) -> str:
    lines = [f"corpus: {summary.corpus}", f"graphs: {summary.graphs}"]
    for name, count in summary.checks.items():
        skipped = summary.skipped.get(name, 0)
        lines.append(f"  {name}: {count} checked" + (f", {skipped} skipped" if skipped else ""))
    lines.append(f"failures: {len(summary.failures)}")
    for failure in summary.failures:
        lines.append(f"--- graph {failure.graph_id} [{failure.check}] {failure.detail}")
        lines.append(failure.edge_list.rstrip("\n"))
    lines.append("PASS" if summary.passed else "FAIL")
    return "\n".join(lines)


@app.command("check")
def cmd_check(
    corpus: Annotated[str, typer.Argument(help="exhaustive:N (N <= 7) or random:COUNT,N,P,SEED.")],
    workers: Annotated[int, typer.Option(min=1, help="Worker processes.")] = 1,
    as_json: Annotated[bool, typer.Option("--json", help="Emit the summary as JSON.")] = False,
    corrupt_verifier: Annotated[bool, typer.Option("--corrupt-verifier", hidden=True)] = False,
) -> None:
    """Run the invariant suite over a corpus; exit 1 and dump the graphs on any failure."""
    with reported():
        summary = run_check(parse_corpus_spec(corpus), limits=state.limits, workers=workers, corrupt=corrupt_verifier)
    typer.echo(summary.to_json() if as_json else _render_summary(summary))
    if not summary.passed:
        raise typer.Exit(EXIT_FAILURE)


@app.command("verify")
def cmd_verify(
    source: Source,
    decomposition: Annotated[Path, typer.Argument(help="Decomposition JSON file.")],
) -> None:
    """Verify a decomposition JSON document against its graph."""
    with reported():
        g = load_graph(source)
        d = DecompositionDoc.from_json(_read(decomposition)).to_decomposition()
        report = verify_decomposition(g, d)
        problems = consumption_check(g, d)
    consumption = CheckResult("consumption", not problems, problems[0] if problems else "")
    doc = VerificationDoc.from_report(report, [consumption])
    typer.echo(doc.to_json())
    if not doc.passed:
        raise typer.Exit(EXIT_FAILURE)


# ---------------------------------------------------------------------------
# Artifacts
# ---------------------------------------------------------------------------


@app.command("decompose")
def cmd_decompose(
    source: Source,
    dot: Annotated[Optional[Path], typer.Option(help="Also write a Graphviz DOT rendering to this file.")] = None,
) -> None:
    """Build T_G and print it as JSON."""
    with reported():
        d = decompose(load_graph(source))
    if dot is not None:
        dot.write_text(decomposition_to_dot(d))
        logger.info("Wrote DOT to %s", dot)
    typer.echo(DecompositionDoc.from_decomposition(d).to_json())


@app.command("gen")
def cmd_gen(spec: Annotated[str, typer.Argument(help="<family>:<params>, 'gen:' prefix optional.")]) -> None:
    """Print a generated graph as an edge list."""
    with reported():
        g = generate(spec)
    typer.echo(format_edge_list(g), nl=False)


@app.command("minor")
def cmd_minor(
    source: Source,
    k: Annotated[int, typer.Option("--k", min=1, help="Clique size.")],
) -> None:
    """Print a K_k minor witness as JSON, or 'none'."""
    with reported():
        witness = find_clique_minor(load_graph(source), k, limits=state.limits)
    typer.echo("none" if witness is None else WitnessDoc.from_witness(witness).to_json())


@app.command("color")
def cmd_color(source: Source) -> None:
    """Print an optimal proper coloring as JSON."""
    with reported():
        _, coloring = chromatic_number(load_graph(source), limits=state.limits)
    typer.echo(ColoringDoc.from_coloring(coloring).to_json())


@app.command("subdivide")
def cmd_subdivide(source: Source) -> None:
    """Print a greedily grown subdivided clique as JSON."""
    with reported():
        w = greedy_subdivision(load_graph(source))
    typer.echo(SubdivisionDoc.from_witness(w).to_json())


@app.command("kurepa")
def cmd_kurepa(
    source: Source,
    family: Annotated[Path, typer.Argument(help="Family JSON file: {schema, k, witnesses}.")],
    k: Annotated[Optional[int], typer.Option("--k", min=1, help="Clique size; defaults to the family's k.")] = None,
    chains: Annotated[bool, typer.Option(help="Map witnesses to chains of T_G.")] = False,
) -> None:
    """Check a Kurepa minor family; exit 1 if it is rejected."""
    with reported():
        g = load_graph(source)
        doc = FamilyDoc.from_json(_read(family))
        report = kurepa_family_check(
            g, doc.to_family(), k if k is not None else doc.k, decomposition=decompose(g) if chains else None
        )
    typer.echo(KurepaDoc.from_report(report).to_json())
    if not report.verdict:
        raise typer.Exit(EXIT_FAILURE)


@app.command("partition-color")
def cmd_partition_color(
    source: Source,
    partition: Annotated[Path, typer.Argument(help="Tree partition file: 'node parent v1 v2 ...' per line.")],
) -> None:
    """Color a graph from a tree partition using node heights as labels."""
    with reported():
        g = load_graph(source)
        p = parse_tree_partition(_read(partition))
        coloring = coloring_from_specializing(g, p, height_specializing(p.tree))
    typer.echo(ColoringDoc.from_coloring(coloring).to_json())


@app.command("tree-stats")
def cmd_tree_stats(
    tree: Annotated[Path, typer.Argument(help="Tree file: 'node parent height' per line.")],
) -> None:
    """Width, height, branch count and level sizes of a tree."""
    with reported():
        t = parse_tree(_read(tree))
    width, height = width_and_height(t)
    doc = TreeStatsDoc(
        nodes=t.m, height=height, width=width, roots=len(t.roots), branches=branch_count(t), level_sizes=level_sizes(t)
    )
    typer.echo(doc.to_json())


@app.command("serve")
def cmd_serve() -> None:
    """Run the MCP server over stdio."""
    from server import mcp

    mcp.run(transport="stdio")


if __name__ == "__main__":
    app()
