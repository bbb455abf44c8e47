import logging
import sys
from contextlib import contextmanager
from dataclasses import dataclass
from pathlib import Path
from typing import Annotated, Optional

import click
import typer
from pydantic import BaseModel
from rich.console import Console
from rich.logging import RichHandler
from rich.table import Table

from config.config import DEFAULT_FIELD, LOG_LEVEL, THREADS
from models.model import (
    BettiTableModel,
    ComplexModel,
    ConfigurationModel,
    FlagModel,
    FNLEntryModel,
    FNLModel,
    FVectorModel,
    NeighborlyModel,
    PolytopeModel,
)
from utils.betti import (
    betti_of_polytope_via_gale_links,
    betti_via_links,
    has_linear_resolution,
    hochster_betti,
    polytope_betti_from_gale,
)
from utils.buchstaber import s_bounds, s_real_exact, s_real_lower_via_xi
from utils.combinatorics_z2 import fano_circle_experiment, fano_two_coloring_check, proper_coloring_search
from utils.complex_core import SimplicialComplex, alexander_dual, f_vector, full_subcomplex, is_flag, link, members
from utils.corpus import regen_oracles
from utils.errors import GaleDualError, InputError
from utils.gale import constellation_complex, gale_diagram, is_flag_configuration
from utils.homology import Field
from utils.polytope import f_nl, is_k_neighborly, nerve_KP, nerve_KQ, polytope_f_vector
from utils.serialization import (
    betti_to_model,
    bounds_to_model,
    coloring_to_model,
    complex_to_model,
    configuration_to_model,
    dump_json,
    entries_to_model,
    fano_circle_to_model,
    fano_to_model,
    field_of,
    load_any,
    real_invariant_to_model,
    to_complex,
    to_configuration,
    to_polytope,
    write_json,
    xi_to_model,
)
from utils.verify import SUITES, verify_all, verify_suite

logger = logging.getLogger(__name__)

app = typer.Typer(help="Gale duality, Alexander duality and Buchstaber invariants with exact arithmetic.")
console = Console()
err_console = Console(stderr=True)

EXIT_FAILED = 1
EXIT_INPUT = 2


@dataclass
class Settings:
    json: bool = False
    one_based: bool = False
    threads: int = THREADS
    field: Field = Field.GF2


@app.callback()
def main(
    ctx: typer.Context,
    json_output: Annotated[bool, typer.Option("--json", help="Machine-readable output.")] = False,
    one_based: Annotated[bool, typer.Option("--one-based", help="Print vertex labels from 1.")] = False,
    threads: Annotated[int, typer.Option("--threads", help="Worker processes for sweeps.")] = THREADS,
    field: Annotated[str, typer.Option("--field", help="gf2 or q.")] = DEFAULT_FIELD,
):
    logging.basicConfig(
        level=LOG_LEVEL, format="%(message)s", datefmt="[%X]", handlers=[RichHandler(console=err_console)]
    )
    with guard():
        ctx.obj = Settings(json_output, one_based, threads, field_of(field, DEFAULT_FIELD))


@contextmanager
def guard():
    try:
        yield
    except GaleDualError as e:
        err_console.print(f"[red]error:[/red] {e}", highlight=False)
        raise typer.Exit(EXIT_INPUT)


def _settings(ctx: typer.Context) -> Settings:
    return ctx.obj or Settings()


def _vertices(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError as e:
        raise InputError(f"expected comma-separated vertex indices, got {text!r}") from e


def _label(v: int, settings: Settings) -> str:
    return str(v + 1 if settings.one_based else v)


def _face(vertices, settings: Settings) -> str:
    return "{" + ",".join(_label(v, settings) for v in vertices) + "}"


def _as_complex(model) -> SimplicialComplex:
    if not isinstance(model, ComplexModel):
        raise InputError("expected a simplicial complex file")
    return to_complex(model)


def _as_polytope(model):
    if not isinstance(model, PolytopeModel):
        raise InputError("expected a polytope file")
    return to_polytope(model)


def _as_configuration(model):
    if not isinstance(model, ConfigurationModel):
        raise InputError("expected a point configuration file")
    return to_configuration(model)


def _emit(settings: Settings, model: BaseModel | list, render=None) -> None:
    if settings.json or render is None:
        typer.echo(dump_json(model).decode())
    else:
        render()


def _labelled(k: SimplicialComplex, mask: int) -> list[int]:
    return [k.labels[v] for v in members(mask)]


def _emit_complex(settings: Settings, k: SimplicialComplex, title: str) -> None:
    def render():
        table = Table(title=f"{title} on {k.m} vertices")
        table.add_column("maximal face")
        table.add_column("dim", justify="right")
        for face in k.maximal_faces:
            table.add_row(_face(_labelled(k, face), settings), str(face.bit_count() - 1))
        console.print(table)
        nonfaces = " ".join(_face(_labelled(k, n), settings) for n in k.minimal_nonfaces)
        console.print(f"minimal nonfaces: {nonfaces or 'none'}")

    _emit(settings, complex_to_model(k), render)


def _emit_betti(settings: Settings, model: BettiTableModel, title: str) -> None:
    def render():
        table = Table(title=f"{title} over {model.field}")
        for column in ("i", "2j", "j", "beta^{-i,2j}"):
            table.add_column(column, justify="right")
        for entry in model.entries:
            table.add_row(str(entry.i), str(entry.deg), str(entry.deg // 2), str(entry.value))
        console.print(table)

    _emit(settings, model, render)


def _write_or_emit(settings: Settings, model: BaseModel, out: Optional[Path]) -> None:
    if out is not None:
        write_json(out, model)
        logger.info(f"wrote {out}")
    else:
        _emit(settings, model)


FileArgument = Annotated[Path, typer.Argument(help="JSON input file.")]


@app.command()
def dual(ctx: typer.Context, path: FileArgument):
    """Alexander dual of a complex."""
    settings = _settings(ctx)
    with guard():
        _emit_complex(settings, alexander_dual(_as_complex(load_any(path))), "Alexander dual")


@app.command("link")
def link_command(ctx: typer.Context, path: FileArgument, face: Annotated[str, typer.Option(help="e.g. 0,2")]):
    """Link of a face, on the vertices outside it."""
    settings = _settings(ctx)
    with guard():
        _emit_complex(settings, link(_as_complex(load_any(path)), _vertices(face)), "link")


@app.command()
def sub(ctx: typer.Context, path: FileArgument, vertices: Annotated[str, typer.Option(help="e.g. 0,1,3")]):
    """Full subcomplex on a vertex set."""
    settings = _settings(ctx)
    with guard():
        _emit_complex(settings, full_subcomplex(_as_complex(load_any(path)), _vertices(vertices)), "full subcomplex")


@app.command()
def nerve(
    ctx: typer.Context,
    path: FileArgument,
    facets: Annotated[bool, typer.Option("--facets", help="K_P on the facets instead of K(P).")] = False,
):
    """K(P) of a polytope, or with --facets the nerve of its facet cover."""
    settings = _settings(ctx)
    with guard():
        p = _as_polytope(load_any(path))
        if facets:
            _emit_complex(settings, nerve_KQ(p), "K_P")
        else:
            _emit_complex(settings, nerve_KP(p), "K(P)")


@app.command()
def gale(ctx: typer.Context, path: FileArgument, out: Annotated[Optional[Path], typer.Option()] = None):
    """Gale diagram of a polytope as a point configuration."""
    settings = _settings(ctx)
    with guard():
        _write_or_emit(settings, configuration_to_model(gale_diagram(_as_polytope(load_any(path)))), out)


@app.command()
def constellation(ctx: typer.Context, path: FileArgument, out: Annotated[Optional[Path], typer.Option()] = None):
    """Constellation complex of a point configuration."""
    settings = _settings(ctx)
    with guard():
        k = constellation_complex(_as_configuration(load_any(path)))
        if out is not None:
            _write_or_emit(settings, complex_to_model(k), out)
        else:
            _emit_complex(settings, k, "constellation complex")


@app.command()
def betti(
    ctx: typer.Context,
    path: FileArgument,
    links: Annotated[bool, typer.Option("--links", help="Table of the dual, read from links.")] = False,
    polytope: Annotated[Optional[Path], typer.Option(help="Compare a configuration against this polytope.")] = None,
    gale_links: Annotated[bool, typer.Option("--gale-links", help="Table of K(P) from a Gale diagram.")] = False,
):
    """Bigraded Betti numbers of a complex or of a configuration's constellation complex."""
    settings = _settings(ctx)
    with guard():
        model = load_any(path)
        if isinstance(model, ConfigurationModel):
            x = to_configuration(model)
            if gale_links:
                _emit_betti(settings, betti_to_model(betti_of_polytope_via_gale_links(x, settings.field)), "K(P)")
                return
            p = _as_polytope(load_any(polytope)) if polytope else None
            comparison = polytope_betti_from_gale(x, p, settings.field)
            _emit_betti(settings, betti_to_model(comparison.table), "constellation complex")
            if not settings.json:
                console.print(f"linear resolution (r = {x.r}): {has_linear_resolution(comparison.table, x.r)}")
            if comparison.residual:
                err_console.print(f"differs from f_(n,l) at {entries_to_model(comparison.residual)}")
                raise typer.Exit(EXIT_FAILED)
            return
        k = _as_complex(model)
        if links:
            _emit_betti(settings, betti_to_model(betti_via_links(k, settings.field)), "Alexander dual")
        else:
            _emit_betti(settings, betti_to_model(hochster_betti(k, settings.field, settings.threads)), "face ring")


@app.command()
def fvector(ctx: typer.Context, path: FileArgument):
    """f-vector of a complex or of a polytope's proper faces."""
    settings = _settings(ctx)
    with guard():
        model = load_any(path)
        values = polytope_f_vector(to_polytope(model)) if isinstance(model, PolytopeModel) else f_vector(_as_complex(model))
        _emit(settings, FVectorModel(f_vector=values), lambda: console.print(f"f = {tuple(values)}"))


@app.command()
def fnl(ctx: typer.Context, path: FileArgument):
    """Faces of a polytope counted by dimension n and vertex count l."""
    settings = _settings(ctx)
    with guard():
        counts = f_nl(_as_polytope(load_any(path)))
        model = FNLModel(entries=[FNLEntryModel(n=n, l=l, count=c) for (n, l), c in counts.items()])

        def render():
            table = Table(title="f_(n,l)")
            for column in ("n", "l", "count"):
                table.add_column(column, justify="right")
            for entry in model.entries:
                table.add_row(str(entry.n), str(entry.l), str(entry.count))
            console.print(table)

        _emit(settings, model, render)


@app.command()
def flag(ctx: typer.Context, path: FileArgument):
    """Whether every minimal nonface has two vertices."""
    settings = _settings(ctx)
    with guard():
        model = load_any(path)
        if isinstance(model, PolytopeModel):
            value = is_flag(nerve_KP(to_polytope(model)))
        elif isinstance(model, ConfigurationModel):
            value = is_flag_configuration(to_configuration(model))
        else:
            value = is_flag(to_complex(model))
        _emit(settings, FlagModel(flag=value), lambda: console.print(f"flag: {value}"))


@app.command()
def neighborly(ctx: typer.Context, path: FileArgument, k: Annotated[int, typer.Option("--k")] = 2):
    settings = _settings(ctx)
    with guard():
        value = is_k_neighborly(_as_polytope(load_any(path)), k)
        _emit(settings, NeighborlyModel(k=k, neighborly=value), lambda: console.print(f"{k}-neighborly: {value}"))


@app.command()
def buchstaber(
    ctx: typer.Context,
    path: FileArgument,
    real: Annotated[bool, typer.Option("--real", help="Exact real invariant with a witness.")] = False,
    xi: Annotated[Optional[int], typer.Option("--xi", help="Search a xi-map of this rank.")] = None,
    bounds: Annotated[bool, typer.Option("--bounds", help="Bounds on s and s_R.")] = False,
    r_max: Annotated[Optional[int], typer.Option("--r-max")] = None,
):
    """Buchstaber invariants of a complex, or of K_P for a polytope."""
    settings = _settings(ctx)
    with guard():
        model = load_any(path)
        k = nerve_KQ(to_polytope(model)) if isinstance(model, PolytopeModel) else _as_complex(model)
        if xi is not None:
            result = xi_to_model(xi, s_real_lower_via_xi(k, xi))

            def render_xi():
                if not result.found:
                    console.print(f"no xi of rank {xi} ({'exhausted' if result.complete else 'budget hit'})")
                    return
                for entry in result.assignment:
                    console.print(f"{entry.a} -> {_face(entry.nonface, settings)}")

            _emit(settings, result, render_xi)
        if bounds:
            _emit(settings, bounds_to_model(s_bounds(k)))
        if real or (xi is None and not bounds):
            result = real_invariant_to_model(s_real_exact(k, r_max))

            def render_real():
                state = "exact" if result.exact else f"unknown above {result.unknown_above}"
                console.print(f"s_R = {result.value} ({state}, {result.nodes} nodes)")
                if result.witness:
                    for row in result.witness.rows:
                        console.print(row)

            _emit(settings, result, render_real)


@app.command()
def coloring(
    ctx: typer.Context,
    k: Annotated[int, typer.Option("--k")],
    colors: Annotated[int, typer.Option("--colors")],
):
    """Search a coloring of Z_2^k - {0} with no single-colored odd minimal dependence."""
    settings = _settings(ctx)
    with guard():
        model = coloring_to_model(k, colors, proper_coloring_search(k, colors))

        def render():
            if model.colors is None:
                console.print(f"no proper {colors}-coloring of Z_2^{k} ({model.nodes} nodes)")
            else:
                console.print(" ".join(f"{a:0{k}b}:{c}" for a, c in enumerate(model.colors, start=1)))

        _emit(settings, model, render)


@app.command()
def fano(
    ctx: typer.Context,
    check_two_colorings: Annotated[bool, typer.Option("--check-two-colorings", help="Fail unless it holds.")] = False,
):
    """Every 2-coloring of the Fano plane has a single-colored line."""
    settings = _settings(ctx)
    report = fano_to_model(fano_two_coloring_check())
    _emit(
        settings,
        report,
        lambda: console.print(f"{report.with_single_colored_line} of {report.colorings} colorings have one"),
    )
    if check_two_colorings and not report.holds:
        raise typer.Exit(EXIT_FAILED)


@app.command("fano-circle")
def fano_circle(
    ctx: typer.Context,
    trials: Annotated[Optional[int], typer.Option("--trials")] = None,
    seed: Annotated[Optional[int], typer.Option("--seed")] = None,
):
    """Random maps of the Fano plane to the circle."""
    settings = _settings(ctx)
    with guard():
        report = fano_circle_to_model(fano_circle_experiment(trials, seed, threads=settings.threads))
    _emit(
        settings,
        report,
        lambda: console.print(f"{report.counterexamples} counterexamples in {report.trials} trials (seed {report.seed})"),
    )
    if report.counterexamples:
        raise typer.Exit(EXIT_FAILED)


@app.command()
def verify(
    ctx: typer.Context,
    suite: Annotated[str, typer.Argument(help=f"One of {', '.join(SUITES)} or all.")],
    regen_oracles_: Annotated[bool, typer.Option("--regen-oracles", help="Rewrite DERIVED corpus values.")] = False,
):
    """Re-check the library's theorems on the bundled corpus."""
    settings = _settings(ctx)
    with guard():
        if regen_oracles_:
            changed = regen_oracles()
            err_console.print(f"{changed} derived oracle values changed")
        reports = verify_all(field=settings.field) if suite == "all" else [verify_suite(suite, field=settings.field)]

    def render():
        table = Table(title="verify")
        table.add_column("suite")
        table.add_column("checks", justify="right")
        table.add_column("undecided", justify="right")
        table.add_column("result")
        for report in reports:
            result = "[green]PASS[/green]" if report.passed else "[red]FAIL[/red]"
            table.add_row(report.name, str(report.checks), str(report.skipped), result)
        console.print(table)
        for report in reports:
            for failure in report.failures:
                console.print(f"{report.name}: {failure}", highlight=False)

    _emit(settings, reports, render)
    if not all(report.passed for report in reports):
        raise typer.Exit(EXIT_FAILED)


def cli_dispatch(argv: list[str] | None = None) -> int:
    """Run the command line and return its exit code instead of exiting."""
    command = typer.main.get_command(app)
    try:
        result = command.main(args=argv if argv is not None else sys.argv[1:], prog_name="galedual", standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return EXIT_INPUT
    except click.Abort:
        return EXIT_FAILED
    return result if isinstance(result, int) else 0


if __name__ == "__main__":
    sys.exit(cli_dispatch())
