import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

import click
import numpy as np
from tqdm import tqdm

from .config import get_settings
from .exceptions import CompileInfeasibleError, MissionError
from .models import Symbol
from .services.automaton import export_dot, prune, translate
from .services.decomposition import (
    add_aux_state,
    build_graph,
    graph_to_dot,
    has_accepting_cycle,
    separability_table,
    write_graph,
)
from .services.ltl import parse_ltl
from .services.simulation import (
    compile_mission,
    cross_validate,
    lasso_words,
    load_scenario,
    resolve_settings,
    run,
    write_metrics,
    write_trace,
)
from .services.world import write_pgm

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_COMPILE_INFEASIBLE = 2
EXIT_RUNTIME_INFEASIBLE = 3


@click.group()
@click.option("--log-level", default=None, help="Logging level (defaults to MISSION_LOG_LEVEL or INFO).")
@click.pass_context
def cli(ctx: click.Context, log_level: Optional[str]):
    """Compile LTL missions for robot teams and run them on unknown grid maps."""
    settings = get_settings()
    if log_level is not None:
        settings = settings.with_overrides(log_level=log_level)
    logging.basicConfig(
        level=getattr(logging, settings.log_level),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    )
    ctx.obj = settings


@cli.command("compile")
@click.argument("scenario_path", type=click.Path(dir_okay=False))
@click.option("--dot", "dot_dir", type=click.Path(file_okay=False), help="Directory for nba.dot and graph.dot.")
@click.option("--graph", "graph_path", type=click.Path(dir_okay=False), help="Write the graph as JSON.")
@click.option("--hop-cap", type=click.IntRange(min=0), default=None)
@click.pass_obj
def compile_command(settings, scenario_path: str, dot_dir: Optional[str], graph_path: Optional[str],
                    hop_cap: Optional[int]) -> int:
    """Build the automaton and decomposition graph of a scenario and print their statistics."""
    scenario = load_scenario(scenario_path)
    settings = resolve_settings(settings, scenario, hop_cap=hop_cap)
    compiled = compile_mission(scenario, settings)
    for key, value in compiled.stats().items():
        click.echo(f"{key}: {value}")
    if dot_dir is not None:
        out = Path(dot_dir)
        out.mkdir(parents=True, exist_ok=True)
        (out / "nba.dot").write_text(export_dot(compiled.pruned))
        (out / "graph.dot").write_text(graph_to_dot(compiled.graph))
        logger.info(f"Wrote DOT files to {out}")
    if graph_path is not None:
        write_graph(compiled.graph, Path(graph_path))
    return EXIT_OK


@cli.command("check")
@click.argument("formula")
@click.option("--scenario", "scenario_path", type=click.Path(dir_okay=False), default=None,
              help="Take the initial robot label from this scenario instead of the empty symbol.")
@click.pass_obj
def check_command(settings, formula: str, scenario_path: Optional[str]) -> int:
    """Report robot-separability of every automaton guard and whether the mission can repeat."""
    initial = Symbol()
    if scenario_path is not None:
        initial = load_scenario(scenario_path).initial_symbol()
    pruned = prune(translate(parse_ltl(formula)))
    separable = True
    for source, target, report in separability_table(pruned):
        click.echo(f"{source} -> {target}: {report.guard}")
        click.echo(f"  {report.message}")
        if report.holds:
            for robot, part in report.per_robot.items():
                click.echo(f"  robot {robot}: {part}")
        separable = separable and report.holds
    g = build_graph(add_aux_state(pruned, initial), initial, settings.hop_cap,
                    settings.symbol_atom_limit, settings.symbol_product_limit)
    click.echo(f"all guards robot-separable: {'yes' if separable else 'no'}")
    click.echo(f"accepting cycle reachable: {'yes' if has_accepting_cycle(g) else 'no'}")
    return EXIT_OK


@cli.command("run")
@click.argument("scenario_path", type=click.Path(dir_okay=False))
@click.option("--budget", type=click.IntRange(min=0), default=None, help="Tick budget.")
@click.option("--seed", type=click.IntRange(min=0), default=None)
@click.option("--trace", "trace_path", type=click.Path(dir_okay=False), default=None)
@click.option("--metrics", "metrics_path", type=click.Path(dir_okay=False), default=None)
@click.option("--map", "map_path", type=click.Path(dir_okay=False), default=None, help="PGM snapshot of the final map.")
@click.option("--dot", "dot_dir", type=click.Path(file_okay=False), default=None)
@click.option("--hop-cap", type=click.IntRange(min=0), default=None)
@click.option("--check-invariants/--no-check-invariants", default=None)
@click.pass_obj
def run_command(settings, scenario_path: str, budget: Optional[int], seed: Optional[int],
                trace_path: Optional[str], metrics_path: Optional[str], map_path: Optional[str],
                dot_dir: Optional[str], hop_cap: Optional[int], check_invariants: Optional[bool]) -> int:
    """Simulate a scenario and write its trace and metrics."""
    scenario = load_scenario(scenario_path)
    settings = resolve_settings(settings, scenario, tick_budget=budget, hop_cap=hop_cap,
                                check_invariants=check_invariants)
    compiled = compile_mission(scenario, settings)
    if dot_dir is not None:
        out = Path(dot_dir)
        out.mkdir(parents=True, exist_ok=True)
        (out / "graph.dot").write_text(graph_to_dot(compiled.graph))
    result = run(scenario, settings, seed=seed, compiled=compiled)
    if trace_path is not None:
        write_trace(result.events, Path(trace_path))
    if metrics_path is not None:
        write_metrics(result.metrics, Path(metrics_path))
    if map_path is not None and result.grid is not None:
        write_pgm(result.grid, Path(map_path))
    m = result.metrics
    click.echo(f"outcome: {m.outcome}")
    click.echo(f"ticks: {m.ticks}")
    click.echo(f"first accepting visit: {m.first_accept_tick}")
    click.echo(f"second accepting visit: {m.second_accept_tick}")
    click.echo(f"replans: {m.replans}, messages: {m.messages}")
    if m.outcome != "satisfied":
        logger.error(f"Mission not satisfied: {m.outcome}")
        return EXIT_RUNTIME_INFEASIBLE
    return EXIT_OK


@cli.command("oracle")
@click.argument("formula")
@click.option("--words", type=click.IntRange(min=1), default=200, help="Number of random lasso words.")
@click.option("--seed", type=click.IntRange(min=0), default=0)
@click.option("--feasible", is_flag=True, help="Only draw symbols with at most one region per robot.")
@click.option("--quiet", is_flag=True, help="Hide the progress bar.")
def oracle_command(formula: str, words: int, seed: int, feasible: bool, quiet: bool) -> int:
    """Check the translated automaton against direct evaluation on random lasso words."""
    f = parse_ltl(formula)
    automaton = translate(f)
    samples = lasso_words(f.atoms, words, np.random.default_rng(seed), feasible=feasible)
    report = cross_validate(f, automaton, tqdm(samples, total=words, desc="lasso words", disable=quiet))
    click.echo(f"words checked: {report.checked}, satisfying: {report.accepted}, mismatches: {len(report.mismatches)}")
    for word in report.mismatches[:10]:
        click.echo(f"  mismatch: {word}")
    if not report.agrees:
        logger.error(f"Automaton disagrees with the formula on {len(report.mismatches)} words")
        return EXIT_ERROR
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the CLI and map failures to exit codes."""
    try:
        code = cli.main(args=list(argv) if argv is not None else None, standalone_mode=False)
    except CompileInfeasibleError as e:
        logger.error(f"Compile infeasible: {e}")
        click.echo(f"error: {e}", err=True)
        return EXIT_COMPILE_INFEASIBLE
    except MissionError as e:
        logger.error(f"{type(e).__name__}: {e}")
        click.echo(f"error: {e}", err=True)
        return EXIT_ERROR
    except click.ClickException as e:
        e.show()
        return EXIT_ERROR
    except (click.Abort, OSError, ValueError) as e:
        click.echo(f"error: {e}", err=True)
        return EXIT_ERROR
    return code if isinstance(code, int) else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
