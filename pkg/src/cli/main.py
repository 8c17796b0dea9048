"""
permsys command-line interface.
Single-instance permutation checks, classifier sweeps against the brute-force
oracle, the binomial sweep and the three-variable equivalence probe.
"""

import logging
import sys
from pathlib import Path

import click
from rich.logging import RichHandler

# Add project root to Python path for imports
sys.path.append(str(Path(__file__).parent.parent.parent))

from src.cli.dispatch import RunConfig, dispatch
from src.cli.output import RecordWriter, console, err_console, render_records, render_summary
from src.config import config
from src.errors import PermSysError

logger = logging.getLogger(__name__)

TABLE_COLUMNS = {
    'check-perm': ['system', 'is_perm', 'collision'],
    'hermite': ['system', 'is_perm', 'hermite_tuple', 'oracle', 'agree'],
    'scan-binomial': ['q', 'a1', 'a2', 'predicted', 'case', 'oracle', 'agree', 'flags'],
    'conjecture-scan': ['system', 'status'],
}


def field_option(func):
    return click.option('--field', '-F', 'field_selector', required=True,
                        help="Field name from the catalogue, or p, p^m, p^m:c0,...,cm")(func)


def output_options(func):
    func = click.option('--out', '-o', type=click.Path(dir_okay=False), default=None,
                        help='Write JSONL records to this file')(func)
    func = click.option('--format', '-f', 'fmt', type=click.Choice(['json', 'table']), default='json',
                        help='Output format')(func)
    return func


def scan_options(func):
    func = click.option('--samples', '-n', type=int, default=1000, show_default=True,
                        help='Number of sampled instances')(func)
    func = click.option('--seed', type=lambda v: int(v, 0), default=None,
                        help='Sampling seed (default PERMSYS_DEFAULT_SEED)')(func)
    func = click.option('--exhaustive', is_flag=True, help='Enumerate instead of sampling')(func)
    func = click.option('--workers', '-w', type=int, default=None,
                        help='Worker processes (default PERMSYS_WORKERS)')(func)
    func = click.option('--budget', type=int, default=None, help='Override the configured scan budget')(func)
    return func


def _run(command: str, field_selector: str, fmt: str = 'json', out=None, seed=None, workers=None, **options):
    run = RunConfig(
        command=command,
        field=field_selector,
        fmt=fmt,
        out=out,
        seed=config.DEFAULT_SEED if seed is None else seed,
        workers=config.WORKERS if workers is None else workers,
        **options,
    )
    errors = run.validate()
    if errors:
        raise click.UsageError("; ".join(errors))

    try:
        status, result = dispatch(run)
    except PermSysError as e:
        err_console.print(f"[red]Error: {e}[/red]")
        if logging.getLogger().isEnabledFor(logging.DEBUG):
            import traceback
            err_console.print(traceback.format_exc())
        sys.exit(1)

    with RecordWriter(run.out, echo=(fmt == 'json')) as writer:
        for record in result.records:
            writer.write(record)
        if result.summary:
            writer.write(result.summary)

    if fmt == 'table':
        render_records(command, result.records, TABLE_COLUMNS.get(command))
        if result.summary:
            render_summary(f"{command} summary", result.summary, result.red_flags)
    if status:
        err_console.print(f"[red]{result.red_flags} flagged records[/red]")
    sys.exit(status)


@click.group()
@click.option('--verbose', '-v', is_flag=True, help='Enable verbose logging')
def cli(verbose):
    """permsys - permutation polynomial systems over small finite fields."""
    level = logging.DEBUG if verbose else getattr(logging, config.LOG_LEVEL, logging.INFO)
    logging.basicConfig(
        level=level,
        format="%(message)s",
        handlers=[RichHandler(console=err_console, show_path=verbose, markup=False)],
        force=True,
    )


@cli.command('check-perm')
@field_option
@click.option('--system', '-s', required=True, help='System such as "(x + y^2, y)"')
@click.option('--budget', type=int, default=None, help='Maximum number of points to evaluate')
@output_options
def check_perm(field_selector, system, budget, fmt, out):
    """Brute-force permutation check of one system."""
    _run('check-perm', field_selector, fmt, out, system=system, budget=budget)


@cli.command()
@field_option
@click.option('--system', '-s', required=True, help='System such as "(x^2 + y^2, x*y)"')
@click.option('--budget', type=int, default=None, help='Maximum number of exponent tuples')
@output_options
def hermite(field_selector, system, budget, fmt, out):
    """Hermite's criterion for one system, cross-checked by brute force."""
    _run('hermite', field_selector, fmt, out, system=system, budget=budget)


@cli.command('classify-quad')
@field_option
@click.option('--coeffs', '-c', default=None, help='a1,...,a5,b1,...,b5')
@click.option('--system', '-s', default=None, help='Bivariate system of degree at most 2')
@output_options
def classify_quad(field_selector, coeffs, system, fmt, out):
    """Classify a bivariate quadratic system and replay its witness."""
    _run('classify-quad', field_selector, fmt, out, coeffs=coeffs, system=system)


@cli.command('scan-quad')
@field_option
@scan_options
@output_options
def scan_quad(field_selector, samples, seed, exhaustive, workers, budget, fmt, out):
    """Quadratic classifier against the oracle, exhaustive or sampled."""
    _run('scan-quad', field_selector, fmt, out, seed, workers,
         samples=samples, exhaustive=exhaustive, budget=budget)


@cli.command('classify-homog3')
@field_option
@click.option('--coeffs', '-c', required=True, help='a1,a2,a3,b2,b3,b4')
@output_options
def classify_homog3(field_selector, coeffs, fmt, out):
    """Classify (x Q1, y Q2) and attach its rational-map certificate."""
    _run('classify-homog3', field_selector, fmt, out, coeffs=coeffs)


@cli.command('scan-homog3')
@field_option
@scan_options
@output_options
def scan_homog3(field_selector, samples, seed, exhaustive, workers, budget, fmt, out):
    """3-homogeneous classifier against the oracle over a1 b4 != 0."""
    _run('scan-homog3', field_selector, fmt, out, seed, workers,
         samples=samples, exhaustive=exhaustive, budget=budget)


@cli.command('scan-binomial')
@field_option
@click.option('--even', is_flag=True, help='Characteristic-2 field with odd extension degree')
@click.option('--strict-21', 'strict', is_flag=True,
              help='Couple a2 = 2 sigma / s to u = (sigma - 3) s^2 in case 2.1')
@click.option('--workers', '-w', type=int, default=None, help='Worker processes')
@click.option('--budget', type=int, default=None, help='Override the configured scan budget')
@output_options
def scan_binomial(field_selector, even, strict, workers, budget, fmt, out):
    """Predicted versus brute-force verdicts for x^3 + a x^(2q+1) over F_{q^2}."""
    _run('scan-binomial', field_selector, fmt, out, None, workers, even=even, strict=strict, budget=budget)


@cli.command('verify-equiv')
@field_option
@click.option('--system', '-s', required=True, help='Source system')
@click.option('--target', '-t', required=True, help='Target system')
@click.option('--witness', 'witness_path', required=True, type=click.Path(exists=True, dir_okay=False),
              help='YAML or JSON file with the witness steps')
@output_options
def verify_equiv(field_selector, system, target, witness_path, fmt, out):
    """Replay a witness chain from one system to another."""
    _run('verify-equiv', field_selector, fmt, out, system=system, target=target, witness_path=witness_path)


@cli.command('conjecture-scan')
@field_option
@scan_options
@click.option('--density', type=float, default=0.25, show_default=True,
              help='Probability of a nonzero quadratic coefficient when sampling')
@output_options
def conjecture_scan(field_selector, samples, seed, exhaustive, workers, budget, density, fmt, out):
    """Search three-variable quadratic permutations lacking an identity witness."""
    _run('conjecture-scan', field_selector, fmt, out, seed, workers,
         samples=samples, exhaustive=exhaustive, density=density, budget=budget)


@cli.command('show-config')
def show_config():
    """Show the active configuration and any problems with it."""
    console.print(str(config))
    for error in config.validate_config():
        console.print(f"[yellow]Warning: {error}[/yellow]")


if __name__ == '__main__':
    cli()
