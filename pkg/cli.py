"""
🖥️ monocode CLI - واجهة سطر الأوامر
Command-line front end: load a code, run the closed-form enumerators and the
brute-force oracle, and print tables, JSON or CSV.

Exit codes: 0 ok, 1 usage / I-O / validation, 2 invalid code, 3 verification mismatch.
"""

import functools
import json
import sys
from dataclasses import dataclass
from typing import Optional

import click
import pandas as pd

from algebra.boolean_ring import Monomial, monomial_of_row
from config.settings import get_config
from data.sample_codes import load_afile, load_sample, sample_names
from enumeration.oracle import brute_force_spectrum, verify_code
from enumeration.weight_enumerator import coset_pairs, count_1p5, pairs_table, union_bound
from groups.lta_group import iter_orbit, orbit_cardinality, orbit_exponent_breakdown
from models.code_model import CodeSpec, reed_muller
from utils.logging_helpers import get_logger, setup_logging
from utils.serializers import CosetRecordSchema, SpectrumSchema, WeightReportSchema, dump_json
from utils.validation_helpers import (
    IndexOutOfRange, TooLarge, ValidationError, VerificationMismatch, parse_ebn0_range,
    parse_variables, validate_m
)

logger = get_logger(__name__)


@dataclass
class CliOptions:
    as_json: bool = False
    as_csv: bool = False
    threads: Optional[int] = None
    k_limit: Optional[int] = None
    closure: bool = False


def handles_domain_errors(command):
    """Print domain errors on stderr and exit with their exit code"""
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except ValidationError as e:
            logger.debug('command_failed', code=e.code, details=e.details)
            click.echo(f'error [{e.code}]: {e.message}', err=True)
            if e.details:
                click.echo(json.dumps(e.details, default=str), err=True)
            raise click.exceptions.Exit(e.exit_code)
    return wrapper


def code_source(command):
    """--rows/--m, --rm or --sample"""
    command = click.option('--sample', type=click.Choice(sample_names()), help='Named reference code')(command)
    command = click.option('--rm', 'rm', type=int, nargs=2, default=None, metavar='R M', help='Reed-Muller R(r,m)')(command)
    command = click.option('--m', 'm', type=int, default=None, help='Number of variables')(command)
    command = click.option('--rows', type=click.Path(dir_okay=False), default=None, help='A-file with row indices')(command)
    return command


def load_code(opts: CliOptions, rows, m, rm, sample) -> CodeSpec:
    sources = [s for s in (rows, rm, sample) if s]
    if len(sources) != 1:
        raise ValidationError('Give exactly one of --rows, --rm or --sample', field='source')
    if rm:
        spec = reed_muller(*rm)
    elif sample:
        spec = load_sample(sample)
    else:
        if m is None:
            raise ValidationError('--rows needs --m', field='m')
        spec = load_afile(rows, m, strict=not opts.closure)
    if spec.closure_additions:
        click.echo(f'# closure added rows: {" ".join(map(str, spec.closure_additions))}', err=True)
    return spec


def _echo_frame(opts: CliOptions, frame: pd.DataFrame) -> None:
    if opts.as_csv:
        click.echo(frame.to_csv(index=False), nl=False)
    else:
        click.echo(frame.to_string(index=False))


@click.group()
@click.option('--json', 'as_json', is_flag=True, help='JSON output')
@click.option('--csv', 'as_csv', is_flag=True, help='CSV output')
@click.option('--threads', type=int, default=None, help='Oracle workers (0 = one per CPU)')
@click.option('--k-limit', type=int, default=None, help='Largest K the oracle accepts')
@click.option('--closure', is_flag=True, help='Complete a non-decreasing row set instead of rejecting it')
@click.option('--strict', is_flag=True, help='Reject non-decreasing row sets (default)')
@click.pass_context
def cli(ctx, as_json, as_csv, threads, k_limit, closure, strict):
    """Exact w_min and 1.5 w_min codeword counts of decreasing monomial codes"""
    if closure and strict:
        raise click.UsageError('--closure and --strict are mutually exclusive')
    if as_json and as_csv:
        raise click.UsageError('--json and --csv are mutually exclusive')
    setup_logging(get_config())
    ctx.obj = CliOptions(as_json=as_json, as_csv=as_csv, threads=threads, k_limit=k_limit, closure=closure)


@cli.command('enumerate')
@code_source
@click.option('--pairs', 'show_pairs', is_flag=True, help='Print the per-pair breakdown')
@click.pass_obj
@handles_domain_errors
def enumerate_code(opts: CliOptions, rows, m, rm, sample, show_pairs):
    """A_wmin and A_1.5wmin of a code"""
    spec = load_code(opts, rows, m, rm, sample)
    report = count_1p5(spec)
    if opts.as_json:
        click.echo(dump_json(WeightReportSchema(), report, get_config().JSON_INDENT))
        return
    if opts.as_csv:
        frame = pd.DataFrame(report.terms(), columns=['w', 'A_w'])
        if show_pairs:
            frame = pairs_table(report)
        _echo_frame(opts, frame)
        return
    click.echo(spec.describe())
    click.echo(f'w_min = {report.w_min}    A_wmin = {report.A_wmin}')
    click.echo(f'1.5 w_min = {report.w_1p5}    A_1.5wmin = {report.A_1p5wmin}')
    if show_pairs and report.pairs:
        click.echo()
        _echo_frame(opts, pairs_table(report))


@cli.command()
@code_source
@click.pass_obj
@handles_domain_errors
def verify(opts: CliOptions, rows, m, rm, sample):
    """Check the closed-form counts against brute force"""
    spec = load_code(opts, rows, m, rm, sample)
    checks = verify_code(spec, opts.k_limit, opts.threads)
    if opts.as_json:
        click.echo(json.dumps([c.to_dict() for c in checks], indent=get_config().JSON_INDENT))
    else:
        for c in checks:
            status = 'PASS' if c.passed else 'FAIL'
            click.echo(f'{status}  {c.name:<24} expected={c.expected} observed={c.observed}')
    failed = [c.name for c in checks if not c.passed]
    if failed:
        raise VerificationMismatch(f'{len(failed)} check(s) failed', details={'failed': failed})


@cli.command()
@click.option('--vars', 'variables', default=None, help='Comma separated variable indices, "" for 1')
@click.option('--row', type=int, default=None, help='Row index of the monomial')
@click.option('--m', 'm', type=int, required=True, help='Number of variables')
@click.pass_obj
@handles_domain_errors
def orbit(opts: CliOptions, variables, row, m):
    """List LTA(m,2)_f . f"""
    m = validate_m(m, get_config().MAX_M)
    if (variables is None) == (row is None):
        raise ValidationError('Give exactly one of --vars or --row', field='monomial')
    if row is not None:
        if not 0 <= row < (1 << m):
            raise ValidationError(f'Row {row} outside [0, {1 << m})', field='row')
        f = monomial_of_row(row, m)
    else:
        f = Monomial.from_vars(parse_variables(variables))
    if not f.fits(m):
        raise IndexOutOfRange(f'{f} uses a variable outside [0, {m})', field='vars', details={'m': m})
    size = orbit_cardinality(f)
    cap = get_config().ORBIT_CAP
    if size > cap:
        raise TooLarge(f'Orbit of {size} polynomials exceeds the cap {cap}', details={'size': size, 'cap': cap})
    polynomials = sorted(set(iter_orbit(f, f, m)), key=lambda P: P.canonical())
    degree, lambdas = orbit_exponent_breakdown(f)
    exponent = '+'.join(str(t) for t in (degree, *lambdas))
    if opts.as_json:
        payload = {
            'monomial': list(f.vars),
            'exponent': exponent,
            'cardinality': str(len(polynomials)),
            'orbit': [str(P) for P in polynomials],
        }
        click.echo(json.dumps(payload, indent=get_config().JSON_INDENT))
        return
    for P in polynomials:
        click.echo(str(P))
    click.echo(f'# |orbit({f})| = 2^{{{exponent}}} = {len(polynomials)}')


@cli.command()
@code_source
@click.pass_obj
@handles_domain_errors
def pairs(opts: CliOptions, rows, m, rm, sample):
    """Core row sets and coset counts of every qualifying pair"""
    spec = load_code(opts, rows, m, rm, sample)
    records = coset_pairs(spec)
    if opts.as_json:
        click.echo(dump_json(CosetRecordSchema(), records, get_config().JSON_INDENT, many=True))
        return
    frame = pd.DataFrame(
        [{
            'f_row': r.f_row,
            'g_row': r.g_row,
            'K_f': ' '.join(map(str, r.K_f)),
            'K_g': ' '.join(map(str, r.K_g)),
            'shared': ' '.join(map(str, r.shared)),
            'count': r.count,
        } for r in records],
        columns=['f_row', 'g_row', 'K_f', 'K_g', 'shared', 'count']
    )
    _echo_frame(opts, frame)


@cli.command()
@code_source
@click.option('--rate', type=float, default=None, help='Code rate, defaults to K/N')
@click.option('--ebn0', default='0:10:1', show_default=True, help='dB grid start:stop:step or list')
@click.pass_obj
@handles_domain_errors
def bler(opts: CliOptions, rows, m, rm, sample, rate, ebn0):
    """Truncated union bound on the ML block error rate, as CSV"""
    spec = load_code(opts, rows, m, rm, sample)
    report = count_1p5(spec)
    grid = parse_ebn0_range(ebn0)
    bound = union_bound(report, spec.rate if rate is None else rate, grid)
    click.echo(f'# truncated union bound over w < 2 w_min: w in {{{report.w_min}, {report.w_1p5}}}')
    click.echo(pd.DataFrame({'EbN0_dB': grid, 'bler_bound': bound}).to_csv(index=False), nl=False)


@cli.command()
@code_source
@click.pass_obj
@handles_domain_errors
def oracle(opts: CliOptions, rows, m, rm, sample):
    """Exhaustive weight spectrum"""
    spec = load_code(opts, rows, m, rm, sample)
    spectrum = brute_force_spectrum(spec, opts.k_limit, opts.threads)
    if opts.as_json:
        click.echo(dump_json(SpectrumSchema(), spectrum, get_config().JSON_INDENT))
        return
    frame = pd.DataFrame(sorted(spectrum.counts.items()), columns=['weight', 'count'])
    _echo_frame(opts, frame)


def main(argv=None) -> int:
    try:
        rv = cli.main(args=argv, prog_name='monocode', standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return 1
    except click.exceptions.Abort:
        return 1
    return rv if isinstance(rv, int) else 0


if __name__ == '__main__':
    sys.exit(main())
