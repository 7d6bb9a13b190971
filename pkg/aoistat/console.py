# aoistat.console
# Command line interface for aoistat
#
# Created:  Sat Oct 17 20:02:37 2026 +0000
#
# Copyright (C) 2026 The aoistat authors
# For license information, see LICENSE.txt
#
# ID: console.py [] $

"""
Command line interface for aoistat.

Every command is a thin shell over the library: it parses flags, calls the
library, and prints or writes the result. Exit codes are 0 on success, 2
for usage errors and 3 for numeric, validation or IO failures.
"""

##########################################################################
## Imports
##########################################################################

import sys
import json
import logging
import argparse

from aoistat import __version__
from aoistat.shs.base import LoadPoint
from aoistat.policies import PolicyId, Method, POLICY_ORDER, source_ages
from aoistat.analyze import SweepRow, SweepSpec, SimSettings, run_sweep, summarize, CI_WIDTH
from aoistat.sim.engine import SimConfig, simulate, DEFAULT_EVENTS, DEFAULT_REPLICATIONS, DEFAULT_WARMUP
from aoistat.reader import emit_csv, csv_bytes, TraceWriter, ENCODING
from aoistat.reporting import AnalyticReport, ValidationReport, PolylinePlot
from aoistat.utils.config import load_config, merge_settings
from aoistat.validation import validate
from aoistat.exceptions import AoIStatException, ConsoleError, WriterException
from aoistat.exceptions import EXIT_SUCCESS, EXIT_FAILURE

##########################################################################
## Module Constants
##########################################################################

logger = logging.getLogger("aoistat")

PROG = "aoistat"

SWEEP_DEFAULTS = {
    'policies':     POLICY_ORDER,
    'method':       None,
    'rho':          None,
    'rho2':         None,
    'mu':           1.0,
    'span':         None,
    'points':       9,
    'margin':       None,
    'events':       DEFAULT_EVENTS,
    'replications': DEFAULT_REPLICATIONS,
    'seed':         0,
    'warmup':       DEFAULT_WARMUP,
    'workers':      1,
    'priority':     2,
}

PLOT_METRICS = ('sum_aoi', 'jain', 'delta1', 'delta2')

##########################################################################
## Helper functions
##########################################################################

def configure_logging(verbosity):
    """
    Sends log records to stderr; stdout carries only results.
    """
    level = {-1: logging.ERROR, 0: logging.WARNING}.get(verbosity, logging.DEBUG)
    logging.basicConfig(
        stream=sys.stderr, level=level, force=True,
        format="%(levelname)s %(name)s: %(message)s",
    )


def write_rows(rows, output=None):
    """
    Writes CSV rows to the output path, or to stdout when none is given.
    """
    if output:
        emit_csv(rows, output)
    else:
        sys.stdout.write(csv_bytes(rows).decode(ENCODING))


def plot_series(path, points, **kwargs):
    PolylinePlot(points=points, **kwargs).render(path)


def policy_list(value):
    try:
        return tuple(PolicyId.parse(item) for item in value.split(",") if item.strip())
    except AoIStatException as e:
        raise argparse.ArgumentTypeError(str(e))


def policy_arg(value):
    try:
        return PolicyId.parse(value)
    except AoIStatException as e:
        raise argparse.ArgumentTypeError(str(e))


def sim_settings(settings):
    return SimSettings(
        events=settings['events'],
        replications=settings['replications'],
        seed=settings['seed'],
        warmup=settings['warmup'],
        workers=settings['workers'],
        priority=settings['priority'],
    )


def resolve_settings(args, keys):
    """
    Merges the optional config file under the flags and fills defaults.
    """
    file_settings = load_config(args.config) if getattr(args, 'config', None) else {}
    flags    = dict((key, getattr(args, key, None)) for key in keys)
    settings = merge_settings(dict((k, SWEEP_DEFAULTS[k]) for k in keys), file_settings)
    return merge_settings(settings, flags)

##########################################################################
## Command line functions
##########################################################################

def analytic(args):
    """
    Prints the ages of both sources under a source-aware policy.
    """
    loads  = LoadPoint.from_loads(args.rho1, args.rho2, args.mu)
    delta1, delta2 = source_ages(args.policy, loads, args.method)
    row    = SweepRow.from_ages(args.policy, args.rho1, args.rho2, args.mu, delta1, delta2, args.method)
    sys.stdout.write(AnalyticReport(row=row).render_string())
    return EXIT_SUCCESS


def simulate_cmd(args):
    """
    Simulates one load point and writes a single CSV row.
    """
    config = SimConfig(
        args.policy,
        LoadPoint.from_loads(args.rho1, args.rho2, args.mu),
        horizon_events=args.events,
        warmup_fraction=args.warmup,
        seed=args.seed,
        replications=args.replications,
        workers=args.workers,
        priority=args.priority,
    )

    if args.trace:
        try:
            with open(args.trace, 'wb') as stream:
                result = simulate(config, trace=TraceWriter(stream, config.policy))
        except OSError as e:
            raise WriterException("could not write '%s': %s" % (args.trace, e.strerror or e))
    else:
        result = simulate(config)

    low, high = result.sum_interval(CI_WIDTH)
    row = SweepRow.from_ages(
        config.policy, args.rho1, args.rho2, args.mu, result.delta1, result.delta2,
        Method.SIM, ci_low=low, ci_high=high, seed=config.seed,
    )
    write_rows([row], args.output)
    return EXIT_SUCCESS


def sweep(args):
    """
    Evaluates policies over a grid of ρ1 and writes the CSV rows.
    """
    settings = resolve_settings(args, SWEEP_DEFAULTS.keys())
    if settings['rho'] is None and settings['rho2'] is None:
        settings['rho'] = 1.0

    spec = SweepSpec.create(
        settings['policies'],
        rho=settings['rho'],
        rho2=settings['rho2'],
        mu=settings['mu'],
        points=settings['points'],
        margin=settings['margin'],
        span=settings['span'],
        method=settings['method'],
        sim=sim_settings(settings),
    )

    rows = run_sweep(spec)
    write_rows(rows, args.output)

    if args.summary:
        try:
            with open(args.summary, 'w', encoding='utf-8') as stream:
                json.dump(summarize(rows), stream, indent=2, sort_keys=True)
                stream.write("\n")
        except OSError as e:
            raise WriterException("could not write '%s': %s" % (args.summary, e.strerror or e))

    if args.plot:
        first  = spec.policies[0]
        points = [
            (row.rho1, getattr(row, args.plot_metric))
            for row in rows if row.policy is first and row.ok
        ]
        plot_series(args.plot, points, title="%s, %s" % (first.label, args.plot_metric),
                    xlabel="rho1", ylabel=args.plot_metric)

    failed = [row for row in rows if not row.ok]
    if failed:
        logger.error("%i of %i sweep points failed", len(failed), len(rows))
        return EXIT_FAILURE
    return EXIT_SUCCESS


def tradeoff(args):
    """
    Writes the (Δ1, Δ2) curve of one policy at a fixed total load.
    """
    keys     = ('rho', 'mu', 'points', 'margin', 'method', 'events',
                'replications', 'seed', 'warmup', 'workers', 'priority')
    settings = resolve_settings(args, keys)
    if settings['rho'] is None:
        raise ConsoleError("tradeoff needs the total load --rho")

    spec = SweepSpec.create(
        (args.policy,),
        rho=settings['rho'],
        mu=settings['mu'],
        points=settings['points'],
        margin=settings['margin'],
        method=settings['method'],
        sim=sim_settings(settings),
    )
    rows = run_sweep(spec)
    write_rows(rows, args.output)

    if args.plot:
        points = [(row.delta1, row.delta2) for row in rows if row.ok]
        plot_series(args.plot, points, title="%s at rho=%g" % (args.policy.label, settings['rho']),
                    xlabel="delta1", ylabel="delta2")

    if not all(row.ok for row in rows):
        return EXIT_FAILURE
    return EXIT_SUCCESS


def validate_cmd(args):
    """
    Runs the cross-method checks and prints the worst errors.
    """
    suite = validate()
    sys.stdout.write(ValidationReport(suite=suite).render_string())
    suite.check()
    return EXIT_SUCCESS

##########################################################################
## Argument parsing
##########################################################################

def add_load_args(parser):
    parser.add_argument('--policy', type=policy_arg, required=True, help='policy id, e.g. p2 or lcfs-s')
    parser.add_argument('--rho1', type=float, required=True, help='load of source 1')
    parser.add_argument('--rho2', type=float, required=True, help='load of source 2')
    parser.add_argument('--mu', type=float, default=1.0, help='service rate (default 1)')


def add_sim_args(parser, defaults=True):
    """
    Simulation flags; sweeps leave them unset so a config file can fill them.
    """
    default = (lambda value: value) if defaults else (lambda value: None)
    parser.add_argument('--events', type=int, default=default(DEFAULT_EVENTS), help='events per replication')
    parser.add_argument('--replications', type=int, default=default(DEFAULT_REPLICATIONS), help='independent replications')
    parser.add_argument('--seed', type=int, default=default(0), help='seed of the random streams')
    parser.add_argument('--warmup', type=float, default=default(DEFAULT_WARMUP), help='fraction of simulated time discarded')
    parser.add_argument('--workers', type=int, default=default(1), help='worker processes for replications')
    parser.add_argument('--priority', type=int, choices=(1, 2), default=default(2), help='high priority source of pp-nw and pp-ww')


def build_parser():
    parser = argparse.ArgumentParser(
        prog=PROG, description="Average age of information under source-aware packet management",
    )
    parser.add_argument('--version', action='version', version='%(prog)s ' + __version__)
    parser.add_argument('-v', '--verbose', dest='verbosity', action='store_const', const=1, default=0)
    parser.add_argument('-q', '--quiet', dest='verbosity', action='store_const', const=-1)

    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    cmd = commands.add_parser('analytic', help='closed-form or SHS ages at one load point')
    add_load_args(cmd)
    cmd.add_argument('--method', type=Method, choices=(Method.CLOSED, Method.SHS), default=Method.CLOSED,
                     help='closed or shs (default closed)')
    cmd.set_defaults(func=analytic)

    cmd = commands.add_parser('simulate', help='simulated ages at one load point as a CSV row')
    add_load_args(cmd)
    add_sim_args(cmd)
    cmd.add_argument('--output', help='CSV path (default stdout)')
    cmd.add_argument('--trace', help='write every delivery to this CSV path')
    cmd.set_defaults(func=simulate_cmd)

    cmd = commands.add_parser('sweep', help='evaluate policies over a grid of rho1')
    cmd.add_argument('--config', help='flat key = value config file')
    cmd.add_argument('--policies', type=policy_list, help='comma separated policy ids (default all)')
    cmd.add_argument('--method', type=Method, choices=tuple(Method), help='method of the source-aware policies')
    cmd.add_argument('--rho', type=float, help='fixed total load (default 1)')
    cmd.add_argument('--rho2', type=float, help='fixed load of source 2 instead of a fixed total')
    cmd.add_argument('--span', type=float, help='upper end of the rho1 range when rho2 is fixed')
    cmd.add_argument('--mu', type=float, help='service rate (default 1)')
    cmd.add_argument('--points', type=int, help='grid points (default 9)')
    cmd.add_argument('--margin', type=float, help='distance of the grid from its ends')
    add_sim_args(cmd, defaults=False)
    cmd.add_argument('--output', help='CSV path (default stdout)')
    cmd.add_argument('--summary', help='write the metric summary as JSON to this path')
    cmd.add_argument('--plot', help='SVG path for the first policy')
    cmd.add_argument('--plot-metric', choices=PLOT_METRICS, default='sum_aoi')
    cmd.set_defaults(func=sweep)

    cmd = commands.add_parser('tradeoff', help='(delta1, delta2) curve at a fixed total load')
    cmd.add_argument('--config', help='flat key = value config file')
    cmd.add_argument('--policy', type=policy_arg, required=True)
    cmd.add_argument('--rho', type=float, help='total load')
    cmd.add_argument('--mu', type=float, help='service rate (default 1)')
    cmd.add_argument('--points', type=int, help='curve points (default 9)')
    cmd.add_argument('--margin', type=float, help='distance of the grid from its ends')
    cmd.add_argument('--method', type=Method, choices=tuple(Method))
    add_sim_args(cmd, defaults=False)
    cmd.add_argument('--output', help='CSV path (default stdout)')
    cmd.add_argument('--plot', help='SVG path')
    cmd.set_defaults(func=tradeoff)

    cmd = commands.add_parser('validate', help='cross-check the engine against the closed forms')
    cmd.set_defaults(func=validate_cmd)

    return parser


def main(argv=None):
    """
    Runs one command and returns its exit code.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code

    configure_logging(args.verbosity)
    try:
        return args.func(args)
    except AoIStatException as e:
        sys.stderr.write("%s: error: %s\n" % (PROG, e))
        return e.exit_code


if __name__ == '__main__':
    sys.exit(main())
