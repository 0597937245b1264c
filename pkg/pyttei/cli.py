"""Command line interface

::

    pyttei run --config experiment.toml [--trajectories out.ndjson]
    pyttei table1 [--trials 100] [--workers 4]
    pyttei table2 [--trials 200] [--workers 4]
    pyttei proportions --means 5 4 3 2 1 [--sigma2 1] [--beta 0.5]
    pyttei diagnose --config experiment.toml [--epsilon 0.05]

Reports go to stdout. On failure a JSON record
``{"error": ..., "message": ...}`` is written to stderr and the exit code
is 2.
"""
import argparse
import dataclasses
import json
import sys

from . import experiment as xp
from . import reports
from .proportions import solve_proportions, solve_optimal_beta
from .tools.utils import perturb_duplicates

def _add_common(parser):
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='verbosity, repeat for more')
    parser.add_argument('--workers', type=int, default=None,
                        help='number of worker processes')

def build_parser():
    parser = argparse.ArgumentParser(
        prog='pyttei',
        description='Best-arm identification with top-two expected '
                    'improvement')
    sub = parser.add_subparsers(dest='command', required=True)

    run = sub.add_parser('run', help='run one experiment, CSV to stdout')
    run.add_argument('--config', required=True,
                     help='experiment configuration (.json or .toml)')
    run.add_argument('--trajectories', default=None,
                     help='write the recorded trajectories (NDJSON) there')
    _add_common(run)

    for kind in (1, 2):
        c, trials = xp.table_settings[kind]
        table = sub.add_parser(
            'table%d' % kind,
            help='benchmark table %d (c=%g, %d trials)' % (kind, c, trials))
        table.add_argument('--trials', type=int, default=trials)
        table.add_argument('--base-seed', type=int, default=0)
        table.add_argument('--horizon-cap', type=int, default=10**6)
        table.add_argument('--csv', action='store_true',
                           help='CSV report instead of the text table')
        _add_common(table)

    prop = sub.add_parser('proportions',
                          help='optimal proportions and complexities')
    prop.add_argument('--means', type=float, nargs='+', required=True)
    prop.add_argument('--sigma2', type=float, default=1.)
    prop.add_argument('--beta', type=float, default=0.5)

    diag = sub.add_parser('diagnose',
                          help='long-horizon convergence diagnostics')
    diag.add_argument('--config', required=True)
    diag.add_argument('--epsilon', type=float, default=0.05)
    diag.add_argument('--window', type=float, default=0.5)
    _add_common(diag)
    return parser

def _with_workers(config, args):
    if args.workers is not None:
        return dataclasses.replace(config, workers=args.workers)
    return config

def cmd_run(args, out):
    config = _with_workers(reports.load_config(args.config), args)
    if args.trajectories:
        config = dataclasses.replace(config, record_trajectory=True)
    results = xp.run_trials(config, args.verbose)
    report = xp.summarize(config, results, args.verbose)
    reports.write_csv([report], out)
    if args.trajectories:
        with open(args.trajectories, 'w') as f:
            n = reports.write_ndjson(results, f)
        if args.verbose:
            print("%d trajectory records written to %s"
                  % (n, args.trajectories), file=sys.stderr)

def cmd_table(kind, args, out):
    rows = xp.run_table(kind, trials=args.trials, base_seed=args.base_seed,
                        workers=args.workers or 1,
                        horizon_cap=args.horizon_cap, verbose=args.verbose)
    if args.csv:
        reports.write_csv(rows, out)
    else:
        out.write(reports.format_table(rows) + '\n')

def cmd_proportions(args, out):
    means = perturb_duplicates(args.means)
    w, gamma_beta = solve_proportions(means, args.sigma2, args.beta)
    summary = solve_optimal_beta(means, args.sigma2, args.beta)
    json.dump({'beta': args.beta, 'w_beta': w.tolist(),
               'gamma_beta': gamma_beta, 'beta_star': summary.beta_star,
               'gamma_star': summary.gamma_star,
               'w_star': summary.w_star.tolist()}, out, indent=2)
    out.write('\n')

def cmd_diagnose(args, out):
    config = _with_workers(reports.load_config(args.config), args)
    result = xp.diagnose(config, args.epsilon, args.window, args.verbose)
    result['report'] = dataclasses.asdict(result['report'])
    json.dump(result, out, indent=2)
    out.write('\n')

def main(argv=None, out=None, err=None):
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    args = build_parser().parse_args(argv)
    try:
        if args.command == 'run':
            cmd_run(args, out)
        elif args.command == 'table1':
            cmd_table(1, args, out)
        elif args.command == 'table2':
            cmd_table(2, args, out)
        elif args.command == 'proportions':
            cmd_proportions(args, out)
        else:
            cmd_diagnose(args, out)
    except Exception as exc:
        err.write(json.dumps({'error': exc.__class__.__name__,
                              'message': str(exc)}) + '\n')
        return 2
    return 0

if __name__ == '__main__':
    sys.exit(main())
