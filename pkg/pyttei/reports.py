"""Reading experiment configurations and writing reports

* configurations: JSON (``.json``) or TOML (``.toml``) files, see
  :py:meth:`pyttei.experiment.ExperimentConfig.from_dict` for the keys,
* aggregate reports: CSV with the columns of :py:data:`csv_columns`,
* trajectories: newline-delimited JSON, one object per recorded pull with
  the keys of :py:data:`trajectory_keys`.
"""
import csv
import json
import os
import tomllib

import numpy as np

from .experiment import ExperimentConfig

csv_columns = ['instance_id', 'policy', 'stop', 'trials', 'mean_samples',
               'stderr', 'error_rate', 'censored']
trajectory_keys = ['trial', 'seed', 'step', 'chosen', 'alpha_best',
                   'log_tail', 'z', 'counts', 'means']

def read_config_dict(path):
    ext = os.path.splitext(path)[1].lower()
    if ext == '.json':
        with open(path) as f:
            return json.load(f)
    if ext == '.toml':
        with open(path, 'rb') as f:
            return tomllib.load(f)
    raise ValueError("configuration files should be .json or .toml, got %s"
                     % path)

def load_config(path):
    """:py:class:`~pyttei.experiment.ExperimentConfig` read from ``path``
    """
    return ExperimentConfig.from_dict(read_config_dict(path))

def _cell(value):
    if isinstance(value, float):
        if np.isnan(value):
            return 'nan'
        return '%.6g' % value
    return value

def write_csv(reports, stream):
    """one row per :py:class:`~pyttei.experiment.AggregateReport`"""
    writer = csv.DictWriter(stream, fieldnames=csv_columns,
                            lineterminator='\n')
    writer.writeheader()
    for report in reports:
        writer.writerow({key: _cell(value)
                         for key, value in report.to_row().items()})

def trajectory_lines(results):
    """NDJSON lines of the recorded trajectories of ``results``"""
    for result in results:
        if result.trajectory is None:
            continue
        for record in result.trajectory:
            line = {'trial': result.trial_index, 'seed': result.seed}
            line.update(record)
            yield json.dumps({key: line[key] for key in trajectory_keys})

def write_ndjson(results, stream):
    n = 0
    for line in trajectory_lines(results):
        stream.write(line + '\n')
        n += 1
    return n

def read_ndjson(stream):
    """trajectories grouped by trial: ``{trial: [record, ...]}``"""
    out = {}
    for line in stream:
        line = line.strip()
        if line:
            record = json.loads(line)
            out.setdefault(record['trial'], []).append(record)
    return out

def format_table(reports, columns=None):
    """text table: one row per instance, one column per policy, cells are
    mean numbers of samples (censored trials marked with ``*``)"""
    if columns is None:
        columns = []
        for r in reports:
            if r.policy not in columns:
                columns.append(r.policy)
    rows = []
    for r in reports:
        if r.instance_id not in rows:
            rows.append(r.instance_id)
    cells = {(r.instance_id, r.policy): r for r in reports}
    width = max([len(row) for row in rows] + [8])
    lines = [' ' * width + ''.join('%12s' % c for c in columns)]
    for row in rows:
        line = '%-*s' % (width, row)
        for c in columns:
            r = cells.get((row, c))
            if r is None:
                line += '%12s' % '-'
            else:
                mark = '*' if r.censored else ''
                line += '%12s' % ('%.2f%s' % (r.mean_samples, mark))
        lines.append(line)
    return '\n'.join(lines)
