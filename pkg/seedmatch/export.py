# -*- coding: utf-8 -*-
from __future__ import absolute_import

import csv

from .simulation import SUMMARY_FIELDS, TRIAL_FIELDS, TrialRecord


"""
CSV layouts.

Trials: one header row (TRIAL_FIELDS) and one row per TrialRecord.

Match: two blocks separated by a blank line. The first has header
`label1,label2,is_seed` and one row per vertex of G1; the second has header
`key,value` with the summary (m, n, objective, objective_projected,
disagreements, iterations, converged and, when a ground truth was given,
match_ratio).

Floats are written with repr() so they read back exactly; booleans are
"true"/"false" and missing values are empty.
"""


MAPPING_HEADER = ["label1", "label2", "is_seed"]
SUMMARY_HEADER = ["key", "value"]

_INT_FIELDS = {"m", "trial", "disagreements", "iterations", "trials"}
_BOOL_FIELDS = {"converged", "ascent_ok", "feasible"}


def _format(value):
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _parse(name, text):
    if text == "":
        return None
    if name in _BOOL_FIELDS:
        return text == "true"
    if name in _INT_FIELDS:
        return int(text)
    return float(text)


def _writer(fh):
    return csv.writer(fh, lineterminator="\n")


def write_trials_csv(records, fh):
    writer = _writer(fh)
    writer.writerow(TRIAL_FIELDS)
    for record in records:
        writer.writerow([_format(getattr(record, name)) for name in TRIAL_FIELDS])


def read_trials_csv(fh):
    reader = csv.DictReader(fh)
    return [
        TrialRecord(**{name: _parse(name, row[name]) for name in TRIAL_FIELDS})
        for row in reader
    ]


def write_summary_csv(rows, fh):
    writer = _writer(fh)
    writer.writerow(SUMMARY_FIELDS)
    for row in rows:
        writer.writerow([_format(getattr(row, name)) for name in SUMMARY_FIELDS])


def mapping_summary(result, ratio=None):
    summary = [
        ("m", result.m),
        ("n", result.n),
        ("objective", result.objective_relaxed),
        ("objective_projected", result.objective_projected),
        ("disagreements", result.disagreements),
        ("iterations", result.iterations),
        ("converged", result.converged),
    ]
    if ratio is not None:
        summary.append(("match_ratio", ratio))
    return summary


def write_mapping_csv(result, fh, ratio=None):
    writer = _writer(fh)
    writer.writerow(MAPPING_HEADER)
    seeded = result.seed_labels
    for u, v in result.mapping:
        writer.writerow([u, v, _format(u in seeded)])
    writer.writerow([])
    writer.writerow(SUMMARY_HEADER)
    for key, value in mapping_summary(result, ratio):
        writer.writerow([key, _format(value)])


def read_mapping_csv(fh):
    """Return ([(label1, label2, is_seed)], {key: value}) from a match CSV."""
    rows = list(csv.reader(fh))
    split = rows.index([])
    mapping = [(u, v, is_seed == "true") for u, v, is_seed in rows[1:split]]
    summary = {key: value for key, value in rows[split + 2 :]}
    return mapping, summary
