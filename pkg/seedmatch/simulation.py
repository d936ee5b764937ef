# -*- coding: utf-8 -*-
from __future__ import absolute_import

from collections import namedtuple
from concurrent.futures import ProcessPoolExecutor
import logging
import math
import os
import time

from django.core.exceptions import ValidationError

import numpy as np

from . import strings
from .graphs import Graph, SeedSpec, dump_correspondence, dump_edge_list, dump_seeds
from .solver import SolverConfig, match


logger = logging.getLogger(__name__)


TRIAL_FIELDS = [
    "rho",
    "m",
    "trial",
    "match_ratio",
    "chance",
    "disagreements",
    "iterations",
    "converged",
    "ascent_ok",
    "feasible",
    "runtime_millis",
    "unseeded_match_ratio",
]

# `rho` is None for sweeps over a supplied graph pair
TrialRecord = namedtuple("TrialRecord", TRIAL_FIELDS)

SUMMARY_FIELDS = [
    "rho",
    "m",
    "trials",
    "mean_match_ratio",
    "stderr_match_ratio",
    "chance",
    "mean_unseeded_match_ratio",
]

SummaryRow = namedtuple("SummaryRow", SUMMARY_FIELDS)


def _invalid(reason):
    return ValidationError(strings.config_invalid, code="config", params={"reason": reason})


class SimConfig(object):
    """
    A correlated Erdos-Renyi sweep: `trials` repetitions for every
    (rho, m) combination on graphs with `c` vertices and edge probability `p`.

    The defaults are desk-scale; `full_scale()` gives the full experiment.
    """

    def __init__(
        self,
        c=150,
        p=0.5,
        rho_values=(0.0,),
        m_values=(0,),
        trials=50,
        rng_seed=0,
        unseeded_baseline=False,
        solver=None,
    ):
        self.c = c
        self.p = p
        # repeats would rerun the same trial streams
        self.rho_values = list(dict.fromkeys(float(rho) for rho in rho_values))
        self.m_values = list(dict.fromkeys(int(m) for m in m_values))
        self.trials = trials
        self.rng_seed = rng_seed
        self.unseeded_baseline = unseeded_baseline
        self.solver = solver or SolverConfig()
        self.validate()

    @classmethod
    def full_scale(cls, **kwargs):
        defaults = dict(
            c=300,
            p=0.5,
            rho_values=[round(0.05 * i, 2) for i in range(11)],
            m_values=list(range(0, 151, 10)),
            trials=400,
        )
        defaults.update(kwargs)
        return cls(**defaults)

    def validate(self):
        if self.c < 1:
            raise _invalid("c must be at least 1")
        if not 0.0 <= self.p <= 1.0:
            raise _invalid("p must lie in [0, 1]")
        if not self.rho_values:
            raise _invalid("at least one rho is required")
        if any(not 0.0 <= rho <= 1.0 for rho in self.rho_values):
            raise _invalid("rho must lie in [0, 1]")
        if not self.m_values:
            raise _invalid("at least one seed count is required")
        if any(not 0 <= m < self.c for m in self.m_values):
            raise _invalid("every seed count must lie in [0, c - 1]")
        if self.trials < 1:
            raise _invalid("trials must be at least 1")
        if self.rng_seed < 0:
            raise _invalid("rng_seed must be nonnegative")


def trial_rng(rng_seed, rho, m, trial):
    """
    An independent PCG64 stream for one trial.

    Keyed on (rng_seed, rho, m, trial) through numpy's SeedSequence, so any
    single trial can be replayed without running the others.
    """
    rho_key = 0 if rho is None else int(round(rho * 1e6))
    return np.random.Generator(
        np.random.PCG64(np.random.SeedSequence([rng_seed, rho_key, m, trial]))
    )


# random graphs


def gen_er(c, p, rng):
    """A simple undirected Erdos-Renyi graph on labels "0".."c-1"."""
    upper = np.triu(rng.random((c, c)) < p, k=1)
    return Graph([str(i) for i in range(c)], (upper | upper.T).astype(float))


def perturb(graph, rho, rng):
    """Flip every unordered vertex pair independently with probability rho."""
    if not graph.is_simple():
        raise ValidationError(strings.graph_not_binary, code="not_binary")
    c = len(graph)
    flips = np.triu(rng.random((c, c)) < rho, k=1)
    flips = flips | flips.T
    return Graph(graph.labels, np.where(flips, 1.0 - graph.adj, graph.adj))


def plant_correspondence(graph, rng, prefix="x"):
    """
    Relabel `graph` by a uniformly random permutation.

    Vertex labels[i] becomes prefix + str(perm[i]) and sits at index perm[i]
    of the returned graph. Returns the graph and the ground truth
    {old label: new label}.
    """
    c = len(graph)
    perm = rng.permutation(c)
    inverse = np.argsort(perm)
    labels = ["{}{}".format(prefix, j) for j in range(c)]
    relabelled = Graph(labels, graph.adj[np.ix_(inverse, inverse)])
    truth = {graph.labels[i]: labels[perm[i]] for i in range(c)}
    return relabelled, truth


# evaluation


def match_ratio(result, truth, seeds):
    """Fraction of nonseed vertices mapped as the ground truth maps them."""
    for label in seeds.domain:
        if label not in truth:
            raise ValidationError(
                strings.truth_missing_label, code="truth", params={"label": label}
            )
    seeded = set(seeds.domain)
    nonseeds = [(u, v) for u, v in result.mapping if u not in seeded]
    hits = 0
    for u, v in nonseeds:
        if u not in truth:
            raise ValidationError(
                strings.truth_missing_label, code="truth", params={"label": u}
            )
        hits += truth[u] == v
    return hits / len(nonseeds)


def _unseeded_match_ratio(g1, g2, truth, seeds, solver):
    # the unseeded problem on the c - m nonseed vertices
    seeded1 = set(seeds.domain)
    seeded2 = {v for _u, v in seeds}
    sub1 = g1.subgraph([u for u in g1.labels if u not in seeded1])
    sub2 = g2.subgraph([v for v in g2.labels if v not in seeded2])
    result = match(sub1, sub2, SeedSpec(), solver)
    return match_ratio(result, truth, SeedSpec())


def _choose_seeds(g1, truth, m, rng):
    chosen = rng.choice(len(g1), size=m, replace=False)
    return SeedSpec([(g1.labels[i], truth[g1.labels[i]]) for i in chosen])


def _evaluate(g1, g2, truth, seeds, solver, unseeded_baseline, rho, m, trial):
    started = time.perf_counter()
    result = match(g1, g2, seeds, solver)
    runtime = (time.perf_counter() - started) * 1000.0
    unseeded = None
    if unseeded_baseline:
        unseeded = _unseeded_match_ratio(g1, g2, truth, seeds, solver)
    return TrialRecord(
        rho=rho,
        m=m,
        trial=trial,
        match_ratio=match_ratio(result, truth, seeds),
        chance=1.0 / (len(g1) - m),
        disagreements=result.disagreements,
        iterations=result.iterations,
        converged=result.converged,
        ascent_ok=result.log.is_ascending(),
        feasible=result.log.is_feasible(),
        runtime_millis=runtime,
        unseeded_match_ratio=unseeded,
    )


def emit_trial(directory, rho, m, trial, g1, g2, seeds, truth):
    """Write one trial's graphs, seeds and ground truth as plain text files."""
    os.makedirs(directory, exist_ok=True)
    stem = os.path.join(directory, trial_stem(rho, m, trial))
    contents = {
        "_g1.txt": dump_edge_list(g1),
        "_g2.txt": dump_edge_list(g2),
        "_seeds.txt": dump_seeds(seeds),
        "_truth.txt": dump_correspondence(truth),
    }
    for suffix, text in contents.items():
        with open(stem + suffix, "w", encoding="utf-8") as fh:
            fh.write(text)


def trial_stem(rho, m, trial):
    if rho is None:
        return "m{}_t{}".format(m, trial)
    return "rho{!r}_m{}_t{}".format(rho, m, trial)


def run_trial(cfg, rho, m, trial, emit_dir=None):
    """Generate, seed and match one correlated pair; fully determined by its key."""
    rng = trial_rng(cfg.rng_seed, rho, m, trial)
    g1 = gen_er(cfg.c, cfg.p, rng)
    g2, truth = plant_correspondence(perturb(g1, rho, rng), rng)
    seeds = _choose_seeds(g1, truth, m, rng)
    if emit_dir:
        emit_trial(emit_dir, rho, m, trial, g1, g2, seeds, truth)
    return _evaluate(g1, g2, truth, seeds, cfg.solver, cfg.unseeded_baseline, rho, m, trial)


def run_pair_trial(g1, g2, truth, m, trial, rng_seed, solver, unseeded_baseline=False):
    """Draw a random seed set of size m for a fixed pair and match it."""
    rng = trial_rng(rng_seed, None, m, trial)
    seeds = _choose_seeds(g1, truth, m, rng)
    return _evaluate(g1, g2, truth, seeds, solver, unseeded_baseline, None, m, trial)


def _run_trial_task(task):
    return run_trial(*task)


def _run_pair_trial_task(task):
    return run_pair_trial(*task)


def _execute(func, tasks, jobs):
    if jobs is None or jobs <= 1 or len(tasks) <= 1:
        return [func(task) for task in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as executor:
        chunksize = max(1, len(tasks) // (4 * jobs))
        return list(executor.map(func, tasks, chunksize=chunksize))


def sort_records(records):
    return sorted(records, key=lambda r: (-1.0 if r.rho is None else r.rho, r.m, r.trial))


def run_sweep(cfg, jobs=1, emit_dir=None):
    """
    Run every (rho, m, trial) of `cfg`, in parallel when `jobs` > 1.

    Records come back sorted by (rho, m, trial) whatever the execution order.
    """
    tasks = [
        (cfg, rho, m, trial, emit_dir)
        for rho in cfg.rho_values
        for m in cfg.m_values
        for trial in range(cfg.trials)
    ]
    started = time.perf_counter()
    records = sort_records(_execute(_run_trial_task, tasks, jobs))
    logger.info(
        "Sweep of %d trials (c=%d, p=%r) finished in %.1fs",
        len(records),
        cfg.c,
        cfg.p,
        time.perf_counter() - started,
    )
    return records


def run_pair_sweep(
    g1, g2, truth, m_values, trials, rng_seed=0, solver=None, jobs=1, unseeded_baseline=False
):
    """Seed-count sweep over a fixed graph pair with a known correspondence."""
    if len(g1) != len(g2):
        raise ValidationError(
            strings.size_mismatch,
            code="size_mismatch",
            params={"n1": len(g1), "n2": len(g2)},
        )
    for label in g1.labels:
        if label not in truth:
            raise ValidationError(
                strings.truth_missing_label, code="truth", params={"label": label}
            )
    if trials < 1:
        raise _invalid("trials must be at least 1")
    if any(not 0 <= m < len(g1) for m in m_values):
        raise _invalid("every seed count must lie in [0, c - 1]")
    solver = solver or SolverConfig()
    tasks = [
        (g1, g2, truth, m, trial, rng_seed, solver, unseeded_baseline)
        for m in m_values
        for trial in range(trials)
    ]
    return sort_records(_execute(_run_pair_trial_task, tasks, jobs))


def summarize(records):
    """Mean and standard error of the match ratio for every (rho, m)."""
    groups = {}
    for record in records:
        groups.setdefault((record.rho, record.m), []).append(record)

    rows = []
    for (rho, m), group in groups.items():
        ratios = np.array([r.match_ratio for r in group])
        stderr = float(ratios.std(ddof=1) / math.sqrt(len(ratios))) if len(ratios) > 1 else 0.0
        unseeded = [r.unseeded_match_ratio for r in group if r.unseeded_match_ratio is not None]
        rows.append(
            SummaryRow(
                rho=rho,
                m=m,
                trials=len(group),
                mean_match_ratio=float(ratios.mean()),
                stderr_match_ratio=stderr,
                chance=float(np.mean([r.chance for r in group])),
                mean_unseeded_match_ratio=float(np.mean(unseeded)) if unseeded else None,
            )
        )
    rows.sort(key=lambda r: (-1.0 if r.rho is None else r.rho, r.m))
    return rows
