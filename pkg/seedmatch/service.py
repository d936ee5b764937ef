# -*- coding: utf-8 -*-
from __future__ import unicode_literals

import contextlib
import importlib
import json
import logging
import traceback

from . import graphs, models, signals, solver
from .settings import app_settings


logger = logging.getLogger(__name__)


"""
~ Caution ~

Two layers live here; keep them apart when customising.

1) MatchService
Pure matching behaviour: reading and preprocessing graphs, deriving solver
settings and running the solver. Nothing here touches the database.

2) MatchProcessor
Bookkeeping around the service: storing MatchRun and SimulationTrial rows,
recording failures and firing signals.

Both are swappable through the SEEDMATCH_SERVICE_CLASS and
SEEDMATCH_PROCESSOR_CLASS settings.
"""


class MatchService(object):
    """Encapsulate behaviour allowing easy customisation."""

    def get_solver_config(self, **overrides):
        options = dict(max_iters=app_settings.MAX_ITERS, tol_obj=app_settings.TOL_OBJ)
        options.update({k: v for k, v in overrides.items() if v is not None})
        return solver.SolverConfig(**options)

    def read_graph(self, path, symmetrize=False, binarize=False):
        with open(path, "r", encoding="utf-8") as fh:
            graph = graphs.load_edge_list(fh)
        return self.preprocess(graph, symmetrize=symmetrize, binarize=binarize)

    def read_seeds(self, path):
        if not path:
            return graphs.SeedSpec()
        with open(path, "r", encoding="utf-8") as fh:
            return graphs.load_seeds(fh)

    def read_correspondence(self, path):
        with open(path, "r", encoding="utf-8") as fh:
            return graphs.load_correspondence(fh)

    def preprocess(self, graph, symmetrize=False, binarize=False):
        # binarize first, as done for weighted connectome data
        if binarize:
            graph = graphs.binarize(graph)
        if symmetrize:
            graph = graphs.symmetrize(graph)
        return graph

    def solve(self, g1, g2, seeds, cfg=None):
        return solver.match(g1, g2, seeds, cfg or self.get_solver_config())


class MatchProcessor(object):
    """
    Store and process match runs.

    Subclass this processor to serialize runs, process asynchronously, etc.
    """

    def store_run(self, g1_source, g2_source, seeds, cfg):
        return models.MatchRun.objects.create(
            g1_source=g1_source,
            g2_source=g2_source,
            seed_count=seeds.m,
            max_iters=cfg.max_iters,
            tol_obj=cfg.tol_obj,
            status=models.MatchRun.states.pending,
        )

    def begin_processing_run(self, run, g1, g2, seeds, cfg):
        return self.process_run_and_record_errors(run, g1, g2, seeds, cfg)

    def process_run_and_record_errors(self, run, g1, g2, seeds, cfg):
        try:
            with self.acquire_run_lock(run.id):
                return self.process_run(run, g1, g2, seeds, cfg)

        except Exception:
            logger.exception(
                "Failed to process match run",
                extra=dict(
                    run_id=run.id,
                ),
            )
            run.error = traceback.format_exc()
            run.status = models.MatchRun.states.failed
            run.save(update_fields=("error", "status", "updated_at"))
            raise

    def process_run(self, run, g1, g2, seeds, cfg):
        result = get_service().solve(g1, g2, seeds, cfg)

        seeded = result.seed_labels
        run.vertex_count = len(g1)
        run.objective_relaxed = result.objective_relaxed
        run.objective_projected = result.objective_projected
        run.disagreements = result.disagreements
        run.iterations = result.iterations
        run.mapping_json = json.dumps([[u, v, u in seeded] for u, v in result.mapping])
        run.trace_json = json.dumps([list(record) for record in result.log])
        run.status = (
            models.MatchRun.states.converged
            if result.converged
            else models.MatchRun.states.max_iters
        )
        run.save()

        signals.match_completed.send(sender=models.MatchRun, run=run, result=result)
        return result

    def store_trials(self, sweep, records, rng_seed, c=None, p=None):
        """Persist TrialRecords under the label `sweep`."""
        trials = models.SimulationTrial.objects.bulk_create(
            [
                models.SimulationTrial(
                    sweep=sweep,
                    c=c,
                    p=p,
                    rng_seed=rng_seed,
                    **record._asdict(),
                )
                for record in records
            ]
        )
        signals.sweep_stored.send(
            sender=models.SimulationTrial, sweep=sweep, trials=trials
        )
        return trials

    @contextlib.contextmanager
    def acquire_run_lock(self, run_id):
        # subclass to serialize runs
        yield


def get_processor():
    cls = app_settings.PROCESSOR_CLASS
    if cls is None:
        return MatchProcessor()
    return import_attribute(cls)()


def get_service():
    cls = app_settings.SERVICE_CLASS
    if cls is None:
        return MatchService()
    return import_attribute(cls)()


def import_attribute(path):
    assert isinstance(path, str)
    pkg, attr = path.rsplit(".", 1)
    ret = getattr(importlib.import_module(pkg), attr)
    return ret
