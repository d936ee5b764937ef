# -*- coding: utf-8 -*-
from __future__ import absolute_import

import json

from django.db import models
from django.utils import timezone

from konst import Constant, Constants
from konst.models.fields import ConstantChoiceCharField


class MatchRun(models.Model):
    """
    Persist a single seeded match of two graphs and its outcome.

    The mapping and the Frank-Wolfe trace are kept as JSON text; a run that
    failed keeps its traceback in `error`.
    """

    states = Constants(
        Constant(pending="pending"),
        Constant(converged="converged"),
        Constant(max_iters="max-iters"),
        Constant(failed="failed"),
    )

    id = models.BigAutoField(primary_key=True)

    # where the graphs came from, typically file paths
    g1_source = models.TextField()
    g2_source = models.TextField()

    vertex_count = models.PositiveIntegerField(null=True, blank=True)
    seed_count = models.PositiveIntegerField(default=0)

    max_iters = models.PositiveIntegerField()
    tol_obj = models.FloatField()

    status = ConstantChoiceCharField(constants=states, max_length=12)

    objective_relaxed = models.FloatField(null=True, blank=True)
    objective_projected = models.FloatField(null=True, blank=True)
    disagreements = models.BigIntegerField(null=True, blank=True)
    iterations = models.PositiveIntegerField(null=True, blank=True)

    # [[label1, label2, is_seed], ...]
    mapping_json = models.TextField(null=True, blank=True)
    # [[iteration, objective, alpha, lap_value, residual], ...]
    trace_json = models.TextField(null=True, blank=True)

    # if processing failed, an error will appear here
    error = models.TextField(null=True, blank=True)

    created_at = models.DateTimeField(default=timezone.now)
    updated_at = models.DateTimeField(auto_now=True)

    def __str__(self):
        return "{} vs {} - {} (id={} m={})".format(
            self.g1_source, self.g2_source, self.status, self.id, self.seed_count
        )

    @property
    def mapping(self):
        if self.mapping_json:
            return json.loads(self.mapping_json)

    @property
    def trace(self):
        if self.trace_json:
            return json.loads(self.trace_json)


class SimulationTrial(models.Model):
    """One trial of a seed-count sweep, as stored under a sweep label."""

    id = models.BigAutoField(primary_key=True)

    sweep = models.CharField(max_length=64, db_index=True)

    # null for sweeps over a supplied graph pair
    c = models.PositiveIntegerField(null=True, blank=True)
    p = models.FloatField(null=True, blank=True)
    rho = models.FloatField(null=True, blank=True)
    rng_seed = models.BigIntegerField()

    m = models.PositiveIntegerField()
    trial = models.PositiveIntegerField()

    match_ratio = models.FloatField()
    chance = models.FloatField()
    disagreements = models.BigIntegerField()
    iterations = models.PositiveIntegerField()
    converged = models.BooleanField()
    ascent_ok = models.BooleanField()
    feasible = models.BooleanField()
    runtime_millis = models.FloatField()
    unseeded_match_ratio = models.FloatField(null=True, blank=True)

    created_at = models.DateTimeField(default=timezone.now)

    class Meta:
        unique_together = [("sweep", "rho", "m", "trial")]
        ordering = ["sweep", "rho", "m", "trial"]

    def __str__(self):
        return "{} rho={} m={} trial={} (ratio={:.3f})".format(
            self.sweep, self.rho, self.m, self.trial, self.match_ratio
        )
