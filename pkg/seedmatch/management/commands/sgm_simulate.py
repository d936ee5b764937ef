# -*- coding: utf-8 -*-
from __future__ import absolute_import

import time

from seedmatch import export
from seedmatch.service import get_processor, get_service
from seedmatch.simulation import TRIAL_FIELDS, SimConfig, run_sweep, summarize

from ._base import JOBS_ENVIRON, SeedmatchCommand, parse_m_values, resolve_jobs


class Command(SeedmatchCommand):
    help = (
        "Run a correlated Erdos-Renyi seeded matching sweep and write one CSV row "
        "per trial, sorted by (rho, m, trial). Columns: {}. Workers default to "
        "${} when set, otherwise the machine's CPU count.".format(
            ",".join(TRIAL_FIELDS), JOBS_ENVIRON
        )
    )

    def add_arguments(self, parser):
        parser.add_argument("--c", type=int, help="Vertices per graph (default 150)")
        parser.add_argument("--p", type=float, help="Edge probability (default 0.5)")
        parser.add_argument(
            "--rho",
            type=float,
            action="append",
            help="Perturbation parameter; repeat for a sweep (default 0)",
        )
        parser.add_argument(
            "--m-values", help="Seed counts, e.g. '0,10,20' or '0:150:10' (default 0)"
        )
        parser.add_argument("--trials", type=int, help="Trials per (rho, m) (default 50)")
        parser.add_argument("--rng-seed", type=int, default=0, help="Master seed")
        parser.add_argument(
            "--full-scale",
            action="store_true",
            help="c=300, 400 trials, rho 0..0.5 by 0.05, m 0..150 by 10",
        )
        parser.add_argument(
            "--unseeded-baseline",
            action="store_true",
            help="Also match the nonseed subgraphs without seeds",
        )
        parser.add_argument("--max-iters", type=int, help="Frank-Wolfe step limit")
        parser.add_argument("--tol", type=float, help="Relative objective tolerance")
        parser.add_argument("--jobs", type=int, help="Worker processes")
        parser.add_argument("--out", help="Trial CSV (default: standard output)")
        parser.add_argument("--summary", help="Write mean/stderr per (rho, m) here")
        parser.add_argument(
            "--emit-graphs", help="Directory for per-trial edge lists, seeds and truth"
        )
        parser.add_argument("--save", metavar="LABEL", help="Store trials under LABEL")

    def run(self, **options):
        overrides = {
            "c": options["c"],
            "p": options["p"],
            "rho_values": options["rho"],
            "trials": options["trials"],
        }
        if options["m_values"] is not None:
            overrides["m_values"] = parse_m_values(options["m_values"])
        kwargs = {k: v for k, v in overrides.items() if v is not None}
        kwargs["rng_seed"] = options["rng_seed"]
        kwargs["unseeded_baseline"] = options["unseeded_baseline"]
        kwargs["solver"] = get_service().get_solver_config(
            max_iters=options["max_iters"], tol_obj=options["tol"]
        )
        if options["full_scale"]:
            cfg = SimConfig.full_scale(**kwargs)
        else:
            cfg = SimConfig(**kwargs)
        jobs = resolve_jobs(options["jobs"])

        started = time.perf_counter()
        records = run_sweep(cfg, jobs=jobs, emit_dir=options["emit_graphs"])

        self.write_output(options["out"], lambda fh: export.write_trials_csv(records, fh))
        if options["summary"]:
            rows = summarize(records)
            self.write_output(
                options["summary"], lambda fh: export.write_summary_csv(rows, fh)
            )
        if options["save"]:
            get_processor().store_trials(
                options["save"], records, rng_seed=cfg.rng_seed, c=cfg.c, p=cfg.p
            )

        self.stderr.write(
            "sweep: {} trials, c={}, rho={}, m={}, {} jobs, {:.1f}s".format(
                len(records),
                cfg.c,
                cfg.rho_values,
                cfg.m_values,
                jobs,
                time.perf_counter() - started,
            )
        )
