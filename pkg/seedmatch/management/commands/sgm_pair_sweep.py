# -*- coding: utf-8 -*-
from __future__ import absolute_import

from seedmatch import export
from seedmatch.service import get_processor, get_service
from seedmatch.simulation import run_pair_sweep, summarize

from ._base import SeedmatchCommand, parse_m_values, resolve_jobs


class Command(SeedmatchCommand):
    help = (
        "Repeat random seed-set draws on a supplied graph pair with a known "
        "correspondence and write one trial CSV row per draw (rho left empty)."
    )

    def add_arguments(self, parser):
        parser.add_argument("--g1", required=True, help="Edge list of the first graph")
        parser.add_argument("--g2", required=True, help="Edge list of the second graph")
        parser.add_argument("--truth", required=True, help="Correspondence file")
        parser.add_argument("--m-values", required=True, help="Seed counts")
        parser.add_argument("--trials", type=int, default=100)
        parser.add_argument("--rng-seed", type=int, default=0)
        parser.add_argument("--symmetrize", action="store_true")
        parser.add_argument("--binarize", action="store_true")
        parser.add_argument("--unseeded-baseline", action="store_true")
        parser.add_argument("--max-iters", type=int)
        parser.add_argument("--tol", type=float)
        parser.add_argument("--jobs", type=int)
        parser.add_argument("--out")
        parser.add_argument("--summary")
        parser.add_argument("--save", metavar="LABEL")

    def run(self, **options):
        service = get_service()
        preprocess = dict(symmetrize=options["symmetrize"], binarize=options["binarize"])
        g1 = self.read_input(options["g1"], service.read_graph, **preprocess)
        g2 = self.read_input(options["g2"], service.read_graph, **preprocess)
        truth = self.read_input(options["truth"], service.read_correspondence)
        solver = service.get_solver_config(
            max_iters=options["max_iters"], tol_obj=options["tol"]
        )

        records = run_pair_sweep(
            g1,
            g2,
            truth,
            parse_m_values(options["m_values"]),
            options["trials"],
            rng_seed=options["rng_seed"],
            solver=solver,
            jobs=resolve_jobs(options["jobs"]),
            unseeded_baseline=options["unseeded_baseline"],
        )

        self.write_output(options["out"], lambda fh: export.write_trials_csv(records, fh))
        if options["summary"]:
            rows = summarize(records)
            self.write_output(
                options["summary"], lambda fh: export.write_summary_csv(rows, fh)
            )
        if options["save"]:
            get_processor().store_trials(options["save"], records, rng_seed=options["rng_seed"])
        self.stderr.write("pair sweep: {} trials".format(len(records)))
