# -*- coding: utf-8 -*-
from __future__ import absolute_import

from django.core.exceptions import ValidationError
from django.core.management.base import CommandError

from seedmatch import export
from seedmatch.service import get_processor, get_service
from seedmatch.simulation import match_ratio

from ._base import EXIT_INPUT, SeedmatchCommand, describe


class Command(SeedmatchCommand):
    help = (
        "Match two edge-list graphs, extending an optional seeding, and write "
        "the vertex mapping as CSV: a label1,label2,is_seed block, a blank line, "
        "then a key,value summary block (m, n, objective, objective_projected, "
        "disagreements, iterations, converged[, match_ratio])."
    )

    def add_arguments(self, parser):
        parser.add_argument("--g1", required=True, help="Edge list of the first graph")
        parser.add_argument("--g2", required=True, help="Edge list of the second graph")
        parser.add_argument("--seeds", help="Seed file of 'u v' lines (default: no seeds)")
        parser.add_argument("--truth", help="Optional ground-truth correspondence file")
        parser.add_argument("--max-iters", type=int, help="Frank-Wolfe step limit")
        parser.add_argument("--tol", type=float, help="Relative objective tolerance")
        parser.add_argument(
            "--rng-seed", type=int, help="Start from a random doubly stochastic matrix"
        )
        parser.add_argument("--symmetrize", action="store_true")
        parser.add_argument("--binarize", action="store_true")
        parser.add_argument("--out", help="Output CSV (default: standard output)")
        parser.add_argument(
            "--save", action="store_true", help="Also store the run in the database"
        )

    def run(self, **options):
        service = get_service()
        preprocess = dict(symmetrize=options["symmetrize"], binarize=options["binarize"])
        g1 = self.read_input(options["g1"], service.read_graph, **preprocess)
        g2 = self.read_input(options["g2"], service.read_graph, **preprocess)
        seeds = self.read_input(options["seeds"], service.read_seeds)
        truth = None
        if options["truth"]:
            truth = self.read_input(options["truth"], service.read_correspondence)

        cfg = service.get_solver_config(
            max_iters=options["max_iters"],
            tol_obj=options["tol"],
            rng_seed=options["rng_seed"],
        )
        try:
            if options["save"]:
                processor = get_processor()
                run = processor.store_run(options["g1"], options["g2"], seeds, cfg)
                result = processor.begin_processing_run(run, g1, g2, seeds, cfg)
            else:
                result = service.solve(g1, g2, seeds, cfg)
        except ValidationError as ve:
            raise CommandError(
                "{} vs {}: {}".format(options["g1"], options["g2"], describe(ve)),
                returncode=EXIT_INPUT,
            )

        ratio = None
        if truth is not None:
            ratio = self.read_input(
                options["truth"], lambda _path: match_ratio(result, truth, seeds)
            )

        self.write_output(
            options["out"], lambda fh: export.write_mapping_csv(result, fh, ratio=ratio)
        )
