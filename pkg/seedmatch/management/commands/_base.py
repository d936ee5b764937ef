# -*- coding: utf-8 -*-
from __future__ import absolute_import

import io
import logging
import os

from django.core.exceptions import ValidationError
from django.core.management.base import BaseCommand, CommandError

from seedmatch import strings
from seedmatch.settings import app_settings


logger = logging.getLogger(__name__)


# exit codes: 0 success, 2 bad usage or input, 1 anything unexpected
EXIT_INPUT = 2
EXIT_INTERNAL = 1

JOBS_ENVIRON = "SEEDMATCH_JOBS"


def describe(error):
    return "; ".join(error.messages)


def parse_m_values(text):
    """
    Parse seed counts such as "0,5,10" or "0:150:10" (stop inclusive).

    Ranges and single values may be mixed; duplicates are dropped.
    """
    values = []
    try:
        for token in text.split(","):
            token = token.strip()
            if ":" in token:
                parts = [int(part) for part in token.split(":")]
                if len(parts) == 2:
                    parts.append(1)
                start, stop, step = parts
                if step <= 0:
                    raise ValueError(token)
                values.extend(range(start, stop + 1, step))
            else:
                values.append(int(token))
    except ValueError:
        raise ValidationError(
            strings.m_values_invalid, code="config", params={"text": text}
        )
    if not values:
        raise ValidationError(strings.m_values_invalid, code="config", params={"text": text})
    return list(dict.fromkeys(values))


def resolve_jobs(jobs):
    """--jobs, else $SEEDMATCH_JOBS, else SEEDMATCH_JOBS setting, else CPU count."""
    source = "--jobs"
    if jobs is None and os.environ.get(JOBS_ENVIRON):
        source, jobs = JOBS_ENVIRON, os.environ[JOBS_ENVIRON]
    if jobs is None:
        jobs = app_settings.JOBS
    if jobs is None:
        return os.cpu_count() or 1
    try:
        jobs = int(jobs)
    except ValueError:
        jobs = 0
    if jobs < 1:
        raise CommandError(
            "{} must be a positive integer".format(source), returncode=EXIT_INPUT
        )
    return jobs


class SeedmatchCommand(BaseCommand):
    """
    Translate failures into exit codes.

    Subclasses implement `run`; validation problems exit with 2 and anything
    unexpected is logged and exits with 1.
    """

    def handle(self, *args, **options):
        try:
            self.run(**options)
        except CommandError:
            raise
        except ValidationError as ve:
            raise CommandError(describe(ve), returncode=EXIT_INPUT)
        except Exception as e:
            logger.exception("Command failed", extra=dict(command=self.__module__))
            raise CommandError("Internal error: {}".format(e), returncode=EXIT_INTERNAL)

    def run(self, **options):
        raise NotImplementedError

    def read_input(self, path, reader, *args, **kwargs):
        try:
            return reader(path, *args, **kwargs)
        except ValidationError as ve:
            raise CommandError("{}: {}".format(path, describe(ve)), returncode=EXIT_INPUT)
        except UnicodeDecodeError as ude:
            message = strings.file_not_utf8 % dict(position=ude.start)
            raise CommandError("{}: {}".format(path, message), returncode=EXIT_INPUT)
        except OSError as oe:
            raise CommandError(
                "{}: {}".format(path, oe.strerror or oe), returncode=EXIT_INPUT
            )

    def write_output(self, path, render):
        """Call render(fh) on the file at `path`, or on standard output."""
        if not path:
            buffer = io.StringIO()
            render(buffer)
            self.stdout.write(buffer.getvalue(), ending="")
            return
        try:
            with open(path, "w", encoding="utf-8", newline="") as fh:
                render(fh)
        except OSError as oe:
            raise CommandError(
                "{}: {}".format(path, oe.strerror or oe), returncode=EXIT_INPUT
            )
