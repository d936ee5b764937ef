#!/usr/bin/env python
"""Command-line entry point: `python testproj/manage.py sgm_match --help`."""
import os
import sys


if __name__ == '__main__':
    # allow running from a checkout without installing seedmatch
    sys.path.insert(1, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'testproj.settings')
    try:
        from django.core.management import execute_from_command_line
    except ImportError as exc:
        raise ImportError(
            "Couldn't import Django. Is it installed and available on your "
            "PYTHONPATH? Try `pip install -e .` from the repository root."
        ) from exc
    execute_from_command_line(sys.argv)
