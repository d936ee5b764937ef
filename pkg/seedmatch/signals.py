# -*- coding: utf-8 -*-
from __future__ import absolute_import

from django.dispatch import Signal


# fired once a persisted match run has finished; sent with `run` and `result`
match_completed = Signal()

# fired after a sweep's trial records are stored; sent with `sweep` and `trials`
sweep_stored = Signal()
