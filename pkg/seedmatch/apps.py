# -*- coding: utf-8 -*-
from __future__ import unicode_literals

from django.apps import AppConfig


class SeedmatchConfig(AppConfig):
    name = "seedmatch"
    verbose_name = "Seeded graph matching"
    default_auto_field = "django.db.models.BigAutoField"
