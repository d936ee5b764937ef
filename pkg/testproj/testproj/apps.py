from django.apps import AppConfig


class TestprojConfig(AppConfig):
    name = 'testproj'

    def ready(self):
        from . import receivers  # noqa
