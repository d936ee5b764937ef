from django.contrib import admin

from . import models


class MatchRunErrorSimpleListFilter(admin.SimpleListFilter):

    title = "Processing ok?"
    parameter_name = "processing_ok"

    def lookups(self, request, model_admin):
        return (
            ("true", "Yes"),
            ("false", "No"),
        )

    def queryset(self, request, queryset):
        if self.value() == "true":
            return queryset.filter(error__isnull=True)

        if self.value() == "false":
            return queryset.filter(error__isnull=False)

        return queryset


class MatchRunAdmin(admin.ModelAdmin):
    list_display = [
        "id",
        "g1_source",
        "g2_source",
        "vertex_count",
        "seed_count",
        "status",
        "disagreements",
        "iterations",
        "processing_ok",
        "created_at",
    ]
    list_filter = [MatchRunErrorSimpleListFilter, "status", "created_at"]
    search_fields = ["g1_source", "g2_source"]
    readonly_fields = ["mapping_json", "trace_json", "error"]

    def processing_ok(self, instance):
        return False if instance.error else True

    processing_ok.boolean = True


class SimulationTrialAdmin(admin.ModelAdmin):

    list_display = [
        "sweep",
        "rho",
        "m",
        "trial",
        "match_ratio",
        "chance",
        "iterations",
        "converged",
        "runtime_millis",
    ]
    list_filter = ["sweep", "converged", "rho"]
    search_fields = ["sweep"]


admin.site.register(models.MatchRun, MatchRunAdmin)
admin.site.register(models.SimulationTrial, SimulationTrialAdmin)
