# Generated by Django 3.2 on 2026-10-17 09:12

from django.db import migrations, models
import django.utils.timezone

import konst.models.fields


class Migration(migrations.Migration):

    initial = True

    dependencies = []

    operations = [
        migrations.CreateModel(
            name="MatchRun",
            fields=[
                ("id", models.BigAutoField(primary_key=True, serialize=False)),
                ("g1_source", models.TextField()),
                ("g2_source", models.TextField()),
                ("vertex_count", models.PositiveIntegerField(blank=True, null=True)),
                ("seed_count", models.PositiveIntegerField(default=0)),
                ("max_iters", models.PositiveIntegerField()),
                ("tol_obj", models.FloatField()),
                (
                    "status",
                    konst.models.fields.ConstantChoiceCharField(
                        choices=[
                            ("pending", "pending"),
                            ("converged", "converged"),
                            ("max-iters", "max-iters"),
                            ("failed", "failed"),
                        ],
                        max_length=12,
                    ),
                ),
                ("objective_relaxed", models.FloatField(blank=True, null=True)),
                ("objective_projected", models.FloatField(blank=True, null=True)),
                ("disagreements", models.BigIntegerField(blank=True, null=True)),
                ("iterations", models.PositiveIntegerField(blank=True, null=True)),
                ("mapping_json", models.TextField(blank=True, null=True)),
                ("trace_json", models.TextField(blank=True, null=True)),
                ("error", models.TextField(blank=True, null=True)),
                ("created_at", models.DateTimeField(default=django.utils.timezone.now)),
                ("updated_at", models.DateTimeField(auto_now=True)),
            ],
        ),
        migrations.CreateModel(
            name="SimulationTrial",
            fields=[
                ("id", models.BigAutoField(primary_key=True, serialize=False)),
                ("sweep", models.CharField(db_index=True, max_length=64)),
                ("c", models.PositiveIntegerField(blank=True, null=True)),
                ("p", models.FloatField(blank=True, null=True)),
                ("rho", models.FloatField(blank=True, null=True)),
                ("rng_seed", models.BigIntegerField()),
                ("m", models.PositiveIntegerField()),
                ("trial", models.PositiveIntegerField()),
                ("match_ratio", models.FloatField()),
                ("chance", models.FloatField()),
                ("disagreements", models.BigIntegerField()),
                ("iterations", models.PositiveIntegerField()),
                ("converged", models.BooleanField()),
                ("ascent_ok", models.BooleanField()),
                ("feasible", models.BooleanField()),
                ("runtime_millis", models.FloatField()),
                ("unseeded_match_ratio", models.FloatField(blank=True, null=True)),
                ("created_at", models.DateTimeField(default=django.utils.timezone.now)),
            ],
            options={
                "ordering": ["sweep", "rho", "m", "trial"],
                "unique_together": {("sweep", "rho", "m", "trial")},
            },
        ),
    ]
