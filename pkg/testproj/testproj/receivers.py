from django.dispatch import receiver

from seedmatch import signals


@receiver(signals.match_completed)
def handle_match_completed(sender, run, result, **kwargs):
    print("{}: matched with {} disagreements".format(run.id, result.disagreements))


@receiver(signals.sweep_stored)
def handle_sweep_stored(sender, sweep, trials, **kwargs):
    print("{}: stored {} trials".format(sweep, len(trials)))
