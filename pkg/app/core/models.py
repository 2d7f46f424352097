"""
Database Models
"""

from django.db import models


class SolveRun(models.Model):
    """Outcome and timings of one pure or hybrid search."""

    class Method(models.TextChoices):
        PURE = 'pure'
        HYBRID = 'hybrid'

    class Status(models.TextChoices):
        SAT = 'sat'
        UNSAT = 'unsat'
        TIMEOUT = 'timeout'

    created = models.DateTimeField(auto_now_add=True)
    method = models.CharField(max_length=8, choices=Method.choices)
    order = models.PositiveSmallIntegerField()
    # Pair type preset or profile label; blank for unrestricted searches
    pair_type = models.CharField(max_length=64, blank=True)
    cardinality = models.CharField(max_length=16, default='pairwise')
    seed = models.PositiveIntegerField(default=0)
    status = models.CharField(max_length=8, choices=Status.choices)
    total_s = models.FloatField(default=0.0)
    sat_s = models.FloatField(default=0.0)
    ep1_s = models.FloatField(default=0.0)
    ep2_s = models.FloatField(default=0.0)
    ep_calls = models.PositiveIntegerField(default=0)
    conflicts = models.PositiveIntegerField(default=0)
    restarts = models.PositiveIntegerField(default=0)
    blocked_squares = models.PositiveIntegerField(default=0)
    # Square files as written by latin.formats; blank unless sat
    square = models.TextField(blank=True)
    mate = models.TextField(blank=True)

    class Meta:
        ordering = ['-created', '-id']

    def __str__(self):
        label = f'{self.method} n={self.order}'
        if self.pair_type:
            label += f' {self.pair_type}'
        return f'{label} seed={self.seed}: {self.status}'
