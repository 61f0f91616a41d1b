from django.core.validators import MinValueValidator
from django.db import models, transaction

from ranking.hybrid import DInterpretation, SwitchPolicy
from ranking.sorters import ALGORITHM_CHOICES

from .harness import GridConfig, TimingRow


class BenchmarkRun(models.Model):
    created_at = models.DateTimeField(auto_now_add=True)
    trials = models.PositiveIntegerField(validators=[MinValueValidator(1)])
    base_seed = models.PositiveBigIntegerField(default=0)
    algorithms = models.CharField(
        max_length=64,
        help_text="Comma-separated algorithm ids, e.g. 'bos,dc,hybrid'."
    )
    switch_enabled = models.BooleanField(default=True)
    c_left = models.FloatField(default=1.0)
    c_right = models.FloatField(default=150.0)
    exponent = models.FloatField(default=0.9)
    offset = models.FloatField(default=1.5)
    d_interpretation = models.CharField(
        max_length=1,
        choices=[(choice.value, choice.name.lower()) for choice in DInterpretation],
        default=DInterpretation.SUBPROBLEM.value,
    )
    note = models.CharField(max_length=200, blank=True)

    class Meta:
        ordering = ['-created_at']

    def __str__(self):
        return f"Run {self.pk} ({self.algorithms}, {self.trials} trials)"

    @property
    def algorithm_list(self):
        return [name for name in self.algorithms.split(',') if name]

    @property
    def policy(self):
        """The switch policy the hybrid ran with."""
        return SwitchPolicy(
            c_left=self.c_left,
            c_right=self.c_right,
            exponent=self.exponent,
            offset=self.offset,
            d_interpretation=self.d_interpretation,
            enabled=self.switch_enabled,
        )

    @classmethod
    def create_from_rows(cls, config: GridConfig, rows, note=''):
        """Persist a finished grid run together with its timing rows."""
        policy = config.policy
        with transaction.atomic():
            run = cls.objects.create(
                trials=config.trials,
                base_seed=config.base_seed,
                algorithms=','.join(config.algorithms),
                switch_enabled=policy.enabled,
                c_left=policy.c_left,
                c_right=policy.c_right,
                exponent=policy.exponent,
                offset=policy.offset,
                d_interpretation=policy.d_interpretation.value,
                note=note,
            )
            TimingResult.objects.bulk_create([
                TimingResult(
                    run=run,
                    n_points=row.n_points,
                    n_objectives=row.n_objectives,
                    n_levels=row.n_levels,
                    trial=row.trial,
                    algorithm=row.algorithm,
                    time_ns=row.time_ns,
                    checksum=row.checksum,
                )
                for row in rows
            ])
        return run

    def timing_rows(self):
        return [result.as_row() for result in self.timings.all()]


class TimingResult(models.Model):
    run = models.ForeignKey(
        BenchmarkRun,
        on_delete=models.CASCADE,
        related_name='timings'
    )
    n_points = models.PositiveIntegerField()
    n_objectives = models.PositiveSmallIntegerField(validators=[MinValueValidator(2)])
    n_levels = models.PositiveSmallIntegerField()
    trial = models.PositiveIntegerField()
    algorithm = models.CharField(max_length=16, choices=ALGORITHM_CHOICES)
    time_ns = models.PositiveBigIntegerField()
    checksum = models.CharField(max_length=16)

    class Meta:
        ordering = ['n_points', 'n_objectives', 'n_levels', 'trial', 'algorithm']
        unique_together = ['run', 'n_points', 'n_objectives', 'n_levels', 'trial', 'algorithm']
        indexes = [
            models.Index(fields=['run', 'n_points', 'n_objectives', 'n_levels']),
            models.Index(fields=['algorithm']),
        ]

    def __str__(self):
        return f"{self.algorithm} N={self.n_points} M={self.n_objectives} L={self.n_levels} #{self.trial}"

    def as_row(self):
        return TimingRow(
            self.n_points, self.n_objectives, self.n_levels, self.trial,
            self.algorithm, self.time_ns, self.checksum,
        )
