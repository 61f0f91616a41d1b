from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from benchmarks.datagen import DatasetFormatError, read_dataset
from benchmarks.harness import (
    SolverMismatchError,
    bos_favoured_band,
    compare_switch_bounds,
    record_subproblems,
    time_recorded_subproblems,
    write_bounds_csv,
    write_subproblem_csv,
)

from ._options import add_policy_arguments, policy_from_options


class Command(BaseCommand):
    help = ('Record the divide-and-conquer subproblems of a dataset and time both '
            'subproblem solvers on each of them.')

    def add_arguments(self, parser):
        parser.add_argument('--in', dest='input', required=True, help='Dataset path.')
        parser.add_argument('--out', required=True, help='Subproblem timing CSV path.')
        parser.add_argument('--bounds-out', help='CSV of the per-m favoured sizes next to the switch interval.')
        parser.add_argument('--repeats', type=int, default=settings.NDS_BENCHMARK['SUBPROBLEM_REPEATS'],
                            help='Timed replays per solver and subproblem; the median is reported.')
        add_policy_arguments(parser)

    def handle(self, *args, **options):
        policy = policy_from_options(options)
        try:
            spec, points = read_dataset(options['input'])
        except DatasetFormatError as exc:
            raise CommandError(str(exc))

        recording = record_subproblems(points)
        try:
            rows = time_recorded_subproblems(recording, options['repeats'])
        except SolverMismatchError as exc:
            raise CommandError(f"Correctness failure on {spec}: {exc}")
        write_subproblem_csv(rows, options['out'])
        self.stdout.write(self.style.SUCCESS(f"Wrote {len(rows)} subproblem timings to {options['out']}"))

        band = bos_favoured_band(rows)
        if band is None:
            self.stdout.write("Best Order Sort was not faster on any subproblem size.")
        else:
            self.stdout.write(f"Best Order Sort favoured for subproblem sizes {band[0]}..{band[1]} "
                              f"(dataset size {len(points)}).")

        bounds = compare_switch_bounds(rows, policy, points.n_objectives)
        for row in bounds:
            observed = 'none' if row.n_lo is None else f"{row.n_lo}..{row.n_hi}"
            self.stdout.write(f"m={row.m}: favoured {observed}, switch interval {row.n_min:.1f}..{row.n_max:.1f}")
        if options['bounds_out']:
            write_bounds_csv(bounds, options['bounds_out'])
            self.stdout.write(f"Wrote {len(bounds)} bound comparisons to {options['bounds_out']}")
