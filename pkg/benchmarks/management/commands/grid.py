import csv
from pathlib import Path

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from benchmarks.harness import (
    GRID_LEVELS,
    GRID_OBJECTIVES,
    TIMING_HEADER,
    CorrectnessFailure,
    GridConfig,
    grid_sizes,
    run_grid,
    summarize_ratios,
    write_summary_csv,
)
from benchmarks.models import BenchmarkRun

from ._options import add_policy_arguments, parse_int_list, parse_range, policy_from_options


class Command(BaseCommand):
    help = 'Time the sorting algorithms over a grid of generated datasets and write a timing CSV.'

    def add_arguments(self, parser):
        parser.add_argument('--n-range', default='8:20',
                            help='Exponent range LOW:HIGH; N = floor(10^(n/4)) for each n.')
        parser.add_argument('--m', help='Comma-separated objective counts.')
        parser.add_argument('--levels', default=','.join(map(str, GRID_LEVELS)),
                            help='Comma-separated level counts (0 = uniform cube).')
        parser.add_argument('--trials', type=int, default=settings.NDS_BENCHMARK['TRIALS'])
        parser.add_argument('--algos', default='bos,dc,hybrid')
        parser.add_argument('--seed', type=int, default=settings.NDS_BENCHMARK['BASE_SEED'],
                            help='Base seed the per-dataset seeds are derived from.')
        parser.add_argument('--out', required=True, help='Timing CSV path.')
        parser.add_argument('--summary-out', help='Also write the ratio summary CSV here.')
        parser.add_argument('--full-grid', action='store_true',
                            help='Use every objective count up to 30 instead of the desk-scale cap.')
        parser.add_argument('--persist-datasets', metavar='DIR',
                            help='Write every generated dataset into DIR.')
        parser.add_argument('--store', action='store_true', help='Save the run in the database.')
        parser.add_argument('--note', default='', help='Free-text note stored with the run.')
        add_policy_arguments(parser)

    def handle(self, *args, **options):
        n_lo, n_hi = parse_range(options['n_range'], 'n-range')
        if options['m']:
            objectives = parse_int_list(options['m'], 'm')
        elif options['full_grid']:
            objectives = list(GRID_OBJECTIVES)
        else:
            cap = settings.NDS_BENCHMARK['DESK_MAX_OBJECTIVES']
            objectives = [m for m in GRID_OBJECTIVES if m <= cap]

        try:
            config = GridConfig(
                sizes=grid_sizes(n_lo, n_hi),
                objectives=objectives,
                levels=parse_int_list(options['levels'], 'levels'),
                trials=options['trials'],
                algorithms=[name.strip() for name in options['algos'].split(',') if name.strip()],
                policy=policy_from_options(options),
                base_seed=options['seed'],
                persist_dir=Path(options['persist_datasets']) if options['persist_datasets'] else None,
            )
        except ValueError as exc:
            raise CommandError(str(exc))

        out = Path(options['out'])
        with out.open('w', encoding='utf-8', newline='') as handle:
            writer = csv.writer(handle, lineterminator='\n')
            writer.writerow(TIMING_HEADER)
            try:
                rows = run_grid(config, on_row=lambda row: writer.writerow(row.as_csv_row()))
            except CorrectnessFailure as exc:
                raise CommandError(
                    f"Correctness failure, timings for this dataset were not written. "
                    f"Reproduce with: generate --n {exc.spec.n_points} --m {exc.spec.n_objectives} "
                    f"--levels {exc.spec.n_levels} --seed {exc.spec.seed}. {exc}"
                )
        self.stdout.write(self.style.SUCCESS(f"Wrote {len(rows)} timing rows to {out}"))

        if options['summary_out'] and 'dc' in config.algorithms:
            write_summary_csv(summarize_ratios(rows), options['summary_out'])
            self.stdout.write(self.style.SUCCESS(f"Wrote ratio summary to {options['summary_out']}"))
        elif options['summary_out']:
            self.stderr.write(self.style.WARNING("No ratio summary: ratios need 'dc' among --algos."))

        if options['store']:
            run = BenchmarkRun.create_from_rows(config, rows, note=options['note'])
            self.stdout.write(self.style.SUCCESS(f"Stored benchmark run {run.pk}"))
