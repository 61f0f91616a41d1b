from django.core.management.base import BaseCommand, CommandError

from benchmarks.harness import MissingCellError, read_timing_csv, summarize_ratios, write_summary_csv


class Command(BaseCommand):
    help = 'Recompute the ratio summary (time / avg divide-and-conquer time per cell) from a timing CSV.'

    def add_arguments(self, parser):
        parser.add_argument('--in', dest='input', required=True, help='Timing CSV path.')
        parser.add_argument('--out', required=True, help='Summary CSV path.')

    def handle(self, *args, **options):
        try:
            summaries = summarize_ratios(read_timing_csv(options['input']))
        except MissingCellError as exc:
            raise CommandError(exc.args[0])
        except (OSError, ValueError) as exc:
            raise CommandError(str(exc))
        write_summary_csv(summaries, options['out'])
        self.stdout.write(self.style.SUCCESS(f"Wrote {len(summaries)} summary rows to {options['out']}"))
