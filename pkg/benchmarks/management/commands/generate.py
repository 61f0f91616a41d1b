from pathlib import Path

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from benchmarks.datagen import DatasetSpec, InfeasibleSpecError, generate, write_dataset


class Command(BaseCommand):
    help = 'Generate a seeded benchmark dataset file.'

    def add_arguments(self, parser):
        parser.add_argument('--n', type=int, required=True, help='Number of points.')
        parser.add_argument('--m', type=int, required=True, help='Number of objectives.')
        parser.add_argument('--levels', type=int, default=0,
                            help='Number of non-domination levels (0 = uniform cube).')
        parser.add_argument('--seed', type=int, default=0)
        parser.add_argument('--out', help='Output dataset path; defaults to a file named after N, M, L and seed '
                                          'in the NDS_BENCHMARK DATASET_DIR.')

    def handle(self, *args, **options):
        try:
            spec = DatasetSpec(options['n'], options['m'], options['levels'], options['seed'])
        except InfeasibleSpecError as exc:
            raise CommandError(str(exc))

        out = options['out'] or Path(settings.NDS_BENCHMARK['DATASET_DIR']) / spec.file_name
        path = write_dataset(out, spec, generate(spec))
        self.stdout.write(self.style.SUCCESS(f"Wrote {spec} to {path}"))
