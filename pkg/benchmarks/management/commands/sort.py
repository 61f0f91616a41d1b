from pathlib import Path

from django.core.management.base import BaseCommand, CommandError

from benchmarks.datagen import DatasetFormatError, read_dataset
from ranking.sorters import ALGORITHMS, get_sorter

from ._options import add_policy_arguments, policy_from_options


class Command(BaseCommand):
    help = 'Rank the points of a dataset file; prints one rank per line in input order.'

    def add_arguments(self, parser):
        parser.add_argument('--algo', choices=ALGORITHMS, default='hybrid')
        parser.add_argument('--in', dest='input', required=True, help='Dataset path.')
        parser.add_argument('--out', help='Write ranks to this file instead of stdout.')
        add_policy_arguments(parser)

    def handle(self, *args, **options):
        try:
            _, points = read_dataset(options['input'])
        except DatasetFormatError as exc:
            raise CommandError(str(exc))

        sorter = get_sorter(options['algo'], policy_from_options(options))
        text = ''.join(f"{rank}\n" for rank in sorter(points))
        if options['out']:
            Path(options['out']).write_text(text, encoding='utf-8')
        else:
            self.stdout.write(text, ending='')
