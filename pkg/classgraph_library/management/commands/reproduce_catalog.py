from classgraph_library.management.commands.base import ClassGraphCommand
from classgraph_library.theorems import reproduce_catalog


class Command(ClassGraphCommand):
    help = 'Rebuilds the worked examples and compares their class sizes with the expected ones.'

    def add_arguments(self, parser):
        super(Command, self).add_arguments(parser)
        parser.add_argument(
            '--example',
            action='append',
            dest='examples',
            default=None,
            help='Only reproduce the named example. May be given several times.',
        )

    def run(self, config, **options):
        rows = reproduce_catalog(fixtures_dir=config['FIXTURES_DIR'], names=options['examples'])
        for row in rows:
            if options['format'] == 'json':
                self.write_json(row.to_dict())
                continue
            line = '{:<28} expected {:<28} computed {:<28} {:<13} {:<36} {} {}'.format(
                row.name,
                ' '.join(str(size) for size in row.expected),
                ' '.join(str(size) for size in row.computed),
                row.shape,
                row.case or '-',
                ' '.join('{}={}'.format(name, verdict) for name, verdict in row.verdicts.items()),
                'MATCH' if row.matches else 'MISMATCH',
            )
            if row.matches:
                self.write_success(line)
            else:
                self.write_error(line)
        mismatches = [row.name for row in rows if not row.matches]
        if mismatches:
            self.fail('Mismatched examples: {}.'.format(', '.join(mismatches)))
