import json

from django.core.management.base import BaseCommand, CommandError

from classgraph_library.constructions import build, parse_group_source
from classgraph_library.exceptions import ClassGraphException, SelectorError
from classgraph_library.settings_helpers import classgraph_config, validate_config
from classgraph_library.theorems import labelled_normal_subgroups

GROUP_HELP = (
    'A group file (JSON with "degree" and "generators") or a builtin spec such as '
    'builtin:gl23, builtin:dihedral:8 or builtin:sl23*cyclic:2. Families: cyclic:n, '
    'dihedral:order, dicyclic:order, quaternion:order, symmetric:n, alternating:n, '
    'elementary_abelian:p:k, affine:p:n, affine_field:p:n, semilinear:p:n:s[:f], '
    'frobenius:p:q, extraspecial:p, extraspecial_holomorph:p, sl23, gl23, '
    'semidirect_cyclic:n:m:r, fixture:name.'
)


class ClassGraphCommand(BaseCommand):
    """
    Shared options and error mapping: bad input, configuration and selection
    problems exit with status 2, failed checks or mismatches with status 1.
    """
    formats = ('text', 'json')

    def add_arguments(self, parser):
        parser.add_argument(
            '--format',
            action='store',
            dest='format',
            default='text',
            choices=self.formats,
            help='Output format. Defaults to "text".',
        )
        parser.add_argument(
            '--fixtures-dir',
            action='store',
            dest='fixtures_dir',
            default=None,
            help='Directory holding the fixture group files. Overrides CLASSGRAPH_FIXTURES_DIR.',
        )

    def get_config(self, options):
        config = classgraph_config()
        if options.get('fixtures_dir'):
            config['FIXTURES_DIR'] = options['fixtures_dir']
        return validate_config(config)

    def handle(self, *args, **options):
        try:
            config = self.get_config(options)
            self.run(config, **options)
        except ClassGraphException as e:
            raise CommandError(str(e), returncode=2)

    def run(self, config, **options):
        raise NotImplementedError

    def write_json(self, data):
        self.stdout.write(json.dumps(data, sort_keys=True))

    def write_success(self, message):
        self.stdout.write(getattr(self.style, 'SUCCESS', lambda a: a)(message))

    def write_error(self, message):
        self.stdout.write(getattr(self.style, 'ERROR', lambda a: a)(message))

    def fail(self, message):
        raise CommandError(message, returncode=1)


def load_group(source, config):
    return build(parse_group_source(source), fixtures_dir=config['FIXTURES_DIR'])


def select_normal_subgroups(built, selector):
    """
    Resolves `all`, `order:<n>` or a subgroup name into (label, N) pairs.
    """
    labelled = labelled_normal_subgroups(built.group, built.normals)
    if selector == 'all':
        return labelled
    if selector.startswith('order:'):
        try:
            order = int(selector[len('order:'):])
        except ValueError:
            raise SelectorError('{!r} is not a valid order selector.'.format(selector))
        selected = [(label, N) for label, N in labelled if N.order == order]
        if not selected:
            raise SelectorError('{} has no normal subgroup of order {}.'.format(built.group.name, order))
        return selected
    if selector not in built.normals:
        known = ', '.join(['all', 'order:<n>'] + sorted(built.normals))
        raise SelectorError('Unknown normal subgroup {!r}; use one of {}.'.format(selector, known))
    N = built.normals[selector]
    return [(selector, N)]
