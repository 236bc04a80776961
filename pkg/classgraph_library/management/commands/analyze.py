from classgraph_library.classes import build_gamma, to_dot
from classgraph_library.constants import Verdicts
from classgraph_library.constructions import write_group
from classgraph_library.management.commands.base import GROUP_HELP, ClassGraphCommand, load_group, select_normal_subgroups
from classgraph_library.theorems import audit_pair


class Command(ClassGraphCommand):
    help = 'Computes the G-classes inside normal subgroups of a group, the shape of their graph and the audit verdicts.'
    formats = ('text', 'json', 'dot')

    def add_arguments(self, parser):
        super(Command, self).add_arguments(parser)
        parser.add_argument('--group', action='store', dest='group', required=True, help=GROUP_HELP)
        parser.add_argument(
            '--normal',
            action='store',
            dest='normal',
            default='all',
            help='Which normal subgroups to analyze: "all", "order:<n>" or a subgroup name. Defaults to "all".',
        )
        parser.add_argument(
            '--save',
            action='store',
            dest='save',
            default=None,
            help='Also write the group and its named normal subgroups to this group file.',
        )

    def run(self, config, **options):
        built = load_group(options['group'], config)
        G = built.group
        if options.get('save'):
            write_group(options['save'], G, built.normals)
        failed = []
        for label, N in select_normal_subgroups(built, options['normal']):
            if options['format'] == 'dot':
                self.stdout.write(to_dot(build_gamma(G, N), name='gamma'), ending='')
                continue
            report = audit_pair(G, N, label)
            failed.extend(check.check for check in report.failed)
            if options['format'] == 'json':
                self.write_json(report.to_dict())
            else:
                self.write_report(report)
        if failed:
            self.fail('Failed checks: {}.'.format(', '.join(failed)))

    def write_report(self, report):
        self.stdout.write('{} / {} (order {})'.format(report.group_name, report.n_description, report.n_order))
        self.stdout.write('  class sizes: {}'.format(' '.join(str(size) for size in report.class_sizes)))
        self.stdout.write('  shape: {} ({} vertices, {} edges, {} triangles, {} components)'.format(
            report.shape.tag, report.shape.vertices, report.shape.edges, report.shape.triangles, report.shape.components))
        for check in report.checks:
            if check.verdict == Verdicts.NOT_APPLICABLE:
                continue
            line = '  {}: {}{}'.format(check.check, check.verdict, ' [{}]'.format(check.case) if check.case else '')
            if check.verdict == Verdicts.PASS:
                self.write_success(line)
            else:
                self.write_error(line)
