from classgraph_library.constants import Verdicts
from classgraph_library.constructions import corpus
from classgraph_library.management.commands.base import ClassGraphCommand
from classgraph_library.theorems import audit_corpus, summarize


class Command(ClassGraphCommand):
    help = 'Audits every group of the corpus against all its normal subgroups and summarizes the verdicts.'

    def add_arguments(self, parser):
        super(Command, self).add_arguments(parser)
        parser.add_argument('--max-order', action='store', dest='max_order', type=int, default=None, help='Largest group order in the corpus.')
        parser.add_argument('--jobs', action='store', dest='jobs', type=int, default=None, help='Groups audited in parallel.')

    def run(self, config, **options):
        max_order = options['max_order'] or config['DEFAULT_MAX_ORDER']
        jobs = options['jobs'] or config['JOBS']
        results = audit_corpus(corpus(max_order, fixtures_dir=config['FIXTURES_DIR']), jobs=jobs)
        summary = summarize(results)
        if options['format'] == 'json':
            for provenance, reports in results:
                for report in reports:
                    self.write_json(dict(report.to_dict(), provenance=provenance))
        else:
            self.write_summary(summary)
        if summary['failures']:
            self.fail('{} failed checks over {} reports.'.format(len(summary['failures']), summary['reports']))

    def write_summary(self, summary):
        self.stdout.write('{} groups, {} reports, {} with distinct class sizes'.format(
            summary['groups'], summary['reports'], summary['distinct_class_size_reports']))
        self.stdout.write('{:<26} {:>6} {:>6} {:>15}'.format('check', Verdicts.PASS, Verdicts.FAIL, Verdicts.NOT_APPLICABLE))
        for name, counts in summary['checks'].items():
            self.stdout.write('{:<26} {:>6} {:>6} {:>15}'.format(
                name, counts[Verdicts.PASS], counts[Verdicts.FAIL], counts[Verdicts.NOT_APPLICABLE]))
        for failure in summary['failures']:
            self.write_error('FAIL {check} on {group} / {normal_subgroup} ({provenance})'.format(**failure))
