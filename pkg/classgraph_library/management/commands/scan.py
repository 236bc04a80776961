from joblib import Parallel, delayed

from classgraph_library.classes import build_gamma, classify_shape, g_classes, has_distinct_class_sizes
from classgraph_library.constructions import corpus, fingerprint
from classgraph_library.management.commands.base import ClassGraphCommand
from classgraph_library.permgroup import normal_subgroups


def scan_row(built, provenance):
    G = built.group
    order, spectrum, sizes = fingerprint(G)
    return {
        'provenance': provenance,
        'group': G.name,
        'order': order,
        'order_spectrum': [list(item) for item in spectrum],
        'class_sizes': list(sizes),
        'distinct_class_sizes': has_distinct_class_sizes(g_classes(G, G.whole())),
        'normal_subgroups': len(normal_subgroups(G)),
        'shapes': [classify_shape(build_gamma(G, N)).tag for N in normal_subgroups(G) if not N.is_trivial()],
    }


class Command(ClassGraphCommand):
    help = 'Lists the corpus groups with their fingerprints and the graph shape of every normal subgroup.'

    def add_arguments(self, parser):
        super(Command, self).add_arguments(parser)
        parser.add_argument('--max-order', action='store', dest='max_order', type=int, default=None, help='Largest group order in the corpus.')
        parser.add_argument('--jobs', action='store', dest='jobs', type=int, default=None, help='Groups scanned in parallel.')

    def run(self, config, **options):
        max_order = options['max_order'] or config['DEFAULT_MAX_ORDER']
        jobs = options['jobs'] or config['JOBS']
        groups = corpus(max_order, fixtures_dir=config['FIXTURES_DIR'])
        rows = Parallel(n_jobs=jobs)(delayed(scan_row)(built, provenance) for built, provenance in groups)
        for row in rows:
            if options['format'] == 'json':
                self.write_json(row)
            else:
                self.stdout.write('{provenance:<40} order {order:<6} sizes {sizes:<30} shapes {shapes}'.format(
                    provenance=row['provenance'],
                    order=row['order'],
                    sizes=' '.join(str(size) for size in row['class_sizes']),
                    shapes=', '.join(row['shapes']),
                ))
        if options['format'] == 'text':
            self.stdout.write('{} with distinct class sizes'.format(sum(1 for row in rows if row['distinct_class_sizes'])))
            self.stdout.write('{} groups'.format(len(rows)))
