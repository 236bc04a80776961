from django.test import SimpleTestCase

from classgraph_library.classes import (
    build_gamma,
    classify_shape,
    components,
    conjugacy_class_of,
    g_classes,
    graph_report,
    has_distinct_class_sizes,
    is_complete,
    is_real_class,
    is_real_element,
    to_dot,
    triangle_count,
)
from classgraph_library.constants import Shapes
from classgraph_library.constructions import build
from classgraph_library.exceptions import NotNormal, ParentMismatch
from classgraph_library.permgroup import centralizer, from_cycles, perm_inverse, perm_mul


def brute_force_class_sizes(G, N):
    sizes = []
    seen = set()
    for x in sorted(N.members):
        if x in seen:
            continue
        element = G.elements[x]
        orbit = {G.index[perm_mul(perm_mul(perm_inverse(g), element), g)] for g in G.elements}
        seen |= orbit
        sizes.append(len(orbit))
    return sorted(sizes)


class GClassesTestCase(SimpleTestCase):

    def setUp(self):
        self.built = build('symmetric:4')
        self.G = self.built.group

    def test_a4_splits_into_three_classes(self):
        result = [c.size for c in g_classes(self.G, self.built.normal('A4'))]
        expected_result = [1, 3, 8]
        self.assertEqual(result, expected_result)

    def test_classes_partition_the_normal_subgroup(self):
        N = self.built.normal('A4')
        classes = g_classes(self.G, N)
        self.assertEqual(frozenset().union(*[c.members for c in classes]), N.members)
        self.assertEqual(sum(c.size for c in classes), N.order)

    def test_class_sizes_divide_group_order(self):
        for N in (self.built.normal('A4'), self.G.whole()):
            for c in g_classes(self.G, N):
                self.assertEqual(self.G.order % c.size, 0)
                self.assertEqual(c.size * centralizer(self.G, c.representative).order, self.G.order)

    def test_identity_class_comes_first(self):
        result = g_classes(self.G, self.G.whole())[0]
        self.assertEqual(result.members, frozenset([0]))
        self.assertEqual(result.rep_order, 1)

    def test_representative_is_smallest_member(self):
        for c in g_classes(self.G, self.G.whole()):
            self.assertEqual(self.G.elements[c.representative], min(self.G.elements[m] for m in c.members))

    def test_agrees_with_brute_force(self):
        for spec, name in (('dihedral:8', 'G'), ('gl23', 'SL'), ('frobenius:7:3', 'kernel'), ('symmetric:4', 'A4')):
            built = build(spec)
            N = built.normal(name)
            result = sorted(c.size for c in g_classes(built.group, N))
            expected_result = brute_force_class_sizes(built.group, N)
            self.assertEqual(result, expected_result, spec)

    def test_non_normal_subgroup_raises(self):
        H = self.G.subgroup([from_cycles(4, [(0, 1)])])
        with self.assertRaises(NotNormal):
            g_classes(self.G, H)

    def test_subgroup_of_another_group_raises(self):
        other = build('symmetric:4').group
        with self.assertRaises(ParentMismatch):
            g_classes(self.G, other.whole())


class GammaTestCase(SimpleTestCase):

    def test_two_isolated_vertices_for_s4_a4(self):
        built = build('symmetric:4')
        g = build_gamma(built.group, built.normal('A4'))
        result = classify_shape(g)
        self.assertEqual(result.tag, Shapes.TWO_ISOLATED)
        self.assertEqual(result.components, 2)
        self.assertEqual(result.edges, 0)

    def test_triangle_for_s5_a5(self):
        built = build('symmetric:5')
        g = build_gamma(built.group, built.normal('A5'))
        self.assertEqual(sorted(g.class_sizes), [1, 15, 20, 24])
        self.assertEqual(classify_shape(g).tag, Shapes.TRIANGLE)
        self.assertEqual(triangle_count(g), 1)

    def test_central_classes_are_not_vertices(self):
        G = build('quaternion:8').group
        g = build_gamma(G, G.whole())
        self.assertEqual(len(g.central_classes), 2)
        self.assertEqual(g.vertex_sizes, [2, 2, 2])

    def test_abelian_group_gives_empty_graph(self):
        G = build('cyclic:12').group
        result = classify_shape(build_gamma(G, G.whole()))
        self.assertEqual(result.tag, Shapes.EMPTY)
        self.assertEqual(result.components, 0)

    def test_adjacency_matches_shared_primes(self):
        built = build('gl23')
        g = build_gamma(built.group, built.normal('SL'))
        self.assertEqual(g.vertex_sizes, [6, 8, 8])
        self.assertEqual(g.edge_count, 3)
        self.assertTrue(is_complete(g, [class_id for class_id, _ in g.vertices]))

    def test_three_line(self):
        built = build('fixture:sg_672_1258')
        g = build_gamma(built.group, built.normal('N'))
        result = classify_shape(g)
        self.assertEqual(result.tag, Shapes.THREE_LINE)
        self.assertEqual(len(components(g)), 1)

    def test_three_one_edge(self):
        G = build('alternating:4').group
        result = classify_shape(build_gamma(G, G.whole()))
        self.assertEqual(result.tag, Shapes.THREE_ONE_EDGE)
        self.assertEqual(result.components, 2)

    def test_two_edge(self):
        built = build('dihedral:10')
        g = build_gamma(built.group, built.normal('rotations'))
        self.assertEqual(classify_shape(g).tag, Shapes.TWO_EDGE)

    def test_one_vertex(self):
        built = build('sl23')
        g = build_gamma(built.group, built.normal('Q8'))
        self.assertEqual(classify_shape(g).tag, Shapes.ONE_VERTEX)

    def test_more_vertices_are_other(self):
        G = build('symmetric:4').group
        self.assertEqual(classify_shape(build_gamma(G, G.whole())).tag, Shapes.OTHER)

    def test_graph_report(self):
        built = build('symmetric:4')
        result = graph_report(build_gamma(built.group, built.normal('A4')))
        expected_result = {'class_sizes': [1, 3, 8], 'shape': Shapes.TWO_ISOLATED, 'components': 2, 'triangles': 0}
        self.assertEqual(result, expected_result)

    def test_dot_output(self):
        built = build('symmetric:4')
        result = to_dot(build_gamma(built.group, built.normal('A4')))
        expected_result = 'graph gamma {\n  C1 [label="C1:3"];\n  C2 [label="C2:8"];\n}\n'
        self.assertEqual(result, expected_result)


class RealClassesTestCase(SimpleTestCase):

    def test_every_class_of_a_symmetric_group_is_real(self):
        G = build('symmetric:4').group
        self.assertTrue(all(is_real_class(G, c) for c in g_classes(G, G.whole())))

    def test_three_cycles_of_a4_are_not_real(self):
        G = build('alternating:4').group
        three_cycle = from_cycles(4, [(0, 1, 2)])
        self.assertFalse(is_real_element(G, three_cycle))
        self.assertEqual(len(conjugacy_class_of(G, three_cycle)), 4)

    def test_real_classes_of_a4(self):
        G = build('alternating:4').group
        result = sorted((c.size, is_real_class(G, c)) for c in g_classes(G, G.whole()))
        self.assertEqual(result, [(1, True), (3, True), (4, False), (4, False)])

    def test_distinct_class_sizes(self):
        G = build('symmetric:3').group
        self.assertTrue(has_distinct_class_sizes(g_classes(G, G.whole())))
        built = build('symmetric:4')
        self.assertFalse(has_distinct_class_sizes(g_classes(built.group, built.group.whole())))
