import mock
from django.test import SimpleTestCase

from classgraph_library.constants import Checks, DeaconescuCases, HigmanCases, Shapes, Verdicts
from classgraph_library.constructions import build, corpus
from classgraph_library.exceptions import NotApplicable
from classgraph_library.structure import DeaconescuCase, HigmanCase
from classgraph_library.theorems import (
    OneVertexCheck,
    PairContext,
    audit_all,
    audit_built,
    audit_corpus,
    audit_one_vertex,
    audit_ordinary_graph,
    audit_pair,
    audit_three_vertices,
    audit_two_isolated,
    audit_universal,
    labelled_normal_subgroups,
    reproduce_catalog,
    summarize,
)


def audit_named(spec, name):
    built = build(spec)
    return audit_pair(built.group, built.normal(name), name, send_signals=False)


class AuditPairTestCase(SimpleTestCase):

    def assertCase(self, report, check, case):
        result = report.verdict_of(check)
        self.assertEqual(result.verdict, Verdicts.PASS, result)
        self.assertEqual(result.case, case)

    def test_every_check_is_reported_once(self):
        report = audit_named('symmetric:4', 'A4')
        self.assertEqual([result.check for result in report.checks], list(Checks.PAIR_CHECKS))

    def test_one_vertex(self):
        report = audit_named('sl23', 'Q8')
        self.assertEqual(report.shape.tag, Shapes.ONE_VERTEX)
        self.assertCase(report, Checks.ONE_VERTEX, 'p_group_elementary_central_quotient')
        self.assertEqual(report.failed, [])

    def test_two_isolated(self):
        report = audit_named('symmetric:4', 'A4')
        self.assertEqual(report.shape.tag, Shapes.TWO_ISOLATED)
        self.assertCase(report, Checks.ISOLATED_PAIR, 'frobenius_prime_complement')
        self.assertCase(report, Checks.ISOLATED_PAIR_CENTER, 'trivial_central_part')
        self.assertCase(report, Checks.DISCONNECTED_STRUCTURE, 'quasi_frobenius_abelian')
        self.assertCase(report, Checks.TRIANGLE_FREE, 'frobenius_bounded_kernel')
        self.assertEqual(report.verdict_of(Checks.EDGE_PAIR).verdict, Verdicts.NOT_APPLICABLE)
        self.assertEqual(report.failed, [])
        self.assertIsNone(report.counterexample)

    def test_triangle_p_group(self):
        report = audit_named('dihedral:8', 'G')
        self.assertEqual(report.shape.tag, Shapes.TRIANGLE)
        self.assertCase(report, Checks.SINGLE_TRIANGLE, 'p_group')

    def test_two_edge_frobenius(self):
        report = audit_named('semilinear:5:2:3', 'N')
        self.assertEqual(report.shape.tag, Shapes.TWO_EDGE)
        self.assertCase(report, Checks.EDGE_PAIR, 'frobenius_prime_complement')
        self.assertEqual(report.failed, [])

    def test_two_edge_times_central_z2(self):
        report = audit_named('affine:3:2*cyclic:2', 'translationsxG')
        self.assertEqual(report.shape.tag, Shapes.TWO_EDGE)
        self.assertCase(report, Checks.EDGE_PAIR, 'odd_p_group_times_central_z2')
        self.assertCase(report, Checks.TRIANGLE_FREE_CENTER, 'central_two_part_two')
        self.assertEqual(report.failed, [])

    def test_two_edge_p_group(self):
        report = audit_named('dihedral:10', 'rotations')
        self.assertCase(report, Checks.EDGE_PAIR, 'p_group')

    def test_three_one_edge(self):
        report = audit_named('alternating:4', 'G')
        self.assertEqual(report.shape.tag, Shapes.THREE_ONE_EDGE)
        self.assertCase(report, Checks.THREE_ONE_EDGE, 'quasi_frobenius_abelian')
        self.assertEqual(report.failed, [])

    def test_three_one_edge_p_group(self):
        report = audit_named('fixture:sg_324_8', 'N')
        self.assertEqual(sorted(report.class_sizes), [1, 2, 3, 3])
        self.assertCase(report, Checks.THREE_ONE_EDGE, 'p_group')
        self.assertCase(report, Checks.DISCONNECTED_STRUCTURE, 'p_group_times_central')
        self.assertEqual(report.failed, [])

    def test_triangle_cases(self):
        cases = (
            ('gl23', 'SL', 'central_z2_exponent_p'),
            ('sl23*cyclic:3', 'Q8xG', 'times_central_z3'),
            ('affine:7:1*symmetric:3', 'translationsxA3', 'elementary_sylow_product'),
            ('symmetric:5', 'A5', 'alternating5'),
        )
        for spec, name, case in cases:
            report = audit_named(spec, name)
            self.assertEqual(report.shape.tag, Shapes.TRIANGLE, spec)
            self.assertCase(report, Checks.SINGLE_TRIANGLE, case)
            self.assertEqual(report.failed, [], spec)

    def test_triangle_frobenius_quotient(self):
        report = audit_named('semilinear:3:4:5:2', 'N')
        self.assertEqual(sorted(report.class_sizes), [1, 80, 162, 162])
        self.assertCase(report, Checks.SINGLE_TRIANGLE, 'frobenius_or_pq_quotient')
        self.assertEqual(report.failed, [])

    def test_three_line_cases(self):
        cases = (
            ('fixture:sg_672_1258', 'two_group_exponent_at_most_4'),
            ('fixture:sg_600_150', 'frobenius_bounded_kernel'),
        )
        for spec, case in cases:
            report = audit_named(spec, 'N')
            self.assertEqual(report.shape.tag, Shapes.THREE_LINE, spec)
            self.assertCase(report, Checks.THREE_LINE, case)
            self.assertEqual(report.failed, [], spec)

    def test_three_line_with_even_prime(self):
        report = audit_named('affine_field:2:3*symmetric:3', 'translationsxA3')
        self.assertEqual(sorted(report.class_sizes), [1, 2, 7, 14])
        self.assertCase(report, Checks.THREE_LINE, 'elementary_sylow_product')
        self.assertCase(report, Checks.TRIANGLE_FREE, 'elementary_sylow_product')
        self.assertFalse(report.verdict_of(Checks.TRIANGLE_FREE).evidence['odd_primes'])

    def test_distinct_class_sizes_are_flagged(self):
        report = audit_named('fixture:sg_672_1258', 'N')
        self.assertTrue(report.distinct_class_sizes)

    def test_cp_notes(self):
        report = audit_named('symmetric:4', 'A4')
        result = report.verdict_of(Checks.TRIANGLE_FREE_CP)
        self.assertEqual(result.case, 'frobenius')
        self.assertEqual(result.evidence['cp_case'], 'cyclic_prime_power')
        self.assertTrue(result.evidence['requirements']['cp_case_matched'])

    @mock.patch('classgraph_library.theorems.higman_classify')
    def test_unmatched_cp_case_fails(self, mock_classify):
        mock_classify.return_value = HigmanCase(p=2, P=None, case=HigmanCases.UNMATCHED, quotient_order=3, frobenius_evidence=False)
        report = audit_named('symmetric:4', 'A4')
        result = report.verdict_of(Checks.TRIANGLE_FREE_CP)
        self.assertEqual(result.verdict, Verdicts.FAIL)
        self.assertFalse(result.evidence['requirements']['cp_case_matched'])
        self.assertIsNotNone(report.counterexample)

    def test_prime_order_elements(self):
        cases = (
            ('symmetric:4', 'A4', 'two_power_p', 4),
            ('dihedral:10', 'G', 'two_p_power', 5),
            ('semilinear:3:4:5:2', 'N', 'p_power_q_frobenius', 81),
            ('symmetric:5', 'A5', 'alternating5', 1),
        )
        for spec, name, case, fitting_order in cases:
            result = audit_named(spec, name).verdict_of(Checks.PRIME_ORDER_ELEMENTS)
            self.assertEqual((result.verdict, result.case), (Verdicts.PASS, case), spec)
            self.assertEqual(result.evidence['fitting_order'], fitting_order, spec)
            self.assertTrue(result.evidence['requirements']['orders_hold'], spec)

    def test_prime_order_elements_needs_prime_orders(self):
        result = audit_named('sl23', 'Q8').verdict_of(Checks.PRIME_ORDER_ELEMENTS)
        self.assertEqual(result.verdict, Verdicts.NOT_APPLICABLE)

    @mock.patch('classgraph_library.theorems.deaconescu_classify')
    def test_prime_order_elements_fail_when_orders_do_not_hold(self, mock_classify):
        mock_classify.return_value = DeaconescuCase(
            case=DeaconescuCases.TWO_POWER_TIMES_P,
            fitting_order=2,
            derived_order=4,
            abelianization_index=3,
            equalities_hold=False,
        )
        result = audit_named('symmetric:4', 'A4').verdict_of(Checks.PRIME_ORDER_ELEMENTS)
        self.assertEqual(result.verdict, Verdicts.FAIL)
        self.assertEqual(result.case, DeaconescuCases.TWO_POWER_TIMES_P)

    def test_to_dict(self):
        result = audit_named('symmetric:4', 'A4').to_dict()
        self.assertEqual(result['class_sizes'], [1, 3, 8])
        self.assertEqual(result['shape'], Shapes.TWO_ISOLATED)
        self.assertEqual(result['graph'], {'vertices': 2, 'edges': 0, 'triangles': 0, 'components': 2})
        self.assertEqual(result['n_order'], 12)
        self.assertIsNone(result['counterexample'])

    def test_partial_audits_share_a_context(self):
        built = build('symmetric:4')
        context = PairContext(built.group, built.normal('A4'), 'A4')
        result = [
            [check.check for check in audit(built.group, context.N, context=context).checks]
            for audit in (audit_universal, audit_one_vertex, audit_two_isolated, audit_three_vertices)
        ]
        expected_result = [
            [
                Checks.COMPONENT_BOUND,
                Checks.DISCONNECTED_STRUCTURE,
                Checks.COMPLETE_COMPONENTS,
                Checks.ODD_REAL_CLASSES,
                Checks.PRIME_ORDER_ELEMENTS,
            ],
            [Checks.ONE_VERTEX],
            [Checks.ISOLATED_PAIR_CENTER, Checks.ISOLATED_PAIR],
            [Checks.THREE_ONE_EDGE, Checks.SINGLE_TRIANGLE, Checks.THREE_LINE],
        ]
        self.assertEqual(result, expected_result)

    @mock.patch.object(OneVertexCheck, 'evaluate', side_effect=NotApplicable('boom'))
    def test_errors_are_recorded_as_failures(self, mock_evaluate):
        report = audit_named('sl23', 'Q8')
        result = report.verdict_of(Checks.ONE_VERTEX)
        self.assertEqual(result.verdict, Verdicts.FAIL)
        self.assertEqual(result.evidence, {'error': 'boom'})
        self.assertEqual(len(report.counterexample['normal_members']), 8)
        self.assertEqual(report.counterexample['group']['degree'], 8)
        mock_evaluate.assert_called_once()


class OrdinaryGraphTestCase(SimpleTestCase):

    def verdicts(self, spec):
        report = audit_ordinary_graph(build(spec).group, send_signals=False)
        return report, {check.check: (check.verdict, check.case) for check in report.checks}

    def test_triangle_groups(self):
        for spec, case in (('quaternion:8', 'quaternion8'), ('dihedral:8', 'dihedral8')):
            report, result = self.verdicts(spec)
            self.assertEqual(report.shape.tag, Shapes.TRIANGLE)
            self.assertEqual(result[Checks.ORDINARY_TRIANGLE], (Verdicts.PASS, case))

    def test_triangle_free_groups(self):
        for spec in ('symmetric:3', 'dihedral:10', 'alternating:4', 'dihedral:12', 'frobenius:7:3'):
            _, result = self.verdicts(spec)
            self.assertEqual(result[Checks.ORDINARY_TRIANGLE_FREE], (Verdicts.PASS, 'listed_order'), spec)

    def test_small_shapes(self):
        _, result = self.verdicts('dihedral:10')
        self.assertEqual(result[Checks.ORDINARY_SMALL_SHAPES], (Verdicts.PASS, 'dihedral10'))
        _, result = self.verdicts('alternating:4')
        self.assertEqual(result[Checks.ORDINARY_SMALL_SHAPES], (Verdicts.PASS, 'alternating4'))
        _, result = self.verdicts('symmetric:3')
        self.assertEqual(result[Checks.ORDINARY_SMALL_SHAPES], (Verdicts.PASS, 'unrestricted_shape'))

    def test_abelian_group_has_nothing_to_check(self):
        report, result = self.verdicts('cyclic:12')
        self.assertEqual(report.shape.tag, Shapes.EMPTY)
        self.assertEqual({verdict for verdict, _ in result.values()}, {Verdicts.NOT_APPLICABLE})


class AuditAllTestCase(SimpleTestCase):

    def test_labels_known_normal_subgroups(self):
        built = build('symmetric:4')
        result = [label for label, _ in labelled_normal_subgroups(built.group, built.normals)]
        expected_result = ['1', 'normal:1', 'A4', 'G']
        self.assertEqual(result, expected_result)

    def test_skips_trivial_subgroup_and_adds_ordinary_graph(self):
        built = build('symmetric:4')
        reports = audit_all(built.group, built.normals, send_signals=False)
        result = [(report.n_description, report.n_order) for report in reports]
        expected_result = [('normal:1', 4), ('A4', 12), ('G', 24), ('ordinary', 24)]
        self.assertEqual(result, expected_result)
        self.assertEqual([report for report in reports if report.failed], [])

    def test_audit_built_keeps_provenance(self):
        provenance, reports = audit_built(build('symmetric:3'), 'sweep:symmetric:3')
        self.assertEqual(provenance, 'sweep:symmetric:3')
        self.assertEqual(len(reports), 3)


class CorpusAuditTestCase(SimpleTestCase):

    def test_small_corpus_has_no_failures(self):
        results = audit_corpus(corpus(12))
        summary = summarize(results)
        self.assertEqual(summary['failures'], [])
        self.assertEqual(summary['groups'], len(results))
        self.assertEqual(summary['reports'], sum(len(reports) for _, reports in results))
        self.assertEqual(summary['checks'][Checks.ORDINARY_TRIANGLE][Verdicts.PASS], 2)

    def test_parallel_run_matches_serial_run(self):
        groups = list(corpus(60))
        serial = audit_corpus(groups, jobs=1)
        parallel = audit_corpus(groups, jobs=4)
        result = [(provenance, [report.to_dict() for report in reports]) for provenance, reports in parallel]
        expected_result = [(provenance, [report.to_dict() for report in reports]) for provenance, reports in serial]
        self.assertEqual(result, expected_result)


class ReproduceCatalogTestCase(SimpleTestCase):

    def test_reproduces_selected_examples(self):
        rows = reproduce_catalog(names=['sl23-q8', 's4-a4', 'gl23-sl23', 'agl17xs3-z7xz3'])
        result = [(row.name, row.shape, row.case, row.matches) for row in rows]
        expected_result = [
            ('sl23-q8', Shapes.ONE_VERTEX, 'p_group_elementary_central_quotient', True),
            ('s4-a4', Shapes.TWO_ISOLATED, 'frobenius_prime_complement', True),
            ('agl17xs3-z7xz3', Shapes.TRIANGLE, 'elementary_sylow_product', True),
            ('gl23-sl23', Shapes.TRIANGLE, 'central_z2_exponent_p', True),
        ]
        self.assertEqual(result, expected_result)

    def test_other_shapes_have_no_case(self):
        rows = reproduce_catalog(names=['z21-by-z6'])
        self.assertEqual(rows[0].shape, Shapes.OTHER)
        self.assertIsNone(rows[0].case)
        self.assertTrue(rows[0].matches)
