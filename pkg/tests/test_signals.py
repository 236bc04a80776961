import mock
from django.apps import apps
from django.test import SimpleTestCase

from classgraph_library.constants import Checks
from classgraph_library.constructions import build
from classgraph_library.exceptions import NotApplicable
from classgraph_library.signals import check_failed, log_check_failure, pair_audited
from classgraph_library.theorems import OneVertexCheck, audit_all, audit_pair


class SignalsTestCase(SimpleTestCase):

    def setUp(self):
        self.audited = []
        self.failed = []
        pair_audited.connect(self.on_audited, weak=False, dispatch_uid='test.pair_audited')
        check_failed.connect(self.on_failed, weak=False, dispatch_uid='test.check_failed')

    def tearDown(self):
        pair_audited.disconnect(dispatch_uid='test.pair_audited')
        check_failed.disconnect(dispatch_uid='test.check_failed')

    def on_audited(self, sender, report, **kwargs):
        self.audited.append(report)

    def on_failed(self, sender, report, check, **kwargs):
        self.failed.append(check.check)

    def test_every_pair_is_announced(self):
        built = build('symmetric:4')
        audit_all(built.group, built.normals)
        result = [report.n_description for report in self.audited]
        expected_result = ['normal:1', 'A4', 'G', 'ordinary']
        self.assertEqual(result, expected_result)
        self.assertEqual(self.failed, [])

    def test_signals_can_be_turned_off(self):
        built = build('sl23')
        audit_pair(built.group, built.normal('Q8'), send_signals=False)
        self.assertEqual(self.audited, [])

    @mock.patch.object(OneVertexCheck, 'evaluate', side_effect=NotApplicable('boom'))
    def test_failed_checks_are_announced(self, mock_evaluate):
        built = build('sl23')
        audit_pair(built.group, built.normal('Q8'), 'Q8')
        self.assertEqual(self.failed, [Checks.ONE_VERTEX])
        self.assertEqual(len(self.audited), 1)


class FailureLoggingTestCase(SimpleTestCase):

    def test_app_connects_failure_logging(self):
        self.assertTrue(apps.get_app_config('classgraph').config['FIXTURES_DIR'])
        self.assertTrue(check_failed.has_listeners())

    @mock.patch.object(OneVertexCheck, 'evaluate', side_effect=NotApplicable('boom'))
    def test_failures_are_logged(self, mock_evaluate):
        built = build('sl23')
        with self.assertLogs('classgraph_library.signals', level='WARNING') as logs:
            audit_pair(built.group, built.normal('Q8'), 'Q8')
        self.assertIn('one_vertex failed on sl23 with N=Q8', logs.output[0])

    def test_log_message_names_the_pair(self):
        report = mock.Mock(group_name='gl23', n_description='SL', class_sizes=[1, 1, 6, 8, 8])
        check = mock.Mock(check=Checks.SINGLE_TRIANGLE, evidence={})
        with self.assertLogs('classgraph_library.signals', level='WARNING') as logs:
            log_check_failure(sender=None, report=report, check=check)
        self.assertIn('single_triangle failed on gl23 with N=SL', logs.output[0])
