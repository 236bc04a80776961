from django.apps import AppConfig
from django.conf import settings

from classgraph_library.settings_helpers import classgraph_config, validate_config
from classgraph_library.signals import check_failed, log_check_failure


class ClassGraphConfig(AppConfig):
    name = 'classgraph'

    def ready(self):
        self.config = validate_config(classgraph_config(getattr(settings, 'CLASSGRAPH_SETTINGS', {})))

        # Unless otherwise instructed, log every failing check.
        if not self.config['SKIP_FAILURE_LOGGING']:
            check_failed.connect(log_check_failure, dispatch_uid='classgraph.log_check_failure')
