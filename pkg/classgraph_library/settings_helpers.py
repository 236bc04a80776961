import os

import environ

from classgraph_library.constants import DEFAULT_ENUMERATION_CAP, DEFAULT_MAX_ORDER
from classgraph_library.exceptions import ImproperlyConfiguredGroupSettings


DEFAULT_FIXTURES_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'fixtures')


def _django_group_settings():
    """
    Returns the `CLASSGRAPH_SETTINGS` dict when Django settings are configured,
    and an empty dict otherwise so the library works outside of a project.
    """
    from django.conf import settings
    if not settings.configured:
        return {}
    return getattr(settings, 'CLASSGRAPH_SETTINGS', {})


def _positive_int(name, value):
    try:
        value = int(value)
    except (TypeError, ValueError):
        raise ImproperlyConfiguredGroupSettings('{} must be an integer, got {!r}.'.format(name, value))
    if value < 1:
        raise ImproperlyConfiguredGroupSettings('{} must be at least 1, got {}.'.format(name, value))
    return value


def classgraph_config(group_settings=None):
    """
    Merges the `CLASSGRAPH_SETTINGS` dict with the environment. The environment
    variables take precedence so that a single run can be steered without
    editing settings:

    {
        'ENUMERATION_CAP': 20000,      # CLASSGRAPH_CAP
        'FIXTURES_DIR': '/path/to',    # CLASSGRAPH_FIXTURES_DIR
        'JOBS': 1,                     # CLASSGRAPH_JOBS
        'DEFAULT_MAX_ORDER': 700,
        'SKIP_FAILURE_LOGGING': False,
    }
    """
    if group_settings is None:
        group_settings = _django_group_settings()
    env = environ.Env()

    cap = env.get_value('CLASSGRAPH_CAP', default=None)
    if cap is None:
        cap = group_settings.get('ENUMERATION_CAP', DEFAULT_ENUMERATION_CAP)

    jobs = env.get_value('CLASSGRAPH_JOBS', default=None)
    if jobs is None:
        jobs = group_settings.get('JOBS', 1)

    fixtures_dir = env.get_value('CLASSGRAPH_FIXTURES_DIR', default=None)
    if fixtures_dir is None:
        fixtures_dir = group_settings.get('FIXTURES_DIR', DEFAULT_FIXTURES_DIR)

    return {
        'ENUMERATION_CAP': _positive_int('ENUMERATION_CAP', cap),
        'FIXTURES_DIR': fixtures_dir,
        'JOBS': _positive_int('JOBS', jobs),
        'DEFAULT_MAX_ORDER': _positive_int('DEFAULT_MAX_ORDER', group_settings.get('DEFAULT_MAX_ORDER', DEFAULT_MAX_ORDER)),
        'SKIP_FAILURE_LOGGING': bool(group_settings.get('SKIP_FAILURE_LOGGING', False)),
    }


def get_enumeration_cap():
    return classgraph_config()['ENUMERATION_CAP']


def validate_config(config):
    if not os.path.isdir(config['FIXTURES_DIR']):
        raise ImproperlyConfiguredGroupSettings('The fixtures directory {} does not exist.'.format(config['FIXTURES_DIR']))
    return config
