"""
Settings for running the commands outside of a host project, e.g.
`classgraph analyze --group builtin:gl23` or `python manage.py audit`.
"""
import environ

env = environ.Env()

SECRET_KEY = env.str('CLASSGRAPH_SECRET_KEY', default='classgraph-commands-only')
DEBUG = False
USE_TZ = True
INSTALLED_APPS = [
    'classgraph',
]
DATABASES = {}

CLASSGRAPH_SETTINGS = {
    'DEFAULT_MAX_ORDER': env.int('CLASSGRAPH_MAX_ORDER', default=700),
}

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {'format': '%(levelname)s %(name)s: %(message)s'},
    },
    'handlers': {
        'stderr': {'class': 'logging.StreamHandler', 'formatter': 'plain'},
    },
    'loggers': {
        'classgraph_library': {
            'handlers': ['stderr'],
            'level': env.str('CLASSGRAPH_LOG_LEVEL', default='WARNING'),
        },
    },
}
