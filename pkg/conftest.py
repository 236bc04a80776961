def pytest_configure():
    import os

    try:
        import django
        from django.conf import settings
        from classgraph_library.settings_helpers import DEFAULT_FIXTURES_DIR
    except ImportError:
        import traceback
        traceback.print_exc()
        raise ImportError("To fix this error, run: pip install -r requirements.txt")

    os.environ.pop('CLASSGRAPH_CAP', None)
    os.environ.pop('CLASSGRAPH_JOBS', None)
    os.environ.pop('CLASSGRAPH_FIXTURES_DIR', None)

    settings.configure(
        DEBUG=True,
        USE_TZ=True,
        DATABASES={},
        INSTALLED_APPS=[
            "classgraph",
        ],
        CLASSGRAPH_SETTINGS={
            'ENUMERATION_CAP': 20000,
            'FIXTURES_DIR': DEFAULT_FIXTURES_DIR,
            'JOBS': 1,
            'DEFAULT_MAX_ORDER': 60,
        },
    )
    django.setup()
