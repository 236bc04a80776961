default_app_config = 'classgraph.apps.ClassGraphConfig'
