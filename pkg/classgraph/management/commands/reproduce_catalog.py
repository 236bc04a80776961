from classgraph_library.management.commands.reproduce_catalog import Command as ReproduceCatalogCommand


class Command(ReproduceCatalogCommand):
    pass
