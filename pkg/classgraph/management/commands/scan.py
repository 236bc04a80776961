from classgraph_library.management.commands.scan import Command as ScanCommand


class Command(ScanCommand):
    pass
