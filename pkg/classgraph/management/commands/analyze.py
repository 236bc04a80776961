from classgraph_library.management.commands.analyze import Command as AnalyzeCommand


class Command(AnalyzeCommand):
    pass
