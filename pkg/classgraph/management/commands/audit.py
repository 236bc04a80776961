from classgraph_library.management.commands.audit import Command as AuditCommand


class Command(AuditCommand):
    pass
