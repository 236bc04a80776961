import logging

from django.dispatch import Signal

logger = logging.getLogger(__name__)

# Sent after every (G, N) audit with `report=`.
pair_audited = Signal()

# Sent for each failing check with `report=` and `check=`.
check_failed = Signal()


def log_check_failure(sender, report, check, **kwargs):
    """
    Logs a failed check with the pair it failed on.
    e.g. usage:
    check_failed.connect(log_check_failure)
    """
    logger.warning(
        '%s failed on %s with N=%s (class sizes %s): %s',
        check.check, report.group_name, report.n_description, report.class_sizes, check.evidence,
    )
