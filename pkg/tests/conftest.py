"""Shared test plumbing: the acceptance-criteria summary section."""

_CRITERIA = {}


def record_criterion(index, verdict, detail):
    """Register one acceptance criterion outcome for the terminal summary."""
    _CRITERIA[index] = (verdict, detail)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for index in sorted(_CRITERIA):
        verdict, detail = _CRITERIA[index]
        terminalreporter.write_line(f"criterion {index}: {verdict} - {detail}")
