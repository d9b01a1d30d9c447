import io
from contextlib import redirect_stdout

import pytest

from arcsl_bounds.cli import main

_ACCEPTANCE = {}


@pytest.fixture
def criterion():
    """Record one acceptance line: criterion(number, title, passed, detail)."""

    def record(number, title, passed, detail=""):
        _ACCEPTANCE[number] = (title, bool(passed), detail)
        return bool(passed)

    return record


@pytest.fixture
def run_cli():
    """Run the CLI in-process and return (exit code, stdout)."""

    def run(*argv):
        buf = io.StringIO()
        with redirect_stdout(buf):
            code = main([str(a) for a in argv])
        return code, buf.getvalue()

    return run


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        title, passed, detail = _ACCEPTANCE[number]
        line = f"AC{number:<2} {'PASS' if passed else 'FAIL'}  {title}"
        if detail:
            line += f"  [{detail}]"
        terminalreporter.write_line(line)
