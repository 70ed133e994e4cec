import sys

import pytest

from hypack import _backend


@pytest.fixture(params=_backend.available())
def kernels(request):
    """Each importable kernel backend in turn."""
    return _backend.load(request.param)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.format_results():
        terminalreporter.write_line(line)
