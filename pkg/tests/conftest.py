import pathlib

import pytest

FIXTURES = pathlib.Path(__file__).parent / 'fixtures'


def fixture_bytes(name: str) -> bytes:
    return (FIXTURES / name).read_bytes()


@pytest.fixture
def fixtures_dir():
    return FIXTURES


def pytest_terminal_summary(terminalreporter):
    """Echo the acceptance verdicts so they land in the captured log."""
    import sys
    module = sys.modules.get('test_acceptance')
    results = getattr(module, 'RESULTS', None)
    if not results:
        return
    terminalreporter.section('acceptance criteria')
    for n in sorted(results):
        terminalreporter.write_line(results[n])
