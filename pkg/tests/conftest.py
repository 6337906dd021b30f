import contextlib
import time

import pytest

_ACCEPTANCE: dict[int, tuple[str, str, float]] = {}


@contextlib.contextmanager
def _criterion(number: int, title: str):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        _ACCEPTANCE[number] = ("FAIL", title, time.perf_counter() - start)
        raise
    _ACCEPTANCE[number] = ("PASS", title, time.perf_counter() - start)


@pytest.fixture
def criterion():
    return _criterion


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        verdict, title, elapsed = _ACCEPTANCE[number]
        terminalreporter.write_line(f"[{verdict}] {number}. {title} ({elapsed:.2f} s)")
