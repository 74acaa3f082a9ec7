import pytest

from hecke_zeros.heckepoly import builtin_R_spec

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def R():
    return builtin_R_spec()


@pytest.fixture
def record():
    def _record(label: str, ok: bool, detail: str = ""):
        line = f"[{'PASS' if ok else 'FAIL'}] {label}" + (f" :: {detail}" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok

    return _record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
