import pytest

ACCEPTANCE = {}


def record(key, label, passed, detail=""):
    ACCEPTANCE[key] = (label, passed, detail)


@pytest.fixture
def acceptance():
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: (int(k.split("-")[0]), k)):
        label, passed, detail = ACCEPTANCE[key]
        line = f"[{'PASS' if passed else 'FAIL'}] {key:<12} {label}"
        if detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)
