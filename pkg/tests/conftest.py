import pytest

# criterion number -> [description, list of sub-check outcomes]
ACCEPTANCE: dict[int, list] = {}


class _Criterion:
    def __init__(self, number: int, description: str):
        self.number = number
        ACCEPTANCE.setdefault(number, [description, []])

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        ACCEPTANCE[self.number][1].append(exc_type is None)
        return False


@pytest.fixture
def criterion():
    return _Criterion


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        description, outcomes = ACCEPTANCE[number]
        status = "PASS" if outcomes and all(outcomes) else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {number}: {description}")
