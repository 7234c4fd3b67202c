import os

import pytest
from hypothesis import settings

settings.register_profile("ci", max_examples=60, deadline=None)
settings.register_profile("dev", max_examples=20, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "ci"))

# verdict lines from the acceptance module, repeated in the terminal summary
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def verdict():
    def emit(line: str) -> None:
        print(line)
        ACCEPTANCE_LINES.append(line)

    return emit


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
