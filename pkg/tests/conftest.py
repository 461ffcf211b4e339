import os

import hypothesis
import pytest
from hypothesis import strategies as st

from tourlab.core import Tournament, from_code, num_pairs

hypothesis.settings.register_profile("default", max_examples=60, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.register_profile("thorough", max_examples=500, deadline=None)
hypothesis.settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def tournaments(draw, min_n=1, max_n=8) -> Tournament:
    n = draw(st.integers(min_n, max_n))
    code = draw(st.integers(0, (1 << num_pairs(n)) - 1))
    return from_code(n, code)


@st.composite
def even_tournaments(draw, min_n=2, max_n=10) -> Tournament:
    n = 2 * draw(st.integers(min_n // 2, max_n // 2))
    return from_code(n, draw(st.integers(0, (1 << num_pairs(n)) - 1)))


# acceptance bookkeeping: test_acceptance records one line per criterion and
# the summary hook prints them after the run

ACCEPTANCE: dict[int, tuple[str, bool, str]] = {}


@pytest.fixture
def criterion():
    def record(number: int, title: str, ok: bool, note: str = "") -> None:
        ACCEPTANCE[number] = (title, ok, note)
        assert ok, f"criterion {number} ({title}) failed: {note}"
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        title, ok, note = ACCEPTANCE[number]
        line = f"[{'PASS' if ok else 'FAIL'}] {number:2d}. {title}"
        if note:
            line += f" ({note})"
        terminalreporter.write_line(line)
