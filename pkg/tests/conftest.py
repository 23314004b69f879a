import pytest

from mcolour import small_rainbow
from mcolour.constructions import random_template
from mcolour.template import pattern_count


@pytest.fixture
def rainbow24():
    return small_rainbow(2, 4)


def seeded_templates(count, seed=0, rs=(2, 3), a_max=8):
    """Deterministic mixed corpus for property-style loops."""
    out = []
    for i in range(count):
        r = rs[i % len(rs)]
        a = (i * 7 + seed) % (a_max + 1)
        P = pattern_count(r, a)
        k = 1 + (i * 31 + seed) % P
        out.append(random_template(r, a, k, seed * 100_003 + i))
    return out


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
