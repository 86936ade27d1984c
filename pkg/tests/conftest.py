import itertools

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from equicorona.graph import Graph

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=0, max_n=8):
    """Random simple graphs on ``min_n..max_n`` vertices."""
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


# acceptance criteria report one line each; collected here so the lines show
# up in the terminal summary even when output capture is on
_ACCEPTANCE: dict[str, str] = {}


class _Recorder:
    def __call__(self, label: str, ok: bool, detail: str = "") -> bool:
        line = f"{label}: {'PASS' if ok else 'FAIL'}" + (f" ({detail})" if detail else "")
        _ACCEPTANCE[label] = line
        print(line)
        return ok


@pytest.fixture
def criterion():
    return _Recorder()


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for label in sorted(_ACCEPTANCE, key=lambda s: (int(s.split()[1].rstrip("ab")), s)):
            terminalreporter.write_line(_ACCEPTANCE[label])
