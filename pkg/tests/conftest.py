import numpy as np
import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

_ACCEPTANCE_LINES = []


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def record_criterion():
    """Collect one pass/fail line per acceptance criterion for the terminal summary."""
    def record(label, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] {label}" + (f": {detail}" if detail else "")
        _ACCEPTANCE_LINES.append(line)
        print(line)
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def signaling_box(rng, min_gap=1e-3):
    """Box with independent random rows; retried until clearly signaling."""
    from quasibox.boxes import Box, signaling_gap
    while True:
        box = Box(rng.dirichlet(np.ones(4), size=4))
        if signaling_gap(box) > min_gap:
            return box


def pr_heavy_box(rng):
    """NS box leaning on one PR vertex, so that roughly half the draws are nonlocal."""
    from quasibox.boxes import Box, vertex_boxes
    verts = vertex_boxes()
    w = rng.dirichlet(np.full(24, 0.5)) * (1 - (lead := rng.uniform(0.2, 1.0)))
    w[16 + rng.integers(8)] += lead
    return Box(np.tensordot(w, np.stack([v.p for v in verts]), axes=1))
