import numpy as np
import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


class StubRng:
    """Deterministic stand-in for an RNG stream: replays preset draws.

    ``uniforms`` feeds ``random``; ``ints`` feeds ``integers``; ``normals``
    feeds ``normal``. A scalar preset is broadcast to any requested size.
    """

    def __init__(self, uniforms=None, ints=None, normals=None):
        self._uniforms = list(uniforms or [])
        self._ints = list(ints or [])
        self._normals = list(normals or [])

    def _take(self, queue, size):
        value = queue.pop(0)
        if size is None:
            return float(np.asarray(value).ravel()[0])
        out = np.broadcast_to(np.asarray(value, dtype=float), _shape(size)).copy()
        return out

    def random(self, size=None):
        return self._take(self._uniforms, size)

    def normal(self, loc=0.0, scale=1.0, size=None):
        raw = self._take(self._normals, size)
        return loc + scale * raw

    def integers(self, low, high=None, size=None):
        value = self._ints.pop(0)
        if size is None:
            return int(np.asarray(value).ravel()[0])
        return np.broadcast_to(np.asarray(value), _shape(size)).copy()


def _shape(size):
    return (size,) if isinstance(size, int) else tuple(size)


# Collected "criterion N: PASS/FAIL" lines from the acceptance module.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.write_sep("-", "acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES
