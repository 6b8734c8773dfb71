import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from approxnash.game import MixedProfile


def random_profile(rng: np.random.Generator, k: int, n: int, max_support: int | None = None) -> MixedProfile:
    probs = []
    for _ in range(k):
        size = rng.integers(1, (max_support or n) + 1)
        support = rng.choice(n, size=size, replace=False)
        p = np.zeros(n)
        p[support] = rng.dirichlet(np.ones(size))
        probs.append(p)
    return MixedProfile.from_probs(probs)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
