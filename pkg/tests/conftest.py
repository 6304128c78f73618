import random

import pytest

from knotconc.seifert import SeifertMatrix


def random_seifert(rng, genus, bound=2):
    """Random valid Seifert matrix: V - V^t is the standard symplectic form."""
    n = 2 * genus
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = rng.randint(-bound, bound)
        for j in range(i + 1, n):
            rows[i][j] = rng.randint(-bound, bound)
            rows[j][i] = rows[i][j]
    for b in range(genus):
        i, j = 2 * b, 2 * b + 1
        rows[j][i] = rows[i][j] - 1
    return SeifertMatrix(rows)


@pytest.fixture
def rng():
    return random.Random(20240817)
