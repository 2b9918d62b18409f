import random
from fractions import Fraction

import pytest

from sapsolve import Instance, Seminar


def make_instance(num_students, allowed, profits):
    """Shorthand instance builder: allowed is a list of size tuples,
    profits a list of integer/Fraction rows."""
    seminars = tuple(Seminar(f"s{b}", tuple(sizes)) for b, sizes in enumerate(allowed))
    rows = tuple(tuple(Fraction(p) for p in row) for row in profits)
    return Instance(num_students=num_students, seminars=seminars, profits=rows)


def random_small_instance(rng: random.Random, max_students=6, max_seminars=3, p_max=9,
                          max_sizes=2, fractional=False):
    """Instance with few students and small allowed-size sets, for oracle-backed tests."""
    n = rng.randint(1, max_students)
    m = rng.randint(1, max_seminars)
    allowed = []
    for _ in range(m):
        count = rng.randint(1, min(max_sizes, n))
        allowed.append((0, *sorted(rng.sample(range(1, n + 1), count))))
    if fractional:
        profits = [
            [Fraction(rng.randint(0, p_max), rng.randint(1, 5)) for _ in range(m)]
            for _ in range(n)
        ]
    else:
        profits = [[rng.randint(0, p_max) for _ in range(m)] for _ in range(n)]
    return make_instance(n, allowed, profits)


@pytest.fixture
def worked_instance():
    """3 students, 2 seminars; the solved example used across modules."""
    return make_instance(3, [(0, 1), (0, 2)], [[5, 4], [3, 4], [1, 2]])
