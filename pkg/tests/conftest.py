import itertools

import pytest

from greedyseq.coin_core import CoinSystem


def brute_force_min_cost(denoms, k):
    """Minimal coin count by enumerating every multiplicity vector."""
    best = None

    def rec(i, remaining, used):
        nonlocal best
        if i < 0:
            if remaining == 0 and (best is None or used < best):
                best = used
            return
        d = denoms[i]
        for c in range(remaining // d, -1, -1):
            rec(i - 1, remaining - c * d, used + c)

    rec(len(denoms) - 1, k, 0)
    return best


def all_representations(denoms, k):
    ranges = [range(k // d + 1) for d in denoms]
    for counts in itertools.product(*ranges):
        if sum(c * d for c, d in zip(counts, denoms)) == k:
            yield counts


def enumerate_systems(tmax, smax):
    for t in range(1, tmax + 1):
        for rest in itertools.combinations(range(2, smax + 1), t - 1):
            yield CoinSystem((1, *rest))


@pytest.fixture(scope="session")
def small_systems():
    return list(enumerate_systems(5, 30))
