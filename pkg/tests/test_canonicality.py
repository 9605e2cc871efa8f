import itertools

import pytest

from conftest import brute_force_min_cost
from greedyseq.canonicality import (
    TriadQuery,
    first_counterexample,
    four_element_equivalence,
    is_greedy,
    is_totally_greedy,
    one_point_extension,
    triad_is_greedy,
)
from greedyseq.coin_core import CoinSystem, Verdict, greedy_cost
from greedyseq.errors import InvalidTriad, NotAnExtension, WrongSize


def dp_sweep_greedy(system, upto):
    """Greedy on every amount 1..upto, checked against exhaustive enumeration."""
    return all(
        greedy_cost(system, k) == brute_force_min_cost(system.denoms, k) for k in range(1, upto + 1)
    )


@pytest.mark.parametrize(
    "a,b,expected", [(4, 6, False), (2, 5, True), (2, 4, True), (3, 10, True)]
)
def test_triad_examples(a, b, expected):
    assert triad_is_greedy(TriadQuery(a, b)) is expected
    assert dp_sweep_greedy(CoinSystem([1, a, b]), a + b + 3) is expected


@pytest.mark.parametrize("a,b", [(1, 5), (0, 3), (4, 4), (5, 3)])
def test_invalid_triads(a, b):
    with pytest.raises(InvalidTriad):
        TriadQuery(a, b)


def test_triad_matches_dp_small_grid():
    for b in range(3, 61):
        for a in range(2, b):
            slow = is_greedy(CoinSystem([1, a, b])).verdict is Verdict.GREEDY
            assert triad_is_greedy(TriadQuery(a, b)) == slow, (a, b)


def test_one_point_examples():
    assert one_point_extension(CoinSystem([1, 3, 5, 11, 21]), 43) is False
    assert one_point_extension(CoinSystem([1, 2, 5]), 10) is True
    # m = 3, 87 - 79 = 8 costs 4 coins greedily
    assert one_point_extension(CoinSystem([1, 3, 10, 29]), 79) is False
    with pytest.raises(NotAnExtension):
        one_point_extension(CoinSystem([1, 3]), 3)


def test_is_greedy_examples():
    assert is_greedy(CoinSystem([1, 2, 5, 6, 10])).verdict is Verdict.GREEDY
    assert is_greedy(CoinSystem([1])).verdict is Verdict.GREEDY
    rep = is_greedy(CoinSystem([1, 2, 5, 6]))
    assert (rep.verdict, rep.witness_amount, rep.greedy_cost_at_witness, rep.optimal_cost_at_witness) == (
        Verdict.NOT_GREEDY, 10, 3, 2
    )
    rep = is_greedy(CoinSystem([1, 3, 5, 11, 21, 43]))
    assert (rep.witness_amount, rep.greedy_cost_at_witness, rep.optimal_cost_at_witness) == (63, 5, 3)


def test_witness_is_smallest():
    for denoms in ([1, 2, 5, 6], [1, 3, 5, 11, 21, 43], [1, 3, 10, 29, 79], [1, 4, 6]):
        s = CoinSystem(denoms)
        w = is_greedy(s).witness_amount
        assert greedy_cost(s, w) > brute_force_min_cost(denoms, w)
        assert dp_sweep_greedy(s, w - 1)


def test_is_totally_greedy_examples():
    assert is_totally_greedy(CoinSystem([1, 2, 3, 5, 8, 13])).verdict is Verdict.TOTALLY_GREEDY
    rep = is_totally_greedy(CoinSystem([1, 2, 5, 6, 10]))
    assert rep.verdict is Verdict.NOT_TOTALLY_GREEDY and rep.failing_prefix_length == 4
    for a in (2, 3, 17, 10**30):
        assert is_totally_greedy(CoinSystem([1, a])).verdict is Verdict.TOTALLY_GREEDY


def test_four_element_examples():
    for denoms in ([1, 2, 5, 6], [1, 2, 4, 8], [1, 5, 9, 13]):
        assert four_element_equivalence(CoinSystem(denoms))
    assert is_greedy(CoinSystem([1, 2, 4, 8])).verdict is Verdict.GREEDY
    with pytest.raises(WrongSize):
        four_element_equivalence(CoinSystem([1, 2, 3]))


def test_bound_against_wide_sweep(small_systems):
    for s in small_systems:
        assert is_greedy(s).verdict == is_greedy(s, bound=3 * s.largest + 1).verdict, s


def test_one_point_equivalence(small_systems):
    for s in small_systems:
        if is_greedy(s).verdict is not Verdict.GREEDY:
            continue
        for nxt in range(s.largest + 1, 61):
            ext = is_greedy(s.extend(nxt)).verdict is Verdict.GREEDY
            assert one_point_extension(s, nxt) == ext, (s, nxt)


def test_totally_greedy_implies_greedy(small_systems):
    for s in small_systems:
        if is_totally_greedy(s).verdict is Verdict.TOTALLY_GREEDY:
            assert is_greedy(s).verdict is Verdict.GREEDY


def test_four_elements_exhaustive():
    for rest in itertools.combinations(range(2, 41), 3):
        assert four_element_equivalence(CoinSystem((1, *rest))), rest


def test_first_counterexample_against_brute_force():
    for rest in itertools.combinations(range(2, 16), 3):
        s = CoinSystem((1, *rest))
        hit = first_counterexample(s, 3 * s.largest)
        expected = next(
            (k for k in range(1, 3 * s.largest) if greedy_cost(s, k) != brute_force_min_cost(s.denoms, k)),
            None,
        )
        assert (hit[0] if hit else None) == expected
