"""Deciding whether coin systems are greedy (canonical) and totally greedy."""

from __future__ import annotations

from dataclasses import dataclass

from .coin_core import (
    CoinSystem,
    GreedinessReport,
    Verdict,
    greedy_cost,
)
from .errors import InvalidTriad, NotAnExtension, WrongSize


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class TriadQuery:
    a: int
    b: int

    def __post_init__(self):
        if self.a <= 1 or self.b <= self.a:
            raise InvalidTriad(f"need 1 < a < b, got a={self.a}, b={self.b}")


def triad_is_greedy(q: TriadQuery) -> bool:
    """{1, a, b} is greedy iff b - a lies in some block {ma - m, ..., ma}."""
    d = q.b - q.a
    m = _ceil_div(d, q.a)
    return d >= m * q.a - m


def one_point_extension(system: CoinSystem, s_next: int) -> bool:
    """Whether adding ``s_next`` to the greedy ``system`` keeps it greedy.

    The caller guarantees ``system`` is greedy; that is not re-checked.
    """
    top = system.largest
    if s_next <= top:
        raise NotAnExtension(f"{s_next} does not exceed the largest denomination {top}")
    m = _ceil_div(s_next, top)
    return greedy_cost(system, m * top - s_next) < m


def search_bound(system: CoinSystem) -> int:
    """Exclusive upper bound on the smallest counterexample amount."""
    if len(system) < 2:
        return 1
    return system[-2] + system[-1]


def first_counterexample(system: CoinSystem, upto: int):
    """Smallest k in [1, upto) where greedy pays more than optimal, as ``(k, greedy, optimal)``.

    Both cost tables are filled incrementally so the scan can stop at the
    first mismatch.
    """
    denoms = system.denoms
    opt = [0] * max(upto, 1)
    grd = [0] * max(upto, 1)
    j = 0  # index of the largest coin <= k
    for k in range(1, upto):
        while j + 1 < len(denoms) and denoms[j + 1] <= k:
            j += 1
        grd[k] = grd[k - denoms[j]] + 1
        best = grd[k]
        for i in range(j):
            c = opt[k - denoms[i]] + 1
            if c < best:
                best = c
        opt[k] = best
        if best < grd[k]:
            return k, grd[k], best
    return None


def is_greedy(system: CoinSystem, bound: int | None = None) -> GreedinessReport:
    """Compare greedy against the DP optimum on every amount below the search bound.

    ``bound`` overrides the default exclusive bound ``s_{t-1} + s_t``.
    """
    if len(system) <= 2 and bound is None:
        return GreedinessReport(Verdict.GREEDY)
    upto = search_bound(system) if bound is None else bound
    hit = first_counterexample(system, upto)
    if hit is None:
        return GreedinessReport(Verdict.GREEDY)
    k, g, o = hit
    return GreedinessReport(
        Verdict.NOT_GREEDY,
        witness_amount=k,
        greedy_cost_at_witness=g,
        optimal_cost_at_witness=o,
    )


def first_failing_prefix(denoms) -> int | None:
    """Length of the shortest non-greedy prefix, or None when every prefix is greedy."""
    for n in range(2, len(denoms)):
        prefix = CoinSystem(denoms[:n])
        if not one_point_extension(prefix, denoms[n]):
            return n + 1
    return None


def is_totally_greedy(system: CoinSystem) -> GreedinessReport:
    """Build the system up from {1, s_2} one denomination at a time."""
    n = first_failing_prefix(system.denoms)
    if n is None:
        return GreedinessReport(Verdict.TOTALLY_GREEDY)
    return GreedinessReport(Verdict.NOT_TOTALLY_GREEDY, failing_prefix_length=n)


def four_element_equivalence(system: CoinSystem) -> bool:
    if len(system) != 4:
        raise WrongSize(f"expected 4 denominations, got {len(system)}")
    greedy = is_greedy(system).verdict is Verdict.GREEDY
    total = is_totally_greedy(system).verdict is Verdict.TOTALLY_GREEDY
    return greedy == total
