"""Coin systems, the greedy payment method and a DP optimal-payment oracle."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

from .errors import AmountExceedsLimit, InvalidCoinSystem

DEFAULT_DP_LIMIT = 10**7


@dataclass(frozen=True)
class CoinSystem:
    """Strictly increasing positive denominations starting at 1."""

    denoms: tuple[int, ...]

    def __init__(self, denoms: Iterable[int]):
        values = tuple(denoms)
        if not values:
            raise InvalidCoinSystem("a coin system needs at least one denomination")
        for d in values:
            if not isinstance(d, int) or isinstance(d, bool):
                raise InvalidCoinSystem(f"denomination {d!r} is not an integer")
        if values[0] != 1:
            raise InvalidCoinSystem(f"smallest denomination must be 1, got {values[0]}")
        for lo, hi in zip(values, values[1:]):
            if hi <= lo:
                raise InvalidCoinSystem(f"denominations not strictly increasing at {lo}, {hi}")
        object.__setattr__(self, "denoms", values)

    @classmethod
    def parse(cls, text: str) -> "CoinSystem":
        """Parse a comma-separated list such as ``"1,2,5"``."""
        parts = [p.strip() for p in text.split(",")]
        try:
            return cls(int(p) for p in parts)
        except ValueError as exc:
            if isinstance(exc, InvalidCoinSystem):
                raise
            raise InvalidCoinSystem(f"cannot parse denominations from {text!r}") from exc

    def __len__(self) -> int:
        return len(self.denoms)

    def __iter__(self) -> Iterator[int]:
        return iter(self.denoms)

    def __getitem__(self, i: int) -> int:
        return self.denoms[i]

    @property
    def largest(self) -> int:
        return self.denoms[-1]

    def prefix(self, length: int) -> "CoinSystem":
        return CoinSystem(self.denoms[:length])

    def extend(self, denom: int) -> "CoinSystem":
        return CoinSystem(self.denoms + (denom,))

    def __str__(self) -> str:
        return "{" + ", ".join(map(str, self.denoms)) + "}"


@dataclass(frozen=True)
class PaymentVector:
    system: CoinSystem
    counts: tuple[int, ...]
    amount: int

    @property
    def cost(self) -> int:
        return sum(self.counts)

    def value(self) -> int:
        return sum(c * d for c, d in zip(self.counts, self.system.denoms))


class Verdict(str, enum.Enum):
    GREEDY = "Greedy"
    NOT_GREEDY = "NotGreedy"
    TOTALLY_GREEDY = "TotallyGreedy"
    NOT_TOTALLY_GREEDY = "NotTotallyGreedy"

    @property
    def positive(self) -> bool:
        return self in (Verdict.GREEDY, Verdict.TOTALLY_GREEDY)


@dataclass(frozen=True)
class GreedinessReport:
    verdict: Verdict
    witness_amount: Optional[int] = None
    greedy_cost_at_witness: Optional[int] = None
    optimal_cost_at_witness: Optional[int] = None
    failing_prefix_length: Optional[int] = None
    # False when a failing prefix was found but its DP witness was out of reach
    witness_verified: bool = field(default=True)

    def __post_init__(self):
        if self.verdict.positive:
            if any(
                v is not None
                for v in (
                    self.witness_amount,
                    self.greedy_cost_at_witness,
                    self.optimal_cost_at_witness,
                    self.failing_prefix_length,
                )
            ):
                raise ValueError("positive verdicts carry no witness")
        elif self.verdict is Verdict.NOT_GREEDY:
            if self.witness_amount is None or not (
                self.greedy_cost_at_witness > self.optimal_cost_at_witness
            ):
                raise ValueError("NotGreedy needs a witness where greedy is worse")

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "witness_amount": self.witness_amount,
            "greedy_cost_at_witness": self.greedy_cost_at_witness,
            "optimal_cost_at_witness": self.optimal_cost_at_witness,
            "failing_prefix_length": self.failing_prefix_length,
            "witness_verified": self.witness_verified,
        }


def _check_amount(k: int) -> None:
    if k < 0:
        raise ValueError(f"amount must be nonnegative, got {k}")


def greedy_payment(system: CoinSystem, k: int) -> PaymentVector:
    """Pay ``k`` by taking as many of the largest coin as fit, then the next, and so on."""
    _check_amount(k)
    amount = k
    counts = [0] * len(system)
    for i in range(len(system) - 1, -1, -1):
        counts[i], k = divmod(k, system[i])
    return PaymentVector(system, tuple(counts), amount)


def greedy_cost(system: CoinSystem, k: int) -> int:
    _check_amount(k)
    cost = 0
    for d in reversed(system.denoms):
        q, k = divmod(k, d)
        cost += q
    return cost


def optimal_cost_table(denoms: Sequence[int], upto: int) -> list[int]:
    """Minimal coin counts for every amount ``0..upto``."""
    table = [0] * (upto + 1)
    for x in range(1, upto + 1):
        best = x  # all ones
        for d in denoms:
            if d > x:
                break
            c = table[x - d] + 1
            if c < best:
                best = c
        table[x] = best
    return table


def _dp_with_predecessor(system: CoinSystem, k: int) -> tuple[list[int], list[int]]:
    cost = [0] * (k + 1)
    pred = [0] * (k + 1)
    denoms = system.denoms
    for x in range(1, k + 1):
        best = None
        choice = 0
        # scanning downward and keeping strict improvements prefers the largest coin on ties
        for i in range(len(denoms) - 1, -1, -1):
            d = denoms[i]
            if d > x:
                continue
            c = cost[x - d] + 1
            if best is None or c < best:
                best, choice = c, i
        cost[x] = best
        pred[x] = choice
    return cost, pred


def optimal_payment(system: CoinSystem, k: int, limit: int = DEFAULT_DP_LIMIT) -> PaymentVector:
    """A minimal-cost payment of ``k`` found by dynamic programming over ``0..k``.

    Which of several optimal vectors is returned is not part of the contract.
    """
    _check_amount(k)
    if k > limit:
        raise AmountExceedsLimit(f"amount {k} exceeds DP limit {limit}")
    _, pred = _dp_with_predecessor(system, k)
    counts = [0] * len(system)
    x = k
    while x > 0:
        i = pred[x]
        counts[i] += 1
        x -= system[i]
    return PaymentVector(system, tuple(counts), k)


def optimal_cost(system: CoinSystem, k: int, limit: int = DEFAULT_DP_LIMIT) -> int:
    _check_amount(k)
    if k > limit:
        raise AmountExceedsLimit(f"amount {k} exceeds DP limit {limit}")
    return optimal_cost_table(system.denoms, k)[k]
