"""Exact verification harnesses for the recurrence families.

Every check here recomputes from scratch with integer arithmetic, so a bug
anywhere in the package shows up as a failed verdict rather than being
assumed away.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

from . import canonicality
from .canonicality import is_greedy, search_bound
from .coin_core import DEFAULT_DP_LIMIT, CoinSystem, GreedinessReport, Verdict
from .errors import HorizonTooSmall, IneligibleParams, InvalidParams
from .recurrences import (
    PLUS,
    NonHomogParams,
    Type1Params,
    Type2Params,
    even_subsequence_modified,
    generate_nonhomog,
    generate_type1,
    generate_type2,
    odd_subsequence,
)

DEFAULT_DEPTH = 25


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class RatioAnalysis:
    """Where the ratio of consecutive terms settles into (low, high).

    ``k0`` is None when the last checked ratio is still outside the interval.
    """

    k0: Optional[int]
    interval_low: int
    interval_high: int
    horizon: int
    ceil_ratio_after_onset: Optional[int]
    pre_onset_ratios: list[tuple[int, tuple[int, int]]]
    # only for type2 with k0 == 4: whether J_4 / J_3 lies in (p-2, p-1]
    worst_case_bracket: Optional[bool] = None

    def to_dict(self) -> dict:
        return {
            "k0": self.k0,
            "interval": [self.interval_low, self.interval_high],
            "horizon": self.horizon,
            "ceil_ratio_after_onset": self.ceil_ratio_after_onset,
            "pre_onset_ratios": [[n, list(r)] for n, r in self.pre_onset_ratios],
            "worst_case_bracket": self.worst_case_bracket,
        }


def ratio_interval(family: str, p: int) -> tuple[int, int]:
    if family == "type1":
        return p, p + 1
    if family == "type2":
        return p - 1, p
    raise InvalidParams(f"unknown family {family!r}")


def compute_k0(seq: Sequence[int], family: str, p: int, horizon: int) -> RatioAnalysis:
    """Smallest n such that low < seq_{m+1}/seq_m < high for every m in [n, horizon].

    Indices are 1-based; comparisons are cross-multiplied integers.
    """
    if horizon < 5:
        raise HorizonTooSmall(f"horizon must be >= 5, got {horizon}")
    if len(seq) < horizon + 1:
        raise HorizonTooSmall(f"need {horizon + 1} terms, got {len(seq)}")
    low, high = ratio_interval(family, p)
    x = [None, *seq]

    def inside(n: int) -> bool:
        return low * x[n] < x[n + 1] < high * x[n]

    k0 = None
    n = horizon
    while n >= 1 and inside(n):
        k0 = n
        n -= 1

    ceil_ratio = None
    if k0 is not None:
        ceils = {_ceil_div(x[n + 1], x[n]) for n in range(k0, horizon + 1)}
        # a single value, equal to high, whenever the ratios are in the open interval
        ceil_ratio = ceils.pop() if len(ceils) == 1 else None

    last_pre = (k0 - 1) if k0 is not None else horizon
    pre = []
    for n in range(1, last_pre + 1):
        r = Fraction(x[n + 1], x[n])
        pre.append((n, (r.numerator, r.denominator)))

    bracket = None
    if family == "type2" and k0 == 4:
        bracket = (p - 2) * x[3] < x[4] <= (p - 1) * x[3]
    return RatioAnalysis(k0, low, high, horizon, ceil_ratio, pre, bracket)


def compare_a_with_lambda(a: int, p: int, disc: int) -> int:
    """Sign of a - (p + sqrt(disc)) / 2, decided without floating point."""
    lhs = 2 * a - p
    if lhs < 0:
        return -1
    sq = lhs * lhs
    return (sq > disc) - (sq < disc)


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def check_monotonicity(seq: Sequence[int], params: Union[Type1Params, Type2Params]) -> bool:
    """Check that the ratio subsequences move in the direction fixed by sign(a - lambda).

    Type 1: the ratios at odd positions (G2/G1, G4/G3, ...) increase when
    a < lambda and decrease when a > lambda; the ratios at even positions
    (G3/G2, G5/G4, ...) do the opposite. Type 2: the whole ratio sequence
    increases when a < lambda and decreases when a > lambda. When a equals
    lambda the ratios are constant.
    """
    if len(seq) < 8:
        raise ValueError(f"need at least 8 terms, got {len(seq)}")
    side = compare_a_with_lambda(params.a, params.p, params.discriminant)
    g = [None, *seq]
    N = len(seq)
    if isinstance(params, Type1Params):
        # sign(ratio_k - ratio_{k+1}) for G_{2k+2}/G_{2k+1}; positive means decreasing
        first = [
            _sign(g[2 * k + 2] * g[2 * k + 3] - g[2 * k + 1] * g[2 * k + 4])
            for k in range(0, (N - 4) // 2 + 1)
        ]
        second = [
            _sign(g[2 * k + 1] * g[2 * k + 2] - g[2 * k] * g[2 * k + 3])
            for k in range(1, (N - 3) // 2 + 1)
        ]
        # a < lambda: first increasing (diffs < 0), second decreasing (diffs > 0)
        return all(d == side for d in first) and all(d == -side for d in second)
    if isinstance(params, Type2Params):
        diffs = [_sign(g[n + 1] ** 2 - g[n] * g[n + 2]) for n in range(1, N - 1)]
        return all(d == side for d in diffs)
    raise InvalidParams(f"monotonicity is defined for type1/type2, not {params!r}")


@dataclass(frozen=True)
class TheoremVerdict:
    theorem_id: str
    params: dict
    prefix_depth_checked: int
    holds: bool
    first_failure: Optional[tuple[int, Optional[int]]] = None
    notes: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.holds != (self.first_failure is None):
            raise ValueError("holds must be True exactly when there is no failure")

    def to_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "params": self.params,
            "prefix_depth_checked": self.prefix_depth_checked,
            "holds": self.holds,
            "first_failure": list(self.first_failure) if self.first_failure else None,
            "notes": self.notes,
        }


def find_counterexample(seq: Sequence[int], limit: int = DEFAULT_DP_LIMIT) -> GreedinessReport:
    """Total-greediness report with the smallest witness amount on the failing prefix.

    When the failing prefix is too large for the DP oracle the report keeps
    the prefix length and sets ``witness_verified`` to False.
    """
    system = CoinSystem(seq)
    n = canonicality.first_failing_prefix(system.denoms)
    if n is None:
        return GreedinessReport(Verdict.TOTALLY_GREEDY)
    prefix = system.prefix(n)
    if search_bound(prefix) > limit:
        return GreedinessReport(
            Verdict.NOT_TOTALLY_GREEDY, failing_prefix_length=n, witness_verified=False
        )
    rep = is_greedy(prefix)
    return GreedinessReport(
        Verdict.NOT_TOTALLY_GREEDY,
        witness_amount=rep.witness_amount,
        greedy_cost_at_witness=rep.greedy_cost_at_witness,
        optimal_cost_at_witness=rep.optimal_cost_at_witness,
        failing_prefix_length=n,
        witness_verified=rep.witness_amount is not None,
    )


def _chain_verdict(theorem_id: str, params: dict, terms: list[int], notes=None) -> TheoremVerdict:
    rep = find_counterexample(terms)
    failure = None
    if rep.verdict is not Verdict.TOTALLY_GREEDY:
        failure = (rep.failing_prefix_length, rep.witness_amount)
    return TheoremVerdict(theorem_id, params, len(terms), failure is None, failure, notes or {})


def verify_theorem2(params: Type1Params, depth: int = DEFAULT_DEPTH) -> TheoremVerdict:
    """Type-1 sequences with q <= p and 2 <= a <= p + q are totally greedy."""
    if not params.is_type1 or not params.meets_theorem2:
        raise IneligibleParams(f"need q <= p and 2 <= a <= p + q, got {params}")
    if depth < 3:
        raise ValueError(f"depth must be >= 3, got {depth}")
    return _chain_verdict("type1_total", params.to_dict(), generate_type1(params, depth))


def verify_theorem3(params: Type2Params, depth: int = DEFAULT_DEPTH) -> TheoremVerdict:
    """Type-2 sequences are totally greedy for every a."""
    if params.q > params.p - 2:
        raise IneligibleParams(f"need q <= p - 2, got {params}")
    if depth < 4:
        raise ValueError(f"depth must be >= 4, got {depth}")
    return _chain_verdict("type2_total", params.to_dict(), generate_type2(params, depth))


def verify_proposition3(
    params: NonHomogParams, depth: int = DEFAULT_DEPTH, strict: bool = False
) -> TheoremVerdict:
    """Non-homogeneous +q sequences: a greedy prefix up to the ratio onset forces total greediness.

    The one-point step at index k uses T_{k-2}, so the chain can only start
    at k >= 3. With ``strict`` an onset K0 = 2 is ineligible; otherwise the
    greedy prefix is required up to max(K0, 3).
    """
    if params.sign != PLUS or params.q > params.p:
        raise IneligibleParams(f"need the +q family with q <= p, got {params}")
    if depth < 6:
        raise HorizonTooSmall(f"depth must be >= 6, got {depth}")
    terms = generate_nonhomog(params, depth)
    ra = compute_k0(terms, "type1", params.p, depth - 1)
    if ra.k0 is None:
        raise IneligibleParams(f"ratios never settle in ({params.p}, {params.p + 1})")
    if strict and ra.k0 < 3:
        raise IneligibleParams(f"K0 = {ra.k0} < 3")
    onset = max(ra.k0, 3)
    if is_greedy(CoinSystem(terms[:onset])).verdict is not Verdict.GREEDY:
        raise IneligibleParams(f"prefix up to T_{onset} is not greedy")
    notes = {"k0": ra.k0, "onset_used": onset, "strict_reading_applies": ra.k0 >= 3}
    return _chain_verdict("nonhomog_total", params.to_dict(), terms, notes)


def stated_even_family(p: int, q: int, a: int) -> bool:
    """The published parameter family for even type-1 subsequences: p = q + 1, a = q."""
    return p == q + 1 and a == q


def derived_even_family(p: int, q: int, a: int) -> bool:
    """The family that actually satisfies the even-subsequence base equality: a = p + q."""
    return a == p + q


def verify_subsequence_corollaries(
    source: Union[Type1Params, Type2Params], depth: int = 12
) -> dict[str, TheoremVerdict]:
    """Total greediness of the odd and modified even subsequences of a source.

    Keys: ``odd_subsequence`` always; ``even_subsequence_type2`` for type-2
    sources with a = p - q; ``even_subsequence_type1`` for type-1 sources,
    with notes recording the base equality and which family the source is in.
    """
    if depth < 4:
        raise ValueError(f"depth must be >= 4, got {depth}")
    if isinstance(source, Type1Params) and not (source.is_type1 and source.meets_theorem2):
        raise IneligibleParams(f"source {source} is not a totally greedy type-1 sequence")
    out = {}
    odd = odd_subsequence(source, depth)
    out["odd_subsequence"] = _chain_verdict(
        "odd_subsequence",
        source.to_dict(),
        odd.terms,
        {"transformed": odd.params.to_dict()},
    )
    even = even_subsequence_modified(source, depth)
    notes = {"transformed": even.params.to_dict(), "base_equality": even.base_equality_holds}
    if isinstance(source, Type2Params):
        if source.a == source.p - source.q:
            out["even_subsequence_type2"] = _chain_verdict(
                "even_subsequence_type2", source.to_dict(), even.terms, notes
            )
    else:
        p, q, a = source.p, source.q, source.a
        notes["in_stated_family"] = stated_even_family(p, q, a)
        notes["in_derived_family"] = derived_even_family(p, q, a)
        out["even_subsequence_type1"] = _chain_verdict(
            "even_subsequence_type1", source.to_dict(), even.terms, notes
        )
    return out


@dataclass(frozen=True)
class EvenFamilyReport:
    """Grid search over type-1 sources for the even-subsequence base equality."""

    grid_max: int
    solutions: list[tuple[int, int, int]]
    predicate_agrees_everywhere: bool
    all_solutions_in_derived_family: bool
    derived_family_points_all_solutions: bool
    stated_family_points: list[dict]

    @property
    def stated_family_confirmed(self) -> bool:
        return bool(self.stated_family_points) and all(
            pt["base_equality"] for pt in self.stated_family_points
        )

    def to_dict(self) -> dict:
        return {
            "grid_max": self.grid_max,
            "solutions": [list(s) for s in self.solutions],
            "predicate_agrees_everywhere": self.predicate_agrees_everywhere,
            "all_solutions_in_derived_family": self.all_solutions_in_derived_family,
            "derived_family_points_all_solutions": self.derived_family_points_all_solutions,
            "stated_family_points": self.stated_family_points,
            "stated_family_confirmed": self.stated_family_confirmed,
        }


def even_family_search(grid_max: int = 30, depth: int = 10) -> EvenFamilyReport:
    """Find every (p, q, a) with 1 <= q <= p <= grid_max, 2 <= a <= grid_max whose
    modified even subsequence obeys the bisected recurrence from the start.

    The equality is evaluated twice: once by ``even_subsequence_modified`` and
    once directly from G_4 = p (p a + q) + q a.
    """
    solutions = []
    agree = True
    derived_ok = True
    for p in range(1, grid_max + 1):
        for q in range(1, p + 1):
            for a in range(2, grid_max + 1):
                params = Type1Params(a, p, q)
                g4 = generate_type1(params, 4)[3]
                direct = (p * p + 2 * q) * a - q * q == g4
                flag = even_subsequence_modified(params, 3).base_equality_holds
                agree &= flag == direct
                if flag:
                    solutions.append((p, q, a))
                if derived_even_family(p, q, a) != flag:
                    derived_ok = False
    in_derived = all(derived_even_family(*s) for s in solutions)

    stated = []
    for q in range(1, grid_max):
        p, a = q + 1, q
        point = {"p": p, "q": q, "a": a}
        if a < 2:
            point.update(eligible=False, base_equality=False, totally_greedy=None)
        else:
            even = even_subsequence_modified(Type1Params(a, p, q), depth)
            tg = canonicality.is_totally_greedy(CoinSystem(even.terms)).verdict
            point.update(
                eligible=True,
                base_equality=even.base_equality_holds,
                totally_greedy=tg is Verdict.TOTALLY_GREEDY,
            )
        stated.append(point)
    return EvenFamilyReport(grid_max, solutions, agree, in_derived, derived_ok, stated)
