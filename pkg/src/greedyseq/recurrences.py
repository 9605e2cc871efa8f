"""Second-order recurrence families, their roots, and odd/even subsequences.

Sequences are 1-indexed with first term 1 and second term ``a``:

* type 1:     G_n = p G_{n-1} + q G_{n-2}
* type 2:     J_n = p J_{n-1} - q J_{n-2}        (q <= p - 2)
* non-homog:  T_n = p T_{n-1} +/- q T_{n-2} + r

All terms are exact Python integers. Roots are carried at 50 significant
digits and are only used for diagnostics; every bound that matters is
decided by integer comparisons on the discriminant instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional, Union

import mpmath

from .errors import DegenerateRoots, InvalidParams, NotMonotonic

DIGITS = 50

_ctx = mpmath.MPContext()
_ctx.dps = DIGITS + 10


@dataclass(frozen=True)
class Type1Params:
    a: int
    p: int
    q: int

    def __post_init__(self):
        if self.a < 2 or self.p < 1 or self.q < 1:
            raise InvalidParams(f"type-1 needs a >= 2, p >= 1, q >= 1; got {self}")

    family = "type1"

    @property
    def is_type1(self) -> bool:
        return self.q <= self.p

    @property
    def meets_theorem2(self) -> bool:
        """2 <= a <= p + q, the condition for total greediness."""
        return 2 <= self.a <= self.p + self.q

    @property
    def discriminant(self) -> int:
        return self.p * self.p + 4 * self.q

    def to_dict(self) -> dict:
        return {"family": self.family, "a": self.a, "p": self.p, "q": self.q}


@dataclass(frozen=True)
class Type2Params:
    a: int
    p: int
    q: int

    def __post_init__(self):
        if self.a < 2 or self.q < 1 or self.q > self.p - 2:
            raise InvalidParams(f"type-2 needs a >= 2 and 1 <= q <= p - 2; got {self}")

    family = "type2"

    @property
    def discriminant(self) -> int:
        return self.p * self.p - 4 * self.q

    def to_dict(self) -> dict:
        return {"family": self.family, "a": self.a, "p": self.p, "q": self.q}


PLUS, MINUS = 1, -1


@dataclass(frozen=True)
class NonHomogParams:
    a: int
    p: int
    q: int
    r: int
    sign: int = PLUS  # sign in front of q T_{n-2}

    def __post_init__(self):
        if self.a < 2 or self.p < 1 or self.q < 1:
            raise InvalidParams(f"need a >= 2, p >= 1, q >= 1; got {self}")
        if self.r == 0:
            raise InvalidParams("r must be nonzero; use the homogeneous families instead")
        if self.sign not in (PLUS, MINUS):
            raise InvalidParams(f"sign must be +1 or -1, got {self.sign}")

    family = "nonhomog"

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "a": self.a,
            "p": self.p,
            "q": self.q,
            "r": self.r,
            "sign": "plus" if self.sign == PLUS else "minus",
        }


Params = Union[Type1Params, Type2Params, NonHomogParams]


def _run(a: int, p: int, q_signed: int, r: int, n: int) -> list[int]:
    if n < 1:
        raise ValueError(f"need at least one term, got n={n}")
    terms = [1, a][:n]
    while len(terms) < n:
        terms.append(p * terms[-1] + q_signed * terms[-2] + r)
    return terms


def generate_type1(params: Type1Params, n: int) -> list[int]:
    return _run(params.a, params.p, params.q, 0, n)


def generate_type2(params: Type2Params, n: int) -> list[int]:
    return _run(params.a, params.p, -params.q, 0, n)


def generate_nonhomog(params: NonHomogParams, n: int) -> list[int]:
    terms = _run(params.a, params.p, params.sign * params.q, params.r, n)
    for k in range(1, len(terms)):
        if terms[k] <= terms[k - 1]:
            raise NotMonotonic(
                f"T_{k + 1} = {terms[k]} does not exceed T_{k} = {terms[k - 1]}"
            )
    return terms


def generate(params: Params, n: int) -> list[int]:
    if isinstance(params, Type1Params):
        return generate_type1(params, n)
    if isinstance(params, Type2Params):
        return generate_type2(params, n)
    return generate_nonhomog(params, n)


def third_order_reduction_check(params: NonHomogParams, n: int) -> bool:
    """Check T_{k+1} = (p+1) T_k + (q-p) T_{k-1} - q T_{k-2} for 3 <= k <= n-1.

    Subtracting consecutive instances of the recurrence eliminates r.
    """
    if params.sign != PLUS:
        raise InvalidParams("the reduction is stated for the +q family")
    if n < 4:
        raise ValueError(f"need n >= 4, got {n}")
    t = [None] + generate_nonhomog(params, n)  # 1-based
    p, q = params.p, params.q
    return all(
        t[k + 1] == (p + 1) * t[k] + (q - p) * t[k - 1] - q * t[k - 2]
        for k in range(3, n)
    )


@dataclass(frozen=True)
class CharacteristicRoots:
    family: str
    p: int
    q: int
    discriminant: int
    lam: mpmath.mpf
    mu: mpmath.mpf
    a: Optional[int] = None
    c1: Optional[mpmath.mpf] = None
    c2: Optional[mpmath.mpf] = None

    def to_dict(self) -> dict:
        def s(x):
            return None if x is None else _ctx.nstr(x, DIGITS)

        return {
            "family": self.family,
            "p": self.p,
            "q": self.q,
            "a": self.a,
            "discriminant": self.discriminant,
            "lambda": s(self.lam),
            "mu": s(self.mu),
            "c1": s(self.c1),
            "c2": s(self.c2),
        }


def char_roots(p: int, q: int, family: str, a: Optional[int] = None) -> CharacteristicRoots:
    """Roots of x^2 - p x - q (type1) or x^2 - p x + q (type2).

    With ``a`` given, also the closed-form coefficients
    c1 = (a - mu) / (lam - mu), c2 = (lam - a) / (lam - mu).
    """
    if family == "type1":
        disc = p * p + 4 * q
    elif family == "type2":
        disc = p * p - 4 * q
        if disc <= 0:
            raise DegenerateRoots(f"p^2 - 4q = {disc} <= 0 for p={p}, q={q}")
    else:
        raise InvalidParams(f"unknown family {family!r}")
    root = _ctx.sqrt(disc)
    lam = (p + root) / 2
    mu = (p - root) / 2
    c1 = c2 = None
    if a is not None:
        c1 = (a - mu) / (lam - mu)
        c2 = (lam - a) / (lam - mu)
    return CharacteristicRoots(family, p, q, disc, lam, mu, a, c1, c2)


def closed_form_eval(roots: CharacteristicRoots, n: int) -> mpmath.mpf:
    """The n-th term (1-based) as c1 lam^(n-1) + c2 mu^(n-1)."""
    if roots.c1 is None:
        raise ValueError("roots were computed without a; coefficients unknown")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return roots.c1 * roots.lam ** (n - 1) + roots.c2 * roots.mu ** (n - 1)


def relative_error(exact: int, approx) -> mpmath.mpf:
    return abs(_ctx.mpf(exact) - approx) / abs(_ctx.mpf(exact))


class Subsequence(NamedTuple):
    terms: list[int]
    params: Type2Params
    base_equality_holds: Optional[bool] = None


def _bisection_params(source: Union[Type1Params, Type2Params]) -> tuple[int, int]:
    p, q = source.p, source.q
    if isinstance(source, Type1Params):
        if not source.is_type1:
            raise InvalidParams(f"q > p: the bisection of {source} is not of type 2")
        return p * p + 2 * q, q * q
    return p * p - 2 * q, q * q


def odd_subsequence(source: Union[Type1Params, Type2Params], n: int) -> Subsequence:
    """Terms 1, 3, 5, ... of the source, with the type-2 recurrence they satisfy."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    p2, q2 = _bisection_params(source)
    full = generate(source, 2 * n - 1)
    terms = full[::2]
    return Subsequence(terms, Type2Params(a=terms[1], p=p2, q=q2))


def even_subsequence_modified(source: Union[Type1Params, Type2Params], n: int) -> Subsequence:
    """1 followed by the even-indexed terms a, X_4, X_6, ...

    ``base_equality_holds`` tells whether p'' a - q'' equals the source's 4th
    term, which is exactly when the list obeys the bisected recurrence from
    its third term on.
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    p2, q2 = _bisection_params(source)
    full = generate(source, 2 * (n - 1))
    terms = [1] + full[1::2]
    holds = p2 * source.a - q2 == full[3]
    return Subsequence(terms, Type2Params(a=source.a, p=p2, q=q2), holds)


def satisfies_recurrence(terms: list[int], p: int, q_signed: int, start: int = 3) -> bool:
    """X_k = p X_{k-1} + q_signed X_{k-2} for every 1-based k >= start."""
    return all(
        terms[k - 1] == p * terms[k - 2] + q_signed * terms[k - 3]
        for k in range(start, len(terms) + 1)
    )


def format_terms(terms: list[int]) -> str:
    """Newline-delimited decimal rendering."""
    return "\n".join(str(t) for t in terms)
