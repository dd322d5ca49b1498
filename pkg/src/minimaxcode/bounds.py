"""Closed-form bounds on optimal redundancy in terms of the top probability.

The minimax interval is piecewise in lambda = ceil(-lg p1) with three rows
per lambda; for p1 >= 2/3 the optimum is fully determined at 1 + lg p1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidParameter, SizeMismatch
from .model import Distribution, LengthVector
from .objectives import (
    avg_redundancy,
    dth_exp_redundancy,
    max_pointwise_redundancy,
)

CHAIN_TOL = 1e-9
SNAP_TOL = 1e-12


def lambda_of(p1: float) -> int:
    """ceil(-lg p1), snapping near-integer logs so dyadic p1 lands exactly."""
    x = -math.log2(p1)
    r = round(x)
    if abs(x - r) <= SNAP_TOL:
        return int(r)
    return int(math.ceil(x))


@dataclass(frozen=True)
class BoundInterval:
    lower: float
    upper: float
    lower_achievable: bool
    upper_achievable: bool
    lam: int
    determined: bool
    tight: bool = True

    def contains(self, value: float, tol: float = CHAIN_TOL) -> bool:
        if value < self.lower - tol:
            return False
        if self.upper_achievable:
            return value <= self.upper + tol
        return value < self.upper + tol

    def to_json_dict(self) -> dict:
        return {
            "lower": self.lower,
            "upper": self.upper,
            "lower_achievable": self.lower_achievable,
            "upper_achievable": self.upper_achievable,
            "lambda": self.lam,
            "determined": self.determined,
            "tight": self.tight,
        }


@dataclass(frozen=True)
class L1Bounds:
    max_over_all_optima: int
    min_over_some_optimum: int

    def to_json_dict(self) -> dict:
        return {
            "max_over_all_optima": self.max_over_all_optima,
            "min_over_some_optimum": self.min_over_some_optimum,
        }


def _check_p1(p1: float, allow_one: bool) -> None:
    hi_ok = p1 <= 1.0 if allow_one else p1 < 1.0
    if not (0.0 < p1 and hi_ok):
        raise InvalidParameter(f"p1 = {p1!r} out of range")


def minimax_bounds(p1: float) -> BoundInterval:
    """Tight interval for the optimal maximum pointwise redundancy given p1."""
    _check_p1(p1, allow_one=True)
    if p1 == 1.0:
        return BoundInterval(0.0, 0.0, True, True, 0, True)
    if p1 >= 2.0 / 3.0:
        v = 1.0 + math.log2(p1)
        return BoundInterval(v, v, True, True, 1, True)
    lam = lambda_of(p1)
    if p1 >= 0.5:
        return BoundInterval(
            1.0 + math.log2(p1), 2.0 + math.log2(1.0 - p1), True, False, lam, False
        )
    row23_lower = math.log2((1.0 - p1) / (1.0 - 2.0 ** (-lam + 1)))
    row12_upper = 1.0 + math.log2((1.0 - p1) / (1.0 - 2.0 ** (-lam)))
    if p1 < 1.0 / (2 ** lam - 1):
        # row 1: fixed-length lower, first-order-Shannon upper
        return BoundInterval(lam + math.log2(p1), row12_upper, True, False, lam, False)
    if p1 < 2.0 / (2 ** lam + 1):
        # row 2
        return BoundInterval(row23_lower, row12_upper, True, False, lam, False)
    # row 3: upper bound achieved by a complete fixed-length tree
    return BoundInterval(row23_lower, lam + math.log2(p1), True, True, lam, False)


def l1_bounds(p1: float) -> L1Bounds:
    """Codeword-length bounds for the most probable symbol.

    Every optimal code has l(1) <= ceil(-lg p1); some optimal code has
    l(1) >= floor(lg(1 + 1/p1)).
    """
    _check_p1(p1, allow_one=False)
    nu_max = lambda_of(p1)
    y = math.log2(1.0 + 1.0 / p1)
    r = round(y)
    nu_min = int(r) if abs(y - r) <= SNAP_TOL else int(math.floor(y))
    return L1Bounds(max_over_all_optima=nu_max, min_over_some_optimum=nu_min)


def gallager_upper_avg(p1: float) -> float:
    """Gallager's upper bound p1 + 0.086 on optimal average redundancy (uncapped)."""
    _check_p1(p1, allow_one=False)
    return p1 + 0.086


def avg_lower_moab(p1: float) -> float:
    """Lower bound on optimal average redundancy in terms of p1.

    xi - (1-p1) lg(2^xi - 1) - H(p1, 1-p1) with
    xi = ceil(lg((1 - 2^(1/(p1-1))) / (1 - 2^(p1/(p1-1))))).
    """
    _check_p1(p1, allow_one=False)
    num = 1.0 - 2.0 ** (1.0 / (p1 - 1.0))
    den = 1.0 - 2.0 ** (p1 / (p1 - 1.0))
    x = math.log2(num / den)
    r = round(x)
    xi = int(r) if abs(x - r) <= SNAP_TOL else int(math.ceil(x))
    # the ratio exceeds 1 analytically; underflow near p1 = 1 can round it to 1
    xi = max(xi, 1)
    h2 = -(p1 * math.log2(p1) + (1.0 - p1) * math.log2(1.0 - p1))
    penalty = 0.0 if xi == 1 else (1.0 - p1) * math.log2(2.0 ** xi - 1.0)
    return xi - penalty - h2


def dexp_bounds(p1: float, d: float) -> BoundInterval:
    """Valid (not tight) interval for optimal d-th exponential redundancy:
    the average-redundancy lower bound with the minimax upper bound."""
    _check_p1(p1, allow_one=False)
    if not d > 0:
        raise InvalidParameter(f"order {d!r} must be positive")
    mm = minimax_bounds(p1)
    return BoundInterval(
        lower=avg_lower_moab(p1),
        upper=mm.upper,
        lower_achievable=True,
        upper_achievable=mm.upper_achievable,
        lam=mm.lam,
        determined=False,
        tight=False,
    )


def simple_chain(
    p: Distribution, l: LengthVector, d_list: tuple[float, ...] = (1.0,)
) -> tuple[float, ...]:
    """(avg, R^d..., max) for the given lengths, checked to be nondecreasing."""
    if p.n != l.n:
        raise SizeMismatch(f"distribution has {p.n} symbols, lengths {l.n}")
    values = [avg_redundancy(p, l)]
    for d in sorted(d_list):
        values.append(dth_exp_redundancy(p, l, d))
    values.append(max_pointwise_redundancy(p, l).max_pointwise_redundancy)
    for a, b in zip(values, values[1:]):
        assert a <= b + CHAIN_TOL, f"redundancy chain violated: {values}"
    return tuple(values)
