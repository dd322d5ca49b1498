"""Witness distributions that achieve or approach each bound.

Each generator returns the constructed pmf plus a spec describing which
bound it witnesses and whether the bound is hit exactly or only in the
limit of the free parameter epsilon.

The fixed-length lower-bound family is a corrected re-derivation: the
natural parameterization of that witness makes its smallest entry negative,
so we use (p1, 2^-lam x(2^lam - 2), 2^(1-lam) - p1), which sums to one, is
monotone, has a fixed-length optimum, and hits lam + lg p1. Generators mark
this with ``corrected=True``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .bounds import lambda_of, minimax_bounds
from .errors import InvalidEpsilon, InvalidParameter
from .model import Distribution, make_distribution

SNAP_TOL = 1e-12


@dataclass(frozen=True)
class ExtremalSpec:
    family: str
    p1: float
    epsilon: float
    expectation: str  # "achieves" | "approaches"
    target: float
    corrected: bool = False

    def to_json_dict(self) -> dict:
        return {
            "family": self.family,
            "p1": self.p1,
            "epsilon": self.epsilon,
            "expectation": self.expectation,
            "target": self.target,
            "corrected": self.corrected,
        }


def _check_open_unit(p1: float) -> None:
    if not (0.0 < p1 < 1.0):
        raise InvalidParameter(f"p1 = {p1!r} must lie in (0, 1)")


def gen_upper_family(
    p1: float, epsilon: float | None = None
) -> tuple[Distribution, ExtremalSpec]:
    """Distribution whose optimal minimax redundancy meets the upper bound."""
    _check_open_unit(p1)
    target = minimax_bounds(p1).upper
    if p1 >= 0.5:
        eps_max = (1.0 - p1) / 2.0
        achieves = p1 >= 2.0 / 3.0
        if epsilon is None:
            epsilon = eps_max / 2.0 if achieves else 1e-6
        if not (0.0 < epsilon <= eps_max):
            raise InvalidEpsilon(f"epsilon must lie in (0, {eps_max}]")
        probs = [p1, 1.0 - p1 - epsilon, epsilon]
        spec = ExtremalSpec(
            family="upper_two_thirds",
            p1=p1,
            epsilon=epsilon,
            expectation="achieves" if achieves else "approaches",
            target=target,
        )
        return make_distribution(probs), spec

    lam = lambda_of(p1)
    if p1 >= 2.0 / (2 ** lam + 1):
        # row 3: complete fixed-length tree, bound achieved exactly
        eps_max = 1.0 - p1 * 2.0 ** (lam - 1)
        if epsilon is None:
            epsilon = eps_max / 2.0
        if not (0.0 < epsilon < eps_max):
            raise InvalidEpsilon(f"epsilon must lie in (0, {eps_max})")
        mid = (1.0 - p1 - epsilon) / (2 ** lam - 2)
        probs = [p1] + [mid] * (2 ** lam - 2) + [epsilon]
        spec = ExtremalSpec("upper_row3", p1, epsilon, "achieves", target)
        return make_distribution(probs), spec

    # rows 1-2: bound approached as epsilon goes to 0
    eps_max = (1.0 - p1) / 2.0 ** lam
    if epsilon is None:
        epsilon = min(1e-6, eps_max / 2.0)
    if not (0.0 < epsilon <= eps_max):
        raise InvalidEpsilon(f"epsilon must lie in (0, {eps_max}]")
    mid = (1.0 - p1 - epsilon) / (2 ** lam - 1)
    probs = [p1] + [mid] * (2 ** lam - 1) + [epsilon]
    spec = ExtremalSpec("upper_row12", p1, epsilon, "approaches", target)
    return make_distribution(probs), spec


def gen_lower_family(p1: float) -> tuple[Distribution, ExtremalSpec]:
    """Distribution whose optimal minimax redundancy equals the lower bound."""
    _check_open_unit(p1)
    lam = lambda_of(p1)
    target = minimax_bounds(p1).lower
    if p1 < 1.0 / (2 ** lam - 1) or lam == 1:
        # regime where the lower bound is lam + lg p1: fixed-length witness
        probs = [p1] + [2.0 ** (-lam)] * (2 ** lam - 2) + [2.0 ** (1 - lam) - p1]
        spec = ExtremalSpec("lower_fixed", p1, 0.0, "achieves", target, corrected=True)
        return make_distribution(probs), spec
    # complete-tree witness for the lg((1-p1)/(1-2^(1-lam))) regime
    mid = (1.0 - p1) / (2 ** lam - 2)
    probs = [p1] + [mid] * (2 ** lam - 2)
    spec = ExtremalSpec("lower_complete", p1, 0.0, "achieves", target)
    return make_distribution(probs), spec


def gen_l1_family(p1: float, side: str) -> tuple[Distribution, ExtremalSpec]:
    """Witness for the codeword-length bounds of the most probable symbol.

    side="upper": all optimal codes give symbol 1 length nu+1 for
    p1 in [2^(-nu-1), 2^-nu). side="lower": every optimal code has
    l(1) = nu-1 for p1 in (1/(2^nu - 1), 2^(1-nu)).
    """
    _check_open_unit(p1)
    if side == "upper":
        x = -math.log2(p1)
        r = round(x)
        if abs(x - r) <= SNAP_TOL:
            # p1 = 2^-(nu+1) exactly: uniform distribution on 2^(nu+1) symbols
            nu = int(r) - 1
            probs = [2.0 ** (-nu - 1)] * (2 ** (nu + 1))
            spec = ExtremalSpec("l1_upper_witness", p1, 0.0, "achieves", float(nu + 1))
            return make_distribution(probs), spec
        nu = int(math.floor(x))
        n = 2 ** (nu + 1)
        probs = [p1] + [2.0 ** (-nu - 1)] * (n - 2) + [2.0 ** (-nu) - p1]
        spec = ExtremalSpec("l1_upper_witness", p1, 0.0, "achieves", float(nu + 1))
        return make_distribution(probs), spec
    if side == "lower":
        nu = lambda_of(p1)
        if nu < 2 or not p1 > 1.0 / (2 ** nu - 1):
            raise InvalidParameter(
                f"p1 = {p1!r} outside every (1/(2^nu - 1), 2^(1-nu)) range"
            )
        mid = (1.0 - p1) / (2 ** nu - 2)
        probs = [p1] + [mid] * (2 ** nu - 2)
        spec = ExtremalSpec("l1_lower_witness", p1, 0.0, "achieves", float(nu - 1))
        return make_distribution(probs), spec
    raise InvalidParameter(f"side must be 'upper' or 'lower', got {side!r}")
