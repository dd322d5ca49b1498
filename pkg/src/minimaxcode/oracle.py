"""Ground truth by exhaustion over Kraft-feasible monotone length vectors.

Restricting the search to nondecreasing vectors with max length <= n-1 is
lossless for any objective that is nondecreasing in each length: every
Kraft-feasible vector is componentwise dominated by one in this set.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator, Union

import numpy as np

from . import _kernels
from .errors import InvalidParameter, TooLarge
from .model import Distribution, LengthVector
from .objectives import (
    avg_redundancy,
    dth_exp_redundancy,
    exp_average,
    max_pointwise_redundancy,
)

ENUM_MAX_N = 16
ALL_OPTIMA_MAX_N = 9
CO_OPT_TOL = 1e-9

# an objective is either a named spec or an arbitrary (p, l) -> float callable
Objective = Union[str, tuple, Callable[[Distribution, LengthVector], float]]


@dataclass(frozen=True)
class OptimaSet:
    objective_name: str
    optimum_value: float
    vectors: tuple[LengthVector, ...]

    @property
    def best(self) -> LengthVector:
        return self.vectors[0]


def enumerate_length_vectors(n: int) -> Iterator[LengthVector]:
    """Yield every nondecreasing Kraft-feasible vector with max length <= n-1,
    in lexicographic order."""
    if n < 1:
        raise InvalidParameter(f"n = {n!r} must be positive")
    if n > ENUM_MAX_N:
        raise TooLarge(f"n = {n} exceeds enumeration limit {ENUM_MAX_N}")
    if n == 1:
        yield LengthVector((0,))
        return
    # Kraft mass scaled by 2^(n-1): one unit is the smallest allowed codeword
    budget = 1 << (n - 1)
    cur: list[int] = []

    def rec(k: int, last: int, used: int):
        if k == 0:
            yield LengthVector(tuple(cur))
            return
        for li in range(max(last, 1), n):
            mass = 1 << (n - 1 - li)
            if used + mass + (k - 1) > budget:
                continue
            cur.append(li)
            yield from rec(k - 1, li, used + mass)
            cur.pop()

    yield from rec(n, 0, 0)


@lru_cache(maxsize=None)
def length_matrix(n: int) -> np.ndarray:
    """All enumerated vectors for n, stacked as an m x n int64 matrix."""
    return np.array([list(v) for v in enumerate_length_vectors(n)], dtype=np.int64)


def _objective_name(objective: Objective) -> str:
    if isinstance(objective, str):
        return objective
    if isinstance(objective, tuple):
        name, param = objective
        return f"{name}[{param:g}]"
    return getattr(objective, "__name__", "custom")


def _score_all(p: Distribution, objective: Objective) -> tuple[np.ndarray, np.ndarray]:
    L = length_matrix(p.n)
    parr = np.asarray(p.probs)
    lgp = np.log2(parr)
    if isinstance(objective, str):
        if objective == "avg":
            return L, _kernels.avg_scores(L, parr, lgp)
        if objective == "minimax":
            return L, _kernels.minimax_scores(L, parr, lgp)
        raise InvalidParameter(f"unknown objective {objective!r}")
    if isinstance(objective, tuple):
        name, param = objective
        if name == "exp":
            return L, _kernels.exp_scores(L, parr, lgp, float(np.log2(param)))
        if name == "dexp":
            return L, _kernels.dexp_scores(L, parr, lgp, float(param))
        raise InvalidParameter(f"unknown objective {objective!r}")
    scores = np.array([objective(p, LengthVector(tuple(row))) for row in L])
    return L, scores


def evaluate(p: Distribution, l: LengthVector, objective: Objective) -> float:
    """Evaluate a named or callable objective on one (p, l) pair."""
    if isinstance(objective, str):
        if objective == "avg":
            return avg_redundancy(p, l)
        if objective == "minimax":
            return max_pointwise_redundancy(p, l).max_pointwise_redundancy
        raise InvalidParameter(f"unknown objective {objective!r}")
    if isinstance(objective, tuple):
        name, param = objective
        if name == "exp":
            return exp_average(p, l, param)
        if name == "dexp":
            return dth_exp_redundancy(p, l, param)
        raise InvalidParameter(f"unknown objective {objective!r}")
    return objective(p, l)


def brute_force_optimum(p: Distribution, objective: Objective) -> OptimaSet:
    """Global minimum over the enumerated vectors (lexicographically first
    argmin only)."""
    if p.n > ENUM_MAX_N:
        raise TooLarge(f"n = {p.n} exceeds enumeration limit {ENUM_MAX_N}")
    L, scores = _score_all(p, objective)
    j = int(np.argmin(scores))
    return OptimaSet(
        objective_name=_objective_name(objective),
        optimum_value=float(scores[j]),
        vectors=(LengthVector(tuple(int(x) for x in L[j])),),
    )


def all_optima(p: Distribution, objective: Objective) -> OptimaSet:
    """Complete set of co-optimal vectors (within CO_OPT_TOL of the minimum)."""
    if p.n > ALL_OPTIMA_MAX_N:
        raise TooLarge(f"n = {p.n} exceeds all-optima limit {ALL_OPTIMA_MAX_N}")
    L, scores = _score_all(p, objective)
    best = float(np.min(scores))
    rows = np.nonzero(scores <= best + CO_OPT_TOL)[0]
    return OptimaSet(
        objective_name=_objective_name(objective),
        optimum_value=best,
        vectors=tuple(LengthVector(tuple(int(x) for x in L[j])) for j in rows),
    )
