"""Codeword-length objectives and redundancy functionals.

All exponential objectives are evaluated in the log domain (base-2
log-sum-exp) so that large exponents and tiny probabilities never overflow
or underflow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidBase, InvalidParameter, SizeMismatch
from .model import Distribution, LengthVector

BIT_TOL = 1e-9


def _check_sizes(p: Distribution, l: LengthVector) -> None:
    if p.n != l.n:
        raise SizeMismatch(f"distribution has {p.n} symbols, lengths {l.n}")


def pointwise_redundancies(p: Distribution, l: LengthVector) -> list[float]:
    """Per-symbol excess l(i) + lg p(i) over self-information."""
    _check_sizes(p, l)
    return [li + math.log2(pi) for pi, li in zip(p.probs, l)]


def entropy(p: Distribution) -> float:
    """Shannon entropy in bits."""
    return float(-sum(pi * math.log2(pi) for pi in p.probs))


def avg_redundancy(p: Distribution, l: LengthVector) -> float:
    """Expected codeword length minus entropy, in bits."""
    _check_sizes(p, l)
    return float(sum(pi * r for pi, r in zip(p.probs, pointwise_redundancies(p, l))))


@dataclass(frozen=True)
class RedundancyReport:
    entropy: float
    avg_redundancy: float
    max_pointwise_redundancy: float
    pointwise: tuple[float, ...]
    argmax_symbol: int

    def to_json_dict(self) -> dict:
        return {
            "entropy": self.entropy,
            "avg_redundancy": self.avg_redundancy,
            "max_pointwise_redundancy": self.max_pointwise_redundancy,
            "pointwise": list(self.pointwise),
            "argmax_symbol": self.argmax_symbol,
        }


def max_pointwise_redundancy(p: Distribution, l: LengthVector) -> RedundancyReport:
    """Maximum pointwise redundancy with its attaining symbol (sorted index)."""
    pw = pointwise_redundancies(p, l)
    arg = max(range(len(pw)), key=lambda i: pw[i])
    return RedundancyReport(
        entropy=entropy(p),
        avg_redundancy=avg_redundancy(p, l),
        max_pointwise_redundancy=pw[arg],
        pointwise=tuple(pw),
        argmax_symbol=arg,
    )


def logsumexp2(terms) -> float:
    """lg sum(2^t) over the given base-2 log terms."""
    arr = np.asarray(list(terms), dtype=float)
    return float(np.logaddexp2.reduce(arr))


def exp_average(p: Distribution, l: LengthVector, a: float) -> float:
    """Exponential average log_a sum(p(i) a^l(i)) for base a > 0, a != 1."""
    _check_sizes(p, l)
    if not a > 0 or a == 1:
        raise InvalidBase(f"base {a!r} must be positive and != 1")
    lga = math.log2(a)
    terms = [math.log2(pi) + li * lga for pi, li in zip(p.probs, l)]
    return logsumexp2(terms) / lga


def dth_exp_redundancy(p: Distribution, l: LengthVector, d: float) -> float:
    """d-th exponential redundancy (1/d) lg sum(p(i)^(1+d) 2^(d l(i)))."""
    _check_sizes(p, l)
    if not d > 0:
        raise InvalidParameter(f"order {d!r} must be positive")
    terms = [math.log2(pi) + d * r for pi, r in zip(p.probs, pointwise_redundancies(p, l))]
    return logsumexp2(terms) / d
