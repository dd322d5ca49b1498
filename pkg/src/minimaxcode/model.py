"""Core data types: distributions, length vectors, codebooks, merge traces.

Probabilities are 64-bit floats (sum checked to 1e-9); Kraft feasibility of
integer length vectors is decided exactly in rational arithmetic so that
feasibility never depends on rounding.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .errors import (
    EmptyInput,
    KraftViolation,
    NonPositiveProbability,
    SumNotOne,
)

SUM_TOL = 1e-9


@dataclass(frozen=True)
class Distribution:
    """Probability mass function sorted nonincreasing.

    ``perm[k]`` is the caller's 0-based original index of sorted symbol k,
    so ``original[perm[k]] == probs[k]``.
    """

    probs: tuple[float, ...]
    perm: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.probs)

    @property
    def p1(self) -> float:
        return self.probs[0]

    def to_original_order(self, values: Sequence) -> list:
        """Scatter per-sorted-symbol values back to the caller's order."""
        out = [None] * self.n
        for k, orig in enumerate(self.perm):
            out[orig] = values[k]
        return out


@dataclass(frozen=True)
class WeightVector:
    """Positive weights in nonincreasing order; need not sum to 1.

    ``log2_weights`` is the canonical storage: coders combine weights in the
    log domain so extreme parameters never overflow.
    """

    log2_weights: tuple[float, ...]

    @classmethod
    def from_weights(cls, weights: Sequence[float]) -> "WeightVector":
        import math

        if len(weights) == 0:
            raise EmptyInput("weight vector is empty")
        for w in weights:
            if not w > 0:
                raise NonPositiveProbability(f"weight {w!r} is not positive")
        lw = tuple(math.log2(w) for w in weights)
        if any(lw[i] < lw[i + 1] for i in range(len(lw) - 1)):
            raise NonPositiveProbability("weights must be nonincreasing")
        return cls(lw)

    @property
    def n(self) -> int:
        return len(self.log2_weights)


@dataclass(frozen=True)
class LengthVector:
    """Integer codeword lengths in bits."""

    lengths: tuple[int, ...]

    def __post_init__(self):
        for l in self.lengths:
            if l < 0 or l != int(l):
                raise KraftViolation(f"length {l!r} is not a nonnegative integer")
        object.__setattr__(self, "lengths", tuple(int(l) for l in self.lengths))

    @property
    def n(self) -> int:
        return len(self.lengths)

    def __iter__(self):
        return iter(self.lengths)

    def __getitem__(self, i):
        return self.lengths[i]


def kraft_sum(l: LengthVector | Sequence[int]) -> Fraction:
    """Exact Kraft sum sum(2^-l(i)) as a rational number."""
    lengths = list(l.lengths if isinstance(l, LengthVector) else l)
    if not lengths:
        return Fraction(0)
    top = max(lengths)
    num = sum(1 << (top - li) for li in lengths)
    return Fraction(num, 1 << top)


@dataclass(frozen=True)
class Codebook:
    """Lengths plus canonical binary codewords; the deployable artifact."""

    lengths: LengthVector
    codewords: tuple[str, ...]
    objective_name: str = ""
    objective_value: float = 0.0

    def to_json_dict(self, probabilities: Optional[Sequence[float]] = None) -> dict:
        d = {
            "lengths": list(self.lengths.lengths),
            "codewords": list(self.codewords),
            "objective": {"name": self.objective_name, "value": self.objective_value},
        }
        if probabilities is not None:
            d["probabilities"] = list(probabilities)
        return d

    @classmethod
    def from_json_dict(cls, d: dict) -> "Codebook":
        obj = d.get("objective", {})
        return cls(
            lengths=LengthVector(tuple(d["lengths"])),
            codewords=tuple(d["codewords"]),
            objective_name=obj.get("name", ""),
            objective_value=float(obj.get("value", 0.0)),
        )


@dataclass
class TraceNode:
    """Node of a Huffman-variant combination tree.

    ``log2_weight`` is the node weight in the log domain; ``prob_mass`` is
    the sum of leaf probabilities beneath the node.
    """

    log2_weight: float
    prob_mass: float
    symbol: Optional[int] = None  # sorted symbol index for leaves
    left: Optional["TraceNode"] = None
    right: Optional["TraceNode"] = None
    depth: int = 0

    @property
    def weight(self) -> float:
        return 2.0 ** self.log2_weight

    @property
    def is_leaf(self) -> bool:
        return self.left is None and self.right is None


@dataclass
class MergeTrace:
    """Combination tree built by a Huffman-variant coder."""

    root: TraceNode
    merge_log2_weights: list[float] = field(default_factory=list)

    @property
    def root_weight(self) -> float:
        return self.root.weight

    def assign_depths(self) -> None:
        stack = [(self.root, 0)]
        while stack:
            node, d = stack.pop()
            node.depth = d
            if node.left is not None:
                stack.append((node.left, d + 1))
            if node.right is not None:
                stack.append((node.right, d + 1))

    def nodes(self) -> list[TraceNode]:
        out, stack = [], [self.root]
        while stack:
            node = stack.pop()
            out.append(node)
            if node.left is not None:
                stack.append(node.left)
            if node.right is not None:
                stack.append(node.right)
        return out

    def leaf_depths(self) -> dict[int, int]:
        """Map sorted symbol index -> depth in this tree."""
        self.assign_depths()
        return {n.symbol: n.depth for n in self.nodes() if n.is_leaf}


def make_distribution(values: Sequence[float]) -> Distribution:
    """Validate and sort a pmf, recording the permutation back to caller order."""
    vals = [float(v) for v in values]
    if not vals:
        raise EmptyInput("distribution has no symbols")
    for v in vals:
        if not v > 0:
            raise NonPositiveProbability(f"probability {v!r} is not positive")
    total = sum(vals)
    if abs(total - 1.0) > SUM_TOL:
        raise SumNotOne(f"probabilities sum to {total!r}, not 1")
    order = sorted(range(len(vals)), key=lambda i: (-vals[i], i))
    return Distribution(
        probs=tuple(vals[i] for i in order),
        perm=tuple(order),
    )


def canonical_assign(
    l: LengthVector,
    objective_name: str = "",
    objective_value: float = 0.0,
) -> Codebook:
    """Assign the lexicographically smallest prefix-free codewords.

    Lengths must be nondecreasing and Kraft-feasible; the first codeword is
    all zeros and each subsequent codeword is previous+1 shifted to length.
    """
    lengths = l.lengths
    if any(lengths[i] > lengths[i + 1] for i in range(len(lengths) - 1)):
        raise KraftViolation("lengths must be nondecreasing for canonical assignment")
    if kraft_sum(l) > 1:
        raise KraftViolation(f"Kraft sum {kraft_sum(l)} exceeds 1")
    codewords = []
    code = 0
    prev_len = lengths[0] if lengths else 0
    for i, li in enumerate(lengths):
        if i > 0:
            code = (code + 1) << (li - prev_len)
        codewords.append(format(code, "b").zfill(li) if li > 0 else "")
        prev_len = li
    return Codebook(
        lengths=l,
        codewords=tuple(codewords),
        objective_name=objective_name,
        objective_value=objective_value,
    )


def load_distribution_text(text: str) -> Distribution:
    """Parse a distribution from JSON ({"probabilities": [...]}) or one-per-line decimals."""
    stripped = text.strip()
    if stripped.startswith("{"):
        d = json.loads(stripped)
        return make_distribution(d["probabilities"])
    vals = [float(line) for line in stripped.splitlines() if line.strip()]
    return make_distribution(vals)
