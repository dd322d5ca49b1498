"""Code constructors: Shannon codes and the Huffman-variant family.

Three combining rules are used: plain sum (average redundancy), a*(wi+wj)
(exponential average), and 2*max(wi,wj) (maximum pointwise redundancy).
The minimax and average coders use the linear-time two-queue procedure on
sorted inputs; the exponential coder uses a heap because a decaying base
can produce a compound item lighter than items already in the queue.
"""

from __future__ import annotations

import heapq
import math
from collections import deque
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .errors import DegenerateInput, InvalidBase, InvalidParameter
from .model import Distribution, LengthVector, MergeTrace, TraceNode, WeightVector
from .objectives import (
    dth_exp_redundancy,
    exp_average,
    logsumexp2,
    max_pointwise_redundancy,
    avg_redundancy,
)

SNAP_TOL = 1e-12


@dataclass(frozen=True)
class CoderResult:
    lengths: LengthVector
    objective_name: str
    objective_value: float
    trace: Optional[MergeTrace] = None


def ceil_snap(x: float, tol: float = SNAP_TOL) -> int:
    """Ceiling with a half-ulp guard: values within tol of an integer snap to it."""
    r = round(x)
    if abs(x - r) <= tol:
        return int(r)
    return int(math.ceil(x))


def floor_snap(x: float, tol: float = SNAP_TOL) -> int:
    r = round(x)
    if abs(x - r) <= tol:
        return int(r)
    return int(math.floor(x))


def _finalize_lengths(depths: dict[int, int], n: int) -> LengthVector:
    lengths = [depths[i] for i in range(n)]
    # co-optimal rearrangement: shorter codewords to more probable symbols
    return LengthVector(tuple(sorted(lengths)))


def shannon_code(p: Distribution) -> CoderResult:
    """Zero-order Shannon code with l(i) = ceil(-lg p(i))."""
    lengths = LengthVector(tuple(ceil_snap(-math.log2(pi)) for pi in p.probs))
    report = max_pointwise_redundancy(p, lengths)
    return CoderResult(lengths, "shannon", report.max_pointwise_redundancy)


def first_order_shannon(p: Distribution) -> CoderResult:
    """Shannon-style code that spends exactly ceil(-lg p(1)) bits on symbol 1
    and rescales the remaining mass before taking ceilings."""
    if p.n == 1:
        raise DegenerateInput("first-order Shannon code needs n >= 2")
    lam = ceil_snap(-math.log2(p.p1))
    scale = (1.0 - 2.0 ** (-lam)) / (1.0 - p.p1)
    lengths = [lam]
    for pi in p.probs[1:]:
        lengths.append(ceil_snap(-math.log2(pi * scale)))
    lv = LengthVector(tuple(sorted(lengths)))
    report = max_pointwise_redundancy(p, lv)
    return CoderResult(lv, "shannon1", report.max_pointwise_redundancy)


def _two_queue_build(
    probs: tuple[float, ...],
    combine: Callable[[float, float], float],
) -> MergeTrace:
    """Run a Huffman-variant reduction with the two-queue procedure.

    Valid whenever compound weights are nondecreasing over time (true for
    the sum and 2*max rules). Leaves enter the first queue by nondecreasing
    weight; compounds join the tail of the second. On weight ties the leaf
    queue wins, which places each new compound after all equal-weight items
    already present.
    """
    n = len(probs)
    leaves = [
        TraceNode(log2_weight=math.log2(pi), prob_mass=pi, symbol=i)
        for i, pi in enumerate(probs)
    ]
    q1: deque[tuple[float, TraceNode]] = deque((probs[i], leaves[i]) for i in reversed(range(n)))
    q2: deque[tuple[float, TraceNode]] = deque()
    merge_weights: list[float] = []

    def pop_smallest() -> tuple[float, TraceNode]:
        if q1 and (not q2 or q1[0][0] <= q2[0][0]):
            return q1.popleft()
        return q2.popleft()

    while len(q1) + len(q2) > 1:
        wa, a = pop_smallest()
        wb, b = pop_smallest()
        w = combine(wa, wb)
        merge_weights.extend((math.log2(wa), math.log2(wb)))
        node = TraceNode(
            log2_weight=math.log2(w),
            prob_mass=a.prob_mass + b.prob_mass,
            left=a,
            right=b,
        )
        q2.append((w, node))
    _, root = pop_smallest()
    trace = MergeTrace(root=root, merge_log2_weights=merge_weights)
    trace.assign_depths()
    return trace


def minimax_huffman(p: Distribution) -> CoderResult:
    """Minimize maximum pointwise redundancy via the 2*max combining rule.

    lg(root weight) equals the achieved maximum pointwise redundancy.
    """
    trace = _two_queue_build(p.probs, lambda x, y: 2.0 * max(x, y))
    lv = _finalize_lengths(trace.leaf_depths(), p.n)
    return CoderResult(lv, "minimax", math.log2(trace.root_weight), trace)


def huffman_average(p: Distribution) -> CoderResult:
    """Classic Huffman code minimizing expected length / average redundancy."""
    trace = _two_queue_build(p.probs, lambda x, y: x + y)
    lv = _finalize_lengths(trace.leaf_depths(), p.n)
    return CoderResult(lv, "avg", avg_redundancy(p, lv), trace)


def _exp_heap_build(log2_weights: tuple[float, ...], lga: float) -> MergeTrace:
    """Exponential-rule reduction in the log domain via a min-heap.

    Combine rule a*(wi+wj) becomes lg(a) + logaddexp2; merging the two
    currently smallest items is optimal for growing and decaying bases.
    """
    n = len(log2_weights)
    heap: list[tuple[float, int, TraceNode]] = []
    seq = 0
    for i in reversed(range(n)):
        lw = log2_weights[i]
        node = TraceNode(log2_weight=lw, prob_mass=2.0 ** lw, symbol=i)
        heap.append((lw, seq, node))
        seq += 1
    heapq.heapify(heap)
    merge_weights: list[float] = []
    while len(heap) > 1:
        la, _, a = heapq.heappop(heap)
        lb, _, b = heapq.heappop(heap)
        lw = lga + float(np.logaddexp2(la, lb))
        merge_weights.extend((la, lb))
        node = TraceNode(
            log2_weight=lw, prob_mass=a.prob_mass + b.prob_mass, left=a, right=b
        )
        heapq.heappush(heap, (lw, seq, node))
        seq += 1
    _, _, root = heap[0]
    trace = MergeTrace(root=root, merge_log2_weights=merge_weights)
    trace.assign_depths()
    return trace


def exp_huffman(w: WeightVector, a: float) -> CoderResult:
    """Minimize the exponential average log_a sum(w(i) a^l(i))."""
    if not a > 0 or a == 1:
        raise InvalidBase(f"base {a!r} must be positive and != 1")
    lga = math.log2(a)
    trace = _exp_heap_build(w.log2_weights, lga)
    lv = _finalize_lengths(trace.leaf_depths(), w.n)
    value = logsumexp2(lw + li * lga for lw, li in zip(w.log2_weights, lv)) / lga
    return CoderResult(lv, "exp", value, trace)


def exp_huffman_distribution(p: Distribution, a: float) -> CoderResult:
    """exp_huffman on a probability mass function, reporting L_a(p, l)."""
    w = WeightVector(tuple(math.log2(pi) for pi in p.probs))
    res = exp_huffman(w, a)
    return CoderResult(res.lengths, "exp", exp_average(p, res.lengths, a), res.trace)


def dth_exp_code(p: Distribution, d: float) -> CoderResult:
    """Minimize d-th exponential redundancy via the exponential reduction.

    Weights are p(i)^(1+d) kept in the log domain, with base a = 2^d (so
    lg a = d); the reported value is R^d of the resulting lengths.
    """
    if not d > 0:
        raise InvalidParameter(f"order {d!r} must be positive")
    log_w = tuple((1.0 + d) * math.log2(pi) for pi in p.probs)
    trace = _exp_heap_build(log_w, d)
    lv = _finalize_lengths(trace.leaf_depths(), p.n)
    return CoderResult(lv, "dexp", dth_exp_redundancy(p, lv, d), trace)
