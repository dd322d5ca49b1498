import math

import numpy as np
import pytest

from minimaxcode.coders import (
    dth_exp_code,
    exp_huffman,
    exp_huffman_distribution,
    first_order_shannon,
    huffman_average,
    minimax_huffman,
    shannon_code,
)
from minimaxcode.errors import DegenerateInput, InvalidBase, InvalidParameter
from minimaxcode.model import WeightVector, kraft_sum, make_distribution
from minimaxcode.objectives import max_pointwise_redundancy
from minimaxcode.oracle import brute_force_optimum


def dist(*probs):
    return make_distribution(list(probs))


def random_dist(rng, n):
    v = rng.exponential(size=n)
    v /= v.sum()
    return make_distribution(v.tolist())


def test_shannon_code_examples():
    assert shannon_code(dist(0.5, 0.25, 0.25)).lengths.lengths == (1, 2, 2)
    assert shannon_code(dist(0.5, 0.3, 0.2)).lengths.lengths == (1, 2, 3)
    assert shannon_code(dist(1.0)).lengths.lengths == (0,)
    assert kraft_sum(shannon_code(dist(0.5, 0.3, 0.2)).lengths) <= 1


def test_first_order_shannon_examples():
    assert first_order_shannon(dist(0.5, 0.25, 0.25)).lengths.lengths == (1, 2, 2)
    assert first_order_shannon(dist(0.4, 0.3, 0.3)).lengths.lengths == (2, 2, 2)
    # lam=1, scale=0.5/0.3: ceil(-lg(0.2*5/3))=2, ceil(-lg(0.1*5/3))=3
    assert first_order_shannon(dist(0.7, 0.2, 0.1)).lengths.lengths == (1, 2, 3)
    with pytest.raises(DegenerateInput):
        first_order_shannon(dist(1.0))


def test_first_order_shannon_kraft_and_tail_bound():
    rng = np.random.default_rng(5)
    for _ in range(300):
        p = random_dist(rng, int(rng.integers(2, 11)))
        res = first_order_shannon(p)
        assert kraft_sum(res.lengths) <= 1
        lam = res.lengths[0]
        pw = [li + math.log2(pi) for pi, li in zip(p.probs, res.lengths)]
        tail_cap = 1 + math.log2((1 - p.p1) / (1 - 2.0 ** (-lam)))
        assert max(pw[1:]) < tail_cap + 1e-9


def test_huffman_average_examples():
    assert huffman_average(dist(0.5, 0.3, 0.2)).lengths.lengths == (1, 2, 2)
    assert huffman_average(dist(0.25, 0.25, 0.25, 0.25)).lengths.lengths == (2, 2, 2, 2)


def test_minimax_huffman_worked_example():
    res = minimax_huffman(dist(0.5, 0.3, 0.2))
    assert res.lengths.lengths == (1, 2, 2)
    assert res.trace.root_weight == pytest.approx(1.2, abs=1e-12)
    assert res.objective_value == pytest.approx(math.log2(1.2), abs=1e-12)


def test_minimax_huffman_examples():
    res = minimax_huffman(dist(0.5, 0.25, 0.125, 0.125))
    assert res.lengths.lengths == (1, 2, 3, 3)
    assert res.objective_value == pytest.approx(0.0, abs=1e-12)
    assert res.trace.root_weight == pytest.approx(1.0, abs=1e-12)

    res = minimax_huffman(dist(0.36, 0.25, 0.2, 0.19))
    assert res.lengths.lengths == (2, 2, 2, 2)
    assert res.trace.root_weight == pytest.approx(1.44, abs=1e-12)
    assert res.objective_value == pytest.approx(2 + math.log2(0.36), abs=1e-12)


def test_minimax_single_symbol():
    res = minimax_huffman(dist(1.0))
    assert res.lengths.lengths == (0,)
    assert res.objective_value == 0.0


def test_exp_huffman_examples():
    w = WeightVector.from_weights([0.5, 0.25, 0.25])
    res = exp_huffman(w, 2.0)
    assert res.lengths.lengths == (1, 2, 2)
    # merge 0.25,0.25 -> 1.0; then 0.5,1.0 -> 3.0
    assert res.trace.root_weight == pytest.approx(3.0, abs=1e-9)
    assert res.objective_value == pytest.approx(math.log2(3.0), abs=1e-12)

    for a in (0.5, 1.5, 2.0):
        res = exp_huffman(WeightVector.from_weights([0.25] * 4), a)
        assert res.lengths.lengths == (2, 2, 2, 2)
    with pytest.raises(InvalidBase):
        exp_huffman(w, 1.0)


def test_huffman_variants_match_oracle_random_n6():
    rng = np.random.default_rng(11)
    for _ in range(60):
        p = random_dist(rng, 6)
        assert huffman_average(p).objective_value == pytest.approx(
            brute_force_optimum(p, "avg").optimum_value, abs=1e-9
        )
        assert minimax_huffman(p).objective_value == pytest.approx(
            brute_force_optimum(p, "minimax").optimum_value, abs=1e-9
        )
        for a in (0.5, 1.5, 2.0):
            assert exp_huffman_distribution(p, a).objective_value == pytest.approx(
                brute_force_optimum(p, ("exp", a)).optimum_value, abs=1e-9
            )


def test_dth_exp_code_examples():
    assert dth_exp_code(dist(0.5, 0.25, 0.25), 1.0).lengths.lengths == (1, 2, 2)
    p = dist(0.5, 0.3, 0.2)
    res = dth_exp_code(p, 1.0)
    assert res.objective_value == pytest.approx(
        brute_force_optimum(p, ("dexp", 1.0)).optimum_value, abs=1e-9
    )
    # d -> infinity degenerates to the minimax objective value; the sandwich
    # gap is at most -lg(p_min)/d
    big = dth_exp_code(p, 1000.0)
    gap = -math.log2(min(p.probs)) / 1000.0
    assert abs(big.objective_value - minimax_huffman(p).objective_value) <= gap + 1e-9
    with pytest.raises(InvalidParameter):
        dth_exp_code(p, -1.0)


def test_dth_exp_code_extreme_d_no_overflow():
    rng = np.random.default_rng(3)
    for _ in range(20):
        p = random_dist(rng, 8)
        res = dth_exp_code(p, 1000.0)
        assert math.isfinite(res.objective_value)
        assert kraft_sum(res.lengths) == 1


def test_variant_kraft_sums_exactly_one():
    rng = np.random.default_rng(7)
    for _ in range(100):
        p = random_dist(rng, int(rng.integers(2, 11)))
        assert kraft_sum(minimax_huffman(p).lengths) == 1
        assert kraft_sum(huffman_average(p).lengths) == 1
        assert kraft_sum(dth_exp_code(p, 0.7).lengths) == 1


def test_minimax_never_longer_than_shannon():
    rng = np.random.default_rng(13)
    for _ in range(200):
        p = random_dist(rng, int(rng.integers(2, 11)))
        assert max(minimax_huffman(p).lengths) <= max(shannon_code(p).lengths)


def test_merge_trace_invariants():
    rng = np.random.default_rng(17)
    for _ in range(200):
        p = random_dist(rng, int(rng.integers(2, 11)))
        res = minimax_huffman(p)
        trace = res.trace
        mw = trace.merge_log2_weights
        assert all(mw[i] <= mw[i + 1] + 1e-12 for i in range(len(mw) - 1))
        r_star = max_pointwise_redundancy(p, res.lengths).max_pointwise_redundancy
        assert abs(math.log2(trace.root_weight) - r_star) <= 1e-9
        for node in trace.nodes():
            assert node.prob_mass <= node.weight + 1e-9
            if not node.is_leaf:
                assert node.left is not None and node.right is not None
        assert sum(node.is_leaf for node in trace.nodes()) == p.n


def test_complete_tree_when_top_within_double_of_second_smallest():
    rng = np.random.default_rng(19)
    seen = 0
    for _ in range(400):
        p = random_dist(rng, int(rng.integers(2, 11)))
        if p.p1 <= 2 * p.probs[-2]:
            seen += 1
            res = minimax_huffman(p)
            lo = math.floor(math.log2(p.n))
            hi = math.ceil(math.log2(p.n))
            assert all(li in (lo, hi) for li in res.lengths)
            assert kraft_sum(res.lengths) == 1
    assert seen > 20
