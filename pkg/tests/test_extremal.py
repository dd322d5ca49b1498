import math

import numpy as np
import pytest

from minimaxcode.bounds import minimax_bounds
from minimaxcode.coders import minimax_huffman
from minimaxcode.errors import InvalidEpsilon, InvalidParameter
from minimaxcode.extremal import gen_l1_family, gen_lower_family, gen_upper_family
from minimaxcode.oracle import all_optima


def test_upper_family_two_thirds_example():
    p, spec = gen_upper_family(0.7, 0.05)
    assert p.probs == pytest.approx((0.7, 0.25, 0.05), abs=1e-12)
    assert spec.expectation == "achieves"
    got = minimax_huffman(p).objective_value
    assert got == pytest.approx(1 + math.log2(0.7), abs=1e-9)


def test_upper_family_row3_example():
    p, spec = gen_upper_family(0.45, 0.05)
    assert p.probs == pytest.approx((0.45, 0.25, 0.25, 0.05), abs=1e-12)
    assert spec.family == "upper_row3"
    got = minimax_huffman(p).objective_value
    assert got == pytest.approx(2 + math.log2(0.45), abs=1e-9)
    with pytest.raises(InvalidEpsilon):
        gen_upper_family(0.45, 0.2)  # legal range is (0, 0.1)


def test_upper_family_row1_approaches():
    p, spec = gen_upper_family(0.26, 1e-6)
    assert spec.family == "upper_row12"
    assert spec.expectation == "approaches"
    assert p.n == 5
    got = minimax_huffman(p).objective_value
    assert abs(got - (1 + math.log2(0.74 / 0.75))) < 1e-5


def test_upper_family_gap_monotone_in_epsilon():
    for p1 in (0.55, 0.3, 0.26):
        iv = minimax_bounds(p1)
        gaps = []
        for eps in (1e-3, 1e-4, 1e-5, 1e-6, 1e-7):
            p, spec = gen_upper_family(p1, eps)
            gaps.append(abs(iv.upper - minimax_huffman(p).objective_value))
        if spec.expectation == "approaches":
            assert all(a >= b - 1e-12 for a, b in zip(gaps, gaps[1:]))
            assert gaps[-1] < 1e-5


def test_lower_family_examples():
    p, spec = gen_lower_family(0.3)
    assert p.probs == pytest.approx((0.3, 0.25, 0.25, 0.2), abs=1e-12)
    assert spec.family == "lower_fixed" and spec.corrected
    assert minimax_huffman(p).objective_value == pytest.approx(
        2 + math.log2(0.3), abs=1e-9
    )

    # p1 in [1/3, 1/2): two equal items (1-p1)/2, complete tree on 3 leaves
    p, spec = gen_lower_family(0.4)
    assert p.probs == pytest.approx((0.4, 0.3, 0.3), abs=1e-12)
    assert spec.family == "lower_complete"
    assert minimax_huffman(p).objective_value == pytest.approx(
        math.log2(1.2), abs=1e-9
    )

    p, spec = gen_lower_family(0.5)
    assert p.probs == pytest.approx((0.5, 0.5), abs=1e-12)
    assert minimax_huffman(p).objective_value == pytest.approx(0.0, abs=1e-12)


def test_lower_family_achieves_lower_bound_on_grid():
    for k in range(1, 100):
        p1 = k / 100.0
        p, spec = gen_lower_family(p1)
        got = minimax_huffman(p).objective_value
        assert got == pytest.approx(minimax_bounds(p1).lower, abs=1e-9), p1


def test_upper_family_reaches_bound_on_grid():
    for k in range(1, 100):
        p1 = k / 100.0
        p, spec = gen_upper_family(p1, 1e-7)
        got = minimax_huffman(p).objective_value
        target = minimax_bounds(p1).upper
        tol = 1e-9 if spec.expectation == "achieves" else 1e-5
        assert abs(got - target) <= tol, p1


def test_generated_families_are_valid_distributions():
    rng = np.random.default_rng(41)
    for _ in range(200):
        p1 = float(rng.uniform(0.01, 0.99))
        for p, spec in (gen_lower_family(p1), gen_upper_family(p1)):
            assert abs(sum(p.probs) - 1.0) < 1e-9
            assert all(a >= b for a, b in zip(p.probs, p.probs[1:]))
            assert min(p.probs) > 0


def test_complete_tree_families_satisfy_lemma_precondition():
    for p1 in (0.4, 0.45, 0.35, 0.15):
        p, spec = gen_upper_family(p1)
        if spec.family in ("upper_row3", "upper_row12"):
            assert p.p1 <= 2 * p.probs[-2]


def test_l1_upper_witness_forces_long_top_codeword():
    p, spec = gen_l1_family(0.2, "upper")
    assert p.probs == pytest.approx((0.2,) + (0.125,) * 6 + (0.05,), abs=1e-12)
    assert spec.target == 3
    opt = all_optima(p, "minimax")
    assert all(v[0] == 3 for v in opt.vectors)


def test_l1_upper_witness_at_exact_power_of_two():
    p, spec = gen_l1_family(0.125, "upper")
    assert p.probs == (0.125,) * 8
    assert spec.target == 3
    opt = all_optima(p, "minimax")
    assert all(v[0] == 3 for v in opt.vectors)


def test_l1_lower_witness_keeps_top_codeword_short():
    p, spec = gen_l1_family(0.4, "lower")
    assert p.probs == pytest.approx((0.4, 0.3, 0.3), abs=1e-12)
    assert spec.target == 1
    opt = all_optima(p, "minimax")
    assert all(v[0] == 1 for v in opt.vectors)
    assert minimax_huffman(p).objective_value == pytest.approx(
        math.log2(1.2), abs=1e-9
    )


def test_l1_family_rejects_out_of_range_p1():
    with pytest.raises(InvalidParameter):
        gen_l1_family(0.3, "lower")  # gap between (1/7,1/4) and (1/3,1/2)
    with pytest.raises(InvalidParameter):
        gen_l1_family(0.4, "sideways")
