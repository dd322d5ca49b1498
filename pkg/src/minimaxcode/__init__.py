"""Optimal binary prefix codes under minimax pointwise redundancy and
related exponential objectives, with tight p(1)-bounds, extremal witness
generators, and a brute-force verification oracle."""

from .bounds import (
    BoundInterval,
    L1Bounds,
    avg_lower_moab,
    dexp_bounds,
    gallager_upper_avg,
    l1_bounds,
    minimax_bounds,
    simple_chain,
)
from .coders import (
    CoderResult,
    dth_exp_code,
    exp_huffman,
    exp_huffman_distribution,
    first_order_shannon,
    huffman_average,
    minimax_huffman,
    shannon_code,
)
from .extremal import ExtremalSpec, gen_l1_family, gen_lower_family, gen_upper_family
from .model import (
    Codebook,
    Distribution,
    LengthVector,
    MergeTrace,
    WeightVector,
    canonical_assign,
    kraft_sum,
    make_distribution,
)
from .objectives import (
    RedundancyReport,
    avg_redundancy,
    dth_exp_redundancy,
    entropy,
    exp_average,
    max_pointwise_redundancy,
)
from .oracle import OptimaSet, all_optima, brute_force_optimum, enumerate_length_vectors
from .verify import TrialReport, run_trials, sweep_bounds

__version__ = "0.1.0"

__all__ = [
    "BoundInterval",
    "Codebook",
    "CoderResult",
    "Distribution",
    "ExtremalSpec",
    "L1Bounds",
    "LengthVector",
    "MergeTrace",
    "OptimaSet",
    "RedundancyReport",
    "TrialReport",
    "WeightVector",
    "all_optima",
    "avg_lower_moab",
    "avg_redundancy",
    "brute_force_optimum",
    "canonical_assign",
    "dexp_bounds",
    "dth_exp_code",
    "dth_exp_redundancy",
    "entropy",
    "enumerate_length_vectors",
    "exp_average",
    "exp_huffman",
    "exp_huffman_distribution",
    "first_order_shannon",
    "gallager_upper_avg",
    "gen_l1_family",
    "gen_lower_family",
    "gen_upper_family",
    "huffman_average",
    "kraft_sum",
    "l1_bounds",
    "make_distribution",
    "max_pointwise_redundancy",
    "minimax_bounds",
    "minimax_huffman",
    "run_trials",
    "shannon_code",
    "simple_chain",
    "sweep_bounds",
]
