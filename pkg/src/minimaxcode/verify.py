"""Randomized and grid-based property harness.

Binds coders, bounds, extremal witnesses and the brute-force oracle into a
reproducible pass/fail report. Trial t of a run draws its own RNG stream
from (seed, t), so reports are byte-identical across reruns.
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass, field

import numpy as np

from .bounds import l1_bounds, minimax_bounds, simple_chain
from .coders import (
    dth_exp_code,
    exp_huffman_distribution,
    huffman_average,
    minimax_huffman,
    shannon_code,
)
from .errors import InvalidParameter
from .extremal import gen_lower_family, gen_upper_family
from .model import Distribution, kraft_sum, make_distribution
from .objectives import max_pointwise_redundancy
from .oracle import ALL_OPTIMA_MAX_N, all_optima, brute_force_optimum

TOL = 1e-9


@dataclass
class TrialReport:
    seed: int
    trial_count: int
    n_range: tuple[int, int]
    d_list: tuple[float, ...]
    failures: list[dict] = field(default_factory=list)
    checks_run: int = 0
    elapsed_ms: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> str:
        body = {
            "seed": self.seed,
            "trial_count": self.trial_count,
            "n_range": list(self.n_range),
            "d_list": list(self.d_list),
            "checks_run": self.checks_run,
            "failures": self.failures,
            "ok": self.ok,
        }
        # elapsed_ms stays out of the body so seeded reruns are byte-identical
        return json.dumps(body, indent=2, sort_keys=True)


def random_distribution(rng: np.random.Generator, n: int) -> Distribution:
    """Uniform on the simplex via exponential variates; 10% of draws use a
    near-degenerate shape (one huge mass plus a geometric tail) to stress
    the p(1)-regime boundaries."""
    if n == 1:
        return make_distribution([1.0])
    if rng.random() < 0.1:
        big = 1.0 - 10.0 ** rng.uniform(-6.0, -0.3)
        ratio = rng.uniform(0.2, 0.9)
        tail = ratio ** np.arange(n - 1)
        tail *= (1.0 - big) / tail.sum()
        vals = np.concatenate([[big], tail])
    else:
        vals = rng.exponential(size=n)
        vals /= vals.sum()
    vals = np.maximum(vals, 1e-12)
    vals /= vals.sum()
    return make_distribution(vals.tolist())


def _fail(report: TrialReport, check: str, p: Distribution, expected, got, trial=None):
    report.failures.append(
        {
            "check": check,
            "trial": trial,
            "distribution": list(p.probs),
            "expected": expected,
            "got": got,
        }
    )


def check_distribution(
    report: TrialReport, p: Distribution, d_list: tuple[float, ...], trial: int | None = None
) -> None:
    """Run every per-distribution check, appending failures to the report."""
    mm = minimax_huffman(p)
    av = huffman_average(p)
    sh = shannon_code(p)

    # coder-vs-oracle
    pairs = [("minimax", mm), ("avg", av)]
    for a in (0.5, 2.0):
        pairs.append((("exp", a), exp_huffman_distribution(p, a)))
    for d in d_list:
        pairs.append((("dexp", d), dth_exp_code(p, d)))
    opt_vals = {}
    for objective, res in pairs:
        ref = brute_force_optimum(p, objective)
        key = objective if isinstance(objective, str) else f"{objective[0]}[{objective[1]:g}]"
        opt_vals[key] = ref.optimum_value
        report.checks_run += 1
        if abs(res.objective_value - ref.optimum_value) > TOL:
            _fail(report, "coder-vs-oracle", p, ref.optimum_value, res.objective_value, trial)

    r_star = max_pointwise_redundancy(p, mm.lengths).max_pointwise_redundancy

    # theorem1-containment
    iv = minimax_bounds(p.p1)
    report.checks_run += 1
    if not iv.contains(r_star, TOL):
        _fail(report, "theorem1-containment", p, iv.to_json_dict(), r_star, trial)

    # theorem1-determined
    if p.p1 >= 2.0 / 3.0:
        report.checks_run += 1
        want = 1.0 + math.log2(p.p1) if p.p1 < 1.0 else 0.0
        if abs(r_star - want) > TOL:
            _fail(report, "theorem1-determined", p, want, r_star, trial)

    # theorem2 via the complete co-optimal set
    if 2 <= p.n <= ALL_OPTIMA_MAX_N and p.p1 < 1.0:
        lb = l1_bounds(p.p1)
        opt = all_optima(p, "minimax")
        l1s = [v[0] for v in opt.vectors]
        report.checks_run += 2
        if max(l1s) > lb.max_over_all_optima:
            _fail(report, "theorem2-upper", p, lb.max_over_all_optima, max(l1s), trial)
        if max(l1s) < lb.min_over_some_optimum:
            _fail(report, "theorem2-exists", p, lb.min_over_some_optimum, max(l1s), trial)

    # lemma1 properties on the minimax merge trace
    trace = mm.trace
    report.checks_run += 4
    mw = trace.merge_log2_weights
    if any(mw[i] > mw[i + 1] + 1e-12 for i in range(len(mw) - 1)):
        _fail(report, "lemma1-prop1", p, "nondecreasing merge weights", mw, trial)
    if abs(math.log2(trace.root_weight) - r_star) > TOL:
        _fail(report, "lemma1-prop2", p, r_star, math.log2(trace.root_weight), trial)
    bad = [n_.prob_mass - n_.weight for n_ in trace.nodes() if n_.prob_mass > n_.weight + TOL]
    if bad:
        _fail(report, "lemma1-prop3", p, "prob_mass <= weight", max(bad), trial)
    if p.n >= 2 and p.p1 <= 2.0 * p.probs[-2]:
        lo, hi = math.floor(math.log2(p.n)), math.ceil(math.log2(p.n))
        if not all(li in (lo, hi) for li in mm.lengths) or kraft_sum(mm.lengths) != 1:
            _fail(report, "lemma1-prop4", p, f"lengths in {{{lo},{hi}}}, Kraft 1",
                  list(mm.lengths), trial)

    # lyapunov-chain on the minimax code and on the optimal values
    report.checks_run += 2
    chain = simple_chain(p, mm.lengths, d_list)
    if not (-TOL <= chain[0] and chain[-1] < 1.0):
        _fail(report, "lyapunov-chain", p, "[0,1) range", chain, trial)
    opt_chain = [opt_vals["avg"]] + [opt_vals[f"dexp[{d:g}]"] for d in sorted(d_list)] \
        + [opt_vals["minimax"]]
    if any(a > b + TOL for a, b in zip(opt_chain, opt_chain[1:])) or not (
        -TOL <= opt_chain[0] and opt_chain[-1] < 1.0
    ):
        _fail(report, "lyapunov-chain-opt", p, "nondecreasing in [0,1)", opt_chain, trial)

    # shannon-dominance
    report.checks_run += 1
    if max(mm.lengths) > max(sh.lengths):
        _fail(report, "shannon-dominance", p, max(sh.lengths), max(mm.lengths), trial)

    # kraft-exact
    report.checks_run += 1
    if (
        kraft_sum(mm.lengths) != 1
        or kraft_sum(av.lengths) != 1
        or kraft_sum(sh.lengths) > 1
    ):
        _fail(report, "kraft-exact", p, "variants == 1, shannon <= 1",
              [str(kraft_sum(mm.lengths)), str(kraft_sum(av.lengths)),
               str(kraft_sum(sh.lengths))], trial)


def check_extremal_grid(report: TrialReport, step: float = 0.01) -> None:
    """Tightness witnesses across a p1 grid: lower families achieve the lower
    bound; upper families achieve (or approach, at eps = 1e-7) the upper."""
    count = int(round(0.99 / step)) - 0
    for k in range(1, count + 1):
        p1 = k * step
        if not p1 < 1.0 - 1e-12:
            continue
        iv = minimax_bounds(p1)

        p_lo, spec_lo = gen_lower_family(p1)
        got = minimax_huffman(p_lo).objective_value
        report.checks_run += 1
        if abs(got - iv.lower) > TOL:
            _fail(report, "extremal-witness-lower", p_lo, iv.lower, got)

        p_up, spec_up = gen_upper_family(p1, epsilon=1e-7)
        got = minimax_huffman(p_up).objective_value
        tol = TOL if spec_up.expectation == "achieves" else 1e-5
        report.checks_run += 1
        if abs(got - iv.upper) > tol:
            _fail(report, "extremal-witness-upper", p_up, iv.upper, got)


def run_trials(
    n_min: int,
    n_max: int,
    trials: int,
    seed: int,
    d_list: tuple[float, ...] = (1.0,),
    extremal_grid: bool = True,
) -> TrialReport:
    """Draw random distributions and run every named check on each."""
    if not (2 <= n_min <= n_max <= 10):
        raise InvalidParameter(f"need 2 <= n_min <= n_max <= 10, got [{n_min}, {n_max}]")
    if trials < 1:
        raise InvalidParameter("trials must be >= 1")
    if any(not d > 0 for d in d_list):
        raise InvalidParameter("every d must be positive")
    t0 = time.perf_counter()
    report = TrialReport(
        seed=seed, trial_count=trials, n_range=(n_min, n_max), d_list=tuple(d_list)
    )
    for t in range(trials):
        rng = np.random.default_rng((seed, t))
        n = int(rng.integers(n_min, n_max + 1))
        p = random_distribution(rng, n)
        check_distribution(report, p, tuple(d_list), trial=t)
    if extremal_grid:
        check_extremal_grid(report)
    report.elapsed_ms = (time.perf_counter() - t0) * 1000.0
    return report


def sweep_bounds(grid_start: float, grid_stop: float, grid_step: float) -> list[str]:
    """CSV rows (header included) of the minimax interval across a p1 grid."""
    if not (0.0 < grid_start <= grid_stop <= 1.0) or not grid_step > 0:
        raise InvalidParameter(
            f"need 0 < start <= stop <= 1 and step > 0, got {grid_start}:{grid_stop}:{grid_step}"
        )
    rows = ["p1,lambda,lower,lower_achievable,upper,upper_achievable,determined"]
    count = int(round((grid_stop - grid_start) / grid_step))
    for k in range(count + 1):
        p1 = grid_start + k * grid_step
        if p1 > grid_stop + 1e-12:
            break
        p1 = min(p1, 1.0)
        iv = minimax_bounds(p1)
        rows.append(
            f"{p1:g},{iv.lam},{iv.lower:.6f},{int(iv.lower_achievable)},"
            f"{iv.upper:.6f},{int(iv.upper_achievable)},{int(iv.determined)}"
        )
    return rows
