"""Statistics harness: rank correlation, proportion intervals, and
explainer agreement/timing comparison."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import EmptySample, UndefinedCorrelation
from .explanation import calibrate_cutoff, flag_tokens, overlap


@dataclass(frozen=True)
class PairedSample:
    x: float
    y: float


@dataclass(frozen=True)
class TauResult:
    tau: float
    concordant: int
    discordant: int
    ties_x: int
    ties_y: int
    ties_both: int
    p_value: float


@dataclass(frozen=True)
class ExplainerReport:
    mean_overlap: float
    overlap_ci_halfwidth: float
    mean_latency_a: float
    mean_latency_b: float
    cutoff_a: float
    cutoff_b: float
    n_texts: int


def kendall_tau_b(samples: Sequence[PairedSample]) -> TauResult:
    """Kendall's tau-b over all unordered pairs.

    tau = (C - D) / sqrt((C + D + Tx)(C + D + Ty)) where Tx/Ty count pairs
    tied only in x / only in y; pairs tied in both are excluded from every
    term. The p-value is the two-sided normal approximation.
    """
    n = len(samples)
    if n < 2:
        raise UndefinedCorrelation("need at least two samples")
    concordant = discordant = ties_x = ties_y = ties_both = 0
    for i in range(n):
        xi, yi = samples[i].x, samples[i].y
        for j in range(i + 1, n):
            dx = xi - samples[j].x
            dy = yi - samples[j].y
            if dx == 0 and dy == 0:
                ties_both += 1
            elif dx == 0:
                ties_x += 1
            elif dy == 0:
                ties_y += 1
            elif (dx > 0) == (dy > 0):
                concordant += 1
            else:
                discordant += 1
    denom_x = concordant + discordant + ties_x
    denom_y = concordant + discordant + ties_y
    if denom_x == 0 or denom_y == 0:
        raise UndefinedCorrelation("all pairs tied in x or in y")
    tau = (concordant - discordant) / math.sqrt(denom_x * denom_y)
    # normal approximation under the null of independence
    z = 3 * (concordant - discordant) / math.sqrt(n * (n - 1) * (2 * n + 5) / 2)
    p_value = math.erfc(abs(z) / math.sqrt(2))
    return TauResult(tau, concordant, discordant, ties_x, ties_y, ties_both, p_value)


def binomial_ci(k: int, n: int, z: float = 1.96) -> tuple[float, float]:
    """Wald (asymptotic normal) confidence interval for k/n, clamped to [0,1]."""
    if n == 0:
        raise EmptySample("binomial interval needs at least one trial")
    if not 0 <= k <= n:
        raise ValueError("k must satisfy 0 <= k <= n")
    p_hat = k / n
    halfwidth = z * math.sqrt(p_hat * (1 - p_hat) / n)
    return (max(0.0, p_hat - halfwidth), min(1.0, p_hat + halfwidth))


TokenScorer = Callable[[str], Sequence[float]]


def compare_explainers(
    corpus: Sequence[str],
    method_a: TokenScorer,
    method_b: TokenScorer,
    cutoff_a: float,
    z: float = 1.96,
) -> ExplainerReport:
    """Compare two per-token explanation methods over a corpus.

    Calibrates method B's cutoff from the pooled score distributions,
    flags each text under both methods, and reports mean flagged-set
    overlap with a normal-approximation CI halfwidth plus mean wall-clock
    latency per method (timed serially to keep measurements honest).
    """
    if not corpus:
        raise EmptySample("corpus must be nonempty")

    start = time.perf_counter()
    scores_a = [list(method_a(text)) for text in corpus]
    latency_a = (time.perf_counter() - start) / len(corpus)

    start = time.perf_counter()
    scores_b = [list(method_b(text)) for text in corpus]
    latency_b = (time.perf_counter() - start) / len(corpus)

    pooled_a = [s for per_text in scores_a for s in per_text]
    pooled_b = [s for per_text in scores_b for s in per_text]
    cutoff_b = calibrate_cutoff(pooled_a, pooled_b, cutoff_a).mapped_cutoff

    overlaps = [
        overlap(flag_tokens(sa, cutoff_a), flag_tokens(sb, cutoff_b))
        for sa, sb in zip(scores_a, scores_b)
    ]
    n = len(overlaps)
    mean = sum(overlaps) / n
    if n > 1:
        var = sum((o - mean) ** 2 for o in overlaps) / (n - 1)
        halfwidth = z * math.sqrt(var / n)
    else:
        halfwidth = 0.0
    return ExplainerReport(
        mean_overlap=mean,
        overlap_ci_halfwidth=halfwidth,
        mean_latency_a=latency_a,
        mean_latency_b=latency_b,
        cutoff_a=cutoff_a,
        cutoff_b=cutoff_b,
        n_texts=n,
    )
