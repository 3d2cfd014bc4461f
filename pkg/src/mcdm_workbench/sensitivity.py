"""Weight-sensitivity analysis and adoption-roadmap tiering.

One-at-a-time perturbation and Monte Carlo simplex sampling both rerun the
full TOPSIS pipeline per scenario and report rank stability relative to the
base ranking. The Monte Carlo generator is a fixed, documented algorithm
(splitmix64 -> uniform -> exponential -> normalized simplex point) so that
reports are reproducible from the seed across reimplementations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import InputError
from .fahp import CriterionWeightVector
from .topsis import DecisionMatrix, RankingResult, topsis_pipeline

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """splitmix64 PRNG (Steele, Lea & Flood); tiny, seedable, portable."""

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def uniform(self) -> float:
        # 53-bit mantissa -> uniform in (0, 1]; never 0, so log() is safe
        return (self.next_u64() >> 11) * (1.0 / (1 << 53)) or 1.0 / (1 << 53)

    def exponential(self) -> float:
        return -math.log(self.uniform())

    def simplex_point(self, n: int) -> list[float]:
        """Uniform draw from the (n-1)-simplex via normalized exponentials."""
        e = [self.exponential() for _ in range(n)]
        total = sum(e)
        return [x / total for x in e]


@dataclass(frozen=True)
class Scenario:
    """One perturbed run: how the weights were produced and what it ranked."""

    label: str
    weights: tuple[float, ...]
    ranking: RankingResult
    skipped: bool = False

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "weights": list(self.weights),
            "ranking": self.ranking.to_json() if self.ranking else None,
            "skipped": self.skipped,
        }


@dataclass(frozen=True)
class StabilityReport:
    base: RankingResult
    scenarios: tuple[Scenario, ...]
    rank_reversal_count: int
    rank_frequencies: dict  # alt_id -> {rank: count}
    critical_perturbations: dict  # crit_id -> smallest |delta| flipping the top, or None
    skipped_scenarios: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {
            "base": self.base.to_json(),
            "scenarios": [s.to_json() for s in self.scenarios],
            "rank_reversal_count": self.rank_reversal_count,
            "rank_frequencies": {a: {str(k): v for k, v in d.items()}
                                 for a, d in self.rank_frequencies.items()},
            "critical_perturbations": dict(self.critical_perturbations),
            "skipped_scenarios": list(self.skipped_scenarios),
        }


@dataclass(frozen=True)
class RoadmapTiers:
    short_term: tuple[str, ...]
    medium_term: tuple[str, ...]
    long_term: tuple[str, ...]
    band_sizes: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "short_term": list(self.short_term),
            "medium_term": list(self.medium_term),
            "long_term": list(self.long_term),
            "band_sizes": list(self.band_sizes),
        }


def _crisp(weights) -> list[float]:
    if isinstance(weights, CriterionWeightVector):
        return list(weights.crisp_weights)
    return [float(w) for w in weights]


def _assemble(base: RankingResult, scenarios: list[Scenario],
              critical: dict, skipped: list[str]) -> StabilityReport:
    reversals = 0
    freq = {a: {} for a in base.alternative_ids}
    for s in scenarios:
        if s.skipped:
            continue
        if s.ranking.rank != base.rank:
            reversals += 1
        for a, r in zip(s.ranking.alternative_ids, s.ranking.rank):
            freq[a][r] = freq[a].get(r, 0) + 1
    return StabilityReport(
        base=base,
        scenarios=tuple(scenarios),
        rank_reversal_count=reversals,
        rank_frequencies=freq,
        critical_perturbations=critical,
        skipped_scenarios=tuple(skipped),
    )


def oat_weight_perturbation(d: DecisionMatrix, weights, deltas) -> StabilityReport:
    """Perturb each criterion weight by each delta (renormalized), rerun, compare.

    Scenarios that would drive a weight to zero or below are recorded as
    skipped rather than failing the whole analysis.
    """
    w0 = _crisp(weights)
    directions = weights.directions if isinstance(weights, CriterionWeightVector) else d.directions
    n = len(w0)
    if n != d.n:
        raise InputError("weight count must equal criterion count")
    w0 = [w / sum(w0) for w in w0]
    base = topsis_pipeline(d, _directed(w0, d, directions))
    scenarios: list[Scenario] = []
    skipped: list[str] = []
    critical: dict = {c: None for c in d.criterion_ids}
    for j, crit in enumerate(d.criterion_ids):
        for delta in deltas:
            label = f"{crit}{delta:+g}"
            perturbed = list(w0)
            perturbed[j] = w0[j] + delta
            if perturbed[j] <= 0 or perturbed[j] >= 1:
                skipped.append(label)
                scenarios.append(Scenario(label, tuple(perturbed), base, skipped=True))
                continue
            if delta == 0:
                perturbed = list(w0)  # bit-exact no-op scenario
            else:
                total = sum(perturbed)
                perturbed = [w / total for w in perturbed]
            ranking = topsis_pipeline(d, _directed(perturbed, d, directions))
            scenarios.append(Scenario(label, tuple(perturbed), ranking))
            top_changed = ranking.rank.index(1) != base.rank.index(1)
            if top_changed and (critical[crit] is None or abs(delta) < critical[crit]):
                critical[crit] = abs(delta)
    return _assemble(base, scenarios, critical, skipped)


def monte_carlo_weights(d: DecisionMatrix, samples: int, seed: int,
                        weights=None, directions=None) -> StabilityReport:
    """Rank under `samples` uniform random weight vectors from the simplex.

    The base ranking uses `weights` when given (e.g. the committed FAHP
    weights), else equal weights.
    """
    if samples < 1:
        raise InputError(f"samples must be >= 1, got {samples}")
    if directions is None and isinstance(weights, CriterionWeightVector):
        directions = weights.directions
    directions = tuple(directions) if directions else d.directions
    base_w = _crisp(weights) if weights is not None else [1.0 / d.n] * d.n
    rng = SplitMix64(seed)
    base = topsis_pipeline(d, _directed(base_w, d, directions))
    scenarios = []
    for k in range(samples):
        w = rng.simplex_point(d.n)
        ranking = topsis_pipeline(d, _directed(w, d, directions))
        scenarios.append(Scenario(f"mc{k}", tuple(w), ranking))
    return _assemble(base, scenarios, {c: None for c in d.criterion_ids}, [])


def _directed(w, d: DecisionMatrix, directions):
    # plain weight lists rank with the decision matrix's own directions;
    # build an ad-hoc CriterionWeightVector only when directions differ
    if tuple(directions) == d.directions:
        return w
    from .fuzzy import Tfn
    return CriterionWeightVector(
        criterion_ids=d.criterion_ids,
        fuzzy_weights=tuple(Tfn(x, x, x) for x in w),
        crisp_weights=tuple(w),
        directions=tuple(directions),
        cr=0.0,
    )


def roadmap_tiers(ranking: RankingResult, band_sizes=(1, 2, 2)) -> RoadmapTiers:
    """Partition the ranked alternatives into short/medium/long-term bands."""
    bands = tuple(int(b) for b in band_sizes)
    if any(b < 1 for b in bands):
        raise InputError("band sizes must be positive")
    if len(bands) > 3:
        raise InputError("at most 3 tiers (short/medium/long)")
    m = len(ranking.alternative_ids)
    if sum(bands) != m:
        raise InputError(f"band sizes sum to {sum(bands)}, need {m}")
    by_rank = sorted(zip(ranking.rank, ranking.alternative_ids, ranking.cc))
    # a tie straddling a band boundary would make tier membership arbitrary
    cut = 0
    for b in bands[:-1]:
        cut += b
        if by_rank[cut - 1][2] == by_rank[cut][2]:
            raise InputError(
                f"tie across tier boundary after rank {cut}; adjust band sizes")
    ordered = [a for _, a, _ in by_rank]
    tiers = []
    pos = 0
    for b in bands:
        tiers.append(tuple(ordered[pos:pos + b]))
        pos += b
    while len(tiers) < 3:
        tiers.append(())
    return RoadmapTiers(tiers[0], tiers[1], tiers[2], bands)
