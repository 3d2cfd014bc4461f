"""Likert-scale expert screening of candidate criteria and use-cases.

An item survives only if the panel rates it important enough (mean) and
agrees enough (population standard deviation).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InputError

CRITERION = "criterion"
USE_CASE = "use_case"


@dataclass(frozen=True)
class LikertAssessment:
    """One candidate item with per-expert scores on a 1..5 scale."""

    item_id: str
    item_kind: str  # criterion | use_case
    scores: tuple[int, ...]

    def __post_init__(self):
        if self.item_kind not in (CRITERION, USE_CASE):
            raise InputError(f"unknown item kind: {self.item_kind!r}")
        if not self.scores:
            raise InputError(f"item {self.item_id!r} has no expert scores")
        if any(not (1 <= s <= 5) for s in self.scores):
            raise InputError(f"item {self.item_id!r} has scores outside 1..5")

    @property
    def mean(self) -> float:
        return sum(self.scores) / len(self.scores)

    @property
    def dispersion(self) -> float:
        mu = self.mean
        return math.sqrt(sum((s - mu) ** 2 for s in self.scores) / len(self.scores))


@dataclass(frozen=True)
class ScreeningDecision:
    item: LikertAssessment
    retained: bool
    reasons: tuple[str, ...]  # failed rules, empty when retained


def screen_items(assessments, mean_threshold: float = 3.5,
                 dispersion_threshold: float = 1.0):
    """Split items into (retained, eliminated-with-reasons).

    Retained iff mean >= mean_threshold and population sd <= dispersion_threshold.
    """
    items = list(assessments)
    if not items:
        raise InputError("no assessments to screen")
    if mean_threshold <= 0 or dispersion_threshold <= 0:
        raise InputError("thresholds must be positive")
    retained, eliminated = [], []
    for item in items:
        reasons = []
        if item.mean < mean_threshold:
            reasons.append("unimportant")
        if item.dispersion > dispersion_threshold:
            reasons.append("low_consensus")
        decision = ScreeningDecision(item, not reasons, tuple(reasons))
        (retained if decision.retained else eliminated).append(decision)
    return retained, eliminated
