"""TOPSIS ranking: vector normalization, weighting, ideal solutions,
separation distances, and closeness coefficients.

An optional rounding mode truncates intermediates to a fixed number of
decimal places (weighted matrix at `places`, distances at `places + 1`),
reproducing arithmetic chained from printed tables; the default is full
precision.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InputError
from .fahp import CriterionWeightVector

BENEFIT = "benefit"
COST = "cost"


@dataclass(frozen=True)
class DecisionMatrix:
    """m alternatives scored against n directed criteria, x_ij >= 0."""

    alternative_ids: tuple[str, ...]
    criterion_ids: tuple[str, ...]
    directions: tuple[str, ...]
    scores: tuple[tuple[float, ...], ...]

    @property
    def m(self) -> int:
        return len(self.alternative_ids)

    @property
    def n(self) -> int:
        return len(self.criterion_ids)

    def __post_init__(self):
        if self.m < 2:
            raise InputError(f"need at least 2 alternatives, got {self.m}")
        if self.n < 1:
            raise InputError("need at least 1 criterion")
        if len(self.directions) != self.n:
            raise InputError("directions length must equal criterion count")
        if any(d not in (BENEFIT, COST) for d in self.directions):
            raise InputError("directions must be 'benefit' or 'cost'")
        if len(self.scores) != self.m or any(len(r) != self.n for r in self.scores):
            raise InputError("scores grid is not m x n")
        if any(x < 0 for row in self.scores for x in row):
            raise InputError("scores must be non-negative")
        arr = np.asarray(self.scores, float)
        zero = np.flatnonzero((arr == 0).all(axis=0))
        if zero.size:
            names = [self.criterion_ids[j] for j in zero]
            raise InputError(f"all-zero criterion column(s): {names}")

    def array(self) -> np.ndarray:
        return np.asarray(self.scores, float)

    def to_json(self) -> dict:
        return {
            "alternatives": list(self.alternative_ids),
            "criteria": list(self.criterion_ids),
            "directions": list(self.directions),
            "scores": [list(r) for r in self.scores],
        }

    @classmethod
    def from_json(cls, data) -> "DecisionMatrix":
        return cls(
            alternative_ids=tuple(data["alternatives"]),
            criterion_ids=tuple(data["criteria"]),
            directions=tuple(data["directions"]),
            scores=tuple(tuple(float(x) for x in r) for r in data["scores"]),
        )


@dataclass(frozen=True)
class IdealSolutions:
    """Per-criterion positive (best) and negative (worst) reference points."""

    positive: tuple[float, ...]
    negative: tuple[float, ...]


@dataclass(frozen=True)
class RankingResult:
    alternative_ids: tuple[str, ...]
    d_plus: tuple[float, ...]
    d_minus: tuple[float, ...]
    cc: tuple[float, ...]
    rank: tuple[int, ...]
    ideals: IdealSolutions | None
    weighted_matrix: tuple[tuple[float, ...], ...] | None
    tied: tuple[bool, ...]
    degenerate: bool = False

    def to_json(self) -> dict:
        return {
            "alternatives": list(self.alternative_ids),
            "d_plus": list(self.d_plus),
            "d_minus": list(self.d_minus),
            "cc": list(self.cc),
            "rank": list(self.rank),
            "ideals": (
                {"positive": list(self.ideals.positive), "negative": list(self.ideals.negative)}
                if self.ideals else None
            ),
            "weighted_matrix": (
                [list(r) for r in self.weighted_matrix] if self.weighted_matrix is not None else None
            ),
            "tied": list(self.tied),
            "degenerate": self.degenerate,
        }

    @classmethod
    def from_json(cls, data) -> "RankingResult":
        ideals = data.get("ideals")
        wm = data.get("weighted_matrix")
        return cls(
            alternative_ids=tuple(data["alternatives"]),
            d_plus=tuple(data["d_plus"]),
            d_minus=tuple(data["d_minus"]),
            cc=tuple(data["cc"]),
            rank=tuple(data["rank"]),
            ideals=IdealSolutions(tuple(ideals["positive"]), tuple(ideals["negative"])) if ideals else None,
            weighted_matrix=tuple(tuple(r) for r in wm) if wm is not None else None,
            tied=tuple(data["tied"]),
            degenerate=bool(data.get("degenerate", False)),
        )


def normalize_columns(scores: np.ndarray) -> np.ndarray:
    """Vector (Euclidean) column normalization r_ij = x_ij / ||x_.j||."""
    scores = np.asarray(scores, float)
    norms = np.sqrt((scores ** 2).sum(axis=0))
    zero = np.flatnonzero(norms == 0)
    if zero.size:
        raise InputError(f"cannot normalize all-zero column(s) at index {list(zero)}")
    return scores / norms


def normalize_matrix(d: DecisionMatrix) -> np.ndarray:
    return normalize_columns(d.array())


def weight_matrix(r: np.ndarray, weights) -> np.ndarray:
    """Scale each normalized column by its criterion weight: v_ij = w_j * r_ij."""
    if isinstance(weights, CriterionWeightVector):
        w = np.asarray(weights.crisp_weights, float)
    else:
        w = np.asarray(weights, float)
    r = np.asarray(r, float)
    if r.shape[1] != w.shape[0]:
        raise InputError(f"weight count {w.shape[0]} != criterion count {r.shape[1]}")
    return r * w


def ideal_solutions(v: np.ndarray, directions) -> IdealSolutions:
    """Columnwise best/worst: benefit takes max as positive ideal, cost takes min."""
    v = np.asarray(v, float)
    benefit = np.asarray([d == BENEFIT for d in directions])
    if benefit.shape[0] != v.shape[1]:
        raise InputError("directions length must equal column count")
    pos = np.where(benefit, v.max(axis=0), v.min(axis=0))
    neg = np.where(benefit, v.min(axis=0), v.max(axis=0))
    return IdealSolutions(tuple(float(x) for x in pos), tuple(float(x) for x in neg))


def separation_distances(v: np.ndarray, ideals: IdealSolutions) -> list[tuple[float, float]]:
    """Euclidean distance of each row to the positive and negative ideals."""
    v = np.asarray(v, float)
    pos = np.asarray(ideals.positive)
    neg = np.asarray(ideals.negative)
    if pos.shape[0] != v.shape[1]:
        raise InputError("ideal solution length must equal column count")
    dp = np.sqrt(((v - pos) ** 2).sum(axis=1))
    dm = np.sqrt(((v - neg) ** 2).sum(axis=1))
    return [(float(a), float(b)) for a, b in zip(dp, dm)]


def closeness_and_rank(distances, alternative_ids=None,
                       ideals=None, weighted_matrix=None) -> RankingResult:
    """CC_i = d_i- / (d_i+ + d_i-); ranks by descending CC, stable on ties."""
    dp = [float(a) for a, _ in distances]
    dm = [float(b) for _, b in distances]
    if any(a < 0 or b < 0 for a, b in zip(dp, dm)):
        raise InputError("distances must be non-negative")
    m = len(dp)
    degenerate = False
    cc = []
    for a, b in zip(dp, dm):
        if a + b == 0:
            cc.append(0.5)  # alternative identical to both ideals
            degenerate = True
        else:
            cc.append(b / (a + b))
    order = sorted(range(m), key=lambda i: (-cc[i], i))
    rank = [0] * m
    for pos, i in enumerate(order):
        rank[i] = pos + 1
    tied = [False] * m
    for i in range(m):
        for j in range(m):
            if i != j and cc[i] == cc[j]:
                tied[i] = True
                break
    ids = tuple(alternative_ids) if alternative_ids else tuple(f"A{i + 1}" for i in range(m))
    wm = tuple(tuple(float(x) for x in row) for row in np.asarray(weighted_matrix)) \
        if weighted_matrix is not None else None
    return RankingResult(
        alternative_ids=ids,
        d_plus=tuple(dp),
        d_minus=tuple(dm),
        cc=tuple(cc),
        rank=tuple(rank),
        ideals=ideals,
        weighted_matrix=wm,
        tied=tuple(tied),
        degenerate=degenerate,
    )


def topsis_pipeline(d: DecisionMatrix, weights, rounding: int | None = None) -> RankingResult:
    """Full ranking run over a decision matrix.

    `rounding` (decimal places) rounds the weighted normalized matrix before
    the ideal/distance steps and the distances (one extra place) before the
    closeness step, matching arithmetic chained from rounded tables.
    """
    if isinstance(weights, CriterionWeightVector):
        if weights.criterion_ids != d.criterion_ids:
            raise InputError("weight vector criteria do not match decision matrix")
        directions = weights.directions
    else:
        directions = d.directions
    r = normalize_matrix(d)
    v = weight_matrix(r, weights)
    if rounding is not None:
        v = np.round(v, rounding)
    ideals = ideal_solutions(v, directions)
    dists = separation_distances(v, ideals)
    if rounding is not None:
        dists = [(round(a, rounding + 1), round(b, rounding + 1)) for a, b in dists]
    return closeness_and_rank(dists, d.alternative_ids, ideals, v)
