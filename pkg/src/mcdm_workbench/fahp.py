"""Fuzzy pairwise comparison matrices and geometric-mean criterion weighting.

Builds reciprocal TFN matrices from linguistic judgments, aggregates an
expert panel by componentwise geometric mean, gates on Saaty's consistency
ratio, and derives crisp normalized criterion weights.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, InputError, NumericError
from .fuzzy import (
    Tfn,
    defuzzify_centroid,
    linguistic_to_tfn,
    tfn_invert,
    tfn_nth_root,
)

# Saaty random consistency indices, indexed by matrix order n (1..10).
RANDOM_INDEX = {1: 0.0, 2: 0.0, 3: 0.58, 4: 0.90, 5: 1.12,
                6: 1.24, 7: 1.32, 8: 1.41, 9: 1.45, 10: 1.49}

MAX_CRITERIA = max(RANDOM_INDEX)

RECIPROCITY_TOL = 1e-12


@dataclass(frozen=True)
class FuzzyPairwiseMatrix:
    """n x n reciprocal matrix of TFN judgments over ordered criteria."""

    criterion_ids: tuple[str, ...]
    cells: tuple[tuple[Tfn, ...], ...]

    @property
    def n(self) -> int:
        return len(self.criterion_ids)

    def __post_init__(self):
        n = self.n
        if n < 2:
            raise InputError(f"pairwise matrix needs at least 2 criteria, got {n}")
        if len(self.cells) != n or any(len(row) != n for row in self.cells):
            raise InputError("pairwise matrix cells are not n x n")
        for i in range(n):
            d = self.cells[i][i]
            if (d.l, d.m, d.u) != (1.0, 1.0, 1.0):
                raise InputError(f"diagonal cell ({i},{i}) must be (1,1,1), got {d}")
        for i in range(n):
            for j in range(i + 1, n):
                inv = tfn_invert(self.cells[i][j])
                back = self.cells[j][i]
                if (abs(inv.l - back.l) > RECIPROCITY_TOL
                        or abs(inv.m - back.m) > RECIPROCITY_TOL
                        or abs(inv.u - back.u) > RECIPROCITY_TOL):
                    raise InputError(f"reciprocity violated at ({i},{j})")

    def to_json(self) -> dict:
        return {
            "criteria": list(self.criterion_ids),
            "cells": [[c.to_json() for c in row] for row in self.cells],
        }

    @classmethod
    def from_json(cls, data) -> "FuzzyPairwiseMatrix":
        return cls(
            criterion_ids=tuple(data["criteria"]),
            cells=tuple(tuple(Tfn.from_json(c) for c in row) for row in data["cells"]),
        )


@dataclass(frozen=True)
class CriterionWeightVector:
    """Fuzzy and crisp criterion weights plus the gating consistency ratio."""

    criterion_ids: tuple[str, ...]
    fuzzy_weights: tuple[Tfn, ...]
    crisp_weights: tuple[float, ...]
    directions: tuple[str, ...]  # "benefit" | "cost" per criterion
    cr: float

    def __post_init__(self):
        n = len(self.criterion_ids)
        if not (len(self.fuzzy_weights) == len(self.crisp_weights) == len(self.directions) == n):
            raise InputError("weight vector field lengths disagree")
        if abs(sum(self.crisp_weights) - 1.0) > 1e-9:
            raise InputError("crisp weights must sum to 1")
        if any(not (0.0 < w < 1.0) for w in self.crisp_weights) and n > 1:
            raise InputError("crisp weights must lie in (0,1)")
        if any(d not in ("benefit", "cost") for d in self.directions):
            raise InputError("directions must be 'benefit' or 'cost'")

    def to_json(self) -> dict:
        return {
            "criteria": list(self.criterion_ids),
            "fuzzy_weights": [w.to_json() for w in self.fuzzy_weights],
            "crisp_weights": list(self.crisp_weights),
            "directions": list(self.directions),
            "cr": self.cr,
        }

    @classmethod
    def from_json(cls, data) -> "CriterionWeightVector":
        return cls(
            criterion_ids=tuple(data["criteria"]),
            fuzzy_weights=tuple(Tfn.from_json(w) for w in data["fuzzy_weights"]),
            crisp_weights=tuple(data["crisp_weights"]),
            directions=tuple(data["directions"]),
            cr=float(data["cr"]),
        )


@dataclass(frozen=True)
class FahpOutcome:
    """Result of the weighting pipeline: accepted weights, or a CR rejection."""

    accepted: bool
    cr: float
    expert_crs: tuple[float, ...]
    weights: CriterionWeightVector | None

    def to_json(self) -> dict:
        return {
            "accepted": self.accepted,
            "cr": self.cr,
            "expert_crs": list(self.expert_crs),
            "weights": self.weights.to_json() if self.weights else None,
        }


def build_matrix(criterion_ids, judgments) -> FuzzyPairwiseMatrix:
    """Assemble a reciprocal matrix from upper-triangle linguistic judgments.

    `judgments` is an iterable of (i, j, label, reciprocal) with i < j; every
    upper-triangle pair must appear exactly once.
    """
    ids = tuple(criterion_ids)
    n = len(ids)
    if n < 2:
        raise InputError(f"need at least 2 criteria, got {n}")
    one = Tfn(1, 1, 1)
    grid: list[list[Tfn | None]] = [[one if i == j else None for j in range(n)] for i in range(n)]
    seen = set()
    for (i, j, label, reciprocal) in judgments:
        if not (0 <= i < n and 0 <= j < n) or i == j:
            raise InputError(f"judgment indices ({i},{j}) out of range for n={n}")
        if i > j:
            i, j, reciprocal = j, i, not reciprocal
        if (i, j) in seen:
            raise InputError(f"duplicate judgment for pair ({i},{j})")
        seen.add((i, j))
        t = linguistic_to_tfn(label, reciprocal)
        grid[i][j] = t
        grid[j][i] = tfn_invert(t)
    missing = [(i, j) for i in range(n) for j in range(i + 1, n) if (i, j) not in seen]
    if missing:
        raise InputError(f"missing judgments for pairs: {missing}")
    return FuzzyPairwiseMatrix(ids, tuple(tuple(row) for row in grid))


def aggregate_expert_matrices(matrices) -> FuzzyPairwiseMatrix:
    """Cell-wise componentwise geometric mean across an expert panel.

    Preserves diagonal and reciprocity because the geometric mean commutes
    with the (1/u, 1/m, 1/l) inverse.
    """
    mats = list(matrices)
    if not mats:
        raise InputError("no matrices to aggregate")
    ids = mats[0].criterion_ids
    for m in mats[1:]:
        if m.criterion_ids != ids:
            raise InputError("expert matrices have mismatched criteria")
    k = len(mats)
    n = len(ids)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(Tfn(1, 1, 1))
                continue
            l = math.exp(sum(math.log(m.cells[i][j].l) for m in mats) / k)
            mid = math.exp(sum(math.log(m.cells[i][j].m) for m in mats) / k)
            u = math.exp(sum(math.log(m.cells[i][j].u) for m in mats) / k)
            row.append(Tfn(l, mid, u))
        out.append(tuple(row))
    # exact reciprocity can drift by a few ulp; resymmetrize the lower triangle
    grid = [list(r) for r in out]
    for i in range(n):
        for j in range(i + 1, n):
            grid[j][i] = tfn_invert(grid[i][j])
    return FuzzyPairwiseMatrix(ids, tuple(tuple(r) for r in grid))


def defuzzify_matrix(matrix: FuzzyPairwiseMatrix, method: str = "centroid",
                     alpha: float = 0.5, optimism: float = 0.5) -> np.ndarray:
    """Collapse each TFN cell to a crisp positive value.

    centroid: (l+m+u)/3.  alpha_cut: the alpha-level interval
    [l + alpha(m-l), u - alpha(u-m)] combined as
    optimism*upper + (1-optimism)*lower.
    """
    n = matrix.n
    out = np.empty((n, n))
    if method == "centroid":
        for i in range(n):
            for j in range(n):
                out[i, j] = defuzzify_centroid(matrix.cells[i][j])
    elif method == "alpha_cut":
        if not (0.0 <= alpha <= 1.0 and 0.0 <= optimism <= 1.0):
            raise InputError("alpha and optimism must lie in [0,1]")
        for i in range(n):
            for j in range(n):
                c = matrix.cells[i][j]
                lo = c.l + alpha * (c.m - c.l)
                hi = c.u - alpha * (c.u - c.m)
                out[i, j] = optimism * hi + (1.0 - optimism) * lo
    else:
        raise InputError(f"unknown defuzzification method: {method!r}")
    return out


def principal_eigenvalue(a: np.ndarray, tol: float = 1e-10, max_iter: int = 10000) -> float:
    """Dominant eigenvalue of a positive matrix by power iteration."""
    n = a.shape[0]
    v = np.full(n, 1.0 / n)
    lam = 0.0
    for _ in range(max_iter):
        w = a @ v
        new_lam = float(np.linalg.norm(w))
        v_new = w / new_lam
        if abs(new_lam - lam) < tol and float(np.linalg.norm(v_new - v)) < tol:
            # Rayleigh quotient is more accurate than the norm estimate
            return float(v_new @ a @ v_new) / float(v_new @ v_new)
        v, lam = v_new, new_lam
    raise NumericError("power iteration did not converge")


def consistency_ratio(matrix: FuzzyPairwiseMatrix, method: str = "centroid",
                      alpha: float = 0.5, optimism: float = 0.5) -> float:
    """Saaty CR of the defuzzified matrix; 0 by convention for n <= 2."""
    n = matrix.n
    if n > MAX_CRITERIA:
        raise InputError(f"consistency ratio supports n <= {MAX_CRITERIA}, got {n}")
    if n <= 2:
        return 0.0
    crisp = defuzzify_matrix(matrix, method, alpha, optimism)
    lam = principal_eigenvalue(crisp)
    ci = (lam - n) / (n - 1)
    return ci / RANDOM_INDEX[n]


def fuzzy_geometric_means(matrix: FuzzyPairwiseMatrix) -> list[Tfn]:
    """Row-wise fuzzy geometric mean: componentwise n-th root of row products."""
    n = matrix.n
    out = []
    for row in matrix.cells:
        prod = Tfn(1, 1, 1)
        for c in row:
            prod = Tfn(prod.l * c.l, prod.m * c.m, prod.u * c.u)
        out.append(tfn_nth_root(prod, n))
    return out


def fuzzy_weights(r: list[Tfn]) -> list[Tfn]:
    """Cross-normalize geometric means: w_i = (l_i/sum(u), m_i/sum(m), u_i/sum(l))."""
    if not r:
        raise InputError("empty geometric-mean list")
    if any(t.l <= 0 for t in r):
        raise DomainError("geometric means must be strictly positive")
    sum_l = sum(t.l for t in r)
    sum_m = sum(t.m for t in r)
    sum_u = sum(t.u for t in r)
    return [Tfn(t.l / sum_u, t.m / sum_m, t.u / sum_l) for t in r]


def crisp_normalized_weights(w: list[Tfn]) -> list[float]:
    """Centroid-defuzzify each fuzzy weight, then renormalize to sum 1."""
    cents = [defuzzify_centroid(t) for t in w]
    total = sum(cents)
    if total <= 0:
        raise DomainError("degenerate fuzzy weights: centroids sum to zero")
    return [c / total for c in cents]


def fahp_pipeline(matrices, directions, cr_threshold: float = 0.1,
                  cr_method: str = "centroid") -> FahpOutcome:
    """Aggregate an expert panel and produce gated crisp weights.

    A CR at or above the threshold yields a rejection carrying the CR (and
    per-expert CRs as diagnostics) with no weights, so callers can route the
    matrix back to the panel for revision.
    """
    mats = list(matrices)
    expert_crs = tuple(consistency_ratio(m, cr_method) for m in mats)
    agg = aggregate_expert_matrices(mats)
    directions = tuple(directions)
    if len(directions) != agg.n:
        raise InputError("directions length must equal criterion count")
    cr = consistency_ratio(agg, cr_method)
    if cr >= cr_threshold:
        return FahpOutcome(False, cr, expert_crs, None)
    r = fuzzy_geometric_means(agg)
    fw = fuzzy_weights(r)
    cw = crisp_normalized_weights(fw)
    vec = CriterionWeightVector(
        criterion_ids=agg.criterion_ids,
        fuzzy_weights=tuple(fw),
        crisp_weights=tuple(cw),
        directions=directions,
        cr=cr,
    )
    return FahpOutcome(True, cr, expert_crs, vec)


def inconsistent_triads(matrix: FuzzyPairwiseMatrix, top: int = 3,
                        method: str = "centroid") -> list[tuple[int, int, int, float]]:
    """Rank judgment triads by transitivity violation.

    For each i<j<k, deviation = |log(a_ij * a_jk / a_ik)| on the defuzzified
    matrix; a perfectly transitive triad scores 0. Returns the worst `top`
    triads as (i, j, k, deviation), largest first.
    """
    crisp = defuzzify_matrix(matrix, method)
    n = matrix.n
    scored = []
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                dev = abs(math.log(crisp[i, j] * crisp[j, k] / crisp[i, k]))
                scored.append((i, j, k, dev))
    scored.sort(key=lambda t: -t[3])
    return scored[:top]
