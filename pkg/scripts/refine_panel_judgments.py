"""Greedy refinement of a fitted judgment set toward exact 3-decimal weights.

Starts from an existing judgment JSON (as produced by fit_panel_judgments.py
or the fixtures copy) and exhaustively tries single-cell label substitutions,
accepting the move that best reduces the rounding penalty while keeping
every per-expert CR and the aggregate CR under the gate. Stops when all five
aggregated weights round to the target at 3 decimals.

Usage: python3 scripts/refine_panel_judgments.py START.json [OUT.json]
"""

import json
import sys

from mcdm_workbench.fahp import (
    aggregate_expert_matrices,
    build_matrix,
    consistency_ratio,
    crisp_normalized_weights,
    fuzzy_geometric_means,
    fuzzy_weights,
)
from mcdm_workbench.fuzzy import LINGUISTIC_LABELS

TARGET = (0.343, 0.352, 0.152, 0.095, 0.057)
CRITERIA = ("safety", "maturity", "cost", "data", "scalability")
PAIRS = [(i, j) for i in range(5) for j in range(i + 1, 5)]
CHOICES = [(lab, False) for lab in LINGUISTIC_LABELS] + \
          [(lab, True) for lab in LINGUISTIC_LABELS if lab != "Equally important"]


def _fast_cr(matrix):
    import numpy as np
    from mcdm_workbench.fahp import RANDOM_INDEX, defuzzify_matrix
    crisp = defuzzify_matrix(matrix)
    lam = max(np.linalg.eigvals(crisp).real)
    n = crisp.shape[0]
    return ((lam - n) / (n - 1)) / RANDOM_INDEX[n]


def matrices(state):
    return [build_matrix(CRITERIA, [(i, j, lab, rec)
                                    for (i, j), (lab, rec) in zip(PAIRS, expert)])
            for expert in state]


def score(state):
    mats = matrices(state)
    crs = [_fast_cr(m) for m in mats]
    if max(crs) >= 0.095:
        return None
    agg = aggregate_expert_matrices(mats)
    if consistency_ratio(agg) >= 0.1:
        return None
    w = crisp_normalized_weights(fuzzy_weights(fuzzy_geometric_means(agg)))
    round_pen = sum(max(0.0, abs(a - b) - 0.00045) for a, b in zip(w, TARGET))
    dev = max(abs(a - b) for a, b in zip(w, TARGET))
    exact = all(f"{x:.3f}" == f"{t:.3f}" for x, t in zip(w, TARGET))
    return round_pen, dev, exact, w, crs


def load_state(path):
    with open(path) as fh:
        data = json.load(fh)
    table = data["judgments"]
    state = []
    for e in sorted(table):
        by_pair = {(j["a"], j["b"]): (j["label"], bool(j.get("reciprocal")))
                   for j in table[e]}
        state.append([by_pair[(CRITERIA[i], CRITERIA[j])] for i, j in PAIRS])
    return state


def refine(state, max_rounds=60):
    cur = score(state)
    if cur is None:
        raise SystemExit("start point violates the CR constraints")
    for rnd in range(max_rounds):
        if cur[2]:
            break
        best_move = None
        for e in range(5):
            for c in range(len(PAIRS)):
                old = state[e][c]
                for choice in CHOICES:
                    if choice == old:
                        continue
                    state[e][c] = choice
                    cand = score(state)
                    if cand is not None and cand[:2] < cur[:2]:
                        if best_move is None or cand[:2] < best_move[0][:2]:
                            best_move = (cand, e, c, choice)
                state[e][c] = old
        if best_move is None:
            print(f"round {rnd}: no improving move, stuck at pen {cur[0]:.6f}")
            break
        cur, e, c, choice = best_move
        state[e][c] = choice
        print(f"round {rnd}: pen {cur[0]:.6f} dev {cur[1]:.6f} exact {cur[2]}")
    return state, cur


def main():
    start = sys.argv[1]
    out = sys.argv[2] if len(sys.argv) > 2 else "scripts/panel_judgments.json"
    state, cur = refine(load_state(start))
    _, dev, exact, w, crs = cur
    agg_cr = consistency_ratio(aggregate_expert_matrices(matrices(state)))
    print(f"final dev {dev:.6f}, exact {exact}, aggregate CR {agg_cr:.4f}")
    print("weights:", [f"{x:.4f}" for x in w])
    print("per-expert CRs:", [round(x, 4) for x in crs])
    payload = {
        "criteria": CRITERIA,
        "target": TARGET,
        "weights": list(w),
        "cr": agg_cr,
        "judgments": {
            f"e{e + 1}": [
                {"a": CRITERIA[i], "b": CRITERIA[j], "label": lab, "reciprocal": rec}
                for (i, j), (lab, rec) in zip(PAIRS, state[e])
            ]
            for e in range(5)
        },
    }
    with open(out, "w") as fh:
        json.dump(payload, fh, indent=2)
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
