"""Constrained annealing polish: explore only CR-feasible judgment sets.

Starts from a known-good fit and random-walks single-cell substitutions,
rejecting outright any state where some expert's CR reaches 0.095 or the
aggregate CR reaches 0.1, with Metropolis acceptance on the rounding
penalty. Terminates the moment all five weights round to the target.

Usage: python3 scripts/polish_panel_judgments.py START.json OUT.json [--seed N]
"""

import json
import math
import random
import sys

from mcdm_workbench.fahp import (
    aggregate_expert_matrices,
    consistency_ratio,
    crisp_normalized_weights,
    fuzzy_geometric_means,
    fuzzy_weights,
)
from refine_panel_judgments import (
    CHOICES,
    CRITERIA,
    PAIRS,
    TARGET,
    _fast_cr,
    load_state,
    matrices,
    score,
)


def cost_of(s):
    return 10.0 * s[0] + s[1]


def main():
    start, out = sys.argv[1], sys.argv[2]
    seed = int(sys.argv[3]) if len(sys.argv) > 3 else 1
    iters = int(sys.argv[4]) if len(sys.argv) > 4 else 60000
    rng = random.Random(seed)
    state = load_state(start)
    cur = score(state)
    assert cur is not None, "start point violates CR constraints"
    best = (cost_of(cur), [list(e) for e in state], cur)
    temp0 = 0.01
    for k in range(iters):
        temp = temp0 * (1.0 - k / iters) + 1e-7
        e = rng.randrange(5)
        c = rng.randrange(len(PAIRS))
        old = state[e][c]
        state[e][c] = rng.choice(CHOICES)
        cand = score(state)
        if cand is None:
            state[e][c] = old
            continue
        delta = cost_of(cand) - cost_of(cur)
        if delta < 0 or rng.random() < math.exp(-delta / temp):
            cur = cand
            if cost_of(cur) < best[0]:
                best = (cost_of(cur), [list(x) for x in state], cur)
                print(f"iter {k}: pen {cur[0]:.6f} dev {cur[1]:.6f} exact {cur[2]}")
            if cur[2]:
                break
        else:
            state[e][c] = old

    _, state, cur = best
    _, dev, exact, w, crs = cur
    agg_cr = consistency_ratio(aggregate_expert_matrices(matrices(state)))
    print(f"final dev {dev:.6f}, exact {exact}, aggregate CR {agg_cr:.4f}")
    print("weights:", [f"{x:.4f}" for x in w])
    print("per-expert CRs:", [round(float(x), 4) for x in crs])
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
    print(f"wrote {out} (exact={exact})")


if __name__ == "__main__":
    main()
