"""Build the bundled example project and CSV fixtures.

Reads the fitted panel judgments (scripts/panel_judgments.json, produced by
fit_panel_judgments.py) and assembles a complete project: expert panel,
screening votes, criteria, the five use-cases with their reference score
matrix, and the fitted pairwise judgments. Writes:

    fixtures/reference.mcdm.json
    fixtures/decision_scores.csv
    fixtures/likert_screening.csv
    fixtures/panel_judgments.json
"""

import json
from pathlib import Path

from mcdm_workbench.workspace import (
    Alternative,
    Criterion,
    Expert,
    Judgment,
    Project,
    save_project,
)

CRITERIA = [
    ("safety", "Safety Impact", "benefit"),
    ("maturity", "Technological Maturity", "benefit"),
    ("cost", "Implementation Cost", "cost"),
    ("data", "Data Requirement Complexity", "cost"),
    ("scalability", "Scalability", "benefit"),
]

ALTERNATIVES = [
    ("posture", "Posture Monitoring"),
    ("skill", "Skill Training Simulation"),
    ("fatigue", "Fatigue Prediction"),
    ("health", "Health-Based Task Assignment"),
    ("ppe", "PPE Compliance Tracking"),
]

# rows follow ALTERNATIVES order, columns follow CRITERIA order
SCORES = [
    [8, 8, 7, 5, 8],
    [7, 7, 6, 6, 7],
    [9, 7, 5, 7, 7],
    [8, 6, 6, 8, 6],
    [6, 9, 8, 8, 9],
]

EXPERTS = [
    ("e1", "Expert 1", "academic"),
    ("e2", "Expert 2", "academic"),
    ("e3", "Expert 3", "academic"),
    ("e4", "Expert 4", "practitioner"),
    ("e5", "Expert 5", "practitioner"),
]

# screening votes for the surviving criteria and use-cases (all retained)
SCREENING = {
    "safety": [5, 5, 4, 5, 5],
    "maturity": [5, 4, 5, 5, 4],
    "cost": [4, 4, 5, 4, 4],
    "data": [4, 5, 4, 4, 4],
    "scalability": [4, 4, 4, 5, 4],
    "posture": [5, 5, 5, 4, 5],
    "skill": [4, 4, 5, 4, 4],
    "fatigue": [5, 4, 5, 5, 4],
    "health": [4, 5, 4, 4, 5],
    "ppe": [5, 4, 4, 5, 4],
}


def main():
    root = Path(__file__).resolve().parent.parent
    fixtures = root / "fixtures"
    fixtures.mkdir(exist_ok=True)

    fitted = json.loads((root / "scripts" / "panel_judgments.json").read_text())

    p = Project(name="hdt-use-case-prioritization",
                created="2026-01-01T00:00:00Z", modified="2026-01-01T00:00:00Z")
    for cid, cname, direction in CRITERIA:
        p.add_criterion(Criterion(cid, cname, direction))
    for aid, aname in ALTERNATIVES:
        p.add_alternative(Alternative(aid, aname))
    for eid, ename, role in EXPERTS:
        p.add_expert(Expert(eid, ename, role))

    from mcdm_workbench.screening import LikertAssessment
    crit_ids = {c[0] for c in CRITERIA}
    for item, votes in SCREENING.items():
        kind = "criterion" if item in crit_ids else "use_case"
        p.screening.append(LikertAssessment(item, kind, tuple(votes)))
    p.touch()

    for expert_id, js in fitted["judgments"].items():
        p.set_judgments(expert_id, [
            Judgment(j["a"], j["b"], j["label"], j["reciprocal"]) for j in js])

    panel_scores = {}
    for (aid, _), row in zip(ALTERNATIVES, SCORES):
        panel_scores[aid] = {cid: float(x) for (cid, _, _), x in zip(CRITERIA, row)}
    p.set_scores("panel", panel_scores)

    save_project(p, fixtures / "reference.mcdm.json")

    header = "alternative," + ",".join(
        cid + ("+" if d == "benefit" else "-") for cid, _, d in CRITERIA)
    lines = [header]
    for (aid, _), row in zip(ALTERNATIVES, SCORES):
        lines.append(aid + "," + ",".join(str(x) for x in row))
    (fixtures / "decision_scores.csv").write_text("\n".join(lines) + "\n")

    lk = ["item,kind," + ",".join(e[0] for e in EXPERTS)]
    for item, votes in SCREENING.items():
        kind = "criterion" if item in crit_ids else "use_case"
        lk.append(f"{item},{kind}," + ",".join(str(v) for v in votes))
    (fixtures / "likert_screening.csv").write_text("\n".join(lk) + "\n")

    (fixtures / "panel_judgments.json").write_text(
        json.dumps({"judgments": fitted["judgments"]}, indent=2) + "\n")

    # sanity: the full chain should land on the reference tables
    outcome = p.compute_weights()
    assert outcome.accepted, outcome.cr
    print("weights:", [round(w, 4) for w in outcome.weights.crisp_weights])
    print("cr:", round(outcome.cr, 4))
    ranking = p.compute_ranking(rounding=2)
    print("cc:", [round(c, 3) for c in ranking.cc])
    print("rank:", ranking.rank)
    print("fixtures written to", fixtures)


if __name__ == "__main__":
    main()
