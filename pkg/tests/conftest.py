import shutil
from pathlib import Path

import pytest

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

# reference study data used as oracles throughout the suite
REF_WEIGHTS = (0.343, 0.352, 0.152, 0.095, 0.057)
REF_DIRECTIONS = ("benefit", "benefit", "cost", "cost", "benefit")
REF_CRITERIA = ("safety", "maturity", "cost", "data", "scalability")
REF_ALTERNATIVES = ("posture", "skill", "fatigue", "health", "ppe")
REF_SCORES = (
    (8, 8, 7, 5, 8),
    (7, 7, 6, 6, 7),
    (9, 7, 5, 7, 7),
    (8, 6, 6, 8, 6),
    (6, 9, 8, 8, 9),
)
REF_WEIGHTED = (  # 2-decimal weighted normalized matrix
    (0.16, 0.17, 0.07, 0.03, 0.03),
    (0.14, 0.15, 0.06, 0.04, 0.02),
    (0.18, 0.15, 0.05, 0.04, 0.02),
    (0.16, 0.13, 0.06, 0.05, 0.02),
    (0.12, 0.19, 0.08, 0.05, 0.03),
)
REF_POSITIVE_IDEAL = (0.18, 0.19, 0.05, 0.03, 0.03)
REF_NEGATIVE_IDEAL = (0.12, 0.13, 0.08, 0.05, 0.02)
REF_D_PLUS = (0.035, 0.059, 0.042, 0.068, 0.07)
REF_D_MINUS = (0.062, 0.036, 0.071, 0.045, 0.061)
REF_CC = (0.639, 0.379, 0.628, 0.398, 0.466)
REF_RANKS = (1, 5, 2, 4, 3)


@pytest.fixture
def ref_decision_matrix():
    from mcdm_workbench.topsis import DecisionMatrix
    return DecisionMatrix(REF_ALTERNATIVES, REF_CRITERIA, REF_DIRECTIONS,
                          tuple(tuple(float(x) for x in r) for r in REF_SCORES))


@pytest.fixture
def ref_project(tmp_path):
    """Fresh working copy of the bundled example project."""
    src = FIXTURES / "reference.mcdm.json"
    dst = tmp_path / "reference.mcdm.json"
    shutil.copy(src, dst)
    return dst
