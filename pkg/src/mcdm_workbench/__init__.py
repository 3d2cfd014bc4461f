"""Fuzzy AHP + TOPSIS decision-support engine and expert-panel workbench."""

from .errors import (
    DomainError,
    InputError,
    McdmError,
    NumericError,
    StaleComputationError,
    ValidationError,
)
from .fahp import (
    CriterionWeightVector,
    FahpOutcome,
    FuzzyPairwiseMatrix,
    aggregate_expert_matrices,
    build_matrix,
    consistency_ratio,
    crisp_normalized_weights,
    fahp_pipeline,
    fuzzy_geometric_means,
    fuzzy_weights,
    inconsistent_triads,
)
from .fuzzy import (
    LINGUISTIC_LABELS,
    LINGUISTIC_SCALE,
    Tfn,
    defuzzify_centroid,
    linguistic_to_tfn,
    tfn_add,
    tfn_invert,
    tfn_mul,
    tfn_nth_root,
)
from .screening import LikertAssessment, ScreeningDecision, screen_items
from .sensitivity import (
    RoadmapTiers,
    SplitMix64,
    StabilityReport,
    monte_carlo_weights,
    oat_weight_perturbation,
    roadmap_tiers,
)
from .topsis import (
    DecisionMatrix,
    IdealSolutions,
    RankingResult,
    closeness_and_rank,
    ideal_solutions,
    normalize_matrix,
    separation_distances,
    topsis_pipeline,
    weight_matrix,
)
from .workspace import (
    Alternative,
    Criterion,
    Expert,
    Judgment,
    Project,
    import_decision_csv,
    import_likert_csv,
    load_project,
    save_project,
)

__version__ = "0.1.0"
