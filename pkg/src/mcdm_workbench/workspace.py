"""Project data model, JSON persistence, CSV import, and computation cache.

A project is a single JSON file (`.mcdm.json`) holding the expert panel,
screening votes, criteria, alternatives, per-expert judgments and scores,
plus cached computed artifacts stamped with a content hash of their inputs
for staleness detection.
"""

from __future__ import annotations

import csv
import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path

from .errors import InputError, StaleComputationError, ValidationError
from .fahp import CriterionWeightVector, FahpOutcome, build_matrix, fahp_pipeline
from .fuzzy import LINGUISTIC_SCALE
from .screening import LikertAssessment, screen_items
from .sensitivity import (
    RoadmapTiers,
    StabilityReport,
    monte_carlo_weights,
    oat_weight_perturbation,
    roadmap_tiers,
)
from .topsis import DecisionMatrix, RankingResult, topsis_pipeline

SCHEMA_VERSION = "1.0.0"
PROJECT_SUFFIX = ".mcdm.json"


def content_hash(obj) -> str:
    """Stable hash of canonicalized (sorted-key, compact) JSON."""
    blob = json.dumps(obj, sort_keys=True, separators=(",", ":")).encode("utf-8")
    return hashlib.sha256(blob).hexdigest()


@dataclass
class Expert:
    id: str
    name: str = ""
    role: str = "practitioner"  # academic | practitioner

    def to_json(self):
        return {"id": self.id, "name": self.name, "role": self.role}


@dataclass
class Criterion:
    id: str
    name: str = ""
    direction: str = "benefit"

    def to_json(self):
        return {"id": self.id, "name": self.name, "direction": self.direction}


@dataclass
class Alternative:
    id: str
    name: str = ""

    def to_json(self):
        return {"id": self.id, "name": self.name}


@dataclass
class Judgment:
    """One expert's linguistic comparison of criterion a vs criterion b."""

    a: str
    b: str
    label: str
    reciprocal: bool = False

    def to_json(self):
        return {"a": self.a, "b": self.b, "label": self.label, "reciprocal": self.reciprocal}


@dataclass
class Project:
    name: str
    created: str = "1970-01-01T00:00:00Z"
    modified: str = "1970-01-01T00:00:00Z"
    schema_version: str = SCHEMA_VERSION
    revision: int = 0
    experts: list = field(default_factory=list)
    criteria: list = field(default_factory=list)
    alternatives: list = field(default_factory=list)
    screening: list = field(default_factory=list)       # LikertAssessment
    judgments: dict = field(default_factory=dict)       # expert_id -> [Judgment]
    scores: dict = field(default_factory=dict)          # expert_id -> {alt_id: {crit_id: float}}
    cr_overridden: bool = False
    cache: dict = field(default_factory=dict)           # kind -> {"input_hash", "value"}

    # -- mutation --------------------------------------------------------

    def touch(self):
        self.revision += 1
        self.cache = {}

    def add_expert(self, expert: Expert):
        if any(e.id == expert.id for e in self.experts):
            raise ValidationError(f"duplicate expert id {expert.id!r}", "experts")
        self.experts.append(expert)
        self.touch()

    def add_criterion(self, criterion: Criterion):
        if any(c.id == criterion.id for c in self.criteria):
            raise ValidationError(f"duplicate criterion id {criterion.id!r}", "criteria")
        if criterion.direction not in ("benefit", "cost"):
            raise ValidationError(f"bad direction {criterion.direction!r}", "criteria")
        self.criteria.append(criterion)
        self.touch()

    def add_alternative(self, alternative: Alternative):
        if any(a.id == alternative.id for a in self.alternatives):
            raise ValidationError(f"duplicate alternative id {alternative.id!r}", "alternatives")
        self.alternatives.append(alternative)
        self.touch()

    def set_judgments(self, expert_id: str, judgments: list):
        crit_ids = {c.id for c in self.criteria}
        for j in judgments:
            if j.a not in crit_ids or j.b not in crit_ids:
                raise ValidationError(
                    f"judgment references unknown criterion ({j.a!r}, {j.b!r})",
                    f"judgments.{expert_id}")
            if j.label not in LINGUISTIC_SCALE:
                raise ValidationError(f"unknown label {j.label!r}", f"judgments.{expert_id}")
        self.judgments[expert_id] = list(judgments)
        self.touch()

    def set_scores(self, expert_id: str, scores: dict):
        alt_ids = {a.id for a in self.alternatives}
        crit_ids = {c.id for c in self.criteria}
        for alt, row in scores.items():
            if alt not in alt_ids:
                raise ValidationError(f"unknown alternative {alt!r}", f"scores.{expert_id}")
            for crit, x in row.items():
                if crit not in crit_ids:
                    raise ValidationError(f"unknown criterion {crit!r}", f"scores.{expert_id}")
                if float(x) < 0:
                    raise ValidationError(
                        f"negative score {x} for ({alt}, {crit})", f"scores.{expert_id}")
        self.scores[expert_id] = {a: dict(r) for a, r in scores.items()}
        self.touch()

    # -- derived inputs --------------------------------------------------

    def criterion_ids(self):
        return tuple(c.id for c in self.criteria)

    def directions(self):
        return tuple(c.direction for c in self.criteria)

    def expert_matrices(self):
        """Build one fuzzy pairwise matrix per expert with recorded judgments."""
        ids = self.criterion_ids()
        index = {c: i for i, c in enumerate(ids)}
        mats = []
        for expert_id in sorted(self.judgments):
            triples = [(index[j.a], index[j.b], j.label, j.reciprocal)
                       for j in self.judgments[expert_id]]
            mats.append(build_matrix(ids, triples))
        return mats

    def decision_matrix(self) -> DecisionMatrix:
        """Mean-aggregate per-expert score matrices into one decision matrix."""
        if not self.scores:
            raise InputError("no decision scores recorded")
        alt_ids = tuple(a.id for a in self.alternatives)
        crit_ids = self.criterion_ids()
        grid = []
        for alt in alt_ids:
            row = []
            for crit in crit_ids:
                vals = []
                for expert_id, table in self.scores.items():
                    if alt in table and crit in table[alt]:
                        vals.append(float(table[alt][crit]))
                if not vals:
                    raise InputError(f"no score recorded for ({alt}, {crit})")
                row.append(sum(vals) / len(vals))
            grid.append(tuple(row))
        return DecisionMatrix(alt_ids, crit_ids, self.directions(), tuple(grid))

    # -- computation + cache --------------------------------------------

    def _weights_inputs(self):
        return {
            "criteria": [c.to_json() for c in self.criteria],
            "judgments": {e: [j.to_json() for j in js] for e, js in self.judgments.items()},
        }

    def _ranking_inputs(self, rounding):
        return {
            "weights": self._weights_inputs(),
            "alternatives": [a.to_json() for a in self.alternatives],
            "scores": self.scores,
            "rounding": rounding,
        }

    def compute_weights(self, cr_threshold: float = 0.1) -> FahpOutcome:
        if not self.judgments:
            raise InputError("no pairwise judgments recorded")
        outcome = fahp_pipeline(self.expert_matrices(), self.directions(), cr_threshold)
        if outcome.accepted:
            self.cache["weights"] = {
                "input_hash": content_hash(self._weights_inputs()),
                "value": outcome.weights.to_json(),
            }
        return outcome

    def fresh_weights(self) -> CriterionWeightVector:
        entry = self.cache.get("weights")
        if not entry or entry["input_hash"] != content_hash(self._weights_inputs()):
            raise StaleComputationError("weights missing or stale; rerun the weighting step")
        return CriterionWeightVector.from_json(entry["value"])

    def compute_ranking(self, rounding: int | None = None) -> RankingResult:
        weights = self.fresh_weights()
        ranking = topsis_pipeline(self.decision_matrix(), weights, rounding)
        self.cache["ranking"] = {
            "input_hash": content_hash(self._ranking_inputs(rounding)),
            "value": ranking.to_json(),
            "rounding": rounding,
        }
        return ranking

    def fresh_ranking(self) -> RankingResult:
        entry = self.cache.get("ranking")
        if not entry or entry["input_hash"] != content_hash(
                self._ranking_inputs(entry.get("rounding"))):
            raise StaleComputationError("ranking missing or stale; rerun the ranking step")
        return RankingResult.from_json(entry["value"])

    def compute_sensitivity(self, deltas=None, mc_samples: int = 0,
                            seed: int = 0) -> dict:
        weights = self.fresh_weights()
        d = self.decision_matrix()
        out = {}
        if deltas:
            out["oat"] = oat_weight_perturbation(d, weights, deltas)
        if mc_samples:
            out["monte_carlo"] = monte_carlo_weights(d, mc_samples, seed, weights)
        self.cache["stability"] = {
            "input_hash": content_hash(self._ranking_inputs(None)),
            "value": {k: v.to_json() for k, v in out.items()},
        }
        return out

    def compute_tiers(self, band_sizes=(1, 2, 2)) -> RoadmapTiers:
        tiers = roadmap_tiers(self.fresh_ranking(), band_sizes)
        self.cache["tiers"] = {
            "input_hash": content_hash(self._ranking_inputs(None)),
            "value": tiers.to_json(),
        }
        return tiers

    def run_screening(self, mean_threshold=3.5, dispersion_threshold=1.0):
        return screen_items(self.screening, mean_threshold, dispersion_threshold)

    # -- serialization ---------------------------------------------------

    def to_json(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "metadata": {"name": self.name, "created": self.created, "modified": self.modified},
            "revision": self.revision,
            "experts": [e.to_json() for e in self.experts],
            "criteria": [c.to_json() for c in self.criteria],
            "alternatives": [a.to_json() for a in self.alternatives],
            "screening": [
                {"item_id": s.item_id, "kind": s.item_kind, "scores": list(s.scores)}
                for s in self.screening
            ],
            "judgments": {e: [j.to_json() for j in js] for e, js in self.judgments.items()},
            "scores": self.scores,
            "cr_overridden": self.cr_overridden,
            "cache": self.cache,
        }

    @classmethod
    def from_json(cls, data: dict) -> "Project":
        version = data.get("schema_version")
        if not isinstance(version, str):
            raise ValidationError("missing schema_version", "schema_version")
        if version.split(".")[0] != SCHEMA_VERSION.split(".")[0]:
            raise ValidationError(
                f"schema version {version} needs migration (supported: {SCHEMA_VERSION})",
                "schema_version")
        meta = data.get("metadata", {})
        p = cls(
            name=meta.get("name", "unnamed"),
            created=meta.get("created", "1970-01-01T00:00:00Z"),
            modified=meta.get("modified", "1970-01-01T00:00:00Z"),
            schema_version=version,
        )
        for i, e in enumerate(data.get("experts", [])):
            if any(x.id == e["id"] for x in p.experts):
                raise ValidationError(f"duplicate expert id {e['id']!r}", f"experts[{i}].id")
            p.experts.append(Expert(e["id"], e.get("name", ""), e.get("role", "practitioner")))
        for i, c in enumerate(data.get("criteria", [])):
            if any(x.id == c["id"] for x in p.criteria):
                raise ValidationError(f"duplicate criterion id {c['id']!r}", f"criteria[{i}].id")
            if c.get("direction", "benefit") not in ("benefit", "cost"):
                raise ValidationError(
                    f"bad direction {c.get('direction')!r}", f"criteria[{i}].direction")
            p.criteria.append(Criterion(c["id"], c.get("name", ""), c.get("direction", "benefit")))
        for i, a in enumerate(data.get("alternatives", [])):
            if any(x.id == a["id"] for x in p.alternatives):
                raise ValidationError(f"duplicate alternative id {a['id']!r}",
                                      f"alternatives[{i}].id")
            p.alternatives.append(Alternative(a["id"], a.get("name", "")))
        for i, s in enumerate(data.get("screening", [])):
            try:
                p.screening.append(LikertAssessment(
                    s["item_id"], s["kind"], tuple(int(x) for x in s["scores"])))
            except InputError as exc:
                raise ValidationError(str(exc), f"screening[{i}]") from exc
        crit_ids = {c.id for c in p.criteria}
        for expert_id, js in data.get("judgments", {}).items():
            parsed = []
            for i, j in enumerate(js):
                if j["a"] not in crit_ids or j["b"] not in crit_ids:
                    raise ValidationError(
                        f"judgment references unknown criterion ({j['a']!r}, {j['b']!r})",
                        f"judgments.{expert_id}[{i}]")
                if j["label"] not in LINGUISTIC_SCALE:
                    raise ValidationError(f"unknown label {j['label']!r}",
                                          f"judgments.{expert_id}[{i}].label")
                parsed.append(Judgment(j["a"], j["b"], j["label"], bool(j.get("reciprocal"))))
            p.judgments[expert_id] = parsed
        alt_ids = {a.id for a in p.alternatives}
        for expert_id, table in data.get("scores", {}).items():
            for alt, row in table.items():
                if alt not in alt_ids:
                    raise ValidationError(f"unknown alternative {alt!r}",
                                          f"scores.{expert_id}.{alt}")
                for crit, x in row.items():
                    if crit not in crit_ids:
                        raise ValidationError(f"unknown criterion {crit!r}",
                                              f"scores.{expert_id}.{alt}.{crit}")
                    if float(x) < 0:
                        raise ValidationError(f"negative score {x}",
                                              f"scores.{expert_id}.{alt}.{crit}")
            p.scores[expert_id] = {a: dict(r) for a, r in table.items()}
        p.revision = int(data.get("revision", 0))
        p.cr_overridden = bool(data.get("cr_overridden", False))
        p.cache = data.get("cache", {})
        return p


def save_project(p: Project, path) -> None:
    path = Path(path)
    path.write_text(json.dumps(p.to_json(), indent=2, sort_keys=True) + "\n", encoding="utf-8")


def load_project(path) -> Project:
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ValidationError(f"not valid JSON: {exc}", "$") from exc
    return Project.from_json(data)


# -- CSV import ----------------------------------------------------------

def import_decision_csv(path, p: Project, expert_id: str = "panel") -> Project:
    """Merge a decision-score CSV into the project.

    Layout: header `alternative,<crit_id>+,<crit_id>-,...` with `+`/`-`
    direction suffixes; body rows `name,score,...`. Unknown criteria are
    added; alternatives are added as encountered.
    """
    rows = _read_csv(path)
    header = rows[0]
    if len(header) < 2 or header[0].strip().lower() != "alternative":
        raise InputError("decision CSV must start with an 'alternative' header column")
    crits = []
    for cell in header[1:]:
        cell = cell.strip()
        if cell.endswith("+"):
            crits.append((cell[:-1], "benefit"))
        elif cell.endswith("-"):
            crits.append((cell[:-1], "cost"))
        else:
            raise InputError(f"criterion header {cell!r} needs a '+' or '-' direction suffix")
    known = {c.id: c for c in p.criteria}
    for cid, direction in crits:
        if cid in known:
            if known[cid].direction != direction:
                raise ValidationError(
                    f"criterion {cid!r} direction conflicts with project", "criteria")
        else:
            p.criteria.append(Criterion(cid, cid, direction))
    known_alts = {a.id for a in p.alternatives}
    table = p.scores.get(expert_id, {})
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != len(crits) + 1:
            raise InputError(f"line {lineno}: expected {len(crits) + 1} cells, got {len(row)}")
        alt = row[0].strip()
        if not alt:
            raise InputError(f"line {lineno}: empty alternative name")
        if alt not in known_alts:
            p.alternatives.append(Alternative(alt, alt))
            known_alts.add(alt)
        scores = {}
        for (cid, _), cell in zip(crits, row[1:]):
            try:
                x = float(cell)
            except ValueError:
                raise InputError(f"line {lineno}: non-numeric score {cell!r}") from None
            if x < 0:
                raise ValidationError(f"line {lineno}: negative score {x}", "scores")
            scores[cid] = x
        table[alt] = scores
    p.scores[expert_id] = table
    p.touch()
    return p


def import_likert_csv(path, p: Project) -> Project:
    """Merge screening votes. Layout: header `item,kind,<expert_id>,...`."""
    rows = _read_csv(path)
    header = [c.strip() for c in rows[0]]
    if header[:2] != ["item", "kind"] or len(header) < 3:
        raise InputError("likert CSV header must be 'item,kind,<expert_id>,...'")
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != len(header):
            raise InputError(f"line {lineno}: expected {len(header)} cells, got {len(row)}")
        try:
            scores = tuple(int(c) for c in row[2:])
        except ValueError:
            raise InputError(f"line {lineno}: non-integer Likert score") from None
        try:
            p.screening.append(LikertAssessment(row[0].strip(), row[1].strip(), scores))
        except InputError as exc:
            raise InputError(f"line {lineno}: {exc}") from exc
    p.touch()
    return p


def _read_csv(path):
    with open(path, newline="", encoding="utf-8") as fh:
        rows = [r for r in csv.reader(fh) if r and any(c.strip() for c in r)]
    if len(rows) < 2:
        raise InputError(f"CSV {path} has no data rows")
    return rows
