/**
 * View model for the pairwise judgment grid.
 *
 * One cell per upper-triangle criterion pair; each cell holds a linguistic
 * selection plus a direction toggle (does the importance run first-over-
 * second, or the reciprocal). The consistency badges derive solely from the
 * last service response — the grid itself never computes a CR.
 */
import { ApiError, } from "./api.js";
export const LINGUISTIC_LABELS = [
    "Equally important",
    "Equally important to moderately more important",
    "Moderate important",
    "Moderately more important to strongly more important",
    "Strong important",
    "Strongly to very strongly more important",
    "Very strong important",
    "Very strongly to extremely more important",
    "Extremely important",
];
export const CR_THRESHOLD = 0.1;
export class JudgmentGridViewModel {
    constructor(api, projectId, expertId, criterionIds, revision) {
        this.api = api;
        this.projectId = projectId;
        this.expertId = expertId;
        this.expertBadge = { color: "none", cr: null };
        this.aggregateBadge = { color: "none", cr: null };
        this.highlightedTriads = [];
        /** deliberate expert override of the consistency gate, recorded upstream */
        this.overridden = false;
        this.revision = revision;
        this.cells = [];
        for (let i = 0; i < criterionIds.length; i++) {
            for (let j = i + 1; j < criterionIds.length; j++) {
                this.cells.push({
                    a: criterionIds[i],
                    b: criterionIds[j],
                    label: null,
                    reciprocal: false,
                    error: null,
                });
            }
        }
    }
    setCell(a, b, label, reciprocal) {
        const cell = this.cells.find((c) => c.a === a && c.b === b);
        if (!cell) {
            throw new Error(`no cell for pair ${a}/${b}`);
        }
        cell.label = label;
        cell.reciprocal = reciprocal;
        cell.error = null;
    }
    /** Grid is submittable only when every upper-triangle cell is filled. */
    get complete() {
        return this.cells.every((c) => c.label !== null);
    }
    /** Ranking stays blocked while the aggregate CR is at/over the threshold,
     * unless the panel explicitly overrides. */
    get rankingBlocked() {
        if (this.overridden) {
            return false;
        }
        return (this.aggregateBadge.cr === null ||
            this.aggregateBadge.cr >= CR_THRESHOLD);
    }
    async submit() {
        if (!this.complete) {
            throw new Error("grid incomplete: fill every pairwise cell first");
        }
        const judgments = this.cells.map((c) => ({
            a: c.a,
            b: c.b,
            label: c.label,
            reciprocal: c.reciprocal,
        }));
        let res;
        try {
            res = await this.api.postJudgments(this.projectId, this.expertId, this.revision, judgments);
        }
        catch (err) {
            if (err instanceof ApiError && err.status === 409) {
                // another expert wrote first: reload the revision and replay our
                // local (unsubmitted) edits by retrying with the fresh token
                const snap = await this.api.getProject(this.projectId);
                this.revision = snap.revision;
                res = await this.api.postJudgments(this.projectId, this.expertId, this.revision, judgments);
            }
            else {
                if (err instanceof ApiError && err.body.location) {
                    this.attachCellError(err.body.location, err.body.message);
                }
                throw err;
            }
        }
        this.revision = res.revision;
        this.applyConsistency(res);
        return res;
    }
    applyConsistency(res) {
        const own = res.expert_crs[this.expertId];
        this.expertBadge = {
            cr: own ?? null,
            color: own === undefined ? "none" : own < CR_THRESHOLD ? "green" : "red",
        };
        this.aggregateBadge = {
            cr: res.aggregate_cr,
            color: res.aggregate_cr < CR_THRESHOLD ? "green" : "red",
        };
        this.highlightedTriads = res.inconsistent_triads ?? [];
    }
    attachCellError(location, message) {
        for (const cell of this.cells) {
            if (location.includes(cell.a) && location.includes(cell.b)) {
                cell.error = message;
                return;
            }
        }
    }
    /** A triad highlight touches a cell when both its criteria are members. */
    cellHighlighted(a, b) {
        return this.highlightedTriads.some((t) => t.criteria.includes(a) && t.criteria.includes(b));
    }
}
