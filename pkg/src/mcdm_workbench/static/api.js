/**
 * Typed client for the workbench HTTP service.
 *
 * The UI performs no decision arithmetic of its own: every number rendered
 * anywhere in the panel originates from one of these endpoint calls. The
 * fetch implementation is injectable so contract tests can stub the service.
 */
export class ApiError extends Error {
    constructor(status, body) {
        super(`${body.code}: ${body.message}`);
        this.status = status;
        this.body = body;
    }
}
async function parse(res) {
    const body = await res.json();
    if (!res.ok) {
        throw new ApiError(res.status, body);
    }
    return body;
}
export class ApiClient {
    constructor(doFetch, base = "") {
        this.doFetch = doFetch;
        this.base = base;
    }
    url(path) {
        return `${this.base}${path}`;
    }
    post(path, body) {
        return this.doFetch(this.url(path), {
            method: "POST",
            headers: { "content-type": "application/json" },
            body: JSON.stringify(body),
        }).then((r) => parse(r));
    }
    getProject(id) {
        return this.doFetch(this.url(`/projects/${id}`)).then((r) => parse(r));
    }
    postJudgments(id, expert, revision, judgments) {
        return this.post(`/projects/${id}/judgments`, {
            expert,
            revision,
            judgments,
        });
    }
    getWeights(id) {
        return this.doFetch(this.url(`/projects/${id}/weights`)).then((r) => parse(r));
    }
    getRanking(id, round) {
        const q = round === undefined ? "" : `?round=${round}`;
        return this.doFetch(this.url(`/projects/${id}/ranking${q}`)).then((r) => parse(r));
    }
    postWhatIf(id, weights) {
        return this.post(`/projects/${id}/whatif`, { weights });
    }
    getTiers(id, bands) {
        const q = bands && bands.length ? `?bands=${bands.join(",")}` : "";
        return this.doFetch(this.url(`/projects/${id}/tiers${q}`)).then((r) => parse(r));
    }
}
/** Display formatting used across the panel: 3 decimals, full value in the
 * tooltip. */
export function displayNumber(x) {
    return { text: x.toFixed(3), title: String(x) };
}
