/**
 * Typed client for the workbench HTTP service.
 *
 * The UI performs no decision arithmetic of its own: every number rendered
 * anywhere in the panel originates from one of these endpoint calls. The
 * fetch implementation is injectable so contract tests can stub the service.
 */

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export interface ServiceError {
  code: string;
  message: string;
  location?: string;
  [extra: string]: unknown;
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly body: ServiceError,
  ) {
    super(`${body.code}: ${body.message}`);
  }
}

export interface JudgmentCell {
  a: string;
  b: string;
  label: string;
  reciprocal?: boolean;
}

export interface JudgmentResponse {
  revision: number;
  expert_crs: Record<string, number>;
  aggregate_cr: number;
  inconsistent_triads?: { criteria: string[]; deviation: number }[];
}

export interface WeightsResponse {
  accepted: boolean;
  cr: number;
  expert_crs: number[];
  weights: {
    criterion_ids: string[];
    crisp_weights: number[];
    directions: string[];
    cr: number;
  };
}

export interface RankingPayload {
  alternative_ids: string[];
  d_plus: number[];
  d_minus: number[];
  cc: number[];
  rank: number[];
}

export interface WhatIfResponse {
  weights: number[];
  ranking: RankingPayload;
}

export interface TiersResponse {
  short_term: string[];
  medium_term: string[];
  long_term: string[];
  band_sizes: number[];
}

export interface ProjectSnapshot {
  id: string;
  revision: number;
  project: {
    name: string;
    criteria: { id: string; name: string; direction: string }[];
    alternatives: { id: string; name: string }[];
    experts: { id: string; name: string; role: string }[];
    [extra: string]: unknown;
  };
}

async function parse<T>(res: Response): Promise<T> {
  const body = await res.json();
  if (!res.ok) {
    throw new ApiError(res.status, body as ServiceError);
  }
  return body as T;
}

export class ApiClient {
  constructor(
    private readonly doFetch: FetchLike,
    private readonly base: string = "",
  ) {}

  private url(path: string): string {
    return `${this.base}${path}`;
  }

  private post<T>(path: string, body: unknown): Promise<T> {
    return this.doFetch(this.url(path), {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    }).then((r) => parse<T>(r));
  }

  getProject(id: string): Promise<ProjectSnapshot> {
    return this.doFetch(this.url(`/projects/${id}`)).then((r) =>
      parse<ProjectSnapshot>(r),
    );
  }

  postJudgments(
    id: string,
    expert: string,
    revision: number,
    judgments: JudgmentCell[],
  ): Promise<JudgmentResponse> {
    return this.post(`/projects/${id}/judgments`, {
      expert,
      revision,
      judgments,
    });
  }

  getWeights(id: string): Promise<WeightsResponse> {
    return this.doFetch(this.url(`/projects/${id}/weights`)).then((r) =>
      parse<WeightsResponse>(r),
    );
  }

  getRanking(id: string, round?: number): Promise<RankingPayload> {
    const q = round === undefined ? "" : `?round=${round}`;
    return this.doFetch(this.url(`/projects/${id}/ranking${q}`)).then((r) =>
      parse<RankingPayload>(r),
    );
  }

  postWhatIf(id: string, weights: number[]): Promise<WhatIfResponse> {
    return this.post(`/projects/${id}/whatif`, { weights });
  }

  getTiers(id: string, bands?: number[]): Promise<TiersResponse> {
    const q = bands && bands.length ? `?bands=${bands.join(",")}` : "";
    return this.doFetch(this.url(`/projects/${id}/tiers${q}`)).then((r) =>
      parse<TiersResponse>(r),
    );
  }
}

/** Display formatting used across the panel: 3 decimals, full value in the
 * tooltip. */
export function displayNumber(x: number): { text: string; title: string } {
  return { text: x.toFixed(3), title: String(x) };
}
