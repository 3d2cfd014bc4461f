/**
 * View model for the adoption-roadmap tiers: three horizon columns fed by
 * the service's tiers endpoint, with a band-size editor that re-requests.
 */

import { ApiClient, ApiError, TiersResponse } from "./api.js";

export class RoadmapViewModel {
  tiers: TiersResponse | null = null;
  /** prompt shown when the requested bands split a closeness tie */
  bandError: string | null = null;
  bands: number[] = [];

  constructor(
    private readonly api: ApiClient,
    private readonly projectId: string,
  ) {}

  async load(bands?: number[]): Promise<void> {
    try {
      this.tiers = await this.api.getTiers(this.projectId, bands);
      this.bands = this.tiers.band_sizes;
      this.bandError = null;
    } catch (err) {
      if (err instanceof ApiError && err.status === 400) {
        this.bandError = `${err.body.message} — adjust the band sizes`;
        return;
      }
      throw err;
    }
  }

  columns(): { horizon: string; alternatives: string[] }[] {
    if (!this.tiers) {
      return [];
    }
    return [
      { horizon: "Short term", alternatives: this.tiers.short_term },
      { horizon: "Medium term", alternatives: this.tiers.medium_term },
      { horizon: "Long term", alternatives: this.tiers.long_term },
    ];
  }
}
