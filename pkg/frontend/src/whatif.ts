/**
 * View model for the what-if weight sliders.
 *
 * Invariant: the displayed weights sum to 1 after every interaction —
 * moving one slider redistributes the difference proportionally across the
 * unlocked sliders. Rankings shown in the panel are always service-sourced
 * (debounced `POST whatif`); nothing here persists on the server.
 */

import { ApiClient, RankingPayload } from "./api.js";

export interface SliderState {
  criterionId: string;
  weight: number;
  locked: boolean;
}

export class WhatIfViewModel {
  readonly sliders: SliderState[];
  /** weights the FAHP pipeline committed; reset target */
  private readonly committed: number[];
  ranking: RankingPayload | null = null;
  /** true while the service is unreachable; sliders render disabled */
  stale = false;
  private debounceTimer: ReturnType<typeof setTimeout> | null = null;

  constructor(
    private readonly api: ApiClient,
    private readonly projectId: string,
    criterionIds: string[],
    committedWeights: number[],
    private readonly debounceMs = 150,
  ) {
    const total = committedWeights.reduce((a, b) => a + b, 0);
    this.committed = committedWeights.map((w) => w / total);
    this.sliders = criterionIds.map((id, i) => ({
      criterionId: id,
      weight: this.committed[i],
      locked: false,
    }));
  }

  weights(): number[] {
    return this.sliders.map((s) => s.weight);
  }

  toggleLock(criterionId: string): void {
    const s = this.mustFind(criterionId);
    s.locked = !s.locked;
  }

  /**
   * Set one slider; the weight delta is absorbed proportionally by the
   * other unlocked sliders so the total stays exactly 1.
   */
  setWeight(criterionId: string, value: number): void {
    const target = this.mustFind(criterionId);
    if (target.locked) {
      return;
    }
    const others = this.sliders.filter(
      (s) => s !== target && !s.locked,
    );
    const lockedSum = this.sliders
      .filter((s) => s.locked)
      .reduce((a, s) => a + s.weight, 0);
    const available = 1 - lockedSum;
    const clamped = Math.min(Math.max(value, 0), available);
    const remainder = available - clamped;
    const othersSum = others.reduce((a, s) => a + s.weight, 0);
    for (const s of others) {
      s.weight =
        othersSum > 0
          ? (s.weight / othersSum) * remainder
          : remainder / others.length;
    }
    target.weight = clamped;
    // absorb any floating-point residue into the largest unlocked slider so
    // the invariant holds exactly without disturbing locked sliders or
    // pushing a zeroed slider negative
    const total = this.sliders.reduce((a, s) => a + s.weight, 0);
    const unlocked = this.sliders.filter((s) => !s.locked);
    const sink = unlocked.reduce((a, s) => (s.weight > a.weight ? s : a));
    sink.weight += 1 - total;
    this.scheduleRefresh();
  }

  /** Max absolute deviation from the committed FAHP weights. */
  get divergence(): number {
    return Math.max(
      ...this.sliders.map((s, i) => Math.abs(s.weight - this.committed[i])),
    );
  }

  /** Restore the committed weights and re-request the committed view. */
  reset(): void {
    this.sliders.forEach((s, i) => {
      s.weight = this.committed[i];
      s.locked = false;
    });
    this.scheduleRefresh();
  }

  /** Debounced service round trip; exposed for tests to flush directly. */
  async refresh(): Promise<void> {
    try {
      const res = await this.api.postWhatIf(this.projectId, this.weights());
      this.ranking = res.ranking;
      this.stale = false;
    } catch (err) {
      if (err instanceof TypeError) {
        // network failure: keep the last ranking, flag it stale
        this.stale = true;
        return;
      }
      throw err;
    }
  }

  private scheduleRefresh(): void {
    if (this.debounceTimer !== null) {
      clearTimeout(this.debounceTimer);
    }
    this.debounceTimer = setTimeout(() => {
      this.debounceTimer = null;
      void this.refresh();
    }, this.debounceMs);
  }

  private mustFind(criterionId: string): SliderState {
    const s = this.sliders.find((x) => x.criterionId === criterionId);
    if (!s) {
      throw new Error(`unknown criterion ${criterionId}`);
    }
    return s;
  }
}
