import { beforeEach, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { WhatIfViewModel } from "../src/whatif.js";
import {
  COMMITTED_CC,
  COMMITTED_WEIGHTS,
  CRITERIA,
  EQUAL_WEIGHT_CC,
  StubService,
} from "./stubService.js";

function vm(stub: StubService): WhatIfViewModel {
  return new WhatIfViewModel(
    new ApiClient(stub.fetch),
    "reference",
    CRITERIA,
    COMMITTED_WEIGHTS,
    0, // no debounce in tests; refresh() is flushed explicitly
  );
}

const sum = (xs: number[]) => xs.reduce((a, b) => a + b, 0);

describe("what-if sliders", () => {
  let stub: StubService;

  beforeEach(() => {
    stub = new StubService();
  });

  it("starts at the committed weights, normalized to sum 1", () => {
    const w = vm(stub).weights();
    expect(sum(w)).toBeCloseTo(1, 12);
    w.forEach((x, i) =>
      expect(x).toBeCloseTo(COMMITTED_WEIGHTS[i] / sum(COMMITTED_WEIGHTS), 12),
    );
  });

  it("shows the committed closeness values at the committed weights", async () => {
    const v = vm(stub);
    await v.refresh();
    expect(v.ranking?.cc).toEqual(COMMITTED_CC);
  });

  it("equalized sliders show the engine's equal-weight ranking", async () => {
    const v = vm(stub);
    // lock each slider as it reaches 0.2 so later moves cannot disturb it
    for (const id of CRITERIA.slice(0, -1)) {
      v.setWeight(id, 0.2);
      v.toggleLock(id);
    }
    v.weights().forEach((x) => expect(x).toBeCloseTo(0.2, 9));
    CRITERIA.slice(0, -1).forEach((id) => v.toggleLock(id));
    await v.refresh();
    expect(v.ranking?.cc).toEqual(EQUAL_WEIGHT_CC);
  });

  it("keeps the sum at exactly 1 after every interaction", () => {
    const v = vm(stub);
    const moves: [string, number][] = [
      ["safety", 0.6],
      ["cost", 0.01],
      ["scalability", 0.3],
      ["maturity", 0.0],
      ["data", 0.99],
    ];
    for (const [id, value] of moves) {
      v.setWeight(id, value);
      expect(sum(v.weights())).toBeCloseTo(1, 12);
      v.weights().forEach((x) => expect(x).toBeGreaterThanOrEqual(0));
    }
  });

  it("redistributes proportionally across unlocked sliders", () => {
    const v = vm(stub);
    const before = v.weights();
    const ratioBefore = before[1] / before[2]; // maturity vs cost
    v.setWeight("safety", 0.5);
    const after = v.weights();
    expect(after[0]).toBeCloseTo(0.5, 12);
    expect(after[1] / after[2]).toBeCloseTo(ratioBefore, 9);
  });

  it("locked sliders keep their value and clamp the others", () => {
    const v = vm(stub);
    const locked = v.weights()[2];
    v.toggleLock("cost");
    v.setWeight("safety", 0.9); // asks for more than 1 - locked
    const w = v.weights();
    expect(w[2]).toBeCloseTo(locked, 12);
    expect(w[0]).toBeLessThanOrEqual(1 - locked + 1e-12);
    expect(sum(w)).toBeCloseTo(1, 12);
  });

  it("ignores direct moves of a locked slider", () => {
    const v = vm(stub);
    v.toggleLock("data");
    const before = v.weights();
    v.setWeight("data", 0.8);
    expect(v.weights()).toEqual(before);
  });

  it("reset restores the committed view exactly", async () => {
    const v = vm(stub);
    await v.refresh();
    const committedView = v.ranking;
    v.setWeight("safety", 0.7);
    v.toggleLock("cost");
    v.reset();
    expect(sum(v.weights())).toBeCloseTo(1, 12);
    v.weights().forEach((x, i) =>
      expect(x).toBeCloseTo(COMMITTED_WEIGHTS[i] / sum(COMMITTED_WEIGHTS), 12),
    );
    expect(v.sliders.every((s) => !s.locked)).toBe(true);
    await v.refresh();
    expect(v.ranking).toEqual(committedView);
  });

  it("never persists anything on the server", async () => {
    const v = vm(stub);
    v.setWeight("safety", 0.7);
    await v.refresh();
    const revBefore = stub.revision;
    expect(
      stub.requests.every((r) => r.method === "GET" || r.url.endsWith("/whatif")),
    ).toBe(true);
    expect(stub.revision).toBe(revBefore);
  });

  it("tracks divergence from the committed weights", () => {
    const v = vm(stub);
    expect(v.divergence).toBeCloseTo(0, 12);
    v.setWeight("safety", 0.6);
    expect(v.divergence).toBeGreaterThan(0.2);
    v.reset();
    expect(v.divergence).toBeCloseTo(0, 12);
  });

  it("flags the view stale when the service is unreachable", async () => {
    const v = vm(stub);
    await v.refresh();
    stub.offline = true;
    v.setWeight("safety", 0.5);
    await v.refresh();
    expect(v.stale).toBe(true);
    expect(v.ranking?.cc).toEqual(COMMITTED_CC); // last good data retained
    stub.offline = false;
    await v.refresh();
    expect(v.stale).toBe(false);
  });
});
