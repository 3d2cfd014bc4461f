import { beforeEach, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import {
  CR_THRESHOLD,
  JudgmentGridViewModel,
  LINGUISTIC_LABELS,
} from "../src/judgmentGrid.js";
import { CRITERIA, StubService } from "./stubService.js";

function grid(stub: StubService): JudgmentGridViewModel {
  const api = new ApiClient(stub.fetch);
  return new JudgmentGridViewModel(api, "reference", "e1", CRITERIA, stub.revision);
}

function fillAll(g: JudgmentGridViewModel, label = "Equally important"): void {
  for (const cell of g.cells) {
    g.setCell(cell.a, cell.b, label, false);
  }
}

describe("judgment grid", () => {
  let stub: StubService;

  beforeEach(() => {
    stub = new StubService();
  });

  it("has one cell per upper-triangle pair", () => {
    const g = grid(stub);
    expect(g.cells).toHaveLength((CRITERIA.length * (CRITERIA.length - 1)) / 2);
  });

  it("offers the full linguistic scale", () => {
    expect(LINGUISTIC_LABELS).toHaveLength(9);
    expect(LINGUISTIC_LABELS).toContain("Equally important");
    expect(LINGUISTIC_LABELS).toContain("Extremely important");
  });

  it("is submittable only when every cell is filled", async () => {
    const g = grid(stub);
    expect(g.complete).toBe(false);
    await expect(g.submit()).rejects.toThrow(/incomplete/);
    fillAll(g);
    expect(g.complete).toBe(true);
  });

  it("renders a green badge for an all-equal session (CR 0)", async () => {
    stub.nextAggregateCr = 0.0;
    stub.nextExpertCrs = { e1: 0.0 };
    const g = grid(stub);
    fillAll(g);
    await g.submit();
    expect(g.expertBadge).toEqual({ color: "green", cr: 0.0 });
    expect(g.aggregateBadge.color).toBe("green");
  });

  it("unlocks ranking at CR 0.08 (below threshold)", async () => {
    stub.nextAggregateCr = 0.08;
    stub.nextExpertCrs = { e1: 0.08 };
    const g = grid(stub);
    fillAll(g, "Moderate important");
    await g.submit();
    expect(g.aggregateBadge.color).toBe("green");
    expect(g.rankingBlocked).toBe(false);
  });

  it("blocks ranking and highlights triads at CR 0.3", async () => {
    stub.nextAggregateCr = 0.3;
    stub.nextExpertCrs = { e1: 0.3 };
    stub.nextTriads = [
      { criteria: ["safety", "maturity", "cost"], deviation: 2.1 },
    ];
    const g = grid(stub);
    fillAll(g, "Extremely important");
    await g.submit();
    expect(g.expertBadge.color).toBe("red");
    expect(g.rankingBlocked).toBe(true);
    expect(g.cellHighlighted("safety", "maturity")).toBe(true);
    expect(g.cellHighlighted("data", "scalability")).toBe(false);
  });

  it("an explicit override unblocks a red session", async () => {
    stub.nextAggregateCr = 0.3;
    const g = grid(stub);
    fillAll(g);
    await g.submit();
    expect(g.rankingBlocked).toBe(true);
    g.overridden = true;
    expect(g.rankingBlocked).toBe(false);
  });

  it("ranking stays blocked before any submission", () => {
    const g = grid(stub);
    expect(g.rankingBlocked).toBe(true);
  });

  it("reloads and replays on a stale-revision conflict", async () => {
    stub.failNextWithStale = true;
    const g = grid(stub);
    fillAll(g);
    const res = await g.submit();
    expect(res.revision).toBe(stub.revision);
    const posts = stub.requests.filter((r) => r.method === "POST");
    expect(posts).toHaveLength(2); // 409'd attempt + replay
    const reloads = stub.requests.filter(
      (r) => r.method === "GET" && /\/projects\/\w+$/.test(r.url),
    );
    expect(reloads).toHaveLength(1);
  });

  it("derives badge state only from service responses", async () => {
    // identical grid content, different scripted responses: the badge follows
    // the response, proving no client-side CR arithmetic
    stub.nextAggregateCr = 0.05;
    const a = grid(stub);
    fillAll(a, "Extremely important");
    await a.submit();
    expect(a.aggregateBadge.color).toBe("green");

    const stub2 = new StubService();
    stub2.nextAggregateCr = 0.25;
    const b = grid(stub2);
    fillAll(b, "Extremely important");
    await b.submit();
    expect(b.aggregateBadge.color).toBe("red");
  });

  it("uses the documented threshold constant", () => {
    expect(CR_THRESHOLD).toBe(0.1);
  });
});
