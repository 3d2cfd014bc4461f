/**
 * Single-page wiring: project picker, judgment grid, ranking review,
 * what-if sliders, roadmap. All numeric content comes from the view models'
 * service calls; this file only moves values into the DOM. Multi-expert
 * refresh is polling-based.
 */
import { ApiClient, displayNumber } from "./api.js";
import { JudgmentGridViewModel, LINGUISTIC_LABELS } from "./judgmentGrid.js";
import { RoadmapViewModel } from "./roadmap.js";
import { WhatIfViewModel } from "./whatif.js";
const POLL_MS = 5000;
const api = new ApiClient((url, init) => fetch(url, init));
function el(tag, text, cls) {
    const node = document.createElement(tag);
    if (text !== undefined) {
        node.textContent = text;
    }
    if (cls) {
        node.className = cls;
    }
    return node;
}
function numberCell(x) {
    const { text, title } = displayNumber(x);
    const td = el("td", text);
    td.title = title;
    return td;
}
function renderBadge(target, label, badge) {
    target.textContent =
        badge.cr === null ? `${label}: —` : `${label}: ${badge.cr.toFixed(3)}`;
    target.className = `badge badge-${badge.color}`;
}
async function main() {
    const root = document.getElementById("app");
    if (!root) {
        return;
    }
    const params = new URLSearchParams(window.location.search);
    const projectId = params.get("project");
    if (!projectId) {
        root.append(el("p", "Add ?project=<id> to the URL to open a project."));
        return;
    }
    const snap = await api.getProject(projectId);
    const criterionIds = snap.project.criteria.map((c) => c.id);
    root.append(el("h1", `Panel workbench — ${snap.project.name}`));
    // --- judgment grid ---------------------------------------------------
    const judgeSection = el("section");
    judgeSection.append(el("h2", "Pairwise judgments"));
    const expertSelect = el("select");
    for (const e of snap.project.experts) {
        const opt = el("option", `${e.name} (${e.role})`);
        opt.value = e.id;
        expertSelect.append(opt);
    }
    judgeSection.append(expertSelect);
    const gridTable = el("table", undefined, "grid");
    const expertBadgeEl = el("span", undefined, "badge");
    const aggBadgeEl = el("span", undefined, "badge");
    const submitBtn = el("button", "Submit judgments");
    judgeSection.append(gridTable, expertBadgeEl, aggBadgeEl, submitBtn);
    root.append(judgeSection);
    let grid = newGrid();
    function newGrid() {
        const g = new JudgmentGridViewModel(api, projectId, expertSelect.value || snap.project.experts[0]?.id || "", criterionIds, snap.revision);
        gridTable.replaceChildren();
        for (const cell of g.cells) {
            const tr = el("tr");
            tr.append(el("td", `${cell.a} vs ${cell.b}`));
            const select = el("select");
            select.append(el("option", "— choose —"));
            for (const label of LINGUISTIC_LABELS) {
                select.append(el("option", label));
            }
            const recip = el("input");
            recip.type = "checkbox";
            recip.title = "second criterion is the more important one";
            const update = () => {
                if (select.selectedIndex > 0) {
                    g.setCell(cell.a, cell.b, LINGUISTIC_LABELS[select.selectedIndex - 1], recip.checked);
                }
                submitBtn.disabled = !g.complete;
            };
            select.addEventListener("change", update);
            recip.addEventListener("change", update);
            const tdSel = el("td");
            tdSel.append(select);
            const tdRec = el("td");
            tdRec.append(recip);
            tr.append(tdSel, tdRec);
            gridTable.append(tr);
        }
        submitBtn.disabled = true;
        return g;
    }
    expertSelect.addEventListener("change", () => {
        grid = newGrid();
    });
    submitBtn.addEventListener("click", async () => {
        await grid.submit();
        renderBadge(expertBadgeEl, "expert CR", grid.expertBadge);
        renderBadge(aggBadgeEl, "aggregate CR", grid.aggregateBadge);
        rankingSection.style.display = grid.rankingBlocked ? "none" : "";
        if (!grid.rankingBlocked) {
            await renderRanking();
        }
    });
    // --- ranking review ---------------------------------------------------
    const rankingSection = el("section");
    rankingSection.append(el("h2", "Ranking"));
    const rankingTable = el("table");
    rankingSection.append(rankingTable);
    rankingSection.style.display = "none";
    root.append(rankingSection);
    async function renderRanking() {
        const ranking = await api.getRanking(projectId);
        rankingTable.replaceChildren();
        const head = el("tr");
        for (const h of ["Alternative", "d+", "d-", "CC", "Rank"]) {
            head.append(el("th", h));
        }
        rankingTable.append(head);
        ranking.alternative_ids.forEach((aid, i) => {
            const tr = el("tr");
            tr.append(el("td", aid));
            tr.append(numberCell(ranking.d_plus[i]));
            tr.append(numberCell(ranking.d_minus[i]));
            tr.append(numberCell(ranking.cc[i]));
            tr.append(el("td", String(ranking.rank[i])));
            rankingTable.append(tr);
        });
    }
    // --- what-if sliders --------------------------------------------------
    try {
        const weights = await api.getWeights(projectId);
        const whatifSection = el("section");
        whatifSection.append(el("h2", "What-if weights"));
        const vm = new WhatIfViewModel(api, projectId, weights.weights.criterion_ids, weights.weights.crisp_weights);
        const sliderBox = el("div");
        const divergenceEl = el("p");
        const whatifTable = el("table");
        for (const s of vm.sliders) {
            const row = el("div", undefined, "slider-row");
            row.append(el("label", s.criterionId));
            const input = el("input");
            input.type = "range";
            input.min = "0";
            input.max = "1";
            input.step = "0.001";
            input.value = String(s.weight);
            const lock = el("input");
            lock.type = "checkbox";
            lock.title = "lock this weight";
            const valueEl = el("span", s.weight.toFixed(3));
            valueEl.title = String(s.weight);
            input.addEventListener("input", () => {
                vm.setWeight(s.criterionId, Number(input.value));
                for (const [k, sl] of vm.sliders.entries()) {
                    const rowEl = sliderBox.children[k];
                    rowEl.querySelector("input[type=range]").value =
                        String(sl.weight);
                    const span = rowEl.querySelector("span");
                    span.textContent = sl.weight.toFixed(3);
                    span.title = String(sl.weight);
                }
                divergenceEl.textContent = `max divergence from committed weights: ${vm.divergence.toFixed(3)}`;
            });
            lock.addEventListener("change", () => vm.toggleLock(s.criterionId));
            row.append(input, lock, valueEl);
            sliderBox.append(row);
        }
        const resetBtn = el("button", "Reset to committed weights");
        resetBtn.addEventListener("click", () => vm.reset());
        whatifSection.append(sliderBox, divergenceEl, resetBtn, whatifTable);
        root.append(whatifSection);
        setInterval(() => {
            if (vm.ranking) {
                whatifTable.replaceChildren();
                vm.ranking.alternative_ids.forEach((aid, i) => {
                    const tr = el("tr");
                    tr.append(el("td", aid));
                    tr.append(numberCell(vm.ranking.cc[i]));
                    tr.append(el("td", String(vm.ranking.rank[i])));
                    whatifTable.append(tr);
                });
            }
            sliderBox
                .querySelectorAll("input")
                .forEach((i) => (i.disabled = vm.stale));
        }, 300);
    }
    catch {
        // weights not computable yet (CR gate): panel starts with judgments only
    }
    // --- roadmap ----------------------------------------------------------
    const roadmap = new RoadmapViewModel(api, projectId);
    const roadmapSection = el("section");
    roadmapSection.append(el("h2", "Adoption roadmap"));
    const roadmapBox = el("div", undefined, "roadmap");
    const bandsInput = el("input");
    bandsInput.placeholder = "band sizes, e.g. 1,2,2";
    const bandsBtn = el("button", "Re-band");
    const bandsError = el("p", undefined, "error");
    roadmapSection.append(roadmapBox, bandsInput, bandsBtn, bandsError);
    root.append(roadmapSection);
    async function renderRoadmap(bands) {
        await roadmap.load(bands);
        bandsError.textContent = roadmap.bandError ?? "";
        roadmapBox.replaceChildren();
        for (const col of roadmap.columns()) {
            const div = el("div", undefined, "tier");
            div.append(el("h3", col.horizon));
            for (const a of col.alternatives) {
                div.append(el("p", a));
            }
            roadmapBox.append(div);
        }
    }
    bandsBtn.addEventListener("click", () => {
        const bands = bandsInput.value
            .split(",")
            .map((x) => parseInt(x.trim(), 10))
            .filter((x) => !Number.isNaN(x));
        void renderRoadmap(bands);
    });
    try {
        await renderRoadmap();
    }
    catch {
        // no committed ranking yet
    }
    // --- polling refresh for multi-expert sessions ------------------------
    setInterval(async () => {
        try {
            const fresh = await api.getProject(projectId);
            if (fresh.revision !== snap.revision) {
                snap.revision = fresh.revision;
            }
        }
        catch {
            // transient network failure; next poll retries
        }
    }, POLL_MS);
}
void main();
