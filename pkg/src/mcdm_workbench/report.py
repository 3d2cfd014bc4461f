"""Deterministic report emission: markdown tables, CSV bundle, SVG charts.

Output bytes depend only on project state (timestamps come from project
metadata, never the wall clock), so identical projects yield identical
reports.
"""

from __future__ import annotations

from pathlib import Path

from .errors import InputError, StaleComputationError
from .sensitivity import roadmap_tiers
from .workspace import Project


def _fmt(x: float, places: int = 3) -> str:
    return f"{x:.{places}f}"


def _weights_table(p: Project, weights) -> str:
    order = sorted(range(len(weights.crisp_weights)),
                   key=lambda i: -weights.crisp_weights[i])
    rank = {i: pos + 1 for pos, i in enumerate(order)}
    names = {c.id: c.name or c.id for c in p.criteria}
    lines = ["| Criterion | Direction | Weight | Rank |",
             "| --- | --- | --- | --- |"]
    for i, cid in enumerate(weights.criterion_ids):
        lines.append(f"| {names[cid]} | {weights.directions[i]} | "
                     f"{_fmt(weights.crisp_weights[i])} | {rank[i]} |")
    return "\n".join(lines)


def _grid_table(row_ids, col_ids, grid, places=3) -> str:
    head = "| | " + " | ".join(col_ids) + " |"
    sep = "| --- |" + " --- |" * len(col_ids)
    lines = [head, sep]
    for rid, row in zip(row_ids, grid):
        lines.append(f"| {rid} | " + " | ".join(_fmt(x, places) for x in row) + " |")
    return "\n".join(lines)


def _names(items):
    return {x.id: (x.name or x.id) for x in items}


def render_markdown(p: Project) -> str:
    weights = p.fresh_weights()
    ranking = p.fresh_ranking()
    crit_names = _names(p.criteria)
    alt_names = _names(p.alternatives)
    col_ids = [crit_names[c] for c in weights.criterion_ids]
    row_ids = [alt_names[a] for a in ranking.alternative_ids]

    parts = [
        f"# Prioritization report: {p.name}",
        "",
        f"Project revision {p.revision}, created {p.created}.",
        "",
        "## Criterion weights",
        "",
        _weights_table(p, weights),
        "",
        f"Consistency ratio of the aggregated judgment matrix: {_fmt(weights.cr)}.",
        "",
        "## Weighted normalized decision matrix",
        "",
        _grid_table(row_ids, col_ids, ranking.weighted_matrix),
        "",
        "## Ideal solutions",
        "",
        "| Criterion | Direction | Positive ideal | Negative ideal |",
        "| --- | --- | --- | --- |",
    ]
    for j, cid in enumerate(weights.criterion_ids):
        parts.append(f"| {crit_names[cid]} | {weights.directions[j]} | "
                     f"{_fmt(ranking.ideals.positive[j])} | {_fmt(ranking.ideals.negative[j])} |")
    parts += [
        "",
        "## Ranking",
        "",
        "| Alternative | d+ | d- | CC | Rank |",
        "| --- | --- | --- | --- | --- |",
    ]
    for i, aid in enumerate(ranking.alternative_ids):
        parts.append(f"| {alt_names[aid]} | {_fmt(ranking.d_plus[i])} | "
                     f"{_fmt(ranking.d_minus[i])} | {_fmt(ranking.cc[i])} | {ranking.rank[i]} |")
    m = len(ranking.alternative_ids)
    if m >= 3:
        try:
            bands = _default_bands(m)
            tiers = roadmap_tiers(ranking, bands)
            parts += [
                "",
                "## Adoption roadmap",
                "",
                "| Horizon | Alternatives |",
                "| --- | --- |",
                f"| Short term | {', '.join(alt_names[a] for a in tiers.short_term)} |",
                f"| Medium term | {', '.join(alt_names[a] for a in tiers.medium_term)} |",
                f"| Long term | {', '.join(alt_names[a] for a in tiers.long_term)} |",
            ]
        except Exception:
            pass  # tie across a band boundary: omit the roadmap section
    parts.append("")
    return "\n".join(parts)


def _default_bands(m: int):
    if m == 5:
        return (1, 2, 2)
    short = max(1, m // 5)
    medium = max(1, (m - short) // 2)
    return (short, medium, m - short - medium)


def render_csv_bundle(p: Project) -> dict[str, str]:
    weights = p.fresh_weights()
    ranking = p.fresh_ranking()
    w_lines = ["criterion,direction,weight"]
    for i, cid in enumerate(weights.criterion_ids):
        w_lines.append(f"{cid},{weights.directions[i]},{weights.crisp_weights[i]!r}")
    r_lines = ["alternative,d_plus,d_minus,cc,rank"]
    for i, aid in enumerate(ranking.alternative_ids):
        r_lines.append(f"{aid},{ranking.d_plus[i]!r},{ranking.d_minus[i]!r},"
                       f"{ranking.cc[i]!r},{ranking.rank[i]}")
    return {
        "weights.csv": "\n".join(w_lines) + "\n",
        "ranking.csv": "\n".join(r_lines) + "\n",
    }


def _svg_bar_chart(title: str, labels, values, color: str) -> str:
    """Minimal hand-rolled vertical bar chart; fully deterministic output."""
    width, height = 640, 360
    margin_l, margin_b, margin_t = 60, 80, 40
    plot_w = width - margin_l - 20
    plot_h = height - margin_t - margin_b
    vmax = max(values) if values else 1.0
    vmax = vmax or 1.0
    n = len(values)
    slot = plot_w / max(n, 1)
    bar_w = slot * 0.6
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}">',
        f'<text x="{width / 2:.1f}" y="24" text-anchor="middle" '
        f'font-family="sans-serif" font-size="16">{title}</text>',
        f'<line x1="{margin_l}" y1="{margin_t + plot_h}" x2="{width - 20}" '
        f'y2="{margin_t + plot_h}" stroke="black"/>',
        f'<line x1="{margin_l}" y1="{margin_t}" x2="{margin_l}" '
        f'y2="{margin_t + plot_h}" stroke="black"/>',
    ]
    for i, (label, v) in enumerate(zip(labels, values)):
        h = plot_h * (v / vmax)
        x = margin_l + i * slot + (slot - bar_w) / 2
        y = margin_t + plot_h - h
        cx = x + bar_w / 2
        parts.append(f'<rect x="{x:.1f}" y="{y:.1f}" width="{bar_w:.1f}" '
                     f'height="{h:.1f}" fill="{color}"/>')
        parts.append(f'<text x="{cx:.1f}" y="{y - 6:.1f}" text-anchor="middle" '
                     f'font-family="sans-serif" font-size="11">{v:.3f}</text>')
        parts.append(
            f'<text x="{cx:.1f}" y="{margin_t + plot_h + 14:.1f}" text-anchor="end" '
            f'font-family="sans-serif" font-size="11" '
            f'transform="rotate(-35 {cx:.1f} {margin_t + plot_h + 14:.1f})">{label}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render_svg_charts(p: Project) -> dict[str, str]:
    weights = p.fresh_weights()
    ranking = p.fresh_ranking()
    crit_names = _names(p.criteria)
    alt_names = _names(p.alternatives)
    return {
        "weights.svg": _svg_bar_chart(
            "Normalized criterion weights",
            [crit_names[c] for c in weights.criterion_ids],
            list(weights.crisp_weights), "#4472c4"),
        "closeness.svg": _svg_bar_chart(
            "Closeness coefficients",
            [alt_names[a] for a in ranking.alternative_ids],
            list(ranking.cc), "#ed7d31"),
    }


def emit_report(p: Project, fmt: str, out_dir) -> list[Path]:
    """Write report files for one of: markdown | csv_bundle | svg_charts."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    if fmt == "markdown":
        files = {"report.md": render_markdown(p)}
    elif fmt == "csv_bundle":
        files = render_csv_bundle(p)
    elif fmt == "svg_charts":
        files = render_svg_charts(p)
    else:
        raise InputError(f"unknown report format {fmt!r}")
    written = []
    for name, body in files.items():
        path = out_dir / name
        path.write_text(body, encoding="utf-8")
        written.append(path)
    return written
