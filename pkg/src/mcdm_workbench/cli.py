"""Command-line front end for the full screening/weighting/ranking pipeline.

Exit codes: 0 success, 1 validation or domain error (including a CR-gate
rejection), 2 usage error. Every failure prints a single machine-parsable
line to stderr. `--json` switches any subcommand to JSON output.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import McdmError
from .fahp import build_matrix, consistency_ratio, inconsistent_triads
from .fuzzy import LINGUISTIC_LABELS
from .report import emit_report
from .sensitivity import roadmap_tiers
from .workspace import (
    Alternative,
    Criterion,
    Expert,
    Judgment,
    Project,
    import_decision_csv,
    import_likert_csv,
    load_project,
    save_project,
)


def _fail(message: str) -> int:
    print(f"error: {message}".replace("\n", " "), file=sys.stderr)
    return 1


def _table(headers, rows) -> str:
    widths = [max(len(str(h)), *(len(str(r[i])) for r in rows)) if rows else len(str(h))
              for i, h in enumerate(headers)]
    def fmt(cells):
        return "  ".join(str(c).ljust(w) for c, w in zip(cells, widths)).rstrip()
    lines = [fmt(headers), fmt(["-" * w for w in widths])]
    lines += [fmt(r) for r in rows]
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="mcdm", description=__doc__)
    ap.add_argument("--project", help="path to the .mcdm.json project file")
    ap.add_argument("--round", type=int, default=None, dest="round_places",
                    help="decimal places for rounded-intermediate ranking")
    ap.add_argument("--cr-threshold", type=float, default=0.1)
    ap.add_argument("--json", action="store_true", help="machine-readable output")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("new", help="create a project file")
    p.add_argument("--name", required=True)
    p.add_argument("--criteria", default="",
                   help="comma list of id[:benefit|cost] entries")
    p.add_argument("--alternatives", default="", help="comma list of ids")
    p.add_argument("--experts", default="",
                   help="comma list of id[:academic|practitioner] entries")

    p = sub.add_parser("screen", help="apply Likert screening from a CSV")
    p.add_argument("--likert", required=True, help="likert CSV path")
    p.add_argument("--mean-threshold", type=float, default=3.5)
    p.add_argument("--dispersion-threshold", type=float, default=1.0)

    p = sub.add_parser("judge", help="record pairwise judgments")
    p.add_argument("--file", help="judgments JSON file (omit for interactive entry)")
    p.add_argument("--expert", help="expert id (interactive mode)")

    p = sub.add_parser("import-scores", help="import a decision CSV")
    p.add_argument("--csv", required=True)
    p.add_argument("--expert", default="panel")

    sub.add_parser("weights", help="run FAHP weighting; fails when CR >= threshold")

    sub.add_parser("rank", help="run TOPSIS ranking (read-only)")

    p = sub.add_parser("sensitivity", help="weight perturbation / Monte Carlo analysis")
    p.add_argument("--oat", default="", help="comma list of deltas, e.g. -0.05,0.05")
    p.add_argument("--mc", type=int, default=0, help="Monte Carlo sample count")
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("report", help="emit report files (read-only)")
    p.add_argument("--format", default="markdown",
                   choices=["markdown", "csv_bundle", "svg_charts"])
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--bands", default="", help="comma list of tier band sizes")

    p = sub.add_parser("serve", help="start the HTTP service")
    p.add_argument("--root", default=".", help="directory of project files")
    p.add_argument("--port", type=int, default=8400)
    p.add_argument("--host", default="127.0.0.1")
    return ap


def _require_project(args) -> Project:
    if not args.project:
        raise McdmError("--project is required for this subcommand")
    return load_project(args.project)


def _parse_tagged(spec: str, default_tag: str, allowed):
    out = []
    for chunk in filter(None, (c.strip() for c in spec.split(","))):
        if ":" in chunk:
            ident, tag = chunk.split(":", 1)
            if tag not in allowed:
                raise McdmError(f"unknown tag {tag!r} in {chunk!r}")
        else:
            ident, tag = chunk, default_tag
        out.append((ident, tag))
    return out


def cmd_new(args) -> int:
    if not args.project:
        raise McdmError("--project is required")
    p = Project(name=args.name)
    for cid, direction in _parse_tagged(args.criteria, "benefit", ("benefit", "cost")):
        p.add_criterion(Criterion(cid, cid, direction))
    for aid, _ in _parse_tagged(args.alternatives, "", ("",)):
        p.add_alternative(Alternative(aid, aid))
    for eid, role in _parse_tagged(args.experts, "practitioner",
                                   ("academic", "practitioner")):
        p.add_expert(Expert(eid, eid, role))
    save_project(p, args.project)
    if args.json:
        print(json.dumps({"project": args.project, "revision": p.revision}))
    else:
        print(f"created {args.project}")
    return 0


def cmd_screen(args) -> int:
    p = _require_project(args)
    import_likert_csv(args.likert, p)
    retained, eliminated = p.run_screening(args.mean_threshold, args.dispersion_threshold)
    save_project(p, args.project)
    if args.json:
        print(json.dumps({
            "retained": [d.item.item_id for d in retained],
            "eliminated": [
                {"item": d.item.item_id, "reasons": list(d.reasons)} for d in eliminated
            ],
        }))
    else:
        rows = [[d.item.item_id, d.item.item_kind, f"{d.item.mean:.2f}",
                 f"{d.item.dispersion:.2f}", "retained", ""] for d in retained]
        rows += [[d.item.item_id, d.item.item_kind, f"{d.item.mean:.2f}",
                  f"{d.item.dispersion:.2f}", "eliminated", "+".join(d.reasons)]
                 for d in eliminated]
        print(_table(["item", "kind", "mean", "sd", "decision", "reasons"], rows))
    return 0


def _judgments_from_file(path) -> dict:
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    table = data["judgments"] if isinstance(data.get("judgments"), dict) else \
        {data.get("expert", "panel"): data["judgments"]}
    return {
        expert: [Judgment(j["a"], j["b"], j["label"], bool(j.get("reciprocal")))
                 for j in js]
        for expert, js in table.items()
    }


def _interactive_judgments(p: Project, expert_id: str):
    ids = [c.id for c in p.criteria]
    menu = "\n".join(f"  {k + 1}. {label}" for k, label in enumerate(LINGUISTIC_LABELS))
    out = []
    for i in range(len(ids)):
        for j in range(i + 1, len(ids)):
            while True:
                print(f"\nCompare {ids[i]} vs {ids[j]}:\n{menu}")
                raw = input("choice [1-9], prefix 'r' if the second is more important: ").strip()
                reciprocal = raw.lower().startswith("r")
                raw = raw.lstrip("rR")
                try:
                    k = int(raw)
                    if not 1 <= k <= len(LINGUISTIC_LABELS):
                        raise ValueError
                except ValueError:
                    print("invalid choice, try again")
                    continue
                out.append(Judgment(ids[i], ids[j], LINGUISTIC_LABELS[k - 1], reciprocal))
                break
    return {expert_id: out}


def cmd_judge(args) -> int:
    p = _require_project(args)
    if args.file:
        table = _judgments_from_file(args.file)
    else:
        if not args.expert:
            raise McdmError("--expert is required for interactive judging")
        table = _interactive_judgments(p, args.expert)
    for expert_id, js in table.items():
        p.set_judgments(expert_id, js)
    save_project(p, args.project)
    # immediate consistency feedback per recorded expert
    ids = p.criterion_ids()
    index = {c: i for i, c in enumerate(ids)}
    feedback = {}
    for expert_id in table:
        m = build_matrix(ids, [(index[j.a], index[j.b], j.label, j.reciprocal)
                               for j in p.judgments[expert_id]])
        cr = consistency_ratio(m)
        entry = {"cr": cr}
        if cr >= args.cr_threshold:
            entry["worst_triads"] = [
                {"criteria": [ids[i], ids[j], ids[k]], "deviation": dev}
                for i, j, k, dev in inconsistent_triads(m)
            ]
        feedback[expert_id] = entry
    if args.json:
        print(json.dumps({"recorded": sorted(table), "consistency": feedback}))
    else:
        for expert_id, entry in sorted(feedback.items()):
            print(f"{expert_id}: CR = {entry['cr']:.4f}"
                  + ("" if "worst_triads" not in entry else "  (inconsistent)"))
            for t in entry.get("worst_triads", []):
                print(f"  revise triad {'-'.join(t['criteria'])} "
                      f"(deviation {t['deviation']:.3f})")
    return 0


def cmd_import_scores(args) -> int:
    p = _require_project(args)
    import_decision_csv(args.csv, p, args.expert)
    save_project(p, args.project)
    if args.json:
        print(json.dumps({"alternatives": [a.id for a in p.alternatives],
                          "criteria": [c.id for c in p.criteria]}))
    else:
        print(f"imported scores for {len(p.alternatives)} alternatives")
    return 0


def cmd_weights(args) -> int:
    p = _require_project(args)
    outcome = p.compute_weights(args.cr_threshold)
    if not outcome.accepted:
        if args.json:
            print(json.dumps(outcome.to_json()))
        return _fail(f"consistency ratio {outcome.cr:.4f} >= threshold "
                     f"{args.cr_threshold}; judgments need revision")
    save_project(p, args.project)
    w = outcome.weights
    if args.json:
        print(json.dumps(outcome.to_json()))
    else:
        rows = [[cid, w.directions[i], f"{w.crisp_weights[i]:.4f}"]
                for i, cid in enumerate(w.criterion_ids)]
        print(_table(["criterion", "direction", "weight"], rows))
        print(f"CR = {outcome.cr:.4f} (threshold {args.cr_threshold})")
    return 0


def cmd_rank(args) -> int:
    p = _require_project(args)
    ranking = p.compute_ranking(args.round_places)
    if args.json:
        print(json.dumps(ranking.to_json()))
    else:
        rows = [[aid, f"{ranking.d_plus[i]:.3f}", f"{ranking.d_minus[i]:.3f}",
                 f"{ranking.cc[i]:.3f}", ranking.rank[i]]
                for i, aid in enumerate(ranking.alternative_ids)]
        print(_table(["alternative", "d+", "d-", "cc", "rank"], rows))
    return 0


def cmd_sensitivity(args) -> int:
    p = _require_project(args)
    deltas = [float(x) for x in args.oat.split(",") if x.strip()] if args.oat else None
    if not deltas and not args.mc:
        raise McdmError("nothing to do: give --oat deltas and/or --mc samples")
    out = p.compute_sensitivity(deltas, args.mc, args.seed)
    if args.json:
        print(json.dumps({k: v.to_json() for k, v in out.items()}, sort_keys=True))
        return 0
    for kind, rep in sorted(out.items()):
        print(f"[{kind}] scenarios: {len(rep.scenarios)}, "
              f"rank reversals: {rep.rank_reversal_count}")
        rows = []
        for aid in rep.base.alternative_ids:
            freq = rep.rank_frequencies[aid]
            total = sum(freq.values()) or 1
            top_share = freq.get(1, 0) / total
            rows.append([aid, rep.base.rank[rep.base.alternative_ids.index(aid)],
                         f"{top_share:.3f}"])
        print(_table(["alternative", "base rank", "rank-1 share"], rows))
    return 0


def cmd_report(args) -> int:
    p = _require_project(args)
    # refresh the ranking in memory only; the project file is never rewritten
    p.compute_ranking(args.round_places)
    written = emit_report(p, args.format, args.out)
    if args.bands:
        bands = tuple(int(x) for x in args.bands.split(","))
        tiers = roadmap_tiers(p.fresh_ranking(), bands)
        if not args.json:
            print(f"tiers: short={list(tiers.short_term)} "
                  f"medium={list(tiers.medium_term)} long={list(tiers.long_term)}")
    if args.json:
        print(json.dumps({"written": [str(f) for f in written]}))
    else:
        for f in written:
            print(f"wrote {f}")
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app
    app = create_app(args.root)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


_COMMANDS = {
    "new": cmd_new,
    "screen": cmd_screen,
    "judge": cmd_judge,
    "import-scores": cmd_import_scores,
    "weights": cmd_weights,
    "rank": cmd_rank,
    "sensitivity": cmd_sensitivity,
    "report": cmd_report,
    "serve": cmd_serve,
}


def run(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _COMMANDS[args.command](args)
    except McdmError as exc:
        return _fail(str(exc))
    except FileNotFoundError as exc:
        return _fail(str(exc))


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
