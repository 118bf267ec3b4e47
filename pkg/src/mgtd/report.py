"""Report serialization: JSON, Markdown tables, and plot-data CSVs.

Every emitted report declares the hash of the run configuration so the
artifact is self-describing and byte-reproducible runs can be verified
by comparing files directly.
"""

from __future__ import annotations

import hashlib
import json


def config_hash(config: dict) -> str:
    canonical = json.dumps(config, sort_keys=True, ensure_ascii=False, default=str)
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()[:16]


def write_report_json(report: dict, config: dict, path) -> None:
    payload = {"config_hash": config_hash(config), "config": config}
    for key in ("f1_table", "ci_table", "pairwise", "degradation", "js_sweep"):
        if key in report:
            payload[key] = report[key]
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _fmt(x: float, digits: int = 4) -> str:
    return f"{x:.{digits}f}"


def render_markdown(report: dict, config: dict) -> str:
    lines = ["# Detection evaluation report", "",
             f"config hash: `{config_hash(config)}`", ""]

    if "f1_table" in report:
        lines += ["## F1 by stacking", "", "| Stacking | F1 |", "|---|---|"]
        for row in sorted(report["f1_table"], key=lambda r: -r["f1"]):
            lines.append(f"| {row['stacking']} | {_fmt(row['f1'])} |")
        lines.append("")

    if "ci_table" in report:
        lines += ["## Bootstrap confidence intervals", "",
                  "| Stacking | F1 | CI lower | CI upper |", "|---|---|---|---|"]
        for row in report["ci_table"]:
            lines.append(
                f"| {row['stacking']} | {_fmt(row['point'])} "
                f"| {_fmt(row['lower'])} | {_fmt(row['upper'])} |"
            )
        lines.append("")

    if "pairwise" in report:
        alpha = config.get("alpha", 0.1)
        corrected = alpha / len(report["pairwise"])
        lines += ["## Pairwise comparisons (McNemar, Bonferroni-corrected)", "",
                  f"corrected significance level: {_fmt(corrected)} "
                  f"({len(report['pairwise'])} tests at alpha {alpha})", "",
                  "| Module 1 | Module 2 | p-value | F1 (M1) | F1 (M2) | F1 Diff | Higher F1 | Significant |",
                  "|---|---|---|---|---|---|---|---|"]
        for row in report["pairwise"]:
            lines.append(
                f"| {row['module_a']} | {row['module_b']} | {_fmt(row['p_value'])} "
                f"| {_fmt(row['f1_a'])} | {_fmt(row['f1_b'])} | {_fmt(row['f1_diff'])} "
                f"| {row['higher']} | {'yes' if row['significant'] else 'no'} |"
            )
        lines.append("")

    if "degradation" in report:
        lines += ["## F1 score drop per ensemble", "",
                  "| Model | Initial F1 | Paraphrased F1 | Degradation |",
                  "|---|---|---|---|"]
        for row in report["degradation"]:
            lines.append(
                f"| {row['stacking']} | {_fmt(row['f1_pre'])} "
                f"| {_fmt(row['f1_post'])} | {_fmt(row['degradation'])} |"
            )
        lines.append("")

    if "js_sweep" in report:
        lines += ["## Class-separation JS divergence by context window", "",
                  "| Window | JS (nats) |", "|---|---|"]
        for row in report["js_sweep"]:
            lines.append(f"| {row['window']} | {_fmt(row['js'])} |")
        lines.append("")

    return "\n".join(lines)


def write_report_markdown(report: dict, config: dict, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(render_markdown(report, config))


def write_js_csv(js_sweep: list[dict], path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("window,js\n")
        for row in js_sweep:
            fh.write(f"{row['window']},{row['js']:.9g}\n")


def write_degradation_csv(degradation: list[dict], path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("stacking,f1_pre,f1_post\n")
        for row in degradation:
            fh.write(f"{row['stacking']},{row['f1_pre']:.9g},{row['f1_post']:.9g}\n")
