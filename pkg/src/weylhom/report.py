"""Persistent output for search runs: JSON lines, CSV summary, and a figure.

The JSON-lines file is the canonical record and is byte-stable for a given
configuration: records are sorted, keys are emitted in a fixed order, and
timing lives only in the CSV.
"""

from __future__ import annotations

import csv
import json
from collections import Counter


RECORD_FIELDS = ("p", "r", "lambda", "mu", "tableau_count", "conditions", "dim")


def record_json(record: dict) -> str:
    ordered = {key: record[key] for key in RECORD_FIELDS}
    return json.dumps(ordered, separators=(",", ":"))


def write_jsonl(records, path) -> None:
    with open(path, "w") as fh:
        for record in records:
            fh.write(record_json(record) + "\n")


def write_csv(records, path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["p", "r", "lambda", "mu", "tableau_count",
                         "conditions_hold", "dim", "elapsed_ms"])
        for rec in records:
            conds = rec["conditions"]
            writer.writerow([
                rec["p"], rec["r"],
                ",".join(str(x) for x in rec["lambda"]),
                ",".join(str(x) for x in rec["mu"]),
                rec["tableau_count"],
                "" if conds is None else str(all(c["holds"] for c in conds)).lower(),
                rec["dim"],
                f"{rec['elapsed_ms']:.2f}",
            ])


def render_figure(records, path) -> None:
    """Bar chart of hom dimensions by degree, written next to the data files."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    counts: Counter = Counter()
    for rec in records:
        counts[(rec["r"], rec["dim"])] += 1
    fig, ax = plt.subplots(figsize=(7, 4))
    if counts:
        degrees = sorted({r for r, _ in counts})
        dims = sorted({d for _, d in counts})
        bottoms = {r: 0 for r in degrees}
        for d in dims:
            heights = [counts.get((r, d), 0) for r in degrees]
            ax.bar(degrees, heights, bottom=[bottoms[r] for r in degrees],
                   label=f"dim {d}")
            for r, h in zip(degrees, heights):
                bottoms[r] += h
        ax.legend(fontsize=8)
        ax.set_xticks(degrees)
    ax.set_xlabel("degree r")
    ax.set_ylabel("pairs")
    ax.set_title("hom-space dimensions by degree")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
