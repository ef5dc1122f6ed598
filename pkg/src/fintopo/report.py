"""Batch verification report: every registered claim swept at its default
bounds, results written as CSV tables plus rendered figures.

The report is the package's single-button deliverable: it re-derives every
implication diagram, equivalence, lemma, characterization agreement, and
preservation statement over the full enumerated universe and records the
measured outcome, including deliberate converse searches whose witnesses are
wanted rather than feared.
"""

from __future__ import annotations

import csv
import os
from dataclasses import dataclass

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .classes import ClassLabel, family_of
from .core import FiniteSpace
from .search import (
    CLAIMS,
    EXPECT_MEASURE,
    EXPECT_REPORT,
    EXPECT_WITNESS,
    EXPECT_ZERO,
    SweepOptions,
    SweepResult,
    enumerate_topologies,
    sweep_claim,
)
from .separation import is_almost_normal, is_almost_sc_star_normal, is_normal

CLAIM_ORDER = (
    "C1", "C2a", "C2b", "C3a", "C3b", "C4", "C5a", "C5b", "C5c",
    "C6a", "C6b", "C6c", "C7a", "C7b", "C8", "C9", "P1", "P2",
    "C10", "C11", "X1", "X2", "X3", "X4",
)

# Sample spaces charted in the family-size figure, named by their shape:
# "shared-core" has one minimal open set inside every nonempty open;
# "layered" stacks opens in a chain with two generic points on top;
# "partition" splits the ground into clopen blocks.
SAMPLE_SPACES = (
    ("shared-core", FiniteSpace(4, (0, 10, 11, 14, 15))),
    ("layered", FiniteSpace(4, (0, 1, 2, 3, 7, 15))),
    ("partition", FiniteSpace(4, (0, 1, 2, 3, 12, 13, 14, 15))),
)

_FAMILY_FIGURE_LABELS = (
    ClassLabel.CLOSED,
    ClassLabel.G_CLOSED,
    ClassLabel.ALPHA_CLOSED,
    ClassLabel.C_STAR_OPEN,
    ClassLabel.REGULAR_OPEN,
    ClassLabel.SC_STAR_CLOSED,
    ClassLabel.GSC_STAR_CLOSED,
    ClassLabel.SC_STAR_G_CLOSED,
)


@dataclass(frozen=True)
class ReportOutcome:
    results: tuple[SweepResult, ...]
    verdicts: tuple[str, ...]
    gate_ok: bool
    claims_csv: str
    separation_csv: str
    figures: tuple[str, ...]


def _verdict(claim_id: str, result: SweepResult) -> str:
    expectation = CLAIMS[claim_id].expectation
    found = result.total_counterexamples > 0
    if expectation in (EXPECT_ZERO, EXPECT_MEASURE):
        return "finding" if found else "ok"
    if expectation == EXPECT_WITNESS:
        return "found" if found else "missing"
    if expectation == EXPECT_REPORT:
        return "found" if found else "none"
    return "unknown"


def _gate(claim_id: str, verdict: str) -> bool:
    expectation = CLAIMS[claim_id].expectation
    if expectation in (EXPECT_ZERO, EXPECT_MEASURE):
        return verdict == "ok"
    if expectation == EXPECT_WITNESS:
        return verdict == "found"
    return True


def _write_claims_csv(path: str, results, verdicts) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow([
            "claim", "kind", "expectation", "max_points", "spaces_examined",
            "instances_examined", "counterexamples", "verdict", "statement",
        ])
        for result, verdict in zip(results, verdicts):
            claim = CLAIMS[result.claim_id]
            writer.writerow([
                result.claim_id, claim.kind, claim.expectation,
                result.max_points, result.spaces_examined,
                result.instances_examined, result.total_counterexamples,
                verdict, claim.statement,
            ])


def _separation_rows(max_points: int, method: str):
    rows = []
    for n in range(1, max_points + 1):
        spaces = enumerate_topologies(n, method)
        rows.append((
            n,
            len(spaces),
            sum(1 for s in spaces if is_normal(s).holds),
            sum(1 for s in spaces if is_almost_normal(s).holds),
            sum(1 for s in spaces if is_almost_sc_star_normal(s).holds),
        ))
    return rows


def _write_separation_csv(path: str, rows) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow([
            "points", "spaces", "normal", "almost_normal",
            "almost_sc_star_normal",
        ])
        writer.writerows(rows)


def _fig_claims_overview(path: str, results, verdicts) -> None:
    ids = [r.claim_id for r in results]
    counts = [r.total_counterexamples for r in results]
    colors = ["#c0392b" if v in ("finding", "missing") else "#2c7fb8"
              for v in verdicts]
    fig, ax = plt.subplots(figsize=(9, 6))
    ax.barh(range(len(ids)), counts, color=colors)
    ax.set_yticks(range(len(ids)))
    ax.set_yticklabels(ids)
    ax.invert_yaxis()
    ax.set_xlabel("instances found")
    ax.set_title("Claim sweep outcomes (converse searches expect nonzero)")
    for i, c in enumerate(counts):
        ax.text(c, i, f" {c}", va="center", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _fig_topology_counts(path: str, rows) -> None:
    ns = [r[0] for r in rows]
    counts = [r[1] for r in rows]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.bar(ns, counts, color="#2c7fb8")
    ax.set_yscale("log")
    ax.set_xticks(ns)
    ax.set_xlabel("points")
    ax.set_ylabel("labeled topologies")
    ax.set_title("Enumerated topologies per ground size")
    for n, c in zip(ns, counts):
        ax.text(n, c, str(c), ha="center", va="bottom", fontsize=9)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _fig_family_sizes(path: str) -> None:
    names = [name for name, _ in SAMPLE_SPACES]
    label_names = [lab.value for lab in _FAMILY_FIGURE_LABELS]
    fig, ax = plt.subplots(figsize=(10, 5))
    width = 0.8 / len(names)
    for i, (name, space) in enumerate(SAMPLE_SPACES):
        sizes = [len(family_of(space, lab)) for lab in _FAMILY_FIGURE_LABELS]
        xs = [j + i * width for j in range(len(label_names))]
        ax.bar(xs, sizes, width=width, label=name)
    ax.set_xticks([j + width for j in range(len(label_names))])
    ax.set_xticklabels(label_names, rotation=30, ha="right", fontsize=8)
    ax.set_ylabel("family size (of 16 subsets)")
    ax.set_title("Class family sizes on three 4-point sample spaces")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _fig_separation_profile(path: str, rows) -> None:
    ns = [r[0] for r in rows]
    fig, ax = plt.subplots(figsize=(7, 4.5))
    width = 0.2
    series = (
        ("all spaces", [r[1] for r in rows], "#bbbbbb"),
        ("normal", [r[2] for r in rows], "#2c7fb8"),
        ("almost normal", [r[3] for r in rows], "#7fcdbb"),
        ("almost SC*-normal", [r[4] for r in rows], "#253494"),
    )
    for i, (label, values, color) in enumerate(series):
        xs = [n + (i - 1.5) * width for n in ns]
        ax.bar(xs, values, width=width, label=label, color=color)
    ax.set_xticks(ns)
    ax.set_xlabel("points")
    ax.set_ylabel("spaces")
    ax.set_title("Separation properties across the enumerated universe")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def run_report(out_dir: str, max_points: int = 4, theorem_points: int = 3,
               map_points: int = 3, method: str = "preorder",
               options: SweepOptions | None = None) -> ReportOutcome:
    """Sweep every claim, then write CSV tables and figures under out_dir."""
    options = options or SweepOptions()
    os.makedirs(out_dir, exist_ok=True)
    results = []
    for cid in CLAIM_ORDER:
        if cid == "C9":
            bound = theorem_points
        elif cid in ("C10", "C11"):
            bound = map_points
        else:
            bound = max_points
        results.append(sweep_claim(cid, max_points=bound, method=method,
                                   options=options))
    results = tuple(results)
    verdicts = tuple(_verdict(r.claim_id, r) for r in results)
    gate_ok = all(_gate(r.claim_id, v) for r, v in zip(results, verdicts))

    claims_csv = os.path.join(out_dir, "claims.csv")
    _write_claims_csv(claims_csv, results, verdicts)
    rows = _separation_rows(max_points, method)
    separation_csv = os.path.join(out_dir, "separation_counts.csv")
    _write_separation_csv(separation_csv, rows)

    figures = []
    for name, renderer in (
        ("claims_overview.png", lambda p: _fig_claims_overview(p, results, verdicts)),
        ("topology_counts.png", lambda p: _fig_topology_counts(p, rows)),
        ("family_sizes.png", _fig_family_sizes),
        ("separation_profile.png", lambda p: _fig_separation_profile(p, rows)),
    ):
        path = os.path.join(out_dir, name)
        renderer(path)
        figures.append(path)

    return ReportOutcome(
        results=results,
        verdicts=verdicts,
        gate_ok=gate_ok,
        claims_csv=claims_csv,
        separation_csv=separation_csv,
        figures=tuple(figures),
    )
