"""Render a framework report: a figure of the attack graph plus CSV tables.

The figure lays arguments out in columns by strongly-connected-component
order (the same layering the browser client uses) and colours each argument
by the class of the initial sets it belongs to: green for unattacked, blue
for unchallenged, orange for challenged, grey for arguments in no initial
set.  Alongside the figure, the classification is written as CSV, and when
a semantics is requested its extensions with witness sequences are too.
"""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.patches import FancyArrowPatch

from .core import ArgSet, Framework, sccs
from .initial import InitialClass, enumerate_initial_sets
from .serial import SemanticsSpec, enumerate_extensions

CLASS_COLOURS = {
    InitialClass.UNATTACKED: "#2e8b57",
    InitialClass.UNCHALLENGED: "#3a6ea5",
    InitialClass.CHALLENGED: "#e07b39",
}
_NEUTRAL = "#9a9a9a"


def _layout(f: Framework) -> dict[int, tuple[float, float]]:
    positions: dict[int, tuple[float, float]] = {}
    for col, comp in enumerate(sccs(f)):
        members = comp.indices()
        for row, arg in enumerate(members):
            offset = (len(members) - 1) / 2
            positions[arg] = (float(col) * 2.0, (offset - row) * 1.4)
    return positions


def _argument_colours(f: Framework) -> dict[int, str]:
    colours = {a: _NEUTRAL for a in range(f.n)}
    rank = {
        InitialClass.UNATTACKED: 0,
        InitialClass.UNCHALLENGED: 1,
        InitialClass.CHALLENGED: 2,
    }
    best: dict[int, int] = {}
    for info in enumerate_initial_sets(f):
        for a in info.arguments:
            if a not in best or rank[info.kind] < best[a]:
                best[a] = rank[info.kind]
                colours[a] = CLASS_COLOURS[info.kind]
    return colours


def draw_framework(f: Framework, path: Path) -> None:
    positions = _layout(f)
    colours = _argument_colours(f)
    width = max(4.0, 2.0 * max(1, len(sccs(f))))
    height = max(3.0, 1.2 * max((len(c) for c in sccs(f)), default=1))
    fig, ax = plt.subplots(figsize=(width, height))
    ax.axis("off")
    for a, b in f.attacks:
        if a == b:
            x, y = positions[a]
            loop = plt.Circle((x, y + 0.34), 0.16, fill=False, color="#555555", lw=1.0)
            ax.add_patch(loop)
            continue
        start, end = positions[a], positions[b]
        mutual = (b, a) in f.attacks
        arrow = FancyArrowPatch(
            start,
            end,
            arrowstyle="-|>",
            mutation_scale=12,
            color="#555555",
            lw=1.0,
            shrinkA=14,
            shrinkB=14,
            connectionstyle=f"arc3,rad={0.18 if mutual else 0.02}",
        )
        ax.add_patch(arrow)
    for a, (x, y) in positions.items():
        ax.scatter([x], [y], s=560, color=colours[a], zorder=3, edgecolors="#333333")
        ax.annotate(
            f.label(a), (x, y), color="white", ha="center", va="center",
            fontsize=10, fontweight="bold", zorder=4,
        )
    if positions:
        xs = [p[0] for p in positions.values()]
        ys = [p[1] for p in positions.values()]
        ax.set_xlim(min(xs) - 1.0, max(xs) + 1.0)
        ax.set_ylim(min(ys) - 1.0, max(ys) + 1.0)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _set_cell(f: Framework, s: ArgSet) -> str:
    return "{" + ",".join(f.labels(s)) + "}"


def write_initial_sets_csv(f: Framework, path: Path) -> None:
    with path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["set", "class", "conflicts", "scc"])
        for info in enumerate_initial_sets(f):
            writer.writerow(
                [
                    _set_cell(f, info.arguments),
                    info.kind.value,
                    ";".join(sorted(_set_cell(f, c) for c in info.conflicts)),
                    info.scc_id,
                ]
            )


def write_extensions_csv(f: Framework, spec: SemanticsSpec, path: Path) -> None:
    witnesses = enumerate_extensions(f, spec, with_witnesses=True)
    with path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["extension", "witness_sequence"])
        for ext in sorted(witnesses, key=f.labels):
            seq = witnesses[ext]
            writer.writerow(
                [
                    _set_cell(f, ext),
                    " -> ".join(_set_cell(f, s) for s, _ in seq.steps),
                ]
            )


def write_report(
    f: Framework, out_dir: Path, spec: SemanticsSpec | None = None
) -> list[Path]:
    """Write framework.png and initial_sets.csv (plus extensions.csv when a
    semantics is given) into ``out_dir``; returns the created paths."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    created = []
    figure = out_dir / "framework.png"
    draw_framework(f, figure)
    created.append(figure)
    table = out_dir / "initial_sets.csv"
    write_initial_sets_csv(f, table)
    created.append(table)
    if spec is not None:
        ext_table = out_dir / "extensions.csv"
        write_extensions_csv(f, spec, ext_table)
        created.append(ext_table)
    return created
