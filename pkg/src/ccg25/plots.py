"""Matplotlib rendering for the scan and level-set reports.

Figures are written next to the delimited output with deterministic
content: fixed figure geometry, no timestamps in the PNG metadata.
"""

from __future__ import annotations

from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

_SAVE_KW = dict(dpi=110, metadata={"Software": None})


def plot_scan(samples: Sequence, path: str, g: float) -> None:
    fig, ax = plt.subplots(figsize=(6.0, 4.2))
    ins = [s for s in samples if s.in_s]
    outs = [s for s in samples if not s.in_s]
    if outs:
        ax.scatter([s.t0 for s in outs], [s.t1 for s in outs], s=14, marker="x",
                   color="#888888", label="root, not in S")
    if ins:
        ones = [s for s in ins if s.count == 1]
        twos = [s for s in ins if s.count != 1]
        if twos:
            ax.scatter([s.t0 for s in twos], [s.t1 for s in twos], s=18,
                       color="#1f77b4", label="in S (two curves)")
        if ones:
            ax.scatter([s.t0 for s in ones], [s.t1 for s in ones], s=42, marker="*",
                       color="#d62728", label="in S (unique curve)")
    ax.set_xlabel("t0")
    ax.set_ylabel("t1")
    ax.set_title(f"solution-set scan at g = {g:.6g}")
    ax.legend(loc="best", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, **_SAVE_KW)
    plt.close(fig)


def plot_levelset(rows: Sequence[tuple[float, float, float]], path: str) -> None:
    fig, ax = plt.subplots(figsize=(6.0, 4.2))
    s = [r[0] for r in rows]
    ax.plot(s, [r[1] for r in rows], color="#8c564b", label="upper branch")
    ax.plot(s, [r[2] for r in rows], color="#2ca02c", label="lower branch")
    ax.plot([1.0, 1.0], [1.0 / 16.0, 1.0], color="#1f77b4", linewidth=2.2,
            label="segment t0 = 1")
    ax.set_xlabel("t0")
    ax.set_ylabel("t1")
    ax.set_title("the g = 1 level set")
    ax.legend(loc="best", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, **_SAVE_KW)
    plt.close(fig)
