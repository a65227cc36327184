"""Writers for sweep outputs: delimited records, manifest, and scatter plots.

records.csv / front.csv round-trip exactly (17 significant digits) and the
SVG writer emits one literal circle element per front point with fixed
formatting, so identical sweeps produce identical bytes. The PNG renderer is
the optional raster companion for quick looks.
"""

from __future__ import annotations

import json
from collections.abc import Sequence
from dataclasses import asdict
from typing import TYPE_CHECKING

import numpy as np

from .errors import UnsupportedPlotError

if TYPE_CHECKING:
    from .coa import CoaConfig
    from .epsilon import EpsilonGrid, SweepRecord

SCHEMA_VERSION = 1
_SVG_W, _SVG_H = 640, 480
_MARGIN_L, _MARGIN_R, _MARGIN_T, _MARGIN_B = 70, 24, 24, 56


def _g17(v: float) -> str:
    return format(float(v), ".17g")


def _eps_cell(eps) -> str:
    if isinstance(eps, tuple):
        return ";".join(_g17(e) for e in eps)
    return _g17(eps)


def csv_header(n_vars: int, n_objectives: int) -> str:
    cols = (["epsilon"]
            + [f"x{i + 1}" for i in range(n_vars)]
            + [f"f{j + 1}" for j in range(n_objectives)]
            + ["feasible", "total_violation"])
    return ",".join(cols)


def write_csv(records: Sequence["SweepRecord"], path: str,
              n_vars: int, n_objectives: int) -> None:
    """One row per record; an empty sequence writes the header only."""
    lines = [csv_header(n_vars, n_objectives)]
    for r in records:
        best = r.run.best
        cells = ([_eps_cell(r.epsilon)]
                 + [_g17(v) for v in best.position]
                 + [_g17(v) for v in r.objective_values]
                 + ["true" if r.feasible else "false",
                    _g17(best.record.total_violation)])
        lines.append(",".join(cells))
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write("\n".join(lines) + "\n")


def build_manifest(*, problem_id: int, variant: str, problem_name: str,
                   keep_index: int, grid: "EpsilonGrid", config: "CoaConfig",
                   duration_ms: float, records_total: int, feasible_records: int,
                   front_size: int, spacing_value: float | None,
                   generational_distance_value: float | None,
                   filtered: bool, workers: int) -> dict:
    """Everything needed to reproduce and sanity-check one sweep, key order fixed."""
    count = len(grid.values)
    return {
        "schema_version": SCHEMA_VERSION,
        "tool": {"name": "coaeps", "version": _tool_version()},
        "problem": {"id": problem_id, "variant": variant, "name": problem_name},
        "keep_index": keep_index,
        "grid": {
            "low": grid.lower,
            "high": grid.upper,
            "pace": grid.pace,
            "count": count,
            "count_near_400": abs(count - 400) <= 1,
        },
        "coa_config": asdict(config),
        "seed": int(config.seed),
        "filtered": filtered,
        "workers": workers,
        "duration_ms": duration_ms,
        "counts": {
            "records": records_total,
            "feasible_records": feasible_records,
            "front": front_size,
        },
        "metrics": {
            "spacing": spacing_value,
            "generational_distance": generational_distance_value,
        },
    }


def _tool_version() -> str:
    from . import __version__
    return __version__


def write_manifest(manifest: dict, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        json.dump(manifest, fh, indent=2)
        fh.write("\n")


def _data_range(front_xy: np.ndarray, reference_xy: np.ndarray | None,
                ) -> tuple[float, float, float, float]:
    stacks = [a for a in (front_xy, reference_xy) if a is not None and len(a)]
    if not stacks:
        return 0.0, 1.0, 0.0, 1.0
    xy = np.concatenate(stacks, axis=0)
    x0, y0 = xy.min(axis=0)
    x1, y1 = xy.max(axis=0)
    if x1 - x0 <= 0:
        x0, x1 = x0 - 1.0, x1 + 1.0
    if y1 - y0 <= 0:
        y0, y1 = y0 - 1.0, y1 + 1.0
    return float(x0), float(x1), float(y0), float(y1)


def _as_xy(points, what: str) -> np.ndarray:
    rows = []
    for p in points:
        if hasattr(p, "values"):
            rows.append(np.asarray(p.values, dtype=float))
        elif hasattr(p, "objective_values"):
            rows.append(np.asarray(p.objective_values, dtype=float))
        else:
            rows.append(np.asarray(p, dtype=float))
    a = np.asarray(rows, dtype=float)
    if a.size == 0:
        return a.reshape(0, 2)
    if a.ndim != 2 or a.shape[1] != 2:
        raise UnsupportedPlotError(f"{what} must be two-objective points")
    return a


def render_svg_scatter(front, reference=None, path: str = "front.svg") -> None:
    """Deterministic two-objective scatter: circles for the front, an optional
    reference polyline, axes labeled f1/f2 with min/max ticks."""
    front_xy = _as_xy(front, "front")
    ref_xy = _as_xy(reference, "reference") if reference is not None else None
    x0, x1, y0, y1 = _data_range(front_xy, ref_xy)
    px0, px1 = _MARGIN_L, _SVG_W - _MARGIN_R
    py0, py1 = _SVG_H - _MARGIN_B, _MARGIN_T  # y grows upward in data space

    def sx(v: float) -> str:
        return f"{px0 + (v - x0) / (x1 - x0) * (px1 - px0):.3f}"

    def sy(v: float) -> str:
        return f"{py0 + (v - y0) / (y1 - y0) * (py1 - py0):.3f}"

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SVG_W}" '
        f'height="{_SVG_H}" viewBox="0 0 {_SVG_W} {_SVG_H}">',
        f'<rect x="0" y="0" width="{_SVG_W}" height="{_SVG_H}" fill="white"/>',
        f'<line x1="{px0}" y1="{py0}" x2="{px1}" y2="{py0}" stroke="black"/>',
        f'<line x1="{px0}" y1="{py0}" x2="{px0}" y2="{py1}" stroke="black"/>',
        f'<text x="{(px0 + px1) // 2}" y="{_SVG_H - 12}" text-anchor="middle" '
        f'font-size="14">f1</text>',
        f'<text x="16" y="{(py0 + py1) // 2}" text-anchor="middle" '
        f'font-size="14">f2</text>',
        f'<text x="{px0}" y="{py0 + 18}" text-anchor="middle" '
        f'font-size="11">{x0:.4g}</text>',
        f'<text x="{px1}" y="{py0 + 18}" text-anchor="middle" '
        f'font-size="11">{x1:.4g}</text>',
        f'<text x="{px0 - 6}" y="{py0 + 4}" text-anchor="end" '
        f'font-size="11">{y0:.4g}</text>',
        f'<text x="{px0 - 6}" y="{py1 + 4}" text-anchor="end" '
        f'font-size="11">{y1:.4g}</text>',
    ]
    if ref_xy is not None and len(ref_xy):
        pts = " ".join(f"{sx(p[0])},{sy(p[1])}" for p in ref_xy)
        parts.append(f'<polyline points="{pts}" fill="none" stroke="#999999" '
                     f'stroke-width="1"/>')
    for p in front_xy:
        parts.append(f'<circle cx="{sx(p[0])}" cy="{sy(p[1])}" r="3" '
                     f'fill="#1f6fb4"/>')
    parts.append("</svg>")
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write("\n".join(parts) + "\n")


def render_png_scatter(front, reference=None, path: str = "front.png") -> None:
    """Raster companion plot (matplotlib, headless)."""
    from matplotlib.figure import Figure

    front_xy = _as_xy(front, "front")
    ref_xy = _as_xy(reference, "reference") if reference is not None else None
    fig = Figure(figsize=(6.4, 4.8), dpi=120)
    ax = fig.add_subplot()
    if ref_xy is not None and len(ref_xy):
        ax.plot(ref_xy[:, 0], ref_xy[:, 1], color="0.6", lw=1, label="reference")
    if len(front_xy):
        ax.scatter(front_xy[:, 0], front_xy[:, 1], s=12, color="#1f6fb4",
                   label="front")
    ax.set_xlabel("f1")
    ax.set_ylabel("f2")
    if (ref_xy is not None and len(ref_xy)) or len(front_xy):
        ax.legend(loc="best")
    fig.tight_layout()
    fig.savefig(path, format="png")
