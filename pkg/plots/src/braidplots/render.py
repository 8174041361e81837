"""Render search artifacts (CSV) as figures.

Three kinds are supported, one per CSV schema:

- scatter:      garside_length,half_projlen      blue points + red y=x line
- trajectory:   prefix_index,garside_length,projlen   blue dots per prefix
- min-projlen:  level,min_projlen[,modulus]      one polyline per modulus

Rendering is a pure function of the CSV bytes: a fixed hash salt and
stripped date metadata make repeated SVG renders byte-identical.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
matplotlib.rcParams["svg.hashsalt"] = "braidplots"

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

SCHEMAS = {
    "scatter": ("garside_length", "half_projlen"),
    "trajectory": ("prefix_index", "garside_length", "projlen"),
    "min-projlen": ("level", "min_projlen"),
}
AXIS_LABELS = {
    "scatter": ("Garside length", "projlen / 2"),
    "trajectory": ("Garside length", "projlen"),
    "min-projlen": ("level", "min projlen"),
}
VECTOR_FORMATS = {"svg", "pdf"}


@dataclass(frozen=True)
class PlotSpec:
    kind: str
    input_path: str
    output_path: str
    xlabel: str | None = None
    ylabel: str | None = None
    png: bool = False

    def __post_init__(self):
        if self.kind not in SCHEMAS:
            raise ValueError(f"unknown plot kind {self.kind!r}; expected one of {sorted(SCHEMAS)}")


def read_rows(kind: str, path) -> tuple[list[str], list[tuple[float, ...]]]:
    """Header and numeric rows of a CSV, validated against the kind's schema."""
    expected = SCHEMAS[kind]
    with open(path, newline="") as handle:
        reader = csv.reader(handle)
        try:
            header = next(reader)
        except StopIteration:
            raise ValueError(f"{path}: empty file, expected header {','.join(expected)}")
        optional_modulus = kind == "min-projlen" and header == [*expected, "modulus"]
        if tuple(header) != expected and not optional_modulus:
            raise ValueError(
                f"{path}: header {','.join(header)!r} does not match "
                f"the {kind} schema {','.join(expected)!r}"
            )
        rows = []
        for lineno, row in enumerate(reader, 2):
            if len(row) != len(header):
                raise ValueError(f"{path}:{lineno}: expected {len(header)} columns, got {len(row)}")
            try:
                rows.append(tuple(float(cell) for cell in row))
            except ValueError:
                raise ValueError(f"{path}:{lineno}: non-numeric cell in {row!r}")
    return header, rows


def _series(kind: str, header: list[str], rows: list[tuple[float, ...]]):
    if kind == "scatter":
        return [{"label": None, "x": [r[0] for r in rows], "y": [r[1] for r in rows]}]
    if kind == "trajectory":
        # dots at (garside_length, projlen); prefix_index only orders the rows
        return [{"label": None, "x": [r[1] for r in rows], "y": [r[2] for r in rows]}]
    if len(header) == 2:
        return [{"label": None, "x": [r[0] for r in rows], "y": [r[1] for r in rows]}]
    moduli = sorted({r[2] for r in rows})
    return [
        {
            "label": f"mod {int(m)}",
            "x": [r[0] for r in rows if r[2] == m],
            "y": [r[1] for r in rows if r[2] == m],
        }
        for m in moduli
    ]


def render(spec: PlotSpec) -> dict:
    """Draw the figure and return what was plotted.

    The returned dict holds the series data ({"label", "x", "y"} per
    series) so callers can inspect the plotted points without parsing the
    image back.
    """
    header, rows = read_rows(spec.kind, spec.input_path)
    series = _series(spec.kind, header, rows)
    xlabel, ylabel = AXIS_LABELS[spec.kind]

    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    try:
        diagonal = False
        if spec.kind == "scatter":
            for s in series:
                ax.plot(s["x"], s["y"], ".", color="tab:blue", markersize=4)
            if rows:
                top = max(max(s["x"]) for s in series) + 1
                ax.plot([0, top], [0, top], color="red", linewidth=1)
                diagonal = True
        elif spec.kind == "trajectory":
            for s in series:
                ax.plot(s["x"], s["y"], ".", color="tab:blue", markersize=6)
        else:
            for s in series:
                ax.plot(s["x"], s["y"], linewidth=1.5, label=s["label"])
            if any(s["label"] for s in series):
                ax.legend()
        ax.set_xlabel(spec.xlabel or xlabel)
        ax.set_ylabel(spec.ylabel or ylabel)

        fmt = "png" if spec.png else _format_for(spec.output_path)
        metadata = {"Date": None} if fmt == "svg" else None
        fig.savefig(spec.output_path, format=fmt, metadata=metadata)
    finally:
        plt.close(fig)
    return {
        "kind": spec.kind,
        "output_path": str(spec.output_path),
        "format": fmt,
        "series": series,
        "diagonal": diagonal,
    }


def _format_for(path) -> str:
    suffix = Path(path).suffix.lstrip(".").lower()
    if suffix in VECTOR_FORMATS or suffix == "png":
        return suffix
    return "svg"
