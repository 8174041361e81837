"""Figure rendering for braidsearch CSV artifacts."""

from .render import AXIS_LABELS, SCHEMAS, PlotSpec, read_rows, render

__all__ = ["AXIS_LABELS", "SCHEMAS", "PlotSpec", "read_rows", "render"]
