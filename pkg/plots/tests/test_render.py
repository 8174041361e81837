import os

import pytest

from braidplots import PlotSpec, read_rows, render

DATA = os.path.join(os.path.dirname(__file__), "data")


def data_path(name):
    return os.path.join(DATA, name)


def test_plotspec_rejects_unknown_kind(tmp_path):
    with pytest.raises(ValueError):
        PlotSpec("histogram", "in.csv", str(tmp_path / "out.svg"))


def test_read_rows_scatter():
    header, rows = read_rows("scatter", data_path("scatter_sample.csv"))
    assert header == ["garside_length", "half_projlen"]
    assert len(rows) == 48
    assert all(length >= 1 and half >= 0 for length, half in rows)


def test_read_rows_rejects_wrong_header(tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("x,y\n1,2\n")
    with pytest.raises(ValueError, match="schema"):
        read_rows("scatter", bad)


def test_read_rows_rejects_non_numeric(tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("garside_length,half_projlen\n1,abc\n")
    with pytest.raises(ValueError, match="non-numeric"):
        read_rows("scatter", bad)


def test_read_rows_rejects_ragged_rows(tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("garside_length,half_projlen\n1,2,3\n")
    with pytest.raises(ValueError, match="columns"):
        read_rows("scatter", bad)


def test_read_rows_rejects_empty_file(tmp_path):
    bad = tmp_path / "empty.csv"
    bad.write_text("")
    with pytest.raises(ValueError, match="header"):
        read_rows("scatter", bad)


def test_render_scatter_with_diagonal(tmp_path):
    out = tmp_path / "scatter.svg"
    info = render(PlotSpec("scatter", data_path("scatter_sample.csv"), str(out)))
    assert out.exists() and out.stat().st_size > 0
    assert info["format"] == "svg" and info["diagonal"]
    (series,) = info["series"]
    assert len(series["x"]) == 48
    text = out.read_text()
    assert "#ff0000" in text  # the y=x reference line


def test_render_trajectory_final_point(tmp_path):
    out = tmp_path / "traj.svg"
    info = render(PlotSpec("trajectory", data_path("trajectory_gl54.csv"), str(out)))
    (series,) = info["series"]
    assert len(series["x"]) == 54
    assert (series["x"][-1], series["y"][-1]) == (54.0, 0.0)
    assert out.exists() and out.stat().st_size > 0


def test_render_min_projlen_single_run(tmp_path):
    out = tmp_path / "min.svg"
    info = render(PlotSpec("min-projlen", data_path("min_projlen_mod2.csv"), str(out)))
    (series,) = info["series"]
    assert series["label"] is None
    assert series["x"] == [float(x) for x in range(1, 9)]
    assert series["y"][-1] == 0.0


def test_render_min_projlen_one_polyline_per_modulus(tmp_path):
    out = tmp_path / "multi.svg"
    info = render(PlotSpec("min-projlen", data_path("min_projlen_multi.csv"), str(out)))
    labels = [s["label"] for s in info["series"]]
    assert labels == ["mod 2", "mod 3"]
    mod2, mod3 = info["series"]
    assert mod2["y"][-1] == 0.0 and len(mod2["x"]) == 8
    assert len(mod3["x"]) == 24 and mod3["y"][-1] == 0.0


def test_render_empty_body_gives_axes_only(tmp_path):
    empty = tmp_path / "empty.csv"
    empty.write_text("garside_length,half_projlen\n")
    out = tmp_path / "empty.svg"
    info = render(PlotSpec("scatter", str(empty), str(out)))
    assert out.exists() and out.stat().st_size > 0
    assert not info["diagonal"]
    assert info["series"][0]["x"] == []


def test_render_svg_is_byte_deterministic(tmp_path):
    blobs = []
    for name in ("a.svg", "b.svg"):
        out = tmp_path / name
        render(PlotSpec("trajectory", data_path("trajectory_gl54.csv"), str(out)))
        blobs.append(out.read_bytes())
    assert blobs[0] == blobs[1]


def test_render_png_flag(tmp_path):
    out = tmp_path / "scatter.png"
    info = render(PlotSpec("scatter", data_path("scatter_sample.csv"), str(out), png=True))
    assert info["format"] == "png"
    assert out.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"
    # --png wins even with a vector suffix
    forced = tmp_path / "forced.svg"
    render(PlotSpec("scatter", data_path("scatter_sample.csv"), str(forced), png=True))
    assert forced.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_render_suffix_fallback_is_svg(tmp_path):
    out = tmp_path / "noext"
    info = render(PlotSpec("trajectory", data_path("trajectory_gl54.csv"), str(out)))
    assert info["format"] == "svg"
    assert b"<svg" in out.read_bytes()[:300]


def test_axis_label_overrides(tmp_path):
    out = tmp_path / "labeled.svg"
    render(
        PlotSpec(
            "scatter",
            data_path("scatter_sample.csv"),
            str(out),
            xlabel="number of factors",
            ylabel="spread / 2",
        )
    )
    text = out.read_text()
    assert "number of factors" in text and "spread / 2" in text
