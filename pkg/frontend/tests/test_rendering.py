"""Chart rendering: selection, grouping, files on disk, documented errors."""

from pathlib import Path

import pytest

from ciplots import COLUMNS, PlotSpec, Y_DEFAULTS, render

GOLDEN = Path(__file__).parent / "data" / "golden.csv"


def test_spec_defaults_follow_the_motifs_figure_of_merit():
    assert PlotSpec(motif="count").resolve_y() == "rate"
    assert PlotSpec(motif="reduce").resolve_y() == "rate"
    assert PlotSpec(motif="scan").resolve_y() == "seconds"
    assert PlotSpec(motif="fill").resolve_y() == "seconds"
    assert PlotSpec(motif="unknown").resolve_y() == "seconds"
    assert PlotSpec(motif="count", y_axis="seconds").resolve_y() == "seconds"
    assert set(Y_DEFAULTS) == {"count", "scan", "fill", "reduce"}


def test_spec_validation():
    with pytest.raises(ValueError, match="non-empty"):
        PlotSpec(motif="")
    with pytest.raises(ValueError, match="x_axis"):
        PlotSpec(motif="scan", x_axis="bogus")
    with pytest.raises(ValueError, match="series_key"):
        PlotSpec(motif="scan", series_key="bogus")
    with pytest.raises(ValueError, match="y_axis"):
        PlotSpec(motif="scan", y_axis="minutes")


def test_render_writes_png_and_svg(tmp_path):
    result = render(GOLDEN, PlotSpec(motif="scan", out_dir=tmp_path))
    names = sorted(p.name for p in result.files)
    assert names == ["scan_seconds.png", "scan_seconds.svg"]
    for p in result.files:
        assert p.exists() and p.stat().st_size > 0


def test_render_groups_one_series_per_variant(tmp_path):
    result = render(GOLDEN, PlotSpec(motif="count", out_dir=tmp_path))
    assert result.points == {"bitrep_only": 2, "combined": 2, "mbs_only": 2}


def test_render_is_deterministic_over_reruns(tmp_path):
    spec = PlotSpec(motif="reduce", out_dir=tmp_path)
    first = render(GOLDEN, spec)
    second = render(GOLDEN, spec)
    assert first.points == second.points
    assert first.files == second.files


def test_y_override_names_the_files(tmp_path):
    result = render(GOLDEN, PlotSpec(motif="count", y_axis="seconds", out_dir=tmp_path))
    assert sorted(p.name for p in result.files) == ["count_seconds.png", "count_seconds.svg"]


def test_linear_axes_render(tmp_path):
    result = render(GOLDEN, PlotSpec(motif="fill", loglog=False, out_dir=tmp_path))
    assert result.points == {"parallel": 1, "serial": 1}


def test_out_dir_is_created(tmp_path):
    nested = tmp_path / "a" / "b"
    result = render(GOLDEN, PlotSpec(motif="scan", out_dir=nested))
    assert all(p.parent == nested and p.exists() for p in result.files)


def test_unknown_motif_is_a_no_data_error(tmp_path):
    with pytest.raises(ValueError, match="no data.*'warp'.*motifs present: count, scan, fill, reduce"):
        render(GOLDEN, PlotSpec(motif="warp", out_dir=tmp_path))


def test_header_only_csv_is_a_no_data_error(tmp_path):
    p = tmp_path / "empty.csv"
    p.write_text(",".join(COLUMNS) + "\n")
    with pytest.raises(ValueError, match="no data"):
        render(p, PlotSpec(motif="scan", out_dir=tmp_path))


def test_unwritable_out_dir_raises_oserror(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("")
    with pytest.raises(OSError):
        render(GOLDEN, PlotSpec(motif="scan", out_dir=blocker / "sub"))
