"""Tests des presets, des balayages et des sorties (tables, manifeste, archives)."""

import copy
import math
import os

import numpy as np
import pandas as pd
import pytest

from main import main
from src.led.errors import ConfigError, SweepError
from src.led.runs import get_preset, list_presets, parse_grid, run_preset, sweep
from src.led.runs.error_reporting import generate_error_report
from src.led.runs.output_structure import MANIFEST_FILE, TABLE_COLUMNS
from src.led.runs.input_structure import DEFAULT_CONFIG
from src.led.runs.presets import FIGURE_CURVES
from src.led.runs.write_outputs import read_manifest, read_table, write_table
from src.led.pf import PFModel
from src.led.spectra import SpectrumVariant

NP = SpectrumVariant.NON_PERTURBATIVE


def _csv_files(directory):
    return sorted(name for name in os.listdir(directory) if name.endswith(".csv"))


def test_presets_cover_every_figure():
    assert [preset.name for preset in list_presets()] == [
        "fig2", "fig3", "fig4a", "fig4b", "fig5", "fig6", "fig7a", "fig7b"
    ]
    assert get_preset("fig5").bundle == "sr"
    assert get_preset("fig4a").curves == ((2.0, 200),)
    with pytest.raises(ConfigError):
        get_preset("fig9")


def test_superradiant_preset_exchanges_rates(small_config):
    from src.led.runs.run_settings import device_from_config

    base = device_from_config(small_config)
    params = get_preset("fig5").device_for(base, 2.0, 200)
    assert (params.kappa, params.gamma_perp, params.n_c, params.N0) == (5e11, 5e10, 2.0, 200)


def test_table_round_trip(tmp_path):
    df = pd.DataFrame({
        "P_or_omega": [0.1, 1.0 / 3.0],
        "value": [1.2345678901234567e15, math.nan],
        "N_e": [3.0, math.nan],
        "n": [1e-7, math.nan],
        "delta2_Ne": [2.9, math.nan],
        "stability_margin": [0.99, math.nan],
        "narrowness_ratio": [0.08, math.nan],
        "residual": [1e-17, math.nan],
        "status": ["ok", "error:NoRoot"]
    })
    path = write_table(df, str(tmp_path / "table.csv"))
    pd.testing.assert_frame_equal(read_table(path), df[TABLE_COLUMNS])


def test_fig2_writes_one_table_per_curve_and_variant(small_config):
    written, issues = run_preset("fig2", small_config)
    out_dir = os.path.join(small_config["run"]["out"], "fig2")
    names = _csv_files(out_dir)
    assert len(names) == 3 * len(FIGURE_CURVES)
    assert "fig2_nc2_N200_NonPerturbative.csv" in names
    assert "fig2_nc2_N200_R.csv" in names
    assert issues == []

    ratio = read_table(os.path.join(out_dir, "fig2_nc100_N100_R.csv"))
    assert list(ratio["P_or_omega"]) == [0.1, 1.0]
    assert (ratio["value"] >= 1.0).all()

    manifest = read_manifest(os.path.join(out_dir, MANIFEST_FILE))
    assert manifest["preset"] == "fig2"
    assert manifest["pf_model"] == "binomial"
    assert "run" not in manifest["config"]
    assert len(manifest["tables"]) == len(names)
    assert os.path.join(out_dir, MANIFEST_FILE) in written


def test_rerun_is_bit_identical(small_config, tmp_path):
    first = copy.deepcopy(small_config)
    second = copy.deepcopy(small_config)
    first["run"]["out"] = str(tmp_path / "first")
    second["run"]["out"] = str(tmp_path / "second")
    run_preset("fig5", first)
    run_preset("fig5", second)

    first_dir = os.path.join(first["run"]["out"], "fig5")
    second_dir = os.path.join(second["run"]["out"], "fig5")
    names = _csv_files(first_dir) + [MANIFEST_FILE]
    assert _csv_files(first_dir) == _csv_files(second_dir)
    for name in names:
        with open(os.path.join(first_dir, name), 'rb') as a, open(os.path.join(second_dir, name), 'rb') as b:
            assert a.read() == b.read(), name


def test_disabling_dispersion_gives_identical_tables(small_config):
    small_config["pf"]["model"] = "none"
    run_preset("fig2", small_config)
    out_dir = os.path.join(small_config["run"]["out"], "fig2")
    for n_c, N0 in FIGURE_CURVES:
        curve = f"nc{n_c:g}_N{N0}"
        with_pf = read_table(os.path.join(out_dir, f"fig2_{curve}_NonPerturbative.csv"))
        without = read_table(os.path.join(out_dir, f"fig2_{curve}_ZeroOrder.csv"))
        np.testing.assert_array_equal(with_pf["value"], without["value"])
        ratio = read_table(os.path.join(out_dir, f"fig2_{curve}_R.csv"))
        assert (ratio["value"] == 1.0).all()


def test_previous_outputs_are_archived(small_config):
    small_config["pump"]["grid"] = [1.0]
    run_preset("fig4a", small_config)
    run_preset("fig4a", small_config)
    archive_root = os.path.join(small_config["run"]["out"], "archive")
    archives = os.listdir(archive_root)
    assert len(archives) == 1
    assert archives[0].startswith("fig4a_")
    assert MANIFEST_FILE in os.listdir(os.path.join(archive_root, archives[0]))


def test_superradiant_spectra_show_rabi_splitting(small_config):
    small_config["spectrum"] = copy.deepcopy(DEFAULT_CONFIG["spectrum"])
    run_preset("fig6", small_config)
    manifest = read_manifest(os.path.join(small_config["run"]["out"], "fig6", MANIFEST_FILE))
    assert len(manifest["peaks"]) == 2 * len(FIGURE_CURVES)
    assert manifest["peaks"]["fig6_nc2_N200_NonPerturbative"]["is_split"] is True
    spectrum = read_table(os.path.join(small_config["run"]["out"], "fig6", "fig6_nc2_N200_NonPerturbative.csv"))
    omega = spectrum["P_or_omega"].to_numpy()
    np.testing.assert_array_equal(omega, -omega[::-1])


def test_parse_grid():
    assert parse_grid(["P=0.1,1", "n_c=100,50"]) == {"P": [0.1, 1.0], "n_c": [100.0, 50.0]}
    with pytest.raises(SweepError):
        parse_grid(["P"])
    with pytest.raises(SweepError):
        parse_grid(["P=a,b"])


def test_single_point_sweep(small_config):
    written, issues, rows = sweep({"P": [1.0]}, NP, PFModel(), small_config)
    assert rows == 1
    assert issues == []
    assert _csv_files(os.path.join(small_config["run"]["out"], "sweep")) == ["sweep_base_NonPerturbative.csv"]


def test_sweep_cardinality(small_config):
    grid = {"P": [0.2, 0.6, 1.0, 1.4], "n_c": [100.0, 50.0, 10.0]}
    _, _, rows = sweep(grid, NP, PFModel(), small_config)
    assert rows == 12
    assert len(_csv_files(os.path.join(small_config["run"]["out"], "sweep"))) == 3


@pytest.mark.parametrize("grid", [{}, {"P": []}, {"P": [1.0], "n_c": []}])
def test_empty_sweep(small_config, grid):
    with pytest.raises(SweepError, match="empty sweep"):
        sweep(grid, NP, PFModel(), small_config)


def test_unknown_sweep_key(small_config):
    with pytest.raises(SweepError):
        sweep({"temperature": [300.0]}, NP, PFModel(), small_config)


def test_error_report_only_for_flagged_rows(tmp_path):
    clean = pd.DataFrame({column: [1.0] for column in TABLE_COLUMNS[:-1]} | {"status": ["ok"]})
    assert not generate_error_report({"clean": clean}, str(tmp_path / "report.xlsx"))

    flagged = pd.concat([clean, clean.assign(status="warning:narrowness")], ignore_index=True)
    path = tmp_path / "report.xlsx"
    assert generate_error_report({"clean": clean, "flagged": flagged}, str(path))
    summary = pd.read_excel(path, sheet_name="Résumé")
    assert list(summary["Table"]) == ["flagged", "TOTAL"]
    assert int(summary["Avertissements"].iloc[-1]) == 1


def test_cli_list_presets(capsys):
    assert main(["list-presets"]) == 0
    assert "fig7b" in capsys.readouterr().out


def test_cli_usage_errors(tmp_path):
    common = ["--out", str(tmp_path / "out"), "--set", f"run.log_dir={tmp_path / 'logs'}"]
    assert main(["run", "--preset", "fig9"] + common) == 2
    assert main(["sweep", "--grid", "P="] + common) == 2
    assert main(["run", "--preset", "fig2", "--set", "pf.model=poisson"] + common) == 2


def test_cli_sweep(tmp_path):
    out = tmp_path / "out"
    args = ["sweep", "--grid", "P=0.5,1", "--variant", "zero-order", "--out", str(out),
            "--set", f"run.log_dir={tmp_path / 'logs'}", "--no-archive"]
    assert main(args) == 0
    assert _csv_files(out / "sweep") == ["sweep_base_ZeroOrder.csv"]


def test_cli_run_above_semiclassical_threshold_pump(tmp_path):
    out = tmp_path / "out"
    args = ["run", "--preset", "fig2", "--set", "pump.grid=[2.0]", "--out", str(out),
            "--set", f"run.log_dir={tmp_path / 'logs'}", "--no-archive"]
    assert main(args) == 0

    names = _csv_files(out / "fig2")
    assert len(names) == 3 * len(FIGURE_CURVES)
    for name in names:
        table = read_table(str(out / "fig2" / name))
        assert list(table["P_or_omega"]) == [2.0]
        assert not table["status"].str.startswith("error:").any(), name


def test_cli_both_backends_report_deviation(tmp_path, capsys):
    out = tmp_path / "out"
    args = ["run", "--preset", "fig4a", "--quad", "both", "--set", "pump.grid=[0.5]", "--out", str(out),
            "--set", f"run.log_dir={tmp_path / 'logs'}", "--no-archive"]
    assert main(args) == 0

    manifest = read_manifest(str(out / "fig4a" / MANIFEST_FILE))
    assert manifest["config"]["solver"]["quad_backend"] == "both"
    entries = {entry["file"]: entry for entry in manifest["tables"]}
    deviation = entries["fig4a_nc2_N200_ZeroOrder.csv"]["max_quad_deviation"]
    assert deviation is not None
    assert 0.0 <= deviation < 1e-6
    assert all(entry["max_quad_deviation"] is None or entry["max_quad_deviation"] >= 0.0 for entry in entries.values())
    assert "Écart max résidus/quadrature" in capsys.readouterr().out


def test_residue_backend_leaves_deviation_empty(small_config):
    small_config["pump"]["grid"] = [0.5]
    run_preset("fig4a", small_config)
    manifest = read_manifest(os.path.join(small_config["run"]["out"], "fig4a", MANIFEST_FILE))
    assert all(entry["max_quad_deviation"] is None for entry in manifest["tables"])
