import math

import pytest

from mergeinsertion.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_sort_from_file(tmp_path, capsys):
    src = tmp_path / "input.txt"
    src.write_text("5\n3\n9\n1\n7\n")
    code, out, err = run_cli(capsys, "sort", str(src))
    assert code == 0
    assert out.splitlines() == ["1", "3", "5", "7", "9"]
    assert "comparisons:" in err


def test_sort_rejects_duplicates(tmp_path, capsys):
    src = tmp_path / "input.txt"
    src.write_text("2\n2\n")
    code, _out, err = run_cli(capsys, "sort", str(src))
    assert code == 2
    assert "error:" in err


def test_exact_table_matches_published_values(capsys):
    code, out, _err = run_cli(capsys, "exact", "--n-max", "8")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n\tavg_times_factorial\tavg\tnormalized"
    scaled = [int(line.split("\t")[1]) for line in lines[1:]]
    assert scaled == [0, 2, 16, 112, 832, 6912, 62784, 623232]


def test_count_emits_tsv(capsys):
    code, out, err = run_cli(capsys, "count", "--n", "8,16", "--trials", "12", "--seed", "5")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "num_elements\ttrials\tmean\tstddev\tnormalized"
    assert len(lines) == 3
    assert "generator=pcg64" in err
    first = lines[1].split("\t")
    assert first[0] == "8" and first[1] == "12"
    assert float(first[2]) >= 7  # at least n - 1 comparisons


def test_count_exhaustive_matches_exact(capsys):
    code, out, _err = run_cli(capsys, "count", "--n", "5", "--exhaustive")
    assert code == 0
    row = out.splitlines()[1].split("\t")
    assert row[1] == "120"
    assert float(row[2]) == pytest.approx(832 / 120, abs=1e-12)


def test_dist_table_shape(capsys):
    code, out, _err = run_cli(capsys, "dist", "--k", "4", "--var", "y", "--i", "1", "--i", "6")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "j\tY1\tY6"
    # final row: the first inserted member always sees 15 elements
    last = lines[-1].split("\t")
    assert last[0] == "15" and float(last[2]) == 1.0
    total = sum(float(line.split("\t")[1]) for line in lines[1:])
    assert total == pytest.approx(1.0, abs=1e-12)


def test_dist_mean_table(capsys):
    code, out, _err = run_cli(capsys, "dist", "--k", "4", "--var", "mean")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "i\tEYi"
    assert len(lines) == 7
    assert float(lines[-1].split("\t")[1]) == 15.0


def test_bound_table(capsys):
    code, out, _err = run_cli(capsys, "bound", "--n", "64,256")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "num_elements\tlower\tupper\tc_term\tworst_case"
    for line in lines[1:]:
        n, lower, upper, c_term, _worst = line.split("\t")
        assert float(lower) <= float(upper)
        assert float(c_term) <= -1.4005


def test_sweep_factor_cli(capsys):
    code, out, _err = run_cli(
        capsys, "sweep-factor", "--n", "32", "--factors", "1.0,1.03", "--trials", "10"
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "num_elements\t1.0\t1.03"
    assert len(lines) == 2


def test_compare_algos_cli(capsys):
    code, out, _err = run_cli(capsys, "compare-algos", "--n", "21", "--trials", "10")
    assert code == 0
    assert out.splitlines()[0] == "num_elements\tmi\tcombined\tcombined-f1.03"


def test_bad_config_exit_code(capsys):
    code, _out, err = run_cli(capsys, "count", "--n", "8", "--factor", "3")
    assert code == 2
    assert "error:" in err


def test_missing_sizes_exit_code(capsys):
    code, _out, err = run_cli(capsys, "count")
    assert code == 2
    assert "no input sizes" in err


def test_out_file(tmp_path, capsys):
    dest = tmp_path / "table.tsv"
    code, out, _err = run_cli(capsys, "exact", "--n", "4", "--out", str(dest))
    assert code == 0
    assert out == ""
    assert dest.read_text().splitlines()[1].split("\t")[1] == "112"


def test_normalized_column_definition(capsys):
    code, out, _err = run_cli(capsys, "exact", "--n", "8")
    row = out.splitlines()[1].split("\t")
    avg, normalized = float(row[2]), float(row[3])
    assert normalized == pytest.approx((avg - 8 * math.log2(8)) / 8, abs=1e-12)
