import json

import numpy as np
import pytest

from ordinal_patterns.cli import SeriesFile, main, read_series
from ordinal_patterns.exceptions import ConfigurationError, EmptyColumnError, ParseError, SeriesIOError
from ordinal_patterns.logging_config import setup_logging


def write_csv(path, text):
    path.write_text(text)
    return str(path)


@pytest.fixture
def increasing_csv(tmp_path):
    lines = ["Date,Open"] + [f"2020-01-{i:03d},{i}" for i in range(100)]
    return write_csv(tmp_path / "increasing.csv", "\n".join(lines) + "\n")


@pytest.fixture
def walk_csv(tmp_path, random_walk):
    lines = ["value"] + [repr(float(v)) for v in random_walk[:500]]
    return write_csv(tmp_path / "walk.csv", "\n".join(lines) + "\n")


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_read_series_with_header(tmp_path):
    path = write_csv(tmp_path / "open.csv", "open\n9\n5\n")
    assert read_series(SeriesFile(path=path, column="open")).tolist() == [9.0, 5.0]


def test_read_series_by_index_without_header(tmp_path):
    path = write_csv(tmp_path / "plain.csv", "a,1.5\nb,-2\n")
    assert read_series(SeriesFile(path=path, column=1, header=False)).tolist() == [1.5, -2.0]


def test_read_series_handles_quoted_cells(tmp_path):
    path = write_csv(tmp_path / "quoted.csv", 'name,"Open"\n"x, y","1.25"\nz,2\n')
    assert read_series(SeriesFile(path=path, column="Open")).tolist() == [1.25, 2.0]


def test_read_series_reports_bad_line(tmp_path):
    path = write_csv(tmp_path / "bad.csv", "open\n1\n2\n3\n4\n5\nabc\n7\n")
    with pytest.raises(ParseError) as info:
        read_series(SeriesFile(path=path, column="open"))
    assert info.value.line == 7
    assert info.value.column == "open"


def test_read_series_reports_ragged_row(tmp_path):
    path = write_csv(tmp_path / "ragged.csv", "a,b\n1,2\n3,4,5\n6,7\n")
    with pytest.raises(ParseError) as info:
        read_series(SeriesFile(path=path, column="a"))
    assert info.value.line == 3


def test_read_series_rejects_invalid_utf8(tmp_path):
    path = tmp_path / "latin.csv"
    path.write_bytes(b"open\n1\n2\n\xff\xfe3\n")
    with pytest.raises(ParseError) as info:
        read_series(SeriesFile(path=path, column="open"))
    assert info.value.line == 4


@pytest.mark.parametrize("cell", ["", "nan", "inf"])
def test_read_series_rejects_missing_and_non_finite(tmp_path, cell):
    path = write_csv(tmp_path / "gap.csv", f"open\n1\n{cell}\n3\n")
    with pytest.raises(ParseError) as info:
        read_series(SeriesFile(path=path, column="open"))
    assert info.value.line == 3


def test_read_series_errors(tmp_path):
    with pytest.raises(SeriesIOError):
        read_series(SeriesFile(path=tmp_path / "missing.csv"))
    with pytest.raises(EmptyColumnError):
        read_series(SeriesFile(path=write_csv(tmp_path / "header.csv", "open\n"), column="open"))
    with pytest.raises(ConfigurationError):
        read_series(SeriesFile(path=write_csv(tmp_path / "one.csv", "open\n1\n"), column="close"))


def test_table_text(capsys):
    code, out, _ = run(capsys, "table", "--d", "3")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 6
    assert lines[3] == "2,3,1 | 1,1,0 | kse 4 | lehmer 3"
    assert lines[0] == "1,2,3 | 0,0,0 | kse 0 | lehmer 0"


def test_table_csv_and_json(capsys):
    _, out, _ = run(capsys, "table", "--d", "3", "--format", "csv")
    assert out.splitlines()[0] == "rank,inversion,kse,lehmer"
    assert out.splitlines()[4] == '"2,3,1","1,1,0",4,3'
    _, out, _ = run(capsys, "table", "--d", "3", "--format", "json", "--scheme", "kse")
    rows = json.loads(out)
    assert rows[2] == {"rank": [2, 1, 3], "inversion": [1, 0, 0], "kse": 1}


def test_invert(capsys):
    assert run(capsys, "invert", "--pattern", "3,2,5,1,4", "--rep", "perm", "--mode", "space")[1] == "4,1,5,2,3\n"
    assert run(capsys, "invert", "--pattern", "4,2,1,5,3", "--rep", "rank", "--mode", "time")[1] == "3,5,1,2,4\n"
    assert run(capsys, "invert", "--pattern", "0,0,0", "--rep", "inv", "--mode", "space")[1] == "2,1,0\n"


def test_invert_malformed_pattern_is_usage_error(capsys):
    code, out, err = run(capsys, "invert", "--pattern", "1,1,2", "--rep", "rank", "--mode", "space")
    assert code == 2
    assert out == ""
    assert len(err.strip().splitlines()) == 1


def test_usage_errors(capsys):
    assert run(capsys, "table")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys)[0] == 2


def test_extract_lines_and_json(capsys, tmp_path):
    path = write_csv(tmp_path / "fig.csv", "x\n9\n5\n4\n10\n8\n")
    code, out, _ = run(capsys, "extract", "--input", path, "--column", "x", "--d", "3")
    assert code == 0
    assert out == "5\n2\n1\n"
    _, out, _ = run(capsys, "extract", "--input", path, "--column", "0", "--d", "3", "--format", "json")
    assert json.loads(out)["codes"] == [5, 2, 1]


def test_extract_skip_emits_empty_lines(capsys, tmp_path):
    path = write_csv(tmp_path / "flat.csv", "x\n1\n1\n1\n2\n3\n")
    _, out, _ = run(capsys, "extract", "--input", path, "--d", "3", "--ties", "skip")
    assert out == "\n\n0\n"


def test_extract_data_error_exit_code(capsys, tmp_path):
    path = write_csv(tmp_path / "short.csv", "x\n1\n2\n")
    code, out, err = run(capsys, "extract", "--input", path, "--d", "3")
    assert code == 3
    assert out == ""
    assert err.startswith("ordinal-patterns: error:")


def test_extract_invalid_utf8_is_data_error(capsys, tmp_path):
    path = tmp_path / "latin.csv"
    path.write_bytes(b"open\n1\n2\n\xff\xfe3\n")
    code, out, err = run(capsys, "extract", "--input", str(path), "--d", "2")
    assert code == 3
    assert out == ""
    assert err.startswith("ordinal-patterns: error:")


def test_perturb_needs_seed(capsys, increasing_csv):
    assert run(capsys, "extract", "--input", increasing_csv, "--column", "Open", "--d", "3", "--ties", "perturb")[0] == 2


def test_freq_on_increasing_series(capsys, increasing_csv):
    code, out, _ = run(capsys, "freq", "--input", increasing_csv, "--column", "Open", "--d", "3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "code,pattern,count,frequency,skipped"
    assert lines[1] == '0,"1,2,3",98,1.000000,0'
    _, out, _ = run(capsys, "freq", "--input", increasing_csv, "--column", "Open", "--d", "3", "--all")
    assert len(out.splitlines()) == 7


def test_freq_from_codes_matches_direct(capsys, tmp_path, walk_csv):
    flags = ["--d", "4", "--ties", "perturb", "--seed", "99"]
    _, direct, _ = run(capsys, "freq", "--input", walk_csv, *flags, "--format", "json")
    _, codes, _ = run(capsys, "extract", "--input", walk_csv, *flags, "--format", "json")
    codes_path = write_csv(tmp_path / "codes.json", codes)
    code, from_codes, _ = run(capsys, "freq", "--from-codes", codes_path, "--format", "json")
    assert code == 0
    assert from_codes == direct


def test_freq_needs_exactly_one_source(capsys, walk_csv):
    assert run(capsys, "freq", "--d", "3")[0] == 2
    assert run(capsys, "freq", "--input", walk_csv)[0] == 2


def test_output_is_deterministic(capsys, walk_csv):
    argv = ["extract", "--input", walk_csv, "--d", "3", "--ties", "perturb", "--seed", "5"]
    first = run(capsys, *argv)[1]
    assert run(capsys, *argv, "--chunk-windows", "37", "--workers", "4")[1] == first
    assert run(capsys, *argv)[1] == first


def test_opd_command(capsys, tmp_path, random_walk):
    x = random_walk[:1000]
    path_x = write_csv(tmp_path / "x.csv", "v\n" + "\n".join(repr(float(v)) for v in x) + "\n")
    path_y = write_csv(tmp_path / "y.csv", "w\n" + "\n".join(repr(float(-v)) for v in x) + "\n")
    code, out, _ = run(capsys, "opd", "--input-x", path_x, "--input-y", path_y, "--d", "3")
    assert code == 0
    report = json.loads(out)
    assert set(report) == {"d", "alpha_pos", "alpha_neg", "signed", "n_windows"}
    assert report["signed"] == -1.0
    assert report["n_windows"] == 998


def test_opd_length_mismatch(capsys, tmp_path):
    path_x = write_csv(tmp_path / "x.csv", "v\n1\n2\n3\n4\n")
    path_y = write_csv(tmp_path / "y.csv", "v\n1\n2\n3\n")
    assert run(capsys, "opd", "--input-x", path_x, "--input-y", path_y, "--d", "2")[0] == 3


def test_verbose_flag(capsys):
    try:
        code, out, _ = run(capsys, "--verbose", "table", "--d", "2")
    finally:
        setup_logging(debug=False)
    assert code == 0
    assert out.splitlines() == ["1,2 | 0,0 | kse 0 | lehmer 0", "2,1 | 1,0 | kse 1 | lehmer 1"]


def test_series_is_parsed_as_float(tmp_path):
    path = write_csv(tmp_path / "sci.csv", "v\n1e3\n -2.5 \n")
    assert np.array_equal(read_series(SeriesFile(path=path, column="v")), [1000.0, -2.5])
