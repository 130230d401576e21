import csv

from vertexmatch.cli import main


def test_gen_run_verify(tmp_path, capsys):
    g = tmp_path / "g.txt"
    assert main(["gen", "--kind", "gnm", "--n", "12", "--m", "25", "--seed", "3", "--out", str(g)]) == 0
    out = tmp_path / "r.csv"
    assert main(["run", "--input", str(g), "--algos", "exact-mvm,gpa-rr", "--trials", "2",
                 "--oracle", "--out", str(out)]) == 0
    text = capsys.readouterr().out
    assert "phases=2" in text and "exact-mvm" in text
    with open(out) as f:
        assert len(list(csv.reader(f))) == 1 + 4 + 2


def test_gen_matrix_market(tmp_path):
    g = tmp_path / "grid.mtx"
    assert main(["gen", "--kind", "grid", "--n", "16", "--out", str(g)]) == 0
    assert g.read_text().startswith("%%MatrixMarket")
    assert main(["run", "--input", str(g), "--trials", "1", "--weights", "real:1.0:1.3",
                 "--out", str(tmp_path / "r.csv")]) == 0


def test_verify_exit_codes(tmp_path):
    g = tmp_path / "p.txt"
    g.write_text("0 1\n1 2\n2 3\n")
    good = tmp_path / "good.txt"
    good.write_text("0 1\n2 3\n")
    bad = tmp_path / "bad.txt"
    bad.write_text("0 2\n")
    assert main(["verify", "--input", str(g), "--matching", str(good)]) == 0
    assert main(["verify", "--input", str(g), "--matching", str(bad)]) == 3
    assert main(["verify", "--input", str(g), "--matching", str(tmp_path / "none.txt")]) == 2


def test_usage_errors(tmp_path, capsys):
    g = tmp_path / "p.txt"
    g.write_text("0 1\n")
    out = str(tmp_path / "r.csv")
    assert main(["run", "--input", str(g), "--algos", "bogus", "--out", out]) == 1
    assert main(["run", "--input", str(g), "--trials", "0", "--out", out]) == 1
    assert main(["gen", "--kind", "gnm", "--n", "5", "--out", out]) == 1
    for argv in (["run"], ["frobnicate"], ["run", "--input", str(g), "--weights", "int:9:1", "--out", out]):
        try:
            main(argv)
        except SystemExit as exc:
            assert exc.code == 1
        else:
            raise AssertionError(f"{argv} should exit")


def test_io_errors(tmp_path):
    bad = tmp_path / "bad.mtx"
    bad.write_text("garbage\n")
    out = str(tmp_path / "r.csv")
    assert main(["run", "--input", str(bad), "--out", out]) == 2
    assert main(["run", "--input", str(tmp_path / "missing.txt"), "--out", out]) == 2
    g = tmp_path / "p.txt"
    g.write_text("0 1\n")
    assert main(["run", "--input", str(g), "--out", str(tmp_path / "no" / "dir.csv")]) == 2


def test_oracle_too_large_is_usage_error(tmp_path):
    g = tmp_path / "g.txt"
    main(["gen", "--kind", "path", "--n", "40", "--out", str(g)])
    assert main(["run", "--input", str(g), "--oracle", "--out", str(tmp_path / "r.csv")]) == 1
