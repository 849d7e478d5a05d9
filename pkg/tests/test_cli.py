from targetset.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_solve_star_with_capped_center(capsys):
    code, out, _ = run(capsys, "solve", "--gen", "star:9", "--policy", "const:5", "--alg", "tss")
    assert code == 0
    assert "size 1" in out
    assert "target_set 0" in out


def test_solve_exact_on_unit_clique(capsys):
    code, out, _ = run(
        capsys, "solve", "--gen", "clique:4", "--thresholds", "1,1,1,1", "--alg", "exact"
    )
    assert code == 0
    assert "size 1" in out


def test_solve_edge_file_with_degree_policy_prints_cover(capsys, tmp_path):
    path = tmp_path / "path3.txt"
    path.write_text("0 1\n1 2\n")
    code, out, _ = run(capsys, "solve", "--edges", str(path), "--policy", "degree", "--alg", "tss")
    assert code == 0
    cover = {int(x) for x in out.splitlines()[-1].split()[1:]}
    for u, v in ((0, 1), (1, 2)):
        assert u in cover or v in cover


def test_solve_trace_output(capsys):
    code, out, _ = run(
        capsys, "solve", "--gen", "star:5", "--policy", "const:1", "--alg", "tss", "--trace"
    )
    assert code == 0
    assert "activation trace:" in out


def test_gen_then_solve_roundtrip(capsys, tmp_path):
    out_path = tmp_path / "gen.txt"
    code, _, _ = run(capsys, "--seed", "9", "gen", "--gen", "gnp:12:0.4", "--out", str(out_path))
    assert code == 0
    code, out, _ = run(capsys, "solve", "--edges", str(out_path), "--policy", "const:2")
    assert code == 0
    assert "size " in out


def test_bound_verb_star(capsys):
    code, out, _ = run(capsys, "bound", "--gen", "star:9", "--policy", "const:5")
    assert code == 0
    assert "bound_new 1 (1)" in out
    assert "bound_old 41/9" in out
    assert "tss_size 1" in out
    assert "applicable true" in out


def test_bench_verb_writes_csv(capsys, tmp_path):
    out_path = tmp_path / "rows.csv"
    code, _, _ = run(
        capsys,
        "--seed", "4",
        "bench",
        "--gen", "star:6",
        "--gen", "cycle:6",
        "--sweep", "1..3",
        "--alg", "tss,greedy",
        "--out", str(out_path),
    )
    assert code == 0
    lines = out_path.read_text().splitlines()
    assert len(lines) == 1 + 2 * 3 * 2
    assert lines[0].startswith("graph_name,")


def test_verify_verb_exits_zero_when_clean(capsys):
    code, out, _ = run(
        capsys, "--seed", "2", "verify", "--class", "clique", "--n-max", "7", "--instances", "10"
    )
    assert code == 0
    assert "ok" in out


def test_bad_input_exits_nonzero(capsys):
    code, _, err = run(capsys, "solve", "--gen", "cycle:2", "--policy", "const:1")
    assert code == 1
    assert "error:" in err


def test_missing_edge_file_exits_nonzero(capsys):
    code, _, err = run(capsys, "solve", "--edges", "/nonexistent/file.txt")
    assert code == 1
    assert "error:" in err
