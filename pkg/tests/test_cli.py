import json
import math

import numpy as np
import pytest

from opmeans.cli import (
    SUITE_NAMES,
    SuiteConfig,
    UsageError,
    dump_matrix,
    main,
    matrix_from_doc,
    matrix_to_doc,
    parse_mean_spec,
    report_to_csv_text,
    report_to_json_text,
    run_suite,
)
from opmeans.scalar_kernel import SpectralBounds, arithmetic, geometric, power_path


def write_matrix(path, a):
    path.write_text(dump_matrix(np.asarray(a, dtype=complex)))
    return str(path)


def get_value(out, key):
    for line in out.splitlines():
        if line.startswith(key + " = "):
            return line.split(" = ", 1)[1]
    raise AssertionError(f"{key!r} not in output:\n{out}")


# ---------------------------------------------------------------------------
# matrix JSON round trips


def test_matrix_doc_roundtrip_real():
    a = np.array([[1.0, 0.25], [0.25, 2.0]])
    doc = matrix_to_doc(a)
    assert "im" not in doc
    back = matrix_from_doc(doc)
    assert np.array_equal(back, a.astype(complex))


def test_matrix_doc_roundtrip_complex_exact():
    rng = np.random.default_rng(5)
    a = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
    a = a + a.conj().T
    back = matrix_from_doc(json.loads(dump_matrix(a)))
    assert np.array_equal(back, a)  # repr floats survive json exactly


def test_matrix_doc_validation():
    with pytest.raises(UsageError):
        matrix_from_doc({"n": 2})
    with pytest.raises(UsageError):
        matrix_from_doc({"n": 2, "re": [[1.0]]})
    with pytest.raises(UsageError):
        matrix_from_doc({"n": 2, "re": [[1, 0], [0, 1]], "im": [[0.0]]})


def test_parse_mean_spec():
    assert parse_mean_spec("arithmetic", None) == arithmetic(0.5)
    assert parse_mean_spec("geometric", 0.3) == geometric(0.3)
    assert parse_mean_spec("power_path:0.5,0.3", None) == power_path(0.5, 0.3)
    with pytest.raises(UsageError):
        parse_mean_spec("power_path", None)
    with pytest.raises(UsageError):
        parse_mean_spec("median", None)


# ---------------------------------------------------------------------------
# constants


def test_constants_arithmetic_remark_values(capsys):
    assert main(["constants", "--mean", "arithmetic", "--m", "1", "--M", "4"]) == 0
    out = capsys.readouterr().out
    assert float(get_value(out, "gamma")) == pytest.approx(1.0, abs=1e-9)
    assert float(get_value(out, "zeta")) == pytest.approx(10.0 / 9.0, abs=1e-9)
    assert float(get_value(out, "sqrt_gamma_zeta")) == pytest.approx(
        math.sqrt(10.0) / 3.0, abs=1e-9
    )


def test_constants_geometric_triple_coincides(capsys):
    assert main(
        ["constants", "--mean", "geometric", "--alpha", "0.5", "--m", "1", "--M", "4"]
    ) == 0
    out = capsys.readouterr().out
    lee = 3.0 / (2.0 * math.sqrt(2.0))
    for key in ("gamma", "zeta", "sqrt_gamma_zeta", "closed_form", "lee_constant"):
        assert float(get_value(out, key)) == pytest.approx(lee, abs=1e-9), key


def test_constants_degenerate_interval_exits_2(capsys):
    assert main(["constants", "--mean", "arithmetic", "--m", "2", "--M", "2"]) == 2
    assert "m < M" in capsys.readouterr().err


def test_constants_path_mode_matches_closed_form(capsys):
    assert main(
        ["constants", "--r", "0", "--t", "1", "--s0", "0.7", "--m", "1", "--M", "4"]
    ) == 0
    out = capsys.readouterr().out
    from opmeans.scalar_kernel import closed_form_weighted_constant

    expect = closed_form_weighted_constant(0.7, SpectralBounds(0.25, 1.0))
    assert float(get_value(out, "sqrt_gamma_zeta")) == pytest.approx(expect, abs=1e-7)


def test_constants_path_mode_needs_all_flags(capsys):
    assert main(["constants", "--r", "0", "--m", "1", "--M", "4"]) == 2
    assert main(["constants", "--m", "1", "--M", "4"]) == 2


# ---------------------------------------------------------------------------
# verify


def test_verify_small_suite_exits_zero(tmp_path, capsys):
    out = tmp_path / "rep.json"
    code = main([
        "verify", "--suite", "callebaut_chain", "--dim", "3", "--n-terms", "4",
        "--m", "1", "--M", "4", "--mean", "arithmetic", "--reps", "5",
        "--seed", "42", "--out", str(out),
    ])
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["summary"]["n_fail"] == 0
    assert len(doc["trials"]) == 5
    assert doc["trials"][0]["dim"] == 3
    assert doc["trials"][0]["n_terms"] == 4


def test_verify_reruns_are_byte_identical(tmp_path):
    args = [
        "verify", "--suite", "theorem22", "--dim", "2,3", "--n-terms", "1,2",
        "--reps", "6", "--seed", "7",
    ]
    f1, f2 = tmp_path / "a.json", tmp_path / "b.json"
    assert main(args + ["--out", str(f1)]) == 0
    assert main(args + ["--out", str(f2)]) == 0
    assert f1.read_bytes() == f2.read_bytes()


def test_verify_stdout_when_no_out_flag(capsys):
    code = main([
        "verify", "--suite", "superadditivity", "--dim", "2", "--n-terms", "1",
        "--reps", "2", "--seed", "1",
    ])
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["suite"] == "superadditivity"
    assert doc["summary"]["tolerance_policy"].startswith("loewner links")


def test_verify_csv_format(tmp_path):
    out = tmp_path / "rep.csv"
    code = main([
        "verify", "--suite", "theorem25", "--r", "0", "--t", "1", "--s", "0.7",
        "--dim", "2", "--n-terms", "2", "--reps", "4", "--seed", "3",
        "--format", "csv", "--out", str(out),
    ])
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[0] == (
        "suite,seed,dim,n_terms,mean,r,t,s,s0,pair,m,M,worst_link_gap,holds"
    )
    assert len(lines) == 5
    first = lines[1].split(",")
    assert first[0] == "theorem25" and first[-1] == "true"
    assert float(first[6]) == 1.0  # the pinned t


def test_verify_failing_suite_exits_one_and_serializes(tmp_path):
    out = tmp_path / "neg.json"
    code = main([
        "verify", "--suite", "theorem25", "--r", "-1", "--t", "1", "--s", "0.5",
        "--dim", "2", "--n-terms", "1", "--reps", "4", "--seed", "42",
        "--out", str(out),
    ])
    assert code == 1
    doc = json.loads(out.read_text())
    assert doc["summary"]["n_fail"] > 0
    failing = [t for t in doc["trials"] if not t["holds"]]
    assert failing and all("instance" in t for t in failing)
    matrix = failing[0]["instance"]["pairs"][0]["a"]
    assert matrix["n"] == 2 and len(matrix["re"]) == 2


def test_verify_r0_report_contains_cross_check(tmp_path):
    out = tmp_path / "r0.json"
    assert main([
        "verify", "--suite", "theorem25", "--r", "0", "--t", "1", "--s", "0.7",
        "--dim", "2", "--n-terms", "1", "--reps", "2", "--seed", "5",
        "--out", str(out),
    ]) == 0
    doc = json.loads(out.read_text())
    params = doc["trials"][0]["params"]
    assert "closed_form_constant" in params
    assert params["closed_form_abs_diff"] <= 1e-7


def test_verify_unknown_suite_exits_2(capsys):
    assert main(["verify", "--suite", "nonsense", "--reps", "1"]) == 2
    assert "unknown suite" in capsys.readouterr().err


def test_verify_incomplete_params_exit_2(capsys):
    assert main([
        "verify", "--suite", "theorem25", "--r", "0", "--reps", "1",
    ]) == 2
    assert main([
        "verify", "--suite", "scalar_daykin_chain", "--pair", "callebaut", "--reps", "1",
    ]) == 2


def test_verify_accepts_op_style_suite_name(capsys):
    code = main([
        "verify", "--suite", "verify_superadditivity", "--dim", "2",
        "--n-terms", "1", "--reps", "1", "--seed", "2",
    ])
    assert code == 0


# ---------------------------------------------------------------------------
# eval


def test_eval_mean_diagonal_example(tmp_path, capsys):
    fa = write_matrix(tmp_path / "A.json", np.diag([1.0, 4.0]))
    fb = write_matrix(tmp_path / "B.json", np.diag([4.0, 1.0]))
    assert main(["eval", "mean", "--mean", "geometric", "--alpha", "0.5", fa, fb]) == 0
    doc = json.loads(capsys.readouterr().out)
    got = matrix_from_doc(doc)
    assert np.allclose(got, np.diag([2.0, 2.0]), atol=1e-12)


def test_eval_dual_of_arithmetic_is_harmonic(tmp_path, capsys):
    fa = write_matrix(tmp_path / "A.json", np.diag([1.0, 2.0]))
    fb = write_matrix(tmp_path / "B.json", np.diag([4.0, 6.0]))
    assert main(["eval", "dual", "--mean", "arithmetic", fa, fb]) == 0
    got = matrix_from_doc(json.loads(capsys.readouterr().out))
    expect = np.diag([2 * 1 * 4 / 5.0, 2 * 2 * 6 / 8.0])
    assert np.allclose(got, expect, atol=1e-12)


def test_eval_hadamard_with_ones(tmp_path, capsys):
    ones = write_matrix(tmp_path / "ones.json", np.ones((2, 2)))
    fa = write_matrix(tmp_path / "A.json", np.array([[1.0, 0.5], [0.5, 4.0]]))
    assert main(["eval", "hadamard", ones, fa]) == 0
    got = matrix_from_doc(json.loads(capsys.readouterr().out))
    assert np.allclose(got, [[1.0, 0.5], [0.5, 4.0]])


def test_eval_tensor_product(tmp_path, capsys):
    fa = write_matrix(tmp_path / "A.json", np.diag([1.0, 2.0]))
    fb = write_matrix(tmp_path / "B.json", np.diag([3.0, 5.0]))
    assert main(["eval", "tensor", fa, fb]) == 0
    got = matrix_from_doc(json.loads(capsys.readouterr().out))
    assert np.allclose(np.diag(got), [3.0, 5.0, 6.0, 10.0])


def test_eval_dimension_mismatch_exits_2(tmp_path, capsys):
    fa = write_matrix(tmp_path / "A.json", np.eye(2))
    fb = write_matrix(tmp_path / "B.json", np.eye(3))
    assert main(["eval", "mean", "--mean", "geometric", fa, fb]) == 2


def test_eval_malformed_file_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{ not json")
    fa = write_matrix(tmp_path / "A.json", np.eye(2))
    assert main(["eval", "mean", "--mean", "geometric", str(bad), fa]) == 2


def test_eval_roundtrip_loss_is_zero(tmp_path, capsys):
    a = np.array([[1.0, 1.0 / 3.0], [1.0 / 3.0, 2.0]])
    fa = write_matrix(tmp_path / "A.json", a)
    fi = write_matrix(tmp_path / "I.json", np.eye(2))
    assert main(["eval", "mean", "--mean", "arithmetic", "--alpha", "0", fa, fi]) == 0
    got = matrix_from_doc(json.loads(capsys.readouterr().out))
    assert np.max(np.abs(got - a)) <= 1e-15 * np.max(np.abs(a))


# ---------------------------------------------------------------------------
# gen


def test_gen_writes_deterministic_instances(tmp_path, capsys):
    d1 = tmp_path / "one"
    d2 = tmp_path / "two"
    args = ["gen", "--dim", "3", "--n-terms", "2", "--m", "1", "--M", "4", "--seed", "9"]
    assert main(args + ["--out-dir", str(d1)]) == 0
    assert main(args + ["--out-dir", str(d2)]) == 0
    names = sorted(p.name for p in d1.iterdir())
    assert names == ["A_0.json", "A_1.json", "B_0.json", "B_1.json", "instance.json"]
    for name in names:
        assert (d1 / name).read_bytes() == (d2 / name).read_bytes()
    spec = json.loads((d1 / "instance.json").read_text())
    assert spec == {"M": 4.0, "complex": False, "dim": 3, "m": 1.0, "n_terms": 2, "seed": 9}


def test_gen_output_obeys_constraint(tmp_path, capsys):
    d = tmp_path / "inst"
    assert main([
        "gen", "--dim", "4", "--n-terms", "1", "--m", "2", "--M", "3",
        "--seed", "11", "--out-dir", str(d),
    ]) == 0
    from opmeans.matrix_ops import loewner_leq

    a = matrix_from_doc(json.loads((d / "A_0.json").read_text()))
    b = matrix_from_doc(json.loads((d / "B_0.json").read_text()))
    assert loewner_leq(2.0 * a, b).holds
    assert loewner_leq(b, 3.0 * a).holds


# ---------------------------------------------------------------------------
# run_suite plumbing


def test_run_suite_covers_all_names():
    for name in SUITE_NAMES:
        rep = run_suite(SuiteConfig(suite=name, dims=(2,), n_terms=(1,), repetitions=2, seed=3))
        assert rep.suite == name
        assert len(rep.trials) == 2


def test_run_suite_round_robin_cycling():
    cfg = SuiteConfig(
        suite="superadditivity", dims=(2, 3), n_terms=(1, 2, 5), repetitions=6, seed=1
    )
    rep = run_suite(cfg)
    assert [t.dim for t in rep.trials] == [2, 3, 2, 3, 2, 3]
    assert [t.n_terms for t in rep.trials] == [1, 2, 5, 1, 2, 5]


def test_run_suite_json_and_csv_rendering_deterministic():
    cfg = SuiteConfig(suite="milne_reverse", dims=(2,), n_terms=(2,), repetitions=3, seed=5)
    r1, r2 = run_suite(cfg), run_suite(cfg)
    assert report_to_json_text(r1) == report_to_json_text(r2)
    assert report_to_csv_text(r1) == report_to_csv_text(r2)


def test_suite_config_validation():
    with pytest.raises(UsageError):
        SuiteConfig(suite="bogus")
    with pytest.raises(UsageError):
        SuiteConfig(suite="theorem22", repetitions=0)
