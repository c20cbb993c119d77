import io
import json
import subprocess
import sys

import pytest

from polyadica import cli
from polyadica.props import SUITES

from conftest import FIXTURES


def run(argv, stdin=None, monkeypatch=None):
    out = io.StringIO()
    old_out, old_in = sys.stdout, sys.stdin
    sys.stdout = out
    sys.stdin = io.StringIO(json.dumps(stdin) if stdin is not None else "")
    try:
        code = cli.main(argv)
    finally:
        sys.stdout, sys.stdin = old_out, old_in
    text = out.getvalue()
    first = text.splitlines()[0] if text else "{}"
    return code, json.loads(first), text


def test_vecmul_reference_vectors():
    code, out, _ = run(["vecmul", "--dim", "3", "--in", str(FIXTURES / "reference_vectors.json")])
    assert code == 0
    # the product of the four reference vectors computes to 72 in the third slot
    assert out == {"dim": 3, "coords": ["50", "180", "72"]}
    _, dense, _ = run(["vecmul", "--dense", "--in", str(FIXTURES / "reference_vectors.json")])
    assert dense == out


def test_tower_shape():
    code, out, text = run(["tower-shape", "--arities", "5,3,4", "--render"])
    assert code == 0
    assert (out["size"], out["dimension"]) == (24, 96)
    assert len(out["pattern"]) == 24 and [1, 14] in out["pattern"]
    assert out["kappa"] == [None, None] and len(out["chain_warnings"]) == 2
    assert out["final_arity"]["flat"] == 25
    assert text.count("★") == 24
    code, out, _ = run(["tower-shape", "--arities", "5,3,4", "--strict"])
    assert code == 1 and out["error"] == "ChainBroken"


def test_mul_matches_dense_and_printed_rows():
    fx = str(FIXTURES / "ternary_quaternions.json")
    code, out, _ = run(["mul", "--algebra", "H", "--arity", "3", "--in", fx])
    assert code == 0 and out["arity"] == 3
    _, dense, _ = run(["mul", "--dense", "--in", fx])
    cells = dense["dense"]
    assert cells[0][1] == out["entries"][0] and cells[1][0] == out["entries"][1]
    assert cells[0][0]["coeffs"] == ["0"] * 4


def test_binary_mul_quer_norm():
    code, out, _ = run(["mul", "--arity", "2", "--algebra", "H"], [[0, 1, 0, 0], [0, 0, 1, 0]])
    assert out == {"level": 2, "coeffs": ["0", "0", "0", "1"]}
    code, out, _ = run(["mul", "--arity", "2", "--algebra", "dual"], [[2, 3], [4, 5]])
    assert out == {"a": "8", "b": "22"}
    code, out, _ = run(["quer", "--arity", "2", "--algebra", "C"], [1, 1])
    assert out["inverse"]["coeffs"] == ["1/2", "-1/2"] and out["conj"]["coeffs"] == ["1", "-1"]
    code, out, _ = run(["norm", "--arity", "2", "--algebra", "C"], [3, 4])
    assert out == {"norm_sq": "25"}


def test_quer_norm_power_identity():
    z = {"arity": 5, "algebra": "R", "entries": [1, 2, 3, 4]}
    code, out, _ = run(["quer"], z)
    assert [e["coeffs"][0] for e in out["entries"]] == ["1/24", "1/12", "1/8", "1/6"]
    code, out, _ = run(["norm"], z)
    assert out == {"norm_sq": "576"}
    code, out, _ = run(["norm", "--quer"], z)
    assert out == {"norm_sq": "1/191102976"}
    code, out, _ = run(["norm", "--mode", "float"], z)
    assert out["norm"] == 24.0
    code, out, _ = run(["power", "--ell", "2"], {"arity": 3, "algebra": "R", "entries": [1, -1]})
    # five copies: each weight picks up z_1 three times and z_2 twice, or the reverse
    assert [e["coeffs"][0] for e in out["entries"]] == ["1", "-1"]
    code, out, _ = run(["identity-check", "--arity", "4", "--algebra", "dual"])
    assert [e for e in out["identity"]["entries"]] == [{"a": "1", "b": "0"}] * 3
    dz = json.loads((FIXTURES / "witnesses.json").read_text())["dual_zero_divisor"]
    code, out, _ = run(["identity-check"], dz)
    assert out["is_nilpotent"] and not out["is_invertible"] and not out["is_identity"]


def test_imaginary():
    j = {"kind": "half_quaternion", "c": 1, "d": 0}
    k = {"kind": "half_quaternion", "c": 0, "d": 1}
    code, out, _ = run(["imaginary", "mul"], [j, j, k])
    assert out == {"kind": "half_quaternion", "c": "0", "d": "-1"}
    code, out, _ = run(["imaginary", "quer"], {"kind": "half_octonion", "a": 1, "b": 1, "c": 1, "d": 1})
    assert out["a"] == "-1/4"
    code, out, _ = run(["imaginary", "identity"], [{"kind": "half_quaternion", "c": 1, "d": 1}, j, k])
    assert out == {"lhs": "2", "rhs": "2", "holds": True}
    code, out, _ = run(["imaginary", "norm"], {"kind": "imaginary_complex", "b": 3})
    assert out == {"norm_sq": "9"}


def test_structure_constants():
    code, out, _ = run(["vecmul", "--structure-constants", "--dim", "3"])
    assert [c["indices"] for c in out["nonzero"]] == [[1, 2, 3, 1], [2, 3, 1, 2], [3, 1, 2, 3]]


def test_domain_errors_exit_1():
    code, out, _ = run(["quer"], {"arity": 4, "algebra": "C", "entries": [[1, 1], [0, 0], [1, 0]]})
    assert code == 1 and out["error"] == "NonInvertibleEntry" and out["index"] == 2
    code, out, _ = run(["quervec"], {"coords": [1, 0, 3]})
    assert code == 1 and out["error"] == "ZeroCoordinate"
    code, out, _ = run(["imaginary", "quer"], {"kind": "half_quaternion", "c": 0, "d": 0})
    assert code == 1 and out["error"] == "ZeroElement"
    code, out, _ = run(["norm"], {"arity": 3, "algebra": "dual", "entries": [[1, 0], [1, 0]]})
    assert code == 1 and out["error"] == "UnnormedAlgebra"
    code, out, _ = run(["mul"], [{"arity": 3, "algebra": "O", "entries": [[1] * 8, [1] * 8]}] * 3)
    assert code == 1 and out["error"] == "NonAssociativeAlgebra"


def test_malformed_exit_2(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(["quer", "--in", str(bad)])[0] == 2
    assert run(["quer", "--in", str(tmp_path / "missing.json")])[0] == 2
    assert run(["vecmul"], {"factors": "nope"})[0] == 2
    assert run(["quervec"], {"coords": ["1/0", 1]})[0] == 2
    assert run(["tower-shape", "--arities", "5,x"])[0] == 2
    assert run(["props", "--suite", "no-such-suite"])[0] == 2
    with pytest.raises(SystemExit) as info:
        cli.main(["frobnicate"])
    assert info.value.code == 2


def test_props():
    code, out, _ = run(["props", "--suite", "norm-multiplicativity", "--cases", "40", "--seed", "7"])
    assert code == 0 and out["failed"] == 0 and out["cases"] == 40
    code, out, _ = run(["props", "--suite", "half-octonion-associativity", "--cases", "5", "--seed", "7"])
    assert code == 1 and out["failures"][0]["case"] == 0
    code, out, _ = run(["props", "--list"])
    assert set(out["suites"]) == set(SUITES)


def test_env_mode(monkeypatch):
    monkeypatch.setenv("POLYADICA_MODE", "float")
    code, out, _ = run(["norm"], {"arity": 3, "algebra": "C", "entries": [[3, 4], [1, 0]]})
    assert out["norm"] == 5.0


def test_deterministic_bytes():
    argv = [sys.executable, "-m", "polyadica", "props", "--suite", "zmatrix-querelement", "--cases", "20", "--seed", "11"]
    a = subprocess.run(argv, capture_output=True).stdout
    b = subprocess.run(argv, capture_output=True).stdout
    assert a == b and a


def test_command_table_covers_every_operation():
    operations = {
        "cd_mul", "cd_conj", "cd_norm_sq", "cd_inverse", "dual_mul",
        "nary_mul", "polyadic_identity", "querelement", "polyadic_power",
        "is_idempotent", "is_nilpotent", "is_neutral_polyad", "to_dense", "dense_mul",
        "polyadic_norm", "quer_norm",
        "tower_dimension", "validate_arity_chain", "build_shape", "final_arity", "render_shape",
        "poly_product", "structure_constants", "quervector", "reduced_vectorization", "shift_matrix",
        "ternary_mul_c", "ternary_mul_h", "quer_h", "norm_sq_h", "two_squares_identity",
        "ternary_mul_o", "quer_o", "run_suite",
    }
    listed = [op for ops in cli.COMMAND_TABLE.values() for op in ops]
    assert len(listed) == len(set(listed)), "an operation is exposed by two subcommands"
    assert operations <= set(listed)
    assert set(cli.COMMAND_TABLE) == set(cli.HANDLERS)
