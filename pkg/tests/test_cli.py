import json
from fractions import Fraction

import pytest

from codespectra.cli import main
from codespectra.serialize import matrix_from_text, matrix_to_text


def _run(capsys, argv):
    assert main(argv) == 0
    return capsys.readouterr().out


def _write_matrix(tmp_path, name, q, rows):
    path = tmp_path / name
    path.write_text(matrix_to_text(q, rows))
    return str(path)


def test_dual_repetition(tmp_path, capsys):
    mat = _write_matrix(tmp_path, "rep.txt", 2, ((1, 1),))
    out = json.loads(_run(capsys, ["dual", mat]))
    assert out["q"] == 2 and out["n"] == 2
    entries = {
        tuple(e["type"]): Fraction(int(e["num"]), int(e["den"])) for e in out["entries"]
    }
    assert entries == {(2, 0): Fraction(1, 2), (0, 2): Fraction(1, 2)}


def test_macwilliams_roundtrip(tmp_path, capsys):
    from codespectra.genfun import genfun_of_set
    from codespectra.gf import field_make
    from codespectra.macwilliams import (
        enumerate_subspace,
        orthogonal,
        subspace_from_rows,
    )
    from codespectra.serialize import genpoly_from_json

    rows = ((1, 0, 1), (0, 1, 1))
    mat = _write_matrix(tmp_path, "code.txt", 2, rows)
    obj = json.loads(_run(capsys, ["macwilliams", mat]))
    field = field_make(2)
    dual = orthogonal(subspace_from_rows(field, rows))
    assert genpoly_from_json(obj) == genfun_of_set(enumerate_subspace(dual), field)


def test_gabidulin_verify_mrd(capsys):
    out = json.loads(
        _run(capsys, ["gabidulin", "--q", "2", "--n", "2", "--m", "2", "--k", "1", "--verify", "mrd"])
    )
    assert out["size_ok"] and out["mrd_ok"]
    assert out["min_rank_distance"] == 2


def test_gabidulin_verify_kernel(capsys):
    out = json.loads(
        _run(capsys, ["gabidulin", "--q", "2", "--n", "2", "--m", "2", "--k", "2", "--verify", "kernel"])
    )
    assert out["mean"] == "7/4"
    assert out["p_trivial_kernel"] == "3/8"


def test_gabidulin_emit(capsys):
    out = _run(capsys, ["gabidulin", "--q", "2", "--n", "2", "--m", "2", "--k", "1", "--emit"])
    blocks = [b for b in out.strip().split("\n\n")]
    # four codewords, each a parseable 2x2 matrix
    mats = set()
    for b in blocks:
        q, rows = matrix_from_text(b)
        assert q == 2
        mats.add(rows)
    assert len(mats) == 4


def test_ldgm_bound(capsys):
    out = json.loads(
        _run(
            capsys,
            ["ldgm-bound", "--q", "2", "--c", "2", "--d", "4", "--n", "8",
             "--p0", "0.5", "--q0", "0.5"],
        )
    )
    assert out["p0"] == 0.5 and out["q0"] == 0.5
    assert out["delta_qd"] <= out["J"] + 1e-9


def test_ldgm_sample_files(tmp_path, capsys):
    dest = tmp_path / "gen.txt"
    _run(
        capsys,
        ["ldgm-sample", "--q", "2", "--c", "2", "--d", "4", "--n", "4",
         "--seed", "5", "--out", str(dest)],
    )
    q, rows = matrix_from_text(dest.read_text())
    assert q == 2
    assert len(rows) == 8 and len(rows[0]) == 4  # d'n inputs, c'n outputs
    edges = json.loads((tmp_path / "gen.txt.edges.json").read_text())["edges"]
    assert len(edges) == 16


def test_design(capsys):
    out = json.loads(
        _run(
            capsys,
            ["design", "--q", "2", "--outer-rate", "1/5", "--p0-min", "0.05",
             "--p0-max", "0.95", "--delta", "0.05"],
        )
    )
    assert out["d"] == 35 and out["c"] == 14
    assert out["ok"]


def test_compose(tmp_path, capsys):
    outer = _write_matrix(tmp_path, "outer.txt", 2, ((1, 1),))
    inner = _write_matrix(tmp_path, "inner.txt", 2, ((1,), (1,)))
    perm = tmp_path / "perm.txt"
    perm.write_text("0 1\n")
    out = _run(capsys, ["compose", "--outer", outer, "--inner", inner, "--perm", str(perm)])
    q, rows = matrix_from_text(out)
    assert rows == ((0,),)


def test_verify_equivalence_exact(capsys):
    out = json.loads(
        _run(capsys, ["verify-equivalence", "--mode", "g1", "--q", "2", "--n", "2"])
    )
    assert out["probability"] == "3/8"
    assert out["exceeds_kq"]
    out = json.loads(
        _run(capsys, ["verify-equivalence", "--mode", "g2", "--q", "2", "--n", "2"])
    )
    assert out["probability"] == "3/8"


def test_verify_equivalence_sampled(capsys):
    out = json.loads(
        _run(
            capsys,
            ["verify-equivalence", "--mode", "g1", "--q", "2", "--n", "2",
             "--samples", "500", "--seed", "3"],
        )
    )
    assert not out["exact"]
    lo, hi = out["interval95"]
    assert lo <= 3 / 8 <= hi


def test_lower_bound(capsys):
    out = json.loads(_run(capsys, ["lower-bound", "--alphabet-size", "2", "--m", "4"]))
    assert out["bound_num"] == "8" and out["bound_den"] == "3"


def test_out_flag_writes_file(tmp_path, capsys):
    dest = tmp_path / "res.json"
    _run(
        capsys,
        ["gabidulin", "--q", "2", "--n", "2", "--m", "2", "--k", "1",
         "--verify", "mrd", "--out", str(dest)],
    )
    assert json.loads(dest.read_text())["mrd_ok"]


def test_bad_q_rejected():
    with pytest.raises(SystemExit):
        main(
            ["ldgm-bound", "--q", "6", "--c", "1", "--d", "2", "--n", "2",
             "--p0", "0.5", "--q0", "0.5"]
        )
    with pytest.raises(ValueError):
        main(["lower-bound", "--alphabet-size", "0", "--m", "2"])
