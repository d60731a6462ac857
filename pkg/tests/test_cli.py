import json
import subprocess
import sys

import pytest

from coxtile import CoxeterGroup, build_embedding, build_poset, enumerate_min_reps
from coxtile.cli import main
from coxtile.orders import LinearExtension

A2A3_ORDER = """e
2
2 1
5
2 5
2 1 5
5 4
2 5 4
2 1 5 4
5 4 3
5 4 3 2
5 4 3 2 1
"""


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_quotient_json_and_dot(capsys):
    code, out, _ = run(capsys, "quotient", "-g", "D5", "-J", "1,2,3,4")
    assert code == 0
    data = json.loads(out)
    assert len(data["elements"]) == 10
    code, out, _ = run(capsys, "quotient", "-g", "A1", "-f", "dot")
    assert code == 0 and out.count("->") == 1


def test_embed_d5(capsys):
    code, out, _ = run(capsys, "embed", "-g", "D5", "-J", "1,2,3,4")
    assert code == 0
    data = json.loads(out)
    assert data["m"] == 10 and data["points_base"] == 1
    assert data["generators"]["1"] == [[4, 6], [5, 7]]


def test_embed_order_file(capsys, tmp_path):
    order = tmp_path / "order.txt"
    order.write_text(A2A3_ORDER)
    out_file = tmp_path / "emb.json"
    code, out, _ = run(capsys, "embed", "-g", "A2xA3", "-J", "1,3,4", "--order", f"@{order}",
                       "-o", str(out_file))
    assert code == 0
    assert "s3: (7,10)(8,11)(9,12)" in out
    assert json.loads(out_file.read_text())["generators"]["5"] == [[1, 4], [2, 5], [3, 6]]
    code, out, _ = run(capsys, "verify", "-g", "A2xA3", "--embedding", str(out_file))
    assert code == 0 and out.count("PASS") == 3


def test_tile_formats(capsys, tmp_path):
    code, out, err = run(capsys, "tile", "-g", "D5", "-J", "1,2,3,4",
                         "--word", "5 3 4 2 3 1 2 4 3 2 5 4 5 3 4 2 1 3 4 2")
    assert code == 0 and out.count("<polygon") == 38 and "tiles = 38" in err
    code, out, _ = run(capsys, "tile", "-g", "D5", "-J", "1,2,3,4", "--word", "c^2", "-f", "json")
    assert code == 0 and json.loads(out)["word"] == [1, 2, 3, 4, 5] * 2
    frames = tmp_path / "frames"
    code, _, _ = run(capsys, "tile", "-g", "A3", "-J", "1,2", "--word", "w0", "-f", "frames",
                     "-o", str(frames))
    assert code == 0 and len(list(frames.glob("*.svg"))) == 7
    code, _, err = run(capsys, "tile", "-g", "A3", "-J", "1,2", "--word", "w0", "-f", "frames")
    assert code == 2 and "error[invalid-output]" in err


def test_word_shorthands(capsys):
    code, out, _ = run(capsys, "tile", "-g", "A3", "-J", "1,2", "--word", "lexmin-w0", "-f", "json")
    # least under right-to-left lexicographic comparison
    assert code == 0 and json.loads(out)["word"] == [1, 2, 3, 1, 2, 1]
    code, out, _ = run(capsys, "tile", "-g", "A3", "-J", "1,2", "--word", "w0", "-f", "json")
    assert json.loads(out)["word"] == [1, 2, 1, 3, 2, 1]


@pytest.mark.parametrize("argv,code,kind", [
    (["tile", "-g", "D5", "-J", "1,2,3,4", "--word", "1 1"], 5, "not-reduced"),
    (["embed", "-g", "A2", "-J", "1,2"], 3, "J-equals-S"),
    (["embed", "-g", "Q7"], 2, "invalid-spec"),
    (["embed", "-g", "A2", "-J", "3"], 2, "invalid-spec"),
    (["embed", "-g", "A2", "--order", "sideways"], 4, "bad-order"),
    (["tile", "-g", "A2", "--word", "x y"], 2, "invalid-word"),
    (["verify", "-g", "A2", "--scope", "most"], 2, "invalid-scope"),
])
def test_exit_codes(capsys, argv, code, kind):
    got, _, err = run(capsys, *argv)
    assert got == code
    assert err.startswith(f"coxtile: error[{kind}]:")
    assert err.count("\n") == 1


def test_not_reduced_detail(capsys):
    _, _, err = run(capsys, "tile", "-g", "D5", "-J", "1,2,3,4", "--word", "5 4 3 4 4")
    assert "position=5 letter=4" in err


def test_order_file_errors(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("1\n\n2\n1 2\n2 1\n1 2 1\n")
    code, _, err = run(capsys, "embed", "-g", "A2", "--order", f"@{bad}")
    assert code == 4 and "bad-order" in err
    wrong = tmp_path / "wrong.txt"
    wrong.write_text("e\n1 2\n1\n2\n2 1\n1 2 1\n")
    code, _, err = run(capsys, "embed", "-g", "A2", "--order", f"@{wrong}")
    assert code == 4 and "not-a-refinement" in err


def test_verify_violation(capsys, tmp_path):
    # Cayley table of A2 from an order that puts s1s2 before s1
    g = CoxeterGroup("A2")
    cosets = enumerate_min_reps(g, [])
    poset = build_poset(cosets.reps)
    order = [0] + [poset.position(g.word_to_element(w)) for w in ([1, 2], [1], [2], [2, 1], [1, 2, 1])]
    table = build_embedding(cosets, LinearExtension(poset, order), check=False)
    emb = tmp_path / "emb.json"
    emb.write_text(table.to_json())
    code, out, err = run(capsys, "verify", "-g", "A2", "--embedding", str(emb))
    assert code == 6 and "FAIL" in out and "error[violation]" in err


def test_verify_sampled(capsys):
    code, out, _ = run(capsys, "verify", "-g", "D5", "-J", "1,2,3,4", "--scope", "sampled:30",
                       "--seed", "4")
    assert code == 0 and "sampled(30) seed=4" in out


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "coxtile.cli", "embed", "-g", "A1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["generators"] == {"1": [[1, 2]]}
