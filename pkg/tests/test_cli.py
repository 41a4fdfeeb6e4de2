import io as stdio
import json
import subprocess
import sys

import pytest

from yoneda_ext.cli import run


def write(path, obj):
    path.write_text(json.dumps(obj))
    return str(path)


@pytest.fixture
def files(tmp_path):
    z4 = {"ring": {"Zmod": 4}, "generators": 1}
    a = {"ring": {"Zmod": 4}, "generators": 1, "relations": [[2]]}
    return {
        "z2": write(tmp_path / "z2.json", {"ring": "Z", "generators": 1, "relations": [[2]]}),
        "zz": write(tmp_path / "zz.json", {"ring": "Z", "generators": 1}),
        "a": write(tmp_path / "z2-over-z4.json", a),
        "seq": write(tmp_path / "seq.json", {"modules": [a, z4, a], "arrows": [[[2]], [[1]]]}),
        "split": write(tmp_path / "split.json", {
            "modules": [a, {"ring": {"Zmod": 4}, "generators": 2, "relations": [[2, 0], [0, 2]]}, a],
            "arrows": [[[1], [0]], [[0, 1]]]}),
        "bad": write(tmp_path / "bad.json", {"modules": [a, z4, z4, z4], "arrows": [[[2]], [[0]], [[1]]]}),
        "junk": write(tmp_path / "junk.json", {"modules": 3}),
        "dir": tmp_path,
    }


def call(*argv):
    out, err = stdio.StringIO(), stdio.StringIO()
    code = run([str(a) for a in argv], out=out, err=err)
    return code, out.getvalue().strip(), err.getvalue().strip()


def test_ext_over_integers(files):
    assert call("ext", "-n", "1", f"X={files['z2']}", f"Y={files['z2']}") == (0, "Z/2", "")
    code, out, _ = call("ext", "-n", "2", files["z2"], files["z2"], "--json")
    assert code == 0 and json.loads(out)["value"] == "0"


def test_pd_id_fd(files):
    assert call("pd", files["a"], "--max", "16")[:2] == (0, "infinite (period 1)")
    assert call("id", files["a"])[:2] == (0, "infinite (period 1)")
    assert call("fd", files["z2"])[:2] == (0, "1")
    code, out, _ = call("pd", files["a"], "--json")
    assert json.loads(out)["witness"] == [1, 2]


def test_verify(files):
    assert call("verify", files["seq"])[:2] == (0, "exact (length 1)")
    code, _, err = call("verify", files["bad"])
    assert code == 1 and "NotExactAt(1)" in err
    code, out, _ = call("verify", files["bad"], "--json")
    assert code == 1 and json.loads(out) == {
        "error": "NotExactAt(1)", "index": 1,
        "message": "NotExactAt(1): image of incoming arrow != kernel of outgoing arrow"}


def test_exit_codes(files):
    assert call("id", files["z2"])[0] == 1            # UnsupportedRing
    assert call("verify", files["junk"])[0] == 2      # malformed document
    assert call("ext", files["dir"] / "nope.json", files["z2"])[0] == 2
    assert call("frobnicate")[0] == 2
    assert call("ext", files["z2"], files["a"])[0] == 1   # ring mismatch is a domain error


def test_class_equiv_split(files):
    code, out, _ = call("class", files["seq"])
    assert code == 0 and out == "class [1] in Ext^1 = Z/2"
    code, out, _ = call("class", files["seq"], "--perturb", "--seed", "7", "--json")
    assert json.loads(out)["coords"] == [1]
    assert call("equiv", files["seq"], files["seq"])[1] == "equivalent"
    assert call("equiv", files["seq"], files["split"])[1] == "not equivalent"
    assert call("split", files["seq"])[1] == "does not split"
    code, out, _ = call("split", files["split"], "--json")
    assert json.loads(out)["splits"] is True


def test_splice_and_cut(files):
    d = files["dir"]
    assert call("splice", files["seq"], files["seq"], "-o", d / "ss.json")[0] == 0
    assert call("verify", d / "ss.json")[1] == "exact (length 2)"
    assert call("cut", d / "ss.json", "-i", "2", "-o", d / "c")[0] == 0
    assert call("splice", d / "c_left.json", d / "c_right.json", "-o", d / "back.json")[0] == 0
    a = json.loads((d / "ss.json").read_text())
    b = json.loads((d / "back.json").read_text())
    assert a["arrows"] == b["arrows"]
    assert call("cut", d / "ss.json", "-i", "1")[0] == 1
    code, out, _ = call("splice", files["seq"], files["seq"], "--json")
    assert len(json.loads(out)["arrows"]) == 3


def test_long_sequences(files):
    code, out, _ = call("les-cov", files["seq"], files["a"], "--nmax", "3")
    assert code == 0 and out.splitlines()[-1] == "exact"
    code, out, _ = call("les-con", files["seq"], files["a"], "--json")
    doc = json.loads(out)
    assert doc["exact"] and doc["kind"] == "contravariant"


def test_gallery(files):
    code, out, _ = call("gallery", "kadec-analogue")
    assert code == 0 and out.endswith("verdict: confirmed")
    code, out, _ = call("gallery", "hereditary-collapse", "--seed", "3", "--json")
    assert json.loads(out)["verdict"] is True
    assert call("gallery", "nope")[0] == 2


def test_deterministic_json(files):
    assert call("les-cov", files["seq"], files["a"], "--json") == call("les-cov", files["seq"], files["a"], "--json")


def test_module_entry_point(files):
    res = subprocess.run([sys.executable, "-m", "yoneda_ext", "ext", files["z2"], files["z2"]],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() == "Z/2"
