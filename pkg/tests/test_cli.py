import io
import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from clockwork import cli
from clockwork.polyring import B_VAR, LaurentPoly
from clockwork.statesum import LINKVARS, SCHEMES, WeightScheme

CORPUS = resources.files("clockwork") / "corpus"


def _schema(name):
    return json.loads((resources.files("clockwork") / "schema" / name).read_text())


def _run(*argv):
    out = io.StringIO()
    code = cli.main(list(argv), out)
    return code, out.getvalue()


def _pd(name):
    return str(CORPUS / f"{name}.pd")


def test_compute_prints_the_trefoil():
    code, text = _run("compute", _pd("trefoil_right"))
    assert code == 0
    assert text == "(X_a^2 + X_a^-2 - 1)/(X_a - X_a^-1)\n"


def test_compute_json_validates_and_is_byte_stable():
    code, a = _run("compute", _pd("whitehead"), "--json")
    _, b = _run("compute", _pd("whitehead"), "--json")
    assert code == 0 and a == b
    jsonschema.validate(json.loads(a), _schema("potential.schema.json"))


def test_compute_with_color_map_and_stars():
    code, text = _run("compute", _pd("torus_2_4"), "--color-map", "1=a,2=a", "--stars", "3")
    assert code == 0
    assert "X_b" not in text and "X_a" in text


@pytest.mark.parametrize("argv", [
    ["compute", "/nonexistent.pd"],
    ["compute", "TREFOIL", "--color-map", "1"],
    ["compute", "TREFOIL", "--color-map", "9=a"],
    ["compute", "TREFOIL", "--stars", "99"],
    ["states", "UNLINK"],
    ["verify", "TREFOIL", "--checks", "nonsense"],
])
def test_input_errors_exit_one(argv):
    argv = [_pd("trefoil_right") if a == "TREFOIL" else _pd("unlink2") if a == "UNLINK" else a for a in argv]
    assert _run(*argv)[0] == 1


def test_malformed_file_exits_one(tmp_path):
    p = tmp_path / "bad.pd"
    p.write_text("link bad\nX(1,2,3)\n")
    assert _run("compute", str(p))[0] == 1


def test_states_text_json_and_dot():
    code, text = _run("states", _pd("trefoil_right"))
    assert code == 0 and text.startswith("3 states; source=")
    code, js = _run("states", _pd("trefoil_right"), "--json")
    assert code == 0 and len(json.loads(js)["nodes"]) == 3
    code, dot = _run("states", _pd("trefoil_right"), "--dot")
    assert code == 0 and dot.startswith("digraph")


def test_matrix_output():
    code, text = _run("matrix", _pd("curl_unknot"))
    assert code == 0
    assert text.splitlines()[0] == "curl_unknot: 1 x 3 (LinkVars); columns are regions [0, 1, 2]"
    code, js = _run("matrix", _pd("trefoil_right"), "Formal", "--json")
    assert code == 0 and json.loads(js)["scheme"] == "Formal"


def test_verify_corpus_passes_and_report_validates():
    code, js = _run("verify", "--json")
    assert code == 0
    obj = json.loads(js)
    jsonschema.validate(obj, _schema("report.schema.json"))
    assert obj["pass"] and obj["axiom_iii"]["pass"]
    assert _run("verify", "--json")[1] == js


def test_verify_directory_and_check_subset(tmp_path):
    assert _run("corpus", str(tmp_path))[0] == 0
    assert len(list(tmp_path.glob("*.pd"))) == len([p for p in CORPUS.iterdir() if p.name.endswith(".pd")])
    code, text = _run("verify", str(tmp_path), "--checks", "clock,stars")
    assert code == 0 and text.endswith("all checks passed\n")


def test_corrupted_weights_fail_verification(monkeypatch):
    bad = WeightScheme(LINKVARS, {(1, 0): LaurentPoly.var(B_VAR)})
    monkeypatch.setitem(SCHEMES, LINKVARS, bad)
    code, text = _run("verify", _pd("trefoil_right"), "--checks", "stars,det")
    assert code == 3
    assert "FAIL" in text and "witness" in text


def test_star_dependence_is_an_invariant_violation(monkeypatch, capsys):
    real = cli.colored_potential

    def fake(d, coloring=None, stars=None):
        v = real(d, coloring, stars)
        return v if stars is None else v + v
    monkeypatch.setattr(cli, "colored_potential", fake)
    assert _run("compute", _pd("trefoil_right"))[0] == 2
    assert "invariant violation" in capsys.readouterr().err


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "clockwork", "compute", _pd("hopf_pos")],
                       capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout == "1\n"
