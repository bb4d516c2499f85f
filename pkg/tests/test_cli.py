import io
import json
from pathlib import Path

import pytest

from quiverpoly.cli import run

DATA = Path(__file__).resolve().parent.parent / "data"
INTRO = str(DATA / "intro.json")


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def test_compute_ratio_text():
    code, text = call("compute", "--formula", "ratio", INTRO)
    assert code == 0
    line = text.splitlines()[1]
    assert line.startswith("ratio: a1*b1 + a1*b2 + a1*b3 - a1*c1")
    assert line.endswith("+ c3*d1") and line.count("*") == 12


def test_compute_all_json_hashes_agree():
    code, text = call("compute", "--formula", "all", "--format", "json", INTRO)
    assert code == 0
    data = json.loads(text)
    assert len(data["results"]) == 6
    assert len({v["hash"] for v in data["results"].values()}) == 1
    # JSON uses the plain x{block}_{index} names
    assert data["results"]["ratio"]["polynomial"][0][0][0][0].startswith("x0_")


def test_output_is_byte_deterministic():
    assert call("verify", INTRO, "--format", "json") == call("verify", INTRO, "--format", "json")


@pytest.mark.parametrize("cmd", ["laces", "pipedreams", "peelables", "factorseq", "constants", "zelevinsky"])
def test_listing_commands(cmd):
    code, text = call(cmd, INTRO)
    assert code == 0 and text.startswith("dims 1 3 3 1")


def test_lace_counts_in_text():
    assert "|W(r)| = 3" in call("laces", INTRO)[1]
    assert "v(r) = 5 2 3 6 1 4 8 7" in call("zelevinsky", INTRO)[1]


def test_inline_lace_input():
    code, text = call("laces", "--json", '{"lace": [[0, 2, 1], [1, 1, 1], [1, 3, 1], [2, 2, 1]]}')
    assert code == 0 and "|W(r)| = 3" in text


def test_negative_lace_count_exits_2(capsys):
    code, _ = call("compute", "--json", '{"lace": [[0, 1, -1], [1, 2, 1]]}')
    assert code == 2
    assert "(0, 1)" in capsys.readouterr().err


def test_bad_inputs_exit_2(tmp_path):
    assert call("compute", "--json", "{not json")[0] == 2
    assert call("compute", "--json", '{"ranks": [[1], [2]]}')[0] == 2
    assert call("compute", str(tmp_path / "missing.json"))[0] == 2
    assert call("compute")[0] == 2
    assert call("frobnicate")[0] == 2
    assert call("compute", "--bogus", INTRO)[0] == 2


def test_verify_failure_exits_1(monkeypatch):
    import quiverpoly.engine as engine

    real = engine.compute

    def broken(r, f, double=False):
        res = real(r, f, double)
        if f is engine.Formula.PIPE:
            res.value = res.value + 1
        return res

    monkeypatch.setattr(engine, "compute", broken)
    code, text = call("verify", INTRO)
    assert code == 1 and "[FAIL] pipe == ratio" in text


def test_verify_double_text():
    code, text = call("verify", "--double", INTRO)
    assert code == 0 and "[pass] double Schubert component sum differs" in text
