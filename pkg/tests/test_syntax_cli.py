import json
import subprocess
import sys

import pytest

from britton import cli, slp
from britton.alphabet import Alphabet
from britton.errors import WordSyntaxError
from britton.syntax import infer_alphabet, parse_base_word, parse_word

AB = Alphabet(["a", "b"])


# -- word syntax -----------------------------------------------------------------

def test_parse_examples():
    node = parse_base_word("(a b)^8", AB)
    assert slp.expand_node(node).tolist() == [1, 2] * 8
    assert parse_word("t^-1 a t", Alphabet(["a"]), "t")[0] == -1
    stream = parse_word("t^-1 a t", Alphabet(["a"]), "t")
    assert stream[0] == -1 and stream[2] == 1 and slp.expand_node(stream[1]).tolist() == [1]
    big = parse_base_word("(a b)^(2^20)", AB)
    assert big.length == 2**21 and slp.dag_size(big) <= 60


def test_exponent_forms():
    assert parse_base_word("a^2^3", AB).length == 8
    assert parse_base_word("((a)^(3*2^4))^-1", AB).length == 48
    assert slp.expand_node(parse_base_word("(a b^-1)^-2", AB)).tolist() == [2, -1, 2, -1]
    assert parse_base_word("a^0 b", AB).length == 1
    assert parse_base_word("", AB).length == 0


def test_stable_groups_repeat():
    stream = parse_word("(t a)^2 t^-2", Alphabet(["a"]), "t")
    signs = [x for x in stream if isinstance(x, int)]
    assert signs == [1, 1, -1, -1]


@pytest.mark.parametrize("text, pos", [("a )", 2), ("(a b", 4), ("a ^", 3), ("a $", 2), ("c", 0),
                                       ("a^(2^9999999)", 3)])
def test_syntax_errors_carry_position(text, pos):
    with pytest.raises(WordSyntaxError) as info:
        parse_base_word(text, AB)
    assert info.value.position == pos


def test_infer_alphabet():
    assert infer_alphabet("b (a c)^3 t", exclude=["t"]).names == ("b", "a", "c")


# -- CLI ---------------------------------------------------------------------------

def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_hnn_preset(capsys):
    code, out, err = run(capsys, "hnn", "--preset", "bs12", "--word", "t^-1 a t (a^-1)^2")
    assert (code, out) == (0, "identity: true\n")
    assert err.startswith("seed=")
    code, out, _ = run(capsys, "hnn", "--preset", "bs12", "--word", "t a t^-1")
    assert (code, out) == (1, "identity: false\n")


def test_hnn_group_file(capsys, tmp_path):
    path = tmp_path / "grp.json"
    path.write_text(json.dumps({"alphabet": ["a", "b"], "stable": "s", "g": "a b", "h": "b"}))
    code, out, _ = run(capsys, "hnn", "--group", str(path), "--word", "s^-1 (a b)^5 s b^-5",
                       "--replacement", "eta", "--order", "rightmost")
    assert (code, out) == (0, "identity: true\n")


def test_power_and_wp(capsys, tmp_path):
    path = tmp_path / "g20.json"
    slp.dump_grammar(slp.doubling_grammar(20), path)
    assert run(capsys, "power", "--word", "a b", "--grammar", str(path))[:2] == (0, "z=1048576\n")
    assert run(capsys, "power", "--word", "b a", "--grammar", str(path))[:2] == (1, "none\n")
    assert run(capsys, "power", "--word", "a", "--target", "(a)^(2^70)")[:2] == (0, f"z={2**70}\n")
    assert run(capsys, "wp", "--word", "a a^-1")[:2] == (0, "identity: true\n")
    assert run(capsys, "wp", "--word", "a b")[:2] == (1, "identity: false\n")
    assert run(capsys, "wp", "--word", "(a b)^(2^30) (b^-1 a^-1)^(2^30)")[:2] == (0, "identity: true\n")
    assert run(capsys, "cwp", "--grammar", str(path))[:2] == (1, "identity: false\n")
    assert run(capsys, "cwp", "--word", "(a b)^99 (b^-1 a^-1)^99")[:2] == (0, "identity: true\n")


def test_ascending_and_gog(capsys, tmp_path):
    assert run(capsys, "ascending", "--preset", "bs12", "--word", "t^-1 a t a^-2")[:2] == (0, "identity: true\n")
    grp = tmp_path / "asc.json"
    grp.write_text(json.dumps({"alphabet": ["a", "b"], "phi": {"a": "a b", "b": "b"}}))
    assert run(capsys, "ascending", "--group", str(grp), "--word", "t^-1 a t b^-1 a^-1")[:2] == (0, "identity: true\n")
    graph = tmp_path / "graph.json"
    graph.write_text(json.dumps({"vertices": {"u": {"alphabet": ["a"]}, "v": {"alphabet": ["b"]}},
                                 "edges": [{"name": "e", "from": "u", "to": "v", "alpha_image": "a",
                                            "omega_image": "b b"}]}))
    word = json.dumps({"base": "u", "items": ["", "e", "b b", "e^-1", "a^-1"]})
    code, out, _ = run(capsys, "gog", "--graph", str(graph), "--word", word, "--trace")
    assert code == 0 and out.splitlines()[-1] == "identity: true"
    assert out.startswith("step=1 index=1 edge=e ell=1")


def test_validate(capsys, tmp_path):
    good = tmp_path / "good.json"
    slp.dump_grammar(slp.doubling_grammar(3), good)
    assert run(capsys, "validate", "--grammar", str(good))[:2] == (0, "ok\n")
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"alphabet": ["a"], "start": "S", "rules": {"S": [{"v": "S"}]}}))
    code, out, _ = run(capsys, "validate", "--grammar", str(bad))
    assert code == 1 and "cycle" in out
    graph = tmp_path / "graph.json"
    graph.write_text(json.dumps({"vertices": {"v": {"alphabet": ["a"]}},
                                 "edges": [{"name": "e", "from": "v", "to": "v", "alpha_image": "",
                                            "omega_image": "a"}]}))
    code, out, _ = run(capsys, "validate", "--graph", str(graph))
    assert code == 1 and "orders" in out


@pytest.mark.parametrize("argv", [
    ["hnn", "--preset", "bs12", "--word", "t^-1 a ) t"],
    ["hnn", "--preset", "bs12", "--word", "t^-1 b t"],
    ["hnn", "--word", "a"],
    ["power", "--word", "a", "--grammar", "/nonexistent.json"],
    ["gog", "--graph", "/nonexistent.json", "--word", "{}"],
    ["validate"],
])
def test_input_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and "error:" in err


def test_bench_csv(capsys):
    code, out, _ = run(capsys, "bench", "--family", "bs12", "--min-n", "1", "--max-n", "6", "--backend", "both")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "time_ms,s_initial,s_final,steps"
    assert len(lines) == 13
    for line in lines[1:]:
        fields = line.split(",")
        assert len(fields) == 4 and float(fields[0]) >= 0


def test_bench_parallel(capsys):
    code, out, _ = run(capsys, "bench", "--min-n", "30", "--max-n", "33", "--jobs", "2", "--replacement", "eta")
    assert code == 0 and len(out.splitlines()) == 5
    assert [line.split(",")[3] for line in out.splitlines()[1:]] == ["30", "31", "32", "33"]


def test_seed_determinism(capsys):
    argv = ["hnn", "--preset", "bs12", "--word", "t^-3 a t^3 (a^8)^-1", "--trace", "--seed", "42"]
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second
    assert first[2] == "seed=42\n"


def test_env_seed_overrides_flag(capsys, monkeypatch):
    monkeypatch.setenv("BRITTON_SEED", "7")
    code, _, err = run(capsys, "wp", "--word", "a", "--seed", "3")
    assert err == "seed=7\n"


def test_module_entry_point_byte_identical():
    argv = [sys.executable, "-m", "britton", "hnn", "--preset", "bs12", "--seed", "5", "--trace",
            "--word", "t^-40 a t^40 ((a)^(2^40))^-1"]
    a = subprocess.run(argv, capture_output=True, check=False)
    b = subprocess.run(argv, capture_output=True, check=False)
    assert a.returncode == 0
    assert a.stdout == b.stdout and a.stderr == b.stderr
    assert a.stdout.decode().endswith("identity: true\n")
