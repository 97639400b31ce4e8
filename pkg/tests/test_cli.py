import json

import pytest

from closedgraphs.cli import main, parse_labelling_spec, parse_order_spec
from closedgraphs.errors import LabellingError, OrderSpecError


@pytest.fixture
def files(tmp_path):
    docs = {
        "path3.el": "a b\nb c\n",
        "path4.el": "a b\nb c\nc d\n",
        "k3.el": "1 2\n1 3\n2 3\n",
        "k13.el": "1 2\n1 3\n1 4\n",
        "c4.el": "1 2\n2 3\n3 4\n1 4\n",
        "edge.el": "1 2\n",
        "apex.el": "a b\na f\nb f\na e\ne f\nb c\nc f\nd e\nd f\n",
        "chain.el": "a b\na c\nb c\nb d\nb e\nc d\nc e\nd e\nb f\ne f\n",
        "loop.el": "x x\n",
        "big.el": "".join(f"{i} {i + 1}\n" for i in range(1, 30)),
    }
    for name, text in docs.items():
        (tmp_path / name).write_text(text)
    return tmp_path


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_closed(files, capsys):
    code, out, _ = run(capsys, "check", files / "path3.el")
    assert code == 0
    assert "closed: yes" in out
    assert "labelling: a=1 b=2 c=3" in out


def test_check_claw(files, capsys):
    code, out, _ = run(capsys, "check", files / "k13.el")
    assert code == 1
    assert "closed: no" in out
    assert "induced claw: center 1" in out


def test_check_missing_file(files, capsys):
    code, _, err = run(capsys, "check", files / "nope.el")
    assert code == 2
    assert "error" in err


def test_check_loop_file(files, capsys):
    code, _, err = run(capsys, "check", files / "loop.el")
    assert code == 2
    assert "loop" in err


def test_label_closed(files, capsys):
    code, out, _ = run(capsys, "label", files / "path4.el")
    assert code == 0
    assert out.strip() == "a=1 b=2 c=3 d=4"


def test_label_not_closed(files, capsys):
    code, out, _ = run(capsys, "label", files / "c4.el")
    assert code == 1
    assert out.strip() == "not closed"


def test_complex_apex_order(files, capsys):
    code, out, _ = run(capsys, "complex", files / "apex.el")
    assert "order: F3, F1, F2, F4" in out
    assert "linear quasi-tree: yes" in out


def test_complex_chain_report(files, capsys):
    code, out, _ = run(capsys, "complex", files / "chain.el")
    assert code == 1
    assert "linear quasi-tree: yes" in out
    assert "closed: no" in out
    assert "covering condition fails at i=1, d=1" in out


def test_complex_k4_trivially_closed(files, tmp_path, capsys):
    (tmp_path / "k4.el").write_text("1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n")
    code, out, _ = run(capsys, "complex", tmp_path / "k4.el")
    assert code == 0
    assert "closed: yes" in out


def test_gb_k3(files, capsys):
    code, out, _ = run(capsys, "gb", files / "k3.el", "--order", "lex")
    assert code == 0
    assert "quadratic: yes" in out
    assert out.count(" - ") == 3  # three binomials


def test_gb_claw_lists_cubic(files, capsys):
    code, out, _ = run(capsys, "gb", files / "k13.el", "--order", "lex")
    assert code == 1
    assert "max degree 3" in out
    assert "quadratic: no" in out


def test_gb_single_edge(files, capsys):
    code, out, _ = run(capsys, "gb", files / "edge.el")
    assert code == 0
    assert "x1*y2 - x2*y1" in out


def test_gb_bad_order_spec(files, capsys):
    code, _, err = run(capsys, "gb", files / "k3.el", "--order", "fancy")
    assert code == 2
    code, _, err = run(capsys, "gb", files / "k3.el", "--order", "lex:0,1")
    assert code == 2


def test_gb_explicit_labelling(files, capsys):
    code, out, _ = run(capsys, "gb", files / "edge.el", "--labelling", "1=2,2=1")
    assert code == 0
    assert "labelling: 2=1 1=2" in out


def test_verify_claw_all_pass(files, capsys):
    code, out, _ = run(capsys, "verify", files / "k13.el", "--trials", "10", "--seed", "1")
    assert code == 0
    assert "all checks passed" in out


def test_verify_c4(files, capsys):
    code, out, _ = run(capsys, "verify", files / "c4.el", "--trials", "5", "--seed", "2")
    assert code == 0
    assert "closed: no" in out


def test_verify_cap_exceeded(files, capsys):
    code, _, err = run(capsys, "verify", files / "big.el")
    assert code == 2
    assert "capped" in err or "cap" in err


def test_oracle_commands(files, capsys):
    code, out, _ = run(capsys, "oracle", files / "path3.el")
    assert code == 0 and "closed" in out
    code, out, _ = run(capsys, "oracle", files / "k13.el")
    assert code == 1
    assert "not closed" in out


def test_cap_env_override(files, capsys, monkeypatch):
    monkeypatch.setenv("CLOSEDGRAPHS_CAP", "3")
    code, _, err = run(capsys, "oracle", files / "k13.el")
    assert code == 2
    # explicit flag beats the environment
    code, _, _ = run(capsys, "oracle", files / "k13.el", "--cap", "5")
    assert code == 1


def test_json_outputs_are_deterministic(files, capsys):
    argvs = [
        ["check", files / "c4.el", "--json"],
        ["complex", files / "chain.el", "--json"],
        ["gb", files / "k13.el", "--json"],
        ["verify", files / "k3.el", "--json", "--trials", "5", "--seed", "7"],
        ["oracle", files / "path4.el", "--json"],
    ]
    for argv in argvs:
        code1, out1, _ = run(capsys, *argv)
        code2, out2, _ = run(capsys, *argv)
        assert out1 == out2
        json.loads(out1)  # payload is valid JSON


def test_check_json_payload(files, capsys):
    code, out, _ = run(capsys, "check", files / "chain.el", "--json")
    payload = json.loads(out)
    assert payload["closed"] is False
    assert payload["failure"]["stage"] == "closed-complex"
    assert payload["failure"]["violation"] == {"condition": "covering", "indices": [1, 1]}
    assert payload["claw"] == {"center": "b", "leaves": ["a", "d", "f"]}


def test_complex_json_payload(files, capsys):
    code, out, _ = run(capsys, "complex", files / "apex.el", "--json")
    payload = json.loads(out)
    assert payload["order"] == [2, 0, 1, 3]
    assert payload["facets"][2] == ["b", "c", "f"]


def test_verify_json_has_no_timing(files, capsys):
    code, out, _ = run(capsys, "verify", files / "k3.el", "--json", "--trials", "3")
    payload = json.loads(out)
    assert "elapsed_seconds" not in payload
    assert payload["all_passed"] is True


def test_parse_order_spec_roundtrip():
    o = parse_order_spec("degrevlex:3,2,1,0:1,0,2,0", 2)
    assert o.base == "degrevlex"
    assert o.perm == (3, 2, 1, 0)
    assert o.weights == (1, 0, 2, 0)
    with pytest.raises(OrderSpecError):
        parse_order_spec("lex:0,0,1,2", 2)
    with pytest.raises(OrderSpecError):
        parse_order_spec("lex:a,b", 1)


def test_parse_labelling_spec():
    lab = parse_labelling_spec("a=2,b=1")
    assert dict(lab) == {"a": 2, "b": 1}
    with pytest.raises(LabellingError):
        parse_labelling_spec("a:1")
