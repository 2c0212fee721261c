import io

import pytest

from taumut.cli import run, shipped_configs
from taumut.config import ConfigError, parse_config


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def test_shipped_configs():
    assert {"a2", "a3", "a3_t2", "a3_t3", "a2_t3", "d4"} <= set(shipped_configs())


def test_config_grammar():
    cfg = parse_config("[quiver]\nvertices = 2\narrow a = 1 -> 2\n[coefficients]\ntype = truncated_polynomial\nt = 3\n")
    assert cfg.quiver.n == 2 and cfg.quiver.arrows[0].name == "a"
    assert cfg.coefficients.dim == 3


@pytest.mark.parametrize("text", [
    "[quiver]\narrow a = 1 -> 2\n",
    "[quiver]\nvertices = 2\narrow a = 1 -> 3\n",
    "[quiver]\nvertices = 2\narrow a = 1 - 2\n",
    "[quiver]\nvertices = 2\nedge a = 1 -> 2\n",
    "[quiver]\nvertices = 1\n[coefficients]\ntype = polynomial\n",
    "[quiver]\nvertices = 1\n[coefficients]\ntype = structure_constants\ndim = 2\nproduct 1 1 = 0:1\n",
    "no sections at all",
])
def test_malformed_configs(text):
    with pytest.raises(ConfigError):
        parse_config(text)


def test_structure_constants_config():
    cfg = parse_config("[quiver]\nvertices = 1\n[coefficients]\ntype = structure_constants\ndim = 2\n")
    assert cfg.coefficients.dim == 2 and cfg.coefficients.is_self_injective()


def test_catalog_command():
    code, out = call("--config", "a3", "catalog")
    assert code == 0
    # P1 = I3 is projective-injective
    assert out.splitlines()[0] == "P1 dims=(1,1,1) tau=- tau_inv=-"
    assert "P2 dims=(0,1,1) tau=- tau_inv=I2" in out
    assert len(out.splitlines()) == 6


def test_taurigid_command():
    code, out = call("--config", "a3_t2", "taurigid")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 6
    assert "Ind(S2) dims=(0,2,0) alias=M" in lines


def test_sequences_command():
    code, out = call("--config", "a2", "sequences")
    assert code == 0 and out.splitlines() == ["(I1,P2)", "(P1,I1)", "(P2,P1)"]


def test_mutate_command():
    assert call("--config", "a3_t2", "mutate", "--seq", "(P3,P2,P1)", "--i", "1") == (0, "(M,P3,P1)\n")
    assert call("--config", "a3_t2", "mutate", "--seq", "(I_2,I_1,P_3)", "--i", "1", "--right") == (0, "(I1,M,P3)\n")
    assert call("--config", "a3_t2", "mutate", "--seq", "(I1,Ind(S_2),P3)", "--i", "2")[1] == "(I1,P2,M)\n"


@pytest.mark.parametrize("argv", [
    ["--config", "a3_t2", "mutate", "--seq", "(P3,P2,P1)", "--i", "3"],
    ["--config", "a3_t2", "mutate", "--seq", "(S2,P3,P1)", "--i", "1"],
    ["--config", "a3_t2", "mutate", "--seq", "P3,P2,P1", "--i", "1"],
    ["--config", "a3_t2", "verify", "--checks", ""],
    ["--config", "a3_t2", "verify", "--checks", "nonsense"],
    ["--config", "a3", "verify", "--checks", "figure1"],
    ["--config", "no_such_config", "catalog"],
    ["--config", "a3_t2", "module", "--dump", "Q7"],
])
def test_usage_errors(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        run(argv)
    assert exc.value.code == 2


def test_verify_command():
    code, out = call("--config", "a3_t2", "verify", "--checks", "braid,transitivity,figure1")
    assert code == 0
    assert [ln.split()[:3] for ln in out.splitlines()] == [
        ["CHECK", "braid", "PASS"], ["CHECK", "transitivity", "PASS"], ["CHECK", "figure1", "PASS"]]


def test_verify_prime_cross_check():
    code, out = call("--config", "a3_t2", "--prime", "10007", "verify", "--checks", "catalog")
    assert code == 0 and "CHECK prime PASS 36/36 Hom dimensions agree modulo 10007" in out


def test_bare_prime_uses_default():
    code, out = call("--config", "a3_t2", "--prime", "verify", "--checks", "catalog")
    assert code == 0 and "modulo 32003" in out


def test_verify_failure_sets_exit_code(monkeypatch):
    from taumut.workspace import Workspace
    monkeypatch.setattr(Workspace, "_check_braid", lambda self: (False, "forced"))
    code, out = call("--config", "a2", "verify", "--checks", "braid")
    assert code == 1 and out == "CHECK braid FAIL forced\n"


def test_graph_command(tmp_path):
    path = tmp_path / "g.dot"
    code, out = call("--config", "a3_t2", "graph", "--dot", str(path))
    assert code == 0 and out.startswith("16 vertices, 32 edges")
    text = path.read_text()
    assert text.count("->") == 32 and text.count("style=dashed") == 16
    assert '"(P3,P2,P1)" -> "(M,P3,P1)" [style=solid];' in text


def test_module_dump():
    code, out = call("--config", "a3_t2", "module", "--dump", "M")
    assert code == 0
    assert out.splitlines()[:2] == ["module Ind(S2) over Lambda", "dims = [0,2,0]"]


def test_config_file_path(tmp_path):
    p = tmp_path / "k.ini"
    p.write_text("[quiver]\nvertices = 2\narrow a = 2 -> 1\n")
    code, out = call("--config", str(p), "sequences")
    assert code == 0 and len(out.splitlines()) == 3
