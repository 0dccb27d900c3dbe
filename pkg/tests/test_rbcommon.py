import json

import colorama

import param
import rbcommon
from rbcommon import DslSyntaxError, RbidentError


def test_readconfig_defaults_and_file(tmp_path):
    ini = tmp_path / "rbident.ini"
    ini.write_text("[verify]\nsamples = 50\n", encoding="utf-8")
    config = rbcommon.readconfig(ini, {"verify": {"samples": "200", "bound": "3"}})
    assert config.getint("verify", "samples") == 50
    assert config.getint("verify", "bound") == 3
    missing = rbcommon.readconfig(tmp_path / "missing.ini", {"worker": {"threads": "2"}})
    assert missing.getint("worker", "threads") == 2


def test_shipped_parameters():
    assert param.config.getint("verify", "grid") == 6
    assert param.config.getint("idspace", "stable_batches") == 3
    assert not param.config.getboolean("repro", "deg5_search")


def test_syntax_error_position():
    error = DslSyntaxError("expected ')'", 2, 7)
    assert isinstance(error, RbidentError)
    assert (error.line, error.col) == (2, 7)
    assert str(error) == "expected ')' (line 2, col 7)"


def test_colored():
    assert rbcommon.colored("ok", "GREEN", use_color=False) == "ok"
    assert rbcommon.colored("ok", "GREEN") == colorama.Fore.GREEN + "ok" + colorama.Fore.RESET


def test_json_and_output(tmp_path, capsys):
    text = rbcommon.to_json({"b": 1, "a": "λ1"})
    assert text.index('"a"') < text.index('"b"')
    assert "λ1" in text
    rbcommon.write_output(text)
    assert json.loads(capsys.readouterr().out) == {"a": "λ1", "b": 1}
    target = tmp_path / "out.json"
    rbcommon.write_output(text, str(target))
    assert target.read_text(encoding="utf-8") == text + "\n"
