import json
import shutil

import pytest

from curvalg.cli import main
from curvalg.reports import FIXTURES_ENV, default_fixture_dir


def run(capsys, *args):
    code = main(list(args))
    return code, capsys.readouterr().out


def test_table_text(capsys):
    code, out = run(capsys, "table", "1")
    assert code == 0
    assert "PASS (15 rows)" in out
    assert "12  !=0    12          20" in out


def test_table_output_is_deterministic(capsys):
    _, first = run(capsys, "table", "2")
    _, second = run(capsys, "table", "2")
    assert first == second


def test_epsilon_filter(capsys):
    code, out = run(capsys, "--epsilon", "+1", "table", "1")
    assert code == 0
    assert "len eps=+1" in out and "len eps=-1" not in out


def test_json_format(capsys):
    code, out = run(capsys, "--format", "json", "table", "summary")
    assert code == 0
    data = json.loads(out)
    assert data["ok"] is True
    assert data["name"] == "summary"
    assert ["+1", "12", "{-1, 0, 1, 2}"] in data["rows"]


def test_csv_format(capsys):
    code, out = run(capsys, "--format", "csv", "check", "sec7")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "report,relation,result"
    assert "check sec7,STATUS,ok" in lines


def test_appendix_subcommand(capsys):
    code, out = run(capsys, "appendix", "C16")
    assert code == 0
    assert "match" in out


def test_check_subcommands(capsys):
    for which in ("thm65", "sec7", "gammahat"):
        code, out = run(capsys, "check", which)
        assert code == 0, which
        assert "PASS" in out


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["table", "seven"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


def _copy_fixtures(tmp_path):
    target = tmp_path / "fixtures"
    target.mkdir()
    src = default_fixture_dir()
    for entry in src.iterdir():
        shutil.copyfile(str(entry), target / entry.name)
    return target


def test_fixture_dir_override(tmp_path, capsys):
    target = _copy_fixtures(tmp_path)
    code, out = run(capsys, "--fixtures", str(target), "appendix", "B")
    assert code == 0


def test_corrupted_fixture_fails(tmp_path, capsys):
    target = _copy_fixtures(tmp_path)
    path = target / "appendix_b_plus.txt"
    path.write_text(path.read_text().replace("1/12 * U[jrl]", "1/11 * U[jrl]"))
    code, out = run(capsys, "--fixtures", str(target), "appendix", "B")
    assert code == 1
    assert "MISMATCH" in out
    assert "first divergence" in out


def test_missing_fixture_fails(tmp_path, capsys):
    target = _copy_fixtures(tmp_path)
    (target / "appendix_b_plus.txt").unlink()
    code, out = run(capsys, "--fixtures", str(target), "appendix", "B")
    assert code == 1
    assert "not found" in out


def test_fixture_env_override(tmp_path, capsys, monkeypatch):
    target = _copy_fixtures(tmp_path)
    monkeypatch.setenv(FIXTURES_ENV, str(target))
    code, _ = run(capsys, "appendix", "D")
    assert code == 0
    (target / "appendix_d_nu_2_minus.txt").unlink()
    code, _ = run(capsys, "appendix", "D")
    assert code == 1
