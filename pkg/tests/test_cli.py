import json

import pytest

from cli import EXIT_FAILED, EXIT_OK, EXIT_USAGE, build_parser, main


@pytest.fixture(autouse=True)
def isolated_env(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    monkeypatch.setenv("FUJIKI_LOG_FILE", str(tmp_path / "cli.log"))
    monkeypatch.setenv("FUJIKI_CACHE_ENABLED", "false")
    monkeypatch.delenv("FUJIKI_CATALOG", raising=False)


def test_parser_requires_a_command():
    with pytest.raises(SystemExit):
        build_parser().parse_args([])


def test_verify_custom_flags_the_erratum(capsys):
    code = main(["verify-custom", "--order-factor", "9", "--b2", "6", "--profile", "a2=45,a4=2"])
    out = capsys.readouterr().out
    assert code == EXIT_FAILED
    assert "1278" in out
    assert "142" in out


def test_verify_custom_passes_for_c2(capsys):
    code = main(["verify-custom", "--order-factor", "6", "--b2", "16", "--profile", "a2=28", "--format", "json"])
    out = capsys.readouterr().out
    assert code == EXIT_OK
    assert '"root": "36"' in out


def test_verify_row(capsys):
    code = main(["--no-cache", "verify", "C2"])
    out = capsys.readouterr().out
    assert code == EXIT_OK
    assert out.splitlines()[0].startswith("group,class,b2,a2")
    assert out.splitlines()[1].startswith("C2,,16,28,")


def test_profile_markdown(capsys):
    code = main(["--no-cache", "profile", "C4", "--format", "markdown"])
    out = capsys.readouterr().out
    assert code == EXIT_OK
    assert out.startswith("| group | class | b2 |")


def test_list_and_surds(capsys):
    assert main(["list"]) == EXIT_OK
    assert "C2p2C4" in capsys.readouterr().out
    assert main(["surds"]) == EXIT_OK
    assert "3720" in capsys.readouterr().out


def test_series(capsys):
    assert main(["series", "--max-n", "6"]) == EXIT_OK
    assert "C2p4" in capsys.readouterr().out


def test_series_json_is_one_document(capsys):
    assert main(["series", "--max-n", "6", "--format", "json"]) == EXIT_OK
    document = json.loads(capsys.readouterr().out)
    assert set(document) == {"rows", "pairs"}
    assert "C2p4" in [row["group"] for row in document["rows"]]
    assert all(pair["distinct"] for pair in document["pairs"])


@pytest.mark.parametrize("argv", [
    ["profile", "C5"],
    ["verify", "A33", "--class", "outer"],
    ["verify-custom", "--order-factor", "9", "--b2", "6", "--profile", "x=1"],
    ["verify-custom", "--order-factor", "nine", "--b2", "6", "--profile", "a2=1"],
    ["series", "--max-n", "2"],
])
def test_usage_errors(argv, capsys):
    assert main(argv) == EXIT_USAGE
    assert "error:" in capsys.readouterr().err


def test_run_launcher_forwards_arguments(monkeypatch, capsys):
    import run

    monkeypatch.setattr("sys.argv", ["run.py", "list"])
    assert run.main() == EXIT_OK
    captured = capsys.readouterr()
    assert "C2p2C4" in captured.out
    assert "No .env file found" in captured.err
