import json

import pytest

from cache_manager import PersistentCacheManager
from config import load_settings
from utils.cache_decorator import cache_computation, configure_cache
from utils.formatting import TABLE_COLUMNS, markdown_cell, render_json_document, render_records

RECORDS = [
    {"group": "C4", "class": "", "c4": "261/2", "verified": True},
    {"group": "A33", "class": "not-id", "c4": "146/3", "verified": False},
]


def test_csv_keeps_rationals():
    text = render_records(RECORDS, "csv")
    assert text.splitlines() == [
        "group,class,c4,verified",
        "C4,,261/2,True",
        "A33,not-id,146/3,False",
    ]


def test_json_output():
    data = json.loads(render_records(RECORDS, "json"))
    assert data[1] == {"group": "A33", "class": "not-id", "c4": "146/3", "verified": False}


def test_json_document_sections():
    text = render_json_document({"rows": RECORDS, "headline": 34}, {"rows": ["verified", "group"]})
    data = json.loads(text)
    assert data["headline"] == 34
    assert list(data["rows"][0]) == ["verified", "group"]


def test_markdown_rewrites_halves_only():
    text = render_records(RECORDS, "markdown")
    lines = text.splitlines()
    assert lines[0] == "| group | class | c4 | verified |"
    assert lines[2] == "| C4 |  | 130.5 | true |"
    assert lines[3] == "| A33 | not-id | 146/3 | false |"
    assert markdown_cell("-7/2") == "-3.5"


def test_unknown_format():
    with pytest.raises(ValueError):
        render_records(RECORDS, "xml")


def test_table_columns_header():
    assert TABLE_COLUMNS[:3] == ["group", "class", "b2"]
    assert TABLE_COLUMNS[-1] == "verified"


def test_cache_manager_round_trip(tmp_path):
    cache = PersistentCacheManager("profiles.json", str(tmp_path))
    cache.set("k", {"a2": 28})
    assert cache.get("k") == {"a2": 28}
    assert cache.get("k", ttl=0) is None
    assert cache.get("missing") is None

    cache.set("k", [1, 2])
    reloaded = PersistentCacheManager("profiles.json", str(tmp_path))
    assert reloaded.get("k") == [1, 2]
    reloaded.clear()
    assert reloaded.get_stats()["total_entries"] == 0


def test_cache_manager_cleanup(tmp_path):
    cache = PersistentCacheManager("profiles.json", str(tmp_path))
    cache.set("old", 1)
    cache.cleanup_expired(ttl=0)
    assert cache.get("old") is None


def test_cache_decorator(tmp_path, no_cache):
    calls = []

    @cache_computation()
    def square(x):
        calls.append(x)
        return x * x

    assert square(3) == 9
    assert square(3) == 9
    assert calls == [3, 3]

    configure_cache(True, str(tmp_path))
    assert square(4) == 16
    assert square(4) == 16
    assert calls == [3, 3, 4]


def test_settings_from_environment(monkeypatch):
    monkeypatch.setenv("FUJIKI_MAX_WORKERS", "3")
    monkeypatch.setenv("FUJIKI_CACHE_ENABLED", "yes")
    monkeypatch.setenv("FUJIKI_LOG_LEVEL", "debug")
    settings = load_settings()
    assert settings.max_workers == 3
    assert settings.cache_enabled
    assert settings.log_level == "DEBUG"


def test_setup_environment_check(monkeypatch, tmp_path):
    import setup

    monkeypatch.setenv("FUJIKI_MAX_WORKERS", "4")
    monkeypatch.delenv("FUJIKI_CATALOG", raising=False)
    assert setup.check_environment()

    monkeypatch.setenv("FUJIKI_MAX_WORKERS", "four")
    assert not setup.check_environment()

    monkeypatch.setenv("FUJIKI_MAX_WORKERS", "4")
    monkeypatch.setenv("FUJIKI_CATALOG", str(tmp_path / "missing.json"))
    assert not setup.check_environment()
