from __future__ import annotations

from pathlib import Path

import pytest

from tpclab.settings import LedgerSettings, Settings, set_settings


@pytest.fixture(autouse=True)
def pinned_settings(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Settings:
    """Built-in defaults, ledger under tmp_path, no environment overrides."""
    for name in ("TPCLAB_CONFIG", "TPCLAB_PAIR_BUDGET", "TPCLAB_WORKERS", "TPCLAB_ELEMENT_CAP", "TPCLAB_LEDGER"):
        monkeypatch.delenv(name, raising=False)
    settings = Settings(ledger=LedgerSettings(enabled=True, path=tmp_path / "runs.jsonl"))
    set_settings(settings)
    yield settings
    set_settings(None)
