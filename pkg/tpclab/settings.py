#!/usr/bin/env python3
"""
tpclab configuration

Loads `config/tpclab.yaml` into frozen dataclasses and validates every knob.
Resolution order for the file:
- explicit path (CLI `--config`)
- TPCLAB_CONFIG
- `config/tpclab.yaml` at the project root
- built-in defaults when no file exists

Single knobs can be overridden from the environment:
TPCLAB_PAIR_BUDGET, TPCLAB_WORKERS, TPCLAB_ELEMENT_CAP, TPCLAB_LEDGER.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any

import yaml

PROJECT_ROOT = Path(__file__).resolve().parents[1]
DEFAULT_CONFIG_PATH = PROJECT_ROOT / "config" / "tpclab.yaml"
DEFAULT_LEDGER_PATH = Path.home() / ".tpclab" / "runs.jsonl"


class SettingsError(RuntimeError):
    pass


@dataclass(frozen=True)
class CheckerSettings:
    pair_budget: int = 10_000_000
    workers: int = 1


@dataclass(frozen=True)
class HamiltonianSettings:
    node_budget: int = 2_000_000


@dataclass(frozen=True)
class EnumerationSettings:
    max_vertices: int = 7


@dataclass(frozen=True)
class OracleSettings:
    element_cap: int = 14
    workers: int = 1


@dataclass(frozen=True)
class SearchSettings:
    local_budget: int = 20_000
    exhaustive_cap: int = 16


@dataclass(frozen=True)
class ColorerSettings:
    verify_max_vertices: int = 40


@dataclass(frozen=True)
class HuntSettings:
    n_max: int = 4
    budget_seconds: float = 300.0


@dataclass(frozen=True)
class LedgerSettings:
    enabled: bool = True
    path: Path = DEFAULT_LEDGER_PATH


@dataclass(frozen=True)
class Settings:
    checker: CheckerSettings = field(default_factory=CheckerSettings)
    hamiltonian: HamiltonianSettings = field(default_factory=HamiltonianSettings)
    enumeration: EnumerationSettings = field(default_factory=EnumerationSettings)
    oracle: OracleSettings = field(default_factory=OracleSettings)
    search: SearchSettings = field(default_factory=SearchSettings)
    colorers: ColorerSettings = field(default_factory=ColorerSettings)
    hunt: HuntSettings = field(default_factory=HuntSettings)
    ledger: LedgerSettings = field(default_factory=LedgerSettings)

    def validate(self) -> None:
        positive = {
            "checker.pair_budget": self.checker.pair_budget,
            "checker.workers": self.checker.workers,
            "hamiltonian.node_budget": self.hamiltonian.node_budget,
            "enumeration.max_vertices": self.enumeration.max_vertices,
            "oracle.element_cap": self.oracle.element_cap,
            "oracle.workers": self.oracle.workers,
            "search.local_budget": self.search.local_budget,
            "search.exhaustive_cap": self.search.exhaustive_cap,
            "colorers.verify_max_vertices": self.colorers.verify_max_vertices,
            "hunt.n_max": self.hunt.n_max,
        }
        for key, value in positive.items():
            if value < 1:
                raise SettingsError(f"{key} must be >= 1, got {value!r}")
        if self.hunt.budget_seconds <= 0:
            raise SettingsError(f"hunt.budget_seconds must be > 0, got {self.hunt.budget_seconds!r}")
        if self.hunt.n_max < 2:
            raise SettingsError("hunt.n_max must be >= 2")


def _section(payload: dict[str, Any], name: str) -> dict[str, Any]:
    raw = payload.get(name)
    if raw is None:
        return {}
    if not isinstance(raw, dict):
        raise SettingsError(f"Section `{name}` must be a mapping")
    return raw


def _int(section: dict[str, Any], name: str, key: str, default: int) -> int:
    value = section.get(key, default)
    if isinstance(value, bool) or not isinstance(value, int):
        raise SettingsError(f"{name}.{key} must be an integer, got {value!r}")
    return value


def _number(section: dict[str, Any], name: str, key: str, default: float) -> float:
    value = section.get(key, default)
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise SettingsError(f"{name}.{key} must be a number, got {value!r}")
    return float(value)


def parse_settings(payload: dict[str, Any]) -> Settings:
    if not isinstance(payload, dict):
        raise SettingsError("Config YAML must be a mapping at the top level")

    checker = _section(payload, "checker")
    ham = _section(payload, "hamiltonian")
    enum = _section(payload, "enumeration")
    oracle = _section(payload, "oracle")
    search = _section(payload, "search")
    colorers = _section(payload, "colorers")
    hunt = _section(payload, "hunt")
    ledger = _section(payload, "ledger")

    ledger_path_raw = ledger.get("path")
    if ledger_path_raw is not None and not isinstance(ledger_path_raw, str):
        raise SettingsError(f"ledger.path must be a string or null, got {ledger_path_raw!r}")
    enabled = ledger.get("enabled", True)
    if not isinstance(enabled, bool):
        raise SettingsError(f"ledger.enabled must be a boolean, got {enabled!r}")

    settings = Settings(
        checker=CheckerSettings(
            pair_budget=_int(checker, "checker", "pair_budget", 10_000_000),
            workers=_int(checker, "checker", "workers", 1),
        ),
        hamiltonian=HamiltonianSettings(
            node_budget=_int(ham, "hamiltonian", "node_budget", 2_000_000),
        ),
        enumeration=EnumerationSettings(
            max_vertices=_int(enum, "enumeration", "max_vertices", 7),
        ),
        oracle=OracleSettings(
            element_cap=_int(oracle, "oracle", "element_cap", 14),
            workers=_int(oracle, "oracle", "workers", 1),
        ),
        search=SearchSettings(
            local_budget=_int(search, "search", "local_budget", 20_000),
            exhaustive_cap=_int(search, "search", "exhaustive_cap", 16),
        ),
        colorers=ColorerSettings(
            verify_max_vertices=_int(colorers, "colorers", "verify_max_vertices", 40),
        ),
        hunt=HuntSettings(
            n_max=_int(hunt, "hunt", "n_max", 4),
            budget_seconds=_number(hunt, "hunt", "budget_seconds", 300.0),
        ),
        ledger=LedgerSettings(
            enabled=enabled,
            path=Path(ledger_path_raw).expanduser() if ledger_path_raw else DEFAULT_LEDGER_PATH,
        ),
    )
    return settings


def apply_env_overrides(settings: Settings, environ: dict[str, str] | None = None) -> Settings:
    env = os.environ if environ is None else environ

    def _env_int(name: str) -> int | None:
        raw = env.get(name, "").strip()
        if not raw:
            return None
        try:
            return int(raw)
        except ValueError as exc:
            raise SettingsError(f"{name} must be an integer, got {raw!r}") from exc

    pair_budget = _env_int("TPCLAB_PAIR_BUDGET")
    if pair_budget is not None:
        settings = replace(settings, checker=replace(settings.checker, pair_budget=pair_budget))
    workers = _env_int("TPCLAB_WORKERS")
    if workers is not None:
        settings = replace(
            settings,
            checker=replace(settings.checker, workers=workers),
            oracle=replace(settings.oracle, workers=workers),
        )
    cap = _env_int("TPCLAB_ELEMENT_CAP")
    if cap is not None:
        settings = replace(settings, oracle=replace(settings.oracle, element_cap=cap))
    ledger_raw = env.get("TPCLAB_LEDGER", "").strip()
    if ledger_raw == "off":
        settings = replace(settings, ledger=replace(settings.ledger, enabled=False))
    elif ledger_raw:
        settings = replace(settings, ledger=LedgerSettings(enabled=True, path=Path(ledger_raw).expanduser()))
    return settings


def load_settings(path: Path | None = None) -> Settings:
    if path is None:
        env_path = os.environ.get("TPCLAB_CONFIG", "").strip()
        path = Path(env_path) if env_path else DEFAULT_CONFIG_PATH
        if not env_path and not path.exists():
            settings = apply_env_overrides(Settings())
            settings.validate()
            return settings
    try:
        payload = yaml.safe_load(path.read_text())
    except FileNotFoundError:
        raise SettingsError(f"Config file not found: {path}")
    except Exception as exc:
        raise SettingsError(f"Failed to read config YAML: {exc}") from exc

    settings = apply_env_overrides(parse_settings(payload or {}))
    settings.validate()
    return settings


_settings: Settings | None = None


def get_settings() -> Settings:
    """Get or load the process-wide settings."""
    global _settings
    if _settings is None:
        _settings = load_settings()
    return _settings


def set_settings(settings: Settings | None) -> None:
    """Replace the process-wide settings; None forces a reload on next access."""
    global _settings
    if settings is not None:
        settings.validate()
    _settings = settings
