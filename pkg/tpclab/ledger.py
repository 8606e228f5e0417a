#!/usr/bin/env python3
"""
tpclab run ledger.

Append-only JSONL memory of noteworthy computations: colorer repairs, oracle
values, permutation-graph hunt candidates and suite summaries. Events carry a
content-derived id, so rerunning the same computation never duplicates an
entry. Nothing reads the ledger to decide a result.
"""

from __future__ import annotations

import hashlib
import json
from datetime import datetime
from pathlib import Path
from typing import Any

from tpclab.settings import get_settings


def utcish_now() -> str:
    return datetime.now().isoformat(timespec="seconds")


def ledger_path() -> Path:
    return get_settings().ledger.path


def ledger_enabled() -> bool:
    return get_settings().ledger.enabled


def event_id(prefix: str, *parts: str) -> str:
    raw = "|".join(p or "" for p in parts)
    digest = hashlib.sha1(raw.encode("utf-8")).hexdigest()[:12]
    return f"{prefix}_{digest}"


def _graph_key(graph_json: dict[str, Any]) -> str:
    return json.dumps(graph_json, sort_keys=True, separators=(",", ":"))


def read_events(limit: int | None = None, event_type: str | None = None) -> list[dict[str, Any]]:
    path = ledger_path()
    if not path.exists():
        return []
    events: list[dict[str, Any]] = []
    for line in path.read_text().splitlines():
        if not line.strip():
            continue
        try:
            event = json.loads(line)
        except json.JSONDecodeError:
            continue
        if event_type and event.get("type") != event_type:
            continue
        events.append(event)
    return events[-limit:] if limit else events


# path -> ((size, mtime_ns), ids); reread only when the file changed since
_known_ids: dict[Path, tuple[tuple[int, int], set[str]]] = {}


def _stamp(path: Path) -> tuple[int, int]:
    st = path.stat()
    return st.st_size, st.st_mtime_ns


def existing_ids() -> set[str]:
    path = ledger_path()
    if not path.exists():
        _known_ids.pop(path, None)
        return set()
    stamp = _stamp(path)
    cached = _known_ids.get(path)
    if cached is None or cached[0] != stamp:
        cached = (stamp, {str(e.get("id", "")) for e in read_events()})
        _known_ids[path] = cached
    return cached[1]


def append_event(event: dict[str, Any]) -> bool:
    """Append an event if the ledger is enabled and its id is not already present."""
    if not event.get("id"):
        raise ValueError("ledger event requires id")
    if not ledger_enabled():
        return False
    ids = existing_ids()
    if event["id"] in ids:
        return False
    path = ledger_path()
    path.parent.mkdir(parents=True, exist_ok=True)
    event.setdefault("recorded_at", utcish_now())
    with path.open("a") as f:
        f.write(json.dumps(event, ensure_ascii=False, sort_keys=True) + "\n")
    ids.add(event["id"])
    _known_ids[path] = (_stamp(path), ids)
    return True


def record_repair(construction: str, graph_json: dict[str, Any], succeeded: bool) -> bool:
    key = _graph_key(graph_json)
    return append_event({
        "id": event_id("repair", construction, key),
        "type": "repair",
        "construction": construction,
        "graph": graph_json,
        "succeeded": succeeded,
    })


def record_oracle(flavor: str, graph_json: dict[str, Any], value: int) -> bool:
    key = _graph_key(graph_json)
    return append_event({
        "id": event_id("oracle", flavor, key),
        "type": "oracle",
        "flavor": flavor,
        "graph": graph_json,
        "value": value,
    })


def record_hunt_candidate(graph_json: dict[str, Any], alpha: list[int], verdict: str) -> bool:
    key = _graph_key(graph_json)
    return append_event({
        "id": event_id("hunt", key, json.dumps(alpha), verdict),
        "type": "hunt_candidate",
        "graph": graph_json,
        "alpha": alpha,
        "verdict": verdict,
    })


def record_suite(name: str, passed: int, failed: int) -> bool:
    now = utcish_now()
    return append_event({
        "id": event_id("suite", now, name, str(passed), str(failed)),
        "type": "suite",
        "suite": name,
        "passed": passed,
        "failed": failed,
    })
