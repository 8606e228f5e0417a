#!/usr/bin/env python3
"""
Shared helpers for tpclab modules.
"""

from __future__ import annotations

import os
import sys
from datetime import datetime
from typing import Iterable


class BudgetExhausted(RuntimeError):
    """A bounded search ran out of budget before reaching a verdict."""


def log(msg: str) -> None:
    if os.environ.get("TPCLAB_QUIET", "") not in ("", "0"):
        return
    ts = datetime.now().strftime("%H:%M:%S")
    print(f"[{ts}] {msg}", file=sys.stderr, flush=True)


def edge_key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def edge_token(edge: tuple[int, int]) -> str:
    u, v = edge_key(*edge)
    return f"{u}-{v}"


def parse_edge_token(token: str) -> tuple[int, int]:
    parts = token.split("-")
    if len(parts) != 2:
        raise ValueError(f"Invalid edge token (expected u-v): {token!r}")
    try:
        u, v = int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise ValueError(f"Invalid edge token (expected u-v): {token!r}") from exc
    return edge_key(u, v)


def smallest_missing(used: Iterable[int], palette: int) -> int:
    """Smallest colour in [1..palette] not in `used`, else 1."""
    taken = set(used)
    for color in range(1, palette + 1):
        if color not in taken:
            return color
    return 1
