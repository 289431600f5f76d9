"""Optional on-disk persistence of computed polynomials.

Enabled by setting ``HSOP_CACHE_DIR``. Each entry is a JSON file holding a
format version, the payload and its SHA-256; a missing, stale or corrupted
file is ignored and the value is recomputed.
"""
from __future__ import annotations

import hashlib
import json
import logging
import os
from pathlib import Path

log = logging.getLogger(__name__)

CACHE_VERSION = 1
ENV_VAR = "HSOP_CACHE_DIR"


def cache_dir() -> Path | None:
    root = os.environ.get(ENV_VAR)
    return Path(root) if root else None


def _checksum(payload) -> str:
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()


def load(name: str):
    """Return the cached payload for ``name`` or ``None``."""
    root = cache_dir()
    if root is None:
        return None
    path = root / f"{name}.v{CACHE_VERSION}.json"
    try:
        record = json.loads(path.read_text())
    except (OSError, ValueError):
        return None
    if not isinstance(record, dict) or record.get("version") != CACHE_VERSION:
        return None
    payload = record.get("payload")
    if record.get("sha256") != _checksum(payload):
        log.warning("checksum mismatch in %s; recomputing", path)
        return None
    return payload


def store(name: str, payload) -> None:
    root = cache_dir()
    if root is None:
        return
    root.mkdir(parents=True, exist_ok=True)
    path = root / f"{name}.v{CACHE_VERSION}.json"
    record = {"version": CACHE_VERSION, "sha256": _checksum(payload), "payload": payload}
    tmp = path.with_suffix(f".tmp{os.getpid()}")
    tmp.write_text(json.dumps(record))
    os.replace(tmp, path)
