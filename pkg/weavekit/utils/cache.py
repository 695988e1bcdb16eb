"""Content-addressed cache of enumeration summaries."""

from __future__ import annotations

import hashlib
import json
import logging
import os
from pathlib import Path
from typing import Optional

from .file_utils import atomic_write

logger = logging.getLogger(__name__)

CACHE_ENV = "WEAVE_CACHE_DIR"


def canonical_sha256(data: dict) -> str:
    raw = json.dumps(data, separators=(",", ":"), sort_keys=True).encode("utf-8")
    return hashlib.sha256(raw).hexdigest()


class EnumerationCache:
    """JSON summaries stored under ``<root>/<sha256 of the canonical input>.json``.

    A cache without a root is disabled: lookups miss and stores are dropped.
    """

    def __init__(self, root: Optional[Path] = None) -> None:
        self.root = Path(root) if root else None
        if self.root is not None:
            self.root.mkdir(parents=True, exist_ok=True)

    @classmethod
    def from_env(cls) -> "EnumerationCache":
        root = os.environ.get(CACHE_ENV)
        return cls(Path(root) if root else None)

    @property
    def enabled(self) -> bool:
        return self.root is not None

    def path_for(self, key: dict) -> Path:
        return self.root / f"{canonical_sha256(key)}.json"

    def get(self, key: dict) -> Optional[dict]:
        if not self.enabled:
            return None
        path = self.path_for(key)
        try:
            stored = json.loads(path.read_text(encoding="utf-8"))
        except FileNotFoundError:
            return None
        except (OSError, ValueError) as exc:
            logger.warning("Ignoring unreadable cache entry %s: %s", path, exc)
            return None
        if stored.get("key") != key:
            logger.warning("Cache entry %s does not match its key; ignoring it", path)
            return None
        logger.debug("Cache hit %s", path.name)
        return stored["value"]

    def put(self, key: dict, value: dict) -> None:
        if not self.enabled:
            return
        text = json.dumps({"key": key, "value": value}, sort_keys=True, indent=1)
        path = atomic_write(self.path_for(key), lambda tmp: tmp.write_text(text, encoding="utf-8"))
        logger.debug("Cached %s", path.name)
