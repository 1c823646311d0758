"""JSON result cache for optimal searches.

Entries are keyed by ``n|algo|version``. A hit is only served after its
witness replays the reverse permutation to the identity in exactly the
recorded number of moves; anything else is dropped.
"""

from __future__ import annotations

import json
import logging
import os
import tempfile
import time
from pathlib import Path

from . import __version__
from .errors import LRESortError
from .perm import apply_sequence, format_moves, identity_perm, parse_moves, reverse_perm

log = logging.getLogger(__name__)

DEFAULT_PATH = ".lre-cache.json"


class ResultCache:
    def __init__(self, path: str | os.PathLike = DEFAULT_PATH, version: str = __version__):
        self.path = Path(path)
        self.version = version
        self.entries: dict[str, dict] = {}
        self._load()

    def key(self, n: int, algo: str) -> str:
        return f"{n}|{algo}|{self.version}"

    def _load(self) -> None:
        if not self.path.exists():
            return
        try:
            data = json.loads(self.path.read_text())
        except (OSError, json.JSONDecodeError) as exc:
            log.warning("ignoring unreadable cache %s: %s", self.path, exc)
            return
        if isinstance(data, dict) and isinstance(data.get("entries"), dict):
            self.entries = data["entries"]

    def get(self, n: int, algo: str) -> dict | None:
        key = self.key(n, algo)
        entry = self.entries.get(key)
        if entry is None:
            return None
        if not _entry_ok(n, entry):
            log.warning("dropping corrupt cache entry %s", key)
            del self.entries[key]
            return None
        return entry

    def put(self, n: int, algo: str, count: int, moves, stats: dict | None = None) -> None:
        self.entries[self.key(n, algo)] = {
            "count": count,
            "moves": format_moves(moves),
            "stats": stats or {},
            "timestamp": time.time(),
        }
        self.save()

    def save(self) -> None:
        self.path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(prefix=".lre-cache-", dir=self.path.parent)
        try:
            with os.fdopen(fd, "w") as fh:
                json.dump({"entries": self.entries}, fh, indent=1, sort_keys=True)
            os.replace(tmp, self.path)
        except BaseException:
            Path(tmp).unlink(missing_ok=True)
            raise


def _entry_ok(n: int, entry) -> bool:
    try:
        moves = parse_moves(entry["moves"])
        count = int(entry["count"])
        return len(moves) == count and apply_sequence(reverse_perm(n), moves) == identity_perm(n)
    except (KeyError, TypeError, ValueError, LRESortError):
        return False
