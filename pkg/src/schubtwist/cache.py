"""Content-addressed, write-once JSON result store.

Keys are sha256 of the canonical JSON of (type, command, input).  Values are
stored as canonical JSON bytes, so a rerun returns byte-identical output.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
from pathlib import Path

ENV_VAR = "SCHUBTWIST_CACHE"

log = logging.getLogger(__name__)


def canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def cache_key(cartan_type, command, request) -> str:
    blob = canonical({"type": str(cartan_type), "command": command, "input": request})
    return hashlib.sha256(blob.encode()).hexdigest()


class ResultCache:
    def __init__(self, root):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)
        self.hits = 0
        self.misses = 0

    @classmethod
    def from_env(cls, override=None):
        root = override or os.environ.get(ENV_VAR)
        return cls(root) if root else None

    def path(self, key) -> Path:
        return self.root / key[:2] / f"{key}.json"

    def get(self, key):
        """Stored JSON text, or None on miss / corrupt entry."""
        p = self.path(key)
        if not p.exists():
            return None
        try:
            text = p.read_text()
            json.loads(text)
        except (OSError, UnicodeDecodeError, json.JSONDecodeError) as exc:
            log.warning("corrupt cache entry %s (%s); recomputing", p, exc)
            return None
        return text

    def put(self, key, text, overwrite=False):
        p = self.path(key)
        if p.exists() and not overwrite:
            return
        p.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=p.parent, prefix=".tmp-")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(text)
            os.replace(tmp, p)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise

    def fetch(self, cartan_type, command, request, compute):
        """Return canonical JSON text for the request, computing it on a miss.

        ``compute`` returns a JSON-serializable object."""
        key = cache_key(cartan_type, command, request)
        p = self.path(key)
        text = self.get(key)
        if text is not None:
            self.hits += 1
            return text
        self.misses += 1
        text = canonical(compute())
        self.put(key, text, overwrite=p.exists())
        return text


def cached(cache, cartan_type, command, request, compute) -> str:
    """Canonical JSON text, through ``cache`` when one is configured."""
    if cache is None:
        return canonical(compute())
    return cache.fetch(cartan_type, command, request, compute)
