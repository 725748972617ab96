"""Content-addressed on-disk cache of reduced Betti vectors."""
from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
from pathlib import Path

from .errors import CacheCorrupt
from .homology import FieldSpec, SimplicialComplex

log = logging.getLogger(__name__)

ENV_VAR = "DEPTHSTAB_CACHE_DIR"


def complex_key(c: SimplicialComplex, k: FieldSpec) -> str:
    doc = json.dumps({"facets": c.sorted_facets(), "void": c.is_void, "char": k.characteristic},
                     separators=(",", ":"))
    return hashlib.sha256(doc.encode()).hexdigest()


class DiskCache:
    """Betti vectors stored one JSON file per key. Writes go through a temp
    file and ``os.replace`` so concurrent workers never see partial files."""

    def __init__(self, directory: str | Path):
        self.root = Path(directory)
        self.root.mkdir(parents=True, exist_ok=True)
        self.hits = 0
        self.misses = 0
        self._mem: dict[str, tuple[int, ...]] = {}

    def _path(self, key: str) -> Path:
        return self.root / key[:2] / f"{key}.json"

    def _read(self, key: str) -> tuple[int, ...] | None:
        path = self._path(key)
        if not path.exists():
            return None
        try:
            doc = json.loads(path.read_text(encoding="utf-8"))
            if doc.get("key") != key or not all(isinstance(x, int) and x >= 0 for x in doc["betti"]):
                raise CacheCorrupt(f"bad cache entry {path}")
            return tuple(doc["betti"])
        except (ValueError, KeyError, TypeError, CacheCorrupt) as exc:
            log.warning("discarding corrupt cache entry %s (%s)", path, exc)
            return None

    def get(self, c: SimplicialComplex, k: FieldSpec) -> tuple[int, ...] | None:
        key = complex_key(c, k)
        if key in self._mem:
            self.hits += 1
            return self._mem[key]
        value = self._read(key)
        if value is None:
            self.misses += 1
        else:
            self.hits += 1
            self._mem[key] = value
        return value

    def put(self, c: SimplicialComplex, k: FieldSpec, value: tuple[int, ...]) -> None:
        key = complex_key(c, k)
        self._mem[key] = tuple(value)
        path = self._path(key)
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            json.dump({"key": key, "betti": list(value)}, fh)
        os.replace(tmp, path)
