"""Persistent memo of clique counts keyed by (canonical certificate, t)."""

from __future__ import annotations

import json
import os
import random
import warnings
from pathlib import Path

from .canon import canonical_form
from .counting import count_cliques
from .graph import Graph

CACHE_ENV = "CLIQUEMAX_CACHE_DIR"
CACHE_FILE = "clique_counts.json"
CACHE_VERSION = 1


def default_cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "cliquemax"


class CacheAuditError(AssertionError):
    pass


class CliqueCountCache:
    def __init__(self, directory=None):
        self.directory = Path(directory) if directory is not None else default_cache_dir()
        self.path = self.directory / CACHE_FILE
        self.entries: dict[str, str] = {}
        self.hits = self.misses = 0
        self._load()

    def _load(self) -> None:
        if not self.path.exists():
            return
        try:
            data = json.loads(self.path.read_text())
            if data.get("version") != CACHE_VERSION or not isinstance(data.get("entries"), dict):
                raise ValueError("unexpected cache layout")
            self.entries = {str(k): str(v) for k, v in data["entries"].items()}
        except (ValueError, OSError) as exc:
            warnings.warn(f"clique-count cache at {self.path} is unreadable ({exc}); rebuilding", RuntimeWarning)
            self.entries = {}

    @staticmethod
    def _key(certificate: bytes, t: int) -> str:
        return f"{certificate.decode('ascii')}|{t}"

    def get(self, certificate: bytes, t: int) -> int | None:
        value = self.entries.get(self._key(certificate, t))
        if value is None:
            self.misses += 1
            return None
        self.hits += 1
        return int(value)

    def put(self, certificate: bytes, t: int, value: int) -> None:
        self.entries[self._key(certificate, t)] = str(value)

    def save(self) -> None:
        self.directory.mkdir(parents=True, exist_ok=True)
        tmp = self.path.with_suffix(".tmp")
        tmp.write_text(json.dumps({"version": CACHE_VERSION, "entries": self.entries}, sort_keys=True))
        tmp.replace(self.path)


def cached_count_cliques(g: Graph, t: int, cache: CliqueCountCache,
                         audit_rate: float = 0.01, rng: random.Random | None = None) -> int:
    """``k_t(g)`` through the cache; a fraction of hits is recounted and must agree."""
    cert = canonical_form(g).certificate
    value = cache.get(cert, t)
    if value is None:
        value = count_cliques(g, t)
        cache.put(cert, t, value)
        return value
    if (rng or random).random() < audit_rate:
        fresh = count_cliques(g, t)
        if fresh != value:
            raise CacheAuditError(f"cached k_{t} = {value} but recount gives {fresh}")
    return value
