"""Write-through, resumable cache of Bernoulli residues.

On-disk format is line-delimited JSON.  The first line is the header
``{"format": "bernoulli-cache", "version": 1}``; every following line is a
record ``{"p": int, "prec": 1|2, "k": int, "value": int}``.

Tables are written one prime at a time, ending with a flush, so a crash can
leave at most one incomplete table at the tail.  A table counts as present
only if it holds an entry for every even index it is supposed to cover;
incomplete tables are recomputed, never trusted.
"""

from __future__ import annotations

import json
import os
import threading
from pathlib import Path

from .errors import CacheError

HEADER = {"format": "bernoulli-cache", "version": 1}
ENV_VAR = "CYCLOPAIR_CACHE"


def default_cache_path() -> Path | None:
    env = os.environ.get(ENV_VAR)
    return Path(env) if env else None


class BernoulliCache:
    """Residues of B_k keyed by ``(p, prec)``.

    One writer per file.  Readers may open the same file concurrently; they
    see whichever complete tables existed when they loaded it.
    """

    def __init__(self, path):
        self.path = Path(path)
        self._tables: dict[tuple[int, int], dict[int, int]] = {}
        self._lock = threading.Lock()
        if self.path.exists() and self.path.stat().st_size > 0:
            self._load()
        else:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with open(self.path, "w") as fh:
                fh.write(json.dumps(HEADER) + "\n")

    def _load(self):
        with open(self.path) as fh:
            first = fh.readline()
            try:
                header = json.loads(first)
            except json.JSONDecodeError as exc:
                raise CacheError(f"{self.path}:1: unreadable header") from exc
            if header != HEADER:
                raise CacheError(f"{self.path}:1: unexpected header {header!r}")
            for lineno, line in enumerate(fh, start=2):
                if not line.strip():
                    continue
                try:
                    rec = json.loads(line)
                except json.JSONDecodeError as exc:
                    raise CacheError(f"{self.path}:{lineno}: malformed record") from exc
                self._check_record(rec, lineno)
                self._tables.setdefault((rec["p"], rec["prec"]), {})[rec["k"]] = rec["value"]

    def _check_record(self, rec, lineno):
        if not isinstance(rec, dict) or set(rec) != {"p", "prec", "k", "value"}:
            raise CacheError(f"{self.path}:{lineno}: bad record keys")
        if not all(type(rec[key]) is int for key in rec):
            raise CacheError(f"{self.path}:{lineno}: non-integer field")
        p, prec, k, value = rec["p"], rec["prec"], rec["k"], rec["value"]
        if p < 3 or prec not in (1, 2) or k < 0 or k % 2:
            raise CacheError(f"{self.path}:{lineno}: field out of range")
        if not 0 <= value < p**prec:
            raise CacheError(f"{self.path}:{lineno}: value not reduced mod p^{prec}")

    def get_table(self, p: int, prec: int, indices) -> dict[int, int] | None:
        """The cached table for (p, prec) if it covers every index in ``indices``."""
        table = self._tables.get((p, prec))
        if table is None:
            return None
        wanted = list(indices)
        if any(k not in table for k in wanted):
            return None
        return {k: table[k] for k in wanted}

    def put_table(self, p: int, prec: int, values: dict[int, int]):
        with self._lock:
            table = self._tables.setdefault((p, prec), {})
            fresh = {k: v for k, v in sorted(values.items()) if k not in table}
            if not fresh:
                return
            with open(self.path, "a") as fh:
                for k, v in fresh.items():
                    fh.write(json.dumps({"p": p, "prec": prec, "k": k, "value": int(v)}) + "\n")
                fh.flush()
            table.update(fresh)

    def __contains__(self, key):
        return key in self._tables
