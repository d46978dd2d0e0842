"""On-disk cache of tau extrema, one JSON file per triple.

Unreadable or mismatched entries are treated as misses.  Writes go to a
temporary file in the same directory and are renamed into place.
"""
from __future__ import annotations

import json
import logging
import os
import tempfile
from pathlib import Path

from .graded_root import TauExtrema
from .seifert import BrieskornTriple

log = logging.getLogger(__name__)

CACHE_VERSION = "groot-extrema-1"


class ExtremaCache:
    def __init__(self, directory):
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)
        self.hits = 0
        self.misses = 0

    def path_for(self, t: BrieskornTriple) -> Path:
        return self.directory / f"{t.a1}_{t.a2}_{t.a3}.json"

    def get(self, t: BrieskornTriple) -> TauExtrema | None:
        path = self.path_for(t)
        try:
            obj = json.loads(path.read_text(encoding="utf-8"))
            if obj["version"] != CACHE_VERSION or obj["key"] != list(t.exponents):
                raise ValueError("stale or foreign entry")
            ext = TauExtrema.from_json(obj)
            if len(ext.minima) != len(ext.maxima) + 1:
                raise ValueError("malformed extrema")
        except FileNotFoundError:
            self.misses += 1
            return None
        except (OSError, ValueError, KeyError, TypeError) as exc:
            log.warning("ignoring cache entry %s: %s", path, exc)
            self.misses += 1
            return None
        self.hits += 1
        return ext

    def put(self, t: BrieskornTriple, ext: TauExtrema) -> None:
        payload = {"version": CACHE_VERSION, "key": list(t.exponents), **ext.to_json()}
        fd, tmp = tempfile.mkstemp(dir=self.directory, prefix=".tmp-", suffix=".json")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                json.dump(payload, fh, separators=(",", ":"))
            os.replace(tmp, self.path_for(t))
        except BaseException:
            try:
                os.unlink(tmp)
            except FileNotFoundError:
                pass
            raise
