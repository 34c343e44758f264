# Copyright 2025 The liar-game-lab Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Shared memo cache for game values and its line-oriented persistence file.

Keys are (l, effective cap, counts) where the effective cap is
min(k, total - 1): a state's value depends on k only through that number, so
Basic-game entries (cap >= total) are shared by every call site.
"""

import logging
import threading
from pathlib import Path

from app.game.core import Counts, Params, format_counts, parse_counts
from app.utils.config import CACHE_VERSION
from app.utils.errors import CacheFormatError, ParseError

Key = tuple[int, int, Counts]

HEADER_PREFIX = "liargame-cache"
MAX_STORED_VALUE = (1 << 31) - 1


def cache_key(lies: int, cap: int, counts: Counts) -> Key:
    return (lies, min(cap, sum(counts) - 1), counts)


class MemoCache:
    """Exact values plus fail-soft lower bounds, safe for concurrent solvers.

    Exact inserts are insert-if-absent; two workers solving the same state
    store the same value, so duplicated work is tolerated, never blocked.
    """

    version = CACHE_VERSION

    def __init__(self) -> None:
        self.exact: dict[Key, int] = {}
        self.lower: dict[Key, int] = {}
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self.exact)

    def __contains__(self, key: Key) -> bool:
        return key in self.exact

    def get(self, key: Key) -> int | None:
        return self.exact.get(key)

    def put(self, key: Key, value: int) -> int:
        stored = self.exact.setdefault(key, value)
        self.lower.pop(key, None)
        return stored

    def raise_lower(self, key: Key, value: int) -> None:
        with self._lock:
            if value > self.lower.get(key, -1):
                self.lower[key] = value

    def size(self) -> int:
        return len(self.exact) + len(self.lower)

    def entries(self, params: Params) -> list[tuple[Counts, int]]:
        """Exact entries valid for the game (l, k), sorted by count vector."""
        rows = [
            (counts, value)
            for (lies, cap, counts), value in list(self.exact.items())
            if lies == params.lies and cap == params.effective_cap(sum(counts))
        ]
        rows.sort()
        return rows


def header_line(params: Params) -> str:
    return f"{HEADER_PREFIX} {CACHE_VERSION} l={params.lies} k={params.cap}"


def header_params(line: str) -> Params:
    """Reads (l, k) back from a header line."""
    parts = line.split()
    if (
        len(parts) != 4
        or parts[0] != HEADER_PREFIX
        or not parts[2].startswith("l=")
        or not parts[3].startswith("k=")
    ):
        raise CacheFormatError(f"malformed header {line!r}", line=1)
    if parts[1] != CACHE_VERSION:
        raise CacheFormatError(f"cache version {parts[1]} is not {CACHE_VERSION}", line=1)
    try:
        return Params(lies=int(parts[2][2:]), cap=int(parts[3][2:]))
    except ValueError as e:
        raise CacheFormatError(f"malformed header {line!r}", line=1) from e


def dump_cache(cache: MemoCache, params: Params) -> str:
    lines = [header_line(params)]
    lines.extend(f"{format_counts(counts)}={value}" for counts, value in cache.entries(params))
    return "\n".join(lines) + "\n"


def parse_cache(text: str, params: Params, cache: MemoCache | None = None) -> MemoCache:
    """Loads persisted entries into `cache`, validating header and order."""
    cache = cache if cache is not None else MemoCache()
    lines = text.splitlines()
    if not lines:
        raise CacheFormatError("empty cache file", line=1)
    if lines[0].strip() != header_line(params):
        raise CacheFormatError(
            f"header {lines[0].strip()!r} does not match {header_line(params)!r}", line=1
        )
    previous: Counts | None = None
    for number, raw in enumerate(lines[1:], start=2):
        if not raw.strip():
            continue
        literal, sep, value_text = raw.partition("=")
        if not sep:
            raise CacheFormatError(f"expected 'x0,...,xl=value', got {raw!r}", line=number)
        try:
            counts = parse_counts(literal, line=number)
        except ParseError as e:
            raise CacheFormatError(str(e), line=number) from e
        if len(counts) != params.lies + 1:
            raise CacheFormatError(
                f"{literal} has {len(counts)} components, expected {params.lies + 1}",
                line=number,
            )
        if sum(counts) < 2:
            raise CacheFormatError(f"terminal state {literal} is never cached", line=number)
        if not value_text.isdigit() or int(value_text) > MAX_STORED_VALUE:
            raise CacheFormatError(f"bad value {value_text!r}", line=number)
        if previous is not None and counts <= previous:
            raise CacheFormatError(
                f"{literal} is out of lexicographic order after {format_counts(previous)}",
                line=number,
            )
        previous = counts
        cache.put(cache_key(params.lies, params.cap, counts), int(value_text))
    return cache


def save_cache(cache: MemoCache, path: Path, params: Params) -> int:
    text = dump_cache(cache, params)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)
    written = text.count("\n") - 1
    logging.info(f"Saved {written} cache entries to {path}")
    return written


def load_cache(path: Path, params: Params, cache: MemoCache | None = None) -> MemoCache:
    cache = parse_cache(path.read_text(), params, cache)
    logging.info(f"Loaded cache {path} ({len(cache)} entries)")
    return cache
