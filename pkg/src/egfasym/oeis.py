"""OEIS b-file parsing, caching and comparison against computed tables."""

from __future__ import annotations

import os
import re
import tempfile
import time
import urllib.error
import urllib.request
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Optional

from egfasym.errors import (
    EmptyBFile,
    InvalidAnum,
    MalformedLine,
    NetworkError,
    NonContiguousIndex,
    NotExactMode,
    ParseError,
    ValidationError,
)
from egfasym.series import CoeffTable

DEFAULT_BASE_URL = "https://oeis.org"
ANUM_RE = re.compile(r"^A(\d{6})$")
_RECORD_RE = re.compile(r"^\s*(-?\d+)\s+(-?\d+)\s*$")
_TRANSIENT_STATUS = {429, 500, 502, 503, 504}


@dataclass(frozen=True)
class BFile:
    anum: Optional[str]
    entries: tuple  # ((index, value), ...)

    @property
    def offset(self) -> int:
        return self.entries[0][0]

    def __len__(self):
        return len(self.entries)

    def value_at(self, index: int) -> int:
        pos = index - self.offset
        if not 0 <= pos < len(self.entries):
            raise IndexError(f"index {index} outside b-file range")
        return self.entries[pos][1]

    def serialize(self) -> str:
        return "".join(f"{i} {v}\n" for i, v in self.entries)


@dataclass(frozen=True)
class ComparisonReport:
    matched: int
    first_mismatch: Optional[tuple] = None  # (index, expected, got)
    aligned_offset: int = 0

    @property
    def ok(self) -> bool:
        return self.first_mismatch is None


def check_anum(anum: str) -> str:
    anum = anum.strip().upper()
    if not ANUM_RE.match(anum):
        raise InvalidAnum(f"not an OEIS A-number: {anum!r}")
    return anum


def parse_bfile(text, anum: Optional[str] = None) -> BFile:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    entries = []
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        match = _RECORD_RE.match(line)
        if not match:
            raise MalformedLine(lineno, line)
        index, value = int(match.group(1)), int(match.group(2))
        if entries and index != entries[-1][0] + 1:
            raise NonContiguousIndex(lineno, entries[-1][0] + 1, index)
        entries.append((index, value))
    if not entries:
        raise EmptyBFile("b-file contains no records")
    return BFile(anum, tuple(entries))


def default_cache_dir() -> Path:
    env = os.environ.get("EGF_CACHE_DIR")
    if env:
        return Path(env)
    xdg = os.environ.get("XDG_CACHE_HOME")
    base = Path(xdg) if xdg else Path.home() / ".cache"
    return base / "egfasym"


def cache_path(anum: str, cache_dir=None) -> Path:
    anum = check_anum(anum)
    root = Path(cache_dir) if cache_dir is not None else default_cache_dir()
    return root / "bfiles" / f"b{anum[1:]}.txt"


def bfile_url(anum: str, base_url=None) -> str:
    anum = check_anum(anum)
    base = (base_url or os.environ.get("OEIS_BASE_URL") or DEFAULT_BASE_URL).rstrip("/")
    return f"{base}/{anum}/b{anum[1:]}.txt"


def _atomic_write(path: Path, data: bytes) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(prefix=path.name + ".", suffix=".part", dir=path.parent)
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
            fh.flush()
            os.fsync(fh.fileno())
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except FileNotFoundError:
            pass
        raise


def _http_get(url: str, timeout: float) -> bytes:
    req = urllib.request.Request(url, headers={"User-Agent": "egfasym/0.1"})
    with urllib.request.urlopen(req, timeout=timeout) as resp:
        return resp.read()


def _download(url: str, timeout: float, backoff: float = 1.0) -> bytes:
    # one retry, only for transient failures
    for attempt in range(2):
        try:
            return _http_get(url, timeout)
        except urllib.error.HTTPError as exc:
            if exc.code in _TRANSIENT_STATUS and attempt == 0:
                time.sleep(backoff)
                continue
            raise NetworkError(f"GET {url} failed with HTTP {exc.code}", url, exc.code) from exc
        except (urllib.error.URLError, TimeoutError, ConnectionError) as exc:
            if attempt == 0:
                time.sleep(backoff)
                continue
            raise NetworkError(f"GET {url} failed: {exc}", url) from exc
    raise AssertionError("unreachable")


def fetch_bfile(anum: str, cache_dir=None, base_url=None, timeout: float = 30.0) -> BFile:
    """Return the b-file for ``anum`` from the cache, downloading it once on a miss."""
    anum = check_anum(anum)
    path = cache_path(anum, cache_dir)
    if not path.exists():
        _atomic_write(path, _download(bfile_url(anum, base_url), timeout))
    body = path.read_bytes()
    try:
        return parse_bfile(body, anum)
    except (ValueError, UnicodeDecodeError) as exc:
        raise ParseError(f"cached b-file {path} is unreadable: {exc}", path) from exc


def bundled_fixture(anum: str) -> Optional[BFile]:
    """Truncated b-file shipped with the package, if there is one."""
    anum = check_anum(anum)
    ref = resources.files("egfasym") / "fixtures" / f"b{anum[1:]}.txt"
    if not ref.is_file():
        return None
    return parse_bfile(ref.read_bytes(), anum)


def load_bfile(path) -> BFile:
    path = Path(path)
    m = re.match(r"^b(\d{6})\.txt$", path.name)
    return parse_bfile(path.read_bytes(), f"A{m.group(1)}" if m else None)


def compare_prefix(coeffs: CoeffTable, bfile: BFile, count: Optional[int] = None, offset: int = 0) -> ComparisonReport:
    """Compare a(k) with the b-file value at index k + offset for k < count."""
    if not coeffs.exact:
        raise NotExactMode("compare_prefix needs an exact coefficient table")
    first = bfile.offset
    available = min(len(coeffs.values), first + len(bfile.entries) - offset)
    if offset < first:
        raise ValidationError(f"offset {offset} precedes the first b-file index {first}")
    if count is None:
        count = available
    if count > available:
        raise ValidationError(f"count {count} exceeds the {available} comparable terms")
    matched = 0
    for k in range(count):
        got = coeffs.values[k]
        expected = bfile.value_at(k + offset)
        if got != expected:
            return ComparisonReport(matched, (k + offset, expected, got), offset)
        matched += 1
    return ComparisonReport(matched, None, offset)
