"""Binary result cache: ``SSPEC1`` magic, header, then length-prefixed records.

Layout (big-endian)::

    b"SSPEC1" | u16 format | 32-byte sha256 digest | u32 count | count * (u32 len | JSON)

The digest covers the sorted prime list, the package version and the
enumeration settings, so a changed setting or version is a cache miss.
"""

from __future__ import annotations

import hashlib
import json
import logging
import struct
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from . import __version__
from .groups import Family, GroupId, GroupRecord, make_record
from .primes import PrimeSet

log = logging.getLogger(__name__)

MAGIC = b"SSPEC1"
FORMAT = 1


@dataclass(frozen=True)
class CacheEntry:
    digest: bytes
    version: str
    records: tuple[GroupRecord, ...]


def run_digest(pi: PrimeSet, k_margin: int = 1, rank_margin: int = 1, early_exit: bool = True,
               version: str = __version__) -> bytes:
    h = hashlib.sha256()
    h.update(f"simple-spectrum {version}\n".encode())
    h.update(f"k_margin={k_margin} rank_margin={rank_margin} early_exit={int(early_exit)}\n".encode())
    h.update(",".join(map(str, pi.primes)).encode())
    return h.digest()


def _gid_to_list(g: GroupId) -> list:
    return [g.family.value, g.n, g.p, g.k, g.name]


def _gid_from_list(v: list) -> GroupId:
    return GroupId(Family(v[0]), v[1], v[2], v[3], v[4])


def record_to_dict(r: GroupRecord) -> dict:
    return {
        "gid": _gid_to_list(r.gid),
        "name": r.name,
        "factors": [[p, e] for p, e in r.order_factors.factors.items()],
        "aliases": [_gid_to_list(a) for a in r.aliases],
    }


def record_from_dict(d: dict) -> GroupRecord:
    rec = make_record(_gid_from_list(d["gid"]), {p: e for p, e in d["factors"]})
    if rec.name != d["name"] or [_gid_to_list(a) for a in rec.aliases] != d["aliases"]:
        raise ValueError(f"inconsistent cached record {d['name']}")
    return rec


def dumps(records: Sequence[GroupRecord], digest: bytes) -> bytes:
    parts = [MAGIC, struct.pack(">H", FORMAT), digest, struct.pack(">I", len(records))]
    for r in records:
        blob = json.dumps(record_to_dict(r), separators=(",", ":")).encode()
        parts.append(struct.pack(">I", len(blob)))
        parts.append(blob)
    return b"".join(parts)


def loads(data: bytes) -> tuple[bytes, list[GroupRecord]]:
    if not data.startswith(MAGIC):
        raise ValueError("not a cache file")
    pos = len(MAGIC)
    (fmt,) = struct.unpack_from(">H", data, pos)
    if fmt != FORMAT:
        raise ValueError(f"unsupported cache format {fmt}")
    pos += 2
    digest = data[pos : pos + 32]
    pos += 32
    (count,) = struct.unpack_from(">I", data, pos)
    pos += 4
    records = []
    for _ in range(count):
        (n,) = struct.unpack_from(">I", data, pos)
        pos += 4
        blob = data[pos : pos + n]
        if len(blob) != n:
            raise ValueError("truncated cache file")
        records.append(record_from_dict(json.loads(blob)))
        pos += n
    if pos != len(data):
        raise ValueError("trailing bytes in cache file")
    return digest, records


def write_cache(path: str | Path, records: Sequence[GroupRecord], digest: bytes) -> CacheEntry:
    path = Path(path)
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_bytes(dumps(records, digest))
    tmp.replace(path)
    return CacheEntry(digest, __version__, tuple(records))


def read_cache(path: str | Path, digest: bytes) -> list[GroupRecord] | None:
    """Cached records when the file exists and matches ``digest``; None otherwise."""
    path = Path(path)
    if not path.exists():
        return None
    try:
        stored, records = loads(path.read_bytes())
    except (ValueError, struct.error, KeyError, TypeError) as exc:
        log.warning("ignoring unreadable cache %s: %s", path, exc)
        return None
    if stored != digest:
        log.warning("cache %s was built for a different run; recomputing", path)
        return None
    return records


def cache_roundtrip(path: str | Path, records: Sequence[GroupRecord], digest: bytes) -> CacheEntry:
    """Write ``records`` and read them back."""
    write_cache(path, records, digest)
    back = read_cache(path, digest)
    if back is None:
        raise OSError(f"cache {path} could not be read back")
    return CacheEntry(digest, __version__, tuple(back))
