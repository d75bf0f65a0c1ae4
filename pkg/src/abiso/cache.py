"""On-disk lattice cache: one JSON document per group, content addressed.

Filenames derive from the canonical group literal, so isomorphic inputs hit
the same entry.  A corrupt file is reported and treated as a miss; writing
different content to an existing key is an error (identical rewrites are
fine, so parallel writers of the same lattice never conflict).
"""

from __future__ import annotations

import hashlib
import json
import warnings
from pathlib import Path

from .groups import AbelianGroup, Subgroup
from .lattice import SubgroupLattice
from .literals import format_group_literal, parse_group_literal

CACHE_SCHEMA_VERSION = 1


class CacheError(Exception):
    """Conflicting write or failed byte-identity verification."""


def lattice_cache_path(cache_dir: str | Path, G: AbelianGroup) -> Path:
    literal = format_group_literal(G)
    digest = hashlib.sha256(literal.encode("utf-8")).hexdigest()[:24]
    return Path(cache_dir) / f"lattice-{digest}.json"


def serialize_lattice(L: SubgroupLattice) -> str:
    doc = {
        "schema_version": CACHE_SCHEMA_VERSION,
        "group": format_group_literal(L.parent),
        "backend": L.backend,
        "subgroup_count": len(L.subgroups),
        "subgroups": [
            {
                "order": H.order,
                "elements": [list(x) for x in H.elements],
                "generators": [list(g) for g in H.generators],
            }
            for H in L.subgroups
        ],
    }
    return json.dumps(doc, separators=(",", ":"))


def _deserialize_lattice(text: str) -> SubgroupLattice:
    doc = json.loads(text)
    if doc["schema_version"] != CACHE_SCHEMA_VERSION:
        raise ValueError(f"unsupported cache schema {doc['schema_version']}")
    G = parse_group_literal(doc["group"])
    subs = []
    for entry in doc["subgroups"]:
        H = Subgroup(
            G,
            tuple(tuple(x) for x in entry["elements"]),
            tuple(tuple(g) for g in entry["generators"]),
        )
        if H.order != entry["order"]:
            raise ValueError("cached subgroup order disagrees with its element list")
        subs.append(H)
    if len(subs) != doc["subgroup_count"]:
        raise ValueError("cached subgroup count disagrees with the list")
    return SubgroupLattice(G, tuple(subs), doc["backend"])


def cache_lattice(G: AbelianGroup, L: SubgroupLattice, cache_dir: str | Path) -> Path:
    if L.parent != G:
        raise ValueError("lattice belongs to a different group")
    path = lattice_cache_path(cache_dir, G)
    payload = serialize_lattice(L)
    if path.exists():
        existing = path.read_text(encoding="utf-8")
        if existing != payload:
            raise CacheError(f"cache key {path.name} already holds different content")
        return path
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(payload, encoding="utf-8")
    tmp.replace(path)
    return path


def load_lattice(G: AbelianGroup, cache_dir: str | Path) -> SubgroupLattice | None:
    """Cached lattice, or None on a miss; corrupt entries warn and miss."""
    path = lattice_cache_path(cache_dir, G)
    if not path.exists():
        return None
    try:
        text = path.read_text(encoding="utf-8")
        L = _deserialize_lattice(text)
        if L.parent != G:
            raise ValueError("cache entry names a different group")
        return L
    except (OSError, ValueError, KeyError, TypeError) as exc:
        warnings.warn(f"ignoring corrupt cache entry {path}: {exc}")
        return None


def verify_cache_round_trip(G: AbelianGroup, L: SubgroupLattice, cache_dir: str | Path) -> None:
    """Store, reload, and insist the entry is byte-identical to recomputation."""
    path = cache_lattice(G, L, cache_dir)
    stored = path.read_text(encoding="utf-8")
    if stored != serialize_lattice(L):
        raise CacheError(f"cache entry {path} is not byte-identical to recomputation")
    reloaded = load_lattice(G, cache_dir)
    if reloaded is None or reloaded.subgroups != L.subgroups:
        raise CacheError(f"cache entry {path} does not round-trip")
