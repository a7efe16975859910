"""Enumerate a finite matrix group and summarise it by characteristic polynomial.

The closure is built breadth first from the identity with all matrices of a
level handled as one numpy batch.  When every generator is an involution the
Cayley graph is undirected, so a new element can only collide with the two
previous levels; older levels are dropped, which keeps E7 (about 2.9 million
7 x 7 matrices) within a few hundred megabytes.

Characteristic polynomials are stored as ascending coefficient tuples
``(a_0, ..., a_{n-1}, 1)`` of ``det(x I - w)``.
"""
from __future__ import annotations

import hashlib
import json
import logging
from dataclasses import dataclass, field
from math import prod
from pathlib import Path

import numpy as np

from commhilb import __version__
from commhilb.cartan import GroupSpec, group_preset

__all__ = [
    "CharPolyCensus",
    "CensusError",
    "EnumerationError",
    "FORMAT_VERSION",
    "charpoly",
    "charpoly_batch",
    "enumerate_census",
    "iter_levels",
    "read_census",
    "write_census",
    "census_document",
]

log = logging.getLogger(__name__)

FORMAT_VERSION = 1

_ENTRY_MAX = 127  # matrices are stored as int8


class EnumerationError(RuntimeError):
    pass


class CensusError(ValueError):
    pass


@dataclass(frozen=True)
class CharPolyCensus:
    """Multiset of characteristic polynomials of the elements of a group.

    ``entries`` maps an ascending coefficient tuple of length ``rank + 1`` to
    the number of group elements with that characteristic polynomial.
    """

    rank: int
    entries: dict
    group: GroupSpec | None = field(default=None, compare=False)

    @property
    def total(self):
        return sum(self.entries.values())

    def items(self):
        """Entries in canonical (lexicographic) order."""
        return sorted(self.entries.items())

    def det_counts(self):
        """Number of elements with determinant +1 and -1."""
        pos = neg = 0
        for cp, c in self.entries.items():
            # det(w) = (-1)^n a_0
            det = (-1) ** self.rank * cp[0]
            if det == 1:
                pos += c
            else:
                neg += c
        return pos, neg

    def validate(self):
        n = self.rank
        ident = _identity_charpoly(n)
        if self.entries.get(ident, 0) < 1:
            raise CensusError("identity characteristic polynomial missing")
        for cp, c in self.entries.items():
            if len(cp) != n + 1 or cp[-1] != 1:
                raise CensusError(f"entry {cp} is not monic of degree {n}")
            if abs(cp[0]) != 1:
                raise CensusError(f"entry {cp} has constant term of absolute value != 1")
            if c <= 0:
                raise CensusError(f"entry {cp} has non-positive count {c}")


def _identity_charpoly(n):
    # (x - 1)^n, ascending
    coeffs = [1]
    for _ in range(n):
        coeffs = [-a + b for a, b in zip(coeffs + [0], [0] + coeffs)]
    return tuple(coeffs)


def charpoly_batch(mats):
    """Characteristic polynomials of a batch of integer matrices.

    Faddeev-LeVerrier in int64; every division is checked to be exact.
    Returns an ``(B, n + 1)`` int64 array of ascending coefficients.
    """
    a = np.asarray(mats, dtype=np.int64)
    if a.ndim == 2:
        a = a[None]
    b, n, _ = a.shape
    out = np.zeros((b, n + 1), dtype=np.int64)
    out[:, n] = 1
    if n == 0:
        return out
    eye = np.eye(n, dtype=np.int64)
    m = np.zeros_like(a)
    for k in range(1, n + 1):
        m = a @ m + out[:, n - k + 1, None, None] * eye
        tr = np.einsum("bii->b", a @ m)
        if np.any(tr % k):
            raise ArithmeticError("non-integral Faddeev-LeVerrier step")
        out[:, n - k] = -(tr // k)
    return out


def charpoly(matrix):
    """Ascending integer coefficients of ``det(x I - matrix)``."""
    a = np.asarray(matrix, dtype=object)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("charpoly needs a square matrix")
    if a.shape[0] and np.max(np.abs(a)) > 2 ** 20:
        raise ValueError("entries too large for the int64 path")
    return tuple(int(x) for x in charpoly_batch(np.asarray(matrix, dtype=np.int64))[0])


def _keys(batch):
    flat = np.ascontiguousarray(batch.reshape(len(batch), -1))
    return flat.view(np.dtype((np.void, flat.shape[1]))).ravel()


def iter_levels(gens, limit):
    """Yield the BFS levels (int8 arrays of shape ``(k, n, n)``) of the closure."""
    gens = [np.asarray(g, dtype=np.int64) for g in gens]
    n = gens[0].shape[0] if gens else None
    if n is None:
        raise ValueError("iter_levels needs at least one generator")
    eye = np.eye(n, dtype=np.int64)
    involutive = all(np.array_equal(g @ g, eye) for g in gens)
    gstack = np.stack(gens).astype(np.int16)

    level = eye[None].astype(np.int8)
    prev_keys = np.empty(0, dtype=np.dtype((np.void, n * n)))
    seen_keys = _keys(level)
    count = 1
    yield level
    while len(level):
        cand = (level.astype(np.int16)[:, None] @ gstack[None]).reshape(-1, n, n)
        if cand.size and np.max(np.abs(cand)) > _ENTRY_MAX:
            raise EnumerationError("matrix entry overflow: generators are not a finite "
                                   "integral reflection group")
        cand = cand.astype(np.int8)
        ckeys = _keys(cand)
        ukeys, idx = np.unique(ckeys, return_index=True)
        fresh = ~np.isin(ukeys, seen_keys)
        if involutive:
            fresh &= ~np.isin(ukeys, prev_keys)
        new = cand[idx[fresh]]
        new_keys = ukeys[fresh]
        count += len(new)
        if count > limit:
            raise EnumerationError(f"closure exceeds limit of {limit} elements")
        if involutive:
            prev_keys, seen_keys = seen_keys, new_keys
        else:
            seen_keys = np.concatenate([seen_keys, new_keys])
        level = new
        if len(level):
            yield level


def enumerate_census(spec: GroupSpec, limit=None):
    """Characteristic-polynomial census of the group generated by ``spec``.

    ``limit`` defaults to ``spec.expected_order``; exceeding it, or finishing
    with a different number of elements, raises :class:`EnumerationError`.
    """
    limit = spec.expected_order if limit is None else limit
    counts = {}
    n = spec.rank
    if not spec.generators:
        counts[_identity_charpoly(n)] = 1
    else:
        for depth, level in enumerate(iter_levels(spec.generator_arrays(), limit)):
            polys, mult = np.unique(charpoly_batch(level), axis=0, return_counts=True)
            for p, c in zip(polys, mult):
                key = tuple(int(x) for x in p)
                counts[key] = counts.get(key, 0) + int(c)
            log.debug("%s: level %d, %d elements", spec.name, depth, len(level))
    census = CharPolyCensus(rank=n, entries=counts, group=spec)
    if census.total != spec.expected_order:
        raise EnumerationError(f"{spec.name}: closure has {census.total} elements, "
                               f"expected {spec.expected_order}")
    return census


def _entry_list(census):
    return [{"charpoly": list(cp), "count": c} for cp, c in census.items()]


def _checksum(entries):
    payload = json.dumps(entries, separators=(",", ":"), sort_keys=True).encode()
    return "sha256:" + hashlib.sha256(payload).hexdigest()


def census_document(census, spec=None):
    """JSON-ready document for ``census``; ``spec`` defaults to ``census.group``."""
    spec = spec if spec is not None else census.group
    if spec is None:
        raise CensusError("census has no group metadata; pass spec=")
    if spec.rank != census.rank:
        raise CensusError(f"rank mismatch: census {census.rank}, group {spec.rank}")
    entries = _entry_list(census)
    return {
        "format_version": FORMAT_VERSION,
        "tool_version": __version__,
        "preset": spec.name,
        "rank": spec.rank,
        "expected_order": spec.expected_order,
        "generators": [[list(r) for r in g] for g in spec.generators],
        "entries": entries,
        "checksum": _checksum(entries),
    }


def write_census(census, path, spec=None):
    doc = census_document(census, spec)
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(doc, indent=1) + "\n")
    return doc


def read_census(path, spec=None):
    """Load and validate a census file.

    When ``spec`` is omitted the preset named in the file is used.  The file
    total must equal the expected order, and the expected order must equal
    the product of the preset's fundamental degrees.
    """
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise CensusError(f"{path}: not valid JSON ({exc})") from exc
    if doc.get("format_version") != FORMAT_VERSION:
        raise CensusError(f"{path}: unsupported format_version {doc.get('format_version')!r}")
    entries = doc["entries"]
    if _checksum(entries) != doc.get("checksum"):
        raise CensusError(f"{path}: checksum mismatch")
    if spec is None:
        spec = group_preset(doc["preset"])
    rank = int(doc["rank"])
    if rank != spec.rank:
        raise CensusError(f"{path}: rank {rank} does not match {spec.name} (rank {spec.rank})")
    if int(doc["expected_order"]) != spec.expected_order:
        raise CensusError(f"{path}: expected_order {doc['expected_order']} does not match "
                          f"{spec.name} ({spec.expected_order})")
    if prod(spec.degrees) != spec.expected_order:
        raise CensusError(f"{spec.name}: product of degrees != expected order")
    counts = {}
    for e in entries:
        key = tuple(int(x) for x in e["charpoly"])
        if key in counts:
            raise CensusError(f"{path}: duplicate entry {key}")
        counts[key] = int(e["count"])
    census = CharPolyCensus(rank=rank, entries=counts, group=spec)
    census.validate()
    if census.total != spec.expected_order:
        raise CensusError(f"{path}: census total {census.total} != expected order "
                          f"{spec.expected_order}")
    return census
