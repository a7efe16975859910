"""Weyl group presets for the compact Lie groups handled by the package.

Every preset is a :class:`GroupSpec`: integer generator matrices, the rank of
the maximal torus, the fundamental degrees and the expected group order.
Crystallographic types act on the root lattice in the simple-root basis, so
all matrices are integral and their characteristic polynomials are exact.

``U<n>`` uses the full permutation representation of the symmetric group
(rank ``n``), while ``SU<n>`` uses the ``(n-1)``-dimensional reflection
representation of type ``A_{n-1}``.  ``SO<n>`` is an alias of ``Spin<n>``:
both share Weyl data, and the series computed from it describe the identity
component only.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from math import factorial, prod

import numpy as np

__all__ = [
    "GroupSpec",
    "cartan_matrix",
    "cartan_reflections",
    "group_preset",
    "permutation_generators",
    "PRESET_PATTERNS",
]

PRESET_PATTERNS = (
    "U<n>", "SU<n>", "Sp<n>", "Spin<N>", "SO<N>",
    "A<n>", "B<n>", "C<n>", "D<n>", "G2", "F4", "E6", "E7", "E8",
)


@dataclass(frozen=True)
class GroupSpec:
    """A finite reflection group realised by integer matrices."""

    name: str
    rank: int
    generators: tuple
    degrees: tuple
    expected_order: int
    cartan_type: str = ""
    crystallographic: bool = True
    note: str = ""

    def generator_arrays(self):
        return [np.array(g, dtype=np.int64).reshape(self.rank, self.rank)
                for g in self.generators]

    @property
    def num_reflections(self):
        return sum(d - 1 for d in self.degrees)

    def check(self):
        """Raise ``ValueError`` if a structural invariant fails."""
        if prod(self.degrees) != self.expected_order:
            raise ValueError(f"{self.name}: product of degrees {prod(self.degrees)} "
                             f"!= expected order {self.expected_order}")
        if len(self.degrees) != self.rank:
            raise ValueError(f"{self.name}: {len(self.degrees)} degrees for rank {self.rank}")
        eye = np.eye(self.rank, dtype=np.int64)
        for g in self.generator_arrays():
            if not np.array_equal(g @ g, eye):
                raise ValueError(f"{self.name}: generator is not an involution")
            if self.crystallographic and round(np.linalg.det(g)) != -1:
                raise ValueError(f"{self.name}: simple reflection with det != -1")


def _as_tuple(m):
    return tuple(tuple(int(x) for x in row) for row in np.asarray(m))


def cartan_reflections(cartan):
    """Simple reflections of the root lattice, in the simple-root basis.

    The i-th matrix sends ``alpha_j`` to ``alpha_j - C[j][i] * alpha_i``.
    """
    c = np.asarray(cartan, dtype=np.int64)
    if c.ndim != 2 or c.shape[0] != c.shape[1]:
        raise ValueError(f"Cartan matrix must be square, got shape {c.shape}")
    n = c.shape[0]
    if np.any(np.diag(c) != 2):
        raise ValueError("Cartan matrix must have 2 on the diagonal")
    off = c[~np.eye(n, dtype=bool)]
    if np.any(off > 0):
        raise ValueError("Cartan matrix off-diagonal entries must be non-positive")
    gens = []
    for i in range(n):
        s = np.eye(n, dtype=np.int64)
        s[i, :] -= c[:, i]
        gens.append(s)
    return gens


def _chain(n):
    c = 2 * np.eye(n, dtype=np.int64)
    for i in range(n - 1):
        c[i, i + 1] = c[i + 1, i] = -1
    return c


def cartan_matrix(kind, n):
    """Cartan matrix of finite type ``kind`` (one of A-G) and rank ``n``."""
    kind = kind.upper()
    if kind == "A":
        return _chain(n)
    if kind in ("B", "C"):
        c = _chain(n)
        if n >= 2:
            # B has alpha_n short; C is the transpose
            if kind == "B":
                c[n - 1, n - 2] = -2
            else:
                c[n - 2, n - 1] = -2
        return c
    if kind == "D":
        if n < 2:
            raise ValueError("type D needs rank >= 2")
        c = 2 * np.eye(n, dtype=np.int64)
        for i in range(n - 2):
            c[i, i + 1] = c[i + 1, i] = -1
        if n >= 3:
            c[n - 1, n - 2] = c[n - 2, n - 1] = 0
            c[n - 1, n - 3] = c[n - 3, n - 1] = -1
        return c
    if kind == "G" and n == 2:
        return np.array([[2, -1], [-3, 2]], dtype=np.int64)
    if kind == "F" and n == 4:
        return np.array([[2, -1, 0, 0],
                         [-1, 2, -2, 0],
                         [0, -1, 2, -1],
                         [0, 0, -1, 2]], dtype=np.int64)
    if kind == "E" and n in (6, 7, 8):
        # Bourbaki labels: 1-3-4-5-6-7-8 chain, node 2 attached to 4
        edges = [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)]
        c = 2 * np.eye(n, dtype=np.int64)
        for a, b in edges:
            if a <= n and b <= n:
                c[a - 1, b - 1] = c[b - 1, a - 1] = -1
        return c
    raise ValueError(f"no Cartan matrix of type {kind}{n}")


_WEYL_DATA = {
    "G2": (2, 6),
    "F4": (2, 6, 8, 12),
    "E6": (2, 5, 6, 8, 9, 12),
    "E7": (2, 6, 8, 10, 12, 14, 18),
    "E8": (2, 8, 12, 14, 18, 20, 24, 30),
}


def _classical_degrees(kind, n):
    if kind == "A":
        return tuple(range(2, n + 2))
    if kind in ("B", "C"):
        return tuple(range(2, 2 * n + 1, 2))
    if kind == "D":
        return tuple(range(2, 2 * n - 1, 2)) + (n,)
    raise ValueError(kind)


def _classical_order(kind, n):
    if kind == "A":
        return factorial(n + 1)
    if kind in ("B", "C"):
        return 2 ** n * factorial(n)
    return 2 ** (n - 1) * factorial(n)


def permutation_generators(n):
    """Adjacent transpositions of the symmetric group as n x n matrices."""
    gens = []
    for i in range(n - 1):
        p = np.eye(n, dtype=np.int64)
        p[[i, i + 1]] = p[[i + 1, i]]
        gens.append(p)
    return gens


def _crystallographic(kind, n, name, note=""):
    label = f"{kind}{n}"
    if label in _WEYL_DATA:
        degrees = _WEYL_DATA[label]
        order = prod(degrees)
    else:
        degrees = _classical_degrees(kind, n)
        order = _classical_order(kind, n)
    gens = cartan_reflections(cartan_matrix(kind, n))
    return GroupSpec(name=name, rank=n, generators=tuple(_as_tuple(g) for g in gens),
                     degrees=degrees, expected_order=order, cartan_type=label,
                     crystallographic=True, note=note)


_NAME_RE = re.compile(r"^(SU|SP|SPIN|SO|U|A|B|C|D|E|F|G)(\d+)?$")

_CANON = {"SU": "SU", "SP": "Sp", "SPIN": "Spin", "SO": "SO", "U": "U"}


def group_preset(name, rank=None):
    """Resolve a preset label such as ``"U2"``, ``"Spin7"`` or ``"E6"``.

    ``rank`` supplies the numeric parameter when ``name`` is a bare family
    (``group_preset("B", 3)``).  For ``U``, ``SU``, ``Sp``, ``Spin`` and ``SO``
    the number is the group parameter (``Spin7`` has rank 3); for ``A``-``D``
    it is the rank itself.
    """
    m = _NAME_RE.match(name.strip().upper())
    if m is None:
        raise ValueError(f"unknown group {name!r}; expected one of {', '.join(PRESET_PATTERNS)}")
    family, num = m.group(1), m.group(2)
    if num is not None and rank is not None and int(num) != rank:
        raise ValueError(f"group {name!r} conflicts with rank parameter {rank}")
    k = int(num) if num is not None else rank
    if k is None:
        raise ValueError(f"group {name!r} needs a numeric parameter")
    if k < 1:
        raise ValueError(f"rank parameter must be >= 1, got {k}")

    if family == "U":
        gens = permutation_generators(k)
        return GroupSpec(name=f"U{k}", rank=k, generators=tuple(_as_tuple(g) for g in gens),
                         degrees=tuple(range(1, k + 1)), expected_order=factorial(k),
                         cartan_type=f"A{k - 1}" if k > 1 else "", crystallographic=False,
                         note="symmetric group in the permutation representation")
    if family == "SU":
        if k < 2:
            raise ValueError("SU(n) needs n >= 2")
        return _crystallographic("A", k - 1, f"SU{k}")
    if family == "SP":
        return _crystallographic("C", k, f"Sp{k}")
    if family in ("SPIN", "SO"):
        canon = _CANON[family]
        if k < 3:
            raise ValueError(f"{canon}(n) presets need n >= 3")
        note = "identity-component series" if family == "SO" else ""
        if k % 2:
            return _crystallographic("B", (k - 1) // 2, f"{canon}{k}", note)
        return _crystallographic("D", k // 2, f"{canon}{k}", note)
    if family in ("E", "F", "G"):
        label = f"{family}{k}"
        if label not in _WEYL_DATA:
            raise ValueError(f"unknown exceptional type {label}")
        return _crystallographic(family, k, label)
    if family == "D" and k < 2:
        raise ValueError("type D needs rank >= 2")
    return _crystallographic(family, k, f"{family}{k}")
