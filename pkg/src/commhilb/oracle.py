"""Brute-force invariant dimensions for small Weyl groups.

Traces are read off explicit bases: monomials for ``R_i`` and sorted index
subsets for ``wedge^k``.  Nothing here touches a characteristic polynomial,
so the results check :mod:`commhilb.molien` independently.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, permutations
from math import comb

import numpy as np

from commhilb.molien import degree_prefactor
from commhilb.series import TriSeries
from commhilb.weylgen import iter_levels

__all__ = [
    "GradedPieceSpec",
    "OracleScopeError",
    "ORDER_LIMIT",
    "PIECE_LIMIT",
    "element_list",
    "action_trace_poly",
    "action_trace_wedge",
    "action_trace_wedge_tensor",
    "brute_invariant_dim",
    "oracle_trigraded",
    "compositions",
]

ORDER_LIMIT = 10 ** 4
PIECE_LIMIT = 10 ** 5


class OracleScopeError(ValueError):
    pass


@dataclass(frozen=True)
class GradedPieceSpec:
    """``R_i (x) wedge^{k_1} (x) ... (x) wedge^{k_m}``."""

    degree: int
    kvec: tuple = ()

    def validate(self, n):
        if self.degree < 0:
            raise ValueError("polynomial degree must be >= 0")
        if any(not 1 <= k <= n for k in self.kvec):
            raise ValueError(f"wedge degrees {self.kvec} must lie in [1, {n}]")
        size = comb(n + self.degree - 1, self.degree)
        for k in self.kvec:
            size *= comb(n, k)
        if size > PIECE_LIMIT:
            raise OracleScopeError(f"piece of dimension {size} exceeds {PIECE_LIMIT}")


def element_list(spec, limit=ORDER_LIMIT):
    """All elements of the group as integer matrices, in BFS order."""
    if spec.expected_order > limit:
        raise OracleScopeError(f"{spec.name} has order {spec.expected_order} > {limit}")
    if not spec.generators:
        return [np.eye(spec.rank, dtype=np.int64)]
    out = []
    for level in iter_levels(spec.generator_arrays(), limit):
        out.extend(m.astype(np.int64) for m in level)
    return out


def _key(w):
    w = np.asarray(w, dtype=np.int64)
    return w.shape[0], tuple(int(x) for x in w.ravel())


def _matrix(key):
    n, flat = key
    return [list(flat[i * n:(i + 1) * n]) for i in range(n)]


@lru_cache(maxsize=None)
def _trace_poly(key, i):
    n = key[0]
    w = _matrix(key)
    # x_k -> sum_l w[k][l] x_l applied to each monomial; keep its own coefficient
    linear = [{tuple(int(l == j) for l in range(n)): w[k][j] for j in range(n) if w[k][j]}
              for k in range(n)]
    trace = 0
    for combo in combinations_with_replacement(range(n), i):
        poly = {(0,) * n: 1}
        for k in combo:
            nxt = {}
            for mono, c in poly.items():
                for lmono, lc in linear[k].items():
                    e = tuple(x + y for x, y in zip(mono, lmono))
                    nxt[e] = nxt.get(e, 0) + c * lc
            poly = nxt
        target = tuple(combo.count(l) for l in range(n))
        trace += poly.get(target, 0)
    return trace


def action_trace_poly(w, i):
    """Trace of ``w`` on homogeneous degree-``i`` polynomials."""
    return _trace_poly(_key(w), i)


def _perm_sign(seq):
    sign = 1
    seq = list(seq)
    for a in range(len(seq)):
        for b in range(a + 1, len(seq)):
            if seq[a] > seq[b]:
                sign = -sign
    return sign


@lru_cache(maxsize=None)
def _trace_wedge(key, k):
    n = key[0]
    w = _matrix(key)
    trace = 0
    for subset in combinations(range(n), k):
        # w e_{s_1} ^ ... ^ w e_{s_k}, expanded; keep the e_subset coefficient
        coeff = 0
        for rows in permutations(subset):
            term = _perm_sign(rows)
            for r, col in zip(rows, subset):
                term *= w[r][col]
            coeff += term
        trace += coeff
    return trace


def action_trace_wedge(w, k):
    """Trace of ``w`` on ``wedge^k R^n`` via the subset basis."""
    return _trace_wedge(_key(w), k)


def action_trace_wedge_tensor(w, kvec):
    out = 1
    for k in kvec:
        out *= action_trace_wedge(w, k)
    return out


def brute_invariant_dim(spec, piece, elements=None):
    """Dimension of the ``W``-fixed subspace of ``piece``, by averaging traces."""
    piece.validate(spec.rank)
    elements = element_list(spec) if elements is None else elements
    total = sum(action_trace_poly(w, piece.degree) * action_trace_wedge_tensor(w, piece.kvec)
                for w in elements)
    dim = Fraction(total, len(elements))
    if dim.denominator != 1 or dim < 0:
        raise ArithmeticError(f"{spec.name} {piece}: averaged trace {dim} is not a "
                              "non-negative integer")
    return int(dim)


def compositions(j, m, kmax):
    """Ordered tuples of ``m`` integers in ``[1, kmax]`` summing to ``j``."""
    if m == 0:
        return [()] if j == 0 else []
    out = []
    for first in range(1, min(kmax, j - m + 1) + 1):
        out.extend((first,) + rest for rest in compositions(j - first, m - 1, kmax))
    return out


def oracle_trigraded(spec, caps, limit=ORDER_LIMIT):
    """Trigraded series of ``(C (x) T*[E~])^W`` assembled from brute-force dimensions.

    Builds the ``R``-side series with ``R_i`` placed at ``q^(2 i)`` and then
    multiplies by ``prod(1 - q^(2 d_i))``.
    """
    elements = element_list(spec, limit)
    Q, S, T = caps
    n = spec.rank
    rside = TriSeries(caps)
    for i in range(Q // 2 + 1):
        for m in range(T + 1):
            for j in range(S + 1):
                dim = sum(brute_invariant_dim(spec, GradedPieceSpec(i, kv), elements)
                          for kv in compositions(j, m, n))
                rside.coeffs[2 * i, j, m] = dim
    return TriSeries.from_q_poly(caps, degree_prefactor(spec.degrees)) * rside
