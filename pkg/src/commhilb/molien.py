"""Trigraded Molien series of ``(C* (x) T*[E~])^W`` and the numbers read off it.

``q`` carries topological degree (coinvariant generators sit in degree 2),
``s`` the torus homological degree ``j = k_1 + ... + k_m`` and ``t`` the
tensor length ``m``.  The series is

    prod(1 - q^(2 d_i)) / |W| * sum_w 1 / (det(1 - q^2 w) (1 - t (det(1 + s w) - 1)))

where the sum runs over a characteristic-polynomial census of ``W``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, prod

from commhilb.series import TriSeries, UniPoly, eval_det_factors, q_bound

__all__ = [
    "BettiTable",
    "InsufficientCaps",
    "class_term",
    "trigraded_hilb",
    "closed_form_u2",
    "comm_betti",
    "hom_betti",
    "betti_table",
    "ungraded_comm_hilb",
    "james_hilb",
    "so3_components",
    "coinvariant_poincare",
    "degree_prefactor",
    "m1_slice",
]


class InsufficientCaps(ValueError):
    pass


@dataclass
class BettiTable:
    """Ranks of reduced real cohomology ``H~^d(Hom(Z^m, G))`` keyed by ``(m, d)``."""

    group: str
    entries: dict = field(default_factory=dict)

    def row(self, m):
        ds = sorted(d for (mm, d) in self.entries if mm == m)
        return [self.entries[(m, d)] for d in ds]

    def nonzero(self, m):
        return {d: r for (mm, d), r in sorted(self.entries.items()) if mm == m and r}


def class_term(cp, caps):
    """Truncated expansion of ``1 / (det(1 - q^2 w) (1 - t (det(1 + s w) - 1)))``."""
    det_q, det_s = eval_det_factors(cp)
    qpart = TriSeries.from_q_poly(caps, det_q)
    tpart = TriSeries.from_st_poly(
        caps, {(0, 0): 1, **{(b, 1): -c for b, c in enumerate(det_s.coeffs) if b > 0}})
    return qpart.inverse() * tpart.inverse()


def degree_prefactor(degrees):
    """``prod(1 - q^(2 d_i))`` as a polynomial in ``q``."""
    out = UniPoly([1])
    for d in degrees:
        out = out * (UniPoly([1]) - UniPoly.monomial(2 * d))
    return out


def trigraded_hilb(census, degrees, caps):
    """Trigraded Hilbert-Poincare series of the invariants, truncated to ``caps``.

    Choose ``caps[0] >= q_bound(degrees)`` for results exact in ``q``.
    Raises ``ValueError`` on a rank or order mismatch and ``ArithmeticError``
    if any coefficient fails to be a non-negative integer.
    """
    degrees = tuple(degrees)
    if census.rank != len(degrees):
        raise ValueError(f"census rank {census.rank} != number of degrees {len(degrees)}")
    order = prod(degrees)
    if census.total != order:
        raise ValueError(f"census total {census.total} != product of degrees {order}")
    acc = TriSeries.zero(caps)
    for cp, count in census.items():
        acc = acc + class_term(cp, caps).scale(count)
    acc = TriSeries.from_q_poly(caps, degree_prefactor(degrees)) * acc
    out = acc.scale(Fraction(1, order))
    for (a, b, m), c in out.nonzero_items():
        if not isinstance(c, int) or c < 0:
            raise ArithmeticError(f"coefficient at (q^{a}, s^{b}, t^{m}) is {c}, "
                                  "not a non-negative integer")
    return out


def closed_form_u2(caps):
    """``(1 + q^2) / (2 (1 - t (s^2 + 2 s))) + (1 - q^2) / (2 (1 + s^2 t))``."""
    def build(q, s, t):
        first = (1 + q * q) * (2 * (1 - t * (s * s + 2 * s))).inverse()
        second = (1 - q * q) * (2 * (1 + s * s * t)).inverse()
        return first + second
    return TriSeries.from_expression(caps, build)


def _check_caps(F, dmax, tneed, q_degree):
    Q, S, T = F.caps
    if S < dmax:
        raise InsufficientCaps(f"Smax={S} < dmax={dmax}: need Smax >= dmax")
    if T < tneed:
        raise InsufficientCaps(f"Tmax={T} < {tneed}: need Tmax >= {tneed}")
    # a = d only occurs with b = 0, which is the unit alone
    if Q < dmax - 1 and (q_degree is None or Q < q_degree):
        raise InsufficientCaps(f"Qmax={Q} < dmax-1={dmax - 1} and the series is not "
                               "known to be exact in q")


def comm_betti(F, dmax, q_degree=None):
    """Betti numbers ``b_0 .. b_dmax`` of ``Comm(G)_1`` from the trigraded series.

    ``b_d`` sums every coefficient with ``a + b = d``; the ``t^0`` unit gives
    ``b_0 = 1``.  Pass ``q_degree`` when ``F`` is known to be exact in ``q``
    below ``dmax - 1``.
    """
    _check_caps(F, dmax, dmax, q_degree)
    b = [0] * (dmax + 1)
    for (a, s, m), c in F.nonzero_items():
        if a + s <= dmax:
            b[a + s] += c
    return b


def hom_betti(F, m, dmax, group="", q_degree=None):
    """Reduced Betti numbers of ``Hom(Z^m, G)`` for degrees ``0 .. dmax``.

    Rank in degree ``d`` is ``sum_{k=1..m} C(m, k) * sum_{a+b=d} [q^a s^b t^k] F``.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    _check_caps(F, dmax, m, q_degree)
    per_t = {}
    for (a, s, k), c in F.nonzero_items():
        if 1 <= k <= m and a + s <= dmax:
            per_t[(k, a + s)] = per_t.get((k, a + s), 0) + c
    table = BettiTable(group)
    for d in range(dmax + 1):
        table.entries[(m, d)] = sum(comb(m, k) * per_t.get((k, d), 0) for k in range(1, m + 1))
    return table


def betti_table(F, ms, dmax, group="", q_degree=None):
    table = BettiTable(group)
    for m in ms:
        table.entries.update(hom_betti(F, m, dmax, group, q_degree).entries)
    return table


def m1_slice(F):
    """``sum_{a+b=d} [q^a s^b t^1] F z^d`` as a polynomial in ``z``."""
    out = [0] * (sum(F.caps[:2]) + 1)
    for (a, b, m), c in F.nonzero_items():
        if m == 1:
            out[a + b] += c
    return UniPoly(out)


def james_hilb(hx, tmax):
    """Truncation of ``1 / (2 - hx(t))``; ``hx`` must have constant term 1."""
    hx = hx if isinstance(hx, UniPoly) else UniPoly(hx)
    if hx[0] != 1:
        raise ValueError(f"Poincare polynomial must have constant term 1, got {hx[0]}")
    return (2 - hx).inverse_series(tmax)


def ungraded_comm_hilb(n, tmax):
    """Truncation of ``1 / (2 - (1 + t)^n)``."""
    if n < 1:
        raise ValueError("rank must be >= 1")
    return james_hilb(UniPoly([1, 1]) ** n, tmax)


def so3_components(n):
    """Number of non-identity path components of ``Hom(Z^n, SO(3))``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n % 2 == 0:
        val = Fraction(4 ** n + 3 * 2 ** n + 2, 6)
    else:
        val = Fraction(2, 3) * (4 ** (n - 1) - 1) - 2 ** (n - 1) + 1
    if val.denominator != 1:
        raise ArithmeticError(f"component count for n={n} is not an integer: {val}")
    return int(val)


def coinvariant_poincare(degrees):
    """Poincare polynomial ``prod(1 - q^(2 d_i)) / (1 - q^2)^n`` of ``G/T``."""
    degrees = tuple(degrees)
    if not degrees or min(degrees) < 1:
        raise ValueError(f"invalid degree vector {degrees}")
    denom = UniPoly([1, 0, -1]) ** len(degrees)
    quot, rem = degree_prefactor(degrees).divmod(denom)
    if rem.coeffs:
        raise ArithmeticError(f"degrees {degrees} do not give a polynomial quotient")
    return quot


def exact_caps(degrees, smax, tmax):
    """Caps ``(q_bound(degrees), smax, tmax)``, exact in the q direction."""
    return (q_bound(degrees), smax, tmax)
