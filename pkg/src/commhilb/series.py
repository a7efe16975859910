"""Exact truncated power series in ``q, s, t`` and univariate polynomials.

Coefficients live in a dense numpy object array of Python ints and
``fractions.Fraction`` values, indexed ``[a, b, m]`` for the monomial
``q^a s^b t^m``.  Everything above the caps ``(Qmax, Smax, Tmax)`` is
dropped, and binary operations require equal caps.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import zip_longest

import numpy as np

__all__ = [
    "CapsMismatch",
    "TriSeries",
    "UniPoly",
    "add",
    "mul",
    "scale",
    "inverse",
    "sum_q",
    "eval_det_factors",
    "q_bound",
]


class CapsMismatch(ValueError):
    pass


def _norm(x):
    """Collapse integral fractions to ``int``."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x.numerator)
    return x


def _render_monomial(coeff, powers):
    parts = []
    for var, p in powers:
        if p == 1:
            parts.append(var)
        elif p > 1:
            parts.append(f"{var}^{p}")
    mono = "*".join(parts)
    mag = abs(coeff)
    if not mono:
        body = str(mag)
    elif mag == 1:
        body = mono
    else:
        body = f"{mag}*{mono}"
    return coeff < 0, body


def _join_terms(terms):
    if not terms:
        return "0"
    out = []
    for i, (neg, body) in enumerate(terms):
        if i == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(out)


class UniPoly:
    """Univariate polynomial with exact coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [_norm(Fraction(x)) if isinstance(x, Fraction) else x for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, k, c=1):
        return cls([0] * k + [c])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UniPoly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UniPoly({list(self.coeffs)})"

    def __add__(self, other):
        other = _as_poly(other)
        return UniPoly([a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0)])

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = UniPoly([1])
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def truncate(self, deg):
        return UniPoly(self.coeffs[:deg + 1])

    def substitute_power(self, k):
        """The polynomial ``p(x^k)``."""
        out = [0] * (k * self.degree + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[k * i] = c
        return UniPoly(out)

    def inverse_series(self, deg):
        """Coefficients of ``1/p`` up to ``x^deg``."""
        c0 = self[0]
        if c0 == 0:
            raise ZeroDivisionError("constant term is zero; no power-series inverse")
        inv0 = Fraction(1, 1) / c0
        out = []
        for k in range(deg + 1):
            acc = 1 if k == 0 else 0
            for j in range(1, min(k, self.degree) + 1):
                acc -= self.coeffs[j] * out[k - j]
            out.append(_norm(acc * inv0))
        return UniPoly(out)

    def divmod(self, other):
        """Polynomial long division ``self = quot * other + rem``."""
        other = _as_poly(other)
        if not other.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UniPoly(), UniPoly(rem)
        lead = other.coeffs[-1]
        quot = [0] * (dq + 1)
        for k in range(dq, -1, -1):
            c = rem[k + other.degree]
            if c:
                c = _norm(Fraction(c) / lead)
                quot[k] = c
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return UniPoly(quot), UniPoly(rem)

    def render(self, var="t"):
        terms = [_render_monomial(c, [(var, k)]) for k, c in enumerate(self.coeffs) if c]
        return _join_terms(terms)


def _as_poly(x):
    return x if isinstance(x, UniPoly) else UniPoly([x])


class TriSeries:
    """Truncated series ``sum c[a, b, m] q^a s^b t^m`` with exact coefficients."""

    __slots__ = ("caps", "coeffs")

    def __init__(self, caps, coeffs=None):
        caps = tuple(int(c) for c in caps)
        if len(caps) != 3 or min(caps) < 0:
            raise ValueError(f"caps must be three non-negative integers, got {caps}")
        self.caps = caps
        shape = tuple(c + 1 for c in caps)
        if coeffs is None:
            arr = np.zeros(shape, dtype=object)
        else:
            arr = np.asarray(coeffs, dtype=object)
            if arr.shape != shape:
                raise ValueError(f"coefficient array shape {arr.shape} != {shape}")
        self.coeffs = arr

    # construction

    @classmethod
    def zero(cls, caps):
        return cls(caps)

    @classmethod
    def one(cls, caps):
        return cls.from_terms(caps, {(0, 0, 0): 1})

    @classmethod
    def from_terms(cls, caps, terms):
        x = cls(caps)
        for (a, b, m), c in terms.items():
            if a <= x.caps[0] and b <= x.caps[1] and m <= x.caps[2]:
                x.coeffs[a, b, m] += c
        return x

    @classmethod
    def from_q_poly(cls, caps, poly):
        x = cls(caps)
        for a, c in enumerate(poly.coeffs[:caps[0] + 1]):
            x.coeffs[a, 0, 0] = c
        return x

    @classmethod
    def from_st_poly(cls, caps, terms):
        """Series in ``s, t`` from ``{(b, m): c}``."""
        return cls.from_terms(caps, {(0, b, m): c for (b, m), c in terms.items()})

    @classmethod
    def from_expression(cls, caps, fn):
        """Build ``fn(q, s, t)`` where the arguments are variable series."""
        q = cls.from_terms(caps, {(1, 0, 0): 1})
        s = cls.from_terms(caps, {(0, 1, 0): 1})
        t = cls.from_terms(caps, {(0, 0, 1): 1})
        return fn(q, s, t)

    # access

    def __getitem__(self, idx):
        a, b, m = idx
        if a > self.caps[0] or b > self.caps[1] or m > self.caps[2]:
            raise IndexError(f"{idx} outside caps {self.caps}")
        return _norm(self.coeffs[a, b, m])

    def nonzero_items(self):
        """``((a, b, m), c)`` for every nonzero coefficient, ordered by ``(m, b, a)``."""
        idx = np.argwhere(self.coeffs != 0)
        out = [((int(a), int(b), int(m)), _norm(self.coeffs[a, b, m])) for a, b, m in idx]
        out.sort(key=lambda item: (item[0][2], item[0][1], item[0][0]))
        return out

    def nnz(self):
        return int(np.count_nonzero(self.coeffs != 0))

    def is_zero(self):
        return self.nnz() == 0

    def t_slice(self, m):
        """The coefficient of ``t^m`` as a series with ``Tmax = 0``."""
        return TriSeries((self.caps[0], self.caps[1], 0), self.coeffs[:, :, m:m + 1].copy())

    def truncate(self, caps):
        caps = tuple(caps)
        if any(c > d for c, d in zip(caps, self.caps)):
            raise CapsMismatch(f"cannot extend caps {self.caps} to {caps}")
        return TriSeries(caps, self.coeffs[:caps[0] + 1, :caps[1] + 1, :caps[2] + 1].copy())

    def max_q_degree(self):
        nz = np.argwhere(self.coeffs != 0)
        return int(nz[:, 0].max()) if len(nz) else -1

    def is_integral(self):
        return all(isinstance(_norm(c), int) for c in self.coeffs.flat)

    # arithmetic

    def _check(self, other):
        if not isinstance(other, TriSeries):
            raise TypeError(f"expected TriSeries, got {type(other).__name__}")
        if other.caps != self.caps:
            raise CapsMismatch(f"caps differ: {self.caps} vs {other.caps}")

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return TriSeries.one(self.caps).scale(other)
        self._check(other)
        return other

    def __add__(self, other):
        other = self._coerce(other)
        return TriSeries(self.caps, self.coeffs + other.coeffs)

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c):
        if isinstance(c, Fraction):
            c = _norm(c)
        return TriSeries(self.caps, self.coeffs * c)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        # iterate over the sparser factor, shifting the denser one
        sparse, dense = (self, other) if self.nnz() <= other.nnz() else (other, self)
        Q, S, T = self.caps
        out = np.zeros_like(self.coeffs)
        src = dense.coeffs
        for a, b, m in np.argwhere(sparse.coeffs != 0):
            c = sparse.coeffs[a, b, m]
            out[a:, b:, m:] += c * src[:Q + 1 - a, :S + 1 - b, :T + 1 - m]
        return TriSeries(self.caps, out)

    __rmul__ = __mul__

    def inverse(self):
        """Two-sided inverse within caps; the constant term must be nonzero."""
        c0 = _norm(self.coeffs[0, 0, 0])
        if c0 == 0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        # x = c0 (1 - y) with y of positive total degree, so the geometric sum is finite
        y = TriSeries.one(self.caps) - self.scale(Fraction(1) / c0)
        acc = TriSeries.one(self.caps)
        term = TriSeries.one(self.caps)
        for _ in range(sum(self.caps) + 1):
            term = term * y
            if term.is_zero():
                break
            acc = acc + term
        return acc.scale(Fraction(1) / c0)

    def sum_q(self):
        """Collapse the ``q`` grading: caps become ``(0, Smax, Tmax)``."""
        return TriSeries((0,) + self.caps[1:], self.coeffs.sum(axis=0, keepdims=True))

    def __eq__(self, other):
        if not isinstance(other, TriSeries):
            return NotImplemented
        return self.caps == other.caps and bool(np.all(self.coeffs == other.coeffs))

    def __hash__(self):
        return None  # mutable numpy storage

    def first_difference(self, other):
        """First ``((a, b, m), mine, theirs)`` where two series differ, or ``None``."""
        self._check(other)
        diff = np.argwhere(self.coeffs != other.coeffs)
        if not len(diff):
            return None
        a, b, m = min((tuple(int(v) for v in d) for d in diff), key=lambda k: (k[2], k[1], k[0]))
        return (a, b, m), _norm(self.coeffs[a, b, m]), _norm(other.coeffs[a, b, m])

    def render(self):
        terms = [_render_monomial(c, [("q", a), ("s", b), ("t", m)])
                 for (a, b, m), c in self.nonzero_items()]
        return _join_terms(terms)

    def __repr__(self):
        return f"TriSeries(caps={self.caps}, {self.render()})"

    def to_records(self):
        """``[{q, s, t, value}]`` with exact values rendered as strings."""
        return [{"q": a, "s": b, "t": m, "value": str(c)} for (a, b, m), c in self.nonzero_items()]


def add(x, y):
    return x + y


def mul(x, y):
    return x * y


def scale(x, c):
    return x.scale(c)


def inverse(x):
    return x.inverse()


def sum_q(x):
    return x.sum_q()


def eval_det_factors(cp):
    """``(det(1 - q^2 w), det(1 + s w))`` from the characteristic polynomial of ``w``.

    ``cp`` is the ascending coefficient tuple of ``det(x I - w)``.  The first
    polynomial is returned in the variable ``q`` (only even powers occur).
    """
    cp = tuple(cp)
    if not cp or cp[-1] != 1:
        raise ValueError(f"characteristic polynomial {cp} is not monic")
    n = len(cp) - 1
    # e_k = (-1)^k a_{n-k}
    e = [(-1) ** k * cp[n - k] for k in range(n + 1)]
    det_s = UniPoly(e)
    det_q = UniPoly([(-1) ** k * e[k] for k in range(n + 1)]).substitute_power(2)
    return det_q, det_s


def q_bound(degrees):
    """Top q-degree ``2 * sum(d_i - 1)`` of the coinvariant algebra."""
    return 2 * sum(d - 1 for d in degrees)
