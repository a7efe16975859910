"""Invariant suite run by ``commhilb verify``."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod

from commhilb import molien, oracle
from commhilb.series import TriSeries, UniPoly, eval_det_factors, q_bound
from commhilb.weylgen import charpoly


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def _mismatch(expected, actual):
    diff = expected.first_difference(actual)
    if diff is None:
        return ""
    (a, b, m), e, x = diff
    return f"({a},{b},{m}): expected {e}/actual {x}"


def ungraded_reference(n, caps):
    """``1 / (1 - t ((1 + s)^n - 1))`` with ``caps[0] = 0``."""
    def build(q, s, t):
        base = TriSeries.one(s.caps)
        for _ in range(n):
            base = base * (1 + s)
        return (1 - t * (base - 1)).inverse()
    return TriSeries.from_expression((0,) + tuple(caps[1:]), build)


def exterior_reduced(degrees):
    out = UniPoly([1])
    for d in degrees:
        out = out * (UniPoly([1]) + UniPoly.monomial(2 * d - 1))
    return out - 1


def series_checks(spec, F):
    """Checks on a series computed with ``caps[0] > q_bound(spec.degrees)``."""
    qb = q_bound(spec.degrees)
    Q, S, T = F.caps

    bad = [(k, c) for k, c in F.nonzero_items() if k[1] == 0 and k != (0, 0, 0)]
    unit = F[0, 0, 0] == 1
    yield CheckResult("normalization F(q,0,t)=1", unit and not bad,
                      "" if unit and not bad else f"offending terms {bad[:3]}")

    over = [k for k, _ in F.nonzero_items() if k[0] > qb]
    yield CheckResult(f"q-degree <= {qb}", not over, f"terms at {over[:3]}" if over else "")

    if Q >= qb:
        ref = ungraded_reference(spec.rank, F.caps)
        yield CheckResult("ungraded collapse", F.sum_q() == ref, _mismatch(ref, F.sum_q()))

    if S >= spec.rank and T >= 1:
        got = molien.m1_slice(F)
        want = exterior_reduced(spec.degrees)
        yield CheckResult("m=1 slice is the reduced Poincare polynomial of G", got == want,
                          "" if got == want else f"{got.render('z')} != {want.render('z')}")


def run_checks(spec, census, deep=False):
    """Yield :class:`CheckResult` objects; callers stop at the first failure."""
    try:
        spec.check()
        yield CheckResult("preset structure", True)
    except ValueError as exc:
        yield CheckResult("preset structure", False, str(exc))

    yield CheckResult("census total = |W|", census.total == spec.expected_order,
                      f"{census.total} != {spec.expected_order}")
    if spec.generators:
        pos, neg = census.det_counts()
        yield CheckResult("half the elements have det +1", pos == neg, f"{pos} vs {neg}")

    poin = molien.coinvariant_poincare(spec.degrees)
    yield CheckResult("coinvariant Poincare polynomial sums to |W|",
                      poin(1) == prod(spec.degrees), f"{poin(1)}")

    tmax = 3 if deep else 2
    caps = (q_bound(spec.degrees) + 1, max(spec.rank, 4 if not deep else 2 * spec.rank), tmax)
    F = molien.trigraded_hilb(census, spec.degrees, caps)
    yield from series_checks(spec, F)

    if spec.name == "U2":
        ref = molien.closed_form_u2(caps)
        yield CheckResult("U(2) closed form", F == ref, _mismatch(ref, F))

    if spec.expected_order <= oracle.ORDER_LIMIT:
        elements = oracle.element_list(spec)
        disagree = 0
        for w in elements:
            det_s = eval_det_factors(charpoly(w))[1]
            explicit = UniPoly([1] + [oracle.action_trace_wedge(w, k)
                                      for k in range(1, spec.rank + 1)])
            disagree += explicit != det_s
        yield CheckResult("wedge traces match det(1+sw)", disagree == 0,
                          f"{disagree} elements disagree")

        imax = 6 if deep else 4
        avg = [Fraction(sum(oracle.action_trace_poly(w, i) for w in elements), len(elements))
               for i in range(imax + 1)]
        molien_q = molien.degree_prefactor(spec.degrees).inverse_series(2 * imax)
        want = [molien_q[2 * i] for i in range(imax + 1)]
        yield CheckResult("polynomial invariants match prod 1/(1-q^(2d))", avg == want,
                          f"{avg} != {want}")

        ocaps = (12, 8, 3) if deep else (8, 6, 3)
        O = oracle.oracle_trigraded(spec, ocaps)
        M = molien.trigraded_hilb(census, spec.degrees, ocaps)
        yield CheckResult(f"oracle = Molien at caps {ocaps}", O == M, _mismatch(O, M))

