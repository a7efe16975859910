from math import comb

import pytest

from commhilb.cartan import group_preset
from commhilb.molien import (InsufficientCaps, class_term, closed_form_u2, coinvariant_poincare,
                             comm_betti, hom_betti, james_hilb, m1_slice, so3_components,
                             trigraded_hilb, ungraded_comm_hilb)
from commhilb.series import TriSeries, UniPoly, q_bound


def hilb(census_of, name, caps):
    spec = group_preset(name)
    return trigraded_hilb(census_of(name), spec.degrees, caps)


def poly_mul(x, y):
    out = {}
    for k1, c1 in x.items():
        for k2, c2 in y.items():
            k = tuple(a + b for a, b in zip(k1, k2))
            out[k] = out.get(k, 0) + c1 * c2
    return out


def u2_tm_coefficient(m):
    # 1/2 [(1 + q^2)(s^2 + 2s)^m + (1 - q^2)(-s^2)^m] on exponents (a, b)
    pa = {(0, 0): 1}
    pb = {(0, 0): 1}
    for _ in range(m):
        pa = poly_mul(pa, {(0, 2): 1, (0, 1): 2})
        pb = poly_mul(pb, {(0, 2): -1})
    total = poly_mul({(0, 0): 1, (2, 0): 1}, pa)
    for k, c in poly_mul({(0, 0): 1, (2, 0): -1}, pb).items():
        total[k] = total.get(k, 0) + c
    out = {}
    for k, c in total.items():
        assert c % 2 == 0
        if c:
            out[k] = c // 2
    return out


def test_class_term_identity_rank1():
    x = class_term((-1, 1), (4, 2, 2))
    want = {(a, m, m): 1 for a in (0, 2, 4) for m in range(3)}
    assert x == TriSeries.from_terms((4, 2, 2), want)


def test_class_term_swap():
    caps = (8, 4, 2)
    x = class_term((-1, 0, 1), caps)
    want = {(4 * k, 2 * m, m): (-1) ** m for k in range(3) for m in range(3)}
    assert x == TriSeries.from_terms(caps, want)


def test_class_term_negation_rank1():
    caps = (6, 3, 3)
    x = class_term((1, 1), caps)
    want = {(2 * k, m, m): (-1) ** (k + m) for k in range(4) for m in range(4)}
    assert x == TriSeries.from_terms(caps, want)


def test_u2_matches_closed_form(census_of):
    caps = (10, 10, 6)
    assert hilb(census_of, "U2", caps) == closed_form_u2(caps)


def test_closed_form_u2_slices():
    caps = (6, 12, 6)
    F = closed_form_u2(caps)
    assert F.t_slice(0) == TriSeries.one((6, 12, 0))
    assert F.t_slice(1).render() == "s + q^2*s + q^2*s^2"
    for m in range(1, 7):
        want = {(a, b, 0): c for (a, b), c in u2_tm_coefficient(m).items()}
        assert F.t_slice(m) == TriSeries.from_terms((6, 12, 0), want)


def test_u2_displayed_binomial_sum_is_not_the_expansion():
    # the per-t^m sum printed alongside the closed form lacks the (1 + q^2) factor
    displayed = {(0, 2 * 1 - 1): 1, (2, 2): 1}
    assert u2_tm_coefficient(1) != displayed
    assert u2_tm_coefficient(1) == {(0, 1): 1, (2, 1): 1, (2, 2): 1}


def test_a1_series(census_of):
    caps = (4, 6, 6)
    F = hilb(census_of, "A1", caps)
    want = {(0, 0, 0): 1}
    for m in range(1, 7):
        want[(0 if m % 2 == 0 else 2, m, m)] = 1
    assert F == TriSeries.from_terms(caps, want)


def test_mismatched_inputs(census_of):
    c = census_of("A2")
    with pytest.raises(ValueError):
        trigraded_hilb(c, (2, 3, 4), (4, 2, 1))
    with pytest.raises(ValueError):
        trigraded_hilb(c, (2, 4), (4, 2, 1))


@pytest.mark.parametrize("name", ["U3", "B3", "G2", "D4", "F4"])
def test_normalization_and_nonnegativity(census_of, name):
    spec = group_preset(name)
    F = hilb(census_of, name, (q_bound(spec.degrees), 3, 3))
    for (a, b, m), c in F.nonzero_items():
        assert isinstance(c, int) and c > 0
        if b == 0:
            assert (a, m) == (0, 0) and c == 1


def test_comm_betti_su2(census_of):
    F = hilb(census_of, "SU2", (4, 6, 6))
    # t^m coefficient is s^m (m even) or q^2 s^m (m odd)
    assert comm_betti(F, 5) == [1, 0, 1, 1, 1, 1]


def test_comm_betti_u2_degree_one(census_of):
    F = hilb(census_of, "U2", (4, 4, 4))
    b = comm_betti(F, 3)
    assert b[0] == 1 and b[1] == 1


def test_hom_betti_su2(census_of):
    F = hilb(census_of, "SU2", (4, 6, 2))
    assert hom_betti(F, 1, 5).nonzero(1) == {3: 1}
    t2 = hom_betti(F, 2, 5)
    assert t2.nonzero(2) == {2: 1, 3: 2}
    assert t2.entries[(2, 0)] == 0


def test_hom_betti_u2(census_of):
    F = hilb(census_of, "U2", (4, 6, 1))
    assert hom_betti(F, 1, 6, q_degree=2).nonzero(1) == {1: 1, 3: 1, 4: 1}


def test_hom_betti_binomial_structure(census_of):
    spec = group_preset("G2")
    F = hilb(census_of, "G2", (12, 10, 3))
    per_t = {}
    for (a, b, m), c in F.nonzero_items():
        per_t[(m, a + b)] = per_t.get((m, a + b), 0) + c
    table = hom_betti(F, 3, 10, q_degree=12)
    for d in range(11):
        want = sum(comb(3, k) * per_t.get((k, d), 0) for k in (1, 2, 3))
        assert table.entries[(3, d)] == want


def test_insufficient_caps(census_of):
    F = hilb(census_of, "SU2", (4, 2, 1))
    with pytest.raises(InsufficientCaps, match="Smax"):
        hom_betti(F, 1, 3)
    with pytest.raises(InsufficientCaps, match="Tmax"):
        hom_betti(TriSeries((4, 4, 1)), 2, 3)
    with pytest.raises(InsufficientCaps, match="Qmax"):
        comm_betti(TriSeries((1, 6, 6)), 5)


def test_m1_slice_g2(census_of):
    F = hilb(census_of, "G2", (12, 2, 1))
    assert m1_slice(F) == UniPoly.monomial(3) + UniPoly.monomial(11) + UniPoly.monomial(14)


def test_ungraded_examples():
    assert ungraded_comm_hilb(2, 3) == UniPoly([1, 2, 5, 12])
    assert ungraded_comm_hilb(1, 6) == UniPoly([1] * 7)
    c = [1]
    for k in range(1, 8):
        c.append(sum(comb(4, j) * c[k - j] for j in range(1, min(4, k) + 1)))
    assert ungraded_comm_hilb(4, 7) == UniPoly(c)


def test_james_examples():
    for m in range(1, 5):
        assert james_hilb(UniPoly([1, 1]) ** m, 6) == ungraded_comm_hilb(m, 6)
    assert james_hilb(UniPoly([1]), 5) == UniPoly([1])
    assert james_hilb(UniPoly([1, 0, 1]), 6) == UniPoly([1, 0, 1, 0, 1, 0, 1])
    with pytest.raises(ValueError):
        james_hilb(UniPoly([2, 1]), 3)


def test_so3():
    assert [so3_components(n) for n in (1, 2, 3)] == [0, 5, 7]
    # both branches stay integral
    assert all(so3_components(n) >= 0 for n in range(1, 30))
    with pytest.raises(ValueError):
        so3_components(0)


def test_coinvariant_poincare():
    assert coinvariant_poincare((1, 2)) == UniPoly([1, 0, 1])
    assert coinvariant_poincare((2,)) == UniPoly([1, 0, 1])
    g2 = coinvariant_poincare((2, 6))
    assert g2(1) == 12 and g2.degree == 12
    with pytest.raises(ValueError):
        coinvariant_poincare((0, 2))
    with pytest.raises(ValueError):
        coinvariant_poincare(())


@pytest.mark.parametrize("name", ["A3", "B4", "D4", "F4", "E6"])
def test_coinvariant_sum_is_order(name):
    spec = group_preset(name)
    assert coinvariant_poincare(spec.degrees)(1) == spec.expected_order
