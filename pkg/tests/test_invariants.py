from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lelong.coneopt import enumerate_rays, sharp_constant
from lelong.errors import DomainError, InconsistentGraphError, MissingDataError, ShapeError
from lelong.graph import ResolutionGraph, ade_graph, single_vertex_graph
from lelong.invariants import (
    InvariantReport,
    in_psef_cone,
    lelong,
    multiplicity,
    ord_sequence,
    quotient_bound,
    report,
    slope,
    theta_degrees,
)

A2, A3 = ade_graph("A", 2), ade_graph("A", 3)


def unit(n, i):
    return tuple(1 if j == i else 0 for j in range(n))


class TestThetaDegrees:
    @pytest.mark.parametrize("k", range(1, 8))
    def test_a(self, k):
        # e = -C m with m = 1: ends of the chain get 1, A_1 gets 2
        expected = (2,) if k == 1 else tuple(1 if i in (0, k - 1) else 0 for i in range(k))
        assert theta_degrees(ade_graph("A", k)) == expected

    @pytest.mark.parametrize("k", range(4, 9))
    def test_d(self, k):
        assert theta_degrees(ade_graph("D", k)) == unit(k, 1)

    @pytest.mark.parametrize("k,hot", [(6, 3), (7, 0), (8, 7)])
    def test_e(self, k, hot):
        assert theta_degrees(ade_graph("E", k)) == unit(k, hot)

    def test_supplied(self):
        g = ResolutionGraph.build("n3", 3, [("E1", 2)], [("E1", "E1", -1)], theta_degrees=["1/2"])
        assert theta_degrees(g) == (Fraction(1, 2),)
        assert multiplicity(g) == 1

    def test_missing(self):
        g = ResolutionGraph.build("n3", 3, [("E1", 1)], [("E1", "E1", -1)])
        with pytest.raises(MissingDataError):
            theta_degrees(g)

    def test_negative(self):
        g = ResolutionGraph.build("neg", 2, [("E1", 1), ("E2", 3)],
                                  [("E1", "E1", -2), ("E2", "E2", -2), ("E1", "E2", 1)])
        with pytest.raises(InconsistentGraphError):
            theta_degrees(g)


class TestMultiplicity:
    @pytest.mark.parametrize("family,k", [("A", 1), ("A", 4), ("D", 5), ("E", 7)])
    def test_ade_is_two(self, family, k):
        assert multiplicity(ade_graph(family, k)) == 2

    def test_single_vertex(self):
        g = single_vertex_graph(3, -1)
        assert theta_degrees(g) == (3,)
        assert multiplicity(g) == 9


class TestSlopeLelong:
    def test_slope_examples(self):
        assert slope(A2, (1, 2)) == 1
        assert slope(A3, (2, 2, 1)) == 1
        e7 = ade_graph("E", 7)
        assert slope(e7, e7.m) == 1

    def test_lelong_examples(self):
        assert lelong(A3, (1, 2, 3)) == 4
        d5 = ade_graph("D", 5)
        assert lelong(d5, d5.m) == 2 == multiplicity(d5)

    def test_shape(self):
        with pytest.raises(ShapeError):
            slope(A3, (1, 2))
        with pytest.raises(ShapeError):
            lelong(A3, (1, 2, 3, 4))

    def test_surface_formula(self):
        """nu = -a^T C m on a surface."""
        g = ade_graph("E", 6)
        a = (3, 5, 7, 4, 5, 2)
        assert lelong(g, a) == -sum(ai * x for ai, x in zip(a, g.matrix.matvec(g.m)))

    @given(st.lists(st.fractions(0, 20, max_denominator=7), min_size=4, max_size=4),
           st.fractions(0, 9, max_denominator=5))
    def test_homogeneity(self, a, t):
        g = ade_graph("D", 4)
        ta = [t * x for x in a]
        assert slope(g, ta) == t * slope(g, a)
        assert lelong(g, ta) == t * lelong(g, a)

    @given(st.lists(st.fractions(0, 20, max_denominator=7), min_size=5, max_size=5),
           st.lists(st.fractions(0, 20, max_denominator=7), min_size=5, max_size=5))
    def test_additivity(self, a, b):
        g = ade_graph("A", 5)
        ab = [x + y for x, y in zip(a, b)]
        assert lelong(g, ab) == lelong(g, a) + lelong(g, b)
        # slope is the min of linear forms, so it is superadditive
        assert slope(g, ab) >= slope(g, a) + slope(g, b)

    @given(st.lists(st.fractions(0, 20, max_denominator=7), min_size=5, max_size=5),
           st.fractions(0, 5, max_denominator=3))
    def test_additivity_coincident_argmin(self, a, t):
        g = ade_graph("A", 5)
        b = [t * x for x in a]
        assert slope(g, [x + y for x, y in zip(a, b)]) == slope(g, a) + slope(g, b)


class TestCone:
    def test_examples(self):
        assert in_psef_cone(A2, (1, 1)) == (True, (1, 1))
        ok, slack = in_psef_cone(A2, (1, 3))
        assert not ok and slack[0] == -1
        assert in_psef_cone(A3, (1, 2, 3)) == (True, (0, 0, 4))

    @pytest.mark.parametrize("family,k", [("A", 4), ("D", 6), ("E", 8)])
    def test_m_in_cone_with_slack_e(self, family, k):
        g = ade_graph(family, k)
        ok, slack = in_psef_cone(g, g.m)
        assert ok and slack == theta_degrees(g)
        assert report(g, g.m).ratio == 1


class TestReport:
    def test_a3(self):
        r = report(A3, (1, 2, 3))
        assert (r.slope, r.lelong, r.multiplicity, r.ratio, r.in_cone) == (1, 4, 2, 2, True)

    def test_e6_m(self):
        g = ade_graph("E", 6)
        r = report(g, g.m)
        assert (r.slope, r.lelong, r.multiplicity, r.ratio) == (1, 2, 2, 1)

    def test_zero_divisor(self):
        r = report(A2, (0, 0))
        assert r.slope == 0 and r.lelong == 0 and r.ratio is None

    def test_out_of_cone_is_flagged(self):
        r = report(A2, (1, 3))
        assert not r.in_cone

    def test_json_round_trip(self):
        for r in (report(A3, (1, 2, 3)), report(A2, (0, 0)), report(A2, (Fraction(1, 3), 1))):
            obj = r.to_json()
            assert list(obj) == ["slope", "lelong", "multiplicity", "ratio", "in_cone", "slack"]
            assert InvariantReport.from_json(obj) == r


class TestSandwichAndZero:
    @pytest.mark.parametrize("family,k", [("A", 5), ("D", 7), ("E", 7)])
    def test_rays(self, family, k):
        g = ade_graph(family, k)
        mult = multiplicity(g)
        c = sharp_constant(g).c_sharp
        for r in enumerate_rays(g):
            s, nu = slope(g, r), lelong(g, r)
            assert mult * s <= nu <= c * mult * s
            assert (s == 0) == (nu == 0)

    @given(st.integers(1, 9), st.integers(1, 12), st.fractions(0, 50, max_denominator=9))
    def test_single_vertex_ratio_one(self, m, minus_c, a):
        g = single_vertex_graph(m, -minus_c)
        r = report(g, (a,))
        assert r.in_cone
        if a > 0:
            assert r.ratio == 1


class TestQuotient:
    def test_examples(self):
        assert quotient_bound(5, 2) == 5
        assert quotient_bound(1, 7) == 1
        assert quotient_bound(4, 3) == 16


def brute_force_ord(a, m, k):
    level = 0
    while all(k * ai >= (level + 1) * mi for ai, mi in zip(a, m)):
        level += 1
    return level


class TestOrd:
    def test_examples(self):
        assert ord_sequence(A2, (1, 2), 3).orders == (1, 2, 3)
        assert ord_sequence(A3, (1, 1, 2), 2).orders == (1, 2)
        e8 = ade_graph("E", 8)
        assert ord_sequence(e8, e8.m, 5).orders == (1, 2, 3, 4, 5)

    def test_non_integer(self):
        with pytest.raises(DomainError):
            ord_sequence(A2, (Fraction(1, 2), 1), 3)

    @given(st.lists(st.integers(0, 30), min_size=6, max_size=6), st.integers(1, 12))
    def test_brute_force_and_bracket(self, a, k_max):
        g = ade_graph("E", 6)
        seq = ord_sequence(g, a, k_max)
        s = slope(g, a)
        for k, (o, (lo, hi)) in enumerate(zip(seq.orders, seq.brackets), start=1):
            assert o == brute_force_ord(a, g.m, k)
            assert lo <= s <= hi
