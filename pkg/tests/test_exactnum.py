import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lelong.errors import ParseError, ShapeError, SingularMatrixError, ValidationError
from lelong.exactnum import (
    RatMatrix,
    as_rat,
    det,
    format_rat,
    is_canonical,
    is_negative_definite,
    leading_minors,
    parse_rat,
    rank,
    solve_linear,
)

A2 = RatMatrix([[-2, 1], [1, -2]])
A3 = RatMatrix([[-2, 1, 0], [1, -2, 1], [0, 1, -2]])

rats = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def rat_matrix(n):
    return st.lists(st.lists(rats, min_size=n, max_size=n), min_size=n, max_size=n).map(RatMatrix)


def cofactor_det(rows):
    if len(rows) == 1:
        return rows[0][0]
    total = Fraction(0)
    for j, x in enumerate(rows[0]):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        total += (-1) ** j * x * cofactor_det(minor)
    return total


class TestRat:
    @pytest.mark.parametrize("text,value", [
        ("3", Fraction(3)), ("-2", Fraction(-2)), ("1/2", Fraction(1, 2)),
        ("-6/4", Fraction(-3, 2)), ("0/5", Fraction(0)),
    ])
    def test_parse(self, text, value):
        assert parse_rat(text) == value

    @pytest.mark.parametrize("bad", ["1.5", "1/0", "", "a/b", "1/-2", "1e3"])
    def test_parse_rejects(self, bad):
        with pytest.raises(ParseError):
            parse_rat(bad)

    def test_format(self):
        assert format_rat(Fraction(4, 2)) == "2"
        assert format_rat(Fraction(-3, 6)) == "-1/2"
        assert format_rat(0) == "0"

    def test_as_rat_refuses_floats(self):
        with pytest.raises(TypeError):
            as_rat(0.5)
        with pytest.raises(TypeError):
            as_rat(True)

    @given(rats)
    def test_round_trip(self, x):
        assert parse_rat(format_rat(x)) == x
        assert format_rat(parse_rat(format_rat(x))) == format_rat(x)

    @given(rats, rats)
    def test_results_canonical(self, x, y):
        for z in (x + y, x - y, x * y):
            assert is_canonical(z)
        if y:
            assert is_canonical(x / y)


class TestMatrix:
    def test_entry_bounds(self):
        with pytest.raises(IndexError):
            A2[2, 0]

    def test_ragged(self):
        with pytest.raises(ShapeError):
            RatMatrix([[1, 2], [3]])

    def test_symmetric(self):
        assert A3.is_symmetric()
        assert not RatMatrix([[1, 2], [3, 4]]).is_symmetric()

    def test_matmul_shape(self):
        with pytest.raises(ShapeError):
            RatMatrix([[1, 2]]) @ RatMatrix([[1, 2]])


class TestDet:
    def test_examples(self):
        assert det(RatMatrix([[-2]])) == -2
        assert det(A2) == 3
        assert det(RatMatrix.identity(3)) == 1

    def test_non_square(self):
        with pytest.raises(ShapeError):
            det(RatMatrix([[1, 2]]))

    @given(st.integers(1, 4).flatmap(rat_matrix))
    def test_matches_cofactor(self, m):
        assert det(m) == cofactor_det([list(r) for r in m.rows])

    @given(st.integers(1, 4).flatmap(lambda n: st.tuples(rat_matrix(n), rat_matrix(n))))
    def test_multiplicative(self, pair):
        a, b = pair
        assert det(a @ b) == det(a) * det(b)

    def test_rank(self):
        assert rank(A3) == 3
        assert rank(RatMatrix([[1, 2], [Fraction(1, 2), 1]])) == 1


class TestNegativeDefinite:
    def test_examples(self):
        assert is_negative_definite(RatMatrix([[-2]]))
        assert leading_minors(A3) == [-2, 3, -4]
        assert is_negative_definite(A3)
        assert not is_negative_definite(RatMatrix([[0]]))

    def test_requires_symmetric(self):
        with pytest.raises(ValidationError):
            is_negative_definite(RatMatrix([[-2, 1], [0, -2]]))

    def test_agrees_with_sampling(self):
        rng = random.Random(20261017)
        for _ in range(60):
            n = rng.randint(2, 5)
            rows = [[Fraction(0)] * n for _ in range(n)]
            for i in range(n):
                for j in range(i, n):
                    v = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
                    rows[i][j] = rows[j][i] = v
                rows[i][i] -= rng.randint(0, 12)
            m = RatMatrix(rows)
            refuted = False
            for _ in range(200):
                x = [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(n)]
                if not any(x):
                    continue
                if m.quadratic_form(x) >= 0:
                    refuted = True
                    break
            if is_negative_definite(m):
                assert not refuted


class TestSolve:
    def test_examples(self):
        assert solve_linear(RatMatrix([[-2]]), [-2]) == (1,)
        assert solve_linear(A2, [-1, -1]) == (1, 1)
        b = [Fraction(3, 7), -2, 5]
        assert solve_linear(RatMatrix.identity(3), b) == tuple(b)

    def test_singular(self):
        with pytest.raises(SingularMatrixError):
            solve_linear(RatMatrix([[1, 2], [2, 4]]), [1, 1])

    def test_rhs_length(self):
        with pytest.raises(ShapeError):
            solve_linear(A2, [1])

    @given(st.integers(1, 5).flatmap(lambda n: st.tuples(rat_matrix(n), st.lists(rats, min_size=n, max_size=n))))
    def test_residual_zero(self, pair):
        m, b = pair
        if det(m) == 0:
            return
        x = solve_linear(m, b)
        assert m.matvec(x) == tuple(b)
        assert all(is_canonical(v) for v in x)
