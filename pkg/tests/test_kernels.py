"""Both kernel backends against brute-force oracles and against each other."""

import itertools
import os
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from lelong import kernels

BACKENDS = kernels.backends()


@pytest.fixture(params=sorted(BACKENDS))
def impl(request):
    return BACKENDS[request.param]


def leibniz_det(rows):
    n = len(rows)
    total = 0
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = (-1) ** inversions
        for i in range(n):
            term *= rows[i][perm[i]]
        total += term
    return total


small_ints = st.integers(-6, 6)


def square(n_min=1, n_max=5, elements=small_ints):
    return st.integers(n_min, n_max).flatmap(
        lambda n: st.lists(st.lists(elements, min_size=n, max_size=n), min_size=n, max_size=n))


def test_compiled_backend_built():
    # the sandbox has Cython and a compiler; a missing build is a packaging bug
    assert "cython" in kernels.backends()
    forced = os.environ.get("LELONG_PURE_PYTHON", "") not in ("", "0")
    assert kernels.BACKEND == ("python" if forced else "cython")


@given(square())
def test_det_matches_leibniz(rows):
    for impl in BACKENDS.values():
        assert impl.bareiss_det(rows) == leibniz_det(rows)


def test_det_needs_row_swap(impl):
    assert impl.bareiss_det([[0, 1], [1, 0]]) == -1
    assert impl.bareiss_det([[0, 0, 1], [0, 1, 0], [1, 0, 0]]) == -1
    assert impl.bareiss_det([[0, 2], [0, 3]]) == 0


def test_det_big_integers(impl):
    big = 10 ** 40
    rows = [[big, 1], [1, big]]
    assert impl.bareiss_det(rows) == big * big - 1


@given(square(), st.lists(small_ints, min_size=5, max_size=5))
def test_solve_matches_sympy(rows, rhs):
    n = len(rows)
    b = rhs[:n]
    m = sympy.Matrix(rows)
    for impl in BACKENDS.values():
        out = impl.bareiss_solve(rows, b)
        if m.det() == 0:
            assert out is None
        else:
            d, y = out
            x = [Fraction(v, d) for v in y]
            expected = m.LUsolve(sympy.Matrix(b))
            assert x == [Fraction(int(sympy.fraction(e)[0]), int(sympy.fraction(e)[1])) for e in expected]


@given(st.integers(1, 5), st.integers(1, 5), st.data())
def test_rank_matches_sympy(nr, nc, data):
    rows = data.draw(st.lists(st.lists(st.integers(-3, 3), min_size=nc, max_size=nc), min_size=nr, max_size=nr))
    for impl in BACKENDS.values():
        assert impl.bareiss_rank(rows) == sympy.Matrix(rows).rank()


def brute_force_rays(constraints, dim):
    """Rays of {x >= 0, h.x >= 0}: one-dimensional solutions of dim-1 tight constraints."""
    normals = [[1 if j == i else 0 for j in range(dim)] for i in range(dim)] + [list(h) for h in constraints]
    found = set()
    for subset in itertools.combinations(normals, dim - 1):
        ns = sympy.Matrix(subset).nullspace() if dim > 1 else [sympy.Matrix([1])]
        if len(ns) != 1:
            continue
        v = ns[0]
        den = sympy.ilcm(1, 1, *[sympy.fraction(x)[1] for x in v])
        v = [int(x * den) for x in v]
        for cand in (v, [-x for x in v]):
            if all(sum(h[j] * cand[j] for j in range(dim)) >= 0 for h in normals) and any(cand):
                g = 0
                for x in cand:
                    g = sympy.igcd(g, x)
                found.add(tuple(x // g for x in cand))
    return sorted(found)


@pytest.mark.parametrize("rows,dim", [
    ([[2]], 1),
    ([[2, -1], [-1, 2]], 2),
    ([[2, -1, 0], [-1, 2, -1], [0, -1, 2]], 3),
    ([[2, -1, 0, 0], [-1, 2, -1, -1], [0, -1, 2, 0], [0, -1, 0, 2]], 4),
    ([[1, -1, 0], [0, 1, -1], [-1, 0, 1]], 3),
    ([[1, 1, -1], [-1, 2, 0]], 3),
])
def test_dd_matches_brute_force(impl, rows, dim):
    assert sorted(impl.dd_extreme_rays(rows, dim)) == brute_force_rays(rows, dim)


@given(st.integers(2, 4), st.data())
def test_dd_random_constraints(dim, data):
    k = data.draw(st.integers(0, 4))
    rows = data.draw(st.lists(st.lists(st.integers(-3, 3), min_size=dim, max_size=dim), min_size=k, max_size=k))
    expected = brute_force_rays(rows, dim)
    for impl in BACKENDS.values():
        assert sorted(set(impl.dd_extreme_rays(rows, dim))) == expected


def test_backends_agree_on_cone_rows():
    rows = [[2, -1, 0, 0, 0], [-1, 2, -1, 0, 0], [0, -1, 2, -1, 0], [0, 0, -1, 2, -1], [0, 0, 0, -1, 2]]
    results = {name: sorted(b.dd_extreme_rays(rows, 5)) for name, b in BACKENDS.items()}
    assert len({tuple(r) for r in results.values()}) == 1
