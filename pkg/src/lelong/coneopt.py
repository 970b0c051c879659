"""Exact optimisation over the cone of admissible divisors.

The cone is ``{a >= 0 : -sum_j c_ij a_j >= 0 for every i}``.  The sharp
constant is the supremum of ``nu(a) / (mult * s(a))`` over cone members
with positive slope.  Both ``nu`` and ``s`` are positively homogeneous, so
one may normalise ``s(a) = 1``, i.e. ``a >= m`` with ``a_i = m_i`` for the
index attaining the minimum.  For each candidate index ``i`` that is an LP:

    maximise  e.y   over y >= 0, y_i = 0,   C y <= -C m      (a = m + y)

and the sharp constant is the best of these optima over ``i``.  The
``a >= m`` slab alone (no pinned index) does not work: ``a = t m`` is
feasible for every ``t >= 1`` and the objective grows without bound.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from . import kernels, lp
from .errors import CapacityError, InconsistentGraphError
from .exactnum import RatMatrix, format_rat, rank
from .graph import Divisor, ResolutionGraph
from .invariants import in_psef_cone, lelong, multiplicity, slope, theta_degrees

DEFAULT_CAPACITY = 16


def ray_capacity() -> int:
    raw = os.environ.get("LELONG_CAPACITY")
    return int(raw) if raw else DEFAULT_CAPACITY


@dataclass(frozen=True)
class IndexLP:
    """One member of the per-index LP family (slope pinned at vertex ``index``)."""

    index: int
    status: str
    a: tuple[Fraction, ...] | None = None
    nu: Fraction | None = None
    c: tuple[Fraction, ...] = ()
    A: tuple[tuple[Fraction, ...], ...] = ()
    b: tuple[Fraction, ...] = ()
    y: tuple[Fraction, ...] | None = None
    dual: tuple[Fraction, ...] | None = None

    def certificate_ok(self) -> bool:
        if self.status != lp.OPTIMAL:
            return False
        return lp.verify_certificate(self.c, self.A, self.b, self.y, self.dual)


@dataclass(frozen=True)
class SharpConstantResult:
    c_sharp: Fraction
    extremal: Divisor
    active_constraints: tuple[str, ...]
    optimal_value_nu: Fraction
    pinned_index: int
    certificates: tuple[IndexLP, ...] = field(default=(), repr=False)

    def to_json(self, rays=None) -> dict:
        out = {
            "c_sharp": format_rat(self.c_sharp),
            "extremal": [format_rat(x) for x in self.extremal],
            "active": list(self.active_constraints),
            "optimal_value_nu": format_rat(self.optimal_value_nu),
        }
        if rays is not None:
            out["rays"] = [[format_rat(x) for x in r] for r in rays]
        return out


def _index_lp(g: ResolutionGraph, e, i: int) -> IndexLP:
    n = len(g)
    free = [j for j in range(n) if j != i]
    cm = g.matrix.matvec(g.m)
    c = tuple(e[j] for j in free)
    A = tuple(tuple(g.c(r, j) for j in free) for r in range(n))
    b = tuple(-x for x in cm)
    res = lp.solve(c, A, b)
    if res.status != lp.OPTIMAL:
        return IndexLP(i, res.status, c=c, A=A, b=b)
    a = list(Fraction(mj) for mj in g.m)
    for j, yj in zip(free, res.x):
        a[j] += yj
    nu = sum((aj * ej for aj, ej in zip(a, e)), Fraction(0))
    return IndexLP(i, res.status, tuple(a), nu, c, A, b, res.x, res.dual)


def index_lps(g: ResolutionGraph) -> list[IndexLP]:
    e = theta_degrees(g)
    return [_index_lp(g, e, i) for i in range(len(g))]


def active_constraints(g: ResolutionGraph, a) -> tuple[str, ...]:
    """Ids of constraints tight at ``a``: ``cone:<id>`` (zero slack), ``floor:<id>`` (a_j = m_j)."""
    _, slack = in_psef_cone(g, a)
    out = [f"cone:{vid}" for vid, s in zip(g.ids, slack) if s == 0]
    out += [f"floor:{vid}" for vid, aj, mj in zip(g.ids, a, g.m) if aj == mj]
    return tuple(out)


def sharp_constant(g: ResolutionGraph) -> SharpConstantResult:
    """Sharp constant C with nu <= C * mult * s on the cone, plus an extremal divisor.

    The first pinned index attaining the optimum supplies the extremal.
    """
    family = index_lps(g)
    if any(r.status == lp.UNBOUNDED for r in family):
        raise InconsistentGraphError(f"{g.name}: nu/s is unbounded on the cone; "
                                     "intersection data cannot come from a connected resolution")
    solved = [r for r in family if r.status == lp.OPTIMAL]
    if not solved:
        raise InconsistentGraphError(f"{g.name}: no cone divisor has positive slope")
    best = solved[0]
    for r in solved[1:]:
        if r.nu > best.nu:
            best = r
    mult = multiplicity(g)
    a = Divisor(best.a)
    return SharpConstantResult(
        c_sharp=best.nu / mult,
        extremal=a,
        active_constraints=active_constraints(g, a),
        optimal_value_nu=best.nu,
        pinned_index=best.index,
        certificates=tuple(family),
    )


# -- extreme rays -----------------------------------------------------------

def cone_constraint_rows(g: ResolutionGraph) -> list[list[int]]:
    """Rows h with h.a >= 0 describing the cone, scaled to integers."""
    rows = []
    for r in g.matrix.rows:
        h = [-x for x in r]
        scale = lcm(*(x.denominator for x in h))
        rows.append([int(x * scale) for x in h])
    return rows


def enumerate_rays(g: ResolutionGraph, capacity: int | None = None) -> list[Divisor]:
    """Extreme rays of the cone as primitive integer divisors, sorted lexicographically."""
    cap = ray_capacity() if capacity is None else capacity
    n = len(g)
    if n > cap:
        raise CapacityError(f"{g.name}: {n} vertices exceeds the ray-enumeration limit {cap}; "
                            "use sampling instead (raise LELONG_CAPACITY to override)")
    rays = kernels.dd_extreme_rays(cone_constraint_rows(g), n)
    rays = sorted(set(rays))
    return [Divisor(r) for r in rays]


def ray_saturation_rank(g: ResolutionGraph, r) -> int:
    """Rank of the constraint normals tight at ``r`` (coordinate and cone rows)."""
    n = len(g)
    tight = []
    for j in range(n):
        if r[j] == 0:
            tight.append([1 if k == j else 0 for k in range(n)])
    for h in cone_constraint_rows(g):
        if sum(hj * rj for hj, rj in zip(h, r)) == 0:
            tight.append(h)
    return rank(RatMatrix(tight)) if tight else 0


def sharp_constant_from_rays(g: ResolutionGraph, rays=None) -> Fraction:
    """Independent route to the sharp constant: nu/s is quasi-convex, so its max sits on a ray."""
    rays = enumerate_rays(g) if rays is None else rays
    mult = multiplicity(g)
    best = None
    for r in rays:
        s = slope(g, r)
        nu = lelong(g, r)
        if s == 0:
            if nu > 0:
                raise InconsistentGraphError(f"{g.name}: ray with zero slope and positive nu")
            continue
        q = nu / (mult * s)
        if best is None or q > best:
            best = q
    if best is None:
        raise InconsistentGraphError(f"{g.name}: no ray with positive slope")
    return best


# -- sampling ---------------------------------------------------------------

def _generators(g: ResolutionGraph) -> list[tuple[Fraction, ...]]:
    if len(g) <= ray_capacity():
        return [tuple(int(x) for x in r) for r in enumerate_rays(g)]
    gens = []
    m = tuple(Fraction(x) for x in g.m)
    if in_psef_cone(g, m)[0]:
        gens.append(m)
    for r in index_lps(g):
        if r.status == lp.OPTIMAL and r.a not in gens:
            gens.append(r.a)
    return gens


_WEIGHT_DENOMS = (1, 2, 3)
_COMMON = 6  # lcm of _WEIGHT_DENOMS


def _draw(gens, rng: random.Random) -> Divisor:
    """Random positive combination of a random nonempty subset of ``gens``.

    Weights are p/q with p in 1..12 and q in 1..3; sums are formed over the
    common denominator 6 so integer generators stay in integer arithmetic.
    """
    k = rng.randint(1, len(gens))
    picked = rng.sample(range(len(gens)), k)
    total = [0] * len(gens[0])
    for idx in picked:
        w = rng.randint(1, 12) * (_COMMON // rng.choice(_WEIGHT_DENOMS))
        total = [t + w * x for t, x in zip(total, gens[idx])]
    return Divisor(tuple(Fraction(t) / _COMMON for t in total))


def sample_cone(g: ResolutionGraph, count: int, seed: int, start: int = 0) -> list[Divisor]:
    """``count`` cone members: random nonnegative rational combinations of generators.

    Generators are the extreme rays when the graph is small enough, otherwise
    ``m`` together with the LP optima.  Sample ``start + j`` depends only on
    ``(seed, start + j)``, so ranges can be drawn separately and concatenated.
    """
    if count <= 0:
        return []
    gens = _generators(g)
    if not gens:
        return []
    out = []
    for j in range(start, start + count):
        rng = random.Random(f"{seed}:{j}")
        out.append(_draw(gens, rng))
    return out
