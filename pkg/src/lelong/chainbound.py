"""Izumi-type chain bounds on ``max_i a_i/m_i`` versus ``min_i a_i/m_i``.

Along a chain of meeting components ``E_1, ..., E_r`` every cone divisor has
``a_{i+1} c_{i,i+1} <= a_i |c_ii|``, so

    a_r / m_r  <=  prod_i  m_i |c_ii| / (m_{i+1} c_{i,i+1})  *  a_1 / m_1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import LelongError, ParameterError
from .exactnum import format_rat
from .graph import ResolutionGraph

PATH_CHOICE_NOTE = "path chosen to minimise the product of step factors"


@dataclass(frozen=True)
class PathBound:
    path: tuple[str, ...]
    factors: tuple[Fraction, ...]
    product: Fraction

    def to_json(self) -> dict:
        return {
            "from": self.path[0],
            "to": self.path[-1],
            "path": list(self.path),
            "factors": [format_rat(f) for f in self.factors],
            "product": format_rat(self.product),
            "note": PATH_CHOICE_NOTE,
        }


def step_factor(g: ResolutionGraph, i: int, j: int) -> Fraction:
    return g.m[i] * abs(g.c(i, i)) / (g.m[j] * g.c(i, j))


def _simple_paths(g: ResolutionGraph, src: int, dst: int):
    stack = [(src, [src])]
    while stack:
        v, path = stack.pop()
        if v == dst:
            yield path
            continue
        for w in reversed(g.neighbors(v)):
            if w not in path:
                stack.append((w, path + [w]))


def _best_path(g: ResolutionGraph, src: int, dst: int) -> tuple[list[int], list[Fraction], Fraction]:
    best = None
    for path in _simple_paths(g, src, dst):
        factors = [step_factor(g, i, j) for i, j in zip(path, path[1:])]
        prod = Fraction(1)
        for f in factors:
            prod *= f
        if best is None or prod < best[2] or (prod == best[2] and len(path) < len(best[0])):
            best = (path, factors, prod)
    if best is None:
        raise LelongError(f"{g.name}: vertices {g.ids[src]} and {g.ids[dst]} are not connected")
    return best


def path_bound(g: ResolutionGraph, src: str, dst: str) -> PathBound:
    """Minimum-product simple path between two components (exhaustive search)."""
    i, j = g.index(src), g.index(dst)
    if i == j:
        raise ParameterError("path_bound needs two distinct vertices")
    path, factors, prod = _best_path(g, i, j)
    return PathBound(tuple(g.ids[v] for v in path), tuple(factors), prod)


def global_chain_constant(g: ResolutionGraph) -> Fraction:
    """Max over ordered pairs of the best path product; 1 for a single component."""
    n = len(g)
    best = Fraction(1)
    for i in range(n):
        for j in range(n):
            if i != j:
                prod = _best_path(g, i, j)[2]
                if prod > best:
                    best = prod
    return best


def coefficient_spread(g: ResolutionGraph, a) -> Fraction | None:
    """max_i(a_i/m_i) / min_i(a_i/m_i), or None when the minimum is 0."""
    q = [Fraction(x) / mi for x, mi in zip(a, g.m)]
    lo = min(q)
    if lo == 0:
        return None
    return max(q) / lo
