"""Exact two-phase simplex for ``max c.x  s.t.  A x <= b, x >= 0``.

Tableau arithmetic is over Fractions and Bland's smallest-index rule is used
for both entering and leaving variables, so the method terminates on
degenerate problems.  Optimal results carry a dual vector ``u`` that can be
checked independently with :func:`verify_certificate`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    status: str
    x: tuple[Fraction, ...] | None = None
    objective: Fraction | None = None
    dual: tuple[Fraction, ...] | None = None
    pivots: int = 0


class _Tableau:
    def __init__(self, rows, rhs, basis):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis
        self.d: list[Fraction] = []
        self.z = Fraction(0)
        self.pivots = 0

    def set_objective(self, cost):
        ncols = len(self.rows[0]) if self.rows else len(cost)
        d = list(cost) + [Fraction(0)] * (ncols - len(cost))
        z = Fraction(0)
        for r, bv in enumerate(self.basis):
            cb = d[bv]
            if cb:
                row = self.rows[r]
                for j in range(ncols):
                    if row[j]:
                        d[j] -= cb * row[j]
                z += cb * self.rhs[r]
        self.d = d
        self.z = z

    def pivot(self, r, j):
        row = self.rows[r]
        piv = row[j]
        if piv != 1:
            row[:] = [x / piv for x in row]
            self.rhs[r] /= piv
        for i, other in enumerate(self.rows):
            if i == r:
                continue
            f = other[j]
            if f:
                other[:] = [a - f * b for a, b in zip(other, row)]
                self.rhs[i] -= f * self.rhs[r]
        f = self.d[j]
        if f:
            self.d = [a - f * b for a, b in zip(self.d, row)]
            self.z += f * self.rhs[r]
        self.basis[r] = j
        self.pivots += 1

    def run(self, allowed):
        """Iterate to optimality over columns in ``allowed``.  False if unbounded."""
        while True:
            entering = next((j for j in allowed if self.d[j] > 0), None)
            if entering is None:
                return True
            best = None
            for r, row in enumerate(self.rows):
                a = row[entering]
                if a > 0:
                    ratio = self.rhs[r] / a
                    key = (ratio, self.basis[r])
                    if best is None or key < best[0]:
                        best = (key, r)
            if best is None:
                return False
            self.pivot(best[1], entering)


def solve(c: Sequence, A: Sequence[Sequence], b: Sequence) -> LPResult:
    c = [Fraction(x) for x in c]
    A = [[Fraction(x) for x in row] for row in A]
    b = [Fraction(x) for x in b]
    m, n = len(A), len(c)
    neg = [i for i in range(m) if b[i] < 0]
    n_art = len(neg)
    ncols = n + m + n_art
    rows, rhs, basis = [], [], []
    art_of = {}
    for i in range(m):
        row = A[i] + [Fraction(0)] * (m + n_art)
        row[n + i] = Fraction(1)
        if b[i] < 0:
            row = [-x for x in row]
            k = n + m + len(art_of)
            art_of[i] = k
            row[k] = Fraction(1)
            basis.append(k)
            rhs.append(-b[i])
        else:
            basis.append(n + i)
            rhs.append(b[i])
        rows.append(row)
    tab = _Tableau(rows, rhs, basis)
    real_cols = range(n + m)

    if n_art:
        tab.set_objective([Fraction(0)] * (n + m) + [Fraction(-1)] * n_art)
        tab.run(range(ncols))
        if tab.z < 0:
            return LPResult(INFEASIBLE, pivots=tab.pivots)
        for r in range(m):
            if tab.basis[r] >= n + m:
                j = next(j for j in real_cols if tab.rows[r][j] != 0)
                tab.pivot(r, j)
        tab.rows = [row[: n + m] for row in tab.rows]

    tab.set_objective(c + [Fraction(0)] * m)
    if not tab.run(real_cols):
        return LPResult(UNBOUNDED, pivots=tab.pivots)
    x = [Fraction(0)] * n
    for r, bv in enumerate(tab.basis):
        if bv < n:
            x[bv] = tab.rhs[r]
    dual = tuple(-tab.d[n + i] for i in range(m))
    return LPResult(OPTIMAL, tuple(x), tab.z, dual, tab.pivots)


def verify_certificate(c, A, b, x, u) -> bool:
    """Check primal feasibility, dual feasibility and zero duality gap by plain arithmetic."""
    if any(xi < 0 for xi in x) or any(ui < 0 for ui in u):
        return False
    for row, bi in zip(A, b):
        if sum(a * xi for a, xi in zip(row, x)) > bi:
            return False
    for j, cj in enumerate(c):
        if sum(A[i][j] * u[i] for i in range(len(A))) < cj:
            return False
    primal = sum(cj * xj for cj, xj in zip(c, x))
    dual = sum(bi * ui for bi, ui in zip(b, u))
    return primal == dual
