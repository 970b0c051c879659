"""Pure-Python integer kernels.

Reference implementations of the hot loops.  ``_speedups.pyx`` mirrors
these function-for-function; :mod:`lelong.kernels` picks one at import.
All inputs are lists of lists of Python ints and nothing here rounds.
"""

from math import gcd


def bareiss_det(rows):
    """Determinant of a square integer matrix by fraction-free elimination."""
    n = len(rows)
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            f = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - f * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def bareiss_solve(rows, rhs):
    """Solve ``A x = b`` over the integers' fraction field.

    Returns ``(d, y)`` with ``x = y / d`` componentwise, or ``None`` when
    ``A`` is singular.
    """
    n = len(rows)
    a = [list(r) + [b] for r, b in zip(rows, rhs)]
    prev = 1
    for k in range(n):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    break
            else:
                return None
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            f = row_i[k]
            for j in range(k + 1, n + 1):
                row_i[j] = (row_i[j] * pivot - f * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    d = a[n - 1][n - 1] if n else 1
    y = [0] * n
    for i in range(n - 1, -1, -1):
        s = d * a[i][n]
        row_i = a[i]
        for j in range(i + 1, n):
            s -= row_i[j] * y[j]
        y[i] = s // row_i[i]
    return d, y


def bareiss_rank(rows):
    """Rank of an integer matrix (any shape)."""
    a = [list(r) for r in rows]
    m = len(a)
    if m == 0:
        return 0
    ncols = len(a[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        if rank == m:
            break
        piv_row = -1
        for i in range(rank, m):
            if a[i][col] != 0:
                piv_row = i
                break
        if piv_row < 0:
            continue
        a[rank], a[piv_row] = a[piv_row], a[rank]
        pivot = a[rank][col]
        row_r = a[rank]
        for i in range(rank + 1, m):
            row_i = a[i]
            f = row_i[col]
            for j in range(col + 1, ncols):
                row_i[j] = (row_i[j] * pivot - f * row_r[j]) // prev
            row_i[col] = 0
        prev = pivot
        rank += 1
    return rank


def _normalize(v):
    g = 0
    for x in v:
        g = gcd(g, x)
    if g > 1:
        return [x // g for x in v]
    return v


def dd_extreme_rays(constraints, dim):
    """Extreme rays of ``{x in R^dim : x >= 0, h.x >= 0 for h in constraints}``.

    Double description: start from the orthant's unit rays, intersect with
    one halfspace at a time, and combine only adjacent (positive, negative)
    pairs.  Adjacency is decided combinatorially from zero sets stored as
    bitmasks over the processed constraints (bits ``0..dim-1`` are the
    coordinate constraints).  Rays come back as primitive integer vectors.
    """
    rays = []
    zsets = []
    full = (1 << dim) - 1
    for i in range(dim):
        r = [0] * dim
        r[i] = 1
        rays.append(r)
        zsets.append(full ^ (1 << i))
    for idx, h in enumerate(constraints):
        bit = 1 << (dim + idx)
        vals = []
        for r in rays:
            s = 0
            for j in range(dim):
                if h[j]:
                    s += h[j] * r[j]
            vals.append(s)
        pos = [i for i, v in enumerate(vals) if v > 0]
        neg = [i for i, v in enumerate(vals) if v < 0]
        zer = [i for i, v in enumerate(vals) if v == 0]
        new_rays = [rays[i] for i in pos]
        new_z = [zsets[i] for i in pos]
        for i in zer:
            new_rays.append(rays[i])
            new_z.append(zsets[i] | bit)
        if neg and pos:
            nrays = len(rays)
            for p in pos:
                zp = zsets[p]
                vp = vals[p]
                rp = rays[p]
                for q in neg:
                    common = zp & zsets[q]
                    if bin(common).count("1") < dim - 2:
                        continue
                    adjacent = True
                    for t in range(nrays):
                        if t != p and t != q and (zsets[t] & common) == common:
                            adjacent = False
                            break
                    if not adjacent:
                        continue
                    vq = vals[q]
                    rq = rays[q]
                    combo = [vp * rq[j] - vq * rp[j] for j in range(dim)]
                    new_rays.append(_normalize(combo))
                    new_z.append(common | bit)
        rays = new_rays
        zsets = new_z
    return [tuple(r) for r in rays]
