# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled integer kernels; same contracts as ``lelong._purepy``.

Entries stay Python ints (arbitrary precision).  The gain is in loop and
indexing overhead, not in the arithmetic itself.
"""

from math import gcd


def bareiss_det(rows):
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t i, j, k
    cdef int sign = 1
    cdef list a, row_i, row_k
    if n == 0:
        return 1
    a = [list(r) for r in rows]
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
        row_k = a[k]
        pivot = row_k[k]
        for i in range(k + 1, n):
            row_i = a[i]
            f = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - f * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def bareiss_solve(rows, rhs):
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t i, j, k
    cdef list a, row_i, row_k, y
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
        row_k = a[k]
        pivot = row_k[k]
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
        row_i = a[i]
        s = d * row_i[n]
        for j in range(i + 1, n):
            s -= row_i[j] * y[j]
        y[i] = s // row_i[i]
    return d, y


def bareiss_rank(rows):
    cdef list a = [list(r) for r in rows]
    cdef Py_ssize_t m = len(a)
    cdef Py_ssize_t ncols, col, i, j, piv_row
    cdef Py_ssize_t rank = 0
    cdef list row_i, row_r
    if m == 0:
        return 0
    ncols = len(a[0])
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
        row_r = a[rank]
        pivot = row_r[col]
        for i in range(rank + 1, m):
            row_i = a[i]
            f = row_i[col]
            for j in range(col + 1, ncols):
                row_i[j] = (row_i[j] * pivot - f * row_r[j]) // prev
            row_i[col] = 0
        prev = pivot
        rank += 1
    return rank


cdef list _normalize(list v):
    g = 0
    for x in v:
        g = gcd(g, x)
    if g > 1:
        return [x // g for x in v]
    return v


cdef int _popcount(object x):
    return bin(x).count("1")


def dd_extreme_rays(constraints, Py_ssize_t dim):
    cdef list rays = []
    cdef list zsets = []
    cdef list vals, pos, neg, zer, new_rays, new_z, h, r, rp, rq, combo
    cdef Py_ssize_t i, j, t, p, q, idx, nrays
    cdef bint adjacent
    full = (1 << dim) - 1
    for i in range(dim):
        r = [0] * dim
        r[i] = 1
        rays.append(r)
        zsets.append(full ^ (1 << i))
    for idx in range(len(constraints)):
        h = list(constraints[idx])
        bit = 1 << (dim + idx)
        vals = []
        for r in rays:
            s = 0
            for j in range(dim):
                if h[j]:
                    s += h[j] * r[j]
            vals.append(s)
        pos = []
        neg = []
        zer = []
        for i in range(len(vals)):
            if vals[i] > 0:
                pos.append(i)
            elif vals[i] < 0:
                neg.append(i)
            else:
                zer.append(i)
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
                    if _popcount(common) < dim - 2:
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
