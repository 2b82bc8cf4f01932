# cython: language_level=3
"""Compiled twin of ncubes._kernels_py: same functions, same semantics.

Entries stay arbitrary-precision Python ints (the algorithms need exact
big-integer arithmetic); the win over the pure module is loop and indexing
overhead, which dominates at small bit sizes.
"""

from math import gcd

from . import bitmeter as _bm


def mat_echelon(rows, pivot_limit=None):
    """Fraction-free row echelon form; see the pure twin for the contract."""
    cdef Py_ssize_t m, ncols, limit, r, c, i, j, p
    ech = [list(row) for row in rows]
    m = len(ech)
    ncols = len(ech[0]) if m else 0
    limit = ncols if pivot_limit is None else <Py_ssize_t> pivot_limit
    pivots = []
    sign = 1
    prev = 1
    r = 0
    for c in range(limit):
        p = -1
        for i in range(r, m):
            if ech[i][c] != 0:
                p = i
                break
        if p < 0:
            continue
        if p != r:
            tmp = ech[p]
            ech[p] = ech[r]
            ech[r] = tmp
            sign = -sign
        piv = ech[r][c]
        row_r = ech[r]
        for i in range(r + 1, m):
            row_i = ech[i]
            f = row_i[c]
            for j in range(c + 1, ncols):
                row_i[j] = (piv * row_i[j] - f * row_r[j]) // prev
            row_i[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
        if _bm.ACTIVE is not None:
            _bm.note_rows(ech)
        if r == m:
            break
    return ech, pivots, sign


def mat_rank(rows):
    if not rows:
        return 0
    _, pivots, _ = mat_echelon(rows)
    return len(pivots)


def mat_det(rows):
    cdef Py_ssize_t n = len(rows)
    if n == 0:
        return 1
    ech, pivots, sign = mat_echelon(rows)
    if len(pivots) < n:
        return 0
    return sign * ech[n - 1][pivots[-1]]


def _primitive_vector(num, den):
    cdef Py_ssize_t k
    lcm = 1
    for d in den:
        lcm = lcm // gcd(lcm, d) * d
    vec = [a * (lcm // b) for a, b in zip(num, den)]
    g = 0
    for v in vec:
        g = gcd(g, v)
    if g > 1:
        vec = [v // g for v in vec]
    for k in range(len(vec)):
        v = vec[k]
        if v != 0:
            if v < 0:
                vec = [-x for x in vec]
            break
    return vec


def mat_kernel(rows):
    cdef Py_ssize_t m, ncols, k, j
    m = len(rows)
    ncols = len(rows[0]) if m else 0
    if m == 0 or ncols == 0:
        return [[1 if j == f else 0 for j in range(ncols)] for f in range(ncols)]
    ech, pivots, _ = mat_echelon(rows)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    basis = []
    for cf in free:
        num = [0] * ncols
        den = [1] * ncols
        num[cf] = 1
        for k in range(len(pivots) - 1, -1, -1):
            pc = pivots[k]
            if pc > cf:
                continue
            row = ech[k]
            sn, sd = 0, 1
            for j in range(pc + 1, ncols):
                if row[j] != 0 and num[j] != 0:
                    sn = sn * den[j] + row[j] * num[j] * sd
                    sd = sd * den[j]
                    g = gcd(abs(sn), sd)
                    if g > 1:
                        sn //= g
                        sd //= g
            piv = row[pc]
            nn, nd = -sn, sd * piv
            if nd < 0:
                nn, nd = -nn, -nd
            g = gcd(abs(nn), nd)
            if g > 1:
                nn //= g
                nd //= g
            num[pc], den[pc] = nn, nd
        basis.append(_primitive_vector(num, den))
    return basis


def charpoly(rows):
    cdef Py_ssize_t n, m, i, j, k
    n = len(rows)
    if n == 0:
        return [1]
    p = [-rows[0][0], 1]
    for m in range(1, n):
        a = rows[m][m]
        rvec = rows[m][:m]
        w = [rows[i][m] for i in range(m)]
        cs = []
        for j in range(m):
            acc = 0
            for i in range(m):
                acc += rvec[i] * w[i]
            cs.append(acc)
            if j < m - 1:
                nw = []
                for i in range(m):
                    acc = 0
                    rowi = rows[i]
                    for k in range(m):
                        acc += rowi[k] * w[k]
                    nw.append(acc)
                w = nw
        new = [0] * (len(p) + 1)
        for i in range(len(p)):
            coef = p[i]
            new[i + 1] += coef
            new[i] -= a * coef
        for j in range(len(cs)):
            c = cs[j]
            if c == 0:
                continue
            for i in range(j + 1, len(p)):
                new[i - j - 1] -= c * p[i]
        p = new
        if _bm.ACTIVE is not None:
            _bm.note_ints(p)
    return p


def poly_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_deriv(p):
    cdef Py_ssize_t i
    return [i * p[i] for i in range(1, len(p))]


def poly_primitive(p):
    g = 0
    for c in p:
        g = gcd(g, c)
    if g > 1:
        return [c // g for c in p]
    return list(p)


def prem_abs(a, b):
    cdef Py_ssize_t db, e, i, steps
    r = list(a)
    poly_trim(r)
    db = len(b) - 1
    lb = b[-1]
    neg = lb < 0
    steps = 0
    while len(r) - 1 >= db:
        top = r[-1]
        e = len(r) - 1 - db
        r = [lb * c for c in r]
        for i in range(db + 1):
            r[e + i] -= top * b[i]
        poly_trim(r)
        steps += 1
        if _bm.ACTIVE is not None:
            _bm.note_ints(r)
    if neg and steps % 2 == 1:
        r = [-c for c in r]
    return r


def poly_gcd(a, b):
    a = poly_primitive(poly_trim(list(a)))
    b = poly_primitive(poly_trim(list(b)))
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = poly_primitive(prem_abs(a, b))
        a, b = b, r
    if a and a[-1] < 0:
        a = [-c for c in a]
    if not a:
        return []
    return a


def sturm_chain(p):
    chain = [poly_trim(list(p))]
    d = poly_trim(poly_deriv(chain[0]))
    if d:
        chain.append(d)
        while True:
            r = prem_abs(chain[-2], chain[-1])
            if not r:
                break
            r = poly_primitive(r)
            chain.append([-c for c in r])
            if len(chain[-1]) == 1:
                break
    return chain


def sign_variations_inf(chain, at_plus):
    cdef Py_ssize_t count, k
    signs = []
    for p in chain:
        if not p:
            continue
        s = 1 if p[-1] > 0 else -1
        if not at_plus and (len(p) - 1) % 2 == 1:
            s = -s
        signs.append(s)
    count = 0
    for k in range(1, len(signs)):
        if signs[k] != signs[k - 1]:
            count += 1
    return count


def eval_terms(coeffs, exps, n, point):
    cdef Py_ssize_t nn = n, i, base, maxe, e
    maxe = 0
    for ev in exps:
        if ev > maxe:
            maxe = ev
    pows = []
    for i in range(nn):
        xi = point[i]
        col = [1] * (maxe + 1)
        for e in range(1, maxe + 1):
            col[e] = col[e - 1] * xi
        pows.append(col)
    total = 0
    base = 0
    for c in coeffs:
        m = c
        for i in range(nn):
            e = exps[base + i]
            if e:
                m = m * (<list> pows[i])[e]
        total += m
        base += nn
    return total


def eval_terms_many(coeffs, exps, n, points_flat):
    cdef Py_ssize_t nn = n, npts, k
    out = []
    npts = len(points_flat) // nn
    for k in range(npts):
        out.append(eval_terms(coeffs, exps, nn, points_flat[k * nn : (k + 1) * nn]))
    return out
