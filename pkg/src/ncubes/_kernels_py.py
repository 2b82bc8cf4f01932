"""Integer kernels: fraction-free elimination, Berkowitz, subresultant PRS.

Everything in this module works on plain Python ints (lists of ints, flat
lists for matrices of exponents).  The rational layer in ncubes.linalg
scales its inputs to integers before calling in.  A compiled twin of this
module (ncubes._kernels) implements the same functions with the same
semantics; ncubes.kernels picks one at import time.

Conventions:
  - matrices are lists of lists of ints, row major;
  - univariate polynomials are lists of ints, lowest degree first, no
    trailing zeros (the zero polynomial is the empty list);
  - sparse multivariate terms are a coefficient list plus a flat exponent
    list of stride n.

The fraction-free elimination is Bareiss: every division is exact because
each intermediate entry is a minor of the input bordered by the pivot rows
and columns (Sylvester's identity).  Row swaps only, sign tracked.
"""

from __future__ import annotations

from math import gcd

from . import bitmeter as _bm


# ---------------------------------------------------------------------------
# elimination


def mat_echelon(rows, pivot_limit=None):
    """Fraction-free row echelon form.

    Returns (ech, pivot_cols, sign).  pivot_limit restricts pivot search to
    the first pivot_limit columns (used for [M | I] augmented elimination);
    elimination still updates all columns.
    """
    ech = [list(r) for r in rows]
    m = len(ech)
    ncols = len(ech[0]) if m else 0
    limit = ncols if pivot_limit is None else pivot_limit
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
            ech[p], ech[r] = ech[r], ech[p]
            sign = -sign
        piv = ech[r][c]
        for i in range(r + 1, m):
            row_i = ech[i]
            row_r = ech[r]
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
    """Determinant of a square integer matrix."""
    n = len(rows)
    if n == 0:
        return 1
    ech, pivots, sign = mat_echelon(rows)
    if len(pivots) < n:
        return 0
    return sign * ech[n - 1][pivots[-1]]


def _primitive_vector(num, den):
    """Clear denominators of a rational vector given as (numerator, denominator)
    pairs with positive denominators; return the primitive integer vector with
    positive leading nonzero entry."""
    lcm = 1
    for d in den:
        lcm = lcm // gcd(lcm, d) * d
    vec = [a * (lcm // b) for a, b in zip(num, den)]
    g = 0
    for v in vec:
        g = gcd(g, v)
    if g > 1:
        vec = [v // g for v in vec]
    for v in vec:
        if v != 0:
            if v < 0:
                vec = [-x for x in vec]
            break
    return vec


def mat_kernel(rows):
    """Primitive integer basis of the right null space of an integer matrix.

    One basis vector per free column, in column order; each vector has
    gcd 1 and positive first nonzero entry.
    """
    m = len(rows)
    ncols = len(rows[0]) if m else 0
    if m == 0 or ncols == 0:
        return [[1 if j == f else 0 for j in range(ncols)] for f in range(ncols)]
    ech, pivots, _ = mat_echelon(rows)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    basis = []
    for cf in free:
        # back-substitute over Q, stored as (num, den) with den > 0
        num = [0] * ncols
        den = [1] * ncols
        num[cf] = 1
        for k in range(len(pivots) - 1, -1, -1):
            pc = pivots[k]
            if pc > cf:
                continue
            row = ech[k]
            # row[pc] * x[pc] + sum_{j > pc} row[j] * x[j] = 0
            sn, sd = 0, 1
            for j in range(pc + 1, ncols):
                if row[j] != 0 and num[j] != 0:
                    sn = sn * den[j] + row[j] * num[j] * sd
                    sd *= den[j]
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


# ---------------------------------------------------------------------------
# characteristic polynomial (Berkowitz / Samuelson recurrence)


def charpoly(rows):
    """Coefficients of det(lambda*I - M), lowest degree first, monic.

    Division free: the Samuelson recurrence extends the characteristic
    polynomial of the leading principal block one row/column at a time.
    """
    n = len(rows)
    if n == 0:
        return [1]
    p = [-rows[0][0], 1]
    for m in range(1, n):
        a = rows[m][m]
        rvec = rows[m][:m]
        w = [rows[i][m] for i in range(m)]
        # c_j = R . A^j . S for the leading m-block A
        cs = []
        for j in range(m):
            cs.append(sum(rvec[i] * w[i] for i in range(m)))
            if j < m - 1:
                w = [sum(rows[i][k] * w[k] for k in range(m)) for i in range(m)]
        # p_new = (lambda - a) * p - sum_j c_j * (p quotient lambda^{j+1})
        new = [0] * (len(p) + 1)
        for i, coef in enumerate(p):
            new[i + 1] += coef
            new[i] -= a * coef
        for j, c in enumerate(cs):
            if c == 0:
                continue
            # quotient of p by lambda^{j+1} is p[j+1:]
            for i in range(j + 1, len(p)):
                new[i - j - 1] -= c * p[i]
        p = new
        if _bm.ACTIVE is not None:
            _bm.note_ints(p)
    return p


# ---------------------------------------------------------------------------
# univariate integer polynomials


def poly_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_deriv(p):
    return [i * p[i] for i in range(1, len(p))]


def poly_primitive(p):
    g = 0
    for c in p:
        g = gcd(g, c)
    if g > 1:
        return [c // g for c in p]
    return list(p)


def prem_abs(a, b):
    """A positive integer multiple of the remainder of a by b.

    Pseudo-division by repeated cross-multiplication; the accumulated factor
    lc(b)^s is sign-corrected so the result is a *positive* rational multiple
    of a mod b.  (Sturm chains need signs preserved.)
    """
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
    """Primitive gcd of integer polynomials, positive leading coefficient.

    Primitive PRS: pseudo-remainders reduced to primitive part each round.
    Fine at the degrees the algorithms produce (matrix order <= input n).
    """
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
    """Sturm chain of p: [p, p', -rem(p, p'), ...] up to positive factors."""
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
    """Sign variations of the chain at +infinity (at_plus) or -infinity."""
    signs = []
    for p in chain:
        if not p:
            continue
        s = 1 if p[-1] > 0 else -1
        if not at_plus and (len(p) - 1) % 2 == 1:
            s = -s
        signs.append(s)
    return sum(1 for x, y in zip(signs, signs[1:]) if x != y)


# ---------------------------------------------------------------------------
# sparse evaluation (the PIT hot path)


def eval_terms(coeffs, exps, n, point):
    """Evaluate sum_t coeffs[t] * prod_i point[i]^exps[t*n+i] over the ints."""
    maxe = 0
    for e in exps:
        if e > maxe:
            maxe = e
    pows = []
    for i in range(n):
        xi = point[i]
        col = [1] * (maxe + 1)
        for e in range(1, maxe + 1):
            col[e] = col[e - 1] * xi
        pows.append(col)
    total = 0
    base = 0
    for c in coeffs:
        m = c
        for i in range(n):
            e = exps[base + i]
            if e:
                m *= pows[i][e]
        total += m
        base += n
    return total


def eval_terms_many(coeffs, exps, n, points_flat):
    """eval_terms at each of the len(points_flat)//n stacked points."""
    out = []
    npts = len(points_flat) // n
    for k in range(npts):
        out.append(eval_terms(coeffs, exps, n, points_flat[k * n : (k + 1) * n]))
    return out
