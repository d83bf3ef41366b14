"""Exact integer and rational matrix utilities.

Everything here works over Python ints / fractions.Fraction; no floating point.
Matrices are lists of lists, row major.  Sizes stay small (rank <= 26), so the
classical algorithms are fine.
"""

from fractions import Fraction
from math import gcd


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    n, k = len(a), len(b)
    m = len(b[0]) if b else 0
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            ait = ai[t]
            if ait:
                bt = b[t]
                for j in range(m):
                    oi[j] += ait * bt[j]
    return out


def mat_vec(a, v):
    return [sum(a[i][j] * v[j] for j in range(len(v))) for i in range(len(a))]


def vec_mat(v, a):
    return [sum(v[i] * a[i][j] for i in range(len(v))) for j in range(len(a[0]))]


def transpose(a):
    return [list(col) for col in zip(*a)] if a else []


def dot(u, v):
    return sum(x * y for x, y in zip(u, v))


def gram_bilinear(gram, u, v):
    """u^T G v, exact."""
    return dot(mat_vec(gram, v), u)


def smith_normal_form(mat):
    """Return (S, U, V) with U*mat*V = S, U and V unimodular, S in Smith form.

    S is diagonal (rectangular allowed) with s_1 | s_2 | ... and s_i >= 0.
    """
    a = [list(row) for row in mat]
    n = len(a)
    m = len(a[0]) if n else 0
    u = identity(n)
    v = identity(m)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, c):
        # row dst += c * row src
        a[dst] = [x + c * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + c * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, c):
        for row in a:
            row[dst] += c * row[src]
        for row in v:
            row[dst] += c * row[src]

    t = 0
    while t < min(n, m):
        # smallest nonzero pivot: keeps the fill-in from exploding, and the
        # clearing loop below then converges to the block gcd quickly
        piv = None
        best = None
        for i in range(t, n):
            for j in range(t, m):
                x = a[i][j]
                if x and (best is None or abs(x) < best):
                    best = abs(x)
                    piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        while True:
            # clear column t
            again = False
            for i in range(t + 1, n):
                if a[i][t]:
                    q, r = divmod(a[i][t], a[t][t])
                    add_row(t, i, -q)
                    if r:
                        swap_rows(t, i)
                        again = True
            for j in range(t + 1, m):
                if a[t][j]:
                    q, r = divmod(a[t][j], a[t][t])
                    add_col(t, j, -q)
                    if r:
                        swap_cols(t, j)
                        again = True
            if not again:
                break
        t += 1

    r = min(n, m)
    # enforce divisibility chain
    changed = True
    while changed:
        changed = False
        for i in range(r - 1):
            x, y = a[i][i], a[i + 1][i + 1]
            if y % x if x else y:
                # gcd into position i via one column mix then re-clear
                add_col(i + 1, i, 1)
                while True:
                    again = False
                    if a[i + 1][i]:
                        q, rr = divmod(a[i + 1][i], a[i][i]) if a[i][i] else (0, a[i + 1][i])
                        if a[i][i]:
                            add_row(i, i + 1, -q)
                        if a[i + 1][i]:
                            swap_rows(i, i + 1)
                            again = True
                    if a[i][i + 1]:
                        q, rr = divmod(a[i][i + 1], a[i][i]) if a[i][i] else (0, a[i][i + 1])
                        if a[i][i]:
                            add_col(i, i + 1, -q)
                        if a[i][i + 1]:
                            swap_cols(i, i + 1)
                            again = True
                    if not again:
                        break
                changed = True
    for i in range(r):
        if a[i][i] < 0:
            # negate column i of V (and of A, which is diagonal by now)
            for row in v:
                row[i] = -row[i]
            for krow in range(n):
                a[krow][i] = -a[krow][i]
    return a, u, v


def snf_diagonal(mat):
    s, _, _ = smith_normal_form(mat)
    return [s[i][i] for i in range(min(len(s), len(s[0]) if s else 0))]


def integer_kernel(mat):
    """Basis (list of vectors) of {x in Z^m : mat @ x = 0}."""
    n = len(mat)
    m = len(mat[0]) if n else 0
    s, _, v = smith_normal_form(mat)
    r = 0
    for i in range(min(n, m)):
        if s[i][i]:
            r += 1
    # kernel = columns r..m-1 of V
    return [[v[i][j] for i in range(m)] for j in range(r, m)]


def complete_primitive(vec):
    """Given a primitive integer vector, return a unimodular matrix whose first
    column is vec (columns form a basis of Z^n extending it)."""
    n = len(vec)
    col = [[x] for x in vec]
    s, u, v = smith_normal_form(col)
    assert s[0][0] == 1, "vector not primitive"
    # u * vec = e1  =>  vec = u^{-1} e1; columns of u^{-1} extend vec
    uinv = mat_inverse_int(u)
    # first column of uinv is vec up to the 1x1 unimodular v (= +-1)
    if v[0][0] == -1:
        uinv = [[-row[0]] + row[1:] for row in uinv]
    assert [row[0] for row in uinv] == list(vec)
    return uinv


def mat_inverse_int(a):
    """Inverse of a unimodular integer matrix, exact integer output."""
    inv = mat_inverse_frac(a)
    out = []
    for row in inv:
        r = []
        for x in row:
            f = Fraction(x)
            assert f.denominator == 1
            r.append(int(f))
        out.append(r)
    return out


def mat_inverse_frac(a):
    """Inverse over Q via Gauss-Jordan."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(a)]
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c]), None)
        if p is None:
            raise ZeroDivisionError("singular matrix")
        m[c], m[p] = m[p], m[c]
        pivinv = 1 / m[c][c]
        m[c] = [x * pivinv for x in m[c]]
        for r in range(n):
            if r != c and m[r][c]:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return [row[n:] for row in m]


def solve_frac(a, b):
    """Solve a x = b over Q (a square nonsingular)."""
    inv = mat_inverse_frac(a)
    return [sum(inv[i][j] * Fraction(b[j]) for j in range(len(b))) for i in range(len(inv))]


def det_frac(a):
    n = len(a)
    m = [[Fraction(x) for x in row] for row in a]
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        det *= m[c][c]
        inv = 1 / m[c][c]
        for r in range(c + 1, n):
            if m[r][c]:
                f = m[r][c] * inv
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return det


def det_int(a):
    d = det_frac(a)
    assert d.denominator == 1
    return int(d)


def ldl_decomposition(gram):
    """G = L^T D L with L unit upper triangular: Q(x) = sum_i d_i (x_i + sum_{j>i} c_ij x_j)^2.

    Requires G positive definite.  Returns (d, c) with d a list of positive
    Fractions and c a dict {(i, j): Fraction} for j > i.
    """
    n = len(gram)
    g = [[Fraction(x) for x in row] for row in gram]
    d = [Fraction(0)] * n
    c = {}
    for i in range(n):
        d[i] = g[i][i]
        if d[i] <= 0:
            raise ValueError("matrix not positive definite")
        for j in range(i + 1, n):
            c[(i, j)] = g[i][j] / d[i]
        for k in range(i + 1, n):
            for l in range(k, n):
                g[k][l] -= c[(i, k)] * d[i] * c[(i, l)]
        for k in range(i + 1, n):
            for l in range(k + 1, n):
                g[l][k] = g[k][l]
    return d, c


def lll_reduce(gram, delta=Fraction(3, 4)):
    """Basis reduction on a positive-definite integer Gram matrix.

    All-integer variant: the Gram-Schmidt data is carried as the scaled
    integers lam[i][j] = d_j * mu_ij and the leading principal minors d_i,
    so every division below is exact.  Returns (reduced, trans) with trans
    integer unimodular and reduced == trans * gram * trans^T.
    """
    n = len(gram)
    h = identity(n)
    if n <= 1:
        return [[int(x) for x in row] for row in gram], h
    hg = [[int(x) for x in row] for row in gram]  # h * gram, kept in step
    lam = [[0] * n for _ in range(n)]
    d = [0] * n
    dp, dq = delta.numerator, delta.denominator

    def gdot(i, j):
        return sum(a * b for a, b in zip(hg[i], h[j]))

    def red(k, l):
        dl = d[l]
        if 2 * abs(lam[k][l]) > dl:
            q = (2 * lam[k][l] + dl) // (2 * dl)
            hk, hl, gk, gl = h[k], h[l], hg[k], hg[l]
            for a in range(n):
                hk[a] -= q * hl[a]
                gk[a] -= q * gl[a]
            lam[k][l] -= q * dl
            for i in range(l):
                lam[k][i] -= q * lam[l][i]

    kmax = 0
    d[0] = gdot(0, 0)
    if d[0] <= 0:
        raise ValueError("matrix not positive definite")
    k = 1
    while k < n:
        if k > kmax:
            kmax = k
            for j in range(k + 1):
                u = gdot(k, j)
                for i in range(j):
                    num = d[i] * u - lam[k][i] * lam[j][i]
                    div = d[i - 1] if i else 1
                    assert num % div == 0
                    u = num // div
                if j < k:
                    lam[k][j] = u
                elif u > 0:
                    d[k] = u
                else:
                    raise ValueError("matrix not positive definite")
        red(k, k - 1)
        dkm2 = d[k - 2] if k >= 2 else 1
        if dq * d[k] * dkm2 < dp * d[k - 1] ** 2 - dq * lam[k][k - 1] ** 2:
            # Lovasz failure: swap rows k-1, k and patch the scaled data
            h[k], h[k - 1] = h[k - 1], h[k]
            hg[k], hg[k - 1] = hg[k - 1], hg[k]
            for j in range(k - 1):
                lam[k][j], lam[k - 1][j] = lam[k - 1][j], lam[k][j]
            b = (dkm2 * d[k] + lam[k][k - 1] ** 2) // d[k - 1]
            for i in range(k + 1, kmax + 1):
                t = lam[i][k]
                lam[i][k] = (d[k] * lam[i][k - 1] - lam[k][k - 1] * t) // d[k - 1]
                lam[i][k - 1] = (b * t + lam[k][k - 1] * lam[i][k]) // d[k]
            d[k - 1] = b
            k = max(1, k - 1)
        else:
            for l in range(k - 2, -1, -1):
                red(k, l)
            k += 1
    reduced = [[gdot(i, j) for j in range(n)] for i in range(n)]
    return reduced, h


def hermite_normal_form(rows):
    """Row-style HNF basis of the lattice spanned by `rows` (integer vectors).

    Returns the nonzero rows: echelon shape, positive pivots, entries above
    each pivot reduced into [0, pivot).  Deterministic.
    """
    a = [list(map(int, r)) for r in rows]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        # euclidean elimination in column c over rows r..
        while True:
            live = [i for i in range(r, nrows) if a[i][c]]
            if not live:
                break
            p = min(live, key=lambda i: abs(a[i][c]))
            a[r], a[p] = a[p], a[r]
            done = True
            for i in range(r + 1, nrows):
                if a[i][c]:
                    q = a[i][c] // a[r][c]
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    if a[i][c]:
                        done = False
            if done:
                break
        if a[r][c] == 0:
            continue
        if a[r][c] < 0:
            a[r] = [-x for x in a[r]]
        for i in range(r):
            q = a[i][c] // a[r][c]
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[r])]
        r += 1
    return a[:r]


def signature_pair(gram):
    """(positive, negative) inertia of a nondegenerate symmetric matrix, exact."""
    n = len(gram)
    a = [[Fraction(x) for x in row] for row in gram]
    pos = neg = 0
    for i in range(n):
        if a[i][i] == 0:
            j = next((k for k in range(i + 1, n) if a[k][k]), None)
            if j is not None:
                a[i], a[j] = a[j], a[i]
                for row in a:
                    row[i], row[j] = row[j], row[i]
            else:
                j = next((k for k in range(i + 1, n) if a[i][k]), None)
                if j is None:
                    raise ValueError("degenerate form")
                # diagonal block is zero: fold row/col j into i to expose a pivot
                for k in range(n):
                    a[i][k] += a[j][k]
                for k in range(n):
                    a[k][i] += a[k][j]
        piv = a[i][i]
        if piv > 0:
            pos += 1
        else:
            neg += 1
        for k in range(i + 1, n):
            if a[k][i]:
                f = a[k][i] / piv
                for l in range(i, n):
                    a[k][l] -= f * a[i][l]
        for k in range(i + 1, n):
            a[i][k] = Fraction(0)
            a[k][i] = Fraction(0)
    return pos, neg


def lcm(*vals):
    out = 1
    for x in vals:
        x = abs(int(x))
        if x:
            out = out * x // gcd(out, x)
    return out
