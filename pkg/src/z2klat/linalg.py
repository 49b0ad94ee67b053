"""Exact integer linear algebra: Howell form over Z_m, kernels mod m,
Hermite normal form over Z, and integer LLL reduction.

Everything here works on plain Python ints (lists of lists), so there is
no overflow anywhere.  Matrices are small (n <= ~64) throughout.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def egcd(a: int, b: int):
    """Return (g, s, t) with g = gcd(a, b) = s*a + t*b, g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _unit_normalizer(e: int, m: int) -> int:
    """A unit u of Z_m with u*e == gcd(e, m) (mod m)."""
    g = gcd(e, m)
    mg = m // g
    e1 = (e // g) % m
    u = pow(e1, -1, mg) if mg > 1 else 1
    # lift to a residue coprime to all of m
    while gcd(u, m) != 1:
        u += mg
    return u % m


def howell_form(rows, m: int, n: int):
    """Howell canonical form of the row span of `rows` over Z_m.

    Returns a list of rows with strictly increasing pivot columns.  Two
    generating sets span the same submodule iff their Howell forms are
    identical, and every span element is a unique combination
    sum t_i * row_i with t_i in [0, m/pivot_i).
    """
    work = [[int(x) % m for x in r] for r in rows]
    work = [r for r in work if any(r)]
    result = []
    for col in range(n):
        live = [r for r in work if r[col] != 0]
        rest = [r for r in work if r[col] == 0]
        if not live:
            work = rest
            continue
        piv = live[0]
        for r in live[1:]:
            a, b = piv[col], r[col]
            g, s, t = egcd(a, b)
            newp = [(s * x + t * y) % m for x, y in zip(piv, r)]
            newr = [((b // g) * x - (a // g) * y) % m for x, y in zip(piv, r)]
            piv = newp
            if any(newr):
                rest.append(newr)
        u = _unit_normalizer(piv[col], m)
        piv = [(u * x) % m for x in piv]
        # piv[col] now divides m
        ann_mult = m // piv[col]
        ann = [(ann_mult * x) % m for x in piv]
        if any(ann):
            rest.append(ann)
        result.append(piv)
        work = rest
    # reduce entries above each pivot
    for i, row in enumerate(result):
        c = next(j for j, x in enumerate(row) if x != 0)
        p = row[c]
        for j in range(i):
            q = result[j][c] // p
            if q:
                result[j] = [(x - q * y) % m for x, y in zip(result[j], row)]
    return result


def howell_member(howell_rows, vec, m: int):
    """Whether `vec` lies in the span of a Howell form; back-substitution."""
    v = [int(x) % m for x in vec]
    for row in howell_rows:
        c = next(j for j, x in enumerate(row) if x != 0)
        p = row[c]
        if v[c] % p != 0:
            return False
        t = v[c] // p
        v = [(x - t * y) % m for x, y in zip(v, row)]
    return not any(v)


def howell_cardinality(howell_rows, m: int) -> int:
    """Number of elements in the span of a Howell form."""
    card = 1
    for row in howell_rows:
        p = next(x for x in row if x != 0)
        card *= m // p
    return card


def kernel_mod(rows, m: int, n: int):
    """Generators of {x in Z_m^n : A x^T == 0 (mod m)} for A = rows.

    Diagonalizes A over Z (Smith-style, no divisibility chain needed)
    tracking the column transform V, then reads the kernel off the
    diagonal.  Returns Howell-reduced generators.
    """
    A = [[int(x) for x in r] for r in rows]
    A = [row for row in A if any(x % m for x in row)]
    r = len(A)
    if r == 0:
        # kernel of the zero map is the full space
        return howell_form(
            [[1 if i == j else 0 for j in range(n)] for i in range(n)], m, n
        )
    V = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def col_op(j1, j2, a, b, c, d):
        # (col j1, col j2) <- (a*col j1 + b*col j2, c*col j1 + d*col j2)
        for mat in (A, V):
            for row in mat:
                x, y = row[j1], row[j2]
                row[j1] = a * x + b * y
                row[j2] = c * x + d * y

    t = 0
    dim = min(r, n)
    while t < dim:
        # find a nonzero pivot
        pi = pj = -1
        for i in range(t, r):
            for j in range(t, n):
                if A[i][j] != 0:
                    pi, pj = i, j
                    break
            if pi >= 0:
                break
        if pi < 0:
            break
        A[t], A[pi] = A[pi], A[t]
        if pj != t:
            col_op(t, pj, 0, 1, 1, 0)
        while True:
            # clear column t with row ops; plain subtraction keeps row t
            # fixed, a gcd combo strictly shrinks the pivot
            for i in range(r):
                if i != t and A[i][t] != 0:
                    a, b = A[t][t], A[i][t]
                    if b % a == 0:
                        q = b // a
                        A[i] = [y - q * x for x, y in zip(A[t], A[i])]
                    else:
                        g, s, u = egcd(a, b)
                        rt = [s * x + u * y for x, y in zip(A[t], A[i])]
                        ri = [(b // g) * x - (a // g) * y for x, y in zip(A[t], A[i])]
                        A[t], A[i] = rt, ri
            # clear row t with column ops
            for j in range(n):
                if j != t and A[t][j] != 0:
                    a, b = A[t][t], A[t][j]
                    if b % a == 0:
                        q = b // a
                        col_op(t, j, 1, 0, -q, 1)
                    else:
                        g, s, u = egcd(a, b)
                        col_op(t, j, s, u, -(b // g), a // g)
            if all(A[i][t] == 0 for i in range(r) if i != t) and all(
                A[t][j] == 0 for j in range(n) if j != t
            ):
                break
        t += 1
    gens = []
    for j in range(n):
        d = A[j][j] if j < dim else 0
        mult = m // gcd(d, m)
        if mult % m == 0 and d != 0 and gcd(d, m) == 1:
            continue  # unit diagonal: no kernel contribution
        gen = [(mult * V[i][j]) % m for i in range(n)]
        if any(gen):
            gens.append(gen)
    if not gens:
        gens = []
    return howell_form(gens, m, n) if gens else []


def hermite_normal_form(rows, n: int):
    """Row-style HNF over Z of the lattice spanned by `rows` (n columns).

    Returns the nonzero rows, upper triangular when full rank, positive
    pivots, entries above each pivot reduced into [0, pivot).
    """
    mat = [[int(x) for x in r] for r in rows]
    mat = [r for r in mat if any(r)]
    h = 0
    for col in range(n):
        piv = None
        for i in range(h, len(mat)):
            if mat[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        mat[h], mat[piv] = mat[piv], mat[h]
        for i in range(h + 1, len(mat)):
            while mat[i][col] != 0:
                a, b = mat[h][col], mat[i][col]
                g, s, t = egcd(a, b)
                rh = [s * x + t * y for x, y in zip(mat[h], mat[i])]
                ri = [(b // g) * x - (a // g) * y for x, y in zip(mat[h], mat[i])]
                mat[h], mat[i] = rh, ri
        if mat[h][col] < 0:
            mat[h] = [-x for x in mat[h]]
        for i in range(h):
            q = mat[i][col] // mat[h][col]
            if q:
                mat[i] = [x - q * y for x, y in zip(mat[i], mat[h])]
        h += 1
    return [r for r in mat[:h] if any(r)]


def mat_mul(a, b):
    nb = len(b[0])
    return [
        [sum(ra[k] * b[k][j] for k in range(len(b))) for j in range(nb)]
        for ra in a
    ]


def mat_transpose(a):
    return [list(col) for col in zip(*a)]


def gram_matrix(rows):
    n = len(rows)
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            s = sum(x * y for x, y in zip(rows[i], rows[j]))
            g[i][j] = s
            g[j][i] = s
    return g


def det_int(mat) -> int:
    """Determinant of an integer matrix, via fraction-free elimination."""
    n = len(mat)
    a = [[Fraction(x) for x in row] for row in mat]
    det = Fraction(1)
    for c in range(n):
        piv = None
        for i in range(c, n):
            if a[i][c] != 0:
                piv = i
                break
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        inv = 1 / a[c][c]
        for i in range(c + 1, n):
            f = a[i][c] * inv
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    assert det.denominator == 1
    return int(det)


def mat_inverse_fraction(mat):
    """Exact inverse of a square integer/fraction matrix."""
    n = len(mat)
    a = [[Fraction(x) for x in row] for row in mat]
    inv = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for c in range(n):
        piv = None
        for i in range(c, n):
            if a[i][c] != 0:
                piv = i
                break
        if piv is None:
            raise ValueError("matrix is singular")
        a[c], a[piv] = a[piv], a[c]
        inv[c], inv[piv] = inv[piv], inv[c]
        f = 1 / a[c][c]
        a[c] = [x * f for x in a[c]]
        inv[c] = [x * f for x in inv[c]]
        for i in range(n):
            if i != c and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
                inv[i] = [x - f * y for x, y in zip(inv[i], inv[c])]
    return inv


def lll_reduce_rows(rows, delta_num: int = 99, delta_den: int = 100):
    """All-integer LLL (Cohen Alg. 2.6.3) on integer basis rows.

    Returns (reduced_rows, transform) with reduced = transform * rows and
    transform unimodular.  delta defaults to 0.99.
    """
    b = [list(map(int, r)) for r in rows]
    n = len(b)
    if n <= 1:
        return [r[:] for r in b], [[1] * 1 for _ in range(n)] if n else []
    T = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    d = [0] * (n + 1)
    d[0] = 1
    lam = [[0] * n for _ in range(n)]

    def dot(i, j):
        return sum(x * y for x, y in zip(b[i], b[j]))

    def redi(k, l):
        if 2 * abs(lam[k][l]) > d[l + 1]:
            q = (2 * lam[k][l] + d[l + 1]) // (2 * d[l + 1])
            b[k] = [x - q * y for x, y in zip(b[k], b[l])]
            T[k] = [x - q * y for x, y in zip(T[k], T[l])]
            lam[k][l] -= q * d[l + 1]
            for i in range(l):
                lam[k][i] -= q * lam[l][i]

    def swapi(k, kmax):
        b[k], b[k - 1] = b[k - 1], b[k]
        T[k], T[k - 1] = T[k - 1], T[k]
        for j in range(k - 1):
            lam[k][j], lam[k - 1][j] = lam[k - 1][j], lam[k][j]
        lmb = lam[k][k - 1]
        B = (d[k - 1] * d[k + 1] + lmb * lmb) // d[k]
        for i in range(k + 1, kmax + 1):
            t = lam[i][k]
            lam[i][k] = (d[k + 1] * lam[i][k - 1] - lmb * t) // d[k]
            lam[i][k - 1] = (B * t + lmb * lam[i][k]) // d[k + 1]
        d[k] = B

    d[1] = dot(0, 0)
    k = 1
    kmax = 0
    while k < n:
        if k > kmax:
            kmax = k
            for j in range(k + 1):
                u = dot(k, j)
                for i in range(j):
                    u = (d[i + 1] * u - lam[k][i] * lam[j][i]) // d[i]
                if j < k:
                    lam[k][j] = u
                else:
                    d[k + 1] = u
        while True:
            redi(k, k - 1)
            if delta_den * (d[k + 1] * d[k - 1] + lam[k][k - 1] ** 2) < delta_num * d[k] ** 2:
                swapi(k, kmax)
                k = max(1, k - 1)
            else:
                for l in range(k - 2, -1, -1):
                    redi(k, l)
                k += 1
                break
    return b, T
