"""Exact integer and rational linear algebra.

Matrices are plain lists of lists (row-major).  Integer matrices hold Python
ints, rational ones hold fractions.Fraction; both are arbitrary precision so
no intermediate swell can overflow.
"""

from fractions import Fraction
from itertools import combinations

from .errors import SingularMatrix


def _copy(M):
    return [list(row) for row in M]


def shape(M):
    return len(M), len(M[0]) if M else 0


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(A, B):
    n, m = shape(A)
    m2, p = shape(B)
    assert m == m2, "dimension mismatch"
    return [[sum(A[i][k] * B[k][j] for k in range(m)) for j in range(p)]
            for i in range(n)]


def mat_vec(A, v):
    return [sum(row[j] * v[j] for j in range(len(v))) for row in A]


def transpose(M):
    return [list(col) for col in zip(*M)]


def hermite_normal_form(M):
    """Row Hermite normal form.

    Returns (H, U) with U unimodular and U*M = H.  Pivots are positive,
    entries above a pivot are reduced to lie in [0, pivot).
    """
    H = _copy(M)
    nrows, ncols = shape(H)
    U = identity(nrows)
    pivot_row = 0
    for col in range(ncols):
        # find a row at or below pivot_row with a nonzero entry in this column
        nonzero = [r for r in range(pivot_row, nrows) if H[r][col] != 0]
        if not nonzero:
            continue
        # euclidean elimination within the column
        while True:
            nonzero = [r for r in range(pivot_row, nrows) if H[r][col] != 0]
            if len(nonzero) == 1:
                break
            nonzero.sort(key=lambda r: abs(H[r][col]))
            r0 = nonzero[0]
            for r in nonzero[1:]:
                q = H[r][col] // H[r0][col]
                H[r] = [a - q * b for a, b in zip(H[r], H[r0])]
                U[r] = [a - q * b for a, b in zip(U[r], U[r0])]
        r0 = nonzero[0]
        if r0 != pivot_row:
            H[pivot_row], H[r0] = H[r0], H[pivot_row]
            U[pivot_row], U[r0] = U[r0], U[pivot_row]
        if H[pivot_row][col] < 0:
            H[pivot_row] = [-a for a in H[pivot_row]]
            U[pivot_row] = [-a for a in U[pivot_row]]
        # reduce the entries above the pivot
        p = H[pivot_row][col]
        for r in range(pivot_row):
            q = H[r][col] // p
            if q:
                H[r] = [a - q * b for a, b in zip(H[r], H[pivot_row])]
                U[r] = [a - q * b for a, b in zip(U[r], U[pivot_row])]
        pivot_row += 1
        if pivot_row == nrows:
            break
    return H, U


def smith_normal_form(M):
    """Smith normal form: returns (S, U, V) with U*M*V = S diagonal,
    divisors d_1 | d_2 | ... , U and V unimodular."""
    S = _copy(M)
    nrows, ncols = shape(S)
    U = identity(nrows)
    V = identity(ncols)

    def swap_rows(i, j):
        S[i], S[j] = S[j], S[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in S:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        S[dst] = [a + q * b for a, b in zip(S[dst], S[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for row in S:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    t = 0
    while t < min(nrows, ncols):
        # locate a nonzero pivot in the remaining block
        pivot = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                if S[i][j] != 0:
                    pivot = (i, j)
                    break
            if pivot:
                break
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        # clear row and column t by euclidean steps; restart if a remainder
        # reappears (standard worklist loop, always terminates since |S[t][t]|
        # strictly decreases)
        while True:
            again = False
            for i in range(t + 1, nrows):
                if S[i][t] != 0:
                    q = S[i][t] // S[t][t]
                    add_row(i, t, -q)
                    if S[i][t] != 0:
                        swap_rows(t, i)
                        again = True
            for j in range(t + 1, ncols):
                if S[t][j] != 0:
                    q = S[t][j] // S[t][t]
                    add_col(j, t, -q)
                    if S[t][j] != 0:
                        swap_cols(t, j)
                        again = True
            if not again:
                break
        # enforce divisibility d_t | d_{t+1}...: fold any bad entry into col t
        bad = None
        for i in range(t + 1, nrows):
            for j in range(t + 1, ncols):
                if S[i][j] % S[t][t] != 0:
                    bad = (i, j)
                    break
            if bad:
                break
        if bad is not None:
            add_row(t, bad[0], 1)
            continue
        if S[t][t] < 0:
            S[t] = [-a for a in S[t]]
            U[t] = [-a for a in U[t]]
        t += 1
    return S, U, V


def snf_divisors(M):
    S, _, _ = smith_normal_form(M)
    n = min(shape(S))
    return [S[i][i] for i in range(n) if S[i][i] != 0]


def integer_kernel(M):
    """Z-basis of the right integer kernel of M, as columns of a matrix.

    Rows of the HNF transform U corresponding to zero rows of H = U*M^T
    satisfy row*M^T = 0, i.e. M*row^T = 0.  The basis is canonicalized by a
    final HNF so the output is deterministic.
    """
    nrows, ncols = shape(M)
    H, U = hermite_normal_form(transpose(M))
    kernel_rows = [U[r] for r in range(ncols) if all(x == 0 for x in H[r])]
    if not kernel_rows:
        return [[] for _ in range(ncols)]
    K, _ = hermite_normal_form(kernel_rows)
    K = [row for row in K if any(x != 0 for x in row)]
    return transpose(K)


def det_bareiss(M):
    """Exact integer determinant via fraction-free (Bareiss) elimination."""
    n, m = shape(M)
    assert n == m, "determinant needs a square matrix"
    if n == 0:
        return 1
    A = _copy(M)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for r in range(k + 1, n):
                if A[r][k] != 0:
                    A[k], A[r] = A[r], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
            A[i][k] = 0
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def rat_inverse(M):
    """Exact inverse of a square integer (or rational) matrix.

    Returns (inv, det) where det is the exact integer determinant (computed
    fraction-free) and inv has Fraction entries.  Raises SingularMatrix when
    det = 0.
    """
    n, m = shape(M)
    assert n == m
    det = det_bareiss(M)
    if det == 0:
        raise SingularMatrix("matrix is singular")
    A = [[Fraction(x) for x in row] for row in M]
    inv = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if A[r][col] != 0)
        if piv != col:
            A[col], A[piv] = A[piv], A[col]
            inv[col], inv[piv] = inv[piv], inv[col]
        p = A[col][col]
        A[col] = [x / p for x in A[col]]
        inv[col] = [x / p for x in inv[col]]
        for r in range(n):
            if r != col and A[r][col] != 0:
                f = A[r][col]
                A[r] = [x - f * y for x, y in zip(A[r], A[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    return inv, det


def submatrix_by_columns(M, cols):
    return [[row[j] for j in cols] for row in M]


def graded_lex_vectors(dim, degree):
    """All nonnegative integer vectors of the given length and exact degree,
    in lexicographic order (the graded order is obtained by iterating over
    degrees in increasing order)."""
    if dim == 0:
        if degree == 0:
            yield ()
        return
    if dim == 1:
        yield (degree,)
        return
    for first in range(degree, -1, -1):
        for rest in graded_lex_vectors(dim - 1, degree - first):
            yield (first,) + rest


def coset_representatives(A, sigma):
    """Complete set of representatives k in Z_{>=0}^{sigma-bar} for the
    classes [A_{sigma-bar} k] of Z^d / Z*A_sigma.

    Enumerates k in graded-lex order and keeps the first member of each new
    class; there are exactly |det A_sigma| classes, and each class is hit by
    arbitrarily small k, so the search terminates quickly.
    """
    ncols = shape(A)[1]
    sigma = list(sigma)
    sigma_bar = [j for j in range(ncols) if j not in sigma]
    A_sigma = submatrix_by_columns(A, sigma)
    inv, det = rat_inverse(A_sigma)
    r = abs(det)
    reps = []
    seen = set()
    C = mat_mul(inv, submatrix_by_columns(A, sigma_bar))
    degree = 0
    while len(reps) < r:
        for k in graded_lex_vectors(len(sigma_bar), degree):
            frac = tuple(x % 1 for x in mat_vec(C, list(k)))
            if frac not in seen:
                seen.add(frac)
                reps.append(list(k))
                if len(reps) == r:
                    break
        degree += 1
        if degree > 4 * r + 4:
            raise AssertionError("coset search did not terminate")
    return reps


def brute_force_kernel_vectors(M, bound):
    """All integer vectors u with M*u = 0 and ||u||_inf <= bound.
    Exponential; test-oracle use only."""
    n, m = shape(M)
    out = []

    def rec(prefix):
        if len(prefix) == m:
            if all(sum(M[i][j] * prefix[j] for j in range(m)) == 0
                   for i in range(n)):
                out.append(list(prefix))
            return
        for v in range(-bound, bound + 1):
            rec(prefix + [v])

    rec([])
    return out


def det_cofactor(M):
    """Determinant by cofactor expansion; independent test oracle."""
    n = len(M)
    if n == 0:
        return 1
    if n == 1:
        return M[0][0]
    total = 0
    for j in range(n):
        if M[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        total += (-1) ** j * M[0][j] * det_cofactor(minor)
    return total


def in_z_span(vec, K):
    """Whether vec lies in the Z-span of the columns of K (exact)."""
    ncols = shape(K)[1]
    if ncols == 0:
        return all(x == 0 for x in vec)
    # solve K*x = vec over the rationals, then demand integrality;
    # K has full column rank for our canonical kernels.
    for cols in combinations(range(len(K)), ncols):
        sub = [[K[r][c] for c in range(ncols)] for r in cols]
        if det_bareiss(sub) != 0:
            inv, _ = rat_inverse(sub)
            x = mat_vec(inv, [vec[r] for r in cols])
            if all(xi.denominator == 1 for xi in x):
                full = mat_vec([[Fraction(e) for e in row] for row in K],
                               [int(xi) for xi in x])
                return all(a == b for a, b in zip(full, vec))
            return False
    return False


def matrix_to_json(M):
    return [[str(int(x)) for x in row] for row in M]


def matrix_from_json(rows):
    return [[int(x) for x in row] for row in rows]
