"""Dense exact linear algebra over the scalar rings.

Provides a generic matrix container plus three algorithm families:

* Gaussian elimination over fields (solve, kernel, rank, inverse),
* Smith normal form over the Euclidean rings F[q] and F[q,q^-1]
  (solve, kernel, surjectivity certificates),
* scalar extension over FinCommRings (an R-linear system becomes an
  F-linear system of size dim(R) times larger).

`ring_solve` / `ring_kernel` / `ring_inverse` / `ring_is_invertible`
dispatch on the ring category so callers never branch.

Tensor index convention, fixed globally: the pair (i, j) with j running
over the second factor maps to index i * dim2 + j (row major).  kron
follows the same convention, so (A (x) B)(x (x) y) = Ax (x) By.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DimensionMismatch, NonEuclideanRing, RingMismatch
from .rings import FinCommRing, LaurentRing, PolyRing


class Matrix:
    """Immutable rectangular matrix over a ring."""

    __slots__ = ("ring", "nrows", "ncols", "rows")

    def __init__(self, ring, rows):
        self.ring = ring
        self.rows = tuple(tuple(r) for r in rows)
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        if any(len(r) != self.ncols for r in self.rows):
            raise DimensionMismatch("ragged rows")

    # -- constructors -----------------------------------------------------
    @staticmethod
    def identity(ring, n):
        return Matrix(ring, [[ring.one if i == j else ring.zero for j in range(n)]
                             for i in range(n)])

    @staticmethod
    def zeros(ring, nrows, ncols):
        return Matrix(ring, [[ring.zero] * ncols for _ in range(nrows)])

    @staticmethod
    def from_cols(ring, cols, nrows=None):
        if not cols:
            return Matrix(ring, [[] for _ in range(nrows or 0)])
        n = len(cols[0])
        return Matrix(ring, [[c[i] for c in cols] for i in range(n)])

    @staticmethod
    def diagonal(ring, entries):
        n = len(entries)
        return Matrix(ring, [[entries[i] if i == j else ring.zero for j in range(n)]
                             for i in range(n)])

    # -- basic ops ---------------------------------------------------------
    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return (isinstance(other, Matrix) and other.ring == self.ring
                and other.rows == self.rows)

    def __hash__(self):
        return hash((self.ring, self.rows))

    def entries(self):
        for row in self.rows:
            yield from row

    def col(self, j):
        return tuple(row[j] for row in self.rows)

    def transpose(self):
        return Matrix(self.ring, [[self.rows[i][j] for i in range(self.nrows)]
                                  for j in range(self.ncols)])

    def add(self, other):
        self._match(other)
        R = self.ring
        return Matrix(R, [[R.add(a, b) for a, b in zip(r1, r2)]
                          for r1, r2 in zip(self.rows, other.rows)])

    def sub(self, other):
        self._match(other)
        R = self.ring
        return Matrix(R, [[R.sub(a, b) for a, b in zip(r1, r2)]
                          for r1, r2 in zip(self.rows, other.rows)])

    def neg(self):
        R = self.ring
        return Matrix(R, [[R.neg(a) for a in row] for row in self.rows])

    def scale(self, c):
        R = self.ring
        return Matrix(R, [[R.mul(c, a) for a in row] for row in self.rows])

    def mul(self, other):
        if isinstance(other, Matrix):
            if self.ring != other.ring:
                raise RingMismatch("matrix product over different rings")
            if self.ncols != other.nrows:
                raise DimensionMismatch(
                    f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}")
            R = self.ring
            bt = other.transpose().rows
            return Matrix(R, [[R.sum(R.mul(a, b) for a, b in zip(row, col))
                               for col in bt] for row in self.rows])
        # vector
        return self.apply(other)

    def apply(self, vec):
        if len(vec) != self.ncols:
            raise DimensionMismatch("vector length does not match columns")
        R = self.ring
        return tuple(R.sum(R.mul(a, x) for a, x in zip(row, vec)) for row in self.rows)

    def map_entries(self, fn, ring=None):
        return Matrix(ring or self.ring, [[fn(a) for a in row] for row in self.rows])

    def is_zero(self):
        R = self.ring
        return all(R.is_zero(a) for a in self.entries())

    def _match(self, other):
        if self.ring != other.ring:
            raise RingMismatch("matrices over different rings")
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise DimensionMismatch("matrix shapes differ")

    def __repr__(self):
        R = self.ring
        body = "; ".join(", ".join(R.to_str(a) for a in row) for row in self.rows)
        return f"[{body}]"


def kron(A, B):
    """Kronecker product, row-major pair indexing (i, k) -> i*rowsB + k."""
    if A.ring != B.ring:
        raise RingMismatch("kron over different rings")
    R = A.ring
    rows = []
    for i in range(A.nrows):
        for k in range(B.nrows):
            row = []
            for j in range(A.ncols):
                a = A.rows[i][j]
                row.extend(R.mul(a, b) for b in B.rows[k])
            rows.append(row)
    return Matrix(R, rows)


def vstack(mats):
    ring = mats[0].ring
    rows = []
    for m in mats:
        if m.ring != ring:
            raise RingMismatch("vstack over different rings")
        rows.extend(m.rows)
    return Matrix(ring, rows)


# ---------------------------------------------------------------------------
# field algorithms
# ---------------------------------------------------------------------------

def _rref(F, rows, width):
    """In-place reduced row echelon form; returns pivot column list."""
    pivots = []
    r = 0
    for c in range(width):
        piv = next((i for i in range(r, len(rows)) if not F.is_zero(rows[i][c])), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        sc = F.inv(rows[r][c])
        rows[r] = [F.mul(sc, v) for v in rows[r]]
        for i in range(len(rows)):
            if i != r and not F.is_zero(rows[i][c]):
                f = rows[i][c]
                rows[i] = [F.sub(rows[i][j], F.mul(f, rows[r][j]))
                           for j in range(len(rows[i]))]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def solve_field(A, b):
    """One solution of A x = b over a field, or None if inconsistent."""
    F = A.ring
    if len(b) != A.nrows:
        raise DimensionMismatch("right-hand side length does not match rows")
    rows = [list(r) + [b[i]] for i, r in enumerate(A.rows)]
    pivots = _rref(F, rows, A.ncols)
    for i in range(len(pivots), A.nrows):
        if not F.is_zero(rows[i][A.ncols]):
            return None
    x = [F.zero] * A.ncols
    for r, c in enumerate(pivots):
        x[c] = rows[r][A.ncols]
    return tuple(x)


def kernel_field(A):
    """Basis of the null space of A over a field."""
    F = A.ring
    rows = [list(r) for r in A.rows]
    pivots = _rref(F, rows, A.ncols)
    free = [c for c in range(A.ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [F.zero] * A.ncols
        v[fc] = F.one
        for r, c in enumerate(pivots):
            v[c] = F.neg(rows[r][fc])
        basis.append(tuple(v))
    return basis


def rank_field(A):
    F = A.ring
    rows = [list(r) for r in A.rows]
    return len(_rref(F, rows, A.ncols))


def inverse_field(A):
    """Inverse over a field, or None when singular."""
    if A.nrows != A.ncols:
        return None
    F = A.ring
    n = A.nrows
    rows = [list(r) + [F.one if i == j else F.zero for j in range(n)]
            for i, r in enumerate(A.rows)]
    pivots = _rref(F, rows, n)
    if len(pivots) != n:
        return None
    return Matrix(F, [row[n:] for row in rows])


def column_space_contains(A, b):
    """Whether b lies in the column span of A (over a field)."""
    return solve_field(A, b) is not None


def echelon_complement(F, vectors, ambient):
    """Quotient machinery for span(vectors) inside F^ambient.

    Returns (project, section, qdim): `project` maps an ambient vector to
    quotient coordinates (reduce modulo the span, then read the non-pivot
    coordinates), `section` lifts quotient coordinates back.
    """
    rows = [list(v) for v in vectors]
    pivots = _rref(F, rows, ambient)
    rows = rows[:len(pivots)]
    free = [j for j in range(ambient) if j not in pivots]

    def project(v):
        w = list(v)
        for r, p in zip(rows, pivots):
            if not F.is_zero(w[p]):
                f = w[p]
                for j in range(ambient):
                    w[j] = F.sub(w[j], F.mul(f, r[j]))
        return tuple(w[j] for j in free)

    def section(coords):
        w = [F.zero] * ambient
        for c, j in zip(coords, free):
            w[j] = c
        return tuple(w)

    return project, section, len(free)


# ---------------------------------------------------------------------------
# Smith normal form over Euclidean rings
# ---------------------------------------------------------------------------

@dataclass
class SmithForm:
    """U * A * V = D with U, V unimodular and D diagonal, d_i | d_{i+1}."""
    D: Matrix
    U: Matrix
    V: Matrix
    divisors: list

    @property
    def all_units(self):
        R = self.D.ring
        return (len(self.divisors) == min(self.D.nrows, self.D.ncols)
                and all(R.is_unit(d) for d in self.divisors))


def _is_euclidean(ring):
    return isinstance(ring, (PolyRing, LaurentRing))


def smith_normal_form(A):
    """Smith normal form over F[q] or F[q,q^-1].

    Divisors are normalized: monic, and for Laurent entries the power of q
    is stripped (units are exactly the nonzero monomials).
    """
    R = A.ring
    if not _is_euclidean(R):
        raise NonEuclideanRing(f"Smith normal form needs a Euclidean ring, got {R!r}")
    m, n = A.nrows, A.ncols
    D = [list(r) for r in A.rows]
    U = [[R.one if i == j else R.zero for j in range(m)] for i in range(m)]
    V = [[R.one if i == j else R.zero for j in range(n)] for i in range(n)]

    def row_op(i1, i2, c):  # row i1 += c * row i2 (in D and U)
        for j in range(n):
            D[i1][j] = R.add(D[i1][j], R.mul(c, D[i2][j]))
        for j in range(m):
            U[i1][j] = R.add(U[i1][j], R.mul(c, U[i2][j]))

    def col_op(j1, j2, c):  # col j1 += c * col j2
        for i in range(m):
            D[i][j1] = R.add(D[i][j1], R.mul(c, D[i][j2]))
        for i in range(n):
            V[i][j1] = R.add(V[i][j1], R.mul(c, V[i][j2]))

    def swap_rows(i1, i2):
        D[i1], D[i2] = D[i2], D[i1]
        U[i1], U[i2] = U[i2], U[i1]

    def swap_cols(j1, j2):
        for i in range(m):
            D[i][j1], D[i][j2] = D[i][j2], D[i][j1]
        for i in range(n):
            V[i][j1], V[i][j2] = V[i][j2], V[i][j1]

    def scale_row(i, u):  # u a unit
        for j in range(n):
            D[i][j] = R.mul(u, D[i][j])
        for j in range(m):
            U[i][j] = R.mul(u, U[i][j])

    t = 0
    while t < min(m, n):
        # locate a nonzero entry of minimal degree in the trailing block
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if not R.is_zero(D[i][j]):
                    d = R.edeg(D[i][j])
                    if best is None or d < best[0]:
                        best = (d, i, j)
        if best is None:
            break
        _, bi, bj = best
        swap_rows(t, bi)
        swap_cols(t, bj)
        # clear row and column t, restarting when a remainder improves the pivot
        dirty = True
        while dirty:
            dirty = False
            for i in range(t + 1, m):
                if R.is_zero(D[i][t]):
                    continue
                q, r = R.divmod(D[i][t], D[t][t])
                row_op(i, t, R.neg(q))
                if not R.is_zero(D[i][t]):
                    swap_rows(t, i)
                    dirty = True
            for j in range(t + 1, n):
                if R.is_zero(D[t][j]):
                    continue
                q, r = R.divmod(D[t][j], D[t][t])
                col_op(j, t, R.neg(q))
                if not R.is_zero(D[t][j]):
                    swap_cols(t, j)
                    dirty = True
        # enforce divisibility d_t | trailing entries
        fixed = False
        for i in range(t + 1, m):
            if fixed:
                break
            for j in range(t + 1, n):
                if not R.is_zero(D[i][j]):
                    _, r = R.divmod(D[i][j], D[t][t])
                    if not R.is_zero(r):
                        row_op(t, i, R.one)
                        fixed = True
                        break
        if fixed:
            continue
        t += 1

    # normalize pivots to canonical associates
    for i in range(min(m, n)):
        d = D[i][i]
        if R.is_zero(d):
            continue
        if isinstance(R, LaurentRing):
            low, coeffs = d
            u = R.inv((low, (coeffs[-1],)))
        else:
            u = R.from_field(R.base_field.inv(d[-1]))
        if not R.is_one(u):
            scale_row(i, u)

    divisors = [D[i][i] for i in range(min(m, n)) if not R.is_zero(D[i][i])]
    return SmithForm(D=Matrix(R, D), U=Matrix(R, U), V=Matrix(R, V), divisors=divisors)


def det_field(A):
    """Determinant over a field by fraction-free forward elimination."""
    F = A.ring
    if A.nrows != A.ncols:
        raise DimensionMismatch("determinant of a non-square matrix")
    n = A.nrows
    rows = [list(r) for r in A.rows]
    det = F.one
    for c in range(n):
        piv = next((i for i in range(c, n) if not F.is_zero(rows[i][c])), None)
        if piv is None:
            return F.zero
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            det = F.neg(det)
        det = F.mul(det, rows[c][c])
        inv = F.inv(rows[c][c])
        for i in range(c + 1, n):
            if not F.is_zero(rows[i][c]):
                f = F.mul(rows[i][c], inv)
                rows[i] = [F.sub(rows[i][j], F.mul(f, rows[c][j])) for j in range(n)]
    return det


def det_euclidean(A):
    """Determinant over F[q] / F[q,q^-1]: cofactor expansion memoized on
    column subsets (exact, no division; fine at the package's dimensions)."""
    import functools

    R = A.ring
    if A.nrows != A.ncols:
        raise DimensionMismatch("determinant of a non-square matrix")
    n = A.nrows
    if n == 0:
        return R.one

    @functools.lru_cache(maxsize=None)
    def minor(row, colset):
        if not colset:
            return R.one
        acc = R.zero
        sign = True
        for idx, c in enumerate(colset):
            a = A.rows[row][c]
            if not R.is_zero(a):
                sub = minor(row + 1, colset[:idx] + colset[idx + 1:])
                term = R.mul(a, sub)
                acc = R.add(acc, term if sign else R.neg(term))
            sign = not sign
        return acc

    return minor(0, tuple(range(n)))


def solve_euclidean(A, b):
    """One solution of A x = b over a Euclidean ring (exactly), or None."""
    sf = smith_normal_form(A)
    R = A.ring
    ub = sf.U.apply(b)
    y = [R.zero] * A.ncols
    k = min(A.nrows, A.ncols)
    for i in range(A.nrows):
        if i < k and not R.is_zero(sf.D.rows[i][i]):
            q, r = R.divmod(ub[i], sf.D.rows[i][i])
            if not R.is_zero(r):
                return None
            y[i] = q
        elif not R.is_zero(ub[i]):
            return None
    return sf.V.apply(y)


def kernel_euclidean(A):
    """Free basis of ker(A) over a Euclidean ring (saturated by construction)."""
    sf = smith_normal_form(A)
    R = A.ring
    k = min(A.nrows, A.ncols)
    basis = []
    for j in range(A.ncols):
        if j >= k or R.is_zero(sf.D.rows[j][j]):
            basis.append(sf.V.col(j))
    return basis


# ---------------------------------------------------------------------------
# FinCommRing scalar extension
# ---------------------------------------------------------------------------

def expand_fincomm_matrix(A):
    """Rewrite an R-matrix as an F-matrix acting on stacked coordinates."""
    R = A.ring
    F = R.base_field
    d = R.dim
    rows = []
    blocks = [[R.mult_matrix(A.rows[i][j]) for j in range(A.ncols)]
              for i in range(A.nrows)]
    for i in range(A.nrows):
        for r in range(d):
            row = []
            for j in range(A.ncols):
                row.extend(blocks[i][j][r])
            rows.append(row)
    return Matrix(F, rows)


def expand_fincomm_vector(R, v):
    out = []
    for x in v:
        out.extend(x)
    return tuple(out)


def restore_fincomm_vector(R, flat):
    d = R.dim
    return tuple(tuple(flat[i * d:(i + 1) * d]) for i in range(len(flat) // d))


def solve_fincomm(A, b):
    R = A.ring
    if R.dim == 0:
        return tuple(R.zero for _ in range(A.ncols))
    flat = solve_field(expand_fincomm_matrix(A), expand_fincomm_vector(R, b))
    if flat is None:
        return None
    return restore_fincomm_vector(R, flat)


def kernel_fincomm(A):
    """F-basis of the kernel, as vectors of R-elements."""
    R = A.ring
    if R.dim == 0:
        return []
    return [restore_fincomm_vector(R, v) for v in kernel_field(expand_fincomm_matrix(A))]


def inverse_fincomm(A):
    R = A.ring
    if A.nrows != A.ncols:
        return None
    if R.dim == 0:
        return Matrix(R, [[R.zero] * A.ncols for _ in range(A.nrows)])
    cols = []
    for j in range(A.ncols):
        e = tuple(R.one if i == j else R.zero for i in range(A.nrows))
        x = solve_fincomm(A, e)
        if x is None:
            return None
        cols.append(x)
    return Matrix.from_cols(R, cols, A.nrows)


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------

def ring_solve(A, b):
    cat = A.ring.category
    if cat == "field":
        return solve_field(A, b)
    if cat == "euclidean":
        return solve_euclidean(A, b)
    return solve_fincomm(A, b)


def ring_kernel(A):
    cat = A.ring.category
    if cat == "field":
        return kernel_field(A)
    if cat == "euclidean":
        return kernel_euclidean(A)
    return kernel_fincomm(A)


def ring_is_invertible(A):
    if A.nrows != A.ncols:
        return False
    cat = A.ring.category
    if cat == "field":
        return inverse_field(A) is not None
    if cat == "euclidean":
        return A.ring.is_unit(det_euclidean(A))
    R = A.ring
    if R.dim == 0:
        return True
    return inverse_field(expand_fincomm_matrix(A)) is not None


def ring_inverse(A):
    cat = A.ring.category
    if cat == "field":
        return inverse_field(A)
    if cat == "euclidean":
        d = det_euclidean(A)
        R = A.ring
        if R.is_zero(d) or not R.is_unit(d):
            return None
        cols = []
        for j in range(A.ncols):
            e = tuple(R.one if i == j else R.zero for i in range(A.nrows))
            x = solve_euclidean(A, e)
            if x is None:
                return None
            cols.append(x)
        return Matrix.from_cols(R, cols, A.nrows)
    return inverse_fincomm(A)
