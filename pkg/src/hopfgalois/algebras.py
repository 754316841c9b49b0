"""Finite-rank associative algebras with unity, given by structure constants.

An algebra of dimension d over a base ring is stored as the tensor
mult[i][j][k] with e_i e_j = sum_k mult[i][j][k] e_k plus the unit column.
Axioms are never assumed: `verify_algebra` checks them exhaustively on
basis triples and the report carries the first failing witness.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch
from .linalg import Matrix, ring_kernel, ring_solve


class FinAlgebra:
    """Associative unital algebra of finite rank over a base ring."""

    def __init__(self, ring, mult, unit, names=None):
        self.ring = ring
        self.mult = tuple(tuple(tuple(col) for col in row) for row in mult)
        self.unit = tuple(unit)
        self.dim = len(self.unit)
        if len(self.mult) != self.dim or any(
                len(p) != self.dim or any(len(c) != self.dim for c in p)
                for p in self.mult):
            raise DimensionMismatch("structure tensor shape does not match dim")
        self.names = tuple(names) if names else tuple(f"e{i}" for i in range(self.dim))

    def basis_vec(self, i):
        R = self.ring
        return tuple(R.one if j == i else R.zero for j in range(self.dim))

    def mul_vec(self, x, y):
        R = self.ring
        out = [R.zero] * self.dim
        for i, xi in enumerate(x):
            if R.is_zero(xi):
                continue
            for j, yj in enumerate(y):
                if R.is_zero(yj):
                    continue
                c = R.mul(xi, yj)
                row = self.mult[i][j]
                for k in range(self.dim):
                    if not R.is_zero(row[k]):
                        out[k] = R.add(out[k], R.mul(c, row[k]))
        return tuple(out)

    def left_mult_matrix(self, x):
        cols = [self.mul_vec(x, self.basis_vec(j)) for j in range(self.dim)]
        return Matrix.from_cols(self.ring, cols, self.dim)

    def right_mult_matrix(self, x):
        cols = [self.mul_vec(self.basis_vec(j), x) for j in range(self.dim)]
        return Matrix.from_cols(self.ring, cols, self.dim)

    def map_scalars(self, rmap):
        """Push the algebra along a ring map (entrywise)."""
        mult = [[[rmap(c) for c in col] for col in row] for row in self.mult]
        unit = [rmap(c) for c in self.unit]
        return FinAlgebra(rmap.target, mult, unit, names=self.names)

    def __repr__(self):
        return f"FinAlgebra(dim={self.dim}, ring={self.ring!r})"


@dataclass
class AlgebraReport:
    associative: bool
    unital: bool
    commutative: bool
    failing_triple: tuple | None = None

    @property
    def ok(self):
        return self.associative and self.unital


def verify_algebra(A):
    """Exhaustive associativity/unit check on basis triples."""
    R = A.ring
    d = A.dim
    failing = None
    associative = True
    for i in range(d):
        if not associative:
            break
        for j in range(d):
            if not associative:
                break
            ij = A.mul_vec(A.basis_vec(i), A.basis_vec(j))
            for k in range(d):
                lhs = A.mul_vec(ij, A.basis_vec(k))
                rhs = A.mul_vec(A.basis_vec(i), A.mul_vec(A.basis_vec(j), A.basis_vec(k)))
                if lhs != rhs:
                    associative = False
                    failing = (i, j, k)
                    break
    unital = all(
        A.mul_vec(A.unit, A.basis_vec(i)) == A.basis_vec(i)
        and A.mul_vec(A.basis_vec(i), A.unit) == A.basis_vec(i)
        for i in range(d))
    commutative = all(
        A.mul_vec(A.basis_vec(i), A.basis_vec(j)) == A.mul_vec(A.basis_vec(j), A.basis_vec(i))
        for i in range(d) for j in range(i + 1, d))
    return AlgebraReport(associative, unital, commutative, failing)


@dataclass
class Subspace:
    """Subspace (field case) or free submodule (PID case) of R^ambient."""
    ring: object
    ambient: int
    basis: list

    @property
    def dim(self):
        return len(self.basis)

    def matrix(self):
        return Matrix.from_cols(self.ring, self.basis, self.ambient)

    def contains(self, vec):
        if not self.basis:
            return all(self.ring.is_zero(x) for x in vec)
        return ring_solve(self.matrix(), vec) is not None

    def coords_of(self, vec):
        return ring_solve(self.matrix(), vec)

    def equals(self, other):
        return (self.ambient == other.ambient
                and all(other.contains(v) for v in self.basis)
                and all(self.contains(v) for v in other.basis))


def center(A):
    """Basis of the center {z : z x = x z for all x}.

    Over a field this is a plain kernel; over F[q]/F[q,q^-1] a saturated
    free module via Smith form; over a FinCommRing a base-field basis of
    coordinate vectors.
    """
    mats = []
    for i in range(A.dim):
        e = A.basis_vec(i)
        mats.append(A.left_mult_matrix(e).sub(A.right_mult_matrix(e)))
    stacked = Matrix(A.ring, [row for m in mats for row in m.rows])
    return Subspace(A.ring, A.dim, ring_kernel(stacked))


def element_inverse(A, u):
    """Two-sided inverse of u, or None.  Left and right systems are solved
    separately and compared (they agree when both exist)."""
    left = ring_solve(A.left_mult_matrix(u), A.unit)    # u * x = 1
    if left is None:
        return None
    right = ring_solve(A.right_mult_matrix(u), A.unit)  # x * u = 1
    if right is None:
        return None
    if A.mul_vec(left, u) != tuple(A.unit) or A.mul_vec(u, left) != tuple(A.unit):
        # one-sided inverse only; in a finite-rank algebra over a field this
        # cannot happen, but the check keeps the contract honest over rings
        return None
    return left


# ---------------------------------------------------------------------------
# coalgebras and convolution
# ---------------------------------------------------------------------------

class Coalgebra:
    """Coassociative counital coalgebra over a field.

    comult[i][j][k]: Delta(c_i) = sum_{j,k} comult[i][j][k] c_j (x) c_k.
    """

    def __init__(self, field, comult, counit):
        self.field = field
        self.comult = tuple(tuple(tuple(col) for col in row) for row in comult)
        self.counit = tuple(counit)
        self.dim = len(self.counit)

    def sweedler(self, i):
        """Nonzero terms (j, k, coeff) of Delta(c_i)."""
        F = self.field
        for j in range(self.dim):
            for k in range(self.dim):
                c = self.comult[i][j][k]
                if not F.is_zero(c):
                    yield j, k, c


def tensor_coalgebra(C1, C2):
    """C1 (x) C2 with Delta(x (x) y) = (x1 (x) y1) (x) (x2 (x) y2)."""
    F = C1.field
    d1, d2 = C1.dim, C2.dim
    d = d1 * d2
    comult = [[[F.zero for _ in range(d)] for _ in range(d)] for _ in range(d)]
    for i1 in range(d1):
        for j1, k1, c1 in C1.sweedler(i1):
            for i2 in range(d2):
                for j2, k2, c2 in C2.sweedler(i2):
                    row = i1 * d2 + i2
                    comult[row][j1 * d2 + j2][k1 * d2 + k2] = F.add(
                        comult[row][j1 * d2 + j2][k1 * d2 + k2], F.mul(c1, c2))
    counit = [F.mul(C1.counit[i1], C2.counit[i2])
              for i1 in range(d1) for i2 in range(d2)]
    return Coalgebra(F, comult, counit)


def convolution_algebra(C, A):
    """Hom(C, A) with (f * g)(c) = f(c1) g(c2), as a FinAlgebra over A.ring.

    Basis phi_(i,x): c_i -> a_x, index (i, x) -> i * dim(A) + x.  A map f
    with f(c_i) = sum_x f[i][x] a_x has coordinates laid out the same way.
    """
    R = A.ring
    F = C.field
    dc, da = C.dim, A.dim
    d = dc * da
    mult = [[[R.zero for _ in range(d)] for _ in range(d)] for _ in range(d)]
    for k in range(dc):
        for i, j, dcoef in C.sweedler(k):
            demb = R.from_field(dcoef)
            for x in range(da):
                for y in range(da):
                    arow = A.mult[x][y]
                    for z in range(da):
                        if R.is_zero(arow[z]):
                            continue
                        r = i * da + x
                        c = j * da + y
                        t = k * da + z
                        mult[r][c][t] = R.add(mult[r][c][t],
                                              R.mul(demb, arow[z]))
    unit = [R.zero] * d
    for k in range(dc):
        ek = R.from_field(C.counit[k])
        if R.is_zero(ek):
            continue
        for z in range(da):
            unit[k * da + z] = R.add(unit[k * da + z], R.mul(ek, A.unit[z]))
    return FinAlgebra(R, mult, unit)


def hom_coords_from_matrix(M):
    """Flatten a dim(A) x dim(C) map-matrix into convolution coordinates."""
    da, dc = M.nrows, M.ncols
    return tuple(M.rows[x][i] for i in range(dc) for x in range(da))


def hom_matrix_from_coords(ring, coords, dc, da):
    return Matrix(ring, [[coords[i * da + x] for i in range(dc)] for x in range(da)])


def convolution_inverse(C, A, fmat):
    """Convolution inverse of the map given by matrix fmat, or None."""
    conv = convolution_algebra(C, A)
    inv = element_inverse(conv, hom_coords_from_matrix(fmat))
    if inv is None:
        return None
    return hom_matrix_from_coords(A.ring, inv, C.dim, A.dim)
