"""Finite-dimensional Hopf algebras over an exact field.

A Hopf algebra is a FinAlgebra over a field together with a
comultiplication tensor, counit row and antipode matrix.  Nothing is
assumed: `verify_hopf` checks all five axiom families exhaustively on
basis elements.  Duals are computed by transposing tensors, integrals by
solving linear systems, and the standard gallery (group algebras, their
duals, the 4-dimensional algebra with a group-like and a skew-primitive
generator) is built from multiplication tables.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebras import Coalgebra, FinAlgebra, convolution_inverse, element_inverse, verify_algebra
from .errors import InvalidGroupTable
from .linalg import Matrix, kernel_field, solve_field
from .rings import QQ


class HopfAlgebra:
    """FinAlgebra over a field + comult tensor, counit row, antipode matrix.

    comult[i][j][k]: Delta(e_i) = sum Delta[i][j][k] e_j (x) e_k.
    antipode: S(e_j) = sum_i S[i][j] e_i (column convention).
    """

    def __init__(self, algebra, comult, counit, antipode, name=""):
        self.algebra = algebra
        self.field = algebra.ring
        self.dim = algebra.dim
        self.comult = tuple(tuple(tuple(col) for col in row) for row in comult)
        self.counit = tuple(counit)
        self.antipode = antipode if isinstance(antipode, Matrix) else Matrix(self.field, antipode)
        self.name = name or "H"

    @property
    def mult(self):
        return self.algebra.mult

    @property
    def unit(self):
        return self.algebra.unit

    def coalgebra(self):
        return Coalgebra(self.field, self.comult, self.counit)

    def sweedler(self, i):
        return self.coalgebra().sweedler(i)

    def comult_vec(self, x):
        """Delta(x) as a vector in H (x) H coordinates (row-major pairs)."""
        F = self.field
        d = self.dim
        out = [F.zero] * (d * d)
        for i, xi in enumerate(x):
            if F.is_zero(xi):
                continue
            for j in range(d):
                for k in range(d):
                    c = self.comult[i][j][k]
                    if not F.is_zero(c):
                        out[j * d + k] = F.add(out[j * d + k], F.mul(xi, c))
        return tuple(out)

    def counit_of(self, x):
        F = self.field
        return F.sum(F.mul(a, b) for a, b in zip(self.counit, x))

    def antipode_vec(self, x):
        return self.antipode.apply(x)

    def __repr__(self):
        return f"HopfAlgebra({self.name}, dim={self.dim})"


@dataclass
class CheckItem:
    name: str
    passed: bool
    witness: str | None = None


@dataclass
class HopfReport:
    checks: list

    @property
    def ok(self):
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]


def verify_hopf(H):
    """All five axiom families, checked exhaustively on basis elements."""
    F = H.field
    A = H.algebra
    d = H.dim
    checks = []

    rep = verify_algebra(A)
    checks.append(CheckItem("algebra:associative", rep.associative,
                            None if rep.associative else f"triple {rep.failing_triple}"))
    checks.append(CheckItem("algebra:unital", rep.unital))

    # coassociativity: (Delta (x) id) Delta = (id (x) Delta) Delta
    ok, wit = True, None
    for i in range(d):
        lhs = {}
        rhs = {}
        for j, k, c in H.sweedler(i):
            for j1, j2, c2 in H.sweedler(j):
                key = (j1, j2, k)
                lhs[key] = F.add(lhs.get(key, F.zero), F.mul(c, c2))
            for k1, k2, c2 in H.sweedler(k):
                key = (j, k1, k2)
                rhs[key] = F.add(rhs.get(key, F.zero), F.mul(c, c2))
        keys = set(lhs) | set(rhs)
        if any(not F.eq(lhs.get(t, F.zero), rhs.get(t, F.zero)) for t in keys):
            ok, wit = False, f"basis {i}"
            break
    checks.append(CheckItem("coalgebra:coassociative", ok, wit))

    # counit law
    ok, wit = True, None
    for i in range(d):
        left = [F.zero] * d
        right = [F.zero] * d
        for j, k, c in H.sweedler(i):
            left[k] = F.add(left[k], F.mul(c, H.counit[j]))
            right[j] = F.add(right[j], F.mul(c, H.counit[k]))
        e = A.basis_vec(i)
        if tuple(left) != e or tuple(right) != e:
            ok, wit = False, f"basis {i}"
            break
    checks.append(CheckItem("coalgebra:counit", ok, wit))

    # Delta and counit are algebra maps
    ok, wit = True, None
    for i in range(d):
        for j in range(d):
            prod = A.mul_vec(A.basis_vec(i), A.basis_vec(j))
            lhs = H.comult_vec(prod)
            rhs = _tensor_mul(H, H.comult_vec(A.basis_vec(i)), H.comult_vec(A.basis_vec(j)))
            if lhs != rhs:
                ok, wit = False, f"pair ({i},{j})"
                break
            lc = H.counit_of(prod)
            rc = F.mul(H.counit_of(A.basis_vec(i)), H.counit_of(A.basis_vec(j)))
            if not F.eq(lc, rc):
                ok, wit = False, f"counit pair ({i},{j})"
                break
        if not ok:
            break
    if ok:
        if H.comult_vec(A.unit) != _tensor_vec(H, A.unit, A.unit):
            ok, wit = False, "Delta(1)"
        elif not F.is_one(H.counit_of(A.unit)):
            ok, wit = False, "counit(1)"
    checks.append(CheckItem("bialgebra:maps", ok, wit))

    # antipode: m (S (x) id) Delta = unit . counit = m (id (x) S) Delta
    ok, wit = True, None
    for i in range(d):
        left = [F.zero] * d
        right = [F.zero] * d
        for j, k, c in H.sweedler(i):
            sj = H.antipode_vec(A.basis_vec(j))
            sk = H.antipode_vec(A.basis_vec(k))
            lterm = A.mul_vec(sj, A.basis_vec(k))
            rterm = A.mul_vec(A.basis_vec(j), sk)
            for t in range(d):
                left[t] = F.add(left[t], F.mul(c, lterm[t]))
                right[t] = F.add(right[t], F.mul(c, rterm[t]))
        target = tuple(F.mul(H.counit[i], u) for u in A.unit)
        if tuple(left) != target or tuple(right) != target:
            ok, wit = False, f"basis {i}"
            break
    checks.append(CheckItem("antipode:identity", ok, wit))
    return HopfReport(checks)


def _tensor_vec(H, x, y):
    F = H.field
    d = H.dim
    return tuple(F.mul(x[i], y[j]) for i in range(d) for j in range(d))


def _tensor_mul(H, u, v):
    """Product in H (x) H of two tensor vectors."""
    F = H.field
    A = H.algebra
    d = H.dim
    out = [F.zero] * (d * d)
    for i1 in range(d):
        for j1 in range(d):
            c1 = u[i1 * d + j1]
            if F.is_zero(c1):
                continue
            for i2 in range(d):
                for j2 in range(d):
                    c2 = v[i2 * d + j2]
                    if F.is_zero(c2):
                        continue
                    c = F.mul(c1, c2)
                    left = A.mult[i1][i2]
                    right = A.mult[j1][j2]
                    for k1 in range(d):
                        if F.is_zero(left[k1]):
                            continue
                        ck = F.mul(c, left[k1])
                        for k2 in range(d):
                            if not F.is_zero(right[k2]):
                                out[k1 * d + k2] = F.add(out[k1 * d + k2],
                                                         F.mul(ck, right[k2]))
    return tuple(out)


def dual_hopf(H):
    """The dual Hopf algebra on the dual basis.

    Multiplication of the dual is the transpose of Delta, comultiplication
    the transpose of multiplication, antipode the transpose of S.  The
    double dual has identical structure constants in the fixed basis.
    """
    F = H.field
    d = H.dim
    mult = [[[H.comult[k][a][b] for k in range(d)] for b in range(d)] for a in range(d)]
    unit = list(H.counit)
    comult = [[[H.mult[i][j][a] for j in range(d)] for i in range(d)] for a in range(d)]
    counit = list(H.unit)
    antipode = H.antipode.transpose()
    alg = FinAlgebra(F, mult, unit, names=tuple(f"{n}*" for n in H.algebra.names))
    return HopfAlgebra(alg, comult, counit, antipode, name=f"{H.name}*")


# ---------------------------------------------------------------------------
# integrals
# ---------------------------------------------------------------------------

@dataclass
class IntegralReport:
    left: list
    right: list
    dual_left: list
    dual_right: list
    unimodular: bool
    cosemisimple: bool
    antipode_order: int | None
    normalized_left_dual: tuple | None

    @property
    def dims(self):
        return (len(self.left), len(self.right), len(self.dual_left), len(self.dual_right))


def _integral_space(H, side):
    """Basis of {x : h x = counit(h) x} (left) or the mirrored right space."""
    F = H.field
    A = H.algebra
    rows = []
    for i in range(A.dim):
        e = A.basis_vec(i)
        M = A.left_mult_matrix(e) if side == "left" else A.right_mult_matrix(e)
        shifted = M.sub(Matrix.identity(F, A.dim).scale(H.counit[i]))
        rows.extend(shifted.rows)
    return kernel_field(Matrix(F, rows))


def _normalize_integral(F, vec, value_at_one=None):
    """First nonzero coordinate 1; rescale to Lambda(1)=1 when supplied."""
    lead = next((c for c in vec if not F.is_zero(c)), None)
    if lead is None:
        return vec
    scaled = tuple(F.div(c, lead) for c in vec)
    if value_at_one is not None and not F.is_zero(value_at_one):
        v1 = F.div(value_at_one, lead)
        scaled = tuple(F.div(c, v1) for c in scaled)
    return scaled


def antipode_order(H, cap=None):
    """Multiplicative order of the antipode matrix, or None past the cap."""
    if cap is None:
        cap = 4 * H.dim * H.dim
    F = H.field
    I = Matrix.identity(F, H.dim)
    P = H.antipode
    for k in range(1, cap + 1):
        if P == I:
            return k
        P = P.mul(H.antipode)
    return None


def integral_report(H):
    F = H.field
    Hd = dual_hopf(H)
    left = _integral_space(H, "left")
    right = _integral_space(H, "right")
    dleft = _integral_space(Hd, "left")
    dright = _integral_space(Hd, "right")

    # unimodular: left and right integral spaces of H coincide
    unimodular = _same_span(F, left, right, H.dim)

    # cosemisimple (Sweedler): a left integral of the dual evaluates
    # nontrivially at 1
    cosemi = False
    norm = None
    if dleft:
        lam = dleft[0]
        val = F.sum(F.mul(c, u) for c, u in zip(lam, H.unit))
        cosemi = not F.is_zero(val)
        if F.char == 0 and cosemi:
            norm = _normalize_integral(F, lam, value_at_one=val)
        else:
            norm = _normalize_integral(F, lam)
    return IntegralReport(
        left=left, right=right, dual_left=dleft, dual_right=dright,
        unimodular=unimodular, cosemisimple=cosemi,
        antipode_order=antipode_order(H),
        normalized_left_dual=norm)


def _same_span(F, basis1, basis2, ambient):
    if len(basis1) != len(basis2):
        return False
    if not basis1:
        return True
    M1 = Matrix.from_cols(F, basis1, ambient)
    M2 = Matrix.from_cols(F, basis2, ambient)
    return (all(solve_field(M1, v) is not None for v in basis2)
            and all(solve_field(M2, v) is not None for v in basis1))


def antipode_antihom_check(H):
    """S(ab) = S(b) S(a) on all basis pairs."""
    A = H.algebra
    for i in range(H.dim):
        for j in range(H.dim):
            lhs = H.antipode_vec(A.mul_vec(A.basis_vec(i), A.basis_vec(j)))
            rhs = A.mul_vec(H.antipode_vec(A.basis_vec(j)), H.antipode_vec(A.basis_vec(i)))
            if lhs != rhs:
                return False
    return True


def hopf_convolution_inverse(H, target_algebra, fmat):
    """Convolution inverse of a map H -> A, or None."""
    return convolution_inverse(H.coalgebra(), target_algebra, fmat)


# ---------------------------------------------------------------------------
# standard constructors
# ---------------------------------------------------------------------------

class GroupTable:
    """Finite group by multiplication table of element indices."""

    def __init__(self, table, names=None):
        self.table = tuple(tuple(row) for row in table)
        self.n = len(self.table)
        if any(len(r) != self.n for r in self.table):
            raise InvalidGroupTable("table is not square")
        self.names = tuple(names) if names else tuple(f"g{i}" for i in range(self.n))
        self.identity = self._find_identity()
        self.inverse = self._find_inverses()
        self._check()

    def _find_identity(self):
        for e in range(self.n):
            if all(self.table[e][x] == x and self.table[x][e] == x for x in range(self.n)):
                return e
        raise InvalidGroupTable("no identity element")

    def _find_inverses(self):
        inv = [None] * self.n
        for x in range(self.n):
            for y in range(self.n):
                if self.table[x][y] == self.identity and self.table[y][x] == self.identity:
                    inv[x] = y
                    break
            if inv[x] is None:
                raise InvalidGroupTable(f"element {x} has no inverse")
        return tuple(inv)

    def _check(self):
        rng = range(self.n)
        for i in rng:
            if sorted(self.table[i]) != list(rng) or sorted(r[i] for r in self.table) != list(rng):
                raise InvalidGroupTable("table rows/columns are not permutations")
        for i in rng:
            for j in rng:
                for k in rng:
                    if self.table[self.table[i][j]][k] != self.table[i][self.table[j][k]]:
                        raise InvalidGroupTable(f"associativity fails at ({i},{j},{k})")

    def mul(self, i, j):
        return self.table[i][j]


def cyclic_group(n):
    return GroupTable([[(i + j) % n for j in range(n)] for i in range(n)],
                      names=[f"t^{i}" if i > 1 else ("t" if i == 1 else "1") for i in range(n)])


def symmetric_group(n):
    import itertools
    perms = sorted(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(p[q[i]] for i in range(n))] for q in perms] for p in perms]
    return GroupTable(table, names=[str(p) for p in perms])


def dihedral_group(n):
    """Symmetries of the n-gon: elements (r^i, s^j), j in {0,1}."""
    elems = [(i, j) for j in range(2) for i in range(n)]
    index = {e: k for k, e in enumerate(elems)}

    def mul(a, b):
        i1, j1 = a
        i2, j2 = b
        if j1 == 0:
            return ((i1 + i2) % n, j2)
        return ((i1 - i2) % n, 1 - j2)
    table = [[index[mul(a, b)] for b in elems] for a in elems]
    return GroupTable(table, names=[f"r{i}s{j}" for (i, j) in elems])


def klein_group():
    table = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]]
    return GroupTable(table, names=["e", "a", "b", "c"])


def group_algebra(G, field=QQ):
    """kG: Delta(g) = g (x) g, counit 1, antipode g -> g^-1."""
    F = field
    n = G.n
    mult = [[[F.one if G.mul(i, j) == k else F.zero for k in range(n)]
             for j in range(n)] for i in range(n)]
    unit = [F.one if i == G.identity else F.zero for i in range(n)]
    comult = [[[F.one if (j == i and k == i) else F.zero for k in range(n)]
               for j in range(n)] for i in range(n)]
    counit = [F.one] * n
    antipode = Matrix(F, [[F.one if G.inverse[j] == i else F.zero for j in range(n)]
                          for i in range(n)])
    alg = FinAlgebra(F, mult, unit, names=G.names)
    return HopfAlgebra(alg, comult, counit, antipode, name=f"k[{'G' if n > 2 else 'Z2'}]")


def dual_group_algebra(G, field=QQ):
    """Functions on G with pointwise product; the dual of the group algebra."""
    return dual_hopf(group_algebra(G, field))


def sweedler_h4(field=QQ):
    """Basis 1, g, x, gx with g^2 = 1, x^2 = 0, x g = -g x;
    Delta(g) = g (x) g, Delta(x) = x (x) 1 + g (x) x, S(g) = g, S(x) = -gx."""
    F = field
    names = ("1", "g", "x", "gx")
    I, Gg, X, GX = range(4)
    Z = F.zero
    O = F.one

    def vec(**kw):
        v = [Z] * 4
        for key, val in kw.items():
            v[{"i": I, "g": Gg, "x": X, "gx": GX}[key]] = val
        return tuple(v)

    prod = {}
    prod[(I, I)] = vec(i=O)
    prod[(I, Gg)] = vec(g=O)
    prod[(I, X)] = vec(x=O)
    prod[(I, GX)] = vec(gx=O)
    prod[(Gg, I)] = vec(g=O)
    prod[(Gg, Gg)] = vec(i=O)
    prod[(Gg, X)] = vec(gx=O)
    prod[(Gg, GX)] = vec(x=O)
    prod[(X, I)] = vec(x=O)
    prod[(X, Gg)] = vec(gx=F.neg(O))       # x g = -g x
    prod[(X, X)] = vec()
    prod[(X, GX)] = vec()
    prod[(GX, I)] = vec(gx=O)
    prod[(GX, Gg)] = vec(x=F.neg(O))       # gx g = g (xg) = -x
    prod[(GX, X)] = vec()                  # g x x = 0
    prod[(GX, GX)] = vec()
    mult = [[[prod[(i, j)][k] for k in range(4)] for j in range(4)] for i in range(4)]
    unit = vec(i=O)
    comult = [[[Z] * 4 for _ in range(4)] for _ in range(4)]
    comult[I][I][I] = O
    comult[Gg][Gg][Gg] = O
    # Delta(x) = x (x) 1 + g (x) x
    comult[X][X][I] = O
    comult[X][Gg][X] = O
    # Delta(gx) = Delta(g) Delta(x) = gx (x) g + 1 (x) gx
    comult[GX][GX][Gg] = O
    comult[GX][I][GX] = O
    counit = (O, O, Z, Z)
    S = [[Z] * 4 for _ in range(4)]
    S[I][I] = O
    S[Gg][Gg] = O
    S[GX][X] = F.neg(O)   # S(x) = -gx
    S[X][GX] = O          # S(gx) = S(x) S(g) = -gx g = x
    alg = FinAlgebra(F, mult, unit, names=names)
    return HopfAlgebra(alg, comult, counit, Matrix(F, S), name="H4")


def make_standard(name, field=QQ, group=None, n=None):
    """Named constructors used by the CLI and the gallery."""
    if name == "group_algebra":
        return group_algebra(group, field)
    if name == "dual_group_algebra":
        return dual_group_algebra(group, field)
    if name == "sweedler_h4":
        return sweedler_h4(field)
    raise InvalidGroupTable(f"unknown standard Hopf algebra {name!r}")
