"""H-comodule algebras with central invariants and the Galois test.

A comodule algebra is a finite free algebra U over a base ring R together
with a Hopf algebra H over R's base field and a coaction matrix; the
extension under study is U over R*1.  The canonical map
can(x (x) y) = x y0 (x) y1 is assembled from the structure tensors and the
Galois property is decided by three routes, depending on the base:

* field base: quotient construction of U (x)_O U with O the computed
  invariants, then exact rank / inverse;
* finite-dimensional commutative base: the map is a square matrix over R,
  bijectivity via scalar extension;
* F[q] / F[q,q^-1] base: surjectivity via Smith normal form (all divisors
  units); injectivity is then granted by the classical freeness theorem
  for extensions whose invariants are central, which the surjectivity
  route quotes rather than recomputes.

A successful test returns a certificate: the table can^{-1}(1 (x) h_a),
which later feeds the translation-action machinery.  A failed test
returns a witness, preferably an element of U (x) H outside the image.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebras import FinAlgebra, Subspace, center, convolution_algebra, element_inverse, verify_algebra
from .errors import LambdaUnitNotFound, NoCertificate, UnsupportedBase
from .hopf import CheckItem, HopfReport, dual_hopf, integral_report
from .linalg import (
    Matrix, echelon_complement, expand_fincomm_matrix, inverse_field,
    kernel_field, rank_field, ring_kernel, ring_solve, smith_normal_form,
    solve_field, kron,
)
from .rings import FinCommRing, LaurentRing, PolyRing, RingMap


class ComoduleAlgebra:
    """Algebra U over R, free with a fixed basis, with a right H-coaction.

    coaction[(k, a)][j] is the coefficient of e_k (x) h_a in rho(e_j);
    the tensor index convention is (k, a) -> k * dim(H) + a.
    """

    def __init__(self, algebra, hopf, coaction, name=""):
        self.algebra = algebra
        self.ring = algebra.ring
        self.hopf = hopf
        self.coaction = coaction if isinstance(coaction, Matrix) else Matrix(self.ring, coaction)
        self.dim = algebra.dim
        self.name = name or "U"
        if self.coaction.nrows != self.dim * hopf.dim or self.coaction.ncols != self.dim:
            raise UnsupportedBase("coaction matrix shape does not match dim(U) * dim(H)")

    def rho_block(self, a):
        """n x n block B_a with rho(e_j) = sum_{k,a} B_a[k][j] e_k (x) h_a."""
        m = self.hopf.dim
        return Matrix(self.ring, [self.coaction.rows[k * m + a] for k in range(self.dim)])

    def coact_vec(self, x):
        return self.coaction.apply(x)

    def embed_field(self, c):
        return self.ring.from_field(c)

    def unit_coaction_matrix(self):
        """Matrix of x -> x (x) 1."""
        R = self.ring
        m = self.hopf.dim
        rows = []
        for k in range(self.dim):
            for a in range(m):
                rows.append([R.mul(R.from_field(self.hopf.unit[a]), R.one)
                             if k == j else R.zero for j in range(self.dim)])
        # entry (k,a),j = delta_kj * unit_H[a]
        return Matrix(R, rows)

    def hstar_action_matrix(self, f_row):
        """Action of the functional f on U: f . u = u0 f(u1)."""
        R = self.ring
        m = self.hopf.dim
        acc = Matrix.zeros(R, self.dim, self.dim)
        for a in range(m):
            c = f_row[a]
            if self.hopf.field.is_zero(c):
                continue
            acc = acc.add(self.rho_block(a).scale(R.from_field(c)))
        return acc

    def lambda_action_matrix(self):
        lam = integral_report(self.hopf).normalized_left_dual
        return self.hstar_action_matrix(lam), lam

    def map_scalars(self, rmap):
        alg = self.algebra.map_scalars(rmap)
        coaction = self.coaction.map_entries(rmap.apply, ring=rmap.target)
        return ComoduleAlgebra(alg, self.hopf, coaction, name=self.name)

    def __repr__(self):
        return f"ComoduleAlgebra({self.name}, dim={self.dim}, ring={self.ring!r})"


def trivial_extension(ring, hopf, name=""):
    """R (x) H with coaction id (x) Delta."""
    R = ring
    F = hopf.field
    m = hopf.dim
    mult = [[[R.from_field(hopf.mult[i][j][k]) for k in range(m)]
             for j in range(m)] for i in range(m)]
    unit = [R.from_field(c) for c in hopf.unit]
    alg = FinAlgebra(R, mult, unit, names=hopf.algebra.names)
    rows = []
    for k in range(m):
        for a in range(m):
            rows.append([R.from_field(hopf.comult[j][k][a]) for j in range(m)])
    return ComoduleAlgebra(alg, hopf, Matrix(R, rows), name=name or "R(x)H")


# ---------------------------------------------------------------------------
# axioms
# ---------------------------------------------------------------------------

def verify_comodule_algebra(U):
    """Counit, coassociativity, multiplicativity, centrality of invariants."""
    R = U.ring
    H = U.hopf
    F = H.field
    n, m = U.dim, H.dim
    checks = []

    # counit: sum_a rho[(k,a)][j] eps_a = delta_kj
    ok, wit = True, None
    for j in range(n):
        for k in range(n):
            s = R.sum(R.mul(U.coaction.rows[k * m + a][j], R.from_field(H.counit[a]))
                      for a in range(m))
            want = R.one if j == k else R.zero
            if not R.eq(s, want):
                ok, wit = False, f"basis {j}"
                break
        if not ok:
            break
    checks.append(CheckItem("comodule:counit", ok, wit))

    # coassociativity: (id (x) Delta) rho = (rho (x) id) rho
    ok, wit = True, None
    for j in range(n):
        lhs = {}
        for k in range(n):
            for c in range(m):
                v = U.coaction.rows[k * m + c][j]
                if R.is_zero(v):
                    continue
                for a, b, dc in H.sweedler(c):
                    key = (k, a, b)
                    lhs[key] = R.add(lhs.get(key, R.zero), R.mul(v, R.from_field(dc)))
        rhs = {}
        for l in range(n):
            for b in range(m):
                v = U.coaction.rows[l * m + b][j]
                if R.is_zero(v):
                    continue
                for k in range(n):
                    for a in range(m):
                        w = U.coaction.rows[k * m + a][l]
                        if not R.is_zero(w):
                            key = (k, a, b)
                            rhs[key] = R.add(rhs.get(key, R.zero), R.mul(w, v))
        keys = set(lhs) | set(rhs)
        if any(not R.eq(lhs.get(t, R.zero), rhs.get(t, R.zero)) for t in keys):
            ok, wit = False, f"basis {j}"
            break
    checks.append(CheckItem("comodule:coassociative", ok, wit))

    # multiplicativity: rho(xy) = rho(x) rho(y) in U (x) H
    ok, wit = True, None
    for i in range(n):
        ri = U.coact_vec(U.algebra.basis_vec(i))
        for j in range(n):
            rj = U.coact_vec(U.algebra.basis_vec(j))
            lhs = U.coact_vec(U.algebra.mul_vec(U.algebra.basis_vec(i), U.algebra.basis_vec(j)))
            rhs = _tensor_algebra_mul(U, ri, rj)
            if tuple(lhs) != tuple(rhs):
                ok, wit = False, f"pair ({i},{j})"
                break
        if not ok:
            break
    checks.append(CheckItem("comodule:multiplicative", ok, wit))

    # invariants central in U
    inv = invariants(U)
    ok, wit = True, None
    for v in inv.basis:
        L = U.algebra.left_mult_matrix(v)
        Rm = U.algebra.right_mult_matrix(v)
        if L != Rm:
            ok, wit = False, "non-central invariant"
            break
    checks.append(CheckItem("comodule:invariants-central", ok, wit))
    return HopfReport(checks)


def _tensor_algebra_mul(U, u, v):
    """Product of two vectors of U (x) H (componentwise algebra structure)."""
    R = U.ring
    H = U.hopf
    n, m = U.dim, H.dim
    out = [R.zero] * (n * m)
    for i1 in range(n):
        for a1 in range(m):
            c1 = u[i1 * m + a1]
            if R.is_zero(c1):
                continue
            for i2 in range(n):
                for a2 in range(m):
                    c2 = v[i2 * m + a2]
                    if R.is_zero(c2):
                        continue
                    c = R.mul(c1, c2)
                    urow = U.algebra.mult[i1][i2]
                    hrow = H.mult[a1][a2]
                    for k in range(n):
                        if R.is_zero(urow[k]):
                            continue
                        ck = R.mul(c, urow[k])
                        for b in range(m):
                            hc = hrow[b]
                            if not H.field.is_zero(hc):
                                out[k * m + b] = R.add(out[k * m + b],
                                                       R.mul(ck, R.from_field(hc)))
    return tuple(out)


def invariants(U):
    """Kernel of rho - ( . (x) 1) over the base ring.

    Field: plain kernel.  F[q]/F[q,q^-1]: free saturated basis via Smith
    form.  FinCommRing: base-field basis of R-coordinate vectors.
    """
    D = U.coaction.sub(U.unit_coaction_matrix())
    return Subspace(U.ring, U.dim, ring_kernel(D))


def invariants_equal_base(U):
    """Whether the invariants are exactly R*1 (scalars of the base)."""
    R = U.ring
    inv = invariants(U)
    unit = tuple(U.algebra.unit)
    if R.category in ("field", "euclidean"):
        if inv.dim != 1:
            return False
        v = inv.basis[0]
        if R.category == "field":
            return inv.contains(unit)
        # over a PID the basis vector must generate the same module as 1
        sol = ring_solve(Matrix.from_cols(R, [v], U.dim), unit)
        return sol is not None and R.is_unit(sol[0])
    # FinCommRing: the F-span of the kernel must equal span{r_b * 1}
    F = R.base_field
    flat_inv = [_flatten_fincomm(R, v) for v in inv.basis]
    scalars = []
    for b in range(R.dim):
        rb = R._basis(b)
        scalars.append(_flatten_fincomm(R, tuple(R.mul(rb, c) for c in unit)))
    if len(flat_inv) != len(scalars):
        return False
    amb = U.dim * R.dim
    M1 = Matrix.from_cols(F, flat_inv, amb)
    M2 = Matrix.from_cols(F, scalars, amb)
    return (all(solve_field(M1, v) is not None for v in scalars)
            and all(solve_field(M2, v) is not None for v in flat_inv))


def _flatten_fincomm(R, vec):
    out = []
    for x in vec:
        out.extend(x)
    return tuple(out)


# ---------------------------------------------------------------------------
# canonical map and the Galois test
# ---------------------------------------------------------------------------

def canonical_matrix(U):
    """Matrix of can on the free module U (x)_R U: (i,j) -> x = e_i (x) e_j,
    can(x) = e_i (e_j)_0 (x) (e_j)_1, rows indexed by (k, a)."""
    R = U.ring
    n, m = U.dim, U.hopf.dim
    rows = [[R.zero] * (n * n) for _ in range(n * m)]
    for j in range(n):
        for l in range(n):
            for a in range(m):
                v = U.coaction.rows[l * m + a][j]
                if R.is_zero(v):
                    continue
                for i in range(n):
                    urow = U.algebra.mult[i][l]
                    for k in range(n):
                        if not R.is_zero(urow[k]):
                            rows[k * m + a][i * n + j] = R.add(
                                rows[k * m + a][i * n + j], R.mul(v, urow[k]))
    return Matrix(R, rows)


@dataclass
class CanonicalMapData:
    """can on U (x)_O U over a field base, O = computed invariants."""
    matrix: Matrix          # quotient coordinates -> U (x) H coordinates
    dim_domain: int
    dim_codomain: int
    project: object         # U (x)_k U coords -> quotient coords
    section: object
    rank: int
    descends: bool


def canonical_map(U):
    """Quotient-route canonical map over a field base.

    U (x)_O U is realized as the quotient of U (x)_k U by the span of
    x o (x) y - x (x) o y for o running over an invariants basis; the map
    is checked to kill that span before being pushed to the quotient.
    """
    F = U.ring
    if F.category != "field":
        raise UnsupportedBase("canonical_map quotient route needs a field base")
    n, m = U.dim, U.hopf.dim
    A = U.algebra
    big = canonical_matrix(U)  # n*m x n*n over the field
    inv = invariants(U)
    rels = []
    for o in inv.basis:
        for i in range(n):
            ei_o = A.mul_vec(A.basis_vec(i), o)
            for j in range(n):
                o_ej = A.mul_vec(o, A.basis_vec(j))
                vec = [F.zero] * (n * n)
                for k in range(n):
                    if not F.is_zero(ei_o[k]):
                        vec[k * n + j] = F.add(vec[k * n + j], ei_o[k])
                for k in range(n):
                    if not F.is_zero(o_ej[k]):
                        vec[i * n + k] = F.sub(vec[i * n + k], o_ej[k])
                rels.append(tuple(vec))
    descends = all(all(F.is_zero(c) for c in big.apply(r)) for r in rels)
    project, section, qdim = echelon_complement(F, rels, n * n)
    cols = [big.apply(section(_unit_coords(F, qdim, t))) for t in range(qdim)]
    mat = Matrix.from_cols(F, cols, n * m)
    return CanonicalMapData(matrix=mat, dim_domain=qdim, dim_codomain=n * m,
                            project=project, section=section,
                            rank=rank_field(mat), descends=descends)


def _unit_coords(F, n, i):
    return tuple(F.one if j == i else F.zero for j in range(n))


@dataclass
class GaloisCertificate:
    """Table of can^{-1}(1 (x) h_a) as representatives in U (x) U coords."""
    table: list
    route: str
    detail: dict

    @property
    def ok(self):
        return True


@dataclass
class GaloisFailure:
    reason: str
    witness: str | None = None
    detail: dict | None = None

    @property
    def ok(self):
        return False


def is_galois(U):
    """Decide the Galois property of U over R*1 and certify either way."""
    R = U.ring
    if R.category == "field":
        return _is_galois_field(U)
    if isinstance(R, (PolyRing, LaurentRing)):
        return _is_galois_smith(U)
    if isinstance(R, FinCommRing):
        return _is_galois_fincomm(U)
    raise UnsupportedBase(f"no Galois route for base {R!r}")


def _one_tensor_h(U, a):
    """Coordinates of 1 (x) h_a in U (x) H."""
    R = U.ring
    n, m = U.dim, U.hopf.dim
    vec = [R.zero] * (n * m)
    for k in range(n):
        if not R.is_zero(U.algebra.unit[k]):
            vec[k * m + a] = U.algebra.unit[k]
    return tuple(vec)


def _is_galois_field(U):
    F = U.ring
    n, m = U.dim, U.hopf.dim
    data = canonical_map(U)
    if not data.descends:
        return GaloisFailure("canonical map does not descend to U (x)_O U")
    if data.dim_domain != data.dim_codomain or data.rank != data.dim_codomain:
        witness = _cokernel_witness(U, data.matrix)
        return GaloisFailure(
            f"canonical map has rank {data.rank} of {data.dim_codomain} "
            f"(domain dim {data.dim_domain})",
            witness=witness,
            detail={"rank": data.rank, "dim": data.dim_codomain})
    invmat = inverse_field(data.matrix)
    table = []
    for a in range(m):
        q = invmat.apply(_one_tensor_h(U, a))
        table.append(data.section(q))
    cert = GaloisCertificate(table=table, route="field-quotient",
                             detail={"dim_tensor": data.dim_domain})
    _check_certificate(U, cert)
    return cert


def _cokernel_witness(U, mat):
    """A basis tensor e_i (x) h_a of U (x) H outside the column span."""
    F = U.ring
    n, m = U.dim, U.hopf.dim
    for i in range(n):
        for a in range(m):
            vec = [F.zero] * (n * m)
            vec[i * m + a] = F.one
            if solve_field(mat, tuple(vec)) is None:
                uname = U.algebra.names[i]
                hname = U.hopf.algebra.names[a]
                return f"{uname} (x) {hname}"
    return None


def _is_galois_smith(U):
    R = U.ring
    n, m = U.dim, U.hopf.dim
    if not invariants_equal_base(U):
        return GaloisFailure("invariants are larger than the base ring")
    can = canonical_matrix(U)
    sf = smith_normal_form(can)
    if sf.all_units:
        table = []
        for a in range(m):
            x = _solve_with_smith(R, sf, can, _one_tensor_h(U, a))
            if x is None:
                return GaloisFailure("onto but a preimage solve failed (unexpected)")
            table.append(x)
        cert = GaloisCertificate(table=table, route="smith",
                                 detail={"divisors": [R.to_str(d) for d in sf.divisors]})
        _check_certificate(U, cert)
        return cert
    # not onto: exhibit a basis tensor with no preimage
    witness = None
    for i in range(n):
        for a in range(m):
            vec = [R.zero] * (n * m)
            vec[i * m + a] = R.one
            if _solve_with_smith(R, sf, can, tuple(vec)) is None:
                witness = f"{U.algebra.names[i]} (x) {U.hopf.algebra.names[a]}"
                break
        if witness:
            break
    return GaloisFailure(
        "canonical map is not onto over the base (non-unit Smith divisors "
        + str([R.to_str(d) for d in sf.divisors]) + ")",
        witness=witness)


def _solve_with_smith(R, sf, A, b):
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


def _is_galois_fincomm(U):
    R = U.ring
    n, m = U.dim, U.hopf.dim
    if not invariants_equal_base(U):
        return GaloisFailure("invariants are larger than the base ring")
    can = canonical_matrix(U)
    if n != m:
        return GaloisFailure(f"rank {n} over the base differs from dim H = {m}")
    F = R.base_field
    expanded = expand_fincomm_matrix(can)
    if inverse_field(expanded) is None:
        return GaloisFailure("canonical map is not bijective over the base",
                             witness=None)
    table = []
    for a in range(m):
        x = ring_solve(can, _one_tensor_h(U, a))
        if x is None:
            return GaloisFailure("bijective but preimage solve failed (unexpected)")
        table.append(x)
    cert = GaloisCertificate(table=table, route="fincomm", detail={})
    _check_certificate(U, cert)
    return cert


def _check_certificate(U, cert):
    """can applied to each table row must return 1 (x) h_a exactly."""
    can = canonical_matrix(U)
    for a, rep in enumerate(cert.table):
        got = can.apply(rep)
        want = _one_tensor_h(U, a)
        if tuple(got) != tuple(want):
            raise NoCertificate(f"certificate row {a} fails to invert can")


def find_lambda_unit(U):
    """An element x with Lambda . x = 1, Lambda the normalized dual integral."""
    M, lam = U.lambda_action_matrix()
    x = ring_solve(M, tuple(U.algebra.unit))
    if x is None:
        raise LambdaUnitNotFound("no element x with Lambda . x = 1")
    assert M.apply(x) == tuple(U.algebra.unit)
    return x


def lambda_image_equals_invariants(U):
    """Lambda . U = invariants, checked as subspaces (field base)."""
    F = U.ring
    if F.category != "field":
        raise UnsupportedBase("subspace comparison implemented over fields")
    M, _ = U.lambda_action_matrix()
    image_basis = [M.apply(U.algebra.basis_vec(j)) for j in range(U.dim)]
    image = [v for v in image_basis if any(not F.is_zero(c) for c in v)]
    inv = invariants(U)
    img_space = Subspace(F, U.dim, image)
    return (all(inv.contains(v) for v in image)
            and all(img_space.contains(v) for v in inv.basis))


# ---------------------------------------------------------------------------
# comodule maps and the smash product
# ---------------------------------------------------------------------------

def comodule_maps(U):
    """Base-field basis of {gamma: H -> U with rho gamma = (gamma (x) id) Delta}.

    Returned as matrices (dim U) x (dim H) over the base ring.  Over a
    field the basis is honest; over a FinCommRing it is an F-basis of the
    solution module.
    """
    R = U.ring
    H = U.hopf
    F = H.field
    n, m = U.dim, H.dim
    # unknowns gamma[i][a], index (i, a) -> i * m + a
    rows = []
    for a in range(m):
        for k in range(n):
            for c in range(m):
                row = [R.zero] * (n * m)
                for i in range(n):
                    v = U.coaction.rows[k * m + c][i]
                    if not R.is_zero(v):
                        row[i * m + a] = R.add(row[i * m + a], v)
                for b in range(m):
                    dc = H.comult[a][b][c]
                    if not F.is_zero(dc):
                        row[k * m + b] = R.sub(row[k * m + b], R.from_field(dc))
                rows.append(row)
    sols = ring_kernel(Matrix(R, rows))
    mats = []
    for s in sols:
        mats.append(Matrix(R, [[s[i * m + a] for a in range(m)] for i in range(n)]))
    return mats


def smash_product(U):
    """U # H^* with (u # f)(v # g) = u (f1 . v) # f2 * g.

    Basis e_i # f_a, index (i, a) -> i * m + a, structure constants over
    the base ring of U.
    """
    R = U.ring
    H = U.hopf
    Hd = dual_hopf(H)
    F = H.field
    n, m = U.dim, H.dim
    act = [U.rho_block(b) for b in range(m)]   # action of f_b on U
    d = n * m
    mult = [[[R.zero] * d for _ in range(d)] for _ in range(d)]
    for a in range(m):
        # Delta_{H*}(f_a) = sum_{b,c} mult_H[b][c][a] f_b (x) f_c
        for b in range(m):
            for c in range(m):
                dc = H.mult[b][c][a]
                if F.is_zero(dc):
                    continue
                demb = R.from_field(dc)
                for i in range(n):
                    for j in range(n):
                        # u = e_i, v = e_j: u * (f_b . v)
                        fv = act[b].col(j)
                        uprod = [R.zero] * n
                        for l in range(n):
                            if R.is_zero(fv[l]):
                                continue
                            urow = U.algebra.mult[i][l]
                            for k in range(n):
                                if not R.is_zero(urow[k]):
                                    uprod[k] = R.add(uprod[k], R.mul(fv[l], urow[k]))
                        for g in range(m):
                            # f_c * f_g in H^*
                            for t in range(m):
                                hc = Hd.algebra.mult[c][g][t]
                                if F.is_zero(hc):
                                    continue
                                hemb = R.mul(demb, R.from_field(hc))
                                for k in range(n):
                                    if not R.is_zero(uprod[k]):
                                        mult[i * m + a][j * m + g][k * m + t] = R.add(
                                            mult[i * m + a][j * m + g][k * m + t],
                                            R.mul(hemb, uprod[k]))
    unit = [R.zero] * d
    for i in range(n):
        for a in range(m):
            unit[i * m + a] = R.mul(U.algebra.unit[i], R.from_field(H.counit[a]))
    return FinAlgebra(R, mult, unit)


def smash_endo_check(U):
    """U # H^* = End over the base, via u # f -> (v -> u (f . v)).

    Builds both algebras, the comparison map, and verifies it is a
    bijective unital algebra homomorphism; failures carry a witness pair.
    """
    R = U.ring
    H = U.hopf
    n, m = U.dim, H.dim
    checks = []
    smash = smash_product(U)
    rep = verify_algebra(smash)
    checks.append(CheckItem("smash:associative-unital", rep.ok,
                            None if rep.ok else f"triple {rep.failing_triple}"))

    act = [U.rho_block(b) for b in range(m)]
    # map into End(U) = n x n matrices over R, vectorized row-major
    cols = []
    for i in range(n):
        for a in range(m):
            L = U.algebra.left_mult_matrix(U.algebra.basis_vec(i)).mul(act[a])
            cols.append(tuple(L.rows[r][c] for r in range(n) for c in range(n)))
    phi = Matrix.from_cols(R, cols, n * n)

    # endomorphism algebra structure constants: E_pq E_rs = [q=r] E_ps
    def endo_mul(x, y):
        out = [R.zero] * (n * n)
        for p in range(n):
            for q in range(n):
                c1 = x[p * n + q]
                if R.is_zero(c1):
                    continue
                for s in range(n):
                    c2 = y[q * n + s]
                    if not R.is_zero(c2):
                        out[p * n + s] = R.add(out[p * n + s], R.mul(c1, c2))
        return tuple(out)

    ok, wit = True, None
    for x in range(n * m):
        ex = tuple(R.one if t == x else R.zero for t in range(n * m))
        for y in range(n * m):
            ey = tuple(R.one if t == y else R.zero for t in range(n * m))
            lhs = phi.apply(smash.mul_vec(ex, ey))
            rhs = endo_mul(phi.apply(ex), phi.apply(ey))
            if tuple(lhs) != tuple(rhs):
                ok, wit = False, f"pair ({x},{y})"
                break
        if not ok:
            break
    checks.append(CheckItem("smash:algebra-map", ok, wit))

    ident = tuple(R.one if p == q else R.zero for p in range(n) for q in range(n))
    checks.append(CheckItem("smash:unital-map",
                            tuple(phi.apply(smash.unit)) == ident))

    if R.category == "field":
        bij = n * m == n * n and inverse_field(phi) is not None
    else:
        bij = n * m == n * n and inverse_field(expand_fincomm_matrix(phi)) is not None
    checks.append(CheckItem("smash:bijective", bij))
    return HopfReport(checks)


def equivariant_endomorphisms(U):
    """F-basis of End_{R (x) H^*}(U): R-linear maps commuting with the action."""
    R = U.ring
    m = U.hopf.dim
    n = U.dim
    rows = []
    for b in range(m):
        B = U.rho_block(b)
        # T B = B T as linear conditions on T
        for r in range(n):
            for c in range(n):
                row = [R.zero] * (n * n)
                for k in range(n):
                    row[r * n + k] = R.add(row[r * n + k], B.rows[k][c])
                    row[k * n + c] = R.sub(row[k * n + c], B.rows[r][k])
                rows.append(row)
    return ring_kernel(Matrix(R, rows))
