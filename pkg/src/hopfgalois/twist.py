"""Two-cochains, twisted products and cleaving maps.

The twisted product R_sigma[H] puts an algebra structure on R (x) H by

    a (x) g . b (x) h  =  a b sigma(h1, g1) (x) h2 g2

(the source convention, kept verbatim and locked by a regression test;
`convention="standard"` switches to sigma(g1, h1) (x) g2 h2).  The
associativity identities and the normalization are checked exhaustively
by `is_cocycle`; convolution invertibility decides whether the result is
a genuine twisted product or one of the boundary cases that is an
H-comodule algebra without being Galois.

Cleaving maps gamma: H -> U are found by searching the comodule-map
space for convolution-invertible elements.  The search is three-staged:
deterministic candidates, seeded random small-coefficient combinations,
then an exact evaluation-grid test of the convolution determinant
polynomial which can *prove* absence.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .algebras import (
    FinAlgebra, convolution_algebra, convolution_inverse,
    hom_coords_from_matrix, tensor_coalgebra,
)
from .comodule import ComoduleAlgebra, comodule_maps
from .errors import AssociativityFailure, RetryBudgetExhausted
from .hopf import cyclic_group, group_algebra, integral_report, klein_group
from .linalg import Matrix, det_field, ring_is_invertible
from .rings import QQ


@dataclass
class TwoCochain:
    hopf: object
    ring: object
    sigma: Matrix  # sigma[a][b] = sigma(h_a (x) h_b)

    def value(self, a, b):
        return self.sigma.rows[a][b]


@dataclass
class CocycleReport:
    associativity_identities: bool
    normalization: bool
    convolution_invertible: bool | None
    witness: str | None = None

    @property
    def is_cocycle(self):
        return (self.associativity_identities and self.normalization
                and bool(self.convolution_invertible))


def is_cocycle(sigma):
    """Check the two associativity identities, normalization, and
    convolution invertibility of sigma: H (x) H -> R."""
    H = sigma.hopf
    R = sigma.ring
    F = H.field
    m = H.dim
    emb = R.from_field

    ok_id, wit = True, None
    for ha in range(m):
        for ga in range(m):
            for ta in range(m):
                lhs = R.zero
                # sigma(h1 (x) g1) sigma(h2 g2 (x) t)
                for h1, h2, c1 in H.sweedler(ha):
                    for g1, g2, c2 in H.sweedler(ga):
                        c = F.mul(c1, c2)
                        s1 = sigma.value(h1, g1)
                        if R.is_zero(s1):
                            continue
                        for w in range(m):
                            mc = H.mult[h2][g2][w]
                            if F.is_zero(mc):
                                continue
                            lhs = R.add(lhs, R.mul(R.mul(emb(F.mul(c, mc)), s1),
                                                   sigma.value(w, ta)))
                rhs = R.zero
                # sigma(g1 (x) t1) sigma(h (x) g2 t2)
                for g1, g2, c2 in H.sweedler(ga):
                    for t1, t2, c3 in H.sweedler(ta):
                        c = F.mul(c2, c3)
                        s1 = sigma.value(g1, t1)
                        if R.is_zero(s1):
                            continue
                        for w in range(m):
                            mc = H.mult[g2][t2][w]
                            if F.is_zero(mc):
                                continue
                            rhs = R.add(rhs, R.mul(R.mul(emb(F.mul(c, mc)), s1),
                                                   sigma.value(ha, w)))
                if not R.eq(lhs, rhs):
                    ok_id, wit = False, f"triple ({ha},{ga},{ta})"
                    break
            if not ok_id:
                break
        if not ok_id:
            break

    ok_norm = True
    for a in range(m):
        left = R.sum(R.mul(emb(H.unit[b]), sigma.value(a, b)) for b in range(m))
        right = R.sum(R.mul(emb(H.unit[b]), sigma.value(b, a)) for b in range(m))
        want = emb(H.counit[a])
        if not (R.eq(left, want) and R.eq(right, want)):
            ok_norm = False
            break

    invertible = None
    if R.category in ("field", "euclidean", "fincomm"):
        C2 = tensor_coalgebra(H.coalgebra(), H.coalgebra())
        # sigma as a map H (x) H -> R, R viewed as the rank-1 algebra
        Ralg = FinAlgebra(R, (((R.one,),),), (R.one,))
        fmat = Matrix(R, [[sigma.value(i // m, i % m) for i in range(m * m)]])
        invertible = convolution_inverse(C2, Ralg, fmat) is not None
    return CocycleReport(ok_id, ok_norm, invertible, wit)


def twisted_product(ring, hopf, sigma, convention="paper", check=True):
    """The algebra R_sigma[H] with coaction id (x) Delta.

    Raises AssociativityFailure when the identities of the cochain fail;
    convolution invertibility is *not* required (the boundary cases are
    legitimate comodule algebras and the Galois test will flag them).
    """
    R = ring
    H = hopf
    F = H.field
    m = H.dim
    emb = R.from_field
    if check:
        rep = is_cocycle(sigma)
        if not (rep.associativity_identities and rep.normalization):
            raise AssociativityFailure(
                f"cochain fails the associativity identities ({rep.witness})")
    mult = [[[R.zero] * m for _ in range(m)] for _ in range(m)]
    for a in range(m):        # left factor 1 (x) h_a
        for b in range(m):    # right factor 1 (x) h_b
            if convention == "paper":
                # sigma(h1, g1) (x) h2 g2 with g = h_a, h = h_b
                for h1, h2, c1 in H.sweedler(b):
                    for g1, g2, c2 in H.sweedler(a):
                        s = sigma.value(h1, g1)
                        if R.is_zero(s):
                            continue
                        c = F.mul(c1, c2)
                        for k in range(m):
                            mc = H.mult[h2][g2][k]
                            if not F.is_zero(mc):
                                mult[a][b][k] = R.add(
                                    mult[a][b][k],
                                    R.mul(emb(F.mul(c, mc)), s))
            else:
                # sigma(g1, h1) (x) g2 h2
                for g1, g2, c1 in H.sweedler(a):
                    for h1, h2, c2 in H.sweedler(b):
                        s = sigma.value(g1, h1)
                        if R.is_zero(s):
                            continue
                        c = F.mul(c1, c2)
                        for k in range(m):
                            mc = H.mult[g2][h2][k]
                            if not F.is_zero(mc):
                                mult[a][b][k] = R.add(
                                    mult[a][b][k],
                                    R.mul(emb(F.mul(c, mc)), s))
    unit = [emb(c) for c in H.unit]
    alg = FinAlgebra(R, mult, unit, names=H.algebra.names)
    rows = []
    for k in range(m):
        for a in range(m):
            rows.append([emb(H.comult[j][k][a]) for j in range(m)])
    return ComoduleAlgebra(alg, H, Matrix(R, rows), name="R_sigma[H]")


def qzn_cocycle(n, ring, qvalue=None, field=QQ):
    """sigma(t^k (x) t^m) = 1 if k+m < n else q on the cyclic group algebra.

    Default ring is F[q, q^-1] with qvalue its generator; pass any ring
    and element for the specialized members of the family.
    """
    H = group_algebra(cyclic_group(n), field)
    R = ring
    q = qvalue if qvalue is not None else R.gen
    rows = [[R.one if a + b < n else q for b in range(n)] for a in range(n)]
    return TwoCochain(H, R, Matrix(R, rows))


def klein_quaternion_cocycle(field=QQ):
    """Sign table on the Klein four group whose twisted product is the
    quaternion algebra: with grading units 1, i, j, k the coefficient
    table tau(g, h) of u_g u_h = tau(g, h) u_{gh} is transposed into the
    source's argument order."""
    F = field
    H = group_algebra(klein_group(), F)
    one, neg = F.one, F.neg(F.one)
    # order of elements: e, a, b, c; u_a = i, u_b = j, u_c = k
    tau = [
        [one, one, one, one],
        [one, neg, one, neg],   # i*i=-1, i*j=k, i*k=-j
        [one, neg, neg, one],   # j*i=-k, j*j=-1, j*k=i
        [one, one, neg, neg],   # k*i=j,  k*j=-i, k*k=-1
    ]
    sigma = [[tau[y][x] for y in range(4)] for x in range(4)]
    return TwoCochain(H, F, Matrix(F, sigma))


def standard_cocycle(name, **kw):
    if name == "qzn":
        return qzn_cocycle(**kw)
    if name == "klein_quaternion":
        return klein_quaternion_cocycle(**kw)
    raise ValueError(f"unknown standard cocycle {name!r}")


# ---------------------------------------------------------------------------
# cleaving maps
# ---------------------------------------------------------------------------

@dataclass
class CleavingMap:
    comodule: ComoduleAlgebra
    gamma: Matrix       # dim(U) x dim(H) over the base ring
    gamma_inv: Matrix   # convolution inverse

    def verify(self):
        U = self.comodule
        ok_comod = _is_comodule_map(U, self.gamma)
        inv = convolution_inverse(U.hopf.coalgebra(), U.algebra, self.gamma)
        ok_inv = inv is not None and inv == self.gamma_inv
        return ok_comod and ok_inv


def _is_comodule_map(U, gamma):
    R = U.ring
    H = U.hopf
    F = H.field
    n, m = U.dim, H.dim
    for a in range(m):
        lhs = U.coact_vec(gamma.col(a))
        rhs = [R.zero] * (n * m)
        for b, c, dc in H.sweedler(a):
            col = gamma.col(b)
            for k in range(n):
                if not R.is_zero(col[k]):
                    rhs[k * m + c] = R.add(rhs[k * m + c],
                                           R.mul(col[k], R.from_field(dc)))
        if tuple(lhs) != tuple(rhs):
            return False
    return True


def cleftness_witness(U, seed=0, budget=64, grid_budget=200_000):
    """Search for a convolution-invertible comodule map gamma: H -> U.

    Returns a CleavingMap, or None when absence is *certified* (the
    comodule-map space is zero, or the convolution determinant vanishes
    identically on a full evaluation grid).  Raises RetryBudgetExhausted
    when the search is inconclusive.
    """
    R = U.ring
    H = U.hopf
    F = H.field
    basis = comodule_maps(U)
    if not basis:
        return None
    s = len(basis)
    conv = convolution_algebra(H.coalgebra(), U.algebra)

    def try_gamma(gmat):
        inv = convolution_inverse(H.coalgebra(), U.algebra, gmat)
        if inv is None:
            return None
        return CleavingMap(U, gmat, inv)

    # deterministic candidates: each basis element, then their sum
    candidates = list(basis)
    total = basis[0]
    for b in basis[1:]:
        total = total.add(b)
    candidates.append(total)
    for g in candidates:
        got = try_gamma(g)
        if got is not None:
            return got

    rng = random.Random(seed)
    for _ in range(budget):
        g = Matrix.zeros(R, U.dim, H.dim)
        for b in basis:
            c = rng.randint(-2, 2)
            if c:
                g = g.add(b.scale(R.from_int(c)))
        got = try_gamma(g)
        if got is not None:
            return got

    # exact grid fallback: the map gamma(c) = sum c_t basis_t is invertible
    # in the convolution algebra iff det L_{gamma(c)} != 0; that det is a
    # polynomial of per-variable degree <= dim(conv), so vanishing on a
    # full grid with dim(conv)+1 points per variable proves absence.
    if R.category == "field" and (F.char == 0 or F.char > conv.dim):
        deg = conv.dim
        points = range(deg + 1)
        count = (deg + 1) ** s
        if count <= grid_budget:
            import itertools
            for coeffs in itertools.product(points, repeat=s):
                if not any(coeffs):
                    continue
                g = Matrix.zeros(R, U.dim, H.dim)
                for c, b in zip(coeffs, basis):
                    if c:
                        g = g.add(b.scale(R.from_int(c)))
                L = _conv_left_mult(conv, g)
                if not R.is_zero(det_field(L)):
                    got = try_gamma(g)
                    if got is not None:
                        return got
            return None  # determinant identically zero: certified absent
    raise RetryBudgetExhausted(
        f"no invertible comodule map found in {budget} attempts "
        f"(space dimension {s}); absence not certified")


def _conv_left_mult(conv, gmat):
    coords = hom_coords_from_matrix(gmat)
    return conv.left_mult_matrix(coords)


def free_rank_one_over_smash_scalars(U, gamma):
    """Cyclic-vector check: U is free of rank 1 over R (x) H^* with basis
    gamma applied to a left integral of H (the classical basis element).

    The module action is (r (x) f) . u = r (f . u); freeness of rank one
    is the bijectivity of w -> w . u0 from R (x) H^* to U.
    """
    R = U.ring
    H = U.hopf
    n, m = U.dim, H.dim
    rep = integral_report(H)
    if not rep.left:
        return False
    lam = rep.left[0]
    u0 = gamma.apply(lam)
    act = [U.rho_block(b) for b in range(m)]
    cols = []
    for b in range(m):
        cols.append(act[b].apply(u0))
    M = Matrix.from_cols(R, cols, n)
    if n != m:
        return False
    return ring_is_invertible(M)
