import random

import pytest
from fractions import Fraction

from hopfgalois.comodule import (
    GaloisCertificate, GaloisFailure, canonical_map, canonical_matrix,
    comodule_maps, equivariant_endomorphisms, find_lambda_unit, invariants,
    invariants_equal_base, is_galois, lambda_image_equals_invariants,
    smash_endo_check, trivial_extension, verify_comodule_algebra,
)
from hopfgalois.errors import LambdaUnitNotFound
from hopfgalois.hopf import cyclic_group, dual_group_algebra, group_algebra, integral_report, sweedler_h4
from hopfgalois.linalg import Matrix
from hopfgalois.presets import gaussian_extension, h4_trivial_extension, qzn_family, qzn_fiber
from hopfgalois.rings import GF, QQ, LaurentRing, jet_ring


def test_trivial_extension_axioms():
    for H in [group_algebra(cyclic_group(3)), sweedler_h4()]:
        U = trivial_extension(QQ, H)
        assert verify_comodule_algebra(U).ok


def test_trivial_extension_axioms_over_laurent_and_jet():
    H = group_algebra(cyclic_group(2))
    assert verify_comodule_algebra(trivial_extension(LaurentRing(QQ), H)).ok
    assert verify_comodule_algebra(trivial_extension(jet_ring(QQ, Fraction(0), 3), H)).ok


def test_qzn_family_axioms():
    U, _ = qzn_family(2)
    assert verify_comodule_algebra(U).ok
    # t * t = q * 1
    R = U.ring
    prod = U.algebra.mul_vec(U.algebra.basis_vec(1), U.algebra.basis_vec(1))
    assert prod == (R.gen, R.zero)


def test_gaussian_extension_axioms_and_invariants():
    U = gaussian_extension()
    assert verify_comodule_algebra(U).ok
    inv = invariants(U)
    assert inv.dim == 1
    assert inv.contains(U.algebra.unit)
    assert invariants_equal_base(U)


def test_invariants_of_nilpotent_fiber():
    U, _ = qzn_fiber(2, Fraction(0))
    inv = invariants(U)
    assert inv.dim == 1  # only scalars: a1 t (x) t = a1 t (x) 1 forces a1 = 0
    assert inv.contains(U.algebra.unit)


def test_invariants_of_trivial_extension():
    H = group_algebra(cyclic_group(3))
    U = trivial_extension(LaurentRing(QQ), H)
    inv = invariants(U)
    assert inv.dim == 1
    assert invariants_equal_base(U)


def test_hstar_action_counit_is_identity():
    U, _ = qzn_family(3)
    eps = U.hopf.counit
    M = U.hstar_action_matrix(eps)
    assert M == Matrix.identity(U.ring, U.dim)


def test_hstar_action_delta_e_projects_degree_zero():
    U, _ = qzn_fiber(2, Fraction(1))
    lam = (QQ.one, QQ.zero)  # delta_e on the dual basis
    M = U.hstar_action_matrix(lam)
    assert M.apply((Fraction(3), Fraction(5))) == (Fraction(3), Fraction(0))


def test_hstar_action_is_module_action():
    rng = random.Random(13)
    U = gaussian_extension()
    H = U.hopf
    from hopfgalois.hopf import dual_hopf
    Hd = dual_hopf(H)
    for _ in range(40):
        f = tuple(Fraction(rng.randint(-3, 3)) for _ in range(H.dim))
        g = tuple(Fraction(rng.randint(-3, 3)) for _ in range(H.dim))
        fg = Hd.algebra.mul_vec(f, g)  # convolution product
        lhs = U.hstar_action_matrix(fg)
        rhs = U.hstar_action_matrix(f).mul(U.hstar_action_matrix(g))
        assert lhs == rhs


def test_canonical_map_trivial_base():
    # O = k: U (x)_O U = U (x) U
    U = trivial_extension(QQ, group_algebra(cyclic_group(2)))
    data = canonical_map(U)
    assert data.dim_domain == 4
    assert data.rank == 4
    assert data.descends


def test_canonical_map_fiber_zero_rank_three():
    U, _ = qzn_fiber(2, Fraction(0))
    data = canonical_map(U)
    assert data.dim_domain == 4
    assert data.rank == 3
    # enumerate the images: 1(x)1 -> 1(x)1, 1(x)t -> t(x)t, t(x)1 -> t(x)1, t(x)t -> 0
    A = U.algebra
    F = QQ
    def image_of(i, j):
        vec = [F.zero] * 4
        vec[i * 2 + j] = F.one
        return canonical_matrix(U).apply(tuple(vec))
    assert image_of(0, 0) == (F.one, F.zero, F.zero, F.zero)       # 1 (x) 1
    assert image_of(0, 1) == (F.zero, F.zero, F.zero, F.one)       # t (x) t
    assert image_of(1, 0) == (F.zero, F.zero, F.one, F.zero)       # t (x) 1
    assert image_of(1, 1) == (F.zero, F.zero, F.zero, F.zero)      # 0


def test_gaussian_extension_is_galois():
    U = gaussian_extension()
    res = is_galois(U)
    assert isinstance(res, GaloisCertificate)
    assert res.route == "field-quotient"


def test_qzn_family_is_galois_over_laurent():
    for n in (2, 3, 4):
        U, _ = qzn_family(n)
        res = is_galois(U)
        assert isinstance(res, GaloisCertificate)
        assert res.route == "smith"


def test_qzn_fiber_zero_fails_with_witness():
    U, _ = qzn_fiber(2, Fraction(0))
    res = is_galois(U)
    assert isinstance(res, GaloisFailure)
    assert res.witness == "1 (x) t"


def test_qzn_fibers_nonzero_are_galois():
    for n in (2, 3):
        for a in (1, -1, 2, 5):
            U, _ = qzn_fiber(n, Fraction(a))
            assert is_galois(U).ok


def test_trivial_extension_galois_over_bases():
    H = group_algebra(cyclic_group(2))
    assert is_galois(trivial_extension(QQ, H)).ok
    assert is_galois(trivial_extension(LaurentRing(QQ), H)).ok
    assert is_galois(trivial_extension(jet_ring(QQ, Fraction(1), 3), H)).ok


def test_certificate_dimension_bookkeeping():
    U = gaussian_extension()
    data = canonical_map(U)
    # over a field, dim U (x)_O U = dim U * dim H on Galois extensions
    assert data.dim_domain == U.dim * U.hopf.dim


def test_find_lambda_unit():
    # trivial extension: x = Lambda(1)^{-1} 1 works, solver must find some x
    U = trivial_extension(QQ, group_algebra(cyclic_group(2)))
    x = find_lambda_unit(U)
    M, _ = U.lambda_action_matrix()
    assert M.apply(x) == tuple(U.algebra.unit)

    # q0 = 1 fiber: Lambda . 1 = 1
    U1, _ = qzn_fiber(2, Fraction(1))
    x1 = find_lambda_unit(U1)
    M1, _ = U1.lambda_action_matrix()
    assert M1.apply(x1) == tuple(U1.algebra.unit)

    # q0 = 0 fiber: still solvable (Lambda . 1 = 1) although not Galois
    U0, _ = qzn_fiber(2, Fraction(0))
    x0 = find_lambda_unit(U0)
    M0, _ = U0.lambda_action_matrix()
    assert M0.apply(x0) == tuple(U0.algebra.unit)


def test_lambda_image_equals_invariants_when_unit_exists():
    for U in [trivial_extension(QQ, group_algebra(cyclic_group(2))),
              gaussian_extension(), qzn_fiber(3, Fraction(2))[0]]:
        assert lambda_image_equals_invariants(U)


def test_smash_endo_check():
    # U = H = Q[Z2] over Q: both sides have dimension 4
    U = trivial_extension(QQ, group_algebra(cyclic_group(2)))
    assert smash_endo_check(U).ok

    # U = Q(i), H = Q^{Z2}: End_Q(U) = M2(Q)
    assert smash_endo_check(gaussian_extension()).ok

    # trivial extension over a finite-dimensional local base
    J = jet_ring(QQ, Fraction(0), 2)
    assert smash_endo_check(trivial_extension(J, group_algebra(cyclic_group(2)))).ok


def test_comodule_maps_contains_identity_for_trivial():
    H = group_algebra(cyclic_group(2))
    U = trivial_extension(QQ, H)
    mats = comodule_maps(U)
    M = Matrix.from_cols(QQ, [tuple(m.entries()) for m in mats], 4)
    ident = tuple(Matrix.identity(QQ, 2).entries())
    from hopfgalois.linalg import solve_field
    assert solve_field(M, ident) is not None


def test_comodule_maps_fiber_one_dimension_two():
    U, _ = qzn_fiber(2, Fraction(1))
    mats = comodule_maps(U)
    assert len(mats) == 2
    # each map is diagonal: t^k -> c_k t^k
    for g in mats:
        assert g.rows[0][1] == 0 and g.rows[1][0] == 0


def test_comodule_maps_dim_crosscheck_with_equivariant_endos():
    # U = O (x) H over a finite-dimensional base: both counts equal dim(O) dim(H)
    J = jet_ring(QQ, Fraction(0), 2)
    H = group_algebra(cyclic_group(2))
    U = trivial_extension(J, H)
    maps = comodule_maps(U)
    endos = equivariant_endomorphisms(U)
    assert len(maps) == 2 * 2  # F-dimension dim(O) * dim(H)
    assert len(endos) == len(maps)
