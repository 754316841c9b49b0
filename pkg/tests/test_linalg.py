import random

import pytest
from fractions import Fraction

from hopfgalois.linalg import (
    Matrix, det_euclidean, inverse_field, kernel_euclidean, kernel_field,
    kron, rank_field, ring_inverse, ring_is_invertible, ring_solve,
    smith_normal_form, solve_euclidean, solve_field,
)
from hopfgalois.rings import GF, QQ, FracField, LaurentRing, PolyRing, jet_ring


def qmat(rows):
    return Matrix(QQ, [[Fraction(x) for x in row] for row in rows])


def rand_qmat(rng, n, m, span=4):
    return qmat([[rng.randint(-span, span) for _ in range(m)] for _ in range(n)])


def test_solve_identity():
    A = Matrix.identity(QQ, 2)
    assert solve_field(A, (Fraction(1), Fraction(2))) == (Fraction(1), Fraction(2))


def test_solve_inconsistent():
    A = qmat([[1, 1], [1, 1]])
    assert solve_field(A, (Fraction(1), Fraction(0))) is None


def test_solve_diagonal_over_rational_functions():
    K = FracField(QQ)
    A = Matrix(K, [[K.gen, K.zero], [K.zero, K.one]])
    x = solve_field(A, (K.one, K.one))
    assert x == (K.parse("1/q"), K.one)
    # re-evaluates exactly
    assert A.apply(x) == (K.one, K.one)


def test_solution_reevaluates_exactly():
    rng = random.Random(3)
    for _ in range(50):
        A = rand_qmat(rng, 4, 4)
        x0 = tuple(Fraction(rng.randint(-3, 3)) for _ in range(4))
        b = A.apply(x0)
        x = solve_field(A, b)
        assert x is not None
        assert A.apply(x) == b


def test_kernel_rank_inverse():
    Z = Matrix.zeros(QQ, 2, 2)
    assert len(kernel_field(Z)) == 2
    assert rank_field(Z) == 0

    I3 = Matrix.identity(QQ, 3)
    assert kernel_field(I3) == []
    assert inverse_field(I3) == I3

    A = qmat([[1, 1], [2, 2]])
    assert rank_field(A) == 1
    ker = kernel_field(A)
    assert len(ker) == 1
    # spans (1, -1): proportionality check
    v = ker[0]
    assert v[0] == -v[1] and v[0] != 0


def test_rank_nullity():
    rng = random.Random(4)
    for _ in range(50):
        A = rand_qmat(rng, rng.randint(1, 5), rng.randint(1, 5))
        assert rank_field(A) + len(kernel_field(A)) == A.ncols


def test_kron_identity_and_scalar():
    I2, I3 = Matrix.identity(QQ, 2), Matrix.identity(QQ, 3)
    assert kron(I2, I3) == Matrix.identity(QQ, 6)
    B = qmat([[1, 2], [3, 4]])
    A = qmat([[2]])
    assert kron(A, B) == B.scale(Fraction(2))


def test_kron_mixed_product():
    rng = random.Random(5)
    for _ in range(30):
        A, B, C, D = (rand_qmat(rng, 2, 2) for _ in range(4))
        lhs = kron(A, B).mul(kron(C, D))
        rhs = kron(A.mul(C), B.mul(D))
        assert lhs == rhs


def test_kron_acts_on_tensors():
    rng = random.Random(6)
    A, B = rand_qmat(rng, 2, 2), rand_qmat(rng, 3, 3)
    x = tuple(Fraction(rng.randint(-3, 3)) for _ in range(2))
    y = tuple(Fraction(rng.randint(-3, 3)) for _ in range(3))
    txy = tuple(QQ.mul(a, b) for a in x for b in y)  # row-major (i, j)
    lhs = kron(A, B).apply(txy)
    ax, by = A.apply(x), B.apply(y)
    rhs = tuple(QQ.mul(a, b) for a in ax for b in by)
    assert lhs == rhs


def test_smith_laurent_units():
    R = LaurentRing(QQ)
    A = Matrix.diagonal(R, [R.one, R.gen])
    sf = smith_normal_form(A)
    assert sf.divisors == [R.one, R.one]  # q is a unit
    assert sf.all_units


def test_smith_poly_keeps_q():
    R = PolyRing(QQ)
    A = Matrix.diagonal(R, [R.one, R.gen])
    sf = smith_normal_form(A)
    assert sf.divisors == [R.one, R.gen]
    assert not sf.all_units


def test_smith_repeated_divisor():
    R = PolyRing(QQ)
    qm1 = R.parse("q - 1")
    A = Matrix.diagonal(R, [qm1, qm1])
    sf = smith_normal_form(A)
    assert sf.divisors == [qm1, qm1]
    # transforms unimodular
    assert R.is_unit(det_euclidean(sf.U))
    assert R.is_unit(det_euclidean(sf.V))


def rand_edmat(rng, ring, n, m):
    def entry():
        p = ring.zero
        for _ in range(rng.randint(0, 3)):
            p = ring.add(ring.mul(p, ring.gen),
                         ring.from_field(Fraction(rng.randint(-2, 2))))
        return p
    return Matrix(ring, [[entry() for _ in range(m)] for _ in range(n)])


@pytest.mark.parametrize("make_ring", [lambda: PolyRing(QQ), lambda: LaurentRing(QQ)])
def test_smith_properties_random(make_ring):
    rng = random.Random(7)
    R = make_ring()
    for _ in range(25):
        n, m = rng.randint(1, 4), rng.randint(1, 4)
        A = rand_edmat(rng, R, n, m)
        sf = smith_normal_form(A)
        assert sf.U.mul(A).mul(sf.V) == sf.D
        assert R.is_unit(det_euclidean(sf.U))
        assert R.is_unit(det_euclidean(sf.V))
        # divisibility chain
        for d1, d2 in zip(sf.divisors, sf.divisors[1:]):
            _, r = R.divmod(d2, d1)
            assert R.is_zero(r)
        # off-diagonal zero
        for i in range(sf.D.nrows):
            for j in range(sf.D.ncols):
                if i != j:
                    assert R.is_zero(sf.D[i, j])


def test_solve_and_kernel_euclidean():
    R = PolyRing(QQ)
    q = R.gen
    A = Matrix(R, [[q, R.zero], [R.zero, R.one]])
    # q*x = q^2 has polynomial solution x = q
    assert solve_euclidean(A, (R.mul(q, q), R.one)) == (q, R.one)
    # q*x = 1 has none over the polynomial ring
    assert solve_euclidean(A, (R.one, R.one)) is None
    B = Matrix(R, [[q, R.neg(q)]])
    ker = kernel_euclidean(B)
    assert len(ker) == 1
    v = ker[0]
    # saturated: (1, 1) not (q, q)
    assert R.is_unit(v[0]) and v[0] == v[1]


def test_fincomm_solving():
    J = jet_ring(QQ, Fraction(0), 2)
    u = (Fraction(0), Fraction(1))
    A = Matrix(J, [[J.add(J.one, u)]])
    x = ring_solve(A, (J.one,))
    assert x is not None
    assert A.apply(x) == (J.one,)
    # u * x = 1 unsolvable
    assert ring_solve(Matrix(J, [[u]]), (J.one,)) is None
    assert ring_is_invertible(A)
    inv = ring_inverse(A)
    assert inv.mul(A) == Matrix.identity(J, 1)


def test_ring_inverse_laurent():
    R = LaurentRing(QQ)
    A = Matrix(R, [[R.gen, R.zero], [R.one, R.one]])
    assert ring_is_invertible(A)
    inv = ring_inverse(A)
    assert inv.mul(A) == Matrix.identity(R, 2)
    B = Matrix(R, [[R.parse("q - 1")]])
    assert not ring_is_invertible(B)
