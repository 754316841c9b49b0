"""Built-in example objects used by tests, the CLI and the service.

Everything here is constructed from structure constants and then verified
by the generic machinery; nothing is special-cased downstream.
"""

from __future__ import annotations

from fractions import Fraction

from .algebras import FinAlgebra
from .comodule import ComoduleAlgebra, trivial_extension
from .hopf import (
    cyclic_group, dihedral_group, dual_group_algebra, group_algebra,
    klein_group, sweedler_h4, symmetric_group,
)
from .linalg import Matrix
from .rings import GF, QQ, LaurentRing, jet_ring
from .twist import klein_quaternion_cocycle, qzn_cocycle, twisted_product


def hopf_gallery():
    """The named Hopf algebras the acceptance criteria quantify over."""
    gallery = {}
    for n in range(2, 7):
        gallery[f"group:Z{n}"] = group_algebra(cyclic_group(n))
        gallery[f"dual:Z{n}"] = dual_group_algebra(cyclic_group(n))
    gallery["group:S3"] = group_algebra(symmetric_group(3))
    gallery["dual:S3"] = dual_group_algebra(symmetric_group(3))
    gallery["sweedler"] = sweedler_h4()
    return gallery


def hopf_preset(name):
    """Resolve CLI preset names: sweedler, Zn, dual:Zn, S3, dual:S3, klein."""
    name = name.strip()
    if name in ("sweedler", "h4"):
        return sweedler_h4()
    dual = name.startswith("dual:")
    if dual:
        name = name[5:]
    group = group_preset(name)
    return dual_group_algebra(group) if dual else group_algebra(group)


def group_preset(name):
    name = name.strip()
    if name.lower() in ("klein", "v4"):
        return klein_group()
    kind, num = name[0].upper(), name[1:]
    if not num.isdigit():
        raise ValueError(f"unknown group preset {name!r}")
    n = int(num)
    if kind == "Z":
        return cyclic_group(n)
    if kind == "S":
        return symmetric_group(n)
    if kind == "D":
        return dihedral_group(n)
    raise ValueError(f"unknown group preset {name!r}")


def qzn_family(n, field=QQ):
    """The cyclic twisted-product family over F[q, q^-1] with its cochain."""
    R = LaurentRing(field)
    sigma = qzn_cocycle(n, R)
    return twisted_product(R, sigma.hopf, sigma), sigma


def qzn_fiber(n, a, field=QQ):
    """Member of the family at q = a over the field itself."""
    sigma = qzn_cocycle(n, field, qvalue=a)
    return twisted_product(field, sigma.hopf, sigma), sigma


def klein_quaternion_product(field=QQ):
    """The quaternion algebra as a twisted product over the Klein group."""
    sigma = klein_quaternion_cocycle(field)
    return twisted_product(field, sigma.hopf, sigma), sigma


def gaussian_extension():
    """The degree-2 field extension Q(i) of Q as a comodule algebra over
    the 2-element function Hopf algebra, coaction u -> sum g(u) (x) delta_g."""
    F = QQ
    H = dual_group_algebra(cyclic_group(2))
    one = F.one
    # basis 1, i with i^2 = -1
    mult = [
        [[one, F.zero], [F.zero, one]],
        [[F.zero, one], [F.neg(one), F.zero]],
    ]
    alg = FinAlgebra(F, mult, (one, F.zero), names=("1", "i"))
    # rho(1) = 1 (x) (d_e + d_g); rho(i) = i (x) d_e - i (x) d_g
    rows = [
        [one, F.zero],       # (0, d_e)
        [one, F.zero],       # (0, d_g)
        [F.zero, one],       # (1, d_e)
        [F.zero, F.neg(one)],  # (1, d_g)
    ]
    return ComoduleAlgebra(alg, H, Matrix(F, rows), name="Q(i)")


def h4_trivial_extension():
    return trivial_extension(QQ, sweedler_h4(), name="Q(x)H4")


def matrix_algebra(n, field=QQ):
    """M_n(F) with the basis of matrix units, row-major."""
    F = field
    units = [(i, j) for i in range(n) for j in range(n)]
    idx = {u: t for t, u in enumerate(units)}
    d = n * n
    mult = [[[F.zero] * d for _ in range(d)] for _ in range(d)]
    for (a, b) in units:
        for (c, e) in units:
            if b == c:
                mult[idx[(a, b)]][idx[(c, e)]][idx[(a, e)]] = F.one
    unit = [F.zero] * d
    for i in range(n):
        unit[idx[(i, i)]] = F.one
    return FinAlgebra(F, mult, unit,
                      names=tuple(f"E{i}{j}" for (i, j) in units))


def dual_numbers_algebra(field=QQ):
    """F[x]/(x^2) with basis 1, x."""
    F = field
    mult = [
        [[F.one, F.zero], [F.zero, F.one]],
        [[F.zero, F.one], [F.zero, F.zero]],
    ]
    return FinAlgebra(F, mult, (F.one, F.zero), names=("1", "x"))
