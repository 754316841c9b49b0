"""Base change: pull-backs, fibers, jets, restrictions, generic fiber.

Pull-backs map the structure constants and the coaction entrywise along a
unital ring map; the output is re-verified, never assumed, and when the
source carried a Galois certificate the target is re-certified.

Specialization targets over the univariate bases F[q] and F[q, q^-1]:

* ``fiber@a``        evaluation q -> a (a != 0 over the Laurent base,
                     unless the data happens to live in the polynomial
                     subring, as the standard family does);
* ``jet@a^N``        truncation into F[q]/((q-a)^N); N = 1 collapses to
                     the fiber exactly;
* ``restriction@a``  the quotient by the principal prime (q-a); for these
                     closed points it coincides with the fiber and is kept
                     as a separate spelling for reports;
* ``generic``        the fraction field F(q).

Jet cleaving lifts a fiber cleaving map to the jet ring: the solution is
constrained to reduce to the fiber witness and its convolution inverse is
recomputed exactly over the jet ring (a unit mod nilpotents is a unit).
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebras import convolution_inverse
from .comodule import comodule_maps, is_galois, verify_comodule_algebra
from .errors import FiberNotGalois, UnsupportedBase
from .linalg import Matrix, solve_field
from .rings import FracField, LaurentRing, PolyRing, RingMap, jet_ring
from .twist import CleavingMap, cleftness_witness


@dataclass
class SpecializeTarget:
    kind: str                 # fiber | jet | restriction | generic
    at: object = None         # base-field element
    order: int = 0

    def label(self, field):
        if self.kind == "generic":
            return "generic"
        a = field.to_str(self.at)
        if self.kind == "jet":
            return f"jet@{a}^{self.order}"
        return f"{self.kind}@{a}"


def parse_target(field, text):
    """CLI syntax: fiber@a, jet@a^N, restriction@a, generic."""
    text = text.strip()
    if text == "generic":
        return SpecializeTarget("generic")
    if "@" not in text:
        raise UnsupportedBase(f"cannot parse specialization target {text!r}")
    kind, rest = text.split("@", 1)
    if kind not in ("fiber", "jet", "restriction"):
        raise UnsupportedBase(f"unknown specialization target kind {kind!r}")
    if kind == "jet":
        if "^" not in rest:
            raise UnsupportedBase("jet target needs an order: jet@a^N")
        a_text, n_text = rest.rsplit("^", 1)
        return SpecializeTarget("jet", field.parse(a_text), int(n_text))
    return SpecializeTarget(kind, field.parse(rest))


def pullback(U, rmap, recertify=True):
    """U (x)_O R along phi: O -> R; verified, and re-certified when asked."""
    out = U.map_scalars(rmap)
    rep = verify_comodule_algebra(out)
    if not rep.ok:
        raise UnsupportedBase(
            f"pull-back failed the comodule axioms: {[c.name for c in rep.failures()]}")
    cert = is_galois(out) if recertify else None
    return out, cert


def _laurent_data_fits_poly(U):
    """All structure scalars have no negative exponents."""
    R = U.ring
    entries = list(U.coaction.entries())
    for row in U.algebra.mult:
        for col in row:
            entries.extend(col)
    entries.extend(U.algebra.unit)
    return all(e[1] == () or e[0] >= 0 for e in entries)


def specialization_map(U, target):
    """The ring map realizing the target for U's base."""
    R = U.ring
    if not isinstance(R, (PolyRing, LaurentRing)):
        raise UnsupportedBase(f"specialization needs a univariate base, got {R!r}")
    F = R.base_field
    if target.kind == "generic":
        K = FracField(F, R.var)
        return RingMap.evaluate(R, K, K.gen)
    if target.kind in ("fiber", "restriction"):
        a = target.at
        if isinstance(R, LaurentRing) and F.is_zero(a):
            if not _laurent_data_fits_poly(U):
                raise UnsupportedBase(
                    "q = 0 is not a point of the Laurent base and the data "
                    "does not lie in the polynomial subring")
            # evaluate the polynomial representatives directly
            def fn(x):
                low, coeffs = x
                if not coeffs:
                    return F.zero
                if low < 0:
                    raise UnsupportedBase("negative exponent at q = 0")
                return coeffs[0] if low == 0 else F.zero
            return RingMap(R, F, fn, note="evaluate at 0")
        return RingMap.evaluate(R, F, a)
    if target.kind == "jet":
        if target.order == 1:
            return specialization_map(U, SpecializeTarget("fiber", target.at))
        J = jet_ring(F, target.at, target.order, var=R.var)
        if isinstance(R, LaurentRing) and F.is_zero(target.at):
            if not _laurent_data_fits_poly(U):
                raise UnsupportedBase(
                    "jets at q = 0 need data in the polynomial subring")
            def fn(x):
                low, coeffs = x
                acc = J.zero
                for c in reversed(coeffs):
                    acc = J.add(J.mul(acc, J.gen), J.from_field(c))
                if low < 0:
                    raise UnsupportedBase("negative exponent at q = 0")
                return J.mul(acc, J.pow(J.gen, low))
            return RingMap(R, J, fn, note="jet at 0")
        return RingMap.evaluate(R, J, J.gen)
    raise UnsupportedBase(f"unknown target {target.kind!r}")


def specialize(U, target, recertify=True):
    """Specialized comodule algebra plus the certificate/failure at the target."""
    rmap = specialization_map(U, target)
    return pullback(U, rmap, recertify=recertify)


def jet_truncation_map(J_big, J_small):
    """Coordinate truncation between jets at the same point."""
    images = [J_small._basis(i) if i < J_small.dim else J_small.zero
              for i in range(J_big.dim)]
    return RingMap.linear(J_big, J_small, images)


def jet_cleaving(U, at, order, seed=0):
    """A cleaving map over F[q]/((q-a)^order), lifted from the fiber.

    The fiber at a must be Galois (else FiberNotGalois).  A fiber witness
    gamma0 is found first; the jet solution is the comodule map over the
    jet ring whose reduction is gamma0, and its convolution inverse is
    computed exactly over the jet ring.
    """
    fiber_target = SpecializeTarget("fiber", at)
    U_fiber, cert = specialize(U, fiber_target)
    if cert is None or not cert.ok:
        raise FiberNotGalois(
            f"fiber at {U.ring.base_field.to_str(at)} is not Galois: "
            + getattr(cert, "reason", ""))
    gamma0 = cleftness_witness(U_fiber, seed=seed)
    if gamma0 is None:
        raise FiberNotGalois("fiber is Galois but no cleaving witness was found")
    if order == 1:
        return gamma0

    U_jet, _ = specialize(U, SpecializeTarget("jet", at, order), recertify=False)
    J = U_jet.ring
    F = J.base_field
    basis = comodule_maps(U_jet)
    n, m = U_jet.dim, U_jet.hopf.dim
    # solve: sum_t c_t basis_t reduces to gamma0 (residue = coordinate 0)
    rows = []
    rhs = []
    for i in range(n):
        for a in range(m):
            rows.append([b.rows[i][a][0] for b in basis])
            rhs.append(gamma0.gamma.rows[i][a])
    # remaining jet coordinates of the combination are free; fix them to the
    # residue-constrained solution with zero higher corrections if possible
    sol = solve_field(Matrix(F, rows), tuple(rhs))
    if sol is None:
        raise FiberNotGalois("fiber witness does not lift to the jet ring")
    gamma = Matrix.zeros(J, n, m)
    for c, b in zip(sol, basis):
        if not F.is_zero(c):
            gamma = gamma.add(b.scale(J.from_field(c)))
    inv = convolution_inverse(U_jet.hopf.coalgebra(), U_jet.algebra, gamma)
    if inv is None:
        raise FiberNotGalois("lifted map is not convolution invertible")
    return CleavingMap(U_jet, gamma, inv)
