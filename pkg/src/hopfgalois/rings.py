"""Exact scalar rings and ring maps.

Every computation in this package reduces to arithmetic in one of these
rings; no floating point is used anywhere.

Supported rings and their element representations:

* ``QQ``                -- rationals, elements are ``fractions.Fraction``
* ``GF(p)``             -- prime field, elements are ints in ``[0, p)``
* ``PolyRing(F, var)``  -- F[var], elements are coefficient tuples with no
                           trailing zeros (``()`` is zero)
* ``LaurentRing(F, var)`` -- F[var, var^-1], elements are ``(low, coeffs)``
                           with nonzero first/last coefficient
* ``FracField(F, var)`` -- F(var), elements are reduced ``(num, den)`` poly
                           pairs with monic denominator
* ``FinCommRing``       -- finite-dimensional commutative F-algebra given by
                           structure constants; elements are coordinate
                           tuples.  Jet rings F[var]/((var-a)^N) and finite
                           products are built this way.

Ring categories drive the linear algebra dispatch: ``field`` (Gaussian
elimination), ``euclidean`` (Smith normal form) and ``fincomm`` (scalar
extension to the base field).
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NonEuclideanRing, RingMismatch, ScalarParseError


# ---------------------------------------------------------------------------
# polynomial helpers on bare coefficient tuples
# ---------------------------------------------------------------------------

def _trim(coeffs):
    n = len(coeffs)
    while n > 0 and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


def _poly_add(field, a, b):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else field.zero
        y = b[i] if i < len(b) else field.zero
        out.append(field.add(x, y))
    return _trim(out)


def _poly_neg(field, a):
    return tuple(field.neg(c) for c in a)


def _poly_mul(field, a, b):
    if not a or not b:
        return ()
    out = [field.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if field.is_zero(x):
            continue
        for j, y in enumerate(b):
            out[i + j] = field.add(out[i + j], field.mul(x, y))
    return _trim(out)


def _poly_divmod(field, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [field.zero] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    inv_lead = field.inv(b[-1])
    while len(r) >= len(b):
        if field.is_zero(r[-1]):
            r.pop()
            continue
        k = len(r) - len(b)
        c = field.mul(r[-1], inv_lead)
        q[k] = c
        for i, bc in enumerate(b):
            r[k + i] = field.sub(r[k + i], field.mul(c, bc))
        r.pop()
    return _trim(q), _trim(r)


def _poly_gcd(field, a, b):
    while b:
        a, b = b, _poly_divmod(field, a, b)[1]
    if a:
        inv_lead = field.inv(a[-1])
        a = tuple(field.mul(c, inv_lead) for c in a)
    return a


def _poly_derivative(field, a):
    return _trim([field.mul(field.from_int(k), a[k]) for k in range(1, len(a))])


# ---------------------------------------------------------------------------
# ring classes
# ---------------------------------------------------------------------------

class Ring:
    """Common protocol; concrete rings fill in the arithmetic."""

    category = "field"  # "field" | "euclidean" | "fincomm"
    var = None

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def is_zero(self, a):
        return self.eq(a, self.zero)

    def is_one(self, a):
        return self.eq(a, self.one)

    def from_int(self, n):
        return self.from_field(self.base_field.from_int(n))

    def sum(self, items):
        acc = self.zero
        for x in items:
            acc = self.add(acc, x)
        return acc

    def pow(self, a, n):
        if n < 0:
            return self.pow(self.inv(a), -n)
        acc, base = self.one, a
        while n:
            if n & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            n >>= 1
        return acc

    def exact_div(self, a, b):
        """a/b when b divides a exactly; raises otherwise."""
        if self.category == "field":
            return self.div(a, b)
        raise NotImplementedError

    def parse(self, text):
        return parse_scalar(self, text)

    def __ne__(self, other):
        return not self.__eq__(other)


class RationalField(Ring):
    category = "field"
    char = 0

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)
        self.base_field = self

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def div(self, a, b):
        return a / b

    def inv(self, a):
        return 1 / a

    def eq(self, a, b):
        return a == b

    def is_unit(self, a):
        return a != 0

    def from_int(self, n):
        return Fraction(n)

    def from_field(self, c):
        return c

    def to_str(self, a):
        return str(a)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


QQ = RationalField()


class PrimeField(Ring):
    category = "field"

    def __init__(self, p):
        if p < 2 or any(p % k == 0 for k in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.char = p
        self.zero = 0
        self.one = 1 % p
        self.base_field = self

    def add(self, a, b):
        return (a + b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero in GF(p)")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def eq(self, a, b):
        return (a - b) % self.p == 0

    def is_unit(self, a):
        return a % self.p != 0

    def from_int(self, n):
        return n % self.p

    def from_field(self, c):
        return c % self.p

    def to_str(self, a):
        return str(a % self.p)

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


def GF(p):
    return PrimeField(p)


class PolyRing(Ring):
    """F[var], a Euclidean domain graded by degree."""

    category = "euclidean"

    def __init__(self, field, var="q"):
        self.base_field = field
        self.var = var
        self.char = field.char
        self.zero = ()
        self.one = (field.one,)
        self.gen = (field.zero, field.one)

    def add(self, a, b):
        return _poly_add(self.base_field, a, b)

    def neg(self, a):
        return _poly_neg(self.base_field, a)

    def mul(self, a, b):
        return _poly_mul(self.base_field, a, b)

    def eq(self, a, b):
        return a == b

    def is_unit(self, a):
        return len(a) == 1

    def inv(self, a):
        if not self.is_unit(a):
            raise ZeroDivisionError(f"{self.to_str(a)} is not a unit in {self!r}")
        return (self.base_field.inv(a[0]),)

    def from_field(self, c):
        return () if self.base_field.is_zero(c) else (c,)

    def edeg(self, a):
        if not a:
            raise ValueError("degree of zero")
        return len(a) - 1

    def divmod(self, a, b):
        return _poly_divmod(self.base_field, a, b)

    def exact_div(self, a, b):
        q, r = self.divmod(a, b)
        if r:
            raise ValueError("inexact polynomial division")
        return q

    def derivative(self, a):
        return _poly_derivative(self.base_field, a)

    def to_str(self, a):
        return _format_terms(self.base_field, {k: c for k, c in enumerate(a)}, self.var)

    def __repr__(self):
        return f"{self.base_field!r}[{self.var}]"

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and not isinstance(other, LaurentRing)
                and other.base_field == self.base_field and other.var == self.var)

    def __hash__(self):
        return hash(("poly", self.base_field, self.var))


class LaurentRing(Ring):
    """F[var, var^-1]; units are the nonzero monomials.

    Elements are (low, coeffs) with coeffs[0] != 0 and coeffs[-1] != 0;
    zero is (0, ()).  Euclidean via the degree of the unit-normalized
    associate polynomial.
    """

    category = "euclidean"

    def __init__(self, field, var="q"):
        self.base_field = field
        self.var = var
        self.char = field.char
        self.zero = (0, ())
        self.one = (0, (field.one,))
        self.gen = (1, (field.one,))

    def _norm(self, low, coeffs):
        coeffs = _trim(coeffs)
        if not coeffs:
            return (0, ())
        shift = 0
        while self.base_field.is_zero(coeffs[shift]):
            shift += 1
        return (low + shift, tuple(coeffs[shift:]))

    def add(self, a, b):
        (la, ca), (lb, cb) = a, b
        if not ca:
            return b
        if not cb:
            return a
        low = min(la, lb)
        n = max(la + len(ca), lb + len(cb)) - low
        out = [self.base_field.zero] * n
        for i, c in enumerate(ca):
            out[la - low + i] = self.base_field.add(out[la - low + i], c)
        for i, c in enumerate(cb):
            out[lb - low + i] = self.base_field.add(out[lb - low + i], c)
        return self._norm(low, out)

    def neg(self, a):
        return (a[0], _poly_neg(self.base_field, a[1]))

    def mul(self, a, b):
        (la, ca), (lb, cb) = a, b
        if not ca or not cb:
            return self.zero
        return self._norm(la + lb, _poly_mul(self.base_field, ca, cb))

    def eq(self, a, b):
        return a == b

    def is_unit(self, a):
        return len(a[1]) == 1

    def inv(self, a):
        if not self.is_unit(a):
            raise ZeroDivisionError(f"{self.to_str(a)} is not a unit in {self!r}")
        return (-a[0], (self.base_field.inv(a[1][0]),))

    def from_field(self, c):
        return (0, ()) if self.base_field.is_zero(c) else (0, (c,))

    def edeg(self, a):
        if not a[1]:
            raise ValueError("degree of zero")
        return len(a[1]) - 1

    def divmod(self, a, b):
        # Divide the associate polynomials; the monomial shift is a unit.
        (la, ca), (lb, cb) = a, b
        if not cb:
            raise ZeroDivisionError("division by zero")
        if not ca:
            return self.zero, self.zero
        q, r = _poly_divmod(self.base_field, ca, cb)
        return self._norm(la - lb, q), self._norm(la, r)

    def exact_div(self, a, b):
        q, r = self.divmod(a, b)
        if r[1]:
            raise ValueError("inexact Laurent division")
        return q

    def derivative(self, a):
        low, coeffs = a
        out = {}
        for i, c in enumerate(coeffs):
            k = low + i
            if k != 0 and not self.base_field.is_zero(c):
                out[k - 1] = self.base_field.mul(self.base_field.from_int(k), c)
        if not out:
            return self.zero
        lo = min(out)
        hi = max(out)
        return self._norm(lo, [out.get(k, self.base_field.zero) for k in range(lo, hi + 1)])

    def min_exponent(self, a):
        """Lowest exponent occurring in a (None for zero)."""
        return a[0] if a[1] else None

    def to_str(self, a):
        low, coeffs = a
        return _format_terms(self.base_field, {low + i: c for i, c in enumerate(coeffs)}, self.var)

    def __repr__(self):
        return f"{self.base_field!r}[{self.var},{self.var}^-1]"

    def __eq__(self, other):
        return (isinstance(other, LaurentRing)
                and other.base_field == self.base_field and other.var == self.var)

    def __hash__(self):
        return hash(("laurent", self.base_field, self.var))


class FracField(Ring):
    """F(var): reduced fractions of polynomials, denominator monic."""

    category = "field"

    def __init__(self, field, var="q"):
        self.base_field = field
        self.var = var
        self.char = field.char
        self.poly = PolyRing(field, var)
        self.zero = ((), (field.one,))
        self.one = ((field.one,), (field.one,))
        self.gen = ((field.zero, field.one), (field.one,))

    def _norm(self, num, den):
        F = self.base_field
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return self.zero
        g = _poly_gcd(F, num, den)
        if len(g) > 1:
            num = _poly_divmod(F, num, g)[0]
            den = _poly_divmod(F, den, g)[0]
        lead = den[-1]
        if not F.is_one(lead):
            inv = F.inv(lead)
            num = tuple(F.mul(c, inv) for c in num)
            den = tuple(F.mul(c, inv) for c in den)
        return (num, den)

    def add(self, a, b):
        P = self.poly
        return self._norm(P.add(P.mul(a[0], b[1]), P.mul(b[0], a[1])), P.mul(a[1], b[1]))

    def neg(self, a):
        return (_poly_neg(self.base_field, a[0]), a[1])

    def mul(self, a, b):
        P = self.poly
        return self._norm(P.mul(a[0], b[0]), P.mul(a[1], b[1]))

    def inv(self, a):
        if not a[0]:
            raise ZeroDivisionError("inverse of zero rational function")
        return self._norm(a[1], a[0])

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def eq(self, a, b):
        return a == b

    def is_unit(self, a):
        return bool(a[0])

    def from_field(self, c):
        return (((c,) if not self.base_field.is_zero(c) else ()), (self.base_field.one,))

    def from_poly(self, p):
        return self._norm(p, (self.base_field.one,))

    def to_str(self, a):
        num = self.poly.to_str(a[0])
        if a[1] == (self.base_field.one,):
            return num
        return f"({num})/({self.poly.to_str(a[1])})"

    def __repr__(self):
        return f"{self.base_field!r}({self.var})"

    def __eq__(self, other):
        return (isinstance(other, FracField)
                and other.base_field == self.base_field and other.var == self.var)

    def __hash__(self):
        return hash(("frac", self.base_field, self.var))


class FinCommRing(Ring):
    """Finite-dimensional commutative unital algebra over a field.

    Structure constants mult[i][j][k] give e_i*e_j = sum_k mult[i][j][k] e_k.
    Elements are coordinate tuples over the base field.  Units are decided
    by solving the multiplication-by-a linear system against 1.
    """

    category = "fincomm"

    def __init__(self, field, mult, unit, names=None, tag=None, check=True):
        self.base_field = field
        self.char = field.char
        self.dim = len(unit)
        self.mult = tuple(tuple(tuple(row) for row in plane) for plane in mult)
        self.unit = tuple(unit)
        self.names = tuple(names) if names else tuple(f"b{i}" for i in range(self.dim))
        self.tag = tag  # serialization hint, e.g. ("jet", var, at, order)
        self.zero = tuple(field.zero for _ in range(self.dim))
        self.one = self.unit
        self.gen = None
        if check:
            self._check_axioms()

    def _check_axioms(self):
        F = self.base_field
        d = self.dim
        for i in range(d):
            for j in range(d):
                if self.mul(self._basis(i), self._basis(j)) != self.mul(self._basis(j), self._basis(i)):
                    raise ValueError("structure constants are not commutative")
        for i in range(d):
            for j in range(d):
                for k in range(d):
                    lhs = self.mul(self.mul(self._basis(i), self._basis(j)), self._basis(k))
                    rhs = self.mul(self._basis(i), self.mul(self._basis(j), self._basis(k)))
                    if lhs != rhs:
                        raise ValueError("structure constants are not associative")
        for i in range(d):
            if self.mul(self.unit, self._basis(i)) != self._basis(i):
                raise ValueError("unit vector is not a left identity")

    def _basis(self, i):
        return tuple(self.base_field.one if j == i else self.base_field.zero
                     for j in range(self.dim))

    def add(self, a, b):
        F = self.base_field
        return tuple(F.add(x, y) for x, y in zip(a, b))

    def neg(self, a):
        return tuple(self.base_field.neg(x) for x in a)

    def mul(self, a, b):
        F = self.base_field
        out = [F.zero] * self.dim
        for i, x in enumerate(a):
            if F.is_zero(x):
                continue
            for j, y in enumerate(b):
                if F.is_zero(y):
                    continue
                xy = F.mul(x, y)
                for k in range(self.dim):
                    c = self.mult[i][j][k]
                    if not F.is_zero(c):
                        out[k] = F.add(out[k], F.mul(xy, c))
        return tuple(out)

    def eq(self, a, b):
        return tuple(a) == tuple(b)

    def mult_matrix(self, a):
        """Column-action matrix of multiplication by a (rows of F-entries)."""
        F = self.base_field
        cols = [self.mul(a, self._basis(j)) for j in range(self.dim)]
        return [[cols[j][k] for j in range(self.dim)] for k in range(self.dim)]

    def is_unit(self, a):
        return self._solve_one(a) is not None

    def inv(self, a):
        x = self._solve_one(a)
        if x is None:
            raise ZeroDivisionError("element is not a unit")
        return x

    def _solve_one(self, a):
        # Solve a*x = 1 by Gaussian elimination over the base field.
        F = self.base_field
        d = self.dim
        if d == 0:
            return ()
        M = [row[:] + [self.unit[k]] for k, row in enumerate(self.mult_matrix(a))]
        cols = d
        pivots = []
        r = 0
        for c in range(cols):
            piv = next((i for i in range(r, d) if not F.is_zero(M[i][c])), None)
            if piv is None:
                continue
            M[r], M[piv] = M[piv], M[r]
            sc = F.inv(M[r][c])
            M[r] = [F.mul(sc, v) for v in M[r]]
            for i in range(d):
                if i != r and not F.is_zero(M[i][c]):
                    f = M[i][c]
                    M[i] = [F.sub(M[i][j], F.mul(f, M[r][j])) for j in range(cols + 1)]
            pivots.append(c)
            r += 1
            if r == d:
                break
        for i in range(r, d):
            if not F.is_zero(M[i][cols]):
                return None
        x = [F.zero] * d
        for row_idx, c in enumerate(pivots):
            x[c] = M[row_idx][cols]
        return tuple(x)

    def from_field(self, c):
        F = self.base_field
        return tuple(F.mul(c, u) for u in self.unit)

    def coords(self, a):
        return tuple(a)

    def from_coords(self, coords):
        return tuple(coords)

    def to_str(self, a):
        F = self.base_field
        terms = []
        for c, name in zip(a, self.names):
            if F.is_zero(c):
                continue
            cs = F.to_str(c)
            if name == "1":
                terms.append(cs)
            elif F.is_one(c):
                terms.append(name)
            else:
                terms.append(f"{cs}*{name}")
        return " + ".join(terms) if terms else "0"

    def __repr__(self):
        if self.tag and self.tag[0] == "jet":
            _, var, at, order = self.tag
            return f"{self.base_field!r}[{var}]/(({var}-{self.base_field.to_str(at)})^{order})"
        return f"FinCommRing(dim={self.dim})"

    def __eq__(self, other):
        return (isinstance(other, FinCommRing) and other.base_field == self.base_field
                and other.mult == self.mult and other.unit == self.unit)

    def __hash__(self):
        return hash(("fincomm", self.base_field, self.dim, self.unit))


def jet_ring(field, at, order, var="q"):
    """F[var]/((var-at)^order) with basis 1, u, ..., u^(order-1), u = var-at."""
    if order < 1:
        raise ValueError("jet order must be >= 1")
    F = field
    d = order
    mult = [[[F.one if (i + j == k and i + j < d) else F.zero for k in range(d)]
             for j in range(d)] for i in range(d)]
    unit = tuple(F.one if k == 0 else F.zero for k in range(d))
    names = ["1"] + [f"u^{k}" if k > 1 else "u" for k in range(1, d)]
    R = FinCommRing(F, mult, unit, names=names, tag=("jet", var, at, order), check=False)
    # generator: the image of var, i.e. at + u
    g = [F.zero] * d
    g[0] = at
    if d > 1:
        g[1] = F.one
    R.gen = tuple(g)
    return R


def product_ring(factors):
    """Finite product of FinCommRings over a common base field."""
    if not factors:
        raise ValueError("empty product")
    F = factors[0].base_field
    if any(f.base_field != F for f in factors):
        raise RingMismatch("product factors over different fields")
    dims = [f.dim for f in factors]
    total = sum(dims)
    offs = []
    o = 0
    for d in dims:
        offs.append(o)
        o += d
    mult = [[[F.zero for _ in range(total)] for _ in range(total)] for _ in range(total)]
    for fi, f in enumerate(factors):
        off = offs[fi]
        for i in range(f.dim):
            for j in range(f.dim):
                for k in range(f.dim):
                    mult[off + i][off + j][off + k] = f.mult[i][j][k]
    unit = []
    names = []
    for fi, f in enumerate(factors):
        unit.extend(f.unit)
        names.extend(f"({fi}:{n})" for n in f.names)
    R = FinCommRing(F, mult, unit, names=names, tag=("product", tuple(offs), tuple(dims)), check=False)
    R.factors = tuple(factors)
    R.offsets = tuple(offs)
    return R


def as_fincomm(ring):
    """Promote a base field to a 1-dimensional FinCommRing; pass others through."""
    if isinstance(ring, FinCommRing):
        return ring
    if ring.category != "field":
        raise RingMismatch(f"cannot promote {ring!r} to a finite commutative ring")
    R = FinCommRing(ring, (((ring.one,),),), (ring.one,), names=("1",),
                    tag=("field",), check=False)
    R.gen = None
    return R


def quotient_ring(ring, ideal_gens):
    """Quotient of a FinCommRing by the ideal generated by the given elements.

    Returns (quotient ring, projection RingMap).  The ideal is realized as
    the F-span of gen*basis products; a complement of it in coordinates
    gives the quotient basis.
    """
    F = ring.base_field
    d = ring.dim
    span = []
    for g in ideal_gens:
        for j in range(d):
            span.append(list(ring.mul(g, ring._basis(j))))
    # row reduce the span to echelon rows
    rows = _echelon_rows(F, span, d)
    pivots = [next(j for j in range(d) if not F.is_zero(r[j])) for r in rows]
    free = [j for j in range(d) if j not in pivots]
    qd = len(free)

    def project(a):
        v = list(a)
        for r, p in zip(rows, pivots):
            if not F.is_zero(v[p]):
                f = v[p]
                for j in range(d):
                    v[j] = F.sub(v[j], F.mul(f, r[j]))
        return tuple(v[j] for j in free)

    def section(coords):
        v = [F.zero] * d
        for c, j in zip(coords, free):
            v[j] = c
        return tuple(v)

    mult = [[project(ring.mul(section(_unitvec(F, qd, i)), section(_unitvec(F, qd, j))))
             for j in range(qd)] for i in range(qd)]
    mult_tensor = [[[mult[i][j][k] for k in range(qd)] for j in range(qd)] for i in range(qd)]
    unit = project(ring.unit)
    names = [ring.names[j] for j in free]
    Q = FinCommRing(F, mult_tensor, unit, names=names, tag=("quotient",), check=False)
    if getattr(ring, "gen", None) is not None:
        Q.gen = project(ring.gen)
    pmap = RingMap(ring, Q, project, note="quotient projection")
    pmap.section = section
    return Q, pmap


def tensor_fincomm(A, B):
    """A (x)_F B of two FinCommRings, basis indexed row-major (i, j)."""
    F = A.base_field
    if B.base_field != F:
        raise RingMismatch("tensor factors over different fields")
    da, db = A.dim, B.dim
    d = da * db
    mult = [[[F.zero for _ in range(d)] for _ in range(d)] for _ in range(d)]
    for i1 in range(da):
        for j1 in range(db):
            for i2 in range(da):
                for j2 in range(db):
                    row = i1 * db + j1
                    col = i2 * db + j2
                    for k1 in range(da):
                        c1 = A.mult[i1][i2][k1]
                        if F.is_zero(c1):
                            continue
                        for k2 in range(db):
                            c2 = B.mult[j1][j2][k2]
                            if F.is_zero(c2):
                                continue
                            mult[row][col][k1 * db + k2] = F.add(
                                mult[row][col][k1 * db + k2], F.mul(c1, c2))
    unit = [F.zero] * d
    for i in range(da):
        for j in range(db):
            unit[i * db + j] = F.mul(A.unit[i], B.unit[j])
    names = [f"{na}(x){nb}" for na in A.names for nb in B.names]
    T = FinCommRing(F, mult, unit, names=names, tag=("tensor",), check=False)
    T.left_inject = lambda a: tuple(
        F.mul(a[i], B.unit[j]) for i in range(da) for j in range(db))
    T.right_inject = lambda b: tuple(
        F.mul(A.unit[i], b[j]) for i in range(da) for j in range(db))
    return T


def _unitvec(F, n, i):
    return tuple(F.one if j == i else F.zero for j in range(n))


def _echelon_rows(F, rows, width):
    """Reduced echelon rows (nonzero only) of the given row list."""
    out = []
    for row in rows:
        v = list(row)
        for r in out:
            p = next(j for j in range(width) if not F.is_zero(r[j]))
            if not F.is_zero(v[p]):
                f = v[p]
                for j in range(width):
                    v[j] = F.sub(v[j], F.mul(f, r[j]))
        p = next((j for j in range(width) if not F.is_zero(v[j])), None)
        if p is None:
            continue
        sc = F.inv(v[p])
        v = [F.mul(sc, x) for x in v]
        for r in out:
            if not F.is_zero(r[p]):
                f = r[p]
                for j in range(width):
                    r[j] = F.sub(r[j], F.mul(f, v[j]))
        out.append(v)
    out.sort(key=lambda r: next(j for j in range(width) if not F.is_zero(r[j])))
    return out


# ---------------------------------------------------------------------------
# ring maps
# ---------------------------------------------------------------------------

class RingMap:
    """A unital ring homomorphism, applied entrywise during base change."""

    def __init__(self, source, target, fn, note=""):
        self.source = source
        self.target = target
        self._fn = fn
        self.note = note

    def apply(self, a):
        return self._fn(a)

    def __call__(self, a):
        return self._fn(a)

    @staticmethod
    def identity(ring):
        return RingMap(ring, ring, lambda a: a, note="id")

    @staticmethod
    def compose(g, f):
        """g after f."""
        if f.target != g.source:
            raise RingMismatch("composition of non-matching ring maps")
        return RingMap(f.source, g.target, lambda a: g(f(a)),
                       note=f"{g.note} . {f.note}")

    @staticmethod
    def field_embed(field, target):
        if target.base_field != field:
            raise RingMismatch("target is not an algebra over the given field")
        return RingMap(field, target, target.from_field, note="scalar embed")

    @staticmethod
    def evaluate(source, target, image):
        """Univariate evaluation var -> image; checks invertibility demands.

        For a Laurent source the image must be a unit of the target.  For a
        polynomial source any image works.  Rational-function sources invert
        denominators on demand.
        """
        if isinstance(source, LaurentRing):
            if not target.is_unit(image):
                raise ValueError("Laurent evaluation needs an invertible image")
            image_inv = target.inv(image)

            def fn(a):
                low, coeffs = a
                acc = target.zero
                for i in reversed(range(len(coeffs))):
                    acc = target.add(target.mul(acc, image),
                                     target.from_field(coeffs[i]))
                return target.mul(acc, target.pow(image_inv, -low) if low < 0
                                  else target.pow(image, low))
            return RingMap(source, target, fn, note="evaluate")
        if isinstance(source, FracField):
            def fn(a):
                num = _eval_poly(target, a[0], image)
                den = _eval_poly(target, a[1], image)
                return target.mul(num, target.inv(den))
            return RingMap(source, target, fn, note="evaluate")
        if isinstance(source, PolyRing):
            return RingMap(source, target, lambda a: _eval_poly(target, a, image),
                           note="evaluate")
        raise RingMismatch(f"no evaluation maps out of {source!r}")

    @staticmethod
    def linear(source, target, images, check=True):
        """Map of FinCommRings by images of the source basis."""
        F = source.base_field

        def fn(a):
            acc = target.zero
            for c, img in zip(a, images):
                if not F.is_zero(c):
                    acc = target.add(acc, _scale(target, c, img))
            return acc
        m = RingMap(source, target, fn, note="linear")
        if check:
            if not target.eq(fn(source.unit), target.one):
                raise ValueError("linear ring map does not preserve the unit")
            for i in range(source.dim):
                for j in range(source.dim):
                    lhs = fn(source.mul(source._basis(i), source._basis(j)))
                    rhs = target.mul(images[i], images[j])
                    if not target.eq(lhs, rhs):
                        raise ValueError("linear ring map is not multiplicative")
        m.images = list(images)
        return m


def _scale(ring, c, a):
    return ring.mul(ring.from_field(c), a)


def _eval_poly(target, coeffs, image):
    acc = target.zero
    for c in reversed(coeffs):
        acc = target.add(target.mul(acc, image), target.from_field(c))
    return acc


# ---------------------------------------------------------------------------
# parsing / printing
# ---------------------------------------------------------------------------

def _format_terms(field, terms, var):
    """Render {exponent: coeff} as 'c0 + c1*var + c2*var^2 ...'."""
    keys = sorted(k for k, c in terms.items() if not field.is_zero(c))
    if not keys:
        return "0"
    parts = []
    for k in keys:
        c = terms[k]
        cs = field.to_str(c)
        if k == 0:
            body = cs
        else:
            head = var if k == 1 else f"{var}^{k}"
            if field.is_one(c):
                body = head
            elif cs == "-1":
                body = f"-{head}"
            else:
                body = f"{cs}*{head}"
        parts.append(body)
    text = parts[0]
    for p in parts[1:]:
        if p.startswith("-"):
            text += " - " + p[1:]
        else:
            text += " + " + p
    return text


_TOKEN_CHARS = set("+-*/^() \t")


def _tokenize(text):
    out = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch in " \t":
            i += 1
            continue
        if ch in "+-*/^()":
            out.append(ch)
            i += 1
            continue
        j = i
        while j < len(text) and text[j] not in _TOKEN_CHARS:
            j += 1
        out.append(text[i:j])
        i = j
    return out


class _Parser:
    def __init__(self, ring, tokens):
        self.ring = ring
        self.toks = tokens
        self.pos = 0

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def next(self):
        t = self.peek()
        self.pos += 1
        return t

    def expr(self):
        val = self.term()
        while self.peek() in ("+", "-"):
            op = self.next()
            rhs = self.term()
            val = self.ring.add(val, rhs) if op == "+" else self.ring.sub(val, rhs)
        return val

    def term(self):
        val = self.factor()
        while self.peek() in ("*", "/"):
            op = self.next()
            rhs = self.factor()
            if op == "*":
                val = self.ring.mul(val, rhs)
            else:
                val = self.ring.exact_div(val, rhs) if self.ring.category != "field" \
                    else self.ring.div(val, rhs)
        return val

    def factor(self):
        if self.peek() == "-":
            self.next()
            return self.ring.neg(self.factor())
        if self.peek() == "+":
            self.next()
            return self.factor()
        atom = self.atom()
        if self.peek() == "^":
            self.next()
            sign = 1
            if self.peek() == "-":
                self.next()
                sign = -1
            tok = self.next()
            if tok is None or not tok.isdigit():
                raise ScalarParseError("exponent must be an integer")
            return self.ring.pow(atom, sign * int(tok))
        return atom

    def atom(self):
        tok = self.next()
        if tok is None:
            raise ScalarParseError("unexpected end of scalar expression")
        if tok == "(":
            val = self.expr()
            if self.next() != ")":
                raise ScalarParseError("unbalanced parentheses")
            return val
        if tok.isdigit():
            return self.ring.from_int(int(tok))
        var = getattr(self.ring, "var", None)
        if var is not None and tok == var:
            gen = getattr(self.ring, "gen", None)
            if gen is None:
                raise ScalarParseError(f"ring {self.ring!r} has no generator {var}")
            return gen
        if isinstance(self.ring, FinCommRing) and self.ring.tag and \
                self.ring.tag[0] == "jet" and tok == self.ring.tag[1]:
            return self.ring.gen
        raise ScalarParseError(f"cannot parse token {tok!r} in {self.ring!r}")


def parse_scalar(ring, text):
    if isinstance(ring, FinCommRing) and ring.tag and ring.tag[0] == "jet":
        ring.var = ring.tag[1]
    p = _Parser(ring, _tokenize(str(text)))
    val = p.expr()
    if p.peek() is not None:
        raise ScalarParseError(f"trailing input in scalar {text!r}")
    return val
