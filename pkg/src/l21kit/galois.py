"""Small finite fields GF(p^k) in the polynomial basis, and PG(2, q) points.

Polynomials over GF(p) are coefficient tuples ``(c_0, c_1, ..., c_d)``
(constant term first).  Field elements additionally have an integer *code*
``sum(c_i * p**i)``.  Every ordering in this module (the choice of modulus,
the element order, the point order) is the order of these codes, i.e.
lexicographic starting from the highest-degree coefficient.  With that
convention GF(8) is built on x^3 + x + 1 and GF(16) on x^4 + x + 1.

Fields are capped at order 256 so that every table fits comfortably in
memory and the exhaustive irreducibility search stays trivial.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .errors import CapabilityError, InputError

MAX_ORDER = 256


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q = p**k`` with ``p`` prime; raise InputError otherwise."""
    if q < 2:
        raise InputError(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    k, rest = 0, q
    while rest % p == 0:
        rest //= p
        k += 1
    if rest != 1:
        raise InputError(f"{q} is not a prime power")
    return p, k


# -- polynomials over GF(p) --------------------------------------------------

def poly_trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def poly_mod(a, m, p):
    """Remainder of ``a`` divided by the monic polynomial ``m`` over GF(p)."""
    a = [c % p for c in a]
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    return poly_trim(a[:dm])


def poly_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return poly_trim(out)


def monic_polys(p: int, k: int):
    """Monic degree-``k`` polynomials in increasing code order."""
    for low in product(range(p), repeat=k):
        yield tuple(reversed(low)) + (1,)


def is_irreducible(m, p: int) -> bool:
    """Exhaustive test: no monic factor of degree 1..deg/2 divides ``m``."""
    k = len(m) - 1
    if k < 1:
        return False
    for d in range(1, k // 2 + 1):
        for f in monic_polys(p, d):
            if not poly_mod(m, f, p):
                return False
    return True


# -- fields -------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class FieldElement:
    """Element of a specific field; ``coefficients`` has exactly ``k`` entries."""

    field: "FiniteField" = field(repr=False, compare=False)
    code: int

    @property
    def coefficients(self) -> tuple[int, ...]:
        return self.field.coefficients(self.code)

    def __add__(self, other):
        return self.field.add(self, other)

    def __sub__(self, other):
        return self.field.sub(self, other)

    def __mul__(self, other):
        return self.field.mul(self, other)

    def __neg__(self):
        return self.field.neg(self)

    def __bool__(self):
        return self.code != 0

    def __eq__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.code == other.code and self.field == other.field

    def __hash__(self):
        return hash((self.field.p, self.field.k, self.code))

    def __repr__(self):
        return f"GF({self.field.order})<{self.coefficients}>"


class FiniteField:
    """GF(p^k) with precomputed addition and multiplication tables.

    Arithmetic on integer codes (``add_code`` etc.) is what the generators
    use; :class:`FieldElement` wraps it for readable call sites.
    """

    def __init__(self, p: int, k: int, modulus: tuple[int, ...]):
        self.p = p
        self.k = k
        self.modulus = tuple(modulus)
        self.order = p**k
        q = self.order
        coeffs = [self._digits(c) for c in range(q)]
        self._coeffs = coeffs
        self._add = [[self._code(tuple((x + y) % p for x, y in zip(coeffs[a], coeffs[b])))
                      for b in range(q)] for a in range(q)]
        self._mul = [[self._code(poly_mod(poly_mul(poly_trim(coeffs[a]), poly_trim(coeffs[b]), p),
                                          self.modulus, p))
                      for b in range(q)] for a in range(q)]
        self._neg = [self._code(tuple((-x) % p for x in coeffs[a])) for a in range(q)]
        self._inv = [0] * q
        for a in range(1, q):
            row = self._mul[a]
            self._inv[a] = row.index(1)

    def _digits(self, code):
        out = []
        for _ in range(self.k):
            code, r = divmod(code, self.p)
            out.append(r)
        return tuple(out)

    def _code(self, coeffs):
        c = 0
        for x in reversed(coeffs):
            c = c * self.p + x
        return c

    def __eq__(self, other):
        if not isinstance(other, FiniteField):
            return NotImplemented
        return (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __repr__(self):
        return f"FiniteField(p={self.p}, k={self.k}, modulus={self.modulus})"

    # integer-code arithmetic
    def add_code(self, a: int, b: int) -> int:
        return self._add[a][b]

    def mul_code(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def neg_code(self, a: int) -> int:
        return self._neg[a]

    def inv_code(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        return self._inv[a]

    def coefficients(self, code: int) -> tuple[int, ...]:
        return self._coeffs[code]

    # element-level API
    def element(self, value) -> FieldElement:
        """Element from an integer code or a coefficient sequence (constant first)."""
        if isinstance(value, int):
            if not 0 <= value < self.order:
                raise InputError(f"code {value} outside GF({self.order})")
            return FieldElement(self, value)
        coeffs = tuple(value)
        if len(coeffs) > self.k or any(not 0 <= c < self.p for c in coeffs):
            raise InputError(f"{coeffs} is not a reduced element of GF({self.order})")
        return FieldElement(self, self._code(coeffs + (0,) * (self.k - len(coeffs))))

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    def elements(self) -> list[FieldElement]:
        return [FieldElement(self, c) for c in range(self.order)]

    def _own(self, a: FieldElement) -> int:
        if a.field != self:
            raise InputError(f"{a!r} does not belong to {self!r}")
        return a.code

    def add(self, a, b):
        return FieldElement(self, self._add[self._own(a)][self._own(b)])

    def sub(self, a, b):
        return FieldElement(self, self._add[self._own(a)][self._neg[self._own(b)]])

    def neg(self, a):
        return FieldElement(self, self._neg[self._own(a)])

    def mul(self, a, b):
        return FieldElement(self, self._mul[self._own(a)][self._own(b)])

    def inv(self, a):
        return FieldElement(self, self.inv_code(self._own(a)))


def make_field(p: int, k: int = 1) -> FiniteField:
    """GF(p^k) built on the least irreducible monic polynomial of degree ``k``."""
    if not is_prime(p):
        raise InputError(f"{p} is not prime")
    if k < 1:
        raise InputError(f"extension degree must be at least 1, got {k}")
    if p**k > MAX_ORDER:
        raise CapabilityError(f"fields of order {p}^{k} exceed the supported {MAX_ORDER}")
    modulus = next(m for m in monic_polys(p, k) if is_irreducible(m, p))
    return FiniteField(p, k, modulus)


def field_of_order(q: int) -> FiniteField:
    return make_field(*prime_power(q))


def field_arithmetic(F: FiniteField, op: str, a: FieldElement, b: FieldElement | None = None):
    """Dispatch ``add``, ``mul`` or ``inv`` by name."""
    if op == "inv":
        return F.inv(a)
    if b is None:
        raise InputError(f"{op} needs two operands")
    if op == "add":
        return F.add(a, b)
    if op == "mul":
        return F.mul(a, b)
    raise InputError(f"unknown field operation {op!r}")


# -- projective plane ---------------------------------------------------------

@dataclass(frozen=True, order=True)
class ProjectivePoint:
    """Normalized homogeneous coordinates, as integer codes of field elements.

    The first nonzero coordinate is always 1, so equality of the stored
    triples is equality of points.
    """

    coords: tuple[int, int, int]


def normalize(F: FiniteField, coords) -> ProjectivePoint:
    coords = tuple(coords)
    lead = next((c for c in coords if c), None)
    if lead is None:
        raise InputError("(0, 0, 0) is not a projective point")
    s = F.inv_code(lead)
    return ProjectivePoint(tuple(F.mul_code(s, c) for c in coords))


def point_index(q: int, pt: ProjectivePoint) -> int:
    """Position of a normalized point in :func:`projective_points` order."""
    x, y, z = pt.coords
    if x:
        return 1 + q + y * q + z
    if y:
        return 1 + z
    return 0


def projective_points(F: FiniteField) -> list[ProjectivePoint]:
    """All ``q^2 + q + 1`` points of PG(2, q), sorted by coordinate codes."""
    q = F.order
    pts = [ProjectivePoint((0, 0, 1))]
    pts += [ProjectivePoint((0, 1, z)) for z in range(q)]
    pts += [ProjectivePoint((1, y, z)) for y in range(q) for z in range(q)]
    return pts


def dot(F: FiniteField, a, b) -> int:
    s = 0
    for x, y in zip(a, b):
        s = F.add_code(s, F.mul_code(x, y))
    return s
