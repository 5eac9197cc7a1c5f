"""The rational function field L = GF(2)(u, v) and its subfield of squares.

Squaring is a field endomorphism in characteristic two, and here its image
F = GF(2)(u^2, v^2) has index four: every element of L has its square in F,
and (1, u, v, uv) is an F-basis of L.  ``LElem`` is a fraction of packed
polynomials; ``FElem`` is the subtype whose numerator and denominator have
all exponents even, which by the Frobenius is exactly membership in F (a
property preserved by +, * and exact division, so it survives lazy
representations).

Fractions are normalized lazily: arithmetic never computes a gcd unless an
intermediate outgrows a size threshold, because reducing to lowest terms
after every operation costs far more than carrying a few extra factors
through the short expression trees that dominate the workload.  Lowest terms
are restored exactly where a canonical representation matters: hashing and
printing.  Equality cross-multiplies.

``BasisL`` fixes a basis (1, i, j, ij) with 1, i, j independent over F and
converts between elements and coordinate rows in F^4.  The default basis is
(1, u, v, uv); for that one, coordinates fall out of a parity split of the
exponents instead of a linear solve.
"""

from __future__ import annotations

import random
from typing import Iterable, NamedTuple, Sequence

from . import gf2poly, linalg
from .errors import InvalidBasisError
from .gf2poly import Poly2, gcd

__all__ = [
    "LElem",
    "FElem",
    "FCoords",
    "BasisL",
    "default_basis",
    "is_in_F",
    "is_in_intermediate",
    "random_elem",
    "random_nonzero",
]

_P_ZERO = gf2poly.ZERO
_P_ONE = gf2poly.ONE

_REDUCE_AT = 96  # lazy fractions are reduced once their total degree passes this


def _lazy(cls: type, num: Poly2, den: Poly2) -> "LElem":
    """Build an element without reducing, unless it has grown too large."""
    if num.is_zero:
        return cls(_P_ZERO, _P_ONE)
    if not den.is_one and num.degree + den.degree > _REDUCE_AT:
        g = gcd(num, den)
        if not g.is_one:
            num, den = num.exact_div(g), den.exact_div(g)
    return cls(num, den)


class LElem:
    """A fraction num/den of polynomials in GF(2)[u, v], den != 0.

    Not necessarily in lowest terms; see the module docstring.  Zero is
    always stored as 0/1, and ``normalize()`` reduces in place.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Poly2, den: Poly2):
        # trusted constructor: den nonzero and num zero only alongside
        # den == 1; use make() for raw input
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def make(cls, num: Poly2, den: Poly2 = _P_ONE) -> "LElem":
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        return _lazy(cls, num, den)

    @classmethod
    def parse(cls, text: str) -> "LElem":
        """Inverse of str(): 'num / den' with the denominator omitted when 1."""
        num, sep, den = text.partition("/")
        if sep and "/" in den:
            raise ValueError("more than one '/' in element string")
        n = Poly2.parse(num)
        d = Poly2.parse(den) if sep else _P_ONE
        return cls.make(n, d)

    @staticmethod
    def _fraction(num: Poly2, den: Poly2) -> "LElem":
        # hook for the elimination fast path in linalg: rebuild an element
        # from a raw polynomial fraction (never the validating subclass)
        return LElem.make(num, den)

    # -- queries --------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_one(self) -> bool:
        return self.num == self.den

    def __bool__(self) -> bool:
        return not self.num.is_zero

    @property
    def is_in_F(self) -> bool:
        """Membership in the subfield of squares GF(2)(u^2, v^2)."""
        if self.num.all_exponents_even and self.den.all_exponents_even:
            return True
        # num/den = (num*den)/den^2 with den^2 in F, so membership comes down
        # to the product having even exponents (odd parts of a reduced pair
        # would survive in it)
        return (self.num * self.den).all_exponents_even

    # -- arithmetic -------------------------------------------------------------

    @staticmethod
    def _cls(x: "LElem", y: "LElem") -> type:
        if type(x) is FElem and type(y) is FElem:
            return FElem
        return LElem

    def __add__(self, other: "LElem") -> "LElem":
        if not isinstance(other, LElem):
            return NotImplemented
        if self.num.is_zero:
            return other
        if other.num.is_zero:
            return self
        cls = LElem._cls(self, other)
        a, b = self.num, self.den
        c, d = other.num, other.den
        if b == d:
            return _lazy(cls, a + c, b)
        return _lazy(cls, a * d + c * b, b * d)

    __sub__ = __add__  # characteristic two

    def __neg__(self) -> "LElem":
        return self

    def __mul__(self, other: "LElem") -> "LElem":
        if not isinstance(other, LElem):
            return NotImplemented
        cls = LElem._cls(self, other)
        a, b = self.num, self.den
        c, d = other.num, other.den
        if a.is_zero or c.is_zero:
            return cls(_P_ZERO, _P_ONE)
        if self.is_one:
            return other
        if other.is_one:
            return self
        return _lazy(cls, a * c, b * d)

    def inverse(self) -> "LElem":
        if self.num.is_zero:
            raise ZeroDivisionError("inverse of zero")
        return type(self)(self.den, self.num)

    def __truediv__(self, other: "LElem") -> "LElem":
        if not isinstance(other, LElem):
            return NotImplemented
        return self * other.inverse()

    def square(self) -> "FElem":
        """The square, which always lands in the subfield of squares."""
        return FElem(self.num.square(), self.den.square())

    def __pow__(self, n: int) -> "LElem":
        if n < 0:
            return self.inverse() ** (-n)
        result: LElem = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- identity ----------------------------------------------------------------

    def normalize(self) -> "LElem":
        """Reduce to lowest terms in place; returns self for chaining."""
        den = self.den
        if not den.is_one:
            g = gcd(self.num, den)
            if not g.is_one:
                self.num = self.num.exact_div(g)
                self.den = den.exact_div(g)
        return self

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LElem):
            return NotImplemented
        if self.den == other.den:
            return self.num == other.num
        return self.num * other.den == other.num * self.den

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            self.normalize()
            h = hash((self.num, self.den))
            self._hash = h
        return h

    def __str__(self) -> str:
        self.normalize()
        if self.den.is_one:
            return str(self.num)
        return f"{self.num} / {self.den}"

    def __repr__(self) -> str:
        return f"{type(self).__name__}({str(self)!r})"


class FElem(LElem):
    """An element of F = GF(2)(u^2, v^2): numerator and denominator even.

    Even exponents are preserved by +, * and exact division, so every lazy
    representation of an F-element validates, and normalization keeps the
    subtype intact.
    """

    __slots__ = ()

    def __init__(self, num: Poly2, den: Poly2):
        super().__init__(num, den)
        if not (num.all_exponents_even and den.all_exponents_even):
            raise ValueError(f"{num}/{den} is not in the subfield of squares")

    @property
    def value(self) -> LElem:
        """The same element viewed in the big field."""
        return self


ZERO = FElem(_P_ZERO, _P_ONE)
ONE = FElem(_P_ONE, _P_ONE)
U = LElem(gf2poly.U, _P_ONE)
V = LElem(gf2poly.V, _P_ONE)
UV = LElem(gf2poly.UV, _P_ONE)


def is_in_F(z: LElem) -> bool:
    return z.is_in_F


class FCoords(NamedTuple):
    """Coordinates of an L-element over a fixed basis (1, i, j, ij)."""

    c0: FElem
    c1: FElem
    c2: FElem
    c3: FElem


def _default_coords(z: LElem) -> FCoords:
    # z = num*den / den^2 and den^2 is already in F, so a parity split of
    # num*den along u and v yields the four components over (1, u, v, uv)
    h = z.num * z.den
    g2 = z.den.square()
    q0, q1, q2, q3 = h.parity_quarters()
    return FCoords(
        FElem.make(q0, g2),
        FElem.make(q1, g2),
        FElem.make(q2, g2),
        FElem.make(q3, g2),
    )


class BasisL:
    """An F-basis (1, i, j, ij) of L; requires 1, i, j independent over F."""

    __slots__ = (
        "i", "j", "k", "i_sq", "j_sq", "k_sq",
        "elements", "is_default", "_solve_matrix", "_hash",
    )

    def __init__(self, i: LElem, j: LElem):
        std = [_default_coords(ONE), _default_coords(i), _default_coords(j)]
        if linalg.rank(std) != 3:
            raise InvalidBasisError("1, i, j are dependent over the subfield of squares")
        k = i * j
        std.append(_default_coords(k))
        self.i, self.j, self.k = i, j, k
        self.i_sq = i.square()
        self.j_sq = j.square()
        self.k_sq = k.square()
        self.elements = (ONE, i, j, k)
        self.is_default = i == U and j == V
        self._hash = hash((i, j))
        if self.is_default:
            self._solve_matrix = None
        else:
            inv = linalg.inverse(tuple(tuple(row) for row in std), ZERO, ONE)
            if inv is None:
                # cannot happen: j outside F[i] forces (1, i, j, ij) independent
                raise InvalidBasisError("basis change matrix is singular")
            self._solve_matrix = inv

    @classmethod
    def default(cls) -> "BasisL":
        return _DEFAULT_BASIS

    def coords(self, z: LElem) -> FCoords:
        """Coordinates of z over (1, i, j, ij), each in F."""
        std = _default_coords(z)
        if self.is_default:
            return std
        row = linalg.mat_vec(self._solve_matrix, std, ZERO)
        return FCoords(*row)

    def recompose(self, c: Sequence[LElem]) -> LElem:
        """Inverse of coords(): c0 + c1*i + c2*j + c3*ij."""
        one, i, j, k = self.elements
        return c[0] + c[1] * i + c[2] * j + c[3] * k

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BasisL):
            return NotImplemented
        return self.i == other.i and self.j == other.j

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"BasisL(i={self.i!s}, j={self.j!s})"


_DEFAULT_BASIS = BasisL(U, V)


def default_basis() -> BasisL:
    return _DEFAULT_BASIS


def is_in_intermediate(z: LElem, i: LElem) -> bool:
    """Membership in the quadratic intermediate field F + F*i; needs i outside F."""
    if i.is_in_F:
        raise ValueError("the generator of a quadratic intermediate field must lie outside F")
    rows = (_default_coords(ONE), _default_coords(i), _default_coords(z))
    return linalg.rank(rows) <= 2


# ---------------------------------------------------------------------------
# sampling

def _random_poly(rng: random.Random, degree_bound: int) -> Poly2:
    pairs = [
        (a, b)
        for a in range(degree_bound + 1)
        for b in range(degree_bound + 1 - a)
    ]
    return Poly2.from_monomials(p for p in pairs if rng.getrandbits(1))


def random_elem(rng: random.Random, degree_bound: int = 3) -> LElem:
    """Random element with numerator and denominator of total degree <= bound."""
    num = _random_poly(rng, degree_bound)
    den = _random_poly(rng, degree_bound)
    while den.is_zero:
        den = _random_poly(rng, degree_bound)
    return LElem.make(num, den)


def random_nonzero(rng: random.Random, degree_bound: int = 3) -> LElem:
    z = random_elem(rng, degree_bound)
    while z.is_zero:
        z = random_elem(rng, degree_bound)
    return z
