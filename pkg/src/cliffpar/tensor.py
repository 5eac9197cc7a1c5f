"""The tensor square of L over its subfield of squares, as a 4-dim L-algebra.

With an F-basis (1, i, j, k = ij) of L, the algebra T = L (x)_F L is a left
L-vector space with basis (1(x)1, 1(x)i, 1(x)j, 1(x)k); an element is stored
as its coordinate row (z0, z1, z2, z3) over L.  Multiplication is determined
by the structure constants

    (1(x)i)^2 = i^2 * (1(x)1)        (1(x)i)(1(x)j) = 1(x)k
    (1(x)j)^2 = j^2 * (1(x)1)        (1(x)i)(1(x)k) = i^2 * (1(x)j)
    (1(x)k)^2 = i^2 j^2 * (1(x)1)    (1(x)j)(1(x)k) = j^2 * (1(x)i)

since i^2, j^2 lie in F and commute across the tensor.  The whole table is
owned by a TensorAlgebra object and every product goes through it, so a test
fixture can corrupt a single constant and watch the verification suites
catch it through the production code path.

T is commutative, local and quadratic: the multiplication homomorphism
pi (x(x)y -> xy) has a 3-dimensional kernel Pi (the absolute plane), every
element satisfies g^2 = pi(g)^2 * (1(x)1), and g is invertible exactly when
pi(g) != 0, with inverse pi(g)^(-2) * g.  The annihilator of Pi is the line
L*r through the absolute point, where p = 1(x)i + i(x)1, q = 1(x)j + j(x)1
and r = pq form, together with 1(x)1, the ideal basis; the change of basis
matrix between the two coordinate systems is an involution.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple, Sequence

from . import linalg
from .errors import MixedFieldError, NonInvertibleError
from .field import BasisL, FElem, LElem, ONE, ZERO, default_basis
from .projective import Subspace

__all__ = [
    "TensorAlgebra",
    "LLElem",
    "IdealCoords",
    "default_algebra",
    "ll_mul",
    "pi_hom",
    "norm_ll",
    "ll_square_identity",
    "ll_invert",
    "ideal_basis",
    "to_ideal",
    "from_ideal",
    "annihilator_point",
    "annihilator_by_solving",
    "alternation",
    "embed_second",
    "pure_tensor",
    "absolute_plane",
]


class IdealCoords(NamedTuple):
    """Coordinates over the ideal basis (1(x)1, p, q, r)."""

    g0: LElem
    g1: LElem
    g2: LElem
    g3: LElem


class TensorAlgebra:
    """The algebra L (x)_F L over a fixed basis, owning its structure constants.

    ``table[m][n][t]`` is the F-coefficient of basis vector t in the product
    of basis vectors m and n, so products are always the literal triple sum
    over the table.  ``with_flipped_constant`` returns a deliberately broken
    copy for sensitivity testing; nothing else ever mutates the table.
    """

    __slots__ = ("basis", "table", "_ideal", "_ideal_matrix", "_plane", "_ann")

    def __init__(self, basis: BasisL, table=None):
        self.basis = basis
        if table is None:
            table = self._structure_table(basis)
        self.table = table
        self._ideal = None
        self._ideal_matrix = None
        self._plane = None
        self._ann = None

    @staticmethod
    def _structure_table(basis: BasisL):
        rows = []
        for bm in basis.elements:
            row = []
            for bn in basis.elements:
                row.append(tuple(basis.coords(bm * bn)))
            rows.append(tuple(row))
        return tuple(rows)

    def with_flipped_constant(self, m: int, n: int, t: int) -> "TensorAlgebra":
        """Copy of the algebra with 1 added to one structure constant."""
        table = [[list(cell) for cell in row] for row in self.table]
        table[m][n][t] = table[m][n][t] + ONE
        frozen = tuple(tuple(tuple(cell) for cell in row) for row in table)
        return TensorAlgebra(self.basis, frozen)

    # -- element builders -----------------------------------------------------

    def element(self, coords: Sequence[LElem]) -> "LLElem":
        coords = tuple(coords)
        if len(coords) != 4:
            raise ValueError("tensor coordinates must have length 4")
        return LLElem(self, coords)

    @property
    def one(self) -> "LLElem":
        return LLElem(self, (ONE, ZERO, ZERO, ZERO))

    @property
    def zero(self) -> "LLElem":
        return LLElem(self, (ZERO, ZERO, ZERO, ZERO))

    def embed_first(self, x: LElem) -> "LLElem":
        """x (x) 1, an L-scalar multiple of the unit."""
        return LLElem(self, (x, ZERO, ZERO, ZERO))

    def embed_second(self, y: LElem) -> "LLElem":
        """1 (x) y; its coordinates are the F-coordinates of y."""
        c = self.basis.coords(y)
        return LLElem(self, (c.c0, c.c1, c.c2, c.c3))

    def pure_tensor(self, x: LElem, y: LElem) -> "LLElem":
        """x (x) y = x * (1 (x) y)."""
        return self.embed_second(y).scaled(x)

    def alternation(self, x: LElem, y: LElem) -> "LLElem":
        """x (x) y + y (x) x; zero when x, y are F-dependent."""
        return self.pure_tensor(x, y) + self.pure_tensor(y, x)

    # -- the ideal basis ------------------------------------------------------

    def ideal_basis(self) -> tuple["LLElem", "LLElem", "LLElem"]:
        """(p, q, r) with p = 1(x)i + i(x)1, q = 1(x)j + j(x)1, r = pq."""
        got = self._ideal
        if got is None:
            one = ONE
            p = self.alternation(one, self.basis.i)
            q = self.alternation(one, self.basis.j)
            r = p * q
            got = self._ideal = (p, q, r)
        return got

    def _change_matrices(self):
        """(C, Cinv): ideal coordinate rows times C give basisLL rows."""
        got = self._ideal_matrix
        if got is None:
            p, q, r = self.ideal_basis()
            c = (self.one.coords, p.coords, q.coords, r.coords)
            cinv = linalg.inverse(c, ZERO, ONE)
            if cinv is None:
                raise ArithmeticError("ideal basis change matrix is singular")
            got = self._ideal_matrix = (c, cinv)
        return got

    def to_ideal(self, g: "LLElem") -> IdealCoords:
        """Coordinates of g over (1(x)1, p, q, r); the first one is pi(g)."""
        self._own(g)
        _, cinv = self._change_matrices()
        return IdealCoords(*linalg.mat_vec(cinv, g.coords, ZERO))

    def from_ideal(self, coords: Sequence[LElem]) -> "LLElem":
        coords = tuple(coords)
        if len(coords) != 4:
            raise ValueError("ideal coordinates must have length 4")
        c, _ = self._change_matrices()
        return LLElem(self, tuple(linalg.mat_vec(c, coords, ZERO)))

    # -- distinguished subspaces of the extended projective space -------------

    def absolute_plane(self) -> Subspace:
        """Pi = ker pi as a plane of the extended space (tag L)."""
        got = self._plane
        if got is None:
            p, q, r = self.ideal_basis()
            got = self._plane = Subspace.span(
                "L", (p.coords, q.coords, r.coords)
            )
            if got.dim != 3:
                raise ArithmeticError("kernel of the collapse map is not a plane")
        return got

    def annihilator_point(self) -> Subspace:
        """The absolute point L*r, the annihilator of the plane Pi."""
        got = self._ann
        if got is None:
            _, _, r = self.ideal_basis()
            got = self._ann = Subspace.point("L", r.coords)
        return got

    def annihilator_by_solving(self) -> Subspace:
        """The annihilator of Pi found by solving the linear system z*w = 0.

        Independent route to the same point: the maps z -> z*w for w in
        {p, q, r} are L-linear, so their stacked 4x12 matrix has the
        annihilator as its right nullspace.
        """
        p, q, r = self.ideal_basis()
        basis_vecs = [self.element(row) for row in linalg.identity(4, ZERO, ONE)]
        stacked = []
        for e in basis_vecs:
            row: list[LElem] = []
            for w in (p, q, r):
                row.extend((e * w).coords)
            stacked.append(tuple(row))
        null = linalg.left_nullspace(tuple(stacked), ZERO, ONE)
        return Subspace.span("L", null)

    # -- plumbing --------------------------------------------------------------

    def _own(self, g: "LLElem") -> None:
        if g.algebra is not self and g.algebra.basis != self.basis:
            raise MixedFieldError("operands belong to different tensor algebras")

    def __repr__(self) -> str:
        return f"TensorAlgebra(basis={self.basis!r})"


class LLElem:
    """An element of L (x)_F L as a coordinate row over the left factor."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: TensorAlgebra, coords: tuple[LElem, ...]):
        self.algebra = algebra
        self.coords = coords

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)

    def __bool__(self) -> bool:
        return any(self.coords)

    def _same(self, other: "LLElem") -> None:
        if self.algebra is not other.algebra:
            if not isinstance(other, LLElem):
                raise TypeError("expected a tensor element")
            if (
                self.algebra.basis != other.algebra.basis
                or self.algebra.table != other.algebra.table
            ):
                raise MixedFieldError(
                    "operands belong to different tensor algebras"
                )

    def __add__(self, other: "LLElem") -> "LLElem":
        self._same(other)
        return LLElem(
            self.algebra, tuple(a + b for a, b in zip(self.coords, other.coords))
        )

    __sub__ = __add__

    def scaled(self, a: LElem) -> "LLElem":
        """The scalar action of L: multiply every coordinate."""
        return LLElem(self.algebra, tuple(a * z for z in self.coords))

    def __mul__(self, other: "LLElem") -> "LLElem":
        self._same(other)
        z, w = self.coords, other.coords
        table = self.algebra.table
        acc = [ZERO, ZERO, ZERO, ZERO]
        for m in range(4):
            zm = z[m]
            if not zm:
                continue
            row = table[m]
            for n in range(4):
                wn = w[n]
                if not wn:
                    continue
                prod = zm * wn
                cell = row[n]
                for t in range(4):
                    f = cell[t]
                    if f:
                        acc[t] = acc[t] + (prod if f.is_one else f * prod)
        return LLElem(self.algebra, tuple(acc))

    def pi(self) -> LElem:
        """The multiplication homomorphism: (z0,z1,z2,z3) -> z0 + z1 i + z2 j + z3 k."""
        return self.algebra.basis.recompose(self.coords)

    def norm(self) -> LElem:
        """The square of pi; quasilinear quadratic form extending y -> y^2."""
        return self.pi().square()

    def square_identity(self) -> "LLElem":
        """g*g, asserted equal to pi(g)^2 * (1(x)1)."""
        sq = self * self
        expect = self.algebra.embed_first(self.norm())
        if sq != expect:
            raise AssertionError("square of a tensor element left the base line")
        return sq

    def invert(self) -> "LLElem":
        """Inverse pi(g)^(-2) * g; elements of the kernel have none."""
        n = self.norm()
        if not n:
            raise NonInvertibleError(
                "element of the kernel of the collapse map has no inverse"
            )
        return self.scaled(n.inverse())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LLElem):
            return NotImplemented
        return self.coords == other.coords and self.algebra.basis == other.algebra.basis

    def __hash__(self) -> int:
        return hash((self.algebra.basis, self.coords))

    def to_dict(self, form: str = "basisLL") -> dict:
        """Serialize as tagged coordinate strings ('basisLL' or 'ideal')."""
        if form == "basisLL":
            coords = self.coords
        elif form == "ideal":
            coords = tuple(self.algebra.to_ideal(self))
        else:
            raise ValueError(f"unknown coordinate form {form!r}")
        return {"basis": form, "coords": [str(z) for z in coords]}

    def __repr__(self) -> str:
        return f"LLElem({', '.join(str(z) for z in self.coords)})"


_DEFAULT_ALGEBRA = TensorAlgebra(default_basis())


def default_algebra() -> TensorAlgebra:
    return _DEFAULT_ALGEBRA


# -- module-level operation layer ---------------------------------------------

def ll_mul(g: LLElem, h: LLElem) -> LLElem:
    return g * h


def pi_hom(g: LLElem) -> LElem:
    return g.pi()


def norm_ll(g: LLElem) -> LElem:
    return g.norm()


def ll_square_identity(g: LLElem) -> LLElem:
    return g.square_identity()


def ll_invert(g: LLElem) -> LLElem:
    return g.invert()


def ideal_basis(algebra: TensorAlgebra) -> tuple[LLElem, LLElem, LLElem]:
    return algebra.ideal_basis()


def to_ideal(g: LLElem) -> IdealCoords:
    return g.algebra.to_ideal(g)


def from_ideal(algebra: TensorAlgebra, coords: Sequence[LElem]) -> LLElem:
    return algebra.from_ideal(coords)


def annihilator_point(algebra: TensorAlgebra) -> Subspace:
    return algebra.annihilator_point()


def annihilator_by_solving(algebra: TensorAlgebra) -> Subspace:
    return algebra.annihilator_by_solving()


def alternation(algebra: TensorAlgebra, x: LElem, y: LElem) -> LLElem:
    return algebra.alternation(x, y)


def embed_second(algebra: TensorAlgebra, y: LElem) -> LLElem:
    return algebra.embed_second(y)


def pure_tensor(algebra: TensorAlgebra, x: LElem, y: LElem) -> LLElem:
    return algebra.pure_tensor(x, y)


def absolute_plane(algebra: TensorAlgebra) -> Subspace:
    return algebra.absolute_plane()
