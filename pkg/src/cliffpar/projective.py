"""Exact projective geometry of PG(3, .) over either of the two fields.

A Subspace is stored in reduced echelon form with every row scaled to its
primitive polynomial representative (denominator-free, entries with trivial
gcd), which is the unique canonical choice because 1 is the only unit of
GF(2)[u, v]; identity of subspaces is then structural equality.  Polynomial
rows also keep chained joins and meets cheap: no denominators ever compound.
The zero space (no rows) can show up as a meet and is allowed.  The tag says
which field the coordinates are read over: "F" for the subfield of squares,
"L" for the big field.  The meet is computed from the left nullspace of the
stacked spanning matrices, the join by re-eliminating the union of the rows,
so dim(join) + dim(meet) = dim + dim holds exactly.

``dim`` is the vector-space dimension: 1 for a projective point, 2 for a
line, 3 for a plane.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple, Sequence

from . import linalg
from .errors import DegenerateConfigurationError, MixedFieldError
from .field import ONE, ZERO, FElem, LElem

__all__ = [
    "Subspace",
    "PluckerCoords",
    "collinear",
    "transversal",
    "is_F_rational_point",
    "plucker_of_line",
    "line_from_plucker",
]

_TAGS = ("F", "L")


class Subspace:
    """A subspace of PG(3, .) in canonical (primitive reduced echelon) form."""

    __slots__ = ("tag", "rows", "pivots", "_hash")

    def __init__(self, tag: str, rows: tuple, pivots: tuple):
        # trusted constructor; use span() for raw vectors
        self.tag = tag
        self.rows = rows
        self.pivots = pivots
        self._hash = None

    @classmethod
    def span(cls, tag: str, vectors: Iterable[Sequence[LElem]]) -> "Subspace":
        if tag not in _TAGS:
            raise ValueError(f"unknown field tag {tag!r}")
        vecs = [tuple(v) for v in vectors]
        for v in vecs:
            if len(v) != 4:
                raise ValueError("coordinate rows must have length 4")
            if tag == "F" and not all(x.is_in_F for x in v):
                raise MixedFieldError("row entries lie outside the base field F")
        rows, pivots = linalg.rref_primitive(vecs)
        return cls(tag, rows, pivots)

    @classmethod
    def point(cls, tag: str, vector: Sequence[LElem]) -> "Subspace":
        s = cls.span(tag, [vector])
        if s.dim != 1:
            raise ValueError("a point needs one nonzero coordinate row")
        return s

    @classmethod
    def line(cls, tag: str, a: Sequence[LElem], b: Sequence[LElem]) -> "Subspace":
        s = cls.span(tag, [a, b])
        if s.dim != 2:
            raise ValueError("a line needs two independent coordinate rows")
        return s

    @classmethod
    def plane(cls, tag: str, a, b, c) -> "Subspace":
        s = cls.span(tag, [a, b, c])
        if s.dim != 3:
            raise ValueError("a plane needs three independent coordinate rows")
        return s

    # -- queries ---------------------------------------------------------------

    @property
    def dim(self) -> int:
        """Vector-space dimension: 1 = point, 2 = line, 3 = plane."""
        return len(self.rows)

    @property
    def is_point(self) -> bool:
        return len(self.rows) == 1

    @property
    def is_line(self) -> bool:
        return len(self.rows) == 2

    @property
    def is_plane(self) -> bool:
        return len(self.rows) == 3

    def generator(self) -> tuple:
        """The canonical coordinate row of a point."""
        if len(self.rows) != 1:
            raise ValueError("generator() is only defined for points")
        return self.rows[0]

    def contains_vector(self, vec: Sequence[LElem]) -> bool:
        v = list(vec)
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            if c:
                f = c / row[p]
                v = [a - f * b for a, b in zip(v, row)]
        return not any(v)

    def contains(self, other: "Subspace") -> bool:
        self._check_tag(other)
        return all(self.contains_vector(r) for r in other.rows)

    def __le__(self, other: "Subspace") -> bool:
        return other.contains(self)

    # -- lattice operations -------------------------------------------------------

    def _check_tag(self, other: "Subspace") -> None:
        if self.tag != other.tag:
            raise MixedFieldError(
                f"cannot combine subspaces over {self.tag!r} and {other.tag!r}"
            )

    def join(self, other: "Subspace") -> "Subspace":
        self._check_tag(other)
        rows, pivots = linalg.rref_primitive(self.rows + other.rows)
        return Subspace(self.tag, rows, pivots)

    def meet(self, other: "Subspace") -> "Subspace":
        self._check_tag(other)
        if not self.rows or not other.rows:
            return Subspace(self.tag, (), ())
        stacked = self.rows + other.rows
        coeffs = linalg.left_nullspace(stacked, ZERO, ONE)
        n = len(self.rows)
        vectors = [linalg.mat_vec(self.rows, x[:n], ZERO) for x in coeffs]
        rows, pivots = linalg.rref_primitive(vectors)
        return Subspace(self.tag, rows, pivots)

    def extend_to_L(self) -> "Subspace":
        """Reread an F-subspace as an L-subspace (same canonical rows)."""
        if self.tag != "F":
            raise MixedFieldError("only F-subspaces can be extended to L")
        return Subspace("L", self.rows, self.pivots)

    # -- identity --------------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.tag == other.tag and self.rows == other.rows

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.tag, self.rows))
            self._hash = h
        return h

    def to_dict(self) -> dict:
        return {
            "field": self.tag,
            "rows": [[str(x) for x in row] for row in self.rows],
        }

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(x) for x in row) for row in self.rows)
        return f"Subspace({self.tag}, dim={self.dim}: {body})"


# ---------------------------------------------------------------------------
# point predicates

def is_F_rational_point(p: Subspace) -> tuple[bool, tuple | None]:
    """Whether an L-point admits coordinates in F; returns (flag, witness row).

    The canonical row is the primitive polynomial vector of the point.  Any
    F-coordinate representative clears to a primitive vector of even-exponent
    polynomials (the content of perfect squares is itself a perfect square),
    and primitive vectors are unique, so the point is F-rational exactly when
    every canonical coordinate lies in F, and that row is the witness.
    """
    if p.tag != "L" or not p.is_point:
        raise ValueError("expected a point of the extended space")
    row = p.rows[0]
    if all(x.is_in_F for x in row):
        return True, row
    return False, None


def collinear(p1: Subspace, p2: Subspace, p3: Subspace) -> bool:
    for p in (p1, p2, p3):
        if not p.is_point:
            raise ValueError("collinear() expects three points")
    p1._check_tag(p2)
    p1._check_tag(p3)
    return linalg.rank(p1.rows + p2.rows + p3.rows) <= 2


# ---------------------------------------------------------------------------
# line coordinates

class PluckerCoords(NamedTuple):
    """Canonical line coordinates (first nonzero entry scaled to 1)."""

    p01: LElem
    p02: LElem
    p03: LElem
    p12: LElem
    p13: LElem
    p23: LElem

    def quadric_form(self) -> LElem:
        """p01*p23 + p02*p13 + p03*p12; zero on every actual line."""
        return self.p01 * self.p23 + self.p02 * self.p13 + self.p03 * self.p12

    def pairing(self, other: "PluckerCoords") -> LElem:
        """Polarized form; zero exactly when the two lines meet."""
        return (
            self.p01 * other.p23
            + self.p02 * other.p13
            + self.p03 * other.p12
            + self.p12 * other.p03
            + self.p13 * other.p02
            + self.p23 * other.p01
        )


def plucker_of_line(line: Subspace) -> PluckerCoords:
    if not line.is_line:
        raise ValueError("plucker_of_line() expects a line")
    a, b = line.rows
    raw = [
        a[s] * b[t] - a[t] * b[s]
        for s, t in ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
    ]
    scale = next(x for x in raw if x).inverse()
    return PluckerCoords(*(scale * x for x in raw))


def line_from_plucker(tag: str, pc: PluckerCoords) -> Subspace:
    """Rebuild the line from its coordinates; rejects non-line coordinate tuples."""
    if pc.quadric_form():
        raise DegenerateConfigurationError("coordinates do not satisfy the line quadric")
    z = ZERO
    p01, p02, p03, p12, p13, p23 = pc
    mat = (
        (z, p01, p02, p03),
        (p01, z, p12, p13),
        (p02, p12, z, p23),
        (p03, p13, p23, z),
    )
    s = Subspace.span(tag, mat)
    if s.dim != 2:
        raise DegenerateConfigurationError("coordinate tuple spans no line")
    return s


def transversal(point: Subspace, line2: Subspace, line3: Subspace) -> Subspace:
    """The unique line through a point meeting two lines it avoids.

    Exists and is unique when the point is on neither line and the two
    spanned planes differ; otherwise the configuration is degenerate.

    Worked without forming either plane: the plane through the point and the
    first line is cut out by a single linear form n, and the second line
    x = s*a + t*b crosses it where s*(n.a) + t*(n.b) = 0, which pins down
    the second point of the transversal directly.
    """
    if not point.is_point or not line2.is_line or not line3.is_line:
        raise ValueError("transversal() expects a point and two lines")
    prow = point.generator()
    if line3.contains_vector(prow):
        raise DegenerateConfigurationError("the point lies on one of the lines")
    forms = linalg.right_nullspace((prow,) + line2.rows, len(prow), ZERO, ONE)
    if len(forms) != 1:
        raise DegenerateConfigurationError("the point lies on one of the lines")
    n = forms[0]
    a, b = line3.rows
    na = _dot(n, a)
    nb = _dot(n, b)
    if not na and not nb:
        raise DegenerateConfigurationError("the two planes coincide; no unique transversal")
    crossing = tuple(nb * x + na * y for x, y in zip(a, b))
    t = Subspace.span(point.tag, (prow, crossing))
    if t.dim != 2:  # the crossing differs from the point, which is off line3
        raise DegenerateConfigurationError("planes meet in an unexpected dimension")
    return t


def _dot(x: Sequence[LElem], y: Sequence[LElem]) -> LElem:
    acc = ZERO
    for ax, by in zip(x, y):
        if ax and by:
            acc = acc + ax * by
    return acc
