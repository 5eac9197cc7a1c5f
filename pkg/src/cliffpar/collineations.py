"""Right-multiplication collineations and the polarities they commute with.

Multiplying L by a fixed nonzero scalar b is an F-linear bijection, and
multiplying T = L (x) L by 1 (x) b is an L-linear one; both induce projective
collineations.  Since b**2 lies in F, each such collineation is an involution.
This module builds their matrices (rows act on coordinate row vectors from
the right), locates the fixed structures of the extended map, and constructs
from any nonzero F-linear form phi: L -> F the polarity of the bilinear form
(x, y) |-> phi(x*y).  These polarities are always non-degenerate, send every
line to a parallel line, and split into two kinds: alternating ("null", every
point self-conjugate) when phi(1) = 0, anisotropic ("elliptic", no point
self-conjugate) otherwise.
"""

from __future__ import annotations

import random
from typing import NamedTuple, Sequence

from . import linalg
from .errors import DegenerateConfigurationError
from .field import (
    ZERO,
    ONE,
    BasisL,
    LElem,
    default_basis,
    is_in_F,
    random_elem,
    random_nonzero,
)
from .projective import Subspace, plucker_of_line
from .tensor import TensorAlgebra, default_algebra
from .parallelism import (
    canonical_rep,
    is_parallel_algebraic,
    line_of_elements,
    line_times_scalar,
)


# ---------------------------------------------------------------------------
# scalar-multiplication matrices


class TranslationF(NamedTuple):
    """Matrix of x |-> x*b on L in an F-basis (1, i, j, k); rows act right."""

    b: LElem
    basis: BasisL
    matrix: tuple  # four rows of four F-coordinates

    def apply(self, x: LElem) -> LElem:
        coords = self.basis.coords(x)
        return self.basis.recompose(linalg.mat_vec(self.matrix, coords, ZERO))

    def apply_to_subspace(self, s: Subspace) -> Subspace:
        """Image of an F- or extended subspace under the right action."""
        rows = [linalg.mat_vec(self.matrix, row, ZERO) for row in s.rows]
        return Subspace.span(s.tag, rows)

    def to_dict(self) -> dict:
        return {
            "b": str(self.b),
            "basis": [str(e) for e in self.basis.elements],
            "matrix": [[str(x) for x in row] for row in self.matrix],
        }


def translation_matrix_F(b: LElem, basis: BasisL | None = None) -> TranslationF:
    """The multiplication map x |-> x*b as a 4x4 matrix over F.

    Row m holds the F-coordinates of (basis element m) * b, so a coordinate
    row vector x satisfies coords(x*b) = x . matrix.  The matrix is
    invertible and its square is b**2 times the identity, making the induced
    collineation an involution.
    """
    basis = basis or default_basis()
    if not b:
        raise ValueError("translation scalars must be nonzero")
    rows = tuple(tuple(basis.coords(e * b)) for e in basis.elements)
    return TranslationF(b, basis, rows)


def translation_matrix_LL(
    b: LElem, algebra: TensorAlgebra | None = None
) -> tuple:
    """Matrix of z |-> z*(1 (x) b) on T in the ideal-adapted basis.

    The basis is (1 (x) 1, p, q, r).  Every row is computed by multiplying
    the basis element out and re-expressing the product, never transcribed
    from a closed form; the result is upper triangular with the element b
    down the diagonal, and with b = i it collapses to the block-diagonal
    pair of Jordan-type cells ((i, 1), (0, i)).
    """
    algebra = algebra or default_algebra()
    if not b:
        raise ValueError("translation scalars must be nonzero")
    factor = algebra.embed_second(b)
    members = (algebra.one,) + algebra.ideal_basis()
    return tuple(tuple(algebra.to_ideal(w * factor)) for w in members)


def translation_matrix_tensor(
    b: LElem, algebra: TensorAlgebra | None = None
) -> tuple:
    """Matrix of z |-> z*(1 (x) b) in the basis (1 (x) 1, ..., 1 (x) k).

    Because 1 (x) b multiplies each 1 (x) b_m into 1 (x) (b_m b), this is the
    same array of F-entries as translation_matrix_F, reread over L.
    """
    algebra = algebra or default_algebra()
    if not b:
        raise ValueError("translation scalars must be nonzero")
    basis = algebra.basis
    return tuple(
        tuple(algebra.embed_second(e * b).coords) for e in basis.elements
    )


# ---------------------------------------------------------------------------
# fixed structures of the extended collineation


def fixed_point_subspace(
    b: LElem, algebra: TensorAlgebra | None = None
) -> Subspace:
    """Fixed points of the extended collineation for b outside F.

    These are the eigenvectors of z |-> z*(1 (x) b), computed as the kernel
    of (matrix - b*identity); b is the only eigenvalue, of multiplicity four,
    and the kernel is the line joining the annihilator point to
    L*(b (x) 1 + 1 (x) b).  For b in F the map is scalar and everything is
    fixed, which is why such b are rejected.
    """
    algebra = algebra or default_algebra()
    if is_in_F(b):
        raise ValueError("scalars in F induce the identical collineation")
    matrix = translation_matrix_tensor(b, algebra)
    shifted = tuple(
        tuple(x + b if m == n else x for n, x in enumerate(row))
        for m, row in enumerate(matrix)
    )
    kernel = linalg.left_nullspace(shifted, ZERO, ONE)
    return Subspace.span("L", kernel)


def elation_defect(z, b: LElem, algebra: TensorAlgebra | None = None):
    """z*(1 (x) b) + b*z, the displacement of z under the extended map.

    For z in the kernel plane of the multiplication homomorphism the defect
    always lands in the annihilator line L*r: restricted to that plane, the
    collineation is an elation whose centre is the annihilator point.
    """
    algebra = algebra or default_algebra()
    return z * algebra.embed_second(b) + z.scaled(b)


class CongruenceReport(NamedTuple):
    samples: int
    invariant_lines_checked: int
    f_lines_checked: int
    failures: int
    skipped: int
    witnesses: tuple


def invariant_line_congruence_check(
    i: LElem,
    samples: int,
    rng: random.Random,
    algebra: TensorAlgebra | None = None,
    degree_bound: int = 3,
) -> CongruenceReport:
    """Sample the invariant lines of the extended collineation z |-> z*(1 (x) i).

    Because the matrix squares to the scalar i**2, every point w spans the
    invariant line through w and its image.  Each such sampled line is
    checked to meet the line of fixed points; each sampled line of the
    parallel class of F[i] is checked to extend to an invariant line; and a
    sampled F-line extends to an invariant line exactly when it is parallel
    to F[i], which is checked in both directions.
    """
    algebra = algebra or default_algebra()
    if is_in_F(i):
        raise ValueError("scalars in F induce the identical collineation")
    basis = algebra.basis
    matrix = translation_matrix_tensor(i, algebra)
    axis = fixed_point_subspace(i, algebra)
    class_rep = canonical_rep(line_of_elements(ONE, i, algebra), algebra).line
    checked = 0
    f_checked = 0
    failures = 0
    skipped = 0
    witnesses: list = []

    def image_of(s: Subspace) -> Subspace:
        return Subspace.span(
            s.tag, [linalg.mat_vec(matrix, row, ZERO) for row in s.rows]
        )

    for _ in range(samples):
        coords = tuple(random_elem(rng, degree_bound) for _ in range(4))
        if not any(coords):
            skipped += 1
            continue
        image = linalg.mat_vec(matrix, coords, ZERO)
        line = Subspace.span("L", (coords, image))
        if line.dim != 2:
            skipped += 1  # w was an eigenvector; it spans no invariant line
            continue
        checked += 1
        if image_of(line) != line or line.meet(axis).dim != 1:
            failures += 1
            witnesses.append({"kind": "axis-incidence", "line": line.to_dict()})

    for _ in range(samples):
        x = random_nonzero(rng, degree_bound)
        y = random_nonzero(rng, degree_bound)
        rows, _ = linalg.rref_primitive((basis.coords(x), basis.coords(y)))
        if len(rows) != 2:
            skipped += 1
            continue
        f_line = Subspace.line("F", rows[0], rows[1])
        f_checked += 1
        parallel = canonical_rep(f_line, algebra).line == class_rep
        invariant = image_of(f_line.extend_to_L()) == f_line.extend_to_L()
        if parallel != invariant:
            failures += 1
            witnesses.append(
                {
                    "kind": "f-rational-slice",
                    "line": f_line.to_dict(),
                    "parallel": parallel,
                    "invariant": invariant,
                }
            )

    return CongruenceReport(
        samples, checked, f_checked, failures, skipped, tuple(witnesses)
    )


# ---------------------------------------------------------------------------
# linear forms and polarities


class LinearFormF(NamedTuple):
    """Nonzero F-linear form on L, stored by its values on the basis."""

    values: tuple
    basis: BasisL

    def __call__(self, x: LElem) -> LElem:
        coords = self.basis.coords(x)
        acc = ZERO
        for c, v in zip(coords, self.values):
            if c and v:
                acc = acc + c * v
        return acc

    def to_dict(self) -> dict:
        return {"values": [str(v) for v in self.values]}


def linear_form(values: Sequence[LElem], basis: BasisL | None = None) -> LinearFormF:
    basis = basis or default_basis()
    vals = tuple(values)
    if len(vals) != 4:
        raise ValueError("a linear form needs one value per basis element")
    for v in vals:
        if not is_in_F(v):
            raise ValueError("form values must lie in F")
    if not any(vals):
        raise ValueError("the zero form is excluded")
    return LinearFormF(vals, basis)


class PolarityF(NamedTuple):
    """Polarity of the form (x, y) |-> phi(x*y); gram[s][t] = phi(b_s * b_t)."""

    form: LinearFormF
    gram: tuple

    @property
    def is_null(self) -> bool:
        """True when every point is self-conjugate (phi(x*x) = x**2 * phi(1) = 0)."""
        return not self.form(ONE)

    @property
    def classification(self) -> str:
        return "null" if self.is_null else "elliptic"

    def pair(self, x: LElem, y: LElem) -> LElem:
        return self.form(x * y)

    def to_dict(self) -> dict:
        return {
            "form": self.form.to_dict(),
            "gram": [[str(x) for x in row] for row in self.gram],
            "classification": self.classification,
        }


def polarity_from_form(form: LinearFormF) -> PolarityF:
    """Build the Gram matrix of (x, y) |-> phi(x*y) on the form's basis.

    The pairing of any nonzero a with c*a**(-1) is phi(c), so a nonzero form
    can have no radical; a singular Gram matrix would mean corrupted
    arithmetic, hence the assertion.
    """
    els = form.basis.elements
    gram = tuple(tuple(form(s * t) for t in els) for s in els)
    assert linalg.det(gram, ONE), "the pairing of a nonzero form is non-degenerate"
    return PolarityF(form, gram)


def polar_of(s: Subspace, pol: PolarityF) -> Subspace:
    """The orthogonal complement of an F-subspace under the polarity."""
    if s.tag != "F":
        raise ValueError("the polarity acts on subspaces over F")
    if not s.rows:
        return Subspace.span("F", linalg.identity(4, ZERO, ONE))
    prod = linalg.matmul(s.rows, pol.gram, ZERO)
    kernel = linalg.right_nullspace(prod, 4, ZERO, ONE)
    return Subspace.span("F", kernel)


def is_self_polar(line: Subspace, pol: PolarityF) -> bool:
    if not line.is_line:
        raise ValueError("self-polarity is a property of lines")
    return polar_of(line, pol) == line


def complex_coefficients(pol: PolarityF) -> tuple:
    """Coefficients of the linear equation cutting out the self-polar lines.

    For a null polarity the Gram diagonal vanishes and the pairing of two
    points depends only on the line coordinates of their span:
    <x, y> = sum over s < t of gram[s][t] * (x_s y_t - x_t y_s).  A line is
    self-polar exactly when this expression vanishes, so the self-polar
    lines form the general linear complex with these six coefficients.
    """
    g = pol.gram
    return (g[0][1], g[0][2], g[0][3], g[1][2], g[1][3], g[2][3])


def line_in_complex(line: Subspace, pol: PolarityF) -> bool:
    """Whether the line satisfies the polarity's linear-complex equation."""
    pc = plucker_of_line(line)
    acc = ZERO
    for c, p in zip(complex_coefficients(pol), pc):
        if c and p:
            acc = acc + c * p
    return not acc


def random_self_polar_line(
    pol: PolarityF, rng: random.Random, degree_bound: int = 3
) -> Subspace:
    """A random self-polar line of a null polarity.

    Under a null polarity every point lies on its own polar plane, so any
    second point of that plane spans a totally isotropic line with it.
    """
    if not pol.is_null:
        raise ValueError("only null polarities have self-polar lines")
    while True:
        coords = tuple(random_elem(rng, degree_bound).square() for _ in range(4))
        if not any(coords):
            continue
        point = Subspace.point("F", coords)
        plane = polar_of(point, pol)
        weights = [random_elem(rng, degree_bound).square() for _ in range(3)]
        if not any(weights):
            continue
        other = linalg.mat_vec(plane.rows, weights, ZERO)
        line = Subspace.span("F", (point.generator(), other))
        if line.dim == 2:
            return line


def cosymplectic_witness(
    m: Subspace, n: Subspace, basis: BasisL | None = None
) -> LinearFormF:
    """A null form whose polarity makes two classes of lines self-polar.

    Given two distinct lines through the unit point F.1, the form is solved
    to vanish on the 3-space they span; phi(1) = 0 comes for free, so the
    polarity is null, and the self-polar condition phi(product of spanning
    elements) = 0 holds for every line of either parallel class at once.
    """
    basis = basis or default_basis()
    unit_row = tuple(basis.coords(ONE))
    for line in (m, n):
        if line.tag != "F" or not line.is_line:
            raise ValueError("expected two lines over F")
        if not line.contains_vector(unit_row):
            raise ValueError("both lines must pass through the unit point")
    if m == n:
        raise ValueError("the two lines must be distinct")
    plane = m.join(n)
    if plane.dim != 3:
        raise DegenerateConfigurationError("the two lines span no plane")
    kernel = linalg.right_nullspace(plane.rows, 4, ZERO, ONE)
    form = linear_form(kernel[0], basis)
    assert not form(ONE), "the unit point lies on the spanned plane"
    return form


# ---------------------------------------------------------------------------
# the extension of a form to the tensor algebra


def extended_form_value(form: LinearFormF, z) -> LElem:
    """(id (x) phi)(z), the L-linear extension of the form to T.

    Writing z as a sum of z_m (x) b_m over the basis, the extension sends z
    to the L-combination of the phi(b_m) with coefficients z_m.
    """
    acc = ZERO
    for c, e in zip(z.coords, form.basis.elements):
        if c:
            v = form(e)
            if v:
                acc = acc + c * v
    return acc


def extended_orthogonal_of_annihilator(
    form: LinearFormF, algebra: TensorAlgebra | None = None
) -> Subspace:
    """Orthogonal of the annihilator point under (z, w) |-> psi(z*w).

    Here psi = id (x) phi.  The result always contains the kernel plane of
    the multiplication homomorphism, because the annihilator multiplies the
    whole plane to zero; in fact psi(r * w) = psi(r) * pi(w) and psi(r) is
    never zero, so the orthogonal equals that plane exactly.
    """
    algebra = algebra or default_algebra()
    r = algebra.ideal_basis()[2]
    coeffs = tuple(
        extended_form_value(form, r * algebra.embed_second(e))
        for e in algebra.basis.elements
    )
    kernel = linalg.right_nullspace((coeffs,), 4, ZERO, ONE)
    return Subspace.span("L", kernel)
