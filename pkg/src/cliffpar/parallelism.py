"""The parallelism on the lines of PG(3, F) induced by multiplication in L.

Two lines M, N of PG(3, F) (coordinates over a basis (1, i, j, k) of L, so a
line is a 2-dimensional F-subspace of L) are parallel when N = Mb for some
nonzero b in L.  Every class has a unique representative through the point
F*1, and that representative K = F + F*i is an intermediate field since i^2
always lies in F; this makes the parallelism decidable by division.

The same relation has a purely geometric description inside the scalar
extension: extending M to an L-line and intersecting with the kernel plane
Pi gives the single point L(a(x)b + b(x)a) for any spanning pair (a, b), and
M, N are parallel exactly when their two intersection points are collinear
with the annihilator point.  Both tests are implemented and verified against
each other; the rationality of the intersection point over F + F*i singles
out the class of F + F*i itself.
"""

from __future__ import annotations

import random
from typing import NamedTuple, Optional, Sequence

from . import linalg
from .errors import DegenerateConfigurationError
from .field import (
    BasisL,
    LElem,
    ONE,
    U,
    UV,
    V,
    ZERO,
    is_in_intermediate,
    random_elem,
    random_nonzero,
)
from .projective import Subspace, collinear, transversal
from .tensor import LLElem, TensorAlgebra, default_algebra

__all__ = [
    "ParallelClassHandle",
    "line_elements",
    "line_of_elements",
    "line_times_scalar",
    "canonical_rep",
    "is_parallel_algebraic",
    "parallel_through",
    "absolute_intersection",
    "is_parallel_geometric",
    "k_rational_line_in_Pi",
    "complete_basis",
    "is_k_rational_point",
    "DoubleSpaceReport",
    "double_space_check",
    "RegulusReport",
    "regulus_regularity_sample",
]


class ParallelClassHandle(NamedTuple):
    """A parallel class, named by its representative through F*1.

    ``line`` is the canonical representative K (it always contains F*1) and
    ``generator`` is the deterministically chosen i with K = F + F*i: the
    element of the second canonical row, which has no 1-component.
    """

    line: Subspace
    generator: LElem


def _check_f_line(m: Subspace) -> None:
    if m.tag != "F" or not m.is_line:
        raise ValueError("expected a line with coordinates over the base field")


def line_elements(m: Subspace, algebra: TensorAlgebra | None = None) -> tuple:
    """The canonical spanning pair of an F-line, read back as field elements."""
    algebra = algebra or default_algebra()
    _check_f_line(m)
    basis = algebra.basis
    return tuple(basis.recompose(row) for row in m.rows)


def line_of_elements(
    a: LElem, b: LElem, algebra: TensorAlgebra | None = None
) -> Subspace:
    """The F-line spanned by two independent field elements."""
    algebra = algebra or default_algebra()
    basis = algebra.basis
    return Subspace.line("F", basis.coords(a), basis.coords(b))


def line_times_scalar(
    m: Subspace, b: LElem, algebra: TensorAlgebra | None = None
) -> Subspace:
    """The line {xb : x in M}; the defining motion of the parallelism."""
    algebra = algebra or default_algebra()
    if not b:
        raise ValueError("lines can only be moved by a nonzero element")
    _check_f_line(m)
    basis = algebra.basis
    rows = [basis.coords(basis.recompose(row) * b) for row in m.rows]
    return Subspace.line("F", *rows)


def canonical_rep(
    m: Subspace, algebra: TensorAlgebra | None = None
) -> ParallelClassHandle:
    """The unique parallel line through F*1, with its chosen generator."""
    algebra = algebra or default_algebra()
    _check_f_line(m)
    m0 = algebra.basis.recompose(m.rows[0])
    k = line_times_scalar(m, m0.inverse(), algebra)
    if k.pivots[0] != 0:
        raise AssertionError("representative line misses the unit point")
    gen = algebra.basis.recompose(k.rows[1])
    if gen.is_in_F:
        raise AssertionError("second canonical row recomposed into the base field")
    return ParallelClassHandle(k, gen)


def is_parallel_algebraic(
    m: Subspace, n: Subspace, algebra: TensorAlgebra | None = None
) -> bool:
    """Parallel by definition: both lines divide down to the same representative."""
    algebra = algebra or default_algebra()
    return canonical_rep(m, algebra).line == canonical_rep(n, algebra).line


def parallel_through(
    m: Subspace, a: Subspace, algebra: TensorAlgebra | None = None
) -> Subspace:
    """The unique line through the point A parallel to M."""
    algebra = algebra or default_algebra()
    if a.tag != "F" or not a.is_point:
        raise ValueError("expected a point with coordinates over the base field")
    k = canonical_rep(m, algebra).line
    return line_times_scalar(k, algebra.basis.recompose(a.generator()), algebra)


def absolute_intersection(
    m: Subspace, algebra: TensorAlgebra | None = None
) -> Subspace:
    """Where the L-extension of M pierces the kernel plane.

    For a spanning pair (a, b) of M this is the point L(a(x)b + b(x)a); the
    result is independent of the pair.  It can never be the annihilator
    point, and that impossibility is asserted rather than assumed.
    """
    algebra = algebra or default_algebra()
    a, b = line_elements(m, algebra)
    alt = algebra.alternation(a, b)
    point = Subspace.point("L", alt.coords)
    if point == algebra.annihilator_point():
        raise AssertionError(
            "a line extension met the kernel plane at the annihilator point"
        )
    return point


def is_parallel_geometric(
    m: Subspace, n: Subspace, algebra: TensorAlgebra | None = None
) -> bool:
    """Parallel by incidence: a pencil line through the annihilator point
    meets both extended lines, i.e. the two intersection points with the
    kernel plane are collinear with that point."""
    algebra = algebra or default_algebra()
    return collinear(
        algebra.annihilator_point(),
        absolute_intersection(m, algebra),
        absolute_intersection(n, algebra),
    )


# ---------------------------------------------------------------------------
# rationality over an intermediate field F + F*i

def complete_basis(i: LElem, algebra: TensorAlgebra | None = None) -> BasisL:
    """Deterministically extend (1, i) to a basis (1, i, j, ij) of L."""
    algebra = algebra or default_algebra()
    if i.is_in_F:
        raise ValueError("an intermediate-field generator must lie outside F")
    for j in (ONE, U, V, UV):
        if not is_in_intermediate(j, i):
            return BasisL(i, j)
    raise AssertionError("no standard vector completes the basis")  # unreachable


def k_rational_line_in_Pi(
    i: LElem, algebra: TensorAlgebra | None = None
) -> Subspace:
    """The unique line of the kernel plane that is rational over F + F*i.

    It joins the point L(1(x)i + i(x)1) with the annihilator point.
    """
    algebra = algebra or default_algebra()
    if i.is_in_F:
        raise ValueError("an intermediate-field generator must lie outside F")
    p = algebra.alternation(ONE, i)
    ann = algebra.annihilator_point()
    return Subspace.line("L", p.coords, ann.generator())


def is_k_rational_point(
    point: Subspace, i: LElem, algebra: TensorAlgebra | None = None
) -> bool:
    """Whether a point of the kernel plane is rational over K = F + F*i.

    Writing a generator on the K-rational line as c1*p + c2*(jp + r) (after
    the deterministic basis completion), the point is K-rational exactly when
    c2 = 0 (the point Lp) or c1/c2 lies in K.  Points of the plane off that
    line are never K-rational.
    """
    algebra = algebra or default_algebra()
    if point.tag != "L" or not point.is_point:
        raise ValueError("expected a point of the extended space")
    if not algebra.absolute_plane().contains(point):
        raise ValueError("rationality test expects a point of the kernel plane")
    basis = complete_basis(i, algebra)
    p = algebra.alternation(ONE, i)
    q = algebra.alternation(ONE, basis.j)
    r = p * q
    jp_r = p.scaled(basis.j) + r
    target = point.generator()
    sol = linalg.solve_left((p.coords, jp_r.coords), target, ZERO, ONE)
    if sol is None:
        return False  # off the K-rational line
    c1, c2 = sol
    if not c2:
        return True  # the point Lp itself
    return is_in_intermediate(c1 / c2, i)


# ---------------------------------------------------------------------------
# the double space axiom and regularity of the classes

class DoubleSpaceReport(NamedTuple):
    """Outcome of one double-space configuration.

    ``degenerate`` marks inputs that do not span two proper lines; the
    diagonal fields stay None when the four lines are not mutually distinct
    (the skew-parallelogram statement needs a tetrahedron).
    """

    degenerate: bool
    common_point_on_both: Optional[bool]
    lines_distinct: Optional[bool]
    diagonals_parallel: Optional[bool]

    @property
    def ok(self) -> bool:
        if self.degenerate:
            return True  # nothing to verify
        if not self.common_point_on_both:
            return False
        if self.lines_distinct and self.diagonals_parallel is not True:
            return False
        return True


def double_space_check(
    a: LElem, b: LElem, c: LElem, algebra: TensorAlgebra | None = None
) -> DoubleSpaceReport:
    """Verify the double space axiom on the lines spanned by a, b and a, c.

    With M through Fa and Fb, and N through Fa and Fc, the parallel to M
    through Fc and the parallel to N through Fb meet at Fd with d = a^-1 b c.
    When the four lines are mutually distinct, the remaining diagonal lines
    Fa + Fd and Fb + Fc of the skew parallelogram are parallel to each other.
    """
    algebra = algebra or default_algebra()
    basis = algebra.basis
    if not a:
        raise ValueError("the common point needs a nonzero representative")
    if linalg.rank((basis.coords(a), basis.coords(b))) < 2 or linalg.rank(
        (basis.coords(a), basis.coords(c))
    ) < 2:
        return DoubleSpaceReport(True, None, None, None)
    m = line_of_elements(a, b, algebra)
    n = line_of_elements(a, c, algebra)
    a_inv = a.inverse()
    m_prime = line_times_scalar(m, a_inv * c, algebra)
    n_prime = line_times_scalar(n, a_inv * b, algebra)
    d = a_inv * b * c
    d_row = basis.coords(d)
    on_both = m_prime.contains_vector(d_row) and n_prime.contains_vector(d_row)
    distinct = len({m, n, m_prime, n_prime}) == 4
    diagonals = None
    if distinct:
        diag1 = line_of_elements(a, d, algebra)
        diag2 = line_of_elements(b, c, algebra)
        diagonals = is_parallel_algebraic(diag1, diag2, algebra)
    return DoubleSpaceReport(False, on_both, distinct, diagonals)


class RegulusReport(NamedTuple):
    samples: int
    regulus_lines_checked: int
    transversal_pairs_checked: int
    failures: int
    skipped: int
    witnesses: tuple


def _random_point_on(m: Subspace, rng: random.Random, bound: int) -> Subspace:
    """A random point of a line, by an F-combination of its canonical rows."""
    r0, r1 = m.rows
    while True:
        f0 = random_elem(rng, bound).square()
        f1 = random_elem(rng, bound).square()
        if not f0 and not f1:
            continue
        row = tuple(f0 * x + f1 * y for x, y in zip(r0, r1))
        return Subspace.point(m.tag, row)


def regulus_regularity_sample(
    m: Subspace,
    samples: int,
    rng: random.Random,
    algebra: TensorAlgebra | None = None,
    degree_bound: int = 3,
) -> RegulusReport:
    """Sample reguli spanned by three lines of the class of M.

    Each round draws two scalars to get three mutually distinct parallel
    lines, takes transversals through three random points of M (these are
    lines of the opposite ruling, checked mutually parallel), then draws a
    regulus line through a random point of the first transversal and checks
    it is parallel to M.  Degenerate draws are skipped and counted.

    The three base points and the point on the first transversal use scalar
    coefficients of degree at most one: every point of a line arises from
    some coefficient pair, so this only biases which points are drawn, while
    keeping the exact coordinates of the derived transversals small.
    """
    algebra = algebra or default_algebra()
    _check_f_line(m)
    rep_m = canonical_rep(m, algebra).line
    checked = 0
    pairs_checked = 0
    failures = 0
    skipped = 0
    witnesses = []
    for _ in range(samples):
        b1 = random_nonzero(rng, degree_bound)
        b2 = random_nonzero(rng, degree_bound)
        m1 = line_times_scalar(m, b1, algebra)
        m2 = line_times_scalar(m, b2, algebra)
        if m1 == m or m2 == m or m1 == m2:
            skipped += 1
            continue
        try:
            points = []
            while len(points) < 3:
                pt = _random_point_on(m, rng, 1)
                if pt not in points:
                    points.append(pt)
            t1, t2, t3 = (transversal(pt, m1, m2) for pt in points)
            pairs_checked += 1
            reps = [canonical_rep(t, algebra).line for t in (t1, t2, t3)]
            if not (reps[0] == reps[1] == reps[2]):
                failures += 1
                witnesses.append(
                    {"kind": "opposite-ruling", "m": m.to_dict(), "t1": t1.to_dict()}
                )
                continue
            q = _random_point_on(t1, rng, 1)
            reg_line = transversal(q, t2, t3)
        except DegenerateConfigurationError:
            skipped += 1
            continue
        checked += 1
        if canonical_rep(reg_line, algebra).line != rep_m:
            failures += 1
            witnesses.append(
                {"kind": "regulus-line", "m": m.to_dict(), "line": reg_line.to_dict()}
            )
    return RegulusReport(
        samples, checked, pairs_checked, failures, skipped, tuple(witnesses)
    )
