"""The induced parallelism: algebraic route, geometric route, rationality."""

from __future__ import annotations

import random

import pytest

from cliffpar.field import (
    ONE,
    U,
    UV,
    V,
    ZERO,
    LElem,
    random_elem,
    random_nonzero,
)
from cliffpar.parallelism import (
    absolute_intersection,
    canonical_rep,
    complete_basis,
    double_space_check,
    is_k_rational_point,
    is_parallel_algebraic,
    is_parallel_geometric,
    k_rational_line_in_Pi,
    line_elements,
    line_of_elements,
    line_times_scalar,
    parallel_through,
    regulus_regularity_sample,
)
from cliffpar.projective import Subspace
from cliffpar.tensor import default_algebra, embed_second, ideal_basis, pi_hom

E = LElem.parse
A = default_algebra()

F_U = line_of_elements(ONE, U)  # the intermediate field F + Fu as a line
F_V = line_of_elements(ONE, V)


def random_f_scalar(rng, bound=2):
    return random_elem(rng, bound).square()


def random_f_line(rng, bound=2):
    while True:
        x, y = random_nonzero(rng, bound), random_nonzero(rng, bound)
        try:
            return line_of_elements(x, y)
        except ValueError:
            continue


def random_f_point(rng, bound=2):
    while True:
        row = tuple(random_f_scalar(rng, bound) for _ in range(4))
        if any(row):
            return Subspace.point("F", row)


# -- moving lines by field elements ---------------------------------------------

def test_line_times_scalar_hand_values():
    assert line_times_scalar(F_U, ONE) == F_U
    assert line_times_scalar(F_U, V) == line_of_elements(V, UV)
    with pytest.raises(ValueError):
        line_times_scalar(F_U, ZERO)


def test_scalar_action_squares_to_identity():
    rng = random.Random(201)
    for _ in range(20):
        m = random_f_line(rng)
        b = random_nonzero(rng)
        assert line_times_scalar(line_times_scalar(m, b), b) == m


def test_canonical_rep_hand_values():
    rep = canonical_rep(F_U)
    assert rep.line == F_U
    assert rep.generator == U
    moved = line_of_elements(V, UV)
    rep2 = canonical_rep(moved)
    assert rep2.line == F_U  # divide by v


def test_canonical_rep_is_class_invariant():
    rng = random.Random(202)
    for _ in range(20):
        m = random_f_line(rng)
        b = random_nonzero(rng)
        assert canonical_rep(line_times_scalar(m, b)) == canonical_rep(m)
    rep = canonical_rep(m)
    assert rep.line.contains_vector((ONE, ZERO, ZERO, ZERO))
    assert not rep.generator.is_in_F


def test_is_parallel_algebraic_basics():
    rng = random.Random(203)
    assert is_parallel_algebraic(F_U, F_U)
    assert not is_parallel_algebraic(F_U, F_V)
    for _ in range(10):
        b = random_nonzero(rng)
        assert is_parallel_algebraic(line_times_scalar(F_U, b), F_U)


def test_parallel_through():
    rng = random.Random(204)
    assert parallel_through(F_U, Subspace.point("F", (ZERO, ZERO, ONE, ZERO))) == (
        line_of_elements(V, UV)
    )
    for _ in range(15):
        m = random_f_line(rng)
        a = random_f_point(rng)
        n = parallel_through(m, a)
        assert a <= n
        assert is_parallel_algebraic(m, n)
        # spread property: any parallel line through the same point coincides
        again = parallel_through(n, a)
        assert again == n
    # a point already on M gives back M
    pt = Subspace.point("F", m.rows[0])
    assert parallel_through(m, pt) == m


# -- the geometric route ----------------------------------------------------------

def test_absolute_intersection_hand_value():
    got = absolute_intersection(F_U)
    p, _, _ = ideal_basis(A)
    assert got == Subspace.point("L", p.coords)
    assert got.generator() == (U, ONE, ZERO, ZERO)


def test_absolute_intersection_well_defined_and_incident():
    rng = random.Random(205)
    plane = A.absolute_plane()
    for _ in range(15):
        m = random_f_line(rng)
        x = absolute_intersection(m)
        assert x <= plane
        assert x <= m.extend_to_L()
        # re-span the same line by two other members and recompute
        a, b = line_elements(m)
        f = [random_f_scalar(rng) for _ in range(4)]
        a2 = f[0] * a + f[1] * b
        b2 = f[2] * a + f[3] * b
        try:
            m2 = line_of_elements(a2, b2)
        except ValueError:
            continue
        assert m2 == m
        assert absolute_intersection(m2) == x


def test_extension_meets_plane_in_exactly_the_intersection_point():
    rng = random.Random(206)
    plane = A.absolute_plane()
    for _ in range(10):
        m = random_f_line(rng)
        met = m.extend_to_L().meet(plane)
        assert met == absolute_intersection(m)


def test_geometric_equals_algebraic_on_structured_pairs():
    rng = random.Random(207)
    assert is_parallel_geometric(F_U, F_U)
    assert is_parallel_geometric(F_U, line_times_scalar(F_U, E("v+1")))
    assert not is_parallel_geometric(F_U, F_V)
    for _ in range(25):
        m = random_f_line(rng)
        # forced parallel
        n = line_times_scalar(m, random_nonzero(rng))
        assert is_parallel_algebraic(m, n) and is_parallel_geometric(m, n)
        # forced intersecting through a shared point
        pt = _shared = _random = None
        a, b = line_elements(m)
        c = random_nonzero(rng)
        try:
            n2 = line_of_elements(a, c)
        except ValueError:
            continue
        assert is_parallel_geometric(m, n2) == is_parallel_algebraic(m, n2)
        # uniform
        n3 = random_f_line(rng)
        assert is_parallel_geometric(m, n3) == is_parallel_algebraic(m, n3)


def test_parallelism_is_an_equivalence_on_samples():
    rng = random.Random(208)
    for _ in range(10):
        m = random_f_line(rng)
        n = line_times_scalar(m, random_nonzero(rng))
        o = line_times_scalar(n, random_nonzero(rng))
        assert is_parallel_algebraic(m, m)
        assert is_parallel_algebraic(m, n) == is_parallel_algebraic(n, m)
        if is_parallel_algebraic(m, n) and is_parallel_algebraic(n, o):
            assert is_parallel_algebraic(m, o)


def test_distinct_lines_have_distinct_absolute_points():
    rng = random.Random(209)
    for _ in range(15):
        m, n = random_f_line(rng), random_f_line(rng)
        if m == n:
            continue
        xm, xn = absolute_intersection(m), absolute_intersection(n)
        assert xm != xn
        assert not n.extend_to_L().contains(xm)


# -- rationality over an intermediate field --------------------------------------

def test_k_rational_line_hand_value():
    line = k_rational_line_in_Pi(U)
    assert line == Subspace.span(
        "L", ((UV, V, U, ONE), (U, ONE, ZERO, ZERO))
    )
    assert line <= A.absolute_plane()
    with pytest.raises(ValueError):
        k_rational_line_in_Pi(U * U)


def test_k_rational_line_contains_the_action_points():
    p, _, _ = ideal_basis(A)
    line = k_rational_line_in_Pi(U)
    for y in (ONE, U, V, UV):
        moved = embed_second(A, y) * p
        assert line.contains_vector(moved.coords)


def test_complete_basis_is_deterministic():
    b = complete_basis(U)
    assert (b.i, b.j) == (U, V)
    b2 = complete_basis(V)
    assert (b2.i, b2.j) == (V, U)
    b3 = complete_basis(E("u+v"))
    assert b3.i == E("u+v") and b3.j == U
    with pytest.raises(ValueError):
        complete_basis(ONE)


def test_is_k_rational_point_hand_values():
    p, q, r = ideal_basis(A)
    lp = Subspace.point("L", p.coords)
    assert is_k_rational_point(lp, U)
    ann = A.annihilator_point()
    assert not is_k_rational_point(ann, U)
    jp_r = p.scaled(V) + r
    assert is_k_rational_point(Subspace.point("L", jp_r.coords), U)
    lq = Subspace.point("L", q.coords)
    assert not is_k_rational_point(lq, U)  # off the rational line
    with pytest.raises(ValueError):
        is_k_rational_point(Subspace.point("L", (ONE, ZERO, ZERO, ZERO)), U)


def test_k_rational_points_from_the_action():
    rng = random.Random(210)
    for i in (U, V, E("u+v+1"), E("u*v+u")):
        p = A.alternation(ONE, i)
        line = k_rational_line_in_Pi(i)
        for _ in range(8):
            y = random_nonzero(rng, 2)
            pt = Subspace.point("L", (embed_second(A, y) * p).coords)
            assert pt <= line
            assert is_k_rational_point(pt, i)
        # points whose ratio c1/c2 leaves F + F*i are not rational over it
        basis = complete_basis(i)
        q = A.alternation(ONE, basis.j)
        r = p * q
        jp_r = p.scaled(basis.j) + r
        ratio_one_plus_j = p.scaled(ONE + basis.j) + jp_r
        ratio_k = p.scaled(i * basis.j) + jp_r
        for candidate in (ratio_one_plus_j, ratio_k):
            pt = Subspace.point("L", candidate.coords)
            assert not is_k_rational_point(pt, i)


def test_rationality_matches_parallelism():
    rng = random.Random(211)
    for i in (U, E("u+v"), E("u*v+v+1")):
        k_line = canonical_rep(line_of_elements(ONE, i)).line
        for _ in range(10):
            m = random_f_line(rng)
            same_class = is_parallel_algebraic(m, k_line)
            rational = is_k_rational_point(absolute_intersection(m), i)
            assert same_class == rational


# -- double space axiom ------------------------------------------------------------

def test_double_space_hand_configuration():
    rep = double_space_check(ONE, U, V)
    assert not rep.degenerate
    assert rep.common_point_on_both
    assert rep.lines_distinct
    assert rep.diagonals_parallel
    assert rep.ok


def test_double_space_degenerate_inputs():
    rep = double_space_check(ONE, U * U, V)  # b inside Fa (u^2 is an F-scalar)
    assert rep.degenerate and rep.ok
    with pytest.raises(ValueError):
        double_space_check(ZERO, U, V)


def test_double_space_random_triples():
    rng = random.Random(212)
    seen_diagonal = 0
    for _ in range(40):
        a = random_nonzero(rng)
        b, c = random_nonzero(rng), random_nonzero(rng)
        rep = double_space_check(a, b, c)
        assert rep.ok
        if rep.lines_distinct:
            seen_diagonal += 1
            assert rep.diagonals_parallel
    assert seen_diagonal >= 20


# -- reguli -------------------------------------------------------------------------

def test_regulus_sampling_on_the_standard_class():
    rng = random.Random(213)
    report = regulus_regularity_sample(F_U, 6, rng)
    assert report.failures == 0
    assert report.regulus_lines_checked >= 3
    assert report.witnesses == ()


def test_regulus_sampling_on_random_classes():
    rng = random.Random(214)
    for _ in range(3):
        m = random_f_line(rng)
        report = regulus_regularity_sample(m, 4, rng)
        assert report.failures == 0
        assert report.regulus_lines_checked + report.skipped == 4
