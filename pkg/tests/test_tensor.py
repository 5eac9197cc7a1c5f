"""Tensor square of the field: structure constants, kernel plane, ideal basis."""

from __future__ import annotations

import random

import pytest

from cliffpar.errors import InvalidBasisError, MixedFieldError, NonInvertibleError
from cliffpar.field import (
    ONE,
    U,
    UV,
    V,
    ZERO,
    BasisL,
    LElem,
    default_basis,
    random_elem,
    random_nonzero,
)
from cliffpar.tensor import (
    IdealCoords,
    TensorAlgebra,
    alternation,
    annihilator_by_solving,
    annihilator_point,
    absolute_plane,
    default_algebra,
    embed_second,
    from_ideal,
    ideal_basis,
    ll_invert,
    ll_mul,
    ll_square_identity,
    norm_ll,
    pi_hom,
    pure_tensor,
    to_ideal,
)

E = LElem.parse

A = default_algebra()


def rand_tensor(rng, alg=A, bound=2):
    return alg.element([random_elem(rng, bound) for _ in range(4)])


def rand_kernel_elem(rng, alg=A, bound=2):
    p, q, r = alg.ideal_basis()
    acc = alg.zero
    for w in (p, q, r):
        acc = acc + w.scaled(random_elem(rng, bound))
    return acc


# -- multiplication table ------------------------------------------------------

def test_structure_constants_match_displayed_relations():
    b = A.basis
    one, ei, ej, ek = (A.element(row) for row in (
        (ONE, ZERO, ZERO, ZERO),
        (ZERO, ONE, ZERO, ZERO),
        (ZERO, ZERO, ONE, ZERO),
        (ZERO, ZERO, ZERO, ONE),
    ))
    isq, jsq = b.i_sq, b.j_sq
    assert ei * ei == one.scaled(isq)
    assert ej * ej == one.scaled(jsq)
    assert ei * ej == ek
    assert ej * ei == ek
    assert ei * ek == ej.scaled(isq)
    assert ej * ek == ei.scaled(jsq)
    assert ek * ek == one.scaled(isq * jsq)
    for g in (one, ei, ej, ek):
        assert one * g == g


def test_product_against_closed_form():
    # independent oracle: expand (z0 + z1 e1 + z2 e2 + z3 e3)(w0 + ...) by hand
    rng = random.Random(101)
    b = A.basis
    isq, jsq = b.i_sq, b.j_sq
    for _ in range(60):
        z = [random_elem(rng, 2) for _ in range(4)]
        w = [random_elem(rng, 2) for _ in range(4)]
        got = A.element(z) * A.element(w)
        expect = (
            z[0] * w[0] + isq * (z[1] * w[1]) + jsq * (z[2] * w[2])
            + isq * jsq * (z[3] * w[3]),
            z[0] * w[1] + z[1] * w[0] + jsq * (z[2] * w[3] + z[3] * w[2]),
            z[0] * w[2] + z[2] * w[0] + isq * (z[1] * w[3] + z[3] * w[1]),
            z[0] * w[3] + z[3] * w[0] + z[1] * w[2] + z[2] * w[1],
        )
        assert got.coords == expect


def test_product_commutative_and_associative():
    rng = random.Random(102)
    for _ in range(25):
        g, h, f = (rand_tensor(rng, bound=1) for _ in range(3))
        assert g * h == h * g
        assert (g * h) * f == g * (h * f)
        assert g * (h + f) == g * h + g * f


def test_pure_tensor_multiplicativity():
    rng = random.Random(103)
    for _ in range(25):
        x, y = random_elem(rng), random_elem(rng)
        s, t = random_elem(rng), random_elem(rng)
        assert ll_mul(pure_tensor(A, x, y), pure_tensor(A, s, t)) == pure_tensor(
            A, x * s, y * t
        )


def test_mixed_algebras_rejected():
    other = TensorAlgebra(BasisL(U + ONE, V))
    with pytest.raises(MixedFieldError):
        A.one + other.one
    with pytest.raises(MixedFieldError):
        A.one * other.one
    with pytest.raises(MixedFieldError):
        other.to_ideal(A.one)


# -- the collapse homomorphism and the quadratic identity ----------------------

def test_pi_is_a_ring_homomorphism():
    rng = random.Random(104)
    for _ in range(40):
        g, h = rand_tensor(rng), rand_tensor(rng)
        assert pi_hom(g * h) == pi_hom(g) * pi_hom(h)
        assert pi_hom(g + h) == pi_hom(g) + pi_hom(h)
        a = random_elem(rng)
        assert pi_hom(g.scaled(a)) == a * pi_hom(g)
    assert pi_hom(A.one) == ONE


def test_pi_restricted_to_embeddings():
    rng = random.Random(105)
    for _ in range(40):
        y = random_elem(rng)
        assert pi_hom(embed_second(A, y)) == y
        x = random_elem(rng)
        assert pi_hom(A.embed_first(x)) == x
        assert pi_hom(pure_tensor(A, x, y)) == x * y


def test_square_identity_and_norm():
    rng = random.Random(106)
    for _ in range(40):
        g = rand_tensor(rng)
        sq = ll_square_identity(g)  # raises if g*g leaves the base line
        assert sq == A.embed_first(norm_ll(g))
        assert norm_ll(g) == pi_hom(g).square()


def test_local_dichotomy_inverses():
    rng = random.Random(107)
    seen_invertible = 0
    for _ in range(40):
        g = rand_tensor(rng)
        if pi_hom(g):
            seen_invertible += 1
            inv = ll_invert(g)
            assert g * inv == A.one
        else:
            with pytest.raises(NonInvertibleError):
                ll_invert(g)
    assert seen_invertible >= 10
    for _ in range(10):
        with pytest.raises(NonInvertibleError):
            ll_invert(rand_kernel_elem(rng))


def test_invert_hand_value():
    g = embed_second(A, U)
    u_sq = (U * U).inverse()
    assert ll_invert(g).coords == (ZERO, u_sq, ZERO, ZERO)


# -- kernel plane, ideal basis, annihilator ------------------------------------

def test_ideal_basis_hand_coordinates():
    p, q, r = ideal_basis(A)
    assert p.coords == (U, ONE, ZERO, ZERO)
    assert q.coords == (V, ZERO, ONE, ZERO)
    assert r.coords == (UV, V, U, ONE)
    assert p * q == r


def test_ideal_basis_products_vanish():
    p, q, r = ideal_basis(A)
    zero = A.zero
    assert p * p == zero and q * q == zero and r * r == zero
    assert p * r == zero and q * r == zero
    assert q * p == r


def test_kernel_is_a_plane_with_point_annihilator():
    plane = absolute_plane(A)
    assert plane.is_plane
    point = annihilator_point(A)
    assert point.is_point
    assert point <= plane
    p, q, r = ideal_basis(A)
    assert point.contains_vector(r.coords)
    assert point == annihilator_by_solving(A)
    assert point.generator() == (UV, V, U, ONE)


def test_kernel_products_land_on_the_annihilator():
    rng = random.Random(108)
    point = annihilator_point(A)
    nonzero_products = 0
    for _ in range(30):
        g, h = rand_kernel_elem(rng), rand_kernel_elem(rng)
        assert pi_hom(g).is_zero and absolute_plane(A).contains_vector(g.coords)
        prod = g * h
        if prod:
            nonzero_products += 1
            assert point.contains_vector(prod.coords)
    assert nonzero_products >= 5


def test_annihilator_kills_the_whole_kernel():
    rng = random.Random(109)
    _, _, r = ideal_basis(A)
    for _ in range(20):
        assert r * rand_kernel_elem(rng) == A.zero


# -- ideal coordinates ----------------------------------------------------------

def test_to_ideal_of_embedded_elements():
    b = A.basis
    k = b.k
    got = to_ideal(embed_second(A, k))
    assert got == IdealCoords(k, b.j, b.i, ONE)
    rng = random.Random(110)
    for _ in range(30):
        y = random_elem(rng)
        c = b.coords(y)
        got = to_ideal(embed_second(A, y))
        assert got == (y, c.c1 + c.c3 * b.j, c.c2 + c.c3 * b.i, c.c3.value)


def test_ideal_roundtrip_and_involution():
    rng = random.Random(111)
    for _ in range(30):
        g = rand_tensor(rng)
        assert from_ideal(A, to_ideal(g)) == g
        # the change of basis is an involution: reading the same row twice
        # in the other system comes back to the start
        row = g.coords
        assert tuple(to_ideal(A.element(row))) == from_ideal(A, row).coords


def test_first_ideal_coordinate_is_pi():
    rng = random.Random(112)
    for _ in range(30):
        g = rand_tensor(rng)
        assert to_ideal(g).g0 == pi_hom(g)


# -- alternation ----------------------------------------------------------------

def test_alternation_lands_in_the_kernel():
    rng = random.Random(113)
    plane = absolute_plane(A)
    for _ in range(30):
        x, y = random_elem(rng), random_elem(rng)
        alt = alternation(A, x, y)
        assert pi_hom(alt).is_zero
        assert plane.contains_vector(alt.coords)


def test_alternation_vanishes_exactly_on_dependent_pairs():
    rng = random.Random(114)
    zeros = 0
    for _ in range(30):
        x = random_nonzero(rng)
        f = random_elem(rng).square()  # a scalar from the small field
        assert not alternation(A, x, f.value * x)
        y = random_elem(rng)
        alt = alternation(A, x, y)
        if not alt:
            zeros += 1
    assert zeros <= 2  # random pairs are almost never dependent


def test_alternation_bilinear_and_symmetric():
    rng = random.Random(115)
    for _ in range(20):
        x, y, z = (random_elem(rng) for _ in range(3))
        assert alternation(A, x, y) == alternation(A, y, x)
        assert alternation(A, x, y + z) == alternation(A, x, y) + alternation(A, x, z)
    p, q, _ = ideal_basis(A)
    assert alternation(A, ONE, A.basis.i) == p
    assert alternation(A, ONE, A.basis.j) == q


def test_left_action_on_p_decomposes_over_p_and_jp_r():
    # (1 (x) y) p = (y0 + i y1) p + (y2 + i y3) (j p + r) for y = y0+y1 i+y2 j+y3 k
    rng = random.Random(116)
    b = A.basis
    p, q, r = ideal_basis(A)
    jp_r = p.scaled(b.j) + r
    for _ in range(30):
        y = random_elem(rng)
        c = b.coords(y)
        lhs = embed_second(A, y) * p
        rhs = p.scaled(c.c0 + b.i * c.c1) + jp_r.scaled(c.c2 + b.i * c.c3)
        assert lhs == rhs


# -- other bases ----------------------------------------------------------------

@pytest.mark.parametrize("seed", [1, 2, 3])
def test_algebra_over_random_bases(seed):
    rng = random.Random(2000 + seed)
    while True:
        try:
            basis = BasisL(random_nonzero(rng, 2), random_nonzero(rng, 2))
            break
        except InvalidBasisError:
            continue
    alg = TensorAlgebra(basis)
    one = alg.one
    ei = alg.element((ZERO, ONE, ZERO, ZERO))
    ej = alg.element((ZERO, ZERO, ONE, ZERO))
    ek = alg.element((ZERO, ZERO, ZERO, ONE))
    assert ei * ei == one.scaled(basis.i_sq)
    assert ej * ej == one.scaled(basis.j_sq)
    assert ei * ej == ek
    for _ in range(5):
        g, h, f = (rand_tensor(rng, alg, 1) for _ in range(3))
        assert (g * h) * f == g * (h * f)
        assert alg.to_ideal(g * h).g0 == alg.to_ideal(g).g0 * alg.to_ideal(h).g0
        ll_square_identity(g)
    p, q, r = alg.ideal_basis()
    assert p * q == r and not p * p and not r * r
    assert alg.annihilator_point() == alg.annihilator_by_solving()
    assert alg.absolute_plane().is_plane
    for _ in range(5):
        y = random_elem(rng)
        assert pi_hom(alg.embed_second(y)) == y


# -- serialization ---------------------------------------------------------------

def test_to_dict_forms():
    _, _, r = ideal_basis(A)
    d = r.to_dict()
    assert d["basis"] == "basisLL"
    assert d["coords"] == ["u*v", "v", "u", "1"]
    d2 = r.to_dict("ideal")
    assert d2["basis"] == "ideal"
    assert d2["coords"] == ["0", "0", "0", "1"]
    with pytest.raises(ValueError):
        r.to_dict("nope")


# -- sensitivity of the constants table ------------------------------------------

def test_any_flipped_constant_breaks_the_square_identity():
    g_row = (E("1"), E("1"), E("1"), E("1"))
    expected = A.element(g_row) * A.element(g_row)
    for m in range(4):
        for n in range(4):
            for t in range(4):
                broken = A.with_flipped_constant(m, n, t)
                # exactly one table entry changed
                diffs = [
                    (a, b, c)
                    for a in range(4)
                    for b in range(4)
                    for c in range(4)
                    if broken.table[a][b][c] != A.table[a][b][c]
                ]
                assert diffs == [(m, n, t)]
                g = broken.element(g_row)
                assert (g * g).coords != expected.coords
                with pytest.raises(AssertionError):
                    g.square_identity()
