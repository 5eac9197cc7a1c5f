"""Kernel tests for GF(2)[u, v].

Multiplication is checked against a naive set-convolution oracle that never
touches the packed representation, and gcd against sympy's multivariate gcd
over GF(2), so both routes are independent of the code under test.
"""

from __future__ import annotations

import random

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from cliffpar.gf2poly import ONE, U, UV, V, ZERO, Poly2, gcd

# -- oracles ----------------------------------------------------------------


def naive_mul(a: frozenset, b: frozenset) -> frozenset:
    out: set[tuple[int, int]] = set()
    for (x1, y1) in a:
        for (x2, y2) in b:
            m = (x1 + x2, y1 + y2)
            out.symmetric_difference_update({m})
    return frozenset(out)


_SYM_U, _SYM_V = sympy.symbols("u v")


def to_sympy(p: Poly2):
    expr = sum(
        (_SYM_U ** a * _SYM_V ** b for a, b in p.monomials()),
        sympy.Integer(0),
    )
    return sympy.Poly(expr, _SYM_U, _SYM_V, modulus=2)


def from_sympy(sp) -> Poly2:
    pairs = [(a, b) for (a, b), c in sp.terms() if int(c) % 2]
    return Poly2.from_monomials(pairs)


def random_poly(rng: random.Random, max_deg: int = 4, max_terms: int = 6) -> Poly2:
    n = rng.randrange(max_terms + 1)
    return Poly2.from_monomials(
        (rng.randrange(max_deg + 1), rng.randrange(max_deg + 1)) for _ in range(n)
    )


monomials_st = st.tuples(st.integers(0, 5), st.integers(0, 5))
polys_st = st.frozensets(monomials_st, max_size=8).map(Poly2.from_monomials)


# -- construction and text form ----------------------------------------------


def test_constants():
    assert ZERO.is_zero and not ONE.is_zero
    assert ONE.is_one
    assert str(U) == "u" and str(V) == "v" and str(UV) == "u*v"
    assert U.monomials() == frozenset({(1, 0)})


def test_from_monomials_cancels_in_pairs():
    p = Poly2.from_monomials([(1, 2), (0, 0), (1, 2)])
    assert p == ONE


def test_str_ordering_graded_then_u():
    p = Poly2.from_monomials([(0, 0), (1, 0), (2, 1)])
    assert str(p) == "u^2*v + u + 1"
    q = Poly2.from_monomials([(2, 0), (1, 1), (0, 2)])
    assert str(q) == "u^2 + u*v + v^2"


@given(polys_st)
def test_parse_roundtrip(p):
    assert Poly2.parse(str(p)) == p


def test_parse_rejects_garbage():
    for bad in ["", "u^-1", "w", "u^", "u +  + v"]:
        with pytest.raises(ValueError):
            Poly2.parse(bad)


def test_degrees():
    p = Poly2.parse("u^3*v + v^2")
    assert p.deg_u == 3 and p.deg_v == 2 and p.degree == 4
    assert ZERO.degree == -1


# -- ring axioms and oracle comparison ----------------------------------------


@given(polys_st, polys_st)
def test_mul_matches_naive_oracle(p, q):
    assert (p * q).monomials() == naive_mul(p.monomials(), q.monomials())


@given(polys_st, polys_st, polys_st)
def test_mul_distributes(p, q, r):
    assert p * (q + r) == p * q + p * r


@given(polys_st, polys_st)
def test_commutative(p, q):
    assert p * q == q * p
    assert p + q == q + p


@given(polys_st)
def test_char_two(p):
    assert p + p == ZERO
    assert p * ONE == p and p * ZERO == ZERO


def test_hand_expanded_cube():
    # (u + 1)^3 = u^3 + u^2 + u + 1
    p = Poly2.parse("u + 1")
    assert p ** 3 == Poly2.parse("u^3 + u^2 + u + 1")


@given(polys_st)
def test_square_is_frobenius(p):
    sq = p.square()
    assert sq == p * p
    assert sq.monomials() == frozenset((2 * a, 2 * b) for a, b in p.monomials())
    assert sq.all_exponents_even


def test_all_exponents_even_detects_odd():
    assert Poly2.parse("u^2*v^2 + u^4").all_exponents_even
    assert not Poly2.parse("u^2*v").all_exponents_even
    assert not Poly2.parse("u^3").all_exponents_even
    assert ZERO.all_exponents_even


@given(polys_st)
def test_parity_quarters_recompose(p):
    q0, q1, q2, q3 = p.parity_quarters()
    for q in (q0, q1, q2, q3):
        assert q.all_exponents_even
    assert q0 + U * q1 + V * q2 + UV * q3 == p


# -- exact division -----------------------------------------------------------


@given(polys_st, polys_st)
def test_exact_div_of_product(p, q):
    if q.is_zero:
        return
    assert (p * q).exact_div(q) == p


def test_try_div_detects_non_divisor():
    assert Poly2.parse("u^2 + 1").try_div(Poly2.parse("v")) is None
    assert Poly2.parse("u^2 + v").try_div(Poly2.parse("u + v")) is None
    assert Poly2.parse("u^2 + u*v").try_div(Poly2.parse("u + v")) == U


def test_shifted():
    p = Poly2.parse("u*v + u")
    assert p.shifted(1, 1) == Poly2.parse("u^2*v^2 + u^2*v")
    assert p.shifted(-1, 0) == Poly2.parse("v + 1")
    with pytest.raises(ArithmeticError):
        p.shifted(0, -1)


# -- gcd ----------------------------------------------------------------------


def test_gcd_hand_examples():
    assert gcd(Poly2.parse("u^2 + u*v"), Poly2.parse("u + v")) == Poly2.parse("u + v")
    assert gcd(U, V) == ONE
    assert gcd(Poly2.parse("u^2 + v^2"), Poly2.parse("u + v")) == Poly2.parse("u + v")
    assert gcd(ZERO, U) == U and gcd(U, ZERO) == U
    with pytest.raises(ValueError):
        gcd(ZERO, ZERO)


@settings(deadline=None)
@given(polys_st, polys_st)
def test_gcd_divides_both(p, q):
    if p.is_zero and q.is_zero:
        return
    g = gcd(p, q)
    assert gcd(p, q) == gcd(q, p)
    if not p.is_zero:
        assert p.try_div(g) is not None
    if not q.is_zero:
        assert q.try_div(g) is not None


def test_gcd_matches_sympy():
    rng = random.Random(7)
    checked = 0
    for _ in range(220):
        p = random_poly(rng)
        q = random_poly(rng)
        w = random_poly(rng, max_deg=2, max_terms=3)
        p, q = p * w, q * w
        if p.is_zero and q.is_zero:
            continue
        expected = from_sympy(sympy.gcd(to_sympy(p), to_sympy(q)))
        assert gcd(p, q) == expected
        checked += 1
    assert checked >= 100


def test_gcd_scales_with_common_factor():
    rng = random.Random(11)
    for _ in range(60):
        p, q, c = random_poly(rng), random_poly(rng), random_poly(rng)
        if p.is_zero and q.is_zero or c.is_zero:
            continue
        assert gcd(p * c, q * c) == gcd(p, q) * c


# -- hashing / equality --------------------------------------------------------


def test_hash_consistency():
    p = Poly2.parse("u*v + 1")
    q = Poly2.from_monomials([(0, 0), (1, 1)])
    assert p == q and hash(p) == hash(q)
    assert len({p, q}) == 1
