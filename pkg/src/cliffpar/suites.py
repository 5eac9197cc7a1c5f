"""Randomized verification suites for the parallelism library.

Each suite checks one headline property of the construction at a configurable
sample size, drawing a private deterministic random stream from the run seed
and the suite name, and returns a :class:`~cliffpar.reports.CheckReport`.
``run_all`` executes every suite in name order, which keeps reports stable
regardless of how the individual suites are scheduled.

The first three suites (line-pair equivalence, the quadratic identity and the
annihilator) expose their cores with an explicit algebra argument so that the
mutation suite can re-run them against deliberately corrupted multiplication
tables.
"""

from __future__ import annotations

import random
import time
from typing import Callable

from . import linalg
from .collineations import (
    cosymplectic_witness,
    fixed_point_subspace,
    is_self_polar,
    line_in_complex,
    linear_form,
    polar_of,
    polarity_from_form,
    random_self_polar_line,
    translation_matrix_F,
    translation_matrix_LL,
    translation_matrix_tensor,
)
from .errors import InvalidBasisError, NonInvertibleError
from .field import ONE, ZERO, BasisL, LElem, random_elem, random_nonzero
from .parallelism import (
    absolute_intersection,
    canonical_rep,
    complete_basis,
    double_space_check,
    is_k_rational_point,
    is_parallel_algebraic,
    is_parallel_geometric,
    k_rational_line_in_Pi,
    line_of_elements,
    line_times_scalar,
    regulus_regularity_sample,
)
from .projective import Subspace, is_F_rational_point
from .reports import CheckReport, RunConfig, derived_rng
from .tensor import TensorAlgebra, default_algebra

__all__ = ["SUITES", "run_suite", "run_all"]

_WITNESS_CAP = 3


def _push(witnesses: list, **fields) -> None:
    """Record a JSON-friendly witness, keeping only the first few."""
    if len(witnesses) >= _WITNESS_CAP:
        return
    clean = {}
    for key, value in fields.items():
        if isinstance(value, (bool, int, str)):
            clean[key] = value
        elif isinstance(value, (list, tuple)):
            clean[key] = [str(v) for v in value]
        elif isinstance(value, dict):
            clean[key] = value
        else:
            clean[key] = str(value)
    witnesses.append(clean)


def _random_non_f(rng: random.Random, bound: int) -> LElem:
    while True:
        z = random_elem(rng, bound)
        if not z.is_in_F:
            return z


def _random_f_line(rng: random.Random, bound: int, algebra: TensorAlgebra):
    """A uniform-ish F-line together with the spanning pair that produced it."""
    basis = algebra.basis
    while True:
        a = random_nonzero(rng, bound)
        b = random_nonzero(rng, bound)
        if linalg.rank((basis.coords(a), basis.coords(b))) == 2:
            return line_of_elements(a, b, algebra), a, b


def _random_plane_element(rng: random.Random, bound: int, algebra: TensorAlgebra):
    """A nonzero element of the kernel plane, as an L-combination of p, q, pq."""
    p, q, r = algebra.ideal_basis()
    while True:
        c = [random_elem(rng, bound) for _ in range(3)]
        if any(c):
            return p.scaled(c[0]) + q.scaled(c[1]) + r.scaled(c[2])


def _random_basis(rng: random.Random, bound: int) -> BasisL:
    while True:
        try:
            return BasisL(_random_non_f(rng, bound), _random_non_f(rng, bound))
        except InvalidBasisError:
            continue


# ---------------------------------------------------------------------------
# cores shared with the mutation suite


def _parallelism_core(samples, rng, bound, algebra):
    """Compare the two parallelism tests on forced and uniform line pairs."""
    failures = 0
    witnesses: list = []
    for idx in range(samples):
        m, a, _ = _random_f_line(rng, bound, algebra)
        mode = idx % 3
        if mode == 0:  # forced parallel: the scalar action itself
            n = line_times_scalar(m, random_nonzero(rng, bound), algebra)
        elif mode == 1:  # forced intersecting: keep the point F*a
            basis = algebra.basis
            while True:
                c = random_nonzero(rng, bound)
                if linalg.rank((basis.coords(a), basis.coords(c))) == 2:
                    break
            n = line_of_elements(a, c, algebra)
        else:  # uniform
            n, _, _ = _random_f_line(rng, bound, algebra)
        by_action = is_parallel_algebraic(m, n, algebra)
        by_pencil = is_parallel_geometric(m, n, algebra)
        if by_action != by_pencil:
            failures += 1
            _push(
                witnesses,
                mode=("forced-parallel", "forced-intersecting", "uniform")[mode],
                m=m.to_dict(),
                n=n.to_dict(),
                by_action=by_action,
                by_pencil=by_pencil,
            )
    return samples, failures, 0, witnesses


def _quadratic_core(samples, rng, bound, algebra):
    """Square identity and invertibility dichotomy for tensor elements.

    The first sample is the all-ones tensor: its square touches every entry
    of the multiplication table, which makes this core a reliable mutation
    detector.
    """
    failures = 0
    witnesses: list = []
    for idx in range(samples):
        if idx == 0:
            g = algebra.element((ONE, ONE, ONE, ONE))
        else:
            g = algebra.element(tuple(random_elem(rng, bound) for _ in range(4)))
        expected = algebra.one.scaled(g.pi().square())
        square_ok = g * g == expected
        if g.pi():
            try:
                inverse_ok = g * g.invert() == algebra.one
            except NonInvertibleError:
                inverse_ok = False
        else:
            try:
                g.invert()
                inverse_ok = False
            except NonInvertibleError:
                inverse_ok = True
        if not (square_ok and inverse_ok):
            failures += 1
            _push(
                witnesses,
                g=g.to_dict(),
                square_ok=square_ok,
                inverse_ok=inverse_ok,
            )
    return samples, failures, 0, witnesses


def _annihilator_core(bases, products, rng, bound, algebra):
    """Solved annihilator = L(pq), over random bases, and from plane products."""
    checked = 0
    failures = 0
    witnesses: list = []

    def check_algebra(alg) -> bool:
        r = alg.ideal_basis()[2]
        expected = Subspace.point("L", r.coords)
        return alg.annihilator_by_solving() == alg.annihilator_point() == expected

    checked += 1
    if not check_algebra(algebra):
        failures += 1
        _push(witnesses, kind="default-basis-annihilator")
    for _ in range(bases):
        basis = _random_basis(rng, bound)
        checked += 1
        if not check_algebra(TensorAlgebra(basis)):
            failures += 1
            _push(witnesses, kind="random-basis-annihilator", i=basis.i, j=basis.j)

    annihilator = algebra.annihilator_point()
    nonzero_products = 0
    for _ in range(products):
        z = _random_plane_element(rng, bound, algebra)
        w = _random_plane_element(rng, bound, algebra)
        product = z * w
        checked += 1
        if product:
            nonzero_products += 1
            if not annihilator.contains_vector(product.coords):
                failures += 1
                _push(witnesses, kind="product-off-annihilator", z=z, w=w)
    if products and not nonzero_products:
        failures += 1
        _push(witnesses, kind="all-products-vanished")
    return checked, failures, 0, witnesses


# ---------------------------------------------------------------------------
# the eleven suites


def suite_parallelism_equivalence(config: RunConfig) -> CheckReport:
    rng = derived_rng(config.seed, "parallelism-equivalence")
    samples, failures, skipped, witnesses = _parallelism_core(
        config.samples, rng, config.degree_bound, default_algebra()
    )
    return CheckReport(
        name="parallelism-equivalence",
        statement=(
            "the scalar-action and pencil-incidence definitions of parallel "
            "agree on forced-parallel, forced-intersecting and uniform pairs"
        ),
        samples=samples,
        failures=failures,
        skipped=skipped,
        witnesses=tuple(witnesses),
    )


def suite_local_quadratic(config: RunConfig) -> CheckReport:
    rng = derived_rng(config.seed, "local-quadratic")
    samples, failures, skipped, witnesses = _quadratic_core(
        config.samples, rng, config.degree_bound, default_algebra()
    )
    return CheckReport(
        name="local-quadratic",
        statement=(
            "every tensor g satisfies g*g = pi(g)^2 (1(x)1) and is "
            "invertible exactly when pi(g) is nonzero"
        ),
        samples=samples,
        failures=failures,
        skipped=skipped,
        witnesses=tuple(witnesses),
    )


def suite_annihilator(config: RunConfig) -> CheckReport:
    rng = derived_rng(config.seed, "annihilator")
    bases = max(1, config.samples // 10)
    products = max(1, config.samples // 2)
    samples, failures, skipped, witnesses = _annihilator_core(
        bases, products, rng, config.degree_bound, default_algebra()
    )
    return CheckReport(
        name="annihilator",
        statement=(
            "the solved annihilator of the kernel plane is the point L(pq) "
            "for the default and random bases, and sampled plane products "
            "land on it"
        ),
        samples=samples,
        failures=failures,
        skipped=skipped,
        witnesses=tuple(witnesses),
    )


def suite_rational_points(config: RunConfig) -> CheckReport:
    rng = derived_rng(config.seed, "rational-points")
    algebra = default_algebra()
    bound = config.degree_bound
    plane = algebra.absolute_plane()
    checked = 0
    failures = 0
    witnesses: list = []

    for _ in range(config.samples):
        z = _random_plane_element(rng, bound, algebra)
        point = Subspace.point("L", z.coords)
        checked += 1
        rational, _ = is_F_rational_point(point)
        if rational:
            failures += 1
            _push(witnesses, kind="f-rational-plane-point", point=point.to_dict())

    for _ in range(config.samples):
        m, _, _ = _random_f_line(rng, bound, algebra)
        n, _, _ = _random_f_line(rng, bound, algebra)
        if m == n:
            continue
        crossing = absolute_intersection(m, algebra)
        checked += 1
        if n.extend_to_L().contains_vector(crossing.generator()):
            failures += 1
            _push(
                witnesses,
                kind="point-on-two-extensions",
                m=m.to_dict(),
                n=n.to_dict(),
                point=crossing.to_dict(),
            )

    for _ in range(config.samples):
        m, a, b = _random_f_line(rng, bound, algebra)
        alternation_point = Subspace.point("L", algebra.alternation(a, b).coords)
        met = m.extend_to_L().meet(plane)
        checked += 1
        if not (
            met.is_point
            and met == alternation_point
            and met == absolute_intersection(m, algebra)
        ):
            failures += 1
            _push(witnesses, kind="alternation-meet-mismatch", m=m.to_dict())

    return CheckReport(
        name="rational-points",
        statement=(
            "kernel-plane points are never F-rational and lie on at most one "
            "extended F-line, which meets the plane in its alternation point"
        ),
        samples=checked,
        failures=failures,
        skipped=0,
        witnesses=tuple(witnesses),
    )


def suite_subline_rationality(config: RunConfig) -> CheckReport:
    rng = derived_rng(config.seed, "subline-rationality")
    algebra = default_algebra()
    bound = config.degree_bound
    generators = max(1, config.samples // 4)
    images_per_generator = max(1, config.samples // 10)
    lines_per_generator = max(2, config.samples // 2)
    annihilator = algebra.annihilator_point()
    r = algebra.ideal_basis()[2]
    checked = 0
    failures = 0
    witnesses: list = []

    for _ in range(generators):
        i = _random_non_f(rng, bound)
        kb = complete_basis(i, algebra)
        p = algebra.alternation(ONE, i)
        rp = p * algebra.alternation(ONE, kb.j)
        fixed_line = Subspace.line("L", p.coords, r.coords)
        checked += 1
        if fixed_line != k_rational_line_in_Pi(i, algebra):
            failures += 1
            _push(witnesses, kind="distinguished-line-mismatch", i=i)

        for _ in range(images_per_generator):
            y = random_elem(rng, bound)
            c = kb.coords(y)
            image = algebra.embed_second(y) * p
            c1 = c[0] + i * c[1]
            c2 = c[2] + i * c[3]
            expected = p.scaled(c1 + kb.j * c2) + rp.scaled(c2)
            checked += 1
            ok = image == expected
            if ok and image:
                ok = fixed_line.contains_vector(image.coords)
                if ok:
                    ok = is_k_rational_point(
                        Subspace.point("L", image.coords), i, algebra
                    )
            if not ok:
                failures += 1
                _push(witnesses, kind="left-action-image", i=i, y=y)

        checked += 1
        if is_k_rational_point(annihilator, i, algebra):
            failures += 1
            _push(witnesses, kind="annihilator-k-rational", i=i)

        class_rep = canonical_rep(line_of_elements(ONE, i, algebra), algebra).line
        for idx in range(lines_per_generator):
            if idx % 2 == 0:  # force members of the class of F[i]
                m = line_times_scalar(class_rep, random_nonzero(rng, bound), algebra)
            else:
                m, _, _ = _random_f_line(rng, bound, algebra)
            crossing = absolute_intersection(m, algebra)
            rational = is_k_rational_point(crossing, i, algebra)
            parallel = canonical_rep(m, algebra).line == class_rep
            checked += 1
            if rational != parallel:
                failures += 1
                _push(
                    witnesses,
                    kind="rationality-parallelism",
                    i=i,
                    m=m.to_dict(),
                    rational=rational,
                    parallel=parallel,
                )

    return CheckReport(
        name="subline-rationality",
        statement=(
            "a line is parallel to F[i] exactly when its absolute point is "
            "rational over F[i]; left actions land on the distinguished line "
            "with the predicted coordinates"
        ),
        samples=checked,
        failures=failures,
        skipped=0,
        witnesses=tuple(witnesses),
    )


def suite_double_space(config: RunConfig) -> CheckReport:
    rng = derived_rng(config.seed, "double-space")
    algebra = default_algebra()
    bound = config.degree_bound
    failures = 0
    skipped = 0
    witnesses: list = []
    for _ in range(config.samples):
        a = random_nonzero(rng, bound)
        b = random_elem(rng, bound)
        c = random_elem(rng, bound)
        report = double_space_check(a, b, c, algebra)
        if report.degenerate:
            skipped += 1
        elif not report.ok:
            failures += 1
            _push(
                witnesses,
                a=a,
                b=b,
                c=c,
                common_point_on_both=report.common_point_on_both,
                diagonals_parallel=report.diagonals_parallel,
            )
    return CheckReport(
        name="double-space",
        statement=(
            "parallels through interchanged points of two concurrent lines "
            "meet, and the diagonals of the closed configuration are parallel"
        ),
        samples=config.samples,
        failures=failures,
        skipped=skipped,
        witnesses=tuple(witnesses),
    )


def suite_regulus_closure(config: RunConfig) -> CheckReport:
    rng = derived_rng(config.seed, "regulus-closure")
    algebra = default_algebra()
    bound = config.degree_bound
    target = max(1, config.samples // 4)
    attempts = 0
    productive = 0
    failures = 0
    skipped = 0
    witnesses: list = []
    while productive < target and attempts < 2 * target:
        attempts += 1
        i = _random_non_f(rng, bound)
        member = line_times_scalar(
            line_of_elements(ONE, i, algebra), random_nonzero(rng, bound), algebra
        )
        report = regulus_regularity_sample(member, 1, rng, algebra, bound)
        failures += report.failures
        skipped += report.skipped
        for witness in report.witnesses:
            _push(witnesses, **witness)
        if report.regulus_lines_checked:
            productive += 1
    return CheckReport(
        name="regulus-closure",
        statement=(
            "parallel classes are closed under reguli, and opposite rulings "
            "consist of mutually parallel transversals"
        ),
        samples=attempts,
        failures=failures,
        skipped=skipped,
        witnesses=tuple(witnesses),
    )


def _f_matrix_pattern(b: LElem, basis: BasisL):
    """The symbolic right-multiplication pattern on the basis (1, i, j, ij)."""
    b0, b1, b2, b3 = basis.coords(b)
    i2, j2, k2 = basis.i_sq, basis.j_sq, basis.k_sq
    return (
        (b0, b1, b2, b3),
        (i2 * b1, b0, i2 * b3, b2),
        (j2 * b2, j2 * b3, b0, b1),
        (k2 * b3, j2 * b2, i2 * b1, b0),
    )


def _ideal_matrix_pattern(b: LElem, algebra: TensorAlgebra):
    """The triangular pattern of z |-> z(1(x)b) on the basis (1(x)1, p, q, pq)."""
    b0, b1, b2, b3 = algebra.to_ideal(algebra.embed_second(b))
    return (
        (b0, b1, b2, b3),
        (ZERO, b0, ZERO, b2),
        (ZERO, ZERO, b0, b1),
        (ZERO, ZERO, ZERO, b0),
    )


def suite_translation_matrices(config: RunConfig) -> CheckReport:
    rng = derived_rng(config.seed, "translation-matrices")
    algebra = default_algebra()
    bound = config.degree_bound
    count = max(1, config.samples // 2)
    checked = 0
    failures = 0
    witnesses: list = []

    for idx in range(count):
        b = _random_non_f(rng, bound) if idx % 2 else random_nonzero(rng, bound)
        matrix = translation_matrix_F(b, algebra.basis).matrix
        ok = matrix == _f_matrix_pattern(b, algebra.basis)
        ok = ok and translation_matrix_tensor(b, algebra) == matrix
        square = linalg.matmul(matrix, matrix, ZERO)
        scalar = b * b
        ok = ok and square == tuple(
            tuple(scalar if s == t else ZERO for t in range(4)) for s in range(4)
        )
        ok = ok and translation_matrix_LL(b, algebra) == _ideal_matrix_pattern(
            b, algebra
        )
        if not b.is_in_F:
            expected_fixed = Subspace.line(
                "L",
                algebra.alternation(ONE, b).coords,
                algebra.ideal_basis()[2].coords,
            )
            ok = ok and fixed_point_subspace(b, algebra) == expected_fixed
        checked += 1
        if not ok:
            failures += 1
            _push(witnesses, kind="matrix-pattern", b=b)

    # the generator of the basis itself: exact two-block triangular matrix
    for basis in [algebra.basis] + [_random_basis(rng, bound) for _ in range(3)]:
        alg = algebra if basis == algebra.basis else TensorAlgebra(basis)
        i = basis.i
        expected = (
            (i, ONE, ZERO, ZERO),
            (ZERO, i, ZERO, ZERO),
            (ZERO, ZERO, i, ONE),
            (ZERO, ZERO, ZERO, i),
        )
        checked += 1
        if translation_matrix_LL(i, alg) != expected:
            failures += 1
            _push(witnesses, kind="generator-block-form", i=i)

    return CheckReport(
        name="translation-matrices",
        statement=(
            "right-multiplication matrices match their symbolic patterns in "
            "both bases, square to the scalar, and fix exactly the "
            "distinguished line"
        ),
        samples=checked,
        failures=failures,
        skipped=0,
        witnesses=tuple(witnesses),
    )


def suite_polarities(config: RunConfig) -> CheckReport:
    rng = derived_rng(config.seed, "polarities")
    algebra = default_algebra()
    basis = algebra.basis
    bound = config.degree_bound
    forms_count = max(2, config.samples // 10)
    lines_per_form = config.samples
    point_samples = max(1, config.samples * 5 // 2)
    self_polar_samples = max(1, config.samples // 20)
    checked = 0
    failures = 0
    skipped = 0
    witnesses: list = []

    def fail(**fields):
        nonlocal failures
        failures += 1
        _push(witnesses, **fields)

    for idx in range(forms_count):
        want_null = idx % 2 == 0
        while True:
            values = [random_elem(rng, bound).square() for _ in range(4)]
            if want_null:
                values[0] = ZERO
            elif not values[0]:
                continue
            if any(values):
                break
        form = linear_form(values, basis)
        try:
            pol = polarity_from_form(form)
        except AssertionError:
            checked += 1
            fail(kind="degenerate-pairing", values=values)
            continue
        checked += 1
        if pol.is_null != want_null:
            fail(kind="misclassified-form", values=values)

        for _ in range(5):  # the pairing commutes with the scalar action
            x = random_elem(rng, bound)
            y = random_elem(rng, bound)
            b = random_nonzero(rng, bound)
            checked += 1
            if pol.pair(x * b, y * b) != (b * b) * pol.pair(x, y):
                fail(kind="pairing-commutation", values=values)
            m, _, _ = _random_f_line(rng, bound, algebra)
            checked += 1
            if polar_of(line_times_scalar(m, b, algebra), pol) != line_times_scalar(
                polar_of(m, pol), b.inverse(), algebra
            ):
                fail(kind="polar-commutation", values=values)

        for _ in range(lines_per_form):
            m, _, _ = _random_f_line(rng, bound, algebra)
            polar = polar_of(m, pol)
            checked += 1
            if not (polar.is_line and is_parallel_algebraic(m, polar, algebra)):
                fail(kind="polar-not-parallel", values=values, m=m.to_dict())

        if pol.is_null:
            checked += 1
            if any(pol.gram[s][s] for s in range(4)):
                fail(kind="null-gram-diagonal", values=values)
            for _ in range(self_polar_samples):
                line = random_self_polar_line(pol, rng, bound)
                moved = line_times_scalar(line, random_nonzero(rng, bound), algebra)
                checked += 1
                if not (
                    is_self_polar(line, pol)
                    and line_in_complex(line, pol)
                    and is_self_polar(moved, pol)
                ):
                    fail(kind="self-polar-line", values=values, line=line.to_dict())
        else:
            for _ in range(point_samples):
                x = random_nonzero(rng, bound)
                checked += 1
                if not pol.pair(x, x):
                    fail(kind="self-conjugate-point", values=values, x=x)

    pair_target = max(1, config.samples // 4)
    pairs_done = 0
    while pairs_done < pair_target:
        m = line_of_elements(ONE, _random_non_f(rng, bound), algebra)
        n = line_of_elements(ONE, _random_non_f(rng, bound), algebra)
        if m == n:
            skipped += 1
            continue
        pairs_done += 1
        form = cosymplectic_witness(m, n, basis)
        pol = polarity_from_form(form)
        checked += 1
        members = (
            m,
            n,
            line_times_scalar(m, random_nonzero(rng, bound), algebra),
            line_times_scalar(n, random_nonzero(rng, bound), algebra),
        )
        if not (
            pol.is_null and all(is_self_polar(member, pol) for member in members)
        ):
            fail(kind="cosymplectic-witness", m=m.to_dict(), n=n.to_dict())

    return CheckReport(
        name="polarities",
        statement=(
            "polarities of nonzero forms are nondegenerate, commute with the "
            "scalar action, send every line to a parallel line, classify by "
            "the value at 1, and two classes always share a null polarity"
        ),
        samples=checked,
        failures=failures,
        skipped=skipped,
        witnesses=tuple(witnesses),
    )


def suite_fano_subplane(config: RunConfig) -> CheckReport:
    algebra = default_algebra()
    basis = algebra.basis
    plane = algebra.absolute_plane()
    p, q, r = algebra.ideal_basis()
    jp = p.scaled(basis.j)
    iq = q.scaled(basis.i)
    generators = (jp, iq, r)
    points = {}
    for mask in range(1, 8):
        z = algebra.zero
        for bit, g in zip((1, 2, 4), generators):
            if mask & bit:
                z = z + g
        points[mask] = Subspace.point("L", z.coords)
    i, j, k = basis.i, basis.j, basis.k

    checked = 0
    failures = 0
    witnesses: list = []

    def expect(condition: bool, label: str) -> None:
        nonlocal checked, failures
        checked += 1
        if not condition:
            failures += 1
            _push(witnesses, kind=label)

    def tensor_point(z) -> Subspace:
        return Subspace.point("L", z.coords)

    # coordinate identities of the marked points
    expect(points[1] == tensor_point(p), "L(jp) = L(p)")
    expect(points[2] == tensor_point(q), "L(iq) = L(q)")
    expect(points[4] == algebra.annihilator_point(), "L(r) is the annihilator")
    expect(
        points[5]
        == tensor_point(algebra.embed_second(k) + algebra.pure_tensor(i, j)),
        "L(jp+r) = L(1(x)k + i(x)j)",
    )
    expect(
        points[6]
        == tensor_point(algebra.embed_second(k) + algebra.pure_tensor(j, i)),
        "L(iq+r) = L(1(x)k + j(x)i)",
    )
    expect(
        points[7]
        == tensor_point(algebra.embed_second(k) + algebra.embed_first(k)),
        "L(jp+iq+r) = L(1(x)k + k(x)1)",
    )
    expect(
        points[3]
        == tensor_point(algebra.pure_tensor(i, j) + algebra.pure_tensor(j, i)),
        "L(jp+iq) = L(i(x)j + j(x)i)",
    )
    # the flipped expression names a different marked point
    flipped = tensor_point(algebra.embed_first(k) + algebra.pure_tensor(j, i))
    expect(flipped == points[1], "L(k(x)1 + j(x)i) = L(jp)")
    expect(flipped != points[6], "L(k(x)1 + j(x)i) is not L(iq+r)")

    masks = sorted(points)
    for mask in masks:
        expect(
            plane.contains_vector(points[mask].generator()),
            "marked point on the kernel plane",
        )
    for a in masks:
        for b in masks:
            if a < b:
                expect(points[a] != points[b], "marked points distinct")

    lines = sorted({tuple(sorted((a, b, a ^ b))) for a in masks for b in masks if a != b})
    expect(len(lines) == 7, "seven lines")
    on_count = {mask: 0 for mask in masks}
    for triple in lines:
        rows = [points[mask].generator() for mask in triple]
        expect(
            Subspace.span("L", rows).dim == 2,
            "line points collinear",
        )
        for mask in triple:
            on_count[mask] += 1
        others = [mask for mask in masks if mask not in triple]
        expect(
            all(
                not Subspace.line("L", rows[0], rows[1]).contains_vector(
                    points[mask].generator()
                )
                for mask in others
            ),
            "exactly three points per line",
        )
    expect(all(on_count[mask] == 3 for mask in masks), "three lines per point")
    pair_cover = {
        (a, b): sum(1 for t in lines if a in t and b in t)
        for a in masks
        for b in masks
        if a < b
    }
    expect(all(v == 1 for v in pair_cover.values()), "each pair on one line")

    return CheckReport(
        name="fano-subplane",
        statement=(
            "the seven marked points of the kernel plane satisfy their "
            "coordinate identities and form a Fano subplane"
        ),
        samples=checked,
        failures=failures,
        skipped=0,
        witnesses=tuple(witnesses),
    )


def suite_mutation_sensitivity(config: RunConfig) -> CheckReport:
    algebra = default_algebra()
    checked = 0
    failures = 0
    witnesses: list = []
    for m in range(4):
        for n in range(4):
            for t in range(4):
                mutant = algebra.with_flipped_constant(m, n, t)
                rng = derived_rng(config.seed, f"mutation-sensitivity/{m}{n}{t}")
                detected = False
                runs = (
                    lambda: _quadratic_core(2, rng, 1, mutant),
                    lambda: _annihilator_core(0, 4, rng, 1, mutant),
                    lambda: _parallelism_core(3, rng, 1, mutant),
                )
                for run in runs:
                    try:
                        _, core_failures, _, _ = run()
                    except Exception:
                        detected = True  # a crash counts as detection
                        break
                    if core_failures:
                        detected = True
                        break
                checked += 1
                if not detected:
                    failures += 1
                    _push(witnesses, kind="undetected-flip", indices=[m, n, t])
    return CheckReport(
        name="mutation-sensitivity",
        statement=(
            "flipping any single structure constant of the multiplication "
            "table makes at least one core suite fail"
        ),
        samples=checked,
        failures=failures,
        skipped=0,
        witnesses=tuple(witnesses),
    )


SUITES: dict[str, Callable[[RunConfig], CheckReport]] = {
    "annihilator": suite_annihilator,
    "double-space": suite_double_space,
    "fano-subplane": suite_fano_subplane,
    "local-quadratic": suite_local_quadratic,
    "mutation-sensitivity": suite_mutation_sensitivity,
    "parallelism-equivalence": suite_parallelism_equivalence,
    "polarities": suite_polarities,
    "rational-points": suite_rational_points,
    "regulus-closure": suite_regulus_closure,
    "subline-rationality": suite_subline_rationality,
    "translation-matrices": suite_translation_matrices,
}


def run_suite(name: str, config: RunConfig) -> CheckReport:
    """Run one suite; fill in wall-clock millis only when timing is on."""
    start = time.monotonic()
    report = SUITES[name](config)
    if config.timing:
        report = report._replace(millis=int((time.monotonic() - start) * 1000))
    return report


def run_all(config: RunConfig) -> list[CheckReport]:
    """Every suite, in name order, so reports do not depend on scheduling."""
    return [run_suite(name, config) for name in sorted(SUITES)]
