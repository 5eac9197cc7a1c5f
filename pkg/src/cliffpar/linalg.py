"""Exact Gaussian elimination over any field-element type.

Entries only need +, -, *, / and truthiness (nonzero test).  Matrices are
tuples of row tuples.  Reduced row echelon form is the canonical form used
for subspace identity throughout the package, so rref() must stay fully
deterministic: first nonzero column wins, rows are normalized to pivot 1.

Entries that are reduced fractions of packed GF(2)[u, v] polynomials take a
fraction-free route: rows are cleared to primitive polynomial vectors and
eliminated Bareiss-style (each step divides exactly by the previous pivot),
so no gcd is computed until the final per-entry normalization.  The output
is identical to the generic route; it is only cheaper, because elimination
on fractions re-reduces ballooning intermediates at every single row
operation.
"""

from __future__ import annotations

from typing import Sequence, TypeVar

from .gf2poly import (
    Poly2,
    gcd as _poly_gcd,
    gcd_many as _poly_gcd_many,
    ZERO as _P_ZERO,
    ONE as _P_ONE,
)

E = TypeVar("E")

Matrix = tuple  # tuple of row tuples


def _clear_row(row: Sequence) -> list[Poly2]:
    """Scale a row of polynomial fractions to a primitive polynomial vector."""
    lcm = None
    for e in row:
        if e:
            d = e.den
            if lcm is None:
                lcm = d
            elif lcm != d and lcm.try_div(d) is None:
                lcm = (lcm * d).exact_div(_poly_gcd(lcm, d))
    if lcm is None:
        return [_P_ZERO] * len(row)
    nums = [e.num * lcm.exact_div(e.den) if e else _P_ZERO for e in row]
    return _strip_content(nums)


def _strip_content(nums: list[Poly2]) -> list[Poly2]:
    """Divide a polynomial row by the gcd of its entries."""
    content = _poly_gcd_many(nums)
    if content.is_zero or content.is_one:
        return nums
    return [m.exact_div(content) if m else m for m in nums]


def rref_primitive(rows: Sequence[Sequence]) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced echelon form whose rows are primitive polynomial vectors.

    Same pivots and row space as rref(), but each row is scaled to the unique
    denominator-free, content-free representative instead of to pivot 1 (the
    two differ by the pivot, a unit of the fraction field).  Keeping stored
    rows polynomial stops fraction growth from compounding across chained
    joins and meets; entries of the result have denominator one.
    """
    work = [list(r) for r in rows]
    if not work:
        return (), ()
    fraction = work[0][0]._fraction
    ncols = len(work[0])
    mat = [_clear_row(row) for row in work]
    nrows = len(mat)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for k in range(r, nrows):
            if mat[k][c]:
                pivot_row = k
                break
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        piv = mat[r][c]
        prow = mat[r]
        for k in range(r + 1, nrows):
            row = mat[k]
            a = row[c]
            if a:
                mat[k] = _strip_content(
                    [piv * x + a * y for x, y in zip(row, prow)]
                )
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    mat = mat[:r]
    for i in range(r - 1, 0, -1):
        pc = pivots[i]
        prow = mat[i]
        piv = prow[pc]
        for j in range(i):
            a = mat[j][pc]
            if a:
                mat[j] = _strip_content(
                    [piv * x + a * y for x, y in zip(mat[j], prow)]
                )
    one = _P_ONE
    return (
        tuple(tuple(fraction(x, one) for x in row) for row in mat),
        tuple(pivots),
    )


def _rref_polyfrac(work: list[list]) -> tuple[Matrix, tuple[int, ...]]:
    fraction = work[0][0]._fraction
    ncols = len(work[0])
    mat = [_clear_row(row) for row in work]
    nrows = len(mat)
    pivots: list[int] = []
    prev = _P_ONE
    r = 0
    for c in range(ncols):
        pivot_row = None
        for k in range(r, nrows):
            if mat[k][c]:
                pivot_row = k
                break
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        piv = mat[r][c]
        prow = mat[r]
        for k in range(r + 1, nrows):
            row = mat[k]
            a = row[c]
            if a:
                mat[k] = [
                    (piv * x + a * y).exact_div(prev)
                    for x, y in zip(row, prow)
                ]
            elif not prev.is_one:
                mat[k] = [(piv * x).exact_div(prev) if x else x for x in row]
            elif not piv.is_one:
                mat[k] = [piv * x if x else x for x in row]
        pivots.append(c)
        prev = piv
        r += 1
        if r == nrows:
            break
    # normalize pivots to 1 (the only gcd reductions of the whole routine) ...
    out = [
        [fraction(x, mat[i][pivots[i]]) for x in mat[i]] for i in range(r)
    ]
    # ... then clear the entries above each pivot in plain field arithmetic;
    # by now everything in sight is reduced and small
    for i in range(r - 1, 0, -1):
        pc = pivots[i]
        for j in range(i):
            f = out[j][pc]
            if f:
                out[j] = [x - f * y for x, y in zip(out[j], out[i])]
    return tuple(tuple(row) for row in out), tuple(pivots)


def rref(rows: Sequence[Sequence[E]]) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form with zero rows dropped; returns (rows, pivot columns)."""
    work = [list(r) for r in rows]
    if not work:
        return (), ()
    if isinstance(getattr(work[0][0], "num", None), Poly2):
        return _rref_polyfrac(work)
    ncols = len(work[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for k in range(r, len(work)):
            if work[k][c]:
                pivot_row = k
                break
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        piv = work[r][c]
        if not getattr(piv, "is_one", False):  # normalize unless already 1
            work[r] = [x / piv for x in work[r]]
        for k in range(len(work)):
            if k != r and work[k][c]:
                f = work[k][c]
                work[k] = [a - f * b for a, b in zip(work[k], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return tuple(tuple(row) for row in work[:r]), tuple(pivots)


def rank(rows: Sequence[Sequence[E]]) -> int:
    return len(rref(rows)[0])


def transpose(rows: Sequence[Sequence[E]]) -> Matrix:
    return tuple(zip(*rows))


def matmul(a: Sequence[Sequence[E]], b: Sequence[Sequence[E]], zero: E) -> Matrix:
    bt = tuple(zip(*b))
    out = []
    for row in a:
        out_row = []
        for col in bt:
            acc = zero
            for x, y in zip(row, col):
                if x and y:
                    acc = acc + x * y
            out_row.append(acc)
        out.append(tuple(out_row))
    return tuple(out)


def mat_vec(rows: Sequence[Sequence[E]], vec: Sequence[E], zero: E) -> tuple:
    """Row vector times matrix: vec . rows (vec[i] scales row i)."""
    acc = [zero] * len(rows[0])
    for x, row in zip(vec, rows):
        if x:
            acc = [a + x * y for a, y in zip(acc, row)]
    return tuple(acc)


def identity(n: int, zero: E, one: E) -> Matrix:
    return tuple(
        tuple(one if i == j else zero for j in range(n)) for i in range(n)
    )


def right_nullspace(
    rows: Sequence[Sequence[E]], ncols: int, zero: E, one: E
) -> tuple:
    """Basis of {x : rows . x = 0} with x a column, returned as row tuples."""
    red, pivots = rref(rows)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        vec = [zero] * ncols
        vec[f] = one
        for i, p in enumerate(pivots):
            vec[p] = zero - red[i][f]
        basis.append(tuple(vec))
    return tuple(basis)


def left_nullspace(rows: Sequence[Sequence[E]], zero: E, one: E) -> tuple:
    """Basis of {x : x . rows = 0} as row tuples."""
    return right_nullspace(transpose(rows), len(rows), zero, one)


def inverse(rows: Sequence[Sequence[E]], zero: E, one: E) -> Matrix | None:
    """Matrix inverse, or None when singular."""
    n = len(rows)
    aug = [list(row) + list(idrow) for row, idrow in zip(rows, identity(n, zero, one))]
    red, pivots = rref(aug)
    if pivots != tuple(range(n)):
        return None
    return tuple(tuple(row[n:]) for row in red)


def det(rows: Sequence[Sequence[E]], one: E) -> E:
    """Determinant by fraction-producing elimination; exact over a field."""
    n = len(rows)
    work = [list(r) for r in rows]
    result = one
    for c in range(n):
        pivot_row = None
        for k in range(c, n):
            if work[k][c]:
                pivot_row = k
                break
        if pivot_row is None:
            return one - one
        if pivot_row != c:
            work[c], work[pivot_row] = work[pivot_row], work[c]
            result = (one - one) - result  # sign flip; a no-op in characteristic two
        piv = work[c][c]
        result = result * piv
        for k in range(c + 1, n):
            if work[k][c]:
                f = work[k][c] / piv
                work[k] = [a - f * b for a, b in zip(work[k], work[c])]
    return result


def solve_left(rows: Sequence[Sequence[E]], target: Sequence[E], zero: E, one: E):
    """Coefficients x with x . rows = target, or None when unsolvable.

    When the rows are independent the solution is unique.
    """
    # transpose to a column problem and reduce the augmented matrix
    cols = transpose(rows)
    aug = [list(col) + [t] for col, t in zip(cols, target)]
    red, pivots = rref(aug)
    n = len(rows)
    if n in pivots:
        return None  # target outside the row space
    x = [zero] * n
    for i, p in enumerate(pivots):
        x[p] = red[i][n]
    # reject underdetermined fits that do not actually reproduce the target
    if len(pivots) < n:
        if mat_vec(rows, x, zero) != tuple(target):
            return None
    return tuple(x)
