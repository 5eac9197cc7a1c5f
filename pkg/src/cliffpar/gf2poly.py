"""Polynomials over GF(2) in two variables u, v, packed into Python ints.

A polynomial is a tuple of ints indexed by v-degree: bit a of ``masks[b]`` is
the coefficient of u^a * v^b.  Coefficient addition is XOR, so all arithmetic
here is bit fiddling on unbounded ints; everything is exact at any degree.
The zero polynomial is the empty tuple and the last entry of a nonzero tuple
is nonzero.

Helpers whose names start with a lone ``u`` operate on a single mask, i.e. on
GF(2)[u] encoded as an int with bit a = coefficient of u^a.  Squaring is the
Frobenius in characteristic two (spread the bits), which is why perfect
squares are exactly the polynomials with all exponents even.

The gcd uses monomial-content extraction followed by a primitive
pseudo-remainder sequence in (GF(2)[u])[v]; over GF(2) the only unit is 1, so
the gcd is canonical with no normalization step.
"""

from __future__ import annotations

from typing import Iterable, Iterator

import numpy as np

try:  # GMP-backed big integers carry the large carry-less products
    from gmpy2 import mpz as _mpz

    _HAVE_GMP = True
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    _HAVE_GMP = False

__all__ = ["Poly2", "gcd", "gcd_many", "ZERO", "ONE", "U", "V", "UV"]


# ---------------------------------------------------------------------------
# univariate layer: GF(2)[u] as ints

def _spread8(a: int) -> int:
    """Spread bit k of a to bit 8k (one byte per coefficient)."""
    ab = np.frombuffer(a.to_bytes((a.bit_length() + 7) // 8, "little"), np.uint8)
    return int.from_bytes(np.unpackbits(ab, bitorder="little").tobytes(), "little")


def _spread16(a: int) -> int:
    """Spread bit k of a to bit 16k (a 16-bit word per coefficient)."""
    ab = np.frombuffer(a.to_bytes((a.bit_length() + 7) // 8, "little"), np.uint8)
    bits = np.unpackbits(ab, bitorder="little")
    return int.from_bytes(bits.astype("<u2").tobytes(), "little")


def _spread_bytes(a: int, dtype: str) -> bytes:
    """Little-endian bytes of a with each bit widened to a whole word."""
    ab = np.frombuffer(a.to_bytes((a.bit_length() + 7) // 8, "little"), np.uint8)
    return np.unpackbits(ab, bitorder="little").astype(dtype).tobytes()


def _compact8(p: int) -> int:
    """Gather the low bit of every byte of p: bit 8k becomes bit k."""
    pb = p.to_bytes((p.bit_length() + 7) // 8, "little")
    lsb = np.frombuffer(pb, np.uint8) & 1
    return int.from_bytes(np.packbits(lsb, bitorder="little").tobytes(), "little")


def _compact16(p) -> int:
    """Gather the low bit of every 16-bit word of p: bit 16k becomes bit k."""
    nb = (p.bit_length() + 7) // 8
    nb += nb & 1
    words = np.frombuffer(p.to_bytes(nb, "little"), "<u2")
    lsb = (words & 1).astype(np.uint8)
    return int.from_bytes(np.packbits(lsb, bitorder="little").tobytes(), "little")


def _compact32(p) -> int:
    """Gather the low bit of every 32-bit word of p: bit 32k becomes bit k."""
    nb = (p.bit_length() + 7) // 8
    nb += (-nb) % 4
    words = np.frombuffer(p.to_bytes(nb, "little"), "<u4")
    lsb = (words & 1).astype(np.uint8)
    return int.from_bytes(np.packbits(lsb, bitorder="little").tobytes(), "little")


def umul(a: int, b: int) -> int:
    """Carry-less product of two GF(2)[u] masks."""
    if not a or not b:
        return 0
    if a.bit_length() > b.bit_length():
        a, b = b, a
    if a.bit_count() <= 24:
        r = 0
        while a:
            low = a & -a
            r ^= b << (low.bit_length() - 1)
            a ^= low
        return r
    # spread the bits so an ordinary integer product collects each coefficient
    # of the carry-less product in its own word; the shorter operand bounds
    # the coefficient sums, hence the word widths (8, 16 or 32 bits)
    n = a.bit_length()
    if n <= 255:
        return _compact8(_spread8(a) * _spread8(b))
    if _HAVE_GMP:
        if n <= 65535:
            p = _mpz.from_bytes(_spread_bytes(a, "<u2"), "little") * _mpz.from_bytes(
                _spread_bytes(b, "<u2"), "little"
            )
            return _compact16(p)
        p = _mpz.from_bytes(_spread_bytes(a, "<u4"), "little") * _mpz.from_bytes(
            _spread_bytes(b, "<u4"), "little"
        )
        return _compact32(p)
    if n <= 65535:
        return _compact16(_spread16(a) * _spread16(b))
    return _compact32(
        int.from_bytes(_spread_bytes(a, "<u4"), "little")
        * int.from_bytes(_spread_bytes(b, "<u4"), "little")
    )


_SQR_BYTE = tuple(
    sum(((byte >> k) & 1) << (2 * k) for k in range(8)) for byte in range(256)
)
_SQR_BYTES = tuple(x.to_bytes(2, "little") for x in _SQR_BYTE)


def usqr(a: int) -> int:
    """Square of a GF(2)[u] mask: interleave zero bits."""
    if a < 256:
        return _SQR_BYTE[a]
    ab = a.to_bytes((a.bit_length() + 7) // 8, "little")
    return int.from_bytes(b"".join(_SQR_BYTES[x] for x in ab), "little")


def udivmod(a: int, b: int) -> tuple[int, int]:
    """Quotient and remainder in GF(2)[u]."""
    if not b:
        raise ZeroDivisionError("univariate division by zero")
    q = 0
    db = b.bit_length()
    da = a.bit_length()
    while da >= db:
        shift = da - db
        q |= 1 << shift
        a ^= b << shift
        da = a.bit_length()
    return q, a


def ugcd(a: int, b: int) -> int:
    while b:
        a, b = b, udivmod(a, b)[1]
    return a


def _uinv_mod(b: int, k: int) -> int:
    """Inverse of an odd mask modulo u^k by Newton lifting."""
    x = 1
    prec = 1
    while prec < k:
        prec *= 2
        mask = (1 << prec) - 1
        x = umul(usqr(x), b & mask) & mask
    return x


def _utry_div(a: int, b: int) -> int | None:
    """Quotient of an exact division, or None when b does not divide a."""
    if not a:
        return 0
    qbits = a.bit_length() - b.bit_length() + 1
    if qbits <= 0:
        return None
    if qbits <= 64:
        q, r = udivmod(a, b)
        return None if r else q
    # strip the common power of u, then divide by the inverse mod u^qbits
    tz = (b & -b).bit_length() - 1
    if tz:
        if (a & -a).bit_length() - 1 < tz:
            return None
        a >>= tz
        b >>= tz
    mask = (1 << qbits) - 1
    q = umul(a & mask, _uinv_mod(b, qbits)) & mask
    if umul(q, b) != a:
        return None
    return q


def uexact_div(a: int, b: int) -> int:
    """Quotient of an exact division; raises when the division is not exact."""
    if not b:
        raise ZeroDivisionError("univariate division by zero")
    q = _utry_div(a, b)
    if q is None:
        raise ArithmeticError("inexact division in GF(2)[u]")
    return q


def _udiv_batch(masks: Iterable[int], d: int) -> list[int]:
    """Divide every mask exactly by d, computing one shared inverse of d."""
    if d == 1:
        return list(masks)
    tz = (d & -d).bit_length() - 1
    if tz:
        d >>= tz
    if d == 1:
        low = (1 << tz) - 1
        if any(m & low for m in masks):
            raise ArithmeticError("inexact division in GF(2)[u]")
        return [m >> tz for m in masks]
    dbits = d.bit_length()
    qbits = max(m.bit_length() for m in masks) - tz - dbits + 1
    if qbits <= 64:
        out = []
        for m in masks:
            if m:
                q, r = udivmod(m >> tz, d)
                if r:
                    raise ArithmeticError("inexact division in GF(2)[u]")
                out.append(q)
            else:
                out.append(0)
        return out
    # the quotient of an exact division is determined by the low bits of the
    # dividend, so one inverse mod u^qbits serves every mask in the batch
    inv = _uinv_mod(d, qbits)
    mask = (1 << qbits) - 1
    return [umul((m >> tz) & mask, inv) & mask if m else 0 for m in masks]


# masks selecting the bits at even positions, grown on demand
_EVEN_MASKS: dict[int, int] = {8: 0x55}


def _even_mask(nbits: int) -> int:
    width = 8
    while width < nbits:
        width *= 2
    mask = _EVEN_MASKS.get(width)
    if mask is None:
        mask = 0x55
        w = 8
        while w < width:
            mask |= mask << w
            w *= 2
        _EVEN_MASKS[width] = mask
    return mask


def _pack(masks: Iterable[int], wbytes: int) -> int:
    """Concatenate masks little-endian into strips of wbytes bytes each."""
    return int.from_bytes(
        b"".join(m.to_bytes(wbytes, "little") for m in masks), "little"
    )


def _unpack(x: int, wbytes: int, n: int) -> list[int]:
    """Split an int into n strips of wbytes bytes each."""
    xb = x.to_bytes(wbytes * n, "little")
    return [
        int.from_bytes(xb[i : i + wbytes], "little")
        for i in range(0, wbytes * n, wbytes)
    ]


# ---------------------------------------------------------------------------
# bivariate layer

class Poly2:
    """An element of GF(2)[u, v]."""

    __slots__ = ("_masks",)

    def __init__(self, masks: tuple[int, ...]):
        # trusted: masks already trimmed; external code should use the
        # classmethods or module constants
        self._masks = masks

    @staticmethod
    def _trim(masks: list[int]) -> tuple[int, ...]:
        n = len(masks)
        while n and not masks[n - 1]:
            n -= 1
        return tuple(masks[:n])

    @classmethod
    def from_monomials(cls, pairs: Iterable[tuple[int, int]]) -> "Poly2":
        """Build from (u-exponent, v-exponent) pairs; repeats cancel in pairs."""
        masks: list[int] = []
        for a, b in pairs:
            if a < 0 or b < 0:
                raise ValueError("negative exponent")
            if b >= len(masks):
                masks.extend([0] * (b + 1 - len(masks)))
            masks[b] ^= 1 << a
        return cls(cls._trim(masks))

    @classmethod
    def monomial(cls, a: int, b: int) -> "Poly2":
        if a < 0 or b < 0:
            raise ValueError("negative exponent")
        return cls((0,) * b + (1 << a,))

    # -- queries ------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._masks

    @property
    def is_one(self) -> bool:
        return self._masks == (1,)

    def __bool__(self) -> bool:
        return bool(self._masks)

    @property
    def deg_v(self) -> int:
        return len(self._masks) - 1

    @property
    def deg_u(self) -> int:
        return max((m.bit_length() for m in self._masks), default=0) - 1

    @property
    def degree(self) -> int:
        """Total degree (-1 for the zero polynomial)."""
        return max(
            (b + m.bit_length() - 1 for b, m in enumerate(self._masks) if m),
            default=-1,
        )

    def monomials(self) -> frozenset[tuple[int, int]]:
        out = set()
        for b, m in enumerate(self._masks):
            while m:
                low = m & -m
                out.add((low.bit_length() - 1, b))
                m ^= low
        return frozenset(out)

    def monomial_content(self) -> tuple[int, int]:
        """Largest (a, b) with u^a * v^b dividing self; (0, 0) for zero."""
        m = self._masks
        if not m:
            return (0, 0)
        min_u = min(((x & -x).bit_length() - 1 for x in m if x))
        min_v = next(i for i, x in enumerate(m) if x)
        return (min_u, min_v)

    @property
    def all_exponents_even(self) -> bool:
        """True iff the polynomial is a perfect square, i.e. lies in GF(2)[u^2, v^2]."""
        for b, m in enumerate(self._masks):
            if not m:
                continue
            if b & 1:
                return False
            if m & _even_mask(m.bit_length()) != m:
                return False
        return True

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "Poly2") -> "Poly2":
        a, b = self._masks, other._masks
        if len(a) < len(b):
            a, b = b, a
        if not b:
            return Poly2(a) if a is not self._masks else self
        masks = list(a)
        for i, m in enumerate(b):
            masks[i] ^= m
        return Poly2(Poly2._trim(masks))

    __sub__ = __add__

    def __mul__(self, other: "Poly2") -> "Poly2":
        a, b = self._masks, other._masks
        if not a or not b:
            return ZERO
        if a == (1,):
            return other
        if b == (1,):
            return self
        if len(a) == 1 and len(b) == 1:
            return Poly2((umul(a[0], b[0]),))
        # Kronecker substitution: with strips wide enough for every coefficient
        # of the product, one carry-less big-int product does the whole job
        wbytes = (self.deg_u + other.deg_u + 8) >> 3
        p = umul(_pack(a, wbytes), _pack(b, wbytes))
        # leading strip is a product of leading masks, so no trim is needed
        return Poly2(tuple(_unpack(p, wbytes, len(a) + len(b) - 1)))

    def square(self) -> "Poly2":
        m = self._masks
        if not m:
            return ZERO
        out = [0] * (2 * len(m) - 1)
        for i, ma in enumerate(m):
            if ma:
                out[2 * i] = usqr(ma)
        return Poly2(tuple(out))

    def __pow__(self, n: int) -> "Poly2":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base.square()
        return result

    def shifted(self, du: int, dv: int) -> "Poly2":
        """Multiply by u^du * v^dv; negative shifts require exact divisibility."""
        m = self._masks
        if not m:
            return ZERO
        if dv < 0:
            if any(m[:(-dv)]):
                raise ArithmeticError("not divisible by the requested power of v")
            m = m[-dv:]
        elif dv > 0:
            m = (0,) * dv + m
        if du:
            if du > 0:
                m = tuple(x << du for x in m)
            else:
                low = (1 << -du) - 1
                if any(x & low for x in m):
                    raise ArithmeticError("not divisible by the requested power of u")
                m = tuple(x >> -du for x in m)
        return Poly2(m)

    def try_div(self, d: "Poly2") -> "Poly2 | None":
        """Exact quotient self / d, or None when d does not divide self."""
        dm = d._masks
        if not dm:
            raise ZeroDivisionError("division by the zero polynomial")
        am = self._masks
        if not am:
            return ZERO
        if dm == (1,):
            return self
        if len(am) < len(dm):
            return None
        qu = self.deg_u - d.deg_u
        if qu < 0:
            return None
        # pack and divide as ints; a bivariate quotient q satisfies
        # pack(q) * pack(d) = pack(q * d) because the product coefficients fit
        # in a strip, and conversely an int quotient whose strips are short
        # enough to rule out inter-strip overflow decodes to the quotient
        wbytes = (self.deg_u + 8) >> 3
        quot = _utry_div(_pack(am, wbytes), _pack(dm, wbytes))
        if quot is None:
            return None
        nq = len(am) - len(dm) + 1
        if quot.bit_length() > 8 * wbytes * nq:
            return None
        qmasks = _unpack(quot, wbytes, nq)
        if any(m.bit_length() > qu + 1 for m in qmasks):
            return None
        return Poly2(Poly2._trim(qmasks))

    def exact_div(self, d: "Poly2") -> "Poly2":
        q = self.try_div(d)
        if q is None:
            raise ArithmeticError("inexact division in GF(2)[u, v]")
        return q

    def parity_quarters(self) -> tuple["Poly2", "Poly2", "Poly2", "Poly2"]:
        """Split as q0 + u*q1 + v*q2 + uv*q3 with all exponents of each q even."""
        n = len(self._masks)
        q0 = [0] * n
        q1 = [0] * n
        q2 = [0] * n
        q3 = [0] * n
        for dv, m in enumerate(self._masks):
            if not m:
                continue
            em = m & _even_mask(m.bit_length())
            om = (m ^ em) >> 1
            if dv & 1:
                q2[dv - 1] = em
                q3[dv - 1] = om
            else:
                q0[dv] = em
                q1[dv] = om
        return tuple(Poly2(Poly2._trim(q)) for q in (q0, q1, q2, q3))

    # -- comparison / hashing -------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly2):
            return NotImplemented
        return self._masks == other._masks

    def __hash__(self) -> int:
        return hash(self._masks)

    # -- text form ------------------------------------------------------------

    def _sorted_monomials(self) -> list[tuple[int, int]]:
        # graded order, ties broken by u-degree, largest first
        return sorted(self.monomials(), key=lambda t: (-(t[0] + t[1]), -t[0]))

    def __str__(self) -> str:
        if not self._masks:
            return "0"
        return " + ".join(_format_monomial(a, b) for a, b in self._sorted_monomials())

    def __repr__(self) -> str:
        return f"Poly2({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "Poly2":
        """Inverse of str(): sums of '*'-joined powers of u and v, or '0'."""
        text = text.strip()
        if not text:
            raise ValueError("empty polynomial string")
        if text == "0":
            return ZERO
        pairs = []
        for term in text.split("+"):
            term = term.strip()
            if not term:
                raise ValueError("empty term in polynomial string")
            a = b = 0
            for factor in term.split("*"):
                factor = factor.strip()
                if factor == "1":
                    continue
                if factor.startswith("u"):
                    var = "u"
                elif factor.startswith("v"):
                    var = "v"
                else:
                    raise ValueError(f"cannot parse monomial factor {factor!r}")
                rest = factor[1:]
                if rest == "":
                    e = 1
                elif rest.startswith("^"):
                    e = int(rest[1:])
                    if e < 0:
                        raise ValueError("negative exponent")
                else:
                    raise ValueError(f"cannot parse monomial factor {factor!r}")
                if var == "u":
                    a += e
                else:
                    b += e
            pairs.append((a, b))
        return cls.from_monomials(pairs)


def _format_monomial(a: int, b: int) -> str:
    parts = []
    if a:
        parts.append("u" if a == 1 else f"u^{a}")
    if b:
        parts.append("v" if b == 1 else f"v^{b}")
    return "*".join(parts) if parts else "1"


ZERO = Poly2(())
ONE = Poly2((1,))
U = Poly2((2,))
V = Poly2((0, 1))
UV = Poly2((0, 2))


# ---------------------------------------------------------------------------
# GF(2^16) scalar layer for the evaluation/interpolation gcd
#
# x^16 + x^5 + x^3 + x^2 + 1 is primitive, so x generates the multiplicative
# group and a single discrete-log table pair gives vectorized field arithmetic
# as numpy gathers.  The exp table is doubled so products of logs never wrap.

_GF_POLY = 0x1002D
_GF_ORDER = 65535
_gf_exp: "np.ndarray | None" = None
_gf_log: "np.ndarray | None" = None


def _gf_tables() -> tuple["np.ndarray", "np.ndarray"]:
    global _gf_exp, _gf_log
    if _gf_exp is None:
        exp = np.empty(2 * _GF_ORDER, dtype=np.uint16)
        log = np.zeros(_GF_ORDER + 1, dtype=np.int64)
        x = 1
        for i in range(_GF_ORDER):
            exp[i] = x
            log[x] = i
            x <<= 1
            if x & 0x10000:
                x ^= _GF_POLY
        if x != 1:
            raise AssertionError("field generator table incomplete")
        exp[_GF_ORDER:] = exp[:_GF_ORDER]
        _gf_exp, _gf_log = exp, log
    return _gf_exp, _gf_log


def _gf_mul(a: "np.ndarray", b) -> "np.ndarray":
    """Elementwise GF(2^16) product; b may be an array or a scalar."""
    out = _gf_exp[_gf_log[a] + _gf_log[b]]
    return np.where((a == 0) | (b == 0), 0, out)


def _gf_inv(a: "np.ndarray") -> "np.ndarray":
    """Elementwise inverse; the caller guarantees no zeros."""
    return _gf_exp[_GF_ORDER - _gf_log[a]]


def _gf_pow_matrix(ts: "np.ndarray", maxdeg: int) -> "np.ndarray":
    """Matrix with row per point t and column e holding t^e (t nonzero)."""
    npts = ts.shape[0]
    p = np.empty((npts, maxdeg + 1), dtype=np.uint16)
    p[:, 0] = 1
    if maxdeg:
        lt = _gf_log[ts]
        acc = np.zeros(npts, dtype=np.int64)
        for e in range(1, maxdeg + 1):
            acc += lt
            acc %= _GF_ORDER
            p[:, e] = _gf_exp[acc]
    return p


def _gf_eval_strips(masks: Iterable[int], pows: "np.ndarray") -> "np.ndarray":
    """Evaluate each GF(2)[u] mask at every point; rows = masks, cols = points."""
    masks = list(masks)
    out = np.zeros((len(masks), pows.shape[0]), dtype=np.uint16)
    for i, m in enumerate(masks):
        if not m:
            continue
        nb = (m.bit_length() + 7) // 8
        bits = np.unpackbits(
            np.frombuffer(m.to_bytes(nb, "little"), np.uint8), bitorder="little"
        )
        idx = np.nonzero(bits)[0]
        out[i] = np.bitwise_xor.reduce(pows[:, idx], axis=1)
    return out


def _gf_interp_masks(xs: "np.ndarray", vals: "np.ndarray") -> "list[int] | None":
    """Interpolate every column of vals at the points xs as a GF(2)[u] mask.

    Newton's divided differences, vectorized across columns; subtraction is
    xor in characteristic two.  Returns None when an interpolated coefficient
    falls outside the prime subfield {0, 1}, which flags unlucky sample points.
    """
    n = xs.shape[0]
    m = vals.shape[1]
    F = vals.copy()
    for k in range(1, n):
        denom = xs[k:] ^ xs[: n - k]
        inv = _gf_exp[_GF_ORDER - _gf_log[denom]]
        F[k:] = _gf_mul(F[k:] ^ F[k - 1 : n - 1], inv[:, None])
    # expand the Newton form; C rows are monomial coefficients of u^0, u^1, ...
    C = np.zeros((n, m), dtype=np.uint16)
    C[0] = F[n - 1]
    length = 1
    for i in range(n - 2, -1, -1):
        scaled = _gf_mul(C[:length], xs[i])
        C[1 : length + 1] = C[:length].copy()
        C[0] = 0
        C[:length] ^= scaled
        C[0] ^= F[i]
        length += 1
    if (C > 1).any():
        return None
    out = []
    for j in range(m):
        col = np.packbits(C[:, j].astype(np.uint8), bitorder="little")
        out.append(int.from_bytes(col.tobytes(), "little"))
    return out


_gf_exp_s: "list[int] | None" = None
_gf_log_s: "list[int] | None" = None


def _gf_scalar_tables() -> tuple[list[int], list[int]]:
    """Plain-list log/exp tables; list indexing beats numpy for scalar work."""
    global _gf_exp_s, _gf_log_s
    if _gf_exp_s is None:
        exp = [0] * (2 * _GF_ORDER)
        log = [0] * (_GF_ORDER + 1)
        x = 1
        for i in range(_GF_ORDER):
            exp[i] = x
            log[x] = i
            x <<= 1
            if x & 0x10000:
                x ^= _GF_POLY
        exp[_GF_ORDER:] = exp[:_GF_ORDER]
        _gf_exp_s, _gf_log_s = exp, log
    return _gf_exp_s, _gf_log_s


def _coprime_at_point(pa: tuple[int, ...], pb: tuple[int, ...], maxdeg: int) -> bool:
    """One-point Euclid in v; True proves a content-free pair coprime.

    At a point of GF(2^16) where both leading v-coefficients survive, the
    image of the true gcd keeps its v-degree, so a constant single-point gcd
    forces the gcd into GF(2)[u] — and content-free operands make that the
    unit.  Unlucky points only ever raise the apparent degree, never lower
    it, so True is always trustworthy while False is merely inconclusive.

    Random fraction arithmetic mostly asks for gcds of coprime pairs, and
    this scalar probe answers those for the cost of one synthetic-division
    chain instead of a full interpolation or remainder sequence.
    """
    exp, log = _gf_scalar_tables()
    for t in range(2, 18):
        lt = log[t]
        pows = [1] * (maxdeg + 1)
        acc = 0
        for e in range(1, maxdeg + 1):
            acc += lt
            if acc >= _GF_ORDER:
                acc -= _GF_ORDER
            pows[e] = exp[acc]

        def ev(mask: int) -> int:
            val = 0
            while mask:
                val ^= pows[(mask & -mask).bit_length() - 1]
                mask &= mask - 1
            return val

        a = [ev(m) for m in pa]
        b = [ev(m) for m in pb]
        if not a[-1] or not b[-1]:
            continue  # the point kills a leading coefficient; try the next
        while True:
            db = len(b) - 1
            ilb = _GF_ORDER - log[b[db]]
            for s in range(len(a) - 1 - db, -1, -1):
                lead = a[db + s]
                if not lead:
                    continue
                lq = log[lead] + ilb
                if lq >= _GF_ORDER:
                    lq -= _GF_ORDER
                a[db + s] = 0
                for k in range(db):
                    bk = b[k]
                    if bk:
                        a[k + s] ^= exp[lq + log[bk]]
            while a and not a[-1]:
                a.pop()
            if not a:
                return False  # gcd image is b itself, degree > 0
            if len(a) == 1:
                return True  # constant gcd image at a good point
            a, b = b, a
    return False


def _gcd_modular(
    pa: tuple[int, ...], pb: tuple[int, ...], dua: int, dub: int
) -> "tuple[int, ...] | None":
    """Gcd of primitive, monomial-free mask tuples by evaluation at GF(2^16)
    points, a lockstep Euclid in v across all points at once, and Newton
    interpolation in u.  Deterministic (points are taken in a fixed order).
    Returns None when sampling fails, letting the caller fall back to the
    pseudo-remainder path; the result is division-verified, never trusted.
    """
    _gf_tables()
    dva, dvb = len(pa) - 1, len(pb) - 1
    gamma = ugcd(pa[-1], pb[-1])
    # the interpolated object is gcd * (gamma / its leading v-coefficient)
    need = min(dua, dub) + gamma.bit_length() + 1
    margin = (need >> 2) + 16
    base = 1
    maxdeg = max(dua, dub)
    for _ in range(3):
        S = need + margin
        margin *= 2
        if base + S > _GF_ORDER + 1:
            return None
        ts = np.arange(base, base + S, dtype=np.uint16)
        base += S
        pows = _gf_pow_matrix(ts, maxdeg)
        A = np.ascontiguousarray(_gf_eval_strips(pa, pows).T)
        B = np.ascontiguousarray(_gf_eval_strips(pb, pows).T)
        good = (A[:, -1] != 0) & (B[:, -1] != 0)
        if good.sum() < need:
            continue
        if not good.all():
            A, B, pows = A[good], B[good], pows[good]
            ts = ts[good]
        dA, dB = dva, dvb
        G = None
        while True:
            inv = _gf_inv(B[:, dB])
            R = A
            for s in range(dA - dB, -1, -1):
                q = _gf_mul(R[:, dB + s], inv)
                if dB:
                    R[:, s : s + dB] ^= _gf_mul(q[:, None], B[:, :dB])
                R[:, dB + s] = 0
            nz = R[:, :dB] != 0
            anynz = nz.any(axis=1)
            if not anynz.any():
                G, dgv = B, dB
                break
            degs = dB - 1 - np.argmax(nz[:, ::-1], axis=1)
            dmax = int(degs[anynz].max())
            if dmax == 0 and anynz.all():
                # a nonzero constant remainder everywhere: the gcd is v-free,
                # hence 1 for primitive operands
                return (1,)
            keep = anynz & (degs == dmax)
            if keep.all():
                A, B = B, R[:, : dmax + 1]
            else:
                if int(keep.sum()) < need:
                    break
                A, B = B[keep], R[keep, : dmax + 1]
                pows, ts = pows[keep], ts[keep]
            dA, dB = dB, dmax
        if G is None:
            continue
        gam = _gf_eval_strips((gamma,), pows)[0]
        scale = _gf_mul(_gf_inv(G[:, dgv]), gam)
        ghat = _gf_mul(G, scale[:, None])
        strips = _gf_interp_masks(ts[:need], ghat[:need])
        if strips is None or not any(strips):
            continue
        prim = _primitive(Poly2._trim(strips))
        cand = Poly2(prim)
        if Poly2(pa).try_div(cand) is not None and Poly2(pb).try_div(cand) is not None:
            return prim
    return None


# ---------------------------------------------------------------------------
# gcd

def _content(masks: Iterable[int]) -> int:
    c = 0
    for m in masks:
        if m:
            c = ugcd(c, m)
            if c == 1:
                return 1
    return c


def _primitive(masks: tuple[int, ...]) -> tuple[int, ...]:
    c = _content(masks)
    if c == 1:
        return masks
    return tuple(uexact_div(m, c) if m else 0 for m in masks)


def upow(a: int, n: int) -> int:
    r = 1
    while n:
        if n & 1:
            r = umul(r, a)
        n >>= 1
        if n:
            a = usqr(a)
    return r


def gcd_many(polys: Iterable[Poly2]) -> Poly2:
    """Gcd of several polynomials; zero entries are ignored, all-zero gives 0.

    Entries are taken smallest first, and each is first checked for exact
    divisibility by the running gcd (one cheap packed division), so chains
    over related entries usually cost a single genuine pair gcd.
    """
    items = sorted(
        (p for p in polys if p), key=lambda p: (p.deg_u + 1) * (p.deg_v + 1)
    )
    if not items:
        return ZERO
    g = items[0]
    for p in items[1:]:
        if g.is_one:
            break
        if p.try_div(g) is None:
            g = gcd(g, p)
    return g


def gcd(a: Poly2, b: Poly2) -> Poly2:
    """Greatest common divisor, canonical since GF(2)[u, v] has no units but 1."""
    am, bm = a._masks, b._masks
    if not am:
        if not bm:
            raise ValueError("gcd(0, 0) is undefined")
        return b
    if not bm:
        return a
    if am == (1,) or bm == (1,):
        return ONE
    if am == bm:
        return a
    ua, va = a.monomial_content()
    ub, vb = b.monomial_content()
    mu, mv = min(ua, ub), min(va, vb)
    pa = a.shifted(-ua, -va)._masks
    pb = b.shifted(-ub, -vb)._masks
    g = _gcd_monomial_free(pa, pb)
    if mu or mv:
        g = g.shifted(mu, mv)
    return g


def _gcd_monomial_free(am: tuple[int, ...], bm: tuple[int, ...]) -> Poly2:
    # both operands have constant term in u and in v after content removal
    if len(am) == 1:
        return Poly2((ugcd(am[0], _content(bm)),))
    if len(bm) == 1:
        return Poly2((ugcd(bm[0], _content(am)),))
    ca = _content(am)
    cb = _content(bm)
    c = ugcd(ca, cb)
    pa = am if ca == 1 else tuple(_udiv_batch(am, ca))
    pb = bm if cb == 1 else tuple(_udiv_batch(bm, cb))
    if len(pa) < len(pb):
        pa, pb = pb, pa
    dua = max(m.bit_length() for m in pa) - 1
    dub = max(m.bit_length() for m in pb) - 1
    # the operands are now content-free, so a constant one-point gcd image
    # settles the common case outright
    if _coprime_at_point(pa, pb, max(dua, dub)):
        return Poly2((c,))
    # large operands: evaluation/interpolation beats any remainder sequence,
    # whose coefficients swell toward resultant size
    if len(pb) > 2 and min(dua, dub) >= 10 and min(dua, dub) * len(pb) >= 120:
        got = _gcd_modular(pa, pb, dua, dub)
        if got is not None:
            if c == 1:
                return Poly2(got)
            return Poly2(tuple(umul(c, m) if m else 0 for m in got))
    # subresultant remainder sequence on Kronecker-packed polynomials: one
    # pseudo-reduction step is two carry-less products of whole packed ints.
    # The strip width tracks the actual coefficient sizes (sizing it from the
    # worst-case resultant bound would drown easy gcds in zero padding) and is
    # regrown geometrically when the sequence outgrows it.
    wbytes = (dua + 2 * (len(pa) - len(pb) + 1) * (dub + 1) + 71) >> 3
    width = 8 * wbytes
    pk_a, deg_a, ub_a = _pack(pa, wbytes), len(pa) - 1, dua
    pk_b, deg_b, ub_b = _pack(pb, wbytes), len(pb) - 1, dub
    g = h = 1
    while True:
        if deg_b == 0:
            # the primitive part of a v-free intermediate is the unit
            prim: tuple[int, ...] = (1,)
            break
        delta = deg_a - deg_b
        lb = pk_b >> (width * deg_b)
        # each reduction step can widen the strips by deg_u(b), and the
        # missing-factor fixup by deg_u(lb) more, hence the doubled term
        need = ub_a + 2 * (delta + 1) * (ub_b + 1) + 8
        if need > width:
            masks_a = _unpack(pk_a, wbytes, deg_a + 1)
            masks_b = _unpack(pk_b, wbytes, deg_b + 1)
            wbytes = (2 * need + 7) >> 3
            width = 8 * wbytes
            pk_a = _pack(masks_a, wbytes)
            pk_b = _pack(masks_b, wbytes)
            lb = pk_b >> (width * deg_b)
        # strict pseudo-remainder lb^(delta+1) * a mod b, counting the
        # reduction steps actually taken to supply the skipped factors
        smask = (1 << width) - 1
        rem = pk_a
        steps = 0
        rd = deg_a
        while rd >= deg_b:
            lr = (rem >> (width * rd)) & smask
            if lr:
                steps += 1
                rem = umul(lb, rem) ^ umul(lr, pk_b << (width * (rd - deg_b)))
            rd -= 1
        if not rem:
            prim = _primitive(tuple(_unpack(pk_b, wbytes, deg_b + 1)))
            break
        missing = delta + 1 - steps
        if missing > 0:
            rem = umul(upow(lb, missing), rem)
        divisor = umul(g, upow(h, delta))
        pk_a, deg_a, ub_a = pk_b, deg_b, ub_b
        deg_r = (rem.bit_length() - 1) // width
        qmasks = _udiv_batch(_unpack(rem, wbytes, deg_r + 1), divisor)
        pk_b, deg_b = _pack(qmasks, wbytes), deg_r
        ub_b = max(m.bit_length() for m in qmasks) - 1
        # g tracks the leading coefficient of the new dividend (the old b)
        g = lb
        if delta == 1:
            h = g
        elif delta:
            h = uexact_div(upow(g, delta), upow(h, delta - 1))
    if c == 1:
        return Poly2(prim)
    return Poly2(tuple(umul(c, m) if m else 0 for m in prim))
