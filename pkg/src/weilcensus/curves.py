"""Curves over small finite fields: field arithmetic, exhaustive point
counting (the ground-truth oracle), and conversion between point counts and
Weil data.

Scalar field arithmetic uses dense coefficient vectors with schoolbook
multiplication and modular reduction; the modulus is deterministic (the
lexicographically smallest monic irreducible, coefficients compared low to
high degree).  The exhaustive counter enumerates x over the whole field in
chunks with numpy, classifying the fiber size of each x by quadratic-character
or trace lookups; per-field lookup tables are derived by the same exact field
arithmetic, so the count is an exact integer.  The result is a plain sum over
chunks and is independent of the chunk partition.

Model coefficients are rational integers, i.e. values in the prime subfield.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .algebra import IntPolynomial, is_prime
from .modpoly import ModPoly, is_irreducible
from .weil import (
    InvalidWeilPolynomial,
    WeilPolynomial,
    curve_point_count,
    point_count,
    validate,
)

FIELD_CAP = 1 << 24
"""Largest p^a for which make_field will construct a field."""

ENUM_CAP = 1 << 20
"""Default largest q^n for exhaustive point enumeration."""

_DEFAULT_CHUNK = 1 << 16


class EnumerationCapExceeded(ValueError):
    """Requested brute-force enumeration is above the configured cap."""


# ---------------------------------------------------------------------------
# scalar finite fields
# ---------------------------------------------------------------------------

def _smallest_irreducible(p: int, a: int) -> ModPoly:
    # lexicographic order on (c_0, ..., c_{a-1}), low-degree coefficient first;
    # candidates with c_0 = 0 (divisible by T) or f(1) = 0 are skipped without
    # the full test, which cannot change the minimum
    if a == 1:
        return ModPoly.x(p)
    for k in range(p ** (a - 1), p ** a):
        digits = []
        rest = k
        for i in range(a):
            power = p ** (a - 1 - i)
            digits.append(rest // power)
            rest %= power
        if digits[0] == 0 or (sum(digits) + 1) % p == 0:
            continue
        candidate = ModPoly(p, digits + [1])
        if is_irreducible(candidate):
            return candidate
    raise ArithmeticError("no irreducible polynomial found")  # pragma: no cover


class FiniteField:
    """F_{p^a} with elements as coefficient tuples of length a."""

    def __init__(self, p: int, a: int, modulus: ModPoly | None = None):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if a < 1:
            raise ValueError("extension degree must be >= 1")
        if p ** a > FIELD_CAP:
            raise ValueError(f"field size {p}^{a} exceeds the cap {FIELD_CAP}")
        self.p = p
        self.a = a
        self.q = p ** a
        if modulus is None:
            modulus = _smallest_irreducible(p, a)
        if modulus.p != p or modulus.degree != a or not modulus.is_monic:
            raise ValueError("modulus must be monic of degree a over F_p")
        if a > 1 and not is_irreducible(modulus):
            raise ValueError("modulus is reducible")
        self.modulus = modulus

    # -- element plumbing ------------------------------------------------------

    @property
    def zero(self) -> tuple[int, ...]:
        return (0,) * self.a

    @property
    def one(self) -> tuple[int, ...]:
        return self.embed(1)

    def embed(self, c: int) -> tuple[int, ...]:
        """The prime-field scalar c as a field element."""
        return (c % self.p,) + (0,) * (self.a - 1)

    def element(self, coeffs: Iterable[int]) -> tuple[int, ...]:
        cs = [c % self.p for c in coeffs]
        if len(cs) > self.a:
            raise ValueError("too many coefficients")
        return tuple(cs) + (0,) * (self.a - len(cs))

    def encode(self, x: Sequence[int]) -> int:
        acc = 0
        for c in reversed(x):
            acc = acc * self.p + c
        return acc

    def decode(self, k: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.a):
            k, r = divmod(k, self.p)
            out.append(r)
        return tuple(out)

    # -- arithmetic --------------------------------------------------------------

    def add(self, x, y) -> tuple[int, ...]:
        return tuple((u + v) % self.p for u, v in zip(x, y))

    def neg(self, x) -> tuple[int, ...]:
        return tuple(-u % self.p for u in x)

    def sub(self, x, y) -> tuple[int, ...]:
        return tuple((u - v) % self.p for u, v in zip(x, y))

    def mul(self, x, y) -> tuple[int, ...]:
        prod = ModPoly(self.p, x) * ModPoly(self.p, y)
        red = prod % self.modulus
        return self.element(red.coeffs)

    def pow(self, x, e: int) -> tuple[int, ...]:
        if e < 0:
            return self.pow(self.inv(x), -e)
        result = self.one
        base = x
        while e:
            if e & 1:
                result = self.mul(result, base)
            e >>= 1
            if e:
                base = self.mul(base, base)
        return result

    def inv(self, x) -> tuple[int, ...]:
        if x == self.zero:
            raise ZeroDivisionError("inverse of zero")
        # extended Euclid in F_p[T] against the modulus
        a, b = ModPoly(self.p, x), self.modulus
        s0, s1 = ModPoly.one(self.p), ModPoly.zero(self.p)
        while not b.is_zero:
            quo, rem = a.divmod(b)
            a, b = b, rem
            s0, s1 = s1, s0 - quo * s1
        lead_inv = pow(a.leading, self.p - 2, self.p)
        return self.element((s0.scale(lead_inv)).coeffs)

    def is_square(self, x) -> bool:
        """Whether x is a square (0 counts as a square)."""
        if x == self.zero:
            return True
        if self.p == 2:
            return True
        return self.pow(x, (self.q - 1) // 2) == self.one

    def elements(self):
        for k in range(self.q):
            yield self.decode(k)


def make_field(p: int, a: int) -> FiniteField:
    """F_{p^a} with the deterministic (lex-smallest) modulus; p^a <= 2^24."""
    return FiniteField(p, a)


# ---------------------------------------------------------------------------
# vectorized enumeration engine
# ---------------------------------------------------------------------------

class _GenericVectorField:
    """Numpy-backed arithmetic over all of F_{p^m} at once, odd p.

    Element batches are (N, m) digit arrays; multiplication is schoolbook
    convolution followed by reduction with the precomputed rows T^{m+t} mod
    modulus.  Lookup tables (squares, quadratic character) are derived from
    this arithmetic and cached per field.
    """

    def __init__(self, field: FiniteField):
        self.field = field
        self.p = field.p
        self.m = field.a
        self.q = field.q
        self.dtype = np.int64 if self.m == 1 else np.int32
        self._powers = (self.p ** np.arange(self.m)).astype(np.int64)
        if self.m > 1:
            rows = []
            t_power = ModPoly.x(self.p).pow_mod(self.m, field.modulus)
            x = ModPoly.x(self.p)
            for _ in range(self.m - 1):
                rows.append([t_power.coefficient(i) for i in range(self.m)])
                t_power = t_power * x % field.modulus
            self._red = np.array(rows, dtype=self.dtype)
        else:
            self._red = None
        self._sq_table: np.ndarray | None = None
        self._chi_table: np.ndarray | None = None

    # -- batch element plumbing -------------------------------------------------

    def digits(self, idx: np.ndarray) -> np.ndarray:
        d = (idx.astype(np.int64)[:, None] // self._powers[None, :]) % self.p
        return d.astype(self.dtype)

    def encode(self, d: np.ndarray) -> np.ndarray:
        return d.astype(np.int64) @ self._powers

    def embed_scalar(self, c: int, n: int) -> np.ndarray:
        out = np.zeros((n, self.m), dtype=self.dtype)
        out[:, 0] = c % self.p
        return out

    # -- batch arithmetic ----------------------------------------------------------

    def mul(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        m, p = self.m, self.p
        if m == 1:
            return (x * y) % p
        n = max(x.shape[0], y.shape[0])
        conv = np.zeros((n, 2 * m - 1), dtype=self.dtype)
        for i in range(m):
            conv[:, i:i + m] += x[:, i:i + 1] * y
        conv %= p
        out = conv[:, :m].copy()
        for t in range(m - 1):
            out += conv[:, m + t:m + t + 1] * self._red[t]
        out %= p
        return out

    def add(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return (x + y) % self.p

    def add_scalar(self, x: np.ndarray, c: int) -> np.ndarray:
        out = x.copy()
        out[:, 0] = (out[:, 0] + c) % self.p
        return out

    def scale(self, c: int, x: np.ndarray) -> np.ndarray:
        return (x * (c % self.p)) % self.p

    def poly_eval(self, coeffs: Sequence[int], x: np.ndarray) -> np.ndarray:
        """Horner evaluation of an integer-coefficient polynomial at a batch."""
        n = x.shape[0]
        cs = [c % self.p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        if not cs:
            return np.zeros((n, self.m), dtype=self.dtype)
        acc = self.embed_scalar(cs[-1], n)
        for c in reversed(cs[:-1]):
            acc = self.mul(acc, x)
            if c:
                acc[:, 0] = (acc[:, 0] + c) % self.p
        return acc

    # -- cached tables ----------------------------------------------------------------

    def _chunks(self, chunk: int):
        for start in range(0, self.q, chunk):
            yield np.arange(start, min(start + chunk, self.q), dtype=np.int64)

    def sq_table(self, chunk: int = _DEFAULT_CHUNK) -> np.ndarray:
        if self._sq_table is None:
            tab = np.empty(self.q, dtype=np.int64)
            for idx in self._chunks(chunk):
                d = self.digits(idx)
                tab[idx] = self.encode(self.mul(d, d))
            self._sq_table = tab
        return self._sq_table

    def chi_table(self, chunk: int = _DEFAULT_CHUNK) -> np.ndarray:
        """Quadratic character by encoding: +1 square, -1 nonsquare, 0 zero."""
        if self._chi_table is None:
            chi = np.full(self.q, -1, dtype=np.int8)
            chi[self.sq_table(chunk)] = 1
            chi[0] = 0
            self._chi_table = chi
        return self._chi_table


class _PackedBinaryField:
    """Vectorized F_{2^m} with elements packed as m-bit integers.

    The packed value of an element equals its encoding, so lookup tables index
    directly.  Multiplication is shift-and-XOR convolution followed by bitwise
    reduction; squaring, inversion, and traces come from cached gather tables.
    """

    def __init__(self, field: FiniteField):
        if field.p != 2:
            raise ValueError("packed engine requires p = 2")
        self.field = field
        self.p = 2
        self.m = field.a
        self.q = field.q
        x = ModPoly.x(2)
        t_power = x.pow_mod(self.m, field.modulus)
        red = []
        for t in range(self.m, 2 * self.m - 1):
            bits = sum(c << i for i, c in enumerate(t_power.coeffs))
            red.append(bits | (1 << t))  # XOR also clears the reduced bit
            t_power = t_power * x % field.modulus
        self._red_masks = red
        self._sq_table: np.ndarray | None = None
        self._inv_table: np.ndarray | None = None
        self._trace_mask: int | None = None

    # -- batch element plumbing ------------------------------------------------

    def digits(self, idx: np.ndarray) -> np.ndarray:
        return idx.astype(np.int64)

    def encode(self, d: np.ndarray) -> np.ndarray:
        return d

    def embed_scalar(self, c: int, n: int) -> np.ndarray:
        return np.full(n, c & 1, dtype=np.int64)

    # -- batch arithmetic ---------------------------------------------------------

    def mul(self, x: np.ndarray, y) -> np.ndarray:
        m = self.m
        conv = np.zeros_like(x)
        for i in range(m):
            if isinstance(y, (int, np.integer)):
                if (y >> i) & 1:
                    conv ^= x << i
            else:
                conv ^= (x << i) * ((y >> i) & 1)
        for t in range(2 * m - 2, m - 1, -1):
            conv ^= self._red_masks[t - m] * ((conv >> t) & 1)
        return conv

    def add(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return x ^ y

    def add_scalar(self, x: np.ndarray, c: int) -> np.ndarray:
        return x ^ (c & 1)

    def poly_eval(self, coeffs: Sequence[int], x: np.ndarray) -> np.ndarray:
        cs = [c & 1 for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        if not cs:
            return np.zeros_like(x)
        acc = self.embed_scalar(cs[-1], x.shape[0])
        for c in reversed(cs[:-1]):
            acc = self.mul(acc, x)
            if c:
                acc = acc ^ 1
        return acc

    @staticmethod
    def parity(v: np.ndarray) -> np.ndarray:
        v = v ^ (v >> 32)
        v = v ^ (v >> 16)
        v = v ^ (v >> 8)
        v = v ^ (v >> 4)
        v = v ^ (v >> 2)
        v = v ^ (v >> 1)
        return v & 1

    # -- cached tables -----------------------------------------------------------------

    def _chunks(self, chunk: int):
        for start in range(0, self.q, chunk):
            yield np.arange(start, min(start + chunk, self.q), dtype=np.int64)

    def sq_table(self, chunk: int = _DEFAULT_CHUNK) -> np.ndarray:
        if self._sq_table is None:
            tab = np.empty(self.q, dtype=np.int64)
            for idx in self._chunks(chunk):
                tab[idx] = self.mul(idx, idx)
            self._sq_table = tab
        return self._sq_table

    def trace_mask(self) -> int:
        """Bit i set iff Tr(T^i) = 1; traces are then parity(u & mask)."""
        if self._trace_mask is None:
            field = self.field
            mask = 0
            for i in range(self.m):
                t = ModPoly.x(2).pow_mod(i, field.modulus)
                acc = t
                for _ in range(self.m - 1):
                    t = t * t % field.modulus
                    acc = acc + t
                if acc.degree > 0:
                    raise ArithmeticError("trace did not land in F_2")  # pragma: no cover
                mask |= acc.coefficient(0) << i
            self._trace_mask = mask
        return self._trace_mask

    def inv_table(self, chunk: int = _DEFAULT_CHUNK) -> np.ndarray:
        """Packed inverses u^(q-2) for all u (entry 0 is unused).

        Frobenius-ladder addition chain: u^(2^e - 1) terms are combined with
        squaring gathers, so only ~2 log2(m) full multiplications are needed.
        """
        if self._inv_table is None:
            sq = self.sq_table(chunk)
            all_enc = np.arange(self.q, dtype=np.int64)
            e_target = self.m - 1
            if e_target == 0:
                inv = all_enc.copy()  # F_2: 1^{-1} = 1
            else:
                bits = bin(e_target)[2:]
                t = all_enc.copy()  # u^(2^1 - 1)
                e = 1
                for b in bits[1:]:
                    s = t
                    for _ in range(e):
                        s = sq[s]
                    t = self.mul(s, t)  # u^(2^(2e) - 1)
                    e *= 2
                    if b == "1":
                        t = self.mul(sq[t], all_enc)
                        e += 1
                inv = sq[t]  # (u^(2^(m-1) - 1))^2 = u^(2^m - 2)
            inv[0] = 0
            self._inv_table = inv
        return self._inv_table


_ENGINES: dict[tuple[int, int, tuple[int, ...]], object] = {}


def _engine(field: FiniteField):
    key = (field.p, field.a, field.modulus.coeffs)
    if key not in _ENGINES:
        cls = _PackedBinaryField if field.p == 2 else _GenericVectorField
        _ENGINES[key] = cls(field)
    return _ENGINES[key]


# ---------------------------------------------------------------------------
# curve specifications
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CurveModel:
    """Affine model y^2 + h(x) y = f(x) with integer coefficients (ascending).

    Elliptic Weierstrass models are stored the same way: h = a1 x + a3 and
    f = x^3 + a2 x^2 + a4 x + a6.
    """

    h: tuple[int, ...]
    f: tuple[int, ...]

    @staticmethod
    def elliptic(a1: int = 0, a2: int = 0, a3: int = 0, a4: int = 0, a6: int = 0) -> "CurveModel":
        return CurveModel(h=(a3, a1), f=(a6, a4, a2, 1))

    @staticmethod
    def hyperelliptic(h: Sequence[int], f: Sequence[int]) -> "CurveModel":
        return CurveModel(h=tuple(h), f=tuple(f))

    def _deg(self, coeffs: tuple[int, ...], p: int) -> int:
        d = -1
        for i, c in enumerate(coeffs):
            if c % p:
                d = i
        return d

    def degree_data(self, p: int) -> tuple[int, int, int]:
        """(deg h, deg f, model degree d = max(2 deg h, deg f)) over F_p."""
        dh = self._deg(self.h, p)
        df = self._deg(self.f, p)
        if df < 1:
            raise ValueError("f must be nonconstant")
        return dh, df, max(2 * dh, df)

    def genus(self, p: int) -> int:
        _, _, d = self.degree_data(p)
        return max((d - 1) // 2, 0)


@dataclass(frozen=True)
class CurveSpec:
    """A curve over F_q given by a model and/or counts and/or L-data."""

    q: int
    genus: int
    model: CurveModel | None = None
    counts: tuple[int, ...] | None = None
    l_polynomial: IntPolynomial | None = None
    label: str = ""

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError("genus must be >= 0")
        if self.model is None and self.counts is None and self.l_polynomial is None and self.genus > 0:
            raise ValueError("need a model, counts, or an L-polynomial")


@dataclass(frozen=True)
class ZetaData:
    """Weil data of a curve: Jacobian Weil polynomial plus N_1..N_g."""

    q: int
    g: int
    weil: WeilPolynomial
    point_counts: tuple[int, ...]


# ---------------------------------------------------------------------------
# exhaustive point counting
# ---------------------------------------------------------------------------

def _affine_count(field: FiniteField, model: CurveModel, chunk: int) -> int:
    vf = _engine(field)
    p = field.p
    h_coeffs = [c % p for c in model.h]
    f_coeffs = [c % p for c in model.f]
    h_is_zero = not any(h_coeffs)
    if p == 2 and h_is_zero:
        raise ValueError("char-2 hyperelliptic models need h != 0 (y^2 = f is inseparable)")
    total = 0
    if p != 2:
        chi = vf.chi_table(chunk)
        for idx in vf._chunks(chunk):
            x = vf.digits(idx)
            fv = vf.poly_eval(f_coeffs, x)
            if h_is_zero:
                w = fv  # chi(4f) = chi(f)
            else:
                hv = vf.poly_eval(h_coeffs, x)
                w = vf.add(vf.mul(hv, hv), (4 * fv) % p)
            total += int(idx.size) + int(chi[vf.encode(w)].sum())
    else:
        mask = vf.trace_mask()
        sq = vf.sq_table(chunk)
        dh = model.degree_data(p)[0]
        constant_h = dh < 1
        if constant_h:
            c_scalar = field.embed(h_coeffs[0])
            inv_c2 = field.encode(field.inv(field.mul(c_scalar, c_scalar)))
        else:
            inv = vf.inv_table(chunk)
        for idx in vf._chunks(chunk):
            x = vf.digits(idx)
            fv = vf.poly_eval(f_coeffs, x)
            if constant_h:
                u = vf.mul(fv, inv_c2)
                traces = vf.parity(u & mask)
                total += int(2 * np.count_nonzero(traces == 0))
            else:
                hv = vf.poly_eval(h_coeffs, x)
                inv_sq = sq[inv[hv]]
                u = vf.mul(inv_sq, fv)
                traces = vf.parity(u & mask)
                fibers = np.where(hv == 0, 1, 2 * (traces == 0))
                total += int(fibers.sum())
    return total


def _infinity_count(field: FiniteField, model: CurveModel) -> int:
    """Points at infinity of the smooth model.

    With d = max(2 deg h, deg f): odd d contributes one point; even d
    contributes the number of solutions of y^2 + h_top y = f_top, where h_top
    and f_top are the coefficients at degrees d/2 and d.
    """
    p = field.p
    dh, df, d = model.degree_data(p)
    if d % 2 == 1:
        return 1
    half = d // 2
    h_top = model.h[half] % p if half < len(model.h) else 0
    f_top = model.f[d] % p if d < len(model.f) else 0
    m_total = field.a
    if p == 2:
        if h_top == 0:
            return 1  # y^2 = f_top has a single root
        # z^2 + z = f_top solvable iff Tr(f_top) = 0; f_top in {0, 1}
        return 2 if (m_total * f_top) % 2 == 0 else 0
    w = (h_top * h_top + 4 * f_top) % p
    if w == 0:
        return 1
    legendre = pow(w, (p - 1) // 2, p)
    if legendre == 1 or m_total % 2 == 0:
        return 2
    return 0


def brute_force_count(
    curve: CurveSpec,
    n: int,
    enum_cap: int = ENUM_CAP,
    chunk: int = _DEFAULT_CHUNK,
) -> int:
    """Exact #C(F_{q^n}) of the smooth projective model by exhaustive enumeration.

    The enumeration field F_{q^n} must satisfy q^n <= enum_cap; the sum over x
    is accumulated in chunks and is independent of the chunk size.
    """
    if curve.model is None:
        raise ValueError("brute-force counting needs an explicit model")
    if n < 1:
        raise ValueError("n must be >= 1")
    decomposition = _base_field_data(curve.q)
    p, a = decomposition
    size = curve.q ** n
    if size > enum_cap:
        raise EnumerationCapExceeded(
            f"q^n = {size} exceeds the enumeration cap {enum_cap}"
        )
    field = make_field(p, a * n)
    return _affine_count(field, curve.model, chunk) + _infinity_count(field, curve.model)


def _base_field_data(q: int) -> tuple[int, int]:
    from .algebra import prime_power_decomposition

    dec = prime_power_decomposition(q)
    if dec is None:
        raise ValueError(f"q = {q} is not a prime power")
    return dec


# ---------------------------------------------------------------------------
# zeta reconstruction
# ---------------------------------------------------------------------------

def zeta_from_counts(q: int, g: int, counts: Sequence[int]) -> ZetaData:
    """Reconstruct the Jacobian Weil polynomial from N_1..N_g.

    Power sums S_m = q^m + 1 - N_m feed Newton's identities for the low half
    of the coefficients; the functional equation completes the rest.  Counts
    beyond the g-th, if supplied, are used as consistency checks.  Inputs
    inconsistent with a genus-g curve are rejected with diagnostics.
    """
    counts = [int(c) for c in counts]
    if len(counts) < g:
        raise ValueError(f"need at least {g} point counts, got {len(counts)}")
    if g == 0:
        zero_weil = validate(q, IntPolynomial((1,)))
        return ZetaData(q=q, g=0, weil=zero_weil, point_counts=())
    s = [Fraction(0)] * (g + 1)  # s[m] = power sum of the 2g Frobenius roots
    for m in range(1, g + 1):
        s[m] = Fraction(q ** m + 1 - counts[m - 1])
    e = [Fraction(1)] + [Fraction(0)] * g
    for k in range(1, g + 1):
        acc = Fraction(0)
        for i in range(1, k + 1):
            acc += (-1) ** (i - 1) * e[k - i] * s[i]
        e[k] = acc / k
    coeffs = [0] * (2 * g + 1)
    coeffs[2 * g] = 1
    for k in range(1, g + 1):
        value = (-1) ** k * e[k]
        if value.denominator != 1:
            raise InvalidWeilPolynomial(
                [f"Newton identities produce a non-integer coefficient at step {k}"]
            )
        coeffs[2 * g - k] = int(value)
    for i in range(g - 1, -1, -1):
        coeffs[i] = q ** (g - i) * coeffs[2 * g - i]
    ch = IntPolynomial(coeffs)
    weil = validate(q, ch)  # raises with diagnostics on bad counts
    reproduced = [curve_point_count(weil, m) for m in range(1, len(counts) + 1)]
    for m, (want, got) in enumerate(zip(counts, reproduced), start=1):
        if want != got:
            raise InvalidWeilPolynomial(
                [f"count N_{m} = {want} is inconsistent with the reconstruction ({got})"]
            )
    return ZetaData(q=q, g=g, weil=weil, point_counts=tuple(counts[:g]))


def zeta_from_l_polynomial(q: int, l_poly: IntPolynomial) -> ZetaData:
    """ZetaData from the L-polynomial P(T) = prod (1 - alpha_i T)."""
    deg = l_poly.degree
    if deg % 2 != 0:
        raise ValueError("L-polynomial must have even degree")
    g = deg // 2
    # ch(T) = T^{2g} P(1/T): reverse the coefficients
    ch = IntPolynomial(tuple(reversed(l_poly.coeffs)))
    weil = validate(q, ch)
    counts = tuple(curve_point_count(weil, m) for m in range(1, g + 1))
    return ZetaData(q=q, g=g, weil=weil, point_counts=counts)


def l_polynomial(zeta: ZetaData) -> IntPolynomial:
    """The L-polynomial recovered from ch by coefficient reversal."""
    return IntPolynomial(tuple(reversed(zeta.weil.ch.coeffs)))


def zeta_data(curve: CurveSpec, enum_cap: int = ENUM_CAP) -> ZetaData:
    """ZetaData of a CurveSpec from whichever description it carries.

    When several descriptions are present they are cross-checked and any
    disagreement is an error.
    """
    if curve.genus == 0:
        return zeta_from_counts(curve.q, 0, [])
    zeta: ZetaData | None = None
    if curve.model is not None:
        counts = [brute_force_count(curve, n, enum_cap) for n in range(1, curve.genus + 1)]
        zeta = zeta_from_counts(curve.q, curve.genus, counts)
    if curve.l_polynomial is not None:
        from_l = zeta_from_l_polynomial(curve.q, curve.l_polynomial)
        if from_l.g != curve.genus:
            raise ValueError("L-polynomial degree does not match the genus")
        if zeta is not None and from_l.weil.ch != zeta.weil.ch:
            raise ValueError("model and L-polynomial disagree")
        zeta = from_l
    if curve.counts is not None:
        if zeta is None:
            zeta = zeta_from_counts(curve.q, curve.genus, curve.counts)
        else:
            for m, want in enumerate(curve.counts, start=1):
                got = curve_point_count(zeta.weil, m)
                if got != want:
                    raise ValueError(
                        f"supplied count N_{m} = {want} disagrees with the model ({got})"
                    )
    assert zeta is not None
    return zeta


def jacobian_count(curve: CurveSpec | ZetaData, n: int, enum_cap: int = ENUM_CAP) -> int:
    """#Pic^0(X)(F_{q^n}), the point count of the Jacobian's Weil polynomial."""
    zeta = curve if isinstance(curve, ZetaData) else zeta_data(curve, enum_cap)
    return point_count(zeta.weil, n)
