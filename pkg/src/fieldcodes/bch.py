"""Binary BCH codes: generator synthesis, erasure decoding and Berlekamp-Massey decoding."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .cyclic import CyclicCode
from .errors import (
    Inconsistent,
    LengthMismatch,
    NoFieldFits,
    RootCountMismatch,
    TooLarge,
    TooManyErasures,
    Uncorrectable,
)
from .gf import Elem, Field, conjugacy_class, default_prime_poly, make_extension_field, make_prime_field
from .linear import LinearCode
from .matf import ERASED, MatF, invert, rre_with_pivots
from .poly import Poly
from .report import DecodeReport
from .rs import RsCode

DISTANCE_ENUM_CAP = 1 << 20


class BchCode:
    """Binary subcode of the primitive (n = 2^m - 1, rs_k) RS code over F_{2^m}."""

    def __init__(self, m: int, rs_k: int, prime_poly: Sequence[int] | None = None):
        if m < 2:
            raise ValueError("m must be at least 2")
        if prime_poly is None:
            prime_poly = default_prime_poly(2, m)
        field = make_extension_field(2, prime_poly)
        if field.m != m:
            raise ValueError(f"prime polynomial has degree {field.m}, expected {m}")
        n = field.q - 1
        if not 1 <= rs_k < n:
            raise ValueError(f"rs_k = {rs_k} must lie in [1, {n - 1}]")
        self.field: Field = field
        self.m = m
        self.n = n
        self.rs_k = rs_k
        self.design_d = n - rs_k + 1
        self.t = (self.design_d - 1) // 2
        self.alpha: Elem = field.alpha

        roots: set[int] = set()
        for j in range(1, n - rs_k + 1):
            roots.update(e.value for e in conjugacy_class(self.alpha**j))
        self.roots = tuple(sorted(roots, key=field.log))
        big = Poly.from_roots(field, self.roots)
        if any(c > 1 for c in big.coeffs):
            raise AssertionError(f"generator polynomial left F_2: {big}")
        self.F2 = make_prime_field(2)
        self.g_tilde = Poly(self.F2, big.coeffs)
        self.k_tilde = n - self.g_tilde.degree
        self.cyclic = CyclicCode(self.F2, n, self.g_tilde)
        self.G = self.cyclic.generator_matrix()
        self.mother = RsCode(field, rs_k, "primitive")
        # column j of the syndrome matrix holds alpha^((i+1) j) for i < 2t
        self._synd = np.array(
            [[field.exp((i + 1) * j) for i in range(2 * self.t)] for j in range(n)], dtype=np.int64
        ).reshape(n, 2 * self.t)
        self._inv_powers = [field.exp(-i) for i in range(n)]

    def __repr__(self):
        return f"BchCode(n={self.n}, k={self.k_tilde}, design_d={self.design_d}, g={self.g_tilde.to_text()})"

    def encode(self, u) -> np.ndarray:
        """u G with G the shifted-generator matrix, i.e. u(x) g(x)."""
        u = np.asarray(u, dtype=np.int64)
        if u.shape[-1] != self.k_tilde:
            raise LengthMismatch(f"message length {u.shape[-1]} != k = {self.k_tilde}")
        return self.F2.matmul(u, self.G.a)

    def unencode(self, c) -> np.ndarray:
        return np.array(self.cyclic.decode_mult(list(c)).padded(self.k_tilde), dtype=np.int64)

    def is_codeword(self, y) -> bool:
        return self.cyclic.is_codeword(list(np.asarray(y)))

    def as_linear_code(self) -> LinearCode:
        return LinearCode(self.G)

    def codewords(self) -> np.ndarray:
        if 2**self.k_tilde > DISTANCE_ENUM_CAP:
            raise TooLarge(f"2^{self.k_tilde} codewords exceed the enumeration cap")
        return self.as_linear_code().codewords()

    def true_distance(self) -> int:
        return int(np.count_nonzero(self.codewords()[1:], axis=1).min())


def make_bch(m: int, rs_k: int, prime_poly: Sequence[int] | None = None) -> BchCode:
    return BchCode(m, rs_k, prime_poly)


def design_for_t(max_n: int, t: int) -> BchCode:
    """Longest BCH code with n = 2^m - 1 <= max_n designed to correct t errors."""
    if t < 1:
        raise ValueError("t must be at least 1")
    m = 1
    while 2 ** (m + 1) - 1 <= max_n:
        m += 1
    n = 2**m - 1
    if m < 2 or n - 2 * t < 1:
        raise NoFieldFits(f"no BCH code with n <= {max_n} can be designed for t = {t}")
    return BchCode(m, n - 2 * t)


# ----------------------------------------------------------------- decoding
def bch_syndrome(code: BchCode, y) -> list[int]:
    """s_i = y(alpha^(i+1)) for i = 0 .. 2t-1, as element encodings."""
    y = np.asarray(y, dtype=np.int64)
    if y.shape[-1] != code.n:
        raise LengthMismatch(f"word length {y.shape[-1]} != n = {code.n}")
    return code.field.matmul(y, code._synd).tolist()


def berlekamp_massey(s: Sequence, field: Field) -> Poly:
    """Shortest LFSR connection polynomial l(x), l_0 = 1, generating s.

    Satisfies sum_j l_j s_(i-j) = 0 for deg(l) <= i < len(s).
    """
    f = field
    s = [int(v) for v in s]
    C, B = [1], [1]
    L, shift, b = 0, 1, 1
    for i in range(len(s)):
        d = s[i]
        for j in range(1, L + 1):
            if j < len(C):
                d = f.add(d, f.mul(C[j], s[i - j]))
        if d == 0:
            shift += 1
            continue
        coef = f.div(d, b)
        T = list(C)
        need = len(B) + shift
        if len(C) < need:
            C = C + [0] * (need - len(C))
        for j, v in enumerate(B):
            C[j + shift] = f.sub(C[j + shift], f.mul(coef, v))
        if 2 * L <= i:
            L = i + 1 - L
            B, b, shift = T, d, 1
        else:
            shift += 1
    return Poly(f, C)


@dataclass(frozen=True)
class LocatorResult:
    ell: Poly
    positions: tuple[int, ...]


def locator_roots(code: BchCode, ell: Poly) -> LocatorResult:
    """Error positions i with ell(alpha^-i) = 0, found by trying every i."""
    pos = tuple(i for i in range(code.n) if ell.eval_int(code._inv_powers[i]) == 0)
    if len(pos) != ell.degree:
        raise RootCountMismatch(
            f"locator of degree {ell.degree} has {len(pos)} roots among the code positions"
        )
    return LocatorResult(ell, pos)


def _finish(code: BchCode, y: np.ndarray, positions, strict: bool) -> DecodeReport:
    e = np.zeros(code.n, dtype=np.int64)
    e[list(positions)] = 1
    c = y ^ e
    if not code.is_codeword(c):
        return _fail(code, y, "correction did not produce a codeword", strict)
    return DecodeReport(codeword=c, error=e, success=True, positions=tuple(positions), info=code.unencode(c))


def _fail(code: BchCode, y: np.ndarray, reason: str, strict: bool, exc=Uncorrectable) -> DecodeReport:
    if strict:
        raise exc(reason)
    return DecodeReport(
        codeword=y.copy(), error=np.zeros(code.n, dtype=np.int64), success=False, reason=reason
    )


def _binary_word(code: BchCode, y) -> np.ndarray:
    y = np.asarray(y, dtype=np.int64)
    if y.shape != (code.n,):
        raise LengthMismatch(f"received word has length {y.shape}, expected {code.n}")
    if np.any((y != 0) & (y != 1)):
        raise ValueError("received word must be binary")
    return y


def bm_decode(code: BchCode, y, strict: bool = False) -> DecodeReport:
    """Bounded-distance decoding: syndromes, Berlekamp-Massey, root search, flip, verify."""
    y = _binary_word(code, y)
    s = bch_syndrome(code, y)
    if not any(s):
        if code.is_codeword(y):
            return _finish(code, y, (), strict)
    ell = berlekamp_massey(s, code.field)
    if ell.degree > code.t:
        return _fail(code, y, f"locator degree {ell.degree} exceeds t = {code.t}", strict)
    try:
        loc = locator_roots(code, ell)
    except RootCountMismatch as exc:
        return _fail(code, y, str(exc), strict, RootCountMismatch)
    return _finish(code, y, loc.positions, strict)


def two_error_decode(code: BchCode, y, strict: bool = False) -> DecodeReport:
    """Closed-form decoding for t = 2 from s0 = y(alpha) and s2 = y(alpha^3).

    The locators gamma, rho solve x^2 - s0 x + (s0^2 - s2/s0) = 0.
    """
    if code.t != 2:
        raise ValueError(f"closed-form decoding needs t = 2, code has t = {code.t}")
    f = code.field
    y = _binary_word(code, y)
    s = bch_syndrome(code, y)
    s0, s2 = s[0], s[2]
    if s0 == 0:
        if s2 == 0:
            return _finish(code, y, (), strict)
        return _fail(code, y, "s0 = 0 with s2 != 0: more than two errors", strict)
    if s2 == f.pow(s0, 3):
        return _finish(code, y, (f.log(s0),), strict)
    prod = f.sub(f.mul(s0, s0), f.div(s2, s0))
    quad = Poly(f, [prod, f.neg(s0), 1])
    roots = [a for a in range(1, f.q) if quad.eval_int(a) == 0]
    if len(roots) != 2:
        return _fail(code, y, "error locators are not two distinct field elements", strict)
    return _finish(code, y, tuple(sorted(f.log(r) for r in roots)), strict)


def erasure_decode_bch(code: BchCode, G: MatF | None, y) -> np.ndarray:
    """Recover the message from unerased bits.

    The information set is the first k unerased positions whose columns of G
    are independent, scanning left to right (the pivot columns of G restricted
    to the unerased positions).  ``y`` may be a single word or a ``(B, n)``
    batch whose rows share one erasure pattern.
    """
    G = code.G if G is None else G
    y = np.asarray(y, dtype=np.int64)
    if y.ndim not in (1, 2) or y.shape[-1] != code.n:
        raise LengthMismatch(f"received word has shape {y.shape}, expected (..., {code.n})")
    batch = y.reshape(-1, code.n)
    mask = batch[0] != ERASED
    if np.any((batch != ERASED) != mask):
        raise ValueError("all words in a batch must share the same erasure pattern")
    k = G.rows
    known = np.nonzero(mask)[0]
    if len(known) < code.n - code.design_d + 1:
        raise TooManyErasures(
            f"{len(known)} unerased positions; need at least {code.n - code.design_d + 1}"
        )
    _, piv = rre_with_pivots(MatF._wrap(G.field, G.a[:, known]))
    if len(piv) < k:
        raise TooManyErasures("unerased columns of G do not have full rank")
    chosen = known[piv]
    sub = MatF._wrap(G.field, G.a[:, chosen])
    u = G.field.matmul(batch[:, chosen], invert(sub).a)
    c = G.field.matmul(u, G.a)
    if np.any(c[:, known] != batch[:, known]):
        raise Inconsistent("unerased bits do not match any codeword")
    return u if y.ndim == 2 else u[0]
