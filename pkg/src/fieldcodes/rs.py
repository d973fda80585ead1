"""Reed-Solomon codes via the evaluation map, and the finite-field Fourier transform."""

from __future__ import annotations

from typing import Iterable

import numpy as np

from .errors import (
    Inconsistent,
    LengthMismatch,
    LengthNotOrder,
    NotPrimitiveVariant,
    TooManyErasures,
)
from .gf import Elem, Field
from .linear import LinearCode
from .matf import ERASED, MatF, invert
from .poly import Poly

VARIANTS = ("full", "punctured", "primitive")


class RsCode:
    """An RS code: messages are polynomials of degree < k evaluated at fixed points.

    ``full`` evaluates at 0, 1, alpha, ..., alpha^(q-2) (n = q); ``punctured``
    drops the listed points from that sequence; ``primitive`` evaluates at
    alpha^0 .. alpha^(q-2) (n = q - 1).
    """

    def __init__(self, field: Field, k: int, variant: str = "primitive", removed: Iterable[int] = ()):
        if variant not in VARIANTS:
            raise ValueError(f"variant must be one of {VARIANTS}")
        q = field.q
        powers = [field.exp(i) for i in range(q - 1)]
        if variant == "primitive":
            points = powers
        else:
            points = [0] + powers
            if variant == "punctured":
                drop = {int(r) for r in removed}
                if not drop <= set(points):
                    raise ValueError("removed points must be field elements")
                points = [b for b in points if b not in drop]
        n = len(points)
        if not 1 <= k <= n:
            raise ValueError(f"k = {k} must lie in [1, {n}]")
        self.field = field
        self.variant = variant
        self.k = k
        self.n = n
        self.points = tuple(points)
        pts = np.array(points, dtype=np.int64)
        G = np.ones((k, n), dtype=np.int64)
        for i in range(1, k):
            G[i] = field.mul_arr(G[i - 1], pts)
        self.G = MatF._wrap(field, G)

    def __repr__(self):
        return f"RsCode({self.field.spec}, n={self.n}, k={self.k}, {self.variant})"

    @property
    def d(self) -> int:
        return self.n - self.k + 1

    def encode_eval(self, u) -> np.ndarray:
        """(u(beta_1), ..., u(beta_n)) with u read as polynomial coefficients."""
        u = np.asarray(u, dtype=np.int64)
        if u.shape[-1] != self.k:
            raise LengthMismatch(f"message length {u.shape[-1]} != k = {self.k}")
        return self.field.matmul(u, self.G.a)

    encode = encode_eval

    def as_linear_code(self) -> LinearCode:
        return LinearCode(self.G)

    # ------------------------------------------------------ primitive variant
    def _require_primitive(self):
        if self.variant != "primitive":
            raise NotPrimitiveVariant(f"operation defined for the primitive variant, not {self.variant}")

    def generator_poly(self) -> Poly:
        """Product of (x - alpha^j) for j = 1 .. n-k."""
        self._require_primitive()
        f = self.field
        return Poly.from_roots(f, [f.exp(j) for j in range(1, self.n - self.k + 1)])

    def check_matrix(self) -> MatF:
        """Entry (i, j) is alpha^((i+1) j)."""
        self._require_primitive()
        f = self.field
        r = self.n - self.k
        H = np.array([[f.exp((i + 1) * j) for j in range(self.n)] for i in range(r)], dtype=np.int64)
        return MatF._wrap(f, H.reshape(r, self.n))

    def syndrome(self, y) -> np.ndarray:
        """(y(alpha), ..., y(alpha^(n-k)))."""
        self._require_primitive()
        y = np.asarray(y, dtype=np.int64)
        if y.shape[-1] != self.n:
            raise LengthMismatch(f"word length {y.shape[-1]} != n = {self.n}")
        return self.field.matmul(y, self.check_matrix().a.T)

    # -------------------------------------------------------------- erasures
    def erasure_decode(self, y) -> np.ndarray:
        return erasure_decode_mds(self, y)


def erasure_decode_mds(code: RsCode, y) -> np.ndarray:
    """Recover the message from the first k unerased positions.

    Any k positions of an MDS code form an information set, so the k x k
    sub-generator is invertible.  The re-encoded word must agree with every
    unerased symbol, otherwise :class:`Inconsistent` is raised.
    """
    y = np.asarray(y, dtype=np.int64)
    if y.shape != (code.n,):
        raise LengthMismatch(f"received word has length {y.shape}, expected {code.n}")
    known = np.nonzero(y != ERASED)[0]
    if len(known) < code.k:
        raise TooManyErasures(f"{code.n - len(known)} erasures; at most {code.n - code.k} are recoverable")
    pos = known[: code.k]
    sub = MatF._wrap(code.field, code.G.a[:, pos])
    u = code.field.matmul(y[pos], invert(sub).a)
    c = code.encode_eval(u)
    if np.any(c[known] != y[known]):
        raise Inconsistent("unerased symbols do not match any codeword")
    return u


def singleton_check(code) -> bool:
    """True iff the code meets the Singleton bound, i.e. |C| = q^(n-d+1)."""
    lin = code if isinstance(code, LinearCode) else code.as_linear_code()
    return lin.k == lin.n - lin.min_distance() + 1


# ------------------------------------------------------------------ Fourier
def _order_check(n: int, omega) -> tuple[Field, int]:
    if not isinstance(omega, Elem):
        raise TypeError("omega must be a field element")
    f = omega.field
    if omega.value == 0 or f.order(omega.value) != n:
        raise LengthNotOrder(f"vector length {n} is not the order of {omega!r}")
    return f, omega.value


def fourier_matrix(omega: Elem, n: int, inverse: bool = False) -> np.ndarray:
    f, w = _order_check(n, omega)
    e = -1 if inverse else 1
    return np.array([[f.pow(w, e * i * j) for i in range(n)] for j in range(n)], dtype=np.int64)


def fourier(v, omega: Elem) -> np.ndarray:
    """Transform (v(omega^0), ..., v(omega^(n-1))); works on batches of rows."""
    v = np.asarray(v, dtype=np.int64)
    n = v.shape[-1]
    f = omega.field
    return f.matmul(v, fourier_matrix(omega, n))


def inv_fourier(c, omega: Elem) -> np.ndarray:
    """Inverse transform (1/n) (c(omega^0), c(omega^-1), ..., c(omega^-(n-1)))."""
    c = np.asarray(c, dtype=np.int64)
    n = c.shape[-1]
    f = omega.field
    scale = f.integer(n).value
    if scale == 0:
        raise ZeroDivisionError(f"{n} is a multiple of the characteristic")
    out = f.matmul(c, fourier_matrix(omega, n, inverse=True))
    return f.mul_arr(out, f.inv(scale))
