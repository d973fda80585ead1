"""Cyclic codes given by a generator polynomial dividing x^n - 1."""

from __future__ import annotations

import numpy as np

from .errors import DegreeTooHigh, LengthMismatch, NotADivisor, ZeroConstantTerm
from .gf import Field
from .linear import LinearCode
from .matf import MatF
from .poly import Poly, x_pow_minus_one


def cyclic_shift(c: Poly, i: int, n: int) -> Poly:
    """x^i c(x) mod (x^n - 1): rotate the length-n coefficient vector right by i."""
    if c.degree >= n:
        raise DegreeTooHigh(f"degree {c.degree} does not fit block length {n}")
    v = c.padded(n)
    i %= n
    return Poly._raw(c.field, v[n - i:] + v[: n - i])


class CyclicCode:
    """A cyclic (n, k) code; the generator polynomial is stored monic."""

    def __init__(self, field: Field, n: int, g: Poly):
        if g.field != field:
            g = Poly(field, g.coeffs)
        if g.is_zero or g.degree > n:
            raise DegreeTooHigh(f"generator degree {g.degree} is not in [0, {n}]")
        if g.coeffs[0] == 0:
            raise ZeroConstantTerm("generator polynomial has a zero constant term")
        g = g.monic()
        h, rem = divmod(x_pow_minus_one(field, n), g)
        if not rem.is_zero:
            raise NotADivisor(f"{g} does not divide x^{n}-1")
        self.field = field
        self.n = n
        self.g = g
        self.h = h
        self.k = n - g.degree

    def __repr__(self):
        return f"CyclicCode(q={self.field.q}, n={self.n}, k={self.k}, g={self.g})"

    # --------------------------------------------------------------- helpers
    def poly(self, v) -> Poly:
        if isinstance(v, Poly):
            return v
        v = list(v)
        if len(v) > self.n:
            raise LengthMismatch(f"vector of length {len(v)} exceeds n = {self.n}")
        return Poly(self.field, v)

    def vector(self, c: Poly) -> np.ndarray:
        return np.array(c.padded(self.n), dtype=np.int64)

    def _message(self, u) -> Poly:
        u = self.poly(u) if not isinstance(u, Poly) else u
        if u.degree > self.k - 1:
            raise DegreeTooHigh(f"message degree {u.degree} exceeds k-1 = {self.k - 1}")
        return u

    # -------------------------------------------------------------- encoders
    def encode_mult(self, u) -> Poly:
        """u(x) g(x)."""
        return self._message(u) * self.g

    def encode_sys_right(self, u) -> Poly:
        """Message in the top k coefficients: x^{n-k}u - (x^{n-k}u mod g)."""
        shifted = self._message(u).shift(self.n - self.k)
        return shifted - shifted % self.g

    def encode_sys_left(self, u) -> Poly:
        """Message in the low k coefficients: u - x^k (x^{n-k}u mod g)."""
        u = self._message(u)
        return u - (u.shift(self.n - self.k) % self.g).shift(self.k)

    def decode_mult(self, c) -> Poly:
        return self.poly(c) // self.g

    def decode_sys_right(self, c) -> Poly:
        v = self.poly(c).padded(self.n)
        return Poly._raw(self.field, v[self.n - self.k:])

    def decode_sys_left(self, c) -> Poly:
        v = self.poly(c).padded(self.n)
        return Poly._raw(self.field, v[: self.k])

    # ---------------------------------------------------------------- checks
    def syndrome_poly(self, v) -> Poly:
        v = self.poly(v)
        if v.degree >= self.n:
            raise DegreeTooHigh(f"degree {v.degree} does not fit block length {self.n}")
        return v % self.g

    def is_codeword(self, v) -> bool:
        return self.syndrome_poly(v).is_zero

    def generator_matrix(self) -> MatF:
        """Row i holds the i-fold shift of g."""
        rows = [self.g.shift(i).padded(self.n) for i in range(self.k)]
        return MatF._wrap(self.field, np.array(rows, dtype=np.int64).reshape(self.k, self.n))

    def check_matrix(self) -> MatF:
        """Row i holds h_k, h_{k-1}, ..., h_0 starting at column i."""
        rev = list(reversed(self.h.padded(self.k + 1)))
        r = self.n - self.k
        out = np.zeros((r, self.n), dtype=np.int64)
        for i in range(r):
            out[i, i : i + self.k + 1] = rev
        return MatF._wrap(self.field, out)

    def as_linear_code(self) -> LinearCode:
        return LinearCode(self.generator_matrix())


def new(field: Field, n: int, g: Poly) -> CyclicCode:
    return CyclicCode(field, n, g)
