"""Finite fields F_p and F_{p^m}.

Elements are encoded as integers in ``[0, q)`` whose base-p digits are the
coefficients of the element's polynomial representative, digit ``i`` being the
coefficient of ``z^i``.  ``Field`` offers scalar operations on these integers
and vectorized counterparts on numpy arrays; ``Elem`` wraps an integer together
with its field for operator-style arithmetic.
"""

from __future__ import annotations

import functools
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DivideByZero,
    FieldMismatch,
    NotMonic,
    NotPrime,
    Reducible,
    ZeroElement,
)

# above this order multiplication falls back to polynomial arithmetic mod g
TABLE_LIMIT = 1 << 16
# dense addition tables for odd characteristic extension fields
ADD_TABLE_LIMIT = 729


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


class Field:
    """A finite field of order ``q = p**m``.

    Use :func:`make_prime_field` or :func:`make_extension_field` rather than
    calling the constructor directly; the constructor does not validate
    ``prime_poly``.
    """

    def __init__(self, p: int, prime_poly: Sequence[int] | None = None):
        self.p = p
        if prime_poly is None:
            self.m = 1
            self.prime_poly = None
        else:
            self.prime_poly = tuple(int(c) for c in prime_poly)
            self.m = len(self.prime_poly) - 1
        self.q = p**self.m
        self._pow_p = [p**i for i in range(self.m + 1)]

        q = self.q
        self._neg = None
        self._add = None
        if self.p > 2 and self.m > 1 and q <= ADD_TABLE_LIMIT:
            v = np.arange(q)
            self._add = self._add_digits(v[:, None], v[None, :])
        if q <= TABLE_LIMIT:
            self._neg = self._neg_digits(np.arange(q))

        self._exp = None
        self._log = None
        self.alpha_value = self._find_primitive()
        if q <= TABLE_LIMIT:
            exp = np.empty(2 * (q - 1), dtype=np.int64)
            log = np.full(q, -1, dtype=np.int64)
            a = 1
            for i in range(q - 1):
                exp[i] = a
                log[a] = i
                a = self._raw_mul(a, self.alpha_value)
            exp[q - 1:] = exp[: q - 1]
            self._exp = exp
            self._log = log
            self._exp_list = exp.tolist()
            self._log_list = log.tolist()
        self._prime_subfield = None

    # ------------------------------------------------------------------ identity
    def __eq__(self, other):
        return (
            isinstance(other, Field)
            and self.p == other.p
            and self.prime_poly == other.prime_poly
        )

    def __hash__(self):
        return hash((self.p, self.prime_poly))

    def __repr__(self):
        return f"Field({self.spec!r})"

    def __len__(self):
        return self.q

    @property
    def spec(self) -> str:
        """Textual form ``p^m:c0c1...cm`` (digits omitted for prime fields)."""
        if self.m == 1:
            return f"{self.p}^1"
        return f"{self.p}^{self.m}:" + "".join(str(c) for c in self.prime_poly)

    # --------------------------------------------------------------- elements
    def __call__(self, value) -> "Elem":
        if isinstance(value, Elem):
            self.check(value)
            return value
        value = int(value)
        if not 0 <= value < self.q:
            raise ValueError(f"{value} is not an element encoding of {self}")
        return Elem(self, value)

    def integer(self, n: int) -> "Elem":
        """The element ``1 + 1 + ... + 1`` (``n`` times)."""
        return Elem(self, n % self.p)

    @property
    def zero(self) -> "Elem":
        return Elem(self, 0)

    @property
    def one(self) -> "Elem":
        return Elem(self, 1)

    @property
    def alpha(self) -> "Elem":
        return Elem(self, self.alpha_value)

    def elements(self) -> list["Elem"]:
        return [Elem(self, v) for v in range(self.q)]

    def check(self, a: "Elem") -> None:
        if a.field is not self and a.field != self:
            raise FieldMismatch(f"element of {a.field} used in {self}")

    @property
    def prime_subfield(self) -> "Field":
        if self.m == 1:
            return self
        if self._prime_subfield is None:
            self._prime_subfield = make_prime_field(self.p)
        return self._prime_subfield

    def digits(self, value: int) -> tuple[int, ...]:
        """Polynomial coefficients (ascending) of an element encoding."""
        out = []
        for _ in range(self.m):
            value, d = divmod(value, self.p)
            out.append(d)
        return tuple(out)

    def from_digits(self, coeffs: Iterable[int]) -> int:
        v = 0
        for i, c in enumerate(coeffs):
            v += (int(c) % self.p) * self._pow_p[i]
        return v

    def format(self, value: int, var: str = "z") -> str:
        """Polynomial-style string of an element, e.g. ``1+z^2``."""
        if self.m == 1:
            return str(value)
        terms = []
        for i, d in enumerate(self.digits(value)):
            if d == 0:
                continue
            mono = "1" if i == 0 else (var if i == 1 else f"{var}^{i}")
            if d != 1:
                mono = str(d) if i == 0 else f"{d}{mono}"
            terms.append(mono)
        return "+".join(terms) if terms else "0"

    # ------------------------------------------------------ digit primitives
    def _add_digits(self, a, b):
        p = self.p
        out = 0
        for w in self._pow_p[: self.m]:
            out = out + ((a // w + b // w) % p) * w
        return out

    def _neg_digits(self, a):
        p = self.p
        out = 0
        for w in self._pow_p[: self.m]:
            out = out + ((-(a // w)) % p) * w
        return out

    def _raw_mul(self, a: int, b: int) -> int:
        """Multiply by polynomial arithmetic modulo the prime polynomial."""
        p = self.p
        if self.m == 1:
            return a * b % p
        if p == 2:
            g = self.from_digits(self.prime_poly)
            r = 0
            while b:
                if b & 1:
                    r ^= a
                b >>= 1
                a <<= 1
                if a >> self.m:
                    a ^= g
            return r
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * self.m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        g = self.prime_poly
        for i in range(len(prod) - 1, self.m - 1, -1):
            c = prod[i]
            if c:
                for j in range(self.m + 1):
                    prod[i - self.m + j] = (prod[i - self.m + j] - c * g[j]) % p
        return self.from_digits(prod[: self.m])

    def _raw_pow(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._raw_mul(r, a)
            a = self._raw_mul(a, a)
            e >>= 1
        return r

    def _raw_order(self, a: int) -> int:
        order = self.q - 1
        for r in prime_factors(self.q - 1):
            while order % r == 0 and self._raw_pow(a, order // r) == 1:
                order //= r
        return order

    def _find_primitive(self) -> int:
        if self.q == 2:
            return 1
        if self.m > 1 and self._raw_order(self.p) == self.q - 1:
            return self.p
        for v in range(1, self.q):
            if self._raw_order(v) == self.q - 1:
                return v
        raise AssertionError("multiplicative group is not cyclic")  # unreachable

    # ----------------------------------------------------- scalar arithmetic
    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % self.p
        if self._add is not None:
            return int(self._add[a, b])
        return int(self._add_digits(a, b))

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.m == 1:
            return -a % self.p
        if self._neg is not None:
            return int(self._neg[a])
        return int(self._neg_digits(a))

    def sub(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a - b) % self.p
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.m == 1:
            return a * b % self.p
        if self._log is not None:
            return self._exp_list[self._log_list[a] + self._log_list[b]]
        return self._raw_mul(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivideByZero("inverse of zero")
        if self.m == 1:
            return pow(a, -1, self.p)
        if self._log is not None:
            return self._exp_list[(self.q - 1 - self._log_list[a]) % (self.q - 1)]
        return self._raw_pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        if a == 0:
            return 1 if e == 0 else 0
        if self._log is not None:
            return self._exp_list[(self._log_list[a] * e) % (self.q - 1)]
        if self.m == 1:
            return pow(a, e, self.p)
        return self._raw_pow(a, e % (self.q - 1))

    def log(self, a: int) -> int:
        """Exponent ``i`` in ``[0, q-1)`` with ``alpha**i == a``."""
        if a == 0:
            raise ZeroElement("log of zero")
        if self._log is not None:
            return self._log_list[a]
        x, i = 1, 0
        while x != a:
            x = self._raw_mul(x, self.alpha_value)
            i += 1
        return i

    def exp(self, i: int) -> int:
        """Encoding of ``alpha**i``."""
        return self.pow(self.alpha_value, i)

    def order(self, a: int) -> int:
        if a == 0:
            raise ZeroElement("the zero element has no multiplicative order")
        if self._log is not None:
            from math import gcd

            return (self.q - 1) // gcd(self._log_list[a], self.q - 1)
        return self._raw_order(a)

    # ------------------------------------------------------ array arithmetic
    def add_arr(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % self.p
        if self._add is not None:
            return self._add[a, b]
        return self._add_digits(a, b)

    def neg_arr(self, a):
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return a
        if self.m == 1:
            return (-a) % self.p
        if self._neg is not None:
            return self._neg[a]
        return self._neg_digits(a)

    def sub_arr(self, a, b):
        return self.add_arr(a, self.neg_arr(b))

    def mul_arr(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.m == 1:
            return (a * b) % self.p
        if self._log is None:
            return np.vectorize(self.mul, otypes=[np.int64])(a, b)
        out = self._exp[self._log[a] + self._log[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    def inv_arr(self, a):
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise DivideByZero("inverse of zero")
        return np.vectorize(self.inv, otypes=[np.int64])(a) if self._log is None else (
            self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]
        )

    def sum_arr(self, a, axis=-1):
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return np.bitwise_xor.reduce(a, axis=axis)
        if self.m == 1:
            return a.sum(axis=axis) % self.p
        a = np.moveaxis(a, axis, 0)
        acc = np.zeros(a.shape[1:], dtype=np.int64)
        for row in a:
            acc = self.add_arr(acc, row)
        return acc

    def matmul(self, a, b):
        """Matrix product over the field of integer-encoded arrays."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.m == 1:
            # chunk the inner dimension so int64 accumulation cannot overflow
            p = self.p
            step = max(1, (2**62) // ((p - 1) ** 2 + 1))
            if a.shape[-1] <= step:
                return (a @ b) % p
            out = np.zeros(a.shape[:-1] + b.shape[1:], dtype=np.int64)
            for s in range(0, a.shape[-1], step):
                out = (out + a[..., s : s + step] @ b[s : s + step]) % p
            return out
        out = np.zeros(a.shape[:-1] + b.shape[1:], dtype=np.int64)
        for j in range(a.shape[-1]):
            out = self.add_arr(out, self.mul_arr(a[..., j, None], b[j]))
        return out

    # ---------------------------------------------------------------- tables
    def add_table(self) -> np.ndarray:
        v = np.arange(self.q)
        return self.add_arr(v[:, None], v[None, :])

    def mul_table(self) -> np.ndarray:
        v = np.arange(self.q)
        return self.mul_arr(v[:, None], v[None, :])

    def power_table(self) -> list[tuple[int, int]]:
        """``(i, encoding of alpha**i)`` for ``i = 0 .. q-2``."""
        return [(i, self.exp(i)) for i in range(self.q - 1)]


class Elem:
    """A field element: an integer encoding bound to its field."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value: int):
        self.field = field
        self.value = value

    def _other(self, b) -> int:
        if isinstance(b, Elem):
            if b.field is not self.field and b.field != self.field:
                raise FieldMismatch(f"cannot combine elements of {self.field} and {b.field}")
            return b.value
        if isinstance(b, (int, np.integer)):
            return self.field(int(b)).value
        return NotImplemented

    def __add__(self, b):
        v = self._other(b)
        if v is NotImplemented:
            return v
        return Elem(self.field, self.field.add(self.value, v))

    __radd__ = __add__

    def __sub__(self, b):
        v = self._other(b)
        if v is NotImplemented:
            return v
        return Elem(self.field, self.field.sub(self.value, v))

    def __rsub__(self, b):
        v = self._other(b)
        if v is NotImplemented:
            return v
        return Elem(self.field, self.field.sub(v, self.value))

    def __neg__(self):
        return Elem(self.field, self.field.neg(self.value))

    def __mul__(self, b):
        v = self._other(b)
        if v is NotImplemented:
            return v
        return Elem(self.field, self.field.mul(self.value, v))

    __rmul__ = __mul__

    def __truediv__(self, b):
        v = self._other(b)
        if v is NotImplemented:
            return v
        return Elem(self.field, self.field.div(self.value, v))

    def __rtruediv__(self, b):
        v = self._other(b)
        if v is NotImplemented:
            return v
        return Elem(self.field, self.field.div(v, self.value))

    def __pow__(self, e: int):
        return Elem(self.field, self.field.pow(self.value, int(e)))

    def inv(self) -> "Elem":
        return Elem(self.field, self.field.inv(self.value))

    def __eq__(self, b):
        if isinstance(b, Elem):
            return self.field == b.field and self.value == b.value
        if isinstance(b, (int, np.integer)):
            return self.value == int(b)
        return NotImplemented

    def __hash__(self):
        return hash((self.field.q, self.value))

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"Elem({self.value}, {self.field.spec})"

    def __str__(self):
        return self.field.format(self.value)

    @property
    def is_zero(self) -> bool:
        return self.value == 0


# ---------------------------------------------------------------- constructors
@functools.lru_cache(maxsize=None)
def make_prime_field(p: int) -> Field:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    return Field(p)


def make_extension_field(p: int, prime_poly: Sequence[int]) -> Field:
    """Build ``F_p[z] mod prime_poly``.

    ``prime_poly`` lists coefficients in ascending order and must be monic and
    irreducible over F_p; it need not be primitive.
    """
    coeffs = tuple(int(c) for c in prime_poly)
    return _make_extension(p, coeffs)


@functools.lru_cache(maxsize=None)
def _make_extension(p: int, coeffs: tuple[int, ...]) -> Field:
    from .poly import Poly

    base = make_prime_field(p)
    if any(not 0 <= c < p for c in coeffs):
        raise ValueError(f"coefficients must lie in [0, {p})")
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs = coeffs[:-1]
    m = len(coeffs) - 1
    if m < 2:
        raise ValueError("extension polynomial must have degree >= 2")
    if coeffs[-1] != 1:
        raise NotMonic(f"leading coefficient is {coeffs[-1]}, expected 1")
    if not Poly(base, coeffs).is_irreducible():
        raise Reducible(f"{Poly(base, coeffs)} is reducible over F_{p}")
    return Field(p, coeffs)


def make_field(p: int, prime_poly: Sequence[int] | None = None) -> Field:
    if prime_poly is None:
        return make_prime_field(p)
    return make_extension_field(p, prime_poly)


def parse_field_spec(text: str) -> Field:
    """Parse ``p^m:c0c1...cm`` (e.g. ``2^4:11001``) or ``p`` / ``p^1``.

    Digits may be comma separated when p > 10.  When ``m > 1`` and the digits
    are omitted, the smallest primitive polynomial is used.
    """
    text = text.strip()
    head, _, digits = text.partition(":")
    p_str, _, m_str = head.partition("^")
    p = int(p_str)
    m = int(m_str) if m_str else 1
    if not digits:
        if m == 1:
            return make_prime_field(p)
        return make_extension_field(p, default_prime_poly(p, m))
    coeffs = [int(c) for c in (digits.split(",") if "," in digits else digits)]
    if len(coeffs) != m + 1:
        raise ValueError(f"field spec {text!r}: expected {m + 1} digits, got {len(coeffs)}")
    if m == 1:
        raise ValueError("prime fields take no polynomial")
    return make_extension_field(p, coeffs)


@functools.lru_cache(maxsize=None)
def default_prime_poly(p: int, m: int) -> tuple[int, ...]:
    """Smallest (by encoding) monic polynomial of degree m whose root is primitive."""
    from .poly import Poly

    base = make_prime_field(p)
    for low in range(p**m):
        coeffs = tuple((low // p**i) % p for i in range(m)) + (1,)
        if coeffs[0] == 0:
            continue
        if not Poly(base, coeffs).is_irreducible():
            continue
        if _x_has_full_order(p, coeffs):
            return coeffs
    raise AssertionError(f"no primitive polynomial of degree {m} over F_{p}")


def _x_has_full_order(p: int, coeffs: tuple[int, ...]) -> bool:
    # skeleton field with just enough state for raw polynomial arithmetic
    f = object.__new__(Field)
    f.p, f.prime_poly, f.m = p, coeffs, len(coeffs) - 1
    f.q = p**f.m
    f._pow_p = [p**i for i in range(f.m + 1)]
    return f._raw_order(p) == f.q - 1


# ------------------------------------------------------------ element-level ops
def element_order(a: Elem) -> int:
    return a.field.order(a.value)


def conjugacy_class(a: Elem) -> tuple[Elem, ...]:
    """The orbit ``a, a^p, a^(p^2), ...`` of ``a`` under the Frobenius map."""
    f = a.field
    out = [a.value]
    v = f.pow(a.value, f.p)
    while v != a.value:
        out.append(v)
        v = f.pow(v, f.p)
    return tuple(Elem(f, x) for x in out)


def minimal_polynomial(a: Elem):
    """Product of ``(x - w)`` over the conjugacy class of ``a``, as a Poly over F_p."""
    from .poly import Poly

    f = a.field
    coeffs = [1]
    for w in conjugacy_class(a):
        # multiply by (x - w)
        nw = f.neg(w.value)
        nxt = [0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i] = f.add(nxt[i], f.mul(c, nw))
            nxt[i + 1] = f.add(nxt[i + 1], c)
        coeffs = nxt
    if any(c >= f.p for c in coeffs):
        raise AssertionError(f"minimal polynomial of {a!r} left the prime subfield: {coeffs}")
    return Poly(f.prime_subfield, coeffs)
