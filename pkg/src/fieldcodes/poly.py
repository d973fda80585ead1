"""Dense univariate polynomials over a finite field."""

from __future__ import annotations

import itertools
from typing import Iterable, Sequence

from .errors import DivisionByNullPoly, FieldMismatch
from .gf import Elem, Field

NEG_INF = float("-inf")
"""Degree of the null polynomial."""


def _normalize(coeffs: list[int]) -> tuple[int, ...]:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


class Poly:
    """Polynomial with coefficients ascending in power.

    Coefficients are stored as element encodings; ``Elem`` inputs are accepted
    and unwrapped.  Trailing zeros are stripped, so the null polynomial has an
    empty coefficient tuple and degree ``NEG_INF``.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Iterable = ()):
        vals = []
        for c in coeffs:
            if isinstance(c, Elem):
                field.check(c)
                vals.append(c.value)
            else:
                v = int(c)
                if not 0 <= v < field.q:
                    raise ValueError(f"coefficient {v} is not an element of {field}")
                vals.append(v)
        self.field = field
        self.coeffs = _normalize(vals)

    # ---------------------------------------------------------- constructors
    @classmethod
    def _raw(cls, field: Field, coeffs: list[int]) -> "Poly":
        p = object.__new__(cls)
        p.field = field
        p.coeffs = _normalize(coeffs)
        return p

    @classmethod
    def zero(cls, field: Field) -> "Poly":
        return cls._raw(field, [])

    @classmethod
    def one(cls, field: Field) -> "Poly":
        return cls._raw(field, [1])

    @classmethod
    def x(cls, field: Field) -> "Poly":
        return cls._raw(field, [0, 1])

    @classmethod
    def monomial(cls, field: Field, degree: int, coeff: int = 1) -> "Poly":
        return cls._raw(field, [0] * degree + [int(coeff)])

    @classmethod
    def from_roots(cls, field: Field, roots: Iterable) -> "Poly":
        """Monic product of ``(x - r)`` over ``roots``."""
        out = cls.one(field)
        for r in roots:
            r = int(r)
            out = out * cls._raw(field, [field.neg(r), 1])
        return out

    @classmethod
    def parse(cls, field: Field, text: str) -> "Poly":
        """Ascending digits (``11001``) or comma separated encodings (``1,2,0,3``)."""
        text = text.strip()
        if "," in text:
            parts = [t for t in text.split(",") if t.strip()]
            return cls(field, [int(t) for t in parts])
        return cls(field, [int(ch) for ch in text])

    def to_text(self) -> str:
        if not self.coeffs:
            return "0"
        if self.field.q <= 10:
            return "".join(str(c) for c in self.coeffs)
        return ",".join(str(c) for c in self.coeffs)

    # --------------------------------------------------------------- queries
    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_monic(self) -> bool:
        return self.lead == 1

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def padded(self, n: int) -> list[int]:
        """Coefficient list zero-padded to length ``n``."""
        if len(self.coeffs) > n:
            raise ValueError(f"degree {self.degree} does not fit in length {n}")
        return list(self.coeffs) + [0] * (n - len(self.coeffs))

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _normalize([other])
        return NotImplemented

    def __hash__(self):
        return hash((self.field.q, self.coeffs))

    def __repr__(self):
        return f"Poly({self.field.spec}, {list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if c == 1 and i:
                terms.append(mono)
            elif self.field.m > 1:
                terms.append(f"({self.field.format(c)}){mono}" if i else f"({self.field.format(c)})")
            else:
                terms.append(f"{c}{mono}")
        return "+".join(terms)

    # ------------------------------------------------------------ arithmetic
    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.field != self.field:
                raise FieldMismatch(f"polynomials over {self.field} and {other.field}")
            return other
        if isinstance(other, (int, Elem)):
            return Poly(self.field, [other])
        raise TypeError(f"cannot combine Poly with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = f.add(out[i], c)
        return Poly._raw(f, out)

    __radd__ = __add__

    def __neg__(self):
        f = self.field
        return Poly._raw(f, [f.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(f)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                if y:
                    out[i + j] = f.add(out[i + j], f.mul(x, y))
        return Poly._raw(f, out)

    __rmul__ = __mul__

    def scale(self, c) -> "Poly":
        f = self.field
        c = int(c)
        return Poly._raw(f, [f.mul(c, v) for v in self.coeffs])

    def shift(self, k: int) -> "Poly":
        """Multiply by ``x**k``."""
        if not self.coeffs:
            return self
        return Poly._raw(self.field, [0] * k + list(self.coeffs))

    def __pow__(self, e: int):
        out = Poly.one(self.field)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __divmod__(self, other):
        other = self._coerce(other)
        if other.is_zero:
            raise DivisionByNullPoly("division by the null polynomial")
        f = self.field
        rem = list(self.coeffs)
        d = len(other.coeffs) - 1
        if len(rem) <= d:
            return Poly.zero(f), Poly._raw(f, rem)
        inv_lead = f.inv(other.coeffs[-1])
        quo = [0] * (len(rem) - d)
        div = other.coeffs
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            t = f.mul(c, inv_lead)
            quo[i - d] = t
            for j, g in enumerate(div):
                if g:
                    rem[i - d + j] = f.sub(rem[i - d + j], f.mul(t, g))
        return Poly._raw(f, quo), Poly._raw(f, rem[:d])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other: "Poly") -> bool:
        return (other % self).is_zero

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        return self.scale(self.field.inv(self.lead))

    # ------------------------------------------------------------ evaluation
    def eval(self, a) -> Elem:
        f = self.field
        if isinstance(a, Elem):
            if a.field != f:
                raise FieldMismatch(f"evaluating a polynomial over {f} at an element of {a.field}")
            a = a.value
        return Elem(f, self.eval_int(int(a)))

    __call__ = eval

    def eval_int(self, a: int) -> int:
        """Horner evaluation on raw encodings."""
        f = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, a), c)
        return acc

    def eval_in(self, ext: Field, a: int) -> int:
        """Evaluate a polynomial over F_p at an element of an extension of F_p.

        Coefficients of a prime-field polynomial embed as digit-0 encodings.
        """
        if self.field.m != 1 or ext.p != self.field.p:
            if ext != self.field:
                raise FieldMismatch(f"cannot evaluate a polynomial over {self.field} in {ext}")
        acc = 0
        for c in reversed(self.coeffs):
            acc = ext.add(ext.mul(acc, a), c)
        return acc

    def formal_derivative(self) -> "Poly":
        f = self.field
        return Poly._raw(
            f, [f.mul(f.integer(i).value, c) for i, c in enumerate(self.coeffs)][1:]
        )

    def compose_power(self, k: int) -> "Poly":
        """``p(x**k)``."""
        out = [0] * ((len(self.coeffs) - 1) * k + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return Poly._raw(self.field, out)

    def roots(self) -> list[int]:
        """All field elements (as encodings) at which the polynomial vanishes."""
        return [a for a in range(self.field.q) if self.eval_int(a) == 0]

    def is_irreducible(self) -> bool:
        """Trial division by every monic polynomial of degree 1 .. deg/2."""
        d = self.degree
        if d == NEG_INF or d < 1:
            return False
        if d == 1:
            return True
        f = self.field
        if self.coeffs[0] == 0:
            return False
        for a in range(1, f.q):
            if self.eval_int(a) == 0:
                return False
        for k in range(2, d // 2 + 1):
            for low in itertools.product(range(f.q), repeat=k):
                if low[0] == 0:
                    continue
                if (self % Poly._raw(f, list(low) + [1])).is_zero:
                    return False
        return True


# ------------------------------------------------------- functional aliases
def degree(p: Poly):
    return p.degree


def poly_divmod(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    return divmod(p, q)


def eval_poly(p: Poly, a) -> Elem:
    return p.eval(a)


def formal_derivative(p: Poly) -> Poly:
    return p.formal_derivative()


def is_irreducible(p: Poly) -> bool:
    return p.is_irreducible()


def x_pow_minus_one(field: Field, n: int) -> Poly:
    """``x**n - 1``."""
    return Poly._raw(field, [field.neg(1)] + [0] * (n - 1) + [1])


def as_poly(field: Field, coeffs: Sequence) -> Poly:
    return coeffs if isinstance(coeffs, Poly) else Poly(field, coeffs)
