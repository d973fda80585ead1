"""Matrices over finite fields, stored as integer-encoded numpy arrays."""

from __future__ import annotations

import itertools
from typing import Iterable

import numpy as np

from .errors import FieldMismatch, ShapeMismatch, Singular
from .gf import Field


class MatF:
    """An immutable ``rows x cols`` matrix over ``field``.

    Zero-row matrices are allowed so that, e.g., the null space of an
    invertible matrix has a representation.
    """

    __slots__ = ("field", "a")

    def __init__(self, field: Field, entries):
        a = np.array(entries, dtype=np.int64)
        if a.ndim == 1:
            a = a.reshape(1, -1) if a.size else a.reshape(0, 0)
        if a.ndim != 2:
            raise ShapeMismatch("matrix entries must be two dimensional")
        if a.size and (a.min() < 0 or a.max() >= field.q):
            raise ValueError(f"entries must be element encodings of {field}")
        a.setflags(write=False)
        self.field = field
        self.a = a

    @classmethod
    def _wrap(cls, field: Field, a: np.ndarray) -> "MatF":
        m = object.__new__(cls)
        a = np.ascontiguousarray(a, dtype=np.int64)
        a.setflags(write=False)
        m.field = field
        m.a = a
        return m

    @classmethod
    def identity(cls, field: Field, k: int) -> "MatF":
        return cls._wrap(field, np.eye(k, dtype=np.int64))

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "MatF":
        return cls._wrap(field, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def parse(cls, field: Field, text: str) -> "MatF":
        """Semicolon separated rows of comma separated encodings.

        Over fields with q <= 10 a row may also be a bare digit string
        (``1000011``).
        """
        rows = []
        for r in text.strip().split(";"):
            r = r.strip()
            if not r:
                continue
            if "," in r or field.q > 10:
                rows.append([int(t) for t in r.split(",")])
            else:
                rows.append([int(ch) for ch in r])
        if len({len(r) for r in rows}) > 1:
            raise ShapeMismatch("rows have different lengths")
        return cls(field, rows)

    def to_text(self) -> str:
        sep = "" if self.field.q <= 10 else ","
        return ";".join(sep.join(str(int(v)) for v in row) for row in self.a)

    # ------------------------------------------------------------------ info
    @property
    def rows(self) -> int:
        return self.a.shape[0]

    @property
    def cols(self) -> int:
        return self.a.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.a.shape

    def __eq__(self, other):
        return (
            isinstance(other, MatF)
            and self.field == other.field
            and self.a.shape == other.a.shape
            and bool(np.array_equal(self.a, other.a))
        )

    def __hash__(self):
        return hash((self.field.q, self.a.shape, self.a.tobytes()))

    def __repr__(self):
        return f"MatF({self.field.spec}, {self.a.tolist()})"

    def tolist(self) -> list[list[int]]:
        return self.a.tolist()

    def __getitem__(self, idx):
        return self.a[idx]

    @property
    def T(self) -> "MatF":
        return MatF._wrap(self.field, self.a.T)

    # ------------------------------------------------------------- products
    def _same_field(self, other: "MatF"):
        if other.field != self.field:
            raise FieldMismatch(f"matrices over {self.field} and {other.field}")

    def __matmul__(self, other: "MatF") -> "MatF":
        return mul(self, other)

    def __add__(self, other: "MatF") -> "MatF":
        self._same_field(other)
        if self.shape != other.shape:
            raise ShapeMismatch(f"{self.shape} + {other.shape}")
        return MatF._wrap(self.field, self.field.add_arr(self.a, other.a))

    def hstack(self, other: "MatF") -> "MatF":
        self._same_field(other)
        return MatF._wrap(self.field, np.hstack([self.a, other.a]))

    def vstack(self, other: "MatF") -> "MatF":
        self._same_field(other)
        return MatF._wrap(self.field, np.vstack([self.a, other.a]))

    def row_space(self) -> set[tuple[int, ...]]:
        """All linear combinations of the rows (exhaustive, q**rows vectors)."""
        f = self.field
        msgs = np.array(list(itertools.product(range(f.q), repeat=self.rows)), dtype=np.int64)
        if self.rows == 0:
            return {tuple([0] * self.cols)}
        return {tuple(r) for r in f.matmul(msgs, self.a).tolist()}


# --------------------------------------------------------------- elimination
def _eliminate(field: Field, a: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form by Gauss-Jordan elimination.

    Returns the full-height reduced matrix (zero rows at the bottom) and the
    pivot columns.
    """
    a = np.array(a, dtype=np.int64, copy=True)
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            a[[r, pr]] = a[[pr, r]]
        inv = field.inv(int(a[r, c]))
        if inv != 1:
            a[r] = field.mul_arr(a[r], inv)
        col = a[:, c].copy()
        col[r] = 0
        others = np.nonzero(col)[0]
        if others.size:
            factor = field.neg_arr(col[others])
            a[others] = field.add_arr(a[others], field.mul_arr(factor[:, None], a[r][None, :]))
        pivots.append(c)
        r += 1
    return a, pivots


def rre(m: MatF) -> MatF:
    """Reduced row echelon form with zero rows dropped."""
    red, piv = _eliminate(m.field, m.a)
    return MatF._wrap(m.field, red[: len(piv)])


def rre_with_pivots(m: MatF) -> tuple[MatF, list[int]]:
    red, piv = _eliminate(m.field, m.a)
    return MatF._wrap(m.field, red[: len(piv)]), piv


def rank(m: MatF) -> int:
    return len(_eliminate(m.field, m.a)[1])


def null_space_basis(m: MatF) -> MatF:
    """Rows spanning ``{v : m v^T = 0}``; one row per non-pivot column."""
    f = m.field
    red, piv = _eliminate(f, m.a)
    n = m.cols
    free = [c for c in range(n) if c not in set(piv)]
    out = np.zeros((len(free), n), dtype=np.int64)
    for i, fc in enumerate(free):
        out[i, fc] = 1
        for r, pc in enumerate(piv):
            out[i, pc] = f.neg(int(red[r, fc]))
    return MatF._wrap(f, out)


def invert(m: MatF) -> MatF:
    if m.rows != m.cols:
        raise ShapeMismatch(f"cannot invert a {m.rows}x{m.cols} matrix")
    f = m.field
    k = m.rows
    red, piv = _eliminate(f, np.hstack([m.a, np.eye(k, dtype=np.int64)]))
    if piv[:k] != list(range(k)):
        raise Singular("matrix is singular")
    return MatF._wrap(f, red[:, k:])


def mul(a: MatF, b: MatF) -> MatF:
    a._same_field(b)
    if a.cols != b.rows:
        raise ShapeMismatch(f"cannot multiply {a.shape} by {b.shape}")
    return MatF._wrap(a.field, a.field.matmul(a.a, b.a))


def mul_vec(v: Iterable[int], m: MatF) -> np.ndarray:
    """Row vector times matrix."""
    v = np.asarray(list(v) if not isinstance(v, np.ndarray) else v, dtype=np.int64)
    if v.shape[-1] != m.rows:
        raise ShapeMismatch(f"vector of length {v.shape[-1]} times {m.shape} matrix")
    return m.field.matmul(v, m.a)


def same_row_space(a: MatF, b: MatF) -> bool:
    return a.cols == b.cols and rre(a) == rre(b)


ERASED = -1
"""Marker for an erased position in a received vector."""


def parse_vector(field: Field, text: str, allow_erasures: bool = False) -> np.ndarray:
    """Comma separated encodings, or a bare digit string when q <= 10.

    With ``allow_erasures`` the character ``e`` marks an erased position and is
    stored as :data:`ERASED`.
    """
    text = text.strip()
    tokens = text.split(",") if ("," in text or field.q > 10) else list(text)
    out = []
    for t in tokens:
        t = t.strip()
        if t == "e":
            if not allow_erasures:
                raise ValueError("erasures are not accepted here")
            out.append(ERASED)
            continue
        v = int(t)
        if not 0 <= v < field.q:
            raise ValueError(f"{v} is not an element encoding of {field}")
        out.append(v)
    return np.array(out, dtype=np.int64)


def format_vector(field: Field, v) -> str:
    sep = "" if field.q <= 10 else ","
    return sep.join("e" if int(x) == ERASED else str(int(x)) for x in v)
