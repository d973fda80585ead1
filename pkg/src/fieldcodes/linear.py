"""Linear block codes: generator and check matrices, weights, syndrome decoding."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .channel import Dmc
from .errors import (
    LengthMismatch,
    NotBinaryInput,
    RankDeficient,
    TooLarge,
)
from .gf import Field
from .matf import MatF, invert, null_space_basis, rre_with_pivots
from .report import DecodeReport

CODEWORD_CAP = 1 << 24
COSET_CAP = 1 << 20
PATTERN_CAP = 1 << 24


def _messages(q: int, k: int) -> np.ndarray:
    """All q**k messages in lexicographic order, first symbol most significant."""
    idx = np.arange(q**k, dtype=np.int64)
    out = np.empty((q**k, k), dtype=np.int64)
    for j in range(k - 1, -1, -1):
        out[:, j] = idx % q
        idx //= q
    return out


@dataclass(frozen=True)
class WeightEnumerator:
    """Counts A_0..A_n of codewords by Hamming weight."""

    counts: tuple[int, ...]

    def __call__(self, x: float) -> float:
        return sum(a * x**i for i, a in enumerate(self.counts))

    def __getitem__(self, i: int) -> int:
        return self.counts[i]

    def __len__(self):
        return len(self.counts)


class LinearCode:
    """An (n, k) linear block code over a finite field, defined by a generator matrix."""

    def __init__(self, G: MatF):
        red, piv = rre_with_pivots(G)
        if len(piv) != G.rows:
            raise RankDeficient(f"generator has {G.rows} rows but rank {len(piv)}")
        self.field: Field = G.field
        self.G = G
        self.n = G.cols
        self.k = G.rows
        self.rre_G = red
        self.H = null_space_basis(G)
        # information set: pivot columns of G are linearly independent
        self._info_set = np.array(piv, dtype=np.int64)
        self._info_inv = invert(MatF._wrap(self.field, G.a[:, piv])) if self.k else None
        self._codewords = None

    @classmethod
    def from_generator(cls, G: MatF) -> "LinearCode":
        return cls(G)

    def __repr__(self):
        return f"LinearCode(q={self.field.q}, n={self.n}, k={self.k})"

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def rate(self) -> float:
        return self.k * math.log2(self.q) / self.n

    # ------------------------------------------------------------- encoding
    def encode(self, u) -> np.ndarray:
        u = np.asarray(u, dtype=np.int64)
        if u.shape[-1] != self.k:
            raise LengthMismatch(f"message length {u.shape[-1]} != k = {self.k}")
        return self.field.matmul(u, self.G.a)

    def unencode(self, c) -> np.ndarray:
        """Message u with u G = c (c must be a codeword)."""
        c = np.asarray(c, dtype=np.int64)
        if self.k == 0:
            return np.zeros(c.shape[:-1] + (0,), dtype=np.int64)
        return self.field.matmul(c[..., self._info_set], self._info_inv.a)

    def syndrome(self, y) -> np.ndarray:
        y = np.asarray(y, dtype=np.int64)
        if y.shape[-1] != self.n:
            raise LengthMismatch(f"word length {y.shape[-1]} != n = {self.n}")
        return self.field.matmul(y, self.H.a.T)

    def is_codeword(self, y) -> bool:
        return not np.any(self.syndrome(y))

    def codewords(self) -> np.ndarray:
        """All codewords, in lexicographic message order."""
        if self._codewords is None:
            size = self.q**self.k
            if size > CODEWORD_CAP:
                raise TooLarge(f"{size} codewords exceed the enumeration cap {CODEWORD_CAP}")
            cw = self.field.matmul(_messages(self.q, self.k), self.G.a)
            cw.setflags(write=False)
            self._codewords = cw
        return self._codewords

    # ------------------------------------------------------------- geometry
    def weight_enumerator(self) -> WeightEnumerator:
        w = np.count_nonzero(self.codewords(), axis=1)
        counts = np.bincount(w, minlength=self.n + 1)
        return WeightEnumerator(tuple(int(c) for c in counts))

    def min_distance(self) -> int:
        if self.k == 0:
            raise ValueError("the zero code has no nonzero codewords")
        w = np.count_nonzero(self.codewords(), axis=1)
        return int(w[w > 0].min())

    def dual(self) -> "LinearCode":
        return LinearCode(self.H)


def from_generator(G: MatF) -> LinearCode:
    return LinearCode(G)


def hamming_weight(v) -> int:
    return int(np.count_nonzero(np.asarray(v)))


def hamming_distance(v, w) -> int:
    v, w = np.asarray(v), np.asarray(w)
    if v.shape != w.shape:
        raise LengthMismatch(f"lengths {v.shape} and {w.shape} differ")
    return int(np.count_nonzero(v != w))


def min_distance(code: LinearCode) -> int:
    return code.min_distance()


def weight_enumerator(code: LinearCode) -> WeightEnumerator:
    return code.weight_enumerator()


def dual(code: LinearCode) -> LinearCode:
    return code.dual()


def bhattacharyya(ch: Dmc) -> float:
    """Sum over outputs of sqrt(P(b|0) P(b|1))."""
    if ch.n_in != 2:
        raise NotBinaryInput(f"channel has {ch.n_in} inputs, expected 2")
    return float(np.sqrt(ch.w[0] * ch.w[1]).sum())


def ml_union_bound(w: WeightEnumerator, beta: float) -> float:
    """A(beta) - 1: upper bound on ML block error probability."""
    if not 0.0 <= beta <= 1.0 + 1e-12:
        raise ValueError(f"Bhattacharyya parameter must lie in [0, 1], got {beta}")
    return float(sum(a * beta**i for i, a in enumerate(w.counts) if i >= 1))


# ------------------------------------------------------------ syndrome table
class SyndromeTable:
    """Coset leaders indexed by syndrome.

    Syndromes are keyed by their base-q value with the first entry most
    significant; ``leaders[key]`` is the chosen error pattern.
    """

    def __init__(self, code: LinearCode, leaders: np.ndarray):
        self.code = code
        self.leaders = leaders
        self.leaders.setflags(write=False)
        r = code.n - code.k
        self._weights = code.q ** np.arange(r - 1, -1, -1, dtype=np.int64)

    def __len__(self):
        return len(self.leaders)

    def key(self, s) -> np.ndarray:
        return np.asarray(s, dtype=np.int64) @ self._weights

    def leader(self, s) -> np.ndarray:
        return self.leaders[int(self.key(s))]

    def as_dict(self) -> dict[tuple[int, ...], tuple[int, ...]]:
        q, r = self.code.q, self.code.n - self.code.k
        leaders = self.leaders.tolist()
        return {tuple(s): tuple(leaders[i]) for i, s in enumerate(_messages(q, r).tolist())}


def _symmetric_not_too_noisy(noise: np.ndarray) -> bool:
    rest = noise[1:]
    return bool(np.all(rest == rest[0]) and noise[0] > rest[0])


def build_syndrome_table(code: LinearCode, noise=None) -> SyndromeTable:
    """Choose, for every syndrome, the most probable error pattern in its coset.

    ``noise`` is the per-symbol distribution P_Z over the field (additive
    noise, i.i.d. across positions).  ``None`` means any symmetric channel
    that is not too noisy, where probability falls with weight.  Ties are
    broken by smaller weight, then by the smaller pattern read as a base-q
    number with the first position most significant.
    """
    q, n, r = code.q, code.n, code.n - code.k
    size = q**r
    if size > COSET_CAP:
        raise TooLarge(f"{size} cosets exceed the table cap {COSET_CAP}")
    leaders = np.zeros((size, n), dtype=np.int64)
    weights = q ** np.arange(r - 1, -1, -1, dtype=np.int64)
    if noise is not None:
        noise = np.asarray(noise, dtype=float)
        if noise.shape != (q,):
            raise LengthMismatch(f"noise distribution needs {q} entries")
    if noise is None or _symmetric_not_too_noisy(noise):
        filled = np.zeros(size, dtype=bool)
        filled[0] = True
        Ht = code.H.a.T
        for w in range(1, n + 1):
            if filled.all():
                break
            pats = _weight_patterns(n, w, q)
            pats = pats[np.lexsort(pats.T[::-1])]
            keys = code.field.matmul(pats, Ht) @ weights if r else np.zeros(len(pats), np.int64)
            uniq, first = np.unique(keys, return_index=True)
            new = ~filled[uniq]
            leaders[uniq[new]] = pats[first[new]]
            filled[uniq[new]] = True
        return SyndromeTable(code, leaders)
    total = q**n
    if total > PATTERN_CAP:
        raise TooLarge(f"{total} error patterns exceed the cap {PATTERN_CAP}")
    pats = _messages(q, n)
    with np.errstate(divide="ignore"):
        lp = np.log(noise)[pats].sum(axis=1)
    lp = np.round(lp, 9)
    wt = np.count_nonzero(pats, axis=1)
    order = np.lexsort((wt, -lp))  # stable: lexicographic order kept within ties
    pats = pats[order]
    keys = code.field.matmul(pats, code.H.a.T) @ weights if r else np.zeros(total, np.int64)
    uniq, first = np.unique(keys, return_index=True)
    leaders[uniq] = pats[first]
    return SyndromeTable(code, leaders)


def _weight_patterns(n: int, w: int, q: int) -> np.ndarray:
    pos = np.array(list(itertools.combinations(range(n), w)), dtype=np.int64)
    vals = np.array(list(itertools.product(range(1, q), repeat=w)), dtype=np.int64)
    out = np.zeros((len(pos) * len(vals), n), dtype=np.int64)
    rows = np.repeat(np.arange(len(out)), w).reshape(-1, w)
    cols = np.repeat(pos, len(vals), axis=0)
    out[rows, cols] = np.tile(vals, (len(pos), 1))
    return out


def syndrome_decode(table: SyndromeTable, code: LinearCode, y) -> DecodeReport:
    """Subtract the coset leader of y's syndrome; the result is always a codeword."""
    y = np.asarray(y, dtype=np.int64)
    if y.shape != (code.n,):
        raise LengthMismatch(f"received word has length {y.shape}, expected {code.n}")
    s = code.syndrome(y)
    z = table.leader(s)
    c = code.field.sub_arr(y, z)
    return DecodeReport(
        codeword=c,
        error=z.copy(),
        success=True,
        positions=tuple(int(i) for i in np.nonzero(z)[0]),
        info=code.unencode(c),
    )


def batch_decoder(table: SyndromeTable):
    """Vectorized syndrome decoder for simulation: Y -> (codewords, messages)."""
    code = table.code
    f = code.field

    def decode(y: np.ndarray):
        keys = table.key(code.syndrome(y)) if code.n > code.k else np.zeros(len(y), np.int64)
        c = f.sub_arr(y, table.leaders[keys])
        return c, code.unencode(c)

    return decode


def batch_encoder(code: LinearCode):
    return code.encode


# ------------------------------------------------------------- common codes
def repetition_code(field: Field, n: int) -> LinearCode:
    return LinearCode(MatF(field, [[1] * n]))


def hamming74(field: Field | None = None) -> LinearCode:
    from .gf import make_prime_field

    f = field or make_prime_field(2)
    return LinearCode(MatF.parse(f, "1000011;0100101;0010110;0001111"))
