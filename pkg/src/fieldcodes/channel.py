"""Discrete memoryless channels, MAP/ML decisions and block error probabilities."""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import BadProbability, NotDivisor, ShapeMismatch, TooLarge

TOL = 1e-12
EXTEND_CAP = 1 << 24
ENUM_CAP = 1 << 24
SEARCH_COST_CAP = 1e10


def dist(values: Sequence[float]) -> np.ndarray:
    """Validate a probability vector and return it as a read-only array."""
    d = np.array(values, dtype=float)
    if d.ndim != 1 or d.size == 0:
        raise ShapeMismatch("a distribution is a non-empty vector")
    if np.any(d < 0) or np.any(d > 1) or abs(d.sum() - 1) > TOL:
        raise BadProbability(f"not a probability vector: {values}")
    d.setflags(write=False)
    return d


def uniform(size: int) -> np.ndarray:
    return dist(np.full(size, 1.0 / size))


class Dmc:
    """A discrete memoryless channel given by its transition matrix.

    Row ``a``, column ``b`` holds P(Y=b | X=a).
    """

    def __init__(self, transition, name: str = ""):
        w = np.array(transition, dtype=float)
        if w.ndim != 2 or w.size == 0:
            raise ShapeMismatch("transition matrix must be two dimensional")
        if np.any(w < -TOL) or np.any(w > 1 + TOL):
            raise BadProbability("transition probabilities must lie in [0, 1]")
        if np.any(np.abs(w.sum(axis=1) - 1) > TOL):
            raise BadProbability("every row of a transition matrix must sum to 1")
        w = np.clip(w, 0.0, 1.0)
        w.setflags(write=False)
        self.w = w
        self.name = name

    @property
    def n_in(self) -> int:
        return self.w.shape[0]

    @property
    def n_out(self) -> int:
        return self.w.shape[1]

    def __call__(self, b: int, a: int) -> float:
        return float(self.w[a, b])

    def __repr__(self):
        return f"Dmc({self.name or self.w.tolist()})"

    def __eq__(self, other):
        return isinstance(other, Dmc) and self.w.shape == other.w.shape and np.allclose(
            self.w, other.w, atol=TOL, rtol=0
        )

    def sample(self, x: np.ndarray, rng: np.random.Generator) -> np.ndarray:
        """Pass an integer array of inputs through the channel."""
        r = rng.random(x.shape)
        if self.n_out == 2:
            return (r >= self.w[x, 0]).astype(np.int64)
        cdf = np.cumsum(self.w, axis=1)[:, :-1]
        out = np.zeros(x.shape, dtype=np.int64)
        for j in range(cdf.shape[1]):
            out += r >= cdf[x, j]
        return out


def _check_prob(value: float, what: str) -> float:
    value = float(value)
    if not 0.0 <= value <= 1.0:
        raise BadProbability(f"{what} must lie in [0, 1], got {value}")
    return value


def bsc(delta: float) -> Dmc:
    d = _check_prob(delta, "crossover probability")
    return Dmc([[1 - d, d], [d, 1 - d]], name=f"bsc:{delta}")


def bec(eps: float) -> Dmc:
    """Binary erasure channel; output index 2 is the erasure symbol."""
    e = _check_prob(eps, "erasure probability")
    return Dmc([[1 - e, 0.0, e], [0.0, 1 - e, e]], name=f"bec:{eps}")


def q_sym(q: int, delta: float) -> Dmc:
    """q-ary symmetric channel: each wrong symbol has probability delta."""
    d = float(delta)
    if q < 2:
        raise ValueError("alphabet size must be at least 2")
    if d < 0 or (q - 1) * d > 1 + TOL:
        raise BadProbability(f"need 0 <= (q-1)*delta <= 1, got q={q}, delta={delta}")
    w = np.full((q, q), d)
    np.fill_diagonal(w, 1 - (q - 1) * d)
    return Dmc(w, name=f"qsym:{q}:{delta}")


def parse_channel(text: str) -> Dmc:
    """``bsc:0.11``, ``bec:0.5`` or ``qsym:5:0.05``."""
    kind, *args = text.strip().split(":")
    try:
        if kind == "bsc" and len(args) == 1:
            return bsc(float(args[0]))
        if kind == "bec" and len(args) == 1:
            return bec(float(args[0]))
        if kind == "qsym" and len(args) == 2:
            return q_sym(int(args[0]), float(args[1]))
    except ValueError as exc:
        if isinstance(exc, BadProbability):
            raise
        raise ValueError(f"bad channel spec {text!r}: {exc}") from None
    raise ValueError(f"bad channel spec {text!r}; expected bsc:D, bec:E or qsym:Q:D")


# ------------------------------------------------------------------ decisions
def argmax_first(a: np.ndarray, axis: int = 0) -> np.ndarray:
    """Argmax with ties (up to relative 1e-12) resolved to the smallest index."""
    a = np.asarray(a, dtype=float)
    top = a.max(axis=axis, keepdims=True)
    near = a >= top - np.abs(top) * TOL
    return np.argmax(near, axis=axis)


def joint(prior, ch: Dmc) -> np.ndarray:
    prior = dist(prior)
    if prior.size != ch.n_in:
        raise ShapeMismatch(f"prior has {prior.size} entries, channel has {ch.n_in} inputs")
    return prior[:, None] * ch.w


def map_rule(prior, ch: Dmc) -> np.ndarray:
    """Decision table f[b] = argmax_a P_X(a) P(b|a)."""
    return argmax_first(joint(prior, ch), axis=0)


def ml_rule(ch: Dmc) -> np.ndarray:
    return argmax_first(ch.w, axis=0)


def prob_correct(prior, ch: Dmc, f) -> float:
    pxy = joint(prior, ch)
    f = np.asarray(f, dtype=np.int64)
    if f.shape != (ch.n_out,):
        raise ShapeMismatch("decision table must have one entry per output symbol")
    return float(pxy[f, np.arange(ch.n_out)].sum())


def entropy(d) -> float:
    d = dist(d)
    nz = d[d > 0]
    return float(-(nz * np.log2(nz)).sum()) + 0.0


def extend(ch: Dmc, n: int, cap: int = EXTEND_CAP) -> Dmc:
    """Super channel of n uses; tuples are indexed with the first symbol most significant."""
    if n < 1:
        raise ValueError("n must be at least 1")
    size = ch.n_in**n * ch.n_out**n
    if size > cap:
        raise TooLarge(f"extended channel would have {size} entries (cap {cap})")
    w = ch.w
    for _ in range(n - 1):
        w = np.kron(w, ch.w)
    return Dmc(w, name=f"{ch.name}^{n}" if ch.name else "")


# ------------------------------------------------------------- block codes
def _as_code(code) -> np.ndarray:
    words = [[int(ch) for ch in w] if isinstance(w, str) else list(w) for w in code]
    arr = np.array(words, dtype=np.int64)
    if arr.ndim != 2 or arr.shape[0] == 0:
        raise ShapeMismatch("a code is a non-empty list of equal-length words")
    return arr


def block_likelihoods(code, ch: Dmc, cap: int = ENUM_CAP) -> np.ndarray:
    """Matrix L[c, y] = P(y | codeword c) over all outputs y in row-major order.

    For blocks longer than 32 the product is accumulated in the log domain
    and exponentiated at the end.
    """
    words = _as_code(code)
    m, n = words.shape
    if np.any(words < 0) or np.any(words >= ch.n_in):
        raise ValueError("code symbols must be channel input indices")
    if m * ch.n_out**n > cap:
        raise TooLarge(f"enumerating {ch.n_out}^{n} outputs for {m} codewords exceeds {cap}")
    if n > 32:
        with np.errstate(divide="ignore"):
            lw = np.log(ch.w)
        acc = np.zeros((m, 1))
        for i in range(n):
            acc = (acc[:, :, None] + lw[words[:, i]][:, None, :]).reshape(m, -1)
        return np.exp(acc)
    acc = np.ones((m, 1))
    for i in range(n):
        acc = (acc[:, :, None] * ch.w[words[:, i]][:, None, :]).reshape(m, -1)
    return acc


def block_map_decisions(code, ch: Dmc, prior=None) -> np.ndarray:
    """Index of the MAP codeword for every output block (ties to the smallest index)."""
    lik = block_likelihoods(code, ch)
    prior = uniform(lik.shape[0]) if prior is None else dist(prior)
    return argmax_first(prior[:, None] * lik, axis=0)


def conditional_errors(code, ch: Dmc, prior=None) -> np.ndarray:
    """P(MAP decision != c | c sent) for each codeword c."""
    lik = block_likelihoods(code, ch)
    m = lik.shape[0]
    prior = uniform(m) if prior is None else dist(prior)
    if prior.size != m:
        raise ShapeMismatch("prior must have one entry per codeword")
    decide = argmax_first(prior[:, None] * lik, axis=0)
    wrong = decide[None, :] != np.arange(m)[:, None]
    return (lik * wrong).sum(axis=1)


def exact_block_error(code, ch: Dmc, prior=None) -> float:
    """Exact error probability of the MAP block decoder, by full enumeration."""
    lik = block_likelihoods(code, ch)
    m = lik.shape[0]
    prior = uniform(m) if prior is None else dist(prior)
    if prior.size != m:
        raise ShapeMismatch("prior must have one entry per codeword")
    post = prior[:, None] * lik
    decide = argmax_first(post, axis=0)
    chosen = post[decide, np.arange(post.shape[1])]
    return float(max(0.0, (post.sum(axis=0) - chosen).sum()))


def pcb(p_e: float, n: int, K: int = 840) -> float:
    """Probability that K source bits, sent as K/n blocks of length n, all arrive correctly."""
    if n < 1 or K % n:
        raise NotDivisor(f"block length {n} does not divide {K}")
    return float((1.0 - p_e) ** (K // n))


# ---------------------------------------------------------------- simulation
@dataclass(frozen=True)
class SimResult:
    trials: int
    seed: int
    cw_errors: int
    info_errors: int

    @property
    def codeword_error_rate(self) -> float:
        return self.cw_errors / self.trials

    @property
    def infoword_error_rate(self) -> float:
        return self.info_errors / self.trials


def _simulate_chunk(encoder, ch, decoder, trials, seed, k, q, batch):
    rng = np.random.default_rng(seed)
    cw_err = info_err = 0
    done = 0
    while done < trials:
        b = min(batch, trials - done)
        u = rng.integers(0, q, size=(b, k), dtype=np.int64)
        x = np.asarray(encoder(u), dtype=np.int64)
        y = ch.sample(x, rng)
        x_hat, u_hat = decoder(y)
        cw_err += int(np.any(np.asarray(x_hat) != x, axis=1).sum())
        info_err += int(np.any(np.asarray(u_hat) != u, axis=1).sum())
        done += b
    return cw_err, info_err


def simulate(
    encoder: Callable[[np.ndarray], np.ndarray],
    ch: Dmc,
    decoder: Callable[[np.ndarray], tuple[np.ndarray, np.ndarray]],
    trials: int,
    seed: int,
    *,
    k: int,
    q: int = 2,
    workers: int = 1,
    batch: int = 1 << 16,
) -> SimResult:
    """Monte Carlo estimate of codeword and information-word error rates.

    ``encoder`` maps a ``(B, k)`` array of uniform information words to
    ``(B, n)`` channel inputs; ``decoder`` maps ``(B, n)`` outputs to a pair
    ``(codeword estimates, information estimates)``.  Worker ``w`` draws from
    ``default_rng(seed + w)``; only the single-worker counts are reproducible
    across worker settings.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    workers = max(1, int(workers))
    if workers == 1:
        cw, info = _simulate_chunk(encoder, ch, decoder, trials, seed, k, q, batch)
    else:
        shares = [trials // workers + (w < trials % workers) for w in range(workers)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(
                pool.map(
                    lambda w: _simulate_chunk(encoder, ch, decoder, shares[w], seed + w, k, q, batch)
                    if shares[w]
                    else (0, 0),
                    range(workers),
                )
            )
        cw = sum(p[0] for p in parts)
        info = sum(p[1] for p in parts)
    return SimResult(trials=trials, seed=seed, cw_errors=cw, info_errors=info)


# -------------------------------------------------------------------- search
@dataclass(frozen=True)
class SearchResult:
    n: int
    size: int
    pe: float
    code: tuple[tuple[int, ...], ...]
    candidates: int

    @property
    def rate(self) -> float:
        return math.log2(self.size) / self.n


def search_cost(n: int, size: int, ch: Dmc) -> float:
    """Operation count of the exhaustive best-code search."""
    words = ch.n_in**n
    return float(math.comb(words, size)) * size * ch.n_out**n


def search_best_code(
    n: int, size: int, ch: Dmc, cost_cap: float = SEARCH_COST_CAP, batch: int = 4096
) -> SearchResult:
    """Exhaustively find the size-``size`` block code of length ``n`` minimizing MAP P_e.

    The prior over codewords is uniform.  Among equally good codes the first
    in lexicographic order of codeword indices wins.
    """
    words = ch.n_in**n
    if not 1 <= size <= words:
        raise ValueError(f"code size must lie in [1, {words}]")
    cost = search_cost(n, size, ch)
    if cost > cost_cap:
        raise TooLarge(f"search over n={n}, |C|={size} costs about {cost:.3g} operations (cap {cost_cap:.3g})")
    wn = extend(ch, n).w
    best_pe = math.inf
    best = None
    combos = itertools.combinations(range(words), size)
    count = 0
    while True:
        chunk = np.array(list(itertools.islice(combos, batch)), dtype=np.int64)
        if chunk.size == 0:
            break
        count += len(chunk)
        pc = wn[chunk].max(axis=1).sum(axis=1) / size
        pe = 1.0 - pc
        i = int(np.argmax(pe <= pe.min() + TOL))
        if pe[i] < best_pe - TOL:
            best_pe = float(pe[i])
            best = chunk[i]
    code = tuple(_index_to_word(int(c), n, ch.n_in) for c in best)
    return SearchResult(n=n, size=size, pe=max(0.0, best_pe), code=code, candidates=count)


def _index_to_word(idx: int, n: int, q: int) -> tuple[int, ...]:
    out = []
    for _ in range(n):
        idx, d = divmod(idx, q)
        out.append(d)
    return tuple(reversed(out))
