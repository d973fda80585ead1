import itertools
import math

import numpy as np
import pytest

from fieldcodes.bch import (
    BchCode,
    berlekamp_massey,
    bch_syndrome,
    bm_decode,
    design_for_t,
    erasure_decode_bch,
    locator_roots,
    two_error_decode,
)
from fieldcodes.channel import bsc, exact_block_error, simulate
from fieldcodes.cyclic import cyclic_shift
from fieldcodes.errors import NoFieldFits, RootCountMismatch, TooManyErasures, Uncorrectable
from fieldcodes.gf import make_prime_field
from fieldcodes.linear import bhattacharyya, min_distance, ml_union_bound, weight_enumerator
from fieldcodes.matf import ERASED, parse_vector
from fieldcodes.poly import Poly

from oracles import distance

F2 = make_prime_field(2)
F5 = make_prime_field(5)

BCH_15_7 = BchCode(4, 11)


def vec(text):
    return parse_vector(F2, text, allow_erasures=True)


def test_goldens():
    c = BCH_15_7
    assert (c.n, c.k_tilde, c.t, c.design_d) == (15, 7, 2, 5)
    assert c.g_tilde == Poly.parse(F2, "100010111")
    small = BchCode(3, 5)
    assert small.g_tilde == Poly.parse(F2, "1101")
    assert small.k_tilde == 4
    wide = BchCode(4, 9)
    assert wide.g_tilde == Poly.parse(F2, "11101100101")
    assert wide.k_tilde == 5 and wide.t == 3
    # rs_k = 12 has the same binary code but a smaller design radius
    assert BchCode(4, 12).g_tilde == c.g_tilde and BchCode(4, 12).t == 1


def test_true_distance():
    assert BCH_15_7.true_distance() == 5
    assert min_distance(BCH_15_7.as_linear_code()) == 5
    assert BchCode(3, 5).true_distance() == 3
    assert BchCode(4, 9).true_distance() == 7


def test_roots_are_full_conjugacy_classes():
    c = BCH_15_7
    f = c.field
    for r in c.roots:
        assert f.mul(r, r) in c.roots
        assert c.g_tilde.eval_in(f, r) == 0


def test_design_for_t():
    c = design_for_t(20, 2)
    assert (c.n, c.k_tilde) == (15, 7)
    assert design_for_t(7, 1).n == 7
    with pytest.raises(NoFieldFits):
        design_for_t(6, 3)
    with pytest.raises(NoFieldFits):
        design_for_t(2, 1)


def test_syndromes():
    c = BCH_15_7
    f = c.field
    zero = np.zeros(15, dtype=np.int64)
    assert bch_syndrome(c, zero) == [0, 0, 0, 0]
    for i in range(15):
        e = zero.copy()
        e[i] = 1
        s = bch_syndrome(c, e)
        assert s == [f.exp(i * j) for j in range(1, 5)]
        # binary words give s_(2j) = s_j^2
        assert s[1] == f.mul(s[0], s[0])
    for w in c.codewords():
        assert not any(bch_syndrome(c, w))


def test_berlekamp_massey_examples():
    assert berlekamp_massey([1, 2, 4, 3], F5) == Poly(F5, [1, 3])
    assert berlekamp_massey([0, 0, 0, 0], F5) == Poly.one(F5)
    # Fibonacci over F_5: s_i = s_(i-1) + s_(i-2)
    assert berlekamp_massey([1, 1, 2, 3, 0, 3], F5) == Poly(F5, [1, 4, 4])


@pytest.mark.parametrize("seed", range(20))
def test_berlekamp_massey_generates_sequence(seed):
    rng = np.random.default_rng(seed)
    F7 = make_prime_field(7)
    s = rng.integers(0, 7, 8).tolist()
    ell = berlekamp_massey(s, F7)
    assert ell.coeff(0) == 1

    def holds(length):
        return all(
            sum(ell.coeff(j) * s[i - j] for j in range(min(length, ell.degree) + 1)) % 7 == 0
            for i in range(length, len(s))
        )

    # register length may exceed deg(l) when the top taps are zero
    L = next(n for n in range(max(ell.degree, 0), len(s) + 1) if holds(n))
    # no shorter recurrence exists
    for shorter in range(L):
        for tail in itertools.product(range(7), repeat=shorter):
            cand = [1, *tail]
            if all(
                sum(cand[j] * s[i - j] for j in range(shorter + 1)) % 7 == 0
                for i in range(shorter, len(s))
            ):
                pytest.fail(f"recurrence of length {shorter} exists: {cand}")


def test_locator_roots():
    c = BCH_15_7
    f = c.field
    ell = Poly.from_roots(f, [f.exp(-3), f.exp(-10)])
    ell = ell.scale(f.inv(ell.coeff(0)))
    assert locator_roots(c, ell).positions == (3, 10)
    rootless = next(
        Poly(f, [1, b, 1]) for b in range(1, 16) if not Poly(f, [1, b, 1]).roots()
    )
    with pytest.raises(RootCountMismatch):
        locator_roots(c, rootless)


def test_decode_worked_example():
    c = BCH_15_7
    y = vec("000010111000010")
    rep = bm_decode(c, y)
    assert rep.success
    assert "".join(map(str, rep.codeword.tolist())) == "100010111000000"
    assert rep.positions == (0, 13)
    words = [tuple(w) for w in c.codewords().tolist()]
    dists = sorted(distance(y, w) for w in words)
    assert dists[0] == 2 and dists[1] > 2
    assert two_error_decode(c, y).positions == (0, 13)


def test_exhaustive_two_error_patterns_match_brute_force():
    c = BCH_15_7
    words = c.codewords()
    rng = np.random.default_rng(8)
    base = words[rng.integers(0, len(words))]
    for w in range(3):
        for pos in itertools.combinations(range(15), w):
            y = base.copy()
            y[list(pos)] ^= 1
            rep = bm_decode(c, y)
            assert rep.success and np.array_equal(rep.codeword, base)
            assert rep.positions == pos
            rep2 = two_error_decode(c, y)
            assert rep2.success and np.array_equal(rep2.codeword, base)


def test_beyond_design_radius():
    c = BCH_15_7
    words = [tuple(w) for w in c.codewords().tolist()]
    rng = np.random.default_rng(1)
    failures = 0
    for _ in range(300):
        pos = rng.choice(15, size=3, replace=False)
        y = np.zeros(15, dtype=np.int64)
        y[pos] = 1
        rep = bm_decode(c, y)
        if rep.success:
            assert c.is_codeword(rep.codeword)
            assert distance(y, rep.codeword) <= 2
        else:
            failures += 1
            with pytest.raises(Uncorrectable):
                bm_decode(c, y, strict=True)
        assert rep.success == two_error_decode(c, y).success
        if rep.success:
            assert tuple(rep.codeword.tolist()) in words
    assert failures > 0


def test_two_error_decoder_needs_t2():
    with pytest.raises(ValueError):
        two_error_decode(BchCode(3, 5), np.zeros(7, dtype=np.int64))


def test_key_equation():
    # S(x) l(x) = l'(x) mod x^(2t) in characteristic 2
    c = BchCode(5, 25)
    f = c.field
    assert c.t == 3
    rng = np.random.default_rng(6)
    for _ in range(40):
        w = int(rng.integers(1, c.t + 1))
        y = np.zeros(c.n, dtype=np.int64)
        y[rng.choice(c.n, w, replace=False)] = 1
        s = bch_syndrome(c, y)
        ell = berlekamp_massey(s, f)
        assert ell.degree == w
        lhs = Poly(f, (Poly(f, s) * ell).coeffs[: 2 * c.t])
        assert lhs == ell.formal_derivative()


def test_erasure_decoding_padded_word():
    c = BchCode(4, 9)
    y = vec("11101100e0e000e")
    known = y != ERASED
    consistent = [w for w in c.codewords() if np.array_equal(w[known], y[known])]
    assert len(consistent) == 1
    u = erasure_decode_bch(c, None, y)
    assert u.tolist() == [1, 0, 0, 0, 0]
    assert np.array_equal(c.encode(u), consistent[0])
    assert "".join(map(str, c.encode(u).tolist())) == "111011001010000"
    with pytest.raises(TooManyErasures):
        erasure_decode_bch(c, None, vec("e" * 10 + "11101"))


def test_erasure_decoding_sampled_patterns_below_design_distance():
    c = BCH_15_7
    rng = np.random.default_rng(0)
    u = rng.integers(0, 2, c.k_tilde)
    x = c.encode(u)
    for r in range(c.design_d):
        for pos in itertools.islice(itertools.combinations(range(15), r), 0, None, 7):
            y = x.copy()
            y[list(pos)] = ERASED
            assert erasure_decode_bch(c, None, y).tolist() == u.tolist()


def test_subcode_of_mother_rs():
    c = BCH_15_7
    f = c.field
    for w in c.codewords():
        assert not f.matmul(w, c.mother.check_matrix().a.T).any()


def test_cyclic_closure():
    c = BchCode(4, 9)
    words = {tuple(w) for w in c.codewords().tolist()}
    for w in words:
        p = Poly(F2, w)
        assert tuple(cyclic_shift(p, 1, c.n).padded(c.n)) in words


def test_encode_unencode_round_trip():
    c = BCH_15_7
    for u in itertools.product(range(2), repeat=7):
        assert c.unencode(c.encode(list(u))).tolist() == list(u)


def test_union_bound_dominates_exact_ml_error():
    c = BCH_15_7
    ch = bsc(0.05)
    pe = exact_block_error(c.codewords().tolist(), ch)
    assert pe <= ml_union_bound(weight_enumerator(c.as_linear_code()), bhattacharyya(ch))


def test_simulated_bounded_distance_error_matches_binomial_tail():
    c = BCH_15_7
    delta, trials = 0.08, 4000
    tail = 1 - sum(math.comb(15, i) * delta**i * (1 - delta) ** (15 - i) for i in range(3))

    def dec(y):
        out_c = np.empty_like(y)
        out_u = np.empty((len(y), c.k_tilde), dtype=np.int64)
        for i, row in enumerate(y):
            rep = bm_decode(c, row)
            out_c[i] = rep.codeword
            out_u[i] = rep.info if rep.success else 0
        return out_c, out_u

    r = simulate(c.encode, bsc(delta), dec, trials, 3, k=c.k_tilde)
    sigma = math.sqrt(tail * (1 - tail) / trials)
    assert abs(r.codeword_error_rate - tail) < 4 * sigma


def test_erasure_decoding_batch():
    c = BCH_15_7
    rng = np.random.default_rng(9)
    u = rng.integers(0, 2, (50, c.k_tilde))
    y = c.encode(u)
    y[:, [2, 5, 11, 14]] = ERASED
    assert np.array_equal(erasure_decode_bch(c, None, y), u)
    y[0, 0] = ERASED
    with pytest.raises(ValueError):
        erasure_decode_bch(c, None, y)
