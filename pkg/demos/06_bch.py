# Binary BCH codes: construction from an RS mother code and algebraic decoding.
import numpy as np

from fieldcodes.bch import BchCode, bch_syndrome, berlekamp_massey, bm_decode, two_error_decode

code = BchCode(4, 11)  # design distance 5 over F_16
print(code, "t =", code.t, "true distance", code.true_distance())

rng = np.random.default_rng(5)
u = rng.integers(0, 2, code.k_tilde)
c = code.encode(u)
y = c.copy()
y[[2, 9]] ^= 1
s = bch_syndrome(code, y)
ell = berlekamp_massey(s, code.field)
print("syndromes", s, "locator", ell)

rep = bm_decode(code, y)
print("BM positions", rep.positions, "ok", np.array_equal(rep.codeword, c), "info", rep.info)
print("closed form positions", two_error_decode(code, y).positions)

# three errors exceed the design radius; the decoder either fails or lands elsewhere
y[12] ^= 1
rep = bm_decode(code, y)
print("three errors:", "decoded to another codeword" if rep.success else "failure: " + rep.reason)
