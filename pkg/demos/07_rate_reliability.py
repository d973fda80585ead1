# Rate versus reliability: Monte Carlo, exhaustive best-code search, union bounds.
import math

from fieldcodes.channel import bsc, pcb, search_best_code, simulate
from fieldcodes.gf import make_prime_field
from fieldcodes.linear import batch_decoder, build_syndrome_table, hamming74, repetition_code

F2 = make_prime_field(2)
ch = bsc(0.11)

for code in (repetition_code(F2, 3), repetition_code(F2, 5), hamming74()):
    dec = batch_decoder(build_syndrome_table(code))
    r = simulate(code.encode, ch, dec, 200_000, seed=1, k=code.k)
    sigma = math.sqrt(r.codeword_error_rate * (1 - r.codeword_error_rate) / r.trials)
    print(f"n={code.n} k={code.k}: P_e ~ {r.codeword_error_rate:.5f} +- {sigma:.5f}")

# best code of each size by exhaustive search; P_cb normalizes over 840 channel uses
for n in range(1, 6):
    for size in [s for s in (2, 3) if s <= 2**n]:
        res = search_best_code(n, size, ch)
        words = " ".join("".join(map(str, w)) for w in res.code)
        print(f"n={n} |C|={size} R={res.rate:.3f} P_e={res.pe:.5f} P_cb={pcb(res.pe, n):.3g}  {words}")

# the full frontier (n up to 7, four codewords) is opt-in: fieldcodes search --full
