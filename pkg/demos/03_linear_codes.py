# Linear block codes: RRE form, check matrix, weight enumerator, syndrome decoding.
from fieldcodes.channel import bsc, exact_block_error
from fieldcodes.gf import make_prime_field
from fieldcodes.linear import LinearCode, bhattacharyya, build_syndrome_table, ml_union_bound, syndrome_decode
from fieldcodes.matf import MatF

F2 = make_prime_field(2)
code = LinearCode(MatF.parse(F2, "1101000;0110100;0011010;0001101"))
print("n, k =", code.n, code.k)
print("RRE generator:\n", code.rre_G.a)
print("check matrix:\n", code.H.a)
print("weight enumerator:", code.weight_enumerator().counts, "d =", code.min_distance())

table = build_syndrome_table(code)
for s, z in sorted(table.as_dict().items()):
    print("syndrome", "".join(map(str, s)), "leader", "".join(map(str, z)))

c = code.encode([1, 0, 1, 1])
y = c.copy()
y[5] ^= 1
rep = syndrome_decode(table, code, y)
print("sent", c, "received", y, "decoded", rep.codeword, "flipped", rep.positions)

# the union bound A(beta) - 1 against the exact ML error
words = code.codewords().tolist()
for d in (0.01, 0.05, 0.1):
    beta = bhattacharyya(bsc(d))
    print(f"delta {d}: exact {exact_block_error(words, bsc(d)):.5f}  bound {ml_union_bound(code.weight_enumerator(), beta):.5f}")
