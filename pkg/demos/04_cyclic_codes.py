# Cyclic codes: three encoders, check polynomial and CRC-style syndromes.
from fieldcodes.cyclic import CyclicCode
from fieldcodes.gf import make_prime_field
from fieldcodes.poly import Poly

F2 = make_prime_field(2)
code = CyclicCode(F2, 15, Poly.parse(F2, "11001"))  # g = 1 + x + x^4
print(code)
print("h =", code.h.to_text())

u = Poly.parse(F2, "0111")
for name, enc in (("u g", code.encode_mult), ("right", code.encode_sys_right), ("left", code.encode_sys_left)):
    c = enc(u)
    print(f"{name:>5}: {''.join(map(str, code.vector(c)))}")

# data sits in the top k positions (right) or bottom k positions (left)
c = code.encode_sys_right(u)
print("recovered:", code.decode_sys_right(c).to_text())

# a burst of length <= 4 always leaves a nonzero remainder
r = c + Poly.parse(F2, "0000011010")
print("syndrome of corrupted word:", code.syndrome_poly(r).to_text(), "codeword?", code.is_codeword(r))
print("check matrix:\n", code.check_matrix().a)
