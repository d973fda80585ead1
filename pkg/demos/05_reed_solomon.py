# Reed-Solomon codes: evaluation encoding, Fourier view, syndromes and erasures.
import numpy as np

from fieldcodes.gf import parse_field_spec
from fieldcodes.linear import min_distance
from fieldcodes.matf import ERASED
from fieldcodes.rs import RsCode, erasure_decode_mds, fourier, inv_fourier

F8 = parse_field_spec("2^3")
code = RsCode(F8, 3)
print(code, "points", code.points)
u = np.array([5, 1, 6])
c = code.encode(u)
print("u =", u, "-> c =", c)

# encoding equals the transform of the zero-padded message
padded = np.concatenate([u, np.zeros(4, dtype=np.int64)])
print("fourier(padded) =", fourier(padded, F8.alpha), " inverse:", inv_fourier(c, F8.alpha))

print("generator polynomial:", code.generator_poly().to_text(), "syndrome of c:", code.syndrome(c))
print("minimum distance", min_distance(code.as_linear_code()), "= n - k + 1 =", code.d)

# any n - k erasures are recoverable
y = c.copy()
y[[0, 2, 3, 6]] = ERASED
print("received", y, "-> u =", erasure_decode_mds(code, y))
