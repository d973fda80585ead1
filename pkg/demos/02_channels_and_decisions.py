# Channels, MAP/ML decisions and the exact block error of a small code.
import numpy as np

from fieldcodes.channel import bec, bsc, entropy, exact_block_error, joint, map_rule, ml_rule, prob_correct

prior = [0.1, 0.9]
ch = bsc(0.2)
print("joint P(x, y):\n", joint(prior, ch))
f_map, f_ml = map_rule(prior, ch), ml_rule(ch)
print("MAP table", f_map, "P_c =", prob_correct(prior, ch, f_map))
print("ML  table", f_ml, "P_c =", prob_correct(prior, ch, f_ml))  # ML ignores the skewed prior
print("H(prior) =", round(entropy(prior), 4), "bits")

# repetition code of length 5, decoded by block MAP with a uniform prior
for d in (0.01, 0.05, 0.11, 0.2):
    print(f"rep5 on bsc({d}): P_e = {exact_block_error(['00000', '11111'], bsc(d)):.6f}")

# the erasure channel never confuses 0 and 1, so only all-erased blocks fail
print("rep3 on bec(0.5):", exact_block_error(["000", "111"], bec(0.5)), "=", 0.5**3 / 2)
print("W for bec(0.3):\n", np.round(bec(0.3).w, 3))
