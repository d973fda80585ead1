# Finite field arithmetic: prime fields, extension fields, conjugacy classes.
from fieldcodes.gf import conjugacy_class, make_prime_field, minimal_polynomial, parse_field_spec

F7 = make_prime_field(7)
a, b = F7(3), F7(5)
print("F_7:", a, "+", b, "=", a + b, ";", a, "*", b, "=", a * b, "; 1/3 =", a.inv())

# F_16 built from 1 + z + z^4; elements are ints whose bits are coefficients
F16 = parse_field_spec("2^4")
alpha = F16.alpha
print(F16.spec, "alpha =", alpha.value, "order", F16.order(alpha.value))
for i in range(6):
    v = F16.exp(i)
    print(f"  alpha^{i} = {v:2d} = {F16.format(v)}")

# the log table turns multiplication into addition of exponents
x, y = F16(9), F16(13)
print("9 * 13 =", (x * y).value, "; log 9 + log 13 =", (F16.log(9) + F16.log(13)) % 15)

# Frobenius orbits and their binary minimal polynomials
seen = set()
for v in range(1, 16):
    if v in seen:
        continue
    cls = conjugacy_class(F16(v))
    seen.update(e.value for e in cls)
    print("class", [e.value for e in cls], "minimal polynomial", minimal_polynomial(F16(v)).to_text())
