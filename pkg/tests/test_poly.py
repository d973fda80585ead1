import itertools

import pytest
from hypothesis import given, settings, strategies as st

from fieldcodes.errors import DivisionByNullPoly, FieldMismatch
from fieldcodes.gf import make_extension_field, make_prime_field
from fieldcodes.poly import NEG_INF, Poly, degree, formal_derivative, is_irreducible, poly_divmod

from oracles import pdivmod, pmul

F2 = make_prime_field(2)
F3 = make_prime_field(3)
F5 = make_prime_field(5)
FIELDS_UP_TO_16 = [
    F2, F3, F5, make_prime_field(7), make_prime_field(11), make_prime_field(13),
    make_extension_field(2, [1, 1, 1]), make_extension_field(2, [1, 1, 0, 1]),
    make_extension_field(3, [1, 0, 1]), make_extension_field(2, [1, 1, 0, 0, 1]),
]


def P(field, *coeffs):
    return Poly(field, coeffs)


def test_degrees():
    assert degree(Poly.zero(F2)) == NEG_INF
    assert degree(P(F2, 1, 1)) == 1
    assert degree(P(F2, 1, 1) * P(F2, 1, 1)) == 2
    assert degree(P(F2, 1, 1) * Poly.zero(F2)) == NEG_INF
    assert degree(P(F2, 1)) == 0
    assert NEG_INF < -1000


def test_normalization():
    assert P(F2, 1, 0, 0).coeffs == (1,)
    assert P(F2, 0, 0).is_zero


def test_ring_examples():
    assert (P(F2, 1, 1) + P(F2, 1, 1)).is_zero
    assert P(F2, 1, 1) * P(F2, 1, 1) == P(F2, 1, 0, 1)
    # (x - 1)(x - 2) = 2 + x^2 over F_3
    assert P(F3, 2, 1) * P(F3, 1, 1) == P(F3, 2, 0, 1)


def test_long_division_worked_example():
    q, r = poly_divmod(P(F2, 1, 0, 0, 1, 1), P(F2, 1, 1, 0, 1))
    assert q == P(F2, 1, 1)
    assert r == P(F2, 0, 0, 1)


def test_divide_by_self_and_null():
    p = P(F5, 3, 1, 4, 1)
    assert divmod(p, p) == (Poly.one(F5), Poly.zero(F5))
    with pytest.raises(DivisionByNullPoly):
        divmod(p, Poly.zero(F5))
    with pytest.raises(ZeroDivisionError):
        p % Poly.zero(F5)


def test_x4_minus_1_divisible_by_x_minus_2_over_f5():
    q, r = divmod(P(F5, 4, 0, 0, 0, 1), P(F5, 3, 1))
    assert r.is_zero
    oq, orem = pdivmod([4, 0, 0, 0, 1], [3, 1], 5)
    assert list(q.coeffs) == oq and orem == []
    assert P(F5, 4, 0, 0, 0, 1).eval(F5(2)) == 0


def test_eval():
    assert P(F3, 1, 0, 1).eval(F3(1)) == 2
    p = P(F5, 3, 2, 1)
    assert p.eval(F5(0)) == 3
    F8 = make_extension_field(2, [1, 1, 0, 1])
    g = P(F8, 1, 1, 0, 1)
    assert g.eval(F8.alpha) == 0
    with pytest.raises(FieldMismatch):
        p.eval(F3(1))


def test_formal_derivative():
    assert formal_derivative(P(F2, 0, 0, 1)).is_zero
    assert formal_derivative(P(F2, 1, 1, 0, 1)) == P(F2, 1, 0, 1)
    assert formal_derivative(P(F5, 4)).is_zero
    assert formal_derivative(P(F3, 0, 0, 0, 1)).is_zero  # 3x^2 = 0
    assert formal_derivative(P(F5, 1, 1, 1)) == P(F5, 1, 2)


def test_irreducibility_examples():
    assert is_irreducible(P(F2, 1, 1, 1))
    assert not is_irreducible(P(F3, 2, 0, 1))
    assert is_irreducible(P(F3, 1, 0, 1))
    assert not is_irreducible(P(F2, 1, 0, 1))
    # product of two irreducible quadratics has no roots yet is reducible
    assert not is_irreducible(P(F2, 1, 1, 1) * P(F2, 1, 1, 1))


def test_parse_and_text():
    assert Poly.parse(F2, "11001") == P(F2, 1, 1, 0, 0, 1)
    assert Poly.parse(F5, "1,2,0,3") == P(F5, 1, 2, 0, 3)
    assert Poly.parse(F2, "11001").to_text() == "11001"


def test_mixed_fields_rejected():
    with pytest.raises(FieldMismatch):
        P(F2, 1) + P(F3, 1)


def poly_strategy(field, max_len=7):
    return st.lists(st.integers(0, field.q - 1), max_size=max_len).map(lambda c: Poly(field, c))


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(FIELDS_UP_TO_16).flatmap(lambda f: st.tuples(poly_strategy(f), poly_strategy(f))))
def test_divmod_round_trip(pair):
    a, b = pair
    if b.is_zero:
        return
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(FIELDS_UP_TO_16).flatmap(lambda f: st.tuples(poly_strategy(f), poly_strategy(f))))
def test_degree_of_product_is_sum(pair):
    a, b = pair
    assert (a * b).degree == a.degree + b.degree


@settings(max_examples=200, deadline=None)
@given(
    st.sampled_from(FIELDS_UP_TO_16).flatmap(
        lambda f: st.tuples(poly_strategy(f), poly_strategy(f), st.integers(0, f.q - 1))
    )
)
def test_evaluation_is_a_ring_homomorphism(triple):
    a, b, x = triple
    f = a.field
    assert (a * b).eval_int(x) == f.mul(a.eval_int(x), b.eval_int(x))
    assert (a + b).eval_int(x) == f.add(a.eval_int(x), b.eval_int(x))


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(0, 1), max_size=10), st.lists(st.integers(0, 1), max_size=10))
def test_prime_field_product_matches_oracle(a, b):
    got = (Poly(F2, a) * Poly(F2, b)).coeffs
    assert list(got) == pmul(a, b, 2)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([2, 3, 4]).flatmap(lambda m: st.tuples(st.just(m), st.lists(st.integers(0, 2**m - 1), min_size=1, max_size=6))))
def test_binary_coefficients_iff_square_equals_substitution(arg):
    from fieldcodes.gf import default_prime_poly

    m, coeffs = arg
    f = make_extension_field(2, default_prime_poly(2, m))
    p = Poly(f, coeffs)
    binary = all(c in (0, 1) for c in p.coeffs)
    assert (p * p == p.compose_power(2)) == binary


@pytest.mark.parametrize("field", [f for f in FIELDS_UP_TO_16 if f.q <= 16 and f.q not in (11, 13)])
def test_monic_polynomial_has_at_most_degree_roots(field):
    q = field.q
    for m in range(1, 3 if q > 8 else 4):
        for low in itertools.product(range(q), repeat=m):
            p = Poly(field, list(low) + [1])
            assert len(p.roots()) <= m


def test_from_roots():
    p = Poly.from_roots(F5, [2, 4])
    assert p == P(F5, 3, 4, 1)
