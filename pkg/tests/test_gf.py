import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from fieldcodes.errors import DivideByZero, FieldMismatch, NotMonic, NotPrime, Reducible, ZeroElement
from fieldcodes.gf import (
    conjugacy_class,
    default_prime_poly,
    element_order,
    make_extension_field,
    make_prime_field,
    minimal_polynomial,
    parse_field_spec,
)
from fieldcodes.poly import Poly, x_pow_minus_one

from oracles import NaiveField

F16_POLY = (1, 1, 0, 0, 1)
SMALL_FIELDS = [
    (2, None), (3, None), (5, None), (7, None), (2, (1, 1, 1)), (2, (1, 1, 0, 1)),
    (2, (1, 0, 1, 1)), (3, (1, 0, 1)), (3, (2, 1, 1)), (2, F16_POLY), (2, (1, 1, 1, 1, 1)),
    (5, (2, 0, 1)), (2, (1, 0, 1, 0, 0, 1)), (2, (1, 1, 0, 0, 0, 0, 1)), (7, (1, 0, 1)),
]


def build(p, g):
    return make_prime_field(p) if g is None else make_extension_field(p, g)


def test_f2_tables():
    f = make_prime_field(2)
    assert f.add_table().tolist() == [[0, 1], [1, 0]]
    assert f.mul_table().tolist() == [[0, 0], [0, 1]]


def test_f3_tables():
    f = make_prime_field(3)
    assert f.add_table().tolist() == [[0, 1, 2], [1, 2, 0], [2, 0, 1]]
    assert f.mul_table().tolist() == [[0, 0, 0], [0, 1, 2], [0, 2, 1]]


def test_composite_rejected():
    with pytest.raises(NotPrime):
        make_prime_field(4)
    with pytest.raises(NotPrime):
        make_prime_field(1)


def test_f4_tables_match_worked_construction():
    f = make_extension_field(2, [1, 1, 1])
    # encodings: 0, 1, x = 2, 1 + x = 3
    assert f.add_table().tolist() == [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]]
    assert f.mul_table().tolist() == [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]]
    assert f.mul(2, 3) == 1


def test_reducible_and_non_monic_rejected():
    with pytest.raises(Reducible):
        make_extension_field(2, [1, 0, 1])
    with pytest.raises(Reducible):
        make_extension_field(3, [2, 0, 1])
    with pytest.raises(NotMonic):
        make_extension_field(3, [1, 0, 2])


def test_f8_correspondence_table():
    f = make_extension_field(2, [1, 1, 0, 1])
    assert f.alpha_value == 2
    expected = ["1", "x", "x^2", "1+x", "x+x^2", "1+x+x^2", "1+x^2"]
    assert [f.format(f.exp(i), "x") for i in range(7)] == expected


def test_f8_exponent_arithmetic_matches_polynomial_product():
    f = make_extension_field(2, [1, 1, 0, 1])
    naive = NaiveField(2, [1, 1, 0, 1])
    a4, a5 = f.exp(4), f.exp(5)
    assert f.mul(a4, a5) == f.exp(2)
    assert naive.mul(a4, a5) == f.exp(2)


@pytest.mark.parametrize("p,g", [c for c in SMALL_FIELDS if c[1] is not None])
def test_multiplication_matches_naive_polynomial_arithmetic(p, g):
    f = build(p, g)
    naive = NaiveField(p, g)
    for a in range(f.q):
        for b in range(f.q):
            assert f.mul(a, b) == naive.mul(a, b)
            assert f.add(a, b) == naive.add(a, b)


@pytest.mark.parametrize("p,g", [c for c in SMALL_FIELDS if (c[0] ** (len(c[1]) - 1 if c[1] else 1)) <= 64])
def test_field_axioms_exhaustive(p, g):
    f = build(p, g)
    q = f.q
    add = f.add_table()
    mul = f.mul_table()
    v = np.arange(q)
    # commutativity
    assert np.array_equal(add, add.T) and np.array_equal(mul, mul.T)
    # identities
    assert np.array_equal(add[0], v) and np.array_equal(mul[1], v)
    assert np.all(mul[:, 0] == 0)
    # inverses
    assert all(0 in add[a] for a in range(q))
    assert all(1 in mul[a, 1:] for a in range(1, q))
    # associativity and distributivity over all triples
    a, b, c = np.meshgrid(v, v, v, indexing="ij")
    assert np.array_equal(add[add[a, b], c], add[a, add[b, c]])
    assert np.array_equal(mul[mul[a, b], c], mul[a, mul[b, c]])
    assert np.array_equal(mul[a, add[b, c]], add[mul[a, b], mul[a, c]])


@pytest.mark.parametrize("p,g", SMALL_FIELDS)
def test_alpha_is_primitive(p, g):
    f = build(p, g)
    powers = {f.exp(i) for i in range(f.q - 1)}
    assert powers == set(range(1, f.q))
    assert element_order(f.alpha) == f.q - 1


def test_non_primitive_prime_poly_gets_searched_alpha():
    # 1+x+x^2+x^3+x^4 is irreducible over F_2 but x has order 5
    f = make_extension_field(2, [1, 1, 1, 1, 1])
    assert f.order(2) == 5
    assert f.alpha_value == 3  # smallest encoding of order 15
    assert element_order(f.alpha) == 15


def test_scalar_ops_and_errors():
    f = make_prime_field(5)
    assert f.inv(2) == 3
    assert f.div(1, 2) == 3
    assert f.pow(2, -1) == 3
    with pytest.raises(DivideByZero):
        f.inv(0)
    with pytest.raises(ZeroDivisionError):
        f(1) / f(0)
    with pytest.raises(ZeroElement):
        element_order(f(0))


def test_elem_operators():
    f = make_extension_field(2, [1, 1, 1])
    x = f(2)
    assert x * (x + 1) == 1
    assert x + 0 == x
    assert x**3 == 1
    assert (x / x) == f.one
    assert -x == x
    g = make_prime_field(3)
    with pytest.raises(FieldMismatch):
        x + g(1)


def test_orders():
    f5 = make_prime_field(5)
    assert element_order(f5(2)) == 4
    assert element_order(f5(1)) == 1
    f8 = make_extension_field(2, [1, 1, 0, 1])
    a3 = f8.alpha**3
    assert element_order(a3) == 7
    brute = next(i for i in range(1, 8) if f8.pow(a3.value, i) == 1)
    assert brute == 7


def test_conjugacy_classes_f16():
    f = make_extension_field(2, F16_POLY)
    a = f.alpha
    assert {e.value for e in conjugacy_class(a)} == {(a**i).value for i in (1, 2, 4, 8)}
    assert {e.value for e in conjugacy_class(a**3)} == {(a**i).value for i in (3, 6, 12, 9)}
    assert [e.value for e in conjugacy_class(f.zero)] == [0]


def test_minimal_polynomials_f16():
    f = make_extension_field(2, F16_POLY)
    assert minimal_polynomial(f.alpha).coeffs == (1, 1, 0, 0, 1)
    assert minimal_polynomial(f.alpha**3).coeffs == (1, 1, 1, 1, 1)


@pytest.mark.parametrize("p,g", SMALL_FIELDS)
def test_minimal_polynomial_of_one(p, g):
    f = build(p, g)
    mp = minimal_polynomial(f.one)
    assert mp.coeffs == (p - 1, 1)


@pytest.mark.parametrize("p,g", [c for c in SMALL_FIELDS if c[1] is not None])
def test_classes_partition_and_minimal_polynomials(p, g):
    f = build(p, g)
    seen = {}
    for a in range(f.q):
        cls = frozenset(e.value for e in conjugacy_class(f(a)))
        assert f.m % len(cls) == 0
        for v in cls:
            assert seen.setdefault(v, cls) == cls
        mp = minimal_polynomial(f(a))
        assert mp.is_monic() and mp.is_irreducible()
        assert mp.eval_in(f, a) == 0
        # divides x^q - x
        xq_x = Poly(mp.field, [0, p - 1] + [0] * (f.q - 2) + [1])
        assert (xq_x % mp).is_zero
    assert set(seen) == set(range(f.q))


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_frobenius_linearity(m):
    f = make_extension_field(2, default_prime_poly(2, m))
    v = np.arange(f.q)
    a, b = np.meshgrid(v, v, indexing="ij")
    for i in range(m):
        e = 2**i
        lhs = np.vectorize(lambda x: f.pow(int(x), e))(f.add_arr(a, b))
        rhs = f.add_arr(np.vectorize(lambda x: f.pow(int(x), e))(a), np.vectorize(lambda x: f.pow(int(x), e))(b))
        assert np.array_equal(lhs, rhs)


@pytest.mark.parametrize("p,g", SMALL_FIELDS)
def test_sum_of_powers_of_nth_root_vanishes(p, g):
    f = build(p, g)
    for w in range(2, f.q):
        n = f.order(w)
        total = 0
        for i in range(n):
            total = f.add(total, f.pow(w, i))
        assert total == 0


def test_default_prime_polys_are_smallest_primitive():
    assert [sum(c << i for i, c in enumerate(default_prime_poly(2, m))) for m in range(2, 6)] == [7, 11, 19, 37]


def test_field_spec_round_trip():
    f = parse_field_spec("2^4:11001")
    assert f.q == 16 and f.prime_poly == F16_POLY
    assert parse_field_spec(f.spec) == f
    assert parse_field_spec("5").q == 5
    assert parse_field_spec("5^1") == make_prime_field(5)
    assert parse_field_spec("2^3").prime_poly == (1, 1, 0, 1)
    with pytest.raises(ValueError):
        parse_field_spec("2^4:1101")


def test_large_field_uses_polynomial_multiplication():
    f = make_extension_field(2, default_prime_poly(2, 17))
    assert f._log is None
    a, b = 12345, 98765
    naive = NaiveField(2, list(f.prime_poly))
    assert f.mul(a, b) == naive.mul(a, b)
    assert f.mul(a, f.inv(a)) == 1
    assert f.pow(f.alpha_value, f.q - 1) == 1


def test_array_ops_match_scalar_ops():
    for p, g in SMALL_FIELDS:
        f = build(p, g)
        v = np.arange(f.q)
        a, b = np.meshgrid(v, v, indexing="ij")
        assert np.array_equal(f.mul_arr(a, b), np.vectorize(f.mul)(a, b))
        assert np.array_equal(f.sub_arr(a, b), np.vectorize(f.sub)(a, b))
        assert np.array_equal(f.inv_arr(v[1:]), [f.inv(int(x)) for x in v[1:]])


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SMALL_FIELDS), st.data())
def test_matmul_matches_elementwise_sum(field_def, data):
    f = build(*field_def)
    r, k, c = (data.draw(st.integers(1, 4)) for _ in range(3))
    cell = st.integers(0, f.q - 1)
    a = np.array(data.draw(st.lists(st.lists(cell, min_size=k, max_size=k), min_size=r, max_size=r)))
    b = np.array(data.draw(st.lists(st.lists(cell, min_size=c, max_size=c), min_size=k, max_size=k)))
    out = f.matmul(a, b)
    for i, j in itertools.product(range(r), range(c)):
        acc = 0
        for t in range(k):
            acc = f.add(acc, f.mul(int(a[i, t]), int(b[t, j])))
        assert out[i, j] == acc


def test_x_pow_minus_one_over_f3():
    f = make_prime_field(3)
    assert x_pow_minus_one(f, 2).coeffs == (2, 0, 1)
