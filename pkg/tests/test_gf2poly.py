import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyan import gf2poly
from polyan.exceptions import ReducibleError
from polyan.gf2poly import (Factorization, euler_phi, factor_mersenne, from_exponents,
                            gf2_mod, gf2_mul, gf2_square, is_irreducible, is_primitive,
                            order_of_t)

from oracles import (brute_order_mod2, gcd_count_phi, irreducible_patterns, is_prime_mr,
                     long_division_mod, schoolbook_mul, trial_factor, trial_irreducible)


def test_mul_examples():
    assert gf2_mul(0b11, 0b11) == 0b101
    assert gf2_mul(1, 0b1011011) == 0b1011011
    # frozen from the schoolbook oracle
    assert gf2_mul(0b1011, 0b1101) == 127 == schoolbook_mul(0b1011, 0b1101)


@settings(max_examples=300)
@given(st.integers(0, 1 << 300), st.integers(0, 1 << 300))
def test_mul_matches_schoolbook(a, b):
    assert gf2_mul(a, b) == schoolbook_mul(a, b)


@pytest.mark.parametrize("nbits", [70, 600, 5000])
def test_mul_wide_operands(nbits):
    rnd = random.Random(nbits)
    a, b = rnd.getrandbits(nbits), rnd.getrandbits(nbits)
    assert gf2_mul(a, b) == schoolbook_mul(a, b)


def test_mod_examples():
    assert gf2_mod(0b1000, 0b1011) == 0b11
    assert gf2_mod(0b100, 0b111) == 0b11
    assert gf2_mod(0b101, 0b10011) == 0b101
    with pytest.raises(ZeroDivisionError):
        gf2_mod(5, 0)


@settings(max_examples=300)
@given(st.integers(0, 1 << 2000), st.sampled_from([
    from_exponents(0, 1, 3), from_exponents(0, 9, 127), from_exponents(0, 3, 5, 8, 200),
    0b1111111111, (1 << 64) | 0x1B,
]))
def test_mod_matches_long_division(a, q):
    assert gf2_mod(a, q) == long_division_mod(a, q)


def test_square_is_substitution(rng):
    for _ in range(10_000):
        x = rng.getrandbits(rng.choice([8, 40, 300]))
        spread = sum(1 << (2 * j) for j in range(x.bit_length()) if x >> j & 1)
        assert gf2_square(x) == spread == schoolbook_mul(x, x)


def test_irreducible_examples():
    assert is_irreducible(0b111)
    assert not is_irreducible(0b101)
    assert is_irreducible(from_exponents(0, 1, 2, 4, 6))


def test_irreducible_matches_trial_division():
    for r in range(1, 13):
        for q in range(1 << r, 1 << (r + 1)):
            assert is_irreducible(q) == trial_irreducible(q), bin(q)


def test_order_examples():
    assert order_of_t(from_exponents(0, 1, 2, 4, 6)) == 21
    assert order_of_t(0b111) == 3
    assert order_of_t(from_exponents(0, 2, 5)) == 31 == brute_order_mod2(from_exponents(0, 2, 5))
    with pytest.raises(ReducibleError):
        order_of_t(0b101)


def test_order_properties_exhaustive():
    for q in irreducible_patterns(16):
        r = q.bit_length() - 1
        lam = order_of_t(q)
        assert ((1 << r) - 1) % lam == 0
        assert gf2poly.gf2_powmod(2, lam, q) == gf2_mod(1, q)
        for p, _ in trial_factor(lam):
            assert gf2poly.gf2_powmod(2, lam // p, q) != gf2_mod(1, q)


def test_order_matches_brute_small():
    for q in irreducible_patterns(10):
        assert order_of_t(q) == brute_order_mod2(q)


def test_primitive_examples():
    assert not is_primitive(from_exponents(0, 1, 2, 4, 6))
    assert is_primitive(0b1011)
    assert is_primitive(0b11)
    assert not is_primitive(0b10)


def test_primitive_implies_irreducible(rng):
    for _ in range(10_000):
        r = rng.randint(1, 32)
        q = rng.getrandbits(r) | 1 << r
        if is_primitive(q):
            assert is_irreducible(q)


def test_primitive_mersenne_shortcut_agrees():
    # degree 7 and 13: 2^r - 1 prime, so primitive == irreducible
    for r in (7, 13):
        for q in range((1 << r) | 1, 1 << (r + 1), 2):
            assert is_primitive(q) == is_irreducible(q)


def test_large_degree_needs_factorization():
    with pytest.raises(ValueError):
        is_primitive(from_exponents(0, 1, 70))


@pytest.mark.slow
def test_large_mersenne_trinomials():
    assert is_primitive(from_exponents(0, 9842, 19937))
    assert is_primitive(from_exponents(0, 9739, 23209))


def test_factor_examples():
    assert factor_mersenne(6).factors == ((3, 2), (7, 1))
    assert factor_mersenne(11).factors == tuple(trial_factor(2047)) == ((23, 1), (89, 1))
    assert factor_mersenne(29).factors == tuple(trial_factor(2**29 - 1))
    assert factor_mersenne(29).factors == ((233, 1), (1103, 1), (2089, 1))


@pytest.mark.parametrize("r", range(1, 65))
def test_factor_all_degrees(r):
    fac = factor_mersenne(r)
    prod = 1
    for p, e in fac.factors:
        assert is_prime_mr(p)
        prod *= p**e
    assert prod == (1 << r) - 1


def test_factorization_validates():
    with pytest.raises(ValueError):
        Factorization(12, ((2, 2), (5, 1)))


def test_euler_phi():
    assert euler_phi(Factorization(3, ((3, 1),))) == 2
    assert euler_phi(Factorization(31, ((31, 1),))) == 30
    assert euler_phi(factor_mersenne(11)) == 1936 == gcd_count_phi(2047)
    for r in range(1, 13):
        assert euler_phi(factor_mersenne(r)) == gcd_count_phi((1 << r) - 1)
