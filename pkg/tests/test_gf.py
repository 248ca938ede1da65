"""Finite fields: shipped polynomial table, axioms, Frobenius, orders."""

import random

import pytest

from radlab.errors import PreconditionError
from radlab.gf import GF, _IRRED_TABLE, _is_irreducible, _lex_least_irreducible

SMALL_Q = (2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 49, 64, 81)


def test_shipped_table_matches_search_rule():
    # the literal table must equal the deterministic search it caches
    for (r, a), enc in _IRRED_TABLE.items():
        assert _lex_least_irreducible(r, a) == enc, (r, a)


def test_table_entries_are_irreducible():
    for (r, a), enc in _IRRED_TABLE.items():
        coeffs = []
        m = enc
        for _ in range(a):
            coeffs.append(m % r)
            m //= r
        poly = coeffs + [1]  # monic of degree a
        assert _is_irreducible(poly, r), (r, a)


def test_gf_rejects_non_prime_powers():
    for q in (1, 6, 12, 100):
        with pytest.raises(PreconditionError):
            GF(q)


def test_prime_field_is_mod_p():
    k = GF(13)
    for x in range(13):
        for y in range(13):
            assert k.add(x, y) == (x + y) % 13
            assert k.mul(x, y) == (x * y) % 13


def test_char2_addition_is_xor():
    for q in (2, 4, 8, 16, 64):
        k = GF(q)
        for x in range(q):
            for y in range(q):
                assert k.add(x, y) == x ^ y


def test_field_axioms_exhaustive_small():
    for q in (4, 8, 9):
        k = GF(q)
        els = list(k.elements())
        for x in els:
            assert k.add(x, 0) == x and k.mul(x, 1) == x
            assert k.add(x, k.neg(x)) == 0
            if x:
                assert k.mul(x, k.inv(x)) == 1
            for y in els:
                assert k.add(x, y) == k.add(y, x)
                assert k.mul(x, y) == k.mul(y, x)
                for z in els:
                    assert k.add(k.add(x, y), z) == k.add(x, k.add(y, z))
                    assert k.mul(k.mul(x, y), z) == k.mul(x, k.mul(y, z))
                    assert k.mul(x, k.add(y, z)) == k.add(k.mul(x, y), k.mul(x, z))


def test_field_axioms_sampled_larger():
    rng = random.Random(5)
    for q in (25, 27, 49, 64, 81, 121, 128):
        k = GF(q)
        for _ in range(200):
            x, y, z = (rng.randrange(q) for _ in range(3))
            assert k.mul(x, k.add(y, z)) == k.add(k.mul(x, y), k.mul(x, z))
            assert k.mul(k.mul(x, y), z) == k.mul(x, k.mul(y, z))
            if x:
                assert k.mul(x, k.inv(x)) == 1
            assert k.sub(k.add(x, y), y) == x


def test_frobenius_is_field_automorphism():
    # x -> x^r is additive and multiplicative; exhaustive through q = 81
    for q in SMALL_Q:
        k = GF(q)
        for x in k.elements():
            for y in k.elements():
                assert k.frobenius(k.add(x, y)) == k.add(k.frobenius(x), k.frobenius(y))
                assert k.frobenius(k.mul(x, y)) == k.mul(k.frobenius(x), k.frobenius(y))


def test_frobenius_power_and_identity():
    for q in (8, 9, 27, 64, 81):
        k = GF(q)
        for x in k.elements():
            assert k.frobenius(x, k.deg) == x  # full power is the identity
            assert k.frobenius(x, 2) == k.frobenius(k.frobenius(x))
            assert k.frobenius(x) == k.pow(x, k.char)


def test_inv_of_zero_rejected():
    k = GF(9)
    with pytest.raises(ZeroDivisionError):
        k.inv(0)
    with pytest.raises(ZeroDivisionError):
        k.div(1, 0)
    with pytest.raises(ZeroDivisionError):
        k.pow(0, -1)


def test_pow_handles_negative_exponents():
    for q in (7, 9, 16):
        k = GF(q)
        for x in range(1, q):
            assert k.mul(k.pow(x, -1), x) == 1
            assert k.pow(x, -3) == k.inv(k.pow(x, 3))
            assert k.pow(x, 0) == 1


def test_generator_has_full_order():
    for q in SMALL_Q:
        k = GF(q)
        g = k.generator()
        assert k.element_order(g) == q - 1
        # and the powers of g exhaust the nonzero elements
        seen = set()
        cur = 1
        for _ in range(q - 1):
            seen.add(cur)
            cur = k.mul(cur, g)
        assert len(seen) == q - 1


def test_element_order_divides_group_order():
    for q in (16, 25, 27, 81):
        k = GF(q)
        for x in range(1, q):
            o = k.element_order(x)
            assert (q - 1) % o == 0
            assert k.pow(x, o) == 1
            assert all(k.pow(x, d) != 1 for d in range(1, o))


def test_subfield_embedding_consistency():
    # 0 and 1 are the additive and multiplicative identities in every encoding
    for q in SMALL_Q:
        k = GF(q)
        assert k.add(0, 0) == 0 and k.mul(1, 1) == 1 and k.neg(0) == 0
