"""Exponent-vector arithmetic: construction, parsing, products, enumeration."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from steengraph.algebra import (
    ENV_MAX_N,
    UNTRUNCATED,
    Level,
    Monomial,
    ParseError,
    Polynomial,
    alpha,
    enumerate_monomials,
    monomial_count,
    monomial_from_index,
    monomial_product,
    parse_monomial,
    random_monomials,
    truncate_monomial,
    truncate_polynomial,
)

L0, L1, L2, L3 = Level(0), Level(1), Level(2), Level(3)


def monomials(level, max_size=24):
    """Strategy for valid monomials of a truncated level."""
    bounds = [level.exponent_bound(i) for i in range(1, level.n + 2)]
    return st.tuples(*[st.integers(0, b) for b in bounds]).map(
        lambda exps: Monomial(level, exps)
    )


class TestLevel:
    def test_exponent_bounds(self):
        assert [L3.exponent_bound(i) for i in range(1, 5)] == [15, 7, 3, 1]
        assert L0.exponent_bound(1) == 1

    def test_counts(self):
        assert L2.generator_count == 3
        assert L2.vertex_count == 4
        assert not UNTRUNCATED.truncated
        assert L2.truncated

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            Level(-1)

    def test_cap_and_env_override(self, monkeypatch):
        monkeypatch.delenv(ENV_MAX_N, raising=False)
        with pytest.raises(ValueError):
            Level(13)
        monkeypatch.setenv(ENV_MAX_N, "20")
        assert Level(14).n == 14
        monkeypatch.setenv(ENV_MAX_N, "junk")
        with pytest.raises(ValueError):
            Level(3)

    def test_generator_validity(self):
        assert L2.generator_valid(3)
        assert not L2.generator_valid(4)
        assert not L2.generator_valid(0)
        assert UNTRUNCATED.generator_valid(100)

    def test_untruncated_has_no_bounds(self):
        with pytest.raises(ValueError):
            UNTRUNCATED.exponent_bound(1)
        with pytest.raises(ValueError):
            UNTRUNCATED.vertex_count


class TestMonomial:
    def test_exponent_bound_enforced(self):
        with pytest.raises(ValueError):
            Monomial(L2, (8, 0, 0))
        with pytest.raises(ValueError):
            Monomial(L2, (0, 0, 2))
        with pytest.raises(ValueError):
            Monomial(L2, (0, 0, 0, 1))

    def test_short_vectors_pad(self):
        assert Monomial(L2, (3,)) == Monomial(L2, (3, 0, 0))

    def test_untruncated_strips_trailing_zeros(self):
        assert Monomial(UNTRUNCATED, (1, 0, 2, 0, 0)).exponents == (1, 0, 2)
        assert Monomial(UNTRUNCATED, (0, 0)).is_one

    def test_unit(self):
        one = Monomial.one(L2)
        assert one.is_one and one.edge_count == 0 and str(one) == "1"

    def test_generator_power(self):
        g = Monomial.generator_power(2, 1, L3)
        assert g.exponents == (0, 2, 0, 0)
        with pytest.raises(ValueError):
            Monomial.generator_power(3, 2, L3)
        with pytest.raises(ValueError):
            Monomial.generator_power(0, 0, L3)

    def test_dyadic_bits(self):
        x = parse_monomial("xi1^6 xi3^2", L3)
        assert [(b.generator, b.power) for b in x.dyadic_bits()] == [
            (1, 1),
            (1, 2),
            (3, 1),
        ]
        assert x.edge_count == 3

    def test_edge_bit_matches_binary_expansion(self):
        for x in enumerate_monomials(L2):
            for q in range(1, 4):
                for p in range(q):
                    assert x.edge_bit(p, q) == (x.exponent(q - p) >> p) & 1

    def test_edge_bit_range_errors(self):
        x = Monomial.one(L2)
        with pytest.raises(ValueError):
            x.edge_bit(2, 2)
        with pytest.raises(ValueError):
            x.edge_bit(0, 4)

    def test_str_exponents_always_printed(self):
        assert str(parse_monomial("xi1 xi2", L2)) == "xi1^1*xi2^1"
        assert str(parse_monomial("xi1^15 xi3^2", L3)) == "xi1^15*xi3^2"

    def test_equality_and_hash(self):
        a = Monomial(L2, (3, 1, 0))
        b = parse_monomial("xi1^3 xi2", L2)
        assert a == b and hash(a) == hash(b)
        assert a != Monomial(L3, (3, 1, 0, 0))


class TestAlpha:
    def test_values(self):
        assert [alpha(m) for m in (0, 1, 6, 7, 15)] == [0, 1, 2, 3, 4]

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            alpha(-1)

    @given(st.integers(0, 10**9))
    def test_matches_binary_string(self, m):
        assert alpha(m) == bin(m).count("1")


class TestParse:
    def test_grammar_forms(self):
        want = Monomial(L2, (6, 1, 1))
        assert parse_monomial("xi1^6 xi2 xi3", L2) == want
        assert parse_monomial("xi1^6*xi2*xi3", L2) == want
        assert parse_monomial("  xi1^6 * xi2 xi3 ", L2) == want
        assert parse_monomial("[6,1,1]", L2) == want

    def test_unit_forms(self):
        assert parse_monomial("1", L2).is_one
        assert parse_monomial("[0,0,0]", L2).is_one

    def test_repeated_generators_accumulate(self):
        assert parse_monomial("xi1 xi1^2", L2) == Monomial(L2, (3, 0, 0))

    def test_untruncated(self):
        x = parse_monomial("xi7^5", UNTRUNCATED)
        assert x.exponent(7) == 5

    def test_errors_name_the_problem(self):
        with pytest.raises(ParseError, match="xi9"):
            parse_monomial("xi9", L2)
        with pytest.raises(ParseError, match="exceeds bound"):
            parse_monomial("xi1^8", L2)
        with pytest.raises(ParseError, match="bad term"):
            parse_monomial("zeta1", L2)
        with pytest.raises(ParseError, match="alone"):
            parse_monomial("1 xi1", L2)
        with pytest.raises(ParseError):
            parse_monomial("", L2)
        with pytest.raises(ParseError, match="3 entries"):
            parse_monomial("[1,2,3]", L1)
        with pytest.raises(ParseError, match="bad exponent"):
            parse_monomial("[1,x,0]", L2)

    def test_round_trip_exhaustive_small(self):
        for level in (L0, L1, L2):
            for x in enumerate_monomials(level):
                assert parse_monomial(str(x), level) == x

    @given(monomials(L3))
    def test_round_trip_random(self, x):
        assert parse_monomial(str(x), L3) == x


class TestMultiplication:
    def test_unit_laws(self):
        one = Monomial.one(L2)
        x = parse_monomial("xi1^6 xi2 xi3", L2)
        assert x * one == x.as_polynomial()

    def test_carry_escaping_gives_zero(self):
        x = parse_monomial("xi1^4", L2)
        y = parse_monomial("xi1^4", L2)
        assert (x * y).is_zero
        assert monomial_product(x, y) is None

    def test_product_of_disjoint_bits(self):
        x = parse_monomial("xi1^2", L2)
        y = parse_monomial("xi1^4 xi2", L2)
        assert x * y == parse_monomial("xi1^6 xi2", L2).as_polynomial()

    def test_untruncated_never_dies(self):
        x = parse_monomial("xi1^9", UNTRUNCATED)
        assert (x * x) == parse_monomial("xi1^18", UNTRUNCATED).as_polynomial()

    def test_level_mismatch_rejected(self):
        with pytest.raises(ValueError):
            Monomial.one(L2) * Monomial.one(L3)

    @given(monomials(L2), monomials(L2))
    def test_commutative(self, x, y):
        assert x * y == y * x

    @given(monomials(L2), monomials(L2), monomials(L2))
    @settings(max_examples=60)
    def test_associative(self, x, y, z):
        assert (x * y) * z.as_polynomial() == x.as_polynomial() * (y * z)


class TestFrobenius:
    def test_doubles_exponents(self):
        x = parse_monomial("xi1^3 xi2", L3)
        assert x.frobenius() == parse_monomial("xi1^6 xi2^2", L3).as_polynomial()

    def test_truncation_kills(self):
        assert parse_monomial("xi2^2", L2).frobenius().is_zero

    def test_matches_repeated_squaring(self):
        p = parse_monomial("xi1", UNTRUNCATED) + parse_monomial("xi2", UNTRUNCATED)
        squared = p * p
        assert p.frobenius(1) == squared
        assert p.frobenius(2) == squared * squared


class TestPolynomial:
    def test_f2_cancellation(self):
        x = parse_monomial("xi1", L2)
        assert (x + x).is_zero
        assert Polynomial.from_terms(L2, [x, x, x]) == x.as_polynomial()

    def test_str_sorted_lexicographically(self):
        p = parse_monomial("xi1^3", L3) + parse_monomial("xi2", L3)
        assert str(p) == "xi2^1 + xi1^3"
        assert str(Polynomial.zero(L3)) == "0"

    def test_distributes(self):
        a = parse_monomial("xi1", L2)
        b = parse_monomial("xi2", L2)
        c = parse_monomial("xi1^2", L2)
        assert (a + b) * c.as_polynomial() == a * c + b * c

    def test_term_level_checked(self):
        with pytest.raises(ValueError):
            Polynomial(L2, [Monomial.one(L3)])


class TestEnumeration:
    def test_counts(self):
        assert [monomial_count(Level(n)) for n in range(4)] == [2, 8, 64, 1024]

    def test_exhaustive_unique_and_ordered(self):
        seen = list(enumerate_monomials(L1))
        assert len(seen) == 8 == len(set(seen))
        keys = [x.exponents for x in seen]
        assert keys == sorted(keys)

    def test_index_round_trip(self):
        for k, x in enumerate(enumerate_monomials(L2)):
            assert monomial_from_index(L2, k) == x
        with pytest.raises(ValueError):
            monomial_from_index(L2, 64)

    def test_random_monomials_deterministic(self):
        a = random_monomials(L3, 20, seed=7)
        b = random_monomials(L3, 20, seed=7)
        assert a == b
        assert random_monomials(L3, 20, seed=8) != a


class TestTruncation:
    def test_kills_out_of_range_generator(self):
        x = parse_monomial("xi4", UNTRUNCATED)
        assert truncate_monomial(x, L2) is None

    def test_kills_oversized_exponent(self):
        x = parse_monomial("xi1^8", UNTRUNCATED)
        assert truncate_monomial(x, L2) is None

    def test_identity_on_survivors(self):
        x = parse_monomial("xi1^7 xi3", UNTRUNCATED)
        assert truncate_monomial(x, L2) == parse_monomial("xi1^7 xi3", L2)

    def test_polynomial_termwise(self):
        p = parse_monomial("xi2", UNTRUNCATED) + parse_monomial("xi1^3", UNTRUNCATED)
        assert truncate_polynomial(p, L0).is_zero
        q = truncate_polynomial(p, L1)
        assert q == parse_monomial("xi2", L1) + parse_monomial("xi1^3", L1)
