"""Ring arithmetic, substitution homomorphisms and canonical forms."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from prepieri.algebra import (
    IncompatibleRingError,
    Kind,
    Polynomial,
    first_difference,
    gen_H,
    gen_X,
    gen_g,
    gen_h,
    gen_lam,
)

WORD = Kind.WORD
EXP = Kind.EXPONENT


def wpoly(*terms):
    """Word polynomial from (coefficient, generators...) tuples."""
    return Polynomial.from_terms(WORD, [(tuple(gens), c) for c, *gens in terms])


def gpoly(g):
    return Polynomial.from_generator(g)


class TestGenerators:
    def test_arity_is_validated(self):
        with pytest.raises(ValueError):
            gen_H(1, 2)  # type: ignore[call-arg]
        with pytest.raises(ValueError):
            gen_h(1)  # type: ignore[call-arg]

    def test_column_index_must_be_positive(self):
        with pytest.raises(ValueError):
            gen_h(3, 0)
        with pytest.raises(ValueError):
            gen_X(3, -1)
        # g and lam indices are unrestricted
        gen_g(-4, -7)
        gen_lam(-1)

    def test_render(self):
        assert gen_h(1, 2).render() == "h[1,2]"
        assert gen_X(0, 1).render() == "X[0,1]"
        assert gen_H(3).render() == "H[3]"
        assert gen_g(-1, 0).render() == "g[-1,0]"
        assert gen_lam(4).render() == "h[4]"


class TestMultiplication:
    def test_single_word_concatenation(self):
        product = gpoly(gen_h(1, 1)) * gpoly(gen_h(2, 2))
        assert product == wpoly((1, gen_h(1, 1), gen_h(2, 2)))

    def test_distributes_preserving_order(self):
        left = gpoly(gen_h(1, 1)) + gpoly(gen_h(2, 2))
        product = left * gpoly(gen_h(1, 1))
        assert product == wpoly(
            (1, gen_h(1, 1), gen_h(1, 1)),
            (1, gen_h(2, 2), gen_h(1, 1)),
        )

    def test_commutative_product_sorts_generators(self):
        h1, h2 = gen_lam(1), gen_lam(2)
        product = Polynomial.from_generator(h2, EXP) * Polynomial.from_generator(h1, EXP)
        assert product.terms == {((h1, 1), (h2, 1)): 1}

    def test_exponents_merge(self):
        h1 = Polynomial.from_generator(gen_lam(1), EXP)
        assert (h1 * h1).terms == {((gen_lam(1), 2),): 1}
        assert h1**3 == h1 * h1 * h1

    def test_scalar_multiplication(self):
        p = gpoly(gen_h(1, 1))
        assert 3 * p == p + p + p
        assert (0 * p).is_zero()
        assert -p == (-1) * p

    def test_mixed_kinds_rejected(self):
        p = gpoly(gen_h(1, 1))
        q = Polynomial.from_generator(gen_lam(1), EXP)
        with pytest.raises(IncompatibleRingError):
            p * q
        with pytest.raises(IncompatibleRingError):
            p + q


class TestEquality:
    def test_difference_with_self_is_zero(self):
        p = wpoly((2, gen_h(1, 1)), (-1, gen_h(0, 2), gen_h(1, 1)))
        assert (p - p).is_zero()
        assert p - p == Polynomial.zero(WORD)

    def test_word_order_matters(self):
        assert wpoly((1, gen_h(1, 1), gen_h(2, 2))) != wpoly((1, gen_h(2, 2), gen_h(1, 1)))

    def test_commutative_order_does_not(self):
        h1 = Polynomial.from_generator(gen_lam(1), EXP)
        h2 = Polynomial.from_generator(gen_lam(2), EXP)
        assert h1 * h2 == h2 * h1

    def test_kind_mismatch_is_unequal(self):
        assert Polynomial.one(WORD) != Polynomial.one(EXP)


# small deterministic universe for exhaustive ring-axiom checks
_MONOMIALS = [(), (gen_h(0, 1),), (gen_h(1, 2),)]
_SMALL_POLYS = [Polynomial.zero(WORD)]
for _count in (1, 2):
    for _keys in itertools.combinations(_MONOMIALS, _count):
        for _coeffs in itertools.product((-2, 1), repeat=_count):
            _SMALL_POLYS.append(Polynomial.from_terms(WORD, zip(_keys, _coeffs)))


class TestRingAxioms:
    def test_unit_is_neutral(self):
        one = Polynomial.one(WORD)
        for p in _SMALL_POLYS:
            assert one * p == p == p * one

    def test_associativity_exhaustive(self):
        for p, q, r in itertools.product(_SMALL_POLYS, repeat=3):
            assert (p * q) * r == p * (q * r)

    def test_distributivity_exhaustive(self):
        for p, q, r in itertools.product(_SMALL_POLYS, repeat=3):
            assert p * (q + r) == p * q + p * r
            assert (p + q) * r == p * r + q * r


_GENS = [gen_h(0, 1), gen_h(1, 1), gen_h(1, 2)]


def word_polys():
    words = st.lists(st.sampled_from(_GENS), max_size=2).map(tuple)
    terms = st.lists(st.tuples(words, st.integers(-3, 3)), max_size=3)
    return terms.map(lambda items: Polynomial.from_terms(WORD, items))


@given(word_polys(), word_polys(), word_polys())
@settings(max_examples=150, deadline=None)
def test_ring_axioms_randomized(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert (p + q) * r == p * r + q * r
    assert p + q == q + p


_IMAGES = {
    gen_h(0, 1): Polynomial.zero(WORD),
    gen_h(1, 1): gpoly(gen_h(2, 2)) + Polynomial.one(WORD),
    gen_h(1, 2): gpoly(gen_h(1, 2)) * gpoly(gen_h(0, 1)),
}


@given(word_polys(), word_polys())
@settings(max_examples=150, deadline=None)
def test_substitute_is_a_homomorphism(p, q):
    assert (p * q).substitute(_IMAGES) == p.substitute(_IMAGES) * q.substitute(_IMAGES)
    assert (p + q).substitute(_IMAGES) == p.substitute(_IMAGES) + q.substitute(_IMAGES)


class TestSubstitute:
    def test_annihilating_one_factor_kills_the_word(self):
        p = wpoly((1, gen_h(-1, 1), gen_h(3, 2)))
        out = p.substitute({gen_h(-1, 1): Polynomial.zero(WORD)})
        assert out.is_zero()

    def test_identity_map_fixes_everything(self):
        p = wpoly((2, gen_h(1, 1), gen_h(2, 2)), (-1, gen_h(0, 1)))
        assert p.substitute({}) == p
        assert p.substitute(lambda g: None) is p  # untouched-support fast path

    def test_grid_reindexing_image(self):
        # X[k,i] -> h[alpha_i + k, i] on a two-letter word
        alpha = (2, -1)
        word = wpoly((1, gen_X(3, 1), gen_X(0, 2)))
        image = lambda g: (
            Polynomial.from_generator(gen_h(alpha[g.indices[1] - 1] + g.indices[0], g.indices[1]))
            if g.family == "X2"
            else None
        )
        assert word.substitute(image) == wpoly((1, gen_h(5, 1), gen_h(-1, 2)))

    def test_image_kind_must_match(self):
        p = gpoly(gen_h(1, 1))
        bad = {gen_h(1, 1): Polynomial.one(EXP)}
        with pytest.raises(IncompatibleRingError):
            p.substitute(bad)

    def test_no_map_from_commutative_to_word(self):
        p = Polynomial.from_generator(gen_lam(1), EXP)
        with pytest.raises(IncompatibleRingError):
            p.substitute({}, kind=WORD)

    def test_to_commutative_identifies_word_orders(self):
        ab = gpoly(gen_h(1, 1)) * gpoly(gen_h(2, 2))
        ba = gpoly(gen_h(2, 2)) * gpoly(gen_h(1, 1))
        assert ab != ba
        assert ab.to_commutative() == ba.to_commutative()
        assert ab.to_commutative().kind is EXP


class TestCanonicalForm:
    def test_zero_coefficients_are_dropped(self):
        p = Polynomial(WORD, {(): 0, (gen_h(1, 1),): 2})
        assert p.terms == {(gen_h(1, 1),): 2}

    def test_from_terms_merges_duplicates(self):
        key = (gen_h(1, 1),)
        p = Polynomial.from_terms(WORD, [(key, 2), (key, -2), ((), 5)])
        assert p.terms == {(): 5}

    def test_canonicalization_is_idempotent(self):
        items = [((gen_h(1, 1),), 3), ((gen_h(1, 1),), -1), ((), 4)]
        once = Polynomial.from_terms(WORD, items)
        twice = Polynomial.from_terms(WORD, once.terms.items())
        assert once == twice and once.terms == twice.terms


class TestRendering:
    def test_zero(self):
        assert Polynomial.zero(WORD).render() == "0"

    def test_signed_sum_in_canonical_order(self):
        p = wpoly((-1, gen_h(3, 1)), (2,), (1, gen_h(1, 1), gen_h(2, 2)))
        assert p.render() == "2 - h[3,1] + h[1,1]*h[2,2]"

    def test_exponent_rendering(self):
        h1 = Polynomial.from_generator(gen_lam(1), EXP)
        h2 = Polynomial.from_generator(gen_lam(2), EXP)
        assert (h1 * h1 * h2).render() == "h[1]^2*h[2]"


class TestFirstDifference:
    def test_equal_polynomials_have_none(self):
        p = wpoly((1, gen_h(1, 1)))
        assert first_difference(p, p) is None

    def test_reports_earliest_monomial(self):
        p = wpoly((1, gen_h(1, 1)), (4, gen_h(2, 1)))
        q = wpoly((1, gen_h(1, 1)), (3, gen_h(2, 1)))
        assert first_difference(p, q) == ("h[2,1]", 4, 3)
