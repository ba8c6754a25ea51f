"""Both pre-Pieri identities, their worked examples and the corollaries."""

import random

import pytest

from prepieri.algebra import Kind, Polynomial, gen_h, gen_lam
from prepieri.rules import (
    PieriContext,
    cor_e_sides,
    cor_h_sides,
    e_block,
    first_rule_sides,
    h_entry,
    kill_negative,
    s_poly,
    second_rule_sides,
    t_alpha,
    verify_cor_e,
    verify_cor_h,
    verify_first,
    verify_second,
)
from prepieri.schur import h_poly, jacobi_trudi

WORD = Kind.WORD


def hp(k, i):
    return Polynomial.from_generator(gen_h(k, i))


def words(*terms):
    return Polynomial.from_terms(WORD, [(tuple(gens), c) for c, *gens in terms])


class TestContext:
    def test_alpha_length_checked(self):
        with pytest.raises(ValueError):
            PieriContext(2, 1, (0,))
        with pytest.raises(ValueError):
            PieriContext(0, 1, ())

    def test_fields_are_normalized(self):
        ctx = PieriContext(2, 1, [1, 2], {2})
        assert ctx.alpha == (1, 2)
        assert ctx.negative_kill == frozenset({2})


class TestTAlpha:
    def test_one_by_one(self):
        assert t_alpha(PieriContext(1, 0, (4,))) == hp(5, 1)

    def test_two_by_two_expansion(self):
        expected = words((1, gen_h(1, 1), gen_h(2, 2)), (-1, gen_h(2, 1), gen_h(1, 2)))
        assert t_alpha(PieriContext(2, 0, (0, 0))) == expected

    def test_kill_without_negatives_is_a_no_op(self):
        plain = t_alpha(PieriContext(2, 0, (0, 0)))
        killed = t_alpha(PieriContext(2, 0, (0, 0), {2}))
        assert plain == killed

    def test_kill_erases_negative_column_entries(self):
        # alpha = (0, -3): the second row holds h[-2,2] and h[-1,2], so
        # both expansion words die under the column-2 kill
        raw = t_alpha(PieriContext(2, 0, (0, -3)))
        assert raw == words((1, gen_h(1, 1), gen_h(-1, 2)), (-1, gen_h(2, 1), gen_h(-2, 2)))
        assert t_alpha(PieriContext(2, 0, (0, -3), {2})).is_zero()


class TestFirstRule:
    def test_worked_example_term_for_term(self):
        """The displayed n=2, p=2 identity, frozen per-addend."""
        lhs, rhs = first_rule_sides(PieriContext(2, 2, (0, 0)))
        addend_20 = words((1, gen_h(3, 1), gen_h(2, 2)), (-1, gen_h(4, 1), gen_h(1, 2)))
        addend_11 = words((1, gen_h(2, 1), gen_h(3, 2)), (-1, gen_h(3, 1), gen_h(2, 2)))
        addend_02 = words((1, gen_h(1, 1), gen_h(4, 2)), (-1, gen_h(2, 1), gen_h(3, 2)))
        assert t_alpha(PieriContext(2, 2, (2, 0))) == addend_20
        assert t_alpha(PieriContext(2, 2, (1, 1))) == addend_11
        assert t_alpha(PieriContext(2, 2, (0, 2))) == addend_02
        total = addend_20 + addend_11 + addend_02
        expected = words((1, gen_h(1, 1), gen_h(4, 2)), (-1, gen_h(4, 1), gen_h(1, 2)))
        assert lhs == total == expected == rhs

    def test_single_row_case(self):
        for p in range(0, 5):
            lhs, rhs = first_rule_sides(PieriContext(1, p, (-2,)))
            assert lhs == rhs == hp(-1 + p, 1)

    def test_n3_p2_full_expansion(self):
        assert verify_first(PieriContext(3, 2, (0, 0, 0)))

    def test_random_alphas(self):
        rng = random.Random(31)
        for n in range(1, 5):
            for p in range(0, 4):
                alpha = tuple(rng.randint(-3, 3) for _ in range(n))
                assert verify_first(PieriContext(n, p, alpha))

    def test_negative_p_rejected(self):
        with pytest.raises(ValueError):
            first_rule_sides(PieriContext(2, -1, (0, 0)))


class TestSecondRule:
    def test_worked_example_term_for_term(self):
        """The displayed n=3, p=2 identity against the xi columns (1,3,4)."""
        lhs, rhs = second_rule_sides(PieriContext(3, 2, (0, 0, 0)))
        shifted = [
            t_alpha(PieriContext(3, 2, beta))
            for beta in ((1, 1, 0), (1, 0, 1), (0, 1, 1))
        ]
        assert lhs == shifted[0] + shifted[1] + shifted[2] == rhs

    def test_p_zero_and_p_n(self):
        rng = random.Random(32)
        for n in range(1, 5):
            alpha = tuple(rng.randint(-3, 3) for _ in range(n))
            lhs, rhs = second_rule_sides(PieriContext(n, 0, alpha))
            assert lhs == rhs == t_alpha(PieriContext(n, 0, alpha))
            lhs, rhs = second_rule_sides(PieriContext(n, n, alpha))
            shifted = tuple(a + 1 for a in alpha)
            assert lhs == rhs == t_alpha(PieriContext(n, n, shifted))

    def test_random_alphas(self):
        rng = random.Random(33)
        for n in range(1, 5):
            for p in range(0, n + 1):
                alpha = tuple(rng.randint(-3, 3) for _ in range(n))
                assert verify_second(PieriContext(n, p, alpha))

    def test_out_of_range_p_rejected(self):
        with pytest.raises(ValueError):
            second_rule_sides(PieriContext(2, 3, (0, 0)))


class TestCorollaryH:
    def test_factorization_small_sweep(self):
        for a1 in (-2, 0, 1, 3):
            for p in range(0, 4):
                ctx = PieriContext(2, p, (a1, -2), {2})
                assert verify_cor_h(ctx, mode="alpha")

    def test_negative_p_degenerates_to_zero(self):
        ctx = PieriContext(3, -2, (1, 0, -3), {3})
        lhs, rhs = cor_h_sides(ctx, mode="alpha")
        assert lhs.is_zero() and rhs.is_zero()

    def test_mu_form_length_one(self):
        # mu = (0): the leading factor is the empty determinant, so the
        # identity reads h[p,1] = s_(p)
        for p in range(0, 4):
            ctx = PieriContext(1, p, (0,), {1})
            lhs, rhs = cor_h_sides(ctx, mode="mu")
            assert lhs == rhs == hp(p, 1)

    def test_mu_form_zero_pair(self):
        for p in range(0, 4):
            ctx = PieriContext(2, p, (0, 0), {2})
            lhs, rhs = cor_h_sides(ctx, mode="mu")
            assert lhs == rhs
            assert lhs == s_poly((0,), frozenset({2})) * hp(p, 2)

    def test_mu_form_random(self):
        rng = random.Random(34)
        for n in range(1, 5):
            for p in range(-1, 4):
                mu = tuple(rng.randint(-2, 3) for _ in range(n - 1)) + (0,)
                assert verify_cor_h(PieriContext(n, p, mu, {n}), mode="mu")

    def test_preconditions(self):
        with pytest.raises(ValueError, match="negative_kill"):
            cor_h_sides(PieriContext(2, 1, (0, -2)), mode="alpha")
        with pytest.raises(ValueError, match="alpha_n"):
            cor_h_sides(PieriContext(2, 1, (0, -1), {2}), mode="alpha")
        with pytest.raises(ValueError, match="mu_n"):
            cor_h_sides(PieriContext(2, 1, (0, 1), {2}), mode="mu")
        with pytest.raises(ValueError, match="mode"):
            cor_h_sides(PieriContext(2, 1, (0, 0), {2}), mode="nu")


class TestCorollaryE:
    def test_mu_form_n2(self):
        for m in (-1, 0, 2):
            ctx = PieriContext(2, 1, (m, 0), {2})
            assert verify_cor_e(ctx, mode="mu")

    def test_p_zero_keeps_everything(self):
        rng = random.Random(35)
        for n in range(1, 5):
            mu = tuple(rng.randint(-2, 3) for _ in range(n))
            ctx = PieriContext(n, 0, mu, frozenset())
            lhs, rhs = cor_e_sides(ctx, mode="mu")
            assert e_block(0, n) == Polynomial.one(WORD)
            assert lhs == rhs == s_poly(mu)

    def test_mu_form_n3_p2(self):
        for m in (-1, 0, 1, 3):
            ctx = PieriContext(3, 2, (m, 0, 0), {2, 3})
            assert verify_cor_e(ctx, mode="mu")

    def test_alpha_form_sweep(self):
        rng = random.Random(36)
        for n in range(1, 5):
            for p in range(0, n + 1):
                q = n - p
                kill = frozenset(range(q + 1, n + 1))
                alpha = tuple(rng.randint(-2, 2) for _ in range(q)) + tuple(
                    -q - 1 - rng.randint(0, 2) for _ in range(p)
                )
                assert verify_cor_e(PieriContext(n, p, alpha, kill), mode="alpha")

    def test_preconditions(self):
        with pytest.raises(ValueError, match="p in 0..2"):
            cor_e_sides(PieriContext(2, 3, (0, 0), {2}), mode="alpha")
        with pytest.raises(ValueError, match="negative_kill"):
            cor_e_sides(PieriContext(3, 2, (0, -2, -2), {3}), mode="alpha")
        with pytest.raises(ValueError, match="alpha_i"):
            cor_e_sides(PieriContext(2, 1, (0, 0), {2}), mode="alpha")
        with pytest.raises(ValueError, match="mu_i"):
            cor_e_sides(PieriContext(2, 1, (0, 1), {2}), mode="mu")


class TestCommutativeSpecializations:
    def test_both_sides_survive_abelianization(self):
        rng = random.Random(37)
        for n in range(1, 4):
            for p in range(0, 3):
                alpha = tuple(rng.randint(-2, 2) for _ in range(n))
                lhs, rhs = first_rule_sides(PieriContext(n, p, alpha))
                assert lhs.to_commutative() == rhs.to_commutative()
                if p <= n:
                    lhs, rhs = second_rule_sides(PieriContext(n, p, alpha))
                    assert lhs.to_commutative() == rhs.to_commutative()

    def test_corollary_images_are_the_commutative_statements(self):
        # the commutative corollaries are the abelianized noncommutative ones
        rng = random.Random(38)
        for n in range(1, 4):
            for p in range(-1, 3):
                alpha = tuple(rng.randint(-2, 2) for _ in range(n - 1)) + (-n,)
                lhs, rhs = cor_h_sides(PieriContext(n, p, alpha, {n}), mode="alpha")
                assert lhs.to_commutative() == rhs.to_commutative()
                mu = tuple(rng.randint(-2, 2) for _ in range(n - 1)) + (0,)
                lhs, rhs = cor_h_sides(PieriContext(n, p, mu, {n}), mode="mu")
                assert lhs.to_commutative() == rhs.to_commutative()

    def test_fresh_commutative_images_preserve_the_identity(self):
        # send each h[k,i] to a distinct commutative generator
        def image(g):
            if g.family == "h2":
                k, i = g.indices
                return Polynomial.from_generator(gen_lam(100 * i + (k + 50)), Kind.EXPONENT)
            return None

        lhs, rhs = first_rule_sides(PieriContext(3, 2, (0, -1, 2)))
        assert lhs.substitute(image, Kind.EXPONENT) == rhs.substitute(image, Kind.EXPONENT)


def lam_specialization(g):
    """h[k,i] -> the single-index commutative h_k (with its conventions)."""
    if g.family == "h2":
        return h_poly(g.indices[0])
    return None


class TestLambdaSpecialization:
    def test_mu_form_matches_jacobi_trudi_rule(self):
        # under h[k,i] -> h_k the mu-form corollary is the alternative
        # Pieri rule for Schur polynomials
        for lam in ((), (1,), (2, 1), (3, 1, 1)):
            for p in range(0, 3):
                n = len(lam) + 1
                mu = lam + (0,)
                lhs, rhs = cor_h_sides(PieriContext(n, p, mu, {n}), mode="mu")
                lhs_c = lhs.substitute(lam_specialization, Kind.EXPONENT)
                rhs_c = rhs.substitute(lam_specialization, Kind.EXPONENT)
                assert lhs_c == rhs_c == jacobi_trudi(lam) * h_poly(p)


class TestHelpers:
    def test_h_entry_respects_kill(self):
        assert h_entry(-1, 2, frozenset({2})).is_zero()
        assert h_entry(-1, 1, frozenset({2})) == hp(-1, 1)
        assert h_entry(0, 2, frozenset({2})) == hp(0, 2)

    def test_kill_negative_on_sums(self):
        poly = words((1, gen_h(-1, 1), gen_h(2, 2)), (3, gen_h(1, 1)))
        assert kill_negative(poly, {1}) == words((3, gen_h(1, 1)))
        assert kill_negative(poly, {2}) == poly
