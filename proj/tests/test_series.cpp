#include "hopfkit/series.hpp"
#include "hopfkit/words.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hopfkit;

namespace {

Series<Rational> random_series(const BasisPtr &basis, int order, std::mt19937 &rng, bool with_unit)
{
    std::uniform_int_distribution<int> coef(-4, 4);
    Series<Rational> s(basis, order);
    for (int id = with_unit ? 0 : 1; id < basis->size(); ++id)
        if (basis->degree(id) <= order && rng() % 3 == 0)
            s.add(id, make_rational(coef(rng), 1 + static_cast<long>(rng() % 3)));
    return s;
}

/// Random infinitesimal character over words: a random Lie polynomial.
Series<Rational> random_lie(const WordAlgebra &wa, int order, std::mt19937 &rng)
{
    std::uniform_int_distribution<int> coef(-3, 3);
    Series<Rational> s(wa.basis, order);
    for (int n = 1; n <= order; ++n)
        for (const auto &w : lyndon_words(wa.alphabet, n))
            s += lie_normal_form(lyndon_bracket(w, wa.alphabet), wa.basis, order) *
                 make_rational(coef(rng), static_cast<long>(n));
    return s;
}

} // namespace

TEST(GradedBasis, Invariants)
{
    GradedBasis b;
    EXPECT_EQ(b.size(), 1);
    EXPECT_EQ(b.degree(GradedBasis::unit), 0);
    b.add("a", 1);
    EXPECT_THROW(b.add("a", 1), std::invalid_argument);
    EXPECT_THROW(b.add("z", 0), std::invalid_argument);
    b.add("aa", 2);
    EXPECT_THROW(b.add("c", 1), std::invalid_argument);
    EXPECT_EQ(b.of_degree(2).size(), 1u);
    EXPECT_TRUE(b.of_degree(7).empty());
}

TEST(Series, CanonicalSparseForm)
{
    auto wa = make_word_algebra(Alphabet("ab"), 3);
    Series<Rational> s(wa.basis, 2);
    s.add("ab", 3);
    s.add("ab", -3);
    s.add("aab", 1); // above the truncation order
    EXPECT_TRUE(s.is_zero());
    Series<Rational> t(wa.basis, 3);
    t.add("a", 1);
    EXPECT_EQ((s + t).order(), 2);
}

TEST(Star, UnitLaw)
{
    auto wa = make_word_algebra(Alphabet("ab"), 4);
    std::mt19937 rng(1);
    auto s = random_series(wa.basis, 4, rng, true);
    auto one = Series<Rational>::unit(wa.basis, 4);
    EXPECT_EQ(star(one, s, wa.mu), s);
    EXPECT_EQ(star(s, one, wa.mu), s);
}

TEST(Star, ConcatenationDuality)
{
    auto wa = make_word_algebra(Alphabet("ab"), 3);
    auto a = Series<Rational>::single(wa.basis, 3, wa.basis->id("a"));
    auto b = Series<Rational>::single(wa.basis, 3, wa.basis->id("b"));
    auto p = star(a, b, wa.mu);
    EXPECT_EQ(p, Series<Rational>::single(wa.basis, 3, wa.basis->id("ab")));
}

TEST(Star, RejectsBasisMismatch)
{
    auto w1 = make_word_algebra(Alphabet("ab"), 2);
    auto w2 = make_word_algebra(Alphabet("ab"), 2);
    auto a = Series<Rational>::single(w1.basis, 2, 1);
    auto b = Series<Rational>::single(w2.basis, 2, 1);
    EXPECT_THROW(star(a, b, w1.mu), std::invalid_argument);
}

TEST(Star, Associative)
{
    auto wa = make_word_algebra(Alphabet("ab"), 5);
    std::mt19937 rng(2);
    for (int trial = 0; trial < 5; ++trial) {
        auto x = random_series(wa.basis, 5, rng, true);
        auto y = random_series(wa.basis, 5, rng, true);
        auto z = random_series(wa.basis, 5, rng, true);
        EXPECT_EQ(star(star(x, y, wa.mu), z, wa.mu), star(x, star(y, z, wa.mu), wa.mu));
    }
}

TEST(Star, GradingOnlyUsesComplementaryDegrees)
{
    auto wa = make_word_algebra(Alphabet("ab"), 4);
    std::mt19937 rng(5);
    auto x = random_series(wa.basis, 4, rng, false);
    auto y = random_series(wa.basis, 4, rng, false);
    auto full = star(x, y, wa.mu).degree_part(3);
    Series<Rational> partial(wa.basis, 4);
    for (int p = 1; p < 3; ++p)
        partial += star(x.degree_part(p), y.degree_part(3 - p), wa.mu);
    EXPECT_EQ(full, partial.degree_part(3));
    EXPECT_EQ(star_range(x, y, wa.mu, 3, 3), full);
}

TEST(ExpLog, OneLetterExponential)
{
    auto wa = make_word_algebra(Alphabet("ab"), 5);
    auto beta = Series<OscCoef>::single(wa.basis, 5, wa.basis->id("a"), OscCoef::t_power(1));
    auto g = exp_series(beta, wa.mu);
    long fact = 1;
    std::string w;
    for (int n = 1; n <= 5; ++n) {
        fact *= n;
        w += "a";
        EXPECT_EQ(g.coefficient(w), OscCoef::t_power(n, Laurent(make_rational(1, fact))));
    }
    EXPECT_EQ(g.size(), 6u);
    EXPECT_EQ(log_series(g, wa.mu), beta);
}

TEST(ExpLog, TrivialCases)
{
    auto wa = make_word_algebra(Alphabet("ab"), 3);
    Series<Rational> zero(wa.basis, 3);
    auto one = Series<Rational>::unit(wa.basis, 3);
    EXPECT_EQ(exp_series(zero, wa.mu), one);
    EXPECT_TRUE(log_series(one, wa.mu).is_zero());
    EXPECT_THROW(exp_series(one, wa.mu), std::invalid_argument);
    EXPECT_THROW(log_series(zero, wa.mu), std::invalid_argument);
}

TEST(ExpLog, RoundTrips)
{
    auto wa = make_word_algebra(Alphabet("ab"), 5);
    auto eta = shuffle_eta(wa.basis);
    std::mt19937 rng(9);
    for (int trial = 0; trial < 4; ++trial) {
        auto beta = random_lie(wa, 5, rng);
        ASSERT_TRUE(is_infinitesimal(beta, eta));
        auto gamma = exp_series(beta, wa.mu);
        EXPECT_TRUE(is_character(gamma, eta));
        EXPECT_EQ(log_series(gamma, wa.mu), beta);
        EXPECT_EQ(exp_series(log_series(gamma, wa.mu), wa.mu), gamma);
    }
}

TEST(Predicates, Examples)
{
    auto wa = make_word_algebra(Alphabet("ab"), 3);
    auto eta = shuffle_eta(wa.basis);
    auto one = Series<Rational>::unit(wa.basis, 3);
    EXPECT_TRUE(is_character(one, eta));
    EXPECT_FALSE(is_infinitesimal(one, eta));
    auto s = one;
    s.add("a", 1);
    EXPECT_FALSE(is_character(s, eta)); // a shuffle a = 2 aa forces <s,aa> = 1/2
    s.add("aa", make_rational(1, 2));
    s.add("aaa", make_rational(1, 6));
    EXPECT_TRUE(is_character(s, eta));
}

TEST(Predicates, GroupAndLieClosure)
{
    auto wa = make_word_algebra(Alphabet("ab"), 5);
    auto eta = shuffle_eta(wa.basis);
    std::mt19937 rng(13);
    auto x = random_lie(wa, 5, rng), y = random_lie(wa, 5, rng);
    EXPECT_TRUE(is_infinitesimal(commutator(x, y, wa.mu), eta));
    EXPECT_TRUE(is_character(star(exp_series(x, wa.mu), exp_series(y, wa.mu), wa.mu), eta));
    EXPECT_FALSE(is_infinitesimal(star(x, y, wa.mu), eta));
}

TEST(Serialization, Records)
{
    auto wa = make_word_algebra(Alphabet("ab"), 2);
    Series<Laurent> s(wa.basis, 2);
    s.add("ba", Laurent::monomial(-2, make_rational(-1, 2)));
    s.add("a", Laurent(1));
    auto r = serialize(s);
    ASSERT_EQ(r.size(), 2u);
    EXPECT_EQ(r[0].index, "a");
    EXPECT_EQ(r[1].degree, 2);
    EXPECT_EQ(r[1].index, "ba");
    EXPECT_EQ(r[1].coefficient, "-1/2*w^-2");
}
