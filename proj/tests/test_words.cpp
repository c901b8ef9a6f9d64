#include "hopfkit/words.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

using namespace hopfkit;

namespace {

/// Counts interleavings by brute force over position subsets.
WordPoly brute_shuffle(const std::string &u, const std::string &v)
{
    WordPoly out;
    std::size_t n = u.size() + v.size();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != u.size())
            continue;
        std::string w;
        std::size_t i = 0, j = 0;
        for (std::size_t k = 0; k < n; ++k)
            w += (mask >> k & 1u) ? u[i++] : v[j++];
        out[w] += 1;
    }
    return out;
}

std::vector<std::string> all_words(const std::string &letters, int n)
{
    std::vector<std::string> out{""};
    for (int k = 0; k < n; ++k) {
        std::vector<std::string> next;
        for (const auto &w : out)
            for (char c : letters)
                next.push_back(w + c);
        out = next;
    }
    return out;
}

} // namespace

TEST(Shuffle, Examples)
{
    Alphabet ab("abc");
    EXPECT_EQ(shuffle_words("", "ab"), (WordPoly{{"ab", 1}}));
    EXPECT_EQ(shuffle_words("a", "b"), (WordPoly{{"ab", 1}, {"ba", 1}}));
    EXPECT_EQ(shuffle_words("ab", "c"), brute_shuffle("ab", "c"));
    EXPECT_EQ(shuffle_words("ab", "c").size(), 3u);
    EXPECT_THROW(shuffle(ab, "ax", "b"), std::invalid_argument);
    EXPECT_EQ(shuffle(ab, "a", "a").coefficient("aa"), Rational(2));
}

TEST(Shuffle, CommutativeAndAssociative)
{
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; p + q <= 5; ++q)
            for (const auto &u : all_words("ab", p))
                for (const auto &v : all_words("ab", q)) {
                    EXPECT_EQ(shuffle_words(u, v), shuffle_words(v, u));
                    EXPECT_EQ(shuffle_words(u, v), brute_shuffle(u, v));
                }
    for (const auto &u : all_words("ab", 2))
        for (const auto &v : all_words("ab", 1))
            for (const auto &w : all_words("ab", 2)) {
                WordPoly left, right;
                for (const auto &[x, c] : shuffle_words(u, v))
                    for (const auto &[y, d] : shuffle_words(x, w))
                        left[y] += c * d;
                for (const auto &[x, c] : shuffle_words(v, w))
                    for (const auto &[y, d] : shuffle_words(u, x))
                        right[y] += c * d;
                EXPECT_EQ(left, right);
            }
}

TEST(WordBasis, Counts)
{
    auto b = word_basis(Alphabet("abc"), 4);
    for (int n = 0; n <= 4; ++n)
        EXPECT_EQ(b->of_degree(n).size(), static_cast<std::size_t>(std::pow(3, n)));
    EXPECT_EQ(b->name(0), "1");
}

TEST(WordTables, MuAndEtaEntries)
{
    auto wa = make_word_algebra(Alphabet("ab"), 4);
    const auto &b = *wa.basis;
    auto *e = wa.mu.find(b.id("a"), b.id("b"));
    ASSERT_NE(e, nullptr);
    ASSERT_EQ(e->size(), 1u);
    EXPECT_EQ((*e)[0].index, b.id("ab"));
    auto *ba = wa.mu.find(b.id("b"), b.id("a"));
    ASSERT_NE(ba, nullptr);
    EXPECT_NE((*ba)[0].index, b.id("ab"));
    auto eta = shuffle_eta(wa.basis);
    auto find_coef = [&](const char *l, const char *r, const char *t) {
        auto *list = eta.find(b.id(l), b.id(r));
        Rational c;
        if (list)
            for (const auto &x : *list)
                if (x.index == b.id(t))
                    c += x.value;
        return c;
    };
    EXPECT_EQ(find_coef("a", "b", "ab"), Rational(1));
    EXPECT_EQ(find_coef("b", "a", "ab"), Rational(1));
    EXPECT_EQ(find_coef("a", "ab", "aab"), Rational(2));
}

TEST(WordTables, DeconcatenationDuality)
{
    auto wa = make_word_algebra(Alphabet("ab"), 4);
    const auto &b = *wa.basis;
    for (int i = 1; i < b.size(); ++i)
        for (int j = 1; j < b.size(); ++j) {
            if (b.degree(i) + b.degree(j) > 4)
                continue;
            auto p = star(Series<Rational>::single(wa.basis, 4, i), Series<Rational>::single(wa.basis, 4, j), wa.mu);
            for (int w = 0; w < b.size(); ++w) {
                const std::string &name = b.name(w);
                const std::string &u = b.name(i), &v = b.name(j);
                bool split = name.size() == u.size() + v.size() && name.compare(0, u.size(), u) == 0 &&
                             name.compare(u.size(), std::string::npos, v) == 0;
                EXPECT_EQ(p.coefficient(w), Rational(split ? 1 : 0));
            }
        }
}

TEST(Lie, SimpleBrackets)
{
    Alphabet ab("ab");
    EXPECT_EQ(expand(parse_lie("[a,b]", ab)), (WordPoly{{"ab", 1}, {"ba", -1}}));
    EXPECT_EQ(expand(parse_lie("[a,a]", ab)), WordPoly{});
    EXPECT_THROW(parse_lie("[a,b", ab), std::invalid_argument);
    EXPECT_THROW(parse_lie("[a,x]", ab), std::invalid_argument);
    EXPECT_EQ(to_string(parse_lie(" [a, [a ,b]] ", ab)), "[a,[a,b]]");
}

TEST(Lie, NestedBracketExpansion)
{
    Alphabet ab("ab");
    // direct expansion a(ab - ba) - (ab - ba)a
    WordPoly expected{{"aab", 1}, {"aba", -2}, {"baa", 1}};
    EXPECT_EQ(expand(parse_lie("[a,[a,b]]", ab)), expected);
    auto wa = make_word_algebra(ab, 3);
    auto eta = shuffle_eta(wa.basis);
    EXPECT_TRUE(is_infinitesimal(lie_normal_form(parse_lie("[a,[a,b]]", ab), wa.basis, 3), eta));
    EXPECT_TRUE(is_infinitesimal(lie_normal_form(parse_lie("[b,[b,a]]", ab), wa.basis, 3), eta));
    // a display with aab - aba - bab + bba is not even homogeneous in the letters
    WordPoly misprint{{"aab", 1}, {"aba", -1}, {"bab", -1}, {"bba", 1}};
    EXPECT_FALSE(is_lie_polynomial(misprint));
}

TEST(Lyndon, CountsMatchNecklaceFormula)
{
    Alphabet ab("ab");
    std::vector<std::size_t> expected{2, 1, 2, 3, 6, 9};
    for (int n = 1; n <= 6; ++n)
        EXPECT_EQ(lyndon_words(ab, n).size(), expected[n - 1]) << n;
    EXPECT_EQ(lyndon_words(ab, 3), (std::vector<std::string>{"aab", "abb"}));
}

TEST(Lyndon, BracketsAreLieElementsWithLeadingWord)
{
    Alphabet abc("abc");
    auto wa = make_word_algebra(abc, 4);
    auto eta = shuffle_eta(wa.basis);
    for (int n = 1; n <= 4; ++n)
        for (const auto &w : lyndon_words(abc, n)) {
            LieExpr e = lyndon_bracket(w, abc);
            WordPoly p = expand(e);
            EXPECT_TRUE(is_lie_polynomial(p)) << w;
            EXPECT_EQ(p.at(w), Rational(1)) << w;
            EXPECT_TRUE(is_infinitesimal(lie_normal_form(e, wa.basis, 4), eta)) << w;
        }
    EXPECT_EQ(to_string(lyndon_bracket("aab", abc)), "[a,[a,b]]");
    EXPECT_EQ(to_string(lyndon_bracket("abb", abc)), "[[a,b],b]");
    EXPECT_THROW(lyndon_bracket("ba", abc), std::invalid_argument);
}

TEST(WordHopf, StarOfCharactersIsCharacter)
{
    auto wa = make_word_algebra(Alphabet("ab"), 5);
    auto eta = shuffle_eta(wa.basis);
    auto x = lie_normal_form(parse_lie("[a,[a,b]]", wa.alphabet), wa.basis, 5);
    x.add("a", 2);
    auto y = lie_normal_form(parse_lie("[b,[a,b]]", wa.alphabet), wa.basis, 5);
    y.add("b", -1);
    EXPECT_TRUE(is_character(star(exp_series(x, wa.mu), exp_series(y, wa.mu), wa.mu), eta));
}
