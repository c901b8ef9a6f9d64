#include "hopfkit/hopf.hpp"

#include "crosschecks.hpp"

#include <gtest/gtest.h>

using namespace hopfkit;

namespace {

Rational tensor_coef(const VTensor &t, int a, int b)
{
    auto it = t.find({a, b});
    return it == t.end() ? Rational(0) : it->second;
}

} // namespace

TEST(PreLieFromLie, Abelian)
{
    auto lie = abelian_algebra();
    auto hd = prelie_from_lie(lie);
    for (const auto &v : hd.values)
        EXPECT_TRUE(v.empty());
    auto h = coproduct_from_lie(lie, 4);
    for (const auto &d : h.delta_bar)
        EXPECT_TRUE(d.empty());
    EXPECT_TRUE(audit(h, &lie, 4).all());
}

TEST(PreLieFromLie, Witt)
{
    auto lie = witt_algebra(4);
    ASSERT_TRUE(lie.jacobi(4));
    auto hd = prelie_from_lie(lie);
    EXPECT_EQ(tensor_coef(hd.values[2], 0, 1), make_rational(2, 3));
    EXPECT_EQ(tensor_coef(hd.values[2], 1, 0), make_rational(-1, 3));
    EXPECT_EQ(hd.values[2].size(), 2u);
    EXPECT_TRUE(satisfies_cobracket(hd, lie));
    EXPECT_TRUE(is_prelie(hd, 4));
}

TEST(PreLieFromLie, FreeLieDegreeTwo)
{
    Alphabet ab("ab");
    auto lie = free_lie_algebra(ab, 2);
    ASSERT_EQ(lie.size(), 3);
    EXPECT_EQ(lie.name(2), "ab");
    auto hd = prelie_from_lie(lie);
    EXPECT_EQ(tensor_coef(hd.values[2], 0, 1), make_rational(1, 2));
    EXPECT_EQ(tensor_coef(hd.values[2], 1, 0), make_rational(-1, 2));
    auto h = coproduct_from_lie(lie, 2);
    STensor expected{{{Monomial{0}, Monomial{1}}, make_rational(1, 2)},
                     {{Monomial{1}, Monomial{0}}, make_rational(-1, 2)}};
    EXPECT_EQ(h.delta_bar[2], expected);
}

TEST(Dynkin, GeneratorsAndLieCase)
{
    auto lie = witt_algebra(4);
    auto d = dynkin_map(prelie_from_lie(lie), 4);
    for (int i = 0; i < lie.size(); ++i)
        EXPECT_EQ(d[i], (SPoly{{Monomial{i}, Rational(lie.degree(i))}})) << i;
}

TEST(Dynkin, HandBuiltPreLieCoproduct)
{
    // Generators x (degree 1) and y (degree 2) with hdelta(y) = c x (x) x.
    // Pre-Lie trivially (no degree-3 data). D(x) = x, D(y) = 2y - c x x.
    PreLieCoproduct hd{{1, 2}, {VTensor{}, VTensor{{{0, 0}, make_rational(3, 2)}}}};
    auto d = dynkin_map(hd, 2);
    EXPECT_EQ(d[0], (SPoly{{Monomial{0}, 1}}));
    EXPECT_EQ(d[1], (SPoly{{Monomial{1}, 2}, {Monomial{0, 0}, make_rational(-3, 2)}}));
    auto h = coproduct_from_prelie(hd, {"x", "y"}, 4);
    // Delta_bar(y) = c x (x) x, from one recursion step
    EXPECT_EQ(h.delta_bar[1], (STensor{{{Monomial{0}, Monomial{0}}, make_rational(3, 2)}}));
    EXPECT_TRUE(audit(h, nullptr, 4).all());
}

TEST(Dynkin, TreeCase)
{
    std::vector<std::string> names;
    auto hd = grossman_larson_prelie(Alphabet("ab"), 3, names);
    auto d = dynkin_map(hd, 3);
    int ab = static_cast<int>(std::find(names.begin(), names.end(), "a[b]") - names.begin());
    int a = static_cast<int>(std::find(names.begin(), names.end(), "a") - names.begin());
    int b = static_cast<int>(std::find(names.begin(), names.end(), "b") - names.begin());
    EXPECT_EQ(d[ab], (SPoly{{Monomial{ab}, 2}, {Monomial{a, b}, -1}}));
}

TEST(CoproductFromPrelie, RejectsNonPreLie)
{
    // hdelta(x) = u (x) v, hdelta(z) = x (x) u: associator u v u is not symmetric
    PreLieCoproduct hd{{1, 1, 2, 3},
                       {VTensor{}, VTensor{}, VTensor{{{0, 1}, 1}}, VTensor{{{2, 0}, 1}}}};
    EXPECT_FALSE(is_prelie(hd, 3));
    EXPECT_THROW(coproduct_from_prelie(hd, {"u", "v", "x", "z"}, 3), std::invalid_argument);
}

TEST(CoproductFromLie, RejectsJacobiFailure)
{
    GradedLieAlgebra lie({{"x", 1}, {"y", 1}, {"u", 1}, {"p", 2}, {"q", 2}, {"r", 2}, {"w", 3}});
    lie.add_bracket(0, 1, 3, 1);
    lie.add_bracket(1, 2, 4, 1);
    lie.add_bracket(2, 0, 5, 1);
    lie.add_bracket(0, 4, 6, 1);
    EXPECT_TRUE(lie.antisymmetric());
    EXPECT_TRUE(lie.graded());
    EXPECT_FALSE(lie.jacobi(3));
    EXPECT_THROW(coproduct_from_lie(lie, 3), std::invalid_argument);
}

TEST(DualBasis, GeneratorsAndScaledPBW)
{
    GradedLieAlgebra single({{"G1", 1}});
    auto h1 = coproduct_from_lie(single, 3);
    auto z1 = dual_basis(single, h1);
    EXPECT_EQ(z1.at(Monomial{0}), (UElement{{Monomial{0}, 1}}));
    EXPECT_EQ(z1.at(Monomial{0, 0}), (UElement{{Monomial{0, 0}, make_rational(1, 2)}}));
    EXPECT_EQ(z1.at(Monomial{0, 0, 0}), (UElement{{Monomial{0, 0, 0}, make_rational(1, 6)}}));

    auto lie = witt_algebra(4);
    auto h = coproduct_from_lie(lie, 4);
    auto z = dual_basis(lie, h);
    for (int i = 0; i < lie.size(); ++i)
        EXPECT_EQ(z.at(Monomial{i}), (UElement{{Monomial{i}, 1}}));
    // Z_(1,2) = (1/3)(G1 G2 + 2 G2 G1) = G1 G2 + (2/3)[G2, G1] = G1 G2 - (2/3) G3
    UElement expected{{Monomial{0, 1}, 1}, {Monomial{2}, make_rational(-2, 3)}};
    EXPECT_EQ(z.at(Monomial{0, 1}), expected);
}

TEST(MuTable, StraighteningAgreesWithCoproduct)
{
    for (int which = 0; which < 3; ++which) {
        GradedLieAlgebra lie = which == 0 ? witt_algebra(4)
                             : which == 1 ? free_lie_algebra(Alphabet("ab"), 4)
                                          : abelian_algebra();
        auto h = coproduct_from_lie(lie, 4);
        MuTable straight = mu_table(lie, h);
        std::size_t agree = 0;
        straight.for_each([&](int l, int r, const std::vector<MuEntry> &list) {
            const auto *other = h.mu.find(l, r);
            ASSERT_NE(other, nullptr);
            std::map<int, Rational> a, b;
            for (const auto &e : list)
                a[e.index] = e.value;
            for (const auto &e : *other)
                b[e.index] = e.value;
            EXPECT_EQ(a, b);
            ++agree;
        });
        EXPECT_EQ(agree, h.mu.pair_count());
    }
}

TEST(Audit, AllBuiltinsPass)
{
    Alphabet ab("ab");
    std::vector<GradedLieAlgebra> algebras{abelian_algebra(), witt_algebra(4), free_lie_algebra(ab, 4),
                                           grossman_larson_algebra(ab, 4)};
    for (const auto &lie : algebras) {
        auto h = coproduct_from_lie(lie, 4);
        auto a = audit(h, &lie, 4);
        EXPECT_TRUE(a.all()) << (a.failures.empty() ? "" : a.failures.front());
    }
}

TEST(Audit, AntipodeOnWitt)
{
    auto lie = witt_algebra(3);
    auto h = coproduct_from_lie(lie, 3);
    EXPECT_EQ(h.antipode(Monomial{0}), (SPoly{{Monomial{0}, -1}}));
}

TEST(CrossCheck, GrossmanLarsonGivesAdmissibleCuts)
{
    auto r = crosscheck::grossman_larson_vs_admissible_cuts(Alphabet("ab"), 4);
    EXPECT_TRUE(r.ok) << r.detail;
    EXPECT_GT(r.checked, 0u);
}

TEST(CrossCheck, FreeLieGivesShuffleAlgebra)
{
    auto r = crosscheck::free_lie_vs_shuffle(Alphabet("ab"), 4);
    EXPECT_TRUE(r.ok) << r.detail;
    EXPECT_GT(r.checked, 0u);
}
