#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include <hurwitz/bitvec.hpp>
#include <hurwitz/cubic_form.hpp>
#include <hurwitz/serialize.hpp>

#include "test_support.hpp"

using namespace hurwitz;

TEST(BitVec, Weight)
{
    EXPECT_EQ(wt(parse_bitvec("0000")), 0);
    EXPECT_EQ(wt(parse_bitvec("1111")), 4);
    // First row of the printed H1 matrix.
    EXPECT_EQ(wt(parse_bitvec("11111111111")), 11);
}

TEST(BitVec, OmegaAndBasis)
{
    EXPECT_EQ(omega(3), parse_bitvec("111"));
    EXPECT_EQ(basis(3, 1) + basis(3, 2) + basis(3, 3), omega(3));
    EXPECT_EQ(to_string(basis(4, 1)), "1000");
    EXPECT_EQ(to_string(basis(4, 4)), "0001");
    for (int n = 1; n <= 64; ++n) EXPECT_EQ(wt(omega(n)), n);
    EXPECT_THROW(basis(3, 0), DomainError);
    EXPECT_THROW(basis(3, 4), DomainError);
}

TEST(BitVec, InvariantsAndErrors)
{
    EXPECT_THROW(BitVec(3, 0b1000), DomainError);
    EXPECT_THROW(BitVec(0, 0), DomainError);
    EXPECT_THROW(BitVec(65, 0), DomainError);
    EXPECT_THROW(basis(3, 1) + basis(4, 1), DimensionMismatch);
    const auto x = parse_bitvec("10110");
    EXPECT_EQ(x + x, BitVec::zero(5));
    EXPECT_EQ(x + BitVec::zero(5), x);
    EXPECT_TRUE(x[1]);
    EXPECT_FALSE(x[2]);
    EXPECT_THROW(parse_bitvec("10a"), ParseError);
    EXPECT_THROW(parse_bitvec(""), ParseError);
}

TEST(BitVec, HexAndBinaryText)
{
    const auto x = parse_bitvec("10110");
    EXPECT_EQ(to_hex(x), "16");
    EXPECT_EQ(parse_hex("16", 5), x);
    EXPECT_THROW(parse_hex("ff", 5), ParseError);
    EXPECT_EQ(to_string(omega(64)), std::string(64, '1'));
    EXPECT_EQ(to_hex(omega(64)), "ffffffffffffffff");
}

TEST(BitVec, WeightOfSumHasParityOfSum)
{
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 64);
        const BitVec x(n, rng() & low_mask(n)), y(n, rng() & low_mask(n));
        EXPECT_EQ(wt(x + y) % 2, (wt(x) + wt(y)) % 2);
    }
}

TEST(CubicForm, EvalExamples)
{
    const auto f = CubicForm::from_index_sets(3, {{1, 2, 3}});
    EXPECT_TRUE(eval_cubic(f, parse_bitvec("111")));
    EXPECT_FALSE(eval_cubic(f, parse_bitvec("110")));
    EXPECT_TRUE(eval_cubic(make_alpha_O(3), parse_bitvec("011")));
    EXPECT_THROW(eval_cubic(f, parse_bitvec("1111")), DimensionMismatch);
}

TEST(CubicForm, AlphaOMonomials)
{
    EXPECT_EQ(make_alpha_O(1).index_sets(), (std::vector<IndexSet>{{1}}));
    EXPECT_EQ(make_alpha_O(3).index_sets(),
              (std::vector<IndexSet>{{1, 2, 3}, {1, 2}, {1, 3}, {2, 3}, {1}, {2}, {3}}));
    EXPECT_EQ(make_alpha_O(4).size(), 14u);
    EXPECT_EQ(make_alpha_O(8).size(), 56u + 28u + 8u);
}

TEST(CubicForm, AlphaOClosedFormMatchesExpansion)
{
    EXPECT_FALSE(alpha_O_closed(BitVec::zero(5)));
    EXPECT_FALSE(alpha_O_closed(parse_bitvec("1111")));
    for (auto s : {"1000", "1100", "1110"}) EXPECT_TRUE(alpha_O_closed(parse_bitvec(s)));
    for (int n = 1; n <= 8; ++n) {
        const auto a = make_alpha_O(n);
        for_each_vector(n, [&](BitVec x) { ASSERT_EQ(alpha_O_closed(x), a(x)) << n << " " << to_string(x); });
    }
}

TEST(CubicForm, AlphaOIsPermutationInvariant)
{
    std::mt19937_64 rng(7);
    for (int n = 2; n <= 8; ++n) {
        const auto a = make_alpha_O(n);
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<int> perm(static_cast<std::size_t>(n));
            std::iota(perm.begin(), perm.end(), 1);
            std::shuffle(perm.begin(), perm.end(), rng);
            for_each_vector(n, [&](BitVec x) {
                std::uint64_t y = 0;
                for (int i = 1; i <= n; ++i)
                    if (x[i]) y |= std::uint64_t{1} << coord_bit(n, perm[static_cast<std::size_t>(i - 1)]);
                ASSERT_EQ(a(x), a(BitVec(n, y)));
            });
        }
    }
}

TEST(CubicForm, CanonicalReduction)
{
    // x1 x1 x2 = x1 x2, and equal monomials cancel in pairs.
    EXPECT_EQ(parse_cubic("x1x1x2", 3), CubicForm::from_index_sets(3, {{1, 2}}));
    EXPECT_TRUE(parse_cubic("x1+x1", 3).empty());
    EXPECT_EQ(parse_cubic("x2x1 + x3 + x1x2x1", 3), CubicForm::from_index_sets(3, {{3}}));
    EXPECT_EQ(parse_cubic("x1*x2*x3", 3), CubicForm::from_index_sets(3, {{1, 2, 3}}));
    EXPECT_EQ(to_text(parse_cubic("0", 3)), "0");
    EXPECT_EQ(CubicForm::from_index_sets(3, {{3, 1}, {1, 3}, {2}}).index_sets(), (std::vector<IndexSet>{{2}}));
}

TEST(CubicForm, RejectsBadInput)
{
    EXPECT_THROW(parse_cubic("x1x2x3x4", 4), ParseError);
    EXPECT_THROW(parse_cubic("x5", 4), ParseError);
    EXPECT_THROW(parse_cubic("x1++x2", 4), ParseError);
    EXPECT_THROW(parse_cubic("1", 4), ParseError);
    EXPECT_THROW(parse_cubic("x1y2", 4), ParseError);
    EXPECT_THROW(CubicForm::from_index_sets(3, {{}}), DomainError);
    EXPECT_THROW(CubicForm::from_index_sets(3, {{0}}), DomainError);
}

TEST(CubicForm, TextAndJsonRoundTrip)
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 9);
        const auto f = gen::random_cubic(n, rng);
        EXPECT_EQ(parse_cubic(to_text(f), n), f);
        EXPECT_EQ(cubic_from_json(Json::parse(to_json(f).dump())), f);
    }
    EXPECT_EQ(to_json(make_alpha_O(2)).dump(), R"({"n":2,"monomials":[[1,2],[1],[2]]})");
    EXPECT_EQ(to_text(make_alpha_O(2)), "x1x2+x1+x2");
    EXPECT_THROW(cubic_from_json(Json::parse(R"({"n":3,"monomials":[[1,2,3,3,4]]})")), ParseError);
}
