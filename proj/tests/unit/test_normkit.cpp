#include <random>

#include <gtest/gtest.h>

#include "dnc/errors.hpp"
#include "dnc/expression.hpp"
#include "dnc/normkit.hpp"
#include "dnc/random.hpp"
#include "oracles.hpp"

using namespace dnc;

namespace {

Signature sig21() { return Signature(2, 1, AngleAssignment(2).with(1, 2, mpq_class(1, 4))); }
Signature sig32() { return Signature(3, 2, AngleAssignment(3).with(1, 2, mpq_class(2, 7)).with(2, 3, mpq_class(1, 3))); }

ExactElement parse(const Signature& sig, const char* text) { return parse_expression(text, sig); }

} // namespace

TEST(ProjectionAlgebra, Membership) {
    auto sig = sig32();
    EXPECT_TRUE(in_projection_algebra(sig, parse(sig, "s1 s1*")));
    EXPECT_FALSE(in_projection_algebra(sig, parse(sig, "s1")));
    EXPECT_TRUE(in_projection_algebra(sig, parse(sig, "s1^2 s1*^2 s2 s2*")));
    EXPECT_FALSE(in_projection_algebra(sig, parse(sig, "s1 s1* + u3")));
    EXPECT_TRUE(in_projection_algebra(sig, ExactElement{}));
    EXPECT_THROW(diagonal_symbol(sig, parse(sig, "s2*")), Error);
}

TEST(DiagonalSymbol, Examples) {
    auto sig = sig21();
    auto one = diagonal_symbol(sig, ExactElement::identity(sig));
    for (const auto& v : one.values) EXPECT_EQ(v, PhasePolynomial(1));

    auto p = diagonal_symbol(sig, parse(sig, "s1 s1*"));
    EXPECT_EQ(p.at({0}), PhasePolynomial(0));
    EXPECT_EQ(p.at({1}), PhasePolynomial(1));
    EXPECT_EQ(p.at({7}), PhasePolynomial(1));

    auto q = diagonal_symbol(sig, parse(sig, "1 - s1 s1*"));
    EXPECT_EQ(q.at({0}), PhasePolynomial(1));
    EXPECT_EQ(q.at({1}), PhasePolynomial(0));
    EXPECT_EQ(q.at({5}), PhasePolynomial(0));
}

TEST(DiagonalSymbol, CellLayout) {
    auto sig = sig32();
    auto d = diagonal_symbol(sig, parse(sig, "s1^2 s1*^2 + 3 s2 s2*"));
    EXPECT_EQ(d.cutoff, 2);
    EXPECT_EQ(d.slots, (std::vector<int>{1, 2}));
    EXPECT_EQ(d.cell_count(), 9u);
    EXPECT_EQ(d.cell(5), (std::vector<std::int64_t>{1, 2}));
    EXPECT_EQ(d.at({0, 0}), PhasePolynomial(0));
    EXPECT_EQ(d.at({2, 0}), PhasePolynomial(1));
    EXPECT_EQ(d.at({0, 4}), PhasePolynomial(3));
    EXPECT_EQ(d.at({9, 9}), PhasePolynomial(4));
}

TEST(PalNorm, Examples) {
    auto sig = sig21();
    auto a = pal_norm(sig, parse(sig, "s1^2 s1*^2"));
    EXPECT_DOUBLE_EQ(a.norm, 1);
    EXPECT_EQ(a.norm_squared, mpq_class(1));
    EXPECT_DOUBLE_EQ(pal_norm(sig, parse(sig, "1 - s1 s1*")).norm, 1);
    auto c = pal_norm(sig, parse(sig, "2 (1 - s1 s1*) + 3 s1 s1*"));
    EXPECT_DOUBLE_EQ(c.norm, 3);
    EXPECT_EQ(c.norm_squared, mpq_class(9));
    EXPECT_DOUBLE_EQ(pal_norm(sig, ExactElement{}).norm, 0);
    auto g = pal_norm(sig, parse(sig, "(3/5+4/5i) s1 s1* - (1/2) 1"));
    EXPECT_EQ(g.norm_squared, mpq_class(13, 20));  // |1/10 + 4/5 i|^2 vs |-1/2|^2
}

TEST(PalNorm, PhasedCoefficientsHaveNoExactSquare) {
    auto sig = sig21();
    auto x = parse(sig, "w[1,2] s1 s1* + 1");
    auto r = pal_norm(sig, x);
    EXPECT_FALSE(r.norm_squared.has_value());
    EXPECT_NEAR(r.norm, std::abs(std::polar(1.0, 3.141592653589793 / 4) + 1.0), 1e-12);
}

// The truncated operator of an element of the projection algebra is diagonal
// on the basis, so its norm is the largest diagonal modulus.
TEST(PalNorm, MatchesTruncatedOperatorNorm) {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 100; ++t) {
        int n = static_cast<int>(uniform(rng, 1, 3));
        Signature sig(n, n, random_angles(n, rng));
        auto x = random_projection_element(sig, 3, 5, rng);
        oracle::DenseRep rep(sig, 4);
        double dense = 0;
        for (std::size_t s = 0; s < rep.size(); ++s) {
            auto img = rep.element(x, rep.basis(rep.label(s)));
            for (std::size_t u = 0; u < rep.size(); ++u)
                if (u != s) ASSERT_LT(std::abs(img[u]), 1e-12);
            dense = std::max(dense, std::abs(img[s]));
        }
        auto r = pal_norm(sig, x);
        EXPECT_NEAR(r.norm, dense, 1e-12);
        ASSERT_TRUE(r.norm_squared.has_value());
        EXPECT_NEAR(r.norm_squared->get_d(), dense * dense, 1e-9);
    }
}

TEST(PalNorm, SymbolIsMultiplicative) {
    std::mt19937_64 rng(22);
    auto sig = sig32();
    for (int t = 0; t < 50; ++t) {
        auto x = random_projection_element(sig, 2, 4, rng), y = random_projection_element(sig, 2, 4, rng);
        auto xy = diagonal_symbol(sig, mul(sig, x, y));
        auto dx = diagonal_symbol(sig, x), dy = diagonal_symbol(sig, y);
        for (std::int64_t a = 0; a <= 4; ++a)
            for (std::int64_t b = 0; b <= 4; ++b) EXPECT_EQ(xy.at({a, b}), dx.at({a, b}) * dy.at({a, b}));
        auto cstar = pal_norm(sig, mul(sig, adjoint(sig, x), x));
        auto nx = pal_norm(sig, x);
        EXPECT_EQ(*cstar.norm_squared, *nx.norm_squared * *nx.norm_squared);
    }
}
