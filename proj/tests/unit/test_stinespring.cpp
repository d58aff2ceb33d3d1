#include <random>

#include <gtest/gtest.h>

#include "dnc/errors.hpp"
#include "dnc/expression.hpp"
#include "dnc/random.hpp"
#include "dnc/stinespring.hpp"

using namespace dnc;

namespace {

Signature sig21() { return Signature(2, 1, AngleAssignment(2).with(1, 2, mpq_class(1, 3))); }
Signature sig32() {
    return Signature(3, 2, AngleAssignment(3).with(1, 2, mpq_class(1, 8)).with(1, 3, mpq_class(3, 4)).with(2, 3, mpq_class(2, 5)));
}

ExactElement parse(const Signature& sig, const char* text) { return parse_expression(text, sig); }

Word powers(int i, std::int64_t count, bool star) { return Word(static_cast<std::size_t>(count), Letter{i, star}); }

} // namespace

TEST(PhiEigenvalue, Examples) {
    auto sig = sig21();
    for (std::int64_t k = 0; k <= 3; ++k) {
        EXPECT_EQ(phi_eigenvalue(sig, ExactElement::identity(sig), {k}), PhasePolynomial(1));
        EXPECT_EQ(phi_eigenvalue(sig, parse(sig, "s1"), {k}), PhasePolynomial(0));
        EXPECT_EQ(phi_eigenvalue(sig, parse(sig, "s1 s1*"), {k}), PhasePolynomial(k >= 1 ? 1 : 0));
        EXPECT_EQ(phi_eigenvalue(sig, parse(sig, "u2"), {k}), PhasePolynomial(0));
    }
    EXPECT_THROW(phi_eigenvalue(sig, parse(sig, "s1"), {1, 1}), Error);
    EXPECT_THROW(phi_eigenvalue(sig, parse(sig, "s1"), {-1}), Error);
}

TEST(PhiEigenvalue, AgreesWithDirectRoute) {
    std::mt19937_64 rng(41);
    for (int r = 0; r < 100; ++r) {
        auto sig = random_signature(rng, 3);
        auto x = random_element(sig, {2, 2, 2}, 5, rng);
        IsometryIndex k(static_cast<std::size_t>(sig.l()));
        for (auto& v : k) v = uniform(rng, 0, 3);
        EXPECT_EQ(phi_eigenvalue(sig, x, k), phi_eigenvalue_direct(sig, x, k)) << print_expression(sig, x);
    }
}

TEST(StInner, Examples) {
    auto sig = sig21();
    StVector<PhasePolynomial> one{ExactElement::identity(sig), {0}};
    StVector<PhasePolynomial> sstar{parse(sig, "s1*"), {0}};
    EXPECT_EQ(st_inner(sig, one, one), PhasePolynomial(1));
    EXPECT_EQ(st_inner(sig, sstar, sstar), PhasePolynomial(0));
    StVector<PhasePolynomial> lifted{parse(sig, "s1^2 u2^-1 s1*"), {1}};
    EXPECT_EQ(st_inner(sig, lifted, lifted), PhasePolynomial(1));
    // different labels are orthogonal by construction
    StVector<PhasePolynomial> other{ExactElement::identity(sig), {1}};
    EXPECT_EQ(st_inner(sig, one, other), PhasePolynomial(0));
    // sesquilinear: linear in the first slot
    StVector<PhasePolynomial> twice{PhasePolynomial(GaussianRational::i()) * ExactElement::identity(sig), {0}};
    EXPECT_EQ(st_inner(sig, twice, one), PhasePolynomial(GaussianRational::i()));
    EXPECT_EQ(st_inner(sig, one, twice), PhasePolynomial(-GaussianRational::i()));
}

// ||[s^e u^g s^{*f} (x) ee_k]|| is 1 when f <= k componentwise and 0 otherwise.
TEST(StInner, NormTrichotomy) {
    auto sig = Signature(3, 2, AngleAssignment(3).with(1, 2, mpq_class(1, 6)).with(2, 3, mpq_class(1, 4)));
    for (std::int64_t f1 = 0; f1 <= 3; ++f1)
        for (std::int64_t f2 = 0; f2 <= 3; ++f2)
            for (std::int64_t k1 = 0; k1 <= 3; ++k1)
                for (std::int64_t k2 = 0; k2 <= 3; ++k2) {
                    Word w = powers(1, 2, false);
                    for (auto p : {powers(2, 1, false), Word{{3, true}}, powers(1, f1, true), powers(2, f2, true)}) w.insert(w.end(), p.begin(), p.end());
                    StVector<PhasePolynomial> v{from_word<PhasePolynomial>(sig, w), {k1, k2}};
                    bool unit = f1 <= k1 && f2 <= k2;
                    EXPECT_EQ(st_inner(sig, v, v), PhasePolynomial(unit ? 1 : 0)) << f1 << f2 << k1 << k2;
                }
}

TEST(Gram, SummandBasesAreOrthonormal) {
    auto sig = sig21();
    auto l0 = summand_basis(sig, {0}, 2, 2);
    EXPECT_EQ(l0.size(), 15u);
    EXPECT_TRUE(is_identity(gram_matrix(sig, l0)));
    for (std::int64_t k = 1; k <= 3; ++k) {
        auto lk = summand_basis(sig, {k}, 2, 2);
        EXPECT_TRUE(is_identity(gram_matrix(sig, lk)));
    }
    auto single = gram_matrix(sig, std::vector<StVector<PhasePolynomial>>{{parse(sig, "s1"), {0}}});
    EXPECT_TRUE(is_identity(single));

    auto s32 = sig32();
    for (IsometryIndex k : {IsometryIndex{0, 0}, IsometryIndex{1, 2}, IsometryIndex{2, 1}}) {
        auto b = summand_basis(s32, k, 2, 2);
        EXPECT_EQ(b.size(), 45u);
        EXPECT_TRUE(is_identity(gram_matrix(s32, b)));
    }
}

TEST(Gram, HermitianAndPositive) {
    std::mt19937_64 rng(42);
    auto sig = sig32();
    for (int r = 0; r < 10; ++r) {
        std::vector<StVector<PhasePolynomial>> vs;
        IsometryIndex k{uniform(rng, 0, 2), uniform(rng, 0, 2)};
        for (int j = 0; j < 6; ++j) vs.push_back({random_element(sig, {2, 2, 1}, 3, rng), k});
        auto g = gram_matrix(sig, vs);
        for (std::size_t a = 0; a < g.size(); ++a)
            for (std::size_t b = 0; b < g.size(); ++b) EXPECT_EQ(g[a][b], g[b][a].conj());
        EXPECT_GE(gram_min_eigenvalue(g, sig.angles()), -1e-10);
    }
    // a dependent family has a zero eigenvalue
    auto x = parse(sig, "s1 + u3");
    std::vector<StVector<PhasePolynomial>> dep{{x, {0, 0}}, {PhasePolynomial(2) * x, {0, 0}}};
    EXPECT_NEAR(gram_min_eigenvalue(gram_matrix(sig, dep), sig.angles()), 0, 1e-12);
}

TEST(Unimodular, Examples) {
    auto sig = sig21();
    auto zero = check_unimodular_reduction(sig, {0}, {2});
    EXPECT_TRUE(zero.constant.is_identity());
    EXPECT_TRUE(zero.residual.is_zero());
    auto one = check_unimodular_reduction(sig, {1}, {1});
    EXPECT_TRUE(one.residual.is_zero());
    EXPECT_THROW(check_unimodular_reduction(sig, {2}, {1}), Error);

    auto s32 = sig32();
    for (std::int64_t k1 = 0; k1 <= 3; ++k1)
        for (std::int64_t k2 = 0; k2 <= 3; ++k2)
            for (std::int64_t e1 = 0; e1 <= k1; ++e1)
                for (std::int64_t e2 = 0; e2 <= k2; ++e2) {
                    auto r = check_unimodular_reduction(s32, {e1, e2}, {k1, k2});
                    EXPECT_TRUE(r.residual.is_zero());
                    // s_1^{e1} s_2^{e2} s_1^{*k1} s_2^{*k2}: moving s_2^{e2} past s_1^{*k1}
                    // costs z_12^{e2 k1}; the s_1 block then cancels e1 stars
                    EXPECT_EQ(r.constant, s32.z(1, 2).pow(e2 * k1)) << e1 << e2 << k1 << k2;
                }
}
