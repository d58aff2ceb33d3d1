#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "dnc/phase.hpp"

using namespace dnc;

namespace {

Phase random_phase(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> e(-3, 3);
    Phase p;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) p *= Phase::w(i, j, e(rng));
    return p;
}

AngleAssignment sample_angles() {
    return AngleAssignment(3).with(1, 2, mpq_class(1, 3)).with(1, 3, mpq_class(5, 7)).with(2, 3, mpq_class(3, 4));
}

} // namespace

TEST(Phase, HalfPhaseSquaresToZ) {
    EXPECT_EQ(Phase::w(1, 2) * Phase::w(1, 2), Phase::w(1, 2, 2));
    EXPECT_EQ(Phase::w(1, 2, 2), Phase::z(1, 2));
}

TEST(Phase, IdentityAndInverse) {
    Phase p = Phase::w(1, 3, 4) * Phase::w(2, 3, -1);
    EXPECT_EQ(Phase{} * p, p);
    EXPECT_TRUE((Phase::w(1, 2, 2) * Phase::w(1, 2, -2)).is_identity());
}

TEST(Phase, ReversedIndicesAreConjugates) {
    EXPECT_EQ(Phase::w(2, 1), Phase::w(1, 2, -1));
    EXPECT_EQ(Phase::z(2, 1), Phase::z(1, 2).inverse());
    EXPECT_TRUE(Phase::w(2, 2, 5).is_identity());
}

TEST(Phase, ConjugationNegatesExponents) {
    EXPECT_EQ(phase_conj(Phase::w(1, 2, 2)), Phase::w(1, 2, -2));
    EXPECT_TRUE(phase_conj(Phase{}).is_identity());
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        auto p = random_phase(rng, 4);
        EXPECT_EQ(phase_conj(phase_conj(p)), p);
    }
}

TEST(Phase, EvaluatesHalfAngle) {
    auto a = AngleAssignment(2).with(1, 2, mpq_class(1, 2));
    auto v = phase_eval(Phase::w(1, 2), a);
    EXPECT_NEAR(std::abs(v.value - std::complex<double>(0, 1)), 0, 1e-15);
    ASSERT_TRUE(v.half_turns);
    EXPECT_EQ(*v.half_turns, mpq_class(1, 2));

    auto b = AngleAssignment(2).with(1, 2, mpq_class(1, 3));
    auto z = phase_eval(Phase::w(1, 2, 2), b);
    EXPECT_NEAR(std::abs(z.value - std::polar(1.0, 2 * std::numbers::pi / 3)), 0, 1e-15);
    EXPECT_EQ(*z.half_turns, mpq_class(2, 3));

    EXPECT_EQ(phase_eval(Phase{}, b).value, std::complex<double>(1));
}

TEST(Phase, EvaluationReducesModTwo) {
    auto a = AngleAssignment(2).with(1, 2, mpq_class(3, 4));
    auto v = phase_eval(Phase::w(1, 2, 4), a);
    EXPECT_EQ(*v.half_turns, mpq_class(1));
    auto u = phase_eval(Phase::w(1, 2, -1), a);
    EXPECT_EQ(*u.half_turns, mpq_class(5, 4));
}

TEST(Phase, GroupLawsOnRandomSamples) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        auto p = random_phase(rng, 4), q = random_phase(rng, 4), r = random_phase(rng, 4);
        EXPECT_EQ(p * q, q * p);
        EXPECT_EQ((p * q) * r, p * (q * r));
        EXPECT_TRUE((p * p.inverse()).is_identity());
    }
}

TEST(Phase, EvaluationIsAHomomorphism) {
    std::mt19937_64 rng(5);
    auto exact = sample_angles();
    auto numeric = AngleAssignment(3, AngleMode::numeric).with(1, 2, std::sqrt(2.0) - 1).with(2, 3, 0.3183098861837907);
    for (const auto& a : {exact, numeric})
        for (int t = 0; t < 100; ++t) {
            auto p = random_phase(rng, 3), q = random_phase(rng, 3);
            auto pq = phase_eval(p * q, a).value;
            EXPECT_NEAR(std::abs(pq - phase_eval(p, a).value * phase_eval(q, a).value), 0, 1e-14);
            EXPECT_NEAR(std::abs(phase_eval(phase_conj(p), a).value - std::conj(phase_eval(p, a).value)), 0, 1e-14);
            EXPECT_NEAR(std::abs(pq), 1.0, 1e-15);
        }
}

TEST(Phase, RootOfUnityFoldsQuarterTurns) {
    PhasePolynomial p(Phase::root_of_unity(1, 4));
    auto s = p.as_scalar();
    ASSERT_TRUE(s);
    EXPECT_EQ(*s, GaussianRational::i());
    PhasePolynomial q(Phase::root_of_unity(1, 8) * Phase::w(1, 2));
    EXPECT_EQ(q.size(), 1u);
    EXPECT_EQ(q * q, PhasePolynomial(Phase::w(1, 2, 2), GaussianRational::i()));
}

TEST(AngleAssignment, KeysAndModes) {
    EXPECT_THROW(AngleAssignment(3).with(2, 1, mpq_class(1, 2)), std::invalid_argument);
    EXPECT_THROW(AngleAssignment(3).with(1, 4, mpq_class(1, 2)), std::invalid_argument);
    auto a = AngleAssignment(2).with(1, 2, mpq_class(7, 4));
    EXPECT_EQ(a.canonical_branch().exact_value(1, 2), mpq_class(3, 4));
    EXPECT_EQ(a.shifted_branch(1, 2, -1).exact_value(1, 2), mpq_class(3, 4));
    EXPECT_FALSE(a.to_numeric().exact());
    EXPECT_THROW(a.to_numeric().exact_value(1, 2), std::logic_error);
    // z is the same on both branches, w differs by a sign
    auto b = a.shifted_branch(1, 2, 1);
    EXPECT_NEAR(std::abs(phase_eval(Phase::z(1, 2), a).value - phase_eval(Phase::z(1, 2), b).value), 0, 1e-14);
    EXPECT_NEAR(std::abs(phase_eval(Phase::w(1, 2), a).value + phase_eval(Phase::w(1, 2), b).value), 0, 1e-14);
}

TEST(PhasePolynomial, RingLaws) {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<long> c(-3, 3);
    auto poly = [&] {
        PhasePolynomial p;
        for (int t = 0; t < 3; ++t) p += PhasePolynomial(random_phase(rng, 3), GaussianRational(mpq_class(c(rng)), mpq_class(c(rng))));
        return p;
    };
    for (int t = 0; t < 100; ++t) {
        auto a = poly(), b = poly(), d = poly();
        EXPECT_EQ(a * (b + d), a * b + a * d);
        EXPECT_EQ((a * b) * d, a * (b * d));
        EXPECT_EQ(a * b, b * a);
        EXPECT_TRUE((a - a).is_zero());
        EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
        EXPECT_NEAR(std::abs((a * b).eval(sample_angles()) - a.eval(sample_angles()) * b.eval(sample_angles())), 0, 1e-12);
    }
}

TEST(GaussianRational, Arithmetic) {
    GaussianRational a(mpq_class(1, 2), mpq_class(3, 4));
    EXPECT_EQ(a * a.conj(), GaussianRational(a.norm_squared()));
    EXPECT_EQ(a / a, GaussianRational(1));
    EXPECT_THROW(a / GaussianRational(), std::domain_error);
    EXPECT_EQ(a.to_string(), "1/2+3/4i");
    EXPECT_EQ(parse_rational("-6/8"), mpq_class(-3, 4));
    EXPECT_THROW(parse_rational("x"), std::invalid_argument);
}
