#include <random>

#include <gtest/gtest.h>

#include "dnc/errors.hpp"
#include "dnc/expression.hpp"
#include "dnc/random.hpp"

using namespace dnc;

namespace {

Signature sig21() { return Signature(2, 1, AngleAssignment(2).with(1, 2, mpq_class(1, 4))); }

ExactElement mono(const Signature& sig, std::vector<std::int64_t> e, std::vector<std::int64_t> f, std::vector<std::int64_t> g) {
    return ExactElement::monomial(NormalMonomial::from_exponents(sig, e, f, g));
}

std::size_t syntax_offset(const std::string& text, const Signature& sig) {
    try {
        parse_expression(text, sig);
    } catch (const SyntaxError& e) {
        return e.offset();
    }
    ADD_FAILURE() << "parsed: " << text;
    return std::string::npos;
}

ErrorCode error_code(const std::string& text, const Signature& sig) {
    try {
        parse_expression(text, sig);
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "parsed: " << text;
    return ErrorCode::config_error;
}

} // namespace

TEST(Parse, Examples) {
    auto sig = Signature(2, 2, AngleAssignment(2).with(1, 2, mpq_class(1, 4)));
    EXPECT_EQ(parse_expression("s1* s1", sig), ExactElement::identity(sig));
    EXPECT_EQ(parse_expression("s2 s1", sig), PhasePolynomial(sig.z(2, 1)) * mono(sig, {1, 1}, {0, 0}, {}));
    EXPECT_EQ(error_code("s1^-1", sig), ErrorCode::unitary_only);
}

TEST(Parse, Scalars) {
    auto sig = sig21();
    auto one = ExactElement::identity(sig);
    EXPECT_EQ(parse_expression("3/4", sig), PhasePolynomial(GaussianRational(mpq_class(3, 4))) * one);
    EXPECT_EQ(parse_expression("i", sig), PhasePolynomial(GaussianRational::i()) * one);
    EXPECT_EQ(parse_expression("-2i", sig), PhasePolynomial(GaussianRational(0, -2)) * one);
    EXPECT_EQ(parse_expression("(1/2+3/4i)", sig), PhasePolynomial(GaussianRational(mpq_class(1, 2), mpq_class(3, 4))) * one);
    EXPECT_EQ(parse_expression("1 - 1", sig), ExactElement{});
    EXPECT_EQ(parse_expression("0", sig), ExactElement{});
}

TEST(Parse, Phases) {
    auto sig = sig21();
    auto s1 = ExactElement::generator(sig, 1);
    EXPECT_EQ(parse_expression("w[1,2]^-3 s1", sig), PhasePolynomial(Phase::w(1, 2, -3)) * s1);
    EXPECT_EQ(parse_expression("z[2,1] s1", sig), PhasePolynomial(Phase::w(1, 2, -2)) * s1);
    EXPECT_EQ(parse_expression("w[1,2] * w[2,1]", sig), ExactElement::identity(sig));
    EXPECT_EQ(parse_expression("r[1/4]", sig), parse_expression("i", sig));
    EXPECT_EQ(parse_expression("r[1/8] r[1/8]", sig), parse_expression("i", sig));
    EXPECT_EQ(parse_expression("r[1/8]", sig).size(), 1u);
}

TEST(Parse, Generators) {
    auto sig = sig21();
    EXPECT_EQ(parse_expression("u2^-2", sig), mono(sig, {0}, {0}, {-2}));
    EXPECT_EQ(parse_expression("u2* u2", sig), ExactElement::identity(sig));
    EXPECT_EQ(parse_expression("s2", sig), parse_expression("u2", sig));
    EXPECT_EQ(parse_expression("s1*^2", sig), mono(sig, {0}, {2}, {0}));
    EXPECT_EQ(parse_expression("s1 * s1*", sig), mono(sig, {1}, {1}, {0}));
    EXPECT_EQ(parse_expression("s1*s1", sig), ExactElement::identity(sig));
    EXPECT_EQ(parse_expression("s1^0", sig), ExactElement::identity(sig));
    EXPECT_EQ(parse_expression("(s1 + u2)(s1 - u2)", sig),
              parse_expression("s1^2 - s1 u2 + u2 s1 - u2^2", sig));
    EXPECT_EQ(parse_expression("  s1\t+ s1 ", sig), PhasePolynomial(2) * ExactElement::generator(sig, 1));
}

TEST(Parse, Errors) {
    auto sig = sig21();
    EXPECT_EQ(syntax_offset("", sig), 0u);
    EXPECT_EQ(syntax_offset("s1 +", sig), 4u);
    EXPECT_EQ(syntax_offset("s1 $ s2", sig), 3u);
    EXPECT_EQ(syntax_offset("(s1", sig), 3u);
    EXPECT_EQ(syntax_offset("s1)", sig), 2u);
    EXPECT_EQ(syntax_offset("w[1 2]", sig), 4u);
    EXPECT_EQ(syntax_offset("1/0", sig), 2u);
    EXPECT_EQ(syntax_offset("s", sig), 1u);
    EXPECT_EQ(error_code("s3", sig), ErrorCode::index_out_of_range);
    EXPECT_EQ(error_code("s0", sig), ErrorCode::index_out_of_range);
    EXPECT_EQ(error_code("w[1,3]", sig), ErrorCode::index_out_of_range);
    EXPECT_EQ(error_code("w[1,1]", sig), ErrorCode::index_out_of_range);
    EXPECT_EQ(error_code("u1", sig), ErrorCode::unitary_only);
    EXPECT_EQ(error_code("s1*^-2", sig), ErrorCode::unitary_only);
}

TEST(Print, Canonical) {
    auto sig = sig21();
    EXPECT_EQ(print_expression(sig, parse_expression("s2 s1", sig)), "w[1,2]^-2 s1 u2");
    EXPECT_EQ(print_expression(sig, ExactElement{}), "0");
    EXPECT_EQ(print_expression(sig, ExactElement::identity(sig)), "1");
    auto sig22 = Signature(2, 2, AngleAssignment(2).with(1, 2, mpq_class(1, 4)));
    EXPECT_EQ(print_expression(sig22, parse_expression("s1 s2 s1*", sig22)), "w[1,2]^2 s1 s1* s2");
}

TEST(Print, RoundTrip) {
    std::mt19937_64 rng(61);
    for (int r = 0; r < 300; ++r) {
        auto sig = random_signature(rng, 4);
        auto x = random_element(sig, {3, 3, 3}, 5, rng);
        auto text = print_expression(sig, x);
        ASSERT_EQ(parse_expression(text, sig), x) << text;
        EXPECT_EQ(print_expression(sig, parse_expression(text, sig)), text);
    }
}

TEST(Print, Numeric) {
    auto sig = sig21();
    auto x = to_numeric(parse_expression("w[1,2] s1 + 2", sig), sig.angles());
    auto text = print_expression(sig, x);
    EXPECT_NE(text.find("s1"), std::string::npos);
    EXPECT_NE(text.find("0.707"), std::string::npos);
}
