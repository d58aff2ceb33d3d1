#include "dnc/expression.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>

#include "dnc/errors.hpp"

namespace dnc {

namespace {

class Parser {
public:
    Parser(std::string_view text, const Signature& sig) : text_(text), sig_(sig) {}

    ExactElement run() {
        skip_ws();
        if (at_end()) fail("empty expression");
        auto x = element();
        skip_ws();
        if (!at_end()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return x;
    }

private:
    ExactElement element() {
        skip_ws();
        bool negate = false;
        if (peek() == '+' || peek() == '-') {
            negate = peek() == '-';
            ++pos_;
        }
        ExactElement acc = term();
        if (negate) acc = ExactElement{} - acc;
        for (;;) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') return acc;
            ++pos_;
            auto t = term();
            if (c == '+') acc += t;
            else acc -= t;
        }
    }

    ExactElement term() {
        ExactElement acc = item();
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                skip_ws();
                if (!starts_item()) fail("expected a factor after '*'");
            } else if (!starts_item()) {
                return acc;
            }
            acc = mul(sig_, acc, item());
        }
    }

    bool starts_item() const {
        char c = peek();
        return c == '(' || std::isdigit(static_cast<unsigned char>(c)) || c == 'i' || c == 's' || c == 'u' ||
               c == 'w' || c == 'z' || c == 'r';
    }

    ExactElement item() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            auto x = element();
            skip_ws();
            expect(')');
            return x;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return scalar(ExactElement::identity(sig_), number());
        if (c == 'i') {
            ++pos_;
            return scalar(ExactElement::identity(sig_), GaussianRational::i());
        }
        if (c == 'w' || c == 'z') return phase_item();
        if (c == 'r') return root_item();
        if (c == 's' || c == 'u') return factor();
        fail(at_end() ? "unexpected end of expression" : "unexpected character '" + std::string(1, c) + "'");
    }

    static ExactElement scalar(ExactElement one, const GaussianRational& c) {
        return PhasePolynomial(c) * std::move(one);
    }

    GaussianRational number() {
        mpq_class v = integer_value();
        if (peek() == '/') {
            ++pos_;
            std::size_t at = pos_;
            mpq_class d = integer_value();
            if (d == 0) fail_at(at, "zero denominator");
            v /= d;
        }
        if (peek() == 'i') {
            ++pos_;
            return GaussianRational(mpq_class(0), v);
        }
        return GaussianRational(v);
    }

    mpz_class integer_value() {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected digits");
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
    }

    std::int64_t signed_int() {
        skip_ws();
        std::size_t start = pos_;
        if (peek() == '-' || peek() == '+') ++pos_;
        skip_ws();
        std::size_t digits = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (digits == pos_) fail("expected an integer");
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + digits, text_.data() + pos_, v);
        if (ec != std::errc{}) fail_at(digits, "integer out of range");
        return text_[start] == '-' ? -v : v;
    }

    int index_value() {
        std::size_t at = pos_;
        std::int64_t v = signed_int();
        if (v < 1 || v > sig_.n())
            throw Error(ErrorCode::index_out_of_range,
                        "generator index " + std::to_string(v) + " out of range at offset " + std::to_string(at));
        return static_cast<int>(v);
    }

    ExactElement phase_item() {
        bool half = peek() == 'w';
        ++pos_;
        skip_ws();
        expect('[');
        int i = index_value();
        skip_ws();
        expect(',');
        int j = index_value();
        skip_ws();
        expect(']');
        if (i == j)
            throw Error(ErrorCode::index_out_of_range, "phase symbol needs two distinct indices");
        std::int64_t k = optional_power();
        Phase p = half ? Phase::w(i, j, k) : Phase::z(i, j, k);
        return PhasePolynomial(p) * ExactElement::identity(sig_);
    }

    ExactElement root_item() {
        ++pos_;
        skip_ws();
        expect('[');
        std::int64_t num = signed_int();
        skip_ws();
        expect('/');
        std::size_t at = pos_;
        std::int64_t den = signed_int();
        if (den <= 0) fail_at(at, "root of unity needs a positive denominator");
        skip_ws();
        expect(']');
        return PhasePolynomial(Phase::root_of_unity(num, den)) * ExactElement::identity(sig_);
    }

    ExactElement factor() {
        std::size_t at = pos_;
        bool u = peek() == 'u';
        ++pos_;
        int i = index_value();
        if (u && sig_.is_isometry(i))
            throw Error(ErrorCode::unitary_only, "'u" + std::to_string(i) + "' names an isometry at offset " +
                                                     std::to_string(at));
        // only a '*' with no space before it is the adjoint
        bool star = false;
        if (peek() == '*') {
            star = true;
            ++pos_;
        }
        std::size_t pow_at = pos_;
        std::int64_t k = optional_power();
        if (k < 0 && sig_.is_isometry(i))
            throw Error(ErrorCode::unitary_only, "negative power of isometry s" + std::to_string(i) +
                                                     " at offset " + std::to_string(pow_at));
        if (k < 0) {
            star = !star;
            k = -k;
        }
        Word w(static_cast<std::size_t>(k), Letter{i, star});
        return from_word<PhasePolynomial>(sig_, w);
    }

    std::int64_t optional_power() {
        skip_ws();
        if (peek() != '^') return 1;
        ++pos_;
        return signed_int();
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(pos_, msg); }
    [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const { throw SyntaxError(at, msg); }

    std::string_view text_;
    const Signature& sig_;
    std::size_t pos_ = 0;
};

std::string scalar_text(const GaussianRational& c, bool& negative) {
    negative = false;
    if (sgn(c.imag()) == 0) {
        negative = sgn(c.real()) < 0;
        return mpq_class(abs(c.real())).get_str();
    }
    if (sgn(c.real()) == 0) {
        negative = sgn(c.imag()) < 0;
        mpq_class m = abs(c.imag());
        return (m == 1 ? std::string() : m.get_str()) + "i";
    }
    return "(" + c.to_string() + ")";
}

} // namespace

ExactElement parse_expression(std::string_view text, const Signature& sig) { return Parser(text, sig).run(); }

std::string print_expression(const Signature& sig, const ExactElement& x) {
    if (x.is_zero()) return "0";
    std::string out;
    for (const auto& [m, poly] : x.terms()) {
        std::string mono = m.is_identity() ? "" : to_string(sig, m);
        for (const auto& [phase, c] : poly.terms()) {
            bool negative = false;
            std::string s = scalar_text(c, negative);
            std::string body;
            if (s != "1") body = s;
            if (!phase.is_identity()) body += (body.empty() ? "" : " ") + phase.to_string();
            if (!mono.empty()) body += (body.empty() ? "" : " ") + mono;
            if (body.empty()) body = "1";
            if (out.empty()) out = negative ? "-" + body : body;
            else out += (negative ? " - " : " + ") + body;
        }
    }
    return out;
}

std::string print_expression(const Signature& sig, const NumericElement& x) {
    if (x.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : x.terms()) {
        if (!out.empty()) out += " + ";
        out += "(" + CoefficientTraits<Complex>::to_string(c) + ")";
        if (!m.is_identity()) out += " " + to_string(sig, m);
    }
    return out;
}

} // namespace dnc
