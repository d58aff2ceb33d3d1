#include "dnc/rational.hpp"

#include <stdexcept>

namespace dnc {

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    mpq_class d = o.norm_squared();
    if (sgn(d) == 0) throw std::domain_error("division by zero in Q(i)");
    *this *= o.conj();
    re_ /= d;
    im_ /= d;
    return *this;
}

std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b) {
    int c = cmp(a.re_, b.re_);
    if (c == 0) c = cmp(a.im_, b.im_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string GaussianRational::to_string() const {
    if (is_zero()) return "0";
    if (sgn(im_) == 0) return re_.get_str();
    std::string imag = (im_ == 1) ? "" : (im_ == -1 ? "-" : im_.get_str());
    if (sgn(re_) == 0) return imag + "i";
    std::string sep = sgn(im_) > 0 ? "+" : "";
    return re_.get_str() + sep + imag + "i";
}

mpq_class parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational");
    mpq_class q;
    try {
        auto slash = text.find('/');
        auto check = [](const std::string& s) {
            std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
            if (start >= s.size()) return false;
            for (std::size_t k = start; k < s.size(); ++k)
                if (s[k] < '0' || s[k] > '9') return false;
            return true;
        };
        if (slash == std::string::npos) {
            if (!check(text)) throw std::invalid_argument("bad integer");
            std::string t = text[0] == '+' ? text.substr(1) : text;
            q = mpq_class(mpz_class(t));
        } else {
            std::string num = text.substr(0, slash);
            std::string den = text.substr(slash + 1);
            if (!check(num) || !check(den) || den[0] == '-' || den[0] == '+')
                throw std::invalid_argument("bad fraction");
            if (num[0] == '+') num = num.substr(1);
            mpz_class d(den);
            if (d == 0) throw std::invalid_argument("zero denominator");
            q = mpq_class(mpz_class(num), d);
            q.canonicalize();
        }
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a rational: '" + text + "'");
    }
    return q;
}

} // namespace dnc
