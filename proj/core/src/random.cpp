#include "dnc/random.hpp"

namespace dnc {

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

AngleAssignment random_angles(int n, Rng& rng, int max_den) {
    AngleAssignment a(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            auto q = uniform(rng, 1, max_den);
            mpq_class v(static_cast<long>(uniform(rng, 0, q - 1)), static_cast<unsigned long>(q));
            v.canonicalize();
            a = a.with(i, j, v);
        }
    return a;
}

AngleAssignment random_numeric_angles(int n, Rng& rng) {
    AngleAssignment a(n, AngleMode::numeric);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) a = a.with(i, j, dist(rng));
    return a;
}

Signature random_signature(Rng& rng, int max_n) {
    int n = static_cast<int>(uniform(rng, 1, max_n));
    int l = static_cast<int>(uniform(rng, 0, n));
    return Signature(n, l, random_angles(n, rng));
}

Word random_word(const Signature& sig, std::size_t max_len, Rng& rng) {
    if (sig.n() == 0) return {};
    Word w(static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(max_len))));
    for (auto& letter : w) letter = Letter{static_cast<int>(uniform(rng, 1, sig.n())), uniform(rng, 0, 1) == 1};
    return w;
}

NormalMonomial random_monomial(const Signature& sig, const ExponentBox& box, Rng& rng) {
    NormalMonomial m(sig.n());
    for (int i = 1; i <= sig.n(); ++i) {
        if (sig.is_isometry(i)) m.power(i) = {uniform(rng, 0, box.E), uniform(rng, 0, box.F)};
        else m.power(i) = {uniform(rng, -box.G, box.G), 0};
    }
    return m;
}

Phase random_phase(const Signature& sig, Rng& rng) {
    Phase p;
    if (sig.n() < 2 || uniform(rng, 0, 3) == 0) return p;
    for (int i = 1; i <= sig.n(); ++i)
        for (int j = i + 1; j <= sig.n(); ++j)
            if (uniform(rng, 0, 1)) p *= Phase::w(i, j, uniform(rng, -2, 2));
    return p;
}

GaussianRational random_scalar(Rng& rng) {
    for (;;) {
        mpq_class re(static_cast<long>(uniform(rng, -4, 4)), static_cast<unsigned long>(uniform(rng, 1, 3)));
        mpq_class im(0);
        if (uniform(rng, 0, 2) == 0)
            im = mpq_class(static_cast<long>(uniform(rng, -3, 3)), static_cast<unsigned long>(uniform(rng, 1, 2)));
        GaussianRational c(re, im);
        if (!c.is_zero()) return c;
    }
}

ExactElement random_element(const Signature& sig, const ExponentBox& box, std::size_t max_terms, Rng& rng) {
    ExactElement x;
    if (max_terms == 0) return x;
    while (x.is_zero()) {
        auto terms = uniform(rng, 1, static_cast<std::int64_t>(max_terms));
        for (std::int64_t t = 0; t < terms; ++t) {
            PhasePolynomial c(random_phase(sig, rng), random_scalar(rng));
            if (uniform(rng, 0, 4) == 0) c += PhasePolynomial(random_phase(sig, rng), random_scalar(rng));
            x.add_term(random_monomial(sig, box, rng), c);
        }
    }
    return x;
}

ExactElement random_projection_element(const Signature& sig, std::int64_t max_exp, std::size_t max_terms, Rng& rng) {
    ExactElement x;
    if (max_terms == 0) return x;
    while (x.is_zero()) {
        auto terms = uniform(rng, 1, static_cast<std::int64_t>(max_terms));
        for (std::int64_t t = 0; t < terms; ++t) {
            NormalMonomial m(sig.n());
            for (int i = 1; i <= sig.n(); ++i)
                if (sig.is_isometry(i)) {
                    auto e = uniform(rng, 0, max_exp);
                    m.power(i) = {e, e};
                }
            x.add_term(m, PhasePolynomial(random_scalar(rng)));
        }
    }
    return x;
}

} // namespace dnc
