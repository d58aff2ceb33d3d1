#include "dnc/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "dnc/errors.hpp"

namespace dnc {

// ---------------------------------------------------------------------------
// Signature

Signature::Signature(int n, int l, AngleAssignment angles) : angles_(std::move(angles)) {
    if (n < 0 || l < 0 || l > n)
        throw Error(ErrorCode::invalid_signature,
                    "signature needs 0 <= l <= n, got n=" + std::to_string(n) + " l=" + std::to_string(l));
    if (angles_.n() != n)
        throw Error(ErrorCode::invalid_signature, "angle assignment is for a different generator count");
    kinds_.assign(static_cast<std::size_t>(n), GeneratorKind::unitary);
    std::fill_n(kinds_.begin(), l, GeneratorKind::isometry);
    isometries_ = l;
}

Signature Signature::with_kinds(std::vector<GeneratorKind> kinds, AngleAssignment angles) {
    if (angles.n() != static_cast<int>(kinds.size()))
        throw Error(ErrorCode::invalid_signature, "angle assignment is for a different generator count");
    Signature s;
    s.isometries_ = static_cast<int>(std::count(kinds.begin(), kinds.end(), GeneratorKind::isometry));
    s.kinds_ = std::move(kinds);
    s.angles_ = std::move(angles);
    return s;
}

Signature Signature::untwisted() const {
    Signature s = *this;
    s.twisted_ = false;
    return s;
}

Phase Signature::z(int i, int j) const {
    if (!twisted_ || i == j) return {};
    return Phase::z(i, j);
}

// ---------------------------------------------------------------------------
// Words and monomials

std::string to_string(const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    for (const auto& letter : w) {
        if (!out.empty()) out += ' ';
        out += 's' + std::to_string(letter.index);
        if (letter.star) out += '*';
    }
    return out;
}

NormalMonomial NormalMonomial::from_exponents(const Signature& sig, const std::vector<std::int64_t>& e,
                                              const std::vector<std::int64_t>& f,
                                              const std::vector<std::int64_t>& g) {
    if (e.size() != static_cast<std::size_t>(sig.l()) || f.size() != e.size() ||
        g.size() != static_cast<std::size_t>(sig.n() - sig.l()))
        throw std::invalid_argument("exponent vectors do not match the signature");
    NormalMonomial m(sig.n());
    std::size_t iso = 0, uni = 0;
    for (int i = 1; i <= sig.n(); ++i) {
        if (sig.is_isometry(i)) {
            if (e[iso] < 0 || f[iso] < 0) throw std::invalid_argument("isometry exponents must be >= 0");
            m.power(i) = {e[iso], f[iso]};
            ++iso;
        } else {
            m.power(i) = {g[uni++], 0};
        }
    }
    return m;
}

NormalMonomial NormalMonomial::generator(const Signature& sig, int i, bool star) {
    if (i < 1 || i > sig.n()) throw Error(ErrorCode::index_out_of_range, "generator index out of range");
    NormalMonomial m(sig.n());
    if (sig.is_isometry(i)) m.power(i) = star ? Power{0, 1} : Power{1, 0};
    else m.power(i) = {star ? -1 : 1, 0};
    return m;
}

bool NormalMonomial::is_identity() const {
    return std::all_of(powers_.begin(), powers_.end(), [](const Power& p) { return p.e == 0 && p.f == 0; });
}

Word NormalMonomial::word(const Signature& sig) const {
    Word w;
    for (int i = 1; i <= n(); ++i) {
        const Power& p = power(i);
        if (sig.is_isometry(i)) {
            w.insert(w.end(), static_cast<std::size_t>(p.e), Letter{i, false});
            w.insert(w.end(), static_cast<std::size_t>(p.f), Letter{i, true});
        } else {
            w.insert(w.end(), static_cast<std::size_t>(std::abs(p.e)), Letter{i, p.e < 0});
        }
    }
    return w;
}

std::string to_string(const Signature& sig, const NormalMonomial& m) {
    std::string out;
    auto factor = [&out](char g, int i, bool star, std::int64_t k) {
        if (k == 0) return;
        if (!out.empty()) out += ' ';
        out += g + std::to_string(i);
        if (star) out += '*';
        if (k != 1) out += '^' + std::to_string(k);
    };
    for (int i = 1; i <= m.n(); ++i) {
        const auto& p = m.power(i);
        if (sig.is_isometry(i)) {
            factor('s', i, false, p.e);
            factor('s', i, true, p.f);
        } else {
            factor('u', i, false, p.e);
        }
    }
    return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------------------
// Rewriting

namespace {

int sign(const Letter& l) { return l.star ? -1 : 1; }

enum class Redex { none, swap, cancel };

Redex redex_at(const Signature& sig, const Word& w, std::size_t p) {
    const Letter& a = w[p];
    const Letter& b = w[p + 1];
    if (a.index > b.index) return Redex::swap;
    if (a.index == b.index) {
        if (a.star && !b.star) return Redex::cancel;
        if (!a.star && b.star && !sig.is_isometry(a.index)) return Redex::cancel;
    }
    return Redex::none;
}

void apply_redex(const Signature& sig, Word& w, std::size_t p, Redex r, Phase& phase) {
    if (r == Redex::swap) {
        // X Y = z_{ji}^{sigma_X sigma_Y} Y X for X of index j, Y of index i
        phase *= sig.z(w[p].index, w[p + 1].index).pow(sign(w[p]) * sign(w[p + 1]));
        std::swap(w[p], w[p + 1]);
    } else {
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(p), w.begin() + static_cast<std::ptrdiff_t>(p) + 2);
    }
}

NormalMonomial read_normal_word(const Signature& sig, const Word& w) {
    NormalMonomial m(sig.n());
    for (const auto& letter : w) {
        auto& pw = m.power(letter.index);
        if (sig.is_isometry(letter.index)) (letter.star ? pw.f : pw.e) += 1;
        else pw.e += letter.star ? -1 : 1;
    }
    return m;
}

} // namespace

PhasedMonomial normalize(const Signature& sig, const Word& input, RewriteStrategy strategy,
                         std::mt19937_64* rng) {
    for (const auto& letter : input)
        if (letter.index < 1 || letter.index > sig.n())
            throw Error(ErrorCode::index_out_of_range,
                        "letter index " + std::to_string(letter.index) + " outside 1.." + std::to_string(sig.n()));
    if (strategy == RewriteStrategy::randomized && rng == nullptr)
        throw std::invalid_argument("randomized rewriting needs a random engine");

    Word w = input;
    Phase phase;
    std::vector<std::pair<std::size_t, Redex>> redexes;
    for (;;) {
        if (w.size() < 2) break;
        if (strategy == RewriteStrategy::leftmost) {
            std::size_t p = 0;
            Redex r = Redex::none;
            for (; p + 1 < w.size(); ++p)
                if ((r = redex_at(sig, w, p)) != Redex::none) break;
            if (r == Redex::none) break;
            apply_redex(sig, w, p, r, phase);
        } else {
            redexes.clear();
            for (std::size_t p = 0; p + 1 < w.size(); ++p)
                if (Redex r = redex_at(sig, w, p); r != Redex::none) redexes.emplace_back(p, r);
            if (redexes.empty()) break;
            std::uniform_int_distribution<std::size_t> pick(0, redexes.size() - 1);
            auto [p, r] = redexes[pick(*rng)];
            apply_redex(sig, w, p, r, phase);
        }
    }
    return {std::move(phase), read_normal_word(sig, w)};
}

// ---------------------------------------------------------------------------
// Monomial arithmetic

Degree degree(const Signature& sig, const NormalMonomial& m) {
    Degree p(static_cast<std::size_t>(m.n()));
    for (int i = 1; i <= m.n(); ++i) {
        const auto& pw = m.power(i);
        p[static_cast<std::size_t>(i - 1)] = sig.is_isometry(i) ? pw.e - pw.f : pw.e;
    }
    return p;
}

PhasedMonomial monomial_product(const Signature& sig, const NormalMonomial& a, const NormalMonomial& b) {
    if (a.n() != sig.n() || b.n() != sig.n()) throw std::invalid_argument("monomial size mismatch");
    PhasedMonomial out{{}, NormalMonomial(sig.n())};
    if (sig.twisted()) {
        Degree pa = degree(sig, a);
        Degree pb = degree(sig, b);
        for (int j = 2; j <= sig.n(); ++j) {
            std::int64_t dj = pa[static_cast<std::size_t>(j - 1)];
            if (dj == 0) continue;
            for (int i = 1; i < j; ++i) {
                std::int64_t di = pb[static_cast<std::size_t>(i - 1)];
                if (di != 0) out.phase *= sig.z(j, i).pow(dj * di);
            }
        }
    }
    for (int i = 1; i <= sig.n(); ++i) {
        const auto& x = a.power(i);
        const auto& y = b.power(i);
        auto& r = out.monomial.power(i);
        if (sig.is_isometry(i)) {
            if (x.f >= y.e) r = {x.e, x.f - y.e + y.f};
            else r = {x.e + y.e - x.f, y.f};
        } else {
            r = {x.e + y.e, 0};
        }
    }
    return out;
}

PhasedMonomial monomial_adjoint(const Signature& sig, const NormalMonomial& m) {
    PhasedMonomial out{{}, NormalMonomial(sig.n())};
    if (sig.twisted()) {
        Degree p = degree(sig, m);
        for (int j = 2; j <= sig.n(); ++j)
            for (int i = 1; i < j; ++i) {
                std::int64_t k = p[static_cast<std::size_t>(i - 1)] * p[static_cast<std::size_t>(j - 1)];
                if (k != 0) out.phase *= sig.z(j, i).pow(k);
            }
    }
    for (int i = 1; i <= sig.n(); ++i) {
        const auto& x = m.power(i);
        out.monomial.power(i) = sig.is_isometry(i) ? NormalMonomial::Power{x.f, x.e}
                                                   : NormalMonomial::Power{-x.e, 0};
    }
    return out;
}

// ---------------------------------------------------------------------------
// Element operations

template <class C>
Element<C> mul(const Signature& sig, const Element<C>& x, const Element<C>& y) {
    using T = CoefficientTraits<C>;
    Element<C> r;
    for (const auto& [mx, cx] : x.terms())
        for (const auto& [my, cy] : y.terms()) {
            auto pm = monomial_product(sig, mx, my);
            r.add_term(pm.monomial, T::times_phase(cx * cy, pm.phase, sig.angles()));
        }
    return r;
}

template <class C>
Element<C> adjoint(const Signature& sig, const Element<C>& x) {
    using T = CoefficientTraits<C>;
    Element<C> r;
    for (const auto& [m, c] : x.terms()) {
        auto pm = monomial_adjoint(sig, m);
        r.add_term(pm.monomial, T::times_phase(T::conj(c), pm.phase, sig.angles()));
    }
    return r;
}

Element<PhasePolynomial> alpha(const Signature& sig, const std::vector<mpq_class>& t,
                               const Element<PhasePolynomial>& x) {
    if (t.size() != static_cast<std::size_t>(sig.n())) throw std::invalid_argument("torus point has wrong dimension");
    Element<PhasePolynomial> r;
    for (const auto& [m, c] : x.terms()) {
        Degree p = degree(sig, m);
        mpq_class s = 0;
        for (std::size_t i = 0; i < p.size(); ++i) s += mpq_class(p[i]) * t[i];
        s.canonicalize();
        if (!s.get_num().fits_slong_p() || !s.get_den().fits_slong_p())
            throw std::overflow_error("torus character exponent too large");
        r.add_term(m, c * Phase::root_of_unity(s.get_num().get_si(), s.get_den().get_si()));
    }
    return r;
}

Element<Complex> alpha(const Signature& sig, const std::vector<double>& t, const Element<Complex>& x) {
    if (t.size() != static_cast<std::size_t>(sig.n())) throw std::invalid_argument("torus point has wrong dimension");
    Element<Complex> r;
    for (const auto& [m, c] : x.terms()) {
        Degree p = degree(sig, m);
        double s = 0;
        for (std::size_t i = 0; i < p.size(); ++i) s += static_cast<double>(p[i]) * t[i];
        r.add_term(m, c * std::polar(1.0, 2.0 * std::numbers::pi * s));
    }
    return r;
}

namespace {

bool balanced(const Signature& sig, const NormalMonomial& m) {
    for (int i = 1; i <= m.n(); ++i) {
        const auto& p = m.power(i);
        if (sig.is_isometry(i) ? p.e != p.f : p.e != 0) return false;
    }
    return true;
}

} // namespace

template <class C>
Element<C> theta(const Signature& sig, const Element<C>& x) {
    Element<C> r;
    for (const auto& [m, c] : x.terms())
        if (balanced(sig, m)) r.add_term(m, c);
    return r;
}

template <class C>
Element<C> theta_faithful_witness(const Signature& sig, const Element<C>& x) {
    if (x.is_zero()) throw Error(ErrorCode::zero_input, "theta faithfulness needs a nonzero element");
    Element<C> r = theta(sig, mul(sig, adjoint(sig, x), x));
    if (r.is_zero()) throw std::logic_error("theta(x^* x) vanished for nonzero x");
    return r;
}

void check_embedding(const Signature& small, const Signature& big) {
    auto fail = [](const std::string& why) { throw Error(ErrorCode::incompatible_signatures, why); };
    if (big.n() < small.n()) fail("target has fewer generators than the source");
    for (int i = 1; i <= small.n(); ++i)
        if (small.kind(i) != big.kind(i)) fail("generator " + std::to_string(i) + " changes kind");
    if (small.twisted() != big.twisted()) fail("twisted and untwisted signatures do not embed");
    const auto& a = small.angles();
    const auto& b = big.angles();
    if (a.mode() != b.mode()) fail("angle modes differ");
    for (int i = 1; i <= small.n(); ++i)
        for (int j = i + 1; j <= small.n(); ++j) {
            bool same = a.exact() ? a.exact_value(i, j) == b.exact_value(i, j) : a.value(i, j) == b.value(i, j);
            if (!same) fail("phi_" + std::to_string(i) + std::to_string(j) + " differs");
        }
}

template <class C>
Element<C> embed(const Signature& small, const Signature& big, const Element<C>& x) {
    check_embedding(small, big);
    Element<C> r;
    for (const auto& [m, c] : x.terms()) {
        auto powers = m.powers();
        powers.resize(static_cast<std::size_t>(big.n()));
        r.add_term(NormalMonomial(std::move(powers)), c);
    }
    return r;
}

NumericElement to_numeric(const ExactElement& x, const AngleAssignment& angles) {
    NumericElement r;
    for (const auto& [m, c] : x.terms()) r.add_term(m, c.eval(angles));
    return r;
}

template <class C>
Element<C> from_word(const Signature& sig, const Word& w) {
    auto pm = normalize(sig, w);
    return Element<C>::monomial(pm.monomial, CoefficientTraits<C>::from_phase(pm.phase, sig.angles()));
}

#define DNC_INSTANTIATE(C)                                                                    \
    template Element<C> mul(const Signature&, const Element<C>&, const Element<C>&);           \
    template Element<C> adjoint(const Signature&, const Element<C>&);                          \
    template Element<C> theta(const Signature&, const Element<C>&);                            \
    template Element<C> theta_faithful_witness(const Signature&, const Element<C>&);           \
    template Element<C> embed(const Signature&, const Signature&, const Element<C>&);          \
    template Element<C> from_word(const Signature&, const Word&);

DNC_INSTANTIATE(PhasePolynomial)
DNC_INSTANTIATE(Complex)

#undef DNC_INSTANTIATE

} // namespace dnc
