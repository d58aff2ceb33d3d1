#include "dnc/deformation.hpp"

#include <cmath>
#include <numbers>

#include "dnc/errors.hpp"

namespace dnc {

mpq_class ThetaMatrix::exact_entry(int i, int j) const {
    if (i == j) return 0;
    if (i < j) return -angles_.exact_value(i, j) / 2;
    return angles_.exact_value(j, i) / 2;
}

double ThetaMatrix::entry(int i, int j) const {
    if (i == j) return 0;
    if (i < j) return -angles_.value(i, j) / 2;
    return angles_.value(j, i) / 2;
}

double ThetaMatrix::pairing(const Degree& p, const Degree& q) const {
    double acc = 0;
    for (int i = 1; i <= n(); ++i)
        for (int j = 1; j <= n(); ++j)
            acc += entry(i, j) * static_cast<double>(p[static_cast<std::size_t>(j - 1)]) *
                   static_cast<double>(q[static_cast<std::size_t>(i - 1)]);
    return acc;
}

DeformationContext::DeformationContext(const Signature& target)
    : target_(target), base_(target.untwisted()), theta_(target.angles()) {}

Phase cocycle(const DeformationContext& ctx, const Degree& p, const Degree& q) {
    const int n = ctx.target().n();
    if (p.size() != static_cast<std::size_t>(n) || q.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("degree length does not match the signature");
    Phase out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            auto a = static_cast<std::size_t>(i - 1), b = static_cast<std::size_t>(j - 1);
            if (auto e = p[a] * q[b] - p[b] * q[a]; e != 0) out *= Phase::w(i, j, e);
        }
    return out;
}

template <class C>
Element<C> deformed_mul(const DeformationContext& ctx, const Element<C>& x, const Element<C>& y) {
    const auto& base = ctx.base();
    Element<C> out;
    for (const auto& [mx, cx] : x.terms()) {
        auto px = degree(base, mx);
        for (const auto& [my, cy] : y.terms()) {
            auto prod = monomial_product(base, mx, my);
            Phase ph = prod.phase * cocycle(ctx, px, degree(base, my));
            out.add_term(prod.monomial, CoefficientTraits<C>::times_phase(cx * cy, ph, ctx.angles()));
        }
    }
    return out;
}

template <class C>
Element<C> psi(const DeformationContext& ctx, const Element<C>& x) {
    const int n = ctx.target().n();
    Element<C> out;
    for (const auto& [m, c] : x.terms()) {
        auto p = degree(ctx.target(), m);
        Phase ph;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (auto e = p[static_cast<std::size_t>(i - 1)] * p[static_cast<std::size_t>(j - 1)]; e != 0)
                    ph *= Phase::w(i, j, e);
        out.add_term(m, CoefficientTraits<C>::times_phase(c, ph, ctx.angles()));
    }
    return out;
}

Phase t_phase(const DeformationContext& ctx, const MultiIndex& k) {
    const int n = ctx.target().n();
    if (k.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("basis label has wrong length");
    Phase out;
    // w_{p,q} = w_{q,p}^{-1} for p > q
    for (int q = 1; q <= n; ++q)
        for (int p = q + 1; p <= n; ++p)
            if (auto e = k[static_cast<std::size_t>(p - 1)] * k[static_cast<std::size_t>(q - 1)]; e != 0)
                out *= Phase::w(q, p, -e);
    return out;
}

template <class C>
TruncatedState<C> deformed_apply(const DeformationContext& ctx, const Truncation& trunc, const Element<C>& x,
                                 const TruncatedState<C>& v) {
    const auto& base = ctx.base();
    TruncatedState<C> out;
    for (const auto& [m, c] : x.terms()) {
        auto p = degree(base, m);
        Word w = m.word(base);
        for (const auto& [q, a] : v.amplitudes()) {
            auto img = apply_word(base, trunc, w, q);
            if (!img) continue;
            Phase ph = img->phase * cocycle(ctx, p, Degree(q.begin(), q.end()));
            out.add(img->index, CoefficientTraits<C>::times_phase(c * a, ph, ctx.angles()));
        }
    }
    return out;
}

bool IntertwinerReport::ok(double tolerance) const {
    for (const auto& r : rows)
        if (r.mismatches != 0 || r.max_residual > tolerance) return false;
    return true;
}

IntertwinerReport verify_intertwiner(const DeformationContext& ctx, const Truncation& trunc) {
    const auto& target = ctx.target();
    const auto& angles = ctx.angles();
    const bool exact = angles.exact();
    const std::int64_t headroom = std::max<std::int64_t>(trunc.band(), 1);
    const auto basis = trunc.band_basis(target, headroom);

    IntertwinerReport report;
    report.mode = angles.mode();
    for (int i = 1; i <= target.n(); ++i)
        for (bool star : {false, true}) {
            IntertwinerRow row;
            row.generator = i;
            row.star = star;
            Degree p(static_cast<std::size_t>(target.n()), 0);
            p[static_cast<std::size_t>(i - 1)] = star ? -1 : 1;
            auto image_psi = psi(ctx, ExactElement::generator(target, i, star));
            for (const auto& k : basis) {
                ++row.checked;
                // left side: T^* sigma(s_i) T e_k in the target representation
                auto lhs = apply_letter(target, trunc, Letter{i, star}, k);
                // right side: pi_Theta(psi(s_i)) e_k
                auto rhs = deformed_apply(ctx, trunc, image_psi, ExactState::basis(k));
                bool mismatch = false;
                double residual = 0;
                if (!lhs) {
                    mismatch = !rhs.is_zero();
                } else if (exact) {
                    Phase l = t_phase(ctx, k) * lhs->phase * t_phase(ctx, lhs->index).inverse();
                    ExactState expected;
                    expected.add(lhs->index, PhasePolynomial(l));
                    mismatch = rhs != expected;
                } else {
                    Complex l = phase_eval(t_phase(ctx, k), angles).value * phase_eval(lhs->phase, angles).value *
                                std::conj(phase_eval(t_phase(ctx, lhs->index), angles).value);
                    // deformed side straight from Theta, independent of the phase words
                    Degree q(k.begin(), k.end());
                    Complex r = std::polar(1.0, 2 * std::numbers::pi * ctx.theta().pairing(p, q));
                    residual = std::abs(l - r);
                    mismatch = rhs.amplitudes().size() != 1 || rhs.amplitudes().begin()->first != lhs->index;
                }
                row.max_residual = std::max(row.max_residual, residual);
                if (mismatch) ++row.mismatches;
                if ((mismatch || residual > 1e-12) && row.witness.empty()) row.witness = k;
            }
            report.rows.push_back(std::move(row));
        }
    return report;
}

#define DNC_INSTANTIATE(C)                                                                              \
    template Element<C> deformed_mul(const DeformationContext&, const Element<C>&, const Element<C>&);    \
    template Element<C> psi(const DeformationContext&, const Element<C>&);                                \
    template TruncatedState<C> deformed_apply(const DeformationContext&, const Truncation&, const Element<C>&, \
                                              const TruncatedState<C>&);

DNC_INSTANTIATE(PhasePolynomial)
DNC_INSTANTIATE(Complex)

#undef DNC_INSTANTIATE

} // namespace dnc
