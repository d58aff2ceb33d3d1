#include "dnc/normkit.hpp"

#include <algorithm>
#include <cmath>

#include "dnc/errors.hpp"

namespace dnc {

template <class C>
std::vector<std::int64_t> DiagonalSymbol<C>::cell(std::size_t flat) const {
    std::vector<std::int64_t> alpha(slots.size());
    auto radix = static_cast<std::size_t>(cutoff + 1);
    for (std::size_t d = slots.size(); d-- > 0;) {
        alpha[d] = static_cast<std::int64_t>(flat % radix);
        flat /= radix;
    }
    return alpha;
}

template <class C>
const C& DiagonalSymbol<C>::at(const std::vector<std::int64_t>& k) const {
    if (k.size() != slots.size()) throw std::invalid_argument("cell label has wrong length");
    std::size_t flat = 0;
    for (auto ki : k) {
        if (ki < 0) throw std::invalid_argument("negative cell label");
        flat = flat * static_cast<std::size_t>(cutoff + 1) + static_cast<std::size_t>(std::min(ki, cutoff));
    }
    return values[flat];
}

template <class C>
bool in_projection_algebra(const Signature& sig, const Element<C>& x) {
    for (const auto& [m, c] : x.terms())
        for (int i = 1; i <= sig.n(); ++i) {
            const auto& p = m.power(i);
            if (sig.is_isometry(i) ? p.e != p.f : p.e != 0) return false;
        }
    return true;
}

template <class C>
DiagonalSymbol<C> diagonal_symbol(const Signature& sig, const Element<C>& x) {
    if (!in_projection_algebra(sig, x))
        throw Error(ErrorCode::not_in_projection_algebra, "element has monomials outside the projection subalgebra");
    DiagonalSymbol<C> sym;
    for (int i = 1; i <= sig.n(); ++i)
        if (sig.is_isometry(i)) sym.slots.push_back(i);
    for (const auto& [m, c] : x.terms())
        for (int i : sym.slots) sym.cutoff = std::max(sym.cutoff, m.power(i).e);

    std::size_t cells = 1;
    for (std::size_t d = 0; d < sym.slots.size(); ++d) cells *= static_cast<std::size_t>(sym.cutoff + 1);
    sym.values.assign(cells, C{});
    // s^e s^{*e} acts on ee_k as the indicator of e_i <= k_i for every slot
    for (std::size_t flat = 0; flat < cells; ++flat) {
        auto alpha = sym.cell(flat);
        C acc{};
        for (const auto& [m, c] : x.terms()) {
            bool below = true;
            for (std::size_t d = 0; d < sym.slots.size() && below; ++d)
                below = m.power(sym.slots[d]).e <= alpha[d];
            if (below) acc = acc + c;
        }
        sym.values[flat] = std::move(acc);
    }
    return sym;
}

template <class C>
NormValue pal_norm(const Signature& sig, const Element<C>& x) {
    auto sym = diagonal_symbol(sig, x);
    NormValue out;
    if constexpr (CoefficientTraits<C>::exact) {
        mpq_class best = 0;
        bool exact = true;
        double approx = 0;
        for (const auto& v : sym.values) {
            approx = std::max(approx, std::abs(v.eval(sig.angles())));
            if (v.size() > 1) {
                exact = false;
                continue;
            }
            if (!v.is_zero()) best = std::max(best, v.terms().begin()->second.norm_squared());
        }
        if (exact) {
            out.norm_squared = best;
            out.norm = std::sqrt(best.get_d());
        } else {
            out.norm = approx;
        }
    } else {
        for (const auto& v : sym.values) out.norm = std::max(out.norm, std::abs(v));
    }
    return out;
}

#define DNC_INSTANTIATE(C)                                                        \
    template struct DiagonalSymbol<C>;                                            \
    template bool in_projection_algebra(const Signature&, const Element<C>&);     \
    template DiagonalSymbol<C> diagonal_symbol(const Signature&, const Element<C>&); \
    template NormValue pal_norm(const Signature&, const Element<C>&);

DNC_INSTANTIATE(PhasePolynomial)
DNC_INSTANTIATE(Complex)

#undef DNC_INSTANTIATE

} // namespace dnc
