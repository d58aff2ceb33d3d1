#include "dnc/stinespring.hpp"

#include <algorithm>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "dnc/errors.hpp"
#include "dnc/normkit.hpp"
#include "dnc/representation.hpp"

namespace dnc {

namespace {

void check_label(const Signature& sig, const IsometryIndex& k) {
    if (k.size() != static_cast<std::size_t>(sig.l()))
        throw Error(ErrorCode::precondition_violated, "ee_k label needs one entry per isometry");
    for (auto v : k)
        if (v < 0) throw Error(ErrorCode::precondition_violated, "ee_k label must be nonnegative");
}

Word power_word(int i, std::int64_t count, bool star) {
    Word w(static_cast<std::size_t>(std::llabs(count)), Letter{i, star != (count < 0)});
    return w;
}

} // namespace

template <class C>
C phi_eigenvalue(const Signature& sig, const Element<C>& x, const IsometryIndex& k) {
    check_label(sig, k);
    auto th = theta(sig, x);
    if (th.is_zero()) return C{};
    auto sym = diagonal_symbol(sig, th);
    // symbol slots are the isometry generators in order, matching k
    return sym.at(k);
}

template <class C>
C phi_eigenvalue_direct(const Signature& sig, const Element<C>& x, const IsometryIndex& k) {
    check_label(sig, k);
    std::int64_t reach = 0;
    for (const auto& [m, c] : x.terms()) reach = std::max<std::int64_t>(reach, static_cast<std::int64_t>(m.word(sig).size()));
    std::int64_t top = 0;
    for (auto v : k) top = std::max(top, v);
    Truncation trunc(top + reach, 0);
    MultiIndex full(static_cast<std::size_t>(sig.n()), 0);
    std::size_t d = 0;
    for (int i = 1; i <= sig.n(); ++i)
        if (sig.is_isometry(i)) full[static_cast<std::size_t>(i - 1)] = k[d++];
    auto image = apply_element(sig, trunc, x, TruncatedState<C>::basis(full));
    return image.amplitude(full);
}

template <class C>
C st_inner(const Signature& sig, const StVector<C>& v, const StVector<C>& w) {
    if (v.k != w.k) {
        check_label(sig, v.k);
        check_label(sig, w.k);
        return C{};
    }
    return phi_eigenvalue(sig, mul(sig, adjoint(sig, w.x), v.x), v.k);
}

template <class C>
GramMatrix<C> gram_matrix(const Signature& sig, const std::vector<StVector<C>>& vectors) {
    const std::size_t n = vectors.size();
    GramMatrix<C> g(n, std::vector<C>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r; c < n; ++c) {
            // entry (r, c) = <v_c, v_r>, so that g is the matrix of the form
            g[r][c] = st_inner(sig, vectors[c], vectors[r]);
            if (c != r) g[c][r] = CoefficientTraits<C>::conj(g[r][c]);
        }
    return g;
}

template <class C>
bool is_identity(const GramMatrix<C>& g) {
    for (std::size_t r = 0; r < g.size(); ++r)
        for (std::size_t c = 0; c < g.size(); ++c) {
            if (r == c ? !(g[r][c] == CoefficientTraits<C>::one()) : !CoefficientTraits<C>::is_zero(g[r][c]))
                return false;
        }
    return true;
}

template <class C>
double gram_min_eigenvalue(const GramMatrix<C>& g, const AngleAssignment& angles) {
    if (g.empty()) return 0;
    const auto n = static_cast<Eigen::Index>(g.size());
    Eigen::MatrixXcd m(n, n);
    for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index c = 0; c < n; ++c)
            m(r, c) = CoefficientTraits<C>::to_complex(g[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)], angles);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

std::vector<StVector<PhasePolynomial>> summand_basis(const Signature& sig, const IsometryIndex& k, std::int64_t E,
                                                     std::int64_t G) {
    check_label(sig, k);
    if (E < 0 || G < 0) throw Error(ErrorCode::precondition_violated, "exponent bounds must be nonnegative");
    std::vector<int> iso, uni;
    for (int i = 1; i <= sig.n(); ++i) (sig.is_isometry(i) ? iso : uni).push_back(i);

    Word tail;
    for (std::size_t d = 0; d < iso.size(); ++d) {
        auto w = power_word(iso[d], k[d], true);
        tail.insert(tail.end(), w.begin(), w.end());
    }

    std::vector<StVector<PhasePolynomial>> out;
    std::vector<std::int64_t> t(sig.n(), 0);
    for (int j : uni) t[static_cast<std::size_t>(j - 1)] = -G;
    for (;;) {
        Word w;
        for (int i = 1; i <= sig.n(); ++i) {
            auto p = power_word(i, t[static_cast<std::size_t>(i - 1)], false);
            w.insert(w.end(), p.begin(), p.end());
        }
        w.insert(w.end(), tail.begin(), tail.end());
        out.push_back({from_word<PhasePolynomial>(sig, w), k});

        int d = sig.n();
        for (; d >= 1; --d) {
            auto& v = t[static_cast<std::size_t>(d - 1)];
            std::int64_t hi = sig.is_isometry(d) ? E : G;
            if (v < hi) {
                ++v;
                break;
            }
            v = sig.is_isometry(d) ? 0 : -G;
        }
        if (d == 0) return out;
    }
}

UnimodularReduction check_unimodular_reduction(const Signature& sig, const IsometryIndex& e, const IsometryIndex& k) {
    check_label(sig, k);
    check_label(sig, e);
    for (std::size_t d = 0; d < e.size(); ++d)
        if (e[d] > k[d]) throw Error(ErrorCode::precondition_violated, "reduction needs e <= k");

    std::vector<int> iso;
    for (int i = 1; i <= sig.n(); ++i)
        if (sig.is_isometry(i)) iso.push_back(i);
    Word lhs, rhs, stars;
    for (std::size_t d = 0; d < iso.size(); ++d) {
        auto p = power_word(iso[d], e[d], false);
        lhs.insert(lhs.end(), p.begin(), p.end());
        auto s = power_word(iso[d], k[d], true);
        stars.insert(stars.end(), s.begin(), s.end());
        auto r = power_word(iso[d], k[d] - e[d], true);
        rhs.insert(rhs.end(), r.begin(), r.end());
    }
    lhs.insert(lhs.end(), stars.begin(), stars.end());

    StVector<PhasePolynomial> v{from_word<PhasePolynomial>(sig, lhs), k};
    StVector<PhasePolynomial> w{from_word<PhasePolynomial>(sig, rhs), k};
    auto vw = st_inner(sig, v, w);
    auto ww = st_inner(sig, w, w);
    if (ww != PhasePolynomial(1)) throw std::logic_error("reduced vector is not a unit vector");
    auto c = vw.as_phase();
    if (!c) throw std::logic_error("inner product is not unimodular: " + vw.to_string());
    StVector<PhasePolynomial> diff{v.x - PhasePolynomial(*c) * w.x, k};
    return {*c, st_inner(sig, diff, diff)};
}

#define DNC_INSTANTIATE(C)                                                                           \
    template C phi_eigenvalue(const Signature&, const Element<C>&, const IsometryIndex&);              \
    template C phi_eigenvalue_direct(const Signature&, const Element<C>&, const IsometryIndex&);       \
    template C st_inner(const Signature&, const StVector<C>&, const StVector<C>&);                     \
    template GramMatrix<C> gram_matrix(const Signature&, const std::vector<StVector<C>>&);             \
    template bool is_identity(const GramMatrix<C>&);                                                   \
    template double gram_min_eigenvalue(const GramMatrix<C>&, const AngleAssignment&);

DNC_INSTANTIATE(PhasePolynomial)
DNC_INSTANTIATE(Complex)

#undef DNC_INSTANTIATE

} // namespace dnc
