#pragma once

// Reference computations used by the tests. Nothing here calls the
// library's rewriting or representation code.

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <utility>
#include <vector>

#include "dnc/algebra.hpp"

namespace oracle {

using cplx = std::complex<double>;

/// Normal form by stable-sorting letters by generator index. Moving a letter
/// of index j past a letter of index i < j costs z_ji^{sigma_a sigma_b};
/// then each index block is reduced with s^* s = 1 (and s s^* = 1 for
/// unitaries).
inline dnc::PhasedMonomial inversion_normalize(const dnc::Signature& sig, const dnc::Word& w) {
    dnc::Phase phase;
    for (std::size_t a = 0; a < w.size(); ++a)
        for (std::size_t b = a + 1; b < w.size(); ++b)
            if (w[a].index > w[b].index && sig.twisted()) {
                int sa = w[a].star ? -1 : 1, sb = w[b].star ? -1 : 1;
                phase *= dnc::Phase::z(w[a].index, w[b].index, sa * sb);
            }
    dnc::NormalMonomial m(sig.n());
    for (int i = 1; i <= sig.n(); ++i) {
        std::int64_t e = 0, f = 0;  // current block is s^e s^{*f}
        for (const auto& letter : w) {
            if (letter.index != i) continue;
            if (letter.star) ++f;
            else if (sig.is_isometry(i) && f > 0) --f;  // s^* s = 1
            else if (sig.is_isometry(i)) ++e;
            else if (f > 0) --f;
            else ++e;
        }
        m.power(i) = sig.is_isometry(i) ? dnc::NormalMonomial::Power{e, f} : dnc::NormalMonomial::Power{e - f, 0};
    }
    return {phase, m};
}

/// Dense model of the standard representation on the window
/// 0 <= k_i <= K (isometries), |k_j| <= K (unitaries), with numeric z_ij
/// computed straight from the angles. Images leaving the window are dropped.
class DenseRep {
public:
    DenseRep(const dnc::Signature& sig, int K) : sig_(sig), K_(K) {
        n_ = sig.n();
        z_.assign(static_cast<std::size_t>((n_ + 1) * (n_ + 1)), cplx(1));
        for (int i = 1; i <= n_; ++i)
            for (int j = i + 1; j <= n_; ++j) {
                double phi = sig.twisted() ? sig.angles().value(i, j) : 0.0;
                z(i, j) = std::polar(1.0, 2 * std::numbers::pi * phi);
                z(j, i) = std::conj(z(i, j));
            }
        size_ = 1;
        for (int i = 1; i <= n_; ++i) size_ *= static_cast<std::size_t>(width(i));
    }

    std::size_t size() const { return size_; }

    std::vector<std::int64_t> label(std::size_t flat) const {
        std::vector<std::int64_t> k(static_cast<std::size_t>(n_));
        for (int i = n_; i >= 1; --i) {
            auto w = static_cast<std::size_t>(width(i));
            k[static_cast<std::size_t>(i - 1)] = static_cast<std::int64_t>(flat % w) + low(i);
            flat /= w;
        }
        return k;
    }

    std::ptrdiff_t flat(const std::vector<std::int64_t>& k) const {
        std::size_t out = 0;
        for (int i = 1; i <= n_; ++i) {
            auto v = k[static_cast<std::size_t>(i - 1)];
            if (v < low(i) || v > K_) return -1;
            out = out * static_cast<std::size_t>(width(i)) + static_cast<std::size_t>(v - low(i));
        }
        return static_cast<std::ptrdiff_t>(out);
    }

    /// Gamma_i or Gamma_i^* on a dense vector.
    std::vector<cplx> letter(const dnc::Letter& l, const std::vector<cplx>& v) const {
        std::vector<cplx> out(size_);
        const int i = l.index;
        for (std::size_t s = 0; s < size_; ++s) {
            if (v[s] == cplx(0)) continue;
            auto k = label(s);
            auto& ki = k[static_cast<std::size_t>(i - 1)];
            if (l.star && sig_.is_isometry(i) && ki == 0) continue;
            cplx c = v[s];
            for (int j = 1; j < i; ++j) {
                auto p = std::pow(z(i, j), static_cast<double>(k[static_cast<std::size_t>(j - 1)]));
                c *= l.star ? std::conj(p) : p;
            }
            ki += l.star ? -1 : 1;
            auto t = flat(k);
            if (t >= 0) out[static_cast<std::size_t>(t)] += c;
        }
        return out;
    }

    std::vector<cplx> word(const dnc::Word& w, std::vector<cplx> v) const {
        for (auto it = w.rbegin(); it != w.rend(); ++it) v = letter(*it, v);
        return v;
    }

    std::vector<cplx> basis(const std::vector<std::int64_t>& k) const {
        std::vector<cplx> v(size_);
        v[static_cast<std::size_t>(flat(k))] = 1;
        return v;
    }

    /// Value of an exact coefficient with the same numeric angles.
    cplx coefficient(const dnc::PhasePolynomial& c) const { return c.eval(sig_.angles()); }

    /// sigma(x) on a dense vector, x given by its terms.
    std::vector<cplx> element(const dnc::ExactElement& x, const std::vector<cplx>& v) const {
        std::vector<cplx> out(size_);
        for (const auto& [m, c] : x.terms()) {
            auto img = word(m.word(sig_), v);
            auto cc = coefficient(c);
            for (std::size_t s = 0; s < size_; ++s) out[s] += cc * img[s];
        }
        return out;
    }

private:
    cplx& z(int i, int j) { return z_[static_cast<std::size_t>(i * (n_ + 1) + j)]; }
    const cplx& z(int i, int j) const { return z_[static_cast<std::size_t>(i * (n_ + 1) + j)]; }
    std::int64_t low(int i) const { return sig_.is_isometry(i) ? 0 : -K_; }
    int width(int i) const { return sig_.is_isometry(i) ? K_ + 1 : 2 * K_ + 1; }

    dnc::Signature sig_;
    int K_;
    int n_;
    std::size_t size_;
    std::vector<cplx> z_;
};

inline double distance(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double d = 0;
    for (std::size_t s = 0; s < a.size(); ++s) d = std::max(d, std::abs(a[s] - b[s]));
    return d;
}

} // namespace oracle
