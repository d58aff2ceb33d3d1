#include "dnc/representation.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>

#include "dnc/errors.hpp"

namespace dnc {

std::string to_string(const MultiIndex& k) {
    std::string out = "(";
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(k[i]);
    }
    return out + ")";
}

// ---------------------------------------------------------------------------
// Truncation

Truncation::Truncation(std::int64_t K, std::int64_t band) : K_(K), band_(band) {
    if (K < 0 || band < 0 || band > K)
        throw Error(ErrorCode::precondition_violated, "truncation needs K >= band >= 0");
}

bool Truncation::contains(const Signature& sig, const MultiIndex& k) const { return in_band(sig, k, 0); }

bool Truncation::in_band(const Signature& sig, const MultiIndex& k, std::int64_t headroom) const {
    if (k.size() != static_cast<std::size_t>(sig.n())) return false;
    std::int64_t top = K_ - headroom;
    for (int i = 1; i <= sig.n(); ++i) {
        std::int64_t ki = k[static_cast<std::size_t>(i - 1)];
        if (sig.is_isometry(i) ? (ki < 0 || ki > top) : std::llabs(ki) > top) return false;
    }
    return true;
}

std::vector<MultiIndex> Truncation::band_basis(const Signature& sig, std::int64_t headroom) const {
    std::vector<MultiIndex> out;
    std::int64_t top = K_ - headroom;
    if (top < 0) return out;
    MultiIndex lo(static_cast<std::size_t>(sig.n())), hi(lo.size());
    for (int i = 1; i <= sig.n(); ++i) {
        lo[static_cast<std::size_t>(i - 1)] = sig.is_isometry(i) ? 0 : -top;
        hi[static_cast<std::size_t>(i - 1)] = top;
    }
    MultiIndex k = lo;
    for (;;) {
        out.push_back(k);
        std::size_t d = k.size();
        while (d > 0) {
            --d;
            if (k[d] < hi[d]) {
                ++k[d];
                break;
            }
            k[d] = lo[d];
            if (d == 0) return out;
        }
        if (k.empty()) return out;
    }
}

// ---------------------------------------------------------------------------
// Generator action

namespace {

/// Dense exponent table of the w_ij, flushed into a Phase once per word.
class PhaseAccumulator {
public:
    explicit PhaseAccumulator(int n) : n_(n), exps_(static_cast<std::size_t>(n * n), 0) {}

    void add_z(int i, int j, std::int64_t k) {
        // z_ij = w_ij^2 (i < j), z_ij = w_ji^{-2} (i > j)
        if (k == 0 || i == j) return;
        if (i < j) exps_[slot(i, j)] += 2 * k;
        else exps_[slot(j, i)] -= 2 * k;
        dirty_ = true;
    }

    Phase to_phase() const {
        Phase p;
        if (!dirty_) return p;
        for (int i = 1; i <= n_; ++i)
            for (int j = i + 1; j <= n_; ++j)
                if (auto e = exps_[slot(i, j)]; e != 0) p *= Phase::w(i, j, e);
        return p;
    }

private:
    std::size_t slot(int i, int j) const { return static_cast<std::size_t>((i - 1) * n_ + (j - 1)); }

    int n_;
    std::vector<std::int64_t> exps_;
    bool dirty_ = false;
};

/// Applies one letter in place; returns false when the vector is annihilated.
bool step(const Signature& sig, const Truncation& trunc, const Letter& letter, MultiIndex& k,
          PhaseAccumulator& acc) {
    const int i = letter.index;
    if (i < 1 || i > sig.n()) throw Error(ErrorCode::index_out_of_range, "generator index out of range");
    auto& ki = k[static_cast<std::size_t>(i - 1)];
    const bool iso = sig.is_isometry(i);
    if (letter.star && iso && ki == 0) return false;
    if (sig.twisted()) {
        // z_{i,1}^{k_1} ... z_{i,i-1}^{k_{i-1}}, conjugated for the adjoint
        for (int j = 1; j < i; ++j) acc.add_z(i, j, letter.star ? -k[static_cast<std::size_t>(j - 1)]
                                                                : k[static_cast<std::size_t>(j - 1)]);
    }
    ki += letter.star ? -1 : 1;
    if (iso ? ki > trunc.K() : std::llabs(ki) > trunc.K())
        throw Error(ErrorCode::truncation_overflow, "image of generator " + std::to_string(i) +
                                                        " leaves the truncation at " + to_string(k));
    return true;
}

} // namespace

std::optional<BasisImage> apply_letter(const Signature& sig, const Truncation& trunc, const Letter& letter,
                                       const MultiIndex& k) {
    return apply_word(sig, trunc, Word{letter}, k);
}

std::optional<BasisImage> apply_word(const Signature& sig, const Truncation& trunc, const Word& w,
                                     const MultiIndex& k) {
    if (!trunc.contains(sig, k)) throw Error(ErrorCode::truncation_overflow, "basis vector outside the truncation");
    MultiIndex idx = k;
    PhaseAccumulator acc(sig.n());
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        if (!step(sig, trunc, *it, idx, acc)) return std::nullopt;
    return BasisImage{acc.to_phase(), std::move(idx)};
}

template <class C>
TruncatedState<C> apply_generator(const Signature& sig, const Truncation& trunc, int i, bool star,
                                  const TruncatedState<C>& v) {
    TruncatedState<C> out;
    for (const auto& [k, a] : v.amplitudes())
        if (auto img = apply_letter(sig, trunc, Letter{i, star}, k))
            out.add(img->index, CoefficientTraits<C>::times_phase(a, img->phase, sig.angles()));
    return out;
}

template <class C>
TruncatedState<C> apply_element(const Signature& sig, const Truncation& trunc, const Element<C>& x,
                                const TruncatedState<C>& v) {
    TruncatedState<C> out;
    for (const auto& [m, c] : x.terms()) {
        Word w = m.word(sig);
        for (const auto& [k, a] : v.amplitudes())
            if (auto img = apply_word(sig, trunc, w, k))
                out.add(img->index, CoefficientTraits<C>::times_phase(c * a, img->phase, sig.angles()));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Coefficient extraction

template <class C>
Element<C> extract_coefficients(const Signature& sig, const Truncation& trunc, const StateOracle<C>& oracle,
                                const ExponentBox& box) {
    using T = CoefficientTraits<C>;
    if (box.E < 0 || box.F < 0 || box.G < 0)
        throw Error(ErrorCode::precondition_violated, "exponent box must be nonnegative");
    if (trunc.K() < box.E + box.F + 1 || box.G > trunc.K() - 1)
        throw Error(ErrorCode::precondition_violated, "truncation too small for the exponent box");

    std::vector<int> iso, uni;
    for (int i = 1; i <= sig.n(); ++i) (sig.is_isometry(i) ? iso : uni).push_back(i);

    // probe labels f in {0..F}^l grouped by |f|
    std::vector<std::vector<std::vector<std::int64_t>>> by_level(iso.size() * static_cast<std::size_t>(box.F) + 1);
    {
        std::vector<std::int64_t> f(iso.size(), 0);
        for (;;) {
            std::int64_t s = 0;
            for (auto v : f) s += v;
            by_level[static_cast<std::size_t>(s)].push_back(f);
            std::size_t d = f.size();
            bool done = true;
            while (d > 0) {
                --d;
                if (f[d] < box.F) {
                    ++f[d];
                    done = false;
                    break;
                }
                f[d] = 0;
            }
            if (done) break;
        }
    }

    Element<C> recovered;
    for (const auto& level : by_level) {
        for (const auto& f : level) {
            MultiIndex probe(static_cast<std::size_t>(sig.n()), 0);
            for (std::size_t d = 0; d < iso.size(); ++d) probe[static_cast<std::size_t>(iso[d] - 1)] = f[d];
            auto residual = oracle(probe) - apply_element(sig, trunc, recovered, TruncatedState<C>::basis(probe));

            Element<C> found;
            for (const auto& [idx, amp] : residual.amplitudes()) {
                if (T::negligible(amp)) continue;
                NormalMonomial m(sig.n());
                for (std::size_t d = 0; d < iso.size(); ++d) {
                    std::int64_t e = idx[static_cast<std::size_t>(iso[d] - 1)];
                    if (e > box.E)
                        throw Error(ErrorCode::bounds_exceeded, "residual amplitude at " + to_string(idx) +
                                                                    " exceeds the declared e bound");
                    m.power(iso[d]) = {e, f[d]};
                }
                for (int j : uni) {
                    std::int64_t g = idx[static_cast<std::size_t>(j - 1)];
                    if (std::llabs(g) > box.G)
                        throw Error(ErrorCode::bounds_exceeded, "residual amplitude at " + to_string(idx) +
                                                                    " exceeds the declared g bound");
                    m.power(j) = {g, 0};
                }
                auto img = apply_word(sig, trunc, m.word(sig), probe);
                if (!img || img->index != idx)
                    throw Error(ErrorCode::bounds_exceeded, "residual amplitude at " + to_string(idx) +
                                                                " is not reachable from the probe");
                found.add_term(m, T::times_phase(amp, img->phase.inverse(), sig.angles()));
            }
            recovered += found;
        }
    }
    return recovered;
}

#define DNC_INSTANTIATE(C)                                                                                 \
    template TruncatedState<C> apply_generator(const Signature&, const Truncation&, int, bool,              \
                                               const TruncatedState<C>&);                                   \
    template TruncatedState<C> apply_element(const Signature&, const Truncation&, const Element<C>&,        \
                                             const TruncatedState<C>&);                                     \
    template Element<C> extract_coefficients(const Signature&, const Truncation&, const StateOracle<C>&,    \
                                             const ExponentBox&);

DNC_INSTANTIATE(PhasePolynomial)
DNC_INSTANTIATE(Complex)

#undef DNC_INSTANTIATE

// ---------------------------------------------------------------------------
// Monomial choices

namespace {

Word canonical_word(const ExponentTuple& t) {
    Word w;
    for (std::size_t d = 0; d < t.size(); ++d) {
        int i = static_cast<int>(d + 1);
        w.insert(w.end(), static_cast<std::size_t>(std::llabs(t[d])), Letter{i, t[d] < 0});
    }
    return w;
}

} // namespace

MonomialChoice MonomialChoice::canonical() { return {"canonical", canonical_word}; }

MonomialChoice MonomialChoice::reversed() {
    return {"reversed", [](const ExponentTuple& t) {
                Word w = canonical_word(t);
                std::reverse(w.begin(), w.end());
                return w;
            }};
}

MonomialChoice MonomialChoice::random_interleaving(std::uint64_t seed) {
    return {"random-" + std::to_string(seed), [seed](const ExponentTuple& t) {
                std::seed_seq seq{seed, static_cast<std::uint64_t>(t.size())};
                std::uint64_t h = seed ^ 0x9e3779b97f4a7c15ULL;
                for (auto v : t) h = (h ^ static_cast<std::uint64_t>(v)) * 0x100000001b3ULL;
                std::mt19937_64 rng(h);
                Word w = canonical_word(t);
                std::shuffle(w.begin(), w.end(), rng);
                return w;
            }};
}

Word MonomialChoice::word(const Signature& sig, const ExponentTuple& t) const {
    if (t.size() != static_cast<std::size_t>(sig.n()))
        throw Error(ErrorCode::precondition_violated, "exponent tuple has the wrong length");
    for (int i = 1; i <= sig.n(); ++i)
        if (sig.is_isometry(i) && t[static_cast<std::size_t>(i - 1)] < 0)
            throw Error(ErrorCode::precondition_violated, "negative isometry count in exponent tuple");
    Word w = rule_(t);
    std::vector<std::int64_t> count(t.size(), 0);
    for (const auto& letter : w) {
        if (letter.index < 1 || letter.index > sig.n())
            throw Error(ErrorCode::precondition_violated, "monomial choice used an unknown generator");
        auto& c = count[static_cast<std::size_t>(letter.index - 1)];
        if (letter.star) {
            if (sig.is_isometry(letter.index))
                throw Error(ErrorCode::precondition_violated, "monomial choice used an isometry adjoint");
            --c;
        } else {
            ++c;
        }
    }
    // unitary factors must all point the same way
    for (const auto& letter : w)
        if (!sig.is_isometry(letter.index) && letter.star != (t[static_cast<std::size_t>(letter.index - 1)] < 0))
            throw Error(ErrorCode::precondition_violated, "monomial choice mixes u and u^-1");
    if (count != t) throw Error(ErrorCode::precondition_violated, "monomial choice " + name_ + " has wrong letters");
    return w;
}

namespace {

ExponentTuple successor(const ExponentTuple& t, int i) {
    ExponentTuple s = t;
    s[static_cast<std::size_t>(i - 1)] += 1;
    return s;
}

} // namespace

Phase lambda_constant(const Signature& sig, const MonomialChoice& choice, int i, const ExponentTuple& t) {
    Word w = choice.word(sig, t);
    w.insert(w.begin(), Letter{i, false});
    auto lhs = normalize(sig, w);
    auto rhs = normalize(sig, choice.word(sig, successor(t, i)));
    if (lhs.monomial != rhs.monomial) throw std::logic_error("s_i * m_t and m_{t+e_i} differ as monomials");
    return lhs.phase * rhs.phase.inverse();
}

Phase mu_constant(const Signature& sig, const MonomialChoice& primed, const MonomialChoice& base,
                  const ExponentTuple& t) {
    auto a = normalize(sig, primed.word(sig, t));
    auto b = normalize(sig, base.word(sig, t));
    if (a.monomial != b.monomial) throw std::logic_error("choices disagree on the monomial");
    return a.phase * b.phase.inverse();
}

ChoiceReport verify_choice_equivalence(const Signature& sig, const MonomialChoice& choice,
                                       const MonomialChoice& primed, const std::vector<ExponentTuple>& tuples) {
    ChoiceReport report;
    for (const auto& t : tuples)
        for (int i = 1; i <= sig.n(); ++i) {
            Phase lhs = lambda_constant(sig, choice, i, t) * mu_constant(sig, primed, choice, t);
            Phase rhs = lambda_constant(sig, primed, i, t) * mu_constant(sig, primed, choice, successor(t, i));
            ++report.checked;
            if (lhs != rhs) report.violations.push_back({i, t, lhs, rhs});
        }
    return report;
}

std::optional<BasisImage> choice_apply_letter(const Signature& sig, const MonomialChoice& choice,
                                              const Truncation& trunc, const Letter& letter,
                                              const ExponentTuple& t) {
    if (!trunc.contains(sig, t)) throw Error(ErrorCode::truncation_overflow, "label outside the truncation");
    const int i = letter.index;
    if (i < 1 || i > sig.n()) throw Error(ErrorCode::index_out_of_range, "generator index out of range");
    ExponentTuple target = t;
    auto& ti = target[static_cast<std::size_t>(i - 1)];
    if (!letter.star) {
        ++ti;
        if (!trunc.contains(sig, target))
            throw Error(ErrorCode::truncation_overflow, "choice representation leaves the truncation");
        return BasisImage{lambda_constant(sig, choice, i, t), target};
    }
    if (sig.is_isometry(i) && ti == 0) return std::nullopt;
    --ti;
    if (!trunc.contains(sig, target))
        throw Error(ErrorCode::truncation_overflow, "choice representation leaves the truncation");
    // adjoint of the weighted shift b_s -> lambda(s) b_{s+e_i}
    return BasisImage{lambda_constant(sig, choice, i, target).inverse(), target};
}

} // namespace dnc
