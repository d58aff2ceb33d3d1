#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dnc/algebra.hpp"

namespace dnc {

/// Basis label (k_1, ..., k_n) of e_k: k_i >= 0 on isometry slots, any
/// integer on unitary slots.
using MultiIndex = std::vector<std::int64_t>;

std::string to_string(const MultiIndex& k);

/// Finite window of the standard Hilbert space: 0 <= k_i <= K on isometry
/// slots and |k_j| <= K on unitary slots. Basis vectors "in band" keep
/// `band` steps of headroom in every direction.
class Truncation {
public:
    Truncation(std::int64_t K, std::int64_t band);

    std::int64_t K() const noexcept { return K_; }
    std::int64_t band() const noexcept { return band_; }

    bool contains(const Signature& sig, const MultiIndex& k) const;
    bool in_band(const Signature& sig, const MultiIndex& k, std::int64_t headroom) const;
    bool in_band(const Signature& sig, const MultiIndex& k) const { return in_band(sig, k, band_); }

    /// Every basis label with the given headroom, in lexicographic order.
    std::vector<MultiIndex> band_basis(const Signature& sig, std::int64_t headroom) const;
    std::vector<MultiIndex> band_basis(const Signature& sig) const { return band_basis(sig, band_); }

private:
    std::int64_t K_;
    std::int64_t band_;
};

/// Finitely supported vector of the truncated space.
template <class C>
class TruncatedState {
public:
    using Amplitudes = std::map<MultiIndex, C>;

    TruncatedState() = default;
    static TruncatedState basis(const MultiIndex& k) {
        TruncatedState v;
        v.add(k, CoefficientTraits<C>::one());
        return v;
    }

    const Amplitudes& amplitudes() const noexcept { return amps_; }
    bool is_zero() const noexcept { return amps_.empty(); }
    C amplitude(const MultiIndex& k) const {
        auto it = amps_.find(k);
        return it == amps_.end() ? C{} : it->second;
    }

    void add(const MultiIndex& k, const C& c) {
        if (CoefficientTraits<C>::is_zero(c)) return;
        auto [it, inserted] = amps_.try_emplace(k, c);
        if (!inserted) {
            it->second = it->second + c;
            if (CoefficientTraits<C>::is_zero(it->second)) amps_.erase(it);
        }
    }

    TruncatedState& operator+=(const TruncatedState& o) {
        for (const auto& [k, c] : o.amps_) add(k, c);
        return *this;
    }
    TruncatedState& operator-=(const TruncatedState& o) {
        for (const auto& [k, c] : o.amps_) add(k, C{} - c);
        return *this;
    }
    friend TruncatedState operator+(TruncatedState a, const TruncatedState& b) { return a += b; }
    friend TruncatedState operator-(TruncatedState a, const TruncatedState& b) { return a -= b; }

    friend bool operator==(const TruncatedState&, const TruncatedState&) = default;

private:
    Amplitudes amps_;
};

using ExactState = TruncatedState<PhasePolynomial>;
using NumericState = TruncatedState<Complex>;

/// Image of a basis vector under a word: a phase times another basis
/// vector. std::nullopt means the word annihilates the vector.
struct BasisImage {
    Phase phase;
    MultiIndex index;
    friend bool operator==(const BasisImage&, const BasisImage&) = default;
};

/// Gamma_i (or Gamma_i^*) on e_k. Throws TruncationOverflow if the image
/// leaves the truncation.
std::optional<BasisImage> apply_letter(const Signature& sig, const Truncation& trunc, const Letter& letter,
                                       const MultiIndex& k);

/// Letters act right to left.
std::optional<BasisImage> apply_word(const Signature& sig, const Truncation& trunc, const Word& w,
                                     const MultiIndex& k);

template <class C>
TruncatedState<C> apply_generator(const Signature& sig, const Truncation& trunc, int i, bool star,
                                  const TruncatedState<C>& v);

template <class C>
TruncatedState<C> apply_element(const Signature& sig, const Truncation& trunc, const Element<C>& x,
                                const TruncatedState<C>& v);

/// Exponent box for coefficient extraction: e_i <= E, f_i <= F, |g_j| <= G.
struct ExponentBox {
    std::int64_t E = 0;
    std::int64_t F = 0;
    std::int64_t G = 0;
};

template <class C>
using StateOracle = std::function<TruncatedState<C>(const MultiIndex&)>;

/// Recovers x from the map e_k -> sigma(x) e_k by probing e_{f,0} in order of
/// increasing |f| and peeling off already recovered terms. Requires
/// K >= E + F + 1 and G <= K - 1 (PreconditionViolated otherwise); throws
/// BoundsExceeded when residual amplitudes fall outside the box.
template <class C>
Element<C> extract_coefficients(const Signature& sig, const Truncation& trunc, const StateOracle<C>& oracle,
                                const ExponentBox& box);

// ---------------------------------------------------------------------------
// Monomial choices

/// Per-generator exponent tuple (e_1, ..., g_n): counts of s_i factors on
/// isometry slots, signed powers of u_j on unitary slots.
using ExponentTuple = std::vector<std::int64_t>;

/// Assignment of a word to every exponent tuple, containing exactly the
/// prescribed factors in some order.
class MonomialChoice {
public:
    using Rule = std::function<Word(const ExponentTuple&)>;

    MonomialChoice(std::string name, Rule rule) : name_(std::move(name)), rule_(std::move(rule)) {}

    /// s_1^{e_1} ... s_l^{e_l} u_{l+1}^{g_{l+1}} ... u_n^{g_n}
    static MonomialChoice canonical();
    /// Same factors, descending generator order.
    static MonomialChoice reversed();
    /// A shuffle of the canonical word, fixed per (seed, tuple).
    static MonomialChoice random_interleaving(std::uint64_t seed);

    const std::string& name() const noexcept { return name_; }

    /// Throws PreconditionViolated if the rule's letters do not match the tuple.
    Word word(const Signature& sig, const ExponentTuple& t) const;

private:
    std::string name_;
    Rule rule_;
};

/// lambda with s_i * m_t = lambda * m_{t + e_i}.
Phase lambda_constant(const Signature& sig, const MonomialChoice& choice, int i, const ExponentTuple& t);

/// mu with m'_t = mu * m_t.
Phase mu_constant(const Signature& sig, const MonomialChoice& primed, const MonomialChoice& base,
                  const ExponentTuple& t);

struct ChoiceViolation {
    int generator;
    ExponentTuple tuple;
    Phase lhs;
    Phase rhs;
};

struct ChoiceReport {
    std::size_t checked = 0;
    std::vector<ChoiceViolation> violations;
    bool ok() const noexcept { return violations.empty(); }
};

/// Checks lambda(s_i, m_t) mu(m'_t, m_t) == lambda'(s_i, m'_t) mu(m'_{t+e_i}, m_{t+e_i})
/// for every generator and sampled tuple.
ChoiceReport verify_choice_equivalence(const Signature& sig, const MonomialChoice& choice,
                                       const MonomialChoice& primed, const std::vector<ExponentTuple>& tuples);

/// Generator action in the representation built from a monomial choice, on
/// the basis b_t (labels share the MultiIndex layout).
std::optional<BasisImage> choice_apply_letter(const Signature& sig, const MonomialChoice& choice,
                                              const Truncation& trunc, const Letter& letter,
                                              const ExponentTuple& t);

} // namespace dnc
