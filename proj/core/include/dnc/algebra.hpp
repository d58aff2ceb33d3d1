#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "dnc/coefficient.hpp"
#include "dnc/phase.hpp"

namespace dnc {

enum class GeneratorKind { isometry, unitary };

/// Generator data for the universal algebra: n generators, each a pure
/// isometry or a unitary, and the twist z_ij = w_ij^2 (or all z_ij = 1 for
/// the untwisted algebra). Generators are 1-based.
class Signature {
public:
    /// Generators 1..l are isometries, l+1..n unitaries.
    Signature(int n, int l, AngleAssignment angles);
    Signature(int n, int l) : Signature(n, l, AngleAssignment(n)) {}
    /// Arbitrary isometry/unitary pattern (used by embeddings).
    static Signature with_kinds(std::vector<GeneratorKind> kinds, AngleAssignment angles);

    int n() const noexcept { return static_cast<int>(kinds_.size()); }
    /// Number of isometry generators.
    int l() const noexcept { return isometries_; }
    GeneratorKind kind(int i) const { return kinds_.at(static_cast<std::size_t>(i - 1)); }
    bool is_isometry(int i) const { return kind(i) == GeneratorKind::isometry; }
    const std::vector<GeneratorKind>& kinds() const noexcept { return kinds_; }
    const AngleAssignment& angles() const noexcept { return angles_; }
    bool twisted() const noexcept { return twisted_; }

    /// Same generators with every z_ij = 1 (angles kept for evaluation).
    Signature untwisted() const;

    /// z_ij as a phase; identity when i == j or the signature is untwisted.
    Phase z(int i, int j) const;

    friend bool operator==(const Signature&, const Signature&) = default;

private:
    Signature() = default;

    std::vector<GeneratorKind> kinds_;
    int isometries_ = 0;
    AngleAssignment angles_;
    bool twisted_ = true;
};

struct Letter {
    int index;
    bool star = false;
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

std::string to_string(const Word& w);

/// Exponent record of a basis word s_1^{e_1} s_1^{*f_1} ... u_n^{g_n}.
/// Isometry slots use (e, f) with e, f >= 0; unitary slots keep the signed
/// exponent g in `e` and f == 0.
class NormalMonomial {
public:
    struct Power {
        std::int64_t e = 0;
        std::int64_t f = 0;
        friend auto operator<=>(const Power&, const Power&) = default;
    };

    NormalMonomial() = default;
    explicit NormalMonomial(int n) : powers_(static_cast<std::size_t>(n)) {}
    explicit NormalMonomial(std::vector<Power> powers) : powers_(std::move(powers)) {}

    /// Build from the (e, f) isometry exponents and g unitary exponents, in
    /// generator order.
    static NormalMonomial from_exponents(const Signature& sig, const std::vector<std::int64_t>& e,
                                         const std::vector<std::int64_t>& f,
                                         const std::vector<std::int64_t>& g);
    /// Single generator s_i or s_i^*.
    static NormalMonomial generator(const Signature& sig, int i, bool star = false);

    int n() const noexcept { return static_cast<int>(powers_.size()); }
    const Power& power(int i) const { return powers_.at(static_cast<std::size_t>(i - 1)); }
    Power& power(int i) { return powers_.at(static_cast<std::size_t>(i - 1)); }
    const std::vector<Power>& powers() const noexcept { return powers_; }
    bool is_identity() const;

    /// Canonical word: ascending index, s_i powers before s_i^* powers.
    Word word(const Signature& sig) const;

    friend auto operator<=>(const NormalMonomial&, const NormalMonomial&) = default;

private:
    std::vector<Power> powers_;
};

std::string to_string(const Signature& sig, const NormalMonomial& m);

/// A phased basis word c * m.
struct PhasedMonomial {
    Phase phase;
    NormalMonomial monomial;
    friend bool operator==(const PhasedMonomial&, const PhasedMonomial&) = default;
};

/// Rewrite strategies for `normalize`. All produce the same result.
enum class RewriteStrategy {
    leftmost,   ///< leftmost redex first
    randomized, ///< uniformly random redex (needs an engine)
};

/// Unique (phase, monomial) with w = phase * monomial in the algebra,
/// computed by rewriting: adjacent swaps towards ascending index with the
/// commutation phase, s_i^* s_i -> 1 always and s_i s_i^* -> 1 for
/// unitaries.
PhasedMonomial normalize(const Signature& sig, const Word& w,
                         RewriteStrategy strategy = RewriteStrategy::leftmost,
                         std::mt19937_64* rng = nullptr);

/// Normal form of m1 * m2, via block-wise commutation phases.
PhasedMonomial monomial_product(const Signature& sig, const NormalMonomial& a,
                                const NormalMonomial& b);

/// Normal form of m^*.
PhasedMonomial monomial_adjoint(const Signature& sig, const NormalMonomial& m);

/// Z^n grading: p_i = e_i - f_i (isometries) or g_i (unitaries).
using Degree = std::vector<std::int64_t>;

Degree degree(const Signature& sig, const NormalMonomial& m);

/// Finite linear combination of basis words.
template <class C>
class Element {
public:
    using Terms = std::map<NormalMonomial, C>;
    using Traits = CoefficientTraits<C>;

    Element() = default;

    static Element identity(const Signature& sig) { return monomial(NormalMonomial(sig.n())); }
    static Element monomial(const NormalMonomial& m, C c = Traits::one()) {
        Element x;
        x.add_term(m, std::move(c));
        return x;
    }
    static Element generator(const Signature& sig, int i, bool star = false) {
        return monomial(NormalMonomial::generator(sig, i, star));
    }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    /// Coefficient of m (zero when absent).
    C coefficient(const NormalMonomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? C{} : it->second;
    }

    void add_term(const NormalMonomial& m, const C& c) {
        if (Traits::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second = it->second + c;
            if (Traits::is_zero(it->second)) terms_.erase(it);
        }
    }

    Element& operator+=(const Element& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Element& operator-=(const Element& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, C{} - c);
        return *this;
    }
    Element& operator*=(const C& s) {
        Element r;
        for (const auto& [m, c] : terms_) r.add_term(m, c * s);
        return *this = std::move(r);
    }
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const C& s, Element a) { return a *= s; }

    friend bool operator==(const Element&, const Element&) = default;

private:
    Terms terms_;
};

using ExactElement = Element<PhasePolynomial>;
using NumericElement = Element<Complex>;

template <class C>
Element<C> mul(const Signature& sig, const Element<C>& x, const Element<C>& y);

template <class C>
Element<C> adjoint(const Signature& sig, const Element<C>& x);

/// Gauge action alpha_t: each monomial of degree p is multiplied by
/// exp(2 pi i <p, t>). Exact coefficients need rational t.
Element<PhasePolynomial> alpha(const Signature& sig, const std::vector<mpq_class>& t,
                               const Element<PhasePolynomial>& x);
Element<Complex> alpha(const Signature& sig, const std::vector<double>& t, const Element<Complex>& x);

/// Torus average: keeps exactly the monomials with e_i == f_i and g_j == 0.
template <class C>
Element<C> theta(const Signature& sig, const Element<C>& x);

/// theta(x^* x), which is nonzero whenever x is. Throws ZeroInput for x == 0.
template <class C>
Element<C> theta_faithful_witness(const Signature& sig, const Element<C>& x);

/// Generator-wise inclusion psi(s_i) = s'_i of a smaller algebra into a
/// larger one that agrees with it on the first n generators.
/// Throws IncompatibleSignatures otherwise.
template <class C>
Element<C> embed(const Signature& small, const Signature& big, const Element<C>& x);

/// Checks the embedding preconditions without mapping anything.
void check_embedding(const Signature& small, const Signature& big);

/// Element with numeric coefficients obtained by evaluating every phase.
NumericElement to_numeric(const ExactElement& x, const AngleAssignment& angles);

/// Sum of the words' normal forms, for building elements from words.
template <class C>
Element<C> from_word(const Signature& sig, const Word& w);

} // namespace dnc
