#pragma once

#include <compare>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "dnc/rational.hpp"

namespace dnc {

enum class AngleMode { exact, numeric };

const char* to_string(AngleMode mode) noexcept;

/// Angles phi_ij (i < j) with z_ij = exp(2 pi i phi_ij). Exact mode keeps
/// rationals, numeric mode keeps doubles. Unset pairs are 0.
class AngleAssignment {
public:
    using Key = std::pair<int, int>;

    explicit AngleAssignment(int n = 0, AngleMode mode = AngleMode::exact);

    int n() const noexcept { return n_; }
    AngleMode mode() const noexcept { return mode_; }
    bool exact() const noexcept { return mode_ == AngleMode::exact; }

    AngleAssignment with(int i, int j, const mpq_class& phi) const;
    AngleAssignment with(int i, int j, double phi) const;

    /// Exact value of phi_ij; requires exact mode.
    mpq_class exact_value(int i, int j) const;
    double value(int i, int j) const;

    /// Representatives of every phi_ij in [0, 1).
    AngleAssignment canonical_branch() const;
    /// phi_ij replaced by phi_ij + shift (same z_ij, different w_ij).
    AngleAssignment shifted_branch(int i, int j, long shift) const;
    /// Same angles viewed with more (or fewer) generators.
    AngleAssignment resized(int n) const;
    AngleAssignment to_numeric() const;

    const std::map<Key, mpq_class>& exact_values() const noexcept { return exact_; }
    const std::map<Key, double>& numeric_values() const noexcept { return numeric_; }

    friend bool operator==(const AngleAssignment&, const AngleAssignment&) = default;

private:
    void check_key(int i, int j) const;

    int n_;
    AngleMode mode_;
    std::map<Key, mpq_class> exact_;
    std::map<Key, double> numeric_;
};

/// Element of the abelian group generated by the half-phases w_ij (i < j),
/// times an optional root of unity exp(2 pi i r), r in [0, 1). The root of
/// unity only arises from gauge actions at rational torus points.
class Phase {
public:
    struct Entry {
        int i;
        int j;
        std::int64_t exponent;
        friend auto operator<=>(const Entry&, const Entry&) = default;
    };

    Phase() = default;

    /// w_ij^k. For i > j this is w_ji^{-k}; for i == j the identity.
    static Phase w(int i, int j, std::int64_t k = 1);
    /// z_ij^k = w_ij^{2k}.
    static Phase z(int i, int j, std::int64_t k = 1);
    /// exp(2 pi i num/den).
    static Phase root_of_unity(std::int64_t num, std::int64_t den);

    std::int64_t exponent(int i, int j) const;
    const std::vector<Entry>& entries() const noexcept { return entries_; }
    std::int64_t turns_num() const noexcept { return turns_num_; }
    std::int64_t turns_den() const noexcept { return turns_den_; }
    bool is_identity() const noexcept { return entries_.empty() && turns_num_ == 0; }
    /// Largest generator index that occurs, 0 if none.
    int max_index() const noexcept;

    Phase inverse() const;
    Phase pow(std::int64_t k) const;

    Phase& operator*=(const Phase& other);
    friend Phase operator*(Phase a, const Phase& b) { return a *= b; }

    friend auto operator<=>(const Phase&, const Phase&) = default;

    /// "1", "w[1,2]^-3", "w[1,2]^2*w[2,3]*r[1/8]".
    std::string to_string() const;

private:
    std::vector<Entry> entries_;
    std::int64_t turns_num_ = 0;
    std::int64_t turns_den_ = 1;
};

Phase phase_mul(const Phase& a, const Phase& b);
Phase phase_conj(const Phase& a);

/// exp(pi i r) for r = sum_ij k_ij phi_ij + 2 (root-of-unity turns).
/// half_turns holds r mod 2 in exact mode.
struct PhaseValue {
    std::optional<mpq_class> half_turns;
    std::complex<double> value;
};

PhaseValue phase_eval(const Phase& a, const AngleAssignment& angles);

/// Group ring Q(i)[Phase]. Quarter turns are folded into the coefficient,
/// so the stored root-of-unity part of every key lies in [0, 1/4).
class PhasePolynomial {
public:
    using Terms = std::map<Phase, GaussianRational>;

    PhasePolynomial() = default;
    PhasePolynomial(long c) : PhasePolynomial(GaussianRational(c)) {}
    PhasePolynomial(const GaussianRational& c) { add_term(Phase{}, c); }
    PhasePolynomial(const Phase& p) { add_term(p, GaussianRational(1)); }
    PhasePolynomial(const Phase& p, const GaussianRational& c) { add_term(p, c); }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    void add_term(const Phase& p, const GaussianRational& c);

    /// The phase c when the polynomial is exactly 1*c.
    std::optional<Phase> as_phase() const;
    /// The scalar when only the identity phase occurs (or zero).
    std::optional<GaussianRational> as_scalar() const;

    PhasePolynomial conj() const;
    std::complex<double> eval(const AngleAssignment& angles) const;

    PhasePolynomial& operator+=(const PhasePolynomial& o);
    PhasePolynomial& operator-=(const PhasePolynomial& o);
    PhasePolynomial& operator*=(const PhasePolynomial& o);
    PhasePolynomial& operator*=(const Phase& p);
    PhasePolynomial& operator*=(const GaussianRational& c);

    friend PhasePolynomial operator+(PhasePolynomial a, const PhasePolynomial& b) { return a += b; }
    friend PhasePolynomial operator-(PhasePolynomial a, const PhasePolynomial& b) { return a -= b; }
    friend PhasePolynomial operator*(PhasePolynomial a, const PhasePolynomial& b) { return a *= b; }
    friend PhasePolynomial operator*(PhasePolynomial a, const Phase& b) { return a *= b; }
    PhasePolynomial operator-() const;

    friend bool operator==(const PhasePolynomial&, const PhasePolynomial&) = default;

    std::string to_string() const;

private:
    Terms terms_;
};

} // namespace dnc
