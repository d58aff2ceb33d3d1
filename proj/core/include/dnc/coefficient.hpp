#pragma once

#include <complex>
#include <concepts>
#include <string>

#include "dnc/phase.hpp"

namespace dnc {

/// Scalar policies for the two coefficient rings: the exact group ring
/// Q(i)[Phase] and complex doubles.
template <class C>
struct CoefficientTraits;

template <>
struct CoefficientTraits<PhasePolynomial> {
    static constexpr bool exact = true;
    static PhasePolynomial one() { return PhasePolynomial(1); }
    static bool is_zero(const PhasePolynomial& c) { return c.is_zero(); }
    static bool negligible(const PhasePolynomial& c) { return c.is_zero(); }
    static PhasePolynomial conj(const PhasePolynomial& c) { return c.conj(); }
    static PhasePolynomial from_phase(const Phase& p, const AngleAssignment&) { return PhasePolynomial(p); }
    static PhasePolynomial times_phase(PhasePolynomial c, const Phase& p, const AngleAssignment&) {
        return c *= p;
    }
    static std::complex<double> to_complex(const PhasePolynomial& c, const AngleAssignment& a) {
        return c.eval(a);
    }
    static std::string to_string(const PhasePolynomial& c) { return c.to_string(); }
};

template <>
struct CoefficientTraits<std::complex<double>> {
    static constexpr bool exact = false;
    static std::complex<double> one() { return 1.0; }
    static bool is_zero(const std::complex<double>& c) { return c == 0.0; }
    /// Cancellation noise threshold for numeric amplitudes.
    static bool negligible(const std::complex<double>& c) { return std::abs(c) <= 1e-12; }
    static std::complex<double> conj(const std::complex<double>& c) { return std::conj(c); }
    static std::complex<double> from_phase(const Phase& p, const AngleAssignment& a) {
        return phase_eval(p, a).value;
    }
    static std::complex<double> times_phase(const std::complex<double>& c, const Phase& p,
                                            const AngleAssignment& a) {
        return p.is_identity() ? c : c * phase_eval(p, a).value;
    }
    static std::complex<double> to_complex(const std::complex<double>& c, const AngleAssignment&) {
        return c;
    }
    static std::string to_string(const std::complex<double>& c);
};

template <class C>
concept Coefficient = requires(C a, C b) {
    { CoefficientTraits<C>::exact } -> std::convertible_to<bool>;
    { a + b } -> std::convertible_to<C>;
    { a * b } -> std::convertible_to<C>;
    { a - b } -> std::convertible_to<C>;
};

using Complex = std::complex<double>;

} // namespace dnc
