#pragma once

#include <cstdint>
#include <random>

#include "dnc/algebra.hpp"
#include "dnc/representation.hpp"

namespace dnc {

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi].
std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi);

/// Rational angles p/q in [0, 1) with q <= max_den.
AngleAssignment random_angles(int n, Rng& rng, int max_den = 12);

/// Irrational-looking double angles in [0, 1).
AngleAssignment random_numeric_angles(int n, Rng& rng);

/// n in [1, max_n], l in [0, n], random rational angles.
Signature random_signature(Rng& rng, int max_n);

Word random_word(const Signature& sig, std::size_t max_len, Rng& rng);

NormalMonomial random_monomial(const Signature& sig, const ExponentBox& box, Rng& rng);

/// Product of w symbols with exponents in [-2, 2], identity with some probability.
Phase random_phase(const Signature& sig, Rng& rng);

/// Nonzero Gaussian rational with small numerators and denominators.
GaussianRational random_scalar(Rng& rng);

/// Up to max_terms monomials from the box with phased Gaussian rational
/// coefficients. May be zero only when max_terms == 0.
ExactElement random_element(const Signature& sig, const ExponentBox& box, std::size_t max_terms, Rng& rng);

/// Element of the projection subalgebra: monomials with e_i == f_i <= max_exp,
/// rational-complex coefficients without phases.
ExactElement random_projection_element(const Signature& sig, std::int64_t max_exp, std::size_t max_terms, Rng& rng);

} // namespace dnc
