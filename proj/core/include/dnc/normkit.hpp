#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "dnc/algebra.hpp"

namespace dnc {

/// Eigenvalue function of an element of the projection subalgebra on the
/// basis ee_k. Cell alpha in {0..N}^l stands for k_i = alpha_i when
/// alpha_i < N and k_i >= N when alpha_i == N; slots lists the isometry
/// generators in order.
template <class C>
struct DiagonalSymbol {
    std::int64_t cutoff = 0;
    std::vector<int> slots;
    std::vector<C> values;

    std::size_t cell_count() const { return values.size(); }
    /// Cell coordinates of a flat (row-major) position.
    std::vector<std::int64_t> cell(std::size_t flat) const;
    /// Value at the basis vector ee_k (k clamped to the cutoff).
    const C& at(const std::vector<std::int64_t>& k) const;
};

/// True iff every monomial of x has g == 0 and e_i == f_i.
template <class C>
bool in_projection_algebra(const Signature& sig, const Element<C>& x);

/// Throws NotInProjectionAlgebra when x has an unbalanced monomial.
template <class C>
DiagonalSymbol<C> diagonal_symbol(const Signature& sig, const Element<C>& x);

struct NormValue {
    double norm = 0;
    /// max |value|^2 when every cell value is a single phased rational.
    std::optional<mpq_class> norm_squared;
};

/// C*-norm of an element of the projection subalgebra: the largest modulus
/// of its diagonal symbol.
template <class C>
NormValue pal_norm(const Signature& sig, const Element<C>& x);

} // namespace dnc
