#pragma once

#include <cstdint>
#include <vector>

#include "dnc/algebra.hpp"

namespace dnc {

/// Label (k_1, ..., k_l) of ee_k in the isometry part of the standard space.
using IsometryIndex = std::vector<std::int64_t>;

/// The class [x (x) ee_k] in the Stinespring space of phi = rho o theta.
template <class C>
struct StVector {
    Element<C> x;
    IsometryIndex k;
};

/// c with phi(x) ee_k = c ee_k, read off the diagonal symbol of theta(x).
template <class C>
C phi_eigenvalue(const Signature& sig, const Element<C>& x, const IsometryIndex& k);

/// Same scalar computed as <sigma(x) e_{k,0}, e_{k,0}> in the standard
/// representation. Independent of theta; used as a cross-check.
template <class C>
C phi_eigenvalue_direct(const Signature& sig, const Element<C>& x, const IsometryIndex& k);

/// <[v.x (x) ee_{v.k}], [w.x (x) ee_{w.k}]> = <phi(w.x^* v.x) ee_{v.k}, ee_{w.k}>.
template <class C>
C st_inner(const Signature& sig, const StVector<C>& v, const StVector<C>& w);

template <class C>
using GramMatrix = std::vector<std::vector<C>>;

template <class C>
GramMatrix<C> gram_matrix(const Signature& sig, const std::vector<StVector<C>>& vectors);

template <class C>
bool is_identity(const GramMatrix<C>& g);

/// Smallest eigenvalue of the (evaluated) Hermitian Gram matrix.
template <class C>
double gram_min_eigenvalue(const GramMatrix<C>& g, const AngleAssignment& angles);

/// [s_1^{e_1} ... s_l^{e_l} u^g s_1^{*k_1} ... s_l^{*k_l} (x) ee_k] for 0 <= e_i <= E,
/// |g_j| <= G. With k = 0 these span L_0.
std::vector<StVector<PhasePolynomial>> summand_basis(const Signature& sig, const IsometryIndex& k, std::int64_t E,
                                                     std::int64_t G);

struct UnimodularReduction {
    Phase constant;
    /// ||v - c w||^2 in the Stinespring norm; zero when the reduction holds.
    PhasePolynomial residual;
};

/// Finds c with [s^e s^{*k} (x) ee_k] = c [s^{*(k-e)} (x) ee_k]. Requires
/// e <= k componentwise (PreconditionViolated). Throws std::logic_error if
/// the inner product is not a single phase.
UnimodularReduction check_unimodular_reduction(const Signature& sig, const IsometryIndex& e,
                                               const IsometryIndex& k);

} // namespace dnc
