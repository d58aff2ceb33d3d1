#pragma once

#include <string>
#include <vector>

#include "dnc/algebra.hpp"
#include "dnc/representation.hpp"

namespace dnc {

/// Skew matrix with Theta_ij = -phi_ij / 2 for i < j.
class ThetaMatrix {
public:
    explicit ThetaMatrix(AngleAssignment angles) : angles_(std::move(angles)) {}

    int n() const noexcept { return angles_.n(); }
    /// Exact entry; requires exact angles.
    mpq_class exact_entry(int i, int j) const;
    double entry(int i, int j) const;
    /// <Theta p, q> in floating point.
    double pairing(const Degree& p, const Degree& q) const;

private:
    AngleAssignment angles_;
};

/// The untwisted algebra with the same generators (the base of the
/// deformation) together with the target angles.
class DeformationContext {
public:
    explicit DeformationContext(const Signature& target);

    const Signature& target() const noexcept { return target_; }
    const Signature& base() const noexcept { return base_; }
    const ThetaMatrix& theta() const noexcept { return theta_; }
    const AngleAssignment& angles() const noexcept { return target_.angles(); }

    /// w_ij with w_ii = 1 and w_ji = conj(w_ij).
    Phase w(int i, int j) const { return i == j ? Phase{} : Phase::w(i, j, 1); }

private:
    Signature target_;
    Signature base_;
    ThetaMatrix theta_;
};

/// exp(2 pi i <Theta p, q>) as the phase prod_{i<j} w_ij^{p_i q_j - p_j q_i}.
Phase cocycle(const DeformationContext& ctx, const Degree& p, const Degree& q);

/// Product of base elements twisted by the cocycle of the degrees.
template <class C>
Element<C> deformed_mul(const DeformationContext& ctx, const Element<C>& x, const Element<C>& y);

/// Target element to the deformed base algebra, s_i -> s'_i. A normal
/// monomial of degree p picks up prod_{i<j} w_ij^{p_i p_j}.
template <class C>
Element<C> psi(const DeformationContext& ctx, const Element<C>& x);

/// Phase of the diagonal unitary T on e_k: prod_{p>q} w_{p,q}^{k_p k_q}.
Phase t_phase(const DeformationContext& ctx, const MultiIndex& k);

/// pi_Theta: each homogeneous part of degree p acts on e_q as cocycle(p, q)
/// times the untwisted standard representation.
template <class C>
TruncatedState<C> deformed_apply(const DeformationContext& ctx, const Truncation& trunc, const Element<C>& x,
                                 const TruncatedState<C>& v);

struct IntertwinerRow {
    int generator = 0;
    bool star = false;
    std::size_t checked = 0;
    std::size_t mismatches = 0;
    double max_residual = 0;
    /// First failing basis label, if any.
    MultiIndex witness;
};

struct IntertwinerReport {
    AngleMode mode = AngleMode::exact;
    std::vector<IntertwinerRow> rows;

    bool ok(double tolerance) const;
};

/// Compares T^* sigma(s_i) T e_k with pi_Theta(psi(s_i)) e_k (and likewise
/// for s_i^*) on every basis vector of the band. Exact angles compare
/// phases symbolically; numeric angles compare complex values, with the
/// deformed side evaluated from Theta in floating point.
IntertwinerReport verify_intertwiner(const DeformationContext& ctx, const Truncation& trunc);

} // namespace dnc
