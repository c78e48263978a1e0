// Kraus-operator channels, classifiers and generators for incoherent and
// partial incoherent operations, and the canonical coherence-to-correlation
// converters.
#pragma once

#include <utility>
#include <vector>

#include "qcoh/measurements.hpp"
#include "qcoh/states.hpp"

namespace qcoh {

inline constexpr double kChannelTol = 1e-9;

/// CPTP map as a Kraus operator list; completeness Sum_k K_k^dag K_k = I.
class KrausChannel {
public:
    Eigen::Index dim_in() const { return dim_in_; }
    Eigen::Index dim_out() const { return dim_out_; }
    const std::vector<ComplexMatrix>& kraus() const { return kraus_; }
    std::size_t size() const { return kraus_.size(); }

private:
    KrausChannel(std::vector<ComplexMatrix> ops, Eigen::Index din,
                 Eigen::Index dout)
        : kraus_(std::move(ops)), dim_in_(din), dim_out_(dout) {}
    std::vector<ComplexMatrix> kraus_;
    Eigen::Index dim_in_;
    Eigen::Index dim_out_;

    friend KrausChannel channel_from_kraus(std::vector<ComplexMatrix> ops,
                                           double tol);
};

/// Validates dimensions and the completeness relation (residual reported).
KrausChannel channel_from_kraus(std::vector<ComplexMatrix> ops,
                                double tol = kChannelTol);

KrausChannel identity_channel(Eigen::Index d);

DensityMatrix apply(const KrausChannel& lambda, const DensityMatrix& rho);
BipartiteState apply(const KrausChannel& lambda, const BipartiteState& rho);

/// Selective application: (p_l, K_l rho K_l^dag / p_l) with outcomes below
/// p < 1e-12 omitted.
std::vector<std::pair<double, DensityMatrix>> apply_selective(
    const KrausChannel& lambda, const DensityMatrix& rho);

/// True iff every Kraus operator, expressed in the given basis, has at most
/// one entry of magnitude > tol per column.
bool is_incoherent_channel(const KrausChannel& lambda,
                           const VonNeumannMeasurement& basis,
                           double tol = 1e-10);

/// Worst Frobenius distance of K B K^dag from the block-diagonal subspace,
/// over all Kraus operators K and a Hermitian operator basis {B} of that
/// subspace (d_a * d_b^2 elements, each of unit Frobenius norm).
double partial_incoherence_residual(const KrausChannel& lambda,
                                    const LuedersMeasurement& pi_l);

bool is_partial_incoherent_channel(const KrausChannel& lambda,
                                   const LuedersMeasurement& pi_l,
                                   double tol = 1e-8);

/// Single-Kraus channel U = Sum_i Pi_i^a (x) V_i. With cyclic-shift V_i this
/// is the generalized CNOT, the canonical coherence-to-discord converter.
KrausChannel controlled_unitary(const VonNeumannMeasurement& a_basis,
                                const std::vector<ComplexMatrix>& v);

/// Sampler over the permutation-phase mixture subfamily of incoherent
/// operations: Kraus set {sqrt(p_k) P_k D_k}.
KrausChannel random_incoherent_channel(Eigen::Index d, int n_kraus,
                                       std::uint64_t seed);

/// Sampler over block-form partial incoherent operations: Kraus operators
/// Sum_i |pi(i)><i|^a (x) B_{l,i} with an independently drawn CPTP family
/// {B_{l,i}}_l on party b for each i.
KrausChannel random_partial_incoherent_channel(Eigen::Index d_a,
                                               Eigen::Index d_b,
                                               std::uint64_t seed);

/// Kraus set {K_outer * K_inner}.
KrausChannel compose(const KrausChannel& outer, const KrausChannel& inner);

}  // namespace qcoh
