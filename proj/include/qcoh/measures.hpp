// Closed-form information functionals: entropy, skew information, quantum
// Fisher information, and the coherence / partial-coherence measures built
// from them. Entropies are in bits (log base 2).
#pragma once

#include <string>

#include "qcoh/measurements.hpp"
#include "qcoh/states.hpp"

namespace qcoh {

/// Uniform return type for the coherence functionals. Round-off negatives
/// in [-1e-9, 0) are clipped to 0; anything below is a genuine bug and
/// throws.
struct MeasureValue {
    double value;
    std::string measure;  // "l1", "rel_entropy", "skew", "qfi", ...
    std::string basis;    // description of the reference measurement
};

MeasureValue make_measure(double value, std::string measure,
                          std::string basis);

/// S(rho) = -Tr rho log2 rho.
double von_neumann_entropy(const DensityMatrix& rho);

/// Wigner-Yanase skew information I(sigma, K) = -1/2 tr([sqrt(sigma), K]^2),
/// computed by the spectral formula
///   1/2 Sum_{j,k} (sqrt(l_j) - sqrt(l_k))^2 |<j|K|k>|^2.
double skew_information(const DensityMatrix& sigma, const ComplexMatrix& k);

/// Quantum Fisher information F(sigma, H) = 1/4 tr(sigma L^2) with the
/// symmetric logarithmic derivative L solving (L sigma + sigma L)/2 = i[sigma,H],
/// computed by the spectral formula
///   1/2 Sum_{j,k} (l_j - l_k)^2 / (l_j + l_k) |<j|H|k>|^2
/// with pairs l_j + l_k <= 1e-12 skipped (removable singularity).
double quantum_fisher_information(const DensityMatrix& sigma,
                                  const ComplexMatrix& h);

/// C_l1 = Sum_{i != j} |rho_ij| in the given basis.
MeasureValue coherence_l1(const DensityMatrix& rho,
                          const VonNeumannMeasurement& basis);

/// C_r = S(rho^d) - S(rho), in bits.
MeasureValue coherence_rel_entropy(const DensityMatrix& rho,
                                   const VonNeumannMeasurement& basis);

/// C_I = Sum_i I(rho, Pi_i).
MeasureValue coherence_skew(const DensityMatrix& rho,
                            const VonNeumannMeasurement& basis);

/// C_F = Sum_i F(rho, Pi_i).
MeasureValue coherence_qfi(const DensityMatrix& rho,
                           const VonNeumannMeasurement& basis);

/// C_I^a = Sum_i I(rho^ab, Pi_i^a (x) 1^b).
MeasureValue partial_coherence_skew(const BipartiteState& rho,
                                    const LuedersMeasurement& pi_l);

/// Sum_i F(rho^ab, Pi_i^a (x) 1^b).
MeasureValue partial_coherence_qfi(const BipartiteState& rho,
                                   const LuedersMeasurement& pi_l);

// ---------------------------------------------------------------------------
// Shared spectral machinery. The coherence sums and the discord optimizer
// evaluate many projector families against one fixed state; caching the
// eigendecomposition and the pair-weight matrices keeps that cheap.

struct SpectralCache {
    Eigen::VectorXd lambda;        // eigenvalues, clipped to >= 0
    ComplexMatrix v;               // eigenvector columns
    ComplexMatrix v_adj;           // v.adjoint(), precomputed
    Eigen::MatrixXd skew_weights;  // (sqrt(l_j) - sqrt(l_k))^2
    Eigen::MatrixXd qfi_weights;   // (l_j - l_k)^2 / (l_j + l_k), 0 if sum tiny
};

SpectralCache make_spectral_cache(const ComplexMatrix& rho_matrix);

/// Sum_i 1/2 Sum_{j,k} weights_{jk} |<j| (u_i u_i^dag (x) I_b) |k>|^2 over the
/// columns u_i of `basis`, in the eigenbasis held by the cache. With
/// weights = skew_weights this is C_I^a; with qfi_weights, the QFI variant;
/// with d_b = 1 the single-system sums.
double extended_projector_sum(const SpectralCache& cache,
                              const Eigen::MatrixXd& weights,
                              const ComplexMatrix& basis, Eigen::Index d_b);

}  // namespace qcoh
