// Validated quantum states, bipartite structure, dephasing, random
// ensembles, and the structural classifiers.
#pragma once

#include <vector>

#include "qcoh/linalg.hpp"
#include "qcoh/measurements.hpp"

namespace qcoh {

inline constexpr double kStateTol = 1e-10;

/// Hermitian, PSD, trace-1 matrix. Constructed only through the validating
/// factories below; stores the raw matrix unmodified.
class DensityMatrix {
public:
    const ComplexMatrix& matrix() const { return mat_; }
    Eigen::Index dim() const { return mat_.rows(); }

    /// Eigenvalues with round-off negatives ([-tol, 0)) clipped to 0.
    Eigen::VectorXd clipped_eigenvalues() const;

    double purity() const { return (mat_ * mat_).trace().real(); }

private:
    explicit DensityMatrix(ComplexMatrix m) : mat_(std::move(m)) {}
    ComplexMatrix mat_;

    friend DensityMatrix density_from_matrix(const ComplexMatrix& raw,
                                             double tol);
};

/// A validated state together with its tensor split (d_a, d_b).
class BipartiteState {
public:
    BipartiteState(DensityMatrix state, Eigen::Index d_a, Eigen::Index d_b);

    const DensityMatrix& state() const { return state_; }
    const ComplexMatrix& matrix() const { return state_.matrix(); }
    Eigen::Index d_a() const { return d_a_; }
    Eigen::Index d_b() const { return d_b_; }
    Eigen::Index dim() const { return state_.dim(); }
    bool degenerate() const { return d_a_ < 2; }  // no nontrivial a-party

    DensityMatrix marginal_a() const;
    DensityMatrix marginal_b() const;

private:
    DensityMatrix state_;
    Eigen::Index d_a_;
    Eigen::Index d_b_;
};

/// Validates Hermiticity, positivity and unit trace (each reported with its
/// residual on failure) and wraps the matrix unmodified.
DensityMatrix density_from_matrix(const ComplexMatrix& raw,
                                  double tol = kStateTol);

/// |psi><psi| from a (not necessarily normalized) vector.
DensityMatrix pure_from_vector(const Eigen::VectorXcd& v);

/// Haar-random pure state; deterministic per seed.
DensityMatrix random_haar_pure(Eigen::Index d, std::uint64_t seed);

/// Partial trace over a k-dimensional environment of a Haar pure state on
/// d*k; full rank with probability 1 when k >= d.
DensityMatrix random_mixed_induced(Eigen::Index d, Eigen::Index k,
                                   std::uint64_t seed);

/// Sum_i Pi_i rho Pi_i.
DensityMatrix dephase(const DensityMatrix& rho,
                      const VonNeumannMeasurement& pi);
BipartiteState dephase(const BipartiteState& rho,
                       const LuedersMeasurement& pi_l);

/// rho_a (x) |0><0|^b.
BipartiteState attach_ancilla(const DensityMatrix& rho_a, Eigen::Index d_b);

/// Sum_n p(n) |phi_n><phi_n|^a (x) sigma_n: a zero-discord state by
/// construction. Probabilities are renormalized if within 1e-10 of 1.
BipartiteState classical_quantum_state(
    const std::vector<double>& p, const VonNeumannMeasurement& a_basis,
    const std::vector<DensityMatrix>& b_states);

/// True iff ||dephase(rho, Pi_L) - rho||_F <= tol.
bool is_partial_incoherent(const BipartiteState& rho,
                           const LuedersMeasurement& pi_l, double tol = 1e-8);

}  // namespace qcoh
