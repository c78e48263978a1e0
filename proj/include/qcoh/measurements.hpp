// Von Neumann measurements, their Lueders extensions, and the unitary
// parametrizations used by the discord optimizer.
#pragma once

#include <span>
#include <string>

#include "qcoh/linalg.hpp"

namespace qcoh {

/// Rank-1 projective measurement Pi = {|u_i><u_i|}. Projectors are derived
/// views of the basis columns, never stored redundantly.
class VonNeumannMeasurement {
public:
    Eigen::Index dim() const { return basis_.rows(); }
    Eigen::Index outcomes() const { return basis_.cols(); }
    const ComplexMatrix& basis() const { return basis_; }
    Eigen::VectorXcd basis_vector(Eigen::Index i) const { return basis_.col(i); }
    ComplexMatrix projector(Eigen::Index i) const;
    const std::string& label() const { return label_; }

private:
    VonNeumannMeasurement(ComplexMatrix basis, std::string label)
        : basis_(std::move(basis)), label_(std::move(label)) {}
    ComplexMatrix basis_;
    std::string label_;

    friend VonNeumannMeasurement computational_basis(Eigen::Index d);
    friend VonNeumannMeasurement basis_from_unitary(const ComplexMatrix& u);
    friend VonNeumannMeasurement qubit_basis(double theta, double phi);
};

/// Extension Pi_L = {Pi_i^a (x) 1^b} of a local measurement on party a.
class LuedersMeasurement {
public:
    LuedersMeasurement(VonNeumannMeasurement a_measurement, Eigen::Index d_b);
    const VonNeumannMeasurement& a_measurement() const { return a_; }
    Eigen::Index d_a() const { return a_.dim(); }
    Eigen::Index d_b() const { return d_b_; }
    Eigen::Index dim() const { return a_.dim() * d_b_; }
    Eigen::Index outcomes() const { return a_.outcomes(); }
    ComplexMatrix projector(Eigen::Index i) const;  // Pi_i^a (x) I_b, on demand
    std::string label() const;

private:
    VonNeumannMeasurement a_;
    Eigen::Index d_b_;
};

VonNeumannMeasurement computational_basis(Eigen::Index d);

/// Measurement whose basis vectors are the columns of U. Rejects
/// non-unitary input (residual in the message).
VonNeumannMeasurement basis_from_unitary(const ComplexMatrix& u);

/// Two-angle qubit chart: {cos(t/2)|0> + e^{ip} sin(t/2)|1>, complement}.
VonNeumannMeasurement qubit_basis(double theta, double phi);

LuedersMeasurement lueders_extend(const VonNeumannMeasurement& m,
                                  Eigen::Index d_b);

/// exp(A) with A anti-Hermitian assembled from d^2 real parameters:
/// the chart used for general-d measurement optimization. Only the
/// projector family of the result matters, so chart redundancy is fine.
ComplexMatrix unitary_from_params(Eigen::Index d, std::span<const double> params);

/// Inverse chart (one valid preimage): parameters p with
/// unitary_from_params(d, p) == U up to per-column phases.
std::vector<double> params_from_unitary(const ComplexMatrix& u);

}  // namespace qcoh
