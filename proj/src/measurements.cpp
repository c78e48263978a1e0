#include "qcoh/measurements.hpp"

#include <cmath>
#include <sstream>

namespace qcoh {

ComplexMatrix VonNeumannMeasurement::projector(Eigen::Index i) const {
    return basis_.col(i) * basis_.col(i).adjoint();
}

LuedersMeasurement::LuedersMeasurement(VonNeumannMeasurement a_measurement,
                                       Eigen::Index d_b)
    : a_(std::move(a_measurement)), d_b_(d_b) {
    if (d_b < 1) throw ValidationError("lueders_extend: d_b must be >= 1");
}

ComplexMatrix LuedersMeasurement::projector(Eigen::Index i) const {
    return kron(a_.projector(i), ComplexMatrix::Identity(d_b_, d_b_));
}

std::string LuedersMeasurement::label() const {
    std::ostringstream os;
    os << "lueders(" << a_.label() << ", d_b=" << d_b_ << ")";
    return os.str();
}

VonNeumannMeasurement computational_basis(Eigen::Index d) {
    if (d < 1) throw ValidationError("computational_basis: d must be >= 1");
    std::ostringstream os;
    os << "computational(d=" << d << ")";
    return VonNeumannMeasurement(ComplexMatrix::Identity(d, d), os.str());
}

VonNeumannMeasurement basis_from_unitary(const ComplexMatrix& u) {
    const double res = unitarity_residual(u);
    if (res > kHermitianTol) {
        std::ostringstream os;
        os << "basis_from_unitary: input is not unitary, max |U^dag U - I| = "
           << res;
        throw ValidationError(os.str());
    }
    std::ostringstream os;
    os << "unitary-basis(d=" << u.rows() << ")";
    return VonNeumannMeasurement(u, os.str());
}

VonNeumannMeasurement qubit_basis(double theta, double phi) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    const Complex ph = std::polar(1.0, phi);
    ComplexMatrix b(2, 2);
    b(0, 0) = c;
    b(1, 0) = ph * s;
    b(0, 1) = -std::conj(ph) * s;
    b(1, 1) = c;
    std::ostringstream os;
    os << "angles(theta=" << theta << ", phi=" << phi << ")";
    return VonNeumannMeasurement(std::move(b), os.str());
}

LuedersMeasurement lueders_extend(const VonNeumannMeasurement& m,
                                  Eigen::Index d_b) {
    return LuedersMeasurement(m, d_b);
}

ComplexMatrix unitary_from_params(Eigen::Index d,
                                  std::span<const double> params) {
    if (static_cast<Eigen::Index>(params.size()) != d * d) {
        std::ostringstream os;
        os << "unitary_from_params: expected " << d * d << " parameters, got "
           << params.size();
        throw ValidationError(os.str());
    }
    // A = iH anti-Hermitian; assemble H directly and exponentiate spectrally.
    ComplexMatrix h = ComplexMatrix::Zero(d, d);
    std::size_t idx = 0;
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = i + 1; j < d; ++j) {
            const double x = params[idx++];
            const double y = params[idx++];
            h(i, j) = Complex(y, -x);
            h(j, i) = Complex(y, x);
        }
    }
    for (Eigen::Index i = 0; i < d; ++i) h(i, i) = params[idx++];
    SpectralDecomposition dec = hermitian_eig(h);
    Eigen::VectorXcd phases(d);
    for (Eigen::Index k = 0; k < d; ++k)
        phases[k] = std::polar(1.0, dec.eigenvalues[k]);
    return dec.eigenvectors * phases.asDiagonal() * dec.eigenvectors.adjoint();
}

std::vector<double> params_from_unitary(const ComplexMatrix& u) {
    const double res = unitarity_residual(u);
    if (res > 1e-8) {
        std::ostringstream os;
        os << "params_from_unitary: input is not unitary, residual " << res;
        throw ValidationError(os.str());
    }
    const Eigen::Index d = u.rows();
    // U is normal, so its Schur form is diagonal; H = Q diag(arg T_jj) Q^dag.
    Eigen::ComplexSchur<ComplexMatrix> schur(u);
    if (schur.info() != Eigen::Success)
        throw NumericalError("params_from_unitary: Schur decomposition failed");
    Eigen::VectorXd theta(d);
    for (Eigen::Index j = 0; j < d; ++j)
        theta[j] = std::arg(schur.matrixT()(j, j));
    ComplexMatrix h = schur.matrixU() * theta.asDiagonal() *
                      schur.matrixU().adjoint();
    h = 0.5 * (h + h.adjoint());
    std::vector<double> params(static_cast<std::size_t>(d * d), 0.0);
    std::size_t idx = 0;
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = i + 1; j < d; ++j) {
            params[idx++] = -h(i, j).imag();
            params[idx++] = h(i, j).real();
        }
    }
    for (Eigen::Index i = 0; i < d; ++i) params[idx++] = h(i, i).real();
    return params;
}

}  // namespace qcoh
