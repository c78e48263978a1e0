// Dense complex matrix algebra: the numerical substrate for every measure.
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qcoh {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

/// Thrown when an input fails a structural precondition (non-Hermitian,
/// not PSD, dimension mismatch, ...). The message names the violated
/// check and the observed residual.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when a numerical procedure fails to deliver (e.g. the discord
/// optimizer does not converge in any start).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kPsdEigenvalueTol = -1e-10;

/// max |M - M†| entrywise; 0 for exactly Hermitian input.
double hermiticity_residual(const ComplexMatrix& m);

bool is_hermitian(const ComplexMatrix& m, double tol = kHermitianTol);

/// max |U†U - I| entrywise.
double unitarity_residual(const ComplexMatrix& u);

struct SpectralDecomposition {
    Eigen::VectorXd eigenvalues;   // ascending
    ComplexMatrix eigenvectors;    // columns orthonormal, M = V diag(l) V†
};

/// Eigendecomposition of a Hermitian matrix. Rejects non-square or
/// non-Hermitian input (residual in the message).
SpectralDecomposition hermitian_eig(const ComplexMatrix& m);

/// Hermitian PSD square root R with R·R = M. Eigenvalues in
/// [kPsdEigenvalueTol, 0) are clipped to 0; anything more negative is an
/// error carrying the offending eigenvalue.
ComplexMatrix psd_sqrt(const ComplexMatrix& m);

/// Kronecker product, a-index-major: |i>^a|j>^b maps to flat index i*d_b + j.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

enum class Party { A, B };

/// Trace out one party of a (d_a*d_b) x (d_a*d_b) composite.
ComplexMatrix partial_trace(const ComplexMatrix& m, Eigen::Index d_a,
                            Eigen::Index d_b, Party keep);

/// AB - BA.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Haar-distributed unitary: QR of a complex Gaussian matrix with the R
/// diagonal phase-normalized. Deterministic per seed.
ComplexMatrix random_haar_unitary(Eigen::Index d, std::uint64_t seed);

/// Derives an independent stream seed from (base, index); used for
/// per-trial and per-restart RNG streams.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

}  // namespace qcoh
