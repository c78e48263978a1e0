#include "qcoh/linalg.hpp"

#include <random>
#include <sstream>

namespace qcoh {

double hermiticity_residual(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
    return m.rows() == m.cols() && hermiticity_residual(m) <= tol;
}

double unitarity_residual(const ComplexMatrix& u) {
    if (u.rows() != u.cols()) return std::numeric_limits<double>::infinity();
    return (u.adjoint() * u - ComplexMatrix::Identity(u.cols(), u.cols()))
        .cwiseAbs()
        .maxCoeff();
}

SpectralDecomposition hermitian_eig(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) {
        std::ostringstream os;
        os << "hermitian_eig: matrix is not square (" << m.rows() << "x"
           << m.cols() << ")";
        throw ValidationError(os.str());
    }
    const double res = hermiticity_residual(m);
    if (res > kHermitianTol) {
        std::ostringstream os;
        os << "hermitian_eig: matrix is not Hermitian, max |M - M^dag| = "
           << res;
        throw ValidationError(os.str());
    }
    // Symmetrize so round-off in the input does not leak into the solver.
    const ComplexMatrix h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("hermitian_eig: eigensolver failed to converge");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
    SpectralDecomposition d = hermitian_eig(m);
    Eigen::VectorXd lam = d.eigenvalues;
    for (Eigen::Index i = 0; i < lam.size(); ++i) {
        if (lam[i] < kPsdEigenvalueTol) {
            std::ostringstream os;
            os << "psd_sqrt: matrix is not PSD, eigenvalue " << lam[i]
               << " below tolerance " << kPsdEigenvalueTol;
            throw ValidationError(os.str());
        }
        if (lam[i] < 0.0) lam[i] = 0.0;  // round-off clipping
    }
    const ComplexMatrix r = d.eigenvectors *
                            lam.cwiseSqrt().asDiagonal() *
                            d.eigenvectors.adjoint();
    return 0.5 * (r + r.adjoint());
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
                a(i, j) * b;
        }
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, Eigen::Index d_a,
                            Eigen::Index d_b, Party keep) {
    if (d_a < 1 || d_b < 1 || m.rows() != d_a * d_b || m.cols() != d_a * d_b) {
        std::ostringstream os;
        os << "partial_trace: matrix is " << m.rows() << "x" << m.cols()
           << ", expected " << d_a * d_b << "x" << d_a * d_b << " from dims ("
           << d_a << "," << d_b << ")";
        throw ValidationError(os.str());
    }
    if (keep == Party::A) {
        ComplexMatrix out = ComplexMatrix::Zero(d_a, d_a);
        for (Eigen::Index i = 0; i < d_a; ++i)
            for (Eigen::Index k = 0; k < d_a; ++k)
                for (Eigen::Index j = 0; j < d_b; ++j)
                    out(i, k) += m(i * d_b + j, k * d_b + j);
        return out;
    }
    ComplexMatrix out = ComplexMatrix::Zero(d_b, d_b);
    for (Eigen::Index j = 0; j < d_b; ++j)
        for (Eigen::Index l = 0; l < d_b; ++l)
            for (Eigen::Index i = 0; i < d_a; ++i)
                out(j, l) += m(i * d_b + j, i * d_b + l);
    return out;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
        std::ostringstream os;
        os << "commutator: dimension mismatch (" << a.rows() << "x" << a.cols()
           << " vs " << b.rows() << "x" << b.cols() << ")";
        throw ValidationError(os.str());
    }
    return a * b - b * a;
}

ComplexMatrix random_haar_unitary(Eigen::Index d, std::uint64_t seed) {
    if (d < 1) throw ValidationError("random_haar_unitary: d must be >= 1");
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> dist(0.0, 1.0);
    ComplexMatrix z(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j)
            z(i, j) = Complex(dist(gen), dist(gen));
    Eigen::HouseholderQR<ComplexMatrix> qr(z);
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Phase-normalizing the R diagonal makes the distribution Haar.
    for (Eigen::Index j = 0; j < d; ++j) {
        const Complex rjj = r(j, j);
        const double mag = std::abs(rjj);
        q.col(j) *= (mag > 0.0) ? rjj / mag : Complex(1.0, 0.0);
    }
    return q;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    // splitmix64 finalizer over the combined value
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace qcoh
