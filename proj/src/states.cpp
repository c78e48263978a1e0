#include "qcoh/states.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace qcoh {

namespace {

Eigen::VectorXcd complex_gaussian_vector(Eigen::Index n, std::mt19937_64& gen) {
    std::normal_distribution<double> dist(0.0, 1.0);
    Eigen::VectorXcd v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = Complex(dist(gen), dist(gen));
    return v;
}

}  // namespace

Eigen::VectorXd DensityMatrix::clipped_eigenvalues() const {
    Eigen::VectorXd lam = hermitian_eig(mat_).eigenvalues;
    for (Eigen::Index i = 0; i < lam.size(); ++i)
        if (lam[i] < 0.0) lam[i] = 0.0;
    return lam;
}

DensityMatrix density_from_matrix(const ComplexMatrix& raw, double tol) {
    if (raw.rows() != raw.cols()) {
        std::ostringstream os;
        os << "density_from_matrix: matrix is not square (" << raw.rows()
           << "x" << raw.cols() << ")";
        throw ValidationError(os.str());
    }
    const double herm = hermiticity_residual(raw);
    if (herm > tol) {
        std::ostringstream os;
        os << "density_from_matrix: not Hermitian, max |M - M^dag| = " << herm;
        throw ValidationError(os.str());
    }
    const ComplexMatrix h = 0.5 * (raw + raw.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
    if (solver.info() != Eigen::Success)
        throw NumericalError("density_from_matrix: eigensolver failed");
    const double min_eig = solver.eigenvalues().minCoeff();
    if (min_eig < -tol) {
        std::ostringstream os;
        os << "density_from_matrix: not PSD, eigenvalue " << min_eig;
        throw ValidationError(os.str());
    }
    const double tr_res = std::abs(raw.trace() - Complex(1.0, 0.0));
    if (tr_res > tol) {
        std::ostringstream os;
        os << "density_from_matrix: trace differs from 1 by " << tr_res;
        throw ValidationError(os.str());
    }
    return DensityMatrix(raw);
}

DensityMatrix pure_from_vector(const Eigen::VectorXcd& v) {
    const double n = v.norm();
    if (n <= 0.0)
        throw ValidationError("pure_from_vector: zero vector has no state");
    const Eigen::VectorXcd u = v / n;
    return density_from_matrix(u * u.adjoint());
}

DensityMatrix random_haar_pure(Eigen::Index d, std::uint64_t seed) {
    if (d < 1) throw ValidationError("random_haar_pure: d must be >= 1");
    std::mt19937_64 gen(seed);
    return pure_from_vector(complex_gaussian_vector(d, gen));
}

DensityMatrix random_mixed_induced(Eigen::Index d, Eigen::Index k,
                                   std::uint64_t seed) {
    if (d < 1 || k < 1)
        throw ValidationError("random_mixed_induced: dims must be >= 1");
    std::mt19937_64 gen(seed);
    Eigen::VectorXcd psi = complex_gaussian_vector(d * k, gen);
    psi /= psi.norm();
    // tr_env |psi><psi| via the d x k amplitude matrix
    Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic,
                                   Eigen::RowMajor>>
        m(psi.data(), d, k);
    ComplexMatrix rho = m * m.adjoint();
    rho = 0.5 * (rho + rho.adjoint());
    return density_from_matrix(rho);
}

DensityMatrix dephase(const DensityMatrix& rho,
                      const VonNeumannMeasurement& pi) {
    if (pi.dim() != rho.dim())
        throw ValidationError("dephase: measurement dimension mismatch");
    ComplexMatrix out = ComplexMatrix::Zero(rho.dim(), rho.dim());
    for (Eigen::Index i = 0; i < pi.outcomes(); ++i) {
        const Eigen::VectorXcd u = pi.basis_vector(i);
        const Complex w = u.dot(rho.matrix() * u);  // <u| rho |u>
        out += w * (u * u.adjoint());
    }
    out = 0.5 * (out + out.adjoint());
    return density_from_matrix(out);
}

BipartiteState dephase(const BipartiteState& rho,
                       const LuedersMeasurement& pi_l) {
    if (pi_l.d_a() != rho.d_a() || pi_l.d_b() != rho.d_b())
        throw ValidationError("dephase: Lueders measurement dimension mismatch");
    ComplexMatrix out = ComplexMatrix::Zero(rho.dim(), rho.dim());
    for (Eigen::Index i = 0; i < pi_l.outcomes(); ++i) {
        const ComplexMatrix p = pi_l.projector(i);
        out += p * rho.matrix() * p;
    }
    out = 0.5 * (out + out.adjoint());
    return BipartiteState(density_from_matrix(out), rho.d_a(), rho.d_b());
}

BipartiteState::BipartiteState(DensityMatrix state, Eigen::Index d_a,
                               Eigen::Index d_b)
    : state_(std::move(state)), d_a_(d_a), d_b_(d_b) {
    if (d_a < 1 || d_b < 1)
        throw ValidationError("BipartiteState: dims must be >= 1");
    if (d_a * d_b != state_.dim()) {
        std::ostringstream os;
        os << "BipartiteState: split (" << d_a << "," << d_b
           << ") does not match dimension " << state_.dim();
        throw ValidationError(os.str());
    }
}

DensityMatrix BipartiteState::marginal_a() const {
    return density_from_matrix(
        partial_trace(state_.matrix(), d_a_, d_b_, Party::A));
}

DensityMatrix BipartiteState::marginal_b() const {
    return density_from_matrix(
        partial_trace(state_.matrix(), d_a_, d_b_, Party::B));
}

BipartiteState attach_ancilla(const DensityMatrix& rho_a, Eigen::Index d_b) {
    if (d_b < 1) throw ValidationError("attach_ancilla: d_b must be >= 1");
    ComplexMatrix anc = ComplexMatrix::Zero(d_b, d_b);
    anc(0, 0) = 1.0;
    return BipartiteState(density_from_matrix(kron(rho_a.matrix(), anc)),
                          rho_a.dim(), d_b);
}

BipartiteState classical_quantum_state(
    const std::vector<double>& p, const VonNeumannMeasurement& a_basis,
    const std::vector<DensityMatrix>& b_states) {
    if (p.empty() || p.size() != b_states.size() ||
        static_cast<Eigen::Index>(p.size()) != a_basis.outcomes())
        throw ValidationError(
            "classical_quantum_state: p, a_basis and b_states lengths differ");
    double total = 0.0;
    for (double w : p) {
        if (w < 0.0)
            throw ValidationError("classical_quantum_state: negative probability");
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-10) {
        std::ostringstream os;
        os << "classical_quantum_state: probabilities sum to " << total;
        throw ValidationError(os.str());
    }
    const Eigen::Index d_b = b_states.front().dim();
    ComplexMatrix out = ComplexMatrix::Zero(a_basis.dim() * d_b,
                                            a_basis.dim() * d_b);
    for (std::size_t n = 0; n < p.size(); ++n) {
        if (b_states[n].dim() != d_b)
            throw ValidationError("classical_quantum_state: b_states dims differ");
        out += (p[n] / total) *
               kron(a_basis.projector(static_cast<Eigen::Index>(n)),
                    b_states[n].matrix());
    }
    return BipartiteState(density_from_matrix(out), a_basis.dim(), d_b);
}

bool is_partial_incoherent(const BipartiteState& rho,
                           const LuedersMeasurement& pi_l, double tol) {
    const BipartiteState deph = dephase(rho, pi_l);
    return (deph.matrix() - rho.matrix()).norm() <= tol;
}

}  // namespace qcoh
