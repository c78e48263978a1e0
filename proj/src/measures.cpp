#include "qcoh/measures.hpp"

#include <cmath>
#include <sstream>

namespace qcoh {

MeasureValue make_measure(double value, std::string measure,
                          std::string basis) {
    if (value < -1e-9) {
        std::ostringstream os;
        os << "measure '" << measure << "' came out " << value
           << "; negative beyond round-off";
        throw NumericalError(os.str());
    }
    if (value < 0.0) value = 0.0;
    return {value, std::move(measure), std::move(basis)};
}

double von_neumann_entropy(const DensityMatrix& rho) {
    const Eigen::VectorXd lam = rho.clipped_eigenvalues();
    double s = 0.0;
    for (Eigen::Index i = 0; i < lam.size(); ++i)
        if (lam[i] > 1e-15) s -= lam[i] * std::log2(lam[i]);
    return s;
}

SpectralCache make_spectral_cache(const ComplexMatrix& rho_matrix) {
    SpectralDecomposition dec = hermitian_eig(rho_matrix);
    const Eigen::Index n = dec.eigenvalues.size();
    SpectralCache cache;
    cache.lambda = dec.eigenvalues.cwiseMax(0.0);
    cache.v = std::move(dec.eigenvectors);
    cache.v_adj = cache.v.adjoint();
    cache.skew_weights.resize(n, n);
    cache.qfi_weights.resize(n, n);
    const Eigen::VectorXd sq = cache.lambda.cwiseSqrt();
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index k = 0; k < n; ++k) {
            const double ds = sq[j] - sq[k];
            cache.skew_weights(j, k) = ds * ds;
            const double sum = cache.lambda[j] + cache.lambda[k];
            const double diff = cache.lambda[j] - cache.lambda[k];
            cache.qfi_weights(j, k) = (sum > 1e-12) ? diff * diff / sum : 0.0;
        }
    }
    return cache;
}

namespace {

void check_observable(const DensityMatrix& sigma, const ComplexMatrix& k,
                      const char* who) {
    if (k.rows() != sigma.dim() || k.cols() != sigma.dim()) {
        std::ostringstream os;
        os << who << ": observable is " << k.rows() << "x" << k.cols()
           << ", state has dimension " << sigma.dim();
        throw ValidationError(os.str());
    }
    const double res = hermiticity_residual(k);
    if (res > kHermitianTol) {
        std::ostringstream os;
        os << who << ": observable is not Hermitian, max |K - K^dag| = " << res;
        throw ValidationError(os.str());
    }
}

double pair_weighted_sum(const SpectralCache& cache,
                         const Eigen::MatrixXd& weights,
                         const ComplexMatrix& k) {
    const ComplexMatrix kt = cache.v_adj * k * cache.v;
    return 0.5 * (weights.array() * kt.cwiseAbs2().array()).sum();
}

}  // namespace

double skew_information(const DensityMatrix& sigma, const ComplexMatrix& k) {
    check_observable(sigma, k, "skew_information");
    const SpectralCache cache = make_spectral_cache(sigma.matrix());
    return pair_weighted_sum(cache, cache.skew_weights, k);
}

double quantum_fisher_information(const DensityMatrix& sigma,
                                  const ComplexMatrix& h) {
    check_observable(sigma, h, "quantum_fisher_information");
    const SpectralCache cache = make_spectral_cache(sigma.matrix());
    return pair_weighted_sum(cache, cache.qfi_weights, h);
}

double extended_projector_sum(const SpectralCache& cache,
                              const Eigen::MatrixXd& weights,
                              const ComplexMatrix& basis, Eigen::Index d_b) {
    const Eigen::Index n = cache.v.rows();
    const Eigen::Index d_a = basis.rows();
    double total = 0.0;
    ComplexMatrix b(n, d_b);
    for (Eigen::Index i = 0; i < basis.cols(); ++i) {
        // b = V^dag (u_i (x) I_b), assembled from the a-major column blocks
        b.setZero();
        for (Eigen::Index a = 0; a < d_a; ++a)
            b += basis(a, i) * cache.v_adj.middleCols(a * d_b, d_b);
        const ComplexMatrix p = b * b.adjoint();
        total += 0.5 * (weights.array() * p.cwiseAbs2().array()).sum();
    }
    return total;
}

MeasureValue coherence_l1(const DensityMatrix& rho,
                          const VonNeumannMeasurement& basis) {
    if (basis.dim() != rho.dim())
        throw ValidationError("coherence_l1: basis dimension mismatch");
    const ComplexMatrix r = basis.basis().adjoint() * rho.matrix() *
                            basis.basis();
    double sum = 0.0;
    for (Eigen::Index i = 0; i < r.rows(); ++i)
        for (Eigen::Index j = 0; j < r.cols(); ++j)
            if (i != j) sum += std::abs(r(i, j));
    return make_measure(sum, "l1", basis.label());
}

MeasureValue coherence_rel_entropy(const DensityMatrix& rho,
                                   const VonNeumannMeasurement& basis) {
    if (basis.dim() != rho.dim())
        throw ValidationError("coherence_rel_entropy: basis dimension mismatch");
    const double s_deph = von_neumann_entropy(dephase(rho, basis));
    const double s_rho = von_neumann_entropy(rho);
    return make_measure(s_deph - s_rho, "rel_entropy", basis.label());
}

MeasureValue coherence_skew(const DensityMatrix& rho,
                            const VonNeumannMeasurement& basis) {
    if (basis.dim() != rho.dim())
        throw ValidationError("coherence_skew: basis dimension mismatch");
    const SpectralCache cache = make_spectral_cache(rho.matrix());
    return make_measure(
        extended_projector_sum(cache, cache.skew_weights, basis.basis(), 1),
        "skew", basis.label());
}

MeasureValue coherence_qfi(const DensityMatrix& rho,
                           const VonNeumannMeasurement& basis) {
    if (basis.dim() != rho.dim())
        throw ValidationError("coherence_qfi: basis dimension mismatch");
    const SpectralCache cache = make_spectral_cache(rho.matrix());
    return make_measure(
        extended_projector_sum(cache, cache.qfi_weights, basis.basis(), 1),
        "qfi", basis.label());
}

MeasureValue partial_coherence_skew(const BipartiteState& rho,
                                    const LuedersMeasurement& pi_l) {
    if (pi_l.d_a() != rho.d_a() || pi_l.d_b() != rho.d_b())
        throw ValidationError("partial_coherence_skew: dimension mismatch");
    const SpectralCache cache = make_spectral_cache(rho.matrix());
    return make_measure(
        extended_projector_sum(cache, cache.skew_weights,
                               pi_l.a_measurement().basis(), pi_l.d_b()),
        "partial_skew", pi_l.label());
}

MeasureValue partial_coherence_qfi(const BipartiteState& rho,
                                   const LuedersMeasurement& pi_l) {
    if (pi_l.d_a() != rho.d_a() || pi_l.d_b() != rho.d_b())
        throw ValidationError("partial_coherence_qfi: dimension mismatch");
    const SpectralCache cache = make_spectral_cache(rho.matrix());
    return make_measure(
        extended_projector_sum(cache, cache.qfi_weights,
                               pi_l.a_measurement().basis(), pi_l.d_b()),
        "partial_qfi", pi_l.label());
}

}  // namespace qcoh
