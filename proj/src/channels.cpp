#include "qcoh/channels.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

namespace qcoh {

KrausChannel channel_from_kraus(std::vector<ComplexMatrix> ops, double tol) {
    if (ops.empty())
        throw ValidationError("channel_from_kraus: need at least one operator");
    const Eigen::Index dout = ops.front().rows();
    const Eigen::Index din = ops.front().cols();
    for (const auto& k : ops) {
        if (k.rows() != dout || k.cols() != din)
            throw ValidationError("channel_from_kraus: inconsistent Kraus dims");
    }
    ComplexMatrix sum = ComplexMatrix::Zero(din, din);
    for (const auto& k : ops) sum += k.adjoint() * k;
    const double res =
        (sum - ComplexMatrix::Identity(din, din)).cwiseAbs().maxCoeff();
    if (res > tol) {
        std::ostringstream os;
        os << "channel_from_kraus: completeness violated, max |Sum K^dag K - I| = "
           << res;
        throw ValidationError(os.str());
    }
    return KrausChannel(std::move(ops), din, dout);
}

KrausChannel identity_channel(Eigen::Index d) {
    return channel_from_kraus({ComplexMatrix::Identity(d, d)});
}

DensityMatrix apply(const KrausChannel& lambda, const DensityMatrix& rho) {
    if (lambda.dim_in() != rho.dim())
        throw ValidationError("apply: channel/state dimension mismatch");
    ComplexMatrix out = ComplexMatrix::Zero(lambda.dim_out(), lambda.dim_out());
    for (const auto& k : lambda.kraus()) out += k * rho.matrix() * k.adjoint();
    out = 0.5 * (out + out.adjoint());
    return density_from_matrix(out, 1e-9);
}

BipartiteState apply(const KrausChannel& lambda, const BipartiteState& rho) {
    if (lambda.dim_in() != rho.dim() || lambda.dim_out() != rho.dim())
        throw ValidationError("apply: bipartite channel must preserve dims");
    return BipartiteState(apply(lambda, rho.state()), rho.d_a(), rho.d_b());
}

std::vector<std::pair<double, DensityMatrix>> apply_selective(
    const KrausChannel& lambda, const DensityMatrix& rho) {
    if (lambda.dim_in() != rho.dim())
        throw ValidationError("apply_selective: dimension mismatch");
    std::vector<std::pair<double, DensityMatrix>> outcomes;
    for (const auto& k : lambda.kraus()) {
        ComplexMatrix t = k * rho.matrix() * k.adjoint();
        const double p = t.trace().real();
        if (p < 1e-12) continue;  // avoids division blow-up in the state
        t /= p;
        t = 0.5 * (t + t.adjoint());
        outcomes.emplace_back(p, density_from_matrix(t, 1e-9));
    }
    return outcomes;
}

bool is_incoherent_channel(const KrausChannel& lambda,
                           const VonNeumannMeasurement& basis, double tol) {
    if (lambda.dim_in() != basis.dim() || lambda.dim_out() != basis.dim())
        return false;
    for (const auto& k : lambda.kraus()) {
        const ComplexMatrix kb = basis.basis().adjoint() * k * basis.basis();
        for (Eigen::Index j = 0; j < kb.cols(); ++j) {
            int nonzero = 0;
            for (Eigen::Index i = 0; i < kb.rows(); ++i)
                if (std::abs(kb(i, j)) > tol) ++nonzero;
            if (nonzero > 1) return false;
        }
    }
    return true;
}

namespace {

// Unit-Frobenius-norm Hermitian basis of d x d matrices, d^2 elements.
std::vector<ComplexMatrix> hermitian_operator_basis(Eigen::Index d) {
    std::vector<ComplexMatrix> out;
    out.reserve(static_cast<std::size_t>(d * d));
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (Eigen::Index j = 0; j < d; ++j) {
        ComplexMatrix e = ComplexMatrix::Zero(d, d);
        e(j, j) = 1.0;
        out.push_back(e);
    }
    for (Eigen::Index j = 0; j < d; ++j) {
        for (Eigen::Index k = j + 1; k < d; ++k) {
            ComplexMatrix re = ComplexMatrix::Zero(d, d);
            re(j, k) = inv_sqrt2;
            re(k, j) = inv_sqrt2;
            out.push_back(re);
            ComplexMatrix im = ComplexMatrix::Zero(d, d);
            im(j, k) = Complex(0.0, inv_sqrt2);
            im(k, j) = Complex(0.0, -inv_sqrt2);
            out.push_back(im);
        }
    }
    return out;
}

ComplexMatrix lueders_dephase_matrix(const ComplexMatrix& m,
                                     const LuedersMeasurement& pi_l) {
    ComplexMatrix out = ComplexMatrix::Zero(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < pi_l.outcomes(); ++i) {
        const ComplexMatrix p = pi_l.projector(i);
        out += p * m * p;
    }
    return out;
}

}  // namespace

double partial_incoherence_residual(const KrausChannel& lambda,
                                    const LuedersMeasurement& pi_l) {
    if (lambda.dim_in() != pi_l.dim() || lambda.dim_out() != pi_l.dim())
        throw ValidationError(
            "partial_incoherence_residual: channel/measurement dims differ");
    // Hermitian block-diagonal operators are spanned by
    // {Pi_i^a (x) h_m}: checking them is equivalent to the state-level
    // definition K I_P^a K^dag in I_P^a.
    const auto b_basis = hermitian_operator_basis(pi_l.d_b());
    double worst = 0.0;
    for (Eigen::Index i = 0; i < pi_l.outcomes(); ++i) {
        const ComplexMatrix pa = pi_l.a_measurement().projector(i);
        for (const auto& h : b_basis) {
            const ComplexMatrix b = kron(pa, h);
            for (const auto& k : lambda.kraus()) {
                const ComplexMatrix t = k * b * k.adjoint();
                const double res = (lueders_dephase_matrix(t, pi_l) - t).norm();
                worst = std::max(worst, res);
            }
        }
    }
    return worst;
}

bool is_partial_incoherent_channel(const KrausChannel& lambda,
                                   const LuedersMeasurement& pi_l,
                                   double tol) {
    return partial_incoherence_residual(lambda, pi_l) <= tol;
}

KrausChannel controlled_unitary(const VonNeumannMeasurement& a_basis,
                                const std::vector<ComplexMatrix>& v) {
    if (static_cast<Eigen::Index>(v.size()) != a_basis.outcomes())
        throw ValidationError("controlled_unitary: need one V_i per outcome");
    const Eigen::Index d_b = v.front().rows();
    ComplexMatrix u =
        ComplexMatrix::Zero(a_basis.dim() * d_b, a_basis.dim() * d_b);
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double res = unitarity_residual(v[i]);
        if (v[i].rows() != d_b || res > kHermitianTol) {
            std::ostringstream os;
            os << "controlled_unitary: V_" << i
               << " is not unitary, residual " << res;
            throw ValidationError(os.str());
        }
        u += kron(a_basis.projector(static_cast<Eigen::Index>(i)), v[i]);
    }
    return channel_from_kraus({u});
}

KrausChannel random_incoherent_channel(Eigen::Index d, int n_kraus,
                                       std::uint64_t seed) {
    if (d < 1 || n_kraus < 1)
        throw ValidationError("random_incoherent_channel: bad dims");
    std::mt19937_64 gen(seed);
    std::exponential_distribution<double> expd(1.0);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    std::vector<double> w(n_kraus);
    for (auto& x : w) x = expd(gen);
    const double total = std::accumulate(w.begin(), w.end(), 0.0);
    std::vector<ComplexMatrix> ops;
    ops.reserve(w.size());
    std::vector<Eigen::Index> perm(d);
    for (int k = 0; k < n_kraus; ++k) {
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), gen);
        ComplexMatrix op = ComplexMatrix::Zero(d, d);
        const double amp = std::sqrt(w[k] / total);
        for (Eigen::Index j = 0; j < d; ++j)
            op(perm[j], j) = amp * std::polar(1.0, angle(gen));
        ops.push_back(std::move(op));
    }
    return channel_from_kraus(std::move(ops));
}

KrausChannel random_partial_incoherent_channel(Eigen::Index d_a,
                                               Eigen::Index d_b,
                                               std::uint64_t seed) {
    if (d_a < 1 || d_b < 1)
        throw ValidationError("random_partial_incoherent_channel: bad dims");
    std::mt19937_64 gen(seed);
    std::uniform_int_distribution<int> nk_dist(1, 3);
    const int n_kraus = nk_dist(gen);
    std::vector<Eigen::Index> perm(d_a);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), gen);
    // Per a-index CPTP family on party b: n_kraus row-blocks of a Haar
    // isometry C^{d_b} -> C^{d_b * n_kraus}.
    std::vector<std::vector<ComplexMatrix>> families(d_a);
    for (Eigen::Index i = 0; i < d_a; ++i) {
        const ComplexMatrix u = random_haar_unitary(
            d_b * n_kraus, derive_seed(seed, static_cast<std::uint64_t>(i) + 1));
        for (int l = 0; l < n_kraus; ++l)
            families[i].push_back(u.block(l * d_b, 0, d_b, d_b));
    }
    std::vector<ComplexMatrix> ops;
    for (int l = 0; l < n_kraus; ++l) {
        ComplexMatrix k = ComplexMatrix::Zero(d_a * d_b, d_a * d_b);
        for (Eigen::Index i = 0; i < d_a; ++i) {
            ComplexMatrix e = ComplexMatrix::Zero(d_a, d_a);
            e(perm[i], i) = 1.0;
            k += kron(e, families[i][l]);
        }
        ops.push_back(std::move(k));
    }
    return channel_from_kraus(std::move(ops));
}

KrausChannel compose(const KrausChannel& outer, const KrausChannel& inner) {
    if (inner.dim_out() != outer.dim_in())
        throw ValidationError("compose: inner.dim_out != outer.dim_in");
    std::vector<ComplexMatrix> ops;
    ops.reserve(outer.size() * inner.size());
    for (const auto& ko : outer.kraus())
        for (const auto& ki : inner.kraus()) ops.push_back(ko * ki);
    return channel_from_kraus(std::move(ops));
}

}  // namespace qcoh
