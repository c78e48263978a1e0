#include "qcoh/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <sstream>

namespace qcoh {

namespace {

constexpr double kEq5EqualityTol = 1e-5;

struct TrialOutcome {
    double margin = 0.0;
    std::string flag;  // "created", "inconclusive", "flagged" or empty
    std::vector<std::pair<std::string, ComplexMatrix>> instances;
};

using TrialFn = TrialOutcome (*)(std::uint64_t trial_seed,
                                 const VerifyDims& dims, double tol);

struct SuiteSpec {
    TrialFn trial;
    bool counts_violations;
    double default_tol;
    const char* notes;
};

OptimizerConfig suite_optimizer(std::uint64_t trial_seed) {
    OptimizerConfig cfg;
    cfg.starts = 24;
    cfg.seed = derive_seed(trial_seed, 0x9090);
    return cfg;
}

BipartiteState random_bipartite(Eigen::Index d_a, Eigen::Index d_b,
                                std::uint64_t seed) {
    return BipartiteState(random_mixed_induced(d_a * d_b, d_a * d_b, seed),
                          d_a, d_b);
}

LuedersMeasurement comp_lueders(Eigen::Index d_a, Eigen::Index d_b) {
    return lueders_extend(computational_basis(d_a), d_b);
}

void record_channel(std::vector<std::pair<std::string, ComplexMatrix>>& out,
                    const KrausChannel& ch) {
    for (std::size_t l = 0; l < ch.size(); ++l) {
        std::ostringstream os;
        os << "kraus_" << l;
        out.emplace_back(os.str(), ch.kraus()[l]);
    }
}

std::vector<double> random_probabilities(Eigen::Index n, std::mt19937_64& gen) {
    std::exponential_distribution<double> expd(1.0);
    std::vector<double> p(static_cast<std::size_t>(n));
    double total = 0.0;
    for (auto& x : p) {
        x = expd(gen);
        total += x;
    }
    for (auto& x : p) x /= total;
    return p;
}

ComplexMatrix random_hermitian(Eigen::Index d, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> dist(0.0, 1.0);
    ComplexMatrix m(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j)
            m(i, j) = Complex(dist(gen), dist(gen));
    return 0.5 * (m + m.adjoint()).eval();
}

// --- suite bodies -----------------------------------------------------------

TrialOutcome theorem1_trial(std::uint64_t s, const VerifyDims& dims, double) {
    const BipartiteState rho =
        random_bipartite(dims.d_a, dims.d_b, derive_seed(s, 1));
    const KrausChannel lam =
        random_partial_incoherent_channel(dims.d_a, dims.d_b, derive_seed(s, 2));
    const BipartiteState out = apply(lam, rho);
    const double q = geometric_discord(out, suite_optimizer(s)).value;
    const double c =
        partial_coherence_skew(rho, comp_lueders(dims.d_a, dims.d_b)).value;
    TrialOutcome t;
    t.margin = q - c;
    t.instances.emplace_back("rho", rho.matrix());
    record_channel(t.instances, lam);
    return t;
}

TrialOutcome theorem2_noncreation_trial(std::uint64_t s, const VerifyDims& dims,
                                        double) {
    const LuedersMeasurement pi_l = comp_lueders(dims.d_a, dims.d_b);
    const BipartiteState rho_pi =
        dephase(random_bipartite(dims.d_a, dims.d_b, derive_seed(s, 1)), pi_l);
    const KrausChannel lam =
        random_partial_incoherent_channel(dims.d_a, dims.d_b, derive_seed(s, 2));
    TrialOutcome t;
    t.margin = geometric_discord(apply(lam, rho_pi), suite_optimizer(s)).value;
    t.instances.emplace_back("rho", rho_pi.matrix());
    record_channel(t.instances, lam);
    return t;
}

TrialOutcome theorem2_creation_trial(std::uint64_t s, const VerifyDims& dims,
                                     double tol) {
    const LuedersMeasurement pi_l = comp_lueders(dims.d_a, dims.d_b);
    // a partial coherent input, resampling past (near-)incoherent draws
    std::optional<BipartiteState> rho;
    for (int k = 0; k < 50; ++k) {
        BipartiteState cand =
            random_bipartite(dims.d_a, dims.d_b, derive_seed(s, 10 + k));
        if (partial_coherence_skew(cand, pi_l).value > std::max(10.0 * tol, 1e-3)) {
            rho = std::move(cand);
            break;
        }
    }
    TrialOutcome t;
    if (!rho) {
        t.flag = "inconclusive";
        t.margin = tol;
        return t;
    }
    const OptimizerConfig ocfg = suite_optimizer(s);
    double best = geometric_discord(*rho, ocfg).value;  // identity member
    if (best <= tol) {
        std::vector<ComplexMatrix> shifts;
        ComplexMatrix v = ComplexMatrix::Identity(dims.d_b, dims.d_b);
        ComplexMatrix step = ComplexMatrix::Zero(dims.d_b, dims.d_b);
        for (Eigen::Index j = 0; j < dims.d_b; ++j)
            step((j + 1) % dims.d_b, j) = 1.0;
        for (Eigen::Index i = 0; i < dims.d_a; ++i) {
            shifts.push_back(v);
            v = (v * step).eval();
        }
        const KrausChannel cnot =
            controlled_unitary(computational_basis(dims.d_a), shifts);
        best = std::max(best, geometric_discord(apply(cnot, *rho), ocfg).value);
    }
    for (int k = 0; k < 8 && best <= tol; ++k) {
        const KrausChannel lam = random_partial_incoherent_channel(
            dims.d_a, dims.d_b, derive_seed(s, 100 + k));
        best = std::max(best, geometric_discord(apply(lam, *rho), ocfg).value);
    }
    t.flag = best > tol ? "created" : "inconclusive";
    t.margin = tol - best;  // never a violation; bookkeeping only
    t.instances.emplace_back("rho", rho->matrix());
    return t;
}

TrialOutcome eq4_additivity_trial(std::uint64_t s, const VerifyDims& dims,
                                  double) {
    std::mt19937_64 gen(derive_seed(s, 0));
    std::uniform_int_distribution<Eigen::Index> da_dist(
        2, std::max<Eigen::Index>(2, dims.d_a));
    std::uniform_int_distribution<Eigen::Index> db_dist(
        2, std::max<Eigen::Index>(2, dims.d_b));
    const Eigen::Index d_a = da_dist(gen);
    const Eigen::Index d_b = db_dist(gen);
    const DensityMatrix rho_a = random_mixed_induced(d_a, d_a, derive_seed(s, 1));
    const DensityMatrix rho_b = random_mixed_induced(d_b, d_b, derive_seed(s, 2));
    const BipartiteState product(
        density_from_matrix(kron(rho_a.matrix(), rho_b.matrix())), d_a, d_b);
    const double lhs =
        partial_coherence_skew(product, comp_lueders(d_a, d_b)).value;
    const double rhs = coherence_skew(rho_a, computational_basis(d_a)).value;
    TrialOutcome t;
    t.margin = std::abs(lhs - rhs);
    t.instances.emplace_back("rho_a", rho_a.matrix());
    t.instances.emplace_back("rho_b", rho_b.matrix());
    return t;
}

TrialOutcome local_unitary_invariance_trial(std::uint64_t s,
                                            const VerifyDims& dims, double) {
    const BipartiteState rho =
        random_bipartite(dims.d_a, dims.d_b, derive_seed(s, 1));
    const ComplexMatrix u_a = random_haar_unitary(dims.d_a, derive_seed(s, 2));
    const ComplexMatrix u_b = random_haar_unitary(dims.d_b, derive_seed(s, 3));
    const ComplexMatrix w = kron(u_a, u_b);
    const BipartiteState rotated(
        density_from_matrix(w * rho.matrix() * w.adjoint()), dims.d_a,
        dims.d_b);
    const OptimizerConfig ocfg = suite_optimizer(s);
    TrialOutcome t;
    t.margin = std::abs(geometric_discord(rho, ocfg).value -
                        geometric_discord(rotated, ocfg).value);
    t.instances.emplace_back("rho", rho.matrix());
    t.instances.emplace_back("u_a", u_a);
    t.instances.emplace_back("u_b", u_b);
    return t;
}

TrialOutcome zero_discord_localization_trial(std::uint64_t s,
                                             const VerifyDims& dims, double) {
    std::mt19937_64 gen(derive_seed(s, 0));
    const ComplexMatrix u = random_haar_unitary(dims.d_a, derive_seed(s, 1));
    const std::vector<double> p = random_probabilities(dims.d_a, gen);
    std::vector<DensityMatrix> b_states;
    for (Eigen::Index n = 0; n < dims.d_a; ++n)
        b_states.push_back(random_mixed_induced(dims.d_b, dims.d_b,
                                                derive_seed(s, 10 + n)));
    const BipartiteState rho =
        classical_quantum_state(p, basis_from_unitary(u), b_states);
    // the local unitary |phi_n> -> |n> is U^dag on party a
    const ComplexMatrix w =
        kron(u.adjoint(), ComplexMatrix::Identity(dims.d_b, dims.d_b));
    const BipartiteState rotated(
        density_from_matrix(w * rho.matrix() * w.adjoint()), dims.d_a,
        dims.d_b);
    TrialOutcome t;
    t.margin =
        partial_coherence_skew(rotated, comp_lueders(dims.d_a, dims.d_b)).value;
    t.instances.emplace_back("rho", rho.matrix());
    t.instances.emplace_back("u_a", u);
    return t;
}

TrialOutcome monotonicity_partial_trial(std::uint64_t s,
                                        const VerifyDims& dims, double) {
    const LuedersMeasurement pi_l = comp_lueders(dims.d_a, dims.d_b);
    const BipartiteState rho =
        random_bipartite(dims.d_a, dims.d_b, derive_seed(s, 1));
    const KrausChannel lam =
        random_partial_incoherent_channel(dims.d_a, dims.d_b, derive_seed(s, 2));
    TrialOutcome t;
    t.margin = partial_coherence_skew(apply(lam, rho), pi_l).value -
               partial_coherence_skew(rho, pi_l).value;
    t.instances.emplace_back("rho", rho.matrix());
    record_channel(t.instances, lam);
    return t;
}

TrialOutcome convexity_trial(std::uint64_t s, const VerifyDims& dims, double) {
    std::mt19937_64 gen(derive_seed(s, 0));
    std::uniform_real_distribution<double> mix(0.05, 0.95);
    const double lam = mix(gen);
    // C_I^a on a bipartite pair
    const BipartiteState r1 = random_bipartite(dims.d_a, dims.d_b, derive_seed(s, 1));
    const BipartiteState r2 = random_bipartite(dims.d_a, dims.d_b, derive_seed(s, 2));
    const LuedersMeasurement pi_l = comp_lueders(dims.d_a, dims.d_b);
    const BipartiteState mixed(
        density_from_matrix(lam * r1.matrix() + (1.0 - lam) * r2.matrix()),
        dims.d_a, dims.d_b);
    const double m1 = partial_coherence_skew(mixed, pi_l).value -
                      lam * partial_coherence_skew(r1, pi_l).value -
                      (1.0 - lam) * partial_coherence_skew(r2, pi_l).value;
    // C_F on a single-system pair of the same total dimension
    const Eigen::Index n = dims.d_a * dims.d_b;
    const DensityMatrix s1 = random_mixed_induced(n, n, derive_seed(s, 3));
    const DensityMatrix s2 = random_mixed_induced(n, n, derive_seed(s, 4));
    const DensityMatrix smix = density_from_matrix(
        lam * s1.matrix() + (1.0 - lam) * s2.matrix());
    const VonNeumannMeasurement basis = computational_basis(n);
    const double m2 = coherence_qfi(smix, basis).value -
                      lam * coherence_qfi(s1, basis).value -
                      (1.0 - lam) * coherence_qfi(s2, basis).value;
    TrialOutcome t;
    t.margin = std::max(m1, m2);
    t.instances.emplace_back("rho_1", r1.matrix());
    t.instances.emplace_back("rho_2", r2.matrix());
    return t;
}

TrialOutcome skew_qfi_sandwich_trial(std::uint64_t s, const VerifyDims& dims,
                                     double) {
    const Eigen::Index n = dims.d_a * dims.d_b;
    const DensityMatrix sigma = random_mixed_induced(n, n, derive_seed(s, 1));
    const ComplexMatrix k = random_hermitian(n, derive_seed(s, 2));
    const double i_val = skew_information(sigma, k);
    const double f_val = quantum_fisher_information(sigma, k);
    TrialOutcome t;
    t.margin = std::max(i_val - f_val, f_val - 2.0 * i_val);
    t.instances.emplace_back("sigma", sigma.matrix());
    t.instances.emplace_back("observable", k);
    return t;
}

// rho_ab flagged by |i><i| on a c-ancilla attached to the measured party:
// output is ordered (ac):(b), flat index (a*d_c + c)*d_b + b.
ComplexMatrix flag_measured_party(const ComplexMatrix& rho_ab, Eigen::Index d_a,
                                  Eigen::Index d_b, Eigen::Index d_c,
                                  Eigen::Index flag) {
    const Eigen::Index n = d_a * d_c * d_b;
    ComplexMatrix out = ComplexMatrix::Zero(n, n);
    for (Eigen::Index a = 0; a < d_a; ++a)
        for (Eigen::Index b = 0; b < d_b; ++b)
            for (Eigen::Index a2 = 0; a2 < d_a; ++a2)
                for (Eigen::Index b2 = 0; b2 < d_b; ++b2)
                    out((a * d_c + flag) * d_b + b,
                        (a2 * d_c + flag) * d_b + b2) =
                        rho_ab(a * d_b + b, a2 * d_b + b2);
    return out;
}

TrialOutcome eq5_flag_trial(std::uint64_t s, const VerifyDims& dims,
                            double tol) {
    const Eigen::Index d_a = dims.d_a;
    const Eigen::Index d_b = dims.d_b;
    const Eigen::Index d_c = dims.d_c.value_or(2);
    std::mt19937_64 gen(derive_seed(s, 0));
    const std::vector<double> p = random_probabilities(d_c, gen);

    std::vector<BipartiteState> components;
    std::vector<ComplexMatrix> argmins;
    double rhs = 0.0;
    OptimizerConfig ocfg = suite_optimizer(s);
    for (Eigen::Index i = 0; i < d_c; ++i) {
        components.push_back(random_bipartite(d_a, d_b, derive_seed(s, 10 + i)));
        const DiscordResult r = geometric_discord(components.back(), ocfg);
        rhs += p[static_cast<std::size_t>(i)] * r.value;
        argmins.push_back(r.argmin_basis.basis());
    }
    // glued measurement candidates: per-component optimal a-basis on the
    // matching c-flag (and each component basis extended uniformly)
    ComplexMatrix glued(d_a * d_c, d_a * d_c);
    for (Eigen::Index i = 0; i < d_c; ++i) {
        Eigen::VectorXcd e = Eigen::VectorXcd::Zero(d_c);
        e[i] = 1.0;
        for (Eigen::Index j = 0; j < d_a; ++j)
            glued.col(i * d_a + j) = kron(argmins[static_cast<std::size_t>(i)]
                                              .col(j)
                                              .eval(),
                                          e.eval());
    }
    OptimizerConfig flag_cfg = ocfg;
    flag_cfg.seed_bases.push_back(glued);
    for (const auto& a : argmins)
        flag_cfg.seed_bases.push_back(
            kron(a, ComplexMatrix::Identity(d_c, d_c)));

    double mid = 0.0;
    ComplexMatrix sigma =
        ComplexMatrix::Zero(d_a * d_c * d_b, d_a * d_c * d_b);
    for (Eigen::Index i = 0; i < d_c; ++i) {
        const ComplexMatrix flagged =
            flag_measured_party(components[static_cast<std::size_t>(i)].matrix(),
                                d_a, d_b, d_c, i);
        const BipartiteState flagged_state(density_from_matrix(flagged),
                                           d_a * d_c, d_b);
        mid += p[static_cast<std::size_t>(i)] *
               geometric_discord(flagged_state, flag_cfg).value;
        sigma += p[static_cast<std::size_t>(i)] * flagged;
    }
    const BipartiteState sigma_state(density_from_matrix(sigma), d_a * d_c,
                                     d_b);
    const double lhs = geometric_discord(sigma_state, flag_cfg).value;

    const double eq_allowance = std::max(kEq5EqualityTol, tol);
    const double eq_excess = std::abs(lhs - mid);
    const double ineq_excess = rhs - mid;
    TrialOutcome t;
    t.margin = std::max(eq_excess - (eq_allowance - tol), ineq_excess);
    for (Eigen::Index i = 0; i < d_c; ++i) {
        std::ostringstream os;
        os << "rho_" << i;
        t.instances.emplace_back(os.str(),
                                 components[static_cast<std::size_t>(i)].matrix());
    }
    return t;
}

KrausChannel random_damping_step(Eigen::Index d, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_int_distribution<Eigen::Index> pick(0, d - 1);
    std::uniform_real_distribution<double> unif(0.05, 0.95);
    const Eigen::Index src = pick(gen);
    Eigen::Index dst = pick(gen);
    if (dst == src) dst = (dst + 1) % d;
    const double gamma = unif(gen);
    ComplexMatrix k0 = ComplexMatrix::Identity(d, d);
    k0(src, src) = std::sqrt(1.0 - gamma);
    ComplexMatrix k1 = ComplexMatrix::Zero(d, d);
    k1(dst, src) = std::sqrt(gamma);
    return channel_from_kraus({std::move(k0), std::move(k1)});
}

TrialOutcome cf_monotonicity_search_trial(std::uint64_t s,
                                          const VerifyDims& dims, double) {
    const Eigen::Index n = dims.d_a * dims.d_b;
    const DensityMatrix rho = random_mixed_induced(n, n, derive_seed(s, 1));
    std::mt19937_64 gen(derive_seed(s, 2));
    std::uniform_int_distribution<int> n_steps(1, 3);
    std::uniform_int_distribution<int> kind(0, 1);
    std::uniform_int_distribution<int> nk(1, 3);
    KrausChannel phi = identity_channel(n);
    const int steps = n_steps(gen);
    for (int step = 0; step < steps; ++step) {
        const std::uint64_t ss = derive_seed(s, 50 + step);
        const KrausChannel next = (kind(gen) == 0)
                                      ? random_incoherent_channel(n, nk(gen), ss)
                                      : random_damping_step(n, ss);
        phi = compose(next, phi);
    }
    const VonNeumannMeasurement basis = computational_basis(n);
    TrialOutcome t;
    t.margin = coherence_qfi(apply(phi, rho), basis).value -
               coherence_qfi(rho, basis).value;
    t.instances.emplace_back("rho", rho.matrix());
    record_channel(t.instances, phi);
    return t;
}

TrialOutcome theorem3_consistency_trial(std::uint64_t s,
                                        const VerifyDims& dims, double tol) {
    const LuedersMeasurement pi_l = comp_lueders(dims.d_a, dims.d_b);
    const BipartiteState rho =
        random_bipartite(dims.d_a, dims.d_b, derive_seed(s, 1));
    const KrausChannel xi =
        random_partial_incoherent_channel(dims.d_a, dims.d_b, derive_seed(s, 2));
    OptimizerConfig ocfg = suite_optimizer(s);
    const double before = weak_partial_coherence_lb(rho, pi_l, ocfg).value;
    const double after =
        weak_partial_coherence_lb(apply(xi, rho), pi_l, ocfg).value;
    TrialOutcome t;
    t.margin = after - before;
    t.flag = (t.margin > tol) ? "flagged" : "";
    t.instances.emplace_back("rho", rho.matrix());
    record_channel(t.instances, xi);
    return t;
}

const std::map<std::string, SuiteSpec>& registry() {
    static const std::map<std::string, SuiteSpec> suites = {
        {"theorem1",
         {theorem1_trial, true, 1e-7,
          "checks Q_G(L(rho)) <= C_I^a(rho | computational Lueders); rho: "
          "induced-measure random states (k = d_a*d_b); channels: permutation "
          "(x) conditional-CPTP block sampler, a strict subfamily of O_P^a"}},
        {"theorem2_noncreation",
         {theorem2_noncreation_trial, true, 1e-6,
          "partial incoherent inputs (dephased random states) through random "
          "partial incoherent channels must keep Q_G at zero; sampler covers "
          "the permutation (x) conditional-CPTP block subfamily only"}},
        {"theorem2_creation",
         {theorem2_creation_trial, false, 1e-6,
          "search for a discord-creating partial incoherent operation on "
          "partial coherent inputs; family: identity, generalized CNOT, 8 "
          "random block-form channels; failures are INCONCLUSIVE (the "
          "theorem guarantees existence, not membership in this family)"}},
        {"eq4_additivity",
         {eq4_additivity_trial, true, 1e-9,
          "checks C_I^a(rho_a (x) rho_b) = C_I(rho_a) on product states; "
          "per-trial dims drawn uniformly from 2..d_a x 2..d_b"}},
        {"local_unitary_invariance",
         {local_unitary_invariance_trial, true, 1e-6,
          "checks Q_G invariance under Haar local unitaries U_a (x) U_b; "
          "margin compares two independent 24-start optimizer runs"}},
        {"zero_discord_localization",
         {zero_discord_localization_trial, true, 1e-9,
          "classical-quantum states with a Haar-random a-eigenbasis, rotated "
          "by the local unitary mapping that eigenbasis to the computational "
          "one, must be partial incoherent (C_I^a = 0)"}},
        {"monotonicity_partial",
         {monotonicity_partial_trial, true, 1e-7,
          "P2a: C_I^a nonincreasing under the block-form partial incoherent "
          "sampler (strict subfamily of O_P^a); closed-form both sides"}},
        {"convexity",
         {convexity_trial, true, 1e-9,
          "P3/F2 mixing inequality for C_I^a (bipartite pair) and C_F "
          "(single-system pair of the same total dimension)"}},
        {"skew_qfi_sandwich",
         {skew_qfi_sandwich_trial, true, 1e-9,
          "I(sigma,K) <= F(sigma,K) <= 2 I(sigma,K) on induced-measure "
          "states and Gaussian Hermitian observables"}},
        {"eq5_flag",
         {eq5_flag_trial, true, 1e-6,
          "flag condition for the skew-info discord with the flag ancilla c "
          "attached to the measured party (split (ac):b): "
          "Q(sum p_i rho_i (x) |i><i|^c) = sum p_i Q(rho_i (x) |i><i|^c) >= "
          "sum p_i Q(rho_i); margin = max(|LHS-MID| - (1e-5 - tol), "
          "RHS - MID), so a violation means the equality broke 1e-5 or the "
          "inequality broke tol; both sides involve independent "
          "minimizations"}},
        {"cf_monotonicity_search",
         {cf_monotonicity_search_trial, false, 1e-6,
          "hunts for C_F(Phi(rho)) > C_F(rho) over compositions of "
          "permutation-phase mixtures and single-target damping steps "
          "(all incoherent); any find is a counterexample report, never a "
          "failure"}},
        {"theorem3_consistency",
         {theorem3_consistency_trial, false, 1e-3,
          "weak_partial_coherence_lb(Xi(rho)) <= weak_partial_coherence_lb"
          "(rho) + slack; both sides are heuristic lower bounds, so excesses "
          "within the slack are flagged as optimizer shortfall, not failed"}},
    };
    return suites;
}

const SuiteSpec& find_suite(const std::string& name) {
    const auto& suites = registry();
    const auto it = suites.find(name);
    if (it == suites.end())
        throw ValidationError("run_suite: unknown suite '" + name + "'");
    return it->second;
}

}  // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> names;
    for (const auto& [name, spec] : registry()) names.push_back(name);
    return names;
}

bool is_proved_fact_suite(const std::string& name) {
    return find_suite(name).counts_violations;
}

double default_tolerance(const std::string& name) {
    return find_suite(name).default_tol;
}

SuiteReport run_suite(const std::string& name, int trials,
                      const VerifyDims& dims, std::uint64_t seed, double tol) {
    const SuiteSpec& spec = find_suite(name);
    if (trials < 1) throw ValidationError("run_suite: trials must be >= 1");
    if (dims.d_a < 1 || dims.d_b < 1 ||
        (dims.d_c.has_value() && *dims.d_c < 1))
        throw ValidationError("run_suite: dims must be >= 1");

    SuiteReport report;
    report.suite = name;
    report.trials = trials;
    report.seed = seed;
    report.dims = dims;
    report.tolerance = tol;
    report.max_violation_margin = -std::numeric_limits<double>::infinity();
    report.min_slack = std::numeric_limits<double>::infinity();

    int created = 0, inconclusive = 0, flagged = 0;
    for (int trial = 0; trial < trials; ++trial) {
        const std::uint64_t trial_seed =
            derive_seed(seed, static_cast<std::uint64_t>(trial));
        TrialOutcome t = spec.trial(trial_seed, dims, tol);
        report.max_violation_margin =
            std::max(report.max_violation_margin, t.margin);
        report.min_slack = std::min(report.min_slack, tol - t.margin);
        if (t.flag == "created") ++created;
        if (t.flag == "inconclusive") ++inconclusive;
        if (t.flag == "flagged") ++flagged;
        if (t.margin > tol) {
            if (spec.counts_violations) ++report.violations;
            if (report.counterexamples.size() < 10) {
                CounterexampleRecord rec;
                rec.trial_index = static_cast<std::uint64_t>(trial);
                rec.trial_seed = trial_seed;
                rec.margin = t.margin;
                rec.description = name + " trial " + std::to_string(trial);
                rec.instances = std::move(t.instances);
                report.counterexamples.push_back(std::move(rec));
            }
        }
    }
    std::ostringstream notes;
    notes << spec.notes;
    if (name == "theorem2_creation")
        notes << "; created=" << created << " inconclusive=" << inconclusive;
    if (name == "theorem3_consistency") notes << "; flagged=" << flagged;
    report.notes = notes.str();
    return report;
}

double replay_counterexample(const std::string& name, const VerifyDims& dims,
                             double tol, std::uint64_t trial_seed) {
    return find_suite(name).trial(trial_seed, dims, tol).margin;
}

}  // namespace qcoh
