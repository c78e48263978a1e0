// Minimization of the geometric discord over local measurements, and the
// heuristic channel-family suprema behind the weak/strong coherence
// measures. Channel suprema are reported as explicit lower bounds with the
// search family named in the result; they are never claimed exact.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcoh/channels.hpp"
#include "qcoh/measures.hpp"

namespace qcoh {

struct OptimizerConfig {
    int starts = 24;
    int max_iterations = 500;
    double value_tolerance = 1e-9;
    double parameter_tolerance = 1e-8;
    std::uint64_t seed = 0;
    /// Extra deterministic starts (unitary basis matrices), tried after the
    /// computational basis and before the random starts.
    std::vector<ComplexMatrix> seed_bases;
};

struct DiscordResult {
    double value;
    VonNeumannMeasurement argmin_basis;
    int starts_converged;
    std::optional<double> oracle_value;  // set when d_a = 2
};

/// Q_G^a: multi-start local minimization of the summed skew information of
/// the extended projectors over von Neumann measurements on party a. Uses
/// the two-angle chart for d_a = 2 (cross-checked against the qubit oracle)
/// and the exp-map chart otherwise. The first start is always the
/// computational basis; ties are broken by lexicographically lowest chart
/// parameters among the converged starts.
DiscordResult geometric_discord(const BipartiteState& rho,
                                const OptimizerConfig& cfg = {});

/// Closed-form qubit-party discord: 1/2 (1 - lambda_max(W)) with
/// W_uv = Re tr(sqrt(rho) (sigma_u (x) I) sqrt(rho) (sigma_v (x) I)).
/// Only valid for d_a = 2; validate_qubit_oracle gates its use.
double lqu_qubit_oracle(const BipartiteState& rho);

struct OracleValidationReport {
    int trials;
    double max_pair_identity_deviation;  // projector sum vs 1/2 I(rho, n.sigma)
    double max_grid_deviation;           // (theta,phi) grid+polish vs oracle
    bool passed;                         // 1e-10 and 1e-5 respectively
};

/// Brute-force validation gate for lqu_qubit_oracle on random (2, d_b)
/// states; must pass before the oracle value is trusted.
OracleValidationReport validate_qubit_oracle(int trials, std::uint64_t seed);

/// A heuristic lower bound together with the search family that produced it.
struct BoundResult {
    double value;
    std::string family;
};

/// Lower bound on sup over partial incoherent operations of the output
/// discord. Search family: identity, controlled unitaries with locally
/// optimized V_i, and random partial incoherent channels.
BoundResult weak_partial_coherence_lb(const BipartiteState& rho,
                                      const LuedersMeasurement& pi_l,
                                      const OptimizerConfig& cfg = {});

/// weak_partial_coherence_lb of rho_a (x) |0><0|^b with the computational
/// reference basis on party a.
BoundResult weak_coherence_lb(const DensityMatrix& rho_a, Eigen::Index d_b,
                              const OptimizerConfig& cfg = {});

enum class MeasureTag { kSkew, kQfi };

struct StrongCoherenceEstimate {
    /// (d_b, lower bound) per swept ancilla dimension; no extrapolation.
    std::vector<std::pair<Eigen::Index, double>> values;
    /// d_b entries where the bound decreased: optimizer shortfall flags.
    std::vector<Eigen::Index> non_monotone_at;
    std::string family;
};

/// Ancilla-dimension sweep of the weak bound (discord-based for kSkew,
/// QFI-partial-coherence-based for kQfi).
StrongCoherenceEstimate strong_coherence_estimate(
    const DensityMatrix& rho_a, const std::vector<Eigen::Index>& d_b_list,
    const OptimizerConfig& cfg, MeasureTag tag);

/// Lower bound on sup over incoherent operations of C_F(Phi(rho)|Pi):
/// max over {identity} and random incoherent channels.
BoundResult weak_coherence_qfi_lb(const DensityMatrix& rho,
                                  const VonNeumannMeasurement& basis,
                                  const OptimizerConfig& cfg = {});

}  // namespace qcoh
