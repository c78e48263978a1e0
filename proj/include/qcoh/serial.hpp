// JSON schemas for states, channels and reports. Complex entries are
// explicit [re, im] pairs; matrices are row-major in the a-major index
// convention (|i>^a |j>^b at flat index i*d_b + j). Doubles use
// shortest-round-trip serialization, so write -> read -> write is
// byte-identical.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qcoh/channels.hpp"
#include "qcoh/optim.hpp"
#include "qcoh/verify.hpp"

namespace qcoh {

using Json = nlohmann::ordered_json;

Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

/// A state file carries either a single system (dims = [d]) or a bipartite
/// split (dims = [d_a, d_b]).
struct LoadedState {
    DensityMatrix state;
    std::optional<std::pair<Eigen::Index, Eigen::Index>> split;

    bool bipartite() const { return split.has_value(); }
    BipartiteState as_bipartite() const;
};

Json state_to_json(const DensityMatrix& rho);
Json state_to_json(const BipartiteState& rho);
LoadedState state_from_json(const Json& j);
LoadedState load_state_file(const std::string& path);

Json channel_to_json(const KrausChannel& ch);
KrausChannel channel_from_json(const Json& j);
KrausChannel load_channel_file(const std::string& path);

Json report_to_json(const SuiteReport& report);
Json discord_to_json(const DiscordResult& result);
Json measures_to_json(const std::vector<MeasureValue>& rows);
std::string measures_to_csv(const std::vector<MeasureValue>& rows,
                            const std::string& dims);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);
std::string dump_json(const Json& j);  // pretty, trailing newline

}  // namespace qcoh
