#include "qcoh/serial.hpp"

#include <fstream>
#include <sstream>

namespace qcoh {

Json matrix_to_json(const ComplexMatrix& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty())
        throw ValidationError("matrix_from_json: expected a non-empty array of rows");
    const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
    const Eigen::Index cols = static_cast<Eigen::Index>(j.at(0).size());
    ComplexMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const Json& row = j.at(static_cast<std::size_t>(i));
        if (static_cast<Eigen::Index>(row.size()) != cols)
            throw ValidationError("matrix_from_json: ragged rows");
        for (Eigen::Index c = 0; c < cols; ++c) {
            const Json& entry = row.at(static_cast<std::size_t>(c));
            if (!entry.is_array() || entry.size() != 2)
                throw ValidationError(
                    "matrix_from_json: entries must be [re, im] pairs");
            m(i, c) = Complex(entry.at(0).get<double>(),
                              entry.at(1).get<double>());
        }
    }
    return m;
}

BipartiteState LoadedState::as_bipartite() const {
    if (!split)
        throw ValidationError("state file has no bipartite split (dims = [d])");
    return BipartiteState(state, split->first, split->second);
}

Json state_to_json(const DensityMatrix& rho) {
    Json j;
    j["dims"] = Json::array({rho.dim()});
    j["matrix"] = matrix_to_json(rho.matrix());
    return j;
}

Json state_to_json(const BipartiteState& rho) {
    Json j;
    j["dims"] = Json::array({rho.d_a(), rho.d_b()});
    j["matrix"] = matrix_to_json(rho.matrix());
    return j;
}

LoadedState state_from_json(const Json& j) {
    if (!j.contains("dims") || !j.contains("matrix"))
        throw ValidationError("state file needs 'dims' and 'matrix' fields");
    const Json& dims = j.at("dims");
    if (!dims.is_array() || dims.empty() || dims.size() > 2)
        throw ValidationError("state file 'dims' must have length 1 or 2");
    const ComplexMatrix m = matrix_from_json(j.at("matrix"));
    if (dims.size() == 1) {
        const auto d = dims.at(0).get<Eigen::Index>();
        if (m.rows() != d)
            throw ValidationError("state file matrix does not match dims");
        return {density_from_matrix(m), std::nullopt};
    }
    const auto d_a = dims.at(0).get<Eigen::Index>();
    const auto d_b = dims.at(1).get<Eigen::Index>();
    if (m.rows() != d_a * d_b)
        throw ValidationError("state file matrix does not match dims product");
    return {density_from_matrix(m), std::make_pair(d_a, d_b)};
}

Json channel_to_json(const KrausChannel& ch) {
    Json j;
    j["dim_in"] = ch.dim_in();
    j["dim_out"] = ch.dim_out();
    Json ops = Json::array();
    for (const auto& k : ch.kraus()) ops.push_back(matrix_to_json(k));
    j["kraus"] = std::move(ops);
    return j;
}

KrausChannel channel_from_json(const Json& j) {
    if (!j.contains("dim_in") || !j.contains("dim_out") || !j.contains("kraus"))
        throw ValidationError(
            "channel file needs 'dim_in', 'dim_out' and 'kraus' fields");
    const auto din = j.at("dim_in").get<Eigen::Index>();
    const auto dout = j.at("dim_out").get<Eigen::Index>();
    std::vector<ComplexMatrix> ops;
    for (const Json& op : j.at("kraus")) {
        ops.push_back(matrix_from_json(op));
        if (ops.back().rows() != dout || ops.back().cols() != din)
            throw ValidationError("channel file Kraus dims do not match header");
    }
    return channel_from_kraus(std::move(ops));
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ValidationError("cannot open file: " + path);
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw ValidationError("malformed JSON in " + path + ": " + e.what());
    }
}

LoadedState load_state_file(const std::string& path) {
    return state_from_json(read_json_file(path));
}

KrausChannel load_channel_file(const std::string& path) {
    return channel_from_json(read_json_file(path));
}

Json report_to_json(const SuiteReport& report) {
    Json j;
    j["suite"] = report.suite;
    j["trials"] = report.trials;
    j["violations"] = report.violations;
    j["max_violation_margin"] = report.max_violation_margin;
    j["min_slack"] = report.min_slack;
    j["seed"] = report.seed;
    Json dims;
    dims["d_a"] = report.dims.d_a;
    dims["d_b"] = report.dims.d_b;
    if (report.dims.d_c) dims["d_c"] = *report.dims.d_c;
    j["dims"] = std::move(dims);
    j["tolerance"] = report.tolerance;
    j["notes"] = report.notes;
    Json cex = Json::array();
    for (const auto& rec : report.counterexamples) {
        Json r;
        r["trial_index"] = rec.trial_index;
        r["trial_seed"] = rec.trial_seed;
        r["margin"] = rec.margin;
        r["description"] = rec.description;
        Json instances = Json::array();
        for (const auto& [label, m] : rec.instances) {
            Json inst;
            inst["label"] = label;
            inst["matrix"] = matrix_to_json(m);
            instances.push_back(std::move(inst));
        }
        r["instances"] = std::move(instances);
        cex.push_back(std::move(r));
    }
    j["counterexamples"] = std::move(cex);
    return j;
}

Json discord_to_json(const DiscordResult& result) {
    Json j;
    j["value"] = result.value;
    j["argmin_basis"] = matrix_to_json(result.argmin_basis.basis());
    j["starts_converged"] = result.starts_converged;
    if (result.oracle_value) j["oracle_value"] = *result.oracle_value;
    return j;
}

Json measures_to_json(const std::vector<MeasureValue>& rows) {
    Json j = Json::array();
    for (const auto& r : rows) {
        Json row;
        row["measure"] = r.measure;
        row["value"] = r.value;
        row["basis_tag"] = r.basis;
        j.push_back(std::move(row));
    }
    return j;
}

std::string measures_to_csv(const std::vector<MeasureValue>& rows,
                            const std::string& dims) {
    std::ostringstream os;
    os << "measure,value,basis_tag,dims,seed\n";
    for (const auto& r : rows) {
        os << r.measure << "," << Json(r.value).dump() << ",\"" << r.basis
           << "\",\"" << dims << "\",\n";
    }
    return os.str();
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out)
        throw ValidationError("cannot write file: " + path);
    out << dump_json(j);
    if (!out)
        throw ValidationError("write failed: " + path);
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace qcoh
