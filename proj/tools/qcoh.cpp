// qcoh: coherence, partial coherence and geometric discord from the command
// line. Exit codes: 0 success, 1 invalid input, 2 property violation,
// 3 numerical failure.
#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "qcoh/serial.hpp"

namespace {

using namespace qcoh;

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 1;
constexpr int kExitPropertyViolation = 2;
constexpr int kExitNumericalFailure = 3;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw ValidationError("cannot write file: " + out_path);
    out << text;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> items;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) items.push_back(item);
    return items;
}

VonNeumannMeasurement resolve_basis(const std::string& spec, Eigen::Index d) {
    if (spec == "computational") return computational_basis(d);
    if (spec.rfind("angles:", 0) == 0) {
        if (d != 2)
            throw ValidationError("--basis angles:... requires a qubit party");
        const auto parts = split_csv(spec.substr(7));
        if (parts.size() != 2)
            throw ValidationError("--basis angles: expects 'angles:theta,phi'");
        return qubit_basis(std::stod(parts[0]), std::stod(parts[1]));
    }
    // otherwise a JSON file holding one unitary matrix
    const ComplexMatrix u = matrix_from_json(read_json_file(spec));
    if (u.rows() != d)
        throw ValidationError("basis file dimension does not match the state");
    return basis_from_unitary(u);
}

std::string dims_string(const LoadedState& st) {
    std::ostringstream os;
    if (st.bipartite())
        os << st.split->first << "x" << st.split->second;
    else
        os << st.state.dim();
    return os.str();
}

KrausChannel generalized_cnot(Eigen::Index d_a, Eigen::Index d_b) {
    ComplexMatrix step = ComplexMatrix::Zero(d_b, d_b);
    for (Eigen::Index j = 0; j < d_b; ++j) step((j + 1) % d_b, j) = 1.0;
    std::vector<ComplexMatrix> shifts;
    ComplexMatrix v = ComplexMatrix::Identity(d_b, d_b);
    for (Eigen::Index i = 0; i < d_a; ++i) {
        shifts.push_back(v);
        v = (v * step).eval();
    }
    return controlled_unitary(computational_basis(d_a), shifts);
}

struct CommonArgs {
    std::string state_path;
    std::string out_path;
    std::uint64_t seed = 0;
    int starts = 24;
    double tol = 1e-9;
};

int cmd_measure(const std::string& state_path, const std::string& basis_spec,
                const std::string& measures_csv, const std::string& format,
                const std::string& out_path) {
    const LoadedState st = load_state_file(state_path);
    std::vector<std::string> wanted;
    if (!measures_csv.empty()) {
        wanted = split_csv(measures_csv);
    } else if (st.bipartite()) {
        wanted = {"partial_skew", "partial_qfi"};
    } else {
        wanted = {"l1", "rel_entropy", "skew", "qfi"};
    }
    std::vector<MeasureValue> rows;
    for (const std::string& name : wanted) {
        if (name == "partial_skew" || name == "partial_qfi") {
            if (!st.bipartite())
                throw ValidationError("measure '" + name +
                                      "' needs a bipartite state (dims [d_a,d_b])");
            const BipartiteState rho = st.as_bipartite();
            const LuedersMeasurement pi_l =
                lueders_extend(resolve_basis(basis_spec, rho.d_a()), rho.d_b());
            rows.push_back(name == "partial_skew"
                               ? partial_coherence_skew(rho, pi_l)
                               : partial_coherence_qfi(rho, pi_l));
        } else {
            if (st.bipartite())
                throw ValidationError("measure '" + name +
                                      "' applies to single systems (dims [d])");
            const VonNeumannMeasurement basis =
                resolve_basis(basis_spec, st.state.dim());
            if (name == "l1")
                rows.push_back(coherence_l1(st.state, basis));
            else if (name == "rel_entropy")
                rows.push_back(coherence_rel_entropy(st.state, basis));
            else if (name == "skew")
                rows.push_back(coherence_skew(st.state, basis));
            else if (name == "qfi")
                rows.push_back(coherence_qfi(st.state, basis));
            else
                throw ValidationError("unknown measure '" + name + "'");
        }
    }
    if (format == "csv")
        emit(measures_to_csv(rows, dims_string(st)), out_path);
    else
        emit(dump_json(measures_to_json(rows)), out_path);
    return kExitOk;
}

int cmd_discord(const CommonArgs& args) {
    const LoadedState st = load_state_file(args.state_path);
    if (!st.bipartite())
        throw ValidationError("discord needs a bipartite state (dims [d_a,d_b])");
    OptimizerConfig cfg;
    cfg.starts = args.starts;
    cfg.seed = args.seed;
    cfg.value_tolerance = args.tol;
    const DiscordResult res = geometric_discord(st.as_bipartite(), cfg);
    emit(dump_json(discord_to_json(res)), args.out_path);
    return kExitOk;
}

int cmd_convert(const CommonArgs& args, const std::string& channel_spec) {
    const LoadedState st = load_state_file(args.state_path);
    if (!st.bipartite())
        throw ValidationError("convert needs a bipartite state (dims [d_a,d_b])");
    const BipartiteState rho = st.as_bipartite();
    const KrausChannel ch = (channel_spec == "cnot")
                                ? generalized_cnot(rho.d_a(), rho.d_b())
                                : load_channel_file(channel_spec);
    if (ch.dim_in() != rho.dim() || ch.dim_out() != rho.dim())
        throw ValidationError("channel dimensions do not match the state");
    const LuedersMeasurement pi_l =
        lueders_extend(computational_basis(rho.d_a()), rho.d_b());
    const double residual = partial_incoherence_residual(ch, pi_l);
    if (residual > 1e-8) {
        std::ostringstream os;
        os << "channel is not partial incoherent w.r.t. the computational "
              "Lueders measurement (block residual "
           << residual << ")";
        throw ValidationError(os.str());
    }
    OptimizerConfig cfg;
    cfg.starts = args.starts;
    cfg.seed = args.seed;
    const BipartiteState out = apply(ch, rho);
    Json j;
    j["input"]["C_I_a"] = partial_coherence_skew(rho, pi_l).value;
    j["input"]["Q_G"] = geometric_discord(rho, cfg).value;
    j["output"]["C_I_a"] = partial_coherence_skew(out, pi_l).value;
    j["output"]["Q_G"] = geometric_discord(out, cfg).value;
    const bool ok = j["output"]["Q_G"].get<double>() <=
                    j["input"]["C_I_a"].get<double>() + 1e-7;
    j["theorem1_satisfied"] = ok;
    emit(dump_json(j), args.out_path);
    return ok ? kExitOk : kExitPropertyViolation;
}

int cmd_verify(const std::string& suite, int trials, const std::string& dims_csv,
               std::uint64_t seed, std::optional<double> tol,
               const std::string& out_path) {
    VerifyDims dims;
    const auto parts = split_csv(dims_csv);
    if (parts.size() < 2 || parts.size() > 3)
        throw ValidationError("--dims expects 'd_a,d_b' or 'd_a,d_b,d_c'");
    dims.d_a = std::stol(parts[0]);
    dims.d_b = std::stol(parts[1]);
    if (parts.size() == 3) dims.d_c = std::stol(parts[2]);

    std::vector<std::string> names;
    if (suite == "all")
        names = suite_names();
    else
        names.push_back(suite);

    bool violated = false;
    Json out = Json::array();
    for (const std::string& name : names) {
        const double t = tol.value_or(default_tolerance(name));
        const SuiteReport report = run_suite(name, trials, dims, seed, t);
        if (is_proved_fact_suite(name) && report.violations > 0)
            violated = true;
        out.push_back(report_to_json(report));
    }
    emit(dump_json(out.size() == 1 ? out.at(0) : out), out_path);
    return violated ? kExitPropertyViolation : kExitOk;
}

int cmd_random(const std::string& kind, const std::string& dims_csv,
               std::uint64_t seed, int n_kraus, const std::string& out_path) {
    const auto parts = split_csv(dims_csv);
    if (parts.empty() || parts.size() > 2)
        throw ValidationError("--dims expects 'd' or 'd_a,d_b'");
    const Eigen::Index d0 = std::stol(parts[0]);
    const std::optional<Eigen::Index> d1 =
        parts.size() == 2 ? std::optional<Eigen::Index>(std::stol(parts[1]))
                          : std::nullopt;
    Json j;
    if (kind == "pure" || kind == "mixed") {
        const Eigen::Index total = d0 * d1.value_or(1);
        const DensityMatrix rho = (kind == "pure")
                                      ? random_haar_pure(total, seed)
                                      : random_mixed_induced(total, total, seed);
        j = d1 ? state_to_json(BipartiteState(rho, d0, *d1)) : state_to_json(rho);
    } else if (kind == "incoherent-channel") {
        if (d1) throw ValidationError("incoherent-channel takes a single dim");
        j = channel_to_json(random_incoherent_channel(d0, n_kraus, seed));
    } else if (kind == "partial-incoherent-channel") {
        if (!d1)
            throw ValidationError("partial-incoherent-channel needs --dims d_a,d_b");
        j = channel_to_json(random_partial_incoherent_channel(d0, *d1, seed));
    } else {
        throw ValidationError("unknown --kind '" + kind + "'");
    }
    write_json_file(out_path, j);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "qcoh: coherence, partial coherence and geometric quantum discord "
        "functionals on finite-dimensional states.\n"
        "State and channel files are JSON with [re, im] entry pairs, "
        "row-major over the a-major product basis: |i>^a |j>^b sits at flat "
        "index i*d_b + j."};
    app.require_subcommand(1);

    // measure
    std::string m_state, m_basis = "computational", m_measures,
                m_format = "json", m_out;
    auto* measure = app.add_subcommand(
        "measure", "Coherence measures of a state w.r.t. a reference basis");
    measure->add_option("--state", m_state, "state file")->required();
    measure->add_option("--basis", m_basis,
                        "computational | angles:theta,phi | <unitary JSON file>");
    measure->add_option(
        "--measures", m_measures,
        "csv list from l1,rel_entropy,skew,qfi,partial_skew,partial_qfi "
        "(default: all applicable)");
    measure->add_option("--format", m_format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    measure->add_option("--out", m_out, "write report here instead of stdout");

    // discord
    CommonArgs d_args;
    auto* discord = app.add_subcommand(
        "discord", "Geometric quantum discord via measurement minimization");
    discord->add_option("--state", d_args.state_path, "bipartite state file")
        ->required();
    discord->add_option("--starts", d_args.starts, "optimizer restarts");
    discord->add_option("--seed", d_args.seed, "optimizer seed");
    discord->add_option("--tol", d_args.tol, "optimizer value tolerance");
    discord->add_option("--out", d_args.out_path, "output path");

    // convert
    CommonArgs c_args;
    std::string c_channel;
    auto* convert = app.add_subcommand(
        "convert",
        "Push a state through a partial incoherent channel and compare "
        "partial coherence with the generated discord");
    convert->add_option("--state", c_args.state_path, "bipartite state file")
        ->required();
    convert->add_option("--channel", c_channel, "channel file or 'cnot'")
        ->required();
    convert->add_option("--starts", c_args.starts, "optimizer restarts");
    convert->add_option("--seed", c_args.seed, "optimizer seed");
    convert->add_option("--out", c_args.out_path, "output path");

    // verify
    std::string v_suite, v_dims = "2,2", v_out;
    int v_trials = 200;
    std::uint64_t v_seed = 0;
    double v_tol = -1.0;
    auto* verify = app.add_subcommand(
        "verify", "Randomized property suites for the theorems and axioms");
    verify
        ->add_option("--suite", v_suite,
                     "suite name or 'all' (see docs for the list)")
        ->required();
    verify->add_option("--trials", v_trials, "trials per suite");
    verify->add_option("--dims", v_dims, "d_a,d_b[,d_c]");
    verify->add_option("--seed", v_seed, "suite seed");
    verify->add_option("--tol", v_tol,
                       "violation tolerance (default: per-suite)");
    verify->add_option("--out", v_out, "output path");

    // random
    std::string r_kind, r_dims, r_out;
    std::uint64_t r_seed = 0;
    int r_kraus = 2;
    auto* random = app.add_subcommand(
        "random", "Write a random state or channel fixture");
    random
        ->add_option("--kind", r_kind,
                     "pure | mixed | incoherent-channel | "
                     "partial-incoherent-channel")
        ->required();
    random->add_option("--dims", r_dims, "d or d_a,d_b")->required();
    random->add_option("--seed", r_seed, "generator seed");
    random->add_option("--kraus", r_kraus,
                       "Kraus operators for incoherent-channel");
    random->add_option("--out", r_out, "output file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalidInput;
    }

    try {
        if (measure->parsed())
            return cmd_measure(m_state, m_basis, m_measures, m_format, m_out);
        if (discord->parsed()) return cmd_discord(d_args);
        if (convert->parsed()) return cmd_convert(c_args, c_channel);
        if (verify->parsed())
            return cmd_verify(v_suite, v_trials, v_dims, v_seed,
                              v_tol > 0.0 ? std::optional<double>(v_tol)
                                          : std::nullopt,
                              v_out);
        if (random->parsed())
            return cmd_random(r_kind, r_dims, r_seed, r_kraus, r_out);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumericalFailure;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    return kExitInvalidInput;
}
