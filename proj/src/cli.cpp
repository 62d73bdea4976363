#include "chainrad/cli.hpp"

#include "chainrad/chain_model.hpp"
#include "chainrad/csv.hpp"
#include "chainrad/decay.hpp"
#include "chainrad/dense_oracle.hpp"
#include "chainrad/error.hpp"
#include "chainrad/radiation.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

namespace chainrad::cli {

namespace {

using json = nlohmann::json;

class ParseFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

const std::set<std::string> kCommands = {"eigen", "verify", "pattern", "pattern-atom", "decay", "census", "scan"};

const std::set<std::string> kConfigKeys = {"command", "n",       "m",       "g",        "j",         "ka",
                                           "u",       "omega0",  "omega",   "points",   "n-min",     "n-max",
                                           "ka-grid", "ka-min",  "ka-max",  "ka-steps", "dipole-weight",
                                           "out",     "format",  "summary"};

/// Flag values as typed on the command line; unset when absent.
struct Flags {
    std::optional<std::string> config;
    std::optional<int> n, m, j, points, n_min, n_max, ka_steps;
    std::optional<double> ka, u, omega0, omega, ka_min, ka_max;
    std::vector<int> g;
    std::vector<double> ka_grid;
    bool dipole_weight = false;
    std::optional<std::string> out, format, summary;
};

struct RunConfig {
    std::string command;
    ChainConfig chain;
    bool has_n = false;
    std::optional<int> m;
    std::vector<int> g;
    std::optional<int> j;
    int points = 181;
    int n_min = kDefaultCensusMinAtoms;
    int n_max = kDefaultCensusMaxAtoms;
    std::vector<double> ka_grid;
    std::optional<double> ka_min, ka_max;
    std::optional<int> ka_steps;
    bool dipole_weight = false;
    std::string out;
    std::string format;
    std::string summary;
};

// -- configuration ----------------------------------------------------------

template <typename T>
T json_get(const json& doc, const std::string& key) {
    try {
        return doc.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ParseFailure("config key '" + key + "': " + e.what());
    }
}

void apply_config_file(const std::string& path, RunConfig& run) {
    std::ifstream in(path);
    if (!in) throw ParseFailure("cannot open config file '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseFailure("config file '" + path + "' is not valid JSON: " + e.what());
    }
    if (!doc.is_object()) throw ParseFailure("config file must hold a flat JSON object");
    for (const auto& [key, value] : doc.items()) {
        if (!kConfigKeys.contains(key)) throw ParseFailure("unknown config key '" + key + "'");
        if (value.is_object()) throw ParseFailure("config key '" + key + "' must not be nested");
    }

    if (doc.contains("command")) run.command = json_get<std::string>(doc, "command");
    if (doc.contains("n")) {
        run.chain.n_atoms = json_get<int>(doc, "n");
        run.has_n = true;
    }
    if (doc.contains("m")) run.m = json_get<int>(doc, "m");
    if (doc.contains("g")) {
        if (doc["g"].is_array())
            run.g = json_get<std::vector<int>>(doc, "g");
        else
            run.g = {json_get<int>(doc, "g")};
    }
    if (doc.contains("j")) run.j = json_get<int>(doc, "j");
    if (doc.contains("ka")) run.chain.ka = json_get<double>(doc, "ka");
    if (doc.contains("u")) run.chain.mu_dot_a = json_get<double>(doc, "u");
    if (doc.contains("omega0")) run.chain.omega0 = json_get<double>(doc, "omega0");
    if (doc.contains("omega")) run.chain.omega_coupling = json_get<double>(doc, "omega");
    if (doc.contains("points")) run.points = json_get<int>(doc, "points");
    if (doc.contains("n-min")) run.n_min = json_get<int>(doc, "n-min");
    if (doc.contains("n-max")) run.n_max = json_get<int>(doc, "n-max");
    if (doc.contains("ka-grid")) run.ka_grid = json_get<std::vector<double>>(doc, "ka-grid");
    if (doc.contains("ka-min")) run.ka_min = json_get<double>(doc, "ka-min");
    if (doc.contains("ka-max")) run.ka_max = json_get<double>(doc, "ka-max");
    if (doc.contains("ka-steps")) run.ka_steps = json_get<int>(doc, "ka-steps");
    if (doc.contains("dipole-weight")) run.dipole_weight = json_get<bool>(doc, "dipole-weight");
    if (doc.contains("out")) run.out = json_get<std::string>(doc, "out");
    if (doc.contains("format")) run.format = json_get<std::string>(doc, "format");
    if (doc.contains("summary")) run.summary = json_get<std::string>(doc, "summary");
}

void apply_flags(const Flags& flags, RunConfig& run) {
    if (flags.n) {
        run.chain.n_atoms = *flags.n;
        run.has_n = true;
    }
    if (flags.m) run.m = flags.m;
    if (!flags.g.empty()) run.g = flags.g;
    if (flags.j) run.j = flags.j;
    if (flags.ka) run.chain.ka = *flags.ka;
    if (flags.u) run.chain.mu_dot_a = *flags.u;
    if (flags.omega0) run.chain.omega0 = *flags.omega0;
    if (flags.omega) run.chain.omega_coupling = *flags.omega;
    if (flags.points) run.points = *flags.points;
    if (flags.n_min) run.n_min = *flags.n_min;
    if (flags.n_max) run.n_max = *flags.n_max;
    if (!flags.ka_grid.empty()) run.ka_grid = flags.ka_grid;
    if (flags.ka_min) run.ka_min = flags.ka_min;
    if (flags.ka_max) run.ka_max = flags.ka_max;
    if (flags.ka_steps) run.ka_steps = flags.ka_steps;
    if (flags.dipole_weight) run.dipole_weight = true;
    if (flags.out) run.out = *flags.out;
    if (flags.format) run.format = *flags.format;
    if (flags.summary) run.summary = *flags.summary;
}

// -- validation -------------------------------------------------------------

void require_n(const RunConfig& run) {
    if (!run.has_n) throw ContractViolation("n", "missing required parameter --n");
}

void check_index(const char* name, int value, int n) {
    if (value < 1 || value > n)
        throw ContractViolation(name, std::string("--") + name + "=" + std::to_string(value) + " outside [1, " +
                                          std::to_string(n) + "]");
}

std::vector<double> resolve_ka_grid(const RunConfig& run) {
    if (!run.ka_grid.empty()) return run.ka_grid;
    if (!run.ka_min || !run.ka_max || !run.ka_steps)
        throw ContractViolation("ka-grid", "scan needs --ka-grid or all of --ka-min, --ka-max, --ka-steps");
    if (*run.ka_steps < 1) throw ContractViolation("ka-steps", "--ka-steps must be >= 1");
    if (*run.ka_max < *run.ka_min) throw ContractViolation("ka-max", "--ka-max must be >= --ka-min");
    std::vector<double> grid(static_cast<std::size_t>(*run.ka_steps));
    for (int i = 0; i < *run.ka_steps; ++i)
        grid[static_cast<std::size_t>(i)] =
            *run.ka_steps == 1 ? *run.ka_min : *run.ka_min + (*run.ka_max - *run.ka_min) * i / (*run.ka_steps - 1);
    return grid;
}

/// Every guard of the compute modules, checked before any work starts.
void validate(RunConfig& run) {
    if (!kCommands.contains(run.command)) throw ParseFailure("unknown command '" + run.command + "'");
    if (run.format.empty()) run.format = run.command == "verify" ? "json" : "csv";
    if (run.format != "csv" && run.format != "json")
        throw ContractViolation("format", "--format must be csv or json, got '" + run.format + "'");

    const auto& cmd = run.command;
    const bool needs_chain = cmd == "eigen" || cmd == "verify" || cmd == "pattern" || cmd == "pattern-atom" ||
                             cmd == "decay";
    if (needs_chain) {
        require_n(run);
        run.chain.validate();
    } else {
        ChainConfig probe = run.chain;
        probe.n_atoms = 1;
        probe.validate();
    }

    const int n = run.chain.n_atoms;
    if (cmd == "eigen") {
        if (run.g.empty() && !run.m) throw ContractViolation("m", "eigen needs --m or --g");
        if (!run.g.empty()) {
            validate_label(EigenLabel{run.g}, n);
            if (run.m && *run.m != static_cast<int>(run.g.size()))
                throw ContractViolation("m", "--m does not match the number of --g entries");
            sector_dimension(n, static_cast<int>(run.g.size()));
        } else {
            sector_dimension(n, *run.m);
        }
    } else if (cmd == "verify") {
        if (!run.m) throw ContractViolation("m", "missing required parameter --m");
        sector_dimension(n, *run.m);
    } else if (cmd == "pattern") {
        if (run.g.size() != 1) throw ContractViolation("g", "pattern needs exactly one --g");
        check_index("g", run.g.front(), n);
    } else if (cmd == "pattern-atom") {
        if (!run.j) throw ContractViolation("j", "missing required parameter --j");
        check_index("j", *run.j, n);
    } else if (cmd == "census" || cmd == "scan") {
        if (run.n_min < 1) throw ContractViolation("n-min", "--n-min must be >= 1");
        if (run.n_max < run.n_min) throw ContractViolation("n-max", "--n-max must be >= --n-min");
        sector_dimension(run.n_max, 1);
    }
    if ((cmd == "pattern" || cmd == "pattern-atom") && run.points < 1)
        throw ContractViolation("points", "--points must be >= 1");
    if (cmd == "scan")
        for (double ka : resolve_ka_grid(run))
            if (!(ka >= 0.0) || !std::isfinite(ka))
                throw ContractViolation("ka-grid", "ka grid values must be finite and >= 0");
}

// -- commands ---------------------------------------------------------------

std::string join(const std::vector<int>& values, char sep = ' ') {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(values[i]);
    }
    return out;
}

json chain_params(const RunConfig& run) {
    return {{"n", run.chain.n_atoms}, {"ka", run.chain.ka}, {"u", run.chain.mu_dot_a}};
}

struct Outcome {
    std::string body;
    std::string summary;  // JSON summary for census/scan
    bool passed = true;
};

std::string report(const std::string& command, const json& params, const json& results, const std::string& status) {
    json doc = {{"command", command}, {"params", params}, {"results", results}, {"status", status}};
    return doc.dump(2) + "\n";
}

Outcome run_eigen(const RunConfig& run) {
    const auto& cfg = run.chain;
    const bool csv = run.format == "csv";
    std::ostringstream out;
    json params = {{"n", cfg.n_atoms}, {"omega0", cfg.omega0}, {"omega", cfg.omega_coupling}};

    if (!run.g.empty()) {
        const EigenLabel label{run.g};
        const auto state = expand_state(cfg, label);
        const double energy = eigenvalue(cfg, label);
        const int parity = static_cast<int>(reflection_parity(label));
        if (csv) {
            CsvWriter w(out,
                        {{"n", std::to_string(cfg.n_atoms)},
                         {"g", join(run.g)},
                         {"energy", format_double(energy)},
                         {"parity", std::to_string(parity)}},
                        {"ket", "amplitude"});
            for (std::size_t i = 0; i < state.basis.size(); ++i) {
                w.cell(join(state.basis[i].k)).cell(state.amplitudes[static_cast<Eigen::Index>(i)]);
                w.end_row();
            }
            return {out.str(), {}, true};
        }
        json amplitudes = json::array();
        for (std::size_t i = 0; i < state.basis.size(); ++i)
            amplitudes.push_back({{"k", state.basis[i].k}, {"amplitude", state.amplitudes[static_cast<Eigen::Index>(i)]}});
        params["g"] = run.g;
        return {report("eigen", params, {{"energy", energy}, {"parity", parity}, {"amplitudes", amplitudes}}, "ok"),
                {},
                true};
    }

    const int m = *run.m;
    const auto labels = sector_labels(cfg.n_atoms, m);
    if (csv) {
        CsvWriter w(out,
                    {{"n", std::to_string(cfg.n_atoms)},
                     {"m", std::to_string(m)},
                     {"omega0", format_double(cfg.omega0)},
                     {"omega", format_double(cfg.omega_coupling)}},
                    {"label", "energy", "parity"});
        for (const auto& label : labels) {
            w.cell(join(label.g)).cell(eigenvalue(cfg, label)).cell(static_cast<int>(reflection_parity(label)));
            w.end_row();
        }
        return {out.str(), {}, true};
    }
    json results = json::array();
    for (const auto& label : labels)
        results.push_back({{"g", label.g},
                           {"energy", eigenvalue(cfg, label)},
                           {"parity", static_cast<int>(reflection_parity(label))}});
    params["m"] = m;
    return {report("eigen", params, results, "ok"), {}, true};
}

Outcome run_verify(const RunConfig& run) {
    const auto result = verify_analytic(run.chain, *run.m);
    if (run.format == "csv") {
        std::ostringstream out;
        CsvWriter w(out, {{"n", std::to_string(result.n)}, {"m", std::to_string(result.m)}},
                    {"n", "m", "max_eigenvalue_residual", "max_vector_residual", "max_projector_residual", "status"});
        w.cell(result.n)
            .cell(result.m)
            .cell(result.max_eigenvalue_residual)
            .cell(result.max_vector_residual)
            .cell(result.max_projector_residual)
            .cell(result.status());
        w.end_row();
        return {out.str(), {}, result.passed()};
    }
    json results = {{"n", result.n},
                    {"m", result.m},
                    {"max_eigenvalue_residual", result.max_eigenvalue_residual},
                    {"max_vector_residual", result.max_vector_residual},
                    {"max_projector_residual", result.max_projector_residual},
                    {"failures", result.failures},
                    {"status", result.status()}};
    json params = {{"n", run.chain.n_atoms}, {"m", *run.m}, {"omega0", run.chain.omega0},
                   {"omega", run.chain.omega_coupling}};
    return {report("verify", params, results, result.status()), {}, result.passed()};
}

Outcome run_pattern(const RunConfig& run) {
    const bool atom = run.command == "pattern-atom";
    const PatternSource source = atom ? PatternSource{AtomSource{*run.j}} : PatternSource{EigenSource{run.g.front()}};
    const auto samples =
        pattern_scan(run.chain, source, AngularGrid::uniform(run.points), {.dipole_weighted = run.dipole_weight});
    const std::string key = atom ? "j" : "g";
    const int index = atom ? *run.j : run.g.front();

    if (run.format == "csv") {
        std::ostringstream out;
        CsvMetadata meta = {{"n", std::to_string(run.chain.n_atoms)},
                            {key, std::to_string(index)},
                            {"ka", format_double(run.chain.ka)},
                            {"u", format_double(run.chain.mu_dot_a)}};
        if (run.dipole_weight) meta.emplace_back("dipole_weight", "1");
        CsvWriter w(out, meta, {"theta", "value"});
        for (const auto& s : samples) {
            w.cell(s.theta).cell(s.value);
            w.end_row();
        }
        return {out.str(), {}, true};
    }
    json params = chain_params(run);
    params[key] = index;
    params["points"] = run.points;
    params["dipole_weight"] = run.dipole_weight;
    json results = json::array();
    for (const auto& s : samples) results.push_back({{"theta", s.theta}, {"value", s.value}});
    return {report(run.command, params, results, "ok"), {}, true};
}

Outcome run_decay(const RunConfig& run) {
    const auto table = decay_table(run.chain);
    if (run.format == "csv") {
        std::ostringstream out;
        CsvWriter w(out,
                    {{"n", std::to_string(table.n_atoms)}, {"ka", format_double(table.ka)}, {"u", format_double(table.u)}},
                    {"g", "rate", "class"});
        for (int g = 1; g <= table.n_atoms; ++g) {
            w.cell(g).cell(table.rates[g - 1]).cell(to_string(table.classes[static_cast<std::size_t>(g - 1)]));
            w.end_row();
        }
        return {out.str(), {}, true};
    }
    json results = json::array();
    for (int g = 1; g <= table.n_atoms; ++g)
        results.push_back({{"g", g},
                           {"rate", table.rates[g - 1]},
                           {"class", std::string(to_string(table.classes[static_cast<std::size_t>(g - 1)]))}});
    return {report("decay", chain_params(run), results, "ok"), {}, true};
}

Outcome run_census(const RunConfig& run) {
    const auto series = subradiant_census(run.chain, run.n_min, run.n_max);
    json params = {{"n_min", run.n_min}, {"n_max", run.n_max}, {"ka", run.chain.ka}, {"u", run.chain.mu_dot_a}};
    json entries = json::array();
    for (const auto& e : series.entries) entries.push_back({{"n", e.n_atoms}, {"count", e.subradiant}});
    const std::string summary = report("census", params, {{"entries", entries}, {"gradient", series.gradient}}, "ok");
    if (run.format == "json") return {summary, summary, true};

    std::ostringstream out;
    CsvWriter w(out,
                {{"n_min", std::to_string(run.n_min)},
                 {"n_max", std::to_string(run.n_max)},
                 {"ka", format_double(run.chain.ka)},
                 {"u", format_double(run.chain.mu_dot_a)},
                 {"gradient", format_double(series.gradient)}},
                {"n", "count"});
    for (const auto& e : series.entries) {
        w.cell(e.n_atoms).cell(e.subradiant);
        w.end_row();
    }
    return {out.str(), summary, true};
}

Outcome run_scan(const RunConfig& run) {
    const auto grid = resolve_ka_grid(run);
    const auto points = fraction_scan(run.chain, grid, run.n_min, run.n_max);
    json params = {{"n_min", run.n_min}, {"n_max", run.n_max}, {"u", run.chain.mu_dot_a}, {"ka_grid", grid}};
    json results = json::array();
    for (const auto& p : points) results.push_back({{"ka", p.ka}, {"fraction", p.fraction}});
    const std::string summary = report("scan", params, results, "ok");
    if (run.format == "json") return {summary, summary, true};

    std::ostringstream out;
    CsvWriter w(out,
                {{"n_min", std::to_string(run.n_min)},
                 {"n_max", std::to_string(run.n_max)},
                 {"u", format_double(run.chain.mu_dot_a)}},
                {"ka", "fraction"});
    for (const auto& p : points) {
        w.cell(p.ka).cell(p.fraction);
        w.end_row();
    }
    return {out.str(), summary, true};
}

Outcome dispatch(const RunConfig& run) {
    const auto& cmd = run.command;
    if (cmd == "eigen") return run_eigen(run);
    if (cmd == "verify") return run_verify(run);
    if (cmd == "pattern" || cmd == "pattern-atom") return run_pattern(run);
    if (cmd == "decay") return run_decay(run);
    if (cmd == "census") return run_census(run);
    return run_scan(run);
}

// -- output -----------------------------------------------------------------

std::filesystem::path resolve_output(const std::string& path) {
    std::filesystem::path p(path);
    if (p.is_relative())
        if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0')
            return std::filesystem::path(dir) / p;
    return p;
}

void write_file(const std::string& path, const std::string& content) {
    const auto target = resolve_output(path);
    std::ofstream file(target, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot open output file '" + target.string() + "'");
    file << content;
    if (!file) throw std::runtime_error("failed writing output file '" + target.string() + "'");
}

void emit_error(std::ostream& err, int code, const std::string& parameter, const std::string& message) {
    json doc = {{"status", "error"}, {"exit_code", code}, {"message", message}};
    if (!parameter.empty()) doc["parameter"] = parameter;
    err << doc.dump() << '\n';
}

// -- argument parsing -------------------------------------------------------

void add_chain_flags(CLI::App* sub, Flags& f, bool with_n) {
    if (with_n) sub->add_option("--n", f.n, "number of atoms N");
    sub->add_option("--ka", f.ka, "photon wavenumber times spacing");
    sub->add_option("--u", f.u, "dipole projection on the chain axis, in [0, 1]");
}

void add_output_flags(CLI::App* sub, Flags& f) {
    sub->add_option("--out", f.out, "output file ('-' for stdout)");
    sub->add_option("--format", f.format, "csv or json");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Analytic eigensystem and radiative properties of a dipole-coupled qubit chain", "chain_radiance"};
    app.require_subcommand(0, 1);
    app.fallthrough();
    Flags f;
    app.add_option("--config", f.config, "flat JSON file whose keys mirror the flags");

    auto* eigen = app.add_subcommand("eigen", "energies and parities of a sector, or one expanded eigenstate");
    eigen->add_option("--n", f.n, "number of atoms N");
    eigen->add_option("--m", f.m, "excitation number M");
    eigen->add_option("--g", f.g, "eigen-label g_1<...<g_M")->delimiter(',');
    eigen->add_option("--omega0", f.omega0, "transition frequency (units of gamma)");
    eigen->add_option("--omega", f.omega, "nearest-neighbour coupling (units of gamma)");
    add_output_flags(eigen, f);

    auto* verify = app.add_subcommand("verify", "check the analytic sector against dense diagonalization");
    verify->add_option("--n", f.n, "number of atoms N");
    verify->add_option("--m", f.m, "excitation number M");
    verify->add_option("--omega0", f.omega0, "transition frequency (units of gamma)");
    verify->add_option("--omega", f.omega, "nearest-neighbour coupling (units of gamma)");
    add_output_flags(verify, f);

    auto* pattern = app.add_subcommand("pattern", "structure factor of eigenstate g over the polar angle");
    add_chain_flags(pattern, f, true);
    pattern->add_option("--g", f.g, "one-excitation eigen-label g");
    pattern->add_option("--points", f.points, "number of angles on [0, pi]");
    pattern->add_flag("--dipole-weight", f.dipole_weight, "multiply by the azimuth-averaged dipole factor");
    add_output_flags(pattern, f);

    auto* pattern_atom = app.add_subcommand("pattern-atom", "emission pattern of the single excited atom j");
    add_chain_flags(pattern_atom, f, true);
    pattern_atom->add_option("--j", f.j, "index of the excited atom");
    pattern_atom->add_option("--points", f.points, "number of angles on [0, pi]");
    pattern_atom->add_flag("--dipole-weight", f.dipole_weight, "multiply by the azimuth-averaged dipole factor");
    add_output_flags(pattern_atom, f);

    auto* decay = app.add_subcommand("decay", "total decay rate and class of every one-excitation eigenstate");
    add_chain_flags(decay, f, true);
    add_output_flags(decay, f);

    auto* census = app.add_subcommand("census", "subradiant-state count versus N and its mean gradient");
    add_chain_flags(census, f, false);
    census->add_option("--n-min", f.n_min, "smallest chain length");
    census->add_option("--n-max", f.n_max, "largest chain length");
    census->add_option("--summary", f.summary, "also write the JSON summary to this file");
    add_output_flags(census, f);

    auto* scan = app.add_subcommand("scan", "subradiant fraction versus ka");
    scan->add_option("--u", f.u, "dipole projection on the chain axis, in [0, 1]");
    scan->add_option("--ka-grid", f.ka_grid, "comma-separated ka values")->delimiter(',');
    scan->add_option("--ka-min", f.ka_min, "first ka of a uniform grid");
    scan->add_option("--ka-max", f.ka_max, "last ka of a uniform grid");
    scan->add_option("--ka-steps", f.ka_steps, "number of ka values in the uniform grid");
    scan->add_option("--n-min", f.n_min, "smallest chain length");
    scan->add_option("--n-max", f.n_max, "largest chain length");
    scan->add_option("--summary", f.summary, "also write the JSON summary to this file");
    add_output_flags(scan, f);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        emit_error(err, kParseError, "", e.what());
        return kParseError;
    }

    RunConfig runcfg;
    try {
        if (f.config) apply_config_file(*f.config, runcfg);
        for (auto* sub : app.get_subcommands()) runcfg.command = sub->get_name();
        if (runcfg.command.empty()) throw ParseFailure("no command given (flag or config key 'command')");
        apply_flags(f, runcfg);
        validate(runcfg);
    } catch (const ParseFailure& e) {
        emit_error(err, kParseError, "", e.what());
        return kParseError;
    } catch (const ContractViolation& e) {
        emit_error(err, kValidationError, e.parameter(), e.what());
        return kValidationError;
    }

    try {
        const Outcome outcome = dispatch(runcfg);
        if (runcfg.out.empty() || runcfg.out == "-")
            out << outcome.body;
        else
            write_file(runcfg.out, outcome.body);
        if (!runcfg.summary.empty()) write_file(runcfg.summary, outcome.summary);
        if (!outcome.passed) {
            emit_error(err, kComputationError, "", runcfg.command + " reported failure");
            return kComputationError;
        }
        return kSuccess;
    } catch (const ContractViolation& e) {
        emit_error(err, kValidationError, e.parameter(), e.what());
        return kValidationError;
    } catch (const std::exception& e) {
        emit_error(err, kComputationError, "", e.what());
        return kComputationError;
    }
}

}  // namespace chainrad::cli
