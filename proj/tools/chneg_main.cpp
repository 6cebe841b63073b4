// Command-line front end: build Choi matrices, compute negativity reports,
// run parameter sweeps, map CP regions, compute distances and convert
// positivity values.
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chneg/choi.hpp"
#include "chneg/negativity.hpp"
#include "chneg/sweep.hpp"

namespace {

using chneg::AssignmentMap;
using chneg::CouplingSpec;
using chneg::ValidationError;

double parse_double(const std::string& text, const std::string& what) {
    char* end = nullptr;
    const double value = std::strtod(text.c_str(), &end);
    if (end == text.c_str() || *end != '\0')
        throw ValidationError("cli: cannot parse number '" + text + "' for " + what);
    return value;
}

// --param name=value, repeatable, each name assigned exactly once.
std::map<std::string, double> parse_params(const std::vector<std::string>& raw) {
    std::map<std::string, double> params;
    for (const std::string& item : raw) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw ValidationError("cli: expected --param name=value, got '" + item + "'");
        const std::string name = item.substr(0, eq);
        if (params.count(name))
            throw ValidationError("cli: parameter '" + name + "' assigned twice");
        params[name] = parse_double(item.substr(eq + 1), "parameter '" + name + "'");
    }
    return params;
}

// --axis name=start:stop:count
chneg::SweepAxis parse_axis(const std::string& item) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
        throw ValidationError("cli: expected --axis name=start:stop:count, got '" + item + "'");
    chneg::SweepAxis axis;
    axis.name = item.substr(0, eq);
    const std::string rest = item.substr(eq + 1);
    const auto c1 = rest.find(':');
    const auto c2 = rest.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw ValidationError("cli: expected --axis name=start:stop:count, got '" + item + "'");
    axis.start = parse_double(rest.substr(0, c1), "axis '" + axis.name + "' start");
    axis.stop = parse_double(rest.substr(c1 + 1, c2 - c1 - 1), "axis '" + axis.name + "' stop");
    const std::string count_text = rest.substr(c2 + 1);
    const double count = parse_double(count_text, "axis '" + axis.name + "' count");
    if (count < 2 || count != static_cast<double>(static_cast<std::size_t>(count)))
        throw ValidationError("cli: axis '" + axis.name + "' count must be an integer >= 2");
    axis.count = static_cast<std::size_t>(count);
    return axis;
}

double take(const std::map<std::string, double>& params, std::set<std::string>& consumed,
            const std::string& name, const char* what) {
    const auto it = params.find(name);
    if (it == params.end())
        throw ValidationError(std::string("cli: ") + what + " requires --param " + name + "=...");
    consumed.insert(name);
    return it->second;
}

std::optional<double> take_optional(const std::map<std::string, double>& params,
                                    std::set<std::string>& consumed, const std::string& name) {
    const auto it = params.find(name);
    if (it == params.end()) return std::nullopt;
    consumed.insert(name);
    return it->second;
}

CouplingSpec build_coupling(const std::string& name, const std::map<std::string, double>& params,
                            std::set<std::string>& consumed) {
    if (name == "rootswap") return chneg::RootSwapCoupling{};
    if (name == "cz") return chneg::CzCoupling{};
    if (name == "czprime") return chneg::CzPrimeCoupling{take(params, consumed, "delta", "czprime")};
    if (name == "czdoubleprime")
        return chneg::CzDoublePrimeCoupling{take(params, consumed, "delta", "czdoubleprime"),
                                            take(params, consumed, "xi", "czdoubleprime")};
    if (name == "utheta")
        return chneg::RotationThetaCoupling{take(params, consumed, "theta", "utheta")};
    if (name == "rabi") {
        chneg::RabiCoupling coupling;
        coupling.nu = take_optional(params, consumed, "nu").value_or(0.0);
        coupling.omega = take_optional(params, consumed, "omega").value_or(1.0);
        coupling.kz = take(params, consumed, "kz", "rabi");
        coupling.t = take(params, consumed, "t", "rabi");
        return coupling;
    }
    throw ValidationError("cli: unknown coupling '" + name + "'");
}

AssignmentMap build_sharp(const std::string& name, const std::map<std::string, double>& params,
                          std::set<std::string>& consumed) {
    if (name == "hadamard") return chneg::HadamardSharp{};
    if (name == "rotation") return chneg::RotationSharp{take(params, consumed, "phi", "rotation sharp")};
    if (name == "alpha") return chneg::AlphaSharp{take(params, consumed, "alpha", "alpha sharp")};
    if (name == "product") {
        const double bx = take_optional(params, consumed, "bx").value_or(0.0);
        const double by = take_optional(params, consumed, "by").value_or(0.0);
        const double bz = take_optional(params, consumed, "bz").value_or(0.0);
        chneg::Matrix rho =
            0.5 * (chneg::Matrix::identity(2) + bx * chneg::pauli_x() + by * chneg::pauli_y() +
                   bz * chneg::pauli_z());
        return chneg::ProductSharp{std::move(rho)};
    }
    throw ValidationError("cli: unknown sharp '" + name + "'");
}

void check_consumed(const std::map<std::string, double>& params,
                    const std::set<std::string>& consumed) {
    for (const auto& [name, value] : params) {
        (void)value;
        if (!consumed.count(name))
            throw ValidationError("cli: parameter '" + name + "' is not used by this command");
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cli: cannot open file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ValidationError("cli: cannot open output file '" + out_path + "'");
    out << content;
}

std::string shortest(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

struct CommandConfig {
    std::string coupling;
    std::string sharp = "hadamard";
    std::vector<std::string> raw_params;
    std::vector<std::string> raw_axes;
    std::string choi_path;
    std::string expected;
    std::string implemented;
    std::string expected_choi;
    std::string implemented_choi;
    std::string family;
    std::string out_path;
    double eta_tol = 1e-9;
    double positivity = -1.0;
    double neg_eta = -1.0;
    bool has_positivity = false;
    bool has_negativity = false;
};

int run_choi(const CommandConfig& cfg) {
    const auto params = parse_params(cfg.raw_params);
    std::set<std::string> consumed;
    const CouplingSpec spec = build_coupling(cfg.coupling, params, consumed);
    const AssignmentMap map = build_sharp(cfg.sharp, params, consumed);
    check_consumed(params, consumed);
    write_output(cfg.out_path, chneg::choi_to_json(chneg::assemble_choi(spec, map)));
    return 0;
}

int run_negativity(const CommandConfig& cfg) {
    chneg::ChoiMatrix choi{chneg::Matrix(4), ""};
    if (!cfg.choi_path.empty()) {
        if (!cfg.coupling.empty())
            throw ValidationError("cli: give either --choi or --coupling, not both");
        choi = chneg::choi_from_json(read_file(cfg.choi_path));
    } else {
        if (cfg.coupling.empty())
            throw ValidationError("cli: negativity needs --coupling or --choi");
        const auto params = parse_params(cfg.raw_params);
        std::set<std::string> consumed;
        const CouplingSpec spec = build_coupling(cfg.coupling, params, consumed);
        const AssignmentMap map = build_sharp(cfg.sharp, params, consumed);
        check_consumed(params, consumed);
        choi = chneg::assemble_choi(spec, map);
    }
    write_output(cfg.out_path, chneg::report_to_json(chneg::negativity(choi)));
    return 0;
}

int run_sweep_cmd(const CommandConfig& cfg, bool cp_only) {
    chneg::SweepGrid grid;
    grid.family = cfg.family;
    for (const std::string& raw : cfg.raw_axes) grid.axes.push_back(parse_axis(raw));
    grid.fixed = parse_params(cfg.raw_params);
    const chneg::SweepResult result =
        cp_only ? chneg::cp_map(grid, cfg.eta_tol) : chneg::run_sweep(grid);
    std::ostringstream csv;
    chneg::write_csv(csv, result);
    write_output(cfg.out_path, csv.str());
    return 0;
}

int run_distance(const CommandConfig& cfg) {
    const auto params = parse_params(cfg.raw_params);
    std::set<std::string> consumed;

    std::optional<CouplingSpec> expected_spec;
    std::optional<CouplingSpec> implemented_spec;
    const AssignmentMap map = build_sharp(cfg.sharp, params, consumed);

    chneg::ChoiMatrix expected{chneg::Matrix(4), ""};
    if (!cfg.expected_choi.empty()) {
        expected = chneg::choi_from_json(read_file(cfg.expected_choi));
    } else if (!cfg.expected.empty()) {
        expected_spec = build_coupling(cfg.expected, params, consumed);
        expected = chneg::assemble_choi(*expected_spec, map);
    } else {
        throw ValidationError("cli: distance needs --expected or --expected-choi");
    }

    chneg::ChoiMatrix implemented{chneg::Matrix(4), ""};
    if (!cfg.implemented_choi.empty()) {
        implemented = chneg::choi_from_json(read_file(cfg.implemented_choi));
    } else if (!cfg.implemented.empty()) {
        implemented_spec = build_coupling(cfg.implemented, params, consumed);
        implemented = chneg::assemble_choi(*implemented_spec, map);
    } else {
        throw ValidationError("cli: distance needs --implemented or --implemented-choi");
    }
    check_consumed(params, consumed);

    chneg::DistanceReport report = chneg::negativity_distance(expected, implemented);
    // The gate-level trace distance needs both unitaries; Choi files carry
    // only the single-qubit channel.
    if (expected_spec && implemented_spec)
        report.trace_distance = chneg::trace_distance(chneg::realize_coupling(*expected_spec),
                                                      chneg::realize_coupling(*implemented_spec));
    write_output(cfg.out_path, chneg::report_to_json(report));
    return 0;
}

int run_convert(const CommandConfig& cfg) {
    if (cfg.has_positivity == cfg.has_negativity)
        throw ValidationError("cli: convert needs exactly one of --positivity or --negativity");
    const double result = cfg.has_positivity
                              ? chneg::negativity_from_positivity(cfg.positivity)
                              : chneg::positivity_from_negativity(cfg.neg_eta);
    write_output(cfg.out_path, shortest(result) + "\n");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"chneg: single-qubit channel negativity toolkit"};
    app.require_subcommand(1);
    CommandConfig cfg;

    const auto add_coupling_opts = [&cfg](CLI::App* cmd, bool coupling_required) {
        auto* coupling = cmd->add_option("--coupling", cfg.coupling,
                                         "coupling family: rootswap|cz|czprime|czdoubleprime|utheta|rabi");
        if (coupling_required) coupling->required();
        cmd->add_option("--sharp", cfg.sharp,
                        "sharp variant: hadamard|rotation|alpha|product (default hadamard)");
        cmd->add_option("--param", cfg.raw_params, "parameter assignment name=value (repeatable)");
        cmd->add_option("--out", cfg.out_path, "output path (default stdout)");
    };

    CLI::App* choi_cmd = app.add_subcommand("choi", "assemble a Choi matrix and emit JSON");
    add_coupling_opts(choi_cmd, true);

    CLI::App* neg_cmd = app.add_subcommand("negativity", "compute a negativity report");
    add_coupling_opts(neg_cmd, false);
    neg_cmd->add_option("--choi", cfg.choi_path, "load the Choi matrix from a JSON file");

    const auto add_grid_opts = [&cfg](CLI::App* cmd) {
        cmd->add_option("--family", cfg.family,
                        "channel family: rabi|utheta|alpha|theta_alpha|czprime|czdoubleprime")
            ->required();
        cmd->add_option("--axis", cfg.raw_axes, "swept axis name=start:stop:count (repeatable)")
            ->required();
        cmd->add_option("--param", cfg.raw_params, "fixed parameter name=value (repeatable)");
        cmd->add_option("--out", cfg.out_path, "output path (default stdout)");
    };

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "sweep eta over a parameter grid, emit CSV");
    add_grid_opts(sweep_cmd);

    CLI::App* cpmap_cmd =
        app.add_subcommand("cpmap", "list completely positive grid points (eta below tolerance)");
    add_grid_opts(cpmap_cmd);
    cpmap_cmd->add_option("--eta-tol", cfg.eta_tol, "CP classification threshold (default 1e-9)");

    CLI::App* dist_cmd =
        app.add_subcommand("distance", "negativity distance between expected and implemented gates");
    dist_cmd->add_option("--expected", cfg.expected, "expected coupling family");
    dist_cmd->add_option("--implemented", cfg.implemented, "implemented coupling family");
    dist_cmd->add_option("--expected-choi", cfg.expected_choi, "expected Choi JSON file");
    dist_cmd->add_option("--implemented-choi", cfg.implemented_choi, "implemented Choi JSON file");
    dist_cmd->add_option("--sharp", cfg.sharp, "sharp variant shared by both channels");
    dist_cmd->add_option("--param", cfg.raw_params, "parameter assignment name=value (repeatable)");
    dist_cmd->add_option("--out", cfg.out_path, "output path (default stdout)");

    CLI::App* convert_cmd = app.add_subcommand("convert", "convert between positivity and negativity");
    convert_cmd->add_option("--positivity", cfg.positivity, "positivity value in [0, 1]")
        ->check([&cfg](const std::string&) { cfg.has_positivity = true; return std::string{}; });
    convert_cmd->add_option("--negativity", cfg.neg_eta, "negativity value in [0, 0.5)")
        ->check([&cfg](const std::string&) { cfg.has_negativity = true; return std::string{}; });
    convert_cmd->add_option("--out", cfg.out_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (choi_cmd->parsed()) return run_choi(cfg);
        if (neg_cmd->parsed()) return run_negativity(cfg);
        if (sweep_cmd->parsed()) return run_sweep_cmd(cfg, false);
        if (cpmap_cmd->parsed()) return run_sweep_cmd(cfg, true);
        if (dist_cmd->parsed()) return run_distance(cfg);
        if (convert_cmd->parsed()) return run_convert(cfg);
    } catch (const chneg::ConvergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
