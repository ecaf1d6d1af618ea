// heisenring: pairwise thermal entanglement in a ferromagnetic Heisenberg
// ring at low temperature. Subcommands: profile, rdm, compare, figure1.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "heisenring/asymptotics.hpp"
#include "heisenring/io.hpp"
#include "heisenring/profile.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CommonArgs {
    int n_sites = 0;
    double beta_j = 0.0;
    double beta_mub = 0.0;
    std::string method = "gaussian";
    std::string format = "csv";
    std::string output;
    std::string config_path;
    int max_exact_n = heisenring::kDefaultExactNCap;
};

void add_common_options(CLI::App* cmd, CommonArgs& args, bool wants_method = true) {
    cmd->add_option("--n", args.n_sites, "ring length N (>= 3)");
    cmd->add_option("--beta-j", args.beta_j, "J/kT, positive");
    cmd->add_option("--beta-mub", args.beta_mub, "muB/kT, nonnegative");
    if (wants_method)
        cmd->add_option("--method", args.method, "exact | truncated | gaussian | all");
    cmd->add_option("--format", args.format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--output", args.output, "output file (or directory for figure1)");
    cmd->add_option("--config", args.config_path, "JSON config file; flags override it");
    cmd->add_option("--max-exact-n", args.max_exact_n, "cap for the exact all-sector solve");
}

json load_config(const std::string& path) {
    std::ifstream stream(path);
    if (!stream) throw heisenring::io_error("cannot read config file " + path);
    json j;
    try {
        stream >> j;
    } catch (const json::parse_error& e) {
        throw heisenring::invalid_input_error("config file " + path + ": " + e.what());
    }
    if (!j.is_object())
        throw heisenring::invalid_input_error("config file must hold a JSON object");
    return j;
}

// Fills options the command line left untouched from the config file.
void merge_config(const CLI::App* cmd, CommonArgs& args) {
    if (args.config_path.empty()) return;
    const json j = load_config(args.config_path);
    const auto take = [&](const char* flag, const char* key, auto& slot) {
        const CLI::Option* opt = cmd->get_option_no_throw(flag);
        if (opt != nullptr && opt->count() == 0 && j.contains(key))
            slot = j.at(key).get<std::decay_t<decltype(slot)>>();
    };
    take("--n", "n_sites", args.n_sites);
    take("--beta-j", "beta_j", args.beta_j);
    take("--beta-mub", "beta_mub", args.beta_mub);
    take("--method", "method", args.method);
    take("--format", "format", args.format);
    take("--output", "output", args.output);
    take("--max-exact-n", "max_exact_n", args.max_exact_n);
}

heisenring::ChainParams to_params(const CommonArgs& args) {
    return {args.n_sites, args.beta_j, args.beta_mub};
}

heisenring::Method require_method(const std::string& name) {
    const auto method = heisenring::parse_method(name);
    if (!method)
        throw heisenring::invalid_input_error("unknown method '" + name +
                                              "' (expected exact, truncated or gaussian)");
    return *method;
}

void emit(const std::string& content, const std::string& output) {
    if (output.empty())
        std::cout << content;
    else
        heisenring::write_file(output, content);
}

void print_warnings(const std::vector<std::string>& warnings) {
    for (const std::string& w : warnings) std::cerr << "warning: " << w << '\n';
}

int run_profile(const CLI::App* cmd, CommonArgs& args) {
    merge_config(cmd, args);
    const heisenring::ChainParams params = to_params(args);

    std::vector<heisenring::Method> methods;
    if (args.method == "all")
        methods = {heisenring::Method::exact, heisenring::Method::truncated,
                   heisenring::Method::gaussian};
    else
        methods = {require_method(args.method)};

    std::vector<heisenring::ConcurrenceProfile> profiles;
    for (const auto method : methods) {
        profiles.push_back(heisenring::compute_profile(params, method, args.max_exact_n));
        print_warnings(heisenring::validity_warnings(params, method));
    }

    if (args.format == "json") {
        json out;
        if (profiles.size() == 1) {
            out = heisenring::profile_json(profiles[0],
                                           heisenring::run_diagnostics(params, methods[0]));
        } else {
            out = json::array();
            for (std::size_t i = 0; i < profiles.size(); ++i)
                out.push_back(heisenring::profile_json(
                    profiles[i], heisenring::run_diagnostics(params, methods[i])));
        }
        emit(out.dump(2) + "\n", args.output);
    } else {
        std::string out = heisenring::profile_csv(profiles[0]);
        for (std::size_t i = 1; i < profiles.size(); ++i) {
            const std::string csv = heisenring::profile_csv(profiles[i]);
            out += csv.substr(csv.find('\n') + 1); // drop the repeated header
        }
        emit(out, args.output);
    }
    return 0;
}

int run_rdm(const CLI::App* cmd, CommonArgs& args, std::vector<int>& sites) {
    merge_config(cmd, args);
    if (sites.empty() && !args.config_path.empty()) {
        const json j = load_config(args.config_path);
        if (j.contains("sites")) sites = j.at("sites").get<std::vector<int>>();
    }
    if (sites.size() != 2)
        throw heisenring::invalid_input_error("rdm needs --sites M N");
    if (args.format == "csv" && cmd->get_option("--format")->count() > 0)
        throw heisenring::invalid_input_error(
            "rdm emits a matrix dump; use --format json or the default text");
    const heisenring::ChainParams params = to_params(args);
    const auto method = require_method(args.method == "all" ? "exact" : args.method);
    print_warnings(heisenring::validity_warnings(params, method));

    const heisenring::RdmReport report =
        heisenring::rdm_report(params, method, sites[0], sites[1], args.max_exact_n);
    if (args.format == "json")
        emit(heisenring::rdm_json(report).dump(2) + "\n", args.output);
    else
        emit(heisenring::rdm_text(report), args.output);
    return 0;
}

int run_compare(const CLI::App* cmd, CommonArgs& args) {
    merge_config(cmd, args);
    const heisenring::ChainParams params = to_params(args);
    const heisenring::CompareTable table =
        heisenring::compare_methods(params, args.max_exact_n);
    print_warnings(table.diagnostics.warnings);
    if (args.format == "json")
        emit(heisenring::compare_json(table).dump(2) + "\n", args.output);
    else
        emit(heisenring::compare_text(table), args.output);
    return 0;
}

int run_figure1(const CLI::App* cmd, CommonArgs& args, bool emit_plot) {
    merge_config(cmd, args);
    if (!emit_plot && !args.config_path.empty()) {
        const json j = load_config(args.config_path);
        if (j.contains("emit_plot")) emit_plot = j.at("emit_plot").get<bool>();
    }
    const fs::path dir = args.output.empty() ? fs::path(".") : fs::path(args.output);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw heisenring::io_error("cannot create output directory " + dir.string());

    std::vector<int> distances;
    for (int d = 0; d <= 10; ++d) distances.push_back(d);

    const heisenring::ChainParams solid{20, 0.6, 3.0};
    const heisenring::ChainParams dashed{20, 0.8, 4.0};
    const auto solid_profile = heisenring::gaussian_profile(solid, distances);
    const auto dashed_profile = heisenring::gaussian_profile(dashed, distances);

    heisenring::write_file(dir / "figure1_solid.csv", heisenring::profile_csv(solid_profile));
    heisenring::write_file(dir / "figure1_dashed.csv",
                           heisenring::profile_csv(dashed_profile));
    if (args.format == "json") {
        heisenring::write_file(
            dir / "figure1_solid.json",
            heisenring::profile_json(solid_profile,
                                     heisenring::run_diagnostics(solid, heisenring::Method::gaussian))
                    .dump(2) +
                "\n");
        heisenring::write_file(
            dir / "figure1_dashed.json",
            heisenring::profile_json(dashed_profile,
                                     heisenring::run_diagnostics(dashed, heisenring::Method::gaussian))
                    .dump(2) +
                "\n");
    }
    if (emit_plot)
        heisenring::write_file(dir / "figure1.gp", heisenring::figure_plot_script(
                                                       "figure1_solid.csv", "figure1_dashed.csv"));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"thermal entanglement profiles of the ferromagnetic Heisenberg ring"};
    app.require_subcommand(1);

    CommonArgs profile_args, rdm_args, compare_args, figure_args;
    std::vector<int> rdm_sites;
    bool emit_plot = false;

    CLI::App* profile_cmd =
        app.add_subcommand("profile", "concurrence C(d) for d = 1..N/2 by one method");
    add_common_options(profile_cmd, profile_args);

    CLI::App* rdm_cmd =
        app.add_subcommand("rdm", "two-site reduced density matrix and concurrence");
    add_common_options(rdm_cmd, rdm_args);
    rdm_cmd->add_option("--sites", rdm_sites, "the two sites m n")->expected(2);

    CLI::App* compare_cmd =
        app.add_subcommand("compare", "exact vs truncated vs gaussian error table");
    add_common_options(compare_cmd, compare_args, /*wants_method=*/false);

    CLI::App* figure_cmd = app.add_subcommand(
        "figure1", "reference profiles: N=20, (beta_mub=3, beta_j=0.6) and (4, 0.8)");
    add_common_options(figure_cmd, figure_args, /*wants_method=*/false);
    figure_cmd->add_flag("--emit-plot", emit_plot, "also write a gnuplot script");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (profile_cmd->parsed()) return run_profile(profile_cmd, profile_args);
        if (rdm_cmd->parsed()) return run_rdm(rdm_cmd, rdm_args, rdm_sites);
        if (compare_cmd->parsed()) return run_compare(compare_cmd, compare_args);
        if (figure_cmd->parsed()) return run_figure1(figure_cmd, figure_args, emit_plot);
    } catch (const heisenring::invalid_input_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const heisenring::capacity_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const heisenring::io_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
