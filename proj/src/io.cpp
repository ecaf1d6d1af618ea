#include "heisenring/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "heisenring/asymptotics.hpp"
#include "heisenring/concurrence.hpp"

namespace heisenring {

std::string format_number(double value) {
    char buf[48];
    const auto res =
        std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::scientific, 11);
    return std::string(buf, res.ptr);
}

std::string profile_csv(const ConcurrenceProfile& profile) {
    std::string out = "distance,concurrence,method,n_sites,beta_j,beta_mub\n";
    for (const ProfilePoint& p : profile.points) {
        out += std::to_string(p.distance);
        out += ',';
        out += format_number(p.concurrence);
        out += ',';
        out += method_name(profile.method);
        out += ',';
        out += std::to_string(profile.params.n_sites);
        out += ',';
        out += format_number(profile.params.beta_j);
        out += ',';
        out += format_number(profile.params.beta_mub);
        out += '\n';
    }
    return out;
}

namespace {

nlohmann::json params_json(const ChainParams& params) {
    return {{"n_sites", params.n_sites},
            {"beta_j", params.beta_j},
            {"beta_mub", params.beta_mub}};
}

nlohmann::json diagnostics_json(const Diagnostics& diag) {
    return {{"retained_weight", diag.truncation.retained_weight},
            {"leading_neglected_weight", diag.truncation.leading_neglected_weight},
            {"warnings", diag.warnings}};
}

} // namespace

nlohmann::json profile_json(const ConcurrenceProfile& profile, const Diagnostics& diag) {
    nlohmann::json points = nlohmann::json::array();
    for (const ProfilePoint& p : profile.points)
        points.push_back({{"d", p.distance}, {"c", p.concurrence}});
    return {{"params", params_json(profile.params)},
            {"method", method_name(profile.method)},
            {"points", points},
            {"diagnostics", diagnostics_json(diag)}};
}

CompareTable compare_methods(const ChainParams& params, int max_exact_n) {
    validate_for_truncation(params);
    CompareTable table;
    table.params = params;
    table.diagnostics = run_diagnostics(params, Method::truncated);

    const ThermalState state = solve_thermal(params, max_exact_n);
    for (int d = 1; d <= params.n_sites / 2; ++d) {
        const TwoSiteDensity exact = two_site_rdm(state, 0, d);
        const TwoSiteDensity truncated = truncated_rdm(params, d);
        const TwoSiteDensity gaussian = gaussian_rdm(params, d);
        CompareRow row;
        row.distance = d;
        row.c_exact = xstate_concurrence(exact);
        row.c_truncated = xstate_concurrence(truncated);
        row.c_gaussian = xstate_concurrence(gaussian);
        row.max_rdm_err_truncated =
            std::max({std::abs(truncated.u_plus - exact.u_plus),
                      std::abs(truncated.u_minus - exact.u_minus),
                      std::abs(truncated.w - exact.w), std::abs(truncated.z - exact.z)});
        table.rows.push_back(row);
    }
    return table;
}

std::string compare_text(const CompareTable& table) {
    std::ostringstream out;
    out << "# N=" << table.params.n_sites << " beta_j=" << format_number(table.params.beta_j)
        << " beta_mub=" << format_number(table.params.beta_mub) << '\n';
    out << "# retained_weight=" << format_number(table.diagnostics.truncation.retained_weight)
        << " leading_neglected_weight="
        << format_number(table.diagnostics.truncation.leading_neglected_weight) << '\n';
    for (const std::string& warning : table.diagnostics.warnings)
        out << "# warning: " << warning << '\n';
    out << "d  c_exact  c_truncated  c_gaussian  abs_err_trunc  rel_err_trunc  "
           "abs_err_gauss  rel_err_gauss  max_rdm_err_trunc\n";
    for (const CompareRow& row : table.rows) {
        const double abs_t = std::abs(row.c_truncated - row.c_exact);
        const double abs_g = std::abs(row.c_gaussian - row.c_exact);
        const double rel_t = row.c_exact != 0.0 ? abs_t / row.c_exact : std::nan("");
        const double rel_g = row.c_exact != 0.0 ? abs_g / row.c_exact : std::nan("");
        out << row.distance << "  " << format_number(row.c_exact) << "  "
            << format_number(row.c_truncated) << "  " << format_number(row.c_gaussian)
            << "  " << format_number(abs_t) << "  "
            << (std::isnan(rel_t) ? std::string("n/a") : format_number(rel_t)) << "  "
            << format_number(abs_g) << "  "
            << (std::isnan(rel_g) ? std::string("n/a") : format_number(rel_g)) << "  "
            << format_number(row.max_rdm_err_truncated) << '\n';
    }
    return out.str();
}

nlohmann::json compare_json(const CompareTable& table) {
    nlohmann::json rows = nlohmann::json::array();
    for (const CompareRow& row : table.rows) {
        const double abs_t = std::abs(row.c_truncated - row.c_exact);
        const double abs_g = std::abs(row.c_gaussian - row.c_exact);
        nlohmann::json r = {{"d", row.distance},
                            {"c_exact", row.c_exact},
                            {"c_truncated", row.c_truncated},
                            {"c_gaussian", row.c_gaussian},
                            {"abs_err_truncated", abs_t},
                            {"abs_err_gaussian", abs_g},
                            {"max_rdm_err_truncated", row.max_rdm_err_truncated}};
        if (row.c_exact != 0.0) {
            r["rel_err_truncated"] = abs_t / row.c_exact;
            r["rel_err_gaussian"] = abs_g / row.c_exact;
        }
        rows.push_back(r);
    }
    return {{"params", params_json(table.params)},
            {"rows", rows},
            {"diagnostics", diagnostics_json(table.diagnostics)}};
}

RdmReport rdm_report(const ChainParams& params, Method method, int site_m, int site_n,
                     int max_exact_n) {
    if (method == Method::exact)
        validate(params);
    else
        validate_for_truncation(params);
    const int n = params.n_sites;
    if (site_m < 0 || site_m >= n || site_n < 0 || site_n >= n)
        throw invalid_input_error("site index out of range 0.." + std::to_string(n - 1));
    if (site_m == site_n) throw invalid_input_error("rdm needs two distinct sites");

    RdmReport report;
    report.params = params;
    report.method = method;
    report.site_m = site_m;
    report.site_n = site_n;
    if (method == Method::exact) {
        const ThermalState state = solve_thermal(params, max_exact_n);
        report.rdm = two_site_rdm(state, site_m, site_n);
    } else {
        const int d = std::abs(site_m - site_n);
        report.rdm = method_rdm(params, method, d, nullptr);
    }

    const Eigen::Matrix4cd rho = rdm_as_matrix(report.rdm);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(rho, Eigen::EigenvaluesOnly);
    for (int i = 0; i < 4; ++i) report.eigenvalues.push_back(solver.eigenvalues()(i));
    report.concurrence_general = wootters_concurrence(rho);
    report.concurrence_xstate = xstate_concurrence(report.rdm);
    return report;
}

std::string rdm_text(const RdmReport& report) {
    const Eigen::Matrix4cd rho = rdm_as_matrix(report.rdm);
    std::ostringstream out;
    out << "# two-site RDM, sites (" << report.site_m << ", " << report.site_n
        << "), method " << method_name(report.method) << ", N=" << report.params.n_sites
        << " beta_j=" << format_number(report.params.beta_j)
        << " beta_mub=" << format_number(report.params.beta_mub) << '\n';
    out << "# basis |00>,|01>,|10>,|11>, entries (re, im)\n";
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            out << '(' << format_number(rho(r, c).real()) << ", "
                << format_number(rho(r, c).imag()) << ')';
            out << (c == 3 ? '\n' : ' ');
        }
    }
    out << "eigenvalues:";
    for (double v : report.eigenvalues) out << ' ' << format_number(v);
    out << '\n';
    out << "concurrence (wootters): " << format_number(report.concurrence_general) << '\n';
    out << "concurrence (x-state):  " << format_number(report.concurrence_xstate) << '\n';
    return out.str();
}

nlohmann::json rdm_json(const RdmReport& report) {
    const Eigen::Matrix4cd rho = rdm_as_matrix(report.rdm);
    nlohmann::json real_rows = nlohmann::json::array();
    nlohmann::json imag_rows = nlohmann::json::array();
    for (int r = 0; r < 4; ++r) {
        nlohmann::json re = nlohmann::json::array();
        nlohmann::json im = nlohmann::json::array();
        for (int c = 0; c < 4; ++c) {
            re.push_back(rho(r, c).real());
            im.push_back(rho(r, c).imag());
        }
        real_rows.push_back(re);
        imag_rows.push_back(im);
    }
    return {{"params", params_json(report.params)},
            {"method", method_name(report.method)},
            {"sites", {report.site_m, report.site_n}},
            {"rdm",
             {{"u_plus", report.rdm.u_plus},
              {"u_minus", report.rdm.u_minus},
              {"w", report.rdm.w},
              {"z", report.rdm.z}}},
            {"matrix", {{"real", real_rows}, {"imag", imag_rows}}},
            {"eigenvalues", report.eigenvalues},
            {"concurrence", {{"wootters", report.concurrence_general},
                             {"xstate", report.concurrence_xstate}}}};
}

std::string figure_plot_script(const std::string& solid_csv, const std::string& dashed_csv) {
    std::string out;
    out += "set datafile separator ','\n";
    out += "set xlabel 'distance |m-n|'\n";
    out += "set ylabel 'concurrence C'\n";
    out += "set key top right\n";
    out += "plot '" + solid_csv + "' skip 1 using 1:2 with linespoints lt 1 title 'muB/kT=3, J/kT=0.6', \\\n";
    out += "     '" + dashed_csv + "' skip 1 using 1:2 with linespoints dt 2 title 'muB/kT=4, J/kT=0.8'\n";
    return out;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream stream(path, std::ios::binary);
    if (!stream) throw io_error("cannot open " + path.string() + " for writing");
    stream << content;
    if (!stream) throw io_error("failed writing " + path.string());
}

} // namespace heisenring
