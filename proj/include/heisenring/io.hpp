#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "heisenring/profile.hpp"

namespace heisenring {

/// 12 significant digits, scientific, locale-independent (std::to_chars).
std::string format_number(double value);

/// CSV with the fixed header
/// distance,concurrence,method,n_sites,beta_j,beta_mub
/// UTF-8, LF line endings, deterministic bytes.
std::string profile_csv(const ConcurrenceProfile& profile);

/// JSON document: {params, method, points:[{d,c}], diagnostics}.
nlohmann::json profile_json(const ConcurrenceProfile& profile, const Diagnostics& diag);

/// One row of a method-comparison table.
struct CompareRow {
    int distance = 0;
    double c_exact = 0.0;
    double c_truncated = 0.0;
    double c_gaussian = 0.0;
    double max_rdm_err_truncated = 0.0; ///< max componentwise |truncated - exact|
};

struct CompareTable {
    ChainParams params;
    std::vector<CompareRow> rows;
    Diagnostics diagnostics;
};

CompareTable compare_methods(const ChainParams& params, int max_exact_n = kDefaultExactNCap);

std::string compare_text(const CompareTable& table);
nlohmann::json compare_json(const CompareTable& table);

/// RDM dump: the 4x4 matrix, its eigenvalues, concurrence by both routes.
struct RdmReport {
    ChainParams params;
    Method method = Method::exact;
    int site_m = 0;
    int site_n = 0;
    TwoSiteDensity rdm;
    std::vector<double> eigenvalues; ///< of the 4x4 matrix, ascending
    double concurrence_general = 0.0;
    double concurrence_xstate = 0.0;
};

RdmReport rdm_report(const ChainParams& params, Method method, int site_m, int site_n,
                     int max_exact_n = kDefaultExactNCap);

std::string rdm_text(const RdmReport& report);
nlohmann::json rdm_json(const RdmReport& report);

/// gnuplot script plotting the two named profile CSVs.
std::string figure_plot_script(const std::string& solid_csv, const std::string& dashed_csv);

/// Writes content to path; throws io_error on failure.
void write_file(const std::filesystem::path& path, const std::string& content);

} // namespace heisenring
