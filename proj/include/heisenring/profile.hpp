#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "heisenring/exact.hpp"
#include "heisenring/magnon.hpp"
#include "heisenring/types.hpp"

namespace heisenring {

enum class Method { exact, truncated, gaussian };

const char* method_name(Method m);
std::optional<Method> parse_method(std::string_view name);

struct ProfilePoint {
    int distance = 0;
    double concurrence = 0.0;
};

/// Concurrence-vs-distance curve with its parameter metadata.
struct ConcurrenceProfile {
    ChainParams params;
    Method method = Method::gaussian;
    std::vector<ProfilePoint> points; ///< strictly increasing distances
};

/// Truncation report plus any validity warnings for the run.
struct Diagnostics {
    TruncationReport truncation;
    std::vector<std::string> warnings;
};

/// Human-readable warnings when the truncation / saddle assumptions are
/// weak (2*beta_mub < 3 or beta_j < 0.1) and the method relies on them.
/// Empty for the exact method.
std::vector<std::string> validity_warnings(const ChainParams& params, Method method);

/// Per-pair concurrence by the chosen method from an X-form RDM.
TwoSiteDensity method_rdm(const ChainParams& params, Method method, int distance,
                          const ThermalState* solved = nullptr);

/// C(d) for d = 1..floor(N/2). method == exact solves the full thermal
/// state (subject to max_exact_n) and reads sites (0, d).
ConcurrenceProfile compute_profile(const ChainParams& params, Method method,
                                   int max_exact_n = kDefaultExactNCap);

/// Gaussian-method profile over explicit distances (d = 0 allowed as the
/// formal amplitude point).
ConcurrenceProfile gaussian_profile(const ChainParams& params,
                                    const std::vector<int>& distances);

/// Diagnostics for a run of the given method.
Diagnostics run_diagnostics(const ChainParams& params, Method method);

} // namespace heisenring
