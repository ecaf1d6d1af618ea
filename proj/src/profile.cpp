#include "heisenring/profile.hpp"

#include <cmath>

#include "heisenring/asymptotics.hpp"
#include "heisenring/concurrence.hpp"

namespace heisenring {

const char* method_name(Method m) {
    switch (m) {
        case Method::exact: return "exact";
        case Method::truncated: return "truncated";
        case Method::gaussian: return "gaussian";
    }
    return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
    if (name == "exact") return Method::exact;
    if (name == "truncated") return Method::truncated;
    if (name == "gaussian") return Method::gaussian;
    return std::nullopt;
}

std::vector<std::string> validity_warnings(const ChainParams& params, Method method) {
    std::vector<std::string> warnings;
    if (method == Method::exact) return warnings;
    if (2.0 * params.beta_mub < 3.0)
        warnings.push_back("2*beta_mub = " + std::to_string(2.0 * params.beta_mub) +
                           " < 3: higher bands are weakly suppressed and the "
                           "spectrum truncation may be inaccurate");
    if (params.beta_j < 0.1)
        warnings.push_back("beta_j = " + std::to_string(params.beta_j) +
                           " < 0.1: the one-magnon band is nearly flat and the "
                           "saddle-point forms degrade");
    return warnings;
}

TwoSiteDensity method_rdm(const ChainParams& params, Method method, int distance,
                          const ThermalState* solved) {
    switch (method) {
        case Method::truncated:
            return truncated_rdm(params, distance);
        case Method::gaussian:
            return gaussian_rdm(params, distance);
        case Method::exact: {
            if (solved != nullptr) return two_site_rdm(*solved, 0, distance);
            const ThermalState state = solve_thermal(params);
            return two_site_rdm(state, 0, distance);
        }
    }
    throw invalid_input_error("unknown method");
}

ConcurrenceProfile compute_profile(const ChainParams& params, Method method,
                                   int max_exact_n) {
    if (method == Method::exact)
        validate(params);
    else
        validate_for_truncation(params);

    ConcurrenceProfile profile;
    profile.params = params;
    profile.method = method;

    ThermalState state;
    if (method == Method::exact) state = solve_thermal(params, max_exact_n);

    for (int d = 1; d <= params.n_sites / 2; ++d) {
        const TwoSiteDensity rdm =
            method_rdm(params, method, d, method == Method::exact ? &state : nullptr);
        profile.points.push_back({d, xstate_concurrence(rdm)});
    }
    return profile;
}

ConcurrenceProfile gaussian_profile(const ChainParams& params,
                                    const std::vector<int>& distances) {
    validate_for_truncation(params);
    ConcurrenceProfile profile;
    profile.params = params;
    profile.method = Method::gaussian;
    for (int d : distances)
        profile.points.push_back({d, gaussian_concurrence(params, d)});
    return profile;
}

Diagnostics run_diagnostics(const ChainParams& params, Method method) {
    Diagnostics diag;
    diag.truncation = truncation_weight(params);
    diag.warnings = validity_warnings(params, method);
    return diag;
}

} // namespace heisenring
