#include "heisenring/chain.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace heisenring {

void validate(const ChainParams& params) {
    if (params.n_sites < 3)
        throw invalid_input_error("n_sites must be at least 3 (got " +
                                  std::to_string(params.n_sites) + ")");
    if (!std::isfinite(params.beta_j) || params.beta_j <= 0.0)
        throw invalid_input_error("beta_j must be positive and finite (got " +
                                  std::to_string(params.beta_j) + ")");
    if (!std::isfinite(params.beta_mub) || params.beta_mub < 0.0)
        throw invalid_input_error("beta_mub must be nonnegative and finite (got " +
                                  std::to_string(params.beta_mub) + ")");
}

void validate_for_truncation(const ChainParams& params) {
    validate(params);
    if (params.beta_mub <= 0.0)
        throw invalid_input_error(
            "the truncated and gaussian methods require beta_mub > 0 "
            "(the truncation is controlled by the gap 2*beta_mub)");
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (int i = 0; i < k; ++i) {
        // exact: a product of i+1 consecutive integers is divisible by (i+1)!
        result = result * static_cast<std::uint64_t>(n - i) /
                 static_cast<std::uint64_t>(i + 1);
    }
    return result;
}

int magnetization(std::uint64_t pattern, int n_sites) {
    return 2 * std::popcount(pattern) - n_sites;
}

std::vector<std::uint64_t> enumerate_sector(int n_sites, int n_up) {
    if (n_sites < 1 || n_sites > 62)
        throw invalid_input_error(
            "occupation patterns are limited to 62 sites (got " +
            std::to_string(n_sites) + ")");
    if (n_up < 0 || n_up > n_sites)
        throw invalid_input_error("n_up out of range 0.." + std::to_string(n_sites));
    std::vector<std::uint64_t> basis;
    basis.reserve(binomial(n_sites, n_up));
    if (n_up == 0) {
        basis.push_back(0);
        return basis;
    }
    const std::uint64_t limit = std::uint64_t{1} << n_sites;
    std::uint64_t b = (std::uint64_t{1} << n_up) - 1;
    while (b < limit) {
        basis.push_back(b);
        // Gosper's hack: next pattern with the same popcount, ascending
        const std::uint64_t c = b & (~b + 1);
        const std::uint64_t r = b + c;
        if (r >= limit) break;
        b = (((r ^ b) >> 2) / c) | r;
    }
    return basis;
}

double ground_state_energy(const ChainParams& params) {
    return -(params.beta_j + params.beta_mub) * params.n_sites;
}

namespace {

// Index of pattern in the ascending sector basis.
std::size_t find_index(const std::vector<std::uint64_t>& basis, std::uint64_t pattern) {
    const auto it = std::lower_bound(basis.begin(), basis.end(), pattern);
    return static_cast<std::size_t>(it - basis.begin());
}

} // namespace

Eigen::MatrixXd sector_hamiltonian(const ChainParams& params, SectorIndex sector,
                                   int dim_cap) {
    const int n = params.n_sites;
    if (sector.n_up < 0 || sector.n_up > n)
        throw invalid_input_error("sector n_up out of range 0.." + std::to_string(n));
    const std::uint64_t dim = binomial(n, sector.n_up);
    if (dim > static_cast<std::uint64_t>(dim_cap))
        throw capacity_error("sector dimension " + std::to_string(dim) +
                             " exceeds the cap of " + std::to_string(dim_cap));

    const auto basis = enumerate_sector(n, sector.n_up);
    const auto d = static_cast<Eigen::Index>(basis.size());
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(d, d);

    for (Eigen::Index col = 0; col < d; ++col) {
        const std::uint64_t b = basis[static_cast<std::size_t>(col)];
        double diag = params.beta_j * n + params.beta_mub * magnetization(b, n);
        for (int l = 0; l < n; ++l) {
            const int lp = (l + 1) % n;
            const bool sl = (b >> l) & 1;
            const bool slp = (b >> lp) & 1;
            if (sl == slp) {
                diag -= 2.0 * params.beta_j; // P_{l,l+1} diagonal on aligned bonds
            } else {
                const std::uint64_t swapped =
                    b ^ (std::uint64_t{1} << l) ^ (std::uint64_t{1} << lp);
                h(static_cast<Eigen::Index>(find_index(basis, swapped)), col) -=
                    2.0 * params.beta_j;
            }
        }
        h(col, col) = diag;
    }
    return h;
}

Eigen::VectorXcd apply_full_hamiltonian(const ChainParams& params,
                                        const Eigen::VectorXcd& state) {
    const int n = params.n_sites;
    if (n > 30) throw capacity_error("full-space application is limited to 30 sites");
    const auto dim = std::uint64_t{1} << n;
    if (state.size() != static_cast<Eigen::Index>(dim))
        throw invalid_input_error("state dimension must be 2^n_sites");

    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(state.size());
    for (std::uint64_t b = 0; b < dim; ++b) {
        const auto amp = state(static_cast<Eigen::Index>(b));
        if (amp == std::complex<double>{}) continue;
        double diag = params.beta_j * n + params.beta_mub * magnetization(b, n);
        for (int l = 0; l < n; ++l) {
            const int lp = (l + 1) % n;
            if (((b >> l) & 1) == ((b >> lp) & 1)) {
                diag -= 2.0 * params.beta_j;
            } else {
                const std::uint64_t swapped =
                    b ^ (std::uint64_t{1} << l) ^ (std::uint64_t{1} << lp);
                out(static_cast<Eigen::Index>(swapped)) -= 2.0 * params.beta_j * amp;
            }
        }
        out(static_cast<Eigen::Index>(b)) += diag * amp;
    }
    return out;
}

} // namespace heisenring
