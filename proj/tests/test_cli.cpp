#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include <json.hpp>

#include "heisenring/io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const std::string cli = HEISENRING_CLI_PATH;

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("heisenring_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

int run(const std::string& args) {
    const int status = std::system((cli + " " + args).c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
    std::ifstream stream(p, std::ios::binary);
    std::ostringstream out;
    out << stream.rdbuf();
    return out.str();
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) out.push_back(line);
    return out;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("gaussian profile run") {
    TempDir tmp;
    const fs::path out = tmp.path / "profile.csv";
    REQUIRE(run("profile --n 20 --beta-j 0.6 --beta-mub 3 --method gaussian --output " +
                out.string()) == 0);
    const auto rows = lines(slurp(out));
    REQUIRE(rows.size() == 11);
    CHECK(rows[0] == "distance,concurrence,method,n_sites,beta_j,beta_mub");
    CHECK(rows[1].rfind("1,", 0) == 0);
    // peak value ~ 1.02e-3 at d=1
    const double peak = std::stod(rows[1].substr(2, rows[1].find(',', 2) - 2));
    CHECK(peak == doctest::Approx(1.023482e-3).epsilon(1e-5));
    CHECK(rows[10].rfind("10,", 0) == 0);
}

TEST_CASE("identical configs produce identical bytes") {
    TempDir tmp;
    const fs::path a = tmp.path / "a.csv";
    const fs::path b = tmp.path / "b.csv";
    REQUIRE(run("profile --n 14 --beta-j 0.8 --beta-mub 2.5 --method truncated --output " +
                a.string()) == 0);
    REQUIRE(run("profile --n 14 --beta-j 0.8 --beta-mub 2.5 --method truncated --output " +
                b.string()) == 0);
    const std::string sa = slurp(a);
    CHECK(!sa.empty());
    CHECK(sa == slurp(b));
}

TEST_CASE("invalid arguments exit with 2") {
    TempDir tmp;
    const std::string quiet = " > " + (tmp.path / "out").string() + " 2>&1";
    CHECK(run("profile --n 2 --beta-j 1 --beta-mub 1 --method gaussian" + quiet) == 2);
    CHECK(run("profile --n 8 --beta-j 1 --beta-mub 1 --method bogus" + quiet) == 2);
    CHECK(run("profile --n 8 --beta-j -1 --beta-mub 1 --method gaussian" + quiet) == 2);
    CHECK(run("profile --n 8 --beta-j 1 --beta-mub 0 --method truncated" + quiet) == 2);
    CHECK(run("rdm --n 8 --beta-j 1 --beta-mub 1 --sites 3 3" + quiet) == 2);
    CHECK(run("rdm --n 8 --beta-j 1 --beta-mub 1 --sites 0 1 --format csv" + quiet) == 2);
    CHECK(run("bogus-subcommand" + quiet) == 2);
}

TEST_CASE("capacity exits with 3, unwritable output with 4") {
    TempDir tmp;
    const std::string quiet = " > " + (tmp.path / "out").string() + " 2>&1";
    CHECK(run("profile --n 16 --beta-j 1 --beta-mub 1 --method exact" + quiet) == 3);
    CHECK(run("figure1 --output /dev/null/sub" + quiet) == 4);
}

TEST_CASE("method all emits three json profiles") {
    TempDir tmp;
    const fs::path out = tmp.path / "all.json";
    REQUIRE(run("profile --n 8 --beta-j 0.6 --beta-mub 5 --method all --format json "
                "--output " +
                out.string()) == 0);
    const json j = json::parse(slurp(out));
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 3);
    CHECK(j[0].at("method") == "exact");
    CHECK(j[1].at("method") == "truncated");
    CHECK(j[2].at("method") == "gaussian");
    for (const auto& profile : j) {
        CHECK(profile.at("points").size() == 4);
        CHECK(profile.at("diagnostics").at("warnings").empty());
        CHECK(profile.at("params").at("beta_mub") == 5.0);
    }
    for (const auto& point : j[0].at("points"))
        CHECK(point.at("c").get<double>() == 0.0);
    CHECK(j[1].at("points").at(0).at("c").get<double>() > 0.0);
}

TEST_CASE("warnings go to stderr") {
    TempDir tmp;
    const fs::path err = tmp.path / "err.txt";
    REQUIRE(run("profile --n 8 --beta-j 0.6 --beta-mub 1 --method truncated > " +
                (tmp.path / "out.csv").string() + " 2> " + err.string()) == 0);
    CHECK(slurp(err).find("warning:") != std::string::npos);

    const fs::path err2 = tmp.path / "err2.txt";
    REQUIRE(run("profile --n 8 --beta-j 0.6 --beta-mub 3 --method truncated > " +
                (tmp.path / "out2.csv").string() + " 2> " + err2.string()) == 0);
    CHECK(slurp(err2).empty());
}

TEST_CASE("rdm text and json") {
    TempDir tmp;
    const fs::path text_out = tmp.path / "rdm.txt";
    REQUIRE(run("rdm --n 6 --beta-j 1 --beta-mub 50 --method exact --sites 0 3 --output " +
                text_out.string()) == 0);
    const std::string text = slurp(text_out);
    CHECK(text.find("concurrence (wootters)") != std::string::npos);
    CHECK(text.find("eigenvalues:") != std::string::npos);

    const fs::path json_out = tmp.path / "rdm.json";
    REQUIRE(run("rdm --n 20 --beta-j 0.6 --beta-mub 3 --method gaussian --sites 0 1 "
                "--format json --output " +
                json_out.string()) == 0);
    const json j = json::parse(slurp(json_out));
    CHECK(j.at("sites") == json::array({0, 1}));
    CHECK(j.at("concurrence").at("wootters").get<double>() ==
          doctest::Approx(j.at("concurrence").at("xstate").get<double>()).epsilon(1e-10));
    CHECK(j.at("rdm").at("u_plus").get<double>() == 0.0);
    CHECK(j.at("matrix").at("real").at(1).at(2).get<double>() ==
          doctest::Approx(j.at("rdm").at("z").get<double>()));
}

TEST_CASE("compare json stays within the truncation bound") {
    TempDir tmp;
    const fs::path out = tmp.path / "cmp.json";
    REQUIRE(run("compare --n 8 --beta-j 0.6 --beta-mub 5 --format json --output " +
                out.string()) == 0);
    const json j = json::parse(slurp(out));
    const double bound =
        5.0 * j.at("diagnostics").at("leading_neglected_weight").get<double>();
    REQUIRE(j.at("rows").size() == 4);
    for (const auto& row : j.at("rows"))
        CHECK(row.at("max_rdm_err_truncated").get<double>() <= bound);
}

TEST_CASE("figure1 outputs") {
    TempDir tmp;
    const fs::path dir = tmp.path / "fig";
    REQUIRE(run("figure1 --output " + dir.string() + " --emit-plot --format json") == 0);
    for (const char* name : {"figure1_solid.csv", "figure1_dashed.csv", "figure1_solid.json",
                             "figure1_dashed.json", "figure1.gp"})
        CHECK(fs::exists(dir / name));

    const auto solid = lines(slurp(dir / "figure1_solid.csv"));
    REQUIRE(solid.size() == 12); // header + d = 0..10
    CHECK(solid[0] == "distance,concurrence,method,n_sites,beta_j,beta_mub");
    CHECK(solid[1].rfind("0,", 0) == 0);

    const json js = json::parse(slurp(dir / "figure1_solid.json"));
    const json jd = json::parse(slurp(dir / "figure1_dashed.json"));
    CHECK(js.at("points").at(0).at("c").get<double>() >
          jd.at("points").at(0).at("c").get<double>());
    CHECK(slurp(dir / "figure1.gp").find("figure1_solid.csv") != std::string::npos);
}

TEST_CASE("config file with flag override") {
    TempDir tmp;
    const fs::path cfg = tmp.path / "cfg.json";
    std::ofstream(cfg) << R"({"n_sites": 16, "beta_j": 0.7, "beta_mub": 2.0,)"
                       << R"( "method": "truncated", "format": "json"})";
    const fs::path out = tmp.path / "out.json";
    REQUIRE(run("profile --config " + cfg.string() + " --beta-mub 4 --output " +
                out.string()) == 0);
    const json j = json::parse(slurp(out));
    CHECK(j.at("params").at("n_sites") == 16);
    CHECK(j.at("params").at("beta_j") == 0.7);
    CHECK(j.at("params").at("beta_mub") == 4.0); // flag beats config
    CHECK(j.at("method") == "truncated");
}

TEST_CASE("rdm sites from config and raw distance semantics") {
    TempDir tmp;
    const fs::path cfg = tmp.path / "cfg.json";
    std::ofstream(cfg) << R"({"n_sites": 20, "beta_j": 0.6, "beta_mub": 3.0,)"
                       << R"( "method": "gaussian", "format": "json", "sites": [5, 1]})";
    const fs::path out = tmp.path / "rdm.json";
    REQUIRE(run("rdm --config " + cfg.string() + " --output " + out.string()) == 0);
    const json j = json::parse(slurp(out));
    CHECK(j.at("sites") == json::array({5, 1}));

    // |5-1| = 4 must match an explicit distance-4 request
    const fs::path out2 = tmp.path / "rdm2.json";
    REQUIRE(run("rdm --n 20 --beta-j 0.6 --beta-mub 3 --method gaussian --sites 0 4 "
                "--format json --output " +
                out2.string()) == 0);
    const json j2 = json::parse(slurp(out2));
    CHECK(j.at("rdm").at("z").get<double>() == j2.at("rdm").at("z").get<double>());
}

} // TEST_SUITE
